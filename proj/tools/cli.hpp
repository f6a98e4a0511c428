#pragma once

#include <string>
#include <vector>

namespace dfscert {

// Runs one CLI invocation. Exit codes: 0 accept/success, 1 reject
// (witness printed), 2 usage or parse error.
int run_cli(const std::vector<std::string>& args);

}  // namespace dfscert
