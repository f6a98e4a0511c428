#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dfscert/graph.hpp"
#include "dfscert/tester.hpp"

namespace dfscert {

enum class Family : std::uint8_t { Good, Bad, RandomValid, Perturbed };

// The four arm types. An arm occupies 8N consecutive labels; teeth(i, j)
// attaches pendant vertices so that base label iN+k meets tooth jN+N-k+1.
//   G1: chain of 6N + teeth(2,6) + teeth(0,7)         (valid)
//   G2: chain of 7N + teeth(4,7)                      (valid)
//   B1: chain of 7N + teeth(0,7)                      (valid)
//   B2: chain of 6N + teeth(2,6) + teeth(4,7)         (invalid: for every k
//       the quadruple 2N+k, 7N-k+1, 4N+k, 8N-k+1 forces an edit)
enum class ArmType : std::uint8_t { G1, G2, B1, B2 };

struct InstanceMeta {
  std::uint32_t N = 0;
  std::uint64_t seed = 0;
  std::vector<ArmType> arm_types;    // in label order
  std::vector<Label> arm_offsets;    // arm i covers labels offset+1 .. offset+size
  std::vector<std::uint32_t> arm_sizes;
  std::vector<ConflictingPair> planted;  // for Family::Perturbed
};

struct Instance {
  LabeledGraph graph;
  Family family;
  InstanceMeta meta;
};

// Degree bound used by the arm constructions (arm roots carry up to two
// tree children, a tree parent, the chain, and one tooth).
inline constexpr std::uint32_t kGadgetDegreeBound = 5;

// Lower-bound families: a shared root tree over ⌊n/8N⌋ arms, per-arm fair
// coin between the two variants. gen_good always accepts; gen_bad with at
// least one B2 arm always rejects.
Instance gen_good(std::uint32_t n, std::uint32_t N, std::uint64_t seed);
Instance gen_bad(std::uint32_t n, std::uint32_t N, std::uint64_t seed);

// Random degree-<=d graph whose labels come from an actual seeded DFS run.
Instance gen_random_valid(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

// Directed counterpart (labels from a directed DFS over out-edges).
Instance gen_random_valid_directed(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

// Path 1-2-...-n with identity labels; the canonical planting substrate.
Instance gen_path(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

enum class PlantKind : std::uint8_t { L1, L2, L3, G };

// Plants k vertex- and edge-disjoint conflicts of the requested type into a
// valid instance, each inside its own chain window. Records the planted
// matching in the metadata.
Instance perturb(const Instance& base, std::uint32_t k, PlantKind kind, std::uint64_t seed);

// Certified lower bound on edge edits to reach any valid numbering of
// degree <= d: max of the matching bound ceil(|M|/3) and, for Bad family
// instances, the disjoint-quadruple bound ceil(Q/2).
std::uint64_t farness_certificate(const Instance& inst);

enum class TesterKind : std::uint8_t { Combined, Simple, L1, L2, L3, Global };

struct GameResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
};

// Distinguishing game: per trial draw b, build G_n or B_n under a fresh id
// permutation, run the tester under a hard oracle budget, guess b' = reject.
GameResult distinguisher_game(TesterKind tester, std::uint32_t n, std::uint32_t N,
                              std::uint64_t budget, std::uint64_t trials, std::uint64_t seed,
                              const TesterParams& params);

Verdict run_tester(TesterKind kind, GraphOracle& o, const TesterParams& p);

const char* tester_name(TesterKind kind);
const char* family_name(Family f);

}  // namespace dfscert
