#pragma once

// Type-0 / type-1 stabilization, type-1 destabilization and greedy stable
// reduction.

#include <array>
#include <compare>
#include <vector>

#include "handle3/decomp.hpp"

namespace handle3 {

enum class MoveKind { type0, type1, type1_destab };
const char* to_string(MoveKind k);

// A meridian disk of H_handlebody crossing the loci twice: either two loci
// once each, or one locus twice (loci[0] == loci[1]).
struct Witness {
  int handlebody = 1;
  std::array<int, 2> loci{0, 0};
  friend auto operator<=>(const Witness&, const Witness&) = default;
};

struct MoveRecord {
  MoveKind kind = MoveKind::type1;
  // type0
  std::array<int, 2> pair{1, 2};
  std::vector<int> components;
  // type1
  int handlebody = 1;
  ArcDescriptor arc;
  std::array<int, 2> locus_endpoints{0, 0};
  // type1_destab
  Witness witness;
};
using MoveScript = std::vector<MoveRecord>;

struct Candidates {
  std::vector<Witness> witnesses;
  // Genus-1 handlebodies whose tags are not all known.
  std::vector<int> indeterminate;
};

Decomposition stabilize_type0(const Decomposition& d, int i, int j,
                              const std::vector<int>& components);
Decomposition stabilize_type1(const Decomposition& d, int i,
                              const ArcDescriptor& arc,
                              const std::array<int, 2>& locus_endpoints);
Candidates destabilization_candidates(const Decomposition& d);
Decomposition destabilize_type1(const Decomposition& d, const Witness& w);

Decomposition apply_move(const Decomposition& d, const MoveRecord& m);
// Returns every state, starting with d itself.
std::vector<Decomposition> apply_script(const Decomposition& d,
                                        const MoveScript& script);

struct Reduction {
  Decomposition terminal;
  MoveScript script;
};
Reduction stable_reduce(const Decomposition& d);

}  // namespace handle3
