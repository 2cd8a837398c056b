#pragma once

// Three-handlebody decompositions: data model, validity, admissibility,
// profile enumeration, disk reduction and the standard fixtures.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "handle3/lens.hpp"
#include "handle3/surfaces.hpp"

namespace handle3 {

// Patches are indexed F12 = 0, F13 = 1, F23 = 2. Handlebodies are 1..3.
enum Patch { F12 = 0, F13 = 1, F23 = 2 };

int patch_of(int i, int j);
std::array<int, 2> handlebodies_of(int patch);
int opposite_handlebody(int patch);
const char* patch_name(int patch);

struct CurveClass {
  bool known = true;
  bool essential = false;
  int meridian = 0;

  static CurveClass unknown() { return {false, false, 0}; }
  static CurveClass inessential() { return {true, false, 0}; }
  static CurveClass essential_with(int m) { return {true, true, m}; }
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

struct BranchedLocus {
  int id = 0;
  std::array<CurveClass, 3> classes;  // per handlebody 1..3
  friend bool operator==(const BranchedLocus&, const BranchedLocus&) = default;
};

struct Decomposition {
  ManifoldForm manifold;
  std::array<int, 3> genera{0, 0, 0};
  // Piece labels are the locus ids of its boundary circles (the incidence).
  std::array<std::vector<LabeledPiece>, 3> patches;
  std::vector<BranchedLocus> loci;

  int b() const { return static_cast<int>(loci.size()); }
  const BranchedLocus* find_locus(int id) const;
  BranchedLocus* find_locus(int id);
  PieceSet shapes(int patch) const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Sorts labels within pieces, pieces in each patch by (genus, boundary,
// labels) and loci by id. Arc endpoints index circles in this order.
void canonicalize(Decomposition& d);
// Renumbers loci 1..b keeping their relative order, then canonicalizes.
void renumber_loci(Decomposition& d);

struct Violation {
  std::string rule;
  std::string detail;
};
using ValidationReport = std::vector<Violation>;

std::array<int, 3> euler_lemma_expected(const std::array<int, 3>& genera);
ValidationReport validate(const Decomposition& d);
bool admits_decomposition(const ManifoldForm& m, const std::array<int, 3>& genera);

// --- topology of the boundary surfaces dH_i = F_ij u F_ik -----------------

bool boundary_connected(const Decomposition& d, int handlebody);
// True when the locus bounds a disk on dH_i (computed from the incidence).
bool bounds_disk(const Decomposition& d, int handlebody, int locus);

// --- profiles and cases ---------------------------------------------------

using Profile = std::array<PieceSet, 3>;
std::string to_string(const Profile& p);

struct CaseId {
  std::array<int, 3> genera{0, 0, 0};
  int case_number = 0;
  friend auto operator<=>(const CaseId&, const CaseId&) = default;
};
std::string to_string(const CaseId& c);

// Case lists for sorted genera triples with entries <= 1, in the standard
// labeling.
Profile case_profile(const CaseId& c);
std::vector<CaseId> known_cases(const std::array<int, 3>& genera);
bool case_exists(const ManifoldForm& m, const CaseId& c);

struct CaseMatch {
  CaseId id;
  // Handlebody i of the input (0-based) plays handlebody perm[i] of the case.
  std::array<int, 3> perm{0, 1, 2};
};
std::optional<CaseMatch> identify_case(const std::array<int, 3>& genera,
                                       const Profile& p);
std::optional<CaseMatch> identify_case(const Decomposition& d);

Profile apply_perm(const Profile& p, const std::array<int, 3>& perm);
// Handlebody i becomes handlebody perm[i]; patches and tags follow.
Decomposition relabel_handlebodies(const Decomposition& d,
                                   const std::array<int, 3>& perm);

struct Isomorphism {
  std::array<int, 3> perm{0, 1, 2};
  std::map<int, int> loci;  // locus of a -> locus of b
};
// Structural isomorphisms a -> b (genera, patches, incidence), in a fixed
// order. Tags and manifold are ignored.
std::vector<Isomorphism> find_isomorphisms(const Decomposition& a,
                                           const Decomposition& b);
bool isomorphic(const Decomposition& a, const Decomposition& b);

// The fixture used for a case on a given manifold, tags included.
Decomposition standard_decomposition(const ManifoldForm& m, const CaseId& c);

// Fill unknown tags from the standard fixture of the recognized case, using
// the first isomorphism consistent with the known tags. Returns true when
// something was filled.
bool complete_tags(Decomposition& d);

// --- enumeration ----------------------------------------------------------

struct ProfileCase {
  Profile patches;
  int b = 0;
  int case_number = 0;  // 0 when unmatched
  // One incidence realizing the profile (labels per piece, loci 1..b).
  std::array<std::vector<std::vector<int>>, 3> incidence;
};

struct PrunedCandidate {
  Profile patches;
  int b = 0;
  std::vector<std::string> rules;
};

struct EnumerationResult {
  std::vector<ProfileCase> cases;
  std::vector<PrunedCandidate> pruned;
};

EnumerationResult enumerate_profiles_explained(const ManifoldForm& m,
                                               const std::array<int, 3>& genera,
                                               int max_loci);
std::vector<ProfileCase> enumerate_profiles(const ManifoldForm& m,
                                            const std::array<int, 3>& genera,
                                            int max_loci);

// --- reduction along a disk -----------------------------------------------

struct DiskReduction {
  Decomposition reduced;
  ManifoldForm summand;
};

// Structural part only: drop the disk, cap its locus in the other two
// patches, make H_k a ball. No tag or manifold checks.
Decomposition reduce_structure(const Decomposition& d, int patch, int piece);

DiskReduction reduce_along_disk(const Decomposition& d, int patch, int piece);

}  // namespace handle3
