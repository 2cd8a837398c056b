#pragma once

// Isotopy-class counts: Heegaard roles, embedding lemma table, theorem table
// and a derivation from the lemmas.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "handle3/decomp.hpp"

namespace handle3 {

enum class PatternTag {
  ANN_IN_BALL,
  DISK_ANN,
  TWO_ANN_DP2,
  TWO_ANN_DPAA,
  PANTS_IN_BALL,
  T_IN_BALL,
  DP_DPAA,
  DP_4A,
  DP_CROSS,
};

const char* to_string(PatternTag t);
// Throws UnknownPattern.
PatternTag parse_pattern_tag(const std::string& s);
std::vector<PatternTag> all_pattern_tags();

enum class Container { ball, solid_torus };
const char* to_string(Container c);

struct EmbeddingPattern {
  Container container = Container::ball;
  PieceSet pieces;   // the embedded surface
  PieceSet regions;  // what its boundary cuts the container boundary into
  PatternTag tag = PatternTag::ANN_IN_BALL;
};

EmbeddingPattern pattern_template(PatternTag t);
// Empty when the pieces/regions/container agree with the tag.
std::vector<std::string> check_pattern(const EmbeddingPattern& p);

struct EmbeddingCount {
  int count;
  bool hyperelliptic_swap;
};
EmbeddingCount embedding_class_count(PatternTag t);
EmbeddingCount embedding_class_count(const EmbeddingPattern& p);

struct RoleReport {
  std::string rule;             // all | both | exactly_one | at_most_two
  std::vector<int> candidates;  // genus-1 handlebodies that may be Heegaard
  int min_count = 0;
  int max_count = 0;
};
RoleReport heegaard_roles(const ManifoldForm& m, const CaseId& c);

enum class Backend { theorem, derived };
const char* to_string(Backend b);

struct ClassCount {
  int count = 0;
  Backend backend = Backend::theorem;
  bool discrepancy_flag = false;
};

// One Heegaard-role branch of the derivation.
struct Subcase {
  std::string label;
  std::optional<PatternTag> pattern;  // none: base count 1
  bool side_swap = false;
};
std::vector<Subcase> derived_subcases(const ManifoldForm& m, const CaseId& c);

// Cases with isotopy-class counts, standard labeling.
std::vector<CaseId> classified_cases();
ClassCount isotopy_class_count(const ManifoldForm& m, const CaseId& c,
                               Backend backend);

struct AuditRow {
  CaseId id;
  int theorem = 0;
  int derived = 0;
};
// Disagreements only.
std::vector<AuditRow> consistency_report(const ManifoldForm& m);

struct SeifertFacts {
  bool base_s2 = true;
  int s2_max_singular = 2;
  bool base_rp2 = false;
  int rp2_max_singular = 0;
  bool case6 = false;
};
SeifertFacts seifert_case_facts(const ManifoldForm& m);

}  // namespace handle3
