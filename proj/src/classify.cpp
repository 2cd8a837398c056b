#include "handle3/classify.hpp"

#include <algorithm>

#include "handle3/error.hpp"

namespace handle3 {

namespace {

struct PatternRow {
  PatternTag tag;
  const char* name;
  Container container;
  PieceSet pieces;
  PieceSet regions;
  int count;
  bool swap;
};

const std::vector<PatternRow>& pattern_rows() {
  const auto D = kDisk, A = kAnnulus, P = kPants, T = kPuncturedTorus;
  const auto ball = Container::ball, st = Container::solid_torus;
  static const std::vector<PatternRow> rows{
      {PatternTag::ANN_IN_BALL, "ANN_IN_BALL", ball, {A}, {D, D, A}, 1, false},
      {PatternTag::DISK_ANN, "DISK_ANN", st, {D, A}, {D, A, P}, 2, true},
      {PatternTag::TWO_ANN_DP2, "TWO_ANN_DP2", st, {A, A}, {D, D, P, P}, 2, true},
      {PatternTag::TWO_ANN_DPAA, "TWO_ANN_DPAA", st, {A, A}, {D, P, A, A}, 2, true},
      {PatternTag::PANTS_IN_BALL, "PANTS_IN_BALL", ball, {P}, {D, D, A, A}, 1, false},
      {PatternTag::T_IN_BALL, "T_IN_BALL", ball, {T}, {D, D}, 1, false},
      {PatternTag::DP_DPAA, "DP_DPAA", st, {D, P}, {D, P, A, A}, 2, true},
      {PatternTag::DP_4A, "DP_4A", st, {D, P}, {A, A, A, A}, 1, false},
      {PatternTag::DP_CROSS, "DP_CROSS", st, {D, P}, {D, P, D, P}, 1, false},
  };
  return rows;
}

const PatternRow& row(PatternTag t) {
  for (const auto& r : pattern_rows())
    if (r.tag == t) return r;
  throw Error(ErrorCode::UnknownPattern, "unknown pattern tag");
}

using G = std::array<int, 3>;
constexpr G k001{0, 0, 1}, k011{0, 1, 1}, k111{1, 1, 1};

bool is_classified(const CaseId& c) {
  if (c.genera == k001) return c.case_number == 1;
  if (c.genera == k011) return c.case_number == 1 || c.case_number == 2;
  if (c.genera == k111) return c.case_number >= 2 && c.case_number <= 5;
  return false;
}

[[noreturn]] void unclassified(const CaseId& c) {
  throw Error(ErrorCode::UnclassifiedCase, "no isotopy-class count for " + to_string(c));
}

int theorem_count(const ManifoldForm& m, const CaseId& c) {
  const bool crit = core_isotopy_criterion(m);
  const bool easy = m.is_sphere() || m.p == 2;
  if (c.genera == k001) return crit ? 1 : 2;
  if (c.genera == k011) {
    if (c.case_number == 1) return 1;
    return easy ? 1 : (crit ? 2 : 4);
  }
  if (m.is_sphere()) return 1;
  if (m.p == 2) return c.case_number == 5 ? 1 : 2;
  switch (c.case_number) {
    case 2: return crit ? 2 : 4;
    case 3: return crit ? 3 : 6;
    case 4: return crit ? 4 : 8;
    default: return crit ? 1 : 2;
  }
}

int derived_count(const ManifoldForm& m, const CaseId& c) {
  const bool crit = core_isotopy_criterion(m);
  const bool hyper = hyperelliptic_realizable(m);
  int total = 0;
  for (const auto& s : derived_subcases(m, c)) {
    int n = 1;
    if (s.pattern) {
      const auto e = embedding_class_count(*s.pattern);
      n = e.count;
      if (e.hyperelliptic_swap && hyper) n /= 2;
    }
    if (s.side_swap && !crit) n *= 2;
    total += n;
  }
  return total;
}

}  // namespace

const char* to_string(PatternTag t) { return row(t).name; }

PatternTag parse_pattern_tag(const std::string& s) {
  for (const auto& r : pattern_rows())
    if (s == r.name) return r.tag;
  throw Error(ErrorCode::UnknownPattern, "unknown pattern tag '" + s + "'");
}

std::vector<PatternTag> all_pattern_tags() {
  std::vector<PatternTag> out;
  for (const auto& r : pattern_rows()) out.push_back(r.tag);
  return out;
}

const char* to_string(Container c) { return c == Container::ball ? "ball" : "solid_torus"; }

EmbeddingPattern pattern_template(PatternTag t) {
  const auto& r = row(t);
  return {r.container, canonical(r.pieces), canonical(r.regions), r.tag};
}

std::vector<std::string> check_pattern(const EmbeddingPattern& p) {
  std::vector<std::string> out;
  const auto want = pattern_template(p.tag);
  if (p.container != want.container)
    out.push_back(std::string(to_string(p.tag)) + " lives in a " + to_string(want.container) +
                  ", not a " + to_string(p.container));
  if (canonical(p.pieces) != want.pieces)
    out.push_back(std::string(to_string(p.tag)) + " embeds " + canonical_name(want.pieces) +
                  ", got " + canonical_name(canonical(p.pieces)));
  if (canonical(p.regions) != want.regions)
    out.push_back(std::string(to_string(p.tag)) + " cuts the boundary into " +
                  canonical_name(want.regions) + ", got " +
                  canonical_name(canonical(p.regions)));
  return out;
}

EmbeddingCount embedding_class_count(PatternTag t) {
  const auto& r = row(t);
  return {r.count, r.swap};
}

EmbeddingCount embedding_class_count(const EmbeddingPattern& p) {
  auto problems = check_pattern(p);
  if (!problems.empty()) throw Error(ErrorCode::UnknownPattern, problems.front());
  return embedding_class_count(p.tag);
}

RoleReport heegaard_roles(const ManifoldForm& m, const CaseId& c) {
  if (!is_classified(c) || !case_exists(m, c)) unclassified(c);
  RoleReport r;
  for (int i = 0; i < 3; ++i)
    if (c.genera[i] == 1) r.candidates.push_back(i + 1);
  const int n = static_cast<int>(r.candidates.size());
  auto set = [&](const char* rule, int lo, int hi) {
    r.rule = rule;
    r.min_count = lo;
    r.max_count = hi;
  };
  if (m.is_sphere()) {
    if (n == 2) set("both", 2, 2);
    else set("all", n, n);
  } else if (c.genera == k001) {
    set("exactly_one", 1, 1);
  } else if (c.genera == k011) {
    if (c.case_number == 1) set("both", 2, 2);
    else set("exactly_one", 1, 1);
  } else if (c.case_number == 2) {
    set("at_most_two", 1, 2);
  } else {
    set("exactly_one", 1, 1);
  }
  return r;
}

const char* to_string(Backend b) { return b == Backend::theorem ? "theorem" : "derived"; }

std::vector<Subcase> derived_subcases(const ManifoldForm& m, const CaseId& c) {
  if (!is_classified(c)) unclassified(c);
  using T = PatternTag;
  if (c.genera == k001) return {{"H3_heegaard", std::nullopt, true}};
  if (c.genera == k011) {
    if (c.case_number == 1) return {{"H2_and_H3_heegaard", std::nullopt, false}};
    return {{"H3_heegaard", T::DISK_ANN, true}};
  }
  if (m.is_sphere()) {
    switch (c.case_number) {
      case 2: return {{"all_heegaard", std::nullopt, false}};
      case 3: return {{"all_heegaard", T::DP_4A, false}};
      case 4: return {{"all_heegaard", T::DP_DPAA, false}};
      default: return {{"all_heegaard", T::DP_CROSS, false}};
    }
  }
  switch (c.case_number) {
    case 2:
      return {{"H1_and_H2_heegaard", std::nullopt, false}, {"H3_heegaard", T::DP_4A, true}};
    case 3:
      return {{"H1_heegaard", T::TWO_ANN_DPAA, true}, {"H3_heegaard", T::DP_4A, true}};
    case 4:
      return {{"H1_heegaard", T::DP_DPAA, true}, {"H3_heegaard", T::TWO_ANN_DP2, true}};
    default: return {{"Hi_heegaard", T::DP_CROSS, true}};
  }
}

std::vector<CaseId> classified_cases() {
  return {CaseId{k001, 1}, CaseId{k011, 1}, CaseId{k011, 2}, CaseId{k111, 2},
          CaseId{k111, 3}, CaseId{k111, 4}, CaseId{k111, 5}};
}

ClassCount isotopy_class_count(const ManifoldForm& m, const CaseId& c, Backend backend) {
  if (!is_classified(c)) unclassified(c);
  const int t = theorem_count(m, c);
  const int d = derived_count(m, c);
  return {backend == Backend::theorem ? t : d, backend, t != d};
}

std::vector<AuditRow> consistency_report(const ManifoldForm& m) {
  std::vector<AuditRow> out;
  for (const auto& c : classified_cases()) {
    const int t = theorem_count(m, c);
    const int d = derived_count(m, c);
    if (t != d) out.push_back({c, t, d});
  }
  return out;
}

SeifertFacts seifert_case_facts(const ManifoldForm& m) {
  SeifertFacts f;
  f.base_rp2 = admits_seifert_over_rp2(m);
  f.rp2_max_singular = 0;
  f.case6 = f.base_rp2;
  return f;
}

}  // namespace handle3
