#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "handle3/classify.hpp"
#include "handle3/error.hpp"
#include "handle3/io.hpp"

using namespace handle3;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::ParseError;
}

CaseId cid(int g1, int g2, int g3, int n) { return CaseId{{g1, g2, g3}, n}; }

// Every lens space with p <= max_p, one representative per normal form.
std::vector<ManifoldForm> lens_spaces(int max_p) {
  std::set<ManifoldForm> seen;
  for (int p = 2; p <= max_p; ++p)
    for (int q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) seen.insert(normalize(p, q));
  return {seen.begin(), seen.end()};
}

// Independent transcription of the published count tables. The criterion is
// evaluated from its q in {1, p-1} characterization, not the library.
int table_count(const ManifoldForm& m, const CaseId& c) {
  const bool s3 = m.is_sphere();
  const bool crit = s3 || m.q == 1 || m.q == m.p - 1;
  const bool easy = s3 || m.p == 2;
  const auto g = c.genera;
  if (g == std::array<int, 3>{0, 0, 1}) return crit ? 1 : 2;
  if (g == std::array<int, 3>{0, 1, 1}) {
    if (c.case_number == 1) return 1;
    return easy ? 1 : (crit ? 2 : 4);
  }
  if (s3) return 1;
  if (m.p == 2) return c.case_number == 5 ? 1 : 2;
  switch (c.case_number) {
    case 2: return crit ? 2 : 4;
    case 3: return crit ? 3 : 6;
    case 4: return crit ? 4 : 8;
    case 5: return crit ? 1 : 2;
  }
  return -1;
}

}  // namespace

TEST(Patterns, ClassCounts) {
  EXPECT_EQ(embedding_class_count(PatternTag::DP_4A).count, 1);
  EXPECT_FALSE(embedding_class_count(PatternTag::DP_4A).hyperelliptic_swap);
  EXPECT_EQ(embedding_class_count(PatternTag::DP_DPAA).count, 2);
  EXPECT_TRUE(embedding_class_count(PatternTag::DP_DPAA).hyperelliptic_swap);
  EXPECT_EQ(embedding_class_count(PatternTag::T_IN_BALL).count, 1);
  EXPECT_FALSE(embedding_class_count(PatternTag::T_IN_BALL).hyperelliptic_swap);
}

TEST(Patterns, SwapExactlyForTwoClassPatterns) {
  const std::set<PatternTag> two{PatternTag::DISK_ANN, PatternTag::TWO_ANN_DP2,
                                 PatternTag::TWO_ANN_DPAA, PatternTag::DP_DPAA};
  EXPECT_EQ(all_pattern_tags().size(), 9u);
  for (auto t : all_pattern_tags()) {
    auto c = embedding_class_count(t);
    EXPECT_EQ(c.hyperelliptic_swap, two.count(t) == 1) << to_string(t);
    EXPECT_EQ(c.count, two.count(t) ? 2 : 1) << to_string(t);
  }
}

TEST(Patterns, NamesRoundTrip) {
  for (auto t : all_pattern_tags()) EXPECT_EQ(parse_pattern_tag(to_string(t)), t);
  EXPECT_EQ(code_of([] { parse_pattern_tag("DP_5A"); }), ErrorCode::UnknownPattern);
}

TEST(Patterns, TemplatesAreConsistent) {
  for (auto t : all_pattern_tags()) {
    auto p = pattern_template(t);
    EXPECT_EQ(p.tag, t);
    EXPECT_TRUE(check_pattern(p).empty()) << to_string(t);
    EXPECT_EQ(embedding_class_count(p).count, embedding_class_count(t).count);
    // The pattern's boundary circles cut the container boundary: the regions
    // close up a torus (solid torus) or a sphere (ball).
    const int chi_boundary = p.container == Container::ball ? 2 : 0;
    EXPECT_EQ(euler_char(p.regions), chi_boundary) << to_string(t);
    int circles = 0;
    for (auto& s : p.pieces) circles += s.boundary;
    int region_circles = 0;
    for (auto& s : p.regions) region_circles += s.boundary;
    EXPECT_EQ(region_circles, 2 * circles) << to_string(t);
  }
}

TEST(Patterns, MismatchesAreReported) {
  auto p = pattern_template(PatternTag::DP_4A);
  p.pieces = {kAnnulus, kAnnulus};
  EXPECT_FALSE(check_pattern(p).empty());
  EXPECT_EQ(code_of([&] { embedding_class_count(p); }), ErrorCode::UnknownPattern);
  auto q = pattern_template(PatternTag::T_IN_BALL);
  q.container = Container::solid_torus;
  EXPECT_FALSE(check_pattern(q).empty());
  auto r = pattern_template(PatternTag::DP_CROSS);
  r.regions = {kAnnulus, kAnnulus, kAnnulus, kAnnulus};
  EXPECT_FALSE(check_pattern(r).empty());
}

TEST(Patterns, Json) {
  for (auto t : all_pattern_tags()) {
    auto p = pattern_template(t);
    auto back = pattern_from_json(to_json(p));
    EXPECT_EQ(back.tag, p.tag);
    EXPECT_EQ(back.pieces, p.pieces);
    EXPECT_EQ(back.regions, p.regions);
    EXPECT_EQ(back.container, p.container);
  }
  EXPECT_EQ(code_of([] {
              pattern_from_json(json{{"container", "cube"}, {"pieces", json::array()},
                                     {"regions", json::array()}, {"tag", "DP_4A"}});
            }),
            ErrorCode::ParseError);
}

TEST(Roles, Examples) {
  auto r = heegaard_roles(ManifoldForm::sphere3(), cid(0, 1, 1, 2));
  EXPECT_EQ(r.rule, "both");
  EXPECT_EQ(r.candidates, (std::vector<int>{2, 3}));
  r = heegaard_roles(normalize(5, 2), cid(1, 1, 1, 4));
  EXPECT_EQ(r.rule, "exactly_one");
  EXPECT_EQ(r.min_count, 1);
  EXPECT_EQ(r.max_count, 1);
  EXPECT_EQ(code_of([] { heegaard_roles(normalize(5, 2), cid(1, 1, 1, 6)); }),
            ErrorCode::UnclassifiedCase);
  EXPECT_EQ(code_of([] { heegaard_roles(normalize(4, 1), cid(1, 1, 1, 6)); }),
            ErrorCode::UnclassifiedCase);
  EXPECT_EQ(code_of([] { heegaard_roles(normalize(5, 2), cid(1, 1, 1, 1)); }),
            ErrorCode::UnclassifiedCase);
}

TEST(Roles, AllClauses) {
  const auto s3 = ManifoldForm::sphere3();
  const auto l = normalize(7, 2);
  auto r = heegaard_roles(s3, cid(1, 1, 1, 3));
  EXPECT_EQ(r.rule, "all");
  EXPECT_EQ(r.min_count, 3);
  EXPECT_EQ(heegaard_roles(s3, cid(0, 1, 1, 1)).rule, "both");
  EXPECT_EQ(heegaard_roles(l, cid(0, 1, 1, 1)).rule, "both");
  EXPECT_EQ(heegaard_roles(l, cid(0, 1, 1, 2)).rule, "exactly_one");
  r = heegaard_roles(l, cid(1, 1, 1, 2));
  EXPECT_EQ(r.rule, "at_most_two");
  EXPECT_EQ(r.max_count, 2);
  EXPECT_EQ(r.candidates, (std::vector<int>{1, 2, 3}));
  for (int n : {3, 4, 5}) EXPECT_EQ(heegaard_roles(l, cid(1, 1, 1, n)).rule, "exactly_one");
  r = heegaard_roles(l, cid(0, 0, 1, 1));
  EXPECT_EQ(r.candidates, (std::vector<int>{3}));
}

TEST(Counts, SpotValues) {
  EXPECT_EQ(isotopy_class_count(normalize(5, 2), cid(1, 1, 1, 4), Backend::theorem).count, 8);
  EXPECT_EQ(isotopy_class_count(normalize(5, 4), cid(1, 1, 1, 3), Backend::theorem).count, 3);
  EXPECT_EQ(isotopy_class_count(normalize(2, 1), cid(1, 1, 1, 5), Backend::theorem).count, 1);
  EXPECT_EQ(
      isotopy_class_count(ManifoldForm::sphere3(), cid(0, 0, 1, 1), Backend::theorem).count, 1);
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(
        isotopy_class_count(ManifoldForm::sphere3(), cid(1, 1, 1, n), Backend::theorem).count,
        1);
  auto c = isotopy_class_count(normalize(7, 2), cid(1, 1, 1, 2), Backend::derived);
  EXPECT_EQ(c.count, 3);
  EXPECT_EQ(c.backend, Backend::derived);
  EXPECT_TRUE(c.discrepancy_flag);
}

TEST(Counts, Errors) {
  for (int n : {1, 6})
    EXPECT_EQ(code_of([&] {
                isotopy_class_count(normalize(4, 1), cid(1, 1, 1, n), Backend::theorem);
              }),
              ErrorCode::UnclassifiedCase);
  EXPECT_EQ(code_of([] {
              isotopy_class_count(ManifoldForm::sphere3(), cid(0, 0, 0, 1), Backend::derived);
            }),
            ErrorCode::UnclassifiedCase);
  EXPECT_EQ(code_of([] {
              isotopy_class_count(normalize(3, 1), cid(0, 1, 1, 3), Backend::theorem);
            }),
            ErrorCode::UnclassifiedCase);
}

TEST(Counts, ClassifiedCases) {
  auto cs = classified_cases();
  std::vector<CaseId> want{cid(0, 0, 1, 1), cid(0, 1, 1, 1), cid(0, 1, 1, 2), cid(1, 1, 1, 2),
                           cid(1, 1, 1, 3), cid(1, 1, 1, 4), cid(1, 1, 1, 5)};
  EXPECT_EQ(cs, want);
}

TEST(CountsProperty, TheoremTableExhaustive) {
  auto ms = lens_spaces(60);
  ms.push_back(ManifoldForm::sphere3());
  for (const auto& m : ms)
    for (const auto& c : classified_cases()) {
      auto r = isotopy_class_count(m, c, Backend::theorem);
      EXPECT_EQ(r.count, table_count(m, c)) << to_string(m) << " " << to_string(c);
      EXPECT_GE(r.count, 1);
      EXPECT_EQ(r.backend, Backend::theorem);
    }
}

TEST(CountsProperty, DoublingWhenCriterionFails) {
  for (const auto& m : lens_spaces(60)) {
    if (m.p == 2) continue;
    const bool crit = core_isotopy_criterion(m);
    for (const auto& c : classified_cases()) {
      if (c.genera == std::array<int, 3>{0, 1, 1} && c.case_number == 1) continue;
      // Same p, opposite criterion value.
      const auto other = crit ? std::optional<ManifoldForm>{}
                              : std::optional<ManifoldForm>{normalize(m.p, 1)};
      if (!other) continue;
      const int good = isotopy_class_count(*other, c, Backend::theorem).count;
      const int bad = isotopy_class_count(m, c, Backend::theorem).count;
      if (c.genera == std::array<int, 3>{1, 1, 1} && c.case_number == 3) {
        EXPECT_EQ(good, 3);
        EXPECT_EQ(bad, 6);
      } else {
        EXPECT_EQ(bad, 2 * good) << to_string(m) << " " << to_string(c);
      }
    }
  }
}

TEST(CountsProperty, OnlyKnownDisagreement) {
  auto ms = lens_spaces(60);
  ms.push_back(ManifoldForm::sphere3());
  for (const auto& m : ms) {
    auto rows = consistency_report(m);
    const bool expect = !m.is_sphere() && m.p != 2 && m.q != 1 && m.q != m.p - 1;
    if (!expect) {
      EXPECT_TRUE(rows.empty()) << to_string(m);
      continue;
    }
    ASSERT_EQ(rows.size(), 1u) << to_string(m);
    EXPECT_EQ(rows[0].id, cid(1, 1, 1, 2));
    EXPECT_EQ(rows[0].theorem, 4);
    EXPECT_EQ(rows[0].derived, 3);
  }
}

TEST(CountsProperty, DerivedFollowsSubcases) {
  for (const auto& m : lens_spaces(30))
    for (const auto& c : classified_cases()) {
      int sum = 0;
      for (const auto& s : derived_subcases(m, c)) {
        int base = 1;
        bool swap = false;
        if (s.pattern) {
          auto e = embedding_class_count(*s.pattern);
          base = e.count;
          swap = e.hyperelliptic_swap;
        }
        if (swap && hyperelliptic_realizable(m)) base /= 2;
        if (s.side_swap && !core_isotopy_criterion(m)) base *= 2;
        sum += base;
      }
      EXPECT_EQ(isotopy_class_count(m, c, Backend::derived).count, sum);
    }
}

TEST(Audit, Examples) {
  auto rows = consistency_report(normalize(7, 2));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].id, cid(1, 1, 1, 2));
  EXPECT_TRUE(consistency_report(ManifoldForm::sphere3()).empty());
  EXPECT_TRUE(consistency_report(normalize(2, 1)).empty());
}

TEST(Seifert, Facts) {
  auto f = seifert_case_facts(normalize(4, 1));
  EXPECT_TRUE(f.base_s2);
  EXPECT_EQ(f.s2_max_singular, 2);
  EXPECT_TRUE(f.base_rp2);
  EXPECT_EQ(f.rp2_max_singular, 0);
  EXPECT_TRUE(f.case6);
  f = seifert_case_facts(normalize(5, 1));
  EXPECT_TRUE(f.base_s2);
  EXPECT_FALSE(f.base_rp2);
  EXPECT_FALSE(f.case6);
  f = seifert_case_facts(ManifoldForm::sphere3());
  EXPECT_FALSE(f.base_rp2);
  EXPECT_FALSE(f.case6);
}
