// Constraint-pruned enumeration of patch profiles.
//
// Candidates are triples of piece multisets (piece genus <= 1) meeting the
// Euler targets with b circles in each patch. Named rules prune at the
// profile level; survivors then need an incidence of circles to loci with
// connected boundary surfaces that passes the incidence-level rules.

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "handle3/decomp.hpp"
#include "handle3/error.hpp"

namespace handle3 {

namespace {

const std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2},
                                                 {0, 2, 1},
                                                 {1, 0, 2},
                                                 {1, 2, 0},
                                                 {2, 0, 1},
                                                 {2, 1, 0}}};

// Rule names in report order.
const std::vector<std::string> kRuleOrder{
    "admissibility",         "at_most_one_disk",  "no_disk_in_F23_for_011",
    "at_most_two_annuli",    "lemma2_disk_prune", "meridional_disk_bound",
    "boundary_unrealizable",
};

std::vector<std::string> ordered(const std::set<std::string>& rules) {
  std::vector<std::string> out;
  for (const auto& r : kRuleOrder)
    if (rules.count(r)) out.push_back(r);
  return out;
}

std::vector<PieceSet> patch_options(int b, int chi) {
  std::vector<PieceSet> out;
  PieceSet cur;
  // Nondecreasing sequence of pieces in canonical order.
  std::function<void(SurfacePiece, int, int)> rec = [&](SurfacePiece min, int left,
                                                        int chi_left) {
    if (left == 0) {
      if (chi_left == 0) out.push_back(cur);
      return;
    }
    for (int g = min.genus; g <= 1; ++g)
      for (int c = (g == min.genus ? min.boundary : 1); c <= left; ++c) {
        SurfacePiece s{g, c};
        cur.push_back(s);
        rec(s, left - c, chi_left - euler_char(s));
        cur.pop_back();
      }
  };
  rec(SurfacePiece{0, 1}, b, chi);
  return out;
}

int count_of(const PieceSet& s, SurfacePiece x) {
  return static_cast<int>(std::count(s.begin(), s.end(), x));
}

std::array<int, 3> sorted3(std::array<int, 3> g) {
  std::sort(g.begin(), g.end());
  return g;
}

class Enumerator {
 public:
  Enumerator(const ManifoldForm& m, int max_loci) : m_(m), max_loci_(max_loci) {}

  EnumerationResult run(const std::array<int, 3>& g);

 private:
  // Survivors for a sorted genera triple on S3, the base of the recursion.
  const std::vector<ProfileCase>& reference(const std::array<int, 3>& g);
  std::set<int> allowed_b(const std::array<int, 3>& g);
  std::set<std::string> profile_rules(const std::array<int, 3>& g, const Profile& p, int b);
  // Empty optional with failure rules when no incidence survives.
  std::optional<Decomposition> search_incidence(const std::array<int, 3>& g,
                                                const Profile& p, int b,
                                                std::set<std::string>& failures);
  std::optional<std::string> incidence_failure(const Decomposition& d);

  ManifoldForm m_;
  int max_loci_;
  std::map<std::array<int, 3>, std::vector<ProfileCase>> ref_;
};

const std::vector<ProfileCase>& Enumerator::reference(const std::array<int, 3>& g) {
  auto it = ref_.find(g);
  if (it != ref_.end()) return it->second;
  Enumerator sub(ManifoldForm::sphere3(), max_loci_);
  sub.ref_ = ref_;
  auto res = sub.run(g).cases;
  return ref_[g] = std::move(res);
}

std::set<int> Enumerator::allowed_b(const std::array<int, 3>& g) {
  std::set<int> out;
  for (const auto& c : reference(g)) out.insert(c.b);
  return out;
}

std::set<std::string> Enumerator::profile_rules(const std::array<int, 3>& g,
                                                const Profile& p, int b) {
  std::set<std::string> rules;
  const bool t011 = g == std::array{0, 1, 1};
  const bool t111 = g == std::array{1, 1, 1};
  for (int q = 0; q < 3; ++q) {
    const int k = opposite_handlebody(q);
    const int gk = g[k - 1];
    const int disks = count_of(p[q], kDisk);
    const int annuli = count_of(p[q], kAnnulus);
    const int n = static_cast<int>(p[q].size());
    if (gk == 1 && disks >= 2 && p[q] != PieceSet{kDisk, kDisk})
      rules.insert("at_most_one_disk");
    if (t011 && q == F23 && disks >= 1) rules.insert("no_disk_in_F23_for_011");
    if (t111 && disks == 0 && annuli >= 3) rules.insert("at_most_two_annuli");
    if (disks >= 1 && n >= 2 && gk == 0) rules.insert("lemma2_disk_prune");
    if (disks >= 1 && n >= 2 && gk == 1) {
      auto reduced = g;
      reduced[k - 1] = 0;
      if (!allowed_b(sorted3(reduced)).count(b - 1)) rules.insert("meridional_disk_bound");
    }
  }
  const PieceSet aa{kAnnulus, kAnnulus};
  if (t111 && p[0] == aa && p[1] == aa && p[2] == aa && !admits_seifert_over_rp2(m_))
    rules.insert("at_most_two_annuli");
  return rules;
}

std::optional<std::string> Enumerator::incidence_failure(const Decomposition& d) {
  for (int i = 1; i <= 3; ++i)
    if (!boundary_connected(d, i)) return "boundary_unrealizable";
  for (int q = 0; q < 3; ++q) {
    if (d.patches[q].size() < 2) continue;
    const int k = opposite_handlebody(q);
    if (d.genera[k - 1] != 1) continue;
    for (size_t i = 0; i < d.patches[q].size(); ++i) {
      const auto& piece = d.patches[q][i];
      if (piece.shape() != kDisk) continue;
      if (bounds_disk(d, k, piece.labels[0])) return "lemma2_disk_prune";
      auto r = reduce_structure(d, q, static_cast<int>(i));
      auto id = identify_case(r);
      if (!id) return "meridional_disk_bound";
      const auto& ref = reference(id->id.genera);
      bool found = std::any_of(ref.begin(), ref.end(), [&](const ProfileCase& c) {
        return c.case_number == id->id.case_number;
      });
      if (!found) return "meridional_disk_bound";
    }
  }
  return std::nullopt;
}

std::optional<Decomposition> Enumerator::search_incidence(const std::array<int, 3>& g,
                                                          const Profile& p, int b,
                                                          std::set<std::string>& failures) {
  Decomposition d;
  d.manifold = m_;
  d.genera = g;
  for (int id = 1; id <= b; ++id)
    d.loci.push_back(BranchedLocus{
        id, {CurveClass::unknown(), CurveClass::unknown(), CurveClass::unknown()}});
  auto fill = [&](int q, const std::vector<int>& order) {
    d.patches[q].clear();
    size_t at = 0;
    for (const auto& s : p[q]) {
      LabeledPiece lp{s.genus, {}};
      for (int c = 0; c < s.boundary; ++c) lp.labels.push_back(order[at++]);
      d.patches[q].push_back(lp);
    }
  };
  std::vector<int> base(b);
  for (int i = 0; i < b; ++i) base[i] = i + 1;
  fill(F12, base);
  auto o13 = base;
  do {
    fill(F13, o13);
    auto o23 = base;
    do {
      fill(F23, o23);
      auto fail = incidence_failure(d);
      if (!fail) {
        Decomposition out = d;
        canonicalize(out);
        return out;
      }
      failures.insert(*fail);
    } while (std::next_permutation(o23.begin(), o23.end()));
  } while (std::next_permutation(o13.begin(), o13.end()));
  return std::nullopt;
}

Profile orbit_key(const std::array<int, 3>& g, const Profile& p) {
  std::optional<Profile> best;
  for (const auto& perm : kPerms) {
    std::array<int, 3> h{};
    for (int i = 0; i < 3; ++i) h[perm[i]] = g[i];
    if (h != g) continue;
    auto q = apply_perm(p, perm);
    if (!best || q < *best) best = q;
  }
  return *best;
}

ProfileCase to_case(const Decomposition& d, int case_number) {
  ProfileCase pc;
  pc.b = d.b();
  pc.case_number = case_number;
  for (int q = 0; q < 3; ++q) {
    for (const auto& piece : d.patches[q]) {
      pc.patches[q].push_back(piece.shape());
      pc.incidence[q].push_back(piece.labels);
    }
  }
  return pc;
}

EnumerationResult Enumerator::run(const std::array<int, 3>& g) {
  EnumerationResult res;
  const auto e = euler_lemma_expected(g);
  const bool admissible = admits_decomposition(m_, g);

  // Orbit key -> failure rules, empty when the orbit survived.
  std::map<Profile, std::vector<std::string>> seen_orbits;
  std::vector<std::pair<Profile, Decomposition>> survivors;
  for (int b = 1; b <= max_loci_; ++b) {
    auto o12 = patch_options(b, e[0]);
    auto o13 = patch_options(b, e[1]);
    auto o23 = patch_options(b, e[2]);
    for (const auto& x : o12)
      for (const auto& y : o13)
        for (const auto& z : o23) {
          Profile p{x, y, z};
          if (!admissible) {
            res.pruned.push_back({p, b, {"admissibility"}});
            continue;
          }
          auto rules = profile_rules(g, p, b);
          if (!rules.empty()) {
            res.pruned.push_back({p, b, ordered(rules)});
            continue;
          }
          const Profile key = orbit_key(g, p);
          if (auto it = seen_orbits.find(key); it != seen_orbits.end()) {
            if (!it->second.empty()) res.pruned.push_back({p, b, it->second});
            continue;
          }
          std::set<std::string> failures;
          auto d = search_incidence(g, p, b, failures);
          if (d) {
            seen_orbits[key] = {};
            survivors.push_back({key, *d});
          } else {
            seen_orbits[key] = ordered(failures);
            res.pruned.push_back({p, b, ordered(failures)});
          }
        }
  }

  std::vector<ProfileCase> matched, unmatched;
  for (auto& [key, d] : survivors) {
    auto id = identify_case(d);
    if (id) {
      auto r = relabel_handlebodies(d, id->perm);
      // Loci numbered in order of appearance along F12, F13, F23.
      std::map<int, int> to;
      for (const auto& patch : r.patches)
        for (const auto& piece : patch)
          for (int l : piece.labels)
            if (!to.count(l)) {
              const int next = static_cast<int>(to.size()) + 1;
              to[l] = next;
            }
      for (auto& patch : r.patches)
        for (auto& piece : patch)
          for (auto& l : piece.labels) l = to[l];
      for (auto& l : r.loci) l.id = to[l.id];
      canonicalize(r);
      matched.push_back(to_case(r, id->id.case_number));
    } else {
      unmatched.push_back(to_case(d, 0));
    }
  }
  std::sort(matched.begin(), matched.end(),
            [](const ProfileCase& a, const ProfileCase& b) { return a.case_number < b.case_number; });
  res.cases = std::move(matched);
  for (auto& u : unmatched) res.cases.push_back(std::move(u));
  return res;
}

}  // namespace

EnumerationResult enumerate_profiles_explained(const ManifoldForm& m,
                                               const std::array<int, 3>& genera,
                                               int max_loci) {
  for (int g : genera)
    if (g < 0 || g > 1) throw Error(ErrorCode::OutOfRange, "genera must lie in {0,1}");
  if (max_loci < 1) throw Error(ErrorCode::OutOfRange, "max_loci must be positive");

  const auto sorted = sorted3(genera);
  Enumerator en(m, max_loci);
  auto res = en.run(sorted);
  if (sorted == genera) return res;

  // Map the sorted labeling back to the caller's: input handlebody i is
  // sorted handlebody to_sorted[i].
  std::array<int, 3> to_sorted{};
  std::array<bool, 3> used{false, false, false};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!used[j] && sorted[j] == genera[i]) {
        to_sorted[i] = j;
        used[j] = true;
        break;
      }
  std::array<int, 3> back{};
  for (int i = 0; i < 3; ++i) back[to_sorted[i]] = i;

  for (auto& c : res.cases) {
    Decomposition d;
    d.manifold = m;
    d.genera = sorted;
    for (int q = 0; q < 3; ++q)
      for (size_t k = 0; k < c.patches[q].size(); ++k)
        d.patches[q].push_back(LabeledPiece{c.patches[q][k].genus, c.incidence[q][k]});
    for (int id = 1; id <= c.b; ++id) d.loci.push_back(BranchedLocus{id, {}});
    auto r = relabel_handlebodies(d, back);
    c = to_case(r, c.case_number);
  }
  for (auto& p : res.pruned) p.patches = apply_perm(p.patches, back);
  return res;
}

std::vector<ProfileCase> enumerate_profiles(const ManifoldForm& m,
                                            const std::array<int, 3>& genera, int max_loci) {
  return enumerate_profiles_explained(m, genera, max_loci).cases;
}

}  // namespace handle3
