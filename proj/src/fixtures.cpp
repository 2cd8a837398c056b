// Case tables, handlebody relabeling, structural isomorphism and the
// standard tagged decompositions.

#include <algorithm>
#include <tuple>

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

constexpr SurfacePiece D = kDisk, A = kAnnulus, P = kPants, T = kPuncturedTorus;

// Image of patch p under a 0-based handlebody permutation.
int image_patch(int p, const std::array<int, 3>& perm) {
  auto h = handlebodies_of(p);
  return patch_of(perm[h[0] - 1] + 1, perm[h[1] - 1] + 1);
}

std::array<int, 3> permuted_genera(const std::array<int, 3>& g,
                                   const std::array<int, 3>& perm) {
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) out[perm[i]] = g[i];
  return out;
}

Profile canon(Profile p) {
  for (auto& s : p) s = canonical(s);
  return p;
}

}  // namespace

std::string to_string(const Profile& p) {
  return canonical_name(p[0]) + "/" + canonical_name(p[1]) + "/" + canonical_name(p[2]);
}

std::string to_string(const CaseId& c) {
  return "(" + std::to_string(c.genera[0]) + "," + std::to_string(c.genera[1]) + "," +
         std::to_string(c.genera[2]) + ") case " + std::to_string(c.case_number);
}

std::vector<CaseId> known_cases(const std::array<int, 3>& g) {
  int n = 0;
  if (g == std::array{0, 0, 0}) n = 1;
  if (g == std::array{0, 0, 1}) n = 1;
  if (g == std::array{0, 1, 1}) n = 2;
  if (g == std::array{1, 1, 1}) n = 6;
  std::vector<CaseId> out;
  for (int i = 1; i <= n; ++i) out.push_back(CaseId{g, i});
  return out;
}

Profile case_profile(const CaseId& c) {
  const auto& g = c.genera;
  const int n = c.case_number;
  Profile p;
  if (g == std::array{0, 0, 0} && n == 1) p = {PieceSet{D}, {D}, {D}};
  else if (g == std::array{0, 0, 1} && n == 1) p = {PieceSet{D, D}, {A}, {A}};
  else if (g == std::array{0, 1, 1} && n == 1) p = {PieceSet{D}, {D}, {T}};
  else if (g == std::array{0, 1, 1} && n == 2) p = {PieceSet{D, A}, {D, A}, {P}};
  else if (g == std::array{1, 1, 1} && n == 1) p = {PieceSet{A}, {A}, {A}};
  else if (g == std::array{1, 1, 1} && n == 2) p = {PieceSet{D, T}, {A}, {A}};
  else if (g == std::array{1, 1, 1} && n == 3) p = {PieceSet{D, P}, {A, A}, {A, A}};
  else if (g == std::array{1, 1, 1} && n == 4) p = {PieceSet{A, A}, {D, P}, {D, P}};
  else if (g == std::array{1, 1, 1} && n == 5) p = {PieceSet{D, P}, {D, P}, {D, P}};
  else if (g == std::array{1, 1, 1} && n == 6) p = {PieceSet{A, A}, {A, A}, {A, A}};
  else
    throw Error(ErrorCode::UnclassifiedCase, "no case " + to_string(c));
  return canon(p);
}

bool case_exists(const ManifoldForm& m, const CaseId& c) {
  auto cs = known_cases(c.genera);
  if (std::find(cs.begin(), cs.end(), c) == cs.end()) return false;
  if (!admits_decomposition(m, c.genera)) return false;
  if (c.genera == std::array{1, 1, 1} && c.case_number == 6)
    return admits_seifert_over_rp2(m);
  return true;
}

Profile apply_perm(const Profile& p, const std::array<int, 3>& perm) {
  Profile out;
  for (int q = 0; q < 3; ++q) out[image_patch(q, perm)] = canonical(p[q]);
  return out;
}

std::optional<CaseMatch> identify_case(const std::array<int, 3>& genera, const Profile& p) {
  auto sorted = genera;
  std::sort(sorted.begin(), sorted.end());
  const Profile cp = canon(p);
  for (const auto& c : known_cases(sorted)) {
    const Profile target = case_profile(c);
    for (const auto& perm : kPerms) {
      if (permuted_genera(genera, perm) != sorted) continue;
      if (apply_perm(cp, perm) == target) return CaseMatch{c, perm};
    }
  }
  return std::nullopt;
}

std::optional<CaseMatch> identify_case(const Decomposition& d) {
  for (const auto& patch : d.patches)
    for (const auto& piece : patch)
      if (!is_valid_piece(piece.shape())) return std::nullopt;
  return identify_case(d.genera, Profile{d.shapes(0), d.shapes(1), d.shapes(2)});
}

Decomposition relabel_handlebodies(const Decomposition& d, const std::array<int, 3>& perm) {
  Decomposition out = d;
  out.genera = permuted_genera(d.genera, perm);
  for (int q = 0; q < 3; ++q) out.patches[image_patch(q, perm)] = d.patches[q];
  for (auto& l : out.loci) {
    const auto old = l.classes;
    for (int i = 0; i < 3; ++i) l.classes[perm[i]] = old[i];
  }
  canonicalize(out);
  return out;
}

namespace {

using Key = std::vector<std::pair<int, std::vector<int>>>;

Key patch_key(const std::vector<LabeledPiece>& patch, const std::map<int, int>* map) {
  Key k;
  for (const auto& piece : patch) {
    std::vector<int> ls;
    for (int l : piece.labels) ls.push_back(map ? map->at(l) : l);
    std::sort(ls.begin(), ls.end());
    k.push_back({piece.genus, ls});
  }
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

std::vector<Isomorphism> find_isomorphisms(const Decomposition& a, const Decomposition& b) {
  std::vector<Isomorphism> out;
  if (a.b() != b.b()) return out;
  std::vector<int> ida, idb;
  for (const auto& l : a.loci) ida.push_back(l.id);
  for (const auto& l : b.loci) idb.push_back(l.id);
  std::sort(ida.begin(), ida.end());
  std::sort(idb.begin(), idb.end());
  // Labels must all name listed loci for the maps below to be total.
  for (const auto* d : {&a, &b})
    for (const auto& patch : d->patches)
      for (const auto& piece : patch)
        for (int l : piece.labels)
          if (!d->find_locus(l)) return out;

  for (const auto& perm : kPerms) {
    if (permuted_genera(a.genera, perm) != b.genera) continue;
    bool shapes_ok = true;
    for (int q = 0; q < 3; ++q)
      shapes_ok = shapes_ok && a.shapes(q) == b.shapes(image_patch(q, perm));
    if (!shapes_ok) continue;
    std::array<Key, 3> target;
    for (int q = 0; q < 3; ++q) target[q] = patch_key(b.patches[image_patch(q, perm)], nullptr);
    auto img = idb;
    do {
      std::map<int, int> m;
      for (size_t i = 0; i < ida.size(); ++i) m[ida[i]] = img[i];
      bool ok = true;
      for (int q = 0; q < 3 && ok; ++q) ok = patch_key(a.patches[q], &m) == target[q];
      if (ok) out.push_back(Isomorphism{perm, m});
    } while (std::next_permutation(img.begin(), img.end()));
  }
  return out;
}

bool isomorphic(const Decomposition& a, const Decomposition& b) {
  return !find_isomorphisms(a, b).empty();
}

Decomposition standard_decomposition(const ManifoldForm& m, const CaseId& c) {
  if (!case_exists(m, c))
    throw Error(ErrorCode::UnclassifiedCase, to_string(c) + " does not occur for " + to_string(m));
  const int p = m.is_sphere() ? 1 : m.p;
  const CurveClass F = CurveClass::inessential();
  auto E = [](int n) { return CurveClass::essential_with(n); };
  auto pc = [](int g, std::vector<int> ls) { return LabeledPiece{g, std::move(ls)}; };

  Decomposition d;
  d.manifold = m;
  d.genera = c.genera;
  // tags[i][l-1] is the class of locus l on dH_{i+1}
  std::array<std::vector<CurveClass>, 3> tags;
  const auto& g = c.genera;
  const int n = c.case_number;

  if (g == std::array{0, 0, 0}) {
    d.patches = {{{pc(0, {1})}, {pc(0, {1})}, {pc(0, {1})}}};
    tags = {{{F}, {F}, {F}}};
  } else if (g == std::array{0, 0, 1}) {
    d.patches = {{{pc(0, {1}), pc(0, {2})}, {pc(0, {1, 2})}, {pc(0, {1, 2})}}};
    tags = {{{F, F}, {F, F}, {E(p), E(p)}}};
  } else if (g == std::array{0, 1, 1} && n == 1) {
    d.patches = {{{pc(0, {1})}, {pc(0, {1})}, {pc(1, {1})}}};
    tags = {{{F}, {E(2)}, {E(2)}}};
  } else if (g == std::array{0, 1, 1} && n == 2) {
    d.patches = {{{pc(0, {1}), pc(0, {2, 3})},
                  {pc(0, {2}), pc(0, {1, 3})},
                  {pc(0, {1, 2, 3})}}};
    tags = {{{F, F, F}, {F, E(1), E(1)}, {E(p), F, E(p)}}};
  } else if (n == 1) {
    d.patches = {{{pc(0, {1, 2})}, {pc(0, {1, 2})}, {pc(0, {1, 2})}}};
    tags = {{{E(1), E(1)}, {E(p), E(p)}, {E(p), E(p)}}};
  } else if (n == 2) {
    d.patches = {{{pc(0, {1}), pc(1, {2})}, {pc(0, {1, 2})}, {pc(0, {1, 2})}}};
    tags = {{{F, E(2)}, {F, E(2)}, {E(p), E(p)}}};
  } else if (n == 3) {
    d.patches = {{{pc(0, {1}), pc(0, {2, 3, 4})},
                  {pc(0, {1, 2}), pc(0, {3, 4})},
                  {pc(0, {1, 3}), pc(0, {2, 4})}}};
    tags = {{{F, F, E(1), E(1)}, {F, E(1), F, E(1)}, {E(p), E(p), E(p), E(p)}}};
  } else if (n == 4) {
    d.patches = {{{pc(0, {1, 3}), pc(0, {2, 4})},
                  {pc(0, {1}), pc(0, {2, 3, 4})},
                  {pc(0, {2}), pc(0, {1, 3, 4})}}};
    tags = {{{F, E(1), F, E(1)}, {E(p), F, E(p), F}, {F, F, E(1), E(1)}}};
  } else if (n == 5) {
    d.patches = {{{pc(0, {1}), pc(0, {2, 3, 4})},
                  {pc(0, {2}), pc(0, {1, 3, 4})},
                  {pc(0, {3}), pc(0, {1, 2, 4})}}};
    tags = {{{F, F, E(1), E(1)}, {F, E(1), F, E(1)}, {E(p), F, F, E(p)}}};
  } else {
    d.patches = {{{pc(0, {1, 2}), pc(0, {3, 4})},
                  {pc(0, {1, 3}), pc(0, {2, 4})},
                  {pc(0, {1, 4}), pc(0, {2, 3})}}};
    tags = {{{E(1), E(1), E(1), E(1)}, {E(1), E(1), E(1), E(1)}, {E(1), E(1), E(1), E(1)}}};
  }
  for (size_t l = 0; l < tags[0].size(); ++l)
    d.loci.push_back(BranchedLocus{static_cast<int>(l) + 1, {tags[0][l], tags[1][l], tags[2][l]}});
  canonicalize(d);
  return d;
}

bool complete_tags(Decomposition& d) {
  bool any_unknown = false;
  for (const auto& l : d.loci)
    for (const auto& c : l.classes) any_unknown = any_unknown || !c.known;
  if (!any_unknown) return false;
  auto id = identify_case(d);
  if (!id || !case_exists(d.manifold, id->id)) return false;
  const Decomposition s = standard_decomposition(d.manifold, id->id);
  for (const auto& iso : find_isomorphisms(d, s)) {
    bool consistent = true;
    for (const auto& l : d.loci)
      for (int i = 0; i < 3 && consistent; ++i) {
        const auto& c = l.classes[i];
        if (c.known && !(c == s.find_locus(iso.loci.at(l.id))->classes[iso.perm[i]]))
          consistent = false;
      }
    if (!consistent) continue;
    for (auto& l : d.loci)
      for (int i = 0; i < 3; ++i)
        if (!l.classes[i].known) l.classes[i] = s.find_locus(iso.loci.at(l.id))->classes[iso.perm[i]];
    return true;
  }
  return false;
}

}  // namespace handle3
