#include "handle3/moves.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <set>

#include "handle3/error.hpp"

namespace handle3 {

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::type0: return "type0";
    case MoveKind::type1: return "type1";
    case MoveKind::type1_destab: return "type1_destab";
  }
  return "?";
}

namespace {

int opposite_patch(int i) {
  for (int q = 0; q < 3; ++q)
    if (opposite_handlebody(q) == i) return q;
  throw Error(ErrorCode::OutOfRange, "handlebody " + std::to_string(i));
}

void check_handlebody(int i) {
  if (i < 1 || i > 3)
    throw Error(ErrorCode::OutOfRange, "handlebody index must be 1..3, got " + std::to_string(i));
}

int next_locus_id(const Decomposition& d) {
  int m = 0;
  for (const auto& l : d.loci) m = std::max(m, l.id);
  return m + 1;
}

// Piece index and circle index of a locus within a patch.
std::pair<int, int> locate(const std::vector<LabeledPiece>& patch, int locus) {
  for (int p = 0; p < static_cast<int>(patch.size()); ++p)
    for (int c = 0; c < static_cast<int>(patch[p].labels.size()); ++c)
      if (patch[p].labels[c] == locus) return {p, c};
  return {-1, -1};
}

std::vector<LabeledPiece> replace_piece(const std::vector<LabeledPiece>& patch, int idx,
                                        const std::vector<LabeledPiece>& with) {
  std::vector<LabeledPiece> out;
  for (int p = 0; p < static_cast<int>(patch.size()); ++p)
    if (p != idx) out.push_back(patch[p]);
  for (const auto& w : with) out.push_back(w);
  return out;
}

// Shared tag rules after a move: genus-0 sides are inessential, touched loci
// lose their tags on other genus-1 sides, then fill from the fixtures.
void settle_tags(Decomposition& d, const std::set<int>& touched, int mover) {
  for (auto& l : d.loci)
    for (int i = 0; i < 3; ++i) {
      if (d.genera[i] == 0) {
        l.classes[i] = CurveClass::inessential();
      } else if (i != mover - 1 && touched.count(l.id)) {
        l.classes[i] = CurveClass::unknown();
      }
    }
  canonicalize(d);
  complete_tags(d);
  renumber_loci(d);
}

bool all_known(const Decomposition& d) {
  for (const auto& l : d.loci)
    for (const auto& c : l.classes)
      if (!c.known) return false;
  return true;
}

}  // namespace

Decomposition stabilize_type0(const Decomposition& d, int i, int j,
                              const std::vector<int>& components) {
  check_handlebody(i);
  check_handlebody(j);
  const int q = patch_of(i, j);
  const auto& patch = d.patches[q];
  std::set<int> ids(components.begin(), components.end());
  if (components.empty() || components.size() > 2 || ids.size() != components.size())
    throw Error(ErrorCode::UnknownComponent, "type-0 needs one or two distinct components");
  for (int c : components)
    if (c < 0 || c >= static_cast<int>(patch.size()))
      throw Error(ErrorCode::UnknownComponent,
                  std::string(patch_name(q)) + " has no component " + std::to_string(c));

  LabeledPiece merged{0, {}};
  for (int c : components) {
    merged.genus += patch[c].genus;
    for (int l : patch[c].labels) merged.labels.push_back(l);
  }
  if (components.size() == 1) merged.genus += 1;

  Decomposition out = d;
  out.patches[q].clear();
  for (int c = 0; c < static_cast<int>(patch.size()); ++c)
    if (!ids.count(c)) out.patches[q].push_back(patch[c]);
  out.patches[q].push_back(merged);
  out.genera[i - 1] += 1;
  out.genera[j - 1] += 1;
  for (auto& l : out.loci) {
    l.classes[i - 1] = CurveClass::unknown();
    l.classes[j - 1] = CurveClass::unknown();
  }
  canonicalize(out);
  complete_tags(out);
  renumber_loci(out);
  return out;
}

Decomposition stabilize_type1(const Decomposition& d, int i, const ArcDescriptor& arc,
                              const std::array<int, 2>& loci) {
  check_handlebody(i);
  const int q = opposite_patch(i);
  const auto& patch = d.patches[q];
  if (arc.piece_id < 0 || arc.piece_id >= static_cast<int>(patch.size()))
    throw Error(ErrorCode::IllegalArc,
                std::string(patch_name(q)) + " has no component " + std::to_string(arc.piece_id));
  const auto& piece = patch[arc.piece_id];
  const int c = static_cast<int>(piece.labels.size());
  for (int e : arc.endpoint_circles)
    if (e < 0 || e >= c)
      throw Error(ErrorCode::IllegalArc, "arc endpoint " + std::to_string(e) +
                                             " is not a circle of component " +
                                             std::to_string(arc.piece_id));
  std::array<int, 2> on{piece.labels[arc.endpoint_circles[0]],
                        piece.labels[arc.endpoint_circles[1]]};
  auto a = on, b = loci;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw Error(ErrorCode::LocusMismatch,
                "arc endpoints lie on loci " + std::to_string(on[0]) + "," +
                    std::to_string(on[1]) + ", not " + std::to_string(loci[0]) + "," +
                    std::to_string(loci[1]));

  const int na = next_locus_id(d), nb = na + 1;
  const bool same = on[0] == on[1];
  Decomposition out = d;
  out.patches[q] = replace_piece(patch, arc.piece_id, cut_labeled(piece, arc, na, nb));

  for (int r = 0; r < 3; ++r) {
    if (r == q) continue;
    BandDescriptor band;
    for (int l : (same ? std::vector<int>{on[0]} : std::vector<int>{on[0], on[1]})) {
      auto [p, circle] = locate(d.patches[r], l);
      band.targets.push_back({p, circle});
    }
    out.patches[r] = band_labeled(d.patches[r], band, na, nb);
  }

  std::erase_if(out.loci, [&](const BranchedLocus& l) { return l.id == on[0] || l.id == on[1]; });
  const auto u = CurveClass::unknown();
  std::set<int> touched;
  if (same) {
    out.loci.push_back({na, {u, u, u}});
    out.loci.push_back({nb, {u, u, u}});
    touched = {na, nb};
  } else {
    out.loci.push_back({na, {u, u, u}});
    touched = {na};
  }
  out.genera[i - 1] += 1;
  for (auto& l : out.loci)
    if (touched.count(l.id))
      l.classes[i - 1] = CurveClass::essential_with(same ? 1 : 2);
  settle_tags(out, touched, i);
  return out;
}

Candidates destabilization_candidates(const Decomposition& d) {
  Candidates out;
  for (int i = 1; i <= 3; ++i) {
    if (d.genera[i - 1] != 1) continue;
    bool unknown = false;
    int total = 0;
    std::vector<int> hits;
    for (const auto& l : d.loci) {
      const auto& c = l.classes[i - 1];
      if (!c.known) {
        unknown = true;
        continue;
      }
      if (!c.essential) continue;
      total += c.meridian;
      for (int k = 0; k < c.meridian && hits.size() < 2; ++k) hits.push_back(l.id);
    }
    if (unknown) {
      out.indeterminate.push_back(i);
      continue;
    }
    if (total == 2) {
      std::sort(hits.begin(), hits.end());
      out.witnesses.push_back(Witness{i, {hits[0], hits[1]}});
    }
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

namespace {

// All ways to cut a patch along a co-core arc at the given loci, in search
// order: merge or non-separating first, then separating splits.
std::vector<std::vector<LabeledPiece>> cut_options(const std::vector<LabeledPiece>& patch,
                                                   const std::array<int, 2>& loci, int na,
                                                   int nb) {
  std::vector<std::vector<LabeledPiece>> out;
  auto [p0, c0] = locate(patch, loci[0]);
  auto [p1, c1] = locate(patch, loci[1]);
  if (p0 < 0 || p1 < 0 || p0 != p1) return out;
  const auto& piece = patch[p0];
  ArcDescriptor arc;
  arc.piece_id = p0;
  arc.endpoint_circles = {c0, c1};
  if (c0 != c1) {
    out.push_back(replace_piece(patch, p0, cut_labeled(piece, arc, na, nb)));
    return out;
  }
  if (piece.genus >= 1) {
    arc.same_circle_outcome = ArcOutcome::reduce_genus;
    out.push_back(replace_piece(patch, p0, cut_labeled(piece, arc, na, nb)));
  }
  const int c = static_cast<int>(piece.labels.size());
  std::vector<int> others;
  for (int k = 0; k < c; ++k)
    if (k != c0) others.push_back(k);
  arc.same_circle_outcome = ArcOutcome::separate_piece;
  for (int g1 = 0; g1 <= piece.genus; ++g1)
    for (int k1 = 1; k1 <= c; ++k1) {
      arc.split = std::array<SurfacePiece, 2>{SurfacePiece{g1, k1},
                                              SurfacePiece{piece.genus - g1, c + 1 - k1}};
      for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
        if (std::popcount(mask) != k1 - 1) continue;
        std::vector<int> first;
        for (size_t k = 0; k < others.size(); ++k)
          if (mask & (1u << k)) first.push_back(others[k]);
        arc.first_piece_circles = first;
        for (bool swap : {false, true}) {
          auto cut = swap ? cut_labeled(piece, arc, nb, na) : cut_labeled(piece, arc, na, nb);
          out.push_back(replace_piece(patch, p0, cut));
        }
      }
    }
  return out;
}

}  // namespace

Decomposition destabilize_type1(const Decomposition& d, const Witness& w) {
  auto cands = destabilization_candidates(d);
  if (std::find(cands.witnesses.begin(), cands.witnesses.end(), w) == cands.witnesses.end())
    throw Error(ErrorCode::StaleWitness,
                "no witness on H" + std::to_string(w.handlebody) + " through loci " +
                    std::to_string(w.loci[0]) + "," + std::to_string(w.loci[1]));
  const int i = w.handlebody;
  const int q = opposite_patch(i);
  const bool split = w.loci[0] == w.loci[1];
  const int na = next_locus_id(d), nb = na + 1;

  // The patch opposite H_i takes the band back.
  BandDescriptor band;
  for (int l : (split ? std::vector<int>{w.loci[0]} : std::vector<int>{w.loci[0], w.loci[1]})) {
    auto [p, circle] = locate(d.patches[q], l);
    band.targets.push_back({p, circle});
  }
  const auto banded = band_labeled(d.patches[q], band, na, nb);

  std::array<int, 2> sides{};
  int n = 0;
  for (int r = 0; r < 3; ++r)
    if (r != q) sides[n++] = r;
  const auto opts0 = cut_options(d.patches[sides[0]], w.loci, na, nb);
  const auto opts1 = cut_options(d.patches[sides[1]], w.loci, na, nb);

  std::optional<Decomposition> first_valid;
  for (const auto& o0 : opts0)
    for (const auto& o1 : opts1) {
      Decomposition out = d;
      out.patches[q] = banded;
      out.patches[sides[0]] = o0;
      out.patches[sides[1]] = o1;
      std::erase_if(out.loci, [&](const BranchedLocus& l) {
        return l.id == w.loci[0] || l.id == w.loci[1];
      });
      const auto u = CurveClass::unknown();
      std::set<int> touched{na};
      out.loci.push_back({na, {u, u, u}});
      if (split) {
        out.loci.push_back({nb, {u, u, u}});
        touched.insert(nb);
      }
      out.genera[i - 1] -= 1;
      settle_tags(out, touched, i);
      if (!validate(out).empty()) continue;
      if (all_known(out)) return out;
      if (!first_valid) first_valid = out;
    }
  if (first_valid) return *first_valid;
  throw Error(ErrorCode::InconsistentOutcome,
              "no way to undo the handle on H" + std::to_string(i) + " gives a valid decomposition");
}

Decomposition apply_move(const Decomposition& d, const MoveRecord& m) {
  switch (m.kind) {
    case MoveKind::type0: return stabilize_type0(d, m.pair[0], m.pair[1], m.components);
    case MoveKind::type1: return stabilize_type1(d, m.handlebody, m.arc, m.locus_endpoints);
    case MoveKind::type1_destab: return destabilize_type1(d, m.witness);
  }
  throw Error(ErrorCode::ParseError, "unknown move kind");
}

std::vector<Decomposition> apply_script(const Decomposition& d, const MoveScript& script) {
  std::vector<Decomposition> states{d};
  for (const auto& m : script) states.push_back(apply_move(states.back(), m));
  return states;
}

Reduction stable_reduce(const Decomposition& d) {
  Reduction r{d, {}};
  const int limit = d.genera[0] + d.genera[1] + d.genera[2];
  for (int step = 0; step < limit; ++step) {
    auto c = destabilization_candidates(r.terminal);
    if (c.witnesses.empty()) break;
    MoveRecord m;
    m.kind = MoveKind::type1_destab;
    m.witness = c.witnesses.front();
    r.terminal = destabilize_type1(r.terminal, m.witness);
    r.script.push_back(m);
  }
  const auto& g = r.terminal.genera;
  if (!std::is_sorted(g.begin(), g.end())) {
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g[a] < g[b]; });
    std::array<int, 3> perm{};
    for (int k = 0; k < 3; ++k) perm[order[k]] = k;
    r.terminal = relabel_handlebodies(r.terminal, perm);
    renumber_loci(r.terminal);
  }
  return r;
}

}  // namespace handle3
