#include "handle3/decomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "handle3/error.hpp"

namespace handle3 {

int patch_of(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return F12;
  if (i == 1 && j == 3) return F13;
  if (i == 2 && j == 3) return F23;
  throw Error(ErrorCode::OutOfRange, "no patch between H" + std::to_string(i) + " and H" +
                                         std::to_string(j));
}

std::array<int, 2> handlebodies_of(int patch) {
  switch (patch) {
    case F12: return {1, 2};
    case F13: return {1, 3};
    case F23: return {2, 3};
  }
  throw Error(ErrorCode::OutOfRange, "patch index " + std::to_string(patch));
}

int opposite_handlebody(int patch) {
  auto h = handlebodies_of(patch);
  return 6 - h[0] - h[1];
}

const char* patch_name(int patch) {
  switch (patch) {
    case F12: return "f12";
    case F13: return "f13";
    case F23: return "f23";
  }
  return "?";
}

const BranchedLocus* Decomposition::find_locus(int id) const {
  for (const auto& l : loci)
    if (l.id == id) return &l;
  return nullptr;
}

BranchedLocus* Decomposition::find_locus(int id) {
  for (auto& l : loci)
    if (l.id == id) return &l;
  return nullptr;
}

PieceSet Decomposition::shapes(int patch) const {
  PieceSet out;
  for (const auto& p : patches[patch]) out.push_back(p.shape());
  return canonical(out);
}

void canonicalize(Decomposition& d) {
  for (auto& patch : d.patches) {
    for (auto& piece : patch) std::sort(piece.labels.begin(), piece.labels.end());
    std::sort(patch.begin(), patch.end(), [](const LabeledPiece& a, const LabeledPiece& b) {
      return std::tuple(a.genus, a.labels.size(), a.labels) <
             std::tuple(b.genus, b.labels.size(), b.labels);
    });
  }
  std::sort(d.loci.begin(), d.loci.end(),
            [](const BranchedLocus& a, const BranchedLocus& b) { return a.id < b.id; });
}

void renumber_loci(Decomposition& d) {
  std::sort(d.loci.begin(), d.loci.end(),
            [](const BranchedLocus& a, const BranchedLocus& b) { return a.id < b.id; });
  std::map<int, int> to;
  for (size_t i = 0; i < d.loci.size(); ++i) {
    to[d.loci[i].id] = static_cast<int>(i) + 1;
    d.loci[i].id = static_cast<int>(i) + 1;
  }
  for (auto& patch : d.patches)
    for (auto& piece : patch)
      for (auto& l : piece.labels) {
        auto it = to.find(l);
        if (it != to.end()) l = it->second;
      }
  canonicalize(d);
}

std::array<int, 3> euler_lemma_expected(const std::array<int, 3>& g) {
  const int x1 = 2 - 2 * g[0], x2 = 2 - 2 * g[1], x3 = 2 - 2 * g[2];
  return {(x1 + x2 - x3) / 2, (x1 + x3 - x2) / 2, (x2 + x3 - x1) / 2};
}

bool admits_decomposition(const ManifoldForm& m, const std::array<int, 3>& genera) {
  for (int g : genera)
    if (g < 0 || g > 1)
      throw Error(ErrorCode::OutOfRange, "genera must lie in {0,1}");
  if (m.is_sphere()) return true;
  return genera != std::array<int, 3>{0, 0, 0};
}

namespace {

void add(ValidationReport& r, const std::string& rule, const std::string& detail) {
  r.push_back({rule, detail});
}

std::string hname(int i) { return "H" + std::to_string(i); }

}  // namespace

ValidationReport validate(const Decomposition& d) {
  ValidationReport r;
  const int b = d.b();

  for (int i = 0; i < 3; ++i)
    if (d.genera[i] < 0) add(r, "genera", hname(i + 1) + " has negative genus");
  bool small = std::all_of(d.genera.begin(), d.genera.end(),
                           [](int g) { return g >= 0 && g <= 1; });
  if (small && !admits_decomposition(d.manifold, d.genera))
    add(r, "admissibility", to_string(d.manifold) + " has no decomposition of this type");

  bool shapes_ok = true;
  for (int p = 0; p < 3; ++p)
    for (const auto& piece : d.patches[p])
      if (piece.genus < 0 || piece.labels.empty()) {
        shapes_ok = false;
        add(r, "piece_shape",
            std::string(patch_name(p)) + " has a piece with genus " +
                std::to_string(piece.genus) + " and " +
                std::to_string(piece.labels.size()) + " boundary circles");
      }
  for (int p = 0; p < 3; ++p)
    if (d.patches[p].empty()) {
      shapes_ok = false;
      add(r, "piece_shape", std::string(patch_name(p)) + " is empty");
    }

  std::set<int> ids;
  for (const auto& l : d.loci) {
    if (l.id <= 0) add(r, "locus_ids", "locus id " + std::to_string(l.id) + " is not positive");
    if (!ids.insert(l.id).second)
      add(r, "locus_ids", "locus id " + std::to_string(l.id) + " repeats");
  }

  bool incidence_ok = true;
  for (int p = 0; p < 3; ++p) {
    int circles = 0;
    std::map<int, int> seen;
    for (const auto& piece : d.patches[p]) {
      circles += static_cast<int>(piece.labels.size());
      for (int l : piece.labels) ++seen[l];
    }
    if (circles != b) {
      incidence_ok = false;
      add(r, "locus_count", std::string(patch_name(p)) + " has " + std::to_string(circles) +
                                " boundary circles but b = " + std::to_string(b));
    }
    for (int id : ids)
      if (seen[id] != 1) {
        incidence_ok = false;
        add(r, "locus_incidence", "locus " + std::to_string(id) + " bounds " +
                                      std::to_string(seen[id]) + " circles of " +
                                      patch_name(p));
      }
    for (auto [l, n] : seen)
      if (!ids.count(l)) {
        incidence_ok = false;
        add(r, "locus_incidence",
            std::string(patch_name(p)) + " has a circle on unknown locus " + std::to_string(l));
      }
  }

  if (shapes_ok) {
    const auto e = euler_lemma_expected(d.genera);
    std::array<int, 3> chi{};
    for (int p = 0; p < 3; ++p) {
      chi[p] = euler_char(d.shapes(p));
      if (chi[p] != e[p])
        add(r, "euler_lemma", "chi(" + std::string(patch_name(p)) + ") = " +
                                  std::to_string(chi[p]) + ", expected " + std::to_string(e[p]));
    }
    for (int i = 1; i <= 3; ++i) {
      int total = 0;
      for (int p = 0; p < 3; ++p)
        if (opposite_handlebody(p) != i) total += chi[p];
      if (total != 2 - 2 * d.genera[i - 1])
        add(r, "gluing_identity", "dH" + std::to_string(i) + " has chi " +
                                      std::to_string(total) + ", genus " +
                                      std::to_string(d.genera[i - 1]) + " needs " +
                                      std::to_string(2 - 2 * d.genera[i - 1]));
    }
  }

  if (shapes_ok && incidence_ok)
    for (int i = 1; i <= 3; ++i)
      if (!boundary_connected(d, i))
        add(r, "boundary_connected", "dH" + std::to_string(i) + " is not connected");

  for (const auto& l : d.loci)
    for (int i = 0; i < 3; ++i) {
      const auto& c = l.classes[i];
      if (!c.known) continue;
      const std::string where = "locus " + std::to_string(l.id) + " on dH" + std::to_string(i + 1);
      if (c.meridian < 0) add(r, "curve_class", where + " has a negative meridian count");
      if (!c.essential && c.meridian != 0)
        add(r, "curve_class", where + " is inessential but meets the meridian");
      if (c.essential && d.genera[i] == 0)
        add(r, "curve_class", where + " is essential on a sphere");
    }

  if (incidence_ok)
    for (int p = 0; p < 3; ++p) {
      if (d.patches[p].size() < 2) continue;
      const int k = opposite_handlebody(p);
      for (const auto& piece : d.patches[p]) {
        if (piece.shape() != kDisk) continue;
        const auto* l = d.find_locus(piece.labels[0]);
        if (!l) continue;
        const auto& c = l->classes[k - 1];
        if (c.known && !c.essential)
          add(r, "lemma2_disk_prune",
              "disk of " + std::string(patch_name(p)) + " on locus " +
                  std::to_string(l->id) + " bounds a disk in dH" + std::to_string(k) +
                  ", which splits off an S2xS1 summand");
      }
    }
  return r;
}

Decomposition reduce_structure(const Decomposition& d, int patch, int piece) {
  if (patch < 0 || patch > 2 || piece < 0 ||
      piece >= static_cast<int>(d.patches[patch].size()) ||
      d.patches[patch][piece].shape() != kDisk)
    throw Error(ErrorCode::NotADisk, "component " + std::to_string(piece) + " of " +
                                         (patch >= 0 && patch <= 2 ? patch_name(patch) : "?") +
                                         " is not a disk");
  const int locus = d.patches[patch][piece].labels[0];
  const int k = opposite_handlebody(patch);
  Decomposition out = d;
  out.patches[patch].erase(out.patches[patch].begin() + piece);
  for (int p = 0; p < 3; ++p) {
    if (p == patch) continue;
    for (auto& pc : out.patches[p])
      std::erase(pc.labels, locus);
  }
  std::erase_if(out.loci, [&](const BranchedLocus& l) { return l.id == locus; });
  out.genera[k - 1] = 0;
  for (auto& l : out.loci) l.classes[k - 1] = CurveClass::inessential();
  canonicalize(out);
  return out;
}

DiskReduction reduce_along_disk(const Decomposition& d, int patch, int piece) {
  if (patch < 0 || patch > 2 || piece < 0 ||
      piece >= static_cast<int>(d.patches[patch].size()) ||
      d.patches[patch][piece].shape() != kDisk)
    throw Error(ErrorCode::NotADisk, "component " + std::to_string(piece) + " of " +
                                         (patch >= 0 && patch <= 2 ? patch_name(patch) : "?") +
                                         " is not a disk");
  const int k = opposite_handlebody(patch);
  if (d.genera[k - 1] != 1)
    throw Error(ErrorCode::WrongGenus,
                "H" + std::to_string(k) + " must have genus 1, has " +
                    std::to_string(d.genera[k - 1]));
  if (d.b() < 2)
    throw Error(ErrorCode::InconsistentOutcome, "reduction would leave no branched locus");

  Decomposition tagged = d;
  const int locus = d.patches[patch][piece].labels[0];
  if (!tagged.find_locus(locus) || !tagged.find_locus(locus)->classes[k - 1].known)
    complete_tags(tagged);
  const auto* l = tagged.find_locus(locus);
  if (!l) throw Error(ErrorCode::NotADisk, "disk has no locus record");
  const CurveClass c = l->classes[k - 1];
  if (c.known && !c.essential)
    throw Error(ErrorCode::NotEssential,
                "locus " + std::to_string(locus) + " bounds a disk in dH" + std::to_string(k));
  if (c.known && c.meridian == 0)
    throw Error(ErrorCode::NotEssential,
                "locus " + std::to_string(locus) + " is meridional in H" + std::to_string(k));

  DiskReduction r;
  r.reduced = reduce_structure(tagged, patch, piece);
  const ManifoldForm m = d.manifold;
  const int p = m.is_sphere() ? 1 : m.p;
  if (c.known && c.meridian == 1) {
    r.summand = ManifoldForm::sphere3();
  } else if (c.known && c.meridian == p) {
    r.summand = m;
  } else if (!c.known && r.reduced.genera == std::array<int, 3>{0, 0, 0}) {
    r.summand = m;
  } else {
    throw Error(ErrorCode::InconsistentOutcome,
                "capping H" + std::to_string(k) + " does not give a summand of " + to_string(m));
  }
  r.reduced.manifold = (r.summand == m) ? ManifoldForm::sphere3() : m;
  renumber_loci(r.reduced);
  return r;
}

}  // namespace handle3
