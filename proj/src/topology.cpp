// Connectivity of the closed surfaces dH_i = F_ij u F_ik, glued along loci.

#include <map>
#include <numeric>
#include <vector>

#include "handle3/decomp.hpp"

namespace handle3 {

namespace {

struct Side {
  std::vector<int> chi;
  // locus -> the two pieces (one per patch) it joins
  std::map<int, std::vector<int>> ends;
};

Side side_of(const Decomposition& d, int i) {
  Side s;
  for (int p = 0; p < 3; ++p) {
    if (opposite_handlebody(p) == i) continue;
    for (const auto& piece : d.patches[p]) {
      const int idx = static_cast<int>(s.chi.size());
      s.chi.push_back(euler_char(piece.shape()));
      for (int l : piece.labels) s.ends[l].push_back(idx);
    }
  }
  return s;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void join(int a, int b) { parent[find(a)] = find(b); }
};

Dsu glue(const Side& s, int skip) {
  Dsu u(s.chi.size());
  for (const auto& [l, e] : s.ends)
    if (l != skip && e.size() == 2) u.join(e[0], e[1]);
  return u;
}

}  // namespace

bool boundary_connected(const Decomposition& d, int i) {
  auto s = side_of(d, i);
  if (s.chi.empty()) return false;
  auto u = glue(s, -1);
  for (size_t k = 1; k < s.chi.size(); ++k)
    if (u.find(static_cast<int>(k)) != u.find(0)) return false;
  return true;
}

bool bounds_disk(const Decomposition& d, int i, int locus) {
  auto s = side_of(d, i);
  auto it = s.ends.find(locus);
  if (it == s.ends.end() || it->second.size() != 2) return false;
  auto u = glue(s, locus);
  const int a = it->second[0], b = it->second[1];
  if (u.find(a) == u.find(b)) return false;  // non-separating
  // Each side is a surface with one boundary circle: a disk iff chi = 1.
  for (int root : {u.find(a), u.find(b)}) {
    int chi = 0;
    for (size_t k = 0; k < s.chi.size(); ++k)
      if (u.find(static_cast<int>(k)) == root) chi += s.chi[k];
    if (chi == 1) return true;
  }
  return false;
}

}  // namespace handle3
