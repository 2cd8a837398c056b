#include "handle3/lens.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "handle3/error.hpp"

namespace handle3 {

namespace {

long mod(long v, long m) { return ((v % m) + m) % m; }

}  // namespace

ManifoldForm ManifoldForm::lens(long p, long q) {
  auto m = normalize(p, q);
  if (m.is_sphere() || m.p != p || m.q != q)
    throw Error(ErrorCode::OutOfRange, "L(" + std::to_string(p) + "," + std::to_string(q) +
                                           ") is not in normal form");
  return m;
}

std::string to_string(const ManifoldForm& m) {
  if (m.is_sphere()) return "S3";
  return "L(" + std::to_string(m.p) + "," + std::to_string(m.q) + ")";
}

const char* to_string(DiffeotopyGroup::Group g) {
  switch (g) {
    case DiffeotopyGroup::Group::Z2: return "Z2";
    case DiffeotopyGroup::Group::Z2xZ2: return "Z2xZ2";
    case DiffeotopyGroup::Group::Z4: return "Z4";
  }
  return "?";
}

const char* to_string(DiffeotopyGroup::Generator g) {
  switch (g) {
    case DiffeotopyGroup::Generator::sigma_minus: return "sigma_minus";
    case DiffeotopyGroup::Generator::tau: return "tau";
    case DiffeotopyGroup::Generator::tau_and_sigma_plus: return "tau_and_sigma_plus";
    case DiffeotopyGroup::Generator::sigma_minus_order4: return "sigma_minus_order4";
  }
  return "?";
}

long mod_inverse(long a, long m) {
  // Extended Euclid on (a mod m, m).
  long r0 = mod(a, m), r1 = m, s0 = 1, s1 = 0;
  while (r1 != 0) {
    long t = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - t * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - t * s1};
  }
  if (r0 != 1)
    throw Error(ErrorCode::NotCoprime,
                std::to_string(a) + " has no inverse mod " + std::to_string(m));
  return mod(s0, m);
}

ManifoldForm normalize(long p, long q) {
  if (p == 0) throw Error(ErrorCode::ZeroP, "p must be nonzero");
  long ap = p < 0 ? -p : p;
  if (ap == 1) return ManifoldForm::sphere3();
  if (std::gcd(ap, q < 0 ? -q : q) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(p) + "," +
                                           std::to_string(q) + ") != 1");
  long r = mod(q, ap);
  long inv = mod_inverse(r, ap);
  long best = std::min({r, ap - r, inv, ap - inv});
  ManifoldForm m;
  m.kind = ManifoldForm::Kind::Lens;
  m.p = static_cast<int>(ap);
  m.q = static_cast<int>(best);
  return m;
}

bool is_homeomorphic(const ManifoldForm& a, const ManifoldForm& b) {
  if (a.is_sphere() || b.is_sphere()) return a.is_sphere() && b.is_sphere();
  return normalize(a.p, a.q) == normalize(b.p, b.q);
}

bool torus_knot_is_core(long p, long /*q*/) { return p == 1 || p == -1; }

bool core_isotopy_criterion(const ManifoldForm& m) {
  if (m.is_sphere()) return true;
  long v = mod(long(m.p - 1) * m.q, m.p);
  return v == 1 || v == m.p - 1;
}

DiffeotopyGroup diffeotopy_group(const ManifoldForm& m) {
  using G = DiffeotopyGroup::Group;
  using Gen = DiffeotopyGroup::Generator;
  if (m.is_sphere())
    throw Error(ErrorCode::SphereNotCovered, "the diffeotopy table covers lens spaces only");
  const long p = m.p;
  const long q = mod(m.q, p);
  if (p == 2) return {G::Z2, Gen::sigma_minus, 1};
  if (q == 1 || q == p - 1) return {G::Z2, Gen::tau, 2};
  if (mod(q * q, p) == 1) return {G::Z2xZ2, Gen::tau_and_sigma_plus, 3};
  if (mod(q * q + 1, p) == 0) return {G::Z4, Gen::sigma_minus_order4, 4};
  return {G::Z2, Gen::tau, 5};
}

bool hyperelliptic_realizable(const ManifoldForm& m) {
  return m.is_sphere() || m.p == 2;
}

bool admits_seifert_over_rp2(const ManifoldForm& m) {
  return !m.is_sphere() && m.p == 4;
}

}  // namespace handle3
