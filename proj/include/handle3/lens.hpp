#pragma once

// Lens space arithmetic.

#include <compare>
#include <string>

namespace handle3 {

struct ManifoldForm {
  enum class Kind { Sphere3, Lens };
  Kind kind = Kind::Sphere3;
  int p = 0;  // Lens only, p >= 2
  int q = 0;  // Lens only, 0 < q < p, gcd(p,q) = 1

  static ManifoldForm sphere3() { return {}; }
  // Already-normalized lens space; throws like normalize on bad input.
  static ManifoldForm lens(long p, long q);

  bool is_sphere() const { return kind == Kind::Sphere3; }
  friend auto operator<=>(const ManifoldForm&, const ManifoldForm&) = default;
};

std::string to_string(const ManifoldForm& m);

struct DiffeotopyGroup {
  enum class Group { Z2, Z2xZ2, Z4 };
  enum class Generator { sigma_minus, tau, tau_and_sigma_plus, sigma_minus_order4 };
  Group group;
  Generator generator;
  // Index of the clause that fired, 1..5 in the order they are tested.
  int clause;

  friend bool operator==(const DiffeotopyGroup&, const DiffeotopyGroup&) = default;
};

const char* to_string(DiffeotopyGroup::Group g);
const char* to_string(DiffeotopyGroup::Generator g);

// gcd-based modular inverse; requires gcd(a, m) = 1, m >= 2.
long mod_inverse(long a, long m);

ManifoldForm normalize(long p, long q);
bool is_homeomorphic(const ManifoldForm& a, const ManifoldForm& b);
bool torus_knot_is_core(long p, long q);
bool core_isotopy_criterion(const ManifoldForm& m);
DiffeotopyGroup diffeotopy_group(const ManifoldForm& m);
bool hyperelliptic_realizable(const ManifoldForm& m);
bool admits_seifert_over_rp2(const ManifoldForm& m);

}  // namespace handle3
