#pragma once

// Dense real spacetime-algebra value type: 16 coefficients over the canonical
// blades of Cl(1,3), metric diag(+1,-1,-1,-1).  The engine works with the
// components of one orthonormal frame {gamma_0..gamma_3}; raising/lowering an
// index is a sign flip on the spatial components and is the caller's business.

#include <array>
#include <span>

#include "soliton/cl13/kernels.hpp"
#include "soliton/vec3.hpp"

namespace sol::cl13 {

class Multivector {
public:
  constexpr Multivector() = default;

  static constexpr Multivector scalar(double s) {
    Multivector m;
    m.c_[0] = s;
    return m;
  }

  /// Single blade by bitmask (bit mu <=> gamma_mu present), mask in 0..15.
  static Multivector blade(unsigned mask, double coeff);

  /// gamma_mu, mu in 0..3.
  static Multivector gamma(int mu);
  /// gamma5 = gamma0 gamma1 gamma2 gamma3 (grade 4, squares to -1).
  static Multivector gamma5();
  /// Relative frame vector sigma_i = gamma_i gamma_0, i in 1..3.
  static Multivector sigma(int i);
  /// i-hat = sigma1 sigma2 sigma3 (equals gamma5).
  static Multivector pseudo_i();

  double operator[](unsigned mask) const { return c_[mask]; }
  double& operator[](unsigned mask) { return c_[mask]; }
  std::span<const double, kBladeCount> coeffs() const { return c_; }

  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator-() const;
  Multivector operator*(double s) const;
  friend Multivector operator*(double s, const Multivector& m) { return m * s; }
  Multivector operator/(double s) const { return *this * (1.0 / s); }
  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);

  /// Geometric product via the runtime-dispatched kernel.
  Multivector operator*(const Multivector& o) const;

  bool operator==(const Multivector&) const = default;

  /// Projection onto grade k (k in 0..4, else std::domain_error); idempotent,
  /// and the sum of all five projections reproduces the value bit-exactly.
  Multivector grade(int k) const;

  /// Reversion: anti-automorphism, negates grades 2 and 3.
  Multivector reversed() const;

  /// Hodge dual: reversed() * gamma5.
  Multivector dual() const;

  double scalar_part() const { return c_[0]; }
  double pseudoscalar_part() const { return c_[15]; }

  /// True iff every coefficient outside the given grades is exactly zero.
  bool pure_grades(std::initializer_list<int> grades) const;

  /// Euclidean norm of the 16 coefficients.
  double norm() const;

  bool all_finite() const;

private:
  alignas(32) std::array<double, kBladeCount> c_{};
};

Multivector geometric_product(const Multivector& a, const Multivector& b);

/// Interior product of a 1-vector with b: per grade-r part of b this is the
/// grade-(r-1) projection of the geometric product (scalar parts of b give 0).
/// Throws std::domain_error unless a is pure grade 1.
Multivector vector_dot(const Multivector& a, const Multivector& b);

/// Exterior product of a 1-vector with b: grade-(r+1) projections.
Multivector vector_wedge(const Multivector& a, const Multivector& b);

/// Relative (Pauli) split of a bivector: F = E_i sigma_i + H_i ihat sigma_i.
/// The sign convention is fixed by the basis products sigma_i = gamma_i
/// gamma_0 themselves and pinned by the energy/Poynting test: the grade-1
/// current S = -(1/8pi) F gamma0 F satisfies
///     S gamma0 = (E^2+H^2)/8pi + (1/4pi)(E x H)_i sigma_i.
struct RelativeSplit {
  Vec3 E;
  Vec3 H;
};

/// Throws std::domain_error unless F is pure grade 2.
RelativeSplit relative_split(const Multivector& F);
Multivector relative_join(const RelativeSplit& s);
Multivector relative_join(const Vec3& E, const Vec3& H);

} // namespace sol::cl13
