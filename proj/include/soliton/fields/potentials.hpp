#pragma once

// Two-potential field configuration and its static soliton solution: Coulomb
// exterior field plus point-dipole exterior field, both vanishing inside the
// shell radius r0, sourced by a Lagrange multiplier concentrated on the shell.
// Gaussian-CGS units throughout; the dimensionless preset (e = m = c = 1)
// keeps test numbers O(1).

#include <functional>
#include <optional>

#include "soliton/cl13/multivector.hpp"
#include "soliton/vec3.hpp"

namespace sol::fields {

struct PhysicalConstants {
  double e;    // statcoulomb
  double m;    // gram
  double hbar; // erg s
  double c;    // cm/s

  /// (hbar c / e^2)^2, the square of the inverse fine-structure ratio.
  double beta() const;

  static PhysicalConstants dimensionless(double hbar = 2.0);
  static PhysicalConstants physical(); // CODATA electron values

  bool operator==(const PhysicalConstants&) const = default;
};

/// Closed-form solution family: scalar-potential coefficient c1 (charge),
/// dipole coefficient c2 (magnetic moment), shell radius r0, dipole axis,
/// and the value assigned to the unit step at the shell for the scalar
/// potential (the dipole profile is pinned to 0 on the shell).
struct SolitonParams {
  double c1;     // statcoulomb
  double c2;     // erg/gauss
  double r0;     // cm
  Vec3 axis;     // unit vector
  double theta0; // step value at r = r0, in [0, 1]

  SolitonParams(double c1, double c2, double r0, Vec3 axis = {0.0, 0.0, 1.0},
                double theta0 = 1.0);

  bool operator==(const SolitonParams&) const = default;
};

/// Parameter choice tying the coefficients to (e, m, hbar, c): c1 = -e and
/// r0, c2 scaled by the bracket 1 + (3/4) beta.  The hbar -> 0 limit of r0
/// is the classical electron radius e^2/2mc^2.
SolitonParams paper_params(const PhysicalConstants& k);

/// Radial gauge data: chi2(r) enters only through its derivative phi(r);
/// chi1 enters only through the magnitude of its gradient on the shell.
/// Admissible data has phi(r0) = 0.
struct GaugeData {
  std::function<double(double)> phi;        // d chi2 / dr
  std::function<double(double)> dchi1_mag;  // |grad chi1|(r); null = constant chi1

  static GaugeData trivial(); // phi = 0: B vanishes identically
  bool is_trivial() const { return !phi; }
};

/// Lagrange multiplier lambda1 = shell_weight * delta(r - r0) plus an
/// (identically zero here) smooth part; lambda2 must vanish whenever the
/// vector potential is nonzero.
struct MultiplierShell {
  double radius;                           // r0
  double shell_weight;                     // -c / (4 pi r0)
  std::function<double(double)> smooth_part; // null = 0
  double lambda2 = 0.0;

  static MultiplierShell for_solution(const PhysicalConstants& k, double r0);
};

/// One field evaluation: the bivector and its relative split agree by
/// construction (F = join(E, H)).
struct FieldSample {
  Vec3 point;
  cl13::Multivector F;
  Vec3 E;
  Vec3 H;
};

/// Scalar and pseudoscalar parts of omega omega~: s = A^2 - B^2 and
/// p4 = 2 A.B; admissible configurations have p4 = 0.
struct ConstraintScalar {
  double s;
  double p4;
};

// --- potentials and fields -------------------------------------------------

/// Generalized potential pieces.  All throw SingularPointError at r = 0.
cl13::Multivector potential_A(const Vec3& x, const SolitonParams& p);
cl13::Multivector potential_B(const Vec3& x, const GaugeData& g);
/// omega = A + gamma5 B (grades 1 and 3).
cl13::Multivector omega(const Vec3& x, const SolitonParams& p, const GaugeData& g);

/// Constraint scalars of a grade-{1,3} generalized potential.
ConstraintScalar constraint_check(const cl13::Multivector& om);

Vec3 field_E(const Vec3& x, const SolitonParams& p);
Vec3 field_H(const Vec3& x, const SolitonParams& p);
cl13::Multivector faraday(const Vec3& x, const SolitonParams& p);
FieldSample field_sample(const Vec3& x, const SolitonParams& p);

// --- shell current and gauge residuals --------------------------------------

/// Shell-supported effective current: volume density
/// shell_weight * delta(r - r0) * omega, i.e. a 1-vector surface density
/// shell_weight * A(r0 x^) on the sphere.  lambda2 contributes nothing.
struct ShellCurrent {
  double radius;
  double shell_weight;
  SolitonParams params;

  /// Surface 1-vector current density at the shell point r0 * unit_dir.
  cl13::Multivector surface_density(const Vec3& unit_dir) const;
};

ShellCurrent effective_current(const SolitonParams& p, const PhysicalConstants& k);

/// Distributional magnitudes (|lambda1 dchi1|, |lambda1 dchi2|) on the shell;
/// both vanish iff the gauge data is admissible there.
std::pair<double, double> gauge_constraint_residual(const GaugeData& g,
                                                    const MultiplierShell& shell);

/// Free-field Lagrangian density off the shell; for the soliton (B = 0) the
/// multiplier terms vanish away from r0 and the value is (E^2 - H^2)/8pi.
/// Throws ShellError exactly on the shell, SingularPointError at r = 0.
double lagrangian_density(const Vec3& x, const SolitonParams& p, const GaugeData& g,
                          const MultiplierShell& shell, const PhysicalConstants& k);

} // namespace sol::fields
