#include "soliton/cl13/multivector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sol::cl13 {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

// Reversion flips blades of grade k by (-1)^(k(k-1)/2): grades 2 and 3.
constexpr double reversion_sign(unsigned mask) {
  const int k = std::popcount(mask);
  return (k == 2 || k == 3) ? -1.0 : 1.0;
}

} // namespace

Multivector Multivector::blade(unsigned mask, double coeff) {
  require(mask < kBladeCount, "blade mask out of range");
  Multivector m;
  m.c_[mask] = coeff;
  return m;
}

Multivector Multivector::gamma(int mu) {
  require(mu >= 0 && mu <= 3, "gamma index out of range");
  return blade(1u << mu, 1.0);
}

Multivector Multivector::gamma5() { return blade(0b1111, 1.0); }

Multivector Multivector::sigma(int i) {
  require(i >= 1 && i <= 3, "sigma index out of range");
  return gamma(i) * gamma(0);
}

Multivector Multivector::pseudo_i() { return sigma(1) * sigma(2) * sigma(3); }

Multivector Multivector::operator+(const Multivector& o) const {
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

Multivector Multivector::operator-(const Multivector& o) const {
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

Multivector Multivector::operator-() const {
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i) r.c_[i] = -c_[i];
  return r;
}

Multivector Multivector::operator*(double s) const {
  Multivector r;
  for (int i = 0; i < kBladeCount; ++i) r.c_[i] = c_[i] * s;
  return r;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  for (int i = 0; i < kBladeCount; ++i) c_[i] += o.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  for (int i = 0; i < kBladeCount; ++i) c_[i] -= o.c_[i];
  return *this;
}

Multivector Multivector::operator*(const Multivector& o) const {
  Multivector r;
  active_product_kernel()(c_.data(), o.c_.data(), r.c_.data());
  return r;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) { return a * b; }

Multivector Multivector::grade(int k) const {
  require(k >= 0 && k <= 4, "grade out of range");
  Multivector r;
  for (unsigned mask = 0; mask < kBladeCount; ++mask)
    if (std::popcount(mask) == k) r.c_[mask] = c_[mask];
  return r;
}

Multivector Multivector::reversed() const {
  Multivector r;
  for (unsigned mask = 0; mask < kBladeCount; ++mask) r.c_[mask] = reversion_sign(mask) * c_[mask];
  return r;
}

Multivector Multivector::dual() const { return reversed() * gamma5(); }

bool Multivector::pure_grades(std::initializer_list<int> grades) const {
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    const int k = std::popcount(mask);
    bool allowed = false;
    for (int g : grades) allowed = allowed || (g == k);
    if (!allowed && c_[mask] != 0.0) return false;
  }
  return true;
}

double Multivector::norm() const {
  double s = 0.0;
  for (double v : c_) s += v * v;
  return std::sqrt(s);
}

bool Multivector::all_finite() const {
  for (double v : c_)
    if (!std::isfinite(v)) return false;
  return true;
}

Multivector vector_dot(const Multivector& a, const Multivector& b) {
  require(a.pure_grades({1}), "vector_dot: left operand must be pure grade 1");
  Multivector r;
  for (int k = 1; k <= 4; ++k) r += (a * b.grade(k)).grade(k - 1);
  return r;
}

Multivector vector_wedge(const Multivector& a, const Multivector& b) {
  require(a.pure_grades({1}), "vector_wedge: left operand must be pure grade 1");
  Multivector r;
  for (int k = 0; k <= 3; ++k) r += (a * b.grade(k)).grade(k + 1);
  return r;
}

namespace {

// Blade mask and sign of sigma_i and ihat*sigma_i, derived from the product
// engine once instead of hand-transcribed.
struct SplitBasis {
  unsigned e_mask[3], h_mask[3];
  double e_sign[3], h_sign[3];
};

SplitBasis make_split_basis() {
  SplitBasis sb{};
  const Multivector ih = Multivector::pseudo_i();
  for (int i = 1; i <= 3; ++i) {
    const Multivector s = Multivector::sigma(i);
    const Multivector hs = ih * s;
    for (unsigned mask = 0; mask < kBladeCount; ++mask) {
      if (s[mask] != 0.0) {
        sb.e_mask[i - 1] = mask;
        sb.e_sign[i - 1] = s[mask];
      }
      if (hs[mask] != 0.0) {
        sb.h_mask[i - 1] = mask;
        sb.h_sign[i - 1] = hs[mask];
      }
    }
  }
  return sb;
}

const SplitBasis& split_basis() {
  static const SplitBasis sb = make_split_basis();
  return sb;
}

} // namespace

RelativeSplit relative_split(const Multivector& F) {
  require(F.pure_grades({2}), "relative_split: input must be pure grade 2");
  const SplitBasis& sb = split_basis();
  double e[3], h[3];
  for (int i = 0; i < 3; ++i) {
    e[i] = F[sb.e_mask[i]] * sb.e_sign[i]; // signs are +-1
    h[i] = F[sb.h_mask[i]] * sb.h_sign[i];
  }
  return {{e[0], e[1], e[2]}, {h[0], h[1], h[2]}};
}

Multivector relative_join(const Vec3& E, const Vec3& H) {
  const SplitBasis& sb = split_basis();
  const double e[3] = {E.x, E.y, E.z};
  const double h[3] = {H.x, H.y, H.z};
  Multivector F;
  for (int i = 0; i < 3; ++i) {
    F[sb.e_mask[i]] = sb.e_sign[i] * e[i];
    F[sb.h_mask[i]] = sb.h_sign[i] * h[i];
  }
  return F;
}

Multivector relative_join(const RelativeSplit& s) { return relative_join(s.E, s.H); }

} // namespace sol::cl13
