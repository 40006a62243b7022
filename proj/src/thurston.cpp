#include "braidmod/thurston.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace braidmod {

std::string to_string(ThurstonType t) {
  switch (t) {
    case ThurstonType::Periodic: return "Periodic";
    case ThurstonType::Reducible: return "Reducible";
    case ThurstonType::PseudoAnosov: return "PseudoAnosov";
  }
  return "?";
}

namespace {

// log of a positive bigint, safe against double overflow
double log_bigint(const bigint& t) {
  double d = t.convert_to<double>();
  if (std::isfinite(d)) return std::log(d);
  unsigned bits = boost::multiprecision::msb(t);
  bigint top = t >> (bits - 52);
  return std::log(top.convert_to<double>()) + (bits - 52) * std::log(2.0);
}

}  // namespace

ThurstonType classify3(const BraidWord& w) {
  if (w.strands() != 3)
    throw std::invalid_argument("classify3: defined for 3-braids only");
  Psl2zImage m = psl2z_image(w);
  if (m.is_identity()) return ThurstonType::Periodic;  // central braid
  bigint t = m.trace();
  if (t < 0) t = -t;
  if (t < 2) return ThurstonType::Periodic;
  if (t == 2) return ThurstonType::Reducible;
  return ThurstonType::PseudoAnosov;
}

Entropy entropy3(const BraidWord& w) {
  if (classify3(w) != ThurstonType::PseudoAnosov) return Entropy{0.0};
  bigint t = psl2z_image(w).trace();
  if (t < 0) t = -t;
  // h = log lambda, lambda = (t + sqrt(t^2-4))/2 = largest eigenvalue
  double td = t.convert_to<double>();
  if (std::isfinite(td) && td < 1e150) return Entropy{std::acosh(td / 2.0)};
  return Entropy{log_bigint(t)};
}

ConjugacyKey3 conjugacy_key3(const BraidWord& w) {
  if (w.strands() != 3)
    throw std::invalid_argument("conjugacy_key3: defined for 3-braids only");
  return ConjugacyKey3{exponent_sum(w), psl2z_conjugacy_key(w)};
}

bool conj_equal3(const BraidWord& w1, const BraidWord& w2) {
  return conjugacy_key3(w1) == conjugacy_key3(w2);
}

double penner_floor(int n) {
  if (n < 3) throw std::invalid_argument("penner_floor: requires n >= 3");
  return std::log(2.0) / (4.0 * n);
}

double entropy_lower_bound_burau(const BraidWord& w,
                                 const std::vector<std::complex<double>>& t_samples) {
  const int n = w.strands();
  for (const auto& t : t_samples)
    if (std::abs(std::abs(t) - 1.0) > 1e-9)
      throw std::invalid_argument(
          "entropy_lower_bound_burau: sample parameters must lie on the unit circle");

  using Mat = Eigen::MatrixXcd;
  double best = 0.0;
  for (const auto& t : t_samples) {
    // reduced Burau generator matrices, (n-1) x (n-1)
    auto gen = [&](int i, bool inv) {
      Mat g = Mat::Identity(n - 1, n - 1);
      std::complex<double> tt = inv ? 1.0 / t : t;
      int r = i - 1;  // row of sigma_i
      if (!inv) {
        if (r > 0) g(r, r - 1) = tt;
        g(r, r) = -tt;
        if (r < n - 2) g(r, r + 1) = 1.0;
      } else {
        if (r > 0) g(r, r - 1) = 1.0;
        g(r, r) = -tt;
        if (r < n - 2) g(r, r + 1) = tt;
      }
      return g;
    };
    Mat m = Mat::Identity(n - 1, n - 1);
    for (int l : w.letters()) m = m * gen(std::abs(l), l < 0);
    Eigen::ComplexEigenSolver<Mat> es(m, /*computeEigenvectors=*/false);
    double rho = 0.0;
    for (int i = 0; i < n - 1; ++i) rho = std::max(rho, std::abs(es.eigenvalues()[i]));
    if (rho > 1.0) best = std::max(best, std::log(rho));
  }
  return best;
}

ThurstonReport thurston_report(const BraidWord& w) {
  ThurstonType ty = classify3(w);
  Entropy h = entropy3(w);
  ThurstonReport r{ty, h, 0.0, h.is_zero()};
  r.module = h.is_zero() ? std::numeric_limits<double>::infinity()
                         : std::acos(-1.0) / (2.0 * h.value);
  return r;
}

}  // namespace braidmod
