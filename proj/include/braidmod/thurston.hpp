#pragma once

#include <complex>

#include "braidmod/psl2z.hpp"

namespace braidmod {

enum class ThurstonType { Periodic, Reducible, PseudoAnosov };

std::string to_string(ThurstonType t);

// Entropy value: exactly 0, or log of a pseudo-Anosov dilatation.
struct Entropy {
  double value = 0.0;
  bool is_zero() const { return value == 0.0; }
};

// Conjugacy key for 3-braids: equal keys iff the braids are conjugate in B_3.
struct ConjugacyKey3 {
  long long exponent_sum;
  std::string psl2z_class;
  bool operator==(const ConjugacyKey3&) const = default;
};

ThurstonType classify3(const BraidWord& w);
Entropy entropy3(const BraidWord& w);
ConjugacyKey3 conjugacy_key3(const BraidWord& w);
bool conj_equal3(const BraidWord& w1, const BraidWord& w2);

// (log 2) / (4n): lower bound for the smallest nonzero entropy of an
// irreducible n-braid. Requires n >= 3.
double penner_floor(int n);

// max over samples of log+ of the spectral radius of the reduced Burau
// matrix; a lower bound for the entropy of the braid's class. With the
// default sample -1 this is exact on pseudo-Anosov 3-braids.
double entropy_lower_bound_burau(const BraidWord& w,
                                 const std::vector<std::complex<double>>& t_samples = {
                                     {-1.0, 0.0}});

struct ThurstonReport {
  ThurstonType type;
  Entropy entropy;
  double module;        // pi / (2 h); +infinity when h = 0
  bool module_infinite;
};

ThurstonReport thurston_report(const BraidWord& w);

}  // namespace braidmod
