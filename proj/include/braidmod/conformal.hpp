#pragma once

#include "braidmod/thurston.hpp"

namespace braidmod {

// Extended positive real: a finite value or +infinity, tracked explicitly.
class ModuleValue {
public:
  static ModuleValue finite(double v);
  static ModuleValue infinite() { return ModuleValue(0.0, true); }

  bool is_infinite() const { return infinite_; }
  double value() const;  // throws if infinite
  std::string to_string() const;

  friend bool operator>(const ModuleValue& a, const ModuleValue& b);
  bool operator==(const ModuleValue&) const = default;

private:
  ModuleValue(double v, bool inf) : value_(v), infinite_(inf) {}
  double value_;
  bool infinite_;
};

struct Annulus {
  double inner;  // r >= 0
  double outer;  // R, may be +infinity
};

// (1/2pi) log(R/r); +infinity for degenerate annuli (r = 0 or R = inf).
ModuleValue annulus_module(const Annulus& a);

// pi / (2 h) for 3-braids; +infinity when the entropy vanishes.
ModuleValue conformal_module_of_class(const BraidWord& w);

// For n > 3 only an upper bound for the class module is available, from the
// Burau entropy lower bound. Infinite when the bound is 0.
ModuleValue conformal_module_upper_bound(const BraidWord& w);

ModuleValue module_of_power(const ModuleValue& m, long long l);

enum class Lemma1Verdict { AlgebroidExcluded, NotExcluded };

// Excluded iff m(A) strictly exceeds M of the class: no algebroid function
// over an annulus of that module can induce this braid class.
Lemma1Verdict lemma1_obstruction(const ModuleValue& annulus_mod, const BraidWord& w);

}  // namespace braidmod
