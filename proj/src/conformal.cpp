#include "braidmod/conformal.hpp"

#include <cmath>
#include <sstream>

namespace braidmod {

ModuleValue ModuleValue::finite(double v) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::invalid_argument("ModuleValue: finite value must be positive");
  return ModuleValue(v, false);
}

double ModuleValue::value() const {
  if (infinite_) throw std::logic_error("ModuleValue: value() on infinite module");
  return value_;
}

std::string ModuleValue::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream out;
  out.precision(12);
  out << value_;
  return out.str();
}

bool operator>(const ModuleValue& a, const ModuleValue& b) {
  if (a.infinite_) return !b.infinite_;
  if (b.infinite_) return false;
  return a.value_ > b.value_;
}

ModuleValue annulus_module(const Annulus& a) {
  if (a.inner < 0.0 || !(a.inner < a.outer))
    throw std::invalid_argument("annulus_module: need 0 <= r < R");
  if (a.inner == 0.0 || std::isinf(a.outer)) return ModuleValue::infinite();
  return ModuleValue::finite(std::log(a.outer / a.inner) / (2.0 * std::acos(-1.0)));
}

ModuleValue conformal_module_of_class(const BraidWord& w) {
  if (w.strands() != 3)
    throw std::invalid_argument(
        "conformal_module_of_class: exact value available for 3-braids only; "
        "use conformal_module_upper_bound for n > 3");
  ThurstonReport r = thurston_report(w);
  if (r.module_infinite) return ModuleValue::infinite();
  return ModuleValue::finite(r.module);
}

ModuleValue conformal_module_upper_bound(const BraidWord& w) {
  double h = entropy_lower_bound_burau(w);
  if (h == 0.0) return ModuleValue::infinite();
  return ModuleValue::finite(std::acos(-1.0) / (2.0 * h));
}

ModuleValue module_of_power(const ModuleValue& m, long long l) {
  if (l == 0) throw std::invalid_argument("module_of_power: power must be nonzero");
  if (m.is_infinite()) return m;
  return ModuleValue::finite(m.value() / static_cast<double>(l < 0 ? -l : l));
}

Lemma1Verdict lemma1_obstruction(const ModuleValue& annulus_mod, const BraidWord& w) {
  ModuleValue class_mod = conformal_module_of_class(w);
  return annulus_mod > class_mod ? Lemma1Verdict::AlgebroidExcluded
                                 : Lemma1Verdict::NotExcluded;
}

}  // namespace braidmod
