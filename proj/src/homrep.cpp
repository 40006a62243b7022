#include "braidmod/homrep.hpp"

#include <numeric>
#include <sstream>

namespace braidmod {

std::string Theorem3Verdict::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::SatisfiesNecessaryCondition:
      out << "SatisfiesNecessaryCondition k_a=" << k_a << " k_b=" << k_b;
      break;
    case Kind::FailsSubgroup:
      out << "FailsSubgroup generator=" << failing_generator;
      break;
    case Kind::FailsGarsideClause:
      out << "FailsGarsideClause";
      break;
  }
  return out.str();
}

Theorem3Verdict theorem3_check(const FreeHomB3& hom) {
  if (hom.image_a.strands() != 3 || hom.image_b.strands() != 3)
    throw std::invalid_argument("theorem3_check: images must be 3-braids");
  const BraidWord g = parse_braid("1 2", 3);  // the periodic braid sigma_1 sigma_2

  auto check_member = [&](const BraidWord& w) -> std::optional<long long> {
    if (exponent_sum(w) == 0) {
      // candidate power is 0: member iff w is the identity braid
      if (words_equal(w, BraidWord(3))) return 0;
      return std::nullopt;
    }
    return in_cyclic_subgroup(w, g);
  };

  auto ka = check_member(hom.image_a);
  if (!ka) return Theorem3Verdict{Theorem3Verdict::Kind::FailsSubgroup, 0, 0, 'a'};
  auto kb = check_member(hom.image_b);
  if (!kb) return Theorem3Verdict{Theorem3Verdict::Kind::FailsSubgroup, 0, 0, 'b'};

  // image subgroup is generated by (sigma_1 sigma_2)^g, g = gcd(k_a, k_b);
  // it contains an element not a power of (sigma_1 sigma_2)^3 iff g != 0 and
  // 3 does not divide g
  long long g_pow = std::gcd(*ka, *kb);
  if (g_pow == 0 || g_pow % 3 == 0)
    return Theorem3Verdict{Theorem3Verdict::Kind::FailsGarsideClause, *ka, *kb, 0};
  return Theorem3Verdict{Theorem3Verdict::Kind::SatisfiesNecessaryCondition, *ka, *kb, 0};
}

}  // namespace braidmod
