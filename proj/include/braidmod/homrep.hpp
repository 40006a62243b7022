#pragma once

#include "braidmod/garside.hpp"

namespace braidmod {

// A homomorphism from the free group on two generators (the fundamental
// group of a torus with a hole) into B_3, given by the generator images.
struct FreeHomB3 {
  BraidWord image_a;
  BraidWord image_b;
};

struct Theorem3Verdict {
  enum class Kind { SatisfiesNecessaryCondition, FailsSubgroup, FailsGarsideClause };
  Kind kind;
  long long k_a = 0;  // valid when both images are powers of sigma_1 sigma_2
  long long k_b = 0;
  char failing_generator = 0;  // 'a' or 'b' for FailsSubgroup

  std::string to_string() const;
};

// Necessary condition for an irreducible separable degree-3 quasipolynomial
// on a torus with a hole to be isotopic to an algebroid function for every
// complex structure: both generator images lie in the cyclic subgroup
// generated by sigma_1 sigma_2, and the image subgroup contains an element
// that is not a power of (sigma_1 sigma_2)^3.
Theorem3Verdict theorem3_check(const FreeHomB3& hom);

}  // namespace braidmod
