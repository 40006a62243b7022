#pragma once

#include "braidmod/braid.hpp"

namespace braidmod {

// Left-greedy normal form Delta^p * A_1 ... A_k, factors stored as the
// permutations of their permutation braids. Two words are equal in B_n
// iff their normal forms compare equal componentwise.
class GarsideNormalForm {
public:
  GarsideNormalForm(int n, long long delta_power, std::vector<Permutation> factors)
      : n_(n), delta_power_(delta_power), factors_(std::move(factors)) {}

  int strands() const { return n_; }
  long long delta_power() const { return delta_power_; }
  const std::vector<Permutation>& factors() const { return factors_; }

  BraidWord to_word() const;
  std::string to_string() const;  // e.g. "D^-1 . [2 1 3] . [1 3 2]"

  bool operator==(const GarsideNormalForm&) const = default;

private:
  int n_;
  long long delta_power_;
  std::vector<Permutation> factors_;
};

GarsideNormalForm normal_form(const BraidWord& w);
bool words_equal(const BraidWord& w1, const BraidWord& w2);

// Returns k with w = g^k in B_n if it exists. Requires exponent_sum(g) != 0,
// which pins the only candidate power.
std::optional<long long> in_cyclic_subgroup(const BraidWord& w, const BraidWord& g);

// A reduced Artin word for the permutation braid with permutation pi.
std::vector<int> permutation_braid_word(const Permutation& pi);

}  // namespace braidmod
