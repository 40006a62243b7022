#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidmod {

// A bijection of {1,...,n}, stored 0-indexed: images[i] is the image of i.
class Permutation {
public:
  explicit Permutation(int n);                      // identity
  explicit Permutation(std::vector<int> images);    // 0-indexed images
  int size() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[i]; }
  Permutation inverse() const;
  // this then other: result(i) = other(this(i)).
  Permutation then(const Permutation& other) const;
  bool is_identity() const;
  bool is_n_cycle() const;
  std::vector<int> cycle_type() const;  // cycle lengths, descending
  std::string to_cycle_string() const;  // e.g. "(1 2 3)" , "id"
  bool operator==(const Permutation&) const = default;

private:
  std::vector<int> images_;
};

// A word in the Artin generators of B_n. Letter i > 0 means sigma_i,
// i < 0 means sigma_{|i|}^{-1}. The empty word is the identity braid.
class BraidWord {
public:
  BraidWord(int n, std::vector<int> letters);
  explicit BraidWord(int n) : BraidWord(n, {}) {}

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  std::string to_string() const;  // whitespace-separated signed integers

  bool operator==(const BraidWord&) const = default;  // letterwise, not group equality

private:
  int n_;
  std::vector<int> letters_;
};

BraidWord parse_braid(const std::string& text, int n);

long long exponent_sum(const BraidWord& w);
Permutation underlying_permutation(const BraidWord& w);
bool in_commutator_subgroup(const BraidWord& w);

BraidWord concat(const BraidWord& w1, const BraidWord& w2);
BraidWord inverse(const BraidWord& w);
BraidWord power(const BraidWord& w, long long l);

}  // namespace braidmod
