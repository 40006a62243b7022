#include "braidmod/garside.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidmod {

namespace {

// Permutation-braid calculus. A permutation braid is the positive braid in
// which every pair of strands crosses at most once; it is determined by its
// permutation pi (strand starting at i ends at pi(i), 0-indexed). Words
// compose left to right, so perm(w1 w2) = perm(w1).then(perm(w2)).

std::vector<int> images_of(const Permutation& p) {
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[i] = p.apply(i);
  return v;
}

// starting set: generator sigma_{i+1} is a left divisor iff pi(i) > pi(i+1)
bool in_starting_set(const std::vector<int>& pi, int i) { return pi[i] > pi[i + 1]; }

// finishing set: sigma_{i+1} is a right divisor iff pi^{-1}(i) > pi^{-1}(i+1)
bool in_finishing_set(const std::vector<int>& inv, int i) { return inv[i] > inv[i + 1]; }

std::vector<int> invert(const std::vector<int>& pi) {
  std::vector<int> inv(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i]] = static_cast<int>(i);
  return inv;
}

bool is_identity_vec(const std::vector<int>& pi) {
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i] != static_cast<int>(i)) return false;
  return true;
}

bool is_delta_vec(const std::vector<int>& pi) {
  int n = static_cast<int>(pi.size());
  for (int i = 0; i < n; ++i)
    if (pi[i] != n - 1 - i) return false;
  return true;
}

// tau(A) = Delta^{-1} A Delta; on permutations, conjugation by the reversal
std::vector<int> tau_vec(const std::vector<int>& pi) {
  int n = static_cast<int>(pi.size());
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = n - 1 - pi[n - 1 - i];
  return out;
}

// Makes the pair (a, b) left-weighted by sliding generators from the head of
// b into a. Returns true if anything moved.
bool left_weight_pair(std::vector<int>& a, std::vector<int>& b) {
  int n = static_cast<int>(a.size());
  bool moved = false;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<int> a_inv = invert(a);
    for (int i = 0; i + 1 < n; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(a_inv, i)) {
        // a <- a * sigma_{i+1}: swap the values i, i+1 in a
        std::swap(a[a_inv[i]], a[a_inv[i + 1]]);
        // b <- sigma_{i+1}^{-1} * b: swap positions i, i+1
        std::swap(b[i], b[i + 1]);
        moved = true;
        progress = true;
        break;
      }
    }
  }
  return moved;
}

}  // namespace

std::vector<int> permutation_braid_word(const Permutation& pi) {
  std::vector<int> p = images_of(pi);
  std::vector<int> word;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        word.push_back(static_cast<int>(i) + 1);
        std::swap(p[i], p[i + 1]);
        found = true;
        break;
      }
    }
  }
  return word;
}

BraidWord GarsideNormalForm::to_word() const {
  std::vector<int> delta_images(n_);
  for (int i = 0; i < n_; ++i) delta_images[i] = n_ - 1 - i;
  std::vector<int> delta_word = permutation_braid_word(Permutation(delta_images));

  std::vector<int> letters;
  if (delta_power_ >= 0) {
    for (long long k = 0; k < delta_power_; ++k)
      letters.insert(letters.end(), delta_word.begin(), delta_word.end());
  } else {
    for (long long k = 0; k < -delta_power_; ++k)
      for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it)
        letters.push_back(-*it);
  }
  for (const auto& f : factors_) {
    auto fw = permutation_braid_word(f);
    letters.insert(letters.end(), fw.begin(), fw.end());
  }
  return BraidWord(n_, std::move(letters));
}

std::string GarsideNormalForm::to_string() const {
  std::ostringstream out;
  out << "D^" << delta_power_;
  for (const auto& f : factors_) {
    out << " . [";
    for (int i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << f.apply(i) + 1;
    }
    out << ']';
  }
  return out.str();
}

GarsideNormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();

  // Rewrite the word as Delta^p * (product of permutation braids):
  // sigma_i stays, sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1}), and each
  // Delta^{-1} is pushed to the far left through earlier factors by tau.
  long long p = 0;
  std::vector<std::vector<int>> factors;
  {
    // count of Delta^{-1} arising to the right of each factor, applied lazily
    std::vector<int> tau_after;
    long long neg = 0;
    for (int l : w.letters()) {
      int i = std::abs(l) - 1;
      std::vector<int> f(n);
      std::iota(f.begin(), f.end(), 0);
      if (l > 0) {
        std::swap(f[i], f[i + 1]);  // sigma_{i+1}... generator i (0-indexed slot)
      } else {
        // Delta * sigma^{-1}: reversal with values i, i+1 swapped
        for (int j = 0; j < n; ++j) f[j] = n - 1 - j;
        auto inv = invert(f);
        std::swap(f[inv[i]], f[inv[i + 1]]);
        ++neg;
      }
      factors.push_back(std::move(f));
      tau_after.push_back(0);
      if (l < 0)
        for (std::size_t j = 0; j + 1 < factors.size(); ++j) ++tau_after[j];
    }
    p = -neg;
    for (std::size_t j = 0; j < factors.size(); ++j)
      for (int k = 0; k < tau_after[j] % 2; ++k) factors[j] = tau_vec(factors[j]);
  }

  // Left-weight the factor sequence.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < factors.size(); ++j)
      if (left_weight_pair(factors[j], factors[j + 1])) changed = true;

    // drop trivial factors, pull out Deltas
    std::vector<std::vector<int>> kept;
    for (auto& f : factors) {
      if (is_identity_vec(f)) {
        changed = true;
        continue;
      }
      if (is_delta_vec(f)) {
        ++p;
        for (auto& g : kept) g = tau_vec(g);
        changed = true;
        continue;
      }
      kept.push_back(std::move(f));
    }
    factors = std::move(kept);
  }

  std::vector<Permutation> out;
  out.reserve(factors.size());
  for (auto& f : factors) out.emplace_back(std::move(f));
  return GarsideNormalForm(n, p, std::move(out));
}

bool words_equal(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands())
    throw std::invalid_argument("words_equal: strand-count mismatch");
  return normal_form(w1) == normal_form(w2);
}

std::optional<long long> in_cyclic_subgroup(const BraidWord& w, const BraidWord& g) {
  if (w.strands() != g.strands())
    throw std::invalid_argument("in_cyclic_subgroup: strand-count mismatch");
  long long eg = exponent_sum(g);
  if (eg == 0)
    throw std::invalid_argument(
        "in_cyclic_subgroup: generator has zero exponent sum (unsupported)");
  long long ew = exponent_sum(w);
  if (ew % eg != 0) return std::nullopt;
  long long k = ew / eg;
  if (words_equal(w, power(g, k))) return k;
  return std::nullopt;
}

}  // namespace braidmod
