#include "braidmod/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace braidmod {

Permutation::Permutation(int n) : images_(n) {
  if (n < 1) throw std::invalid_argument("Permutation: n must be >= 1");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& other) const {
  if (size() != other.size())
    throw std::invalid_argument("Permutation: size mismatch");
  std::vector<int> out(images_.size());
  for (int i = 0; i < size(); ++i) out[i] = other.images_[images_[i]];
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

bool Permutation::is_n_cycle() const {
  auto ct = cycle_type();
  return ct.size() == 1 && ct[0] == size();
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (int i = 0; i < size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ' ';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  return any ? out.str() : "id";
}

BraidWord::BraidWord(int n, std::vector<int> letters)
    : n_(n), letters_(std::move(letters)) {
  if (n < 2) throw std::invalid_argument("BraidWord: need at least 2 strands");
  for (int l : letters_) {
    if (l == 0 || std::abs(l) > n - 1)
      throw std::invalid_argument("BraidWord: letter index out of range");
  }
}

std::string BraidWord::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out << ' ';
    out << letters_[i];
  }
  return out.str();
}

BraidWord parse_braid(const std::string& text, int n) {
  if (n < 2) throw std::invalid_argument("parse_braid: need at least 2 strands");
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_braid: malformed token '" + tok + "'");
    }
    if (pos != tok.size())
      throw std::invalid_argument("parse_braid: malformed token '" + tok + "'");
    if (v == 0 || std::abs(v) > n - 1)
      throw std::invalid_argument("parse_braid: generator index " + tok +
                                  " out of range for " + std::to_string(n) +
                                  " strands");
    letters.push_back(v);
  }
  return BraidWord(n, std::move(letters));
}

long long exponent_sum(const BraidWord& w) {
  long long s = 0;
  for (int l : w.letters()) s += (l > 0) ? 1 : -1;
  return s;
}

Permutation underlying_permutation(const BraidWord& w) {
  std::vector<int> p(w.strands());
  std::iota(p.begin(), p.end(), 0);
  for (int l : w.letters()) {
    int i = std::abs(l) - 1;
    // compose with the transposition (i, i+1) on the right
    for (int& v : p)
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
  }
  return Permutation(std::move(p));
}

bool in_commutator_subgroup(const BraidWord& w) { return exponent_sum(w) == 0; }

BraidWord concat(const BraidWord& w1, const BraidWord& w2) {
  if (w1.strands() != w2.strands())
    throw std::invalid_argument("concat: strand-count mismatch");
  std::vector<int> letters = w1.letters();
  letters.insert(letters.end(), w2.letters().begin(), w2.letters().end());
  return BraidWord(w1.strands(), std::move(letters));
}

BraidWord inverse(const BraidWord& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  for (int& l : letters) l = -l;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord power(const BraidWord& w, long long l) {
  BraidWord base = (l < 0) ? inverse(w) : w;
  long long k = std::abs(l);
  std::vector<int> letters;
  letters.reserve(base.length() * static_cast<std::size_t>(k));
  for (long long i = 0; i < k; ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

}  // namespace braidmod
