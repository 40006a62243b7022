#include "braidmod/psl2z.hpp"

#include <utility>

namespace braidmod {

void Psl2zImage::normalize() {
  bool flip;
  if (a != 0)
    flip = a < 0;
  else
    flip = b < 0;
  if (flip) {
    a = -a;
    b = -b;
    c = -c;
    d = -d;
  }
}

Psl2zImage Psl2zImage::times(const Psl2zImage& r) const {
  Psl2zImage out{a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c,
                 c * r.b + d * r.d};
  out.normalize();
  return out;
}

Psl2zImage psl2z_image(const BraidWord& w) {
  if (w.strands() != 3)
    throw std::invalid_argument("psl2z_image: defined for 3-braids only");
  Psl2zImage m{1, 0, 0, 1};
  for (int l : w.letters()) {
    Psl2zImage g;
    switch (l) {
      case 1:  g = {1, 1, 0, 1}; break;
      case -1: g = {1, -1, 0, 1}; break;
      case 2:  g = {1, 0, -1, 1}; break;
      case -2: g = {1, 0, 1, 1}; break;
      default: throw std::logic_error("psl2z_image: bad letter");
    }
    m = m.times(g);
  }
  m.normalize();
  return m;
}

namespace {

// Syllables over PSL(2,Z) = Z/2 * Z/3 with S of order 2 and U of order 3:
// sigma_1 = U S, sigma_1^{-1} = S U^2, sigma_2 = S U, sigma_2^{-1} = U^2 S.
struct Syllable {
  char type;  // 's' or 'u'
  int exp;    // 1 for s; 1 or 2 for u
};

void push_reduced(std::vector<Syllable>& w, Syllable s) {
  if (!w.empty() && w.back().type == s.type) {
    int order = (s.type == 's') ? 2 : 3;
    int e = (w.back().exp + s.exp) % order;
    if (e == 0)
      w.pop_back();
    else
      w.back().exp = e;
  } else {
    w.push_back(s);
  }
}

char token(const Syllable& s) {
  if (s.type == 's') return 's';
  return s.exp == 1 ? 'u' : 'v';
}

}  // namespace

std::string psl2z_conjugacy_key(const BraidWord& w) {
  if (w.strands() != 3)
    throw std::invalid_argument("psl2z_conjugacy_key: defined for 3-braids only");

  std::vector<Syllable> word;
  for (int l : w.letters()) {
    switch (l) {
      case 1:  push_reduced(word, {'u', 1}); push_reduced(word, {'s', 1}); break;
      case -1: push_reduced(word, {'s', 1}); push_reduced(word, {'u', 2}); break;
      case 2:  push_reduced(word, {'s', 1}); push_reduced(word, {'u', 1}); break;
      case -2: push_reduced(word, {'u', 2}); push_reduced(word, {'s', 1}); break;
      default: throw std::logic_error("psl2z_conjugacy_key: bad letter");
    }
  }

  // cyclic reduction: merge matching first/last syllables around the seam
  while (word.size() >= 2 && word.front().type == word.back().type) {
    Syllable last = word.back();
    word.pop_back();
    int order = (last.type == 's') ? 2 : 3;
    int e = (last.exp + word.front().exp) % order;
    if (e == 0)
      word.erase(word.begin());
    else
      word.front().exp = e;
  }

  if (word.empty()) return "1";
  std::string tokens;
  tokens.reserve(word.size());
  for (const auto& s : word) tokens.push_back(token(s));
  if (tokens.size() == 1) return tokens;

  // lexicographically minimal rotation
  std::string best = tokens;
  std::string cur = tokens;
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    cur = cur.substr(1) + cur.front();
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace braidmod
