#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>
#include <random>

#include "braidmod/garside.hpp"
#include "burau_oracle.hpp"

using namespace braidmod;
using braidmod::testing::burau3;

namespace {

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> letters;
  for (int i = 0; i < len; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return BraidWord(n, letters);
}

// insert cancelling pairs and apply braid relations at random spots
BraidWord random_rewrite(std::mt19937& rng, const BraidWord& w, int rounds) {
  std::vector<int> letters = w.letters();
  const int n = w.strands();
  std::uniform_int_distribution<int> gen(1, n - 1);
  for (int r = 0; r < rounds; ++r) {
    std::uniform_int_distribution<std::size_t> pos(0, letters.size());
    switch (rng() % 3) {
      case 0: {  // insert sigma sigma^{-1}
        int g = gen(rng);
        std::size_t p = pos(rng);
        letters.insert(letters.begin() + p, {g, -g});
        break;
      }
      case 1: {  // far-commutation swap where applicable
        if (letters.size() < 2) break;
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 2);
        std::size_t p = pick(rng);
        if (std::abs(std::abs(letters[p]) - std::abs(letters[p + 1])) >= 2)
          std::swap(letters[p], letters[p + 1]);
        break;
      }
      case 2: {  // braid relation aba -> bab on positive triples
        if (letters.size() < 3) break;
        std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 3);
        std::size_t p = pick(rng);
        int a = letters[p], b = letters[p + 1], c = letters[p + 2];
        if (a > 0 && b > 0 && a == c && std::abs(a - b) == 1) {
          letters[p] = b;
          letters[p + 1] = a;
          letters[p + 2] = b;
        }
        break;
      }
    }
  }
  return BraidWord(n, letters);
}

}  // namespace

TEST_CASE("normal form basics") {
  auto nf = normal_form(parse_braid("1 -1", 2));
  CHECK(nf.delta_power() == 0);
  CHECK(nf.factors().empty());

  auto nf2 = normal_form(parse_braid("-1", 2));
  CHECK(nf2.delta_power() == -1);
  CHECK(nf2.factors().empty());
}

TEST_CASE("(s1 s2)^3 is the full twist in B_3") {
  // oracle first: the faithful Burau representation confirms
  // (s1 s2)^3 = (s1 s2 s1)^2 before trusting the normal form
  auto full_twist = parse_braid("1 2 1 2 1 2", 3);
  auto delta_sq = parse_braid("1 2 1 1 2 1", 3);
  REQUIRE(burau3(full_twist) == burau3(delta_sq));

  auto nf = normal_form(full_twist);
  CHECK(nf.delta_power() == 2);
  CHECK(nf.factors().empty());
}

TEST_CASE("words_equal") {
  CHECK(words_equal(parse_braid("1 2 1", 3), parse_braid("2 1 2", 3)));
  CHECK(!words_equal(parse_braid("1", 3), parse_braid("2", 3)));
  // the full twist is central (checked against the Burau oracle too)
  auto lhs = parse_braid("1 2 1 2 1 2 1", 3);
  auto rhs = parse_braid("1 1 2 1 2 1 2", 3);
  REQUIRE(burau3(lhs) == burau3(rhs));
  CHECK(words_equal(lhs, rhs));
  CHECK_THROWS_AS(words_equal(parse_braid("1", 3), parse_braid("1", 4)),
                  std::invalid_argument);
}

TEST_CASE("normal form is idempotent and invariant under rewriting") {
  std::mt19937 rng(23);
  for (int it = 0; it < 60; ++it) {
    int n = 3 + static_cast<int>(rng() % 3);
    auto w = random_word(rng, n, 14);
    auto nf = normal_form(w);
    CHECK(normal_form(nf.to_word()) == nf);
    auto rewritten = random_rewrite(rng, w, 8);
    CHECK(normal_form(rewritten) == nf);
  }
}

TEST_CASE("normal form factors are left-weighted permutation braids") {
  std::mt19937 rng(31);
  for (int it = 0; it < 40; ++it) {
    auto w = random_word(rng, 4, 12);
    auto nf = normal_form(w);
    for (const auto& f : nf.factors()) {
      CHECK(!f.is_identity());
      bool is_delta = true;
      for (int i = 0; i < f.size(); ++i)
        if (f.apply(i) != f.size() - 1 - i) is_delta = false;
      CHECK(!is_delta);
    }
    // permutation is preserved
    CHECK(underlying_permutation(nf.to_word()) == underlying_permutation(w));
    // w * w^{-1} normalizes to the identity
    CHECK(words_equal(concat(w, inverse(w)), BraidWord(4)));
  }
}

TEST_CASE("words_equal agrees with the Burau oracle on short 3-braids") {
  // small-scale version; the exhaustive length <= 8 sweep runs in acceptance
  std::vector<BraidWord> words;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int remaining) {
    words.emplace_back(3, cur);
    if (remaining == 0) return;
    for (int l : {1, -1, 2, -2}) {
      cur.push_back(l);
      gen(remaining - 1);
      cur.pop_back();
    }
  };
  gen(4);

  std::map<std::string, std::string> nf_of_burau;
  for (const auto& w : words) {
    auto bkey = burau3(w).key();
    auto nfkey = normal_form(w).to_string();
    auto [it, fresh] = nf_of_burau.emplace(bkey, nfkey);
    CHECK(it->second == nfkey);
  }
  // distinct normal forms must have distinct Burau keys
  std::map<std::string, std::string> seen;
  for (const auto& [bkey, nfkey] : nf_of_burau) {
    auto [it, fresh] = seen.emplace(nfkey, bkey);
    CHECK(fresh);
  }
}

TEST_CASE("in_cyclic_subgroup") {
  auto g = parse_braid("1 2", 3);
  CHECK(in_cyclic_subgroup(power(g, 4), g) == 4);
  CHECK(!in_cyclic_subgroup(parse_braid("1", 3), g).has_value());
  CHECK(in_cyclic_subgroup(parse_braid("1 2 1 1 2 1", 3), g) == 3);
  CHECK(!in_cyclic_subgroup(parse_braid("1 1", 3), g).has_value());
  CHECK_THROWS_AS(in_cyclic_subgroup(g, parse_braid("1 -2", 3)),
                  std::invalid_argument);
}
