#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braidmod/homrep.hpp"

using namespace braidmod;

namespace {

using Kind = Theorem3Verdict::Kind;

// a word equal in B_3 to w, obtained by inserting cancelling pairs
BraidWord padded(const BraidWord& w, std::mt19937& rng) {
  auto letters = w.letters();
  for (int r = 0; r < 4; ++r) {
    int g = 1 + static_cast<int>(rng() % 2);
    std::uniform_int_distribution<std::size_t> pos(0, letters.size());
    std::size_t p = pos(rng);
    letters.insert(letters.begin() + p, {g, -g});
  }
  return BraidWord(3, letters);
}

}  // namespace

TEST_CASE("theorem3_check verdicts") {
  auto g = parse_braid("1 2", 3);

  auto ok = theorem3_check({g, power(g, 2)});
  CHECK(ok.kind == Kind::SatisfiesNecessaryCondition);
  CHECK(ok.k_a == 1);
  CHECK(ok.k_b == 2);

  auto fail_a = theorem3_check({parse_braid("1", 3), parse_braid("2", 3)});
  CHECK(fail_a.kind == Kind::FailsSubgroup);
  CHECK(fail_a.failing_generator == 'a');

  auto garside = theorem3_check({power(g, 3), power(g, 6)});
  CHECK(garside.kind == Kind::FailsGarsideClause);
}

TEST_CASE("trivial homomorphism fails the Garside clause") {
  auto v = theorem3_check({BraidWord(3), BraidWord(3)});
  CHECK(v.kind == Kind::FailsGarsideClause);
}

TEST_CASE("zero and nonzero powers combine through the gcd") {
  auto g = parse_braid("1 2", 3);
  CHECK(theorem3_check({BraidWord(3), g}).kind == Kind::SatisfiesNecessaryCondition);
  CHECK(theorem3_check({BraidWord(3), power(g, 3)}).kind == Kind::FailsGarsideClause);
  CHECK(theorem3_check({power(g, 2), power(g, 3)}).kind ==
        Kind::SatisfiesNecessaryCondition);
  CHECK(theorem3_check({power(g, 6), power(g, 9)}).kind == Kind::FailsGarsideClause);
  CHECK(theorem3_check({power(g, -2), power(g, 4)}).kind ==
        Kind::SatisfiesNecessaryCondition);
}

TEST_CASE("verdict is invariant under swapping and rewriting the images") {
  auto g = parse_braid("1 2", 3);
  std::mt19937 rng(37);
  std::vector<FreeHomB3> cases = {
      {g, power(g, 2)},
      {parse_braid("1", 3), parse_braid("2", 3)},
      {power(g, 3), power(g, 6)},
      {power(g, 2), power(g, -4)},
  };
  for (const auto& hom : cases) {
    auto base = theorem3_check(hom);
    auto swapped = theorem3_check({hom.image_b, hom.image_a});
    CHECK(swapped.kind == base.kind);
    for (int it = 0; it < 5; ++it) {
      auto rewritten = theorem3_check({padded(hom.image_a, rng), padded(hom.image_b, rng)});
      CHECK(rewritten.kind == base.kind);
      CHECK(rewritten.k_a == base.k_a);
      CHECK(rewritten.k_b == base.k_b);
    }
  }
}

TEST_CASE("exponent sums are twice the powers on success") {
  auto g = parse_braid("1 2", 3);
  for (long long ka : {1, 2, 4, 5})
    for (long long kb : {1, 2, 7}) {
      auto v = theorem3_check({power(g, ka), power(g, kb)});
      if (v.kind == Kind::SatisfiesNecessaryCondition) {
        CHECK(exponent_sum(power(g, ka)) == 2 * v.k_a);
        CHECK(exponent_sum(power(g, kb)) == 2 * v.k_b);
      }
    }
}
