#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "braidmod/conformal.hpp"

using namespace braidmod;

namespace {
const double kPi = std::acos(-1.0);
const double kH3 = std::log((3.0 + std::sqrt(5.0)) / 2.0);
}  // namespace

TEST_CASE("annulus_module") {
  CHECK(annulus_module({1.0, std::exp(2 * kPi)}).value() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(annulus_module({0.0, 1.0}).is_infinite());
  CHECK(annulus_module({1.0, std::numeric_limits<double>::infinity()}).is_infinite());
  CHECK(annulus_module({1.0, 2.0}).value() ==
        doctest::Approx(std::log(2.0) / (2 * kPi)).epsilon(1e-12));
  CHECK_THROWS_AS(annulus_module({2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(annulus_module({1.0, 1.0}), std::invalid_argument);

  // scale invariance
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int it = 0; it < 50; ++it) {
    double r = u(rng), s = u(rng), c = u(rng);
    double big = r + s;
    CHECK(annulus_module({r, big}).value() ==
          doctest::Approx(annulus_module({c * r, c * big}).value()).epsilon(1e-12));
  }
}

TEST_CASE("conformal_module_of_class") {
  auto m = conformal_module_of_class(parse_braid("1 -2", 3));
  CHECK(m.value() == doctest::Approx(kPi / (2 * kH3)).epsilon(1e-12));
  CHECK(m.value() == doctest::Approx(1.6321256513).epsilon(1e-6));
  CHECK(conformal_module_of_class(parse_braid("1 2", 3)).is_infinite());
  CHECK(conformal_module_of_class(power(parse_braid("1 -2", 3), 3)).value() ==
        doctest::Approx(kPi / (2 * kH3) / 3.0).epsilon(1e-9));
  CHECK_THROWS_AS(conformal_module_of_class(parse_braid("1 2 3", 4)),
                  std::invalid_argument);
}

TEST_CASE("upper bound for n > 3 is labeled, not exact") {
  auto ub = conformal_module_upper_bound(parse_braid("1 -2 3", 4));
  CHECK((ub.is_infinite() || ub.value() > 0.0));
  CHECK(conformal_module_upper_bound(BraidWord(4)).is_infinite());
}

TEST_CASE("module_of_power") {
  auto m = ModuleValue::finite(1.6321);
  CHECK(module_of_power(m, 2).value() == doctest::Approx(0.81605).epsilon(1e-9));
  CHECK(module_of_power(ModuleValue::infinite(), 5).is_infinite());
  CHECK(module_of_power(m, -1).value() == doctest::Approx(1.6321).epsilon(1e-12));
  CHECK_THROWS_AS(module_of_power(m, 0), std::invalid_argument);
}

TEST_CASE("power rule consistency through entropy") {
  std::mt19937 rng(41);
  static const int letters[] = {1, -1, 2, -2};
  for (int it = 0; it < 100; ++it) {
    std::vector<int> ls;
    for (unsigned i = 0; i < 2 + rng() % 10; ++i) ls.push_back(letters[rng() % 4]);
    BraidWord w(3, ls);
    auto m = conformal_module_of_class(w);
    if (m.is_infinite()) continue;
    for (long long l : {-3, -2, 2, 3}) {
      CHECK(conformal_module_of_class(power(w, l)).value() ==
            doctest::Approx(m.value() / std::abs(l)).epsilon(1e-9));
    }
  }
}

TEST_CASE("lemma1_obstruction") {
  auto pa = parse_braid("1 -2", 3);
  CHECK(lemma1_obstruction(ModuleValue::finite(2.0), pa) ==
        Lemma1Verdict::AlgebroidExcluded);
  CHECK(lemma1_obstruction(ModuleValue::finite(1.0), pa) == Lemma1Verdict::NotExcluded);
  CHECK(lemma1_obstruction(ModuleValue::finite(1e6), parse_braid("1 2", 3)) ==
        Lemma1Verdict::NotExcluded);

  // monotone: once excluded, excluded at every larger module
  double threshold = conformal_module_of_class(pa).value();
  for (double m : {threshold * 1.001, threshold * 2, threshold * 100})
    CHECK(lemma1_obstruction(ModuleValue::finite(m), pa) ==
          Lemma1Verdict::AlgebroidExcluded);
  for (double m : {threshold * 0.999, threshold * 0.5, threshold})
    CHECK(lemma1_obstruction(ModuleValue::finite(m), pa) == Lemma1Verdict::NotExcluded);
}

TEST_CASE("class modules of pA 3-braids respect the global cap 6 pi / log 2") {
  const double cap = 6.0 * kPi / std::log(2.0);
  std::mt19937 rng(47);
  static const int letters[] = {1, -1, 2, -2};
  for (int it = 0; it < 200; ++it) {
    std::vector<int> ls;
    for (unsigned i = 0; i < 2 + rng() % 12; ++i) ls.push_back(letters[rng() % 4]);
    BraidWord w(3, ls);
    auto m = conformal_module_of_class(w);
    if (!m.is_infinite()) CHECK(m.value() <= cap);
  }
}
