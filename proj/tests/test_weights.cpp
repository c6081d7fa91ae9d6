#include <random>

#include <cmath>

#include "doctest.h"
#include "latqmc/errors.hpp"
#include "latqmc/weights.hpp"

using namespace latqmc;

namespace {

// sum over nonempty u of gamma_u prod a_j by explicit subset enumeration.
double brute_subset_sum(const WeightScheme& w, const std::vector<double>& a) {
  double total = 0;
  for (SubsetMask u = 1; u < (SubsetMask{1} << a.size()); ++u) {
    double p = w.weight(u);
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((u >> j) & 1) p *= a[j];
    total += p;
  }
  return total;
}

}  // namespace

TEST_SUITE("weights") {
  TEST_CASE("subset weights of each form") {
    const auto p = WeightScheme::product({0.5, 0.25, 2.0});
    CHECK(p.weight(0b101) == 1.0);
    CHECK(p.weight(0b011) == 0.125);
    const auto pod = WeightScheme::pod({1.0, 3.0, 10.0}, {0.5, 0.25, 2.0});
    CHECK(pod.weight(0b101) == 3.0);
    CHECK(pod.weight(0b111) == 2.5);
    const auto g = WeightScheme::general(3, {{0b101, 0.5}, {0b010, 2.0}});
    CHECK(g.weight(0b101) == 0.5);
    CHECK(g.weight(0b001) == 0.0);
    CHECK(subset_size(0b1011) == 3);
  }

  TEST_CASE("subset sums agree with enumeration") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1.0, 2.0), G(0.0, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t s = 1 + rng() % 8;
      std::vector<double> gamma(s), order(s), a(s);
      for (auto& v : gamma) v = G(rng);
      for (auto& v : order) v = G(rng);
      for (auto& v : a) v = U(rng);
      std::map<SubsetMask, double> m;
      for (int k = 0; k < 6; ++k) m[1 + rng() % ((SubsetMask{1} << s) - 1)] = G(rng);
      for (const auto& w : {WeightScheme::product(gamma), WeightScheme::pod(order, gamma), WeightScheme::general(s, m)})
        CHECK(w.subset_sum(a) == doctest::Approx(brute_subset_sum(w, a)).epsilon(1e-13));
    }
  }

  TEST_CASE("transformations") {
    const auto p = WeightScheme::product({0.5, 0.25});
    CHECK(p.scaled_per_coordinate(2.0).weight(0b11) == doctest::Approx(0.5));
    CHECK(p.sqrt().weight(0b11) == doctest::Approx(std::sqrt(0.125)));
    CHECK(p.pow(2.0).weight(0b01) == doctest::Approx(0.25));
    const auto sc = p.scaled(3.0);
    CHECK(sc.form() == WeightScheme::Form::pod);
    CHECK(sc.weight(0b11) == doctest::Approx(0.375));
    const auto pod = WeightScheme::pod({2.0, 3.0}, {0.5, 0.25});
    CHECK(pod.sqrt().weight(0b11) == doctest::Approx(std::sqrt(3.0 * 0.125)));
    CHECK(pod.prefix(1).dims() == 1);
    const auto g = WeightScheme::general(3, {{0b101, 0.5}, {0b001, 2.0}});
    CHECK(g.prefix(2).subsets().size() == 1);
    CHECK(g.pow(2).weight(0b101) == doctest::Approx(0.25));
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(WeightScheme::product({}), PreconditionError);
    CHECK_THROWS_AS(WeightScheme::product({-0.1}), PreconditionError);
    CHECK_THROWS_AS(WeightScheme::pod({1.0}, {1.0, 1.0}), PreconditionError);
    CHECK_THROWS_AS(WeightScheme::general(2, {{0b100, 1.0}}), PreconditionError);
    CHECK_THROWS_AS(WeightScheme::general(21, {{1, 1.0}}), GuardError);
    const double a[] = {1.0};
    CHECK_THROWS_AS(WeightScheme::product({1.0, 1.0}).subset_sum(a), PreconditionError);
  }
}
