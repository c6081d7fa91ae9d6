#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "latqmc/cbc.hpp"
#include "latqmc/errors.hpp"
#include "latqmc/number_theory.hpp"
#include "latqmc/worst_case_error.hpp"

using namespace latqmc;

namespace {

CbcCriterion criterion(CbcCriterion::Kind kind, std::size_t s, double decay, int alpha = 2) {
  std::vector<double> g(s);
  for (std::size_t j = 0; j < s; ++j) g[j] = std::pow(double(j + 1), -decay);
  return {kind, alpha, WeightScheme::product(g)};
}

// The full criterion of a complete vector, recomputed from scratch.
double full_criterion(const CbcCriterion& c, std::uint64_t n, const std::vector<std::uint64_t>& z) {
  return wce_sq_korobov_lattice(c.korobov_order(), c.effective_weights(z.size()), make_rule(n, z)).value;
}

// Exhaustive greedy search by direct recomputation; values within 1e-12
// (relative) of the minimum count as tied and the smallest candidate wins.
std::vector<std::uint64_t> greedy_oracle(const CbcCriterion& c, std::uint64_t n, std::size_t s) {
  std::vector<std::uint64_t> z{1};
  for (std::size_t d = 1; d < s; ++d) {
    std::vector<double> v(n, INFINITY);
    for (std::uint64_t cand = 1; cand < n; ++cand) {
      auto t = z;
      t.push_back(cand);
      v[cand] = full_criterion(c, n, t);
    }
    const double best = *std::min_element(v.begin(), v.end());
    std::uint64_t arg = 1;
    while (v[arg] > best + 1e-12 * std::fabs(best)) ++arg;
    z.push_back(arg);
  }
  return z;
}

}  // namespace

TEST_SUITE("cbc") {
  TEST_CASE("small examples") {
    const CbcCriterion tent{CbcCriterion::Kind::tent, 2, WeightScheme::product({1.0, 1.0})};
    CHECK(cbc_plain(5, 2, tent).z == std::vector<std::uint64_t>{1, 2});
    CHECK(cbc_fast(5, 2, tent).z == std::vector<std::uint64_t>{1, 2});
    CHECK(cbc_plain(13, 1, tent).z == std::vector<std::uint64_t>{1});
    CHECK(cbc_fast(2, 2, tent).z == std::vector<std::uint64_t>{1, 1});
    CHECK(cbc_plain(2, 2, tent).z == std::vector<std::uint64_t>{1, 1});
  }

  TEST_CASE("per-dimension criterion equals a full recomputation") {
    const auto c = criterion(CbcCriterion::Kind::tent, 3, 2);
    const auto r = cbc_plain(13, 3, c);
    for (std::size_t d = 1; d <= 3; ++d) {
      const std::vector<std::uint64_t> prefix(r.z.begin(), r.z.begin() + d);
      CHECK(std::fabs(r.per_dimension_error[d - 1] - full_criterion(c, 13, prefix)) <= 1e-13);
    }
  }

  TEST_CASE("greedy choice agrees with exhaustive recomputation") {
    for (auto kind : {CbcCriterion::Kind::tent, CbcCriterion::Kind::sym})
      for (std::uint64_t n : {11ull, 16ull, 23ull}) {
        const auto c = criterion(kind, 4, 2);
        CHECK(cbc_plain(n, 4, c).z == greedy_oracle(c, n, 4));
      }
  }

  TEST_CASE("fast and plain agree") {
    const auto c = criterion(CbcCriterion::Kind::sym, 4, 2);
    const auto a = cbc_plain(31, 4, c), b = cbc_fast(31, 4, c);
    CHECK(a.z == b.z);
    for (std::size_t d = 0; d < 4; ++d) CHECK(std::fabs(a.per_dimension_error[d] - b.per_dimension_error[d]) <= 1e-12);
    for (std::uint64_t n = 3; n <= 101; ++n) {
      if (!is_prime(n)) continue;
      for (auto kind : {CbcCriterion::Kind::tent, CbcCriterion::Kind::sym, CbcCriterion::Kind::plain_korobov}) {
        const auto cc = criterion(kind, 5, 1.5);
        CHECK(cbc_plain(n, 5, cc).z == cbc_fast(n, 5, cc).z);
      }
    }
  }

  TEST_CASE("POD weights") {
    const CbcCriterion c{CbcCriterion::Kind::plain_korobov, 1,
                         WeightScheme::pod({1.0, 0.5, 0.25, 0.125}, {1.0, 0.5, 0.3, 0.2})};
    const auto a = cbc_plain(29, 4, c), b = cbc_fast(29, 4, c);
    CHECK(a.z == b.z);
    CHECK(a.z == greedy_oracle(c, 29, 4));
    for (std::size_t d = 1; d <= 4; ++d) {
      const std::vector<std::uint64_t> prefix(a.z.begin(), a.z.begin() + d);
      CHECK(std::fabs(a.per_dimension_error[d - 1] - full_criterion(c, 29, prefix)) <= 1e-13);
    }
  }

  TEST_CASE("preconditions") {
    const auto c = criterion(CbcCriterion::Kind::tent, 3, 2);
    CHECK_THROWS_AS(cbc_fast(12, 3, c), PreconditionError);
    CHECK_THROWS_AS(cbc_plain(13, 4, c), PreconditionError);
    CHECK_THROWS_AS(cbc_plain(1, 2, c), PreconditionError);
    const CbcCriterion odd{CbcCriterion::Kind::sym, 3, WeightScheme::product({1.0})};
    CHECK_THROWS_AS(cbc_plain(7, 1, odd), PreconditionError);
    const CbcCriterion gen{CbcCriterion::Kind::tent, 2, WeightScheme::general(2, {{1, 1.0}})};
    CHECK_THROWS_AS(cbc_plain(7, 2, gen), PreconditionError);
    CHECK(cbc_plain(12, 3, c).prime == false);
  }
}
