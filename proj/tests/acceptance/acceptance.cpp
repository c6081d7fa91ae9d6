// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "latqmc/cbc.hpp"
#include "latqmc/experiments.hpp"
#include "latqmc/fourier_analysis.hpp"
#include "latqmc/number_theory.hpp"
#include "latqmc/worst_case_error.hpp"

using namespace latqmc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<double> uniform_weights(std::mt19937_64& rng, std::size_t s, double lo, double hi) {
  std::uniform_real_distribution<double> U(lo, hi);
  std::vector<double> g(s);
  for (auto& v : g) v = U(rng);
  return g;
}

std::vector<std::uint64_t> random_z(std::mt19937_64& rng, std::uint64_t n, std::size_t s, bool coprime) {
  std::vector<std::uint64_t> z(s);
  for (auto& v : z) {
    do {
      v = 1 + rng() % (n - 1);
    } while (coprime && gcd(v, n) != 1);
  }
  return z;
}

Outcome korobov_oracle() {
  std::mt19937_64 rng(101);
  double worst = 0;
  int cases = 0;
  for (std::uint64_t n : {2, 3, 5, 7, 13})
    for (std::size_t s = 1; s <= 3; ++s)
      for (int alpha = 1; alpha <= 3; ++alpha)
        for (int draw = 0; draw < 10; ++draw) {
          const auto w = WeightScheme::product(uniform_weights(rng, s, 0, 1));
          const auto rule = make_rule(n, random_z(rng, n, s, false));
          const double a = wce_sq_korobov_lattice(alpha, w, rule).value;
          const double b = wce_sq_quadratic_form({KernelFamily::korobov, double(alpha), w}, rank1_points(rule)).value;
          worst = std::max(worst, std::fabs(a - b) / (1e-11 * (1 + std::fabs(a))));
          ++cases;
        }
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d cases, worst |diff| / (1e-11 (1+v)) = %.3g", cases, worst);
  return {worst <= 1.0, buf};
}

Outcome golden_value() {
  const auto rule = make_rule(2, {1});
  const auto w = WeightScheme::product({1.0});
  const double ref = std::numbers::pi * std::numbers::pi / 12;
  const double a = wce_sq_korobov_lattice(1, w, rule).value;
  const double b = wce_sq_quadratic_form({KernelFamily::korobov, 1, w}, rank1_points(rule)).value;
  char buf[128];
  std::snprintf(buf, sizeof buf, "lattice path err %.2e, quadratic form err %.2e", std::fabs(a - ref), std::fabs(b - ref));
  return {std::fabs(a - ref) <= 1e-13 && std::fabs(b - ref) <= 1e-13, buf};
}

Outcome tent_chain() {
  std::mt19937_64 rng(202);
  int violations = 0;
  double tightest = INFINITY;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t n = 2 + rng() % 63;
    const std::size_t s = 1 + rng() % 3;
    const auto rule = make_rule(n, random_z(rng, n, s, false));
    const auto w = WeightScheme::product(uniform_weights(rng, s, 0, 1));
    const double exact = wce_tent_exact(w, rule).value;
    const auto mid = wce_tent_middle_term(w, rule, 1000);
    const double middle = mid.value + mid.tail_estimate.value_or(0);
    const double bound = wce_tent_bound(w, rule).value;
    const double slack = 1e-13 * bound + 1e-16;
    if (exact > middle + slack || middle > bound + slack) ++violations;
    if (bound > 0) tightest = std::min(tightest, (bound - exact) / bound);
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "50 instances, %d violations, smallest relative gap bound-exact %.3g", violations,
                tightest);
  return {violations == 0, buf};
}

Outcome sym_chain() {
  std::mt19937_64 rng(303);
  int violations = 0;
  double worst_identity = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t n = 2 + rng() % 63;
    const std::size_t s = 1 + rng() % 3;
    const int alpha = trial % 2 ? 4 : 2;
    const auto rule = make_rule(n, random_z(rng, n, s, false));
    const auto w = WeightScheme::product(uniform_weights(rng, s, 0, 1));
    const double exact = wce_sym_exact(alpha, w, rule).value;
    const double bound = wce_sym_bound(alpha, w, rule).value;
    if (exact > bound + 1e-13 * bound + 1e-16) ++violations;
    if (alpha == 2) {
      const double qf = wce_sq_quadratic_form({KernelFamily::sobolev, 2, w}, symmetrize(rank1_points(rule))).value;
      worst_identity = std::max(worst_identity, std::fabs(qf - exact));
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "50 instances, %d violations; alpha=2 multiset identity worst diff %.2e", violations,
                worst_identity);
  return {violations == 0 && worst_identity <= 1e-11, buf};
}

Outcome appendix() {
  const auto checks = verify_appendix();
  int failed = 0;
  std::string names;
  for (const auto& c : checks)
    if (!c.pass) {
      ++failed;
      names += " [" + c.name + "]";
    }
  return {failed == 0, std::to_string(checks.size()) + " checks, " + std::to_string(failed) + " failed" + names};
}

Outcome cbc_correctness() {
  int mismatches = 0, comparisons = 0, bound_violations = 0, bound_checks = 0;
  double worst_value = 0;
  const auto gamma = power_sequence(5, 2);
  const CbcCriterion crits[] = {{CbcCriterion::Kind::tent, 2, WeightScheme::product(gamma)},
                                {CbcCriterion::Kind::sym, 2, WeightScheme::product(gamma)}};
  for (const auto& c : crits)
    for (std::uint64_t n = 2; n <= 101; ++n) {
      if (!is_prime(n)) continue;
      const auto a = cbc_plain(n, 5, c), b = cbc_fast(n, 5, c);
      ++comparisons;
      if (a.z != b.z) ++mismatches;
      for (std::size_t d = 0; d < 5; ++d)
        worst_value = std::max(worst_value, std::fabs(a.per_dimension_error[d] - b.per_dimension_error[d]));
    }
  const double lambdas[] = {1.0, 0.55, 0.65, 0.75, 0.85, 0.95};
  for (const auto& c : crits) {
    const auto kind = c.kind == CbcCriterion::Kind::tent ? CorollaryKind::tent : CorollaryKind::sym;
    for (std::uint64_t n : {101, 251, 1009}) {
      const auto r = cbc_fast(n, 5, c);
      for (std::size_t d = 1; d <= 5; ++d)
        for (double lambda : lambdas) {
          const double bound = corollary_bound(kind, c.alpha, c.base_weights.prefix(d), n, lambda).value;
          ++bound_checks;
          if (r.per_dimension_error[d - 1] > bound * (1 + 1e-12)) ++bound_violations;
        }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "%d fast/plain pairs, %d vector mismatches, worst criterion diff %.2e; %d bound checks, %d violations",
                comparisons, mismatches, worst_value, bound_checks, bound_violations);
  return {mismatches == 0 && worst_value <= 1e-12 && bound_violations == 0, buf};
}

Outcome figure1() {
  auto cfg = preset("figure1");
  cfg.fibonacci_indices.clear();
  for (int m = 10; m <= 20; ++m) cfg.fibonacci_indices.push_back(m);
  const auto res = run_experiment(cfg);
  const double sym = slope_fit(res.rows, RuleKind::sym, 0, UINT64_MAX).slope;
  const double lat = slope_fit(res.rows, RuleKind::lattice, 0, UINT64_MAX).slope;
  // Envelope constant from the first three window points, checked on all of them.
  double c = 0;
  for (std::size_t i = 0; i < 3; ++i) c = std::max(c, *res.rows[i].err_tent * std::pow(double(res.rows[i].n), 1.7));
  int above = 0;
  for (const auto& r : res.rows)
    if (*r.err_tent > c * std::pow(double(r.n), -1.7)) ++above;
  char buf[200];
  std::snprintf(buf, sizeof buf, "slope sym %.3f, slope lattice %.3f, tent envelope C = %.3f with %d points above",
                sym, lat, c, above);
  return {sym >= -2.3 && sym <= -1.7 && lat >= -1.3 && lat <= -0.8 && above == 0, buf};
}

Outcome figure2() {
  std::string detail;
  bool pass = true;
  for (const char* name : {"f1_s20", "f2c1_s20", "f2c2_s20", "f1_s100"}) {
    auto cfg = preset(name);
    cfg.n_list.resize(8);  // primes nearest 2^6 .. 2^13
    const double slope = slope_fit(run_experiment(cfg).rows, RuleKind::tent, 0, UINT64_MAX).slope;
    pass = pass && slope <= -1.7;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%s %.3f", detail.empty() ? "" : ", ", name, slope);
    detail += buf;
  }
  return {pass, "tent slopes: " + detail};
}

Outcome point_structure() {
  std::mt19937_64 rng(404);
  int count_fail = 0, count_checks = 0;
  for (std::uint64_t n = 2; n <= 64; ++n)
    for (std::size_t s = 1; s <= 4; ++s)
      for (int k = 0; k < 5; ++k) {
        const auto rule = make_rule(n, random_z(rng, n, s, true));
        const std::size_t expect = n % 2 ? (std::size_t{1} << (s - 1)) * (n + 1) : (std::size_t{1} << (s - 1)) * n + 1;
        ++count_checks;
        if (distinct_count(symmetrize(rank1_points(rule))) != expect) ++count_fail;
      }
  int char_fail = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::uint64_t n = 2 + rng() % 200;
    const std::size_t s = 1 + rng() % 4;
    const auto rule = make_rule(n, random_z(rng, n, s, false));
    std::vector<std::int64_t> k(s);
    for (auto& v : k) v = static_cast<std::int64_t>(rng() % 401) - 200;
    // Move half the draws onto the dual lattice (when k_1 can absorb the
    // residue) so both outcomes are exercised.
    if (trial % 2 == 0) {
      for (std::int64_t k0 = 0; k0 < std::int64_t(n); ++k0) {
        k[0] = k0;
        if (is_dual(k, rule)) break;
      }
    }
    const double exact = character_sum(rule, k);
    const double direct = character_sum_direct(rule, k);
    if ((exact != 0.0 && exact != 1.0) || (exact == 1.0) != is_dual(k, rule) || std::fabs(exact - direct) > 1e-12)
      ++char_fail;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d distinct-count checks, %d failed; 100 character sums, %d failed", count_checks,
                count_fail, char_fail);
  return {count_fail == 0 && char_fail == 0, buf};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "Korobov oracle equivalence", 10, korobov_oracle},
      {2, "golden value pi^2/12", 1e9, golden_value},
      {3, "tent error chain", 60, tent_chain},
      {4, "symmetrized error chain", 1e9, sym_chain},
      {5, "Fourier identity suite", 30, appendix},
      {6, "CBC correctness and existence bounds", 120, cbc_correctness},
      {7, "Fibonacci convergence rates", 60, figure1},
      {8, "CBC convergence rates", 600, figure2},
      {9, "point-set structure", 1e9, point_structure},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.detail += " (over time limit)";
    }
    if (!o.pass) ++failures;
    std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
