#include "latqmc/lattice_points.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <string>

#include "latqmc/errors.hpp"
#include "latqmc/number_theory.hpp"

namespace latqmc {

namespace {
constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 32;
}

void LatticeRule::validate() const {
  if (n < 1) throw PreconditionError("lattice rule needs N >= 1");
  if (n >= kMaxPoints) throw GuardError("lattice size N must be below 2^32");
  if (z.empty()) throw PreconditionError("generating vector must be non-empty");
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] < 1 || z[j] >= n)
      throw PreconditionError("generating vector entry z_" + std::to_string(j + 1) + " = " + std::to_string(z[j]) +
                              " outside [1, N-1]");
  }
}

std::vector<std::size_t> LatticeRule::non_coprime_components() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < z.size(); ++j)
    if (std::gcd(z[j], n) != 1) out.push_back(j);
  return out;
}

LatticeRule make_rule(std::uint64_t n, std::vector<std::uint64_t> z) {
  LatticeRule rule{n, std::move(z)};
  rule.validate();
  return rule;
}

std::string_view kind_name(PointKind kind) {
  switch (kind) {
    case PointKind::plain:
      return "plain";
    case PointKind::tent:
      return "tent";
    case PointKind::symmetrized:
      return "symmetrized";
    case PointKind::external:
      return "external";
  }
  return "unknown";
}

PointSet::PointSet(std::size_t dims, PointKind kind, std::vector<double> coords)
    : dims_(dims), kind_(kind), coords_(std::move(coords)) {
  if (dims_ == 0) throw PreconditionError("point set dimension must be positive");
  if (coords_.size() % dims_ != 0) throw PreconditionError("coordinate count is not a multiple of the dimension");
  for (double c : coords_)
    if (!(c >= 0.0 && c <= 1.0)) throw PreconditionError("point coordinate outside [0,1]");
}

PointSet::PointSet(std::size_t dims, PointKind kind, std::vector<std::uint64_t> numerators,
                   std::uint64_t denominator)
    : dims_(dims), kind_(kind), numerators_(std::move(numerators)), denominator_(denominator) {
  if (dims_ == 0) throw PreconditionError("point set dimension must be positive");
  if (denominator_ == 0) throw PreconditionError("denominator must be positive");
  coords_.resize(numerators_.size());
  const double d = static_cast<double>(denominator_);
  for (std::size_t i = 0; i < numerators_.size(); ++i) {
    if (numerators_[i] > denominator_) throw PreconditionError("numerator exceeds denominator");
    coords_[i] = static_cast<double>(numerators_[i]) / d;
  }
}

std::vector<double> PointSet::column(std::size_t j) const {
  std::vector<double> col(size());
  for (std::size_t i = 0; i < col.size(); ++i) col[i] = coords_[i * dims_ + j];
  return col;
}

PointSet rank1_points(const LatticeRule& rule) {
  rule.validate();
  const std::size_t s = rule.dims();
  std::vector<std::uint64_t> num(rule.n * s);
  for (std::size_t j = 0; j < s; ++j) {
    std::uint64_t idx = 0;
    for (std::uint64_t i = 0; i < rule.n; ++i) {
      num[i * s + j] = idx;
      idx += rule.z[j];
      if (idx >= rule.n) idx -= rule.n;
    }
  }
  return PointSet(s, PointKind::plain, std::move(num), rule.n);
}

double tent(double x) { return 1.0 - std::fabs(2.0 * x - 1.0); }

PointSet tent_transform(const PointSet& ps) {
  if (ps.kind() != PointKind::plain) throw PreconditionError("tent_transform expects a plain point set");
  if (ps.exact()) {
    // phi(i/N) = 2i/N for i <= N/2 and 2(N-i)/N otherwise; numerators stay over N.
    const std::uint64_t n = ps.denominator();
    std::vector<std::uint64_t> num(ps.numerators().begin(), ps.numerators().end());
    for (auto& v : num) v = 2 * v <= n ? 2 * v : 2 * (n - v);
    return PointSet(ps.dims(), PointKind::tent, std::move(num), n);
  }
  std::vector<double> c(ps.data().begin(), ps.data().end());
  for (double& v : c) v = tent(v);
  return PointSet(ps.dims(), PointKind::tent, std::move(c));
}

PointSet symmetrize(const PointSet& ps) {
  if (ps.kind() != PointKind::plain) throw PreconditionError("symmetrize expects a plain point set");
  const std::size_t s = ps.dims();
  if (s > kMaxSymmetrizeDims) throw GuardError("symmetrization refused for s > 20 (2^s N points)");
  const std::size_t n = ps.size();
  const std::uint64_t subsets = std::uint64_t{1} << s;
  if (ps.exact()) {
    const std::uint64_t d = ps.denominator();
    const auto src = ps.numerators();
    std::vector<std::uint64_t> num;
    num.reserve(subsets * n * s);
    for (std::uint64_t u = 0; u < subsets; ++u)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < s; ++j) {
          const std::uint64_t v = src[i * s + j];
          num.push_back((u >> j) & 1 ? d - v : v);
        }
    return PointSet(s, PointKind::symmetrized, std::move(num), d);
  }
  std::vector<double> c;
  c.reserve(subsets * n * s);
  for (std::uint64_t u = 0; u < subsets; ++u)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        const double v = ps(i, j);
        c.push_back((u >> j) & 1 ? 1.0 - v : v);
      }
  return PointSet(s, PointKind::symmetrized, std::move(c));
}

namespace {

template <class T>
std::size_t count_distinct_rows(std::span<const T> flat, std::size_t s) {
  const std::size_t n = flat.size() / s;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + a * s, flat.begin() + (a + 1) * s, flat.begin() + b * s,
                                        flat.begin() + (b + 1) * s);
  };
  std::sort(order.begin(), order.end(), row_less);
  std::size_t distinct = n == 0 ? 0 : 1;
  for (std::size_t i = 1; i < n; ++i)
    if (row_less(order[i - 1], order[i])) ++distinct;
  return distinct;
}

}  // namespace

std::size_t distinct_count(const PointSet& ps) {
  if (ps.kind() != PointKind::symmetrized) throw PreconditionError("distinct_count expects a symmetrized set");
  if (ps.exact()) return count_distinct_rows(ps.numerators(), ps.dims());
  return count_distinct_rows(ps.data(), ps.dims());
}

namespace {

std::uint64_t dot_mod(std::span<const std::int64_t> k, const LatticeRule& rule) {
  if (k.size() != rule.dims()) throw PreconditionError("wavevector dimension does not match the rule");
  const auto n = static_cast<__int128>(rule.n);
  __int128 acc = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    acc = (acc + static_cast<__int128>(k[j]) * static_cast<__int128>(rule.z[j])) % n;
  }
  if (acc < 0) acc += n;
  return static_cast<std::uint64_t>(acc);
}

}  // namespace

bool is_dual(std::span<const std::int64_t> k, const LatticeRule& rule) { return dot_mod(k, rule) == 0; }

std::vector<std::vector<std::int64_t>> dual_projected(const LatticeRule& rule, std::span<const std::size_t> u,
                                                      std::int64_t kmax) {
  rule.validate();
  if (kmax < 1) throw PreconditionError("dual_projected needs kmax >= 1");
  if (u.empty()) throw PreconditionError("dual_projected needs a non-empty subset");
  for (std::size_t j : u)
    if (j >= rule.dims()) throw PreconditionError("subset index outside 0..s-1");
  const double cells = static_cast<double>(u.size()) * std::log(2.0 * static_cast<double>(kmax));
  if (cells > std::log(5e7)) throw GuardError("dual_projected scan too large ((2 kmax)^{|u|} > 5e7)");

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> k(u.size(), -kmax);
  std::vector<std::int64_t> full(rule.dims(), 0);
  for (;;) {
    for (std::size_t i = 0; i < u.size(); ++i) full[u[i]] = k[i];
    if (is_dual(full, rule)) out.push_back(k);
    // Odometer over (-kmax..-1, 1..kmax), last coordinate fastest.
    std::size_t pos = u.size();
    while (pos > 0) {
      --pos;
      k[pos] = k[pos] == -1 ? 1 : k[pos] + 1;
      if (k[pos] <= kmax) break;
      k[pos] = -kmax;
      if (pos == 0) return out;
    }
  }
}

double character_sum(const LatticeRule& rule, std::span<const std::int64_t> k) {
  return is_dual(k, rule) ? 1.0 : 0.0;
}

double character_sum_direct(const LatticeRule& rule, std::span<const std::int64_t> k) {
  const PointSet ps = rank1_points(rule);
  if (k.size() != ps.dims()) throw PreconditionError("wavevector dimension does not match the rule");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    double phase = 0.0;
    for (std::size_t j = 0; j < k.size(); ++j) phase += static_cast<double>(k[j]) * ps(i, j);
    phase -= std::floor(phase);
    acc += std::polar(1.0, 2.0 * std::numbers::pi * phase);
  }
  return acc.real() / static_cast<double>(ps.size());
}

std::uint64_t fibonacci(int m) {
  if (m < 1 || m > 93) throw GuardError("Fibonacci index outside 1..93");
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  for (int i = 3; i <= m; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

LatticeRule fibonacci_rule(int m) {
  if (m < 3) throw PreconditionError("fibonacci_rule needs m >= 3");
  if (m > 47) throw GuardError("Fibonacci lattice F_m exceeds 2^32 for m > 47");
  return make_rule(fibonacci(m), {1, fibonacci(m - 1)});
}

}  // namespace latqmc
