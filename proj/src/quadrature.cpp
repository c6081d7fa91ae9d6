#include "latqmc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "latqmc/errors.hpp"

namespace latqmc {

GaussRule gauss_legendre(int n) {
  if (n < 1) throw PreconditionError("Gauss-Legendre order must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

const GaussRule& cached_rule(int order) {
  static std::mutex mutex;
  static std::map<int, GaussRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, gauss_legendre(order)).first;
  return it->second;
}

}  // namespace

double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels, int order) {
  if (panels < 1) throw PreconditionError("panel count must be >= 1");
  const GaussRule& rule = cached_rule(order);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

double integrate_unit_interval(const std::function<double(double)>& f, int panels,
                               const std::vector<double>& breakpoints, int order) {
  std::vector<double> cuts{0.0, 1.0};
  for (double b : breakpoints)
    if (b > 0.0 && b < 1.0) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double len = cuts[i + 1] - cuts[i];
    const int p = std::max(1, static_cast<int>(std::ceil(panels * len)));
    total += integrate_composite(f, cuts[i], cuts[i + 1], p, order);
  }
  return total;
}

}  // namespace latqmc
