#pragma once

#include <functional>
#include <vector>

namespace latqmc {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

/// Composite Gauss-Legendre over [a, b] with `panels` equal panels.
double integrate_composite(const std::function<double(double)>& f, double a, double b, int panels,
                           int order = 8);

/// Composite rule on [0, 1] that also splits at each listed breakpoint, so
/// integrands with kinks there are integrated panel-wise smoothly.
double integrate_unit_interval(const std::function<double(double)>& f, int panels,
                               const std::vector<double>& breakpoints = {}, int order = 8);

}  // namespace latqmc
