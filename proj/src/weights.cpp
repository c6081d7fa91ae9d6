#include "latqmc/weights.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "latqmc/errors.hpp"

namespace latqmc {

namespace {

void check_nonnegative(std::span<const double> v, const char* what) {
  for (double x : v)
    if (!(x >= 0.0) || !std::isfinite(x)) throw PreconditionError(std::string(what) + " must be finite and >= 0");
}

}  // namespace

int subset_size(SubsetMask u) { return std::popcount(u); }

std::string_view form_name(WeightScheme::Form form) {
  switch (form) {
    case WeightScheme::Form::product:
      return "product";
    case WeightScheme::Form::pod:
      return "pod";
    case WeightScheme::Form::general:
      return "general";
  }
  return "unknown";
}

WeightScheme WeightScheme::product(std::vector<double> gamma) {
  if (gamma.empty()) throw PreconditionError("product weights need at least one coordinate");
  check_nonnegative(gamma, "product weights");
  WeightScheme w;
  w.form_ = Form::product;
  w.dims_ = gamma.size();
  w.gamma_ = std::move(gamma);
  return w;
}

WeightScheme WeightScheme::pod(std::vector<double> order_weights, std::vector<double> gamma) {
  if (gamma.empty()) throw PreconditionError("POD weights need at least one coordinate");
  if (order_weights.size() != gamma.size())
    throw PreconditionError("POD weights need one order weight Gamma_l per coordinate");
  check_nonnegative(gamma, "POD coordinate weights");
  check_nonnegative(order_weights, "POD order weights");
  WeightScheme w;
  w.form_ = Form::pod;
  w.dims_ = gamma.size();
  w.gamma_ = std::move(gamma);
  w.order_ = std::move(order_weights);
  return w;
}

WeightScheme WeightScheme::general(std::size_t dims, std::map<SubsetMask, double> subsets) {
  if (dims == 0) throw PreconditionError("general weights need at least one coordinate");
  if (dims > kMaxGeneralDims) throw GuardError("general weights are limited to s <= 20");
  const SubsetMask full = (SubsetMask{1} << dims) - 1;
  for (const auto& [u, g] : subsets) {
    if (u == 0) throw PreconditionError("general weights cannot set the empty subset");
    if ((u & ~full) != 0) throw PreconditionError("general weight subset exceeds the dimension");
    if (!(g >= 0.0) || !std::isfinite(g)) throw PreconditionError("general weights must be finite and >= 0");
  }
  WeightScheme w;
  w.form_ = Form::general;
  w.dims_ = dims;
  w.subsets_ = std::move(subsets);
  return w;
}

double WeightScheme::weight(SubsetMask u) const {
  if (u == 0) return 1.0;
  if (dims_ < 64 && (u >> dims_) != 0) return 0.0;
  switch (form_) {
    case Form::product:
    case Form::pod: {
      double g = form_ == Form::pod ? order_[subset_size(u) - 1] : 1.0;
      for (std::size_t j = 0; j < dims_; ++j)
        if ((u >> j) & 1) g *= gamma_[j];
      return g;
    }
    case Form::general: {
      const auto it = subsets_.find(u);
      return it == subsets_.end() ? 0.0 : it->second;
    }
  }
  return 0.0;
}

double WeightScheme::subset_sum(std::span<const double> a) const {
  if (a.size() != dims_) throw PreconditionError("subset_sum: argument length does not match weight dimension");
  switch (form_) {
    case Form::product: {
      double r = 0.0;
      for (std::size_t j = 0; j < dims_; ++j) r += gamma_[j] * a[j] * (1.0 + r);
      return r;
    }
    case Form::pod: {
      // e[l] = elementary symmetric sum of order l over gamma_j a_j.
      std::vector<double> e(dims_ + 1, 0.0);
      e[0] = 1.0;
      for (std::size_t j = 0; j < dims_; ++j) {
        const double t = gamma_[j] * a[j];
        for (std::size_t l = j + 1; l >= 1; --l) e[l] += t * e[l - 1];
      }
      double s = 0.0;
      for (std::size_t l = 1; l <= dims_; ++l) s += order_[l - 1] * e[l];
      return s;
    }
    case Form::general: {
      double s = 0.0;
      for (const auto& [u, g] : subsets_) {
        double p = g;
        for (SubsetMask m = u; m != 0; m &= m - 1) p *= a[std::countr_zero(m)];
        s += p;
      }
      return s;
    }
  }
  return 0.0;
}

WeightScheme WeightScheme::scaled_per_coordinate(double c) const {
  if (!(c >= 0.0)) throw PreconditionError("weight scale must be >= 0");
  WeightScheme w = *this;
  for (double& g : w.gamma_) g *= c;
  for (auto& [u, g] : w.subsets_) g *= std::pow(c, subset_size(u));
  return w;
}

WeightScheme WeightScheme::pow(double p) const {
  WeightScheme w = *this;
  for (double& g : w.gamma_) g = std::pow(g, p);
  for (double& g : w.order_) g = std::pow(g, p);
  for (auto& [u, g] : w.subsets_) g = std::pow(g, p);
  return w;
}

WeightScheme WeightScheme::scaled(double c) const {
  if (!(c >= 0.0)) throw PreconditionError("weight scale must be >= 0");
  WeightScheme w = *this;
  switch (form_) {
    case Form::product:
      w.form_ = Form::pod;
      w.order_.assign(dims_, c);
      break;
    case Form::pod:
      for (double& g : w.order_) g *= c;
      break;
    case Form::general:
      for (auto& [u, g] : w.subsets_) g *= c;
      break;
  }
  return w;
}

WeightScheme WeightScheme::prefix(std::size_t d) const {
  if (d == 0 || d > dims_) throw PreconditionError("weight prefix length outside 1..s");
  WeightScheme w;
  w.form_ = form_;
  w.dims_ = d;
  if (form_ == Form::general) {
    const SubsetMask full = (SubsetMask{1} << d) - 1;
    for (const auto& [u, g] : subsets_)
      if ((u & ~full) == 0) w.subsets_.emplace(u, g);
  } else {
    w.gamma_.assign(gamma_.begin(), gamma_.begin() + static_cast<std::ptrdiff_t>(d));
    if (form_ == Form::pod) w.order_.assign(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return w;
}

}  // namespace latqmc
