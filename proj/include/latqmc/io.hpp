#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "latqmc/cbc.hpp"
#include "latqmc/experiments.hpp"
#include "latqmc/kernels.hpp"
#include "latqmc/lattice_points.hpp"
#include "latqmc/weights.hpp"
#include "latqmc/worst_case_error.hpp"

namespace latqmc {

using json = nlohmann::json;

/// {"form": "product"|"pod"|"general", "gamma": [...], "Gamma": [...],
///  "subsets": {"1,3": 0.5}, "s": dims}. Subset keys are 1-based.
json to_json(const WeightScheme& w);
WeightScheme weights_from_json(const json& j);

json to_json(const KernelSpec& spec);
KernelSpec kernel_spec_from_json(const json& j);

json to_json(const ErrorReport& r);
json to_json(const CbcResult& r);
json to_json(const PointSet& ps);

/// Shortest round-trip decimal form with 17 significant digits.
std::string format_real(double x);

void write_points_csv(std::ostream& os, const PointSet& ps);
PointSet read_points_csv(std::istream& is);

void write_experiment_csv(std::ostream& os, const ExperimentResult& result);

struct ExternalRow {
  std::size_t points = 0;
  double error = 0.0;
};
void write_external_csv(std::ostream& os, const std::vector<ExternalRow>& rows);

/// Experiment description for `experiment --config`; missing fields fall back
/// to the preset named by "base" (default figure1).
ExperimentConfig experiment_config_from_json(const json& j);

json read_json_file(const std::string& path);

}  // namespace latqmc
