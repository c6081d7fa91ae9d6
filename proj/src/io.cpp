#include "latqmc/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "latqmc/errors.hpp"

namespace latqmc {

namespace {

std::string subset_key(SubsetMask u) {
  std::string key;
  for (int j = 0; j < 64; ++j) {
    if (!((u >> j) & 1)) continue;
    if (!key.empty()) key += ',';
    key += std::to_string(j + 1);
  }
  return key;
}

SubsetMask parse_subset_key(const std::string& key) {
  SubsetMask u = 0;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long j = 0;
    try {
      j = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw PreconditionError("bad subset key '" + key + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size() || j < 1 || j > 64) throw PreconditionError("bad subset key '" + key + "'");
    u |= SubsetMask{1} << (j - 1);
  }
  if (u == 0) throw PreconditionError("empty subset key");
  return u;
}

std::vector<double> real_list(const json& j, const char* field) {
  if (!j.contains(field)) throw PreconditionError(std::string("weights JSON lacks \"") + field + "\"");
  if (!j.at(field).is_array()) throw PreconditionError(std::string("\"") + field + "\" must be an array");
  std::vector<double> v;
  for (const auto& x : j.at(field)) {
    if (!x.is_number()) throw PreconditionError(std::string("\"") + field + "\" must hold numbers");
    v.push_back(x.get<double>());
  }
  return v;
}

}  // namespace

json to_json(const WeightScheme& w) {
  json j;
  j["form"] = form_name(w.form());
  j["s"] = w.dims();
  switch (w.form()) {
    case WeightScheme::Form::product:
      j["gamma"] = std::vector<double>(w.gamma().begin(), w.gamma().end());
      break;
    case WeightScheme::Form::pod:
      j["gamma"] = std::vector<double>(w.gamma().begin(), w.gamma().end());
      j["Gamma"] = std::vector<double>(w.order_weights().begin(), w.order_weights().end());
      break;
    case WeightScheme::Form::general: {
      json subsets = json::object();
      for (const auto& [u, g] : w.subsets()) subsets[subset_key(u)] = g;
      j["subsets"] = subsets;
      break;
    }
  }
  return j;
}

WeightScheme weights_from_json(const json& j) {
  if (!j.is_object() || !j.contains("form")) throw PreconditionError("weights JSON needs a \"form\" field");
  const std::string form = j.at("form").get<std::string>();
  if (form == "product") return WeightScheme::product(real_list(j, "gamma"));
  if (form == "pod") return WeightScheme::pod(real_list(j, "Gamma"), real_list(j, "gamma"));
  if (form == "general") {
    if (!j.contains("subsets") || !j.at("subsets").is_object())
      throw PreconditionError("general weights need a \"subsets\" object");
    std::map<SubsetMask, double> subsets;
    std::size_t dims = 0;
    for (const auto& [key, value] : j.at("subsets").items()) {
      const SubsetMask u = parse_subset_key(key);
      if (!value.is_number()) throw PreconditionError("subset weight must be a number");
      subsets[u] = value.get<double>();
      dims = std::max<std::size_t>(dims, 64 - static_cast<std::size_t>(__builtin_clzll(u)));
    }
    if (j.contains("s")) {
      const auto s = j.at("s").get<std::size_t>();
      if (s < dims) throw PreconditionError("subset refers to a coordinate beyond s");
      dims = s;
    }
    return WeightScheme::general(dims, std::move(subsets));
  }
  throw PreconditionError("unknown weight form '" + form + "'");
}

json to_json(const KernelSpec& spec) {
  return {{"family", family_name(spec.family)},
          {"alpha", spec.alpha},
          {"kmax", spec.series_kmax},
          {"weights", to_json(spec.weights)}};
}

KernelSpec kernel_spec_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("kernel JSON must be an object");
  KernelSpec spec;
  spec.family = parse_family(j.at("family").get<std::string>());
  spec.alpha = j.at("alpha").get<double>();
  if (j.contains("kmax")) spec.series_kmax = j.at("kmax").get<std::int64_t>();
  spec.weights = weights_from_json(j.at("weights"));
  spec.validate();
  return spec;
}

json to_json(const ErrorReport& r) {
  json j;
  j["value"] = r.value;
  j["kind"] = report_kind_name(r.kind);
  j["truncation_kmax"] = r.truncation_kmax ? json(*r.truncation_kmax) : json(nullptr);
  j["tail_estimate"] = r.tail_estimate ? json(*r.tail_estimate) : json(nullptr);
  j["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
  j["clamped"] = r.clamped;
  return j;
}

json to_json(const CbcResult& r) {
  return {{"z", r.z},
          {"criterion_per_dim", r.per_dimension_error},
          {"n", r.n},
          {"prime", r.prime},
          {"elapsed_seconds", r.elapsed_seconds}};
}

json to_json(const PointSet& ps) {
  json points = json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto p = ps.point(i);
    points.push_back(std::vector<double>(p.begin(), p.end()));
  }
  return {{"n", ps.size()}, {"s", ps.dims()}, {"kind", kind_name(ps.kind())}, {"points", points}};
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_points_csv(std::ostream& os, const PointSet& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.dims(); ++j) {
      if (j) os << ',';
      os << format_real(ps(i, j));
    }
    os << '\n';
  }
}

PointSet read_points_csv(std::istream& is) {
  std::vector<double> coords;
  std::size_t dims = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t count = 0;
    bool header = false;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t pos = 0;
        row.push_back(std::stod(cell, &pos));
      } catch (const std::exception&) {
        header = true;
        break;
      }
      ++count;
    }
    if (header) {
      if (coords.empty()) continue;  // a header line is tolerated before the data
      throw PreconditionError("non-numeric value in point CSV at line " + std::to_string(lineno));
    }
    if (dims == 0) dims = count;
    if (count != dims) throw PreconditionError("ragged point CSV at line " + std::to_string(lineno));
    coords.insert(coords.end(), row.begin(), row.end());
  }
  if (dims == 0) throw PreconditionError("point CSV holds no points");
  return PointSet(dims, PointKind::external, std::move(coords));
}

void write_experiment_csv(std::ostream& os, const ExperimentResult& result) {
  os << "N,points_used,err_lattice,err_tent,err_sym,parity\n";
  auto cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
  for (const auto& r : result.rows) {
    os << r.n << ',' << r.points_used << ',' << cell(r.err_lattice) << ',' << cell(r.err_tent) << ','
       << cell(r.err_sym) << ',' << (r.n % 2 ? "odd" : "even") << '\n';
  }
}

void write_external_csv(std::ostream& os, const std::vector<ExternalRow>& rows) {
  os << "points,err_external\n";
  for (const auto& r : rows) os << r.points << ',' << format_real(r.error) << '\n';
}

ExperimentConfig experiment_config_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("experiment config must be a JSON object");
  ExperimentConfig cfg = preset(j.value("base", std::string("figure1")));
  cfg.name = j.value("name", std::string("custom"));
  if (j.contains("construction")) {
    const auto c = j.at("construction").get<std::string>();
    if (c == "fibonacci")
      cfg.construction = Construction::fibonacci;
    else if (c == "cbc_tent")
      cfg.construction = Construction::cbc_tent;
    else
      throw PreconditionError("unknown construction '" + c + "'");
  }
  if (j.contains("fibonacci_indices")) cfg.fibonacci_indices = j.at("fibonacci_indices").get<std::vector<int>>();
  if (j.contains("n_list")) cfg.n_list = j.at("n_list").get<std::vector<std::uint64_t>>();
  if (j.contains("integrand")) {
    const auto& f = j.at("integrand");
    cfg.integrand.kind = parse_integrand(f.at("name").get<std::string>());
    cfg.integrand.c = f.value("c", 1.0);
    const std::size_t s = f.value("s", std::size_t{0});
    if (f.contains("omega"))
      cfg.integrand.omega = f.at("omega").get<std::vector<double>>();
    else if (f.contains("omega_decay"))
      cfg.integrand.omega = power_sequence(s, f.at("omega_decay").get<double>());
    else if (cfg.integrand.kind != IntegrandKind::bivar)
      throw PreconditionError("integrand needs \"omega\" or \"omega_decay\" with \"s\"");
  }
  if (j.contains("rules")) {
    cfg.rules.clear();
    for (const auto& r : j.at("rules")) {
      const auto name = r.get<std::string>();
      if (name == "lattice")
        cfg.rules.push_back(RuleKind::lattice);
      else if (name == "tent")
        cfg.rules.push_back(RuleKind::tent);
      else if (name == "sym")
        cfg.rules.push_back(RuleKind::sym);
      else
        throw PreconditionError("unknown rule '" + name + "'");
    }
  }
  if (j.contains("cbc_gamma")) {
    cfg.cbc_gamma = j.at("cbc_gamma").get<std::vector<double>>();
  } else if (j.contains("cbc_gamma_decay")) {
    cfg.cbc_gamma = power_sequence(cfg.integrand.dims(), j.at("cbc_gamma_decay").get<double>(),
                                   1.0 / (4.0 * kTentConstant));
  }
  cfg.validate();
  return cfg;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace latqmc
