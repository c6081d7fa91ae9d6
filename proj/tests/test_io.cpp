#include <sstream>

#include <cmath>

#include "doctest.h"
#include "latqmc/errors.hpp"
#include "latqmc/io.hpp"

using namespace latqmc;

TEST_SUITE("io") {
  TEST_CASE("weights round trip") {
    const auto p = weights_from_json(json::parse(R"({"form":"product","gamma":[1,0.5]})"));
    CHECK(p.form() == WeightScheme::Form::product);
    CHECK(p.weight(3) == 0.5);
    const auto pod = weights_from_json(json::parse(R"({"form":"pod","gamma":[1,0.5],"Gamma":[2,3]})"));
    CHECK(pod.weight(3) == 1.5);
    const auto g = weights_from_json(json::parse(R"({"form":"general","subsets":{"1,3":0.5,"2":0.25}})"));
    CHECK(g.dims() == 3);
    CHECK(g.weight(0b101) == 0.5);
    CHECK(g.weight(0b010) == 0.25);
    CHECK(to_json(g)["subsets"]["1,3"] == 0.5);
    for (const auto& w : {p, pod, g}) {
      const auto back = weights_from_json(to_json(w));
      for (SubsetMask u = 1; u < (SubsetMask{1} << w.dims()); ++u) CHECK(back.weight(u) == w.weight(u));
    }
    CHECK_THROWS_AS(weights_from_json(json::parse(R"({"form":"odd"})")), PreconditionError);
    CHECK_THROWS_AS(weights_from_json(json::parse(R"({"form":"general","subsets":{"0":1}})")), PreconditionError);
    CHECK_THROWS_AS(weights_from_json(json::parse(R"({"form":"product"})")), PreconditionError);
  }

  TEST_CASE("kernel spec round trip") {
    KernelSpec spec{KernelFamily::kor_plus_cos, 1.5, WeightScheme::product({0.3}), 500};
    const auto back = kernel_spec_from_json(to_json(spec));
    CHECK(back.family == spec.family);
    CHECK(back.alpha == 1.5);
    CHECK(back.series_kmax == 500);
    CHECK(back.weights.weight(1) == 0.3);
  }

  TEST_CASE("reports") {
    ErrorReport r;
    r.value = 0.25;
    r.kind = ReportKind::dual_series_truncated;
    r.truncation_kmax = 100;
    r.tail_estimate = 1e-5;
    const auto j = to_json(r);
    CHECK(j["kind"] == "dual_series_truncated");
    CHECK(j["truncation_kmax"] == 100);
    CHECK(j["lambda"].is_null());
    CbcResult c{7, true, {1, 3}, {0.1, 0.2}, 0.0};
    const auto jc = to_json(c);
    CHECK(jc["z"] == json::array({1, 3}));
    CHECK(jc["criterion_per_dim"].size() == 2);
    CHECK(jc["prime"] == true);
  }

  TEST_CASE("point sets") {
    const auto ps = rank1_points(make_rule(3, {1, 2}));
    const auto j = to_json(ps);
    CHECK(j["n"] == 3);
    CHECK(j["s"] == 2);
    CHECK(j["kind"] == "plain");
    CHECK(j["points"][1][1] == doctest::Approx(2.0 / 3));
    std::stringstream ss;
    write_points_csv(ss, ps);
    CHECK(ss.str() == "0,0\n0.33333333333333331,0.66666666666666663\n0.66666666666666663,0.33333333333333331\n");
    const auto back = read_points_csv(ss);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 2; ++k) CHECK(back(i, k) == ps(i, k));
    std::stringstream header("x,y\n0.1,0.2\n0.3,0.4\n");
    CHECK(read_points_csv(header).size() == 2);
    std::stringstream ragged("0.1,0.2\n0.3\n");
    CHECK_THROWS_AS(read_points_csv(ragged), PreconditionError);
    std::stringstream outside("0.1,1.2\n");
    CHECK_THROWS_AS(read_points_csv(outside), PreconditionError);
  }

  TEST_CASE("experiment table") {
    ExperimentResult r;
    ConvergenceRow row;
    row.n = 13;
    row.points_used = 13;
    row.err_tent = 0.5;
    r.rows.push_back(row);
    std::stringstream ss;
    write_experiment_csv(ss, r);
    CHECK(ss.str() == "N,points_used,err_lattice,err_tent,err_sym,parity\n13,13,,0.5,,odd\n");
  }

  TEST_CASE("experiment config") {
    const auto cfg = experiment_config_from_json(json::parse(
        R"({"base":"f1_s20","name":"mine","n_list":[31,61],"integrand":{"name":"f2","c":1,"s":5,"omega_decay":2},
            "cbc_gamma_decay":2})"));
    CHECK(cfg.name == "mine");
    CHECK(cfg.construction == Construction::cbc_tent);
    CHECK(cfg.integrand.dims() == 5);
    CHECK(cfg.cbc_gamma.size() == 5);
    CHECK_THROWS_AS(experiment_config_from_json(json::parse(R"({"rules":["sideways"]})")), PreconditionError);
  }
}
