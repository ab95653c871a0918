#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "mset/error.hpp"
#include "mset/io.hpp"

using namespace mset;
using nlohmann::json;

TEST_CASE("euclidean scheme file") {
    json j = json::parse(R"({
      "type": "euclidean", "d": 1, "m": 1,
      "basis": [[1, 1.41421356237309], [1, -1.41421356237309]],
      "exact_form": "zsqrt2",
      "window": {"kind": "box", "half_widths": [0.8]}
    })");
    SchemeConfig cfg = parse_scheme_json(j);
    CHECK(cfg.type == SchemeConfig::Type::Euclidean);
    REQUIRE(cfg.scheme.has_value());
    CHECK(cfg.scheme->exact());
    REQUIRE(cfg.window.has_value());
    CHECK(cfg.window->measure() == doctest::Approx(1.6));
}

TEST_CASE("heisenberg and sl2 scheme files") {
    SchemeConfig h = parse_scheme_json(json::parse(
        R"({"type":"heisenberg-zsqrt2","window":{"half_widths":[0.8,0.8,0.8]}})"));
    CHECK(h.type == SchemeConfig::Type::Heisenberg);
    CHECK(h.heis_window.s3 == 0.8);

    SchemeConfig s = parse_scheme_json(json::parse(
        R"({"type":"sl2-zsqrt2","window":{"frobenius_radius":1.3},"entry_bound":12})"));
    CHECK(s.type == SchemeConfig::Type::SL2);
    CHECK(s.sl2_rho == 1.3);
    CHECK(s.sl2_entry_bound == 12);
}

TEST_CASE("malformed scheme files raise config errors") {
    CHECK_THROWS_AS(parse_scheme_json(json::parse(R"({"type":"unknown"})")), ConfigError);
    CHECK_THROWS_AS(parse_scheme_json(json::parse(R"({"type":"euclidean","d":1,"m":1})")),
                    ConfigError);
    CHECK_THROWS_AS(
        parse_scheme_json(json::parse(
            R"({"type":"euclidean","d":1,"m":1,"basis":[[1],[1]],"window":{"kind":"box","half_widths":[1]}})")),
        ConfigError);
}

TEST_CASE("patch csv round trip") {
    PointPatch p;
    p.kind = InstanceKind::Euclidean;
    p.dim = 1;
    p.region = AxisBox({0.0}, {6.0});
    p.pts = {{0.0}, {2.414213562373095}, {3.414213562373095}};

    std::string csv = patch_csv(p);
    CHECK(csv.substr(0, 3) == "x1\n");

    std::string path = "/tmp/mset_test_patch.csv";
    write_patch_csv(path, p);
    PointPatch back = read_patch_csv(path);
    REQUIRE(back.size() == p.size());
    for (size_t i = 0; i < p.size(); ++i)
        CHECK(back.pts[i][0] == p.pts[i][0]); // exact round trip
    std::remove(path.c_str());

    PointPatch heis;
    heis.kind = InstanceKind::Heisenberg;
    heis.dim = 3;
    heis.pts = {{1.0, 2.0, 3.0}};
    CHECK(patch_csv(heis).substr(0, 6) == "x,y,z\n");
}

TEST_CASE("measure json and manifest are deterministic") {
    AtomicMeasure m;
    m.cutoff = 3.0;
    m.atoms.push_back({{0.0}, 0.5656854249492381});
    m.atoms.push_back({{2.414213562373095}, 0.4192388155425117});
    json j = atomic_measure_json(m);
    CHECK(j["atoms"].size() == 2);
    CHECK(j["cutoff"] == 3.0);
    CHECK(j.dump() == atomic_measure_json(m).dump());

    SchemeConfig cfg;
    cfg.raw = "{}";
    json man = run_manifest("generate", cfg, {{"region", {0.0, 6.0}}}, 4);
    CHECK(man["tool"] == "modelset");
    CHECK(man["points"] == 4);
    CHECK(man["scheme_hash"].get<std::string>().size() == 16);
    CHECK(man.dump() == run_manifest("generate", cfg, {{"region", {0.0, 6.0}}}, 4).dump());
}

TEST_CASE("double formatting round trips") {
    for (double x : {0.0, 1.0, -0.8, 2.414213562373095, 1e-9, 12345.6789}) {
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("sigma trace csv") {
    SigmaTrace tr;
    tr.t = {1.0, 2.0};
    tr.count = {3, 5};
    tr.volume = {2.0, 4.0};
    tr.sigma = {0.5, 0.55};
    std::string csv = sigma_trace_csv(tr);
    CHECK(csv.substr(0, 22) == "t,count,volume,sigma\n1");
    CHECK(csv.find("2,5,4,0.55") != std::string::npos);
}
