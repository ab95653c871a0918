// modelset: construct cut-and-project model sets, verify their Delone /
// FLC / local-topology structure, and compute auto-correlations both
// empirically (averaged sums) and from the lattice-periodization formula.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mset/autocorrelation.hpp"
#include "mset/error.hpp"
#include "mset/heisenberg.hpp"
#include "mset/io.hpp"
#include "mset/local_topology.hpp"
#include "mset/nonuniform.hpp"
#include "mset/point_pattern.hpp"
#include "mset/scheme.hpp"
#include "mset/sl2.hpp"

using nlohmann::json;
using namespace mset;

namespace {

AxisBox parse_region(const std::vector<double>& flat) {
    if (flat.empty() || flat.size() % 2 != 0)
        throw ConfigError("InvalidRegion", "--region expects lo,hi pairs per axis");
    AxisBox box;
    for (size_t i = 0; i < flat.size(); i += 2) {
        box.lo.push_back(flat[i]);
        box.hi.push_back(flat[i + 1]);
        if (!(flat[i] <= flat[i + 1]))
            throw ConfigError("InvalidRegion", "--region bounds must satisfy lo <= hi");
    }
    return box;
}

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0, stop = 0, step = 0;
    if (sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0 ||
        stop < start)
        throw ConfigError("InvalidRegion", "--t-grid expects start:stop:step with step > 0");
    std::vector<double> grid;
    for (double t = start; t <= stop + 1e-12; t += step) grid.push_back(t);
    return grid;
}

struct CommonOpts {
    std::string scheme_path;
    std::string out_path;
    std::vector<double> region;
    std::string t_grid;
    double cutoff = 6.0;
    double tol = 0.05;
    long long budget = 50'000'000;
    unsigned long long seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& opt, bool need_scheme = true) {
    auto* s = cmd->add_option("--scheme", opt.scheme_path, "scheme definition file (JSON)");
    if (need_scheme) s->required();
    cmd->add_option("--out", opt.out_path, "output artifact path");
    cmd->add_option("--region", opt.region,
                    "physical region: lo,hi per axis (group instances: single box parameter)")
        ->delimiter(',');
    cmd->add_option("--t-grid", opt.t_grid, "grid start:stop:step");
    cmd->add_option("--cutoff", opt.cutoff, "cutoff radius");
    cmd->add_option("--tol", opt.tol, "tolerance for comparisons");
    cmd->add_option("--budget", opt.budget, "enumeration budget")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "seed for sampled reports");
}

PointPatch generate_patch(const SchemeConfig& cfg, const CommonOpts& opt, json& params) {
    switch (cfg.type) {
    case SchemeConfig::Type::Euclidean: {
        if (!cfg.window) throw ConfigError("InvalidWindow", "scheme file lacks a window");
        AxisBox region = parse_region(opt.region);
        params["region"] = opt.region;
        return enumerate_model_set(*cfg.scheme, *cfg.window, region, opt.budget);
    }
    case SchemeConfig::Type::Heisenberg: {
        if (opt.region.size() != 1)
            throw ConfigError("InvalidRegion",
                              "Heisenberg generation takes --region T (box F_T)");
        params["T"] = opt.region[0];
        return heis_enumerate(cfg.heis_window, opt.region[0], opt.budget);
    }
    case SchemeConfig::Type::SL2: {
        if (opt.region.size() != 1)
            throw ConfigError("InvalidRegion",
                              "SL2 generation takes --region t (displacement bound)");
        params["t"] = opt.region[0];
        params["entry_bound"] = cfg.sl2_entry_bound;
        SL2EnumResult res =
            sl2_enumerate(cfg.sl2_rho, opt.region[0], cfg.sl2_entry_bound, opt.budget);
        params["rho_used"] = res.rho_used;
        if (res.boundary_box_hit) params["warning"] = "IncompleteSearch";
        return res.patch;
    }
    }
    throw ConfigError("InvalidScheme", "unsupported scheme type");
}

int cmd_generate(const CommonOpts& opt) {
    SchemeConfig cfg = load_scheme_file(opt.scheme_path);
    if (opt.out_path.empty())
        throw ConfigError("InvalidPath", "generate requires --out");
    json params;
    PointPatch patch = generate_patch(cfg, opt, params);
    write_patch_csv(opt.out_path, patch);
    json manifest = run_manifest("generate", cfg, params, (long long)patch.size());
    write_text_file(opt.out_path + ".manifest.json", manifest.dump(2) + "\n");
    std::cout << json{{"points", patch.size()}, {"out", opt.out_path}}.dump() << "\n";
    return 0;
}

int cmd_verify(const std::string& check, const CommonOpts& opt, double r_param, double R_param,
               double radius, double search_radius, double kprime_radius, int samples) {
    SchemeConfig cfg = load_scheme_file(opt.scheme_path);
    json report;
    report["check"] = check;
    json params;

    if (check == "regularity") {
        if (cfg.type != SchemeConfig::Type::Euclidean)
            throw ConfigError("InvalidScheme", "regularity check needs a Euclidean scheme");
        RegularityResult res =
            check_gamma_regular(*cfg.scheme, *cfg.window, search_radius, 1e-9, opt.budget);
        params["search_radius"] = search_radius;
        report["verdict"] = res.verdict == RegularityVerdict::Regular       ? "Regular"
                            : res.verdict == RegularityVerdict::BoundaryHit ? "BoundaryHit"
                                                                            : "Inconclusive";
        if (!res.witness_phys.empty())
            report["witness"] =
                json{{"phys", res.witness_phys}, {"internal", res.witness_internal}};
        report["min_boundary_distance"] = res.min_boundary_distance;
        report["exact"] = res.exact;
    } else if (check == "delone") {
        json dummy;
        PointPatch patch = generate_patch(cfg, opt, dummy);
        params = dummy;
        if (patch.size() < 2)
            throw ConfigError("TooFewPoints", "delone check needs at least two points");
        double sep = min_separation(patch);
        report["min_separation"] = sep;
        double margin = std::max(2.0 * R_param, patch.region.min_extent() / 20.0);
        double cover = covering_radius(patch, margin);
        report["covering_radius"] = cover;
        bool ud = r_param <= 0 || sep >= r_param;
        bool rd = R_param <= 0 || cover <= R_param;
        report["verdict"] = ud && rd ? "Delone_Evidence" : "Violation";
        params["r"] = r_param;
        params["R"] = R_param;
    } else if (check == "flc") {
        json dummy;
        PointPatch patch = generate_patch(cfg, opt, dummy);
        params = dummy;
        FlcResult res = flc_check(patch, radius);
        params["radius"] = radius;
        report["difference_count"] = res.difference_count;
        report["verdict"] = res.evidence ? "FLC_Evidence" : "Violation";
        if (res.witness)
            report["witness"] =
                json{{"first", res.witness->first}, {"second", res.witness->second}};
    } else if (check == "local-topology") {
        if (cfg.type != SchemeConfig::Type::Euclidean)
            throw ConfigError("InvalidScheme", "local-topology check needs a Euclidean scheme");
        AxisBox k = parse_region(opt.region);
        FlcOrbitReport rep = flc_orbit_criterion(*cfg.scheme, *cfg.window, k, kprime_radius,
                                                 samples, opt.seed, 50.0, opt.budget);
        params["kprime_radius"] = kprime_radius;
        params["samples"] = samples;
        params["seed"] = opt.seed;
        report["success_fraction"] = rep.success_fraction;
        report["verdict"] = rep.success_fraction == 1.0 ? "OrbitCriterion_Holds"
                                                        : "OrbitCriterion_Failures";
    } else {
        throw ConfigError("InvalidScheme", "unknown check '" + check + "'");
    }
    report["parameters"] = params;
    std::cout << report.dump() << "\n";
    return 0;
}

TestFunction cli_function(const std::vector<double>& center, double width,
                          const std::string& profile, InstanceKind kind) {
    if (profile == "tent") return TestFunction::tent(center, width, kind);
    if (profile == "gauss") return TestFunction::trunc_gauss(center, width, kind);
    throw ConfigError("InvalidWindow", "profile must be tent or gauss");
}

int cmd_autocorr(const std::string& mode, const CommonOpts& opt,
                 const std::vector<double>& center, const std::vector<double>& center2,
                 double width, const std::string& profile, int n_atoms, int n_fns) {
    SchemeConfig cfg = load_scheme_file(opt.scheme_path);

    if (mode == "theoretical") {
        if (cfg.type != SchemeConfig::Type::Euclidean)
            throw ConfigError("InvalidScheme",
                              "closed-form atoms are abelian-only; non-abelian instances use "
                              "empirical modes");
        AtomicMeasure m =
            theoretical_autocorrelation(*cfg.scheme, *cfg.window, opt.cutoff, opt.budget);
        std::string payload = atomic_measure_json(m).dump(2) + "\n";
        if (!opt.out_path.empty()) write_text_file(opt.out_path, payload);
        else std::cout << payload;
        return 0;
    }
    if (mode == "empirical") {
        if (cfg.type != SchemeConfig::Type::Euclidean)
            throw ConfigError("InvalidScheme", "empirical sigma traces are implemented for the "
                                               "Euclidean scheme; use sl2-ratio for SL2");
        TestFunction f = cli_function(center.empty() ? std::vector<double>{0.0} : center, width,
                                      profile, InstanceKind::Euclidean);
        SigmaTrace tr =
            sigma_trace(*cfg.scheme, *cfg.window, f, parse_grid(opt.t_grid), opt.budget);
        std::string payload = sigma_trace_csv(tr);
        if (!opt.out_path.empty()) write_text_file(opt.out_path, payload);
        else std::cout << payload;
        return 0;
    }
    if (mode == "compare") {
        if (cfg.type != SchemeConfig::Type::Euclidean)
            throw ConfigError("InvalidScheme", "compare mode needs the Euclidean scheme");
        std::vector<double> grid = parse_grid(opt.t_grid);
        AtomicMeasure m =
            theoretical_autocorrelation(*cfg.scheme, *cfg.window, opt.cutoff, opt.budget);
        std::vector<AtomicMeasure::Atom> atoms = m.atoms;
        std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) {
            double ma = std::abs(a.loc[0]), mb = std::abs(b.loc[0]);
            if (ma != mb) return ma < mb;
            return a.loc[0] < b.loc[0];
        });
        if ((int)atoms.size() > n_atoms) atoms.resize(n_atoms);
        json rows = json::array();
        bool pass = true;
        double worst = 0.0;
        for (auto& atom : atoms) {
            TestFunction f = TestFunction::tent({atom.loc[0]}, width);
            SigmaTrace tr = sigma_trace(*cfg.scheme, *cfg.window, f, grid, opt.budget);
            double sigma = tr.sigma.back();
            double rel = std::abs(sigma - atom.weight) / atom.weight;
            worst = std::max(worst, rel);
            pass = pass && rel <= opt.tol;
            rows.push_back({{"loc", atom.loc[0]},
                            {"weight", atom.weight},
                            {"sigma", sigma},
                            {"rel_error", rel}});
        }
        json report{{"atoms", rows},
                    {"worst_rel_error", worst},
                    {"tol", opt.tol},
                    {"verdict", pass ? "pass" : "fail"}};
        std::cout << report.dump(2) << "\n";
        return pass ? 0 : 1;
    }
    if (mode == "gram") {
        if (cfg.type != SchemeConfig::Type::Euclidean)
            throw ConfigError("InvalidScheme", "gram mode needs the Euclidean scheme");
        AtomicMeasure m =
            theoretical_autocorrelation(*cfg.scheme, *cfg.window, opt.cutoff, opt.budget);
        std::vector<AtomicMeasure::Atom> atoms = m.atoms;
        std::sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) {
            return std::abs(a.loc[0]) < std::abs(b.loc[0]);
        });
        std::vector<TestFunction> fs;
        for (int i = 0; i < n_fns && i < (int)atoms.size(); ++i)
            fs.push_back(TestFunction::tent({atoms[i].loc[0]}, width));
        GramReport rep = positive_definiteness_gram(m, fs);
        json report{{"min_eigenvalue", rep.min_eigenvalue},
                    {"trace", rep.trace},
                    {"functions", fs.size()},
                    {"verdict", rep.positive ? "positive" : "negative"}};
        std::cout << report.dump() << "\n";
        return rep.positive ? 0 : 1;
    }
    if (mode == "sl2-ratio") {
        if (cfg.type != SchemeConfig::Type::SL2)
            throw ConfigError("InvalidScheme", "sl2-ratio mode needs the SL2 scheme");
        std::vector<double> c1 = center.empty() ? std::vector<double>{1, 1, 0, 1} : center;
        std::vector<double> c2 = center2.empty() ? std::vector<double>{1, 0, 0, 1} : center2;
        if (c1.size() != 4 || c2.size() != 4)
            throw ConfigError("InvalidRegion", "SL2 centers take four entries a,b,c,d");
        TestFunction f1 = cli_function(c1, width, profile, InstanceKind::SL2);
        TestFunction f2 = cli_function(c2, width, profile, InstanceKind::SL2);
        RatioTrace tr = sl2_sigma_ratio(f1, f2, parse_grid(opt.t_grid), cfg.sl2_rho,
                                        cfg.sl2_entry_bound, opt.budget);
        std::string payload = ratio_trace_csv(tr);
        if (!opt.out_path.empty()) write_text_file(opt.out_path, payload);
        else std::cout << payload;
        return 0;
    }
    throw ConfigError("InvalidScheme", "unknown autocorr mode '" + mode + "'");
}

int cmd_nonuniform(const std::vector<int>& primes) {
    FiniteScheme scheme(primes);
    auto orbits = scheme.orbit_classify();
    json rows = json::array();
    for (auto& o : orbits) {
        json label = json::array();
        for (int p : o.label) label.push_back(p);
        rows.push_back({{"I", label}, {"size", o.size}, {"stabilizer", o.stabilizer}});
    }
    json report{{"primes", scheme.primes()},
                {"orbits", rows},
                {"orbit_count", scheme.noncocompact_witness()},
                {"covolume_sum", scheme.covolume_sum().str()},
                {"group_order", scheme.group_order()}};
    std::cout << report.dump() << "\n";
    return 0;
}

int cmd_hull(const std::string& op, const CommonOpts& opt, const std::vector<double>& v_box,
             const std::vector<double>& k_box, double shift, double eps, double kprime_radius,
             int samples, bool run_oracle) {
    SchemeConfig cfg = load_scheme_file(opt.scheme_path);
    if (cfg.type != SchemeConfig::Type::Euclidean)
        throw ConfigError("InvalidScheme", "hull operations work on Euclidean schemes");
    const EuclideanScheme& s = *cfg.scheme;
    const Window& w = *cfg.window;
    json report;
    report["op"] = op;
    json inputs;

    if (op == "hit" || op == "miss") {
        AxisBox probe = parse_region(op == "hit" ? v_box : k_box);
        PointPatch patch = enumerate_model_set(s, w, probe.inflated(1.0), opt.budget);
        bool res = op == "hit" ? chabauty_hit(patch, probe) : chabauty_miss(patch, probe);
        inputs["box"] = op == "hit" ? v_box : k_box;
        report["verdict"] = res;
    } else if (op == "rubber" || op == "entourage") {
        AxisBox k = parse_region(k_box);
        PointPatch q = enumerate_model_set(s, w, k.inflated(eps + 1.0), opt.budget);
        // shifted copy of the model set
        PointPatch p;
        p.kind = InstanceKind::Euclidean;
        p.dim = s.d();
        p.region = k.inflated(eps + 0.5);
        std::vector<double> neg{-shift};
        PointPatch base = enumerate_model_set(s, w, p.region.translated(neg), opt.budget);
        for (auto& pt : base.pts) p.pts.push_back({pt[0] + shift});
        p.canonicalize();
        inputs["shift"] = shift;
        inputs["eps"] = eps;
        inputs["k"] = k_box;
        if (op == "rubber") {
            report["verdict"] = local_rubber_member(p, q, k, eps);
        } else {
            EntourageDecision dec = local_entourage_member(p, q, k, eps);
            report["verdict"] = dec.yes;
            if (dec.yes) report["witness_t"] = dec.witness_t;
            if (run_oracle) {
                EntourageDecision oracle = entourage_oracle_grid(p, q, k, eps);
                report["oracle_agrees"] = oracle.yes == dec.yes;
            }
        }
    } else if (op == "flc-orbit") {
        AxisBox k = parse_region(k_box);
        FlcOrbitReport rep =
            flc_orbit_criterion(s, w, k, kprime_radius, samples, opt.seed, 50.0, opt.budget);
        inputs["kprime_radius"] = kprime_radius;
        inputs["samples"] = samples;
        inputs["seed"] = opt.seed;
        report["success_fraction"] = rep.success_fraction;
        report["verdict"] = rep.success_fraction == 1.0;
    } else {
        throw ConfigError("InvalidScheme", "unknown hull op '" + op + "'");
    }
    report["inputs"] = inputs;
    std::cout << report.dump() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cut-and-project model sets: generation, verification, auto-correlation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonOpts gen_opt, ver_opt, ac_opt, hull_opt;

    auto* gen = app.add_subcommand("generate", "enumerate a model-set patch to CSV");
    add_common(gen, gen_opt);

    auto* ver = app.add_subcommand("verify", "structure checks: delone, flc, regularity, "
                                             "local-topology");
    std::string check;
    double r_param = 0, R_param = 0, radius = 5.0, search_radius = 10.0;
    double ver_kprime = 40.0;
    int ver_samples = 40;
    ver->add_option("--check", check, "delone|flc|regularity|local-topology")->required();
    ver->add_option("--r", r_param, "uniform discreteness radius");
    ver->add_option("--R", R_param, "relative denseness radius");
    ver->add_option("--radius", radius, "difference-set radius for flc");
    ver->add_option("--search-radius", search_radius, "physical search radius for regularity");
    ver->add_option("--kprime-radius", ver_kprime, "translation search radius");
    ver->add_option("--samples", ver_samples, "sample count for local-topology");
    add_common(ver, ver_opt);

    auto* ac = app.add_subcommand("autocorr", "auto-correlation: empirical, theoretical, "
                                              "compare, gram, sl2-ratio");
    std::string mode, profile = "tent";
    std::vector<double> center, center2;
    double width = 0.4;
    int n_atoms = 10, n_fns = 8;
    ac->add_option("--mode", mode, "empirical|theoretical|compare|gram|sl2-ratio")->required();
    ac->add_option("--center", center, "test function center")->delimiter(',');
    ac->add_option("--center2", center2, "denominator function center (sl2-ratio)")
        ->delimiter(',');
    ac->add_option("--width", width, "test function width");
    ac->add_option("--profile", profile, "tent|gauss");
    ac->add_option("--n-atoms", n_atoms, "atoms compared in compare mode");
    ac->add_option("--n-fns", n_fns, "functions in the gram check");
    add_common(ac, ac_opt);

    auto* nu = app.add_subcommand("nonuniform", "finite compact-by-abelian example: orbits, "
                                                "stabilizers, covolume sum");
    std::vector<int> primes;
    nu->add_option("--primes", primes, "prime set, e.g. 3,5")->delimiter(',');

    auto* hull = app.add_subcommand("hull", "local-topology operations on scheme patches");
    std::string op;
    std::vector<double> v_box, k_box;
    double shift = 0.0, eps = 0.5, hull_kprime = 40.0;
    int hull_samples = 40;
    bool run_oracle = false;
    hull->add_option("--op", op, "hit|miss|rubber|entourage|flc-orbit")->required();
    hull->add_option("--v", v_box, "open box for hit")->delimiter(',');
    hull->add_option("--k", k_box, "compact box")->delimiter(',');
    hull->add_option("--shift", shift, "translation applied to the comparison patch");
    hull->add_option("--eps", eps, "translation neighbourhood radius");
    hull->add_option("--kprime-radius", hull_kprime, "translation search radius");
    hull->add_option("--samples", hull_samples, "sample count");
    hull->add_flag("--oracle", run_oracle, "cross-check with the grid oracle");
    add_common(hull, hull_opt);

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return cmd_generate(gen_opt);
        if (ver->parsed())
            return cmd_verify(check, ver_opt, r_param, R_param, radius, search_radius,
                              ver_kprime, ver_samples);
        if (ac->parsed())
            return cmd_autocorr(mode, ac_opt, center, center2, width, profile, n_atoms, n_fns);
        if (nu->parsed()) return cmd_nonuniform(primes);
        if (hull->parsed())
            return cmd_hull(op, hull_opt, v_box, k_box, shift, eps, hull_kprime, hull_samples,
                            run_oracle);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        json err{{"error", "InvalidArguments"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        json err{{"error", e.code()}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        json err{{"error", "Internal"}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
