#include "mset/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "mset/error.hpp"

namespace mset {

using nlohmann::json;

Window parse_window_json(const json& j) {
    if (!j.is_object()) throw ConfigError("InvalidWindow", "window must be an object");
    std::string kind = j.value("kind", j.contains("half_widths") ? "box" : "");
    if (kind == "box") {
        std::vector<double> hw = j.at("half_widths").get<std::vector<double>>();
        std::vector<double> center;
        if (j.contains("center")) center = j.at("center").get<std::vector<double>>();
        return Window::box(std::move(hw), std::move(center));
    }
    if (kind == "ball") {
        return Window::ball(j.at("center").get<std::vector<double>>(),
                            j.at("radius").get<double>());
    }
    if (kind == "intervals") {
        std::vector<std::pair<double, double>> ivs;
        for (auto& e : j.at("intervals"))
            ivs.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        return Window::intervals(std::move(ivs));
    }
    throw ConfigError("InvalidWindow", "unknown window kind '" + kind + "'");
}

json window_json(const Window& w) {
    json j;
    switch (w.kind()) {
    case Window::Kind::Box:
        j["kind"] = "box";
        j["half_widths"] = w.half_widths();
        j["center"] = w.center();
        break;
    case Window::Kind::Ball:
        j["kind"] = "ball";
        j["center"] = w.center();
        j["radius"] = w.radius();
        break;
    case Window::Kind::Intervals: {
        j["kind"] = "intervals";
        json ivs = json::array();
        for (auto& iv : w.interval_list()) ivs.push_back({iv.first, iv.second});
        j["intervals"] = ivs;
        break;
    }
    }
    return j;
}

namespace {

SchemeConfig parse_scheme_json_inner(const json& j) {
    SchemeConfig cfg;
    std::string type = j.value("type", "");
    if (type == "euclidean") {
        cfg.type = SchemeConfig::Type::Euclidean;
        int d = j.at("d").get<int>();
        int m = j.at("m").get<int>();
        auto rows = j.at("basis").get<std::vector<std::vector<double>>>();
        if ((int)rows.size() != d + m)
            throw ConfigError("InvalidScheme", "basis must have d+m rows");
        Eigen::MatrixXd basis(d + m, d + m);
        for (int r = 0; r < d + m; ++r) {
            if ((int)rows[r].size() != d + m)
                throw ConfigError("InvalidScheme", "basis must be square");
            for (int c = 0; c < d + m; ++c) basis(r, c) = rows[r][c];
        }
        ExactForm form = ExactForm::None;
        if (j.value("exact_form", "") == "zsqrt2") form = ExactForm::ZSqrt2Ring;
        cfg.scheme = EuclideanScheme(d, m, basis, form);
        if (j.contains("window")) cfg.window = parse_window_json(j.at("window"));
        return cfg;
    }
    if (type == "heisenberg-zsqrt2") {
        cfg.type = SchemeConfig::Type::Heisenberg;
        auto hw = j.at("window").at("half_widths").get<std::vector<double>>();
        if (hw.size() != 3)
            throw ConfigError("InvalidWindow", "Heisenberg window needs three half-widths");
        cfg.heis_window = {hw[0], hw[1], hw[2]};
        return cfg;
    }
    if (type == "sl2-zsqrt2") {
        cfg.type = SchemeConfig::Type::SL2;
        cfg.sl2_rho = j.at("window").at("frobenius_radius").get<double>();
        cfg.sl2_entry_bound = j.value("entry_bound", 12);
        return cfg;
    }
    throw ConfigError("InvalidScheme", "unknown scheme type '" + type + "'");
}

} // namespace

SchemeConfig parse_scheme_json(const json& j) {
    try {
        return parse_scheme_json_inner(j);
    } catch (const json::exception& e) {
        throw ConfigError("InvalidScheme",
                          std::string("scheme definition malformed: ") + e.what());
    }
}

SchemeConfig load_scheme_file(const std::string& path) {
    std::string raw = read_text_file(path);
    json j;
    try {
        j = json::parse(raw);
    } catch (const json::parse_error& e) {
        throw ConfigError("InvalidScheme", std::string("scheme file is not valid JSON: ") + e.what());
    }
    SchemeConfig cfg = parse_scheme_json(j);
    cfg.raw = std::move(raw);
    return cfg;
}

std::string format_double(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

std::vector<std::string> csv_header(const PointPatch& patch) {
    switch (patch.kind) {
    case InstanceKind::Heisenberg: return {"x", "y", "z"};
    case InstanceKind::SL2: return {"a", "b", "c", "d"};
    case InstanceKind::Euclidean: {
        std::vector<std::string> h;
        for (int i = 0; i < patch.dim; ++i) h.push_back("x" + std::to_string(i + 1));
        return h;
    }
    }
    return {};
}

} // namespace

std::string patch_csv(const PointPatch& patch) {
    std::ostringstream out;
    auto header = csv_header(patch);
    for (size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << "\n";
    for (auto& p : patch.pts) {
        for (size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << format_double(p[i]);
        out << "\n";
    }
    return out.str();
}

void write_patch_csv(const std::string& path, const PointPatch& patch) {
    write_text_file(path, patch_csv(patch));
}

PointPatch read_patch_csv(const std::string& path) {
    std::istringstream in(read_text_file(path));
    std::string line;
    if (!std::getline(in, line)) throw ConfigError("InvalidRegion", "empty patch CSV");
    PointPatch patch;
    if (line == "x,y,z") patch.kind = InstanceKind::Heisenberg;
    else if (line == "a,b,c,d") patch.kind = InstanceKind::SL2;
    else patch.kind = InstanceKind::Euclidean;
    patch.dim = 1 + (int)std::count(line.begin(), line.end(), ',');
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> p;
        std::stringstream row(line);
        std::string cell;
        while (std::getline(row, cell, ',')) p.push_back(std::stod(cell));
        if ((int)p.size() != patch.dim)
            throw ConfigError("InvalidRegion", "patch CSV row has wrong arity");
        patch.pts.push_back(std::move(p));
    }
    patch.canonicalize();
    return patch;
}

std::string sigma_trace_csv(const SigmaTrace& trace) {
    std::ostringstream out;
    out << "t,count,volume,sigma\n";
    for (size_t i = 0; i < trace.t.size(); ++i)
        out << format_double(trace.t[i]) << "," << trace.count[i] << ","
            << format_double(trace.volume[i]) << "," << format_double(trace.sigma[i]) << "\n";
    return out.str();
}

std::string ratio_trace_csv(const RatioTrace& trace) {
    std::ostringstream out;
    out << "t,sigma1,sigma2,ratio\n";
    for (size_t i = 0; i < trace.t.size(); ++i)
        out << format_double(trace.t[i]) << "," << format_double(trace.sigma1[i]) << ","
            << format_double(trace.sigma2[i]) << "," << format_double(trace.ratio[i]) << "\n";
    return out.str();
}

json atomic_measure_json(const AtomicMeasure& measure) {
    json atoms = json::array();
    for (auto& a : measure.atoms) atoms.push_back({{"loc", a.loc}, {"weight", a.weight}});
    return json{{"atoms", atoms}, {"cutoff", measure.cutoff}};
}

json run_manifest(const std::string& command, const SchemeConfig& config,
                  const json& parameters, long long point_count) {
    char hash[32];
    snprintf(hash, sizeof(hash), "%016llx", (unsigned long long)fnv1a64(config.raw));
    return json{{"tool", "modelset"},
                {"version", kToolVersion},
                {"command", command},
                {"scheme_hash", hash},
                {"parameters", parameters},
                {"points", point_count}};
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("InvalidPath", "cannot open '" + path + "' for writing");
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("InvalidPath", "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace mset
