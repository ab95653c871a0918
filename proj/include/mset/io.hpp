#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "mset/autocorrelation.hpp"
#include "mset/heisenberg.hpp"
#include "mset/point_patch.hpp"
#include "mset/scheme.hpp"
#include "mset/window.hpp"

namespace mset {

inline constexpr const char* kToolVersion = "0.1.0";

// Parsed scheme definition file.
struct SchemeConfig {
    enum class Type { Euclidean, Heisenberg, SL2 };

    Type type = Type::Euclidean;
    // Euclidean
    std::optional<EuclideanScheme> scheme;
    std::optional<Window> window;
    // Heisenberg
    HeisWindow heis_window;
    // SL2
    double sl2_rho = 1.3;
    int sl2_entry_bound = 12;

    std::string raw; // file bytes, hashed into manifests
};

SchemeConfig parse_scheme_json(const nlohmann::json& j);
SchemeConfig load_scheme_file(const std::string& path);

Window parse_window_json(const nlohmann::json& j);
nlohmann::json window_json(const Window& w);

// Shortest round-trip decimal form of a double (deterministic).
std::string format_double(double x);

uint64_t fnv1a64(const std::string& bytes);

// Patch CSV: header row, one row per point, points sorted canonically.
// Euclidean columns x1..xd, Heisenberg x,y,z, SL2 a,b,c,d.
std::string patch_csv(const PointPatch& patch);
void write_patch_csv(const std::string& path, const PointPatch& patch);
PointPatch read_patch_csv(const std::string& path);

std::string sigma_trace_csv(const SigmaTrace& trace);
std::string ratio_trace_csv(const RatioTrace& trace);

nlohmann::json atomic_measure_json(const AtomicMeasure& measure);

nlohmann::json run_manifest(const std::string& command, const SchemeConfig& config,
                            const nlohmann::json& parameters, long long point_count);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace mset
