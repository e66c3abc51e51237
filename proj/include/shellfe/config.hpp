#pragma once

#include <string>
#include <vector>

#include "shellfe/embedding.hpp"
#include "shellfe/model.hpp"
#include "shellfe/solver.hpp"

namespace shellfe {

struct ProbePoint {
    double eta1 = 0.0, eta2 = 0.0, zeta = 0.0;
};

struct OutputSettings {
    std::string directory = "out";
    std::vector<ProbePoint> probes;
    /// Write a deformed-surface file every this many accepted steps
    /// (0 = final state only).
    int surface_interval = 0;
};

/// A fully validated run description.
struct RunConfig {
    std::string name = "run";
    ModelDefinition model;
    ContinuationSettings solver;
    OutputSettings output;
    /// Reference load magnitude for reporting (lambda * this is the applied
    /// load column of the emitted curve).
    double load_reference = 0.0;
    // Cartesian anchor for exported shapes (tube-family axis at s = 0).
    Vec3 anchor_origin = Vec3::Zero();
    Mat3 anchor_frame = (Mat3() << 0, 0, 1, 1, 0, 0, 0, 1, 0).finished();
    std::vector<std::string> warnings;
};

/// Parse a JSON run configuration. Throws ConfigError with the offending
/// field path, or ExpressionParseError for malformed profile expressions.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Built-in benchmark presets.
RunConfig preset(const std::string& name);
std::vector<std::string> preset_names();

} // namespace shellfe
