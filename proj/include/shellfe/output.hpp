#pragma once

#include <fstream>
#include <string>
#include <vector>

#include "shellfe/config.hpp"
#include "shellfe/solver.hpp"

namespace shellfe {

/// Streams run results: a load-displacement CSV row per accepted step
/// (flushed immediately so interrupted runs keep their partial path),
/// deformed-surface meshes in legacy-VTK ASCII, and a structured run log.
class ResultWriter {
public:
    ResultWriter(const RunConfig& config, const ShellModel& model);
    ~ResultWriter();

    /// Record one accepted equilibrium state.
    void on_step(const EquilibriumState& state);

    /// Write the final surface and the run log.
    void finalize(const std::string& status);

    const std::string& directory() const { return directory_; }

private:
    void write_surface(const EquilibriumState& state) const;

    const RunConfig& config_;
    const ShellModel& model_;
    GeometryEmbedding embedding_;
    std::string directory_;
    std::ofstream curve_;
    std::vector<EquilibriumState> steps_; // metadata only (u dropped)
    Eigen::VectorXd last_state_u_;
    int last_step_ = -1;
    bool last_written_ = false;
};

/// Deformed mid-surface as a quad mesh in legacy-VTK ASCII.
void write_surface_vtk(const std::string& path, const ShellModel& model,
                       const GeometryEmbedding& embedding, const Eigen::VectorXd& u_full);

} // namespace shellfe
