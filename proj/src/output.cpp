#include "shellfe/output.hpp"

#include <filesystem>
#include <iomanip>

#include <json.hpp>

namespace shellfe {

namespace {

std::string step_filename(int step) {
    std::ostringstream name;
    name << "surface_" << std::setw(4) << std::setfill('0') << step << ".vtk";
    return name.str();
}

} // namespace

void write_surface_vtk(const std::string& path, const ShellModel& model,
                       const GeometryEmbedding& embedding, const Eigen::VectorXd& u_full) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << std::setprecision(9);

    const int n1 = model.grid_nodes_eta1();
    const int n2 = model.grid_nodes_eta2();
    const int points = n1 * n2;
    const bool periodic = model.domain().periodic_eta1;
    const int quads1 = periodic ? n1 : n1 - 1;
    const int quads = quads1 * (n2 - 1);
    const int ndof = model.dofs_per_node();
    const ThicknessBasis& basis = model.basis();

    std::vector<Vec3> displacements(static_cast<size_t>(points));

    out << "# vtk DataFile Version 3.0\n";
    out << "deformed shell reference surface\n";
    out << "ASCII\n";
    out << "DATASET UNSTRUCTURED_GRID\n";
    out << "POINTS " << points << " double\n";
    const BasisRows mid = basis.rows(0.0);
    for (int node = 0; node < points; ++node) {
        const double eta1 = model.node_eta1(node);
        const double eta2 = model.node_eta2(node);
        Vec3 u_frame;
        const int base = node * ndof;
        u_frame(0) = mid.a_eta1.dot(
            u_full.segment(base + basis.offset_eta1(), basis.count_eta1()));
        u_frame(1) = mid.a_eta2.dot(
            u_full.segment(base + basis.offset_eta2(), basis.count_eta2()));
        u_frame(2) = mid.a_zeta.dot(
            u_full.segment(base + basis.offset_zeta(), basis.count_zeta()));
        const Vec3 x = embedding.deformed_position(eta1, eta2, 0.0, u_frame);
        displacements[static_cast<size_t>(node)] =
            embedding.displacement_to_global(eta1, eta2, u_frame);
        out << x(0) << " " << x(1) << " " << x(2) << "\n";
    }

    out << "CELLS " << quads << " " << 5 * quads << "\n";
    for (int j = 0; j + 1 < n2; ++j)
        for (int i = 0; i < quads1; ++i) {
            const int inext = periodic ? (i + 1) % n1 : i + 1;
            out << "4 " << (j * n1 + i) << " " << (j * n1 + inext) << " "
                << ((j + 1) * n1 + inext) << " " << ((j + 1) * n1 + i) << "\n";
        }
    out << "CELL_TYPES " << quads << "\n";
    for (int c = 0; c < quads; ++c) out << "9\n";

    out << "POINT_DATA " << points << "\n";
    out << "VECTORS displacement double\n";
    for (const Vec3& u : displacements) out << u(0) << " " << u(1) << " " << u(2) << "\n";
    out << "SCALARS displacement_magnitude double 1\n";
    out << "LOOKUP_TABLE default\n";
    for (const Vec3& u : displacements) out << u.norm() << "\n";
    if (!out) throw IoError("write failed on '" + path + "'");
}

ResultWriter::ResultWriter(const RunConfig& config, const ShellModel& model)
    : config_(config), model_(model), embedding_(model.geometry()) {
    embedding_.set_anchor(config.anchor_origin, config.anchor_frame);
    directory_ = config.output.directory;
    std::error_code ec;
    std::filesystem::create_directories(directory_, ec);
    if (ec) throw IoError("cannot create output directory '" + directory_ + "'");

    curve_.open(directory_ + "/curve.csv");
    if (!curve_) throw IoError("cannot open curve.csv in '" + directory_ + "'");
    curve_ << std::setprecision(17);
    curve_ << "step,lambda,load";
    for (size_t i = 0; i < config.output.probes.size(); ++i)
        curve_ << ",u_eta1_" << i << ",u_eta2_" << i << ",u_zeta_" << i << ",u_mag_" << i;
    curve_ << "\n";
    curve_.flush();
}

ResultWriter::~ResultWriter() = default;

void ResultWriter::on_step(const EquilibriumState& state) {
    curve_ << state.step << "," << state.lambda << ","
           << state.lambda * config_.load_reference;
    for (const ProbePoint& probe : config_.output.probes) {
        const Vec3 u = model_.displacement_at(state.u, probe.eta1, probe.eta2, probe.zeta);
        curve_ << "," << u(0) << "," << u(1) << "," << u(2) << "," << u.norm();
    }
    curve_ << "\n";
    curve_.flush();

    EquilibriumState meta = state;
    meta.u.resize(0); // keep the log light
    steps_.push_back(std::move(meta));
    last_step_ = state.step;

    last_written_ = false;
    if (config_.output.surface_interval > 0 &&
        state.step % config_.output.surface_interval == 0) {
        write_surface(state);
        last_written_ = true;
    }
    if (config_.output.surface_interval == 0 || !last_written_) last_state_u_ = state.u;
}

void ResultWriter::write_surface(const EquilibriumState& state) const {
    write_surface_vtk(directory_ + "/" + step_filename(state.step), model_, embedding_,
                      state.u);
}

void ResultWriter::finalize(const std::string& status) {
    if (last_step_ >= 0 && !last_written_ && last_state_u_.size() > 0) {
        EquilibriumState final_state;
        final_state.u = last_state_u_;
        final_state.step = last_step_;
        write_surface(final_state);
    }

    nlohmann::json log;
    log["name"] = config_.name;
    log["status"] = status;
    log["probes"] = nlohmann::json::array();
    for (const ProbePoint& p : config_.output.probes)
        log["probes"].push_back({p.eta1, p.eta2, p.zeta});
    log["warnings"] = config_.warnings;
    nlohmann::json steps = nlohmann::json::array();
    for (const EquilibriumState& s : steps_) {
        nlohmann::json entry;
        entry["step"] = s.step;
        entry["lambda"] = s.lambda;
        entry["iterations"] = s.iterations;
        entry["arc_radius"] = s.arc_radius;
        entry["residuals"] = s.residual_history;
        steps.push_back(entry);
    }
    log["steps"] = steps;

    std::ofstream out(directory_ + "/run.json");
    if (!out) throw IoError("cannot open run.json in '" + directory_ + "'");
    out << log.dump(2) << "\n";
}

} // namespace shellfe
