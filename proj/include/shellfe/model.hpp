#pragma once

#include <optional>
#include <vector>

#include <Eigen/Sparse>

#include "shellfe/frame_geometry.hpp"
#include "shellfe/materials.hpp"
#include "shellfe/spectral.hpp"
#include "shellfe/thickness_basis.hpp"

namespace shellfe {

/// Rectangle in surface coordinates. Roles per geometry: (theta, s) for the
/// tube family, (phi, theta) for the sphere, (x, y) for the plate.
struct ParametricDomain {
    double eta1_begin = 0.0, eta1_end = 1.0;
    double eta2_begin = 0.0, eta2_end = 1.0;
    bool periodic_eta1 = false;
};

struct MeshSpec {
    int elements_eta1 = 1;
    int elements_eta2 = 1;
    int degree = 3; // spectral Lagrange order p_s
};

enum class EdgeId { Eta1Begin, Eta1End, Eta2Begin, Eta2End };
enum class BcKind { Fixed, Hinged, SymmetryEta1, SymmetryEta2, PrescribedDof };
enum class DofFamily { Eta1, Eta2, Zeta };

struct BoundaryCondition {
    EdgeId edge;
    BcKind kind;
    // PrescribedDof only: which component family, and which expansion order
    // (-1 pins every order). Only homogeneous (zero) values are supported,
    // matching the essential condition of the weak form.
    DofFamily family = DofFamily::Eta1;
    int order = -1;
};

struct PointLoad {
    double eta1 = 0.0, eta2 = 0.0;
    Vec3 components = Vec3::Zero(); // frame components at the reference surface
};

enum class LateralSurface { Bottom, Top };

/// Dead pressure on a lateral surface, fixed per unit reference area.
/// Bottom-surface pressure pushes along +n (internal pressurization),
/// top-surface pressure along -n.
struct PressureLoad {
    double magnitude = 0.0;
    LateralSurface surface = LateralSurface::Bottom;
};

struct BodyForce {
    Vec3 per_mass = Vec3::Zero(); // frame components
    double density = 0.0;
};

struct LoadCase {
    std::vector<PointLoad> point_loads;
    std::optional<PressureLoad> pressure;
    std::optional<BodyForce> body_force;

    bool empty() const {
        return point_loads.empty() && !pressure.has_value() && !body_force.has_value();
    }
};

struct ModelDefinition {
    GeometryKind geometry = GeometryKind::plate();
    ParametricDomain domain;
    double thickness = 0.1;
    BasisOrders orders;
    BasisFamily family = BasisFamily::Monomial;
    MaterialModel material = MaterialModel::saint_venant_kirchhoff(1.0, 1.0);
    MeshSpec mesh;
    std::vector<BoundaryCondition> bcs;
    LoadCase loads;
    int quadrature_inplane = 0;   // 0: degree + 1 per direction
    int quadrature_thickness = 0; // 0: n + m + p + 4
};

/// Reduction of the constrained system: U_full = T * U_reduced. Plain
/// eliminations give T selection columns; hinged edges with a Legendre basis
/// add coupling entries that pin the evaluated mid-surface displacement.
class ConstraintMap {
public:
    ConstraintMap() = default;
    ConstraintMap(int full_size, const std::vector<std::vector<std::pair<int, double>>>& rows);

    int full_size() const { return full_; }
    int reduced_size() const { return reduced_; }

    const Eigen::SparseMatrix<double>& transform() const { return t_; }

    Eigen::SparseMatrix<double> reduce_matrix(const Eigen::SparseMatrix<double>& k) const;
    Eigen::VectorXd reduce_vector(const Eigen::VectorXd& v) const;
    Eigen::VectorXd expand(const Eigen::VectorXd& reduced) const;

private:
    int full_ = 0, reduced_ = 0;
    Eigen::SparseMatrix<double> t_;
};

/// Immutable analysis model: geometry + mesh + DOF map + constraints + loads.
class ShellModel {
public:
    ShellModel(const ModelDefinition& def);

    const GeometryKind& geometry() const { return def_.geometry; }
    const ParametricDomain& domain() const { return def_.domain; }
    const ThicknessBasis& basis() const { return basis_; }
    const MaterialModel& material() const { return def_.material; }
    const LoadCase& loads() const { return def_.loads; }
    const SpectralElement& shape() const { return shape_; }
    const ModelDefinition& definition() const { return def_; }

    int quadrature_inplane() const;
    int quadrature_thickness() const;

    int node_count() const { return nodes1_ * nodes2_; }
    int dofs_per_node() const { return basis_.dofs_per_node(); }
    int total_dofs() const { return node_count() * dofs_per_node(); }

    int element_count() const { return def_.mesh.elements_eta1 * def_.mesh.elements_eta2; }
    int element_node_count() const { return shape_.node_count(); }

    /// Global node ids of an element, local ordering matching the shape
    /// functions (first parametric direction fastest).
    const std::vector<int>& element_nodes(int element) const { return connectivity_[element]; }
    /// Global DOF ids of an element, node-major.
    std::vector<int> element_dofs(int element) const;
    /// Parametric box [lo1, hi1] x [lo2, hi2] of an element.
    void element_box(int element, double& lo1, double& hi1, double& lo2, double& hi2) const;

    double node_eta1(int node) const { return coord1_[static_cast<size_t>(node % nodes1_)]; }
    double node_eta2(int node) const { return coord2_[static_cast<size_t>(node / nodes1_)]; }
    int grid_nodes_eta1() const { return nodes1_; }
    int grid_nodes_eta2() const { return nodes2_; }

    /// Node at the given surface point; throws UnknownNode when no mesh node
    /// coincides with it.
    int locate_node(double eta1, double eta2, double tol = 1e-9) const;

    /// Element containing a surface point plus its reference coordinates.
    void locate_point(double eta1, double eta2, int& element, double& xi, double& eta) const;

    /// Displacement (frame components) at a surface point from a full DOF
    /// vector.
    Vec3 displacement_at(const Eigen::VectorXd& u_full, double eta1, double eta2,
                         double zeta) const;

    const ConstraintMap& constraints() const { return constraints_; }

private:
    void build_grid();
    void build_constraints();
    std::vector<int> edge_nodes(EdgeId edge) const;

    ModelDefinition def_;
    ThicknessBasis basis_;
    SpectralElement shape_;
    int nodes1_ = 0, nodes2_ = 0;
    std::vector<double> coord1_, coord2_;
    std::vector<std::vector<int>> connectivity_;
    ConstraintMap constraints_;
};

ShellModel build_model(const ModelDefinition& def);

} // namespace shellfe
