#include "shellfe/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace shellfe {

ConstraintMap::ConstraintMap(int full_size,
                             const std::vector<std::vector<std::pair<int, double>>>& rows)
    : full_(full_size) {
    // rows[d]: empty means "pinned to zero"; {{d,1}} means free; otherwise a
    // linear combination of free dofs.
    std::vector<int> reduced_index(full_size, -1);
    int next = 0;
    for (int d = 0; d < full_size; ++d) {
        if (rows[static_cast<size_t>(d)].size() == 1 &&
            rows[static_cast<size_t>(d)][0].first == d)
            reduced_index[static_cast<size_t>(d)] = next++;
    }
    reduced_ = next;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(full_size));
    for (int d = 0; d < full_size; ++d) {
        for (const auto& [master, coeff] : rows[static_cast<size_t>(d)]) {
            const int rm = reduced_index[static_cast<size_t>(master)];
            if (rm < 0)
                throw ConfigError("constraint on dof " + std::to_string(d) +
                                  " references a dof that is itself constrained");
            trip.emplace_back(d, rm, coeff);
        }
    }
    t_.resize(full_size, reduced_);
    t_.setFromTriplets(trip.begin(), trip.end());
}

Eigen::SparseMatrix<double> ConstraintMap::reduce_matrix(
    const Eigen::SparseMatrix<double>& k) const {
    return t_.transpose() * k * t_;
}

Eigen::VectorXd ConstraintMap::reduce_vector(const Eigen::VectorXd& v) const {
    return t_.transpose() * v;
}

Eigen::VectorXd ConstraintMap::expand(const Eigen::VectorXd& reduced) const {
    return t_ * reduced;
}

ShellModel::ShellModel(const ModelDefinition& def)
    : def_(def),
      basis_(def.orders, def.family, -0.5 * def.thickness, 0.5 * def.thickness),
      shape_(def.mesh.degree) {
    if (def.thickness <= 0.0) throw ConfigError("thickness must be positive");
    if (def.mesh.elements_eta1 < 1 || def.mesh.elements_eta2 < 1)
        throw ConfigError("mesh needs at least one element per direction");
    if (def.domain.eta1_end <= def.domain.eta1_begin ||
        def.domain.eta2_end <= def.domain.eta2_begin)
        throw ConfigError("parametric domain is empty");
    build_grid();
    build_constraints();
}

int ShellModel::quadrature_inplane() const {
    return def_.quadrature_inplane > 0 ? def_.quadrature_inplane : def_.mesh.degree + 1;
}

int ShellModel::quadrature_thickness() const {
    if (def_.quadrature_thickness > 0) return def_.quadrature_thickness;
    return def_.orders.n + def_.orders.m + def_.orders.p + 4;
}

void ShellModel::build_grid() {
    const int p = def_.mesh.degree;
    const int e1 = def_.mesh.elements_eta1;
    const int e2 = def_.mesh.elements_eta2;
    const bool periodic = def_.domain.periodic_eta1;

    nodes1_ = periodic ? e1 * p : e1 * p + 1;
    nodes2_ = e2 * p + 1;

    const Eigen::VectorXd gll = shape_.basis_1d().nodes();
    const double d1 = (def_.domain.eta1_end - def_.domain.eta1_begin) / e1;
    const double d2 = (def_.domain.eta2_end - def_.domain.eta2_begin) / e2;

    coord1_.assign(static_cast<size_t>(nodes1_), 0.0);
    for (int e = 0; e < e1; ++e)
        for (int a = 0; a < p + 1; ++a) {
            const int i = e * p + a;
            if (i >= nodes1_) continue; // periodic seam
            coord1_[static_cast<size_t>(i)] =
                def_.domain.eta1_begin + d1 * (e + 0.5 * (gll(a) + 1.0));
        }
    coord2_.assign(static_cast<size_t>(nodes2_), 0.0);
    for (int e = 0; e < e2; ++e)
        for (int a = 0; a < p + 1; ++a) {
            const int j = e * p + a;
            coord2_[static_cast<size_t>(j)] =
                def_.domain.eta2_begin + d2 * (e + 0.5 * (gll(a) + 1.0));
        }

    connectivity_.resize(static_cast<size_t>(element_count()));
    for (int el2 = 0; el2 < e2; ++el2)
        for (int el1 = 0; el1 < e1; ++el1) {
            std::vector<int>& nodes = connectivity_[static_cast<size_t>(el2 * e1 + el1)];
            nodes.resize(static_cast<size_t>((p + 1) * (p + 1)));
            for (int b = 0; b < p + 1; ++b)
                for (int a = 0; a < p + 1; ++a) {
                    int i = el1 * p + a;
                    if (periodic) i %= nodes1_;
                    const int j = el2 * p + b;
                    nodes[static_cast<size_t>(b * (p + 1) + a)] = j * nodes1_ + i;
                }
        }
}

std::vector<int> ShellModel::edge_nodes(EdgeId edge) const {
    const bool periodic = def_.domain.periodic_eta1;
    if (periodic && (edge == EdgeId::Eta1Begin || edge == EdgeId::Eta1End))
        throw ConfigError("boundary condition references a theta edge of a periodic domain");
    std::vector<int> nodes;
    switch (edge) {
        case EdgeId::Eta1Begin:
            for (int j = 0; j < nodes2_; ++j) nodes.push_back(j * nodes1_);
            break;
        case EdgeId::Eta1End:
            for (int j = 0; j < nodes2_; ++j) nodes.push_back(j * nodes1_ + nodes1_ - 1);
            break;
        case EdgeId::Eta2Begin:
            for (int i = 0; i < nodes1_; ++i) nodes.push_back(i);
            break;
        case EdgeId::Eta2End:
            for (int i = 0; i < nodes1_; ++i) nodes.push_back((nodes2_ - 1) * nodes1_ + i);
            break;
    }
    return nodes;
}

void ShellModel::build_constraints() {
    const int ndof = dofs_per_node();
    const int total = total_dofs();

    enum class State { Free, Zero, MidsurfacePin };
    // Per node-family mid-surface pins triggered by hinged edges.
    std::vector<State> state(static_cast<size_t>(total), State::Free);

    auto family_range = [&](DofFamily family, int& offset, int& count) {
        switch (family) {
            case DofFamily::Eta1:
                offset = basis_.offset_eta1();
                count = basis_.count_eta1();
                break;
            case DofFamily::Eta2:
                offset = basis_.offset_eta2();
                count = basis_.count_eta2();
                break;
            case DofFamily::Zeta:
                offset = basis_.offset_zeta();
                count = basis_.count_zeta();
                break;
        }
    };

    for (const BoundaryCondition& bc : def_.bcs) {
        const std::vector<int> nodes = edge_nodes(bc.edge);
        for (int node : nodes) {
            const int base = node * ndof;
            switch (bc.kind) {
                case BcKind::Fixed:
                    for (int k = 0; k < ndof; ++k) state[static_cast<size_t>(base + k)] = State::Zero;
                    break;
                case BcKind::Hinged:
                    for (DofFamily f : {DofFamily::Eta1, DofFamily::Eta2, DofFamily::Zeta}) {
                        int off = 0, cnt = 0;
                        family_range(f, off, cnt);
                        auto& s = state[static_cast<size_t>(base + off)];
                        if (s == State::Free) s = State::MidsurfacePin;
                    }
                    break;
                case BcKind::SymmetryEta1: {
                    int off = 0, cnt = 0;
                    family_range(DofFamily::Eta1, off, cnt);
                    for (int k = 0; k < cnt; ++k)
                        state[static_cast<size_t>(base + off + k)] = State::Zero;
                    break;
                }
                case BcKind::SymmetryEta2: {
                    int off = 0, cnt = 0;
                    family_range(DofFamily::Eta2, off, cnt);
                    for (int k = 0; k < cnt; ++k)
                        state[static_cast<size_t>(base + off + k)] = State::Zero;
                    break;
                }
                case BcKind::PrescribedDof: {
                    int off = 0, cnt = 0;
                    family_range(bc.family, off, cnt);
                    if (bc.order >= cnt)
                        throw ConfigError("prescribed dof order exceeds the expansion order");
                    if (bc.order < 0)
                        for (int k = 0; k < cnt; ++k)
                            state[static_cast<size_t>(base + off + k)] = State::Zero;
                    else
                        state[static_cast<size_t>(base + off + bc.order)] = State::Zero;
                    break;
                }
            }
        }
    }

    // The hinged pin constrains the evaluated reference-surface displacement
    // A(0) * Phi_family = 0. With a monomial basis A(0) = (1, 0, ...), so the
    // order-0 coefficient is simply zeroed; a Legendre basis couples in the
    // higher coefficients that are nonzero at the reference surface.
    const BasisRows mid = basis_.rows(0.0);
    std::vector<std::vector<std::pair<int, double>>> rows(static_cast<size_t>(total));
    for (int d = 0; d < total; ++d) {
        switch (state[static_cast<size_t>(d)]) {
            case State::Free:
                rows[static_cast<size_t>(d)] = {{d, 1.0}};
                break;
            case State::Zero:
                break;
            case State::MidsurfacePin: {
                const int local = d % ndof;
                const int node_base = d - local;
                const Eigen::RowVectorXd* a = nullptr;
                int off = 0;
                if (local == basis_.offset_eta1()) {
                    a = &mid.a_eta1;
                    off = basis_.offset_eta1();
                } else if (local == basis_.offset_eta2()) {
                    a = &mid.a_eta2;
                    off = basis_.offset_eta2();
                } else {
                    a = &mid.a_zeta;
                    off = basis_.offset_zeta();
                }
                std::vector<std::pair<int, double>> combo;
                for (int k = 1; k < a->size(); ++k) {
                    const double coeff = -(*a)(k) / (*a)(0);
                    if (coeff == 0.0) continue;
                    const int master = node_base + off + k;
                    if (state[static_cast<size_t>(master)] != State::Free) continue;
                    combo.emplace_back(master, coeff);
                }
                rows[static_cast<size_t>(d)] = std::move(combo);
                break;
            }
        }
    }
    constraints_ = ConstraintMap(total, rows);
}

std::vector<int> ShellModel::element_dofs(int element) const {
    const int ndof = dofs_per_node();
    const std::vector<int>& nodes = connectivity_[static_cast<size_t>(element)];
    std::vector<int> dofs;
    dofs.reserve(nodes.size() * static_cast<size_t>(ndof));
    for (int node : nodes)
        for (int k = 0; k < ndof; ++k) dofs.push_back(node * ndof + k);
    return dofs;
}

void ShellModel::element_box(int element, double& lo1, double& hi1, double& lo2,
                             double& hi2) const {
    const int e1 = def_.mesh.elements_eta1;
    const int i = element % e1;
    const int j = element / e1;
    const double d1 = (def_.domain.eta1_end - def_.domain.eta1_begin) / e1;
    const double d2 = (def_.domain.eta2_end - def_.domain.eta2_begin) / def_.mesh.elements_eta2;
    lo1 = def_.domain.eta1_begin + i * d1;
    hi1 = lo1 + d1;
    lo2 = def_.domain.eta2_begin + j * d2;
    hi2 = lo2 + d2;
}

int ShellModel::locate_node(double eta1, double eta2, double tol) const {
    const double span1 = def_.domain.eta1_end - def_.domain.eta1_begin;
    for (int i = 0; i < nodes1_; ++i) {
        double d1 = std::abs(coord1_[static_cast<size_t>(i)] - eta1);
        if (def_.domain.periodic_eta1) d1 = std::min(d1, std::abs(d1 - span1));
        if (d1 > tol * std::max(1.0, std::abs(span1))) continue;
        for (int j = 0; j < nodes2_; ++j) {
            if (std::abs(coord2_[static_cast<size_t>(j)] - eta2) <=
                tol * std::max(1.0, std::abs(def_.domain.eta2_end - def_.domain.eta2_begin)))
                return j * nodes1_ + i;
        }
    }
    std::ostringstream msg;
    msg << "no mesh node at (" << eta1 << ", " << eta2 << ")";
    throw UnknownNode(msg.str());
}

void ShellModel::locate_point(double eta1, double eta2, int& element, double& xi,
                              double& eta) const {
    const int e1 = def_.mesh.elements_eta1;
    const int e2 = def_.mesh.elements_eta2;
    const double d1 = (def_.domain.eta1_end - def_.domain.eta1_begin) / e1;
    const double d2 = (def_.domain.eta2_end - def_.domain.eta2_begin) / e2;
    double x = eta1 - def_.domain.eta1_begin;
    if (def_.domain.periodic_eta1) {
        const double span = def_.domain.eta1_end - def_.domain.eta1_begin;
        x = std::fmod(std::fmod(x, span) + span, span);
    }
    const double y = eta2 - def_.domain.eta2_begin;
    int i = static_cast<int>(std::floor(x / d1));
    int j = static_cast<int>(std::floor(y / d2));
    i = std::clamp(i, 0, e1 - 1);
    j = std::clamp(j, 0, e2 - 1);
    if (y < -1e-12 || y > (def_.domain.eta2_end - def_.domain.eta2_begin) + 1e-12 ||
        (!def_.domain.periodic_eta1 &&
         (x < -1e-12 || x > (def_.domain.eta1_end - def_.domain.eta1_begin) + 1e-12)))
        throw DomainError("probe point outside the parametric domain");
    element = j * e1 + i;
    xi = 2.0 * (x - i * d1) / d1 - 1.0;
    eta = 2.0 * (y - j * d2) / d2 - 1.0;
}

Vec3 ShellModel::displacement_at(const Eigen::VectorXd& u_full, double eta1, double eta2,
                                 double zeta) const {
    int element = 0;
    double xi = 0.0, eta = 0.0;
    locate_point(eta1, eta2, element, xi, eta);
    Eigen::VectorXd psi, dxi, deta;
    shape_.evaluate(xi, eta, psi, dxi, deta);

    const int ndof = dofs_per_node();
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(ndof);
    const std::vector<int>& nodes = element_nodes(element);
    for (size_t a = 0; a < nodes.size(); ++a)
        phi += psi(static_cast<Eigen::Index>(a)) *
               u_full.segment(nodes[a] * ndof, ndof);

    const BasisRows rows = basis_.rows(zeta);
    Vec3 u;
    u(0) = rows.a_eta1.dot(phi.segment(basis_.offset_eta1(), basis_.count_eta1()));
    u(1) = rows.a_eta2.dot(phi.segment(basis_.offset_eta2(), basis_.count_eta2()));
    u(2) = rows.a_zeta.dot(phi.segment(basis_.offset_zeta(), basis_.count_zeta()));
    return u;
}

ShellModel build_model(const ModelDefinition& def) { return ShellModel(def); }

} // namespace shellfe
