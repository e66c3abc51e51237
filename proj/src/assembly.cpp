#include "shellfe/assembly.hpp"

#include <map>
#include <sstream>

#include "shellfe/materials.hpp"
#include "shellfe/spectral.hpp"

namespace shellfe {

namespace {

struct ThicknessPoint {
    double zeta;
    double weight;
};

// Rules are memoized on their defining parameters; the solver loop is
// single-threaded (see the concurrency notes in the README).
const std::vector<ThicknessPoint>& thickness_rule(const ShellModel& model) {
    static std::map<std::pair<int, double>, std::vector<ThicknessPoint>> cache;
    const double half = 0.5 * model.definition().thickness;
    const auto key = std::make_pair(model.quadrature_thickness(), half);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const QuadratureRule1D rule = gauss_rule(key.first);
    std::vector<ThicknessPoint> pts(static_cast<size_t>(rule.points.size()));
    for (Eigen::Index i = 0; i < rule.points.size(); ++i)
        pts[static_cast<size_t>(i)] = {half * rule.points(i), half * rule.weights(i)};
    return cache.emplace(key, std::move(pts)).first->second;
}

// Per-quadrature-point shape values over the reference square.
struct InplanePoint {
    double eta1_offset; // within [0, 1] of the element box
    double eta2_offset;
    double weight; // reference weight, multiplied by the box jacobian later
    Eigen::VectorXd psi, dxi, deta;
};

const std::vector<InplanePoint>& inplane_rule(const ShellModel& model) {
    static std::map<std::pair<int, int>, std::vector<InplanePoint>> cache;
    const auto key = std::make_pair(model.definition().mesh.degree, model.quadrature_inplane());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const QuadratureRule1D rule = gauss_rule(key.second);
    const int q = static_cast<int>(rule.points.size());
    std::vector<InplanePoint> pts;
    pts.reserve(static_cast<size_t>(q * q));
    for (int j = 0; j < q; ++j)
        for (int i = 0; i < q; ++i) {
            InplanePoint p;
            p.eta1_offset = 0.5 * (rule.points(i) + 1.0);
            p.eta2_offset = 0.5 * (rule.points(j) + 1.0);
            p.weight = rule.weights(i) * rule.weights(j);
            model.shape().evaluate(rule.points(i), rule.points(j), p.psi, p.dxi, p.deta);
            pts.push_back(std::move(p));
        }
    return cache.emplace(key, std::move(pts)).first->second;
}

} // namespace

ElementResult element_ops(const ShellModel& model, int element,
                          const Eigen::VectorXd& u_element, unsigned wants) {
    const ThicknessBasis& basis = model.basis();
    const int ndof = basis.dofs_per_node();
    const int nn = model.element_node_count();
    const int edofs = nn * ndof;

    ElementResult out;
    if (wants & WantStiffness) out.k = Eigen::MatrixXd::Zero(edofs, edofs);
    if (wants & WantTangent) out.t = Eigen::MatrixXd::Zero(edofs, edofs);
    if (wants & (WantInternal | WantStiffness)) {
        out.f_int = Eigen::VectorXd::Zero(edofs);
        out.f_conf = Eigen::VectorXd::Zero(edofs);
    }

    double lo1, hi1, lo2, hi2;
    model.element_box(element, lo1, hi1, lo2, hi2);
    const double jac1 = 0.5 * (hi1 - lo1);
    const double jac2 = 0.5 * (hi2 - lo2);

    const std::vector<InplanePoint>& qp2d = inplane_rule(model);
    const std::vector<ThicknessPoint>& qp_th = thickness_rule(model);

    const Vec9 ivec = identity_column();
    const Mat9 id9 = Mat9::Identity();

    Eigen::VectorXd phi(ndof), phi1(ndof), phi2(ndof);
    Eigen::MatrixXd h[3][3], ht[3][3];
    Eigen::VectorXd svec[3], cvec[3];
    Eigen::Matrix<double, 9, Eigen::Dynamic> bg[3];

    for (const InplanePoint& qp : qp2d) {
        const double eta1 = lo1 + (hi1 - lo1) * qp.eta1_offset;
        const double eta2 = lo2 + (hi2 - lo2) * qp.eta2_offset;
        const double w2d = qp.weight * jac1 * jac2;

        phi.setZero();
        phi1.setZero();
        phi2.setZero();
        for (int a = 0; a < nn; ++a) {
            const auto u_a = u_element.segment(a * ndof, ndof);
            phi += qp.psi(a) * u_a;
            phi1 += (qp.dxi(a) / jac1) * u_a;
            phi2 += (qp.deta(a) / jac2) * u_a;
        }

        for (int r = 0; r < 3; ++r) {
            if (wants & (WantInternal | WantStiffness)) {
                svec[r].setZero(ndof);
                cvec[r].setZero(ndof);
            }
            for (int c = 0; c < 3; ++c) {
                if (wants & WantStiffness) h[r][c].setZero(ndof, ndof);
                if (wants & WantTangent) ht[r][c].setZero(ndof, ndof);
            }
        }
        double psi_energy = 0.0;

        for (const ThicknessPoint& tp : qp_th) {
            FramePointData data;
            try {
                data = frame_coefficients(model.geometry(), eta1, eta2, tp.zeta);
            } catch (const NonpositiveJacobian& err) {
                std::ostringstream msg;
                msg << err.what() << " [element " << element << "]";
                throw NonpositiveJacobian(msg.str());
            }
            const GradientOperators ops = gradient_operators(data, basis, tp.zeta);
            const Vec9 l = ops.g1 * phi + ops.g2 * phi1 + ops.g3 * phi2;

            const Invariants inv = invariants(l);
            MaterialResponse resp;
            try {
                resp = evaluate(model.material(), inv.i1, inv.i2, inv.j);
            } catch (const NonpositiveJacobian& err) {
                std::ostringstream msg;
                msg << err.what() << " [element " << element << ", quadrature point ("
                    << eta1 << ", " << eta2 << ", " << tp.zeta << ")]";
                throw NonpositiveJacobian(msg.str());
            }
            const InvariantDerivatives der = invariant_derivatives(l);

            const double wz = tp.weight * data.g;
            psi_energy += resp.psi * tp.weight * data.g;

            if (wants & (WantInternal | WantStiffness)) {
                const Vec9 s = 0.5 * resp.beta1 * der.d_i1 + 0.25 * resp.beta2 * der.d_i2 +
                               resp.beta3 * der.d_j;
                const double beta_sum = resp.beta1 + resp.beta2 + resp.beta3;
                const Vec9 conf = beta_sum * ivec;
                svec[0].noalias() += wz * (ops.g1.transpose() * s);
                svec[1].noalias() += wz * (ops.g2.transpose() * s);
                svec[2].noalias() += wz * (ops.g3.transpose() * s);
                if (wants & WantStiffness) {
                    cvec[0].noalias() += wz * (ops.g1.transpose() * conf);
                    cvec[1].noalias() += wz * (ops.g2.transpose() * conf);
                    cvec[2].noalias() += wz * (ops.g3.transpose() * conf);
                }
            }

            const Eigen::Matrix<double, 9, Eigen::Dynamic>* gs[3] = {&ops.g1, &ops.g2,
                                                                     &ops.g3};
            if (wants & WantStiffness) {
                const Mat9 b_hat = resp.beta1 * id9 +
                                   resp.beta2 * (der.b1 + 0.5 * der.b2 + der.b3 / 3.0) +
                                   resp.beta3 * (der.g0 + 0.5 * der.gcof);
                for (int c = 0; c < 3; ++c) {
                    bg[c].noalias() = b_hat * (*gs[c]);
                    for (int r = 0; r < 3; ++r)
                        h[r][c].noalias() += wz * (gs[r]->transpose() * bg[c]);
                }
            }
            if (wants & WantTangent) {
                Mat9 b_tan = resp.beta1 * id9 + resp.beta2 * (der.b1 + der.b2 + der.b3) +
                             resp.beta3 * (der.g0 + der.gcof);
                const Vec9 v_f = ivec + l;
                const Vec9 v_c = 0.25 * der.d_i2;
                const Vec9 v_j = der.d_j;
                const Mat3& bd = resp.beta_derivs;
                const Vec9 d_beta1 = bd(0, 0) * v_f + bd(0, 1) * v_c + bd(0, 2) * v_j;
                const Vec9 d_beta2 = bd(1, 0) * v_f + bd(1, 1) * v_c + bd(1, 2) * v_j;
                const Vec9 d_beta3 = bd(2, 0) * v_f + bd(2, 1) * v_c + bd(2, 2) * v_j;
                b_tan.noalias() += v_f * d_beta1.transpose();
                b_tan.noalias() += v_c * d_beta2.transpose();
                b_tan.noalias() += v_j * d_beta3.transpose();
                for (int c = 0; c < 3; ++c) {
                    bg[c].noalias() = b_tan * (*gs[c]);
                    for (int r = 0; r < 3; ++r)
                        ht[r][c].noalias() += wz * (gs[r]->transpose() * bg[c]);
                }
            }
        }

        out.energy += w2d * psi_energy;

        for (int a = 0; a < nn; ++a) {
            const double ca[3] = {qp.psi(a), qp.dxi(a) / jac1, qp.deta(a) / jac2};
            if (wants & (WantInternal | WantStiffness)) {
                auto fa = out.f_int.segment(a * ndof, ndof);
                for (int r = 0; r < 3; ++r)
                    if (ca[r] != 0.0) fa.noalias() += (w2d * ca[r]) * svec[r];
                if (wants & WantStiffness) {
                    auto fc = out.f_conf.segment(a * ndof, ndof);
                    for (int r = 0; r < 3; ++r)
                        if (ca[r] != 0.0) fc.noalias() += (w2d * ca[r]) * cvec[r];
                }
            }
            for (int b = 0; b < nn; ++b) {
                const double cb[3] = {qp.psi(b), qp.dxi(b) / jac1, qp.deta(b) / jac2};
                if (wants & WantStiffness) {
                    auto kab = out.k.block(a * ndof, b * ndof, ndof, ndof);
                    for (int r = 0; r < 3; ++r)
                        for (int c = 0; c < 3; ++c) {
                            const double w = w2d * ca[r] * cb[c];
                            if (w != 0.0) kab.noalias() += w * h[r][c];
                        }
                }
                if (wants & WantTangent) {
                    auto tab = out.t.block(a * ndof, b * ndof, ndof, ndof);
                    for (int r = 0; r < 3; ++r)
                        for (int c = 0; c < 3; ++c) {
                            const double w = w2d * ca[r] * cb[c];
                            if (w != 0.0) tab.noalias() += w * ht[r][c];
                        }
                }
            }
        }
    }

    return out;
}

Eigen::VectorXd external_force(const ShellModel& model) {
    const ThicknessBasis& basis = model.basis();
    const int ndof = basis.dofs_per_node();
    Eigen::VectorXd f = Eigen::VectorXd::Zero(model.total_dofs());
    const LoadCase& loads = model.loads();

    if (loads.pressure || loads.body_force) {
        const std::vector<InplanePoint>& qp2d = inplane_rule(model);
        const std::vector<ThicknessPoint>& qp_th = thickness_rule(model);
        const double zeta_surface = loads.pressure && loads.pressure->surface == LateralSurface::Top
                                        ? basis.zeta_top()
                                        : basis.zeta_bottom();
        const double sign = loads.pressure && loads.pressure->surface == LateralSurface::Top
                                ? -1.0
                                : 1.0;
        const BasisRows surface_rows = basis.rows(zeta_surface);

        for (int element = 0; element < model.element_count(); ++element) {
            double lo1, hi1, lo2, hi2;
            model.element_box(element, lo1, hi1, lo2, hi2);
            const double jac = 0.25 * (hi1 - lo1) * (hi2 - lo2);
            const std::vector<int>& nodes = model.element_nodes(element);

            for (const InplanePoint& qp : qp2d) {
                const double eta1 = lo1 + (hi1 - lo1) * qp.eta1_offset;
                const double eta2 = lo2 + (hi2 - lo2) * qp.eta2_offset;
                const double w2d = qp.weight * jac;

                Eigen::VectorXd load_node = Eigen::VectorXd::Zero(ndof);
                if (loads.pressure) {
                    const FramePointData data =
                        frame_coefficients(model.geometry(), eta1, eta2, zeta_surface);
                    const double q3 = sign * loads.pressure->magnitude;
                    load_node.segment(basis.offset_zeta(), basis.count_zeta()) +=
                        lateral_area_weight(data) * q3 * surface_rows.a_zeta.transpose();
                }
                if (loads.body_force) {
                    const Vec3 rb = loads.body_force->density * loads.body_force->per_mass;
                    for (const ThicknessPoint& tp : qp_th) {
                        const FramePointData data =
                            frame_coefficients(model.geometry(), eta1, eta2, tp.zeta);
                        const BasisRows rows = basis.rows(tp.zeta);
                        const double w = tp.weight * data.g;
                        load_node.segment(basis.offset_eta1(), basis.count_eta1()) +=
                            w * rb(0) * rows.a_eta1.transpose();
                        load_node.segment(basis.offset_eta2(), basis.count_eta2()) +=
                            w * rb(1) * rows.a_eta2.transpose();
                        load_node.segment(basis.offset_zeta(), basis.count_zeta()) +=
                            w * rb(2) * rows.a_zeta.transpose();
                    }
                }
                for (size_t a = 0; a < nodes.size(); ++a)
                    f.segment(nodes[a] * ndof, ndof) +=
                        w2d * qp.psi(static_cast<Eigen::Index>(a)) * load_node;
            }
        }
    }

    const BasisRows mid_rows = basis.rows(0.0);
    for (const PointLoad& load : loads.point_loads) {
        const int node = model.locate_node(load.eta1, load.eta2);
        const int base = node * ndof;
        f.segment(base + basis.offset_eta1(), basis.count_eta1()) +=
            load.components(0) * mid_rows.a_eta1.transpose();
        f.segment(base + basis.offset_eta2(), basis.count_eta2()) +=
            load.components(1) * mid_rows.a_eta2.transpose();
        f.segment(base + basis.offset_zeta(), basis.count_zeta()) +=
            load.components(2) * mid_rows.a_zeta.transpose();
    }
    return f;
}

namespace {

Eigen::VectorXd gather(const ShellModel& model, const Eigen::VectorXd& u_full, int element) {
    const std::vector<int> dofs = model.element_dofs(element);
    Eigen::VectorXd u(dofs.size());
    for (size_t i = 0; i < dofs.size(); ++i) u(static_cast<Eigen::Index>(i)) = u_full(dofs[i]);
    return u;
}

} // namespace

Eigen::VectorXd internal_force(const ShellModel& model, const Eigen::VectorXd& u_full) {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(model.total_dofs());
    for (int e = 0; e < model.element_count(); ++e) {
        const ElementResult res = element_ops(model, e, gather(model, u_full, e), WantInternal);
        const std::vector<int> dofs = model.element_dofs(e);
        for (size_t i = 0; i < dofs.size(); ++i)
            f(dofs[i]) += res.f_int(static_cast<Eigen::Index>(i));
    }
    return f;
}

namespace {

Eigen::SparseMatrix<double> assemble_matrix(const ShellModel& model,
                                            const Eigen::VectorXd& u_full, unsigned want,
                                            Eigen::VectorXd* f_int) {
    std::vector<Eigen::Triplet<double>> trip;
    const int edofs = model.element_node_count() * model.dofs_per_node();
    trip.reserve(static_cast<size_t>(model.element_count()) *
                 static_cast<size_t>(edofs * edofs));
    if (f_int) *f_int = Eigen::VectorXd::Zero(model.total_dofs());

    for (int e = 0; e < model.element_count(); ++e) {
        const unsigned wants = want | (f_int ? WantInternal : 0u);
        const ElementResult res = element_ops(model, e, gather(model, u_full, e), wants);
        const std::vector<int> dofs = model.element_dofs(e);
        const Eigen::MatrixXd& m = (want & WantTangent) ? res.t : res.k;
        for (size_t i = 0; i < dofs.size(); ++i) {
            if (f_int) (*f_int)(dofs[i]) += res.f_int(static_cast<Eigen::Index>(i));
            for (size_t j = 0; j < dofs.size(); ++j)
                trip.emplace_back(dofs[i], dofs[j],
                                  m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
        }
    }
    Eigen::SparseMatrix<double> mat(model.total_dofs(), model.total_dofs());
    mat.setFromTriplets(trip.begin(), trip.end());
    return mat;
}

} // namespace

Eigen::SparseMatrix<double> tangent_matrix(const ShellModel& model,
                                           const Eigen::VectorXd& u_full) {
    return assemble_matrix(model, u_full, WantTangent, nullptr);
}

Eigen::SparseMatrix<double> stiffness_matrix(const ShellModel& model,
                                             const Eigen::VectorXd& u_full) {
    return assemble_matrix(model, u_full, WantStiffness, nullptr);
}

double total_strain_energy(const ShellModel& model, const Eigen::VectorXd& u_full) {
    double energy = 0.0;
    for (int e = 0; e < model.element_count(); ++e)
        energy += element_ops(model, e, gather(model, u_full, e), WantEnergy).energy;
    return energy;
}

void assemble_system(const ShellModel& model, const Eigen::VectorXd& u_full,
                     Eigen::VectorXd& f_int, Eigen::SparseMatrix<double>& tangent) {
    tangent = assemble_matrix(model, u_full, WantTangent, &f_int);
}

} // namespace shellfe
