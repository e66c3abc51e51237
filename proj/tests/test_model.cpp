#include <doctest.h>

#include "shellfe/config.hpp"
#include "shellfe/model.hpp"
#include "support.hpp"

using namespace shellfe;
using namespace testsupport;

TEST_CASE("preset meshes carry the documented discretization") {
    const RunConfig semi = preset("semi_cylinder_6_1");
    const ShellModel model(semi.model);
    CHECK(model.element_count() == 16 * 6);
    CHECK(model.definition().mesh.degree == 3);
    CHECK(model.dofs_per_node() == 7);
    CHECK(model.node_count() == (16 * 3 + 1) * (6 * 3 + 1));
    CHECK(semi.model.thickness == doctest::Approx(0.03));
    CHECK(semi.model.domain.eta2_end == doctest::Approx(3.048));
    CHECK(semi.model.geometry.constant_radius() == doctest::Approx(1.016));
    // E = 20.685e6, nu = 0.3 in Lame form.
    CHECK(semi.model.material.mu() == doctest::Approx(20.685e6 / 2.6));
    CHECK(semi.model.material.lambda() ==
          doctest::Approx(2.0 * (20.685e6 / 2.6) * 0.3 / 0.4));

    const RunConfig spiral = preset("spiral_tube_6_5");
    const ShellModel tube(spiral.model);
    CHECK(spiral.model.domain.periodic_eta1);
    CHECK(tube.element_count() == 7 * 8);
    CHECK(tube.node_count() == (7 * 4) * (8 * 4 + 1)); // theta direction stitched
    CHECK(spiral.model.geometry.curve().kappa1(0.0) == doctest::Approx(0.5));
    CHECK(spiral.model.geometry.curve().kappa3(0.0) == doctest::Approx(-0.5));
    CHECK(spiral.model.thickness == doctest::Approx(0.05));
    CHECK(spiral.model.material.mu() == doctest::Approx(3.333e4));
}

TEST_CASE("smallest possible model: one linear plate element") {
    ModelDefinition def;
    def.geometry = GeometryKind::plate();
    def.domain = {0.0, 1.0, 0.0, 1.0, false};
    def.thickness = 0.1;
    def.mesh = {1, 1, 1};
    const ShellModel model(def);
    CHECK(model.node_count() == 4);
    CHECK(model.total_dofs() == 28);
    CHECK(model.constraints().reduced_size() == 28); // no constraints
    CHECK(model.element_nodes(0) == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("dof map is a bijection between nodes and global indices") {
    const RunConfig cfg = preset("pressurized_cylinder_6_4");
    const ShellModel model(cfg.model);
    std::vector<int> seen(static_cast<size_t>(model.total_dofs()), 0);
    for (int e = 0; e < model.element_count(); ++e)
        for (int d : model.element_dofs(e)) {
            REQUIRE(d >= 0);
            REQUIRE(d < model.total_dofs());
            seen[static_cast<size_t>(d)] = 1;
        }
    for (int flag : seen) CHECK(flag == 1);
}

TEST_CASE("periodic stitching identifies the theta seam") {
    const RunConfig cfg = preset("ring_cylinder");
    const ShellModel model(cfg.model);
    // The last element in a theta row must reference the first node column.
    const int e1 = cfg.model.mesh.elements_eta1;
    const std::vector<int>& last = model.element_nodes(e1 - 1);
    const int degree = cfg.model.mesh.degree;
    CHECK(last[static_cast<size_t>(degree)] % model.grid_nodes_eta1() == 0);
}

TEST_CASE("constraints: fixed edges remove whole nodes, symmetry removes families") {
    ModelDefinition def;
    def.geometry = GeometryKind::cylinder(1.0);
    def.domain = {0.0, M_PI / 2, 0.0, 2.0, false};
    def.thickness = 0.02;
    def.mesh = {2, 2, 2};
    def.orders = {1, 1, 2};

    def.bcs.push_back({EdgeId::Eta2Begin, BcKind::Fixed});
    def.bcs.push_back({EdgeId::Eta1Begin, BcKind::SymmetryEta1});
    const ShellModel model(def);
    const int nodes1 = model.grid_nodes_eta1();
    const int nodes2 = model.grid_nodes_eta2();
    const int fixed_dofs = nodes1 * 7;
    // Symmetry pins the two eta1 coefficients per node on the edge, minus
    // the corner already fully fixed.
    const int symmetry_dofs = (nodes2 - 1) * 2;
    CHECK(model.constraints().reduced_size() ==
          model.total_dofs() - fixed_dofs - symmetry_dofs);
}

TEST_CASE("hinged edges pin only the reference-surface translations") {
    ModelDefinition def;
    def.geometry = GeometryKind::plate();
    def.domain = {0.0, 1.0, 0.0, 1.0, false};
    def.thickness = 0.1;
    def.mesh = {1, 1, 2};
    def.orders = {1, 1, 2};
    def.bcs.push_back({EdgeId::Eta1Begin, BcKind::Hinged});
    const ShellModel model(def);
    const int edge_nodes = model.grid_nodes_eta2();
    CHECK(model.constraints().reduced_size() == model.total_dofs() - 3 * edge_nodes);
}

TEST_CASE("hinged edge with a legendre basis couples the surface value") {
    ModelDefinition def;
    def.geometry = GeometryKind::plate();
    def.domain = {0.0, 1.0, 0.0, 1.0, false};
    def.thickness = 0.1;
    def.mesh = {1, 1, 1};
    def.orders = {1, 1, 2};
    def.family = BasisFamily::Legendre;
    def.bcs.push_back({EdgeId::Eta1Begin, BcKind::Hinged});
    const ShellModel model(def);

    // Any reduced vector expands to a state whose evaluated mid-surface
    // displacement vanishes on the hinged edge.
    auto& gen = rng(40);
    Eigen::VectorXd red(model.constraints().reduced_size());
    for (Eigen::Index i = 0; i < red.size(); ++i) red(i) = uniform(gen, -1.0, 1.0);
    const Eigen::VectorXd full = model.constraints().expand(red);
    const Vec3 u = model.displacement_at(full, 0.0, 0.37, 0.0);
    CHECK(std::abs(u(0)) < 1e-12);
    CHECK(std::abs(u(1)) < 1e-12);
    CHECK(std::abs(u(2)) < 1e-12);
    // Off the reference surface the displacement is generally nonzero.
    const Vec3 u_off = model.displacement_at(full, 0.0, 0.37, 0.04);
    CHECK(u_off.norm() > 1e-3);
}

TEST_CASE("node lookup succeeds on grid points and rejects off-grid probes") {
    const RunConfig cfg = preset("arch_strip_6_3");
    const ShellModel model(cfg.model);
    CHECK_NOTHROW(model.locate_node(0.0, 0.5));
    CHECK_THROWS_AS(model.locate_node(0.123456, 0.5), UnknownNode);
}

TEST_CASE("boundary conditions on periodic seams are rejected") {
    ModelDefinition def;
    def.geometry = GeometryKind::cylinder(1.0);
    def.domain = {0.0, 2 * M_PI, 0.0, 2.0, true};
    def.thickness = 0.02;
    def.mesh = {4, 2, 2};
    def.bcs.push_back({EdgeId::Eta1Begin, BcKind::Fixed});
    CHECK_THROWS_AS(build_model(def), ConfigError);
}
