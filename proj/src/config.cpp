#include "shellfe/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shellfe {

namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& path, const std::string& msg) {
    throw ConfigError(path + ": " + msg);
}

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key)) config_fail(path, std::string("missing required field '") + key + "'");
    return j.at(key);
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) config_fail(path, "expected a number");
    return j.get<double>();
}

double number_at(const json& j, const char* key, const std::string& path) {
    return number(require(j, key, path), path + "." + key);
}

double number_or(const json& j, const char* key, double fallback, const std::string& path) {
    if (!j.contains(key)) return fallback;
    return number(j.at(key), path + "." + key);
}

int integer_or(const json& j, const char* key, int fallback, const std::string& path) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer()) config_fail(path + "." + key, "expected an integer");
    return v.get<int>();
}

std::string text_or(const json& j, const char* key, const std::string& fallback,
                    const std::string& path) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_string()) config_fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

Vec3 vec3_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 3) config_fail(path, "expected an array of 3 numbers");
    return Vec3(number(j[0], path), number(j[1], path), number(j[2], path));
}

GeometryKind parse_geometry(const json& g, const std::string& path) {
    const std::string kind = text_or(g, "kind", "", path);
    if (kind.empty()) config_fail(path, "missing required field 'kind'");

    auto radius_profile = [&]() -> RadiusProfile {
        if (g.contains("radius_expression"))
            return RadiusProfile::from_expression(
                g.at("radius_expression").get<std::string>());
        if (g.contains("radius")) {
            const double r = number_at(g, "radius", path);
            if (r <= 0.0) config_fail(path + ".radius", "radius must be positive");
            return RadiusProfile::constant(r);
        }
        config_fail(path, "needs 'radius' or 'radius_expression'");
    };
    auto curve_frame = [&]() -> CurveFrame {
        if (!g.contains("curve")) return CurveFrame::straight();
        const json& c = g.at("curve");
        const std::string cpath = path + ".curve";
        if (c.contains("kappa1") || c.contains("kappa2") || c.contains("kappa3")) {
            return CurveFrame::from_expressions(text_or(c, "kappa1", "0", cpath),
                                                text_or(c, "kappa2", "0", cpath),
                                                text_or(c, "kappa3", "0", cpath));
        }
        return CurveFrame::frenet(number_or(c, "curvature", 0.0, cpath),
                                  number_or(c, "torsion", 0.0, cpath));
    };
    auto constant_radius = [&]() -> double {
        const double r = number_at(g, "radius", path);
        if (r <= 0.0) config_fail(path + ".radius", "radius must be positive");
        return r;
    };

    if (kind == "general_tube") return GeometryKind::general_tube(radius_profile(), curve_frame());
    if (kind == "circular_tube")
        return GeometryKind::circular_tube(radius_profile(), curve_frame());
    if (kind == "constant_tube")
        return GeometryKind::constant_tube(constant_radius(), curve_frame());
    if (kind == "surface_of_revolution")
        return GeometryKind::surface_of_revolution(radius_profile());
    if (kind == "cylinder") return GeometryKind::cylinder(constant_radius());
    if (kind == "sphere") return GeometryKind::sphere(constant_radius());
    if (kind == "plate") return GeometryKind::plate();
    config_fail(path + ".kind", "unknown geometry kind '" + kind + "'");
}

MaterialModel parse_material(const json& m, const std::string& path,
                             std::vector<std::string>& warnings) {
    const std::string model = text_or(m, "model", "", path);
    if (model.empty()) config_fail(path, "missing required field 'model'");

    auto lame = [&]() -> std::pair<double, double> {
        double mu = 0.0, lambda = 0.0;
        if (m.contains("lambda") && m.contains("mu")) {
            lambda = number_at(m, "lambda", path);
            mu = number_at(m, "mu", path);
        } else if (m.contains("mu") && m.contains("nu")) {
            mu = number_at(m, "mu", path);
            const double nu = number_at(m, "nu", path);
            if (nu <= -1.0 || nu >= 0.5) config_fail(path + ".nu", "needs -1 < nu < 0.5");
            lambda = lame_lambda_from_poisson(mu, nu);
        } else if (m.contains("E") && m.contains("nu")) {
            const double nu = number_at(m, "nu", path);
            if (nu <= -1.0 || nu >= 0.5) config_fail(path + ".nu", "needs -1 < nu < 0.5");
            mu = shear_modulus_from_young(number_at(m, "E", path), nu);
            lambda = lame_lambda_from_poisson(mu, nu);
        } else {
            config_fail(path, "needs (lambda, mu), (mu, nu) or (E, nu)");
        }
        if (mu <= 0.0 || lambda <= 0.0)
            config_fail(path, "Lame parameters must be positive (lambda = " +
                                  std::to_string(lambda) + ", mu = " + std::to_string(mu) + ")");
        return {lambda, mu};
    };

    if (model == "saint_venant_kirchhoff" || model == "svk") {
        auto [lambda, mu] = lame();
        return MaterialModel::saint_venant_kirchhoff(lambda, mu);
    }
    if (model == "neo_hookean") {
        auto [lambda, mu] = lame();
        return MaterialModel::neo_hookean(lambda, mu);
    }
    if (model == "mooney_rivlin") {
        const double c1 = number_at(m, "c1", path);
        const double c2 = number_at(m, "c2", path);
        const double bulk = number_at(m, "bulk", path);
        if (c1 < 0.0 || c2 < 0.0) config_fail(path, "c1 and c2 must be non-negative");
        if (bulk <= 0.0) config_fail(path + ".bulk", "bulk modulus must be positive");
        MaterialModel mat = MaterialModel::mooney_rivlin(c1, c2, bulk);
        if (mat.residual_stress_at_identity())
            warnings.push_back(
                "material: mooney_rivlin with c2 != 0 carries a nonzero stress in the "
                "undeformed state");
        return mat;
    }
    config_fail(path + ".model", "unknown material model '" + model + "'");
}

EdgeId parse_edge(const std::string& name, const std::string& path) {
    if (name == "eta1_begin") return EdgeId::Eta1Begin;
    if (name == "eta1_end") return EdgeId::Eta1End;
    if (name == "eta2_begin") return EdgeId::Eta2Begin;
    if (name == "eta2_end") return EdgeId::Eta2End;
    config_fail(path, "unknown edge '" + name + "'");
}

DofFamily parse_family(const std::string& name, const std::string& path) {
    if (name == "eta1") return DofFamily::Eta1;
    if (name == "eta2") return DofFamily::Eta2;
    if (name == "zeta") return DofFamily::Zeta;
    config_fail(path, "unknown dof family '" + name + "'");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("malformed JSON: ") + err.what());
    }
    if (!j.is_object()) throw ConfigError("top level must be a JSON object");

    // Report every missing required section at once.
    {
        std::string missing;
        for (const char* key : {"geometry", "domain", "thickness", "material", "mesh"})
            if (!j.contains(key)) missing += missing.empty() ? key : std::string(", ") + key;
        if (!missing.empty()) throw ConfigError("missing required sections: " + missing);
    }

    RunConfig cfg;
    cfg.name = text_or(j, "name", "run", "name");
    cfg.model.geometry = parse_geometry(j.at("geometry"), "geometry");

    {
        const json& d = j.at("domain");
        const json& e1 = require(d, "eta1", "domain");
        const json& e2 = require(d, "eta2", "domain");
        if (!e1.is_array() || e1.size() != 2) config_fail("domain.eta1", "expected [begin, end]");
        if (!e2.is_array() || e2.size() != 2) config_fail("domain.eta2", "expected [begin, end]");
        cfg.model.domain.eta1_begin = number(e1[0], "domain.eta1");
        cfg.model.domain.eta1_end = number(e1[1], "domain.eta1");
        cfg.model.domain.eta2_begin = number(e2[0], "domain.eta2");
        cfg.model.domain.eta2_end = number(e2[1], "domain.eta2");
        cfg.model.domain.periodic_eta1 = d.value("periodic_eta1", false);
        if (cfg.model.domain.eta1_end <= cfg.model.domain.eta1_begin)
            config_fail("domain.eta1", "end must exceed begin");
        if (cfg.model.domain.eta2_end <= cfg.model.domain.eta2_begin)
            config_fail("domain.eta2", "end must exceed begin");
    }

    cfg.model.thickness = number(j.at("thickness"), "thickness");
    if (cfg.model.thickness <= 0.0) config_fail("thickness", "must be positive");

    if (j.contains("basis")) {
        const json& b = j.at("basis");
        const std::string family = text_or(b, "family", "monomial", "basis");
        if (family == "monomial") cfg.model.family = BasisFamily::Monomial;
        else if (family == "legendre") cfg.model.family = BasisFamily::Legendre;
        else config_fail("basis.family", "expected 'monomial' or 'legendre'");
        if (b.contains("orders")) {
            const json& o = b.at("orders");
            if (!o.is_array() || o.size() != 3) config_fail("basis.orders", "expected [n, m, p]");
            cfg.model.orders.n = o[0].get<int>();
            cfg.model.orders.m = o[1].get<int>();
            cfg.model.orders.p = o[2].get<int>();
            if (cfg.model.orders.n < 0 || cfg.model.orders.m < 0 || cfg.model.orders.p < 0)
                config_fail("basis.orders", "orders must be non-negative");
        }
    }

    cfg.model.material = parse_material(j.at("material"), "material", cfg.warnings);

    {
        const json& m = j.at("mesh");
        const json& e = require(m, "elements", "mesh");
        if (!e.is_array() || e.size() != 2) config_fail("mesh.elements", "expected [n1, n2]");
        cfg.model.mesh.elements_eta1 = e[0].get<int>();
        cfg.model.mesh.elements_eta2 = e[1].get<int>();
        cfg.model.mesh.degree = integer_or(m, "degree", 3, "mesh");
        if (cfg.model.mesh.elements_eta1 < 1 || cfg.model.mesh.elements_eta2 < 1)
            config_fail("mesh.elements", "element counts must be >= 1");
        if (cfg.model.mesh.degree < 1) config_fail("mesh.degree", "degree must be >= 1");
        cfg.model.quadrature_inplane = integer_or(m, "quadrature_inplane", 0, "mesh");
        cfg.model.quadrature_thickness = integer_or(m, "quadrature_thickness", 0, "mesh");
    }

    if (j.contains("bcs")) {
        const json& bcs = j.at("bcs");
        if (!bcs.is_array()) config_fail("bcs", "expected an array");
        int index = 0;
        for (const json& b : bcs) {
            const std::string path = "bcs[" + std::to_string(index++) + "]";
            BoundaryCondition bc;
            bc.edge = parse_edge(text_or(b, "edge", "", path + ".edge"), path + ".edge");
            const std::string kind = text_or(b, "kind", "", path + ".kind");
            if (kind == "fixed") bc.kind = BcKind::Fixed;
            else if (kind == "hinged") bc.kind = BcKind::Hinged;
            else if (kind == "symmetry_eta1") bc.kind = BcKind::SymmetryEta1;
            else if (kind == "symmetry_eta2") bc.kind = BcKind::SymmetryEta2;
            else if (kind == "prescribed") {
                bc.kind = BcKind::PrescribedDof;
                bc.family = parse_family(text_or(b, "family", "", path + ".family"),
                                         path + ".family");
                bc.order = integer_or(b, "order", -1, path);
                if (number_or(b, "value", 0.0, path) != 0.0)
                    config_fail(path + ".value", "only homogeneous (zero) values are supported");
            } else config_fail(path + ".kind", "unknown boundary condition kind '" + kind + "'");
            cfg.model.bcs.push_back(bc);
        }
    }

    if (j.contains("loads")) {
        const json& l = j.at("loads");
        if (l.contains("pressure")) {
            const json& p = l.at("pressure");
            PressureLoad pressure;
            pressure.magnitude = number_at(p, "magnitude", "loads.pressure");
            const std::string surf = text_or(p, "surface", "bottom", "loads.pressure");
            if (surf == "bottom" || surf == "inner") pressure.surface = LateralSurface::Bottom;
            else if (surf == "top" || surf == "outer") pressure.surface = LateralSurface::Top;
            else throw BadSurfaceSelector("loads.pressure.surface: expected bottom|top, got '" +
                                          surf + "'");
            cfg.model.loads.pressure = pressure;
            cfg.load_reference = std::abs(pressure.magnitude);
        }
        if (l.contains("points")) {
            int index = 0;
            for (const json& p : l.at("points")) {
                const std::string path = "loads.points[" + std::to_string(index++) + "]";
                PointLoad load;
                const json& at = require(p, "at", path);
                if (!at.is_array() || at.size() != 2) config_fail(path + ".at", "expected [eta1, eta2]");
                load.eta1 = number(at[0], path + ".at");
                load.eta2 = number(at[1], path + ".at");
                load.components = vec3_at(require(p, "components", path), path + ".components");
                cfg.model.loads.point_loads.push_back(load);
                if (cfg.load_reference == 0.0) cfg.load_reference = load.components.norm();
            }
        }
        if (l.contains("body_force")) {
            const json& b = l.at("body_force");
            BodyForce body;
            body.per_mass = vec3_at(require(b, "per_mass", "loads.body_force"),
                                    "loads.body_force.per_mass");
            body.density = number_at(b, "density", "loads.body_force");
            cfg.model.loads.body_force = body;
            if (cfg.load_reference == 0.0)
                cfg.load_reference = body.density * body.per_mass.norm();
        }
    }

    if (j.contains("solver")) {
        const json& s = j.at("solver");
        const std::string method = text_or(s, "method", "arclength", "solver");
        if (method == "newton") cfg.solver.method = SolveMethod::Newton;
        else if (method == "arclength" || method == "arc_length")
            cfg.solver.method = SolveMethod::ArcLength;
        else config_fail("solver.method", "expected 'newton' or 'arclength'");
        cfg.solver.tolerance = number_or(s, "tolerance", 1e-3, "solver");
        if (cfg.solver.tolerance <= 0.0) config_fail("solver.tolerance", "must be positive");
        cfg.solver.max_iterations = integer_or(s, "max_iterations", 30, "solver");
        cfg.solver.max_steps = integer_or(s, "max_steps", 200, "solver");
        cfg.solver.initial_increment = number_or(s, "initial_increment", 0.1, "solver");
        cfg.solver.lambda_stop = number_or(s, "lambda_stop", 1.0, "solver");
        cfg.solver.newton_steps = integer_or(s, "newton_steps", 10, "solver");
        cfg.solver.desired_iterations = integer_or(s, "desired_iterations", 5, "solver");
        cfg.solver.psi_scale = number_or(s, "psi_scale", 0.0, "solver");
        cfg.solver.force_floor = number_or(s, "force_floor", 1.0, "solver");
        cfg.solver.max_halvings = integer_or(s, "max_halvings", 5, "solver");
    }

    if (j.contains("output")) {
        const json& o = j.at("output");
        cfg.output.directory = text_or(o, "directory", "out", "output");
        cfg.output.surface_interval = integer_or(o, "surface_interval", 0, "output");
        if (o.contains("probes")) {
            int index = 0;
            for (const json& p : o.at("probes")) {
                const std::string path = "output.probes[" + std::to_string(index++) + "]";
                if (!p.is_array() || p.size() != 3)
                    config_fail(path, "expected [eta1, eta2, zeta]");
                cfg.output.probes.push_back(
                    {number(p[0], path), number(p[1], path), number(p[2], path)});
            }
        }
    }

    if (j.contains("anchor")) {
        const json& a = j.at("anchor");
        if (a.contains("origin"))
            cfg.anchor_origin = vec3_at(a.at("origin"), "anchor.origin");
        if (a.contains("frame")) {
            const json& f = a.at("frame");
            if (!f.is_array() || f.size() != 3) config_fail("anchor.frame", "expected 3 rows");
            for (int r = 0; r < 3; ++r)
                cfg.anchor_frame.row(r) = vec3_at(f[static_cast<size_t>(r)], "anchor.frame").transpose();
        }
    }

    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

namespace {

RunConfig semi_cylinder_preset() {
    RunConfig cfg;
    cfg.name = "semi_cylinder_6_1";
    cfg.model.geometry = GeometryKind::cylinder(1.016);
    cfg.model.domain = {-M_PI / 2.0, M_PI / 2.0, 0.0, 3.048, false};
    cfg.model.thickness = 0.03;
    cfg.model.orders = {1, 1, 2};
    const double mu = shear_modulus_from_young(20.685e6, 0.3);
    cfg.model.material =
        MaterialModel::saint_venant_kirchhoff(lame_lambda_from_poisson(mu, 0.3), mu);
    cfg.model.mesh = {16, 6, 3};
    // One end fully clamped; the straight edges keep u_eta1 = 0 at every
    // expansion order.
    cfg.model.bcs.push_back({EdgeId::Eta2Begin, BcKind::Fixed});
    cfg.model.bcs.push_back({EdgeId::Eta1Begin, BcKind::PrescribedDof, DofFamily::Eta1, -1});
    cfg.model.bcs.push_back({EdgeId::Eta1End, BcKind::PrescribedDof, DofFamily::Eta1, -1});
    PointLoad load;
    load.eta1 = 0.0;
    load.eta2 = 3.048;
    load.components = Vec3(0.0, 0.0, -1614.5); // radial pull-in at the free crown
    cfg.model.loads.point_loads.push_back(load);
    cfg.load_reference = 1614.5;
    cfg.solver.method = SolveMethod::ArcLength;
    cfg.solver.initial_increment = 0.05;
    cfg.solver.lambda_stop = 1.0;
    cfg.solver.max_steps = 400;
    cfg.output.probes.push_back({0.0, 3.048, 0.0});
    return cfg;
}

RunConfig hyperboloid_preset() {
    RunConfig cfg;
    cfg.name = "hyperboloid_6_2";
    // Waist radius 7.5 flaring to 15 at the ends of the 40-long shell.
    cfg.model.geometry = GeometryKind::surface_of_revolution(
        RadiusProfile::hyperboloid(7.5, 20.0 / std::sqrt(3.0)));
    cfg.model.domain = {0.0, M_PI / 2.0, 0.0, 20.0, false};
    cfg.model.thickness = 0.04;
    cfg.model.orders = {1, 1, 2};
    const double mu = 1.6e6;
    cfg.model.material = MaterialModel::neo_hookean(lame_lambda_from_poisson(mu, 0.25), mu);
    cfg.model.mesh = {10, 10, 4};
    // One-eighth model: mirror planes at theta = 0, theta = pi/2 and the
    // mid cross-section s = 0; the far edge is free.
    cfg.model.bcs.push_back({EdgeId::Eta1Begin, BcKind::SymmetryEta1});
    cfg.model.bcs.push_back({EdgeId::Eta1End, BcKind::SymmetryEta1});
    cfg.model.bcs.push_back({EdgeId::Eta2Begin, BcKind::SymmetryEta2});
    // Alternating point loads at the mid cross-section; each corner load is
    // shared by four mirror octants.
    PointLoad pull;
    pull.eta1 = 0.0;
    pull.eta2 = 0.0;
    pull.components = Vec3(0.0, 0.0, -0.25);
    PointLoad push;
    push.eta1 = M_PI / 2.0;
    push.eta2 = 0.0;
    push.components = Vec3(0.0, 0.0, 0.25);
    cfg.model.loads.point_loads.push_back(pull);
    cfg.model.loads.point_loads.push_back(push);
    cfg.load_reference = 1.0; // lambda is the applied load in pounds
    cfg.solver.method = SolveMethod::Newton;
    cfg.solver.lambda_stop = 563.0;
    cfg.solver.newton_steps = 12;
    cfg.output.probes.push_back({0.0, 0.0, 0.0});
    return cfg;
}

RunConfig arch_strip_preset() {
    RunConfig cfg;
    cfg.name = "arch_strip_6_3";
    cfg.model.geometry = GeometryKind::cylinder(5.0);
    // Arc subtending 0.6 pi; the strip width along the axis is 1 in
    // (the study reports only the arc geometry).
    cfg.model.domain = {-0.3 * M_PI, 0.3 * M_PI, 0.0, 1.0, false};
    cfg.model.thickness = 0.04;
    cfg.model.orders = {1, 1, 2};
    const double mu = shear_modulus_from_young(2.0685e7, 0.3);
    cfg.model.material =
        MaterialModel::saint_venant_kirchhoff(lame_lambda_from_poisson(mu, 0.3), mu);
    cfg.model.mesh = {20, 2, 3};
    cfg.model.bcs.push_back({EdgeId::Eta1Begin, BcKind::Fixed});
    cfg.model.bcs.push_back({EdgeId::Eta1End, BcKind::Fixed});
    PointLoad load;
    load.eta1 = 0.0;
    load.eta2 = 0.5;
    load.components = Vec3(0.0, 0.0, -100.0); // push the crown inward
    cfg.model.loads.point_loads.push_back(load);
    cfg.load_reference = 100.0;
    cfg.solver.method = SolveMethod::ArcLength;
    cfg.solver.initial_increment = 0.1;
    cfg.solver.lambda_stop = 1e9; // trace until max_steps; the path folds back
    cfg.solver.max_steps = 120;
    cfg.output.probes.push_back({0.0, 0.5, 0.0});
    return cfg;
}

RunConfig pressurized_cylinder_preset() {
    RunConfig cfg;
    cfg.name = "pressurized_cylinder_6_4";
    cfg.model.geometry = GeometryKind::cylinder(1.0);
    cfg.model.domain = {0.0, M_PI / 2.0, 0.0, 3.0, false};
    cfg.model.thickness = 0.01;
    cfg.model.orders = {1, 1, 2};
    const double mu = 3.333e4;
    cfg.model.material = MaterialModel::neo_hookean(lame_lambda_from_poisson(mu, 0.3), mu);
    cfg.model.mesh = {8, 10, 2};
    // One-eighth model: clamped end, mirror plane at mid-length, mirror
    // planes on both theta edges.
    cfg.model.bcs.push_back({EdgeId::Eta2Begin, BcKind::Fixed});
    cfg.model.bcs.push_back({EdgeId::Eta2End, BcKind::SymmetryEta2});
    cfg.model.bcs.push_back({EdgeId::Eta1Begin, BcKind::SymmetryEta1});
    cfg.model.bcs.push_back({EdgeId::Eta1End, BcKind::SymmetryEta1});
    PressureLoad pressure;
    pressure.magnitude = 278.7; // lambda = 1 at the reported peak pressure
    pressure.surface = LateralSurface::Bottom;
    cfg.model.loads.pressure = pressure;
    cfg.load_reference = 278.7;
    cfg.solver.method = SolveMethod::ArcLength;
    cfg.solver.initial_increment = 0.05;
    cfg.solver.lambda_stop = 1.0;
    cfg.solver.max_steps = 200;
    cfg.output.probes.push_back({M_PI / 4.0, 3.0, 0.0});
    return cfg;
}

RunConfig spiral_tube_preset() {
    RunConfig cfg;
    cfg.name = "spiral_tube_6_5";
    cfg.model.geometry = GeometryKind::constant_tube(0.3, CurveFrame::frenet(0.5, -0.5));
    cfg.model.domain = {0.0, 2.0 * M_PI, 0.0, 12.0, true};
    cfg.model.thickness = 0.05;
    cfg.model.orders = {1, 1, 2};
    const double mu = 3.333e4;
    cfg.model.material = MaterialModel::neo_hookean(lame_lambda_from_poisson(mu, 0.3), mu);
    cfg.model.mesh = {7, 8, 4};
    cfg.model.bcs.push_back({EdgeId::Eta2Begin, BcKind::Fixed});
    cfg.model.bcs.push_back({EdgeId::Eta2End, BcKind::Fixed});
    PressureLoad pressure;
    pressure.magnitude = 1000.0; // lambda counts ksi
    pressure.surface = LateralSurface::Bottom;
    cfg.model.loads.pressure = pressure;
    cfg.load_reference = 1000.0;
    cfg.solver.method = SolveMethod::ArcLength;
    cfg.solver.initial_increment = 0.1;
    cfg.solver.lambda_stop = 2.05;
    cfg.solver.max_steps = 400;
    cfg.output.probes.push_back({M_PI, 6.0, 0.0});
    // Frenet anchor of the unit-radius helix with pitch angle 45 degrees.
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    cfg.anchor_origin = Vec3(1.0, 0.0, 0.0);
    cfg.anchor_frame << 0.0, inv_sqrt2, inv_sqrt2, // T
        -1.0, 0.0, 0.0,                            // M1 (principal normal)
        0.0, -inv_sqrt2, inv_sqrt2;                // M2 (binormal)
    return cfg;
}

RunConfig ring_cylinder_preset() {
    RunConfig cfg;
    cfg.name = "ring_cylinder";
    cfg.model.geometry = GeometryKind::cylinder(1.0);
    cfg.model.domain = {0.0, 2.0 * M_PI, 0.0, 6.0, true};
    cfg.model.thickness = 0.01;
    cfg.model.orders = {1, 1, 2};
    const double mu = 3.333e4;
    cfg.model.material = MaterialModel::neo_hookean(lame_lambda_from_poisson(mu, 0.3), mu);
    cfg.model.mesh = {8, 6, 2};
    cfg.model.bcs.push_back({EdgeId::Eta2Begin, BcKind::Fixed});
    cfg.model.bcs.push_back({EdgeId::Eta2End, BcKind::Fixed});
    PressureLoad pressure;
    pressure.magnitude = 27.87;
    pressure.surface = LateralSurface::Bottom;
    cfg.model.loads.pressure = pressure;
    cfg.load_reference = 27.87;
    cfg.solver.method = SolveMethod::Newton;
    cfg.solver.lambda_stop = 1.0;
    cfg.solver.newton_steps = 4;
    cfg.output.probes.push_back({0.0, 3.0, 0.0});
    return cfg;
}

} // namespace

RunConfig preset(const std::string& name) {
    RunConfig cfg;
    if (name == "semi_cylinder_6_1") cfg = semi_cylinder_preset();
    else if (name == "hyperboloid_6_2") cfg = hyperboloid_preset();
    else if (name == "arch_strip_6_3") cfg = arch_strip_preset();
    else if (name == "pressurized_cylinder_6_4") cfg = pressurized_cylinder_preset();
    else if (name == "spiral_tube_6_5") cfg = spiral_tube_preset();
    else if (name == "ring_cylinder") cfg = ring_cylinder_preset();
    else {
        std::string known;
        for (const std::string& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
        throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
    }
    return cfg;
}

std::vector<std::string> preset_names() {
    return {"semi_cylinder_6_1", "hyperboloid_6_2", "arch_strip_6_3",
            "pressurized_cylinder_6_4", "spiral_tube_6_5", "ring_cylinder"};
}

} // namespace shellfe
