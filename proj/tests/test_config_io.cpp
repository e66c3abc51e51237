#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "shellfe/config.hpp"
#include "shellfe/output.hpp"
#include "support.hpp"

using namespace shellfe;
using namespace testsupport;

TEST_CASE("a complete config round-trips into a model definition") {
    const std::string text = R"({
        "name": "demo",
        "geometry": { "kind": "constant_tube", "radius": 0.3,
                      "curve": { "curvature": 0.5, "torsion": -0.5 } },
        "domain": { "eta1": [0, 6.283185307179586], "eta2": [0, 12], "periodic_eta1": true },
        "thickness": 0.05,
        "basis": { "family": "monomial", "orders": [1, 1, 2] },
        "material": { "model": "neo_hookean", "mu": 3.333e4, "nu": 0.3 },
        "mesh": { "elements": [7, 8], "degree": 4 },
        "bcs": [ { "edge": "eta2_begin", "kind": "fixed" },
                 { "edge": "eta2_end", "kind": "fixed" } ],
        "loads": { "pressure": { "magnitude": 1000.0, "surface": "inner" } },
        "solver": { "method": "arclength", "tolerance": 1e-3, "lambda_stop": 2.05 },
        "output": { "directory": "demo_out", "probes": [[3.141592653589793, 6, 0]] }
    })";
    const RunConfig cfg = parse_config(text);
    CHECK(cfg.name == "demo");
    CHECK(cfg.model.geometry.family() == SurfaceFamily::ConstantTube);
    CHECK(cfg.model.geometry.constant_radius() == doctest::Approx(0.3));
    CHECK(cfg.model.domain.periodic_eta1);
    CHECK(cfg.model.material.mu() == doctest::Approx(3.333e4));
    CHECK(cfg.model.material.lambda() == doctest::Approx(2 * 3.333e4 * 0.3 / 0.4));
    CHECK(cfg.model.mesh.degree == 4);
    CHECK(cfg.model.loads.pressure->magnitude == doctest::Approx(1000.0));
    CHECK(cfg.solver.lambda_stop == doctest::Approx(2.05));
    CHECK(cfg.output.probes.size() == 1);
    CHECK(cfg.load_reference == doctest::Approx(1000.0));
}

TEST_CASE("an empty config reports every missing section at once") {
    try {
        parse_config("{}");
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        const std::string what = err.what();
        for (const char* section : {"geometry", "domain", "thickness", "material", "mesh"})
            CHECK(what.find(section) != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config("not json"), ConfigError);
}

TEST_CASE("config field errors carry their path") {
    const char* bad_nu = R"({
        "geometry": { "kind": "plate" }, "domain": { "eta1": [0,1], "eta2": [0,1] },
        "thickness": 0.1, "mesh": { "elements": [1,1] },
        "material": { "model": "neo_hookean", "mu": 1.0, "nu": 0.5 }
    })";
    try {
        parse_config(bad_nu);
        FAIL("expected ConfigError");
    } catch (const ConfigError& err) {
        CHECK(std::string(err.what()).find("material.nu") != std::string::npos);
    }

    const char* bad_surface = R"({
        "geometry": { "kind": "plate" }, "domain": { "eta1": [0,1], "eta2": [0,1] },
        "thickness": 0.1, "mesh": { "elements": [1,1] },
        "material": { "model": "neo_hookean", "mu": 1.0, "nu": 0.3 },
        "loads": { "pressure": { "magnitude": 1.0, "surface": "sideways" } }
    })";
    CHECK_THROWS_AS(parse_config(bad_surface), BadSurfaceSelector);

    const char* bad_expression = R"({
        "geometry": { "kind": "surface_of_revolution", "radius_expression": "7.5*sqrt(" },
        "domain": { "eta1": [0,1], "eta2": [0,1] },
        "thickness": 0.1, "mesh": { "elements": [1,1] },
        "material": { "model": "neo_hookean", "mu": 1.0, "nu": 0.3 }
    })";
    CHECK_THROWS_AS(parse_config(bad_expression), ExpressionParseError);

    const char* nonzero_prescribed = R"({
        "geometry": { "kind": "plate" }, "domain": { "eta1": [0,1], "eta2": [0,1] },
        "thickness": 0.1, "mesh": { "elements": [1,1] },
        "material": { "model": "neo_hookean", "mu": 1.0, "nu": 0.3 },
        "bcs": [ { "edge": "eta1_begin", "kind": "prescribed", "family": "zeta", "value": 0.5 } ]
    })";
    CHECK_THROWS_AS(parse_config(nonzero_prescribed), ConfigError);
}

TEST_CASE("mooney-rivlin with c2 != 0 surfaces a warning") {
    const char* text = R"({
        "geometry": { "kind": "plate" }, "domain": { "eta1": [0,1], "eta2": [0,1] },
        "thickness": 0.1, "mesh": { "elements": [1,1] },
        "material": { "model": "mooney_rivlin", "c1": 1.0, "c2": 0.5, "bulk": 10.0 }
    })";
    const RunConfig cfg = parse_config(text);
    REQUIRE(cfg.warnings.size() == 1);
    CHECK(cfg.warnings[0].find("mooney_rivlin") != std::string::npos);
}

TEST_CASE("preset values match the benchmark descriptions") {
    const RunConfig semi = preset("semi_cylinder_6_1");
    CHECK(semi.model.domain.eta2_end == doctest::Approx(3.048));
    CHECK(semi.model.geometry.constant_radius() == doctest::Approx(1.016));
    CHECK(semi.model.thickness == doctest::Approx(0.03));

    const RunConfig spiral = preset("spiral_tube_6_5");
    CHECK(spiral.model.domain.eta2_end == doctest::Approx(12.0));
    CHECK(spiral.model.geometry.constant_radius() == doctest::Approx(0.3));
    CHECK(spiral.model.thickness == doctest::Approx(0.05));
    CHECK(spiral.model.geometry.curve().kappa1(3.7) == doctest::Approx(0.5));
    CHECK(spiral.model.geometry.curve().kappa2(3.7) == doctest::Approx(0.0));
    CHECK(spiral.model.geometry.curve().kappa3(3.7) == doctest::Approx(-0.5));

    CHECK_THROWS_AS(preset("nope"), ConfigError);
    CHECK(preset_names().size() >= 6);
}

TEST_CASE("the tube embedding follows the reference helix") {
    const RunConfig spiral = preset("spiral_tube_6_5");
    GeometryEmbedding embedding(spiral.model.geometry);
    embedding.set_anchor(spiral.anchor_origin, spiral.anchor_frame);

    // Eq-parametrized helix: x = cos(t/sqrt(2)), y = t/sqrt(2),
    // z = sin(t/sqrt(2)) with arc length s = t.
    auto helix = [](double s) {
        return Vec3(std::cos(s / std::sqrt(2.0)), s / std::sqrt(2.0),
                    std::sin(s / std::sqrt(2.0)));
    };
    auto normal = [](double s) {
        return Vec3(-std::cos(s / std::sqrt(2.0)), 0.0, -std::sin(s / std::sqrt(2.0)));
    };
    for (double s : {0.0, 1.7, 6.0, 11.2}) {
        for (double theta : {0.0, 1.1, M_PI}) {
            // Binormal of this helix.
            const Vec3 b(-std::sin(s / std::sqrt(2.0)) / std::sqrt(2.0), -1.0 / std::sqrt(2.0),
                         std::cos(s / std::sqrt(2.0)) / std::sqrt(2.0));
            const Vec3 want =
                helix(s) + 0.3 * (std::cos(theta) * normal(s) + std::sin(theta) * b);
            const Vec3 got = embedding.position(theta, s, 0.0);
            CHECK((got - want).norm() < 1e-10);
        }
    }
    // The probe location of the pressurized-tube benchmark in Cartesian form.
    const Vec3 probe = embedding.position(M_PI, 6.0, 0.0);
    const Vec3 expected = helix(6.0) - 0.3 * normal(6.0);
    CHECK((probe - expected).norm() < 1e-10);
}

TEST_CASE("result writer emits a streaming csv that round-trips exactly") {
    ModelDefinition def;
    def.geometry = GeometryKind::plate();
    def.domain = {0.0, 1.0, 0.0, 1.0, false};
    def.thickness = 0.1;
    def.orders = {1, 1, 2};
    def.mesh = {1, 1, 1};
    const ShellModel model(def);

    RunConfig cfg;
    cfg.model = def;
    cfg.name = "writer_test";
    cfg.load_reference = 2.5;
    cfg.output.directory = "test_out_writer";
    cfg.output.probes.push_back({0.5, 0.5, 0.0});

    auto& gen = rng(60);
    std::vector<EquilibriumState> states(3);
    for (int k = 0; k < 3; ++k) {
        states[static_cast<size_t>(k)].step = k;
        states[static_cast<size_t>(k)].lambda = uniform(gen, 0.0, 2.0);
        states[static_cast<size_t>(k)].u = Eigen::VectorXd::Zero(model.total_dofs());
        for (int d = 0; d < model.total_dofs(); ++d)
            states[static_cast<size_t>(k)].u(d) = uniform(gen, -0.3, 0.3);
    }

    {
        ResultWriter writer(cfg, model);
        for (const auto& s : states) writer.on_step(s);
        writer.finalize("converged");
    }

    std::ifstream csv("test_out_writer/curve.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header.find("lambda") != std::string::npos);
    for (int k = 0; k < 3; ++k) {
        std::string line;
        REQUIRE(std::getline(csv, line));
        // Fields: step, lambda, load, then probe columns.
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 3 + 4);
        CHECK(std::stod(fields[1]) == states[static_cast<size_t>(k)].lambda);
        CHECK(std::stod(fields[2]) == states[static_cast<size_t>(k)].lambda * 2.5);
        const Vec3 u = model.displacement_at(states[static_cast<size_t>(k)].u, 0.5, 0.5, 0.0);
        CHECK(std::stod(fields[3]) == u(0));
        CHECK(std::stod(fields[6]) == u.norm());
    }

    // Structural check of the surface file: counts consistent, all cells
    // reference valid points.
    std::ifstream vtk("test_out_writer/surface_0002.vtk");
    REQUIRE(vtk.good());
    std::string word;
    int points = 0, cells = 0, cell_entries = 0;
    while (vtk >> word) {
        if (word == "POINTS") {
            vtk >> points;
            break;
        }
    }
    CHECK(points == model.node_count());
    std::vector<double> coords(static_cast<size_t>(points) * 3);
    vtk >> word; // datatype
    for (double& c : coords) REQUIRE((vtk >> c));
    vtk >> word >> cells >> cell_entries;
    REQUIRE(word == "CELLS");
    CHECK(cell_entries == 5 * cells);
    for (int c = 0; c < cells; ++c) {
        int count;
        REQUIRE((vtk >> count));
        REQUIRE(count == 4);
        for (int v = 0; v < 4; ++v) {
            int idx;
            REQUIRE((vtk >> idx));
            CHECK(idx >= 0);
            CHECK(idx < points);
        }
    }

    std::ifstream log("test_out_writer/run.json");
    REQUIRE(log.good());
    std::stringstream buffer;
    buffer << log.rdbuf();
    CHECK(buffer.str().find("\"status\": \"converged\"") != std::string::npos);

    std::filesystem::remove_all("test_out_writer");
}
