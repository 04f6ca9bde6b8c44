#include "polyquat/export.hpp"

#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>

using namespace polyquat;
using namespace polyquat::exporter;
using field::FieldElement;
using field::Rational;

TEST_CASE("json export schema and determinism") {
    polytopes::Polytope p = polytopes::pseudoicosahedron(FieldElement(1), 1);
    std::string text = polytope_json(p);
    CHECK(text == polytope_json(p));  // byte-identical reruns

    auto j = nlohmann::json::parse(text);
    CHECK(j["family"] == "pseudo-icosahedron");
    CHECK(j["parameter"]["exact"] == "1");
    CHECK(j["vertices"].size() == 12);
    CHECK(j["edges"].size() == 30);
    CHECK(j["faces"].size() == 20);
    CHECK(j["cells"].empty());
    CHECK(j["vertices"][0]["exact"].size() == 4);
    CHECK(j["vertices"][0]["float"].size() == 4);
}

TEST_CASE("json round trip is byte-identical") {
    for (const auto& p :
         {polytopes::standard_solid("truncated-octahedron"),
          polytopes::pyritohedron(FieldElement(Rational(3, 2))),
          polytopes::snub24_cells({FieldElement(1)})}) {
        std::string text = polytope_json(p);
        polytopes::Polytope back = polytope_from_json(text);
        CHECK(polytope_json(back) == text);
        CHECK(back.vertices.points == p.vertices.points);
        CHECK(back.edges == p.edges);
        CHECK(back.faces == p.faces);
        CHECK(back.cells.size() == p.cells.size());
    }
}

TEST_CASE("off export of a 3D solid") {
    polytopes::Polytope cube = polytopes::standard_solid("cube");
    std::string off = polytope_off(cube);
    std::istringstream in(off);
    std::string header;
    std::size_t v = 0, f = 0, e = 0;
    in >> header >> v >> f >> e;
    CHECK(header == "OFF");
    CHECK(v == 8);
    CHECK(f == 6);
    CHECK(e == 12);
    // All vertex coordinates parse as +-1/2.
    for (std::size_t i = 0; i < 3 * v; ++i) {
        double c = 99;
        in >> c;
        CHECK(std::abs(c) == doctest::Approx(0.5));
    }
    // Each face line: size then indices in range.
    for (std::size_t i = 0; i < f; ++i) {
        std::size_t k = 0;
        in >> k;
        CHECK(k == 4);
        for (std::size_t t = 0; t < k; ++t) {
            std::size_t idx = 99;
            in >> idx;
            CHECK(idx < v);
        }
    }
    CHECK_THROWS_AS(polytope_off(polytopes::snub24_cells({FieldElement(1)})),
                    std::invalid_argument);
}

TEST_CASE("cell catalog for the snub 24-cell") {
    polytopes::Polytope p = polytopes::snub24_cells({FieldElement(1)});
    CellCatalog cat = cell_catalog(p);
    CHECK(cat.cell_offs.size() == 3);
    CHECK(cat.cell_offs.count("cell-icosahedron.off") == 1);
    CHECK(cat.cell_offs.count("cell-tetrahedron.off") == 1);
    CHECK(cat.cell_offs.count("cell-pyramid.off") == 1);
    // The icosahedral sample is a 12-vertex, 20-face, 30-edge mesh.
    std::istringstream in(cat.cell_offs["cell-icosahedron.off"]);
    std::string header;
    std::size_t v = 0, f = 0, e = 0;
    in >> header >> v >> f >> e;
    CHECK(header == "OFF");
    CHECK(v == 12);
    CHECK(f == 20);
    CHECK(e == 30);
    CHECK(cat.sidecar_json == polytope_json(p));
    CHECK_THROWS_AS(cell_catalog(polytopes::standard_solid("cube")),
                    std::invalid_argument);
}

TEST_CASE("fibonacci approximant csv") {
    std::string csv = fib_csv(10, "snub24");
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,f_n,x_n,in_lattice,distance_to_golden");
    int rows = 0;
    double prev = 2.0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",true,") != std::string::npos);
        double dist = std::atof(line.substr(line.rfind(',') + 1).c_str());
        CHECK(dist < prev);
        prev = dist;
    }
    CHECK(rows == 9);  // n = 2 .. 10
    CHECK(prev < 1e-3);

    std::string icosa_csv = fib_csv(6, "pseudo-icosahedron");
    std::istringstream in2(icosa_csv);
    std::getline(in2, line);
    rows = 0;
    prev = 2.0;
    while (std::getline(in2, line)) {
        ++rows;
        CHECK(line.find(",true,") != std::string::npos);
        double dist = std::atof(line.substr(line.rfind(',') + 1).c_str());
        CHECK(dist < prev);
        prev = dist;
    }
    CHECK(rows == 5);
    CHECK_THROWS_AS(fib_csv(5, "cube"), std::invalid_argument);
}

TEST_CASE("precision bits from the environment") {
    unsetenv("POLYQUAT_PRECISION_BITS");
    CHECK(precision_bits_from_env() == 128);
    setenv("POLYQUAT_PRECISION_BITS", "256", 1);
    CHECK(precision_bits_from_env() == 256);
    setenv("POLYQUAT_PRECISION_BITS", "12", 1);
    CHECK_THROWS_AS(precision_bits_from_env(), std::invalid_argument);
    setenv("POLYQUAT_PRECISION_BITS", "abc", 1);
    CHECK_THROWS_AS(precision_bits_from_env(), std::invalid_argument);
    unsetenv("POLYQUAT_PRECISION_BITS");
}
