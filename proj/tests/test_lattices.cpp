#include "polyquat/lattices.hpp"

#include "polyquat/coxeter.hpp"
#include "polyquat/qgroups.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace polyquat;
using namespace polyquat::lattices;
using field::FieldElement;
using field::Rational;
using quat::Quaternion;

namespace {

Quaternion qv(int a, int b, int c, int d) {
    return {FieldElement(a), FieldElement(b), FieldElement(c), FieldElement(d)};
}

}  // namespace

TEST_CASE("lattice membership") {
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
    const FieldElement h(Rational(1, 2));

    CHECK(contains(LatticeKind::FCC, e1 + e2));
    CHECK_FALSE(contains(LatticeKind::FCC, e1));
    CHECK(contains(LatticeKind::FCC, qv(0, 2, -1, 1)));

    CHECK(contains(LatticeKind::SC, e1));
    CHECK(contains(LatticeKind::SC, qv(0, 3, -2, 7)));
    CHECK_FALSE(contains(LatticeKind::SC, (e1 + e2 + e3) * h));

    CHECK(contains(LatticeKind::BCC, (e1 + e2 + e3) * h));
    CHECK(contains(LatticeKind::BCC, qv(0, 1, 1, 0)));
    CHECK_FALSE(contains(LatticeKind::BCC, (e1 + e2) * h));  // mixed half/integer

    CHECK(contains(LatticeKind::BCC2, qv(0, 2, 0, -4)));
    CHECK(contains(LatticeKind::BCC2, qv(0, 1, 1, -3)));
    CHECK_FALSE(contains(LatticeKind::BCC2, qv(0, 2, 1, 0)));
    CHECK_FALSE(contains(LatticeKind::BCC2, (e1 + e2 + e3) * h));

    CHECK(contains(LatticeKind::D4Root, qv(3, 2, 1, 0)));
    CHECK_FALSE(contains(LatticeKind::D4Root, qv(1, 0, 0, 0)));  // odd sum
    CHECK_FALSE(contains(LatticeKind::D4Root, Quaternion::one() * h));

    // Irrational coordinates are never members; 3D lattices reject nonzero
    // scalar parts.
    for (LatticeKind k : all_lattice_kinds()) {
        CHECK_FALSE(contains(k, e1 * FieldElement::tau()));
        if (k != LatticeKind::D4Root) CHECK_FALSE(contains(k, qv(1, 1, 1, 1)));
    }
    CHECK(parse_lattice_kind("fcc") == LatticeKind::FCC);
    CHECK(lattice_kind_str(LatticeKind::D4Root) == "d4");
    CHECK_THROWS_AS(parse_lattice_kind("hexagonal"), std::invalid_argument);
}

TEST_CASE("voronoi cells") {
    CHECK(voronoi_vertices(LatticeKind::SC).size() == 8);
    CHECK(voronoi_vertices(LatticeKind::FCC).size() == 14);
    CHECK(voronoi_vertices(LatticeKind::BCC).size() == 24);
    CHECK(voronoi_vertices(LatticeKind::BCC2).size() == 24);
    CHECK(voronoi_vertices(LatticeKind::D4Root).size() == 24);

    // sc: the half-unit cube.
    const FieldElement h(Rational(1, 2));
    auto sc = voronoi_vertices(LatticeKind::SC);
    for (int b = 0; b < 8; ++b)
        CHECK(sc.contains(Quaternion::vec((b & 1) ? -h : h, (b & 2) ? -h : h,
                                          (b & 4) ? -h : h)));

    // fcc: octahedron united with the half cube (rhombic dodecahedron).
    auto fcc = voronoi_vertices(LatticeKind::FCC);
    CHECK(fcc.contains(Quaternion::e1()));
    CHECK(fcc.contains(-Quaternion::e3()));
    CHECK(fcc.contains((Quaternion::e1() + Quaternion::e2() - Quaternion::e3()) * h));

    // bcc: the truncated octahedron 1/4 (+-2 e_i +- e_j), identical to the
    // orbit-generated solid.
    auto bcc = voronoi_vertices(LatticeKind::BCC);
    CHECK(bcc.points == polytopes::standard_solid("truncated-octahedron").vertices.points);

    // The doubled-convention bcc cell is the same solid scaled by 4... scaled
    // by 2: +-2 e_i +- e_j over 2.
    auto bcc2 = voronoi_vertices(LatticeKind::BCC2);
    for (std::size_t i = 0; i < bcc.size(); ++i)
        CHECK(bcc2.contains(bcc.points[i] * FieldElement(2)));

    // D4: the 24-cell T'/sqrt2.
    auto d4 = voronoi_vertices(LatticeKind::D4Root);
    const auto tp = qgroups::build_Tprime();
    const FieldElement inv_sqrt2 = h * FieldElement::sqrt2();
    for (const auto& t : tp.elements()) CHECK(d4.contains(t * inv_sqrt2));
}

TEST_CASE("fibonacci chain") {
    FibonacciChain chain = fibonacci_chain(12);
    CHECK(chain.terms.size() == 11);
    for (const auto& t : chain.terms) {
        CHECK(t.x_n >= 1);
        CHECK(t.x_n <= 2);
        // Closed form agrees with the recurrence.
        CHECK(fibonacci_closed_form(t.n) == FieldElement(Rational(t.f_n)));
    }
    CHECK(chain.terms[2].n == 4);
    CHECK(chain.terms[2].x_n == Rational(5, 3));
    CHECK(chain.terms[8].n == 10);
    CHECK(chain.terms[8].f_n == 55);
    CHECK(fibonacci_closed_form(7) == FieldElement(13));
    CHECK_THROWS_AS(fibonacci_chain(1), std::invalid_argument);
}

TEST_CASE("fcc is the D3 root lattice") {
    const auto& d3 = coxeter::root_datum(coxeter::Diagram::D3);
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<int> coeff(-20, 20);
    for (int trial = 0; trial < 10000; ++trial) {
        // Integer root combinations land in fcc ...
        Quaternion v = Quaternion::zero();
        for (const auto& alpha : d3.simple_roots) v = v + alpha * FieldElement(coeff(rng));
        CHECK(contains(LatticeKind::FCC, v));
        // ... and random fcc points have integer root coordinates.
        int m1 = coeff(rng), m2 = coeff(rng), m3 = coeff(rng);
        if ((m1 + m2 + m3) % 2 != 0) ++m3;
        Quaternion w = qv(0, m1, m2, m3);
        REQUIRE(contains(LatticeKind::FCC, w));
        auto coords = coxeter::expand_in_basis(d3.simple_roots, w);
        REQUIRE(coords);
        for (const auto& c : *coords) {
            CHECK(c.is_rational());
            CHECK(boost::multiprecision::denominator(c.rational_value()) == 1);
        }
    }
}

TEST_CASE("d4 weights against the root lattice") {
    const auto& d4 = coxeter::root_datum(coxeter::Diagram::D4);
    // omega2 is a root-lattice point; the others need doubling (their sum is
    // half-odd in two coordinates or odd in total).
    CHECK(contains(LatticeKind::D4Root, d4.weights[1]));
    for (std::size_t i : {0u, 2u, 3u}) {
        CHECK_FALSE(contains(LatticeKind::D4Root, d4.weights[i]));
        CHECK(contains(LatticeKind::D4Root, d4.weights[i] * FieldElement(2)));
    }
}

TEST_CASE("approximant snubs stay in the D4 lattice") {
    for (int n = 2; n <= 20; ++n) {
        ApproximantReport r = approximant_check(n);
        CHECK(r.icosahedron_in_sc);
        CHECK(r.snub_in_d4);
    }
    // The golden-ratio snub leaves the lattice.
    auto golden = polytopes::snub24(polytopes::SnubParameter{FieldElement::tau()});
    bool all_in = true;
    for (const auto& v : golden.vertices.points)
        all_in &= contains(LatticeKind::D4Root, v);
    CHECK_FALSE(all_in);
}

TEST_CASE("approximant coefficients are Fibonacci triples") {
    ApproximantReport r2 = approximant_check(2);
    CHECK(r2.x == Rational(2));
    CHECK(r2.snub_coefficients == std::vector<field::BigInt>{2, 3, 5});
    ApproximantReport r4 = approximant_check(4);
    CHECK(r4.x == Rational(5, 3));
    CHECK(r4.scale == 3);
    CHECK(r4.snub_coefficients == std::vector<field::BigInt>{5, 8, 13});
    ApproximantReport r6 = approximant_check(6);
    CHECK(r6.snub_coefficients == std::vector<field::BigInt>{13, 21, 34});
}

TEST_CASE("approximant convergence to the golden snub") {
    double prev = 2.0;
    for (int n : {2, 4, 6, 8, 10}) {
        ApproximantReport r = approximant_check(n);
        CHECK(r.distance_to_golden < prev);
        prev = r.distance_to_golden;
    }
    CHECK(prev < 1e-3);
    // |x_10 - tau| < 1e-3.
    ApproximantReport r10 = approximant_check(10);
    double x10 = static_cast<double>(boost::multiprecision::numerator(r10.x)) /
                 static_cast<double>(boost::multiprecision::denominator(r10.x));
    CHECK(std::abs(x10 - FieldElement::tau().to_float()) < 1e-3);
}
