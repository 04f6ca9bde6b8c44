#include "polyquat/verify.hpp"

#include "polyquat/coxeter.hpp"
#include "polyquat/lattices.hpp"
#include "polyquat/polytopes.hpp"
#include "polyquat/qgroups.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace polyquat::verify {

namespace {

using field::BigInt;
using field::FieldElement;
using field::Rational;
using quat::OrthoMap;
using quat::Quaternion;

template <typename T>
std::string to_str(const T& value) {
    if constexpr (std::is_same_v<T, bool>) {
        return value ? "true" : "false";
    } else if constexpr (std::is_convertible_v<T, std::string>) {
        return std::string(value);
    } else {
        std::ostringstream out;
        out << value;
        return out.str();
    }
}

struct Checker {
    CheckReport report;

    explicit Checker(std::string name) { report.name = std::move(name); }

    void add(std::string assertion, std::string expected, std::string actual) {
        CheckDetail d;
        d.assertion = std::move(assertion);
        d.expected = std::move(expected);
        d.actual = std::move(actual);
        d.passed = d.expected == d.actual;
        report.details.push_back(std::move(d));
    }

    template <typename A, typename B>
    void eq(const std::string& assertion, const A& expected, const B& actual) {
        add(assertion, to_str(expected), to_str(actual));
    }

    void is_true(const std::string& assertion, bool actual) {
        add(assertion, "true", actual ? "true" : "false");
    }

    /// Runs fn and records whether it threw the expected exception type.
    template <typename Ex, typename Fn>
    void throws(const std::string& assertion, Fn&& fn) {
        std::string actual = "no exception";
        try {
            fn();
        } catch (const Ex&) {
            actual = "throws";
        } catch (const std::exception& e) {
            actual = std::string("wrong exception: ") + e.what();
        }
        add(assertion, "throws", actual);
    }

    CheckReport finish() {
        report.passed =
            std::all_of(report.details.begin(), report.details.end(),
                        [](const CheckDetail& d) { return d.passed; });
        return std::move(report);
    }
};

/// Deterministic nondegenerate rational parameters for randomized suites.
/// positive_only restricts to x > 0, needed where cell geometry must stay
/// convex.
std::vector<Rational> random_parameters(std::size_t count, std::uint32_t seed,
                                        bool positive_only = false) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    std::vector<Rational> out;
    while (out.size() < count) {
        Rational x(num(rng), den(rng));
        if (x == 0 || x == -1 || x == Rational(-1, 2) || x == Rational(-2, 3)) continue;
        if (positive_only && x < 0) continue;
        out.push_back(x);
    }
    return out;
}

std::string edge_norm_profile(const std::vector<Quaternion>& pts,
                              const std::vector<std::size_t>& cell) {
    std::multiset<std::string> norms;
    std::vector<FieldElement> all;
    for (std::size_t i = 0; i < cell.size(); ++i)
        for (std::size_t j = i + 1; j < cell.size(); ++j)
            all.push_back((pts[cell[i]] - pts[cell[j]]).norm());
    // Keep only the shortest-edge classes that occur (a 4-vertex cell is a
    // complete graph, so every pair is an edge).
    for (const auto& n : all) norms.insert(n.str());
    std::string out;
    for (const auto& s : norms) out += s + "; ";
    return out;
}

CheckReport suite_groups() {
    using namespace qgroups;
    Checker c("groups");

    c.eq("|T| = 24", std::size_t{24}, build_T().size());
    c.eq("|T'| = 24", std::size_t{24}, build_Tprime().size());
    c.eq("|O| = 48", std::size_t{48}, build_O().size());
    c.eq("|I| = 120", std::size_t{120}, build_I().size());

    const std::map<GroupName, std::size_t> orders = {
        {GroupName::WD3, 24},     {GroupName::AutD3, 48},
        {GroupName::WB3, 48},     {GroupName::ChiralOct, 24},
        {GroupName::Td, 24},      {GroupName::Th, 24},
        {GroupName::WD4, 192},    {GroupName::WD4_mod_C2, 96},
        {GroupName::TT_288, 288}, {GroupName::Pyr4D_576, 576},
        {GroupName::WF4, 1152},   {GroupName::AutF4, 2304},
        {GroupName::WH3, 120},    {GroupName::WH4, 14400},
    };
    for (const auto& [name, order] : orders)
        c.eq("|" + group_name_str(name) + "|", order, catalog(name).order());

    // Multiplication table of the six 8-element subsets of T and T'.
    auto v = v_subsets();
    const QuatSet* sets[6] = {&v.v0, &v.vplus, &v.vminus, &v.v1, &v.v2, &v.v3};
    const char* labels[6] = {"V0", "V+", "V-", "V1", "V2", "V3"};
    const int table[6][6] = {
        {0, 1, 2, 3, 4, 5}, {1, 2, 0, 5, 3, 4}, {2, 0, 1, 4, 5, 3},
        {3, 4, 5, 0, 1, 2}, {4, 5, 3, 2, 0, 1}, {5, 3, 4, 1, 2, 0},
    };
    for (int r = 0; r < 6; ++r)
        for (int col = 0; col < 6; ++col) {
            QuatSet prod = setprod(*sets[r], *sets[col]);
            std::string actual = "none";
            for (int k = 0; k < 6; ++k)
                if (prod.elements() == sets[k]->elements()) actual = labels[k];
            c.eq(std::string(labels[r]) + " * " + labels[col], labels[table[r][col]],
                 actual);
        }

    auto index_of = [&](GroupName sub, GroupName super) {
        auto [ok, idx] = is_subgroup(catalog(sub), catalog(super));
        return ok ? idx : std::size_t{0};
    };
    c.eq("index of the 576-element group in W(F4)", std::size_t{2},
         index_of(GroupName::Pyr4D_576, GroupName::WF4));
    c.eq("index of the 576-element group in W(H4)", std::size_t{25},
         index_of(GroupName::Pyr4D_576, GroupName::WH4));
    c.eq("index of the 288-element group in the 576-element group", std::size_t{2},
         index_of(GroupName::TT_288, GroupName::Pyr4D_576));
    c.eq("index of W(F4) in Aut(F4)", std::size_t{2},
         index_of(GroupName::WF4, GroupName::AutF4));
    c.eq("index of W(H3) in W(H4)", std::size_t{120},
         index_of(GroupName::WH3, GroupName::WH4));
    c.is_true("Td and W(D3) coincide as transformation groups",
              catalog(GroupName::Td) == catalog(GroupName::WD3));
    return c.finish();
}

CheckReport suite_orbits() {
    using namespace qgroups;
    Checker c("orbits");
    const auto& wd3 = catalog(GroupName::WD3);
    const auto& d3 = coxeter::root_datum(coxeter::Diagram::D3);

    const std::size_t weight_orbit_sizes[3] = {6, 4, 4};
    for (int i = 0; i < 3; ++i)
        c.eq("W(D3) orbit size of weight " + std::to_string(i + 1),
             weight_orbit_sizes[i],
             polytopes::orbit(wd3, d3.weights[std::size_t(i)]).size());
    c.eq("W(D3) orbit size of e1 + e2 (cuboctahedron)", std::size_t{12},
         polytopes::orbit(wd3, Quaternion::e1() + Quaternion::e2()).size());

    // Truncated octahedron: the 24-point orbit of (2 e1 + e2)/4 equals
    // 1/4 (+-2 e_i +- e_j) for all ordered axis pairs.
    polytopes::Polytope to = polytopes::standard_solid("truncated-octahedron");
    c.eq("truncated octahedron vertex count", std::size_t{24}, to.vertices.size());
    bool all_present = true;
    const FieldElement q14(Rational(1, 4)), q12(Rational(1, 2));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            for (int s = 0; s < 4; ++s) {
                FieldElement comp[3] = {0, 0, 0};
                comp[i] = (s & 1) ? -q12 : q12;
                comp[j] = (s & 2) ? -q14 : q14;
                all_present &=
                    to.vertices.contains(Quaternion::vec(comp[0], comp[1], comp[2]));
            }
        }
    c.is_true("truncated octahedron equals 1/4 (+-2 e_i +- e_j)", all_present);

    c.eq("Th orbit size of (e1+e2+e3)/2 (cube)", std::size_t{8},
         polytopes::orbit(catalog(GroupName::Th),
                          Quaternion::vec(q12, q12, q12))
             .size());

    struct SolidCounts {
        const char* family;
        std::size_t v, e, f;
    };
    for (const SolidCounts& s :
         {SolidCounts{"octahedron", 6, 12, 8}, SolidCounts{"tetrahedron", 4, 6, 4},
          SolidCounts{"cube", 8, 12, 6}, SolidCounts{"cuboctahedron", 12, 24, 14},
          SolidCounts{"truncated-octahedron", 24, 36, 14}}) {
        polytopes::Polytope p = polytopes::standard_solid(s.family);
        c.eq(std::string(s.family) + " (V, E, F)",
             "(" + std::to_string(s.v) + ", " + std::to_string(s.e) + ", " +
                 std::to_string(s.f) + ")",
             "(" + std::to_string(p.vertices.size()) + ", " +
                 std::to_string(p.edges.size()) + ", " + std::to_string(p.faces.size()) +
                 ")");
    }
    return c.finish();
}

CheckReport suite_snub() {
    Checker c("snub");

    for (const Rational& x : random_parameters(10, 0x5eed)) {
        polytopes::Polytope s = polytopes::snub24({FieldElement(x)});
        c.eq("|S(" + to_str(x) + ")|", std::size_t{96}, s.vertices.size());
        bool equal_norm = true;
        const FieldElement n0 = s.vertices.points[0].norm();
        for (const auto& v : s.vertices.points) equal_norm &= v.norm() == n0;
        c.is_true("S(" + to_str(x) + ") vertices share one norm", equal_norm);
    }

    // Degenerate parameter: at x = 0 the 96 points collapse onto sqrt2 T'.
    polytopes::Polytope s0 = polytopes::snub24({FieldElement(0)});
    c.is_true("S(0) is flagged degenerate", s0.degenerate);
    c.eq("|S(0)|", std::size_t{24}, s0.vertices.size());
    bool is_sqrt2_tprime = true;
    const qgroups::QuatSet sqrt2_tp =
        qgroups::build_Tprime().scaled(FieldElement::sqrt2(), "sqrt2Tp");
    for (const auto& q : sqrt2_tp.elements()) is_sqrt2_tprime &= s0.vertices.contains(q);
    c.is_true("S(0) equals sqrt2 T'", is_sqrt2_tprime);

    // Full cell structure at x = 1.
    polytopes::Polytope cells = polytopes::snub24_cells({FieldElement(1)});
    std::map<std::string, int> counts;
    for (const auto& cell : cells.cells) counts[cell.type]++;
    c.eq("icosahedral cells", 24, counts["icosahedron"]);
    c.eq("tetrahedral cells", 24, counts["tetrahedron"]);
    c.eq("pyramid cells", 96, counts["pyramid"]);
    c.eq("face count", std::size_t{480}, cells.faces.size());
    c.eq("edge count", std::size_t{432}, cells.edges.size());
    c.eq("Euler characteristic V - E + F - C", std::ptrdiff_t{0},
         std::ptrdiff_t(cells.vertices.size()) - std::ptrdiff_t(cells.edges.size()) +
             std::ptrdiff_t(cells.faces.size()) - std::ptrdiff_t(cells.cells.size()));

    // Cell edge metrics for five rational parameters: tetrahedra have all
    // edges of squared length 4x^2; pyramids have three of 4x^2 and three of
    // 2(x^2+x+1).
    for (const Rational& x : random_parameters(5, 0xce11, /*positive_only=*/true)) {
        const FieldElement fx(x);
        const FieldElement tetra_sq = FieldElement(4) * fx * fx;
        const FieldElement lateral_sq =
            FieldElement(2) * (fx * fx + fx + FieldElement(1));
        polytopes::Polytope p = polytopes::snub24_cells({fx});
        std::multiset<std::string> expected_tetra, expected_pyramid;
        for (int i = 0; i < 6; ++i) expected_tetra.insert(tetra_sq.str());
        for (int i = 0; i < 3; ++i) {
            expected_pyramid.insert(tetra_sq.str());
            expected_pyramid.insert(lateral_sq.str());
        }
        auto profile = [](const std::multiset<std::string>& m) {
            std::string out;
            for (const auto& s : m) out += s + "; ";
            return out;
        };
        bool tetra_ok = true, pyramid_ok = true;
        for (const auto& cell : p.cells) {
            if (cell.type == "tetrahedron")
                tetra_ok &= edge_norm_profile(p.vertices.points, cell.vertex_indices) ==
                            profile(expected_tetra);
            else if (cell.type == "pyramid")
                pyramid_ok &=
                    edge_norm_profile(p.vertices.points, cell.vertex_indices) ==
                    profile(expected_pyramid);
        }
        c.is_true("tetrahedra at x = " + to_str(x) + " have squared edge 4x^2",
                  tetra_ok);
        c.is_true("pyramids at x = " + to_str(x) +
                      " have squared edges 4x^2 and 2(x^2+x+1)",
                  pyramid_ok);
    }

    // Alternative-basis form: a is an involution and sqrt2 a(S(x)) = S'(x).
    const OrthoMap a = coxeter::basis_transform_a();
    c.is_true("basis transform a is an involution", a * a == OrthoMap::identity());
    for (const Rational& x : random_parameters(3, 0xa17)) {
        polytopes::Polytope s = polytopes::snub24({FieldElement(x)});
        polytopes::Polytope alt = polytopes::snub24_alt({FieldElement(x)});
        std::vector<Quaternion> image;
        for (const auto& v : s.vertices.points)
            image.push_back(a.apply(v) * FieldElement::sqrt2());
        std::sort(image.begin(), image.end());
        c.is_true("sqrt2 a(S(" + to_str(x) + ")) = S'(" + to_str(x) + ")",
                  image == alt.vertices.points);
    }
    return c.finish();
}

CheckReport suite_dual() {
    Checker c("dual");
    const FieldElement one(1);

    polytopes::Polytope d = polytopes::snub24_dual({one});
    c.eq("dual vertex count", std::size_t{144}, d.vertices.size());
    c.eq("dual edge count", std::size_t{480}, d.edges.size());
    c.eq("dual face count", std::size_t{432}, d.faces.size());
    c.eq("dual facet count", std::size_t{96}, d.cells.size());

    std::map<std::size_t, int> face_sizes;
    for (const auto& f : d.faces) face_sizes[f.size()]++;
    c.eq("triangular dual faces", 288, face_sizes[3]);
    c.eq("quadrilateral dual faces", 144, face_sizes[4]);
    bool facets_have_8 = true;
    for (const auto& cell : d.cells) facets_have_8 &= cell.vertex_indices.size() == 8;
    c.is_true("every dual facet has 8 vertices", facets_have_8);

    // Component decomposition at x = 1: T, (3/5) sqrt2 T', (3/13) R(1).
    const qgroups::QuatSet t = qgroups::build_T();
    bool t_in = true;
    for (const auto& q : t.elements()) t_in &= d.vertices.contains(q);
    c.is_true("unit 24-cell T lies in the dual vertex set", t_in);
    const FieldElement s1 = FieldElement(Rational(3, 5)) * FieldElement::sqrt2();
    bool tp_in = true;
    const qgroups::QuatSet tprime = qgroups::build_Tprime();
    for (const auto& q : tprime.elements()) tp_in &= d.vertices.contains(q * s1);
    c.is_true("scaled 24-cell (3/5) sqrt2 T' lies in the dual vertex set", tp_in);

    c.throws<polytopes::DualUndefined>("dual at x = -2/3 is undefined", [] {
        polytopes::snub24_dual({FieldElement(Rational(-2, 3))});
    });

    // x = -1/2 drops both scaled components, leaving exactly T.
    polytopes::Polytope half = polytopes::snub24_dual({FieldElement(Rational(-1, 2))});
    c.eq("dual vertex count at x = -1/2", std::size_t{24}, half.vertices.size());
    c.is_true("dual at x = -1/2 equals T", half.vertices.points == t.elements());

    for (const Rational& y : {Rational(2), Rational(3, 2), Rational(5, 3)}) {
        bool ok = false;
        try {
            ok = polytopes::dual_identity_check(y);
        } catch (const std::exception&) {
        }
        c.is_true("R(-1/(y+1)) is proportional to S(y) at y = " + to_str(y), ok);
    }
    c.throws<std::invalid_argument>("duality identity rejects y = 1", [] {
        polytopes::dual_identity_check(Rational(1));
    });
    return c.finish();
}

CheckReport suite_lattice() {
    using lattices::LatticeKind;
    Checker c("lattice");
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(),
                     e3 = Quaternion::e3();
    const FieldElement h(Rational(1, 2));

    c.is_true("e1 + e2 in fcc", lattices::contains(LatticeKind::FCC, e1 + e2));
    c.is_true("e1 not in fcc", !lattices::contains(LatticeKind::FCC, e1));
    c.is_true("(e1+e2+e3)/2 in bcc",
              lattices::contains(LatticeKind::BCC, (e1 + e2 + e3) * h));
    c.is_true("(e1+e2)/2 not in bcc",
              !lattices::contains(LatticeKind::BCC, (e1 + e2) * h));
    c.is_true("(1,1,1,-3) in bcc2",
              lattices::contains(LatticeKind::BCC2,
                                 Quaternion::vec(FieldElement(1), FieldElement(1),
                                                 FieldElement(-3))));
    c.is_true("1 + e1 in d4",
              lattices::contains(LatticeKind::D4Root, Quaternion::one() + e1));
    c.is_true("e1 not in d4", !lattices::contains(LatticeKind::D4Root, e1));
    c.is_true("tau e1 not in sc",
              !lattices::contains(LatticeKind::SC, e1 * FieldElement::tau()));

    const std::map<LatticeKind, std::size_t> cell_sizes = {
        {LatticeKind::SC, 8},   {LatticeKind::FCC, 14}, {LatticeKind::BCC, 24},
        {LatticeKind::BCC2, 24}, {LatticeKind::D4Root, 24}};
    for (const auto& [kind, size] : cell_sizes)
        c.eq("Wigner-Seitz cell vertex count of " + lattices::lattice_kind_str(kind),
             size, lattices::voronoi_vertices(kind).size());

    c.is_true("bcc cell equals the truncated octahedron",
              lattices::voronoi_vertices(LatticeKind::BCC).points ==
                  polytopes::standard_solid("truncated-octahedron").vertices.points);
    bool d4_cell = true;
    auto d4v = lattices::voronoi_vertices(LatticeKind::D4Root);
    const FieldElement inv_sqrt2 = h * FieldElement::sqrt2();
    const qgroups::QuatSet tprime = qgroups::build_Tprime();
    for (const auto& q : tprime.elements()) d4_cell &= d4v.contains(q * inv_sqrt2);
    c.is_true("d4 cell equals T'/sqrt2", d4_cell);

    const auto& d4 = coxeter::root_datum(coxeter::Diagram::D4);
    c.is_true("second D4 weight lies in the root lattice",
              lattices::contains(LatticeKind::D4Root, d4.weights[1]));
    bool others_need_doubling = true;
    for (std::size_t i : {0u, 2u, 3u})
        others_need_doubling &=
            !lattices::contains(LatticeKind::D4Root, d4.weights[i]) &&
            lattices::contains(LatticeKind::D4Root, d4.weights[i] * FieldElement(2));
    c.is_true("remaining D4 weights enter the root lattice only doubled",
              others_need_doubling);
    return c.finish();
}

CheckReport suite_fib() {
    Checker c("fib");
    lattices::FibonacciChain chain = lattices::fibonacci_chain(15);
    c.eq("chain length for n_max = 15", std::size_t{14}, chain.terms.size());
    c.eq("x_4", Rational(5, 3), chain.terms[2].x_n);
    c.eq("F_10", BigInt(55), chain.terms[8].f_n);
    bool closed_form_ok = true;
    for (const auto& t : chain.terms)
        closed_form_ok &= lattices::fibonacci_closed_form(t.n) ==
                          FieldElement(Rational(t.f_n));
    c.is_true("closed form matches the recurrence up to n = 15", closed_form_ok);

    double prev = 2.0;
    bool monotone = true;
    for (int n : {2, 4, 6, 8, 10}) {
        lattices::ApproximantReport r = lattices::approximant_check(n);
        c.is_true("scaled icosahedron at n = " + std::to_string(n) +
                      " lies in the cubic lattice",
                  r.icosahedron_in_sc);
        c.is_true("scaled snub at n = " + std::to_string(n) +
                      " lies in the D4 lattice",
                  r.snub_in_d4);
        monotone &= r.distance_to_golden < prev;
        prev = r.distance_to_golden;
        if (n == 2)
            c.eq("snub coefficient magnitudes at n = 2", std::string("2, 3, 5"),
                 to_str(r.snub_coefficients[0]) + ", " +
                     to_str(r.snub_coefficients[1]) + ", " +
                     to_str(r.snub_coefficients[2]));
        if (n == 4)
            c.eq("snub coefficient magnitudes at n = 4", std::string("5, 8, 13"),
                 to_str(r.snub_coefficients[0]) + ", " +
                     to_str(r.snub_coefficients[1]) + ", " +
                     to_str(r.snub_coefficients[2]));
    }
    c.is_true("distance to the golden snub decreases along the chain", monotone);
    c.is_true("distance to the golden snub below 1e-3 at n = 10", prev < 1e-3);

    polytopes::Polytope golden =
        polytopes::snub24(polytopes::SnubParameter{FieldElement::tau()});
    bool all_in = true;
    for (const auto& v : golden.vertices.points)
        all_in &= lattices::contains(lattices::LatticeKind::D4Root, v);
    c.is_true("golden-ratio snub leaves the D4 lattice", !all_in);
    return c.finish();
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"groups", "orbits", "snub",
                                                   "dual",   "lattice", "fib"};
    return names;
}

CheckReport run_suite(std::string_view name) {
    if (name == "groups") return suite_groups();
    if (name == "orbits") return suite_orbits();
    if (name == "snub") return suite_snub();
    if (name == "dual") return suite_dual();
    if (name == "lattice") return suite_lattice();
    if (name == "fib") return suite_fib();
    if (name == "all") {
        Checker c("all");
        for (const std::string& sub : suite_names()) {
            CheckReport r = run_suite(sub);
            for (CheckDetail& d : r.details) {
                d.assertion = sub + ": " + d.assertion;
                c.report.details.push_back(std::move(d));
            }
        }
        return c.finish();
    }
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

std::string report_text(const CheckReport& report, bool verbose) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& d : report.details) {
        if (!d.passed) ++failed;
        if (verbose || !d.passed)
            out << (d.passed ? "  ok   " : "  FAIL ") << d.assertion
                << " (expected " << d.expected << ", got " << d.actual << ")\n";
    }
    out << "suite " << report.name << ": " << (report.details.size() - failed) << "/"
        << report.details.size() << " checks passed"
        << (report.passed ? "" : " -- FAILURE") << "\n";
    return out.str();
}

std::string report_json(const CheckReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.name;
    j["passed"] = report.passed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& d : report.details)
        j["checks"].push_back({{"assertion", d.assertion},
                               {"expected", d.expected},
                               {"actual", d.actual},
                               {"passed", d.passed}});
    return j.dump(2) + "\n";
}

}  // namespace polyquat::verify
