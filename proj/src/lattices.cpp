#include "polyquat/lattices.hpp"

#include "polyquat/qgroups.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace polyquat::lattices {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

bool is_integer(const Rational& r) { return denominator(r) == 1; }
bool is_even_integer(const Rational& r) { return is_integer(r) && numerator(r) % 2 == 0; }
bool is_odd_integer(const Rational& r) {
    return is_integer(r) && numerator(r) % 2 != 0;
}
bool is_half_odd(const Rational& r) { return denominator(r) == 2; }

bool rational_coords(const Quaternion& v, Rational out[4]) {
    const FieldElement* comps[4] = {&v.q0, &v.q1, &v.q2, &v.q3};
    for (int i = 0; i < 4; ++i) {
        if (!comps[i]->is_rational()) return false;
        out[i] = comps[i]->rational_value();
    }
    return true;
}

}  // namespace

LatticeKind parse_lattice_kind(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "sc") return LatticeKind::SC;
    if (lower == "fcc") return LatticeKind::FCC;
    if (lower == "bcc") return LatticeKind::BCC;
    if (lower == "bcc2") return LatticeKind::BCC2;
    if (lower == "d4") return LatticeKind::D4Root;
    throw std::invalid_argument("unknown lattice: " + std::string(name));
}

std::string lattice_kind_str(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::SC: return "sc";
        case LatticeKind::FCC: return "fcc";
        case LatticeKind::BCC: return "bcc";
        case LatticeKind::BCC2: return "bcc2";
        case LatticeKind::D4Root: return "d4";
    }
    throw std::logic_error("unreachable");
}

const std::vector<LatticeKind>& all_lattice_kinds() {
    static const std::vector<LatticeKind> kinds = {
        LatticeKind::SC, LatticeKind::FCC, LatticeKind::BCC, LatticeKind::BCC2,
        LatticeKind::D4Root};
    return kinds;
}

bool contains(LatticeKind kind, const Quaternion& v) {
    Rational m[4];
    if (!rational_coords(v, m)) return false;
    if (kind != LatticeKind::D4Root && m[0] != 0) return false;
    switch (kind) {
        case LatticeKind::SC:
            return is_integer(m[1]) && is_integer(m[2]) && is_integer(m[3]);
        case LatticeKind::FCC:
            return is_integer(m[1]) && is_integer(m[2]) && is_integer(m[3]) &&
                   numerator(Rational(m[1] + m[2] + m[3])) % 2 == 0;
        case LatticeKind::BCC:
            return (is_integer(m[1]) && is_integer(m[2]) && is_integer(m[3])) ||
                   (is_half_odd(m[1]) && is_half_odd(m[2]) && is_half_odd(m[3]));
        case LatticeKind::BCC2:
            return (is_even_integer(m[1]) && is_even_integer(m[2]) &&
                    is_even_integer(m[3])) ||
                   (is_odd_integer(m[1]) && is_odd_integer(m[2]) && is_odd_integer(m[3]));
        case LatticeKind::D4Root:
            return is_integer(m[0]) && is_integer(m[1]) && is_integer(m[2]) &&
                   is_integer(m[3]) &&
                   numerator(Rational(m[0] + m[1] + m[2] + m[3])) % 2 == 0;
    }
    throw std::logic_error("unreachable");
}

polytopes::VertexSet voronoi_vertices(LatticeKind kind) {
    std::vector<Quaternion> pts;
    const FieldElement h(Rational(1, 2));
    auto add_signed_cube = [&](const FieldElement& s) {
        for (int b = 0; b < 8; ++b)
            pts.push_back(Quaternion::vec((b & 1) ? -s : s, (b & 2) ? -s : s,
                                          (b & 4) ? -s : s));
    };
    // +-(a e_i + b e_j) for the three cyclic axis pairs (i, j).
    auto add_axis_pairs = [&](const FieldElement& a, const FieldElement& b) {
        for (int axis = 0; axis < 3; ++axis)
            for (int s = 0; s < 4; ++s) {
                FieldElement v[3] = {0, 0, 0};
                v[axis] = (s & 1) ? -a : a;
                v[(axis + 1) % 3] = (s & 2) ? -b : b;
                pts.push_back(Quaternion::vec(v[0], v[1], v[2]));
            }
    };
    switch (kind) {
        case LatticeKind::SC:
            add_signed_cube(h);
            break;
        case LatticeKind::FCC:
            // Rhombic dodecahedron: octahedron +-e_i plus the half cube.
            for (int axis = 0; axis < 3; ++axis)
                for (int s : {1, -1}) {
                    FieldElement v[3] = {0, 0, 0};
                    v[axis] = FieldElement(s);
                    pts.push_back(Quaternion::vec(v[0], v[1], v[2]));
                }
            add_signed_cube(h);
            break;
        case LatticeKind::BCC:
            // Truncated octahedron 1/4 (+-2 e_i +- e_j), both orders.
            add_axis_pairs(h, FieldElement(Rational(1, 4)));
            add_axis_pairs(FieldElement(Rational(1, 4)), h);
            break;
        case LatticeKind::BCC2:
            add_axis_pairs(FieldElement(1), h);
            add_axis_pairs(h, FieldElement(1));
            break;
        case LatticeKind::D4Root: {
            const FieldElement inv_sqrt2 = h * FieldElement::sqrt2();
            const qgroups::QuatSet tp = qgroups::build_Tprime();
            for (const auto& t : tp.elements()) pts.push_back(t * inv_sqrt2);
            break;
        }
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    polytopes::VertexSet vs;
    vs.points = std::move(pts);
    vs.group_name = lattice_kind_str(kind);
    vs.seed = vs.points.empty() ? Quaternion::zero() : vs.points.back();
    vs.rebuild_index();
    return vs;
}

FibonacciChain fibonacci_chain(int n_max) {
    if (n_max < 2) throw std::invalid_argument("Fibonacci chain needs n_max >= 2");
    FibonacciChain chain;
    BigInt prev = 1, cur = 1;  // F_1, F_2
    for (int n = 2; n <= n_max; ++n) {
        BigInt next = prev + cur;  // F_{n+1}
        chain.terms.push_back({n, cur, Rational(next, cur)});
        prev = cur;
        cur = next;
    }
    return chain;
}

FieldElement fibonacci_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("Fibonacci index must be positive");
    FieldElement tau_pow(1), sigma_pow(1);
    for (int i = 0; i < n; ++i) {
        tau_pow *= FieldElement::tau();
        sigma_pow *= FieldElement::sigma();
    }
    // tau - sigma = sqrt5.
    return (tau_pow - sigma_pow) / FieldElement::sqrt5();
}

namespace {

std::vector<std::array<double, 4>> normalized_floats(const polytopes::VertexSet& vs) {
    std::vector<std::array<double, 4>> out;
    for (const auto& p : vs.points) {
        std::array<double, 4> v = {p.q0.to_float(), p.q1.to_float(), p.q2.to_float(),
                                   p.q3.to_float()};
        double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3]);
        for (double& c : v) c /= norm;
        out.push_back(v);
    }
    return out;
}

/// Largest over a of the smallest distance to b (one-sided Hausdorff).
double hausdorff(const std::vector<std::array<double, 4>>& a,
                 const std::vector<std::array<double, 4>>& b) {
    double worst = 0;
    for (const auto& p : a) {
        double best = 1e300;
        for (const auto& q : b) {
            double d2 = 0;
            for (int i = 0; i < 4; ++i) d2 += (p[i] - q[i]) * (p[i] - q[i]);
            best = std::min(best, d2);
        }
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

}  // namespace

double normalized_vertex_distance(const polytopes::VertexSet& a,
                                  const polytopes::VertexSet& b) {
    return hausdorff(normalized_floats(a), normalized_floats(b));
}

ApproximantReport approximant_check(int n) {
    if (n < 2) throw std::invalid_argument("approximant check needs n >= 2");
    BigInt prev = 1, cur = 1;
    for (int i = 2; i <= n; ++i) {
        BigInt next = prev + cur;
        prev = cur;
        cur = next;
    }
    // Now prev = F_n, cur = F_{n+1}.
    ApproximantReport report;
    report.n = n;
    report.scale = prev;
    report.x = Rational(cur, prev);

    const FieldElement x{report.x};
    const Rational a{prev};
    polytopes::Polytope icosa = polytopes::pseudoicosahedron(x, a);
    report.icosahedron_in_sc = true;
    for (const auto& v : icosa.vertices.points)
        report.icosahedron_in_sc &= contains(LatticeKind::SC, v);

    polytopes::Polytope snub = polytopes::snub24(polytopes::SnubParameter{x, a});
    report.snub_in_d4 = true;
    std::set<BigInt> coeffs;
    for (const auto& v : snub.vertices.points) {
        report.snub_in_d4 &= contains(LatticeKind::D4Root, v);
        for (const FieldElement* c : {&v.q0, &v.q1, &v.q2, &v.q3})
            if (c->is_rational() && c->rational_value() != 0)
                coeffs.insert(boost::multiprecision::abs(
                    numerator(c->rational_value())));
    }
    report.snub_coefficients.assign(coeffs.begin(), coeffs.end());

    polytopes::Polytope golden =
        polytopes::snub24(polytopes::SnubParameter{FieldElement::tau()});
    report.distance_to_golden =
        hausdorff(normalized_floats(snub.vertices), normalized_floats(golden.vertices));
    return report;
}

}  // namespace polyquat::lattices
