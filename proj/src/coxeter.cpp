#include "polyquat/coxeter.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_set>

namespace polyquat::coxeter {

using field::FieldElement;
using quat::scalar_product;

Diagram parse_diagram(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "d3") return Diagram::D3;
    if (lower == "b3") return Diagram::B3;
    if (lower == "d4") return Diagram::D4;
    if (lower == "d4alt") return Diagram::D4alt;
    throw std::invalid_argument("unknown diagram: " + std::string(name));
}

std::string diagram_str(Diagram d) {
    switch (d) {
        case Diagram::D3: return "d3";
        case Diagram::B3: return "b3";
        case Diagram::D4: return "d4";
        case Diagram::D4alt: return "d4alt";
    }
    throw std::logic_error("unreachable");
}

Quaternion reflect(const Quaternion& lambda, const Quaternion& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("reflection through zero root");
    FieldElement t = FieldElement(2) * scalar_product(lambda, alpha) /
                     scalar_product(alpha, alpha);
    return lambda - alpha * t;
}

Quaternion affine_reflect(const Quaternion& lambda, const Quaternion& alpha, long k) {
    if (alpha.is_zero()) throw std::invalid_argument("reflection through zero root");
    FieldElement t = FieldElement(2) *
                     (scalar_product(lambda, alpha) - FieldElement(static_cast<int>(k))) /
                     scalar_product(alpha, alpha);
    return lambda - alpha * t;
}

std::optional<std::vector<FieldElement>> expand_in_basis(
    const std::vector<Quaternion>& basis, const Quaternion& v) {
    const std::size_t n = basis.size();
    // Rows: the 4 quaternion components; columns: basis vectors, then v.
    std::array<std::array<FieldElement, 5>, 4> m{};
    for (std::size_t j = 0; j < n; ++j) {
        m[0][j] = basis[j].q0;
        m[1][j] = basis[j].q1;
        m[2][j] = basis[j].q2;
        m[3][j] = basis[j].q3;
    }
    m[0][n] = v.q0;
    m[1][n] = v.q1;
    m[2][n] = v.q2;
    m[3][n] = v.q3;

    std::size_t row = 0;
    std::vector<std::size_t> pivot_rows(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = row;
        while (p < 4 && m[p][col].is_zero()) ++p;
        if (p == 4) throw std::invalid_argument("basis vectors are dependent");
        std::swap(m[p], m[row]);
        FieldElement inv = m[row][col].inverse();
        for (std::size_t c = col; c <= n; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < 4; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            FieldElement f = m[r][col];
            for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_rows[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < 4; ++r)
        if (!m[r][n].is_zero()) return std::nullopt;
    std::vector<FieldElement> coords(n);
    for (std::size_t col = 0; col < n; ++col) coords[col] = m[pivot_rows[col]][n];
    return coords;
}

namespace {

const FieldElement& half() {
    static const FieldElement h{Rational(1, 2)};
    return h;
}

const FieldElement& inv_sqrt2() {
    static const FieldElement v = FieldElement(Rational(1, 2)) * FieldElement::sqrt2();
    return v;
}

RootDatum make_datum(Diagram d) {
    const Quaternion one = Quaternion::one(), e1 = Quaternion::e1(), e2 = Quaternion::e2(),
                     e3 = Quaternion::e3();
    RootDatum datum;
    datum.diagram = d;
    switch (d) {
        case Diagram::D3:
            datum.simple_roots = {e1 - e2, e2 - e3, e2 + e3};
            datum.weights = {e1, (e1 + e2 - e3) * half(), (e1 + e2 + e3) * half()};
            datum.highest_root = e1 + e2;
            break;
        case Diagram::B3:
            datum.simple_roots = {e1 - e2, e2 - e3, e3};
            datum.weights = {e1, e1 + e2, (e1 + e2 + e3) * half()};
            datum.highest_root = e1 + e2;
            break;
        case Diagram::D4:
            datum.simple_roots = {one - e1, e1 - e2, e2 - e3, e2 + e3};
            datum.weights = {one, one + e1, (one + e1 + e2 - e3) * half(),
                             (one + e1 + e2 + e3) * half()};
            datum.highest_root = one + e1;
            break;
        case Diagram::D4alt:
            datum.simple_roots = {e1 * FieldElement::sqrt2(),
                                  (one - e1 - e2 - e3) * inv_sqrt2(),
                                  e2 * FieldElement::sqrt2(), e3 * FieldElement::sqrt2()};
            datum.weights = {(one + e1) * inv_sqrt2(), one * FieldElement::sqrt2(),
                             (one + e2) * inv_sqrt2(), (one + e3) * inv_sqrt2()};
            datum.highest_root = one * FieldElement::sqrt2();
            break;
    }
    const std::size_t n = datum.simple_roots.size();
    datum.cartan.assign(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement c = FieldElement(2) *
                             scalar_product(datum.simple_roots[i], datum.simple_roots[j]) /
                             scalar_product(datum.simple_roots[j], datum.simple_roots[j]);
            if (!c.is_rational())
                throw std::logic_error("irrational Cartan entry for " + diagram_str(d));
            datum.cartan[i][j] = c.rational_value();
        }
    // Weight duality (wi, 2aj/(aj,aj)) = delta_ij.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement s = FieldElement(2) *
                             scalar_product(datum.weights[i], datum.simple_roots[j]) /
                             scalar_product(datum.simple_roots[j], datum.simple_roots[j]);
            if (s != FieldElement(i == j ? 1 : 0))
                throw std::logic_error("weights fail duality for " + diagram_str(d));
        }
    // The highest root must be a nonnegative integer combination of the
    // simple roots.
    auto coords = expand_in_basis(datum.simple_roots, datum.highest_root);
    if (!coords) throw std::logic_error("highest root outside root span");
    for (const auto& c : *coords)
        if (!c.is_rational() || c.sign() < 0 ||
            boost::multiprecision::denominator(c.rational_value()) != 1)
            throw std::logic_error("highest root has bad coordinates");
    return datum;
}

}  // namespace

const RootDatum& root_datum(Diagram d) {
    static const std::map<Diagram, RootDatum> cache = [] {
        std::map<Diagram, RootDatum> m;
        for (Diagram d :
             {Diagram::D3, Diagram::B3, Diagram::D4, Diagram::D4alt})
            m.emplace(d, make_datum(d));
        return m;
    }();
    return cache.at(d);
}

std::vector<OrthoMap> generators(Diagram d) {
    const RootDatum& datum = root_datum(d);
    std::vector<OrthoMap> out;
    const bool three_dim = d == Diagram::D3 || d == Diagram::B3;
    for (const auto& root : datum.simple_roots) {
        OrthoMap r = quat::reflection_map(root);
        out.push_back(three_dim ? r.vector_form() : r);
    }
    return out;
}

std::vector<OrthoMap> diagram_symmetry(Diagram d) {
    switch (d) {
        case Diagram::B3:
            throw UnsupportedDiagram("b3 has no diagram symmetry");
        case Diagram::D3:
            return {quat::reflection_map(Quaternion::e3()).vector_form()};
        case Diagram::D4:
        case Diagram::D4alt: {
            Quaternion p{FieldElement(Rational(1, 2)), FieldElement(Rational(1, 2)),
                         FieldElement(Rational(-1, 2)), FieldElement(Rational(-1, 2))};
            Quaternion q{FieldElement(Rational(1, 2)), FieldElement(Rational(-1, 2)),
                         FieldElement(Rational(1, 2)), FieldElement(Rational(-1, 2))};
            std::vector<OrthoMap> gens = {OrthoMap(p, q, false),
                                          OrthoMap(Quaternion::e3(), -Quaternion::e3(), true)};
            std::vector<OrthoMap> elements = {OrthoMap::identity()};
            std::unordered_set<OrthoMap, quat::OrthoMapHash> seen(elements.begin(),
                                                                  elements.end());
            std::vector<OrthoMap> frontier = elements;
            while (!frontier.empty()) {
                std::vector<OrthoMap> next;
                for (const auto& f : frontier)
                    for (const auto& g : gens) {
                        OrthoMap m = f * g;
                        if (seen.insert(m).second) {
                            elements.push_back(m);
                            next.push_back(m);
                        }
                    }
                frontier = std::move(next);
            }
            if (d == Diagram::D4alt) {
                OrthoMap a = basis_transform_a();
                OrthoMap ainv = a.inverse();
                for (auto& m : elements) m = a * m * ainv;
            }
            std::sort(elements.begin(), elements.end());
            return elements;
        }
    }
    throw std::logic_error("unreachable");
}

OrthoMap basis_transform_a() {
    return {(Quaternion::e2() + Quaternion::e3()) * inv_sqrt2(), -Quaternion::e2(), false};
}

}  // namespace polyquat::coxeter
