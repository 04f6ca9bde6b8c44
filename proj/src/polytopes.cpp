#include "polyquat/polytopes.hpp"

#include "polyquat/coxeter.hpp"
#include "polyquat/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace polyquat::polytopes {

using qgroups::FiniteGroup;
using qgroups::GroupName;
using quat::scalar_product;

void VertexSet::rebuild_index() {
    index_.clear();
    index_.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) index_.emplace(points[i], i);
}

namespace {

using quat::OrthoMap;

const FieldElement& half() {
    static const FieldElement h{Rational(1, 2)};
    return h;
}

VertexSet make_vertex_set(std::vector<Quaternion> pts, std::string group_name,
                          Quaternion seed) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    VertexSet vs;
    vs.points = std::move(pts);
    vs.group_name = std::move(group_name);
    vs.seed = std::move(seed);
    vs.rebuild_index();
    return vs;
}

/// Vector orthogonal to a, b and c (4D analogue of the cross product, via
/// cofactor expansion).
Quaternion cross4(const Quaternion& a, const Quaternion& b, const Quaternion& c) {
    auto det3 = [](const FieldElement& a0, const FieldElement& a1, const FieldElement& a2,
                   const FieldElement& b0, const FieldElement& b1, const FieldElement& b2,
                   const FieldElement& c0, const FieldElement& c1, const FieldElement& c2) {
        return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
               a2 * (b0 * c1 - b1 * c0);
    };
    return {det3(a.q1, a.q2, a.q3, b.q1, b.q2, b.q3, c.q1, c.q2, c.q3),
            -det3(a.q0, a.q2, a.q3, b.q0, b.q2, b.q3, c.q0, c.q2, c.q3),
            det3(a.q0, a.q1, a.q3, b.q0, b.q1, b.q3, c.q0, c.q1, c.q3),
            -det3(a.q0, a.q1, a.q2, b.q0, b.q1, b.q2, c.q0, c.q1, c.q2)};
}

Quaternion centroid(const std::vector<Quaternion>& pts,
                    const std::vector<std::size_t>& face) {
    Quaternion sum = Quaternion::zero();
    for (std::size_t i : face) sum = sum + pts[i];
    return sum * FieldElement(Rational(1, static_cast<long>(face.size())));
}

/// Cyclic ordering of a (star-shaped) polygon around its centroid; the in-plane
/// angle basis is built from the plane normal and the hyperplane axis. Uses
/// float angles only to sort; the data stays exact.
std::vector<std::size_t> order_cycle(const std::vector<Quaternion>& pts,
                                     std::vector<std::size_t> face,
                                     const Quaternion& plane_normal,
                                     const Quaternion& axis) {
    if (face.size() <= 3) return face;
    const Quaternion c = centroid(pts, face);
    const Quaternion u = pts[face[0]] - c;
    const Quaternion w = cross4(axis, plane_normal, u);
    std::vector<std::pair<double, std::size_t>> keyed;
    keyed.reserve(face.size());
    for (std::size_t i : face) {
        const Quaternion d = pts[i] - c;
        keyed.emplace_back(
            std::atan2(scalar_product(d, w).to_float(), scalar_product(d, u).to_float()),
            i);
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t k = 0; k < face.size(); ++k) face[k] = keyed[k].second;
    return face;
}

/// Faces of a convex 3-polytope via supporting planes; the points must lie in
/// a common hyperplane with normal direction `axis` (use 1 for pure-vector
/// point sets). Faces come out cyclically ordered.
std::vector<std::vector<std::size_t>> hull_faces(const std::vector<Quaternion>& pts,
                                                 const Quaternion& axis) {
    const std::size_t n = pts.size();
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Quaternion normal = cross4(axis, pts[j] - pts[i], pts[k] - pts[i]);
                if (normal.is_zero()) continue;
                bool pos = false, neg = false;
                std::vector<std::size_t> face;
                for (std::size_t l = 0; l < n && !(pos && neg); ++l) {
                    int s = scalar_product(pts[l] - pts[i], normal).sign();
                    if (s > 0) pos = true;
                    else if (s < 0) neg = true;
                    else face.push_back(l);
                }
                if (pos && neg) continue;
                std::vector<std::size_t> key = face;  // already sorted
                if (!seen.insert(key).second) continue;
                if (pos) normal = -normal;  // point outward
                out.push_back(order_cycle(pts, std::move(face), normal, axis));
            }
    return out;
}

std::vector<std::array<std::size_t, 2>> edges_of_face(const std::vector<std::size_t>& f) {
    std::vector<std::array<std::size_t, 2>> out;
    for (std::size_t k = 0; k < f.size(); ++k) {
        std::size_t a = f[k], b = f[(k + 1) % f.size()];
        out.push_back({std::min(a, b), std::max(a, b)});
    }
    return out;
}

std::vector<std::array<std::size_t, 2>> edges_from_faces(
    const std::vector<std::vector<std::size_t>>& faces) {
    std::set<std::array<std::size_t, 2>> set;
    for (const auto& f : faces)
        for (const auto& e : edges_of_face(f)) set.insert(e);
    return {set.begin(), set.end()};
}

bool face_planar(const std::vector<Quaternion>& pts, const std::vector<std::size_t>& f,
                 const Quaternion& axis) {
    if (f.size() <= 3) return true;
    const Quaternion n =
        cross4(axis, pts[f[1]] - pts[f[0]], pts[f[2]] - pts[f[0]]);
    for (std::size_t k = 3; k < f.size(); ++k)
        if (!scalar_product(pts[f[k]] - pts[f[0]], n).is_zero()) return false;
    return true;
}

/// Closed-surface sanity for a 3D cell complex boundary: every edge on exactly
/// two faces and V - E + F equal to the expected Euler number.
void validate_surface(const Polytope& p, long expected_euler,
                      bool require_planar_faces, const Quaternion& axis) {
    std::map<std::array<std::size_t, 2>, int> edge_count;
    for (const auto& f : p.faces) {
        if (require_planar_faces && !face_planar(p.vertices.points, f, axis))
            throw std::logic_error(p.family + ": non-planar face");
        for (const auto& e : edges_of_face(f)) ++edge_count[e];
    }
    for (const auto& [e, c] : edge_count)
        if (c != 2) throw std::logic_error(p.family + ": edge not on exactly two faces");
    if (edge_count.size() != p.edges.size())
        throw std::logic_error(p.family + ": edge list disagrees with faces");
    long euler = static_cast<long>(p.vertices.size()) -
                 static_cast<long>(p.edges.size()) + static_cast<long>(p.faces.size());
    if (euler != expected_euler)
        throw std::logic_error(p.family + ": Euler characteristic " +
                               std::to_string(euler));
}

/// Orbit of explicitly given (ordered) seed faces under a group; faces are
/// deduplicated by vertex set, keeping the first cyclic order encountered.
std::vector<std::vector<std::size_t>> orbit_faces(
    const FiniteGroup& g, const VertexSet& vs,
    const std::vector<std::vector<Quaternion>>& seed_faces) {
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> out;
    for (const auto& m : g.elements())
        for (const auto& f : seed_faces) {
            std::vector<std::size_t> img;
            img.reserve(f.size());
            for (const auto& v : f) img.push_back(vs.index_of(m.apply(v)));
            std::vector<std::size_t> key = img;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) out.push_back(std::move(img));
        }
    return out;
}

bool snub_degenerate(const FieldElement& x) {
    return x == FieldElement(-1) || x == FieldElement(Rational(-1, 2)) ||
           x == FieldElement(0);
}

/// The shared coefficient scheme of the 96-point snub orbits: the values
/// (A, B, C) are distributed over (scalar, e1, e2, e3) in 12 placements, one
/// slot staying zero, with independent signs on the three values. The snub
/// cell takes (A, B, C) = (1+2x, 1+x, x); the 96-point part of its dual takes
/// (2+x, 1, 1+x).
std::vector<Quaternion> pattern_points(const FieldElement& a, const FieldElement& b,
                                       const FieldElement& c) {
    static constexpr int kPlacement[12][3] = {
        // slot of A, slot of B, slot of C; the remaining slot is zero
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 3}, {2, 3, 0}, {3, 0, 2},
        {0, 3, 1}, {3, 1, 0}, {1, 0, 3}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3},
    };
    std::vector<Quaternion> out;
    out.reserve(96);
    for (const auto& pl : kPlacement)
        for (int signs = 0; signs < 8; ++signs) {
            FieldElement slot[4] = {0, 0, 0, 0};
            slot[pl[0]] = (signs & 1) ? -a : a;
            slot[pl[1]] = (signs & 2) ? -b : b;
            slot[pl[2]] = (signs & 4) ? -c : c;
            out.emplace_back(slot[0], slot[1], slot[2], slot[3]);
        }
    return out;
}

Quaternion snub_seed(const SnubParameter& param) {
    const FieldElement& x = param.x;
    const FieldElement a2{param.a_scale};
    return Quaternion(FieldElement(1) + FieldElement(2) * x, FieldElement(1) + x, x,
                      FieldElement(0)) *
           a2;
}

/// Index permutation induced by a group element on an orbit.
std::vector<std::size_t> index_permutation(const OrthoMap& m, const VertexSet& vs) {
    std::vector<std::size_t> perm(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        perm[i] = vs.index_of(m.apply(vs.points[i]));
    return perm;
}

}  // namespace

VertexSet orbit(const FiniteGroup& group, const Quaternion& seed) {
    return make_vertex_set(kernels::apply_all_omp(group.elements(), seed), group.name(),
                           seed);
}

const std::vector<std::string>& standard_solid_names() {
    static const std::vector<std::string> names = {
        "octahedron", "tetrahedron", "cube", "cuboctahedron", "truncated-octahedron"};
    return names;
}

Polytope standard_solid(std::string_view family) {
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
    GroupName group;
    Quaternion seed;
    if (family == "octahedron") {
        group = GroupName::WD3;
        seed = e1;
    } else if (family == "tetrahedron") {
        group = GroupName::WD3;
        seed = (e1 + e2 + e3) * half();
    } else if (family == "cube") {
        group = GroupName::WB3;
        seed = (e1 + e2 + e3) * half();
    } else if (family == "cuboctahedron") {
        group = GroupName::WD3;
        seed = e1 + e2;
    } else if (family == "truncated-octahedron") {
        group = GroupName::WD3;
        seed = (e1 * FieldElement(2) + e2) * FieldElement(Rational(1, 4));
    } else {
        throw std::invalid_argument("unknown solid: " + std::string(family));
    }
    Polytope p;
    p.vertices = orbit(qgroups::catalog(group), seed);
    p.faces = hull_faces(p.vertices.points, Quaternion::one());
    p.edges = edges_from_faces(p.faces);
    p.family = std::string(family);
    validate_surface(p, 2, true, Quaternion::one());
    return p;
}

Polytope pseudoicosahedron(const FieldElement& x, const Rational& a1) {
    if (snub_degenerate(x))
        throw DegenerateParameter("pseudoicosahedron requires x outside {0, -1/2, -1}");
    const FieldElement a{a1};
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
    const FieldElement xp1 = FieldElement(1) + x;
    auto v = [&](const Quaternion& u, const Quaternion& w) { return (u * xp1 + w * x) * a; };
    const Quaternion seed = v(e1, e2);
    const FiniteGroup& th = qgroups::catalog(GroupName::Th);

    Polytope p;
    p.vertices = orbit(th, seed);
    // One equilateral seed face per 3-fold axis class and the isosceles seed
    // face; their pyritohedral orbits cover all 20 faces.
    const std::vector<std::vector<Quaternion>> seed_faces = {
        {v(e1, e2), v(e2, e3), v(e3, e1)},
        {v(e1, e2), v(e2, -e3), v(-e3, e1)},
        {v(e1, e2), v(e2, e3), v(e2, -e3)},
    };
    p.faces = orbit_faces(th, p.vertices, seed_faces);
    p.edges = edges_from_faces(p.faces);
    p.family = "pseudo-icosahedron";
    p.x = x;
    validate_surface(p, 2, true, Quaternion::one());
    if (p.vertices.size() != 12 || p.faces.size() != 20 || p.edges.size() != 30)
        throw std::logic_error("pseudoicosahedron has unexpected counts");
    return p;
}

Polytope pyritohedron(const FieldElement& x) {
    if (x == FieldElement(-1) || x == FieldElement(Rational(-1, 2)))
        throw DegenerateParameter("pyritohedron requires x outside {-1/2, -1}");
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
    const FieldElement xp1 = FieldElement(1) + x;
    const FieldElement rho =
        (FieldElement(1) + FieldElement(2) * x) / (FieldElement(2) * xp1 * xp1);
    const Quaternion b1 = e1 + e2 * xp1;
    const Quaternion b4 = e1 * xp1 + e3;
    const Quaternion b5 = e1 * xp1 - e3;
    const Quaternion w2 = (e1 + e2 - e3) * half();
    const Quaternion w3 = (e1 + e2 + e3) * half();
    const FiniteGroup& th = qgroups::catalog(GroupName::Th);

    std::vector<Quaternion> pts = kernels::apply_all_omp(th.elements(), b1 * rho);
    std::vector<Quaternion> cube = kernels::apply_all_omp(th.elements(), w3);
    pts.insert(pts.end(), cube.begin(), cube.end());

    Polytope p;
    p.vertices = make_vertex_set(std::move(pts), th.name(), b1 * rho);
    // Pentagon normal to d = (1+x)e1 + xe2. The cyclic order is combinatorial
    // (fixed for the whole family), so the construction stays valid when the
    // solid is non-convex and float angle ordering would flip.
    std::vector<Quaternion> seed_face = {b5 * rho, w2, b1 * rho, w3, b4 * rho};
    p.faces = orbit_faces(th, p.vertices, {seed_face});
    p.edges = edges_from_faces(p.faces);
    p.family = "pyritohedron";
    p.x = x;
    validate_surface(p, 2, true, Quaternion::one());
    if (p.vertices.size() != 20 || p.faces.size() != 12 || p.edges.size() != 30)
        throw std::logic_error("pyritohedron has unexpected counts");
    return p;
}

Polytope pseudo_icosidodecahedron(const FieldElement& x, const Rational& a1) {
    const Polytope icosa = pseudoicosahedron(x, a1);
    std::vector<Quaternion> mids;
    mids.reserve(icosa.edges.size());
    for (const auto& [i, j] : icosa.edges)
        mids.push_back((icosa.vertices.points[i] + icosa.vertices.points[j]) * half());

    Polytope p;
    p.vertices =
        make_vertex_set(std::move(mids), icosa.vertices.group_name, icosa.vertices.seed);
    auto midpoint_index = [&](std::size_t i, std::size_t j) {
        return p.vertices.index_of(
            (icosa.vertices.points[i] + icosa.vertices.points[j]) * half());
    };
    // One triangle per pseudoicosahedron face ...
    for (const auto& f : icosa.faces)
        p.faces.push_back({midpoint_index(f[0], f[1]), midpoint_index(f[1], f[2]),
                           midpoint_index(f[2], f[0])});
    // ... and one pentagon per pseudoicosahedron vertex (its edge midpoints,
    // ordered around the vertex direction; planar only at x = tau or sigma).
    for (std::size_t v = 0; v < icosa.vertices.size(); ++v) {
        std::vector<std::size_t> pent;
        for (const auto& [i, j] : icosa.edges)
            if (i == v || j == v) pent.push_back(midpoint_index(i, j));
        p.faces.push_back(order_cycle(p.vertices.points, std::move(pent),
                                      icosa.vertices.points[v], Quaternion::one()));
    }
    p.edges = edges_from_faces(p.faces);
    p.family = "pseudo-icosidodecahedron";
    p.x = x;
    validate_surface(p, 2, false, Quaternion::one());
    if (p.vertices.size() != 30 || p.faces.size() != 32 || p.edges.size() != 60)
        throw std::logic_error("pseudo icosidodecahedron has unexpected counts");
    return p;
}

Polytope snub24(const SnubParameter& param) {
    Polytope p;
    p.vertices = orbit(qgroups::catalog(GroupName::Pyr4D_576), snub_seed(param));
    p.family = "snub24";
    p.x = param.x;
    p.degenerate = param.degenerate();
    if (p.vertices.size() != (p.degenerate ? 24u : 96u))
        throw std::logic_error("snub 24-cell orbit has unexpected size");
    return p;
}

Polytope snub24_cells(const SnubParameter& param) {
    if (param.degenerate())
        throw DegenerateParameter("cell structure requires x outside {0, -1/2, -1}");
    Polytope p = snub24(param);
    const FiniteGroup& g = qgroups::catalog(GroupName::Pyr4D_576);
    const Quaternion lambda = snub_seed(param);
    auto r = coxeter::generators(coxeter::Diagram::D4);
    auto rr = [&](int i, int j) { return r[i] * r[j]; };

    struct SeedCell {
        std::string type;
        std::vector<std::vector<std::size_t>> faces;
    };
    std::vector<SeedCell> seeds;

    auto to_indices = [&](const std::vector<Quaternion>& pts) {
        std::vector<std::size_t> out;
        out.reserve(pts.size());
        for (const auto& q : pts) out.push_back(p.vertices.index_of(q));
        return out;
    };

    // Pseudoicosahedron cell around the weight direction fixed by the two
    // rotations; its 2-faces come from the convex hull within its hyperplane.
    {
        FiniteGroup rot = qgroups::closure({rr(0, 1), rr(1, 2)}, 24, "icosa-stab");
        if (rot.order() != 12) throw std::logic_error("icosahedral cell stabilizer");
        VertexSet cell = orbit(rot, lambda);
        if (cell.size() != 12) throw std::logic_error("icosahedral cell size");
        const Quaternion w4 =
            (Quaternion::one() + Quaternion::e1() + Quaternion::e2() + Quaternion::e3()) *
            half();
        auto local_faces = hull_faces(cell.points, w4);
        if (local_faces.size() != 20) throw std::logic_error("icosahedral cell faces");
        SeedCell seed{"icosahedron", {}};
        for (auto& f : local_faces) {
            std::vector<std::size_t> global;
            for (std::size_t i : f) global.push_back(p.vertices.index_of(cell.points[i]));
            seed.faces.push_back(std::move(global));
        }
        seeds.push_back(std::move(seed));
    }
    // Tetrahedron and triangular-pyramid cells: 4 vertices, all triples are
    // faces.
    auto four_vertex_cell = [&](const std::string& type,
                                const std::vector<Quaternion>& pts) {
        auto idx = to_indices(pts);
        SeedCell seed{type, {}};
        seed.faces = {{idx[0], idx[1], idx[2]},
                      {idx[0], idx[1], idx[3]},
                      {idx[0], idx[2], idx[3]},
                      {idx[1], idx[2], idx[3]}};
        return seed;
    };
    seeds.push_back(four_vertex_cell(
        "tetrahedron",
        {lambda, rr(0, 2).apply(lambda), rr(2, 3).apply(lambda), rr(3, 0).apply(lambda)}));
    seeds.push_back(four_vertex_cell(
        "pyramid",
        {lambda, rr(1, 0).apply(lambda), rr(1, 2).apply(lambda), rr(1, 3).apply(lambda)}));

    std::set<std::vector<std::size_t>> seen_cells;
    std::map<std::vector<std::size_t>, int> face_count;
    std::set<std::array<std::size_t, 2>> edge_set;
    for (const auto& m : g.elements()) {
        auto perm = index_permutation(m, p.vertices);
        for (const auto& seed : seeds) {
            std::set<std::size_t> verts;
            std::vector<std::vector<std::size_t>> mapped_faces;
            for (const auto& f : seed.faces) {
                std::vector<std::size_t> mf;
                for (std::size_t i : f) {
                    mf.push_back(perm[i]);
                    verts.insert(perm[i]);
                }
                std::sort(mf.begin(), mf.end());
                mapped_faces.push_back(std::move(mf));
            }
            std::vector<std::size_t> key(verts.begin(), verts.end());
            if (!seen_cells.insert(key).second) continue;
            p.cells.push_back({seed.type, key});
            for (auto& mf : mapped_faces) {
                ++face_count[mf];
                for (const auto& e : edges_of_face(mf)) edge_set.insert(e);
            }
        }
    }
    for (const auto& [f, c] : face_count)
        if (c != 2) throw std::logic_error("snub cell face not shared by two cells");
    for (const auto& [f, c] : face_count) p.faces.push_back(f);
    p.edges.assign(edge_set.begin(), edge_set.end());

    std::map<std::string, int> cell_counts;
    for (const auto& c : p.cells) ++cell_counts[c.type];
    if (cell_counts["icosahedron"] != 24 || cell_counts["tetrahedron"] != 24 ||
        cell_counts["pyramid"] != 96 || p.faces.size() != 480 || p.edges.size() != 432)
        throw std::logic_error("snub 24-cell has unexpected counts");
    return p;
}

Polytope snub24_dual(const SnubParameter& param) {
    const FieldElement& x = param.x;
    const FieldElement one(1), two(2);
    const FieldElement denom1 = two + FieldElement(3) * x;
    const FieldElement denom2 = FieldElement(3) + FieldElement(7) * x +
                                FieldElement(3) * x * x;
    if (denom1.is_zero() || denom2.is_zero()) throw DualUndefined();
    const FieldElement s1 = (one + two * x) / denom1;
    const FieldElement s2 = (one + two * x) / denom2;
    const FieldElement a2{param.a_scale};

    const qgroups::QuatSet t_set = qgroups::build_T();
    const qgroups::QuatSet tp_set = qgroups::build_Tprime();
    std::vector<Quaternion> pts;
    for (const auto& t : t_set.elements()) pts.push_back(t * a2);
    if (!s1.is_zero()) {
        const FieldElement f = s1 * FieldElement::sqrt2() * a2;
        for (const auto& t : tp_set.elements()) pts.push_back(t * f);
    }
    if (!s2.is_zero())
        for (const auto& q : pattern_points(two + x, one, one + x))
            pts.push_back(q * (s2 * a2));

    Polytope p;
    p.vertices = make_vertex_set(std::move(pts), "Pyr4D_576", Quaternion::one() * a2);
    p.family = "snub24-dual";
    p.x = x;
    p.degenerate = param.degenerate();
    if (p.degenerate) return p;  // vertex formula only; no facet structure
    if (p.vertices.size() != 144)
        throw std::logic_error("dual snub 24-cell has unexpected vertex count");

    // Seed facet: the 8 cell centers meeting at the snub vertex Lambda. All
    // of them have the same scalar product with Lambda (they span the facet
    // hyperplane).
    const Quaternion e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
    const Quaternion o = Quaternion::one();
    const Quaternion lambda = snub_seed(param);
    const FieldElement xp1 = one + x, xp2 = two + x;
    std::vector<Quaternion> facet = {
        o * a2,
        ((o + e1 + e2 - e3) * half()) * a2,
        ((o + e1 + e2 + e3) * half()) * a2,
        ((o + e1) * s1) * a2,
        (o * xp2 + e1 + e2 * xp1) * (s2 * a2),
        (o * xp1 + e1 * xp2 + e2) * (s2 * a2),
        (o * xp2 + e1 * xp1 + e3) * (s2 * a2),
        (o * xp2 + e1 * xp1 - e3) * (s2 * a2),
    };
    const FieldElement level = scalar_product(facet[0], lambda);
    for (const auto& q : facet)
        if (scalar_product(q, lambda) != level)
            throw std::logic_error("dual facet vertices are not coplanar");

    auto local_faces = hull_faces(facet, lambda);
    std::vector<std::vector<std::size_t>> seed_faces;
    for (const auto& f : local_faces) {
        std::vector<std::size_t> global;
        for (std::size_t i : f) global.push_back(p.vertices.index_of(facet[i]));
        seed_faces.push_back(std::move(global));
    }
    auto seed_edges = edges_from_faces(seed_faces);
    if (facet.size() != 8 || seed_edges.size() != 15 || seed_faces.size() != 9)
        throw std::logic_error("dual facet has unexpected combinatorics");

    const FiniteGroup& g = qgroups::catalog(GroupName::Pyr4D_576);
    std::set<std::vector<std::size_t>> seen_cells;
    std::set<std::vector<std::size_t>> face_keys;
    std::set<std::array<std::size_t, 2>> edge_set;
    std::vector<std::size_t> facet_idx;
    for (const auto& q : facet) facet_idx.push_back(p.vertices.index_of(q));
    for (const auto& m : g.elements()) {
        auto perm = index_permutation(m, p.vertices);
        std::vector<std::size_t> key;
        for (std::size_t i : facet_idx) key.push_back(perm[i]);
        std::sort(key.begin(), key.end());
        if (!seen_cells.insert(key).second) continue;
        p.cells.push_back({"facet", key});
        for (const auto& f : seed_faces) {
            std::vector<std::size_t> mf;
            for (std::size_t i : f) mf.push_back(perm[i]);
            std::vector<std::size_t> fkey = mf;
            std::sort(fkey.begin(), fkey.end());
            if (face_keys.insert(fkey).second) p.faces.push_back(mf);
        }
        for (const auto& [a, b] : seed_edges)
            edge_set.insert({std::min(perm[a], perm[b]), std::max(perm[a], perm[b])});
    }
    p.edges.assign(edge_set.begin(), edge_set.end());
    if (p.cells.size() != 96 || p.faces.size() != 432 || p.edges.size() != 480)
        throw std::logic_error("dual snub 24-cell has unexpected counts");
    return p;
}

bool dual_identity_check(const Rational& y) {
    if (y == -1 || y == 0 || y == 1)
        throw std::invalid_argument("y maps to a degenerate snub parameter");
    const FieldElement x{Rational(-1) / (y + 1)};
    const FieldElement lambda{Rational(1) / (y + 1)};
    const FieldElement yf{y};
    std::vector<Quaternion> r =
        pattern_points(FieldElement(2) + x, FieldElement(1), FieldElement(1) + x);
    std::vector<Quaternion> s = pattern_points(FieldElement(1) + FieldElement(2) * yf,
                                               FieldElement(1) + yf, yf);
    for (auto& q : s) q = q * lambda;
    auto canon = [](std::vector<Quaternion>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    canon(r);
    canon(s);
    return r == s;
}

Polytope snub24_alt(const SnubParameter& param) {
    const FieldElement& x = param.x;
    const FieldElement one(1);
    // Coefficient blocks (value on one slot, value on the other three) and the
    // required parity of the number of + signs.
    struct Block {
        FieldElement lone, rest;
        int parity;  // required (# of +) mod 2
    };
    const std::vector<Block> blocks = {
        {FieldElement(2) + FieldElement(3) * x, x, 0},
        {one, one + FieldElement(2) * x, 0},
        {one + FieldElement(3) * x, one + x, 1},
    };
    const FieldElement a2{param.a_scale};
    std::vector<Quaternion> pts;
    for (const auto& blk : blocks)
        for (int lone_slot = 0; lone_slot < 4; ++lone_slot)
            for (int signs = 0; signs < 16; ++signs) {
                int plus = 0;
                for (int k = 0; k < 4; ++k)
                    if (!(signs & (1 << k))) ++plus;
                if (plus % 2 != blk.parity) continue;
                FieldElement slot[4];
                for (int k = 0; k < 4; ++k) {
                    FieldElement v = (k == lone_slot) ? blk.lone : blk.rest;
                    slot[k] = (signs & (1 << k)) ? -v : v;
                }
                pts.emplace_back(slot[0] * a2, slot[1] * a2, slot[2] * a2, slot[3] * a2);
            }
    Polytope p;
    p.vertices = make_vertex_set(std::move(pts), "Pyr4D_576-alt", Quaternion::zero());
    p.family = "snub24-alt";
    p.x = x;
    p.degenerate = param.degenerate();
    if (p.vertices.size() != (p.degenerate ? 24u : 96u))
        throw std::logic_error("alternative snub orbit has unexpected size");
    return p;
}

}  // namespace polyquat::polytopes
