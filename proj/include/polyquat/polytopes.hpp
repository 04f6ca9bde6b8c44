#pragma once

// Orbit polytopes: the classical W(D3)/W(B3) orbit solids, the parametrized
// pseudoicosahedron / pyritohedron / pseudo icosidodecahedron families, and
// the pseudo snub 24-cell S(x) with its cell decomposition and dual. All
// vertex data is exact; face lists of 3D solids are validated by planarity
// and the Euler formula.

#include "polyquat/qgroups.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace polyquat::polytopes {

using field::FieldElement;
using field::Rational;
using quat::Quaternion;

struct DegenerateParameter : std::domain_error {
    explicit DegenerateParameter(const std::string& what) : std::domain_error(what) {}
};

struct DualUndefined : std::domain_error {
    DualUndefined() : std::domain_error("dual polytope does not exist at x = -2/3") {}
};

/// Exact, deduplicated, lexicographically ordered orbit of a seed point.
struct VertexSet {
    std::vector<Quaternion> points;
    std::string group_name;
    Quaternion seed;

    std::size_t size() const { return points.size(); }
    bool contains(const Quaternion& q) const { return index_.count(q) > 0; }
    /// Index of an exact point; throws std::out_of_range if absent.
    std::size_t index_of(const Quaternion& q) const { return index_.at(q); }
    void rebuild_index();

    std::unordered_map<Quaternion, std::size_t, quat::QuaternionHash> index_;
};

struct Cell {
    std::string type;
    std::vector<std::size_t> vertex_indices;  // sorted
};

struct Polytope {
    VertexSet vertices;
    std::vector<std::array<std::size_t, 2>> edges;   // sorted pairs, sorted list
    std::vector<std::vector<std::size_t>> faces;     // cyclically ordered
    std::vector<Cell> cells;
    std::string family;
    FieldElement x;
    bool degenerate = false;
};

/// Parameter of the snub 24-cell family: the rational (or golden) ratio x and
/// the overall integer scale (the paper's a2).
struct SnubParameter {
    FieldElement x;
    Rational a_scale = 1;

    /// x in {-1, -1/2, 0}: the 96-point orbit collapses onto a 24-cell.
    bool degenerate() const {
        return x == FieldElement(-1) || x == FieldElement(Rational(-1, 2)) ||
               x == FieldElement(0);
    }
    /// Irrational x (tau or sigma): vertices leave the D4 lattice.
    bool golden() const { return !x.is_rational(); }
};

/// Orbit of a seed under a finite group, exact and deterministic.
VertexSet orbit(const qgroups::FiniteGroup& group, const Quaternion& seed);

/// Fixed orbit solids: octahedron, tetrahedron, cube, cuboctahedron,
/// truncated-octahedron. Faces computed from supporting hyperplanes.
Polytope standard_solid(std::string_view family);
const std::vector<std::string>& standard_solid_names();

/// 12 vertices a1 {+-(1+x)e1 +- xe2, cyclic}; 8 equilateral and 12 isosceles
/// triangular faces. Throws DegenerateParameter for x in {0, -1/2, -1}.
Polytope pseudoicosahedron(const FieldElement& x, const Rational& a1);

/// Dual of the pseudoicosahedron: 12 + 8 vertices, 12 planar pentagons.
Polytope pyritohedron(const FieldElement& x);

/// The 30 edge midpoints of pseudoicosahedron(x, a1); 20 triangles and 12
/// pentagons.
Polytope pseudo_icosidodecahedron(const FieldElement& x, const Rational& a1);

/// Pseudo snub 24-cell S(x): the 96-point orbit of
/// Lambda = a2((1+2x) + (1+x)e1 + xe2). Degenerate x gives the flagged
/// 24-point result instead of an error.
Polytope snub24(const SnubParameter& param);

/// S(x) with its 144 cells (24 pseudoicosahedra, 24 tetrahedra, 96 triangular
/// pyramids) and the derived 432 edges and 480 faces.
Polytope snub24_cells(const SnubParameter& param);

/// Dual of S(x): 144 vertices T u c1 sqrt2 T' u c2 R(x) and 96 eight-vertex
/// facets. Throws DualUndefined at x = -2/3; degenerate x gives a flagged
/// vertex-only result.
Polytope snub24_dual(const SnubParameter& param);

/// R(-1/(y+1)) equals a single field scalar times S(y), verified exactly on
/// all 96 points.
bool dual_identity_check(const Rational& y);

/// S'(x), the same polytope written in the alternative D4 basis; equals
/// sqrt2 times the basis_transform_a image of S(x).
Polytope snub24_alt(const SnubParameter& param);

}  // namespace polyquat::polytopes
