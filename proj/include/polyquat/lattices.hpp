#pragma once

// Lattice membership predicates (fcc, bcc in both printed conventions, sc,
// and the 4D root lattice of D4), their Voronoi (Wigner-Seitz) cell vertex
// sets, and the Fibonacci approximant sequence that keeps the parametrized
// polytopes inside those lattices while converging to the golden-ratio limit.

#include "polyquat/polytopes.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace polyquat::lattices {

using field::BigInt;
using field::FieldElement;
using field::Rational;
using quat::Quaternion;

enum class LatticeKind {
    SC,      // simple cubic: integer vectors
    FCC,     // face-centered cubic: integer vectors with even coordinate sum
    BCC,     // body-centered cubic: all integer or all half-odd coordinates
    BCC2,    // bcc in doubled convention: all even or all odd integers
    D4Root,  // 4D root lattice: four integers with even sum
};

LatticeKind parse_lattice_kind(std::string_view name);
std::string lattice_kind_str(LatticeKind kind);
const std::vector<LatticeKind>& all_lattice_kinds();

/// Exact membership; vectors with irrational coordinates (and, for the 3D
/// lattices, a nonzero scalar part) are simply not members.
bool contains(LatticeKind kind, const Quaternion& v);

/// Vertices of the Voronoi cell around the origin: rhombic dodecahedron
/// (fcc), truncated octahedron (bcc), cube (sc), 24-cell T'/sqrt2 (D4).
polytopes::VertexSet voronoi_vertices(LatticeKind kind);

struct FibonacciTerm {
    int n = 0;
    BigInt f_n;    // F_n with F_1 = F_2 = 1
    Rational x_n;  // F_{n+1} / F_n
};

struct FibonacciChain {
    std::vector<FibonacciTerm> terms;  // n = 2 .. n_max
};

/// The approximant sequence x_n = F_{n+1}/F_n; requires n_max >= 2.
FibonacciChain fibonacci_chain(int n_max);

/// (tau^n - sigma^n) / (tau - sigma), exact; equals F_n as a rational integer.
FieldElement fibonacci_closed_form(int n);

/// Per-term approximant report: lattice membership of the two parametrized
/// polytope families at x_n with the Fibonacci integer scale, the coefficient
/// triple appearing in the snub orbit, and a float convergence metric against
/// the golden-ratio limit (largest distance between direction-normalized
/// vertex sets).
struct ApproximantReport {
    int n = 0;
    BigInt scale;  // F_n
    Rational x;    // F_{n+1} / F_n
    bool icosahedron_in_sc = false;
    bool snub_in_d4 = false;
    std::vector<BigInt> snub_coefficients;  // distinct |coefficients|, sorted
    double distance_to_golden = 0.0;
};

ApproximantReport approximant_check(int n);

/// Largest distance from a direction-normalized vertex of a to the nearest
/// direction-normalized vertex of b (float, export/report use only).
double normalized_vertex_distance(const polytopes::VertexSet& a,
                                  const polytopes::VertexSet& b);

}  // namespace polyquat::lattices
