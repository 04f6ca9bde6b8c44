#pragma once

// Root data for the diagrams D3, B3, D4 and an alternative quaternionic D4
// basis: simple roots, Cartan matrices, weights, reflection generators,
// diagram symmetries and affine reflections.

#include "polyquat/quat.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyquat::coxeter {

using field::Rational;
using quat::OrthoMap;
using quat::Quaternion;

enum class Diagram { D3, B3, D4, D4alt };

struct UnsupportedDiagram : std::invalid_argument {
    explicit UnsupportedDiagram(const std::string& what) : std::invalid_argument(what) {}
};

Diagram parse_diagram(std::string_view name);
std::string diagram_str(Diagram d);

struct RootDatum {
    Diagram diagram;
    std::vector<Quaternion> simple_roots;
    std::vector<std::vector<Rational>> cartan;  // 2(ai,aj)/(aj,aj)
    std::vector<Quaternion> weights;            // (wi, 2aj/(aj,aj)) = delta_ij
    Quaternion highest_root;
};

/// Root datum with all cross-checks (Cartan entries, weight duality, highest
/// root expansion) performed at construction; cached per diagram.
const RootDatum& root_datum(Diagram d);

/// Reflection of lambda in the hyperplane orthogonal to alpha:
/// lambda - 2(lambda,alpha)/(alpha,alpha) alpha.
Quaternion reflect(const Quaternion& lambda, const Quaternion& alpha);

/// Affine reflection fixing the hyperplane (lambda, alpha) = k.
Quaternion affine_reflect(const Quaternion& lambda, const Quaternion& alpha, long k);

/// Simple reflections as OrthoMaps, one per simple root. 3D diagrams (D3, B3)
/// return the vector-restricted plain pairs; 4D diagrams return star maps.
std::vector<OrthoMap> generators(Diagram d);

/// The diagram-symmetry group as OrthoMaps: D3 -> {gamma}, D4 -> the S3 of
/// order 6 permuting roots 1, 3, 4, D4alt -> the same S3 conjugated into the
/// alternative basis. Throws UnsupportedDiagram for B3.
std::vector<OrthoMap> diagram_symmetry(Diagram d);

/// The basis change a = [(e2+e3)/sqrt2, -e2] with a^2 = 1 that carries the D4
/// root datum to the D4alt one.
OrthoMap basis_transform_a();

/// Exact coordinates of v in the given linearly independent basis (at most 4
/// quaternions), or nullopt if v is outside the span.
std::optional<std::vector<field::FieldElement>> expand_in_basis(
    const std::vector<Quaternion>& basis, const Quaternion& v);

}  // namespace polyquat::coxeter
