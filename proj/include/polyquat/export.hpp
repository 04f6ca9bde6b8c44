#pragma once

// Serialization of polytopes: JSON with exact coefficient strings plus float
// coordinates, OFF meshes for 3D solids, per-cell OFF samples with a JSON
// sidecar for 4D polytopes, and the Fibonacci approximant CSV. Floats are
// rendering-only; the exact strings round-trip losslessly.

#include "polyquat/polytopes.hpp"

#include <map>
#include <string>

namespace polyquat::exporter {

/// Working precision (bits) used when rendering floats; never affects exact
/// data. Reads POLYQUAT_PRECISION_BITS, defaulting to 128.
unsigned precision_bits_from_env();

/// Full JSON document: family, parameter, group, vertices (exact strings and
/// floats), edges, faces, cells. Deterministic byte-for-byte.
std::string polytope_json(const polytopes::Polytope& p, unsigned bits = 128);

/// Inverse of polytope_json on the exact fields; floats are recomputed, so
/// json -> parse -> json is byte-identical.
polytopes::Polytope polytope_from_json(const std::string& text);

/// OFF mesh of a 3D solid (pure-vector vertices). Throws std::invalid_argument
/// for polytopes with cells (4D); use cell_catalog for those.
std::string polytope_off(const polytopes::Polytope& p, unsigned bits = 128);

/// 4D export: one OFF sample per cell type (the cell projected into its own
/// hyperplane) plus the full JSON document as a sidecar.
struct CellCatalog {
    std::map<std::string, std::string> cell_offs;  // "cell-<type>.off" -> OFF text
    std::string sidecar_json;
};
CellCatalog cell_catalog(const polytopes::Polytope& p, unsigned bits = 128);

/// CSV report over the approximant chain n = 2..n_max for family
/// "pseudo-icosahedron" or "snub24": term, scale, x_n, lattice membership,
/// distance to the golden-ratio limit.
std::string fib_csv(int n_max, const std::string& family);

}  // namespace polyquat::exporter
