#pragma once

// Data-parallel inner loops shared by the group and polytope builders. Every
// kernel has a serial reference implementation and an OpenMP variant that is
// required to produce an identical result (parallel loops fill preassigned
// slots; deduplication and ordering stay sequential). The *_omp entry points
// fall back to the serial path when the build has no OpenMP support.

#include "polyquat/quat.hpp"

#include <cstddef>
#include <vector>

namespace polyquat::kernels {

using quat::OrthoMap;
using quat::Quaternion;

// Images of one seed under every map, in map order (no dedup).
std::vector<Quaternion> apply_all_serial(const std::vector<OrthoMap>& maps,
                                         const Quaternion& seed);
std::vector<Quaternion> apply_all_omp(const std::vector<OrthoMap>& maps,
                                      const Quaternion& seed);

// All pairwise quaternion products a*b, row-major in (a, b).
std::vector<Quaternion> pairwise_products_serial(const std::vector<Quaternion>& a,
                                                 const std::vector<Quaternion>& b);
std::vector<Quaternion> pairwise_products_omp(const std::vector<Quaternion>& a,
                                              const std::vector<Quaternion>& b);

// Compositions frontier[i] * generators[j], row-major in (i, j).
std::vector<OrthoMap> compose_frontier_serial(const std::vector<OrthoMap>& frontier,
                                              const std::vector<OrthoMap>& generators);
std::vector<OrthoMap> compose_frontier_omp(const std::vector<OrthoMap>& frontier,
                                           const std::vector<OrthoMap>& generators);

// True iff every pairwise composition lands back in the element set.
bool pairwise_closed_serial(const std::vector<OrthoMap>& elements);
bool pairwise_closed_omp(const std::vector<OrthoMap>& elements);

// Whether OpenMP is compiled in (the _omp kernels otherwise run serially).
bool openmp_enabled();

}  // namespace polyquat::kernels
