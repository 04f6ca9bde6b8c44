#include "polyquat/kernels.hpp"

#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polyquat::kernels {

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

std::vector<Quaternion> apply_all_serial(const std::vector<OrthoMap>& maps,
                                         const Quaternion& seed) {
    std::vector<Quaternion> out(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) out[i] = maps[i].apply(seed);
    return out;
}

std::vector<Quaternion> apply_all_omp(const std::vector<OrthoMap>& maps,
                                      const Quaternion& seed) {
    std::vector<Quaternion> out(maps.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(maps.size()); ++i)
        out[i] = maps[i].apply(seed);
    return out;
}

std::vector<Quaternion> pairwise_products_serial(const std::vector<Quaternion>& a,
                                                 const std::vector<Quaternion>& b) {
    std::vector<Quaternion> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

std::vector<Quaternion> pairwise_products_omp(const std::vector<Quaternion>& a,
                                              const std::vector<Quaternion>& b) {
    std::vector<Quaternion> out(a.size() * b.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(a.size()); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

std::vector<OrthoMap> compose_frontier_serial(const std::vector<OrthoMap>& frontier,
                                              const std::vector<OrthoMap>& generators) {
    std::vector<OrthoMap> out(frontier.size() * generators.size());
    for (std::size_t i = 0; i < frontier.size(); ++i)
        for (std::size_t j = 0; j < generators.size(); ++j)
            out[i * generators.size() + j] = frontier[i] * generators[j];
    return out;
}

std::vector<OrthoMap> compose_frontier_omp(const std::vector<OrthoMap>& frontier,
                                           const std::vector<OrthoMap>& generators) {
    std::vector<OrthoMap> out(frontier.size() * generators.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i)
        for (std::size_t j = 0; j < generators.size(); ++j)
            out[i * generators.size() + j] = frontier[i] * generators[j];
    return out;
}

namespace {

std::unordered_set<OrthoMap, quat::OrthoMapHash> make_index(
    const std::vector<OrthoMap>& elements) {
    return {elements.begin(), elements.end()};
}

}  // namespace

bool pairwise_closed_serial(const std::vector<OrthoMap>& elements) {
    auto index = make_index(elements);
    for (const auto& a : elements)
        for (const auto& b : elements)
            if (!index.count(a * b)) return false;
    return true;
}

bool pairwise_closed_omp(const std::vector<OrthoMap>& elements) {
    auto index = make_index(elements);
    bool closed = true;
#pragma omp parallel for schedule(dynamic, 8) shared(closed)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(elements.size()); ++i) {
        if (!closed) continue;
        for (const auto& b : elements) {
            if (!index.count(elements[i] * b)) {
#pragma omp atomic write
                closed = false;
                break;
            }
        }
    }
    return closed;
}

}  // namespace polyquat::kernels
