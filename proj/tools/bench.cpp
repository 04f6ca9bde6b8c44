// Micro-benchmark comparing the serial reference kernels with their OpenMP
// variants on representative workloads, verifying identical results.

#include "polyquat/kernels.hpp"
#include "polyquat/qgroups.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

namespace {

using namespace polyquat;

double time_ms(const std::function<void()>& fn, int reps) {
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const char* name, double serial, double omp, bool identical) {
    std::printf("%-28s %10.2f ms %10.2f ms %8.2fx  %s\n", name, serial, omp,
                serial / omp, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("OpenMP: %s\n", kernels::openmp_enabled() ? "enabled" : "disabled");
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "omp", "speedup");

    // Timings are taken before the comparisons: argument evaluation order
    // would otherwise compare the results before they exist.
    const auto icosians = qgroups::build_I().elements();
    std::vector<quat::Quaternion> prod_s, prod_p;
    double t_s = time_ms(
        [&] { prod_s = kernels::pairwise_products_serial(icosians, icosians); }, 5);
    double t_p =
        time_ms([&] { prod_p = kernels::pairwise_products_omp(icosians, icosians); }, 5);
    row("pairwise products I x I", t_s, t_p, prod_s == prod_p);

    const auto& wf4 = qgroups::catalog(qgroups::GroupName::WF4);
    std::vector<quat::OrthoMap> comp_s, comp_p;
    t_s = time_ms(
        [&] { comp_s = kernels::compose_frontier_serial(wf4.elements(), wf4.generators()); },
        5);
    t_p = time_ms(
        [&] { comp_p = kernels::compose_frontier_omp(wf4.elements(), wf4.generators()); },
        5);
    row("compose WF4 x generators", t_s, t_p, comp_s == comp_p);

    const auto& wh4 = qgroups::catalog(qgroups::GroupName::WH4);
    const quat::Quaternion seed = quat::Quaternion::one();
    std::vector<quat::Quaternion> img_s, img_p;
    t_s = time_ms([&] { img_s = kernels::apply_all_serial(wh4.elements(), seed); }, 5);
    t_p = time_ms([&] { img_p = kernels::apply_all_omp(wh4.elements(), seed); }, 5);
    row("apply WH4 to a seed", t_s, t_p, img_s == img_p);

    const auto& g576 = qgroups::catalog(qgroups::GroupName::Pyr4D_576);
    bool closed_s = false, closed_p = false;
    t_s = time_ms([&] { closed_s = kernels::pairwise_closed_serial(g576.elements()); }, 1);
    t_p = time_ms([&] { closed_p = kernels::pairwise_closed_omp(g576.elements()); }, 1);
    row("pairwise closure check 576", t_s, t_p, closed_s == closed_p && closed_s);
    return 0;
}
