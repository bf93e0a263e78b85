// Times the OpenMP kernels against their serial references on generated
// graphs. Usage: kernel_bench [n] [avg_degree]

#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "cnsparse/curvature.hpp"
#include "cnsparse/generators.hpp"
#include "cnsparse/local_stats.hpp"

using namespace cnsparse;

namespace {

template <class F>
double time_best_of(F&& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        double t0 = omp_get_wtime();
        fn();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4000;
    double avg_deg = argc > 2 ? std::atof(argv[2]) : 40.0;
    double p = avg_deg / (n - 1);

    std::printf("threads: %d\n", omp_get_max_threads());
    Graph g = gen_erdos_renyi(n, p, 2024);
    std::printf("graph: n=%d m=%d\n", g.num_nodes(), g.num_edges());

    std::vector<int> serial_counts, parallel_counts;
    double t_ser = time_best_of([&] { serial_counts = common_neighbor_counts_serial(g); }, 3);
    double t_par = time_best_of([&] { parallel_counts = common_neighbor_counts(g); }, 3);
    bool same = serial_counts == parallel_counts;
    std::printf("common-neighbor counts: serial %.4fs  parallel %.4fs  speedup %.2fx  match=%s\n",
                t_ser, t_par, t_ser / t_par, same ? "yes" : "NO");

    // curvature on a smaller instance; each edge solves a transport problem
    int cn = std::min(n, 400);
    Graph cg = gen_erdos_renyi(cn, avg_deg / (cn - 1), 7);
    while (!is_connected(cg)) cg = gen_erdos_renyi(cn, 1.5 * avg_deg / (cn - 1), 7);
    CurvatureReport ser, par;
    double c_ser = time_best_of([&] { ser = ricci_all_serial(cg); }, 2);
    double c_par = time_best_of([&] { par = ricci_all(cg); }, 2);
    bool kmatch = ser.kappa.size() == par.kappa.size();
    for (std::size_t e = 0; kmatch && e < ser.kappa.size(); ++e)
        kmatch = std::abs(ser.kappa[e] - par.kappa[e]) < 1e-12;
    std::printf("ricci curvature (n=%d m=%d): serial %.4fs  parallel %.4fs  speedup %.2fx  match=%s\n",
                cg.num_nodes(), cg.num_edges(), c_ser, c_par, c_ser / c_par,
                kmatch ? "yes" : "NO");
    return (same && kmatch) ? 0 : 1;
}
