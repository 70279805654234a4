// Benchmark: serial vs OpenMP evaluation of an x-family squeezing sweep.
// The parallel path must produce bit-identical rows (the grid slots are
// deterministic); the program exits nonzero if they differ.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "robertson/algebra.hpp"
#include "robertson/parallel.hpp"
#include "robertson/ris.hpp"

using namespace robertson;

namespace {

struct Row {
    double x = 0.0;
    double var_k1 = 0.0, var_k2 = 0.0, det_sigma = 0.0, det_c = 0.0;
};

// (K1, K2) second moments of the x-family state by tridiagonal band action.
Row evaluate(double x, const Rational& k) {
    double kv = k.value();
    Cx u = std::sqrt(1.0 + x * x), v = -x, z = -1.0;
    RisState st = su11_ris(u, v, 0.0, z, k, 256);
    const Vec& psi = st.state.amplitudes();
    int M = static_cast<int>(psi.size());
    Vec km = Vec::Zero(M), kp = Vec::Zero(M);
    for (int n = 0; n + 1 < M; ++n)
        km(n) = std::sqrt((n + 1.0) * (n + 2.0 * kv)) * psi(n + 1);
    for (int n = 1; n < M; ++n)
        kp(n) = std::sqrt(n * (n - 1.0 + 2.0 * kv)) * psi(n - 1);
    Vec v1 = (kp + km) / 2.0;
    Vec v2 = (kp - km) / Cx(0, 2);
    double m1 = psi.dot(v1).real(), m2 = psi.dot(v2).real();
    Cx xy = v1.dot(v2), yx = v2.dot(v1);
    Row r;
    r.x = x;
    r.var_k1 = v1.squaredNorm() - m1 * m1;
    r.var_k2 = v2.squaredNorm() - m2 * m2;
    double s12 = (0.5 * (xy + yx)).real() - m1 * m2;
    double c12 = (-0.5 * Cx(0, 1) * (xy - yx)).real();
    r.det_sigma = r.var_k1 * r.var_k2 - s12 * s12;
    r.det_c = c12 * c12;
    return r;
}

double run(long count, double step, const Rational& k, bool serial, std::vector<Row>& rows) {
    rows.assign(count, Row{});
    auto t0 = std::chrono::steady_clock::now();
    parallel_for(
        count, [&](long i) { rows[i] = evaluate(i * step, k); }, serial);
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    long count = 801;     // x in [0, 4], step 0.005
    double step = 0.005;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--points") == 0 && i + 1 < argc)
            count = std::atol(argv[++i]);
        else if (std::strcmp(argv[i], "--step") == 0 && i + 1 < argc)
            step = std::atof(argv[++i]);
        else if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc)
            reps = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_sweep [--points N] [--step S] [--reps R]\n");
            return 2;
        }
    }

    Rational k(1, 4);
    std::vector<Row> serial_rows, parallel_rows;
    double t_serial = 1e300, t_parallel = 1e300;
    for (int r = 0; r < reps; ++r) {
        t_serial = std::min(t_serial, run(count, step, k, true, serial_rows));
        t_parallel = std::min(t_parallel, run(count, step, k, false, parallel_rows));
    }

    if (serial_rows.size() != parallel_rows.size() ||
        std::memcmp(serial_rows.data(), parallel_rows.data(),
                    serial_rows.size() * sizeof(Row)) != 0) {
        std::fprintf(stderr, "bench_sweep: serial and parallel rows differ\n");
        return 1;
    }

    std::printf("grid points : %ld (x step %.17g)\n", count, step);
    std::printf("workers     : %d\n", worker_count());
    std::printf("serial      : %.6f s  (best of %d)\n", t_serial, reps);
    std::printf("parallel    : %.6f s  (best of %d)\n", t_parallel, reps);
    std::printf("speedup     : %.2fx\n", t_serial / t_parallel);
    std::printf("rows bit-identical: yes\n");
    return 0;
}
