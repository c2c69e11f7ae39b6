// Compares the serial reference kernels against the OpenMP ones and reports
// speedups. Run manually: it is not part of the test suite.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "polar/channel.hpp"
#include "polar/decoder.hpp"
#include "polar/ordering.hpp"
#include "polar/polarization.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace polar;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <typename F>
double time_ms(F&& fn) {
    const double t0 = now_ms();
    fn();
    return now_ms() - t0;
}

void report(const std::string& name, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-34s %10.1f ms %10.1f ms   x%.2f   %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, match ? "match" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif
    std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

    {
        std::vector<double> ts, tp;
        const double s = time_ms([&] { ts = b_moment_table(22, 0.75, nullptr, Exec::serial); });
        const double p = time_ms([&] { tp = b_moment_table(22, 0.75, nullptr, Exec::parallel); });
        report("b_moment_table m=22", s, p, ts == tp);
    }
    {
        PolarStats st_s, st_p;
        const double s = time_ms([&] { st_s = expected_v(22, 0.75, Exec::serial); });
        const double p = time_ms([&] { st_p = expected_v(22, 0.75, Exec::parallel); });
        report("expected_v l=22", s, p, std::abs(st_s.mean_v - st_p.mean_v) <= 1e-12);
    }
    {
        AbHistogram hs, hp;
        const double s = time_ms([&] { hs = ab_histogram(21, 0.6, {}, Exec::serial); });
        const double p = time_ms([&] { hp = ab_histogram(21, 0.6, {}, Exec::parallel); });
        report("ab_histogram m=21", s, p, hs.median == hp.median && hs.underflow == hp.underflow);
    }
    {
        CodeSpec spec = construct_code(8, 128, 0.6).first;
        GenieReport gs, gp;
        const double s = time_ms([&] { gs = genie_error_rates(spec, 0.6, 20000, 1, Exec::serial); });
        const double p = time_ms([&] { gp = genie_error_rates(spec, 0.6, 20000, 1, Exec::parallel); });
        bool match = true;
        for (size_t i = 0; i < gs.rows.size(); ++i) match &= gs.rows[i].errors == gp.rows[i].errors;
        report("genie m=8 trials=2e4", s, p, match);
    }
    {
        CodeSpec spec = construct_code(10, 512, 0.9).first;
        BlockErrorReport bs, bp;
        const double s = time_ms([&] { bs = block_error_rate(spec, 0.9, 2000, 1, Exec::serial); });
        const double p = time_ms([&] { bp = block_error_rate(spec, 0.9, 2000, 1, Exec::parallel); });
        report("block MC m=10 trials=2000", s, p, bs.errors == bp.errors);
    }
    {
        OrderScanReport ss, sp;
        const double s = time_ms([&] { ss = order_scan(10, 5, epsilon_grid(49), Exec::serial); });
        const double p = time_ms([&] { sp = order_scan(10, 5, epsilon_grid(49), Exec::parallel); });
        report("order_scan m=10 w=5", s, p, ss.crossing_count() == sp.crossing_count());
    }
    return 0;
}
