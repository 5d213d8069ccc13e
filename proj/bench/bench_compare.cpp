// Wall-time comparison of the serial reference kernels against their
// OpenMP-parallel twins, on workloads big enough to show the difference:
// the adversary pattern sweep and the brute-force locality search. Both
// policies must produce identical results; that is asserted here too.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "ccomp/json_io.hpp"
#include "ccomp/locality.hpp"
#include "ccomp/scenario.hpp"
#include "ccomp/simulator.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ccomp;

namespace {

double wall_ms(const std::function<void()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void row(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.1f ms %10.1f ms   x%-5.2f %s\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("openmp: %s, %d thread(s)\n",
                openmp_enabled() ? "enabled" : "disabled (serial fallback)", threads);
    std::printf("%-28s %13s %13s   %-7s\n", "kernel", "serial", "parallel", "speedup");

    // Adversary sweep: byzantine lagrange plan, exhaustive drops x corruption
    // positions x values.
    {
        PrimeField field(65537);
        SplitMix64 rng(1);
        MultiPoly f = MultiPoly::random(field, 3, 2, 2, 4, false, rng);
        std::vector<Point> inputs = generate_generic(field, 6, 3, rng);
        QueryPlan plan = plan_lcc(f, inputs, 2, 1);
        Adversary adv;
        adv.s_budget = 2;
        adv.b_budget = 1;
        adv.seed = 42;
        RunReport serial_report, parallel_report;
        double ts = wall_ms([&] { serial_report = run(plan, f, inputs, adv, Exec::serial); });
        double tp = wall_ms([&] { parallel_report = run(plan, f, inputs, adv, Exec::parallel); });
        json a = report_to_json(serial_report);
        json b = report_to_json(parallel_report);
        a.erase("wall_ms");
        b.erase("wall_ms");
        std::printf("  (%zu patterns, %zu workers)\n", serial_report.patterns_tested,
                    plan.workers());
        row("adversary sweep", ts, tp, a == b);
    }

    // Locality oracle: cubic class over GF(7) with one straggler, the largest
    // instance inside the oracle budget.
    {
        PrimeField field(7);
        AssociatedCode code = build_associated_code(field, 1, 3);
        CodeLocality serial_result{}, parallel_result{};
        double ts =
            wall_ms([&] { serial_result = computational_locality(code, 2, 1, Exec::serial); });
        double tp =
            wall_ms([&] { parallel_result = computational_locality(code, 2, 1, Exec::parallel); });
        std::printf("  (%zu codewords, L=%zu)\n", code.codewords.size(), serial_result.locality);
        row("locality search", ts, tp,
            serial_result.locality == parallel_result.locality &&
                serial_result.worst_index_set == parallel_result.worst_index_set &&
                serial_result.witness == parallel_result.witness);
    }
    return 0;
}
