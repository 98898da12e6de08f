// Compares the serial reference paths against the OpenMP ones on the heavy
// verification sweeps and checks they produce identical reports.
#include "superjet/clifford.hpp"
#include "superjet/f4.hpp"
#include "superjet/parallel.hpp"
#include "superjet/pdesym.hpp"
#include "superjet/spencer.hpp"

#include <chrono>
#include <iostream>

using namespace superjet;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

bool same(const Report& a, const Report& b) {
    if (a.checks.size() != b.checks.size()) return false;
    for (size_t k = 0; k < a.checks.size(); ++k)
        if (a.checks[k].name != b.checks[k].name || a.checks[k].got != b.checks[k].got) return false;
    return true;
}

} // namespace

int main() {
    std::cout << "threads: " << thread_count() << "\n\n";
    // construct the shared models outside the timed regions
    (void)clifford();
    (void)f4();
    bool all_equal = true;

    struct Row {
        const char* name;
        Report serial, parallel;
        double t_serial, t_parallel;
    };
    std::vector<Row> rows(4);

    rows[0].name = "super-jacobi (40^3 triples)";
    rows[0].t_serial = time_ms([&] { rows[0].serial = f4().verify_super_jacobi(false); });
    rows[0].t_parallel = time_ms([&] { rows[0].parallel = f4().verify_super_jacobi(true); });

    rows[1].name = "spencer (both gradings)";
    rows[1].t_serial = time_ms([&] {
        rows[1].serial = spencer::verify(spencer::Grading::Odd, false);
        rows[1].serial.merge(spencer::verify(spencer::Grading::Mixed, false));
    });
    rows[1].t_parallel = time_ms([&] {
        rows[1].parallel = spencer::verify(spencer::Grading::Odd, true);
        rows[1].parallel.merge(spencer::verify(spencer::Grading::Mixed, true));
    });

    rows[2].name = "2nd-order symmetry certification";
    rows[2].t_serial = time_ms([&] { rows[2].serial = pdesym::verify_second_order(false); });
    rows[2].t_parallel = time_ms([&] { rows[2].parallel = pdesym::verify_second_order(true); });

    rows[3].name = "3rd-order symmetry certification";
    rows[3].t_serial = time_ms([&] { rows[3].serial = pdesym::verify_third_order(false); });
    rows[3].t_parallel = time_ms([&] { rows[3].parallel = pdesym::verify_third_order(true); });

    for (auto& r : rows) {
        bool eq = same(r.serial, r.parallel);
        all_equal = all_equal && eq && r.serial.pass() && r.parallel.pass();
        std::printf("%-36s serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n", r.name,
                    r.t_serial, r.t_parallel, r.t_serial / r.t_parallel,
                    eq ? "identical" : "MISMATCH");
    }
    std::cout << (all_equal ? "\nall kernels agree\n" : "\nserial/parallel mismatch\n");
    return all_equal ? 0 : 1;
}
