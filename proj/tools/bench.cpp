// Benchmark for the two parallel kernels against their serial references:
// sparse tensor-map composition and prime-field variety enumeration. The
// parallel and serial results are required to be identical; a mismatch makes
// the benchmark fail.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "omr/fixtures.hpp"
#include "omr/ideal.hpp"
#include "omr/tensor.hpp"

namespace {

using namespace omr;
using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

// Dense 3x3 rational matrices with small mixed entries; their Kronecker
// powers give fully dense composition workloads.
RatMat dense3(int salt) {
    RatMat u(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            u(static_cast<size_t>(i), static_cast<size_t>(j)) =
                Rat((salt + 3 * i + j) % 7 - 3, 1 + (i + j + salt) % 3);
    return u;
}

bool bench_compose() {
    const int n = 5;  // 3^5 = 243 on each side
    TensorMap f = kronecker_power(dense3(1), n);
    TensorMap g = kronecker_power(dense3(2), n);
    std::cout << "compose: two dense 243 x 243 maps (3^5 Kronecker powers)\n";

    auto t0 = clock_type::now();
    TensorMap serial = compose_serial(f, g);
    double serial_ms = ms_since(t0);
    std::cout << "  serial:   " << std::fixed << std::setprecision(1) << serial_ms << " ms\n";

    t0 = clock_type::now();
    TensorMap parallel = compose(f, g);
    double parallel_ms = ms_since(t0);
    bool equal = parallel == serial;
    std::cout << "  parallel: " << parallel_ms << " ms  (x" << std::setprecision(2)
              << serial_ms / parallel_ms << ", results " << (equal ? "equal" : "DIFFER")
              << ")\n";
    return equal;
}

bool bench_variety() {
    AlgebraSpec a = fixture_ax();
    AlgebraSpec b = fixture_by();
    bool all_equal = true;
    for (uint32_t p : {23u, 29u, 31u}) {
        size_t candidates = 1;
        for (int k = 0; k < a.dim() * b.dim(); ++k) candidates *= p;
        std::cout << "variety " << a.name() << " -> " << b.name() << " over F_" << p << " ("
                  << candidates << " candidates)\n";

        auto t0 = clock_type::now();
        std::vector<FpMat> serial = variety_points_serial(a, b, p);
        double serial_ms = ms_since(t0);
        std::cout << "  serial:   " << std::setprecision(1) << serial_ms << " ms, "
                  << serial.size() << " points\n";

        t0 = clock_type::now();
        std::vector<FpMat> parallel = variety_points(a, b, p);
        double parallel_ms = ms_since(t0);
        bool equal = parallel == serial;
        all_equal = all_equal && equal;
        std::cout << "  parallel: " << parallel_ms << " ms  (x" << std::setprecision(2)
                  << serial_ms / parallel_ms << ", results " << (equal ? "equal" : "DIFFER")
                  << ")\n";
    }
    return all_equal;
}

}  // namespace

int main() {
    bool ok = bench_compose();
    ok = bench_variety() && ok;
    if (!ok) {
        std::cout << "FAIL: parallel and serial results differ\n";
        return 1;
    }
    std::cout << "all parallel results identical to serial references\n";
    return 0;
}
