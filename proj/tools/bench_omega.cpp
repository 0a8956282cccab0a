// Compares the serial and OpenMP paths of the Omega-matrix kernels (the
// entry computations are independent per (row, column) pair).
#include <chrono>
#include <iostream>

#include "rsym/lusztig_shoji.hpp"

using namespace rsym;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 4;
    auto [cfg, defects] = symplectic_defects(n, false);
    SymbolTable table = build_table(n, cfg, defects);
    std::cout << "symplectic table n=" << n << ": " << table.size() << " symbols, "
              << table.classes.size() << " classes\n";

    auto t0 = Clock::now();
    OmegaMatrix<RatFun> serial = omega_tilde(table, false);
    double ts = seconds_since(t0);
    std::cout << "omega_tilde serial:   " << ts << " s\n";

    t0 = Clock::now();
    OmegaMatrix<RatFun> par = omega_tilde(table, true);
    double tp = seconds_since(t0);
    std::cout << "omega_tilde parallel: " << tp << " s\n";
    std::cout << "speedup: " << (tp > 0 ? ts / tp : 0.0) << "x\n";
    std::cout << "results identical: " << (serial.entries == par.entries ? "yes" : "NO") << "\n";

    if (n <= 3) {
        t0 = Clock::now();
        OmegaMatrix<MultiRatFun> ms = omega_multi(table, false);
        double ms_t = seconds_since(t0);
        std::cout << "omega_multi serial:   " << ms_t << " s\n";
        t0 = Clock::now();
        OmegaMatrix<MultiRatFun> mp = omega_multi(table, true);
        double mp_t = seconds_since(t0);
        std::cout << "omega_multi parallel: " << mp_t << " s\n";
        std::cout << "speedup: " << (mp_t > 0 ? ms_t / mp_t : 0.0) << "x\n";
        std::cout << "results identical: " << (ms.entries == mp.entries ? "yes" : "NO") << "\n";
    }
    return 0;
}
