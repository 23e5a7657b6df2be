// Compares the parallel vertex enumeration kernel against the serial
// reference on a batch of systems, checking that they agree and reporting
// best-of-N wall times.
//
// Usage: bench_enumerate [n] [reps] [systems]

#include "sgx/orders.hpp"
#include "sgx/polytope.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 5;
    const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
    const int maxSystems = argc > 3 ? std::atoi(argv[3]) : 6;
    if (n < 1 || n > 8 || reps < 1 || maxSystems < 1) {
        std::cerr << "usage: bench_enumerate [n 1..8] [reps >=1] [systems >=1]\n";
        return 2;
    }

    auto orders = sgx::all_orders(n);
    if (static_cast<int>(orders.size()) > maxSystems) orders.resize(static_cast<std::size_t>(maxSystems));

    std::vector<sgx::InequalitySystem> systems;
    for (const auto& order : orders) {
        auto coeffs = sgx::sample_coeffs(order, 1, sgx::Profile::generic);
        systems.push_back(sgx::build_system(order, coeffs, sgx::Variant::chain));
    }

    // Agreement check before timing anything.
    std::size_t vertexTotal = 0;
    for (const auto& sys : systems) {
        auto a = sgx::enumerate_vertices_serial(sys);
        auto b = sgx::enumerate_vertices(sys);
        if (a != b) {
            std::cerr << "kernel mismatch on a system with " << sys.ineqs.size()
                      << " inequalities\n";
            return 1;
        }
        vertexTotal += a.size();
    }

    auto bestOf = [&](auto&& enumerate) {
        double best = 1e300;
        for (int r = 0; r < reps; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            std::size_t sink = 0;
            for (const auto& sys : systems) sink += enumerate(sys).size();
            const double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (sink != vertexTotal) std::cerr << "vertex count drifted between reps\n";
            if (dt < best) best = dt;
        }
        return best;
    };

    const double serial = bestOf([](const sgx::InequalitySystem& s) {
        return sgx::enumerate_vertices_serial(s);
    });
    const double parallel = bestOf([](const sgx::InequalitySystem& s) {
        return sgx::enumerate_vertices(s);
    });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "n=" << n << " systems=" << systems.size() << " vertices=" << vertexTotal
              << " reps=" << reps << " threads=" << threads << "\n";
    std::cout << "serial   " << serial << " s\n";
    std::cout << "parallel " << parallel << " s\n";
    std::cout << "speedup  " << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
    return 0;
}
