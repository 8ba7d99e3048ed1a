// Benchmark: serial reference vs OpenMP sweep for the two theorem
// verifications. Results must agree exactly; timings go to stdout.
#include <cstdlib>
#include <iostream>

#include "dst/enumeration.hpp"

#include "dst/sweep.hpp"

int main(int argc, char** argv) {
    int max_n_trees = argc > 1 ? std::atoi(argv[1]) : 12;
    int max_n_unicyclic = argc > 2 ? std::atoi(argv[2]) : 10;

    std::cout << "sweep benchmark (trees up to n=" << max_n_trees << ", unicyclic up to n="
              << max_n_unicyclic << ")\n";

    // generate the instance levels up front so both kernels time pure
    // classification work
    for (int n = 3; n <= max_n_trees; ++n) dst::all_trees(n);
    for (int n = 3; n <= max_n_unicyclic; ++n) dst::all_unicyclic(n, 16);

    for (int theorem : {1, 2}) {
        dst::SweepOptions opt;
        opt.max_n = theorem == 1 ? max_n_trees : max_n_unicyclic;
        dst::SweepResult serial =
            theorem == 1 ? dst::verify_theorem1_serial(opt) : dst::verify_theorem2_serial(opt);
        dst::SweepResult parallel =
            theorem == 1 ? dst::verify_theorem1_parallel(opt) : dst::verify_theorem2_parallel(opt);

        if (serial.instances != parallel.instances ||
            serial.violations.size() != parallel.violations.size()) {
            std::cerr << "mismatch between serial and parallel sweep results\n";
            return 1;
        }
        double speedup = parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0;
        std::cout << "theorem " << theorem << ": " << serial.instances << " instances, "
                  << serial.violations.size() << " violations\n"
                  << "  serial   " << serial.seconds << " s\n"
                  << "  parallel " << parallel.seconds << " s  (speedup " << speedup << "x)\n";
    }
    return 0;
}
