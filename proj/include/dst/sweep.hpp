#pragma once

#include <string>

#include "dst/enumeration.hpp"

namespace dst {

struct SweepOptions {
    int max_n = 10;        // largest order to verify (from 3)
    int oracle_max_n = 0;  // brute-force cross-check up to this order
    int jobs = 0;          // 0 = runtime default, 1 = serial reference path
};

struct SweepViolation {
    Graph g;
    std::string detail;
};

struct SweepResult {
    long long instances = 0;
    std::vector<SweepViolation> violations;
    bool budget_exhausted = false;
    double seconds = 0.0;
};

// Theorem checks over every enumerated instance of the family.
// Trees: D' - D matches family membership, D' <= D + 1, unicentric implies
// D' = D, and oracle equality below oracle_max_n.
// Unicyclic: D' = D and oracle equality below oracle_max_n.
// The serial kernels are the reference; the parallel kernels fan instances
// out across OpenMP threads and must produce identical results.
SweepResult verify_theorem1_serial(const SweepOptions& opt);
SweepResult verify_theorem1_parallel(const SweepOptions& opt);
SweepResult verify_theorem2_serial(const SweepOptions& opt);
SweepResult verify_theorem2_parallel(const SweepOptions& opt);

// Dispatch on opt.jobs: 1 runs the serial reference, anything else the
// OpenMP kernel. theorem is 1 or 2.
SweepResult verify_theorem(int theorem, const SweepOptions& opt);

// One instance worth of checking; empty string = pass. Exposed for tests.
std::string check_tree_instance(const Graph& t, int oracle_max_n);
std::string check_unicyclic_instance(const Graph& g, int oracle_max_n);

}  // namespace dst
