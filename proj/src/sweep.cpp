#include "dst/sweep.hpp"

#include <chrono>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dst/oracle.hpp"

namespace dst {

namespace {

constexpr const char* kBudgetMarker = "\x01budget";

std::string oracle_compare(const Graph& g, int d, int dprime) {
    int bd = oracle::brute_D(g);
    int bdp = oracle::brute_Dprime(g);
    if (bd != d)
        return "oracle disagreement: D=" + std::to_string(d) + " brute_D=" + std::to_string(bd);
    if (bdp != dprime)
        return "oracle disagreement: D'=" + std::to_string(dprime) +
               " brute_D'=" + std::to_string(bdp);
    return "";
}

}  // namespace

std::string check_tree_instance(const Graph& t, int oracle_max_n) {
    try {
        TreeClassification c = classify_tree(t, false);
        bool in_family = c.family.in_family();
        if (c.Dprime - c.D != (in_family ? 1 : 0))
            return "D'=" + std::to_string(c.Dprime) + " D=" + std::to_string(c.D) +
                   " does not match family membership " + (in_family ? "true" : "false");
        if (c.Dprime > c.D + 1) return "bound violated: D' > D + 1";
        if (!c.center.bicentric && c.Dprime != c.D) return "unicentric tree with D' != D";
        if (t.n <= oracle_max_n) return oracle_compare(t, c.D, c.Dprime);
        return "";
    } catch (const oracle::LimitError&) {
        return kBudgetMarker;
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

std::string check_unicyclic_instance(const Graph& g, int oracle_max_n) {
    try {
        UnicyclicClassification c = classify_unicyclic(g, false);
        if (c.D != c.Dprime)
            return "D=" + std::to_string(c.D) + " D'=" + std::to_string(c.Dprime) +
                   " differ on a unicyclic graph";
        if (g.n <= oracle_max_n) return oracle_compare(g, c.D, c.Dprime);
        return "";
    } catch (const oracle::LimitError&) {
        return kBudgetMarker;
    } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
    }
}

namespace {

using InstanceCheck = std::string (*)(const Graph&, int);

SweepResult run_sweep(Family family, const SweepOptions& opt, InstanceCheck check,
                      bool parallel) {
    auto start = std::chrono::steady_clock::now();
    SweepResult res;
    for (int n = 3; n <= opt.max_n; ++n) {
        const std::vector<Graph>& level =
            family == Family::tree ? all_trees(n) : all_unicyclic(n, 16);
        int count = static_cast<int>(level.size());
        std::vector<std::string> detail(count);
        if (parallel) {
#ifdef _OPENMP
            int jobs = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
            for (int i = 0; i < count; ++i) detail[i] = check(level[i], opt.oracle_max_n);
#else
            for (int i = 0; i < count; ++i) detail[i] = check(level[i], opt.oracle_max_n);
#endif
        } else {
            for (int i = 0; i < count; ++i) detail[i] = check(level[i], opt.oracle_max_n);
        }
        res.instances += count;
        for (int i = 0; i < count; ++i) {
            if (detail[i].empty()) continue;
            if (detail[i] == kBudgetMarker) {
                res.budget_exhausted = true;
                continue;
            }
            res.violations.push_back(SweepViolation{level[i], detail[i]});
        }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace

SweepResult verify_theorem1_serial(const SweepOptions& opt) {
    return run_sweep(Family::tree, opt, &check_tree_instance, false);
}

SweepResult verify_theorem1_parallel(const SweepOptions& opt) {
    return run_sweep(Family::tree, opt, &check_tree_instance, true);
}

SweepResult verify_theorem2_serial(const SweepOptions& opt) {
    return run_sweep(Family::unicyclic, opt, &check_unicyclic_instance, false);
}

SweepResult verify_theorem2_parallel(const SweepOptions& opt) {
    return run_sweep(Family::unicyclic, opt, &check_unicyclic_instance, true);
}

SweepResult verify_theorem(int theorem, const SweepOptions& opt) {
    if (theorem == 1)
        return opt.jobs == 1 ? verify_theorem1_serial(opt) : verify_theorem1_parallel(opt);
    if (theorem == 2)
        return opt.jobs == 1 ? verify_theorem2_serial(opt) : verify_theorem2_parallel(opt);
    throw std::invalid_argument("verify_theorem: theorem must be 1 or 2");
}

}  // namespace dst
