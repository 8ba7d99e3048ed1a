#pragma once

#include <functional>
#include <optional>

#include "dst/graph.hpp"
#include "dst/tree_distinguishing.hpp"
#include "dst/unicyclic.hpp"

namespace dst {

enum class Family { tree, unicyclic };

// One representative per isomorphism class, deterministic order.
// Trees: grown by leaf attachment with center-anchored canonical-code dedupe.
// Unicyclic: cycle length t plus hanging rooted trees, deduplicated under the
// dihedral action on the code sequence.
const std::vector<Graph>& all_trees(int n, int bound = 16);
const std::vector<Graph>& all_unicyclic(int n, int bound = 12);

// Canonical code of a free tree anchored at its center.
Code free_tree_code(const Graph& t);

struct StreamCursor {
    Family family = Family::tree;
    int n = 0;
    int index = 0;
};

// Lazy, resumable instance stream over one family for n = from..max_n.
class InstanceStream {
public:
    InstanceStream(Family family, int from_n, int max_n);
    explicit InstanceStream(const StreamCursor& cursor, int max_n);

    std::optional<Graph> next();
    StreamCursor cursor() const { return cur_; }

private:
    StreamCursor cur_;
    int max_n_;
};

struct GeneratorConfig {
    Family family = Family::tree;
    int max_n = 8;
    bool in_family_T_only = false;  // trees
    bool bicentric_only = false;    // trees
    int cycle_min = 0;              // unicyclic; 0 = no bound
    int cycle_max = 0;
    int oracle_max_n = 0;  // cross-check instances up to this order
    int jobs = 0;          // classification workers; 1 = serial
};

struct CensusRecord {
    Graph g;
    Family family = Family::tree;
    std::optional<TreeClassification> tree;
    std::optional<UnicyclicClassification> unicyclic;
    bool oracle_checked = false;
};

// Classify every generated instance (n from 3 to max_n), applying filters,
// in deterministic order. The callback sees records in generation order.
void census(const GeneratorConfig& cfg, const std::function<void(const CensusRecord&)>& sink);

}  // namespace dst
