#pragma once

#include <optional>

#include "dst/colabel.hpp"
#include "dst/graph.hpp"
#include "dst/rooted_tree.hpp"

namespace dst {

// Counter saturating at `cap`: an unsaturated value is exact, a saturated one
// means "at least cap". Classification only ever needs {0, 1, >= 2}, so any
// cap >= 2 keeps every decision sound.
struct SatCount {
    long long value = 0;  // exact when !saturated, == cap when saturated
    bool saturated = false;
    long long cap = 2;

    static SatCount exact(long long v, long long cap_) {
        if (v >= cap_) return SatCount{cap_, true, cap_};
        return SatCount{v, false, cap_};
    }
    static SatCount at_least_cap(long long cap_) { return SatCount{cap_, true, cap_}; }

    bool is_zero() const { return !saturated && value == 0; }
    bool at_least(long long x) const { return saturated ? cap >= x : value >= x; }
    bool exactly_one() const { return !saturated && value == 1; }
    bool operator==(const SatCount& o) const {
        return saturated == o.saturated && value == o.value;
    }
    // Total order used by the monotonicity property: 0 < 1 < ... < cap(=saturated).
    bool operator<=(const SatCount& o) const {
        long long a = saturated ? cap : value;
        long long b = o.saturated ? o.cap : o.value;
        return a <= b;
    }
};

// N(r, k): number of rooted-isomorphism classes of distinguishing edge
// k-labelings of r, evaluated in saturating arithmetic with cap
// max(2, |r|). Zero iff no distinguishing edge k-labeling exists.
SatCount count_edge_classes(const RootedTree& r, int k);

// Exact companion for diagnostics and small-scale tests; throws
// std::overflow_error when the count exceeds 64 bits.
unsigned long long count_edge_classes_exact(const RootedTree& r, int k);

// Minimum k with N(r, k) >= 1; equals both the distinguishing number and the
// distinguishing index of the rooted tree.
int rooted_D(const RootedTree& r);

// Distinguishing number of a tree, n >= 2.
int tree_D(const Graph& t);

// Distinguishing index of a tree, n >= 3.
int tree_Dprime(const Graph& t);

struct FamilyConditions {
    bool bicentric = false;
    bool halves_isomorphic = false;
    bool unique_at_D = false;  // N(T_v, D) == 1
    bool in_family() const { return bicentric && halves_isomorphic && unique_at_D; }
};

// Membership in the extremal family: bicentric, rooted-isomorphic halves, and
// a unique distinguishing edge D-labeling of one half. n >= 3.
FamilyConditions in_family_T(const Graph& t);

struct TreeClassification {
    int D = 0;
    int Dprime = 0;
    FamilyConditions family;
    CenterInfo center;
    std::optional<SatCount> N_at_D;  // bicentric with isomorphic halves only
    VertexLabeling witness_vertex;   // distinguishing, k = D
    EdgeLabeling witness_edge;       // distinguishing, k = Dprime
};

TreeClassification classify_tree(const Graph& t, bool want_witnesses = true);

// Constructive witnesses alone: a distinguishing vertex labeling with D
// labels and a distinguishing edge labeling with D' labels.
std::pair<VertexLabeling, EdgeLabeling> witness_labelings(const Graph& t);

// Constructive side of the counting recursion: up to `want` pairwise
// non-isomorphic distinguishing edge k-labelings of r, in a fixed structural
// order (equal prefixes for isomorphic trees). Host-indexed labelings.
std::vector<EdgeLabeling> distinct_edge_labelings(const RootedTree& r, int k, int want);

}  // namespace dst
