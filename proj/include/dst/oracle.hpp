#pragma once

#include <functional>
#include <vector>

#include "dst/graph.hpp"
#include "dst/rooted_tree.hpp"

namespace dst {
namespace oracle {

struct Options {
    int max_n = 16;                    // hard vertex-count gate
    long long budget = 100'000'000;    // enumeration cap (labelings / permutations)
};

// Size bound or budget exceeded; never an approximation.
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The complete automorphism group as explicit permutations, identity
// included, found by backtracking over an iteratively refined partition.
std::vector<Permutation> automorphisms(const Graph& g, const Options& opt = {});

// Root-fixing automorphisms of a rooted tree (as permutations of host ids;
// non-member ids map to themselves).
std::vector<Permutation> rooted_automorphisms(const RootedTree& r, const Options& opt = {});

// True iff no non-identity automorphism preserves the labeling.
bool is_distinguishing(const Graph& g, const VertexLabeling& f, const Options& opt = {});
bool is_distinguishing(const Graph& g, const EdgeLabeling& f, const Options& opt = {});

// Exact minima by exhaustive labeling search with label-renaming pruning.
// brute_Dprime requires n >= 3 (K2 admits no distinguishing edge labeling).
int brute_D(const Graph& g, const Options& opt = {});
int brute_Dprime(const Graph& g, const Options& opt = {});

// Exact number of rooted-isomorphism classes of distinguishing edge
// k-labelings: enumerate all k^(n-1) labelings, filter by explicit
// root-fixing automorphism checks, deduplicate by group orbit.
long long brute_class_count(const RootedTree& r, int k, const Options& opt = {});

// Rooted ground truth used by the co-labeling equivalence suites.
bool is_rooted_distinguishing_brute(const RootedTree& r, const VertexLabeling& f,
                                    const std::vector<Permutation>& rooted_auts);
bool is_rooted_distinguishing_brute(const RootedTree& r, const EdgeLabeling& g,
                                    const std::vector<Permutation>& rooted_auts);
int brute_rooted_D(const RootedTree& r, const Options& opt = {});
int brute_rooted_Dprime(const RootedTree& r, const Options& opt = {});

}  // namespace oracle
}  // namespace dst
