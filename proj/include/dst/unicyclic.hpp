#pragma once

#include <map>
#include <optional>

#include "dst/graph.hpp"
#include "dst/rooted_tree.hpp"

namespace dst {

// Cycle positions 0..t-1 carry the canonical cycle vertices; hanging[i] is
// the maximal subtree at cycle vertex i containing no other cycle vertex.
struct UnicyclicDecomposition {
    const Graph* host = nullptr;
    std::vector<int> cycle;
    std::vector<RootedTree> hanging;

    int t() const { return static_cast<int>(cycle.size()); }
};

// One dihedral symmetry of the t-cycle. Vertex position i maps to i+shift
// (rotation) or shift-i (reflection); edge i = {v_i, v_{i+1}} maps to i+shift
// resp. shift-1-i, all mod t.
struct CycleSym {
    bool reflection = false;
    int shift = 0;

    int vpos(int t, int i) const {
        int j = reflection ? shift - i : i + shift;
        return ((j % t) + t) % t;
    }
    int epos(int t, int i) const {
        int j = reflection ? shift - 1 - i : i + shift;
        return ((j % t) + t) % t;
    }
    bool is_identity() const { return !reflection && shift == 0; }
};

// The dihedral elements compatible with the multiset of hanging-tree codes:
// exactly the actions on the cycle induced by automorphisms of the graph.
struct CycleSymmetryGroup {
    int t = 0;
    std::vector<CycleSym> elems;                // identity first
    std::vector<std::vector<int>> vertex_perm;  // position permutation per element
};

UnicyclicDecomposition decompose(const Graph& g);
CycleSymmetryGroup cycle_symmetries(const UnicyclicDecomposition& d);

// Fast distinguishing checks against the decomposition (used to validate
// transformation inputs and as the classifier's own criterion).
bool is_unicyclic_distinguishing(const Graph& g, const VertexLabeling& f);
bool is_unicyclic_distinguishing(const Graph& g, const EdgeLabeling& f);

int unicyclic_D(const Graph& g);
int unicyclic_Dprime(const Graph& g);

struct UnicyclicClassification {
    int D = 0;
    int Dprime = 0;
    int cycle_length = 0;
    VertexLabeling witness_vertex;  // k = D
    EdgeLabeling witness_edge;      // k = Dprime
};
UnicyclicClassification classify_unicyclic(const Graph& g, bool want_witnesses = true);

// For t in {3,4,5}: every dihedral class of 2-labelings of C_t mapped to a
// 2-labeling of the other kind whose dihedral stabilizer is contained in the
// stabilizer of the input class. Keys are canonical class representatives.
struct CycleTransformTable {
    std::map<std::vector<int>, std::vector<int>> edge_to_vertex[3];  // index t-3
    std::map<std::vector<int>, std::vector<int>> vertex_to_edge[3];
};
const CycleTransformTable& cycle_transform_tables();

// The constructive directions of the unicyclic equality: transform a
// distinguishing labeling of one kind into one of the other kind using the
// same number of labels.
VertexLabeling edge_to_vertex(const Graph& g, const EdgeLabeling& fprime);
EdgeLabeling vertex_to_edge(const Graph& g, const VertexLabeling& f);

}  // namespace dst
