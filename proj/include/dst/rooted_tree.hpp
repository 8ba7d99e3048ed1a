#pragma once

#include <string>
#include <vector>

#include "dst/graph.hpp"

namespace dst {

// Canonical byte code of a (possibly labeled) rooted tree. Two rooted trees
// have equal codes exactly when they are isomorphic as (labeled) rooted
// trees. Format: each node is BE32(len(body)) ++ body, where body is an
// optional BE32 payload followed by the children codes sorted
// lexicographically. Opaque outside this module; compare for equality only.
using Code = std::string;

struct CenterInfo {
    bool bicentric = false;
    int c1 = -1;  // the center vertex, or the smaller endpoint of the central edge
    int c2 = -1;  // -1, or the larger endpoint of the central edge
};

// A tree (or a subtree of a host graph) rooted at `root`. Vertex ids refer to
// the host graph; `member` marks which ids belong to this tree. Children
// lists are sorted by (subtree code, vertex id).
struct RootedTree {
    const Graph* host = nullptr;
    int root = -1;
    std::vector<int> order;    // top-down: every parent precedes its children
    std::vector<int> parent;   // by vertex id; -1 for the root and non-members
    std::vector<std::vector<int>> children;  // by vertex id
    std::vector<char> member;  // by vertex id
    std::vector<Code> code;    // unlabeled subtree code, by vertex id

    int size() const { return static_cast<int>(order.size()); }
    bool contains(int v) const { return member[v] != 0; }
};

// Center by iterated leaf removal. Requires is_tree(t).
CenterInfo center(const Graph& t);

// Root the component of g - blocked that contains `root`. With an empty
// blocked list on a tree this roots the whole tree. Vertices listed in
// `blocked` are never entered.
RootedTree root_at(const Graph& g, int root, const std::vector<int>& blocked = {});

inline const Code& ahu_code(const RootedTree& r) { return r.code[r.root]; }

// Code of the vertex-labeled rooted tree; the root label is part of the code.
// f must assign a label in 1..k to every member vertex.
Code labeled_code(const RootedTree& r, const VertexLabeling& f);

// Code of the edge-labeled rooted tree; each child folds the label of the
// edge to its parent into its own code, the root carries none. g must label
// every edge of r (entries for other host edges are ignored).
Code labeled_code(const RootedTree& r, const EdgeLabeling& g);

inline bool rooted_isomorphic(const RootedTree& a, const RootedTree& b) {
    return ahu_code(a) == ahu_code(b);
}

// Order of the automorphism group of the rooted tree: the product, over all
// vertices, of the factorials of multiplicities of equal child codes.
unsigned long long rooted_aut_order(const RootedTree& r);

// Exact |Aut(t)| for a free tree, via the center decomposition.
unsigned long long tree_aut_order(const Graph& t);

// Edge labels of a rooted tree stored at the child endpoint: by_child[v] is
// the label of the edge from v to its parent. The natural currency for
// co-labelings; conversions to/from host-indexed EdgeLabeling below.
std::vector<int> edge_labels_by_child(const RootedTree& r, const EdgeLabeling& g);
EdgeLabeling edge_labels_to_host(const RootedTree& r, const std::vector<int>& by_child, int k);

}  // namespace dst
