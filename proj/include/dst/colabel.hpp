#pragma once

#include "dst/graph.hpp"
#include "dst/rooted_tree.hpp"

namespace dst {

// Push each non-root vertex label onto the edge to its parent. f must label
// every member of r; entries outside r are ignored.
EdgeLabeling to_colabel(const RootedTree& r, const VertexLabeling& f);

// Inverse, up to the root label which must be supplied (1..g.k).
VertexLabeling from_colabel(const RootedTree& r, const EdgeLabeling& g, int root_label);

// True iff no non-identity root-fixing automorphism preserves the labeling.
// Decided structurally: at every vertex the labeled codes of the children
// must be pairwise distinct.
bool is_rooted_distinguishing(const RootedTree& r, const VertexLabeling& f);
bool is_rooted_distinguishing(const RootedTree& r, const EdgeLabeling& g);

}  // namespace dst
