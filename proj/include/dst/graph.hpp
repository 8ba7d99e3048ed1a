#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dst {

// Undirected simple graph on vertices 0..n-1. Immutable after construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // lexicographically sorted, u < v
    std::vector<std::vector<int>> adj;       // sorted neighbor lists

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Index into `edges` for {u,v} in either order; -1 if absent.
    int edge_index(int u, int v) const;
};

// Total vertex labeling with values in 1..k (0 marks "outside the domain"
// when the labeling covers only a subgraph, e.g. one half of a tree).
struct VertexLabeling {
    std::vector<int> labels;  // by vertex id
    int k = 0;
};

// Edge labeling addressed by Graph::edges index, same conventions.
struct EdgeLabeling {
    std::vector<int> labels;  // by edge index
    int k = 0;
};

struct Permutation {
    std::vector<int> image;  // bijection on 0..n-1

    int size() const { return static_cast<int>(image.size()); }
    int operator()(int v) const { return image[v]; }
    bool is_identity() const;
    bool operator==(const Permutation& o) const { return image == o.image; }
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Validates and normalizes: sorts edge list, builds adjacency.
// Throws std::invalid_argument on self-loops, duplicates or bad indices.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Edge-list format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. '#' starts a comment line. Throws ParseError.
Graph parse_graph(std::string_view text);

// Canonical serialization; parse_graph(to_edge_list(g)) reproduces g exactly.
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// The unique cycle of a connected unicyclic graph (m == n), as the
// lexicographically smallest rotation/direction of the vertex sequence.
// nullopt if g is not connected with m == n.
std::optional<std::vector<int>> unicyclic_cycle(const Graph& g);

}  // namespace dst
