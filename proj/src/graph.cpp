#include "dst/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dst {

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image[v] != v) return false;
    return true;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

namespace {

bool blank_or_comment(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool parse_two_ints(const std::string& line, long long& a, long long& b) {
    std::istringstream in(line);
    std::string trailing;
    if (!(in >> a >> b)) return false;
    if (in >> trailing) return false;
    return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;

    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        if (!parse_two_ints(line, n, m)) throw ParseError(lineno, "expected header \"n m\"");
        break;
    }
    if (n < 0) throw ParseError(lineno, "missing header \"n m\"");
    if (n < 1) throw ParseError(lineno, "vertex count must be >= 1");
    if (m < 0 || m > n * (n - 1) / 2) throw ParseError(lineno, "edge count out of range");

    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line)) continue;
        long long u, v;
        if (static_cast<long long>(edges.size()) == m) throw ParseError(lineno, "edge count mismatch");
        if (!parse_two_ints(line, u, v)) throw ParseError(lineno, "expected edge \"u v\"");
        if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(lineno, "expected u < v");
        if (u < 0 || v >= n) throw ParseError(lineno, "vertex index out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch");

    auto sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(lineno, "duplicate edge");

    return make_graph(static_cast<int>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n;
}

bool is_tree(const Graph& g) { return g.m() == g.n - 1 && is_connected(g); }

std::optional<std::vector<int>> unicyclic_cycle(const Graph& g) {
    if (g.m() != g.n || !is_connected(g)) return std::nullopt;

    // Strip degree-1 vertices until only the cycle remains.
    std::vector<int> deg(g.n);
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] == 1) queue.push_back(v);
    }
    std::vector<char> removed(g.n, 0);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        removed[v] = 1;
        for (int w : g.adj[v]) {
            if (!removed[w] && --deg[w] == 1) queue.push_back(w);
        }
    }

    int start = -1;
    for (int v = 0; v < g.n && start < 0; ++v)
        if (!removed[v]) start = v;

    // Walk the cycle, picking the smaller neighbor first for the
    // lexicographically smallest sequence (start is the global minimum).
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int w : g.adj[cur]) {
            if (removed[w] || w == prev) continue;
            if (next < 0 || w < next) next = w;
        }
        prev = cur;
        cur = next;
        if (cur != start) cycle.push_back(cur);
    } while (cur != start);
    return cycle;
}

}  // namespace dst
