#include "dst/rooted_tree.hpp"

#include <algorithm>
#include <cstdint>

namespace dst {

namespace {

void put_u32(Code& out, uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

Code wrap_node(const Code& body) {
    Code out;
    out.reserve(body.size() + 4);
    put_u32(out, static_cast<uint32_t>(body.size()));
    out += body;
    return out;
}

// Bottom-up code computation. payload (if non-null) contributes a BE32 per
// vertex at the front of its body; with_root_payload controls the root slot.
std::vector<Code> node_codes(const RootedTree& r, const std::vector<int>* payload) {
    std::vector<Code> codes(r.parent.size());
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int v = *it;
        Code body;
        if (payload) put_u32(body, static_cast<uint32_t>((*payload)[v]));
        std::vector<const Code*> kids;
        kids.reserve(r.children[v].size());
        for (int c : r.children[v]) kids.push_back(&codes[c]);
        std::sort(kids.begin(), kids.end(),
                  [](const Code* a, const Code* b) { return *a < *b; });
        for (const Code* k : kids) body += *k;
        codes[v] = wrap_node(body);
    }
    return codes;
}

}  // namespace

CenterInfo center(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("center: not a tree");
    std::vector<int> deg(t.n);
    std::vector<int> frontier;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] <= 1) frontier.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            --remaining;
            deg[v] = 0;
            for (int w : t.adj[v])
                if (deg[w] > 1 && --deg[w] == 1) next.push_back(w);
        }
        frontier = std::move(next);
    }
    std::vector<int> rest;
    for (int v = 0; v < t.n; ++v)
        if (deg[v] > 0 || t.n == 1) rest.push_back(v);
    CenterInfo c;
    if (rest.size() == 1) {
        c.bicentric = false;
        c.c1 = rest[0];
    } else {
        c.bicentric = true;
        c.c1 = std::min(rest[0], rest[1]);
        c.c2 = std::max(rest[0], rest[1]);
    }
    return c;
}

RootedTree root_at(const Graph& g, int root, const std::vector<int>& blocked) {
    RootedTree r;
    r.host = &g;
    r.root = root;
    r.parent.assign(g.n, -1);
    r.children.assign(g.n, {});
    r.member.assign(g.n, 0);

    std::vector<char> blockedmask(g.n, 0);
    for (int b : blocked) blockedmask[b] = 1;
    if (blockedmask[root]) throw std::invalid_argument("root_at: root is blocked");

    r.member[root] = 1;
    r.order.push_back(root);
    for (size_t i = 0; i < r.order.size(); ++i) {
        int v = r.order[i];
        for (int w : g.adj[v]) {
            if (blockedmask[w] || r.member[w]) continue;
            r.member[w] = 1;
            r.parent[w] = v;
            r.children[v].push_back(w);
            r.order.push_back(w);
        }
    }
    // A rooted tree must really be a tree: every non-tree edge inside the
    // component would revisit a member.
    int edges_inside = 0;
    for (auto [u, v] : g.edges)
        if (r.member[u] && r.member[v]) ++edges_inside;
    if (edges_inside != r.size() - 1)
        throw std::invalid_argument("root_at: component is not a tree");

    r.code = node_codes(r, nullptr);
    for (int v : r.order) {
        auto& ch = r.children[v];
        std::sort(ch.begin(), ch.end(), [&](int a, int b) {
            if (r.code[a] != r.code[b]) return r.code[a] < r.code[b];
            return a < b;
        });
    }
    return r;
}

Code labeled_code(const RootedTree& r, const VertexLabeling& f) {
    std::vector<int> payload(r.parent.size(), 0);
    for (int v : r.order) {
        int lab = v < static_cast<int>(f.labels.size()) ? f.labels[v] : 0;
        if (lab < 1 || lab > f.k)
            throw std::invalid_argument("labeled_code: vertex " + std::to_string(v) +
                                        " has no valid label");
        payload[v] = lab;
    }
    return node_codes(r, &payload)[r.root];
}

Code labeled_code(const RootedTree& r, const EdgeLabeling& g) {
    std::vector<int> payload = edge_labels_by_child(r, g);
    return node_codes(r, &payload)[r.root];
}

std::vector<int> edge_labels_by_child(const RootedTree& r, const EdgeLabeling& g) {
    std::vector<int> by_child(r.parent.size(), 0);
    for (int v : r.order) {
        if (v == r.root) continue;
        int ei = r.host->edge_index(v, r.parent[v]);
        int lab = (ei >= 0 && ei < static_cast<int>(g.labels.size())) ? g.labels[ei] : 0;
        if (lab < 1 || lab > g.k)
            throw std::invalid_argument("edge label missing on edge to vertex " +
                                        std::to_string(v));
        by_child[v] = lab;
    }
    return by_child;
}

EdgeLabeling edge_labels_to_host(const RootedTree& r, const std::vector<int>& by_child, int k) {
    EdgeLabeling out;
    out.k = k;
    out.labels.assign(r.host->m(), 0);
    for (int v : r.order) {
        if (v == r.root) continue;
        out.labels[r.host->edge_index(v, r.parent[v])] = by_child[v];
    }
    return out;
}

unsigned long long rooted_aut_order(const RootedTree& r) {
    unsigned long long total = 1;
    for (int v : r.order) {
        const auto& ch = r.children[v];
        size_t i = 0;
        while (i < ch.size()) {
            size_t j = i;
            while (j < ch.size() && r.code[ch[j]] == r.code[ch[i]]) ++j;
            for (size_t mult = 2; mult <= j - i; ++mult) total *= mult;
            i = j;
        }
    }
    return total;
}

unsigned long long tree_aut_order(const Graph& t) {
    CenterInfo c = center(t);
    if (!c.bicentric) return rooted_aut_order(root_at(t, c.c1));
    RootedTree tv = root_at(t, c.c1, {c.c2});
    RootedTree tw = root_at(t, c.c2, {c.c1});
    unsigned long long total = rooted_aut_order(tv) * rooted_aut_order(tw);
    if (ahu_code(tv) == ahu_code(tw)) total *= 2;
    return total;
}

}  // namespace dst
