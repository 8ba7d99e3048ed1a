#include "dst/colabel.hpp"

#include <algorithm>

namespace dst {

EdgeLabeling to_colabel(const RootedTree& r, const VertexLabeling& f) {
    EdgeLabeling out;
    out.k = f.k;
    out.labels.assign(r.host->m(), 0);
    for (int v : r.order) {
        int lab = v < static_cast<int>(f.labels.size()) ? f.labels[v] : 0;
        if (lab < 1 || lab > f.k)
            throw std::invalid_argument("to_colabel: vertex " + std::to_string(v) +
                                        " has no valid label");
        if (v == r.root) continue;
        out.labels[r.host->edge_index(v, r.parent[v])] = lab;
    }
    return out;
}

VertexLabeling from_colabel(const RootedTree& r, const EdgeLabeling& g, int root_label) {
    if (root_label < 1 || root_label > g.k)
        throw std::invalid_argument("from_colabel: root label out of range");
    std::vector<int> by_child = edge_labels_by_child(r, g);
    VertexLabeling out;
    out.k = g.k;
    out.labels.assign(r.parent.size(), 0);
    out.labels[r.root] = root_label;
    for (int v : r.order)
        if (v != r.root) out.labels[v] = by_child[v];
    return out;
}

namespace {

// Shared structural check: compute labeled subtree codes bottom-up and flag
// any vertex owning two children with equal codes.
bool children_codes_distinct(const RootedTree& r, const std::vector<int>& payload,
                             bool with_payload) {
    std::vector<Code> codes(r.parent.size());
    auto encode = [](uint32_t x, Code& body) {
        body.push_back(static_cast<char>((x >> 24) & 0xff));
        body.push_back(static_cast<char>((x >> 16) & 0xff));
        body.push_back(static_cast<char>((x >> 8) & 0xff));
        body.push_back(static_cast<char>(x & 0xff));
    };
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int v = *it;
        std::vector<const Code*> kids;
        kids.reserve(r.children[v].size());
        for (int c : r.children[v]) kids.push_back(&codes[c]);
        std::sort(kids.begin(), kids.end(),
                  [](const Code* a, const Code* b) { return *a < *b; });
        for (size_t i = 1; i < kids.size(); ++i)
            if (*kids[i] == *kids[i - 1]) return false;
        Code body;
        if (with_payload) encode(static_cast<uint32_t>(payload[v]), body);
        for (const Code* k : kids) body += *k;
        Code node;
        encode(static_cast<uint32_t>(body.size()), node);
        node += body;
        codes[v] = std::move(node);
    }
    return true;
}

}  // namespace

bool is_rooted_distinguishing(const RootedTree& r, const VertexLabeling& f) {
    std::vector<int> payload(r.parent.size(), 0);
    for (int v : r.order) {
        int lab = v < static_cast<int>(f.labels.size()) ? f.labels[v] : 0;
        if (lab < 1 || lab > f.k)
            throw std::invalid_argument("is_rooted_distinguishing: unlabeled vertex");
        payload[v] = lab;
    }
    return children_codes_distinct(r, payload, true);
}

bool is_rooted_distinguishing(const RootedTree& r, const EdgeLabeling& g) {
    std::vector<int> payload = edge_labels_by_child(r, g);
    return children_codes_distinct(r, payload, true);
}

}  // namespace dst
