#include "dst/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <cmath>
#include <numeric>

namespace dst {
namespace oracle {

namespace {

void check_size(int n, const Options& opt) {
    if (n > opt.max_n)
        throw LimitError("graph order " + std::to_string(n) + " exceeds oracle bound " +
                         std::to_string(opt.max_n));
    if (n > 64) throw LimitError("oracle supports at most 64 vertices");
}

// Iterated refinement: color by (old color, sorted neighbor colors) until the
// number of classes stops growing. Any labeling-derived initial coloring
// stays invariant under every automorphism that preserves the labeling.
std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    int classes = 0;
    {
        auto sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        classes = static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(colors[v]);
            for (int w : g.adj[v]) s.push_back(colors[w]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        auto bykey = sig;
        std::sort(bykey.begin(), bykey.end());
        std::vector<int> next(g.n);
        int c = 0;
        for (int i = 0; i < g.n; ++i) {
            if (i > 0 && bykey[i].first != bykey[i - 1].first) ++c;
            next[bykey[i].second] = c;
        }
        if (c + 1 == classes) return next;
        classes = c + 1;
        colors = std::move(next);
    }
}

struct Searcher {
    const Graph& g;
    std::vector<int> colors;
    const std::vector<int>* edge_keys;  // by edge index; preserved when non-null
    const std::function<bool(const Permutation&)>& cb;

    std::vector<uint64_t> amask;
    std::vector<int> ord, img;
    std::vector<char> used;
    bool stopped = false;

    Searcher(const Graph& g_, std::vector<int> colors_, const std::vector<int>* ek,
             const std::function<bool(const Permutation&)>& cb_)
        : g(g_), colors(std::move(colors_)), edge_keys(ek), cb(cb_) {
        amask.assign(g.n, 0);
        for (auto [u, v] : g.edges) {
            amask[u] |= uint64_t{1} << v;
            amask[v] |= uint64_t{1} << u;
        }
        std::vector<int> class_size(g.n, 0);
        for (int v = 0; v < g.n; ++v) ++class_size[colors[v]];
        ord.resize(g.n);
        std::iota(ord.begin(), ord.end(), 0);
        std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
            if (class_size[colors[a]] != class_size[colors[b]])
                return class_size[colors[a]] < class_size[colors[b]];
            return colors[a] < colors[b];
        });
        img.assign(g.n, -1);
        used.assign(g.n, 0);
    }

    bool consistent(int v, int u, int depth) const {
        for (int j = 0; j < depth; ++j) {
            int w = ord[j];
            bool a1 = (amask[v] >> w) & 1;
            bool a2 = (amask[u] >> img[w]) & 1;
            if (a1 != a2) return false;
            if (a1 && edge_keys &&
                (*edge_keys)[g.edge_index(v, w)] != (*edge_keys)[g.edge_index(u, img[w])])
                return false;
        }
        return true;
    }

    void dfs(int depth) {
        if (depth == g.n) {
            if (!cb(Permutation{img})) stopped = true;
            return;
        }
        int v = ord[depth];
        for (int u = 0; u < g.n; ++u) {
            if (used[u] || colors[u] != colors[v]) continue;
            if (!consistent(v, u, depth)) continue;
            img[v] = u;
            used[u] = 1;
            dfs(depth + 1);
            used[u] = 0;
            img[v] = -1;
            if (stopped) return;
        }
    }
};

void search(const Graph& g, std::vector<int> init_colors, const std::vector<int>* edge_keys,
            const std::function<bool(const Permutation&)>& cb) {
    Searcher s(g, refine_colors(g, std::move(init_colors)), edge_keys, cb);
    s.dfs(0);
}

void check_vertex_labeling(const Graph& g, const VertexLabeling& f) {
    if (static_cast<int>(f.labels.size()) < g.n)
        throw std::invalid_argument("vertex labeling does not cover the graph");
    for (int v = 0; v < g.n; ++v)
        if (f.labels[v] < 1 || f.labels[v] > f.k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has no valid label");
}

void check_edge_labeling(const Graph& g, const EdgeLabeling& f) {
    if (static_cast<int>(f.labels.size()) < g.m())
        throw std::invalid_argument("edge labeling does not cover the graph");
    for (int e = 0; e < g.m(); ++e)
        if (f.labels[e] < 1 || f.labels[e] > f.k)
            throw std::invalid_argument("edge " + std::to_string(e) + " has no valid label");
}

}  // namespace

std::vector<Permutation> automorphisms(const Graph& g, const Options& opt) {
    check_size(g.n, opt);
    std::vector<Permutation> out;
    bool over_budget = false;
    search(g, std::vector<int>(g.n, 0), nullptr, [&](const Permutation& p) {
        if (static_cast<long long>(out.size()) >= opt.budget) {
            over_budget = true;
            return false;
        }
        out.push_back(p);
        return true;
    });
    if (over_budget) throw LimitError("automorphism count exceeds oracle budget");
    return out;
}

std::vector<Permutation> rooted_automorphisms(const RootedTree& r, const Options& opt) {
    const Graph& host = *r.host;
    check_size(r.size(), opt);

    std::vector<int> members = r.order;
    std::sort(members.begin(), members.end());
    std::vector<int> local(host.n, -1);
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> edges;
    for (int v : r.order)
        if (v != r.root) edges.emplace_back(local[v], local[r.parent[v]]);
    Graph sub = make_graph(static_cast<int>(members.size()), std::move(edges));

    std::vector<int> init(sub.n, 0);
    init[local[r.root]] = 1;  // pin the root

    std::vector<Permutation> out;
    search(sub, std::move(init), nullptr, [&](const Permutation& p) {
        Permutation h;
        h.image.resize(host.n);
        std::iota(h.image.begin(), h.image.end(), 0);
        for (size_t i = 0; i < members.size(); ++i) h.image[members[i]] = members[p.image[i]];
        out.push_back(std::move(h));
        return static_cast<long long>(out.size()) < opt.budget;
    });
    if (static_cast<long long>(out.size()) >= opt.budget)
        throw LimitError("rooted automorphism count exceeds oracle budget");
    return out;
}

bool is_distinguishing(const Graph& g, const VertexLabeling& f, const Options& opt) {
    check_size(g.n, opt);
    check_vertex_labeling(g, f);
    std::vector<int> init(f.labels.begin(), f.labels.begin() + g.n);
    bool found = false;
    search(g, std::move(init), nullptr, [&](const Permutation& p) {
        if (p.is_identity()) return true;
        found = true;
        return false;
    });
    return !found;
}

bool is_distinguishing(const Graph& g, const EdgeLabeling& f, const Options& opt) {
    check_size(g.n, opt);
    check_edge_labeling(g, f);
    // Initial colors: sorted multiset of incident edge labels.
    std::vector<std::vector<int>> prof(g.n);
    for (int e = 0; e < g.m(); ++e) {
        prof[g.edges[e].first].push_back(f.labels[e]);
        prof[g.edges[e].second].push_back(f.labels[e]);
    }
    for (auto& p : prof) std::sort(p.begin(), p.end());
    std::map<std::vector<int>, int> rank;
    std::vector<int> init(g.n);
    for (int v = 0; v < g.n; ++v) init[v] = rank.emplace(prof[v], (int)rank.size()).first->second;

    bool found = false;
    search(g, std::move(init), &f.labels, [&](const Permutation& p) {
        if (p.is_identity()) return true;
        found = true;
        return false;
    });
    return !found;
}

namespace {

// Enumerate labelings of `positions` slots in label-renaming canonical form
// (labels appear in first-occurrence order 1,2,3,... and exactly k distinct
// values are used); calls fn on each complete labeling, stops when fn returns
// false. Returns false when the budget ran out.
bool enumerate_canonical(int positions, int k, long long& budget,
                         const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> lab(positions, 0);
    bool keep_going = true;
    std::function<void(int, int)> rec = [&](int p, int max_used) {
        if (!keep_going) return;
        if (k - max_used > positions - p) return;  // cannot reach k labels
        if (p == positions) {
            if (--budget < 0) {
                keep_going = false;
                return;
            }
            if (!fn(lab)) keep_going = false;
            return;
        }
        int top = std::min(max_used + 1, k);
        for (int c = 1; c <= top && keep_going; ++c) {
            lab[p] = c;
            rec(p + 1, std::max(max_used, c));
        }
    };
    rec(0, 0);
    return budget >= 0;
}

}  // namespace

int brute_D(const Graph& g, const Options& opt) {
    check_size(g.n, opt);
    long long budget = opt.budget;
    for (int k = 1; k <= g.n; ++k) {
        bool found = false;
        VertexLabeling f;
        f.k = k;
        bool in_budget = enumerate_canonical(g.n, k, budget, [&](const std::vector<int>& lab) {
            f.labels = lab;
            if (is_distinguishing(g, f, opt)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return k;
        if (!in_budget) throw LimitError("brute_D: enumeration budget exceeded");
    }
    throw std::logic_error("brute_D: no distinguishing labeling with n labels");
}

int brute_Dprime(const Graph& g, const Options& opt) {
    check_size(g.n, opt);
    if (g.n < 3)
        throw std::invalid_argument("brute_Dprime: order must be >= 3");
    long long budget = opt.budget;
    for (int k = 1; k <= g.m(); ++k) {
        bool found = false;
        EdgeLabeling f;
        f.k = k;
        bool in_budget = enumerate_canonical(g.m(), k, budget, [&](const std::vector<int>& lab) {
            f.labels = lab;
            if (is_distinguishing(g, f, opt)) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return k;
        if (!in_budget) throw LimitError("brute_Dprime: enumeration budget exceeded");
    }
    throw std::logic_error("brute_Dprime: no distinguishing labeling with m labels");
}

namespace {

// Compact member numbering for rooted labelings: non-root members in r.order.
std::vector<int> edge_positions(const RootedTree& r) {
    std::vector<int> pos;
    pos.reserve(r.size() - 1);
    for (int v : r.order)
        if (v != r.root) pos.push_back(v);
    return pos;
}

bool preserved_by(const std::vector<int>& lab_by_child, const Permutation& a,
                  const std::vector<int>& positions) {
    for (int x : positions)
        if (lab_by_child[x] != lab_by_child[a(x)]) return false;
    return true;
}

}  // namespace

long long brute_class_count(const RootedTree& r, int k, const Options& opt) {
    check_size(r.size(), opt);
    int E = r.size() - 1;
    double total = std::pow(static_cast<double>(k), E);
    if (total > static_cast<double>(opt.budget))
        throw LimitError("brute_class_count: k^edges exceeds oracle budget");

    std::vector<Permutation> auts = rooted_automorphisms(r, opt);
    std::vector<int> positions = edge_positions(r);

    std::vector<int> lab_by_child(r.parent.size(), 0);
    std::vector<int> digits(E, 1);
    long long classes = 0;
    for (;;) {
        for (int i = 0; i < E; ++i) lab_by_child[positions[i]] = digits[i];

        bool distinguishing = true;
        for (const auto& a : auts) {
            if (a.is_identity()) continue;
            if (preserved_by(lab_by_child, a, positions)) {
                distinguishing = false;
                break;
            }
        }
        if (distinguishing) {
            // Orbit-canonical: count only labelings minimal under the group.
            bool minimal = true;
            std::vector<int> moved(E);
            for (const auto& a : auts) {
                if (a.is_identity()) continue;
                for (int i = 0; i < E; ++i) moved[i] = lab_by_child[a(positions[i])];
                bool smaller = false;
                for (int i = 0; i < E; ++i) {
                    if (moved[i] != digits[i]) {
                        smaller = moved[i] < digits[i];
                        break;
                    }
                }
                if (smaller) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) ++classes;
        }

        int i = E - 1;
        while (i >= 0 && digits[i] == k) {
            digits[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++digits[i];
    }
    return classes;
}

bool is_rooted_distinguishing_brute(const RootedTree& r, const VertexLabeling& f,
                                    const std::vector<Permutation>& rooted_auts) {
    for (const auto& a : rooted_auts) {
        if (a.is_identity()) continue;
        bool preserved = true;
        for (int v : r.order) {
            if (f.labels[v] != f.labels[a(v)]) {
                preserved = false;
                break;
            }
        }
        if (preserved) return false;
    }
    return true;
}

bool is_rooted_distinguishing_brute(const RootedTree& r, const EdgeLabeling& g,
                                    const std::vector<Permutation>& rooted_auts) {
    std::vector<int> by_child = edge_labels_by_child(r, g);
    std::vector<int> positions = edge_positions(r);
    for (const auto& a : rooted_auts) {
        if (a.is_identity()) continue;
        if (preserved_by(by_child, a, positions)) return false;
    }
    return true;
}

int brute_rooted_D(const RootedTree& r, const Options& opt) {
    check_size(r.size(), opt);
    std::vector<Permutation> auts = rooted_automorphisms(r, opt);
    long long budget = opt.budget;
    VertexLabeling f;
    f.labels.assign(r.parent.size(), 0);
    for (int k = 1; k <= r.size(); ++k) {
        f.k = k;
        bool found = false;
        bool in_budget =
            enumerate_canonical(r.size(), k, budget, [&](const std::vector<int>& lab) {
                for (int i = 0; i < r.size(); ++i) f.labels[r.order[i]] = lab[i];
                if (is_rooted_distinguishing_brute(r, f, auts)) {
                    found = true;
                    return false;
                }
                return true;
            });
        if (found) return k;
        if (!in_budget) throw LimitError("brute_rooted_D: enumeration budget exceeded");
    }
    throw std::logic_error("brute_rooted_D: unreachable");
}

int brute_rooted_Dprime(const RootedTree& r, const Options& opt) {
    check_size(r.size(), opt);
    if (r.size() == 1) return 1;
    std::vector<Permutation> auts = rooted_automorphisms(r, opt);
    std::vector<int> positions = edge_positions(r);
    int E = static_cast<int>(positions.size());
    long long budget = opt.budget;
    std::vector<int> by_child(r.parent.size(), 0);
    for (int k = 1; k <= E; ++k) {
        bool found = false;
        bool in_budget = enumerate_canonical(E, k, budget, [&](const std::vector<int>& lab) {
            for (int i = 0; i < E; ++i) by_child[positions[i]] = lab[i];
            for (const auto& a : auts) {
                if (a.is_identity()) continue;
                if (preserved_by(by_child, a, positions)) return true;  // keep looking
            }
            found = true;
            return false;
        });
        if (found) return k;
        if (!in_budget) throw LimitError("brute_rooted_Dprime: enumeration budget exceeded");
    }
    throw std::logic_error("brute_rooted_Dprime: unreachable");
}

}  // namespace oracle
}  // namespace dst
