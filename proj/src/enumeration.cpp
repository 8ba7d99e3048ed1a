#include "dst/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dst/oracle.hpp"

namespace dst {

Code free_tree_code(const Graph& t) {
    CenterInfo c = center(t);
    if (!c.bicentric) return "U" + ahu_code(root_at(t, c.c1));
    Code a = ahu_code(root_at(t, c.c1, {c.c2}));
    Code b = ahu_code(root_at(t, c.c2, {c.c1}));
    if (b < a) std::swap(a, b);
    return "B" + a + b;
}

namespace {

std::mutex g_tree_mutex;
std::map<int, std::vector<Graph>> g_tree_levels;

// Trees on n vertices grow from trees on n-1 by attaching one leaf;
// center-anchored codes deduplicate isomorphs.
const std::vector<Graph>& tree_level(int n) {
    auto it = g_tree_levels.find(n);
    if (it != g_tree_levels.end()) return it->second;
    std::vector<Graph> out;
    if (n == 1) {
        out.push_back(make_graph(1, {}));
    } else {
        const std::vector<Graph>& prev = tree_level(n - 1);
        std::set<Code> seen;
        for (const Graph& p : prev) {
            for (int v = 0; v < p.n; ++v) {
                auto edges = p.edges;
                edges.emplace_back(v, n - 1);
                Graph cand = make_graph(n, std::move(edges));
                if (seen.insert(free_tree_code(cand)).second) out.push_back(std::move(cand));
            }
        }
    }
    return g_tree_levels.emplace(n, std::move(out)).first->second;
}

struct RootedShape {
    Graph g;       // root is vertex 0
    Code code;
};

std::map<int, std::vector<RootedShape>> g_rooted_levels;

const std::vector<RootedShape>& rooted_level(int n) {
    auto it = g_rooted_levels.find(n);
    if (it != g_rooted_levels.end()) return it->second;
    std::vector<RootedShape> out;
    if (n == 1) {
        Graph g1 = make_graph(1, {});
        Code c = ahu_code(root_at(g1, 0));
        out.push_back(RootedShape{std::move(g1), std::move(c)});
    } else {
        const std::vector<RootedShape>& prev = rooted_level(n - 1);
        std::set<Code> seen;
        for (const RootedShape& p : prev) {
            for (int v = 0; v < p.g.n; ++v) {
                auto edges = p.g.edges;
                edges.emplace_back(v, n - 1);
                Graph cand = make_graph(n, std::move(edges));
                Code c = ahu_code(root_at(cand, 0));
                if (seen.insert(c).second)
                    out.push_back(RootedShape{std::move(cand), std::move(c)});
            }
        }
    }
    return g_rooted_levels.emplace(n, std::move(out)).first->second;
}

std::map<int, std::vector<Graph>> g_unicyclic_levels;

// Global handles for rooted shapes up to a size, in (size, index) order.
struct ShapeHandle {
    int size;
    int index;
    bool operator<(const ShapeHandle& o) const {
        return std::tie(size, index) < std::tie(o.size, o.index);
    }
    bool operator==(const ShapeHandle& o) const {
        return size == o.size && index == o.index;
    }
};

Graph build_unicyclic(int n, int t, const std::vector<ShapeHandle>& tuple) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) edges.emplace_back(i, (i + 1) % t);
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    int fresh = t;
    for (int i = 0; i < t; ++i) {
        const RootedShape& shape = rooted_level(tuple[i].size)[tuple[i].index];
        if (shape.g.n == 1) continue;
        std::vector<int> map(shape.g.n);
        map[0] = i;
        for (int j = 1; j < shape.g.n; ++j) map[j] = fresh++;
        for (auto [u, v] : shape.g.edges) edges.emplace_back(map[u], map[v]);
    }
    return make_graph(n, std::move(edges));
}

const std::vector<Graph>& unicyclic_level(int n) {
    auto it = g_unicyclic_levels.find(n);
    if (it != g_unicyclic_levels.end()) return it->second;
    std::vector<Graph> out;
    for (int t = 3; t <= n; ++t) {
        std::vector<CycleSym> dihedral;
        for (int r = 0; r < t; ++r) dihedral.push_back(CycleSym{false, r});
        for (int c = 0; c < t; ++c) dihedral.push_back(CycleSym{true, c});

        std::vector<ShapeHandle> tuple(t);
        std::function<void(int, int)> rec = [&](int pos, int budget) {
            if (pos == t) {
                if (budget != 0) return;
                // Keep only the lexicographically smallest dihedral image.
                for (const CycleSym& s : dihedral) {
                    if (s.is_identity()) continue;
                    bool smaller = false, decided = false;
                    for (int i = 0; i < t && !decided; ++i) {
                        ShapeHandle moved = tuple[s.vpos(t, i)];
                        if (moved == tuple[i]) continue;
                        smaller = moved < tuple[i];
                        decided = true;
                    }
                    if (decided && smaller) return;
                }
                out.push_back(build_unicyclic(n, t, tuple));
                return;
            }
            int slack = budget - (t - pos - 1);  // each later position needs >= 1
            for (int size = 1; size <= slack; ++size) {
                const auto& shapes = rooted_level(size);
                for (int idx = 0; idx < static_cast<int>(shapes.size()); ++idx) {
                    tuple[pos] = ShapeHandle{size, idx};
                    rec(pos + 1, budget - size);
                }
            }
        };
        rec(0, n);
    }
    return g_unicyclic_levels.emplace(n, std::move(out)).first->second;
}

}  // namespace

const std::vector<Graph>& all_trees(int n, int bound) {
    if (n < 1 || n > bound)
        throw std::invalid_argument("all_trees: n out of bounds (1.." + std::to_string(bound) + ")");
    std::lock_guard<std::mutex> lock(g_tree_mutex);
    return tree_level(n);
}

const std::vector<Graph>& all_unicyclic(int n, int bound) {
    if (n < 3 || n > bound)
        throw std::invalid_argument("all_unicyclic: n out of bounds (3.." + std::to_string(bound) + ")");
    std::lock_guard<std::mutex> lock(g_tree_mutex);
    return unicyclic_level(n);
}

InstanceStream::InstanceStream(Family family, int from_n, int max_n)
    : cur_{family, from_n, 0}, max_n_(max_n) {}

InstanceStream::InstanceStream(const StreamCursor& cursor, int max_n)
    : cur_(cursor), max_n_(max_n) {}

std::optional<Graph> InstanceStream::next() {
    while (cur_.n <= max_n_) {
        const std::vector<Graph>& level =
            cur_.family == Family::tree ? all_trees(cur_.n) : all_unicyclic(cur_.n, 16);
        if (cur_.index < static_cast<int>(level.size())) return level[cur_.index++];
        ++cur_.n;
        cur_.index = 0;
    }
    return std::nullopt;
}

namespace {

void classify_record(const GeneratorConfig& cfg, CensusRecord& rec) {
    if (cfg.family == Family::tree)
        rec.tree = classify_tree(rec.g);
    else
        rec.unicyclic = classify_unicyclic(rec.g);
    if (rec.g.n <= cfg.oracle_max_n) {
        int bd = oracle::brute_D(rec.g);
        int bdp = oracle::brute_Dprime(rec.g);
        int fd = rec.tree ? rec.tree->D : rec.unicyclic->D;
        int fdp = rec.tree ? rec.tree->Dprime : rec.unicyclic->Dprime;
        if (bd != fd || bdp != fdp)
            throw std::logic_error("census: oracle disagreement (D " + std::to_string(fd) +
                                   " vs " + std::to_string(bd) + ", D' " + std::to_string(fdp) +
                                   " vs " + std::to_string(bdp) + ")");
        rec.oracle_checked = true;
    }
}

}  // namespace

void census(const GeneratorConfig& cfg, const std::function<void(const CensusRecord&)>& sink) {
    for (int n = 3; n <= cfg.max_n; ++n) {
        const std::vector<Graph>& level =
            cfg.family == Family::tree ? all_trees(n) : all_unicyclic(n, 16);
        int count = static_cast<int>(level.size());
        std::vector<CensusRecord> recs(count);
        std::vector<std::string> errors(count);
        for (int i = 0; i < count; ++i) {
            recs[i].g = level[i];
            recs[i].family = cfg.family;
        }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (cfg.jobs != 1) \
    num_threads(cfg.jobs > 0 ? cfg.jobs : omp_get_max_threads())
#endif
        for (int i = 0; i < count; ++i) {
            try {
                classify_record(cfg, recs[i]);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
        for (int i = 0; i < count; ++i)
            if (!errors[i].empty()) throw std::logic_error(errors[i]);

        // Emission stays in generation order regardless of worker count.
        for (int i = 0; i < count; ++i) {
            const CensusRecord& rec = recs[i];
            if (cfg.family == Family::tree) {
                if (cfg.bicentric_only && !rec.tree->center.bicentric) continue;
                if (cfg.in_family_T_only && !rec.tree->family.in_family()) continue;
            } else {
                int t = rec.unicyclic->cycle_length;
                if (cfg.cycle_min > 0 && t < cfg.cycle_min) continue;
                if (cfg.cycle_max > 0 && t > cfg.cycle_max) continue;
            }
            sink(rec);
        }
    }
}

}  // namespace dst
