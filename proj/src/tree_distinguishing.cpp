#include "dst/tree_distinguishing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace dst {

namespace {

SatCount mul_sat(SatCount a, SatCount b) {
    long long cap = a.cap;
    if (a.is_zero() || b.is_zero()) return SatCount::exact(0, cap);
    if (a.saturated || b.saturated) return SatCount::at_least_cap(cap);
    return SatCount::exact(a.value * b.value, cap);
}

// Number of ways to give m same-shaped children pairwise distinct
// (edge label, class) pairs: C(k * sub, m), saturating at cap. Sound because
// m < cap always (m is a child count inside a tree of order >= cap... of
// order at most cap), so a saturated argument forces a saturated result.
SatCount binom_options(SatCount sub, int k, int m, long long cap) {
    if (m == 0) return SatCount::exact(1, cap);
    if (sub.is_zero()) return SatCount::exact(0, cap);
    if (sub.saturated || static_cast<long long>(k) * sub.value >= cap)
        return SatCount::at_least_cap(cap);
    long long x = static_cast<long long>(k) * sub.value;
    if (x < m) return SatCount::exact(0, cap);
    long long upper = std::min<long long>(m, x - m);
    long long c = 1;
    for (long long j = 1; j <= upper; ++j) {
        c = c * (x - j + 1) / j;  // exact: this is C(x, j), increasing while j <= x/2
        if (c >= cap) return SatCount::at_least_cap(cap);
    }
    return SatCount::exact(c, cap);
}

// Children of v grouped by subtree code; children lists are code-sorted so
// groups are contiguous runs.
template <typename Fn>
void for_each_child_group(const RootedTree& r, int v, Fn&& fn) {
    const auto& ch = r.children[v];
    size_t i = 0;
    while (i < ch.size()) {
        size_t j = i;
        while (j < ch.size() && r.code[ch[j]] == r.code[ch[i]]) ++j;
        fn(ch[i], static_cast<int>(j - i), ch.begin() + i, ch.begin() + j);
        i = j;
    }
}

SatCount count_rec(const RootedTree& r, int v, int k, long long cap,
                   std::map<Code, SatCount>& memo) {
    auto it = memo.find(r.code[v]);
    if (it != memo.end()) return it->second;
    SatCount res = SatCount::exact(1, cap);
    for_each_child_group(r, v, [&](int rep, int m, auto, auto) {
        SatCount sub = count_rec(r, rep, k, cap, memo);
        res = mul_sat(res, binom_options(sub, k, m, cap));
    });
    memo.emplace(r.code[v], res);
    return res;
}

unsigned long long mul_checked(unsigned long long a, unsigned long long b) {
    unsigned long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("count overflow");
    return r;
}

unsigned long long binom_exact(unsigned long long x, unsigned long long m) {
    if (m > x) return 0;
    m = std::min(m, x - m);
    unsigned long long c = 1;
    for (unsigned long long j = 1; j <= m; ++j) c = mul_checked(c, x - j + 1) / j;
    return c;
}

unsigned long long count_exact_rec(const RootedTree& r, int v, int k,
                                   std::map<Code, unsigned long long>& memo) {
    auto it = memo.find(r.code[v]);
    if (it != memo.end()) return it->second;
    unsigned long long res = 1;
    for_each_child_group(r, v, [&](int rep, int m, auto, auto) {
        unsigned long long sub = count_exact_rec(r, rep, k, memo);
        res = mul_checked(res, binom_exact(mul_checked(k, sub), m));
    });
    memo.emplace(r.code[v], res);
    return res;
}

}  // namespace

SatCount count_edge_classes(const RootedTree& r, int k) {
    if (k < 1) throw std::invalid_argument("count_edge_classes: k must be >= 1");
    long long cap = std::max<long long>(2, r.size());
    std::map<Code, SatCount> memo;
    return count_rec(r, r.root, k, cap, memo);
}

unsigned long long count_edge_classes_exact(const RootedTree& r, int k) {
    if (k < 1) throw std::invalid_argument("count_edge_classes_exact: k must be >= 1");
    std::map<Code, unsigned long long> memo;
    return count_exact_rec(r, r.root, k, memo);
}

int rooted_D(const RootedTree& r) {
    for (int k = 1; k <= std::max(1, r.size()); ++k)
        if (count_edge_classes(r, k).at_least(1)) return k;
    throw std::logic_error("rooted_D: no labeling up to n labels");
}

namespace {

struct CenterSplit {
    CenterInfo c;
    RootedTree tv, tw;  // bicentric halves (tv rooted at c1); unused if unicentric
    bool halves_isomorphic = false;
};

CenterSplit split_at_center(const Graph& t) {
    CenterSplit s;
    s.c = center(t);
    if (s.c.bicentric) {
        s.tv = root_at(t, s.c.c1, {s.c.c2});
        s.tw = root_at(t, s.c.c2, {s.c.c1});
        s.halves_isomorphic = ahu_code(s.tv) == ahu_code(s.tw);
    }
    return s;
}

// min k with k * N(tv, k) >= 2
int min_k_pair_exists(const RootedTree& tv, int bound) {
    for (int k = 1; k <= bound; ++k) {
        SatCount nk = count_edge_classes(tv, k);
        if (nk.saturated || static_cast<long long>(k) * nk.value >= 2) return k;
    }
    throw std::logic_error("min_k_pair_exists: bound exceeded");
}

// min k with N(tv, k) >= 2
int min_k_two_classes(const RootedTree& tv, int bound) {
    for (int k = 1; k <= bound; ++k)
        if (count_edge_classes(tv, k).at_least(2)) return k;
    throw std::logic_error("min_k_two_classes: bound exceeded");
}

}  // namespace

int tree_D(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_D: not a tree");
    if (t.n < 2) throw std::invalid_argument("tree_D: order must be >= 2");
    CenterSplit s = split_at_center(t);
    if (!s.c.bicentric) return rooted_D(root_at(t, s.c.c1));
    if (!s.halves_isomorphic) return std::max(rooted_D(s.tv), rooted_D(s.tw));
    return min_k_pair_exists(s.tv, t.n);
}

int tree_Dprime(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_Dprime: not a tree");
    if (t.n < 3) throw std::invalid_argument("tree_Dprime: order must be >= 3");
    CenterSplit s = split_at_center(t);
    int d = tree_D(t);
    if (!s.c.bicentric || !s.halves_isomorphic) return d;
    // Two independent routes that must agree: the direct minimum over label
    // counts admitting two half classes, and D plus the uniqueness test.
    int direct = min_k_two_classes(s.tv, t.n);
    int via_family = d + (count_edge_classes(s.tv, d).exactly_one() ? 1 : 0);
    if (direct != via_family)
        throw std::logic_error("tree_Dprime: route disagreement D'=" +
                               std::to_string(direct) + " vs " + std::to_string(via_family));
    return direct;
}

FamilyConditions in_family_T(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("in_family_T: not a tree");
    if (t.n < 3) throw std::invalid_argument("in_family_T: order must be >= 3");
    FamilyConditions f;
    CenterSplit s = split_at_center(t);
    f.bicentric = s.c.bicentric;
    if (!f.bicentric) return f;
    f.halves_isomorphic = s.halves_isomorphic;
    if (!f.halves_isomorphic) return f;
    f.unique_at_D = count_edge_classes(s.tv, tree_D(t)).exactly_one();
    return f;
}

// ---------------------------------------------------------------------------
// Constructive enumeration of distinguishing edge labeling classes.
// ---------------------------------------------------------------------------

namespace {

// Produces, per vertex, the first classes of distinguishing edge k-labelings
// of its subtree as by-child label arrays. The order is structure-driven:
// isomorphic subtrees yield code-identical class sequences.
class ClassGenerator {
public:
    ClassGenerator(const RootedTree& r, int k)
        : r_(r), k_(k), lists_(r.parent.size()), complete_(r.parent.size(), 0) {}

    // Fragments for vertex v; at least min(want, total) entries afterwards.
    const std::vector<std::vector<int>>& gen(int v, int want) {
        if (!complete_[v] && static_cast<int>(lists_[v].size()) < want) build(v, want);
        return lists_[v];
    }

    bool complete(int v) const { return complete_[v] != 0; }

private:
    void build(int v, int want) {
        struct GroupPlan {
            std::vector<int> members;
            std::vector<std::vector<int>> subsets;  // ascending option indices
            bool exhausted = false;                 // subsets holds every subset
        };
        std::vector<GroupPlan> groups;
        for_each_child_group(r_, v, [&](int rep, int m, auto begin, auto end) {
            GroupPlan gp;
            gp.members.assign(begin, end);
            int needed_classes = (m + want - 2) / k_ + 1;
            const auto& repclasses = gen(rep, needed_classes);
            int classes_avail = complete_[rep]
                                    ? static_cast<int>(repclasses.size())
                                    : std::min<int>(static_cast<int>(repclasses.size()),
                                                    needed_classes);
            long long options = static_cast<long long>(k_) * classes_avail;
            enumerate_subsets(options, m, want, gp.subsets);
            gp.exhausted = complete_[rep] &&
                           (static_cast<int>(gp.subsets.size()) < want ||
                            last_subset_is_final(gp.subsets, options, m));
            groups.push_back(std::move(gp));
        });

        std::vector<std::vector<int>> out;
        if (groups.empty()) {
            out.emplace_back(r_.parent.size(), 0);
            lists_[v] = std::move(out);
            complete_[v] = 1;
            return;
        }
        // Any group with no valid subset kills every labeling of v.
        for (const auto& g : groups) {
            if (g.subsets.empty()) {
                lists_[v].clear();
                complete_[v] = 1;
                return;
            }
        }

        bool all_exhausted = true;
        for (const auto& g : groups)
            if (!g.exhausted) all_exhausted = false;

        // Odometer over per-group subset choices, last group fastest.
        std::vector<size_t> idx(groups.size(), 0);
        bool wrapped = false;
        while (static_cast<int>(out.size()) < want) {
            out.push_back(assemble(0, groups, idx));
            bool advanced = false;
            size_t g = groups.size();
            while (g > 0) {
                --g;
                if (++idx[g] < groups[g].subsets.size()) {
                    advanced = true;
                    break;
                }
                idx[g] = 0;
            }
            if (!advanced) {
                wrapped = true;
                break;
            }
        }
        complete_[v] = (all_exhausted && wrapped) ? 1 : 0;
        lists_[v] = std::move(out);
    }

    std::vector<int> assemble(int /*v*/, const auto& groups, const std::vector<size_t>& idx) {
        std::vector<int> frag(r_.parent.size(), 0);
        for (size_t g = 0; g < groups.size(); ++g) {
            const auto& gp = groups[g];
            const auto& subset = gp.subsets[idx[g]];
            for (size_t j = 0; j < gp.members.size(); ++j) {
                int child = gp.members[j];
                int p = subset[j];
                int cls = p / k_;
                int lab = p % k_ + 1;
                const auto& childfrag = gen(child, cls + 1)[cls];
                for (size_t x = 0; x < childfrag.size(); ++x)
                    if (childfrag[x] != 0) frag[x] = childfrag[x];
                frag[child] = lab;
            }
        }
        return frag;
    }

    static void enumerate_subsets(long long p, int m, int want,
                                  std::vector<std::vector<int>>& out) {
        if (p < m) return;
        std::vector<int> cur(m);
        std::iota(cur.begin(), cur.end(), 0);
        while (static_cast<int>(out.size()) < want) {
            out.push_back(cur);
            int i = m - 1;
            while (i >= 0 && cur[i] == p - m + i) --i;
            if (i < 0) return;
            ++cur[i];
            for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
        }
    }

    static bool last_subset_is_final(const std::vector<std::vector<int>>& subsets,
                                     long long p, int m) {
        if (subsets.empty()) return true;
        const auto& last = subsets.back();
        for (int j = 0; j < m; ++j)
            if (last[j] != p - m + j) return false;
        return true;
    }

    const RootedTree& r_;
    int k_;
    std::vector<std::vector<std::vector<int>>> lists_;
    std::vector<char> complete_;
};

}  // namespace

std::vector<EdgeLabeling> distinct_edge_labelings(const RootedTree& r, int k, int want) {
    if (k < 1 || want < 1) throw std::invalid_argument("distinct_edge_labelings: bad args");
    ClassGenerator gen(r, k);
    const auto& frags = gen.gen(r.root, want);
    std::vector<EdgeLabeling> out;
    out.reserve(std::min<size_t>(frags.size(), want));
    for (size_t i = 0; i < frags.size() && static_cast<int>(i) < want; ++i)
        out.push_back(edge_labels_to_host(r, frags[i], k));
    return out;
}

// ---------------------------------------------------------------------------
// Full classification with witnesses.
// ---------------------------------------------------------------------------

namespace {

void merge_vertex_labels(VertexLabeling& into, const VertexLabeling& part) {
    for (size_t v = 0; v < part.labels.size(); ++v)
        if (part.labels[v] != 0) into.labels[v] = part.labels[v];
}

void merge_edge_labels(EdgeLabeling& into, const EdgeLabeling& part) {
    for (size_t e = 0; e < part.labels.size(); ++e)
        if (part.labels[e] != 0) into.labels[e] = part.labels[e];
}

}  // namespace

TreeClassification classify_tree(const Graph& t, bool want_witnesses) {
    if (!is_tree(t)) throw std::invalid_argument("classify_tree: not a tree");
    if (t.n < 3) throw std::invalid_argument("classify_tree: order must be >= 3");

    TreeClassification out;
    CenterSplit s = split_at_center(t);
    out.center = s.c;
    out.D = tree_D(t);
    out.Dprime = tree_Dprime(t);
    out.family.bicentric = s.c.bicentric;
    if (s.c.bicentric) {
        out.family.halves_isomorphic = s.halves_isomorphic;
        if (s.halves_isomorphic) {
            out.N_at_D = count_edge_classes(s.tv, out.D);
            out.family.unique_at_D = out.N_at_D->exactly_one();
        }
    }
    if ((out.Dprime - out.D) != (out.family.in_family() ? 1 : 0))
        throw std::logic_error("classify_tree: D'/family inconsistency");
    if (!want_witnesses) return out;

    out.witness_vertex.k = out.D;
    out.witness_vertex.labels.assign(t.n, 0);
    out.witness_edge.k = out.Dprime;
    out.witness_edge.labels.assign(t.m(), 0);

    if (!s.c.bicentric) {
        RootedTree rt = root_at(t, s.c.c1);
        EdgeLabeling cls = distinct_edge_labelings(rt, out.D, 1).at(0);
        out.witness_edge = cls;  // Dprime == D here
        out.witness_vertex = from_colabel(rt, cls, 1);
        return out;
    }

    int central = t.edge_index(s.c.c1, s.c.c2);
    if (!s.halves_isomorphic) {
        EdgeLabeling cv = distinct_edge_labelings(s.tv, out.D, 1).at(0);
        EdgeLabeling cw = distinct_edge_labelings(s.tw, out.D, 1).at(0);
        merge_vertex_labels(out.witness_vertex, from_colabel(s.tv, cv, 1));
        merge_vertex_labels(out.witness_vertex, from_colabel(s.tw, cw, 1));
        merge_edge_labels(out.witness_edge, cv);
        merge_edge_labels(out.witness_edge, cw);
        out.witness_edge.labels[central] = 1;
        return out;
    }

    // Isomorphic halves. Vertex witness: same half class, root labels 1 and 2
    // (D >= 2 because the two halves can be swapped). Edge witness: two
    // distinct half classes at Dprime labels, central edge labeled 1.
    EdgeLabeling cv = distinct_edge_labelings(s.tv, out.D, 1).at(0);
    EdgeLabeling cw0 = distinct_edge_labelings(s.tw, out.D, 1).at(0);
    merge_vertex_labels(out.witness_vertex, from_colabel(s.tv, cv, 1));
    merge_vertex_labels(out.witness_vertex, from_colabel(s.tw, cw0, 2));

    EdgeLabeling ev = distinct_edge_labelings(s.tv, out.Dprime, 1).at(0);
    EdgeLabeling ew = distinct_edge_labelings(s.tw, out.Dprime, 2).at(1);
    merge_edge_labels(out.witness_edge, ev);
    merge_edge_labels(out.witness_edge, ew);
    out.witness_edge.labels[central] = 1;
    return out;
}

std::pair<VertexLabeling, EdgeLabeling> witness_labelings(const Graph& t) {
    TreeClassification c = classify_tree(t, true);
    return {std::move(c.witness_vertex), std::move(c.witness_edge)};
}

}  // namespace dst
