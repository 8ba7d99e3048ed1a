#include "dst/unicyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dst/colabel.hpp"
#include "dst/tree_distinguishing.hpp"

namespace dst {

namespace {

CycleSym inverse(const CycleSym& s, int t) {
    if (s.reflection) return s;
    return CycleSym{false, (t - s.shift) % t};
}

std::vector<CycleSym> dihedral_group(int t) {
    std::vector<CycleSym> out;
    out.reserve(2 * t);
    for (int r = 0; r < t; ++r) out.push_back(CycleSym{false, r});
    for (int c = 0; c < t; ++c) out.push_back(CycleSym{true, c});
    return out;
}

}  // namespace

UnicyclicDecomposition decompose(const Graph& g) {
    auto cyc = unicyclic_cycle(g);
    if (!cyc) throw std::invalid_argument("decompose: graph is not connected unicyclic");
    UnicyclicDecomposition d;
    d.host = &g;
    d.cycle = *cyc;
    d.hanging.reserve(d.t());
    for (int i = 0; i < d.t(); ++i) {
        std::vector<int> blocked;
        for (int j = 0; j < d.t(); ++j)
            if (j != i) blocked.push_back(d.cycle[j]);
        d.hanging.push_back(root_at(g, d.cycle[i], blocked));
    }
    return d;
}

CycleSymmetryGroup cycle_symmetries(const UnicyclicDecomposition& d) {
    int t = d.t();
    CycleSymmetryGroup grp;
    grp.t = t;
    for (const CycleSym& s : dihedral_group(t)) {
        bool ok = true;
        for (int i = 0; i < t && ok; ++i)
            if (ahu_code(d.hanging[i]) != ahu_code(d.hanging[s.vpos(t, i)])) ok = false;
        if (!ok) continue;
        grp.elems.push_back(s);
        std::vector<int> perm(t);
        for (int i = 0; i < t; ++i) perm[i] = s.vpos(t, i);
        grp.vertex_perm.push_back(std::move(perm));
    }
    return grp;
}

// ---------------------------------------------------------------------------
// Distinguishing checks through the decomposition.
// ---------------------------------------------------------------------------

namespace {

// True iff some non-identity group element fixes every slot of `keys`, where
// the element acts on slot i as act(elem, i).
template <typename Act>
bool has_nontrivial_stabilizer(const CycleSymmetryGroup& grp,
                               const std::vector<std::vector<Code>>& keysets, Act&& act) {
    for (const CycleSym& s : grp.elems) {
        if (s.is_identity()) continue;
        bool fixes = true;
        for (const auto& keys : keysets) {
            for (int i = 0; i < grp.t && fixes; ++i)
                if (keys[i] != keys[act(s, i)]) fixes = false;
            if (!fixes) break;
        }
        if (fixes) return true;
    }
    return false;
}

}  // namespace

bool is_unicyclic_distinguishing(const Graph& g, const VertexLabeling& f) {
    UnicyclicDecomposition d = decompose(g);
    int t = d.t();
    for (int i = 0; i < t; ++i)
        if (!is_rooted_distinguishing(d.hanging[i], f)) return false;
    CycleSymmetryGroup grp = cycle_symmetries(d);
    std::vector<Code> codes(t);
    for (int i = 0; i < t; ++i) codes[i] = labeled_code(d.hanging[i], f);
    for (const CycleSym& s : grp.elems) {
        if (s.is_identity()) continue;
        bool fixes = true;
        for (int i = 0; i < t && fixes; ++i)
            if (codes[i] != codes[s.vpos(t, i)]) fixes = false;
        if (fixes) return false;
    }
    return true;
}

bool is_unicyclic_distinguishing(const Graph& g, const EdgeLabeling& f) {
    UnicyclicDecomposition d = decompose(g);
    int t = d.t();
    for (int i = 0; i < t; ++i)
        if (!is_rooted_distinguishing(d.hanging[i], f)) return false;
    CycleSymmetryGroup grp = cycle_symmetries(d);
    std::vector<Code> codes(t);
    std::vector<int> cyc_labels(t);
    for (int i = 0; i < t; ++i) {
        codes[i] = labeled_code(d.hanging[i], f);
        cyc_labels[i] = f.labels[g.edge_index(d.cycle[i], d.cycle[(i + 1) % t])];
    }
    for (const CycleSym& s : grp.elems) {
        if (s.is_identity()) continue;
        bool fixes = true;
        for (int i = 0; i < t && fixes; ++i) {
            if (codes[i] != codes[s.vpos(t, i)]) fixes = false;
            if (fixes && cyc_labels[i] != cyc_labels[s.epos(t, i)]) fixes = false;
        }
        if (fixes) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Minimum label search: assign abstract per-slot values so that no
// non-identity compatible symmetry fixes the whole assignment.
// ---------------------------------------------------------------------------

namespace {

struct AssignmentProblem {
    std::vector<int> options;              // per slot, >= 1
    std::vector<std::vector<int>> action;  // per non-identity sym: slot -> slot
};

struct AssignmentSearch {
    const AssignmentProblem& p;
    std::vector<int> order;  // slots, fewest options first
    std::vector<int> value;  // -1 = unassigned
    std::optional<std::vector<int>> result;

    explicit AssignmentSearch(const AssignmentProblem& p_) : p(p_) {
        order.resize(p.options.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return p.options[a] < p.options[b]; });
        value.assign(p.options.size(), -1);
    }

    bool alive(const std::vector<int>& act) const {
        for (size_t s = 0; s < value.size(); ++s) {
            if (value[s] < 0 || value[act[s]] < 0) continue;
            if (value[s] != value[act[s]]) return false;
        }
        return true;
    }

    bool dfs(size_t pos, const std::vector<int>& alive_syms) {
        if (alive_syms.empty()) {
            for (int s : order)
                if (value[s] < 0) value[s] = 0;
            result = value;
            return true;
        }
        if (pos == order.size()) return false;  // survivors fix everything
        int s = order[pos];
        // The first slot assigned can be pinned to 0: relabeling values
        // within one slot's option space maps solutions to solutions.
        int top = pos == 0 ? 1 : p.options[s];
        for (int x = 0; x < top; ++x) {
            value[s] = x;
            std::vector<int> next;
            next.reserve(alive_syms.size());
            for (int a : alive_syms)
                if (alive(p.action[a])) next.push_back(a);
            if (dfs(pos + 1, next)) return true;
            value[s] = -1;
        }
        return false;
    }
};

std::optional<std::vector<int>> find_free_assignment(const AssignmentProblem& p) {
    for (int o : p.options)
        if (o < 1) return std::nullopt;
    AssignmentSearch search(p);
    std::vector<int> all;
    for (size_t a = 0; a < p.action.size(); ++a) all.push_back(static_cast<int>(a));
    if (search.dfs(0, all)) return search.result;
    return std::nullopt;
}

struct SearchContext {
    const Graph* g;
    UnicyclicDecomposition d;
    CycleSymmetryGroup grp;
    std::vector<std::vector<int>> nonid_vact;  // per non-id sym: position action
    std::vector<std::vector<int>> nonid_eact;  // per non-id sym: edge action

    explicit SearchContext(const Graph& graph) : g(&graph), d(decompose(graph)) {
        grp = cycle_symmetries(d);
        int t = d.t();
        for (const CycleSym& s : grp.elems) {
            if (s.is_identity()) continue;
            std::vector<int> va(t), ea(t);
            for (int i = 0; i < t; ++i) {
                va[i] = s.vpos(t, i);
                ea[i] = s.epos(t, i);
            }
            nonid_vact.push_back(std::move(va));
            nonid_eact.push_back(std::move(ea));
        }
    }
};

// Distinguishing vertex k-labeling of the whole graph, if one exists.
// Per position the options are (half class, root label) pairs, clamped at t;
// option q decodes to class q/k with root label q%k+1.
std::optional<VertexLabeling> search_vertex(const SearchContext& ctx, int k) {
    int t = ctx.d.t();
    std::vector<std::vector<EdgeLabeling>> classes(t);
    AssignmentProblem p;
    p.options.resize(t);
    for (int i = 0; i < t; ++i) {
        classes[i] = distinct_edge_labelings(ctx.d.hanging[i], k, t);
        long long c = static_cast<long long>(k) * static_cast<long long>(classes[i].size());
        p.options[i] = static_cast<int>(std::min<long long>(c, t));
        if (p.options[i] == 0) return std::nullopt;
    }
    p.action = ctx.nonid_vact;
    auto sol = find_free_assignment(p);
    if (!sol) return std::nullopt;

    VertexLabeling f;
    f.k = k;
    f.labels.assign(ctx.g->n, 0);
    for (int i = 0; i < t; ++i) {
        int cls = (*sol)[i] / k;
        int root_label = (*sol)[i] % k + 1;
        VertexLabeling part = from_colabel(ctx.d.hanging[i], classes[i][cls], root_label);
        for (int v = 0; v < ctx.g->n; ++v)
            if (part.labels[v] != 0) f.labels[v] = part.labels[v];
    }
    return f;
}

// Distinguishing edge k-labeling: per position one half class (clamped at t),
// plus one label per cycle edge (clamped at t distinct values).
std::optional<EdgeLabeling> search_edge(const SearchContext& ctx, int k) {
    int t = ctx.d.t();
    std::vector<std::vector<EdgeLabeling>> classes(t);
    AssignmentProblem p;
    p.options.resize(2 * t);
    for (int i = 0; i < t; ++i) {
        classes[i] = distinct_edge_labelings(ctx.d.hanging[i], k, t);
        p.options[i] = static_cast<int>(classes[i].size());
        if (p.options[i] == 0) return std::nullopt;
        p.options[t + i] = std::min(k, t);
    }
    int nsym = static_cast<int>(ctx.nonid_vact.size());
    p.action.resize(nsym);
    for (int a = 0; a < nsym; ++a) {
        p.action[a].resize(2 * t);
        for (int i = 0; i < t; ++i) {
            p.action[a][i] = ctx.nonid_vact[a][i];
            p.action[a][t + i] = t + ctx.nonid_eact[a][i];
        }
    }
    auto sol = find_free_assignment(p);
    if (!sol) return std::nullopt;

    EdgeLabeling f;
    f.k = k;
    f.labels.assign(ctx.g->m(), 0);
    for (int i = 0; i < t; ++i) {
        const EdgeLabeling& part = classes[i][(*sol)[i]];
        for (int e = 0; e < ctx.g->m(); ++e)
            if (part.labels[e] != 0) f.labels[e] = part.labels[e];
        int ei = ctx.g->edge_index(ctx.d.cycle[i], ctx.d.cycle[(i + 1) % t]);
        f.labels[ei] = (*sol)[t + i] + 1;
    }
    return f;
}

}  // namespace

int unicyclic_D(const Graph& g) {
    SearchContext ctx(g);
    for (int k = 1; k <= g.n; ++k)
        if (search_vertex(ctx, k)) return k;
    throw std::logic_error("unicyclic_D: no labeling with n labels");
}

int unicyclic_Dprime(const Graph& g) {
    SearchContext ctx(g);
    for (int k = 1; k <= g.n; ++k)
        if (search_edge(ctx, k)) return k;
    throw std::logic_error("unicyclic_Dprime: no labeling with n labels");
}

UnicyclicClassification classify_unicyclic(const Graph& g, bool want_witnesses) {
    SearchContext ctx(g);
    UnicyclicClassification out;
    out.cycle_length = ctx.d.t();
    std::optional<VertexLabeling> fv;
    std::optional<EdgeLabeling> fe;
    for (int k = 1; k <= g.n && !fv; ++k) {
        fv = search_vertex(ctx, k);
        if (fv) out.D = k;
    }
    for (int k = 1; k <= g.n && !fe; ++k) {
        fe = search_edge(ctx, k);
        if (fe) out.Dprime = k;
    }
    if (!fv || !fe) throw std::logic_error("classify_unicyclic: search exhausted");
    if (want_witnesses) {
        out.witness_vertex = std::move(*fv);
        out.witness_edge = std::move(*fe);
        if (!is_unicyclic_distinguishing(g, out.witness_vertex) ||
            !is_unicyclic_distinguishing(g, out.witness_edge))
            throw std::logic_error("classify_unicyclic: witness failed self-check");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle transformation tables (the re-derived figure contents).
// ---------------------------------------------------------------------------

namespace {

using Seq = std::vector<int>;

Seq apply_edge(const CycleSym& s, int t, const Seq& seq) {
    Seq out(t);
    for (int i = 0; i < t; ++i) out[i] = seq[s.epos(t, i)];
    return out;
}

Seq apply_vertex(const CycleSym& s, int t, const Seq& seq) {
    Seq out(t);
    for (int i = 0; i < t; ++i) out[i] = seq[s.vpos(t, i)];
    return out;
}

std::vector<CycleSym> edge_stabilizer(int t, const Seq& seq) {
    std::vector<CycleSym> out;
    for (const CycleSym& s : dihedral_group(t))
        if (apply_edge(s, t, seq) == seq) out.push_back(s);
    return out;
}

std::vector<CycleSym> vertex_stabilizer(int t, const Seq& seq) {
    std::vector<CycleSym> out;
    for (const CycleSym& s : dihedral_group(t))
        if (apply_vertex(s, t, seq) == seq) out.push_back(s);
    return out;
}

bool sym_in(const CycleSym& s, const std::vector<CycleSym>& set) {
    for (const CycleSym& x : set)
        if (x.reflection == s.reflection && x.shift == s.shift) return true;
    return false;
}

std::vector<Seq> all_binary_seqs(int t) {
    std::vector<Seq> out;
    for (int mask = 0; mask < (1 << t); ++mask) {
        Seq s(t);
        for (int i = 0; i < t; ++i) s[i] = ((mask >> i) & 1) + 1;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Seq canonical_class_rep(int t, const Seq& seq, bool edge_action) {
    Seq best = seq;
    for (const CycleSym& s : dihedral_group(t)) {
        Seq cand = edge_action ? apply_edge(s, t, seq) : apply_vertex(s, t, seq);
        if (cand < best) best = cand;
    }
    return best;
}

CycleTransformTable derive_tables() {
    CycleTransformTable table;
    for (int t = 3; t <= 5; ++t) {
        std::set<Seq> edge_reps, vertex_reps;
        for (const Seq& s : all_binary_seqs(t)) {
            edge_reps.insert(canonical_class_rep(t, s, true));
            vertex_reps.insert(canonical_class_rep(t, s, false));
        }
        for (const Seq& rep : edge_reps) {
            auto stab_in = edge_stabilizer(t, rep);
            bool found = false;
            for (const Seq& out : all_binary_seqs(t)) {
                auto stab_out = vertex_stabilizer(t, out);
                bool contained = true;
                for (const CycleSym& s : stab_out)
                    if (!sym_in(s, stab_in)) contained = false;
                if (contained) {
                    table.edge_to_vertex[t - 3][rep] = out;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::logic_error("cycle table derivation: no vertex labeling for an "
                                       "edge class at t=" + std::to_string(t));
        }
        for (const Seq& rep : vertex_reps) {
            auto stab_in = vertex_stabilizer(t, rep);
            bool found = false;
            for (const Seq& out : all_binary_seqs(t)) {
                auto stab_out = edge_stabilizer(t, out);
                bool contained = true;
                for (const CycleSym& s : stab_out)
                    if (!sym_in(s, stab_in)) contained = false;
                if (contained) {
                    table.vertex_to_edge[t - 3][rep] = out;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw std::logic_error("cycle table derivation: no edge labeling for a "
                                       "vertex class at t=" + std::to_string(t));
        }
    }
    return table;
}

}  // namespace

const CycleTransformTable& cycle_transform_tables() {
    static const CycleTransformTable table = derive_tables();
    return table;
}

// ---------------------------------------------------------------------------
// Constructive transformations between labeling kinds.
// ---------------------------------------------------------------------------

namespace {

// Lexicographically smallest q-labeling of t slots whose dihedral stabilizer
// is trivial, under the edge or vertex action.
Seq min_free_sequence(int t, int q, bool edge_action) {
    Seq cur(t, 1);
    for (;;) {
        bool free = true;
        for (const CycleSym& s : dihedral_group(t)) {
            if (s.is_identity()) continue;
            Seq moved = edge_action ? apply_edge(s, t, cur) : apply_vertex(s, t, cur);
            if (moved == cur) {
                free = false;
                break;
            }
        }
        if (free) return cur;
        int i = t - 1;
        while (i >= 0 && cur[i] == q) cur[i--] = 1;
        if (i < 0) throw std::logic_error("min_free_sequence: none exists");
        ++cur[i];
    }
}

int count_distinct(const std::vector<int>& v) {
    std::set<int> s(v.begin(), v.end());
    return static_cast<int>(s.size());
}

// Order-preserving renaming of the (at most two) values in seq onto {1,2}.
Seq normalize_two_values(const Seq& seq) {
    std::set<int> vals(seq.begin(), seq.end());
    Seq out(seq.size());
    int lo = *vals.begin();
    for (size_t i = 0; i < seq.size(); ++i) out[i] = seq[i] == lo ? 1 : 2;
    return out;
}

// Table lookup with transform-back: find sigma minimizing the transformed
// input, read the table at the canonical rep, and carry the output back
// through sigma^-1 so stabilizer containment holds for the original input.
Seq lookup_transform(int t, const Seq& input_norm, bool input_is_edge,
                     const std::map<Seq, Seq>& table) {
    Seq best;
    CycleSym best_sym;
    bool first = true;
    for (const CycleSym& s : dihedral_group(t)) {
        Seq cand = input_is_edge ? apply_edge(s, t, input_norm) : apply_vertex(s, t, input_norm);
        if (first || cand < best) {
            best = cand;
            best_sym = s;
            first = false;
        }
    }
    const Seq& h = table.at(best);
    CycleSym inv = inverse(best_sym, t);
    return input_is_edge ? apply_vertex(inv, t, h) : apply_edge(inv, t, h);
}

}  // namespace

VertexLabeling edge_to_vertex(const Graph& g, const EdgeLabeling& fprime) {
    if (!is_unicyclic_distinguishing(g, fprime))
        throw std::invalid_argument("edge_to_vertex: input labeling is not distinguishing");
    UnicyclicDecomposition d = decompose(g);
    int t = d.t();

    VertexLabeling f;
    f.k = fprime.k;
    f.labels.assign(g.n, 0);

    // Tree parts: invert the co-labeling (root labels come from the cycle).
    for (int i = 0; i < t; ++i) {
        std::vector<int> by_child = edge_labels_by_child(d.hanging[i], fprime);
        for (int v : d.hanging[i].order)
            if (v != d.hanging[i].root) f.labels[v] = by_child[v];
    }

    Seq cyc_in(t);
    for (int i = 0; i < t; ++i)
        cyc_in[i] = fprime.labels[g.edge_index(d.cycle[i], d.cycle[(i + 1) % t])];

    int d_used = count_distinct(fprime.labels);
    Seq cyc_out;
    if (d_used == 1) {
        cyc_out.assign(t, 1);  // asymmetric graph: any labeling works
    } else if (t >= 6) {
        cyc_out = min_free_sequence(t, 2, false);
    } else if (count_distinct(cyc_in) >= 3) {
        cyc_out = min_free_sequence(t, 3, false);
    } else {
        cyc_out = lookup_transform(t, normalize_two_values(cyc_in), true,
                                   cycle_transform_tables().edge_to_vertex[t - 3]);
        // Contract check: every symmetry preserving the output preserves the input.
        for (const CycleSym& s : vertex_stabilizer(t, cyc_out))
            if (apply_edge(s, t, cyc_in) != cyc_in)
                throw std::logic_error("edge_to_vertex: stabilizer containment violated");
    }
    for (int i = 0; i < t; ++i) f.labels[d.cycle[i]] = cyc_out[i];
    return f;
}

EdgeLabeling vertex_to_edge(const Graph& g, const VertexLabeling& f) {
    if (!is_unicyclic_distinguishing(g, f))
        throw std::invalid_argument("vertex_to_edge: input labeling is not distinguishing");
    UnicyclicDecomposition d = decompose(g);
    int t = d.t();

    EdgeLabeling fp;
    fp.k = f.k;
    fp.labels.assign(g.m(), 0);

    for (int i = 0; i < t; ++i) {
        EdgeLabeling part = to_colabel(d.hanging[i], f);
        for (int e = 0; e < g.m(); ++e)
            if (part.labels[e] != 0) fp.labels[e] = part.labels[e];
    }

    Seq cyc_in(t);
    for (int i = 0; i < t; ++i) cyc_in[i] = f.labels[d.cycle[i]];

    int d_used = count_distinct(f.labels);
    Seq cyc_out;
    if (d_used == 1) {
        cyc_out.assign(t, 1);
    } else if (t >= 6) {
        cyc_out = min_free_sequence(t, 2, true);
    } else if (count_distinct(cyc_in) >= 3) {
        cyc_out = min_free_sequence(t, 3, true);
    } else {
        cyc_out = lookup_transform(t, normalize_two_values(cyc_in), false,
                                   cycle_transform_tables().vertex_to_edge[t - 3]);
        for (const CycleSym& s : edge_stabilizer(t, cyc_out))
            if (apply_vertex(s, t, cyc_in) != cyc_in)
                throw std::logic_error("vertex_to_edge: stabilizer containment violated");
    }
    for (int i = 0; i < t; ++i)
        fp.labels[g.edge_index(d.cycle[i], d.cycle[(i + 1) % t])] = cyc_out[i];
    return fp;
}

}  // namespace dst
