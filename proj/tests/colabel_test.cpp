#include "dst/colabel.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "dst/enumeration.hpp"
#include "dst/oracle.hpp"
#include "testutil.hpp"

using namespace dst;

TEST_CASE("co-labeling pushes vertex labels onto parent edges") {
    Graph p3 = testutil::path(3);  // rooted at 0: 0 -> 1 -> 2
    RootedTree r = root_at(p3, 0);
    VertexLabeling f{{1, 2, 1}, 2};
    EdgeLabeling co = to_colabel(r, f);
    CHECK(co.labels[p3.edge_index(0, 1)] == 2);
    CHECK(co.labels[p3.edge_index(1, 2)] == 1);

    Graph single = make_graph(1, {});
    EdgeLabeling empty = to_colabel(root_at(single, 0), VertexLabeling{{3}, 3});
    CHECK(empty.labels.empty());

    Graph s4 = testutil::star(4);
    RootedTree rs = root_at(s4, 0);
    VertexLabeling fs{{1, 1, 2, 3, 4}, 4};
    EdgeLabeling cos = to_colabel(rs, fs);
    for (int i = 1; i <= 4; ++i) CHECK(cos.labels[s4.edge_index(0, i)] == i);
}

TEST_CASE("from_colabel inverts to_colabel") {
    Graph p3 = testutil::path(3);
    RootedTree r = root_at(p3, 0);
    VertexLabeling f{{1, 2, 1}, 2};
    VertexLabeling back = from_colabel(r, to_colabel(r, f), 1);
    CHECK(back.labels == f.labels);

    Graph single = make_graph(1, {});
    RootedTree rs = root_at(single, 0);
    EdgeLabeling none;
    none.k = 3;
    VertexLabeling only_root = from_colabel(rs, none, 3);
    CHECK(only_root.labels[0] == 3);

    CHECK_THROWS_AS(from_colabel(rs, none, 4), std::invalid_argument);
}

TEST_CASE("round trips are exact on random rooted trees") {
    std::mt19937 rng(17);
    for (int it = 0; it < 500; ++it) {
        int n = 1 + it % 10;
        Graph t = testutil::random_tree(n, rng);
        int root = static_cast<int>(rng() % n);
        RootedTree r = root_at(t, root);
        int k = 1 + static_cast<int>(rng() % 4);
        VertexLabeling f = testutil::random_vertex_labeling(n, k, rng);
        EdgeLabeling co = to_colabel(r, f);
        CHECK(from_colabel(r, co, f.labels[root]).labels == f.labels);
        CHECK(to_colabel(r, from_colabel(r, co, 1)).labels == co.labels);
    }
}

TEST_CASE("structural rooted-distinguishing check on small cases") {
    Graph s2 = testutil::star(2);
    RootedTree r = root_at(s2, 0);
    auto el = [&](int l1, int l2) {
        EdgeLabeling e;
        e.k = 2;
        e.labels = {0, 0};
        e.labels[s2.edge_index(0, 1)] = l1;
        e.labels[s2.edge_index(0, 2)] = l2;
        return e;
    };
    CHECK(is_rooted_distinguishing(r, el(1, 2)));
    CHECK_FALSE(is_rooted_distinguishing(r, el(1, 1)));
}

TEST_CASE("the extremal half with four distinct path labelings is distinguishing") {
    Graph fig1 = testutil::quad_path_pair();
    RootedTree tv = root_at(fig1, 0, {1});
    // four depth-2 paths, edge pairs (1,1), (1,2), (2,1), (2,2)
    EdgeLabeling e;
    e.k = 2;
    e.labels.assign(fig1.m(), 0);
    int pair_id = 0;
    for (int c : tv.children[0]) {
        int top = pair_id / 2 + 1, bottom = pair_id % 2 + 1;
        e.labels[fig1.edge_index(0, c)] = top;
        e.labels[fig1.edge_index(c, tv.children[c][0])] = bottom;
        ++pair_id;
    }
    CHECK(is_rooted_distinguishing(tv, e));
    auto auts = oracle::rooted_automorphisms(tv);
    CHECK(auts.size() == 24);  // the four hanging paths permute freely
    CHECK(oracle::is_rooted_distinguishing_brute(tv, e, auts));
}

TEST_CASE("root label never matters for rooted distinguishing") {
    std::mt19937 rng(23);
    for (int it = 0; it < 300; ++it) {
        int n = 2 + it % 8;
        Graph t = testutil::random_tree(n, rng);
        int root = static_cast<int>(rng() % n);
        RootedTree r = root_at(t, root);
        int k = 2 + static_cast<int>(rng() % 2);
        VertexLabeling f = testutil::random_vertex_labeling(n, k, rng);
        bool base = is_rooted_distinguishing(r, f);
        for (int c = 1; c <= k; ++c) {
            VertexLabeling g = f;
            g.labels[root] = c;
            CHECK(is_rooted_distinguishing(r, g) == base);
        }
    }
}

TEST_CASE("labeling and co-labeling are distinguishing together, vs oracle (n <= 6)") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& t : all_trees(n)) {
            for (int root = 0; root < n; ++root) {
                RootedTree r = root_at(t, root);
                auto auts = oracle::rooted_automorphisms(r);
                for (int k = 2; k <= 3; ++k) {
                    std::vector<int> lab(n, 1);
                    for (;;) {
                        VertexLabeling f;
                        f.k = k;
                        f.labels = lab;
                        EdgeLabeling co = to_colabel(r, f);
                        bool fast_v = is_rooted_distinguishing(r, f);
                        bool fast_e = is_rooted_distinguishing(r, co);
                        CHECK(fast_v == fast_e);
                        CHECK(fast_v == oracle::is_rooted_distinguishing_brute(r, f, auts));
                        CHECK(fast_e == oracle::is_rooted_distinguishing_brute(r, co, auts));
                        int i = n - 1;
                        while (i >= 0 && lab[i] == k) lab[i--] = 1;
                        if (i < 0) break;
                        ++lab[i];
                    }
                }
            }
        }
    }
}

TEST_CASE("rooted distinguishing number equals rooted distinguishing index (n <= 8)") {
    std::set<Code> seen;
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : all_trees(n))
            for (int root = 0; root < n; ++root) {
                RootedTree r = root_at(t, root);
                if (!seen.insert(ahu_code(r)).second) continue;
                CHECK(oracle::brute_rooted_D(r) == oracle::brute_rooted_Dprime(r));
            }
}
