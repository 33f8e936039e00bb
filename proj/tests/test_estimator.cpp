#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "hyperrec/estimator.hpp"
#include "hyperrec/model.hpp"
#include "hyperrec/seeding.hpp"

using namespace hyperrec;

namespace {

// reference: test every d-subset directly against the definition
std::vector<std::vector<int>> brute_force_maximal(const ProjectedGraph& g, int d) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    std::vector<int> pick(d);
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    if (d > n) return out;
    for (;;) {
        for (int i = 0; i < d; ++i) pick[i] = idx[i];
        bool clique = true;
        for (int i = 0; i < d && clique; ++i)
            for (int j = i + 1; j < d; ++j)
                if (!g.has_edge(pick[i], pick[j])) {
                    clique = false;
                    break;
                }
        if (clique) {
            bool maximal = true;
            for (int v = 0; v < n && maximal; ++v) {
                if (std::find(pick.begin(), pick.end(), v) != pick.end()) continue;
                bool adj_all = true;
                for (int u : pick)
                    if (!g.has_edge(u, v)) {
                        adj_all = false;
                        break;
                    }
                if (adj_all) maximal = false;
            }
            if (maximal) out.push_back(pick);
        }
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

ProjectedGraph random_graph(int n, double density, uint64_t seed) {
    ProjectedGraph g(n);
    std::mt19937_64 rng(seed);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (uniform_unit(rng) < density) g.add_edge(a, b);
    return g;
}

}  // namespace

TEST_CASE("hand-built cases") {
    // K_4: only the 4-clique is maximal
    ProjectedGraph k4(4);
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
    CHECK(maximal_cliques_of_size(k4, 3).cliques.empty());
    CHECK(maximal_cliques_of_size(k4, 4).cliques ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});

    // path 0-1-2: both edges are maximal 2-cliques
    ProjectedGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(maximal_cliques_of_size(path, 2).cliques ==
          std::vector<std::vector<int>>{{0, 1}, {1, 2}});

    // triangle with a pendant: {0,1,2} is spoiled for d=2 but not the pendant edge
    ProjectedGraph tri(4);
    tri.add_edge(0, 1);
    tri.add_edge(0, 2);
    tri.add_edge(1, 2);
    tri.add_edge(2, 3);
    CHECK(maximal_cliques_of_size(tri, 3).cliques ==
          std::vector<std::vector<int>>{{0, 1, 2}});
    CHECK(maximal_cliques_of_size(tri, 2).cliques ==
          std::vector<std::vector<int>>{{2, 3}});
}

TEST_CASE("size bounds are enforced") {
    ProjectedGraph g(5);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(maximal_cliques_of_size(g, 1), std::invalid_argument);
    CHECK_THROWS_AS(maximal_cliques_of_size(g, 6), std::invalid_argument);
    CHECK_NOTHROW(maximal_cliques_of_size(g, 5));
}

TEST_CASE("isolated vertices never form cliques") {
    ProjectedGraph g(6);
    g.add_edge(0, 1);
    CliqueSet cs = maximal_cliques_of_size(g, 2);
    CHECK(cs.cliques == std::vector<std::vector<int>>{{0, 1}});
}

TEST_CASE("matches brute force on random graphs") {
    int graphs = 0;
    for (int n : {6, 8, 10}) {
        for (double density : {0.2, 0.5, 0.8}) {
            for (uint64_t seed = 0; seed < 8; ++seed) {
                ProjectedGraph g = random_graph(n, density, derive_seed(seed, n));
                ++graphs;
                for (int d : {3, 4, 5}) {
                    if (d > n) continue;
                    auto expect = brute_force_maximal(g, d);
                    std::sort(expect.begin(), expect.end());
                    CliqueSet got = maximal_cliques_of_size(g, d);
                    CHECK(got.size == d);
                    CHECK(got.cliques == expect);
                }
            }
        }
    }
    CHECK(graphs == 72);
}

TEST_CASE("recover agrees with the enumerator on a sampled projection") {
    ModelParams p;
    p.n = 40;
    p.classes.push_back({2, 0.4, std::nullopt});
    p.classes.push_back({3, 0.5, std::nullopt});
    ProjectedGraph g = project(sample_hypergraph(p, 17));
    CliqueSet a = recover(g, 3);
    auto expect = brute_force_maximal(g, 3);
    std::sort(expect.begin(), expect.end());
    CHECK(a.cliques == expect);
}

TEST_CASE("clique set text round trip") {
    CliqueSet cs;
    cs.size = 3;
    cs.cliques = {{0, 2, 5}, {1, 3, 4}};
    std::ostringstream out;
    write_clique_set(out, cs);
    CHECK(out.str() == "# d=3\n0 2 5\n1 3 4\n");
    std::istringstream in(out.str());
    CliqueSet back = read_clique_set(in);
    CHECK(back.size == 3);
    CHECK(back.cliques == cs.cliques);

    std::istringstream bad("# d=3\n0 1\n");
    CHECK_THROWS_AS(read_clique_set(bad), std::runtime_error);
}
