#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "hyperrec/cover_oracle.hpp"
#include "hyperrec/probability.hpp"

using namespace hyperrec;

namespace {

ModelParams two_class_30() {
    ModelParams p;
    p.n = 30;
    p.classes.push_back({2, 0.5, std::nullopt});
    p.classes.push_back({3, 0.5, std::nullopt});
    return p;
}

std::vector<std::vector<int>> subsets_of_size(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(d);
    for (int i = 0; i < d; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        int i = d - 1;
        while (i >= 0 && idx[i] == n - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

// distribution of the covered-edge mask of e when each d-subset of [n] is an
// independent hyperedge with probability p
std::vector<double> mask_distribution(const EdgeSet& e, int n, int d, double p) {
    auto slots = subsets_of_size(n, d);
    std::vector<uint32_t> slot_mask(slots.size(), 0);
    for (size_t s = 0; s < slots.size(); ++s)
        for (int k = 0; k < e.edge_count(); ++k) {
            auto [a, b] = e.edges()[k];
            bool has_a = std::find(slots[s].begin(), slots[s].end(), a) != slots[s].end();
            bool has_b = std::find(slots[s].begin(), slots[s].end(), b) != slots[s].end();
            if (has_a && has_b) slot_mask[s] |= uint32_t{1} << k;
        }
    std::vector<double> dist(uint32_t{1} << e.edge_count(), 0.0);
    dist[0] = 1.0;
    for (size_t s = 0; s < slots.size(); ++s) {
        std::vector<double> next(dist.size(), 0.0);
        for (uint32_t m = 0; m < dist.size(); ++m) {
            if (dist[m] == 0.0) continue;
            next[m] += dist[m] * (1.0 - p);
            next[m | slot_mask[s]] += dist[m] * p;
        }
        dist.swap(next);
    }
    return dist;
}

// P(every edge of e projected) by exhausting hyperedge-presence combinations
double brute_force_prob(const EdgeSet& e, const ModelParams& params) {
    const uint32_t full = (uint32_t{1} << e.edge_count()) - 1;
    std::vector<double> acc(full + 1, 0.0);
    acc[0] = 1.0;
    for (const auto& spec : params.classes) {
        double p = spec.probability_override ? *spec.probability_override
                                             : edge_probability(params.n, spec);
        auto dist = mask_distribution(e, params.n, spec.degree, p);
        std::vector<double> next(full + 1, 0.0);
        for (uint32_t m = 0; m <= full; ++m) {
            if (acc[m] == 0.0) continue;
            for (uint32_t w = 0; w <= full; ++w)
                if (dist[w] > 0.0) next[m | w] += acc[m] * dist[w];
        }
        acc.swap(next);
    }
    return acc[full];
}

}  // namespace

TEST_CASE("implied probability closed forms") {
    ModelParams tiny;
    tiny.n = 10;
    tiny.classes.push_back({3, 0.5, 0.001});
    CHECK(implied_prob_exact(10, 3, 3, tiny) == doctest::Approx(0.001).epsilon(1e-12));

    ModelParams single;
    single.n = 40;
    single.classes.push_back({3, 0.5, std::nullopt});
    double p = edge_probability(40, single.classes[0]);
    CHECK(implied_prob_exact(40, 2, 2, single) ==
          doctest::Approx(1.0 - std::pow(1.0 - p, 38)).epsilon(1e-12));

    ModelParams two = two_class_30();
    double p2 = edge_probability(30, two.classes[0]);
    double p3 = edge_probability(30, two.classes[1]);
    CHECK(implied_prob_exact(30, 2, 2, two) ==
          doctest::Approx(1.0 - (1.0 - p2) * std::pow(1.0 - p3, 28)).epsilon(1e-12));
    // with |V| = 3 the class-2 factor loses its slot and class 3 keeps 27
    CHECK(implied_prob_exact(30, 3, 2, two) ==
          doctest::Approx(1.0 - (1.0 - p2) * std::pow(1.0 - p3, 27)).epsilon(1e-12));
    // with d' = 3 a degree-3 hyperedge has no free slot: exactly one candidate
    CHECK(implied_prob_exact(30, 3, 3, two) == doctest::Approx(p3).epsilon(1e-12));
}

TEST_CASE("implied probability edge cases") {
    ModelParams two = two_class_30();
    CHECK(implied_prob_exact(30, 4, 4, two) == 0.0);  // subset bigger than any class

    ModelParams certain;
    certain.n = 12;
    certain.classes.push_back({3, 0.5, 1.0});
    CHECK(implied_prob_exact(12, 3, 2, certain) == 1.0);

    CHECK_THROWS_AS(implied_prob_exact(30, 3, 1, two), std::invalid_argument);
    CHECK_THROWS_AS(implied_prob_exact(30, 2, 3, two), std::invalid_argument);
    CHECK_THROWS_AS(implied_prob_exact(4, 5, 2, two), std::invalid_argument);
}

TEST_CASE("implied probability monotonicity") {
    ModelParams two = two_class_30();
    // easier to hit a smaller subset, harder inside a bigger excluded set
    CHECK(implied_prob_exact(30, 3, 3, two) <= implied_prob_exact(30, 3, 2, two));
    CHECK(implied_prob_exact(30, 4, 2, two) <= implied_prob_exact(30, 3, 2, two));
    // an extra class only adds ways to cover
    ModelParams one;
    one.n = 30;
    one.classes.push_back({3, 0.5, std::nullopt});
    CHECK(implied_prob_exact(30, 3, 2, one) <= implied_prob_exact(30, 3, 2, two));
}

TEST_CASE("exact probability matches hyperedge-level brute force") {
    std::vector<EdgeSet> shapes;
    shapes.push_back(EdgeSet(std::vector<std::pair<int, int>>{{0, 1}}));
    shapes.push_back(EdgeSet(std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
    shapes.push_back(EdgeSet::clique(3));
    shapes.push_back(EdgeSet::star(4));

    for (double p0 : {0.05, 0.3, 0.7}) {
        ModelParams pairs_only;
        pairs_only.n = 5;
        pairs_only.classes.push_back({2, 0.5, p0});

        ModelParams triples_only;
        triples_only.n = 5;
        triples_only.classes.push_back({3, 0.5, p0});

        ModelParams mixed;
        mixed.n = 5;
        mixed.classes.push_back({2, 0.5, p0 / 2});
        mixed.classes.push_back({3, 0.5, p0});

        for (const EdgeSet& e : shapes) {
            CAPTURE(p0);
            CAPTURE(e.edge_count());
            CHECK(exact_subgraph_prob(e, 5, pairs_only) ==
                  doctest::Approx(brute_force_prob(e, pairs_only)).epsilon(1e-12));
            CHECK(exact_subgraph_prob(e, 5, triples_only) ==
                  doctest::Approx(brute_force_prob(e, triples_only)).epsilon(1e-12));
            CHECK(exact_subgraph_prob(e, 5, mixed) ==
                  doctest::Approx(brute_force_prob(e, mixed)).epsilon(1e-12));
        }
        // with d = 2 each edge needs its own hyperedge, so the answer is p0^|E|
        CHECK(exact_subgraph_prob(EdgeSet::clique(3), 5, pairs_only) ==
              doctest::Approx(p0 * p0 * p0).epsilon(1e-12));
    }
}

TEST_CASE("exact probability equals the implied form on a single edge") {
    ModelParams two = two_class_30();
    EdgeSet single(std::vector<std::pair<int, int>>{{4, 9}});
    CHECK(exact_subgraph_prob(single, 30, two) ==
          doctest::Approx(implied_prob_exact(30, 2, 2, two)).epsilon(1e-13));
}

TEST_CASE("exact probability guard rails") {
    ModelParams two = two_class_30();
    CHECK_THROWS_WITH_AS(exact_subgraph_prob(EdgeSet::clique(7), 30, two),
                         doctest::Contains("more than 20 edges"), std::runtime_error);
    EdgeSet outside(std::vector<std::pair<int, int>>{{0, 30}});
    CHECK_THROWS_AS(exact_subgraph_prob(outside, 30, two), std::invalid_argument);
}

TEST_CASE("sandwich bounds bracket the exact value") {
    ModelParams two = two_class_30();
    ModelParams tri30;
    tri30.n = 30;
    tri30.classes.push_back({3, 0.5, std::nullopt});

    EdgeSet single(std::vector<std::pair<int, int>>{{0, 1}});
    ProbBounds sb = subgraph_prob_bounds(single, 30, two);
    double implied = implied_prob_exact(30, 2, 2, two);
    CHECK(sb.lower == doctest::Approx(implied).epsilon(1e-13));
    CHECK(sb.upper_raw == doctest::Approx(implied).epsilon(1e-13));
    CHECK(sb.upper_clamped == sb.upper_raw);

    for (const EdgeSet& e : {EdgeSet::clique(3), EdgeSet::clique(4),
                             EdgeSet(std::vector<std::pair<int, int>>{{0, 1}, {1, 2}})}) {
        for (const ModelParams* params : {&two, &tri30}) {
            double exact = exact_subgraph_prob(e, 30, *params);
            ProbBounds b = subgraph_prob_bounds(e, 30, *params);
            CAPTURE(e.edge_count());
            CHECK(b.lower <= exact + 1e-12);
            CHECK(exact <= b.upper_raw + 1e-12);
            CHECK(b.upper_clamped == std::min(1.0, b.upper_raw));
            CHECK(b.lower >= 0.0);
        }
    }
    CHECK_THROWS_AS(subgraph_prob_bounds(EdgeSet(std::vector<std::pair<int, int>>{{2, 31}}), 30, two),
                    std::invalid_argument);
}

TEST_CASE("monte carlo is deterministic and honors overrides") {
    ModelParams two = two_class_30();
    EdgeSet tri = EdgeSet::clique(3);
    McEstimate a = mc_subgraph_prob(tri, two, 2000, 77);
    McEstimate b = mc_subgraph_prob(tri, two, 2000, 77);
    CHECK(a.value == b.value);
    CHECK(a.trials == 2000);
    McEstimate c = mc_subgraph_prob(tri, two, 2000, 78);
    CHECK(a.value != c.value);

    ModelParams always;
    always.n = 10;
    always.classes.push_back({2, 0.5, 1.0});
    CHECK(mc_subgraph_prob(tri, always, 50, 1).value == 1.0);

    ModelParams never;
    never.n = 10;
    never.classes.push_back({3, 0.5, 0.0});
    CHECK(mc_subgraph_prob(tri, never, 50, 1).value == 0.0);

    CHECK_THROWS_AS(mc_subgraph_prob(tri, two, 0, 1), std::invalid_argument);
    EdgeSet outside(std::vector<std::pair<int, int>>{{0, 30}});
    CHECK_THROWS_AS(mc_subgraph_prob(outside, two, 10, 1), std::invalid_argument);
}

TEST_CASE("monte carlo agrees with the exact value") {
    ModelParams two = two_class_30();
    EdgeSet single(std::vector<std::pair<int, int>>{{0, 1}});
    double exact_single = exact_subgraph_prob(single, 30, two);
    McEstimate m1 = mc_subgraph_prob(single, two, 20000, 4242);
    CHECK(std::abs(m1.value - exact_single) <= 4.0 * m1.std_error + 1e-9);

    ModelParams tri20;
    tri20.n = 20;
    tri20.classes.push_back({3, 0.5, std::nullopt});
    EdgeSet tri = EdgeSet::clique(3);
    double exact_tri = exact_subgraph_prob(tri, 20, tri20);
    McEstimate m2 = mc_subgraph_prob(tri, tri20, 20000, 987);
    CHECK(std::abs(m2.value - exact_tri) <= 4.0 * m2.std_error + 1e-9);
}

TEST_CASE("decay follows the cover exponent") {
    ModelParams base;
    base.classes.push_back({3, 0.8, std::nullopt});
    EdgeSet tri = EdgeSet::clique(3);

    ModelParams p50 = base;
    p50.n = 50;
    DeltaProfile profile = delta_profile(p50, 3);
    GValue g = g_value(tri, profile);
    REQUIRE(g.is_finite());
    // three pairwise members beat the triple; built from the same double 0.8
    CHECK(g == GValue(Rational(3) * (rational_of(0.8) - 1)));
    const double target = g.to_double();

    std::vector<double> drift;
    for (int n : {50, 100, 200, 400}) {
        ModelParams p = base;
        p.n = n;
        double prob = exact_subgraph_prob(tri, n, p);
        REQUIRE(prob > 0.0);
        drift.push_back(std::abs(std::log(prob) / std::log(static_cast<double>(n)) - target));
    }
    CHECK(drift.back() <= 0.15);
    CHECK(drift.back() < drift.front());
}
