#include "hyperrec/probability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperrec/seeding.hpp"

namespace hyperrec {

namespace {

double binomial_real(int n, int k) {
    if (k < 0 || n < 0 || n < k) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double implied_prob_exact(int n, int v_total, int v_sub, const ModelParams& params) {
    params.validate();
    if (v_sub < 2) throw std::invalid_argument("implied prob: subset size must be >= 2");
    if (v_total < v_sub) throw std::invalid_argument("implied prob: |V| must be >= subset size");
    if (n < v_total) throw std::invalid_argument("implied prob: n must be >= |V|");
    double log_miss = 0.0;
    for (const auto& spec : params.classes) {
        if (spec.degree < v_sub) continue;
        const double count = binomial_real(n - v_total, spec.degree - v_sub);
        if (count == 0.0) continue;
        const double p = edge_probability(n, spec);
        if (p >= 1.0) return 1.0;
        log_miss += count * std::log1p(-p);
    }
    return -std::expm1(log_miss);
}

ProbBounds subgraph_prob_bounds(const EdgeSet& e, int n, const ModelParams& params) {
    params.validate();
    if (!e.vertices().empty() && (e.vertices().front() < 0 || e.vertices().back() >= n))
        throw std::invalid_argument("subgraph bounds: vertex id outside [0, n)");
    const int v_total = e.vertex_count();
    const int cap = std::max(2, std::min(params.max_degree(), v_total));
    ProbBounds b;
    for (const Cover& c : enumerate_covers(e, cap)) {
        double prod = 1.0;
        for (const auto& u : c)
            prod *= implied_prob_exact(n, v_total, static_cast<int>(u.size()), params);
        b.lower = std::max(b.lower, prod);
        b.upper_raw += prod;
    }
    b.upper_clamped = std::min(1.0, b.upper_raw);
    return b;
}

double exact_subgraph_prob(const EdgeSet& e, int n, const ModelParams& params) {
    params.validate();
    if (!e.vertices().empty() && (e.vertices().front() < 0 || e.vertices().back() >= n))
        throw std::invalid_argument("exact subgraph prob: vertex id outside [0, n)");
    const int m = e.edge_count();
    if (m > 20) throw std::runtime_error("exact subgraph prob: more than 20 edges");
    const size_t masks = size_t{1} << m;
    const auto& vs = e.vertices();

    // vertex bitmask of each edge over the (<= 40) edge-set vertices
    std::vector<uint64_t> edge_verts(m);
    for (int k = 0; k < m; ++k) {
        auto [a, b] = e.edges()[k];
        int ia = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
        int ib = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), b) - vs.begin());
        edge_verts[k] = (uint64_t{1} << ia) | (uint64_t{1} << ib);
    }
    std::vector<uint64_t> verts_of(masks, 0);
    std::vector<int> span(masks, 0);  // |V(S)| for each subset of edges
    for (size_t s = 1; s < masks; ++s) {
        verts_of[s] = verts_of[s & (s - 1)] | edge_verts[std::countr_zero(s)];
        span[s] = std::popcount(verts_of[s]);
    }

    // log of prod_j (1-p_j)^{N_j(S)} accumulated over classes
    std::vector<double> log_miss(masks, 0.0);
    std::vector<double> nj(masks);
    for (const auto& spec : params.classes) {
        const double p = edge_probability(n, spec);
        // signed counts, then a subset-sum (zeta) transform turns the
        // inclusion-exclusion terms into N_j(S)
        nj[0] = 0.0;
        for (size_t s = 1; s < masks; ++s) {
            int v = span[s];
            double c = binomial_real(n - v, spec.degree - v);
            nj[s] = (std::popcount(s) % 2 == 1) ? c : -c;
        }
        for (int b = 0; b < m; ++b)
            for (size_t s = 0; s < masks; ++s)
                if (s >> b & 1) nj[s] += nj[s ^ (size_t{1} << b)];
        if (p >= 1.0) {
            for (size_t s = 0; s < masks; ++s)
                if (nj[s] > 0.5) log_miss[s] = -std::numeric_limits<double>::infinity();
        } else if (p > 0.0) {
            const double lq = std::log1p(-p);
            for (size_t s = 0; s < masks; ++s) log_miss[s] += nj[s] * lq;
        }
    }
    double total = 0.0;
    for (size_t s = 0; s < masks; ++s) {
        double term = std::exp(log_miss[s]);
        total += (std::popcount(s) % 2 == 0) ? term : -term;
    }
    if (total < 0.0) total = 0.0;
    if (total > 1.0) total = 1.0;
    return total;
}

McEstimate mc_subgraph_prob(const EdgeSet& e, const ModelParams& params, long long trials,
                            uint64_t seed) {
    params.validate();
    if (trials < 1) throw std::invalid_argument("mc subgraph prob: trials must be >= 1");
    if (!e.vertices().empty() && (e.vertices().front() < 0 || e.vertices().back() >= params.n))
        throw std::invalid_argument("mc subgraph prob: vertex id outside [0, n)");

    const auto& vs = e.vertices();
    const int nv = e.vertex_count();
    std::vector<std::vector<int>> bit(nv, std::vector<int>(nv, -1));
    for (int k = 0; k < e.edge_count(); ++k) {
        auto [a, b] = e.edges()[k];
        int ia = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), a) - vs.begin());
        int ib = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), b) - vs.begin());
        bit[ia][ib] = bit[ib][ia] = k;
    }
    const uint32_t full = e.edge_count() < 32 ? (uint32_t{1} << e.edge_count()) - 1 : ~uint32_t{0};

    long long hits = 0;
    std::vector<int> touched;
    for (long long t = 0; t < trials; ++t) {
        Hypergraph h = sample_hypergraph(params, derive_seed(seed, static_cast<uint64_t>(t)));
        uint32_t covered = 0;
        for (const auto& cls : h.classes) {
            for (const auto& edge : cls.edges) {
                touched.clear();
                for (int v : edge) {
                    auto it = std::lower_bound(vs.begin(), vs.end(), v);
                    if (it != vs.end() && *it == v)
                        touched.push_back(static_cast<int>(it - vs.begin()));
                }
                for (size_t i = 0; i < touched.size(); ++i)
                    for (size_t j = i + 1; j < touched.size(); ++j) {
                        int k = bit[touched[i]][touched[j]];
                        if (k >= 0) covered |= uint32_t{1} << k;
                    }
                if (covered == full) break;
            }
            if (covered == full) break;
        }
        if (covered == full) ++hits;
    }
    McEstimate m;
    m.trials = trials;
    m.value = static_cast<double>(hits) / static_cast<double>(trials);
    m.std_error = std::sqrt(m.value * (1.0 - m.value) / static_cast<double>(trials));
    return m;
}

}  // namespace hyperrec
