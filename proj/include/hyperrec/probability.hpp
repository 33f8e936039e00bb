#ifndef HYPERREC_PROBABILITY_HPP
#define HYPERREC_PROBABILITY_HPP

// probability.hpp - exact subgraph presence probabilities and MC checks
//
// implied_prob_exact: probability that some sampled hyperedge contains a
// fixed d'-subset of a fixed |V|-set, with all remaining hyperedge slots
// drawn outside the |V|-set:
//   1 - prod over classes with d_j >= d' of (1 - p_j)^C(n-|V|, d_j-d').
// subgraph_prob_bounds combines those factors over valid covers of an
// edge set to sandwich P(E in projection): the best single cover from
// below, the sum over covers from above.

#include <cstdint>

#include "hyperrec/cover_oracle.hpp"
#include "hyperrec/model.hpp"

namespace hyperrec {

struct ProbBounds {
    double lower = 0.0;
    double upper_raw = 0.0;      // cover-sum bound, may exceed 1
    double upper_clamped = 0.0;  // min(1, upper_raw)
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long long trials = 0;
};

// Requires 2 <= v_sub <= v_total <= n.  Returns 0 when v_sub exceeds every
// class degree.
double implied_prob_exact(int n, int v_total, int v_sub, const ModelParams& params);

// Sandwich bounds on the probability that every edge of e appears in the
// projection of a sampled hypergraph on n vertices.  Vertex ids of e must
// lie in [0, n).  Inherits the 8-vertex oracle limit.
ProbBounds subgraph_prob_bounds(const EdgeSet& e, int n, const ModelParams& params);

// Exact P(E in projection) by inclusion-exclusion over the edge subsets:
//   sum over S subset of E of (-1)^|S| prod_j (1-p_j)^{N_j(S)}
// where N_j(S) counts class-j hyperedges containing at least one pair of
// S.  Cost 2^|E|; requires |E| <= 20.
double exact_subgraph_prob(const EdgeSet& e, int n, const ModelParams& params);

// Fraction of `trials` sampled hypergraphs whose projection contains every
// edge of e, with binomial standard error sqrt(p(1-p)/trials).
// Deterministic given seed; trial t uses derive_seed(seed, t).
McEstimate mc_subgraph_prob(const EdgeSet& e, const ModelParams& params, long long trials,
                            uint64_t seed);

}  // namespace hyperrec

#endif
