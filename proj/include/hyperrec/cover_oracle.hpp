#ifndef HYPERREC_COVER_ORACLE_HPP
#define HYPERREC_COVER_ORACLE_HPP

// cover_oracle.hpp - exact cover-optimization exponent g(E, Delta)
//
// A cover of an edge set E is a family of vertex subsets (each of size
// >= 2) whose pair sets jointly contain E, with no removable member.
// g scores a cover by sum over members u of (1 + Delta_|u| - |u|) and
// maximizes over all valid covers; sizes whose Delta is -inf knock a
// cover out entirely.  Everything here is exhaustive enumeration over at
// most 8 vertices plus closed forms for cliques and stars.

#include <optional>
#include <utility>
#include <vector>

#include "hyperrec/model.hpp"
#include "hyperrec/rational.hpp"

namespace hyperrec {

// Members as sorted vertex-id lists; canonical covers sort members
// lexicographically.
using Cover = std::vector<std::vector<int>>;

class EdgeSet {
  public:
    EdgeSet() = default;
    // Pairs are normalized to (a, b) with a < b and deduplicated.
    explicit EdgeSet(std::vector<std::pair<int, int>> pairs);
    static EdgeSet clique(int d);  // K_d on vertices 0..d-1
    static EdgeSet star(int d);    // d vertices, center 0, leaves 1..d-1

    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool contains(int a, int b) const;

  private:
    std::vector<int> vertices_;               // sorted, the union of endpoints
    std::vector<std::pair<int, int>> edges_;  // a < b, sorted
};

// Delta_l for member sizes l = 2..max_size(); -inf outside that range.
class DeltaProfile {
  public:
    DeltaProfile() = default;
    // values[i] is Delta_{i+2}; finite entries must lie in (0, 1).
    explicit DeltaProfile(std::vector<GValue> values);
    static DeltaProfile uniform(int max_size, const Rational& delta);

    int max_size() const { return static_cast<int>(values_.size()) + 1; }
    GValue at(int size) const;
    void exclude(int size);  // force Delta_size to -inf
    // Largest finite entry (delta-star); -inf when every entry is the sentinel.
    GValue star_delta() const;

  private:
    std::vector<GValue> values_;
};

// Delta_l = max over classes with degree >= l of their exponents, -inf once
// l exceeds the largest degree; exclude_at forces that one entry to -inf.
DeltaProfile delta_profile(const ModelParams& params, int max_size,
                           std::optional<int> exclude_at = std::nullopt);

// Covering plus member-minimality.  Members with vertices outside e or
// fewer than 2 vertices simply fail the test.
bool is_valid_cover(const EdgeSet& e, const Cover& c);

// Every valid cover whose members all have size <= size_cap, each exactly
// once, sorted by member count then lexicographically.  Throws
// std::runtime_error("oracle instance too large") beyond 8 vertices.
std::vector<Cover> enumerate_covers(const EdgeSet& e, int size_cap);

// max over valid covers of sum_u (1 + Delta_|u| - |u|); -inf when every
// valid cover touches a sentinel size.
GValue g_value(const EdgeSet& e, const DeltaProfile& delta);

// g_value plus the cover attaining it (first in canonical order on ties;
// empty cover when the value is -inf).
std::pair<GValue, Cover> g_argmax(const EdgeSet& e, const DeltaProfile& delta);

// Same maximum restricted to covers with exactly `members` members.
GValue g_restricted(const EdgeSet& e, const DeltaProfile& delta, int members);

// max{d*delta - 2d + 3, C(d,2)*(delta - 1)}: the best cover of K_d when
// K_d itself is excluded ("d-1 clique plus star" versus all edges).
Rational clique_g_closed_form(int d, const Rational& delta_star);

// (d-1)(delta-1): a star is only covered edge by edge.
Rational star_g_closed_form(int d, const Rational& delta);

// m(delta-1) + 2 - (1 + sqrt(1 + 8(C(d,2) - m + 1)))/2: upper bound on the
// value of any m-member cover of K_d with all members smaller than d.
double relaxation_upper_bound(int d, double delta, int m);

// Exact test value <= relaxation_upper_bound(d, delta, m), free of sqrt
// rounding: with L = value - m(delta-1) - 3/2 and D = 1 + 8(C(d,2)-m+1),
// the bound holds iff L <= 0 and 4L^2 >= D.
bool within_relaxation_bound(const GValue& value, int d, const Rational& delta, int m);

}  // namespace hyperrec

#endif
