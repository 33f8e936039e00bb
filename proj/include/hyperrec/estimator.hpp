#ifndef HYPERREC_ESTIMATOR_HPP
#define HYPERREC_ESTIMATOR_HPP

// estimator.hpp - recover degree-d hyperedges from a projected graph
//
// The estimate for the degree-d class is the set of d-vertex cliques that
// are maximal in the whole graph (no single vertex extends them).  Found
// with Bron-Kerbosch over a degeneracy ordering with pivoting, keeping
// only cliques of exactly the requested size.

#include <iosfwd>
#include <vector>

#include "hyperrec/model.hpp"

namespace hyperrec {

struct CliqueSet {
    int size = 0;                          // clique cardinality d
    std::vector<std::vector<int>> cliques; // each sorted ascending; list lexicographic
};

// All maximal cliques with exactly d vertices.  Requires 2 <= d <= n.
CliqueSet maximal_cliques_of_size(const ProjectedGraph& g, int d);

// The degree-d recovery estimate; alias for the above.
CliqueSet recover(const ProjectedGraph& g, int d);

// One clique per line, vertex ids ascending, preceded by "# d=<size>".
void write_clique_set(std::ostream& out, const CliqueSet& cs);
CliqueSet read_clique_set(std::istream& in);

}  // namespace hyperrec

#endif
