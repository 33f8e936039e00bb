#ifndef HYPERREC_MODEL_HPP
#define HYPERREC_MODEL_HPP

// model.hpp - heterogeneous random hypergraph model and pairwise projection
//
// A model instance has n vertices and k degree classes with strictly
// increasing degrees.  Each class-j hyperedge (a degree_j-subset of the
// vertices) is present independently with probability
//   p_j = n^(1 - degree_j + exponent_j),
// clamped to 1, unless an explicit probability override is given.
// The projected graph joins two vertices iff some sampled hyperedge
// contains both.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace hyperrec {

struct DegreeClassSpec {
    int degree = 2;
    double exponent = 0.5;
    std::optional<double> probability_override;
};

struct ModelParams {
    int n = 0;
    std::vector<DegreeClassSpec> classes;

    // Throws std::invalid_argument on malformed parameters.
    void validate() const;
    int max_degree() const;
    // Index of the class with the given degree, or -1.
    int class_index(int degree) const;
};

struct HyperedgeClass {
    int degree = 0;
    double exponent = 0.0;
    double probability = 0.0;
    std::vector<std::vector<int>> edges;  // each sorted ascending; list lexicographic
};

struct Hypergraph {
    int n = 0;
    std::vector<HyperedgeClass> classes;

    uint64_t total_edges() const;
};

class ProjectedGraph {
  public:
    ProjectedGraph() : n_(0), words_(0) {}
    explicit ProjectedGraph(int n);

    int vertex_count() const { return n_; }
    int words() const { return words_; }
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const;
    int degree(int v) const;
    long long edge_count() const;
    // Edges as (a, b) with a < b, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    // Adjacency row of v as a bitset over words() 64-bit words.
    const uint64_t* row(int v) const { return bits_.data() + static_cast<size_t>(v) * words_; }

  private:
    void check_vertex(int v) const;
    int n_;
    int words_;
    std::vector<uint64_t> bits_;
};

// Per-class presence probability: override if given, else n^(1-d+delta)
// clamped to [0, 1].
double edge_probability(int n, const DegreeClassSpec& spec);

// Exact binomial coefficient; throws std::runtime_error("instance too large...")
// if the value does not fit in uint64_t.
uint64_t binomial_checked(uint64_t n, int k);

// Samples every class independently.  Class substreams are keyed by
// (seed, degree), so adding or removing one class never perturbs the
// edges drawn for another.
Hypergraph sample_hypergraph(const ModelParams& params, uint64_t seed);

ProjectedGraph project(const Hypergraph& h);

// Text round-trip.  Hypergraph format:
//   # n=<n>
//   # class d=<degree> delta=<exponent> p=<probability>
//   <v1> <v2> ... <vd>        (one hyperedge per line)
// Graph format: "# n=<n>" then one "a b" pair per line with a < b.
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph read_hypergraph(std::istream& in);
void write_graph(std::ostream& out, const ProjectedGraph& g);
ProjectedGraph read_graph(std::istream& in);

}  // namespace hyperrec

#endif
