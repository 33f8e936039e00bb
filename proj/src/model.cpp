#include "hyperrec/model.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "hyperrec/seeding.hpp"
#include "hyperrec/text.hpp"

namespace hyperrec {

namespace {

// Keeps worst-case sampling memory and time within a few seconds.
constexpr uint64_t kMaxSampledEdges = 20'000'000;

}  // namespace

void ModelParams::validate() const {
    if (n < 2) throw std::invalid_argument("model params: n must be >= 2");
    if (classes.empty()) throw std::invalid_argument("model params: need at least one degree class");
    int prev = 1;
    for (const auto& c : classes) {
        if (c.degree < 2) throw std::invalid_argument("model params: class degree must be >= 2");
        if (c.degree <= prev) throw std::invalid_argument("model params: class degrees must be strictly increasing");
        if (c.degree > n) throw std::invalid_argument("model params: class degree exceeds n");
        if (!(c.exponent > 0.0 && c.exponent < 1.0))
            throw std::invalid_argument("model params: exponent must lie in (0, 1)");
        if (c.probability_override) {
            double p = *c.probability_override;
            if (!(p >= 0.0 && p <= 1.0))
                throw std::invalid_argument("model params: probability override must lie in [0, 1]");
        }
        prev = c.degree;
    }
}

int ModelParams::max_degree() const {
    return classes.empty() ? 0 : classes.back().degree;
}

int ModelParams::class_index(int degree) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].degree == degree) return static_cast<int>(i);
    return -1;
}

uint64_t Hypergraph::total_edges() const {
    uint64_t t = 0;
    for (const auto& c : classes) t += c.edges.size();
    return t;
}

ProjectedGraph::ProjectedGraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw std::invalid_argument("projected graph: n must be >= 1");
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

void ProjectedGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("projected graph: vertex out of range");
}

void ProjectedGraph::add_edge(int a, int b) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw std::invalid_argument("projected graph: self-loop");
    bits_[static_cast<size_t>(a) * words_ + b / 64] |= uint64_t{1} << (b % 64);
    bits_[static_cast<size_t>(b) * words_ + a / 64] |= uint64_t{1} << (a % 64);
}

bool ProjectedGraph::has_edge(int a, int b) const {
    check_vertex(a);
    check_vertex(b);
    return (bits_[static_cast<size_t>(a) * words_ + b / 64] >> (b % 64)) & 1;
}

int ProjectedGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

long long ProjectedGraph::edge_count() const {
    long long total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> ProjectedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
        const uint64_t* r = row(a);
        for (int w = 0; w < words_; ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int b = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (b > a) out.emplace_back(a, b);
            }
        }
    }
    return out;
}

double edge_probability(int n, const DegreeClassSpec& spec) {
    if (spec.probability_override) return *spec.probability_override;
    double p = std::pow(static_cast<double>(n), 1.0 - spec.degree + spec.exponent);
    return p < 1.0 ? p : 1.0;
}

uint64_t binomial_checked(uint64_t n, int k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    if (static_cast<uint64_t>(k) > n) return 0;
    uint64_t kk = static_cast<uint64_t>(k);
    if (kk > n - kk) kk = n - kk;
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= kk; ++i) {
        r = r * (n - kk + i) / i;
        if (r > static_cast<unsigned __int128>(UINT64_MAX))
            throw std::runtime_error("instance too large: binomial coefficient overflows 64 bits");
    }
    return static_cast<uint64_t>(r);
}

namespace {

// Draws one uniform d-subset of [0, n), sorted ascending.
void draw_subset(std::mt19937_64& rng, int n, int d, std::vector<int>& ids) {
    for (;;) {
        ids.clear();
        for (int i = 0; i < d; ++i) ids.push_back(static_cast<int>(uniform_below(rng, n)));
        std::sort(ids.begin(), ids.end());
        bool dup = false;
        for (int i = 1; i < d; ++i)
            if (ids[i] == ids[i - 1]) { dup = true; break; }
        if (!dup) return;
    }
}

uint64_t pack_ids(const std::vector<int>& ids, int bits) {
    uint64_t key = 0;
    for (int v : ids) key = (key << bits) | static_cast<uint64_t>(v);
    return key;
}

}  // namespace

Hypergraph sample_hypergraph(const ModelParams& params, uint64_t seed) {
    params.validate();
    Hypergraph h;
    h.n = params.n;
    for (const auto& spec : params.classes) {
        const double p = edge_probability(params.n, spec);
        const uint64_t candidates = binomial_checked(params.n, spec.degree);
        std::mt19937_64 rng(derive_seed(seed, static_cast<uint64_t>(spec.degree)));
        const uint64_t want = binomial_draw(rng, candidates, p);
        if (want > kMaxSampledEdges)
            throw std::runtime_error("instance too large: expected edge count exceeds sampling budget");

        HyperedgeClass cls;
        cls.degree = spec.degree;
        cls.exponent = spec.exponent;
        cls.probability = p;
        cls.edges.reserve(want);

        const int id_bits = params.n > 1 ? std::bit_width(static_cast<unsigned>(params.n - 1)) : 1;
        const bool packable = id_bits * spec.degree <= 64;
        std::set<uint64_t> seen_packed;
        std::set<std::vector<int>> seen_vec;
        std::vector<int> ids;
        while (cls.edges.size() < want) {
            draw_subset(rng, params.n, spec.degree, ids);
            bool fresh = packable ? seen_packed.insert(pack_ids(ids, id_bits)).second
                                  : seen_vec.insert(ids).second;
            if (fresh) cls.edges.push_back(ids);
        }
        std::sort(cls.edges.begin(), cls.edges.end());
        h.classes.push_back(std::move(cls));
    }
    return h;
}

ProjectedGraph project(const Hypergraph& h) {
    ProjectedGraph g(h.n);
    for (const auto& cls : h.classes)
        for (const auto& e : cls.edges)
            for (size_t i = 0; i < e.size(); ++i)
                for (size_t j = i + 1; j < e.size(); ++j) g.add_edge(e[i], e[j]);
    return g;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "# n=" << h.n << "\n";
    for (const auto& cls : h.classes) {
        out << "# class d=" << cls.degree << " delta=" << format_double(cls.exponent)
            << " p=" << format_double(cls.probability) << "\n";
        for (const auto& e : cls.edges) {
            for (size_t i = 0; i < e.size(); ++i) {
                if (i) out << ' ';
                out << e[i];
            }
            out << "\n";
        }
    }
}

namespace {

bool parse_key(const std::string& line, const std::string& key, std::string& rest) {
    if (line.compare(0, key.size(), key) != 0) return false;
    rest = line.substr(key.size());
    return true;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    Hypergraph h;
    h.n = -1;
    std::string line;
    int max_id = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string rest;
        if (parse_key(line, "# n=", rest)) {
            h.n = std::stoi(rest);
            continue;
        }
        if (parse_key(line, "# class ", rest)) {
            HyperedgeClass cls;
            std::istringstream fields(rest);
            std::string tok;
            while (fields >> tok) {
                std::string val;
                if (parse_key(tok, "d=", val)) cls.degree = std::stoi(val);
                else if (parse_key(tok, "delta=", val)) cls.exponent = std::stod(val);
                else if (parse_key(tok, "p=", val)) cls.probability = std::stod(val);
                else throw std::runtime_error("hypergraph parse: unknown class field '" + tok + "'");
            }
            if (cls.degree < 2) throw std::runtime_error("hypergraph parse: class degree must be >= 2");
            h.classes.push_back(std::move(cls));
            continue;
        }
        if (line[0] == '#') continue;
        if (h.classes.empty()) throw std::runtime_error("hypergraph parse: edge line before any class header");
        std::istringstream fields(line);
        std::vector<int> ids;
        int v;
        while (fields >> v) {
            if (v < 0) throw std::runtime_error("hypergraph parse: negative vertex id");
            max_id = std::max(max_id, v);
            ids.push_back(v);
        }
        if (static_cast<int>(ids.size()) != h.classes.back().degree)
            throw std::runtime_error("hypergraph parse: edge arity does not match class degree");
        std::sort(ids.begin(), ids.end());
        for (size_t i = 1; i < ids.size(); ++i)
            if (ids[i] == ids[i - 1]) throw std::runtime_error("hypergraph parse: repeated vertex in edge");
        h.classes.back().edges.push_back(std::move(ids));
    }
    if (h.n < 0) h.n = max_id + 1;
    if (max_id >= h.n) throw std::runtime_error("hypergraph parse: vertex id exceeds n");
    for (auto& cls : h.classes) std::sort(cls.edges.begin(), cls.edges.end());
    return h;
}

void write_graph(std::ostream& out, const ProjectedGraph& g) {
    out << "# n=" << g.vertex_count() << "\n";
    for (auto [a, b] : g.edges()) out << a << ' ' << b << "\n";
}

ProjectedGraph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    int max_id = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string rest;
        if (parse_key(line, "# n=", rest)) {
            n = std::stoi(rest);
            continue;
        }
        if (line[0] == '#') continue;
        std::istringstream fields(line);
        int a, b;
        if (!(fields >> a >> b)) throw std::runtime_error("graph parse: expected two vertex ids per line");
        if (a < 0 || b < 0) throw std::runtime_error("graph parse: negative vertex id");
        max_id = std::max(max_id, std::max(a, b));
        edges.emplace_back(a, b);
    }
    if (n < 0) n = max_id + 1;
    if (max_id >= n) throw std::runtime_error("graph parse: vertex id exceeds n");
    ProjectedGraph g(std::max(n, 1));
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

}  // namespace hyperrec
