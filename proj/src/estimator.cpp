#include "hyperrec/estimator.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hyperrec {

namespace {

// Smallest-last (degeneracy) ordering via the standard bucket peel.
std::vector<int> degeneracy_order(const ProjectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), vert(n), pos(n);
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        maxdeg = std::max(maxdeg, deg[v]);
    }
    std::vector<int> bin(maxdeg + 1, 0);
    for (int v = 0; v < n; ++v) ++bin[deg[v]];
    int start = 0;
    for (int d = 0; d <= maxdeg; ++d) {
        int c = bin[d];
        bin[d] = start;
        start += c;
    }
    for (int v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (int d = maxdeg; d > 0; --d) bin[d] = bin[d - 1];
    bin[0] = 0;

    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        const uint64_t* r = g.row(v);
        for (int w = 0; w < g.words(); ++w) {
            uint64_t bits = r[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (deg[u] > deg[v]) {
                    int du = deg[u], pu = pos[u];
                    int pw = bin[du], vw = vert[pw];
                    if (u != vw) {
                        std::swap(vert[pu], vert[pw]);
                        pos[u] = pw;
                        pos[vw] = pu;
                    }
                    ++bin[du];
                    --deg[u];
                }
            }
        }
    }
    return vert;
}

struct Enumerator {
    const ProjectedGraph& g;
    int d;
    int W;
    std::vector<std::vector<int>>& out;
    std::vector<int> R;

    static bool none(const std::vector<uint64_t>& b) {
        for (uint64_t w : b)
            if (w) return false;
        return true;
    }
    static int count(const std::vector<uint64_t>& b) {
        int c = 0;
        for (uint64_t w : b) c += std::popcount(w);
        return c;
    }
    static bool test(const std::vector<uint64_t>& b, int v) {
        return (b[v / 64] >> (v % 64)) & 1;
    }
    static void clear(std::vector<uint64_t>& b, int v) { b[v / 64] &= ~(uint64_t{1} << (v % 64)); }
    static void set(std::vector<uint64_t>& b, int v) { b[v / 64] |= uint64_t{1} << (v % 64); }

    std::vector<uint64_t> intersect(const std::vector<uint64_t>& b, int v) const {
        std::vector<uint64_t> r(W);
        const uint64_t* adj = g.row(v);
        for (int w = 0; w < W; ++w) r[w] = b[w] & adj[w];
        return r;
    }
    int intersect_count(const std::vector<uint64_t>& b, int v) const {
        const uint64_t* adj = g.row(v);
        int c = 0;
        for (int w = 0; w < W; ++w) c += std::popcount(b[w] & adj[w]);
        return c;
    }

    void expand(std::vector<uint64_t> P, std::vector<uint64_t> X) {
        if (none(P)) {
            if (none(X) && static_cast<int>(R.size()) == d) out.push_back(R);
            return;
        }
        if (static_cast<int>(R.size()) + count(P) < d) return;
        if (static_cast<int>(R.size()) >= d) return;

        // Pivot on the vertex of P|X dominating the most of P.
        int pivot = -1, best = -1;
        for (int w = 0; w < W; ++w) {
            uint64_t bits = P[w] | X[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                int c = intersect_count(P, u);
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
        }
        const uint64_t* padj = g.row(pivot);
        std::vector<int> cand;
        for (int w = 0; w < W; ++w) {
            uint64_t bits = P[w] & ~padj[w];
            while (bits) {
                cand.push_back(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        for (int v : cand) {
            R.push_back(v);
            expand(intersect(P, v), intersect(X, v));
            R.pop_back();
            clear(P, v);
            set(X, v);
        }
    }
};

}  // namespace

CliqueSet maximal_cliques_of_size(const ProjectedGraph& g, int d) {
    const int n = g.vertex_count();
    if (d < 2 || d > n) throw std::invalid_argument("clique size must lie in [2, n]");
    CliqueSet cs;
    cs.size = d;
    const int W = g.words();
    std::vector<int> order = degeneracy_order(g);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    Enumerator en{g, d, W, cs.cliques, {}};
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        std::vector<uint64_t> P(W, 0), X(W, 0);
        const uint64_t* adj = g.row(v);
        for (int w = 0; w < W; ++w) {
            uint64_t bits = adj[w];
            while (bits) {
                int u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                if (rank[u] > i) Enumerator::set(P, u);
                else Enumerator::set(X, u);
            }
        }
        en.R.assign(1, v);
        en.expand(std::move(P), std::move(X));
    }
    for (auto& c : cs.cliques) std::sort(c.begin(), c.end());
    std::sort(cs.cliques.begin(), cs.cliques.end());
    return cs;
}

CliqueSet recover(const ProjectedGraph& g, int d) { return maximal_cliques_of_size(g, d); }

void write_clique_set(std::ostream& out, const CliqueSet& cs) {
    out << "# d=" << cs.size << "\n";
    for (const auto& c : cs.cliques) {
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) out << ' ';
            out << c[i];
        }
        out << "\n";
    }
}

CliqueSet read_clique_set(std::istream& in) {
    CliqueSet cs;
    cs.size = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("# d=", 0) == 0) {
            cs.size = std::stoi(line.substr(4));
            continue;
        }
        if (line[0] == '#') continue;
        std::istringstream fields(line);
        std::vector<int> ids;
        int v;
        while (fields >> v) ids.push_back(v);
        if (cs.size < 0) cs.size = static_cast<int>(ids.size());
        if (static_cast<int>(ids.size()) != cs.size)
            throw std::runtime_error("clique set parse: row arity does not match d");
        std::sort(ids.begin(), ids.end());
        cs.cliques.push_back(std::move(ids));
    }
    if (cs.size < 0) throw std::runtime_error("clique set parse: missing header and no rows");
    std::sort(cs.cliques.begin(), cs.cliques.end());
    return cs;
}

}  // namespace hyperrec
