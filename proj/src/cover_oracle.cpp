#include "hyperrec/cover_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace hyperrec {

namespace {

constexpr int kOracleLimit = 8;

void check_oracle_limit(const EdgeSet& e) {
    if (e.vertex_count() > kOracleLimit)
        throw std::runtime_error("oracle instance too large: more than 8 vertices");
}

// Exhaustive cover search over one edge set.  Masks index the edge-set
// vertices in sorted order.  Recursion always branches on the first
// uncovered edge; a candidate tried at a node is banned inside the
// subtrees of its later siblings, so each covering family appears exactly
// once.  Depth is bounded by |E| because every step covers a new edge.
struct CoverSearch {
    const EdgeSet& e;
    int nv;
    int ne;
    uint32_t full = 0;
    std::vector<uint32_t> covers_of_mask;        // subset mask -> bitmask of covered edges
    std::vector<std::vector<uint16_t>> cand;     // per edge, ascending candidate masks
    std::vector<uint16_t> fam;
    std::vector<char> banned;
    int max_members;
    std::function<void(const std::vector<uint16_t>&)> sink;

    CoverSearch(const EdgeSet& eset, const std::vector<char>& size_allowed, int max_members_)
        : e(eset),
          nv(eset.vertex_count()),
          ne(eset.edge_count()),
          max_members(max_members_) {
        check_oracle_limit(e);
        full = ne < 32 ? (uint32_t{1} << ne) - 1 : ~uint32_t{0};

        std::vector<int> index_of(nv == 0 ? 0 : e.vertices().back() + 1, -1);
        for (int i = 0; i < nv; ++i) index_of[e.vertices()[i]] = i;

        const uint32_t masks = uint32_t{1} << nv;
        covers_of_mask.assign(masks, 0);
        for (int k = 0; k < ne; ++k) {
            auto [a, b] = e.edges()[k];
            uint32_t need = (uint32_t{1} << index_of[a]) | (uint32_t{1} << index_of[b]);
            for (uint32_t s = 0; s < masks; ++s)
                if ((s & need) == need) covers_of_mask[s] |= uint32_t{1} << k;
        }
        cand.assign(ne, {});
        for (uint32_t s = 0; s < masks; ++s) {
            int sz = std::popcount(s);
            if (sz < 2 || sz >= static_cast<int>(size_allowed.size()) || !size_allowed[sz]) continue;
            uint32_t cov = covers_of_mask[s];
            while (cov) {
                cand[std::countr_zero(cov)].push_back(static_cast<uint16_t>(s));
                cov &= cov - 1;
            }
        }
        banned.assign(masks, 0);
    }

    bool is_minimal(const std::vector<uint16_t>& f) const {
        for (size_t i = 0; i < f.size(); ++i) {
            uint32_t others = 0;
            for (size_t j = 0; j < f.size(); ++j)
                if (j != i) others |= covers_of_mask[f[j]];
            if ((others & full) == full) return false;
        }
        return true;
    }

    void run(std::function<void(const std::vector<uint16_t>&)> s) {
        sink = std::move(s);
        rec(0);
    }

    void rec(uint32_t covered) {
        if (covered == full) {
            sink(fam);
            return;
        }
        if (static_cast<int>(fam.size()) >= max_members) return;
        int edge = std::countr_zero(~covered & full);
        std::vector<uint16_t> tried;
        for (uint16_t s : cand[edge]) {
            if (banned[s]) continue;
            fam.push_back(s);
            rec(covered | covers_of_mask[s]);
            fam.pop_back();
            banned[s] = 1;
            tried.push_back(s);
        }
        for (uint16_t s : tried) banned[s] = 0;
    }

    std::vector<int> mask_to_ids(uint16_t s) const {
        std::vector<int> ids;
        uint32_t bits = s;
        while (bits) {
            ids.push_back(e.vertices()[std::countr_zero(bits)]);
            bits &= bits - 1;
        }
        return ids;
    }

    Cover to_cover(const std::vector<uint16_t>& f) const {
        Cover c;
        c.reserve(f.size());
        for (uint16_t s : f) c.push_back(mask_to_ids(s));
        std::sort(c.begin(), c.end());
        return c;
    }
};

bool cover_less(const Cover& a, const Cover& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<char> allowed_from_profile(const DeltaProfile& delta, int nv) {
    std::vector<char> allowed(nv + 1, 0);
    for (int sz = 2; sz <= nv; ++sz)
        if (delta.at(sz).is_finite()) allowed[sz] = 1;
    return allowed;
}

Rational cover_value(const DeltaProfile& delta, const std::vector<uint16_t>& f) {
    Rational v = 0;
    for (uint16_t s : f) {
        int sz = std::popcount(static_cast<uint32_t>(s));
        v += Rational(1 - sz) + delta.at(sz).value();
    }
    return v;
}

}  // namespace

EdgeSet::EdgeSet(std::vector<std::pair<int, int>> pairs) {
    for (auto& [a, b] : pairs) {
        if (a == b) throw std::invalid_argument("edge set: self-loop");
        if (a < 0 || b < 0) throw std::invalid_argument("edge set: negative vertex id");
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    edges_ = std::move(pairs);
    for (auto [a, b] : edges_) {
        vertices_.push_back(a);
        vertices_.push_back(b);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

EdgeSet EdgeSet::clique(int d) {
    if (d < 2) throw std::invalid_argument("clique edge set needs d >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) pairs.emplace_back(a, b);
    return EdgeSet(std::move(pairs));
}

EdgeSet EdgeSet::star(int d) {
    if (d < 2) throw std::invalid_argument("star edge set needs d >= 2");
    std::vector<std::pair<int, int>> pairs;
    for (int b = 1; b < d; ++b) pairs.emplace_back(0, b);
    return EdgeSet(std::move(pairs));
}

bool EdgeSet::contains(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

DeltaProfile::DeltaProfile(std::vector<GValue> values) : values_(std::move(values)) {
    for (const auto& v : values_)
        if (v.is_finite() && !(v.value() > 0 && v.value() < 1))
            throw std::invalid_argument("delta profile: finite values must lie in (0, 1)");
}

DeltaProfile DeltaProfile::uniform(int max_size, const Rational& delta) {
    if (max_size < 2) throw std::invalid_argument("delta profile: max size must be >= 2");
    return DeltaProfile(std::vector<GValue>(max_size - 1, GValue(delta)));
}

GValue DeltaProfile::at(int size) const {
    if (size < 2 || size > max_size()) return GValue::neg_inf();
    return values_[size - 2];
}

void DeltaProfile::exclude(int size) {
    if (size < 2 || size > max_size()) throw std::invalid_argument("delta profile: size out of range");
    values_[size - 2] = GValue::neg_inf();
}

GValue DeltaProfile::star_delta() const {
    GValue best = GValue::neg_inf();
    for (const auto& v : values_) best = max(best, v);
    return best;
}

DeltaProfile delta_profile(const ModelParams& params, int max_size,
                           std::optional<int> exclude_at) {
    params.validate();
    if (max_size < 2) throw std::invalid_argument("delta profile: max size must be >= 2");
    std::vector<GValue> values;
    for (int sz = 2; sz <= max_size; ++sz) {
        GValue best = GValue::neg_inf();
        for (const auto& c : params.classes)
            if (c.degree >= sz) best = max(best, GValue(rational_of(c.exponent)));
        values.push_back(best);
    }
    DeltaProfile profile{std::move(values)};
    if (exclude_at) profile.exclude(*exclude_at);
    return profile;
}

bool is_valid_cover(const EdgeSet& e, const Cover& c) {
    // covering
    for (auto [a, b] : e.edges()) {
        bool hit = false;
        for (const auto& u : c) {
            bool has_a = std::find(u.begin(), u.end(), a) != u.end();
            bool has_b = std::find(u.begin(), u.end(), b) != u.end();
            if (has_a && has_b) {
                hit = true;
                break;
            }
        }
        if (!hit) return false;
    }
    // members must be >= 2 vertices drawn from V
    for (const auto& u : c) {
        if (u.size() < 2) return false;
        for (int v : u)
            if (!std::binary_search(e.vertices().begin(), e.vertices().end(), v)) return false;
        std::vector<int> sorted_u = u;
        std::sort(sorted_u.begin(), sorted_u.end());
        if (std::adjacent_find(sorted_u.begin(), sorted_u.end()) != sorted_u.end()) return false;
    }
    // minimality
    for (size_t i = 0; i < c.size(); ++i) {
        bool all_covered = true;
        for (auto [a, b] : e.edges()) {
            bool hit = false;
            for (size_t j = 0; j < c.size() && !hit; ++j) {
                if (j == i) continue;
                const auto& u = c[j];
                if (std::find(u.begin(), u.end(), a) != u.end() &&
                    std::find(u.begin(), u.end(), b) != u.end())
                    hit = true;
            }
            if (!hit) {
                all_covered = false;
                break;
            }
        }
        if (all_covered) return false;
    }
    return true;
}

std::vector<Cover> enumerate_covers(const EdgeSet& e, int size_cap) {
    if (size_cap < 2) throw std::invalid_argument("enumerate covers: size cap must be >= 2");
    check_oracle_limit(e);
    const int nv = e.vertex_count();
    std::vector<char> allowed(nv + 1, 0);
    for (int sz = 2; sz <= std::min(size_cap, nv); ++sz) allowed[sz] = 1;

    std::vector<Cover> out;
    CoverSearch search(e, allowed, e.edge_count());
    search.run([&](const std::vector<uint16_t>& f) {
        if (search.is_minimal(f)) out.push_back(search.to_cover(f));
    });
    std::sort(out.begin(), out.end(), cover_less);
    return out;
}

std::pair<GValue, Cover> g_argmax(const EdgeSet& e, const DeltaProfile& delta) {
    check_oracle_limit(e);
    std::vector<char> allowed = allowed_from_profile(delta, e.vertex_count());
    bool found = false;
    Rational best = 0;
    Cover best_cover;

    CoverSearch search(e, allowed, e.edge_count());
    search.run([&](const std::vector<uint16_t>& f) {
        if (!search.is_minimal(f)) return;
        Rational v = cover_value(delta, f);
        if (!found || v > best) {
            found = true;
            best = v;
            best_cover = search.to_cover(f);
        } else if (v == best) {
            Cover c = search.to_cover(f);
            if (cover_less(c, best_cover)) best_cover = std::move(c);
        }
    });
    if (!found) return {GValue::neg_inf(), {}};
    return {GValue(best), best_cover};
}

GValue g_value(const EdgeSet& e, const DeltaProfile& delta) {
    return g_argmax(e, delta).first;
}

GValue g_restricted(const EdgeSet& e, const DeltaProfile& delta, int members) {
    check_oracle_limit(e);
    const int nv = e.vertex_count();
    const int max_members = nv * (nv - 1) / 2;
    if (members < 1 || (max_members > 0 && members > max_members))
        throw std::invalid_argument("g restricted: member count must lie in [1, C(|V|,2)]");
    std::vector<char> allowed = allowed_from_profile(delta, nv);
    bool found = false;
    Rational best = 0;

    CoverSearch search(e, allowed, members);
    search.run([&](const std::vector<uint16_t>& f) {
        if (static_cast<int>(f.size()) != members || !search.is_minimal(f)) return;
        Rational v = cover_value(delta, f);
        if (!found || v > best) {
            found = true;
            best = v;
        }
    });
    return found ? GValue(best) : GValue::neg_inf();
}

Rational clique_g_closed_form(int d, const Rational& delta_star) {
    if (d < 3) throw std::invalid_argument("clique closed form needs d >= 3");
    Rational a = delta_star * d - 2 * d + 3;
    Rational b = rational_frac(static_cast<long long>(d) * (d - 1), 2) * (delta_star - 1);
    return std::max(a, b);
}

Rational star_g_closed_form(int d, const Rational& delta) {
    if (d < 2) throw std::invalid_argument("star closed form needs d >= 2");
    return Rational(d - 1) * (delta - 1);
}

double relaxation_upper_bound(int d, double delta, int m) {
    const int c2 = d * (d - 1) / 2;
    if (d < 3 || m < 2 || m > c2)
        throw std::invalid_argument("relaxation bound: need d >= 3 and 2 <= m <= C(d,2)");
    double disc = 1.0 + 8.0 * (c2 - m + 1);
    return m * (delta - 1.0) + 2.0 - (1.0 + std::sqrt(disc)) / 2.0;
}

bool within_relaxation_bound(const GValue& value, int d, const Rational& delta, int m) {
    const int c2 = d * (d - 1) / 2;
    if (d < 3 || m < 2 || m > c2)
        throw std::invalid_argument("relaxation bound: need d >= 3 and 2 <= m <= C(d,2)");
    if (!value.is_finite()) return true;
    Rational L = value.value() - Rational(m) * (delta - 1) - rational_frac(3, 2);
    if (L > 0) return false;
    Rational disc = Rational(1 + 8 * (c2 - m + 1));
    return Rational(4) * L * L >= disc;
}

}  // namespace hyperrec
