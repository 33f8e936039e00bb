#include "hyperrec/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperrec {

RecoveryReport recovery_report(const std::vector<std::vector<int>>& truth,
                               const CliqueSet& estimate) {
    std::vector<std::vector<int>> t = truth;
    for (auto& tuple : t) {
        if (static_cast<int>(tuple.size()) != estimate.size)
            throw std::runtime_error("degree mismatch: truth tuple arity differs from estimate size");
        std::sort(tuple.begin(), tuple.end());
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());

    std::vector<std::vector<int>> e = estimate.cliques;
    for (auto& tuple : e) {
        if (static_cast<int>(tuple.size()) != estimate.size)
            throw std::runtime_error("degree mismatch: estimate tuple arity differs from estimate size");
        std::sort(tuple.begin(), tuple.end());
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());

    std::vector<std::vector<int>> common;
    std::set_intersection(t.begin(), t.end(), e.begin(), e.end(), std::back_inserter(common));

    RecoveryReport r;
    r.true_count = static_cast<long long>(t.size());
    r.est_count = static_cast<long long>(e.size());
    r.false_positives = r.est_count - static_cast<long long>(common.size());
    r.false_negatives = r.true_count - static_cast<long long>(common.size());
    r.sym_diff = r.false_positives + r.false_negatives;
    r.ratio = static_cast<double>(r.sym_diff) / static_cast<double>(std::max<long long>(1, r.true_count));
    r.empty_truth = r.true_count == 0;
    return r;
}

bool threshold_margin_form(int degree, const Rational& target_delta, const Rational& delta_star) {
    Rational rhs = rational_frac(degree - 2, degree) +
                   Rational(2) * target_delta / Rational(degree * (degree - 1));
    return delta_star < rhs;
}

bool threshold_density_form(int degree, const Rational& target_delta, const Rational& delta_star) {
    Rational c2 = rational_frac(static_cast<long long>(degree) * (degree - 1), 2);
    return -c2 + c2 * delta_star < Rational(1 - degree) + target_delta;
}

Achievability achievability_predicate(const ModelParams& params, int target_index) {
    params.validate();
    if (target_index < 0 || target_index >= static_cast<int>(params.classes.size()))
        throw std::invalid_argument("achievability: target index out of range");
    const int d = params.classes[target_index].degree;
    if (d < 3) throw std::invalid_argument("theorem requires d_j >= 3");

    Rational delta_star = rational_of(params.classes[0].exponent);
    for (const auto& c : params.classes) delta_star = std::max(delta_star, rational_of(c.exponent));
    Rational dj = rational_of(params.classes[target_index].exponent);

    Achievability a;
    a.achievable = threshold_margin_form(d, dj, delta_star);
    Rational rhs = rational_frac(d - 2, d) + Rational(2) * dj / Rational(d * (d - 1));
    a.margin = static_cast<double>(rhs - delta_star);
    return a;
}

Rational uniform_threshold(int degree) {
    if (degree < 3) throw std::invalid_argument("theorem requires d_j >= 3");
    return rational_frac(degree - 1, degree + 1);
}

}  // namespace hyperrec
