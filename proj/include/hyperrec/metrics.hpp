#ifndef HYPERREC_METRICS_HPP
#define HYPERREC_METRICS_HPP

// metrics.hpp - recovery error accounting and the achievability threshold
//
// recovery_report compares an estimated clique set against the true
// hyperedge list of one degree class.  achievability_predicate decides,
// in exact rational arithmetic, whether the target class satisfies
//   max_r delta_r < (d-2)/d + 2*delta_j/(d*(d-1))
// for target degree d = d_j.  threshold_density_form is the equivalent
// inequality stated through edge-density counts; the two must agree on
// every input.

#include <vector>

#include "hyperrec/estimator.hpp"
#include "hyperrec/model.hpp"
#include "hyperrec/rational.hpp"

namespace hyperrec {

struct RecoveryReport {
    long long true_count = 0;
    long long est_count = 0;
    long long false_positives = 0;  // estimated but not true
    long long false_negatives = 0;  // true but not estimated
    long long sym_diff = 0;
    double ratio = 0.0;  // sym_diff / max(1, true_count)
    bool empty_truth = false;
};

// Throws std::runtime_error("degree mismatch...") if a truth tuple has a
// different arity than estimate.size.
RecoveryReport recovery_report(const std::vector<std::vector<int>>& truth,
                               const CliqueSet& estimate);

struct Achievability {
    bool achievable = false;
    double margin = 0.0;  // rhs - max exponent; positive iff achievable
};

// Exact threshold inequality in its margin form.
bool threshold_margin_form(int degree, const Rational& target_delta, const Rational& delta_star);
// The same decision through the density comparison; kept separate so the
// equivalence is testable.
bool threshold_density_form(int degree, const Rational& target_delta, const Rational& delta_star);

// Evaluates the threshold for params.classes[target_index].  Requires
// target degree >= 3 (throws std::invalid_argument("theorem requires d_j >= 3")).
Achievability achievability_predicate(const ModelParams& params, int target_index);

// Single-class simplification: a uniform degree-d model with exponent
// delta is achievable iff delta < (d-1)/(d+1).
Rational uniform_threshold(int degree);

}  // namespace hyperrec

#endif
