#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arcvote/problem.hpp"
#include "arcvote/schedule.hpp"

namespace arcvote {

/// Histogram rule: per arc, majority vote among the contained entries taken
/// in index order; an even positive count drops the largest-index entry
/// first; an arc with no entries gets label 1.
Hypothesis histogram_fit(const ArcPartition& partition, std::span<const LabeledEntry> entries);

/// #{ones in arc} / #{entries in arc}, empty when the arc holds no entries.
std::optional<double> empirical_conditional(std::span<const LabeledEntry> entries,
                                            const HalfOpenArc& arc);

struct StageLog {
    int stage = 0;
    bool gate_passed = false;
    bool tested = false;  // diversification loop ran (gate passed, stage >= 2)
    std::vector<std::size_t> diversified_arcs;  // arc indices of the tested partition
    std::vector<std::size_t> frozen_arcs;
    std::size_t q_size = 0;        // |Q| after the stage
    bool updated = false;          // hypothesis refitted this stage
    std::vector<int> hypothesis_labels;
};

/// State of the self-partitioning rule after some number of stages.
///
/// P accumulates the partition candidates x_{n_{k-1}+1} (one per stage);
/// Q <= P is the partitioning set, which only ever grows; the hypothesis is
/// the histogram fit of the latest labelling block on the partition spanned
/// by Q at the last stage whose occupancy gate passed.
class SmartRuleState {
public:
    SmartRuleState() = default;

    int stage() const { return stage_; }
    const std::vector<CyclicPoint>& candidate_points() const { return candidates_; }
    const std::vector<CyclicPoint>& partition_points() const { return q_; }
    const Hypothesis& hypothesis() const;  // throws before stage 1
    int last_update_stage() const { return last_update_stage_; }
    const std::vector<StageLog>& log() const { return log_; }

    friend SmartRuleState smart_rule_advance(const SmartRuleState& state,
                                             const LabeledSample& sigma,
                                             const Schedule& schedule, int stage);

private:
    int stage_ = 0;
    std::vector<CyclicPoint> candidates_;  // P, sorted distinct
    std::vector<CyclicPoint> q_;           // Q, sorted distinct
    Hypothesis hypothesis_;
    bool has_hypothesis_ = false;
    int last_update_stage_ = 0;
    std::vector<StageLog> log_;
};

/// One stage of the rule on the sample prefix:
///  - record the candidate x_{n_{i-1}+1} into P (i >= 2);
///  - gate: every arc of the partition spanned by P holds >= a_i entries of
///    sigma[B_i], and (i = 1 or every arc of the partition spanned by Q holds
///    >= N_i entries of sigma[A_i]);
///  - on gate pass and i >= 2, every arc of the Q-partition whose empirical
///    conditional over sigma[A_i] lies strictly inside (eps_i, 1-eps_i)
///    contributes P cap arc to Q;
///  - on gate pass the hypothesis is refitted on sigma[B_i]; otherwise the
///    previous hypothesis stands.
/// Stages are strictly sequential: stage must equal state.stage() + 1 and
/// the prefix must reach n_stage.
SmartRuleState smart_rule_advance(const SmartRuleState& state, const LabeledSample& sigma,
                                  const Schedule& schedule, int stage);

/// Label of the hypothesis arc containing x.  For sample sizes n with
/// n_k <= n < n_{k+1} the prediction depends only on the length-n_k prefix.
int smart_rule_predict(const SmartRuleState& state, CyclicPoint x);

/// Literal from-scratch execution over i = 1..max{i : n_i <= |sigma|},
/// recomputing every stage.  Kept as an independent reference path; the
/// incremental smart_rule_advance chain must agree with it exactly.
SmartRuleState smart_rule_run(const LabeledSample& sigma, const Schedule& schedule);

/// 1-nearest-neighbour prediction under arc-length distance; distance ties
/// go to the smallest sample index.  Rejects empty samples.
int nn1_predict(const LabeledSample& sample, CyclicPoint x);

/// Exact risk of the 1-NN classifier induced by the sample: atoms are
/// evaluated pointwise (exact tie handling), uniform components integrate
/// over the midpoint partition of the sample positions.
double nn1_exact_risk(const LearningProblem& problem, const LabeledSample& sample);

}  // namespace arcvote
