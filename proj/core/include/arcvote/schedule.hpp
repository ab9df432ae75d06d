#pragma once

#include <functional>
#include <string>
#include <vector>

#include "arcvote/error_function.hpp"

namespace arcvote {

/// Inclusive range of 1-based sample indices; empty when last < first.
struct IndexRange {
    long long first = 1;
    long long last = 0;

    bool empty() const { return last < first; }
    long long count() const { return empty() ? 0 : last - first + 1; }
    bool contains(long long i) const { return i >= first && i <= last; }
};

struct ScheduleStage {
    int k = 0;
    double eps = 0;       // diversification band (eps, 1-eps)
    double delta = 0;     // confidence budget of the stage
    long long N = 1;      // per-cell testing occupancy threshold (odd)
    long long a = 0;      // testing block size; also the labelling occupancy threshold
    long long b = 1;      // labelling block size
    long long n_end = 1;  // n_k
    bool exact_ok = true; // exact mode: stage parameters certified
    std::string note;
};

/// The stage parameter sequences eps_k, delta_k, N_k, a_k, b_k, n_k and the
/// derived block index ranges.  Stage 1 is always (a=0, b=1, n=1).
struct Schedule {
    enum class Mode { exact, practical };

    Mode mode = Mode::practical;
    std::vector<ScheduleStage> stages;  // stages[k-1] holds stage k
    bool complete = true;               // false when exact construction stopped early
    std::string failure_note;

    int stage_count() const { return static_cast<int>(stages.size()); }
    const ScheduleStage& stage(int k) const { return stages.at(static_cast<std::size_t>(k - 1)); }
    long long n_at(int k) const { return stage(k).n_end; }

    /// Index of the stage-k partition candidate x_{n_{k-1}+1}; k >= 2.
    long long candidate_index(int k) const;
    /// A_k = (n_{k-1}+2, ..., n_{k-1}+a_k+1); empty for k = 1.
    IndexRange testing_block(int k) const;
    /// B_k = (n_{k-1}+a_k+2, ..., n_k); B_1 = {1}.
    IndexRange labelling_block(int k) const;

    /// max{k : n_k <= n}, or 0 when n < 1.
    int stage_for_sample_size(long long n) const;

    static const char* mode_name(Mode m) {
        return m == Mode::exact ? "exact" : "practical";
    }
};

/// Sample size sufficient to estimate all circle-interval measures well
/// enough that, with confidence 1-delta, every cell of a partition spanned
/// by k random points holds at least N later sample points.  With
/// eps = delta / (2k(k-1)):
///   ceil(max{ (48/eps) ln(16e/eps), (8/eps) ln(4/delta), 2N/eps }).
/// Natural logarithm; k >= 2 required (stage 1 is fixed a=0, b=1 directly).
long long vc_sample_size(int k, long long N, double delta);

/// Default parameter sequences: eps_k = min(0.49, 1/(k+1)) decreasing to 0
/// with eps_1 < 1/2, delta_k = 2^-k summable with delta_1 < 1.
std::pair<std::vector<double>, std::vector<double>> default_sequences(int K);

struct ExactScheduleOptions {
    int find_grid = 4097;
    int find_cap = 100000;
    double find_slack = 1e-9;
};

/// Exact-mode construction: N_k = find_N(odd(b_{k-1}), eps_k),
/// a_k = vc_sample_size(k, N_k, delta_k), b_k = vc_sample_size(k, a_k, delta_k).
/// find_N requires an odd vote size; an even b_{k-1} enters as b_{k-1}-1,
/// matching the histogram rule's drop-one-on-ties vote.  When find_N exceeds
/// its cap the schedule is returned partial with the failing stage noted.
Schedule exact_schedule(int K,
                        const std::function<double(int)>& eps_rule,
                        const std::function<double(int)>& delta_rule,
                        const ExactScheduleOptions& options = {});
Schedule exact_schedule(int K, const ExactScheduleOptions& options = {});

/// Desk-scale surrogate schedule.  Satisfies the structural invariants
/// (block tiling, n_k recursion, forced a_1=0, b_1=1) but not the exact-mode
/// formulas; every file emitted from runs driven by it is flagged.
struct PracticalParams {
    int K = 8;

    // Geometric defaults: a_k = ceil(A r^k), b_k = smallest odd >= B r^k.
    double A = 4;
    double B = 9;
    double r = 2;

    // Explicit overrides (size K when non-empty; entry k-1 holds stage k,
    // stage 1 forced to a=0, b=1 regardless).
    std::vector<long long> a;
    std::vector<long long> b;
    std::vector<long long> N;   // forced odd (rounded up)
    long long N_default = 11;

    std::vector<double> eps;    // defaults from default_sequences
    std::vector<double> delta;
};
Schedule practical_schedule(const PracticalParams& params);

/// Polynomially growing practical sequences sized so the occupancy gates
/// keep passing on random partitions: a_k = ceil(ca * N * k^2),
/// b_k = smallest odd >= cb * a_k * k^2.
PracticalParams polynomial_practical(int K, long long N, double ca, double cb);

}  // namespace arcvote
