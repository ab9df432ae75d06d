#pragma once

#include <vector>

namespace arcvote {

/// Expected error of predicting a Bernoulli(p) label by the majority of n
/// i.i.d. labels, n odd.  Equals
///   sum_{i<=k} C(n,i) [ p^{i+1}(1-p)^{n-i} + p^{n-i}(1-p)^{i+1} ],  n = 2k+1,
/// evaluated as (1-p) + (2p-1) P[Bin(n,p) <= k] in extended precision.
/// Absolute accuracy ~1e-15 for n <= 1e4.
double majority_error(double p, int n);

/// min(p, 1-p).
double bayes_binary(double p);

/// Closed-form decrease L(p,n) - L(p,n+2) = C(n,k) (2p-1)^2 (p(1-p))^{k+1}.
double monotone_gap(double p, int n);

/// Coefficient C(2k+1, k) of p^{k+1} in the expansion of the majority error
/// at p = 0.  Defined for odd n = 2k+1 >= 3; n = 1 is rejected (the
/// expansion has a different shape there: L(p,1) = 2p - 2p^2).
unsigned long long taylor_coeff(int n);

/// P[tN < Bin(N,p) < (1-t)N], strict inequalities on integer counts.
double binomial_inside(double p, int N, double t);

/// Piecewise-linear function through (knot_p[i], knot_value[i]).
struct PiecewiseLinearEnvelope {
    std::vector<double> knot_p;
    std::vector<double> knot_value;

    double operator()(double p) const;
    std::size_t size() const { return knot_p.size(); }
};

/// Upper concave hull of {(p_j, L(p_j, n))} over the uniform grid
/// p_j = j/(grid_size-1).  Monotone-chain construction; the result majorizes
/// the sampled values and is concave.  Requires grid_size >= 1025.
PiecewiseLinearEnvelope concave_envelope(int n, int grid_size);

/// One grid sweep of the cell-splitting inequality
///   inside(p,N,t) * env_N(p) + (1 - inside(p,N,t)) * L(p,N) <= L(p,n) + slack
/// at every grid point.  worst_margin is the largest lhs - rhs (negative when
/// the inequality holds strictly everywhere).
struct KeyInequalityCheck {
    int n = 0;
    double t = 0;
    int N = 0;
    int grid_size = 0;
    double slack = 0;
    bool holds = false;
    double worst_margin = 0;
    double worst_p = 0;
};
KeyInequalityCheck check_key_inequality(int n, double t, int N, int grid_size = 4097,
                                        double slack = 1e-9);

struct FindNResult {
    int n = 0;
    double t = 0;
    int grid_size = 0;
    int cap = 0;
    double slack = 0;

    bool found = false;
    int N = 0;                   // smallest certified odd N >= n+2 when found
    double max_slack_used = 0;   // max(lhs - rhs, 0) over the grid at N

    int last_candidate = 0;      // best candidate examined when not found
    double last_margin = 0;      // its worst violation

    // Crude analytic bound on how much the inequality can move between grid
    // points: (6N + 2n) * h / 2 with h the grid spacing, from |dL/dp| <= 2n.
    double between_grid_bound = 0;
};

/// Smallest odd N >= n+2 for which check_key_inequality holds, searching
/// upward with stride 2.  The predicate is not known to be monotone in N, so
/// no bisection.  Failure to certify any N <= cap is reported, not thrown.
FindNResult find_N(int n, double t, int grid_size = 4097, int cap = 100000,
                   double slack = 1e-9);

namespace detail {
/// Binomial pmf vector, computed outward from the mode in long double so
/// that extreme p and large n neither underflow nor lose absolute accuracy.
std::vector<long double> binomial_pmf(int n, double p);
}  // namespace detail

}  // namespace arcvote
