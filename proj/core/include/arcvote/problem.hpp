#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "arcvote/cyclic.hpp"
#include "arcvote/rng.hpp"

namespace arcvote {

/// Point mass with constant conditional label probability.
struct AtomComponent {
    CyclicPoint location;
    double mass = 0;
    double eta = 0;
};

/// Uniform density on an arc with constant conditional label probability.
struct ArcComponent {
    HalfOpenArc arc;
    double mass = 0;
    double eta = 0;
};

using Component = std::variant<AtomComponent, ArcComponent>;

/// A labelled distribution (mu, eta) on the circle: a finite mixture of
/// atoms and uniform arcs with piecewise-constant regression function.
/// Masses must sum to 1; arcs must be pairwise disjoint and contain no atom
/// locations, so eta is single-valued mu-a.e.
class LearningProblem {
public:
    explicit LearningProblem(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }

    /// mu(arc), closed form.  Atom membership follows the half-open
    /// convention; partial overlap of uniform components integrates length
    /// fractions.
    double measure(const HalfOpenArc& arc) const;

    /// Integral of eta over the arc against mu.
    double eta_integral(const HalfOpenArc& arc) const;

    /// P[Y=1 | X in arc]; throws std::invalid_argument on a zero-measure arc.
    double conditional_eta(const HalfOpenArc& arc) const;

    /// sum_c mass_c * min(eta_c, 1 - eta_c).
    double bayes_error() const;

    /// P[Y=1] = E eta.
    double mean_eta() const;

    /// Generalized inverse i(u) = inf{t : F(t) >= u} of the distribution
    /// function F of mu on [0,1) cut at 0.  Monotone non-decreasing; pushes
    /// the uniform law forward to mu.
    CyclicPoint transport_from_uniform(double u) const;

    /// One labelled draw: component by mass, position uniform within an arc
    /// component (or the atom location), label Bernoulli(eta).
    std::pair<CyclicPoint, int> draw(Rng& rng) const;
    CyclicPoint draw_point(Rng& rng) const;

private:
    std::vector<Component> components_;
    std::vector<double> cumulative_mass_;

    // Inverse-CDF support pieces in position order.
    struct CdfPiece {
        double t0, t1;  // position range (t0 == t1 for atoms)
        double f0, f1;  // CDF before / after the piece
        bool is_atom;
    };
    std::vector<CdfPiece> cdf_;
};

struct LabeledEntry {
    long long index = 0;  // 1-based position in the sample path
    CyclicPoint point;
    int label = 0;
};

/// Ordered labelled sample; indices strictly increasing from 1, so a
/// contiguous index range is a contiguous span of entries.
class LabeledSample {
public:
    LabeledSample() = default;
    explicit LabeledSample(std::vector<LabeledEntry> entries);

    const std::vector<LabeledEntry>& entries() const { return entries_; }
    long long size() const { return static_cast<long long>(entries_.size()); }

    const LabeledEntry& at_index(long long index) const;  // 1-based
    std::span<const LabeledEntry> prefix(long long n) const;
    /// Entries with index in [first, last]; empty when last < first.
    std::span<const LabeledEntry> slice(long long first, long long last) const;

private:
    std::vector<LabeledEntry> entries_;
};

/// n i.i.d. labelled draws, deterministic given seed.
LabeledSample sample(const LearningProblem& problem, std::uint64_t seed, long long n);

/// A classifier constant on the arcs of a partition.
struct Hypothesis {
    ArcPartition partition;
    std::vector<int> labels;  // one 0/1 label per arc

    int predict(CyclicPoint x) const;

    friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};

/// Exact misclassification probability of a hypothesis, in closed form:
/// sum over arcs of the eta-integral against the opposite label.
double risk(const LearningProblem& problem, const Hypothesis& hypothesis);

}  // namespace arcvote
