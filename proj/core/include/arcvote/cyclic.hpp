#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace arcvote {

/// Reduce a finite real to [0,1).
double wrap_unit(double t);

/// A point of the unit circle, identified with t in [0,1) via e^{2*pi*i*t}.
class CyclicPoint {
public:
    CyclicPoint() = default;
    explicit CyclicPoint(double position);  // throws std::invalid_argument outside [0,1)

    double position() const { return pos_; }

    friend bool operator==(CyclicPoint a, CyclicPoint b) { return a.pos_ == b.pos_; }
    friend auto operator<=>(CyclicPoint a, CyclicPoint b) { return a.pos_ <=> b.pos_; }

private:
    double pos_ = 0.0;
};

/// (to - from) mod 1, in [0,1).
double forward_distance(CyclicPoint from, CyclicPoint to);

/// Arc-length distance min(|a-b|, 1-|a-b|).
double circle_distance(CyclicPoint a, CyclicPoint b);

/// Ternary cyclic order [x,y,z]: y lies strictly inside the arc swept
/// counter-clockwise from x to z.  Arguments must be pairwise distinct.
bool cyclic_between(CyclicPoint x, CyclicPoint y, CyclicPoint z);

/// Half-open arc [start, end), wrapping through 0 when end <= start.
/// start == end denotes the full circle.
struct HalfOpenArc {
    CyclicPoint start{};
    CyclicPoint end{};

    /// Arc length in (0, 1]; 1 when start == end.
    double length() const;
    /// Membership under the half-open convention: start in, end out
    /// (the full circle contains everything).
    bool contains(CyclicPoint p) const;

    static HalfOpenArc full_circle() { return {CyclicPoint(0.0), CyclicPoint(0.0)}; }

    friend bool operator==(const HalfOpenArc&, const HalfOpenArc&) = default;
};

/// Length of the intersection of two arcs.
double overlap_length(const HalfOpenArc& a, const HalfOpenArc& b);

/// The cyclic successor of x within `points`: the unique y with [x,y,z] for
/// every other z.  Requires x in points and at least two distinct points.
CyclicPoint successor(const std::vector<CyclicPoint>& points, CyclicPoint x);

/// Partition of the circle into half-open arcs [x, succ(x)) spanned by a
/// finite point set.  Zero or one points give the trivial partition.
class ArcPartition {
public:
    ArcPartition();  // trivial partition
    explicit ArcPartition(std::vector<CyclicPoint> points);  // dedups and sorts

    /// Sorted distinct spanning points (empty for the trivial partition).
    const std::vector<CyclicPoint>& points() const { return points_; }
    const std::vector<HalfOpenArc>& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }
    bool trivial() const { return points_.size() <= 1; }

    /// Index of the unique arc containing x; O(log size).
    std::size_t locate(CyclicPoint x) const;

    friend bool operator==(const ArcPartition& a, const ArcPartition& b) {
        return a.points_ == b.points_;
    }

private:
    std::vector<CyclicPoint> points_;
    std::vector<HalfOpenArc> arcs_;
};

}  // namespace arcvote
