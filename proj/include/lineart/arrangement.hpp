#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lineart/kernel.hpp"

namespace lineart {

/// Unordered pair of line indices (stored with i < j) naming the vertex L_i ∩ L_j.
struct VertexKey {
    int i;
    int j;

    VertexKey(int a, int b) : i(a < b ? a : b), j(a < b ? b : a) {}

    int other(int line) const { return line == i ? j : i; }
    bool contains(int line) const { return line == i || line == j; }

    friend bool operator==(const VertexKey&, const VertexKey&) = default;
    friend auto operator<=>(const VertexKey&, const VertexKey&) = default;
};

enum class PointClass { Outer, NonOuter, Extreme };

const char* point_class_name(PointClass kind);

struct InnerCoordinates {
    VertexKey point;
    int rank_on_i; // 1-based position along oriented L_i
    int rank_on_j; // 1-based position along oriented L_j
    PointClass kind;

    /// Ranks with k identified with n - k; each rank replaced by min(k, n - k).
    std::pair<int, int> unoriented(int n) const;
};

/// Lines in generic position (no two parallel, no three concurrent) with
/// the vertex set and per-line intersection orders cached.
///
/// Indices are 0-based. Every line carries a direction; the default is the
/// one that keeps the working origin on the left.
class Arrangement {
public:
    /// Validates genericity. Throws Error(NotGeneric) naming the first
    /// parallel pair or concurrent triple found (1-based in the message).
    static Arrangement build(std::vector<LineEq> lines);

    /// As build(), then reverses the default direction of each line with flip[i] set.
    static Arrangement build(std::vector<LineEq> lines, const std::vector<bool>& flip);

    /// As build(), but with explicit directions, each parallel to its line.
    static Arrangement build_with_directions(std::vector<LineEq> lines, std::vector<Point> directions);

    int size() const { return static_cast<int>(lines_.size()); }
    const std::vector<LineEq>& lines() const { return lines_; }
    const LineEq& line(int i) const { return lines_[i]; }
    Slope slope(int i) const { return slope_of(lines_[i]); }
    const Point& direction(int i) const { return directions_[i]; }
    const std::vector<Point>& directions() const { return directions_; }

    /// Working origin: (0,0) unless some line passes through it.
    const Point& frame_shift() const { return frame_shift_; }

    const Point& vertex(int i, int j) const;
    const Point& vertex(VertexKey key) const { return vertex(key.i, key.j); }
    std::vector<VertexKey> vertex_keys() const;

    /// Other line indices sorted along the oriented line i.
    const std::vector<int>& per_line_order(int i) const { return orders_[i]; }

    /// 1-based rank of vertex (i, j) along line i.
    int rank(int i, int j) const { return ranks_[i][j]; }

    InnerCoordinates inner_coordinates(int i, int j) const;
    PointClass classify(VertexKey key) const;

    /// Indices sorted by slope_order_key.
    std::vector<int> slope_sorted_indices() const;

    /// Sub-arrangement of the given lines, renumbered 0..k-1 in the given
    /// order; directions are inherited.
    Arrangement subset(std::span<const int> indices) const;

    /// Lines renumbered so that new line t is old line perm[t].
    Arrangement relabeled(std::span<const int> perm) const;

    /// Same lines, line i's direction reversed.
    Arrangement with_flipped(int i) const;

private:
    Arrangement() = default;
    void compute_caches();

    std::vector<LineEq> lines_;
    std::vector<Point> directions_;
    Point frame_shift_;
    std::vector<std::vector<Point>> vertices_; // symmetric, diagonal unused
    std::vector<std::vector<int>> orders_;
    std::vector<std::vector<int>> ranks_;
};

/// First violation of genericity, if any (0-based indices).
struct GenericityViolation {
    bool parallel;          // otherwise a concurrent triple
    std::vector<int> lines; // pair or triple
};
std::optional<GenericityViolation> check_generic(std::span<const LineEq> lines);

/// (0,0) when no line passes through it, else (1/q, 1/q^2) for the least
/// positive integer q with no line through that point.
Point choose_frame_shift(std::span<const LineEq> lines);

} // namespace lineart
