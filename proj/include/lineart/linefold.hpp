#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lineart/kernel.hpp"

namespace lineart {

struct PointOrder {
    bool operator()(const Point& a, const Point& b) const { return point_less(a, b); }
};

/// Lines with parallels and concurrencies allowed. Repeated factors are kept
/// in `factors` but everything else works with the distinct lines.
struct LineFold {
    std::vector<std::pair<LineEq, int>> factors;
    std::vector<LineEq> reduced_lines;
    std::vector<std::vector<int>> parallel_classes;       // indices into reduced_lines
    std::map<Point, int, PointOrder> concurrency_points;  // every crossing, with its line count

    int degree() const { return static_cast<int>(reduced_lines.size()); }
    /// Indices of the reduced lines through p.
    std::vector<int> lines_through(const Point& p) const;
};

/// Throws InvalidArgument for a non-positive multiplicity.
LineFold fold_from_factored_polynomial(std::span<const std::pair<LineEq, int>> factors);
LineFold fold_from_lines(std::span<const LineEq> lines);

/// bounded and unbounded are set only when no two lines are parallel.
struct FoldCounts {
    long total = 0;
    std::optional<long> bounded;
    std::optional<long> unbounded;
    friend bool operator==(const FoldCounts&, const FoldCounts&) = default;
};

/// Closed form in d, the line counts of the crossings and the parallel class sizes.
FoldCounts fold_census(const LineFold& fold);

/// Every feasible sign vector counted directly; bounded and unbounded always
/// set. Throws InvalidArgument above 12 distinct lines.
FoldCounts fold_oracle_census(const LineFold& fold);

/// The lines through p translated by small distinct amounts so that p splits
/// into simple crossings and nothing else changes. Throws InvalidArgument if
/// p is not a crossing or a line through p meets another point of three or
/// more lines.
LineFold perturb_concurrency(const LineFold& fold, const Point& p);

} // namespace lineart
