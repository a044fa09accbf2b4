#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lineart/arrangement.hpp"

namespace lineart {

/// One strict side (+1 / -1) per line; +1 means a*x + b*y > c.
using SignVector = std::vector<int>;

/// Open cell of an arrangement.
///
/// `boundary` lists the vertices of the closure in anticlockwise order (the
/// region on the left). `boundary_lines` lists the lines contributing an
/// edge in the same traversal; for an unbounded region it starts with the
/// incoming ray line and ends with the outgoing ray line.
struct Region {
    SignVector sign_vector;
    std::vector<VertexKey> boundary;
    std::vector<int> boundary_lines;
    bool bounded = false;
    int gonality = 0;
};

/// All cells, sorted by sign vector.
std::vector<Region> enumerate_regions(const Arrangement& arr);

struct OracleVerdict {
    bool feasible = false;
    bool bounded = false;
    std::optional<Point> witness; // interior point when feasible
};

/// Decides whether {sign_t * (a_t x + b_t y - c_t) > 0 for all t} has a
/// solution by eliminating y then x. Boundedness is decided on the recession
/// system {sign_t * (a_t x + b_t y) >= 0}. Parallel and concurrent lines are fine.
OracleVerdict oracle_feasible(std::span<const LineEq> lines, std::span<const int> signs);

/// Every feasible sign vector, in lexicographic order (-1 before +1). Exponential in n.
std::vector<SignVector> oracle_sign_vectors(std::span<const LineEq> lines);

struct RegionCounts {
    long total;
    long bounded;
    long unbounded;

    friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

/// Closed-form counts for n lines in generic position.
RegionCounts region_counts(int n);
RegionCounts tally(std::span<const Region> regions);

/// Number of lines separating the two regions (sign-vector Hamming distance).
int crossing_number(const Region& r1, const Region& r2);

/// Whether the slopes, read in order, split into the four ascending chains
/// 0 <= m_1 < .. <= inf, then negatives up to <= 0, then 0 < .. <= inf, then
/// negatives < 0 (the last chain possibly empty).
bool has_two_standard_structure(std::span<const Slope> slopes);

/// True iff, after some rotation of the plane and read forwards or backwards,
/// the cyclic sequence has the two-standard structure. Rotations are taken
/// combinatorially: the sequence must wrap around the circular slope order
/// exactly twice.
bool has_cyclic_two_standard_structure(std::span<const Slope> slopes);

/// Checks a closed traversal of distinct vertices: consecutive vertices must be
/// adjacent on a common line and consecutive edges must use different lines,
/// else Error(MalformedCycle). Returns whether the edge slopes admit the
/// cyclic two-standard structure.
bool jordan_traversal_is_region(const Arrangement& arr, std::span<const VertexKey> cycle);

/// Ground truth from enumeration: the traversal visits exactly the boundary
/// vertices of one bounded region, in cyclic order (either direction).
bool traversal_bounds_region(std::span<const Region> regions, std::span<const VertexKey> cycle);

/// The region with the given sign vector, if any.
const Region* find_region(std::span<const Region> regions, const SignVector& sv);

} // namespace lineart
