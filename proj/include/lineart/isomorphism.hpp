#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "lineart/arrangement.hpp"

namespace lineart {

/// The six vertices of four lines, split into the nook (middle point on both
/// of its lines), the extreme nook (vertex of the two other lines), the two
/// remaining extreme points and the two remaining points. Vertex keys use the
/// indices of the arrangement the lines came from.
struct QuadStructure {
    std::array<int, 4> lines;
    VertexKey nook{0, 1};
    VertexKey extreme_nook{0, 1};
    std::pair<VertexKey, VertexKey> end_points{{0, 1}, {0, 1}};
    std::pair<VertexKey, VertexKey> central_pair{{0, 1}, {0, 1}};
};

/// Throws InvalidArgument unless the four indices are distinct lines.
QuadStructure quad_structure(const Arrangement& arr, std::array<int, 4> lines);

/// Line i of the first arrangement goes to line image[i] of the second.
/// `reversed[i]` says whether the order along line i is read backwards; an
/// empty vector accepts either reading on every line.
struct LineBijection {
    std::vector<int> image;
    std::vector<bool> reversed;
};

/// Whether every line's order of intersection points maps onto the order on
/// its image line (or onto its reverse). Throws SizeMismatch for different
/// sizes, InvalidArgument if `f` is not a bijection.
bool iso_check_orders(const Arrangement& a, const Arrangement& b, const LineBijection& f);

/// Backtracking search for a bijection passing iso_check_orders, with the
/// reversal flags filled in. Throws SizeMismatch.
std::optional<LineBijection> iso_search(const Arrangement& a, const Arrangement& b);

/// Both arrangements renumbered by slope order; true iff every 4-subset has
/// its nook on the same pair of positions. Throws SizeMismatch.
bool nook_iso_check(const Arrangement& a, const Arrangement& b);

/// iso_check_orders with the identity on slope-order positions.
bool slope_indexed_orders_check(const Arrangement& a, const Arrangement& b);

/// Permutations of the four lines that fix the nook, and also the central
/// pair as a set when `keep_central_pair` is set.
int nook_automorphisms(const QuadStructure& quad, bool keep_central_pair = false);

/// For every 4-subset S of `a`, f sends the nook of S to the nook of f(S) and
/// the central pair of S to the central pair of f(S).
bool preserves_quads(const Arrangement& a, const Arrangement& b, const std::vector<int>& image);

/// How many 4-subsets have each vertex as nook, sorted. Invariant under renumbering.
std::vector<int> nook_profile(const Arrangement& arr);

} // namespace lineart
