#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "lineart/arrangement.hpp"
#include "lineart/permutations.hpp"
#include "lineart/regions.hpp"

namespace lineart {

struct InfinityCycle {
    std::vector<int> order; // line indices read along the oriented far line
    Cycle as_cycle;         // the same sequence as an n-cycle
};

/// Far line y - s*x = offset with s = 1 + the largest finite slope (0 when all
/// lines are vertical) and offset = 1 + the largest value of y - s*x over the
/// vertices and the working origin.
InfinityCycle cycle_at_infinity(const Arrangement& arr);

/// Reads the cycle along the far line y - far_slope*x = offset. Throws
/// InvalidArgument unless that line is slope-distinct, generic with the
/// arrangement, misses the working origin and has every vertex on the
/// origin side.
InfinityCycle read_at_infinity(const Arrangement& arr, const Rational& far_slope, const Rational& offset);

/// Rank of each line in the circular slope order cut at line `cut`
/// (line `cut` gets 0).
std::vector<int> recut_slope_ranks(const Arrangement& arr, int cut);

/// Rows of `decomp` (letters = line indices of `arr`) read as four ascending
/// slope chains after re-cutting the slope circle at line 0.
bool slope_property_check(const Arrangement& arr, const CycleDecomp& decomp);

struct NGon {
    std::vector<int> order; // anticlockwise, starting at the least index
    std::vector<VertexKey> vertices;
    SignVector sign_vector;
};

std::optional<NGon> global_cyclicity(const Arrangement& arr);
std::optional<NGon> global_cyclicity(const Arrangement& arr, std::span<const Region> regions);

/// For every position p, the vertices order[q] ∩ order[q+1] (cyclically) for
/// q ≠ p-1, p lie strictly on one side of line order[p].
bool one_sided_in_order(const Arrangement& arr, std::span<const int> order);

/// one_sided_in_order with the identity order 0, 1, ..., n-1.
bool theorem_B_criterion(const Arrangement& arr);

/// Opposite vertex of the side on line `side` of the n-gon. Throws
/// InvalidArgument if `side` is not a line index.
VertexKey opposite_vertex(const Arrangement& arr, const NGon& ngon, int side);

/// As above; throws Error(NoGon) if the arrangement has no n-gon.
VertexKey opposite_vertex(const Arrangement& arr, int side);

/// Given the cycle at infinity with letters renamed to n-gon positions
/// (position t = t-th side anticlockwise), the opposite vertex of every side
/// as a pair of positions (p + j - 1, p + j).
std::vector<std::pair<int, int>> opposite_positions_from_cycle(const Cycle& cycle_in_positions);

/// All cycles in T_n whose opposite positions match.
std::vector<Cycle> cycles_from_opposite_positions(const std::vector<std::pair<int, int>>& opposite);

struct GonalityCensus {
    std::map<int, long> bounded;
    std::map<int, long> unbounded;
    int k_triangles = 0;
    int r_extreme = 0;
    int k_nonouter_on_T = 0;
    std::map<int, long> predicted_bounded;
    std::map<int, long> predicted_unbounded;
    int max_unbounded_gonality = 0;

    bool matches() const {
        return bounded == predicted_bounded && unbounded == predicted_unbounded && max_unbounded_gonality <= 4;
    }
};

/// Throws Error(NoGon) when the arrangement has no n-gon.
GonalityCensus gonality_census(const Arrangement& arr);

struct LocalGonalityReport {
    std::vector<int> subset;
    bool has_gonality = false;        // the lines alone bound a k-gon
    std::vector<int> chart;           // its anticlockwise order, else the subset as given
    bool in_full_arrangement = false; // some full-arrangement region has exactly these sides
    bool full_region_bounded = false;
    Cycle chart_cycle;
    bool in_Tk = false;               // some rotation of the chart gives a cycle in T_k
    std::vector<int> tk_chart;        // the first such rotation
    bool one_sided = false;
    std::vector<int> one_sided_chart; // witnessing cyclic order
    bool anticlockwise = false;       // witnessing order matches the k-gon's orientation
    bool chart_slope_property = false;
};

/// Throws Error(BadSubset) for fewer than 3 lines, repeats or bad indices.
LocalGonalityReport local_gonality(const Arrangement& arr, std::span<const int> subset);

} // namespace lineart
