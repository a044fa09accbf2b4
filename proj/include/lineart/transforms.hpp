#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lineart/arrangement.hpp"
#include "lineart/permutations.hpp"
#include "lineart/regions.hpp"

namespace lineart {

/// Line k's intercept moves from c1 to c2 across the vertex L_i ∩ L_j.
struct EctMove {
    int i;
    int j;
    int k;
    Rational c1;
    Rational c2;
};

/// Open interval of admissible new intercepts for line k: strictly past the
/// vertex value `vertex_value` on the side given by `direction` (+1 means
/// larger intercepts), and short of `limit` when another vertex bounds it.
struct InterceptRange {
    Rational vertex_value;
    int direction;
    std::optional<Rational> limit;

    bool contains(const Rational& c2) const;
    /// Midpoint of the interval, or the reflection of the old intercept in
    /// the vertex value when the interval is unbounded.
    Rational pick(const Rational& c1) const;
};

/// Throws NotATriangle unless L_i, L_j, L_k bound a triangular region whose
/// vertices L_i∩L_j, L_j∩L_k, L_k∩L_i run anticlockwise.
void require_ect_triangle(const Arrangement& arr, int i, int j, int k);

/// Admissible intercepts for moving line k across L_i ∩ L_j, or nullopt when
/// some other vertex blocks every strip. Throws NotATriangle.
std::optional<InterceptRange> ect_applicable(const Arrangement& arr, int i, int j, int k);

/// Line k moved to intercept c2; every direction kept. Throws NotATriangle,
/// or StripViolation when c2 is not admissible.
Arrangement ect_apply(const Arrangement& arr, int i, int j, int k, const Rational& c2);

/// Every line other than i, j, k scaled away from the midpoint of the
/// triangle's side on line k by the factor `factor` (at least 1).
Arrangement push_away(const Arrangement& arr, int i, int j, int k, const Rational& factor);

/// Least integer factor for push_away after which no vertex can block the
/// move, computed in closed form.
Rational clearance_factor(const Arrangement& arr, int i, int j, int k);

/// The arrangement itself when the move already applies, else push_away by
/// the clearance factor (raised by one until the result is generic).
/// Throws NotATriangle.
Arrangement make_applicable(const Arrangement& arr, int i, int j, int k);

/// Every (i, j, k) with L_i L_j L_k a triangular region in the orientation
/// required by ect_applicable; each triangle appears once per choice of k.
std::vector<std::array<int, 3>> ect_triangles(const Arrangement& arr);

struct RealizedCycle {
    Arrangement arrangement;
    std::vector<int> slope_index; // line t has slope slopes[slope_index[t]]
};

/// An n-gon with sides 0, 1, ..., n-1 anticlockwise whose cycle at infinity
/// is sigma, using exactly the given slopes. Throws NotInTn, or
/// InvalidArgument for repeated slopes or a size mismatch.
RealizedCycle realize_cycle(std::span<const Slope> slopes, const Cycle& sigma);

/// Renumbering-invariant key: bounded and unbounded gonality multisets, the
/// least cycle at infinity over rotations and reflection when there is an
/// n-gon, and the nook profile.
std::string invariant_key(const Arrangement& arr);

struct IsoClassGraph {
    struct Edge {
        int from;
        int to;
        EctMove move;
        Arrangement before;
        Arrangement after;
    };
    int n = 0;
    std::vector<std::string> keys;
    std::vector<Arrangement> representatives;
    std::vector<bool> reached_from_seeds;
    std::vector<Edge> edges;
    std::vector<int> sample_classes; // class of each random sample

    /// Class of the arrangement, or -1 when it matches none.
    int find_class(const Arrangement& arr) const;
};

/// Classes reached by ECTs (after make_applicable) from every realize_cycle
/// output, then closed again from `sample_budget` random arrangements.
/// Throws InvalidArgument unless 3 <= n <= 5.
IsoClassGraph build_iso_class_graph(int n, int sample_budget, std::uint32_t seed = 1);

/// CLASS and EDGE records, one per line.
std::string export_graph(const IsoClassGraph& graph);

} // namespace lineart
