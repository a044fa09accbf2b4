#include "lineart/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lineart/error.hpp"

namespace lineart {

namespace {

LineEq far_line(const Rational& slope, const Rational& offset) {
    return LineEq(-slope, Rational(1), offset);
}

} // namespace

InfinityCycle read_at_infinity(const Arrangement& arr, const Rational& far_slope, const Rational& offset) {
    const int n = arr.size();
    LineEq far = far_line(far_slope, offset);
    const Point& origin = arr.frame_shift();
    const int origin_side = side_of(far, origin);
    if (origin_side == 0)
        throw Error(ErrorCode::InvalidArgument, "far line passes through the origin");
    for (const VertexKey& v : arr.vertex_keys()) {
        if (side_of(far, arr.vertex(v)) != origin_side)
            throw Error(ErrorCode::InvalidArgument, "a vertex lies beyond the far line");
    }
    Point dir = orient(far, origin).direction;
    std::vector<std::pair<Rational, int>> params;
    for (int i = 0; i < n; ++i) {
        auto p = intersect(far, arr.line(i));
        if (!p)
            throw Error(ErrorCode::InvalidArgument, "far line parallel to line " + std::to_string(i + 1));
        params.emplace_back(dot(dir, *p), i);
    }
    std::sort(params.begin(), params.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    InfinityCycle out;
    for (const auto& [t, i] : params)
        out.order.push_back(i);
    out.as_cycle = normalize_cycle(out.order);
    return out;
}

InfinityCycle cycle_at_infinity(const Arrangement& arr) {
    std::optional<Rational> max_slope;
    for (int i = 0; i < arr.size(); ++i) {
        Slope s = arr.slope(i);
        if (!s.is_infinite() && (!max_slope || s.value() > *max_slope))
            max_slope = s.value();
    }
    Rational m = max_slope ? Rational(*max_slope + 1) : Rational(0);
    auto f = [&](const Point& p) { return Rational(p.y - m * p.x); };
    Rational top = f(arr.frame_shift());
    for (const VertexKey& v : arr.vertex_keys())
        top = std::max(top, f(arr.vertex(v)));
    return read_at_infinity(arr, m, top + 1);
}

std::vector<int> recut_slope_ranks(const Arrangement& arr, int cut) {
    const int n = arr.size();
    std::vector<int> sorted = arr.slope_sorted_indices();
    std::vector<int> rank(n);
    for (int t = 0; t < n; ++t)
        rank[sorted[t]] = t;
    const int shift = rank[cut];
    for (int& r : rank)
        r = (r - shift + n) % n;
    return rank;
}

bool slope_property_check(const Arrangement& arr, const CycleDecomp& decomp) {
    if (decomp.standardness != 2 || static_cast<int>(decomp.cycle.size()) != arr.size())
        return false;
    const auto& first = decomp.rows[0];
    const auto& second = decomp.rows[1];
    if (first.size() < 2)
        return false;
    std::vector<int> rank = recut_slope_ranks(arr, 0);
    auto ascending = [&](const std::vector<int>& row) {
        for (std::size_t t = 1; t < row.size(); ++t) {
            if (rank[row[t]] <= rank[row[t - 1]])
                return false;
        }
        return true;
    };
    // m_{j+1} must sit strictly between m_1 and m_j.
    return ascending(first) && ascending(second) && rank[second.front()] < rank[first.back()];
}

std::optional<NGon> global_cyclicity(const Arrangement& arr, std::span<const Region> regions) {
    const int n = arr.size();
    if (n < 3)
        return std::nullopt;
    for (const Region& r : regions) {
        if (!r.bounded || r.gonality != n)
            continue;
        NGon g;
        g.order = r.boundary_lines;
        g.vertices = r.boundary;
        auto least = std::min_element(g.order.begin(), g.order.end());
        std::rotate(g.order.begin(), least, g.order.end());
        g.sign_vector = r.sign_vector;
        return g;
    }
    return std::nullopt;
}

std::optional<NGon> global_cyclicity(const Arrangement& arr) {
    return global_cyclicity(arr, enumerate_regions(arr));
}

bool one_sided_in_order(const Arrangement& arr, std::span<const int> order) {
    const int n = static_cast<int>(order.size());
    for (int p = 0; p < n; ++p) {
        const LineEq& line = arr.line(order[p]);
        int seen = 0;
        for (int q = 0; q < n; ++q) {
            if (q == p || q == (p - 1 + n) % n)
                continue;
            int s = side_of(line, arr.vertex(order[q], order[(q + 1) % n]));
            if (s == 0 || (seen != 0 && s != seen))
                return false;
            seen = s;
        }
    }
    return true;
}

bool theorem_B_criterion(const Arrangement& arr) {
    std::vector<int> order(arr.size());
    std::iota(order.begin(), order.end(), 0);
    return one_sided_in_order(arr, order);
}

VertexKey opposite_vertex(const Arrangement& arr, const NGon& ngon, int side) {
    const int n = static_cast<int>(ngon.order.size());
    auto it = std::find(ngon.order.begin(), ngon.order.end(), side);
    if (it == ngon.order.end())
        throw Error(ErrorCode::InvalidArgument, "line " + std::to_string(side + 1) + " is not a side");
    std::vector<int> seq(ngon.order.begin(), ngon.order.end());
    std::rotate(seq.begin(), seq.begin() + (it - ngon.order.begin()), seq.end());
    std::vector<int> rank = recut_slope_ranks(arr, side);
    for (int t = 0; t + 1 < n; ++t) {
        if (rank[seq[t + 1]] < rank[seq[t]])
            return VertexKey(seq[t], seq[t + 1]);
    }
    throw Error(ErrorCode::InvalidArgument, "sides do not turn through a half-turn");
}

VertexKey opposite_vertex(const Arrangement& arr, int side) {
    auto ngon = global_cyclicity(arr);
    if (!ngon)
        throw Error(ErrorCode::NoGon, "no " + std::to_string(arr.size()) + "-gon");
    return opposite_vertex(arr, *ngon, side);
}

std::vector<std::pair<int, int>> opposite_positions_from_cycle(const Cycle& cycle_in_positions) {
    const int n = static_cast<int>(cycle_in_positions.size());
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < n; ++p) {
        CycleDecomp d = decompose(rotate_letters(cycle_in_positions, -p));
        if (d.standardness != 2)
            throw Error(ErrorCode::NotInTn, format_cycle(d.cycle) + " is not in T_n");
        const int j = static_cast<int>(d.rows[0].size());
        out.emplace_back((p + j - 1) % n, (p + j) % n);
    }
    return out;
}

std::vector<Cycle> cycles_from_opposite_positions(const std::vector<std::pair<int, int>>& opposite) {
    std::vector<Cycle> out;
    for (const Cycle& c : enumerate_Tn(static_cast<int>(opposite.size()))) {
        bool all_in = true;
        for (int p = 1; p < static_cast<int>(c.size()) && all_in; ++p)
            all_in = in_Tn(rotate_letters(c, -p));
        if (all_in && opposite_positions_from_cycle(c) == opposite)
            out.push_back(c);
    }
    return out;
}

GonalityCensus gonality_census(const Arrangement& arr) {
    const int n = arr.size();
    std::vector<Region> regions = enumerate_regions(arr);
    auto ngon = global_cyclicity(arr, regions);
    if (!ngon)
        throw Error(ErrorCode::NoGon, "no " + std::to_string(n) + "-gon");
    GonalityCensus c;
    for (const Region& r : regions) {
        (r.bounded ? c.bounded : c.unbounded)[r.gonality] += 1;
        if (!r.bounded)
            c.max_unbounded_gonality = std::max(c.max_unbounded_gonality, r.gonality);
    }

    const auto& order = ngon->order;
    for (int p = 0; p < n; ++p) {
        const LineEq& line = arr.line(order[p]);
        int seen = 0;
        bool ok = true;
        for (int q = 0; q < n && ok; ++q) {
            if (q == p || q == (p - 1 + n) % n)
                continue;
            int s = side_of(line, arr.vertex(order[q], order[(q + 1) % n]));
            ok = s != 0 && (seen == 0 || s == seen);
            seen = s;
        }
        const int across = side_of(line, arr.vertex(order[(p - 1 + n) % n], order[(p + 1) % n]));
        if (ok && across == -seen)
            ++c.k_triangles;
    }

    std::set<VertexKey> on_unbounded;
    for (const Region& r : regions) {
        if (!r.bounded)
            on_unbounded.insert(r.boundary.begin(), r.boundary.end());
    }
    for (const VertexKey& v : arr.vertex_keys()) {
        PointClass kind = arr.classify(v);
        if (kind == PointClass::Extreme)
            ++c.r_extreme;
        else if (kind == PointClass::NonOuter && on_unbounded.count(v))
            ++c.k_nonouter_on_T;
    }

    auto put = [](std::map<int, long>& m, int key, long count) {
        if (count != 0)
            m[key] += count;
    };
    const long quads = static_cast<long>(n - 1) * (n - 2) / 2 - c.k_triangles - 1;
    put(c.predicted_bounded, 3, c.k_triangles);
    put(c.predicted_bounded, n, 1);
    put(c.predicted_bounded, 4, quads);
    put(c.predicted_unbounded, 2, c.r_extreme);
    put(c.predicted_unbounded, 4, c.k_nonouter_on_T);
    put(c.predicted_unbounded, 3, 2L * n - c.r_extreme - c.k_nonouter_on_T);
    return c;
}

namespace {

bool same_cyclic_order(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size())
        return false;
    const std::size_t n = a.size();
    for (std::size_t s = 0; s < n; ++s) {
        bool eq = true;
        for (std::size_t t = 0; t < n && eq; ++t)
            eq = a[t] == b[(t + s) % n];
        if (eq)
            return true;
    }
    return false;
}

constexpr int kExhaustiveChartLimit = 9;

} // namespace

LocalGonalityReport local_gonality(const Arrangement& arr, std::span<const int> subset) {
    const int n = arr.size();
    const int k = static_cast<int>(subset.size());
    if (k < 3)
        throw Error(ErrorCode::BadSubset, "a local gonality needs at least 3 lines");
    std::set<int> distinct;
    for (int i : subset) {
        if (i < 0 || i >= n)
            throw Error(ErrorCode::BadSubset, "no line " + std::to_string(i + 1));
        if (!distinct.insert(i).second)
            throw Error(ErrorCode::BadSubset, "line " + std::to_string(i + 1) + " repeated");
    }

    LocalGonalityReport rep;
    rep.subset.assign(subset.begin(), subset.end());
    Arrangement sub = arr.subset(subset);
    if (auto g = global_cyclicity(sub)) {
        rep.has_gonality = true;
        for (int t : g->order)
            rep.chart.push_back(subset[t]);
    } else {
        rep.chart = rep.subset;
    }

    for (const Region& r : enumerate_regions(arr)) {
        std::set<int> sides(r.boundary_lines.begin(), r.boundary_lines.end());
        if (sides == distinct && static_cast<int>(r.boundary_lines.size()) == k) {
            rep.in_full_arrangement = true;
            rep.full_region_bounded = rep.full_region_bounded || r.bounded;
        }
    }

    const Cycle global = cycle_at_infinity(arr).as_cycle;
    rep.chart_cycle = local_cycle(global, rep.chart);
    for (int s = 0; s < k && !rep.in_Tk; ++s) {
        std::vector<int> rotated = rep.chart;
        std::rotate(rotated.begin(), rotated.begin() + s, rotated.end());
        if (in_Tn(local_cycle(global, rotated))) {
            rep.in_Tk = true;
            rep.tk_chart = rotated;
        }
    }

    std::vector<std::vector<int>> candidates;
    if (k <= kExhaustiveChartLimit) {
        std::vector<int> rest(rep.subset.begin() + 1, rep.subset.end());
        std::sort(rest.begin(), rest.end());
        do {
            std::vector<int> order{rep.subset.front()};
            order.insert(order.end(), rest.begin(), rest.end());
            candidates.push_back(std::move(order));
        } while (std::next_permutation(rest.begin(), rest.end()));
    } else {
        candidates = {rep.subset, rep.chart};
    }
    for (const auto& order : candidates) {
        if (one_sided_in_order(arr, order)) {
            rep.one_sided = true;
            rep.one_sided_chart = order;
            break;
        }
    }
    if (rep.one_sided) {
        rep.anticlockwise = rep.has_gonality && same_cyclic_order(rep.one_sided_chart, rep.chart);
        Arrangement charted = arr.subset(rep.one_sided_chart);
        rep.chart_slope_property =
            slope_property_check(charted, decompose(local_cycle(global, rep.one_sided_chart)));
    }
    return rep;
}

} // namespace lineart
