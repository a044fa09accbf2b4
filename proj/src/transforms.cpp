#include "lineart/transforms.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lineart/cycles.hpp"
#include "lineart/error.hpp"
#include "lineart/isomorphism.hpp"

namespace lineart {

namespace {

void require_index(const Arrangement& arr, int t) {
    if (t < 0 || t >= arr.size())
        throw Error(ErrorCode::NotATriangle, "no line " + std::to_string(t + 1));
}

std::string triple_name(int i, int j, int k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

// Signed distance-like functional for line k, positive toward the vertex L_i ∩ L_j.
struct StripFrame {
    const LineEq* line;
    int direction;
    Rational height; // of the vertex L_i ∩ L_j

    Rational operator()(const Point& p) const { return direction * (line->eval(p) - line->c()); }
};

StripFrame strip_frame(const Arrangement& arr, int i, int j, int k) {
    const LineEq& lk = arr.line(k);
    int s = sign(lk.eval(arr.vertex(i, j)) - lk.c());
    StripFrame f{&lk, s, 0};
    f.height = f(arr.vertex(i, j));
    return f;
}

LineEq line_through(const Point& p, const Point& direction) {
    return LineEq(direction.y, -direction.x, direction.y * p.x - direction.x * p.y);
}

Rational floor_of(const Rational& q) {
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(out);
}

std::vector<LineEq> random_generic_lines(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coef(-9, 9), den(1, 4);
    std::vector<LineEq> lines;
    while (static_cast<int>(lines.size()) < n) {
        int a = coef(rng), b = coef(rng);
        if (a == 0 && b == 0)
            continue;
        lines.emplace_back(Rational(a), Rational(b), make_rational(coef(rng), den(rng)));
        if (check_generic(lines))
            lines.pop_back();
    }
    return lines;
}

std::string tally_text(const std::map<int, long>& counts) {
    std::string out;
    for (const auto& [g, c] : counts) {
        if (!out.empty())
            out += ".";
        out += std::to_string(g) + "x" + std::to_string(c);
    }
    return out;
}

std::optional<Cycle> ngon_cycle(const Arrangement& arr) {
    auto ngon = global_cyclicity(arr);
    if (!ngon)
        return std::nullopt;
    return orbit_representative(cycle_at_infinity(arr.relabeled(ngon->order)).as_cycle);
}

} // namespace

bool InterceptRange::contains(const Rational& c2) const {
    if (sign(c2 - vertex_value) != direction)
        return false;
    return !limit || sign(*limit - c2) == direction;
}

Rational InterceptRange::pick(const Rational& c1) const {
    if (limit)
        return (vertex_value + *limit) / 2;
    return 2 * vertex_value - c1;
}

void require_ect_triangle(const Arrangement& arr, int i, int j, int k) {
    require_index(arr, i);
    require_index(arr, j);
    require_index(arr, k);
    if (i == j || j == k || i == k)
        throw Error(ErrorCode::NotATriangle, triple_name(i, j, k) + " repeats a line");
    const Point& p = arr.vertex(i, j);
    const Point& q = arr.vertex(j, k);
    const Point& r = arr.vertex(k, i);
    for (int t = 0; t < arr.size(); ++t) {
        if (t == i || t == j || t == k)
            continue;
        int s = side_of(arr.line(t), p);
        if (side_of(arr.line(t), q) != s || side_of(arr.line(t), r) != s)
            throw Error(ErrorCode::NotATriangle,
                        "line " + std::to_string(t + 1) + " crosses the triangle " + triple_name(i, j, k));
    }
    if (cross(q - p, r - p) < 0)
        throw Error(ErrorCode::NotATriangle, triple_name(i, j, k) + " runs clockwise; swap the first two lines");
}

std::optional<InterceptRange> ect_applicable(const Arrangement& arr, int i, int j, int k) {
    require_ect_triangle(arr, i, j, k);
    StripFrame h = strip_frame(arr, i, j, k);
    std::optional<Rational> nearest;
    for (const VertexKey& v : arr.vertex_keys()) {
        if (v.contains(k) || v == VertexKey(i, j))
            continue;
        Rational d = h(arr.vertex(v));
        if (d > 0 && d <= h.height)
            return std::nullopt;
        if (d > h.height && (!nearest || d < *nearest))
            nearest = d;
    }
    InterceptRange range{arr.line(k).eval(arr.vertex(i, j)), h.direction, std::nullopt};
    if (nearest)
        range.limit = arr.line(k).c() + h.direction * *nearest;
    return range;
}

Arrangement ect_apply(const Arrangement& arr, int i, int j, int k, const Rational& c2) {
    auto range = ect_applicable(arr, i, j, k);
    if (!range)
        throw Error(ErrorCode::StripViolation, "another vertex lies in every strip for " + triple_name(i, j, k));
    if (!range->contains(c2))
        throw Error(ErrorCode::StripViolation,
                    "intercept " + format_rational(c2) + " does not clear the strip for " + triple_name(i, j, k));
    std::vector<LineEq> lines = arr.lines();
    lines[k] = lines[k].with_offset(c2);
    return Arrangement::build_with_directions(std::move(lines), arr.directions());
}

Arrangement push_away(const Arrangement& arr, int i, int j, int k, const Rational& factor) {
    Point centre = make_rational(1, 2) * (arr.vertex(j, k) + arr.vertex(k, i));
    std::vector<LineEq> lines = arr.lines();
    for (int t = 0; t < arr.size(); ++t) {
        if (t == i || t == j || t == k)
            continue;
        Rational e = lines[t].eval(centre);
        lines[t] = lines[t].with_offset(e + factor * (lines[t].c() - e));
    }
    return Arrangement::build_with_directions(std::move(lines), arr.directions());
}

Rational clearance_factor(const Arrangement& arr, int i, int j, int k) {
    require_ect_triangle(arr, i, j, k);
    StripFrame h = strip_frame(arr, i, j, k);
    Point centre = make_rational(1, 2) * (arr.vertex(j, k) + arr.vertex(k, i));
    const int n = arr.size();
    // Pushed lines all pass through the centre at factor 0, and every vertex
    // on a pushed line moves affinely in the factor.
    std::vector<LineEq> at_zero = arr.lines();
    for (int t = 0; t < n; ++t)
        if (t != i && t != j && t != k)
            at_zero[t] = at_zero[t].with_offset(at_zero[t].eval(centre));

    Rational bound(1);
    for (const VertexKey& v : arr.vertex_keys()) {
        bool fixed = (v.i == i || v.i == j || v.i == k) && (v.j == i || v.j == j || v.j == k);
        if (fixed || v.contains(k))
            continue;
        Rational alpha = h(*intersect(at_zero[v.i], at_zero[v.j]));
        Rational beta = h(arr.vertex(v)) - alpha;
        if (beta > 0)
            bound = std::max(bound, Rational((h.height - alpha) / beta));
        else if (beta < 0)
            bound = std::max(bound, Rational(-alpha / beta));
    }
    return floor_of(bound) + 1;
}

Arrangement make_applicable(const Arrangement& arr, int i, int j, int k) {
    if (ect_applicable(arr, i, j, k))
        return arr;
    Rational factor = clearance_factor(arr, i, j, k);
    for (;;) {
        try {
            Arrangement out = push_away(arr, i, j, k, factor);
            if (!ect_applicable(out, i, j, k))
                throw Error(ErrorCode::InvalidArgument, "push did not clear the strip");
            return out;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotGeneric)
                throw;
        }
        factor += 1;
    }
}

std::vector<std::array<int, 3>> ect_triangles(const Arrangement& arr) {
    const int n = arr.size();
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                std::array<int, 3> tri{a, b, c};
                for (int pick = 0; pick < 3; ++pick) {
                    int k = tri[pick], i = tri[(pick + 1) % 3], j = tri[(pick + 2) % 3];
                    if (cross(arr.vertex(j, k) - arr.vertex(i, j), arr.vertex(k, i) - arr.vertex(i, j)) < 0)
                        std::swap(i, j);
                    try {
                        require_ect_triangle(arr, i, j, k);
                    } catch (const Error&) {
                        break;
                    }
                    out.push_back({i, j, k});
                }
            }
        }
    }
    return out;
}

RealizedCycle realize_cycle(std::span<const Slope> slopes, const Cycle& sigma) {
    const int n = static_cast<int>(slopes.size());
    if (static_cast<int>(sigma.size()) != n)
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(n) + " slopes for a " + std::to_string(sigma.size()) + "-cycle");
    if (n < 3 || !is_full_cycle(sigma) || !in_Tn(sigma))
        throw Error(ErrorCode::NotInTn, (is_full_cycle(sigma) ? format_cycle(normalize_cycle(sigma)) : "input") +
                                            " has no consecutive two-row structure");
    Cycle cyc = normalize_cycle(sigma);

    std::vector<int> by_key(n);
    for (int t = 0; t < n; ++t)
        by_key[t] = t;
    std::sort(by_key.begin(), by_key.end(),
              [&](int l, int r) { return slope_order_key(slopes[l]) < slope_order_key(slopes[r]); });
    for (int t = 0; t + 1 < n; ++t)
        if (slope_order_key(slopes[by_key[t]]) == slope_order_key(slopes[by_key[t + 1]]))
            throw Error(ErrorCode::InvalidArgument, "slope " + format_slope(slopes[by_key[t]]) + " repeated");

    // The t-th letter of the cycle takes the t-th slope; the first row runs
    // along the base directions and the second row against them, which puts
    // the edge directions in angular order around one full turn.
    const int row_break = static_cast<int>(decompose(cyc).rows[0].size());
    std::vector<int> slope_index(n);
    std::vector<Point> dir(n);
    for (int t = 0; t < n; ++t) {
        int line = cyc[t];
        slope_index[line] = by_key[t];
        Point u = base_direction(slopes[by_key[t]]);
        dir[line] = line < row_break ? u : Rational(-1) * u;
    }

    // Closing relations: -u_t is a positive combination of the two edge
    // directions around it.
    std::vector<std::vector<Rational>> relation(n, std::vector<Rational>(n));
    for (int t = 0; t < n; ++t) {
        Point w = Rational(-1) * dir[t];
        relation[t][t] = 1;
        for (int a = 0; a < n; ++a) {
            int b = (a + 1) % n;
            if (cross(dir[a], w) > 0 && cross(w, dir[b]) > 0) {
                Rational det = cross(dir[a], dir[b]);
                relation[t][a] += cross(w, dir[b]) / det;
                relation[t][b] += cross(dir[a], w) / det;
                break;
            }
        }
    }

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Rational> length(n);
        for (int t = 0; t < n; ++t)
            for (int s = 0; s < n; ++s)
                length[s] += (1 + attempt * t) * relation[t][s];
        std::vector<Point> corner(n);
        Point sum{0, 0};
        for (int t = 0; t + 1 < n; ++t)
            corner[t + 1] = corner[t] + length[t] * dir[t];
        for (const Point& p : corner)
            sum = sum + p;
        Point centre = make_rational(1, n) * sum;
        std::vector<LineEq> lines;
        for (int t = 0; t < n; ++t)
            lines.push_back(line_through(corner[t] - centre, dir[t]));
        if (check_generic(lines))
            continue;
        return {Arrangement::build_with_directions(std::move(lines), std::move(dir)), std::move(slope_index)};
    }
    throw Error(ErrorCode::InvalidArgument, "could not place the polygon in generic position");
}

std::string invariant_key(const Arrangement& arr) {
    std::map<int, long> bounded, unbounded;
    for (const Region& r : enumerate_regions(arr))
        (r.bounded ? bounded : unbounded)[r.gonality] += 1;

    std::string cycle_text = "-";
    if (auto c = ngon_cycle(arr)) {
        std::vector<LineEq> mirrored;
        for (const LineEq& l : arr.lines())
            mirrored.emplace_back(-l.a(), l.b(), l.c());
        Cycle best = std::min(*c, *ngon_cycle(Arrangement::build(mirrored)));
        cycle_text.clear();
        for (int letter : best)
            cycle_text += (cycle_text.empty() ? "" : ".") + std::to_string(letter + 1);
    }

    std::string nooks;
    for (int c : nook_profile(arr))
        nooks += std::to_string(c);
    return "B" + tally_text(bounded) + "|U" + tally_text(unbounded) + "|C" + cycle_text + "|N" + nooks;
}

int IsoClassGraph::find_class(const Arrangement& arr) const {
    const std::string key = invariant_key(arr);
    for (std::size_t c = 0; c < keys.size(); ++c) {
        if (keys[c].substr(0, keys[c].find('#')) != key)
            continue;
        if (iso_search(representatives[c], arr))
            return static_cast<int>(c);
    }
    return -1;
}

IsoClassGraph build_iso_class_graph(int n, int sample_budget, std::uint32_t seed) {
    if (n < 3 || n > 5)
        throw Error(ErrorCode::InvalidArgument, "class graphs are built for 3 to 5 lines");
    IsoClassGraph g;
    g.n = n;
    std::map<std::string, int> per_key;
    std::deque<int> queue;

    auto classify = [&](const Arrangement& arr, bool from_seeds) {
        int c = g.find_class(arr);
        if (c >= 0)
            return c;
        std::string key = invariant_key(arr);
        int copies = per_key[key]++;
        g.keys.push_back(copies == 0 ? key : key + "#" + std::to_string(copies + 1));
        g.representatives.push_back(arr);
        g.reached_from_seeds.push_back(from_seeds);
        queue.push_back(static_cast<int>(g.keys.size()) - 1);
        return static_cast<int>(g.keys.size()) - 1;
    };

    auto close = [&](bool from_seeds) {
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            Arrangement rep = g.representatives[c];
            for (auto [i, j, k] : ect_triangles(rep)) {
                Arrangement before = make_applicable(rep, i, j, k);
                auto range = ect_applicable(before, i, j, k);
                Rational c1 = before.line(k).c();
                Rational c2 = range->pick(c1);
                Arrangement after = ect_apply(before, i, j, k, c2);
                int from = classify(before, from_seeds);
                int to = classify(after, from_seeds);
                g.edges.push_back({from, to, EctMove{i, j, k, c1, c2}, before, after});
            }
        }
    };

    const std::vector<Slope> palette{Slope::finite(0),  Slope::finite(1), Slope::infinite(),
                                     Slope::finite(-1), Slope::finite(2)};
    std::vector<Slope> slopes(palette.begin(), palette.begin() + n);
    for (const Cycle& sigma : enumerate_Tn(n))
        classify(realize_cycle(slopes, sigma).arrangement, true);
    close(true);

    std::mt19937 rng(seed);
    for (int s = 0; s < sample_budget; ++s) {
        g.sample_classes.push_back(classify(Arrangement::build(random_generic_lines(rng, n)), false));
        close(false);
    }
    return g;
}

std::string export_graph(const IsoClassGraph& graph) {
    std::ostringstream out;
    for (const std::string& key : graph.keys)
        out << "CLASS " << key << "\n";
    for (const auto& e : graph.edges)
        out << "EDGE " << graph.keys[e.from] << " " << graph.keys[e.to] << " ECT " << e.move.i + 1 << " "
            << e.move.j + 1 << " " << e.move.k + 1 << "\n";
    return out.str();
}

} // namespace lineart
