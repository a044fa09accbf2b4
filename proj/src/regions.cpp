#include "lineart/regions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lineart/error.hpp"

namespace lineart {

namespace {

long choose2(long n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

// Direction along line `along` pointing into the `side` half-plane of `other`.
Point inward_direction(const LineEq& along, const LineEq& other, int side) {
    Point d{-along.b(), along.a()};
    if (side * sign(other.eval(d)) < 0)
        d = Rational(-1) * d;
    return d;
}

Region trace_region(const Arrangement& arr, const SignVector& sv, const std::vector<VertexKey>& corners,
                    const std::set<SignVector>& all) {
    Region region;
    region.sign_vector = sv;
    const int n = arr.size();
    if (n == 1) {
        region.boundary_lines = {0};
        region.gonality = 1;
        return region;
    }

    // At each corner, the line whose inward direction lies anticlockwise is
    // entered first, the other one is left along.
    std::map<int, std::pair<VertexKey, int>> next;
    std::set<int> outgoing;
    for (const VertexKey& v : corners) {
        Point ui = inward_direction(arr.line(v.i), arr.line(v.j), sv[v.j]);
        Point uj = inward_direction(arr.line(v.j), arr.line(v.i), sv[v.i]);
        int in = v.j, out = v.i;
        if (sign(cross(ui, uj)) < 0)
            std::swap(in, out);
        next.emplace(in, std::make_pair(v, out));
        outgoing.insert(out);
    }

    int start = -1;
    for (const auto& [in, step] : next) {
        if (!outgoing.count(in)) {
            start = in;
            break;
        }
    }
    region.bounded = (start == -1);
    if (region.bounded)
        start = next.begin()->first;

    int line = start;
    region.boundary_lines.push_back(line);
    while (true) {
        auto it = next.find(line);
        if (it == next.end())
            break;
        region.boundary.push_back(it->second.first);
        line = it->second.second;
        if (line == start)
            break;
        region.boundary_lines.push_back(line);
    }

    // Every line whose flip yields another cell is an edge line.
    int facet_count = 0;
    for (int t = 0; t < n; ++t) {
        SignVector flipped = sv;
        flipped[t] = -flipped[t];
        facet_count += all.count(flipped) ? 1 : 0;
    }
    if (facet_count != static_cast<int>(region.boundary_lines.size()))
        throw Error(ErrorCode::Degenerate, "boundary walk disagrees with cell adjacency");

    region.gonality = static_cast<int>(region.boundary_lines.size());
    return region;
}

} // namespace

std::vector<Region> enumerate_regions(const Arrangement& arr) {
    const int n = arr.size();
    std::map<SignVector, std::vector<VertexKey>> cells;
    if (n == 1) {
        cells[{-1}];
        cells[{1}];
    }
    for (const VertexKey& v : arr.vertex_keys()) {
        SignVector base(n);
        for (int t = 0; t < n; ++t) {
            if (!v.contains(t))
                base[t] = side_of(arr.line(t), arr.vertex(v));
        }
        for (int si : {-1, 1}) {
            for (int sj : {-1, 1}) {
                SignVector sv = base;
                sv[v.i] = si;
                sv[v.j] = sj;
                cells[sv].push_back(v);
            }
        }
    }
    std::set<SignVector> all;
    for (const auto& [sv, corners] : cells)
        all.insert(sv);

    std::vector<Region> regions;
    regions.reserve(cells.size());
    for (const auto& [sv, corners] : cells)
        regions.push_back(trace_region(arr, sv, corners, all));
    return regions;
}

namespace {

// alpha*x + beta*y > gamma
struct Strict {
    Rational alpha, beta, gamma;
};

struct Interval {
    std::optional<Rational> lo; // open
    std::optional<Rational> hi; // open
    bool empty = false;

    void add(const Rational& alpha, const Rational& gamma) {
        int s = sign(alpha);
        if (s == 0) {
            if (!(gamma < 0))
                empty = true;
            return;
        }
        Rational bound = gamma / alpha;
        if (s > 0) {
            if (!lo || bound > *lo)
                lo = bound;
        } else {
            if (!hi || bound < *hi)
                hi = bound;
        }
    }

    bool feasible() const { return !empty && (!lo || !hi || *lo < *hi); }

    Rational pick() const {
        if (lo && hi)
            return (*lo + *hi) / 2;
        if (lo)
            return *lo + 1;
        if (hi)
            return *hi - 1;
        return Rational(0);
    }
};

bool recession_nonzero(std::span<const LineEq> lines, std::span<const int> signs) {
    auto admissible = [&](const Point& d) {
        for (std::size_t t = 0; t < lines.size(); ++t) {
            if (signs[t] * sign(lines[t].eval(d)) < 0)
                return false;
        }
        return true;
    };
    // A nonzero closed cone cut out by lines through the origin has a
    // boundary ray on one of those lines.
    for (const LineEq& l : lines) {
        Point d{-l.b(), l.a()};
        if (admissible(d) || admissible(Rational(-1) * d))
            return true;
    }
    return lines.empty();
}

} // namespace

OracleVerdict oracle_feasible(std::span<const LineEq> lines, std::span<const int> signs) {
    if (lines.size() != signs.size())
        throw Error(ErrorCode::SizeMismatch, "sign vector length differs from line count");

    std::vector<Strict> lower, upper; // in y, after dividing out beta
    Interval xs;
    for (std::size_t t = 0; t < lines.size(); ++t) {
        const Rational s(signs[t]);
        Strict c{s * lines[t].a(), s * lines[t].b(), s * lines[t].c()};
        int sb = sign(c.beta);
        if (sb == 0) {
            xs.add(c.alpha, c.gamma);
            continue;
        }
        // y > p*x + q  (beta > 0)   or   y < p*x + q  (beta < 0), stored as (p, q).
        Strict bound{-c.alpha / c.beta, Rational(0), c.gamma / c.beta};
        (sb > 0 ? lower : upper).push_back(bound);
    }
    for (const Strict& lo : lower) {
        for (const Strict& hi : upper) {
            // lo.p x + lo.q < hi.p x + hi.q
            xs.add(hi.alpha - lo.alpha, lo.gamma - hi.gamma);
        }
    }

    OracleVerdict verdict;
    verdict.feasible = xs.feasible();
    if (!verdict.feasible)
        return verdict;

    Rational x = xs.pick();
    Interval ys;
    for (const Strict& lo : lower)
        ys.add(Rational(1), lo.alpha * x + lo.gamma);
    for (const Strict& hi : upper)
        ys.add(Rational(-1), -(hi.alpha * x + hi.gamma));
    verdict.witness = Point{x, ys.pick()};
    verdict.bounded = !recession_nonzero(lines, signs);
    return verdict;
}

std::vector<SignVector> oracle_sign_vectors(std::span<const LineEq> lines) {
    const int n = static_cast<int>(lines.size());
    std::vector<SignVector> out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        SignVector sv(n);
        for (int t = 0; t < n; ++t)
            sv[t] = ((mask >> (n - 1 - t)) & 1UL) ? 1 : -1;
        if (oracle_feasible(lines, sv).feasible)
            out.push_back(std::move(sv));
    }
    return out;
}

RegionCounts region_counts(int n) {
    return {choose2(n + 1) + 1, choose2(n - 1), 2L * n};
}

RegionCounts tally(std::span<const Region> regions) {
    RegionCounts c{static_cast<long>(regions.size()), 0, 0};
    for (const Region& r : regions)
        (r.bounded ? c.bounded : c.unbounded) += 1;
    return c;
}

int crossing_number(const Region& r1, const Region& r2) {
    if (r1.sign_vector.size() != r2.sign_vector.size())
        throw Error(ErrorCode::SizeMismatch, "regions from different arrangements");
    int count = 0;
    for (std::size_t t = 0; t < r1.sign_vector.size(); ++t)
        count += r1.sign_vector[t] != r2.sign_vector[t] ? 1 : 0;
    return count;
}

namespace {

enum class Chain { NonNegative, NonPositive, Positive, Negative };

bool fits(const Slope& m, Chain chain) {
    if (m.is_infinite())
        return chain == Chain::NonNegative || chain == Chain::Positive;
    int s = sign(m.value());
    switch (chain) {
    case Chain::NonNegative: return s >= 0;
    case Chain::NonPositive: return s <= 0;
    case Chain::Positive: return s > 0;
    case Chain::Negative: return s < 0;
    }
    return false;
}

// Strict numeric increase with the vertical slope above every finite value.
bool ascends(const Slope& a, const Slope& b) {
    if (a.is_infinite())
        return false;
    if (b.is_infinite())
        return true;
    return a.value() < b.value();
}

bool chain_ok(std::span<const Slope> m, std::size_t from, std::size_t to, Chain chain) {
    for (std::size_t t = from; t < to; ++t) {
        if (!fits(m[t], chain))
            return false;
        if (t > from && !ascends(m[t - 1], m[t]))
            return false;
    }
    return true;
}

} // namespace

bool has_two_standard_structure(std::span<const Slope> m) {
    const std::size_t n = m.size();
    // Chains occupy [0,i), [i,j), [j,k), [k,n) with the first three nonempty.
    for (std::size_t i = 1; i < n; ++i) {
        if (!chain_ok(m, 0, i, Chain::NonNegative))
            break;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!chain_ok(m, i, j, Chain::NonPositive))
                break;
            for (std::size_t k = j + 1; k <= n; ++k) {
                if (!chain_ok(m, j, k, Chain::Positive))
                    break;
                if (chain_ok(m, k, n, Chain::Negative))
                    return true;
            }
        }
    }
    return false;
}

bool has_cyclic_two_standard_structure(std::span<const Slope> slopes) {
    // Any rotation of the plane only moves the cut in the circular slope
    // order, and the number of times the cyclic sequence wraps past the cut
    // does not depend on where the cut is. The four chains wrap exactly twice.
    const std::size_t n = slopes.size();
    if (n < 3)
        return false;
    int descents = 0;
    for (std::size_t t = 0; t < n; ++t) {
        SlopeKey here = slope_order_key(slopes[t]);
        SlopeKey next = slope_order_key(slopes[(t + 1) % n]);
        if (here == next)
            return false;
        descents += next < here;
    }
    const int ascents = static_cast<int>(n) - descents;
    return descents == 2 || ascents == 2;
}

bool jordan_traversal_is_region(const Arrangement& arr, std::span<const VertexKey> cycle) {
    const std::size_t m = cycle.size();
    if (m < 3)
        throw Error(ErrorCode::MalformedCycle, "traversal needs at least three vertices");
    std::set<VertexKey> seen(cycle.begin(), cycle.end());
    if (seen.size() != m)
        throw Error(ErrorCode::MalformedCycle, "traversal repeats a vertex");

    std::vector<int> edge_lines;
    for (std::size_t t = 0; t < m; ++t) {
        const VertexKey& a = cycle[t];
        const VertexKey& b = cycle[(t + 1) % m];
        int common = -1;
        for (int l : {a.i, a.j}) {
            if (b.contains(l))
                common = l;
        }
        if (common < 0)
            throw Error(ErrorCode::MalformedCycle, "consecutive vertices share no line");
        if (std::abs(arr.rank(common, a.other(common)) - arr.rank(common, b.other(common))) != 1)
            throw Error(ErrorCode::MalformedCycle, "consecutive vertices are not adjacent");
        edge_lines.push_back(common);
    }
    for (std::size_t t = 0; t < m; ++t) {
        if (edge_lines[t] == edge_lines[(t + 1) % m])
            throw Error(ErrorCode::MalformedCycle, "two consecutive edges on one line");
    }

    std::vector<Slope> slopes;
    for (int l : edge_lines)
        slopes.push_back(arr.slope(l));
    return has_cyclic_two_standard_structure(slopes);
}

bool traversal_bounds_region(std::span<const Region> regions, std::span<const VertexKey> cycle) {
    std::vector<VertexKey> fwd(cycle.begin(), cycle.end());
    std::vector<VertexKey> bwd(fwd.rbegin(), fwd.rend());
    for (const Region& r : regions) {
        if (!r.bounded || r.boundary.size() != fwd.size())
            continue;
        for (const auto* seq : {&fwd, &bwd}) {
            auto it = std::find(seq->begin(), seq->end(), r.boundary.front());
            if (it == seq->end())
                continue;
            std::vector<VertexKey> rot(it, seq->end());
            rot.insert(rot.end(), seq->begin(), it);
            if (rot == r.boundary)
                return true;
        }
    }
    return false;
}

const Region* find_region(std::span<const Region> regions, const SignVector& sv) {
    for (const Region& r : regions) {
        if (r.sign_vector == sv)
            return &r;
    }
    return nullptr;
}

} // namespace lineart
