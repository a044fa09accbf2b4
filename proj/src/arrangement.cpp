#include "lineart/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lineart/error.hpp"

namespace lineart {

const char* point_class_name(PointClass kind) {
    switch (kind) {
    case PointClass::Outer: return "OUTER";
    case PointClass::NonOuter: return "NON_OUTER";
    case PointClass::Extreme: return "EXTREME";
    }
    return "?";
}

std::pair<int, int> InnerCoordinates::unoriented(int n) const {
    return {std::min(rank_on_i, n - rank_on_i), std::min(rank_on_j, n - rank_on_j)};
}

std::optional<GenericityViolation> check_generic(std::span<const LineEq> lines) {
    const int n = static_cast<int>(lines.size());
    std::vector<std::vector<std::optional<Point>>> pts(n, std::vector<std::optional<Point>>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            pts[i][j] = intersect(lines[i], lines[j]);
            if (!pts[i][j])
                return GenericityViolation{true, {i, j}};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (side_of(lines[k], *pts[i][j]) == 0)
                    return GenericityViolation{false, {i, j, k}};
            }
        }
    }
    return std::nullopt;
}

Point choose_frame_shift(std::span<const LineEq> lines) {
    auto misses = [&](const Point& p) {
        return std::none_of(lines.begin(), lines.end(),
                            [&](const LineEq& l) { return side_of(l, p) == 0; });
    };
    Point origin{Rational(0), Rational(0)};
    if (misses(origin))
        return origin;
    for (long q = 1;; ++q) {
        Point p{make_rational(1, q), make_rational(1, q * q)};
        if (misses(p))
            return p;
    }
}

namespace {

std::string one_based(const std::vector<int>& idx) {
    std::string out = "(";
    for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t)
            out += ",";
        out += std::to_string(idx[t] + 1);
    }
    return out + ")";
}

} // namespace

Arrangement Arrangement::build(std::vector<LineEq> lines) {
    return build(std::move(lines), std::vector<bool>{});
}

Arrangement Arrangement::build(std::vector<LineEq> lines, const std::vector<bool>& flip) {
    if (lines.empty())
        throw Error(ErrorCode::InvalidArgument, "arrangement needs at least one line");
    if (auto bad = check_generic(lines)) {
        throw Error(ErrorCode::NotGeneric,
                    std::string(bad->parallel ? "parallel " : "concurrent ") + one_based(bad->lines));
    }
    Arrangement arr;
    arr.frame_shift_ = choose_frame_shift(lines);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        Point d = orient(lines[i], arr.frame_shift_).direction;
        if (i < flip.size() && flip[i])
            d = Rational(-1) * d;
        arr.directions_.push_back(d);
    }
    arr.lines_ = std::move(lines);
    arr.compute_caches();
    return arr;
}

Arrangement Arrangement::build_with_directions(std::vector<LineEq> lines, std::vector<Point> directions) {
    if (directions.size() != lines.size())
        throw Error(ErrorCode::InvalidArgument, "one direction per line required");
    Arrangement arr = build(lines);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (directions[i] == Point{0, 0} || arr.lines_[i].eval(directions[i]) != 0)
            throw Error(ErrorCode::InvalidArgument, "direction not parallel to line " + std::to_string(i + 1));
    }
    arr.directions_ = std::move(directions);
    arr.compute_caches();
    return arr;
}

void Arrangement::compute_caches() {
    const int n = size();
    vertices_.assign(n, std::vector<Point>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Point p = *intersect(lines_[i], lines_[j]);
            vertices_[i][j] = p;
            vertices_[j][i] = p;
        }
    }
    orders_.assign(n, {});
    ranks_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<Rational, int>> params;
        for (int j = 0; j < n; ++j) {
            if (j != i)
                params.emplace_back(dot(directions_[i], vertices_[i][j]), j);
        }
        std::sort(params.begin(), params.end(),
                  [](const auto& l, const auto& r) { return l.first < r.first; });
        for (std::size_t t = 0; t < params.size(); ++t) {
            orders_[i].push_back(params[t].second);
            ranks_[i][params[t].second] = static_cast<int>(t) + 1;
        }
    }
}

const Point& Arrangement::vertex(int i, int j) const {
    return vertices_[i][j];
}

std::vector<VertexKey> Arrangement::vertex_keys() const {
    std::vector<VertexKey> keys;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            keys.emplace_back(i, j);
    return keys;
}

InnerCoordinates Arrangement::inner_coordinates(int i, int j) const {
    VertexKey key(i, j);
    InnerCoordinates ic{key, ranks_[key.i][key.j], ranks_[key.j][key.i], PointClass::NonOuter};
    const int last = size() - 1;
    const bool end_i = ic.rank_on_i == 1 || ic.rank_on_i == last;
    const bool end_j = ic.rank_on_j == 1 || ic.rank_on_j == last;
    if (end_i && end_j)
        ic.kind = PointClass::Extreme;
    else if (end_i || end_j)
        ic.kind = PointClass::Outer;
    return ic;
}

PointClass Arrangement::classify(VertexKey key) const {
    return inner_coordinates(key.i, key.j).kind;
}

std::vector<int> Arrangement::slope_sorted_indices() const {
    std::vector<int> idx(size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<SlopeKey> keys;
    for (int i = 0; i < size(); ++i)
        keys.push_back(slope_order_key(slope(i)));
    std::stable_sort(idx.begin(), idx.end(), [&](int l, int r) { return keys[l] < keys[r]; });
    return idx;
}

Arrangement Arrangement::subset(std::span<const int> indices) const {
    std::vector<LineEq> sub;
    std::vector<Point> dirs;
    for (int i : indices) {
        sub.push_back(lines_[i]);
        dirs.push_back(directions_[i]);
    }
    return build_with_directions(std::move(sub), std::move(dirs));
}

Arrangement Arrangement::relabeled(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != size())
        throw Error(ErrorCode::SizeMismatch, "relabeling has wrong length");
    return subset(perm);
}

Arrangement Arrangement::with_flipped(int i) const {
    Arrangement copy = *this;
    copy.directions_[i] = Rational(-1) * copy.directions_[i];
    copy.compute_caches();
    return copy;
}

} // namespace lineart
