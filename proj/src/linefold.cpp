#include "lineart/linefold.hpp"

#include <algorithm>

#include "lineart/error.hpp"
#include "lineart/regions.hpp"

namespace lineart {

namespace {

long choose2(long k) {
    return k * (k - 1) / 2;
}

// Multiple points (three or more lines) as point -> count.
std::map<Point, int, PointOrder> multiple_points(const LineFold& fold) {
    std::map<Point, int, PointOrder> out;
    for (const auto& [p, k] : fold.concurrency_points)
        if (k >= 3)
            out.emplace(p, k);
    return out;
}

std::vector<std::size_t> class_sizes(const LineFold& fold) {
    std::vector<std::size_t> out;
    for (const auto& c : fold.parallel_classes)
        out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<int> LineFold::lines_through(const Point& p) const {
    std::vector<int> out;
    for (int t = 0; t < degree(); ++t)
        if (side_of(reduced_lines[t], p) == 0)
            out.push_back(t);
    return out;
}

LineFold fold_from_factored_polynomial(std::span<const std::pair<LineEq, int>> factors) {
    LineFold fold;
    for (const auto& [line, mult] : factors) {
        if (mult < 1)
            throw Error(ErrorCode::InvalidArgument, "multiplicity must be positive");
        fold.factors.emplace_back(line, mult);
        if (std::find(fold.reduced_lines.begin(), fold.reduced_lines.end(), line) == fold.reduced_lines.end())
            fold.reduced_lines.push_back(line);
    }

    const int d = fold.degree();
    for (int t = 0; t < d; ++t) {
        Slope s = slope_of(fold.reduced_lines[t]);
        auto it = std::find_if(fold.parallel_classes.begin(), fold.parallel_classes.end(),
                               [&](const std::vector<int>& c) { return slope_of(fold.reduced_lines[c[0]]) == s; });
        if (it == fold.parallel_classes.end())
            fold.parallel_classes.push_back({t});
        else
            it->push_back(t);
    }

    for (int s = 0; s < d; ++s) {
        for (int t = s + 1; t < d; ++t) {
            auto p = intersect(fold.reduced_lines[s], fold.reduced_lines[t]);
            if (p && !fold.concurrency_points.count(*p))
                fold.concurrency_points.emplace(*p, static_cast<int>(fold.lines_through(*p).size()));
        }
    }
    return fold;
}

LineFold fold_from_lines(std::span<const LineEq> lines) {
    std::vector<std::pair<LineEq, int>> factors;
    for (const LineEq& l : lines)
        factors.emplace_back(l, 1);
    return fold_from_factored_polynomial(factors);
}

FoldCounts fold_census(const LineFold& fold) {
    const long d = fold.degree();
    long point_correction = 0, parallel_correction = 0;
    for (const auto& [p, k] : fold.concurrency_points)
        point_correction += choose2(k - 1);
    bool has_parallels = false;
    for (const auto& c : fold.parallel_classes) {
        parallel_correction += choose2(static_cast<long>(c.size()));
        has_parallels = has_parallels || c.size() > 1;
    }
    FoldCounts out;
    out.total = 1 + d + choose2(d) - point_correction - parallel_correction;
    if (!has_parallels) {
        out.bounded = choose2(d - 1) - point_correction;
        out.unbounded = 2 * d;
    }
    return out;
}

FoldCounts fold_oracle_census(const LineFold& fold) {
    if (fold.degree() > 12)
        throw Error(ErrorCode::InvalidArgument, "the sign-vector census is limited to 12 lines");
    FoldCounts out;
    out.bounded = 0;
    out.unbounded = 0;
    for (const SignVector& sv : oracle_sign_vectors(fold.reduced_lines)) {
        ++out.total;
        ++*(oracle_feasible(fold.reduced_lines, sv).bounded ? out.bounded : out.unbounded);
    }
    return out;
}

LineFold perturb_concurrency(const LineFold& fold, const Point& p) {
    if (!fold.concurrency_points.count(p))
        throw Error(ErrorCode::InvalidArgument, "not a crossing of the fold");
    const std::vector<int> through = fold.lines_through(p);
    auto target = multiple_points(fold);
    target.erase(p);
    for (const auto& [q, k] : target)
        for (int t : through)
            if (side_of(fold.reduced_lines[t], q) == 0)
                throw Error(ErrorCode::InvalidArgument,
                            "a line through the point meets another point of " + std::to_string(k) + " lines");

    const auto sizes = class_sizes(fold);
    Rational eps(1);
    for (int attempt = 0; attempt < 256; ++attempt) {
        eps /= 2;
        const int power = 1 + attempt % 3;
        std::vector<LineEq> moved = fold.reduced_lines;
        for (std::size_t r = 1; r < through.size(); ++r) {
            Rational shift = eps;
            for (int e = 1; e < power; ++e)
                shift *= static_cast<long>(r);
            shift *= static_cast<long>(r);
            LineEq& l = moved[through[r]];
            l = l.with_offset(l.c() + shift);
        }
        LineFold out = fold_from_lines(moved);
        if (out.degree() == fold.degree() && class_sizes(out) == sizes && multiple_points(out) == target)
            return out;
    }
    throw Error(ErrorCode::InvalidArgument, "no small translation separates the lines");
}

} // namespace lineart
