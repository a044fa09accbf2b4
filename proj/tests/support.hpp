#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "lineart/arrangement.hpp"
#include "lineart/linefold.hpp"

namespace lineart::testing {

inline LineEq line_ab(long a, long b, long c) {
    return LineEq(Rational(a), Rational(b), Rational(c));
}

/// y = m x + q
inline LineEq slope_line(const Rational& m, const Rational& q) {
    return LineEq(-m, Rational(1), q);
}

inline LineEq vertical(const Rational& x) {
    return LineEq(Rational(1), Rational(0), x);
}

inline std::vector<LineEq> random_lines(std::mt19937& rng, int n, int range = 9) {
    std::uniform_int_distribution<int> coef(-range, range);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<LineEq> lines;
    while (static_cast<int>(lines.size()) < n) {
        long a = coef(rng), b = coef(rng);
        if (a == 0 && b == 0)
            continue;
        LineEq l(Rational(a), Rational(b), make_rational(coef(rng), den(rng)));
        lines.push_back(l);
        if (check_generic(lines))
            lines.pop_back();
    }
    return lines;
}

inline Arrangement random_arrangement(std::mt19937& rng, int n, int range = 9) {
    return Arrangement::build(random_lines(rng, n, range));
}

/// Image of the arrangement under (x, y) -> M (x, y) + t with det M != 0.
inline Arrangement affine_image(const Arrangement& arr, const Rational& m11, const Rational& m12,
                                const Rational& m21, const Rational& m22, const Point& t) {
    Rational det = m11 * m22 - m12 * m21;
    // a.x = c becomes a.(M^-1 (y - t)) = c, i.e. (M^-T a).y = c + (M^-T a).t
    std::vector<LineEq> out;
    for (const LineEq& l : arr.lines()) {
        Rational a = (m22 * l.a() - m21 * l.b()) / det;
        Rational b = (-m12 * l.a() + m11 * l.b()) / det;
        out.emplace_back(a, b, l.c() + a * t.x + b * t.y);
    }
    return Arrangement::build(out);
}

/// Lines with a forced pencil of up to `max_pencil` lines through an integer
/// point, a forced parallel class of up to `max_class` lines, and random
/// lines filling up to at most `max_d` distinct lines. Lines that would push
/// a class or a crossing past its cap are skipped.
inline std::vector<LineEq> random_fold_lines(std::mt19937& rng, int max_d = 10, int max_pencil = 5,
                                             int max_class = 4) {
    std::uniform_int_distribution<int> small(-4, 4), coord(-6, 6);
    auto direction = [&] {
        for (;;) {
            int a = small(rng), b = small(rng);
            if (a != 0 || b != 0)
                return std::pair<int, int>{a, b};
        }
    };
    std::vector<LineEq> lines;
    auto add = [&](const LineEq& l) {
        if (static_cast<int>(lines.size()) >= max_d || std::find(lines.begin(), lines.end(), l) != lines.end())
            return;
        lines.push_back(l);
        LineFold f = fold_from_lines(lines);
        bool within = true;
        for (const auto& c : f.parallel_classes)
            within = within && static_cast<int>(c.size()) <= max_class;
        for (const auto& [p, k] : f.concurrency_points)
            within = within && k <= max_pencil;
        if (!within)
            lines.pop_back();
    };
    Point centre{Rational(coord(rng)), Rational(coord(rng))};
    int pencil = std::uniform_int_distribution<int>(2, max_pencil)(rng);
    for (int t = 0; t < pencil; ++t) {
        auto [a, b] = direction();
        add(LineEq(Rational(a), Rational(b), a * centre.x + b * centre.y));
    }
    auto [pa, pb] = direction();
    int family = std::uniform_int_distribution<int>(1, max_class)(rng);
    for (int t = 0; t < family; ++t)
        add(LineEq(Rational(pa), Rational(pb), Rational(coord(rng))));
    int extra = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int t = 0; t < extra; ++t) {
        auto [a, b] = direction();
        add(LineEq(Rational(a), Rational(b), make_rational(coord(rng), 2)));
    }
    return lines;
}

} // namespace lineart::testing
