#pragma once

// Exact ordered-field arithmetic over Q and the primitive predicates on
// points and lines that everything else is built from.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace lineart {

/// Arbitrary-precision rational in canonical form (gcd 1, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p/q" or an integer. Throws Error(ParseError) on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

int sign(const Rational& value);

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Rational dot(const Point& a, const Point& b);
/// z-component of a x b; positive when b is anticlockwise from a.
Rational cross(const Point& a, const Point& b);

bool point_less(const Point& a, const Point& b);

/// Line a*x + b*y = c with the leading nonzero coefficient of (a, b) scaled to 1.
class LineEq {
public:
    LineEq(Rational a, Rational b, Rational c);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    /// a*p.x + b*p.y
    Rational eval(const Point& p) const;

    /// Same normal direction, different offset.
    LineEq with_offset(Rational c) const;

    /// Some point on the line.
    Point anchor() const;

    friend bool operator==(const LineEq&, const LineEq&) = default;

private:
    Rational a_;
    Rational b_;
    Rational c_;
};

class Slope {
public:
    static Slope infinite() { return Slope(); }
    static Slope finite(Rational value) { return Slope(std::move(value)); }

    bool is_infinite() const { return !value_.has_value(); }
    /// Precondition: !is_infinite().
    const Rational& value() const { return *value_; }

    friend bool operator==(const Slope&, const Slope&) = default;

private:
    Slope() = default;
    explicit Slope(Rational v) : value_(std::move(v)) {}

    std::optional<Rational> value_;
};

Slope slope_of(const LineEq& line);
std::string format_slope(const Slope& slope);

/// Total order key realizing the circular slope order +0 -> positive -> inf ->
/// negative -> -0 cut at +0: nonnegative slopes ascending, then the vertical
/// slope, then negative slopes ascending.
class SlopeKey {
public:
    explicit SlopeKey(const Slope& slope);

    friend bool operator==(const SlopeKey& l, const SlopeKey& r) { return (l <=> r) == 0; }
    friend std::strong_ordering operator<=>(const SlopeKey& l, const SlopeKey& r);

private:
    int bucket_; // 0 nonnegative, 1 vertical, 2 negative
    Rational value_;
};

SlopeKey slope_order_key(const Slope& slope);

/// Direction vector of a line with the given slope, pointing into the
/// half-turn [0, pi): (1, m) for m >= 0, (0, 1) for vertical, (-1, -m) for m < 0.
Point base_direction(const Slope& slope);

/// Sign of a*x + b*y - c for the canonical coefficients.
int side_of(const LineEq& line, const Point& p);

/// Intersection of two lines; nullopt when the slopes agree (parallel or identical).
std::optional<Point> intersect(const LineEq& l1, const LineEq& l2);

struct OrientedLine {
    LineEq line;
    Point direction;
};

/// Orients the line so that `origin` is strictly on its left.
/// Throws Error(Degenerate) when the line passes through `origin`.
OrientedLine orient(const LineEq& line, const Point& origin);

} // namespace lineart
