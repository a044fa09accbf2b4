#include "lineart/kernel.hpp"

#include <cctype>

#include "lineart/error.hpp"

namespace lineart {

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NotGeneric: return "NOT_GENERIC";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::MalformedCycle: return "MALFORMED_CYCLE";
    case ErrorCode::NotInTn: return "NOT_IN_TN";
    case ErrorCode::NoGon: return "NO_GON";
    case ErrorCode::NotATriangle: return "NOT_A_TRIANGLE";
    case ErrorCode::StripViolation: return "STRIP_VIOLATION";
    case ErrorCode::BadSubset: return "BAD_SUBSET";
    case ErrorCode::SizeMismatch: return "SIZE_MISMATCH";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_text(std::string_view text) {
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        pos = 1;
    if (pos == text.size())
        return false;
    for (; pos < text.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(text[pos])))
            return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view text) {
    if (!is_integer_text(text))
        throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return mpz_class(digits, 10);
}

} // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    mpz_class num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw Error(ErrorCode::ParseError, "signed denominator in '" + std::string(text) + "'");
    mpz_class den = parse_integer(den_text);
    if (den == 0)
        throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

int sign(const Rational& value) {
    return sgn(value);
}

Point operator+(const Point& a, const Point& b) {
    return {a.x + b.x, a.y + b.y};
}

Point operator-(const Point& a, const Point& b) {
    return {a.x - b.x, a.y - b.y};
}

Point operator*(const Rational& s, const Point& p) {
    return {s * p.x, s * p.y};
}

Rational dot(const Point& a, const Point& b) {
    return a.x * b.x + a.y * b.y;
}

Rational cross(const Point& a, const Point& b) {
    return a.x * b.y - a.y * b.x;
}

bool point_less(const Point& a, const Point& b) {
    if (a.x != b.x)
        return a.x < b.x;
    return a.y < b.y;
}

LineEq::LineEq(Rational a, Rational b, Rational c) {
    if (a == 0 && b == 0)
        throw Error(ErrorCode::InvalidArgument, "line with a = b = 0");
    const Rational lead = (a != 0) ? a : b;
    a_ = a / lead;
    b_ = b / lead;
    c_ = c / lead;
}

Rational LineEq::eval(const Point& p) const {
    return a_ * p.x + b_ * p.y;
}

LineEq LineEq::with_offset(Rational c) const {
    return LineEq(a_, b_, std::move(c));
}

Point LineEq::anchor() const {
    if (a_ != 0)
        return {c_ / a_, Rational(0)};
    return {Rational(0), c_ / b_};
}

Slope slope_of(const LineEq& line) {
    if (line.b() == 0)
        return Slope::infinite();
    Rational m = -line.a() / line.b();
    return Slope::finite(m);
}

std::string format_slope(const Slope& slope) {
    return slope.is_infinite() ? std::string("inf") : format_rational(slope.value());
}

SlopeKey::SlopeKey(const Slope& slope) {
    if (slope.is_infinite()) {
        bucket_ = 1;
    } else if (slope.value() >= 0) {
        bucket_ = 0;
        value_ = slope.value();
    } else {
        bucket_ = 2;
        value_ = slope.value();
    }
}

std::strong_ordering operator<=>(const SlopeKey& l, const SlopeKey& r) {
    if (l.bucket_ != r.bucket_)
        return l.bucket_ <=> r.bucket_;
    int c = cmp(l.value_, r.value_);
    return c <=> 0;
}

SlopeKey slope_order_key(const Slope& slope) {
    return SlopeKey(slope);
}

Point base_direction(const Slope& slope) {
    if (slope.is_infinite())
        return {Rational(0), Rational(1)};
    if (slope.value() >= 0)
        return {Rational(1), slope.value()};
    return {Rational(-1), -slope.value()};
}

int side_of(const LineEq& line, const Point& p) {
    return sign(line.eval(p) - line.c());
}

std::optional<Point> intersect(const LineEq& l1, const LineEq& l2) {
    Rational det = l1.a() * l2.b() - l1.b() * l2.a();
    if (det == 0)
        return std::nullopt;
    Rational x = (l1.c() * l2.b() - l1.b() * l2.c()) / det;
    Rational y = (l1.a() * l2.c() - l1.c() * l2.a()) / det;
    return Point{x, y};
}

OrientedLine orient(const LineEq& line, const Point& origin) {
    // Offset of the line relative to the working origin. The normal (a, b)
    // points away from the origin when the offset is positive; rotating that
    // outward normal a quarter turn anticlockwise puts the origin on the left.
    Rational offset = line.c() - line.eval(origin);
    int s = sign(offset);
    if (s == 0)
        throw Error(ErrorCode::Degenerate, "line passes through the working origin");
    Point d{-line.b(), line.a()};
    if (s < 0)
        d = Rational(-1) * d;
    return {line, d};
}

} // namespace lineart
