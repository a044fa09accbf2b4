#include "lineart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "lineart/error.hpp"
#include "lineart/regions.hpp"

namespace lineart {

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])))
            ++end;
        if (end > pos)
            out.emplace_back(text.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& token, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + what + " '" + token + "'");
}

Rational field(int line_no, const std::string& token) {
    try {
        return parse_rational(token);
    } catch (const Error&) {
        parse_fail(line_no, token, "bad rational");
    }
}

// Rounds to the nearest integer, halves up.
long to_pixel(const Rational& v) {
    mpz_class q;
    Rational shifted = v + Rational(1, 2);
    mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return q.get_si();
}

} // namespace

std::vector<LineEq> ArrangementFile::lines() const {
    std::vector<LineEq> out;
    for (const Record& r : records)
        out.push_back(r.line);
    return out;
}

std::vector<std::string> ArrangementFile::names() const {
    std::vector<std::string> out;
    for (const Record& r : records)
        out.push_back(r.name);
    return out;
}

int ArrangementFile::resolve(std::string_view token) const {
    for (std::size_t t = 0; t < records.size(); ++t)
        if (records[t].name == token)
            return static_cast<int>(t);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc() && ptr == token.data() + token.size() && value >= 1 &&
        value <= static_cast<int>(records.size()))
        return value - 1;
    throw Error(ErrorCode::InvalidArgument, "no line named or numbered '" + std::string(token) + "'");
}

Arrangement ArrangementFile::arrangement() const {
    std::vector<bool> flip(records.size(), false);
    for (const auto& [name, reversed] : orientations)
        flip[resolve(name)] = reversed;
    return Arrangement::build(lines(), flip);
}

LineFold ArrangementFile::fold() const {
    std::vector<std::pair<LineEq, int>> factors;
    for (const Record& r : records)
        factors.emplace_back(r.line, r.multiplicity);
    return fold_from_factored_polynomial(factors);
}

ArrangementFile parse_arrangement_file(std::string_view text) {
    ArrangementFile file;
    std::set<std::string> names;
    std::set<std::string> oriented;
    std::vector<std::pair<int, std::string>> pending_orients; // source line, name
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::vector<std::string> tok = split_tokens(raw);
        if (tok.empty())
            continue;

        if (tok[0] == "line") {
            if (tok.size() < 5 || tok.size() > 6)
                parse_fail(line_no, tok.back(), "expected 'line <name> <a> <b> <c> [multiplicity]' at");
            const std::string& name = tok[1];
            if (!names.insert(name).second)
                parse_fail(line_no, name, "duplicate name");
            Rational a = field(line_no, tok[2]), b = field(line_no, tok[3]), c = field(line_no, tok[4]);
            if (sign(a) == 0 && sign(b) == 0)
                parse_fail(line_no, tok[2], "both coefficients zero starting at");
            int mult = 1;
            if (tok.size() == 6) {
                auto [ptr, ec] = std::from_chars(tok[5].data(), tok[5].data() + tok[5].size(), mult);
                if (ec != std::errc() || ptr != tok[5].data() + tok[5].size() || mult < 1)
                    parse_fail(line_no, tok[5], "bad multiplicity");
            }
            file.records.push_back({name, LineEq(a, b, c), mult, line_no});
        } else if (tok[0] == "orient") {
            if (tok.size() != 3)
                parse_fail(line_no, tok.back(), "expected 'orient <name> +|-' at");
            if (tok[2] != "+" && tok[2] != "-")
                parse_fail(line_no, tok[2], "orientation must be + or -, got");
            if (!oriented.insert(tok[1]).second)
                parse_fail(line_no, tok[1], "orientation given twice for");
            pending_orients.emplace_back(line_no, tok[1]);
            file.orientations.emplace_back(tok[1], tok[2] == "-");
        } else {
            parse_fail(line_no, tok[0], "unknown record");
        }
    }
    if (file.records.empty())
        throw Error(ErrorCode::ParseError, "no line records");
    for (const auto& [where, name] : pending_orients)
        if (!names.count(name))
            parse_fail(where, name, "orientation for unknown line");
    return file;
}

ArrangementFile read_arrangement_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_arrangement_file(buffer.str());
}

std::string format_arrangement_file(const Arrangement& arr, const std::vector<std::string>& names,
                                    const std::vector<std::string>& comments) {
    const int n = arr.size();
    auto name_of = [&](int t) { return t < static_cast<int>(names.size()) ? names[t] : "L" + std::to_string(t + 1); };
    const Arrangement defaults = Arrangement::build(arr.lines());

    std::string out;
    for (const std::string& c : comments)
        out += "# " + c + "\n";
    for (int t = 0; t < n; ++t) {
        const LineEq& l = arr.line(t);
        out += "line " + name_of(t) + " " + format_rational(l.a()) + " " + format_rational(l.b()) + " " +
               format_rational(l.c()) + "\n";
    }
    for (int t = 0; t < n; ++t)
        if (sign(dot(arr.direction(t), defaults.direction(t))) < 0)
            out += "orient " + name_of(t) + " -\n";
    return out;
}

void Report::add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
}

void Report::add(std::string key, bool value) {
    add(std::move(key), std::string(value ? "true" : "false"));
}

void Report::add(std::string key, long value) {
    add(std::move(key), std::to_string(value));
}

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : entries_)
        out += k + ": " + v + "\n";
    return out;
}

std::string render_svg(const Arrangement& arr, const std::optional<std::array<int, 4>>& quad) {
    constexpr long canvas = 520;
    constexpr long pad = 20;
    const int n = arr.size();

    std::vector<Point> pts;
    for (VertexKey k : arr.vertex_keys())
        pts.push_back(arr.vertex(k));
    if (pts.empty())
        pts.push_back(arr.line(0).anchor());
    Rational xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Point& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    Rational span = std::max(xmax - xmin, ymax - ymin);
    Rational margin = std::max(Rational(span / 4), Rational(1));
    xmin -= margin;
    xmax += margin;
    ymin -= margin;
    ymax += margin;
    span += 2 * margin;
    const Rational scale = Rational(canvas - 2 * pad) / span;
    auto px = [&](const Point& p) {
        return std::to_string(to_pixel(pad + (p.x - xmin) * scale)) + "," +
               std::to_string(to_pixel(pad + (ymax - p.y) * scale));
    };
    auto px_x = [&](const Point& p) { return std::to_string(to_pixel(pad + (p.x - xmin) * scale)); };
    auto px_y = [&](const Point& p) { return std::to_string(to_pixel(pad + (ymax - p.y) * scale)); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << canvas << "\" height=\"" << canvas
        << "\" viewBox=\"0 0 " << canvas << " " << canvas << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << canvas << "\" height=\"" << canvas << "\" fill=\"white\"/>\n";

    for (const Region& r : enumerate_regions(arr)) {
        if (!r.bounded)
            continue;
        svg << "<polygon class=\"region\" fill=\"#d8d8d8\" stroke=\"none\" points=\"";
        for (std::size_t t = 0; t < r.boundary.size(); ++t)
            svg << (t ? " " : "") << px(arr.vertex(r.boundary[t]));
        svg << "\"/>\n";
    }

    for (int t = 0; t < n; ++t) {
        const LineEq& l = arr.line(t);
        std::vector<Point> hits;
        if (sign(l.b()) != 0)
            for (const Rational& x : {xmin, xmax}) {
                Point p{x, (l.c() - l.a() * x) / l.b()};
                if (p.y >= ymin && p.y <= ymax)
                    hits.push_back(p);
            }
        if (sign(l.a()) != 0)
            for (const Rational& y : {ymin, ymax}) {
                Point p{(l.c() - l.b() * y) / l.a(), y};
                if (p.x >= xmin && p.x <= xmax)
                    hits.push_back(p);
            }
        std::sort(hits.begin(), hits.end(), point_less);
        // Oriented segment: start behind, end ahead along the line direction.
        Point from = hits.front(), to = hits.back();
        if (sign(dot(to - from, arr.direction(t))) < 0)
            std::swap(from, to);
        svg << "<line class=\"line\" x1=\"" << px_x(from) << "\" y1=\"" << px_y(from) << "\" x2=\"" << px_x(to)
            << "\" y2=\"" << px_y(to) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << px_x(to) << "\" y=\"" << px_y(to) << "\" font-size=\"14\">" << t + 1 << "</text>\n";
    }

    for (VertexKey k : arr.vertex_keys())
        svg << "<circle class=\"vertex\" cx=\"" << px_x(arr.vertex(k)) << "\" cy=\"" << px_y(arr.vertex(k))
            << "\" r=\"3\" fill=\"black\"/>\n";

    if (quad) {
        const auto& q = *quad;
        std::set<int> distinct(q.begin(), q.end());
        if (distinct.size() != 4 || *distinct.begin() < 0 || *distinct.rbegin() >= n)
            throw Error(ErrorCode::InvalidArgument, "quad needs four distinct line indices");
        Arrangement sub = arr.subset(std::span<const int>(q.data(), q.size()));
        for (int s = 0; s < 4; ++s) {
            for (int t = s + 1; t < 4; ++t) {
                VertexKey key(q[s], q[t]);
                const bool nook = sub.classify(VertexKey(s, t)) == PointClass::NonOuter;
                svg << "<circle class=\"quad" << (nook ? " nook" : "") << "\" cx=\"" << px_x(arr.vertex(key))
                    << "\" cy=\"" << px_y(arr.vertex(key)) << "\" r=\"" << (nook ? 9 : 5)
                    << "\" fill=\"none\" stroke=\"" << (nook ? "red" : "blue") << "\" stroke-width=\"2\"/>\n";
            }
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace lineart
