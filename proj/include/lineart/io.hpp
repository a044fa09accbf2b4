#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lineart/arrangement.hpp"
#include "lineart/linefold.hpp"

namespace lineart {

/// Text format, one record per line:
///
///     # comment
///     line <name> <a> <b> <c> [multiplicity]     a*x + b*y = c
///     orient <name> +|-                          - reverses the default direction
///
/// Rationals are integers or p/q.
struct ArrangementFile {
    struct Record {
        std::string name;
        LineEq line;
        int multiplicity;
        int source_line;
    };
    std::vector<Record> records;
    std::vector<std::pair<std::string, bool>> orientations; // name, reversed

    std::vector<LineEq> lines() const;
    std::vector<std::string> names() const;
    /// 0-based index of the named line, or of a 1-based number. Throws InvalidArgument.
    int resolve(std::string_view token) const;
    /// Throws NotGeneric.
    Arrangement arrangement() const;
    LineFold fold() const;
};

/// Throws ParseError with the 1-based line number and offending token.
ArrangementFile parse_arrangement_file(std::string_view text);
ArrangementFile read_arrangement_file(const std::string& path);

/// `line` records for every line and `orient <name> -` where the direction
/// is against the default one. Names default to L1, L2, ...
std::string format_arrangement_file(const Arrangement& arr, const std::vector<std::string>& names = {},
                                    const std::vector<std::string>& comments = {});

/// Ordered `key: value` lines.
class Report {
public:
    void add(std::string key, std::string value);
    void add(std::string key, bool value);
    void add(std::string key, long value);
    void add(std::string key, int value) { add(std::move(key), static_cast<long>(value)); }
    void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
    std::string str() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Lines clipped to a box around every vertex, vertices as dots, bounded
/// regions shaded; with `quad`, its six vertices marked and its nook enlarged.
/// Integer coordinates only.
std::string render_svg(const Arrangement& arr, const std::optional<std::array<int, 4>>& quad = std::nullopt);

} // namespace lineart
