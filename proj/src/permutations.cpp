#include "lineart/permutations.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lineart/error.hpp"

namespace lineart {

Cycle normalize_cycle(std::vector<int> seq) {
    if (seq.empty())
        return seq;
    auto least = std::min_element(seq.begin(), seq.end());
    std::rotate(seq.begin(), least, seq.end());
    return seq;
}

Cycle one_based_cycle(std::initializer_list<int> letters) {
    std::vector<int> seq;
    for (int a : letters)
        seq.push_back(a - 1);
    return normalize_cycle(std::move(seq));
}

std::string format_cycle(const Cycle& cycle) {
    std::string out = "(";
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        if (t)
            out += ' ';
        out += std::to_string(cycle[t] + 1);
    }
    return out + ")";
}

Cycle parse_cycle(const std::string& text) {
    std::string cleaned;
    for (char ch : text)
        cleaned += (ch == '(' || ch == ')' || ch == ',') ? ' ' : ch;
    std::istringstream in(cleaned);
    std::vector<int> seq;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument(tok);
            seq.push_back(v - 1);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad cycle letter '" + tok + "'");
        }
    }
    if (!is_full_cycle(seq))
        throw Error(ErrorCode::ParseError, "'" + text + "' is not a cycle on 1..n");
    return normalize_cycle(std::move(seq));
}

bool is_full_cycle(std::span<const int> seq) {
    std::vector<bool> seen(seq.size(), false);
    for (int a : seq) {
        if (a < 0 || a >= static_cast<int>(seq.size()) || seen[a])
            return false;
        seen[a] = true;
    }
    return !seq.empty();
}

namespace {

std::vector<int> positions(const Cycle& cycle) {
    std::vector<int> pos(cycle.size());
    for (std::size_t t = 0; t < cycle.size(); ++t)
        pos[cycle[t]] = static_cast<int>(t);
    return pos;
}

} // namespace

int minimal_standardness(const Cycle& cycle) {
    Cycle c = normalize_cycle(cycle);
    // Patience sorting on the negated sequence gives the longest decreasing run.
    std::vector<int> tails;
    for (int a : c) {
        auto it = std::lower_bound(tails.begin(), tails.end(), -a);
        if (it == tails.end())
            tails.push_back(-a);
        else
            *it = -a;
    }
    return static_cast<int>(tails.size());
}

CycleDecomp decompose(const Cycle& cycle) {
    if (!is_full_cycle(cycle))
        throw Error(ErrorCode::InvalidArgument, "not an n-cycle");
    CycleDecomp d;
    d.cycle = normalize_cycle(cycle);
    const auto pos = positions(d.cycle);
    const int n = static_cast<int>(d.cycle.size());
    d.rows.push_back({0});
    for (int t = 1; t < n; ++t) {
        if (pos[t] > pos[t - 1])
            d.rows.back().push_back(t);
        else
            d.rows.push_back({t});
    }
    d.standardness = static_cast<int>(d.rows.size());
    d.consecutive = minimal_standardness(d.cycle) == d.standardness;
    return d;
}

bool in_Tn(const Cycle& cycle) {
    return decompose(cycle).standardness == 2;
}

std::vector<Cycle> enumerate_Tn(int n) {
    if (n < 3)
        throw Error(ErrorCode::InvalidArgument, "T_n needs n >= 3");
    std::vector<Cycle> out;
    // Rows {0..j-1} and {j..n-1}; after the leading 0, shuffle the rest of
    // row one with row two, keeping only shuffles where j precedes j-1.
    for (int j = 1; j < n; ++j) {
        const int first_rest = j - 1;
        const int slots = n - 1;
        std::vector<bool> from_first(slots, false);
        std::fill(from_first.begin(), from_first.begin() + first_rest, true);
        std::sort(from_first.begin(), from_first.end());
        do {
            Cycle c{0};
            int a = 1, b = j;
            for (bool f : from_first)
                c.push_back(f ? a++ : b++);
            if (in_Tn(c))
                out.push_back(std::move(c));
        } while (std::next_permutation(from_first.begin(), from_first.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Cycle rotate_letters(const Cycle& cycle, int shift) {
    const int n = static_cast<int>(cycle.size());
    std::vector<int> seq;
    for (int a : cycle)
        seq.push_back(((a + shift) % n + n) % n);
    return normalize_cycle(std::move(seq));
}

Cycle orbit_representative(const Cycle& cycle) {
    Cycle best = normalize_cycle(cycle);
    for (int s = 1; s < static_cast<int>(cycle.size()); ++s)
        best = std::min(best, rotate_letters(cycle, s));
    return best;
}

long orbit_count_Tn(int n) {
    std::set<Cycle> reps;
    for (const Cycle& c : enumerate_Tn(n))
        reps.insert(orbit_representative(c));
    return static_cast<long>(reps.size());
}

Cycle local_cycle(const Cycle& cycle, std::span<const int> chart_order) {
    const int n = static_cast<int>(cycle.size());
    std::vector<int> rename(n, -1);
    for (std::size_t t = 0; t < chart_order.size(); ++t) {
        int a = chart_order[t];
        if (a < 0 || a >= n || rename[a] != -1)
            throw Error(ErrorCode::BadSubset, "chart order is not a subset of the letters");
        rename[a] = static_cast<int>(t);
    }
    std::vector<int> seq;
    for (int a : cycle) {
        if (rename[a] >= 0)
            seq.push_back(rename[a]);
    }
    return normalize_cycle(std::move(seq));
}

Cycle reversed(const Cycle& cycle) {
    std::vector<int> seq(cycle.rbegin(), cycle.rend());
    return normalize_cycle(std::move(seq));
}

} // namespace lineart
