#pragma once

#include <span>
#include <string>
#include <vector>

namespace lineart {

/// An n-cycle on letters 0..n-1 written as the cyclic sequence
/// (a_0 a_1 ... a_{n-1}) with a_0 = 0, meaning a_t -> a_{t+1}.
using Cycle = std::vector<int>;

/// Rotates a cyclic sequence so that it starts with its smallest letter.
Cycle normalize_cycle(std::vector<int> seq);

/// Builds a cycle from 1-based letters, e.g. one_based_cycle({1, 4, 5, 2, 3}).
Cycle one_based_cycle(std::initializer_list<int> letters);

/// "(1 4 5 2 3)" with 1-based letters.
std::string format_cycle(const Cycle& cycle);

/// Inverse of format_cycle; accepts spaces and/or commas, parentheses optional.
Cycle parse_cycle(const std::string& text);

bool is_full_cycle(std::span<const int> seq);

/// The unique consecutive structure of an n-cycle: rows are maximal runs
/// t, t+1, ... with each letter appearing to the right of its predecessor.
struct CycleDecomp {
    Cycle cycle;
    std::vector<std::vector<int>> rows;
    int standardness = 0;    // number of rows
    bool consecutive = true; // no structure with unrestricted rows uses fewer rows
};

CycleDecomp decompose(const Cycle& cycle);

/// Least number of increasing (by position) rows, without the consecutive
/// requirement; equals the longest decreasing subsequence of the cycle
/// written from its least letter.
int minimal_standardness(const Cycle& cycle);

/// Membership in T_n: the consecutive structure has exactly two rows.
bool in_Tn(const Cycle& cycle);

/// T_n generated as shuffles of the two runs, sorted lexicographically.
std::vector<Cycle> enumerate_Tn(int n);

/// Letter a becomes (a + shift) mod n.
Cycle rotate_letters(const Cycle& cycle, int shift);

/// Orbits of T_n under cyclic renumbering of the letters.
long orbit_count_Tn(int n);

/// Least element of the orbit of `cycle` under cyclic renumbering.
Cycle orbit_representative(const Cycle& cycle);

/// Deletes letters outside `chart_order`, then renames chart_order[t] to t.
Cycle local_cycle(const Cycle& cycle, std::span<const int> chart_order);

/// The same cyclic sequence read backwards.
Cycle reversed(const Cycle& cycle);

} // namespace lineart
