#include "lineart/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "lineart/error.hpp"

namespace lineart {

namespace {

void require_same_size(const Arrangement& a, const Arrangement& b) {
    if (a.size() != b.size())
        throw Error(ErrorCode::SizeMismatch,
                    std::to_string(a.size()) + " lines against " + std::to_string(b.size()));
}

// Order along `line` restricted to the lines with keep[t] set.
std::vector<int> restricted_order(const Arrangement& arr, int line, const std::vector<char>& keep) {
    std::vector<int> out;
    for (int t : arr.per_line_order(line))
        if (keep[t])
            out.push_back(t);
    return out;
}

template <class F>
void for_each_quad(int n, F&& f) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    f(std::array<int, 4>{a, b, c, d});
}

VertexKey map_key(const VertexKey& v, const std::vector<int>& image) {
    return VertexKey(image[v.i], image[v.j]);
}

bool same_pair(std::pair<VertexKey, VertexKey> p, std::pair<VertexKey, VertexKey> q) {
    return (p.first == q.first && p.second == q.second) || (p.first == q.second && p.second == q.first);
}

// Sorted multiset of unoriented inner coordinates of the vertices on a line.
std::vector<std::pair<int, int>> line_profile(const Arrangement& arr, int line) {
    const int n = arr.size();
    std::vector<std::pair<int, int>> out;
    for (int t : arr.per_line_order(line)) {
        InnerCoordinates ic = arr.inner_coordinates(line, t);
        int on_line = line == ic.point.i ? ic.rank_on_i : ic.rank_on_j;
        int on_other = line == ic.point.i ? ic.rank_on_j : ic.rank_on_i;
        out.emplace_back(std::min(on_line, n - on_line), std::min(on_other, n - on_other));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

QuadStructure quad_structure(const Arrangement& arr, std::array<int, 4> lines) {
    std::set<int> distinct(lines.begin(), lines.end());
    if (distinct.size() != 4 || *distinct.begin() < 0 || *distinct.rbegin() >= arr.size())
        throw Error(ErrorCode::InvalidArgument, "a quadrilateral structure needs four distinct lines");
    Arrangement sub = arr.subset(lines);

    QuadStructure q;
    q.lines = lines;
    std::vector<VertexKey> nooks, extremes, others;
    for (const VertexKey& v : sub.vertex_keys()) {
        VertexKey original(lines[v.i], lines[v.j]);
        switch (sub.classify(v)) {
        case PointClass::NonOuter:
            nooks.push_back(original);
            break;
        case PointClass::Extreme:
            extremes.push_back(original);
            break;
        case PointClass::Outer:
            others.push_back(original);
            break;
        }
    }
    if (nooks.size() != 1 || extremes.size() != 3 || others.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "four lines without a unique nook");
    q.nook = nooks[0];

    std::vector<int> rest;
    for (int l : lines)
        if (!q.nook.contains(l))
            rest.push_back(l);
    q.extreme_nook = VertexKey(rest[0], rest[1]);
    auto it = std::find(extremes.begin(), extremes.end(), q.extreme_nook);
    if (it == extremes.end())
        throw Error(ErrorCode::InvalidArgument, "extreme nook is not an extreme point");
    extremes.erase(it);
    q.end_points = {extremes[0], extremes[1]};
    q.central_pair = {others[0], others[1]};
    return q;
}

bool iso_check_orders(const Arrangement& a, const Arrangement& b, const LineBijection& f) {
    require_same_size(a, b);
    const int n = a.size();
    if (static_cast<int>(f.image.size()) != n || (!f.reversed.empty() && static_cast<int>(f.reversed.size()) != n))
        throw Error(ErrorCode::InvalidArgument, "bijection has the wrong size");
    std::vector<int> seen(f.image.begin(), f.image.end());
    std::sort(seen.begin(), seen.end());
    for (int t = 0; t < n; ++t)
        if (seen[t] != t)
            throw Error(ErrorCode::InvalidArgument, "not a bijection of the lines");

    for (int i = 0; i < n; ++i) {
        std::vector<int> mapped;
        for (int t : a.per_line_order(i))
            mapped.push_back(f.image[t]);
        const std::vector<int>& target = b.per_line_order(f.image[i]);
        bool forward = mapped == target;
        bool backward = std::equal(mapped.begin(), mapped.end(), target.rbegin());
        if (f.reversed.empty() ? !(forward || backward) : !(f.reversed[i] ? backward : forward))
            return false;
    }
    return true;
}

std::optional<LineBijection> iso_search(const Arrangement& a, const Arrangement& b) {
    require_same_size(a, b);
    const int n = a.size();
    std::vector<std::vector<std::pair<int, int>>> pa(n), pb(n);
    for (int i = 0; i < n; ++i) {
        pa[i] = line_profile(a, i);
        pb[i] = line_profile(b, i);
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0), assigned_a(n, 0), assigned_b(n, 0);

    // Orders among the assigned lines must already agree up to reversal.
    auto consistent = [&]() {
        for (int i = 0; i < n; ++i) {
            if (!assigned_a[i])
                continue;
            std::vector<int> mapped;
            for (int t : restricted_order(a, i, assigned_a))
                mapped.push_back(image[t]);
            std::vector<int> target = restricted_order(b, image[i], assigned_b);
            if (mapped != target && !std::equal(mapped.begin(), mapped.end(), target.rbegin()))
                return false;
        }
        return true;
    };

    std::function<bool(int)> place = [&](int i) {
        if (i == n)
            return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || pa[i] != pb[c])
                continue;
            image[i] = c;
            used[c] = assigned_a[i] = assigned_b[c] = 1;
            if (consistent() && place(i + 1))
                return true;
            used[c] = assigned_a[i] = assigned_b[c] = 0;
            image[i] = -1;
        }
        return false;
    };
    if (!place(0))
        return std::nullopt;

    LineBijection f{image, std::vector<bool>(n)};
    for (int i = 0; i < n; ++i) {
        std::vector<int> mapped;
        for (int t : a.per_line_order(i))
            mapped.push_back(image[t]);
        f.reversed[i] = mapped != b.per_line_order(image[i]);
    }
    return f;
}

bool nook_iso_check(const Arrangement& a, const Arrangement& b) {
    require_same_size(a, b);
    Arrangement sa = a.relabeled(a.slope_sorted_indices());
    Arrangement sb = b.relabeled(b.slope_sorted_indices());
    bool same = true;
    for_each_quad(a.size(), [&](std::array<int, 4> s) {
        if (same && quad_structure(sa, s).nook != quad_structure(sb, s).nook)
            same = false;
    });
    return same;
}

bool slope_indexed_orders_check(const Arrangement& a, const Arrangement& b) {
    require_same_size(a, b);
    Arrangement sa = a.relabeled(a.slope_sorted_indices());
    Arrangement sb = b.relabeled(b.slope_sorted_indices());
    LineBijection id;
    id.image.resize(a.size());
    std::iota(id.image.begin(), id.image.end(), 0);
    return iso_check_orders(sa, sb, id);
}

int nook_automorphisms(const QuadStructure& quad, bool keep_central_pair) {
    std::array<int, 4> perm{0, 1, 2, 3};
    int count = 0;
    do {
        std::vector<int> image(*std::max_element(quad.lines.begin(), quad.lines.end()) + 1, -1);
        for (int t = 0; t < 4; ++t)
            image[quad.lines[t]] = quad.lines[perm[t]];
        if (map_key(quad.nook, image) != quad.nook)
            continue;
        if (keep_central_pair &&
            !same_pair({map_key(quad.central_pair.first, image), map_key(quad.central_pair.second, image)},
                       quad.central_pair))
            continue;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool preserves_quads(const Arrangement& a, const Arrangement& b, const std::vector<int>& image) {
    require_same_size(a, b);
    bool ok = true;
    for_each_quad(a.size(), [&](std::array<int, 4> s) {
        if (!ok)
            return;
        QuadStructure qa = quad_structure(a, s);
        QuadStructure qb = quad_structure(b, {image[s[0]], image[s[1]], image[s[2]], image[s[3]]});
        ok = map_key(qa.nook, image) == qb.nook &&
             same_pair({map_key(qa.central_pair.first, image), map_key(qa.central_pair.second, image)},
                       qb.central_pair);
    });
    return ok;
}

std::vector<int> nook_profile(const Arrangement& arr) {
    std::map<VertexKey, int> count;
    for (const VertexKey& v : arr.vertex_keys())
        count[v] = 0;
    for_each_quad(arr.size(), [&](std::array<int, 4> s) { count[quad_structure(arr, s).nook] += 1; });
    std::vector<int> out;
    for (const auto& [v, c] : count)
        out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lineart
