#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's counting code.

#include "kron/bigint.hpp"
#include "kron/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace kron::ref {

// Bell numbers from Stirling numbers of the second kind.
inline bigint bell(int n)
{
    std::vector<std::vector<bigint>> st(static_cast<std::size_t>(n + 1), std::vector<bigint>(static_cast<std::size_t>(n + 1), 0));
    st[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= i; ++k)
            st[i][k] = k * st[i - 1][k] + st[i - 1][k - 1];
    bigint b = 0;
    for (int k = 0; k <= n; ++k)
        b += st[n][k];
    return b;
}

// Partition numbers from Euler's pentagonal recurrence.
inline bigint partition_count(int n)
{
    std::vector<bigint> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        bigint acc = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            int sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * p[m - g1];
            if (g2 <= m)
                acc += sign * p[m - g2];
        }
        p[m] = acc;
    }
    return p[n];
}

inline std::vector<int> conjugate(const std::vector<int>& p)
{
    std::vector<int> c;
    for (int j = 1; !p.empty() && j <= p[0]; ++j)
        c.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
    return c;
}

// Hook length formula for the number of standard tableaux.
inline bigint hook_dim(const std::vector<int>& p)
{
    auto c = conjugate(p);
    bigint num = 1, den = 1;
    int n = std::accumulate(p.begin(), p.end(), 0);
    for (int i = 2; i <= n; ++i)
        num *= i;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j)
            den *= (p[i] - j - 1) + (c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1) + 1;
    return num / den;
}

// Standard skew tableaux of outer / inner by removing outer corners.
inline bigint skew_syt(std::vector<int> outer, const std::vector<int>& inner)
{
    std::map<std::vector<int>, bigint> memo;
    std::function<bigint(std::vector<int>&)> go = [&](std::vector<int>& o) -> bigint {
        bool done = true;
        for (std::size_t i = 0; i < o.size(); ++i)
            if (o[i] != (i < inner.size() ? inner[i] : 0))
                done = false;
        if (done)
            return 1;
        if (auto it = memo.find(o); it != memo.end())
            return it->second;
        bigint total = 0;
        for (std::size_t i = 0; i < o.size(); ++i) {
            int in = i < inner.size() ? inner[i] : 0;
            int below = i + 1 < o.size() ? o[i + 1] : 0;
            if (o[i] > in && o[i] > below) {
                --o[i];
                total += go(o);
                ++o[i];
            }
        }
        memo[o] = total;
        return total;
    };
    return go(outer);
}

// All fillings of a skew shape with entries 1..m, weight w, rows weakly
// increasing, columns strictly increasing. Calls visit(filling) with rows of
// entries, where row i covers columns inner_i..outer_i-1.
inline void skew_ssyt_fillings(const std::vector<int>& outer, const std::vector<int>& inner, const std::vector<int>& w,
                               const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    std::size_t rows = outer.size();
    auto in = [&](std::size_t i) { return i < inner.size() ? inner[i] : 0; };
    std::vector<std::vector<int>> fill(rows);
    for (std::size_t i = 0; i < rows; ++i)
        fill[i].assign(static_cast<std::size_t>(outer[i]), 0);
    std::vector<int> left = w;
    int m = static_cast<int>(w.size());
    std::function<void(std::size_t, int)> go = [&](std::size_t i, int j) {
        if (i == rows) {
            if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }))
                visit(fill);
            return;
        }
        if (j == outer[i]) {
            go(i + 1, i + 1 < rows ? in(i + 1) : 0);
            return;
        }
        int lo = 1;
        if (j > in(i))
            lo = std::max(lo, fill[i][static_cast<std::size_t>(j - 1)]);
        if (i > 0 && j < outer[i - 1] && j >= in(i - 1))
            lo = std::max(lo, fill[i - 1][static_cast<std::size_t>(j)] + 1);
        for (int v = lo; v <= m; ++v) {
            if (left[static_cast<std::size_t>(v - 1)] == 0)
                continue;
            --left[static_cast<std::size_t>(v - 1)];
            fill[i][static_cast<std::size_t>(j)] = v;
            go(i, j + 1);
            ++left[static_cast<std::size_t>(v - 1)];
        }
        fill[i][static_cast<std::size_t>(j)] = 0;
    };
    go(0, rows > 0 ? in(0) : 0);
}

// Lattice test by prefix counts: in every prefix, #i >= #(i+1).
inline bool prefix_lattice(const std::vector<int>& word)
{
    std::map<int, int> count;
    for (int x : word) {
        ++count[x];
        if (x > 1 && count[x] > count[x - 1])
            return false;
    }
    return true;
}

// Kostka number by brute-force filling.
inline bigint kostka(const std::vector<int>& shape, const std::vector<int>& weight)
{
    bigint n = 0;
    skew_ssyt_fillings(shape, {}, weight, [&](const auto&) { ++n; });
    return n;
}

// LR coefficient by brute force: fillings of nu / lambda with weight mu whose
// right-to-left, top-to-bottom reading word satisfies the prefix-count test.
inline bigint lr(const std::vector<int>& lambda, const std::vector<int>& nu, const std::vector<int>& mu)
{
    bigint n = 0;
    skew_ssyt_fillings(nu, lambda, mu, [&](const std::vector<std::vector<int>>& f) {
        std::vector<int> word;
        for (std::size_t i = 0; i < f.size(); ++i) {
            int in = i < lambda.size() ? lambda[i] : 0;
            for (int j = static_cast<int>(f[i].size()) - 1; j >= in; --j)
                word.push_back(f[i][static_cast<std::size_t>(j)]);
        }
        if (prefix_lattice(word))
            ++n;
    });
    return n;
}

// Brute-force set partitions count of an n-element set by restricted growth
// strings.
inline bigint count_set_partitions(int n)
{
    bigint total = 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> go = [&](int i, int mx) {
        if (i == n) {
            ++total;
            return;
        }
        for (int v = 0; v <= mx + 1; ++v) {
            rgs[static_cast<std::size_t>(i)] = v;
            go(i + 1, std::max(mx, v));
        }
    };
    if (n == 0)
        return 1;
    go(1, 0);
    return total;
}

} // namespace kron::ref
