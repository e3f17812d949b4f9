#pragma once

// Slow reference implementations written straight from the definitions, used
// to pin down the library's results.

#include "qh/quandle.hpp"
#include "qh/rng.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>; // row-major

inline std::int64_t reduce(std::int64_t v, std::int64_t p) { return ((v % p) + p) % p; }

inline std::int64_t inverse(std::int64_t a, std::int64_t p)
{
    for (std::int64_t x = 1; x < p; ++x)
        if (reduce(a * x, p) == 1)
            return x;
    return 0;
}

inline std::size_t rank_mod(Dense m, std::int64_t p)
{
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && reduce(m[piv][c], p) == 0)
            ++piv;
        if (piv == rows)
            continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t inv = inverse(reduce(m[rank][c], p), p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank)
                continue;
            const std::int64_t f = reduce(m[r][c] * inv, p);
            if (f)
                for (std::size_t k = c; k < cols; ++k)
                    m[r][k] = reduce(m[r][k] - f * m[rank][k], p);
        }
        ++rank;
    }
    return rank;
}

inline std::int64_t det(const Dense& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    std::int64_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Dense minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<std::int64_t> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j)
                    row.push_back(m[r][c]);
            minor.push_back(row);
        }
        s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
    }
    return s;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out)
{
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k the gcd of all k x k minors.
inline std::vector<std::int64_t> determinantal_invariants(const Dense& m)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<std::int64_t> out;
    std::int64_t prev = 1;
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        std::vector<std::size_t> cur;
        subsets(rows, k, 0, cur, rs);
        subsets(cols, k, 0, cur, cs);
        std::int64_t g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                Dense sub;
                for (auto i : r) {
                    std::vector<std::int64_t> row;
                    for (auto j : c)
                        row.push_back(m[i][j]);
                    sub.push_back(row);
                }
                g = std::gcd(g, det(sub));
            }
        if (g == 0)
            break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Cells (y; x_1..x_n) of the rack space with Y = point (ysize 1) or Y = X
// (y ⋆ x = y * x), encoded y*|X|^n + sum x_i |X|^(n-i).
struct Cell {
    std::uint32_t y;
    std::vector<std::uint32_t> x;
};

inline std::uint64_t encode(const Cell& c, std::size_t xs)
{
    std::uint64_t v = c.y;
    for (auto xi : c.x)
        v = v * xs + xi;
    return v;
}

inline Cell decode(std::uint64_t idx, std::size_t xs, int n)
{
    Cell c;
    c.x.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        c.x[i] = static_cast<std::uint32_t>(idx % xs);
        idx /= xs;
    }
    c.y = static_cast<std::uint32_t>(idx);
    return c;
}

// Face removing x_i (1-based): eps = 0 drops it, eps = 1 acts by it.
inline Cell face(const qh::Quandle& q, bool self, const Cell& c, int i, int eps)
{
    Cell out;
    const std::uint32_t xi = c.x[i - 1];
    out.y = eps && self ? q.op(c.y, xi) : c.y;
    for (int j = 1; j <= static_cast<int>(c.x.size()); ++j) {
        if (j == i)
            continue;
        std::uint32_t v = c.x[j - 1];
        if (eps && j < i)
            v = q.op(v, xi);
        out.x.push_back(v);
    }
    return out;
}

// Dense boundary out of degree n over Z: sum (-1)^i (d0_i - d1_i).
inline Dense boundary(const qh::Quandle& q, bool self, int n)
{
    const std::size_t xs = q.size(), ys = self ? xs : 1;
    std::size_t cols = ys, rows = ys;
    for (int i = 0; i < n; ++i)
        cols *= xs;
    for (int i = 0; i + 1 < n; ++i)
        rows *= xs;
    Dense m(n == 0 ? 0 : rows, std::vector<std::int64_t>(cols, 0));
    if (n == 0)
        return m;
    for (std::size_t c = 0; c < cols; ++c) {
        const Cell cell = decode(c, xs, n);
        for (int i = 1; i <= n; ++i) {
            const std::int64_t s = i % 2 ? -1 : 1;
            m[encode(face(q, self, cell, i, 0), xs)][c] += s;
            m[encode(face(q, self, cell, i, 1), xs)][c] -= s;
        }
    }
    return m;
}

inline std::vector<std::size_t> betti_mod(const qh::Quandle& q, bool self, int max, std::int64_t p)
{
    std::vector<std::size_t> ranks(max + 2, 0), dims;
    for (int n = 1; n <= max + 1; ++n)
        ranks[n] = rank_mod(boundary(q, self, n), p);
    std::size_t cells = self ? q.size() : 1;
    for (int n = 0; n <= max; ++n) {
        dims.push_back(cells - ranks[n] - ranks[n + 1]);
        cells *= q.size();
    }
    return dims;
}

// Parity of a permutation by counting inversions.
inline int parity(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            inv += perm[i] > perm[j];
    return inv % 2 ? -1 : 1;
}

} // namespace oracle
