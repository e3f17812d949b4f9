#include "qh/smith.hpp"

#include "qh/quandle.hpp"

#include <algorithm>
#include <queue>

namespace qh {

std::vector<BigInt> SmithResult::torsion() const
{
    std::vector<BigInt> out;
    for (const auto& d : invariant_factors)
        if (d > 1)
            out.push_back(d);
    return out;
}

DenseBig to_dense(const SparseMatrix& a)
{
    DenseBig m(a.rows(), std::vector<BigInt>(a.cols()));
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.column(j).entries())
            m[i][j] = v;
    return m;
}

DenseBig multiply(const DenseBig& a, const DenseBig& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    DenseBig out(n, std::vector<BigInt>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

namespace {

DenseBig identity_big(std::size_t n)
{
    DenseBig m(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

void add_row(DenseBig& m, std::size_t dst, std::size_t src, const BigInt& q)
{
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        if (m[src][j] != 0)
            m[dst][j] += q * m[src][j];
}

void add_col(DenseBig& m, std::size_t dst, std::size_t src, const BigInt& q)
{
    for (auto& row : m)
        if (row[src] != 0)
            row[dst] += q * row[src];
}

void swap_cols(DenseBig& m, std::size_t a, std::size_t b)
{
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

} // namespace

DenseSmith smith_dense(DenseBig a, bool transforms)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    DenseSmith out;
    if (transforms) {
        out.u = identity_big(rows);
        out.v = identity_big(cols);
    }
    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        add_row(a, dst, src, q);
        if (transforms)
            add_row(out.u, dst, src, q);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& q) {
        add_col(a, dst, src, q);
        if (transforms)
            add_col(out.v, dst, src, q);
    };

    const std::size_t limit = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < limit; ++t) {
        bool have_pivot = false;
        for (;;) {
            // smallest |a| in the trailing block, lowest column then lowest row
            std::size_t pi = 0, pj = 0;
            BigInt best = -1;
            for (std::size_t j = t; j < cols; ++j)
                for (std::size_t i = t; i < rows; ++i) {
                    if (a[i][j] == 0)
                        continue;
                    BigInt m = abs(a[i][j]);
                    if (best < 0 || m < best) {
                        best = m;
                        pi = i;
                        pj = j;
                    }
                }
            if (best < 0)
                break;
            have_pivot = true;
            if (pi != t) {
                std::swap(a[pi], a[t]);
                if (transforms)
                    std::swap(out.u[pi], out.u[t]);
            }
            if (pj != t) {
                swap_cols(a, pj, t);
                if (transforms)
                    swap_cols(out.v, pj, t);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0) {
                    BigInt q = a[i][t] / a[t][t];
                    row_add(i, t, -q);
                    clean = clean && a[i][t] == 0;
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                if (a[t][j] != 0) {
                    BigInt q = a[t][j] / a[t][t];
                    col_add(j, t, -q);
                    clean = clean && a[t][j] == 0;
                }
            if (!clean)
                continue;
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows && divisible; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        row_add(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (!have_pivot)
            break;
        if (a[t][t] < 0) {
            for (auto& x : a[t])
                x = -x;
            if (transforms)
                for (auto& x : out.u[t])
                    x = -x;
        }
        out.invariant_factors.push_back(a[t][t]);
    }
    out.d = std::move(a);
    return out;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw Overflow{};
    return r;
}

using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Eliminates unit pivots; returns the number eliminated and leaves the rest in rows.
std::size_t eliminate_units(std::vector<Row>& rows, std::size_t ncols)
{
    std::vector<std::vector<std::uint32_t>> col_rows(ncols);
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, v] : rows[r])
            col_rows[c].push_back(r);
    std::vector<bool> row_alive(rows.size(), true);

    auto has_entry = [&](std::uint32_t r, std::uint32_t c) -> const std::int64_t* {
        const Row& row = rows[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::uint32_t x) { return e.first < x; });
        return (it != row.end() && it->first == c) ? &it->second : nullptr;
    };
    auto clean_col = [&](std::uint32_t c) {
        auto& lst = col_rows[c];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        lst.erase(std::remove_if(lst.begin(), lst.end(),
                                 [&](std::uint32_t r) { return !row_alive[r] || !has_entry(r, c); }),
                  lst.end());
    };

    using Item = std::pair<std::size_t, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (std::uint32_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty())
            queue.emplace(rows[r].size(), r);

    std::size_t units = 0;
    Row merged;
    while (!queue.empty()) {
        auto [len, r] = queue.top();
        queue.pop();
        if (!row_alive[r] || rows[r].size() != len || len == 0)
            continue;
        std::int64_t best_cost = -1;
        std::uint32_t pc = 0;
        std::int64_t pu = 0;
        for (const auto& [c, v] : rows[r]) {
            if (v != 1 && v != -1)
                continue;
            clean_col(c);
            auto cost = static_cast<std::int64_t>(col_rows[c].size());
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                pc = c;
                pu = v;
            }
        }
        if (best_cost < 0)
            continue; // no unit in this row for now
        const Row pivot = rows[r];
        for (std::uint32_t other : col_rows[pc]) {
            if (other == r)
                continue;
            const std::int64_t* ap = has_entry(other, pc);
            if (!ap)
                continue;
            const std::int64_t factor = checked_mul(*ap, pu);
            const Row& cur = rows[other];
            merged.clear();
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < cur.size() && cur[i].first < pivot[j].first)) {
                    merged.push_back(cur[i++]);
                } else if (i == cur.size() || pivot[j].first < cur[i].first) {
                    merged.emplace_back(pivot[j].first, checked_sub(0, checked_mul(factor, pivot[j].second)));
                    col_rows[pivot[j].first].push_back(other);
                    ++j;
                } else {
                    std::int64_t v = checked_sub(cur[i].second, checked_mul(factor, pivot[j].second));
                    if (v != 0)
                        merged.emplace_back(cur[i].first, v);
                    ++i;
                    ++j;
                }
            }
            rows[other].swap(merged);
            queue.emplace(rows[other].size(), other);
        }
        row_alive[r] = false;
        rows[r].clear();
        col_rows[pc].clear();
        ++units;
    }
    return units;
}

} // namespace

SmithResult smith_normal_form(const SparseMatrix& a)
{
    if (a.ring().is_field())
        throw InvalidInput("Smith normal form needs an integer matrix");
    SmithResult res;
    std::vector<Row> rows(a.rows());
    for (std::uint32_t j = 0; j < a.cols(); ++j)
        for (const auto& [i, v] : a.column(j).entries())
            rows[i].emplace_back(j, v);

    std::size_t units = 0;
    DenseBig core;
    try {
        units = eliminate_units(rows, a.cols());
        std::vector<std::uint32_t> col_map(a.cols(), UINT32_MAX);
        std::uint32_t ncols = 0;
        for (const auto& r : rows)
            for (const auto& [c, v] : r)
                if (col_map[c] == UINT32_MAX)
                    col_map[c] = ncols++;
        for (const auto& r : rows) {
            if (r.empty())
                continue;
            std::vector<BigInt> dense(ncols);
            for (const auto& [c, v] : r)
                dense[col_map[c]] = v;
            core.push_back(std::move(dense));
        }
    } catch (const Overflow&) {
        units = 0;
        core = to_dense(a);
    }
    res.invariant_factors.assign(units, BigInt(1));
    DenseSmith ds = smith_dense(std::move(core));
    for (auto& d : ds.invariant_factors)
        res.invariant_factors.push_back(d);
    return res;
}

} // namespace qh
