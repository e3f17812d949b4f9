#include "qh/linalg_fp.hpp"

#include "qh/quandle.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace qh {

FpEchelon::FpEchelon(std::size_t dim, std::uint32_t p, std::size_t tag_dim) : dim_(dim), p_(p), tag_dim_(tag_dim)
{
    if (!is_prime(p))
        throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
}

std::int64_t FpEchelon::reduce(std::vector<std::uint32_t>& acc, std::vector<std::uint32_t>& tacc,
                               std::vector<std::uint32_t>& touched, std::vector<std::uint32_t>& ttouched,
                               bool track) const
{
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap(std::greater<>{},
                                                                                       std::move(touched));
    touched.clear();
    while (!heap.empty()) {
        const std::uint32_t pos = heap.top();
        heap.pop();
        if (acc[pos] == 0)
            continue;
        auto it = pivot_row_.find(pos);
        if (it == pivot_row_.end()) {
            // remainder starts here: gather every position still nonzero
            touched.push_back(pos);
            while (!heap.empty()) {
                std::uint32_t q = heap.top();
                heap.pop();
                if (q != touched.back() && acc[q] != 0)
                    touched.push_back(q);
            }
            return pos;
        }
        const Row& row = rows_[it->second];
        const std::uint32_t c = acc[pos];
        for (const auto& [j, val] : row.entries) {
            const std::uint32_t old = acc[j];
            acc[j] = mod::sub(old, mod::mul(c, static_cast<std::uint32_t>(val), p_), p_);
            if (old == 0 && acc[j] != 0)
                heap.push(j);
        }
        if (track)
            for (const auto& [j, val] : row.tag) {
                const std::uint32_t old = tacc[j];
                tacc[j] = mod::sub(old, mod::mul(c, static_cast<std::uint32_t>(val), p_), p_);
                if (old == 0)
                    ttouched.push_back(j);
            }
    }
    return -1;
}

namespace {

std::vector<SparseVector::Entry> gather(const std::vector<std::uint32_t>& acc, std::vector<std::uint32_t>& pos)
{
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::vector<SparseVector::Entry> out;
    for (auto j : pos)
        if (acc[j] != 0)
            out.emplace_back(j, acc[j]);
    return out;
}

} // namespace

bool FpEchelon::insert(const SparseVector& v, const SparseVector& tag, SparseVector* relation)
{
    const bool track = tag_dim_ > 0;
    std::vector<std::uint32_t> acc(dim_, 0), tacc(track ? tag_dim_ : 0, 0);
    std::vector<std::uint32_t> touched, ttouched;
    for (const auto& [j, val] : v.entries()) {
        if (j >= dim_)
            throw std::out_of_range("vector exceeds echelon dimension");
        acc[j] = mod::reduce(val, p_);
        touched.push_back(j);
    }
    if (track)
        for (const auto& [j, val] : tag.entries()) {
            if (j >= tag_dim_)
                throw std::out_of_range("tag exceeds tag dimension");
            tacc[j] = mod::reduce(val, p_);
            ttouched.push_back(j);
        }
    const std::int64_t lead = reduce(acc, tacc, touched, ttouched, track);
    if (lead < 0) {
        if (relation) {
            Ring f = Ring::prime_field(p_);
            *relation = SparseVector::from_pairs(gather(tacc, ttouched), f);
        }
        return false;
    }
    Row row;
    row.entries = gather(acc, touched);
    const std::uint32_t inv = mod::inv(acc[lead], p_);
    for (auto& e : row.entries)
        e.second = mod::mul(static_cast<std::uint32_t>(e.second), inv, p_);
    if (track) {
        row.tag = gather(tacc, ttouched);
        for (auto& e : row.tag)
            e.second = mod::mul(static_cast<std::uint32_t>(e.second), inv, p_);
    }
    pivot_row_.emplace(static_cast<std::uint32_t>(lead), static_cast<std::uint32_t>(rows_.size()));
    rows_.push_back(std::move(row));
    return true;
}

bool FpEchelon::contains(const SparseVector& v) const
{
    std::vector<std::uint32_t> acc(dim_, 0), tacc, touched, ttouched;
    for (const auto& [j, val] : v.entries()) {
        if (j >= dim_)
            throw std::out_of_range("vector exceeds echelon dimension");
        acc[j] = mod::reduce(val, p_);
        touched.push_back(j);
    }
    return reduce(acc, tacc, touched, ttouched, false) < 0;
}

std::optional<SparseVector> FpEchelon::express(const SparseVector& v) const
{
    if (tag_dim_ == 0)
        throw std::logic_error("express needs a tagged echelon");
    std::vector<std::uint32_t> acc(dim_, 0), tacc(tag_dim_, 0), touched, ttouched;
    for (const auto& [j, val] : v.entries()) {
        if (j >= dim_)
            throw std::out_of_range("vector exceeds echelon dimension");
        acc[j] = mod::reduce(val, p_);
        touched.push_back(j);
    }
    if (reduce(acc, tacc, touched, ttouched, true) >= 0)
        return std::nullopt;
    Ring f = Ring::prime_field(p_);
    return SparseVector::from_pairs(gather(tacc, ttouched), f).scaled(-1);
}

std::vector<std::uint32_t> FpEchelon::pivots() const
{
    std::vector<std::uint32_t> out;
    for (const auto& r : rows_)
        out.push_back(r.entries.front().first);
    return out;
}

FpSolveResult solve_fp(const SparseMatrix& a, bool want_kernel)
{
    if (!a.ring().is_field())
        throw InvalidInput("solve_fp needs a matrix over a prime field");
    const std::uint32_t p = a.ring().p;
    FpSolveResult res;
    FpEchelon ech(a.rows(), p, want_kernel ? a.cols() : 0);
    for (std::uint32_t j = 0; j < a.cols(); ++j) {
        SparseVector rel;
        SparseVector tag = want_kernel ? SparseVector::from_pairs({{j, 1}}, a.ring()) : SparseVector();
        if (ech.insert(a.column(j), tag, want_kernel ? &rel : nullptr)) {
            res.image.push_back(a.column(j));
            res.pivot_columns.push_back(j);
        } else if (want_kernel) {
            res.kernel.push_back(std::move(rel));
        }
    }
    res.rank = ech.rank();
    return res;
}

std::size_t rank_fp(const SparseMatrix& a)
{
    if (!a.ring().is_field())
        throw InvalidInput("rank_fp needs a matrix over a prime field");
    const SparseMatrix t = a.cols() > a.rows() ? a.transpose() : SparseMatrix();
    const SparseMatrix& m = a.cols() > a.rows() ? t : a;
    // Inserting the columns last to first keeps the fill-in far lower on the
    // cubical boundary matrices.
    FpEchelon ech(m.rows(), a.ring().p);
    for (std::size_t j = m.cols(); j-- > 0;)
        ech.insert(m.column(j));
    return ech.rank();
}

ClassSpace::ClassSpace(const SparseMatrix& in, const SparseMatrix& out, const std::vector<SparseVector>& preferred)
    : ambient_(out.cols()),
      p_(out.ring().p),
      out_(out),
      boundaries_(out.cols(), out.ring().is_field() ? out.ring().p : 2),
      classes_(out.cols(), out.ring().is_field() ? out.ring().p : 2, std::max<std::size_t>(out.cols(), 1))
{
    if (!out.ring().is_field() || !(in.ring() == out.ring()))
        throw InvalidInput("class space needs both maps over the same prime field");
    if (in.rows() != out.cols())
        throw InvalidInput("incompatible maps: " + std::to_string(in.rows()) + " vs " + std::to_string(out.cols()));
    const Ring ring = out.ring();
    for (std::size_t j = 0; j < in.cols(); ++j) {
        boundaries_.insert(in.column(j));
        classes_.insert(in.column(j), SparseVector());
    }
    boundary_rank_ = boundaries_.rank();

    auto add = [&](const SparseVector& z) {
        auto tag = SparseVector::from_pairs({{static_cast<std::uint32_t>(reps_.size()), 1}}, ring);
        if (classes_.insert(z, tag))
            reps_.push_back(z);
    };
    for (const auto& z : preferred) {
        if (!is_cycle(z))
            throw InvalidInput("preferred representative is not a cycle");
        add(z);
    }
    FpSolveResult ker = solve_fp(out, true);
    cycle_dim_ = ker.kernel.size();
    for (const auto& z : ker.kernel) {
        if (reps_.size() + boundary_rank_ == cycle_dim_)
            break;
        add(z);
    }
}

bool ClassSpace::is_cycle(const SparseVector& v) const { return out_.apply(v).empty(); }

bool ClassSpace::is_boundary(const SparseVector& v) const { return boundaries_.contains(v); }

std::vector<std::uint32_t> ClassSpace::coordinates(const SparseVector& v) const
{
    if (!is_cycle(v))
        throw InvalidInput("coordinates requested for a non-cycle");
    auto t = classes_.express(v);
    if (!t)
        throw std::logic_error("cycle outside the span of boundaries and representatives");
    std::vector<std::uint32_t> out(reps_.size(), 0);
    for (const auto& [j, val] : t->entries())
        out.at(j) = static_cast<std::uint32_t>(val);
    return out;
}

std::size_t rank_of_columns(const std::vector<std::vector<std::uint32_t>>& cols, std::uint32_t p)
{
    if (cols.empty())
        return 0;
    FpEchelon ech(cols.front().size(), p);
    Ring f = Ring::prime_field(p);
    for (const auto& c : cols)
        ech.insert(SparseVector::from_dense(c, f));
    return ech.rank();
}

} // namespace qh
