#include "qh/sparse.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qh {

std::int64_t normalize_coefficient(std::int64_t v, Ring ring)
{
    return ring.is_field() ? mod::reduce(v, ring.p) : v;
}

SparseVector SparseVector::from_pairs(std::vector<Entry> pairs, Ring ring)
{
    std::sort(pairs.begin(), pairs.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector out(ring);
    out.entries_.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size();) {
        std::uint32_t pos = pairs[i].first;
        std::int64_t sum = 0;
        for (; i < pairs.size() && pairs[i].first == pos; ++i)
            sum = ring.is_field() ? (sum + normalize_coefficient(pairs[i].second, ring)) % ring.p
                                  : sum + pairs[i].second;
        if (sum != 0)
            out.entries_.emplace_back(pos, sum);
    }
    return out;
}

SparseVector SparseVector::from_dense(const std::vector<std::uint32_t>& dense, Ring ring)
{
    SparseVector out(ring);
    for (std::uint32_t i = 0; i < dense.size(); ++i)
        if (dense[i] != 0)
            out.entries_.emplace_back(i, dense[i]);
    return out;
}

std::int64_t SparseVector::coefficient(std::uint32_t pos) const
{
    auto it = std::lower_bound(entries_.begin(), entries_.end(), pos,
                               [](const Entry& e, std::uint32_t p) { return e.first < p; });
    return (it != entries_.end() && it->first == pos) ? it->second : 0;
}

namespace {

SparseVector combine(const SparseVector& a, const SparseVector& b, std::int64_t sign, Ring ring)
{
    std::vector<SparseVector::Entry> out;
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    out.reserve(ea.size() + eb.size());
    std::size_t i = 0, j = 0;
    while (i < ea.size() || j < eb.size()) {
        if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
            out.push_back(ea[i++]);
        } else if (i == ea.size() || eb[j].first < ea[i].first) {
            out.emplace_back(eb[j].first, normalize_coefficient(sign * eb[j].second, ring));
            ++j;
        } else {
            std::int64_t v = normalize_coefficient(ea[i].second + sign * eb[j].second, ring);
            if (v != 0)
                out.emplace_back(ea[i].first, v);
            ++i;
            ++j;
        }
    }
    return SparseVector::from_pairs(std::move(out), ring);
}

} // namespace

SparseVector SparseVector::operator+(const SparseVector& o) const { return combine(*this, o, 1, ring_); }
SparseVector SparseVector::operator-(const SparseVector& o) const { return combine(*this, o, -1, ring_); }

SparseVector SparseVector::scaled(std::int64_t c) const
{
    SparseVector out(ring_);
    for (const auto& [pos, v] : entries_) {
        std::int64_t w = normalize_coefficient(v * normalize_coefficient(c, ring_), ring_);
        if (w != 0)
            out.entries_.emplace_back(pos, w);
    }
    return out;
}

std::vector<std::uint32_t> SparseVector::to_dense(std::size_t dim) const
{
    std::vector<std::uint32_t> out(dim, 0);
    for (const auto& [pos, v] : entries_) {
        if (pos >= dim)
            throw std::out_of_range("sparse vector position exceeds dimension");
        out[pos] = static_cast<std::uint32_t>(v);
    }
    return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Ring ring)
    : rows_(rows), ring_(ring), cols_(cols, SparseVector(ring))
{
}

void SparseMatrix::set_column(std::size_t j, SparseVector v)
{
    if (!v.empty() && v.entries().back().first >= rows_)
        throw std::out_of_range("column entry exceeds row count");
    v.ring_ = ring_;
    cols_.at(j) = std::move(v);
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : cols_)
        n += c.size();
    return n;
}

SparseMatrix SparseMatrix::transpose() const
{
    std::vector<std::vector<SparseVector::Entry>> rows(rows_);
    for (std::uint32_t j = 0; j < cols_.size(); ++j)
        for (const auto& [i, v] : cols_[j].entries())
            rows[i].emplace_back(j, v);
    SparseMatrix t(cols_.size(), rows_, ring_);
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseVector col(ring_);
        col.entries_ = std::move(rows[i]); // already ordered by j
        t.cols_[i] = std::move(col);
    }
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const
{
    std::vector<SparseVector::Entry> acc;
    for (const auto& [j, c] : v.entries()) {
        if (j >= cols_.size())
            throw std::out_of_range("vector position exceeds column count");
        for (const auto& [i, a] : cols_[j].entries())
            acc.emplace_back(i, ring_.is_field() ? mod::mul(static_cast<std::uint32_t>(a),
                                                            static_cast<std::uint32_t>(c), ring_.p)
                                                 : a * c);
    }
    return SparseVector::from_pairs(std::move(acc), ring_);
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const
{
    if (cols() != rhs.rows())
        throw std::invalid_argument("matrix product dimension mismatch");
    SparseMatrix out(rows_, rhs.cols(), ring_);
    for (std::size_t j = 0; j < rhs.cols(); ++j)
        out.cols_[j] = apply(rhs.cols_[j]);
    return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols() != rhs.cols())
        throw std::invalid_argument("matrix sum dimension mismatch");
    SparseMatrix out(rows_, cols(), ring_);
    for (std::size_t j = 0; j < cols(); ++j)
        out.cols_[j] = cols_[j] + rhs.cols_[j];
    return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const
{
    if (rows_ != rhs.rows_ || cols() != rhs.cols())
        throw std::invalid_argument("matrix difference dimension mismatch");
    SparseMatrix out(rows_, cols(), ring_);
    for (std::size_t j = 0; j < cols(); ++j)
        out.cols_[j] = cols_[j] - rhs.cols_[j];
    return out;
}

SparseMatrix SparseMatrix::scaled(std::int64_t c) const
{
    SparseMatrix out(rows_, cols(), ring_);
    for (std::size_t j = 0; j < cols(); ++j)
        out.cols_[j] = cols_[j].scaled(c);
    return out;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(cols_.begin(), cols_.end(), [](const SparseVector& c) { return c.empty(); });
}

bool SparseMatrix::operator==(const SparseMatrix& o) const
{
    return rows_ == o.rows_ && cols() == o.cols() && !first_differing_column(o);
}

std::optional<std::size_t> SparseMatrix::first_differing_column(const SparseMatrix& o) const
{
    for (std::size_t j = 0; j < std::min(cols(), o.cols()); ++j)
        if (!(cols_[j] == o.cols_[j]))
            return j;
    if (cols() != o.cols())
        return std::min(cols(), o.cols());
    return std::nullopt;
}

SparseMatrix SparseMatrix::reduced_mod(std::uint32_t p) const
{
    Ring field = Ring::prime_field(p);
    SparseMatrix out(rows_, cols(), field);
    for (std::size_t j = 0; j < cols(); ++j) {
        std::vector<SparseVector::Entry> e(cols_[j].entries().begin(), cols_[j].entries().end());
        out.cols_[j] = SparseVector::from_pairs(std::move(e), field);
    }
    return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n, Ring ring)
{
    SparseMatrix out(n, n, ring);
    for (std::uint32_t j = 0; j < n; ++j)
        out.cols_[j].entries_.emplace_back(j, 1);
    return out;
}

void SparseMatrix::write_sms(std::ostream& os) const
{
    os << rows_ << ' ' << cols() << ' ' << ring_.name() << '\n';
    for (std::size_t j = 0; j < cols(); ++j)
        for (const auto& [i, v] : cols_[j].entries())
            os << (i + 1) << ' ' << (j + 1) << ' ' << v << '\n';
}

} // namespace qh
