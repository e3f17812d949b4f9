#pragma once

#include "qh/ring.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace qh {

/// Sparse vector with positions in increasing order and no stored zeros.
/// Over F_p the coefficients are residues in [0, p).
class SparseVector {
public:
    using Entry = std::pair<std::uint32_t, std::int64_t>;

    SparseVector() = default;
    explicit SparseVector(Ring ring) : ring_(ring) {}

    /// Builds from unsorted (position, coefficient) pairs; duplicates are summed.
    static SparseVector from_pairs(std::vector<Entry> pairs, Ring ring);
    static SparseVector from_dense(const std::vector<std::uint32_t>& dense, Ring ring);

    const std::vector<Entry>& entries() const { return entries_; }
    Ring ring() const { return ring_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    std::int64_t coefficient(std::uint32_t pos) const;

    SparseVector operator+(const SparseVector& o) const;
    SparseVector operator-(const SparseVector& o) const;
    SparseVector scaled(std::int64_t c) const;
    bool operator==(const SparseVector& o) const { return entries_ == o.entries_; }

    std::vector<std::uint32_t> to_dense(std::size_t dim) const;

private:
    friend class SparseMatrix;
    Ring ring_{};
    std::vector<Entry> entries_;
};

/// Column-major sparse matrix. Column j holds the image of basis element j.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, Ring ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }
    Ring ring() const { return ring_; }

    const SparseVector& column(std::size_t j) const { return cols_[j]; }
    void set_column(std::size_t j, SparseVector v);
    std::size_t nonzeros() const;

    SparseMatrix transpose() const;
    SparseMatrix operator*(const SparseMatrix& rhs) const;
    SparseMatrix operator+(const SparseMatrix& rhs) const;
    SparseMatrix operator-(const SparseMatrix& rhs) const;
    SparseMatrix scaled(std::int64_t c) const;
    SparseVector apply(const SparseVector& v) const;
    bool is_zero() const;
    bool operator==(const SparseMatrix& o) const;

    /// First column index whose entries differ, if any.
    std::optional<std::size_t> first_differing_column(const SparseMatrix& o) const;

    /// Reduces every coefficient into F_p (integer matrices only).
    SparseMatrix reduced_mod(std::uint32_t p) const;

    static SparseMatrix identity(std::size_t n, Ring ring);

    /// SMS-style triplet text: header "rows cols ring", then "i j v" lines, 1-based.
    void write_sms(std::ostream& os) const;

private:
    std::size_t rows_ = 0;
    Ring ring_{};
    std::vector<SparseVector> cols_;
};

std::int64_t normalize_coefficient(std::int64_t v, Ring ring);

} // namespace qh
