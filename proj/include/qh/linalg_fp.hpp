#pragma once

#include "qh/sparse.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace qh {

/// Incremental row echelon form over F_p. Each stored row has a distinct
/// leading position with coefficient 1. When tag_dim > 0 every row also
/// records which combination of the inserted tags produced it.
class FpEchelon {
public:
    FpEchelon(std::size_t dim, std::uint32_t p, std::size_t tag_dim = 0);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    std::uint32_t prime() const { return p_; }

    /// Adds v; returns true when v was independent of the rows so far.
    /// With tags, a dependent v yields the relation in *relation (tag space).
    bool insert(const SparseVector& v, const SparseVector& tag = {}, SparseVector* relation = nullptr);
    bool contains(const SparseVector& v) const;
    /// Tag combination equal to v when v lies in the span.
    std::optional<SparseVector> express(const SparseVector& v) const;
    /// Leading positions of the stored rows, in insertion order.
    std::vector<std::uint32_t> pivots() const;

private:
    struct Row {
        std::vector<SparseVector::Entry> entries; // leading entry first, coefficient 1
        std::vector<SparseVector::Entry> tag;
    };
    // Reduces (v, tag) against the stored rows. Returns the leading position
    // of the remainder or -1 when v reduces to zero.
    std::int64_t reduce(std::vector<std::uint32_t>& acc, std::vector<std::uint32_t>& tacc,
                        std::vector<std::uint32_t>& touched, std::vector<std::uint32_t>& ttouched,
                        bool track) const;

    std::size_t dim_;
    std::uint32_t p_;
    std::size_t tag_dim_;
    std::vector<Row> rows_;
    std::unordered_map<std::uint32_t, std::uint32_t> pivot_row_;
};

struct FpSolveResult {
    std::size_t rank = 0;
    std::vector<SparseVector> kernel; // basis of ker A
    std::vector<SparseVector> image;  // independent columns of A spanning im A
    std::vector<std::uint32_t> pivot_columns;
};

/// Exact Gaussian elimination on the columns of A (entries must be in F_p).
FpSolveResult solve_fp(const SparseMatrix& a, bool want_kernel = true);
std::size_t rank_fp(const SparseMatrix& a);

/// Homology ker(out) / im(in) over F_p with explicit representatives.
/// `in` maps into this degree, `out` maps out of it (either may have zero columns/rows).
class ClassSpace {
public:
    ClassSpace(const SparseMatrix& in, const SparseMatrix& out,
               const std::vector<SparseVector>& preferred = {});

    std::size_t dim() const { return reps_.size(); }
    std::size_t ambient_dim() const { return ambient_; }
    std::uint32_t prime() const { return p_; }
    const std::vector<SparseVector>& reps() const { return reps_; }
    std::size_t cycle_dim() const { return cycle_dim_; }
    std::size_t boundary_rank() const { return boundary_rank_; }

    bool is_cycle(const SparseVector& v) const;
    bool is_boundary(const SparseVector& v) const;
    /// Coordinates of the class of v in the basis reps(); throws if v is not a cycle.
    std::vector<std::uint32_t> coordinates(const SparseVector& v) const;

private:
    std::size_t ambient_;
    std::uint32_t p_;
    SparseMatrix out_;
    FpEchelon boundaries_;
    FpEchelon classes_;
    std::vector<SparseVector> reps_;
    std::size_t cycle_dim_ = 0;
    std::size_t boundary_rank_ = 0;
};

/// Rank of a dense coordinate matrix (list of columns) over F_p.
std::size_t rank_of_columns(const std::vector<std::vector<std::uint32_t>>& cols, std::uint32_t p);

} // namespace qh
