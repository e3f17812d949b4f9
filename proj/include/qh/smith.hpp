#pragma once

#include "qh/sparse.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace qh {

using BigInt = boost::multiprecision::cpp_int;
using DenseBig = std::vector<std::vector<BigInt>>;

struct SmithResult {
    /// Nonzero diagonal entries d_1 | d_2 | ... (positive), including units.
    std::vector<BigInt> invariant_factors;
    std::size_t rank() const { return invariant_factors.size(); }
    /// Invariant factors greater than one.
    std::vector<BigInt> torsion() const;
};

/// Invariant factors of an integer matrix. Sparse elimination on unit pivots
/// first, then a dense arbitrary-precision pass on what remains.
SmithResult smith_normal_form(const SparseMatrix& a);

struct DenseSmith {
    DenseBig d; // U * A * V
    DenseBig u;
    DenseBig v;
    std::vector<BigInt> invariant_factors;
};

/// Dense Smith normal form. Pivot: smallest nonzero |a|, ties broken by lowest
/// column, then lowest row. With transforms, u and v are unimodular.
DenseSmith smith_dense(DenseBig a, bool transforms = false);

DenseBig to_dense(const SparseMatrix& a);
DenseBig multiply(const DenseBig& a, const DenseBig& b);

} // namespace qh
