#pragma once

#include "qh/complex.hpp"
#include "qh/linalg_fp.hpp"
#include "qh/smith.hpp"

#include <string>
#include <vector>

namespace qh {

struct HomologyResult {
    int degree = 0;
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;    // invariant factors > 1 (integer case)
    std::size_t field_dim = 0;      // dimension over F_p (field case), free_rank otherwise
    std::vector<SparseVector> reps; // cycle representatives (field case, when requested)
};

std::string to_json(const HomologyResult& h);

/// Boundary out of degree n for n = 0..slices.size()-1, with an empty map past the top.
const SparseMatrix& slice_boundary(const std::vector<ComplexSlice>& slices, int n);

/// Field homology dims for degrees 0..max_degree; slices must reach max_degree+1.
std::vector<HomologyResult> homology_fp(const std::vector<ComplexSlice>& slices, int max_degree,
                                        bool with_reps = false);
/// Field cohomology dims computed from the transposed maps.
std::vector<HomologyResult> cohomology_fp(const std::vector<ComplexSlice>& slices, int max_degree);

/// Integral homology via Smith normal form; slices must be over Z.
std::vector<HomologyResult> homology_z(const std::vector<ComplexSlice>& slices, int max_degree);

/// Homology class space of degree n (field case).
ClassSpace homology_space(const std::vector<ComplexSlice>& slices, int n,
                          const std::vector<SparseVector>& preferred = {});
/// Cohomology class space of degree n (field case): ker delta_n / im delta_{n-1}.
ClassSpace cohomology_space(const std::vector<ComplexSlice>& slices, int n,
                            const std::vector<SparseVector>& preferred = {});

/// Chain Bockstein: lift a mod-p cycle of degree n to [0,p), apply the integral
/// boundary d_z (out of degree n), divide by p, reduce. Throws InvalidInput if
/// the input is not a cycle mod p.
SparseVector bockstein_chain(const SparseVector& cycle, const SparseMatrix& d_z, std::uint32_t p);
/// Cochain Bockstein: exact transpose of the chain version; d_z_next is the
/// integral boundary out of degree n+1, the result has degree n+1.
SparseVector bockstein_cochain(const SparseVector& cocycle, const SparseMatrix& d_z_next, std::uint32_t p);

} // namespace qh
