#pragma once

#include "qh/complex.hpp"
#include "qh/rng.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace qh {

/// F_p-valued function on the cells Y x X^k, stored densely in basis order.
struct Cochain {
    std::shared_ptr<const XSet> xset;
    int degree = 0;
    std::uint32_t p = 2;
    std::vector<std::uint32_t> values;

    std::uint32_t at(std::uint32_t cell) const { return values[cell]; }
    bool is_zero() const;
    Cochain operator+(const Cochain& o) const;
    Cochain operator-(const Cochain& o) const;
    Cochain scaled(std::int64_t c) const;
    bool operator==(const Cochain& o) const { return degree == o.degree && p == o.p && values == o.values; }

    SparseVector to_sparse() const;
    /// Value on a chain: sum of coefficient times value.
    std::uint32_t evaluate(const SparseVector& chain) const;
};

/// Sign of the permutation (1..n) -> (b_1..b_k, a_1..a_m) where A = {a_i} is a
/// subset of [n] (1-based) and B its sorted complement.
int subset_sign(const std::vector<int>& a, int n);

/// All m-element subsets of [n] (1-based) in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int m);

/// Cup product, coboundaries and face-map cochain operators on one X-set over F_p.
/// Face tables are built on demand and cached; the object is safe to share.
class CochainAlgebra {
public:
    CochainAlgebra(std::shared_ptr<const XSet> xset, std::uint32_t p, std::size_t cell_cap = kDefaultCellCap);

    const XSet& xset() const { return *xset_; }
    std::shared_ptr<const XSet> xset_ptr() const { return xset_; }
    std::uint32_t prime() const { return p_; }
    std::size_t cells(int k) const;

    Cochain zero(int k) const;
    Cochain constant(int k, std::uint32_t v) const;
    Cochain one() const { return constant(0, 1); }
    Cochain random(int k, SplitMix64& rng) const;
    Cochain from_sparse(int k, const SparseVector& v) const;

    Cochain cup(const Cochain& f, const Cochain& g) const;
    /// delta F = F o boundary, raising degree by one.
    Cochain coboundary(const Cochain& f) const;
    /// Duals of d0 and d1.
    Cochain partial0(const Cochain& f) const;
    Cochain partial1(const Cochain& f) const;
    /// Integral lift, coboundary over Z, divide by p; throws if f is not a cocycle.
    Cochain bockstein(const Cochain& f) const;

private:
    struct CupTable {
        std::size_t terms = 0; // subsets per cell
        std::vector<std::uint32_t> left, right;
        std::vector<std::int8_t> sign;
    };
    struct FaceTable {
        std::vector<std::uint32_t> f0, f1; // cell*n + (i-1)
    };
    std::shared_ptr<const CupTable> cup_table(int k, int m) const;
    std::shared_ptr<const FaceTable> face_table(int n) const;
    void check(const Cochain& f) const;

    std::shared_ptr<const XSet> xset_;
    std::uint32_t p_;
    std::size_t cell_cap_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<int, int>, std::shared_ptr<const CupTable>> cup_cache_;
    mutable std::map<int, std::shared_ptr<const FaceTable>> face_cache_;
};

/// Operators between the cochains of B(X), B(X;X) and B(G;X). `self` must be the
/// SelfAction algebra; `point` and `group` the Point and GroupAction algebras.
Cochain op_p(const CochainAlgebra& self, const Cochain& f);   // C^{d-1} -> C^d
Cochain op_d(const CochainAlgebra& self, const Cochain& f);   // C^{d+1} -> C^d
Cochain op_q(const CochainAlgebra& self, const Cochain& f);   // P F + (-1)^(n+1) F u Lambda
Cochain lambda(const CochainAlgebra& self);                    // P(1)
Cochain op_psi(const CochainAlgebra& point, const Cochain& f); // C^{n-1}(X;X) -> C^n(X)
Cochain op_chi(const CochainAlgebra& group, const Cochain& f); // C^n(X;X) -> C^n(G;X)

/// True when psi(f) vanishes on every degenerate tuple, i.e. f(x_0; x_1..x_n) = 0
/// whenever two consecutive entries of (x_0, x_1, ..., x_n) agree.
bool psi_vanishes_on_degenerate(const Cochain& f);

} // namespace qh
