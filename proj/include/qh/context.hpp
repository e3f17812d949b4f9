#pragma once

#include "qh/cochain.hpp"
#include "qh/homology.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace qh {

/// Lazily built F_p chain complex of one X-set with cached class spaces and
/// coboundary images.
class ComplexCache {
public:
    ComplexCache(std::shared_ptr<const XSet> xs, std::uint32_t p, std::size_t cell_cap);

    const XSet& xset() const { return *xs_; }
    std::uint32_t prime() const { return p_; }
    /// Slice of degree n over F_p (built on demand, cached).
    const ComplexSlice& slice(int n) const;
    /// Slice of degree n over Z.
    const ComplexSlice& integral_slice(int n) const;
    const ClassSpace& homology(int n) const;
    const ClassSpace& cohomology(int n) const;
    /// Membership of a cochain in the image of the coboundary into its degree.
    bool is_coboundary(const Cochain& f) const;
    /// Membership of a chain of degree n in the image of the boundary.
    bool is_boundary(const SparseVector& c, int n) const;

private:
    const FpEchelon& coboundary_image(int n) const;
    const FpEchelon& boundary_image(int n) const;

    std::shared_ptr<const XSet> xs_;
    std::uint32_t p_;
    std::size_t cell_cap_;
    mutable std::recursive_mutex mu_;
    mutable std::map<int, std::unique_ptr<ComplexSlice>> slices_, zslices_;
    mutable std::map<int, std::unique_ptr<ClassSpace>> hom_, cohom_;
    mutable std::map<int, std::unique_ptr<FpEchelon>> cob_img_, bd_img_;
};

/// The three X-sets of a quandle (point, itself, Inn(X)) with cochain algebras
/// and complex caches over F_p.
struct QuandleContext {
    QuandleContext(const Quandle& q, std::uint32_t p, std::size_t cell_cap = kDefaultCellCap);

    std::shared_ptr<const AugmentedQuandle> aug;
    std::shared_ptr<const XSet> point, self, group;
    std::uint32_t p;
    std::size_t cell_cap;
    CochainAlgebra point_alg, self_alg, group_alg;
    ComplexCache point_cx, self_cx, group_cx;

    const CochainAlgebra& algebra(XSetKind k) const;
    const ComplexCache& complex(XSetKind k) const;
};

/// Coordinates of the class of a cocycle in the span of `basis` modulo
/// coboundaries; throws std::runtime_error when it is not in that span.
std::vector<std::uint32_t> express_in_basis(const ComplexCache& cx, const Cochain& c, const std::vector<Cochain>& basis);
/// True when the classes of the given cocycles are linearly independent.
bool independent_classes(const ComplexCache& cx, const std::vector<Cochain>& classes);

/// Cup of two cocycle representatives, expressed in the given class basis.
std::vector<std::uint32_t> class_cup(const CochainAlgebra& alg, const ComplexCache& cx, const Cochain& c1,
                                     const Cochain& c2, const std::vector<Cochain>& basis);

} // namespace qh
