#include "qh/context.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

ComplexCache::ComplexCache(std::shared_ptr<const XSet> xs, std::uint32_t p, std::size_t cell_cap)
    : xs_(std::move(xs)), p_(p), cell_cap_(cell_cap)
{
}

const ComplexSlice& ComplexCache::slice(int n) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = slices_[n];
    if (!slot)
        slot = std::make_unique<ComplexSlice>(boundary_matrices(xs_, n, Ring::prime_field(p_), cell_cap_));
    return *slot;
}

const ComplexSlice& ComplexCache::integral_slice(int n) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = zslices_[n];
    if (!slot)
        slot = std::make_unique<ComplexSlice>(boundary_matrices(xs_, n, Ring::integers(), cell_cap_));
    return *slot;
}

const ClassSpace& ComplexCache::homology(int n) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = hom_[n];
    if (!slot)
        slot = std::make_unique<ClassSpace>(slice(n + 1).d, slice(n).d);
    return *slot;
}

const ClassSpace& ComplexCache::cohomology(int n) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = cohom_[n];
    if (!slot) {
        const ComplexSlice& cur = slice(n);
        SparseMatrix in = n == 0 ? SparseMatrix(cur.size(), 0, cur.ring) : cur.d.transpose();
        slot = std::make_unique<ClassSpace>(in, slice(n + 1).d.transpose());
    }
    return *slot;
}

const FpEchelon& ComplexCache::coboundary_image(int n) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = cob_img_[n];
    if (!slot) {
        const ComplexSlice& cur = slice(n);
        slot = std::make_unique<FpEchelon>(cur.size(), p_);
        if (n > 0) {
            SparseMatrix t = cur.d.transpose();
            for (std::size_t j = 0; j < t.cols(); ++j)
                slot->insert(t.column(j));
        }
    }
    return *slot;
}

const FpEchelon& ComplexCache::boundary_image(int n) const
{
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto& slot = bd_img_[n];
    if (!slot) {
        const ComplexSlice& next = slice(n + 1);
        slot = std::make_unique<FpEchelon>(next.d.rows(), p_);
        for (std::size_t j = 0; j < next.d.cols(); ++j)
            slot->insert(next.d.column(j));
    }
    return *slot;
}

bool ComplexCache::is_coboundary(const Cochain& f) const { return coboundary_image(f.degree).contains(f.to_sparse()); }

bool ComplexCache::is_boundary(const SparseVector& c, int n) const { return boundary_image(n).contains(c); }

QuandleContext::QuandleContext(const Quandle& q, std::uint32_t p_, std::size_t cap)
    : aug(std::make_shared<const AugmentedQuandle>(inner_group(q))),
      point(std::make_shared<const XSet>(aug, XSetKind::Point)),
      self(std::make_shared<const XSet>(aug, XSetKind::SelfAction)),
      group(std::make_shared<const XSet>(aug, XSetKind::GroupAction)),
      p(p_),
      cell_cap(cap),
      point_alg(point, p_, cap),
      self_alg(self, p_, cap),
      group_alg(group, p_, cap),
      point_cx(point, p_, cap),
      self_cx(self, p_, cap),
      group_cx(group, p_, cap)
{
}

const CochainAlgebra& QuandleContext::algebra(XSetKind k) const
{
    switch (k) {
    case XSetKind::Point:
        return point_alg;
    case XSetKind::SelfAction:
        return self_alg;
    default:
        return group_alg;
    }
}

const ComplexCache& QuandleContext::complex(XSetKind k) const
{
    switch (k) {
    case XSetKind::Point:
        return point_cx;
    case XSetKind::SelfAction:
        return self_cx;
    default:
        return group_cx;
    }
}

namespace {

// Echelon holding the coboundaries (untagged) followed by the basis (tagged).
FpEchelon class_echelon(const ComplexCache& cx, int degree, const std::vector<Cochain>& basis,
                        std::vector<bool>* independent)
{
    const ComplexSlice& cur = cx.slice(degree);
    FpEchelon ech(cur.size(), cx.prime(), std::max<std::size_t>(basis.size(), 1));
    if (degree > 0) {
        SparseMatrix t = cur.d.transpose();
        for (std::size_t j = 0; j < t.cols(); ++j)
            ech.insert(t.column(j));
    }
    Ring f = Ring::prime_field(cx.prime());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].degree != degree)
            throw InvalidInput("basis classes must share one degree");
        bool ok = ech.insert(basis[i].to_sparse(), SparseVector::from_pairs({{static_cast<std::uint32_t>(i), 1}}, f));
        if (independent)
            independent->push_back(ok);
    }
    return ech;
}

} // namespace

std::vector<std::uint32_t> express_in_basis(const ComplexCache& cx, const Cochain& c, const std::vector<Cochain>& basis)
{
    std::vector<bool> indep;
    FpEchelon ech = class_echelon(cx, c.degree, basis, &indep);
    auto t = ech.express(c.to_sparse());
    if (!t)
        throw std::runtime_error("class lies outside the span of the given basis (incomplete basis?)");
    std::vector<std::uint32_t> out(basis.size(), 0);
    for (const auto& [i, v] : t->entries())
        out[i] = static_cast<std::uint32_t>(v);
    return out;
}

bool independent_classes(const ComplexCache& cx, const std::vector<Cochain>& classes)
{
    if (classes.empty())
        return true;
    std::vector<bool> indep;
    class_echelon(cx, classes.front().degree, classes, &indep);
    return std::all_of(indep.begin(), indep.end(), [](bool b) { return b; });
}

std::vector<std::uint32_t> class_cup(const CochainAlgebra& alg, const ComplexCache& cx, const Cochain& c1,
                                     const Cochain& c2, const std::vector<Cochain>& basis)
{
    if (!alg.coboundary(c1).is_zero() || !alg.coboundary(c2).is_zero())
        throw InvalidInput("class_cup needs cocycle representatives");
    return express_in_basis(cx, alg.cup(c1, c2), basis);
}

} // namespace qh
