#include "qh/cochain.hpp"

#include <algorithm>

namespace qh {

bool Cochain::is_zero() const
{
    return std::all_of(values.begin(), values.end(), [](std::uint32_t v) { return v == 0; });
}

namespace {

void require_compatible(const Cochain& a, const Cochain& b)
{
    if (a.degree != b.degree || a.p != b.p || a.values.size() != b.values.size())
        throw InvalidInput("cochains of different degree or ring");
}

std::int64_t parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

Cochain Cochain::operator+(const Cochain& o) const
{
    require_compatible(*this, o);
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i)
        r.values[i] = mod::add(values[i], o.values[i], p);
    return r;
}

Cochain Cochain::operator-(const Cochain& o) const
{
    require_compatible(*this, o);
    Cochain r = *this;
    for (std::size_t i = 0; i < values.size(); ++i)
        r.values[i] = mod::sub(values[i], o.values[i], p);
    return r;
}

Cochain Cochain::scaled(std::int64_t c) const
{
    Cochain r = *this;
    const std::uint32_t cc = mod::reduce(c, p);
    for (auto& v : r.values)
        v = mod::mul(v, cc, p);
    return r;
}

SparseVector Cochain::to_sparse() const { return SparseVector::from_dense(values, Ring::prime_field(p)); }

std::uint32_t Cochain::evaluate(const SparseVector& chain) const
{
    std::uint32_t acc = 0;
    for (const auto& [i, c] : chain.entries())
        acc = mod::add(acc, mod::mul(values.at(i), mod::reduce(c, p), p), p);
    return acc;
}

int subset_sign(const std::vector<int>& a, int n)
{
    std::vector<bool> in_a(n + 1, false);
    for (int x : a) {
        if (x < 1 || x > n)
            throw InvalidInput("subset member " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
        in_a[x] = true;
    }
    // inversions: pairs b > a with b in the complement
    int inv = 0;
    for (int x : a)
        for (int b = x + 1; b <= n; ++b)
            if (!in_a[b])
                ++inv;
    return inv % 2 ? -1 : 1;
}

std::vector<std::vector<int>> subsets_of_size(int n, int m)
{
    std::vector<std::vector<int>> out;
    if (m < 0 || m > n)
        return out;
    std::vector<int> cur(m);
    for (int i = 0; i < m; ++i)
        cur[i] = i + 1;
    for (;;) {
        out.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == n - m + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

CochainAlgebra::CochainAlgebra(std::shared_ptr<const XSet> xset, std::uint32_t p, std::size_t cell_cap)
    : xset_(std::move(xset)), p_(p), cell_cap_(cell_cap)
{
    if (!is_prime(p))
        throw InvalidInput("modulus " + std::to_string(p) + " is not prime");
}

std::size_t CochainAlgebra::cells(int k) const { return checked_cell_count(*xset_, k, cell_cap_); }

Cochain CochainAlgebra::zero(int k) const { return constant(k, 0); }

Cochain CochainAlgebra::constant(int k, std::uint32_t v) const
{
    return Cochain{xset_, k, p_, std::vector<std::uint32_t>(cells(k), v % p_)};
}

Cochain CochainAlgebra::random(int k, SplitMix64& rng) const
{
    Cochain c = zero(k);
    for (auto& v : c.values)
        v = static_cast<std::uint32_t>(rng.below(p_));
    return c;
}

Cochain CochainAlgebra::from_sparse(int k, const SparseVector& v) const
{
    Cochain c = zero(k);
    for (const auto& [i, x] : v.entries())
        c.values.at(i) = mod::reduce(x, p_);
    return c;
}

void CochainAlgebra::check(const Cochain& f) const
{
    if (f.p != p_)
        throw InvalidInput("cochain ring mismatch: F" + std::to_string(f.p) + " vs F" + std::to_string(p_));
    if (f.xset != xset_)
        throw InvalidInput("cochain belongs to a different X-set");
    if (f.values.size() != cells(f.degree))
        throw InvalidInput("cochain has the wrong number of values");
}

std::shared_ptr<const CochainAlgebra::FaceTable> CochainAlgebra::face_table(int n) const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = face_cache_.find(n);
        if (it != face_cache_.end())
            return it->second;
    }
    auto t = std::make_shared<FaceTable>();
    const std::size_t count = cells(n);
    t->f0.resize(count * n);
    t->f1.resize(count * n);
    for (std::uint32_t c = 0; c < count; ++c)
        for (int i = 1; i <= n; ++i) {
            t->f0[c * n + i - 1] = face_cell(*xset_, n, c, i, 0);
            t->f1[c * n + i - 1] = face_cell(*xset_, n, c, i, 1);
        }
    std::lock_guard<std::mutex> lock(mu_);
    return face_cache_.emplace(n, std::move(t)).first->second;
}

std::shared_ptr<const CochainAlgebra::CupTable> CochainAlgebra::cup_table(int k, int m) const
{
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = cup_cache_.find({k, m});
        if (it != cup_cache_.end())
            return it->second;
    }
    const int n = k + m;
    const XSet& xs = *xset_;
    const auto& q = xs.quandle();
    auto subsets = subsets_of_size(n, m);
    std::vector<std::int8_t> signs;
    for (const auto& a : subsets)
        signs.push_back(static_cast<std::int8_t>(subset_sign(a, n) * parity_sign(k * m)));

    auto t = std::make_shared<CupTable>();
    t->terms = subsets.size();
    const std::size_t count = cells(n);
    t->left.resize(count * t->terms);
    t->right.resize(count * t->terms);
    t->sign.resize(count * t->terms);
    TupleCodec cn(xs.y_size(), xs.x_size(), n), ck(xs.y_size(), xs.x_size(), k), cm(xs.y_size(), xs.x_size(), m);
    std::vector<std::uint32_t> x(n), w(n), left(k);
    std::vector<bool> in_a(n + 1);
    std::uint32_t y;
    for (std::uint32_t c = 0; c < count; ++c) {
        cn.decode(c, y, x.data());
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            std::fill(in_a.begin(), in_a.end(), false);
            for (int a : subsets[s])
                in_a[a] = true;
            // left face: drop the coordinates in A
            int li = 0;
            for (int i = 1; i <= n; ++i)
                if (!in_a[i])
                    left[li++] = x[i - 1];
            // right face: apply d^1_b for b in B, highest index first
            std::uint32_t wy = y;
            int len = n;
            w = x;
            for (int b = n; b >= 1; --b) {
                if (in_a[b])
                    continue;
                const std::uint32_t xb = w[b - 1];
                wy = xs.star(wy, xb);
                for (int j = 0; j < b - 1; ++j)
                    w[j] = q.op(w[j], xb);
                for (int j = b; j < len; ++j)
                    w[j - 1] = w[j];
                --len;
            }
            const std::size_t slot = c * t->terms + s;
            t->left[slot] = ck.encode(y, left.data());
            t->right[slot] = cm.encode(wy, w.data());
            t->sign[slot] = signs[s];
        }
    }
    std::lock_guard<std::mutex> lock(mu_);
    return cup_cache_.emplace(std::make_pair(k, m), std::move(t)).first->second;
}

Cochain CochainAlgebra::cup(const Cochain& f, const Cochain& g) const
{
    check(f);
    check(g);
    auto t = cup_table(f.degree, g.degree);
    Cochain out = zero(f.degree + g.degree);
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        std::uint64_t pos = 0, neg = 0;
        for (std::size_t s = 0; s < t->terms; ++s) {
            const std::size_t slot = c * t->terms + s;
            const std::uint64_t v = std::uint64_t(f.values[t->left[slot]]) * g.values[t->right[slot]] % p_;
            (t->sign[slot] > 0 ? pos : neg) += v;
        }
        out.values[c] = mod::sub(static_cast<std::uint32_t>(pos % p_), static_cast<std::uint32_t>(neg % p_), p_);
    }
    return out;
}

namespace {

enum class FaceOp { Both, Zero, One };

Cochain face_dual(const CochainAlgebra& alg, const Cochain& f, FaceOp op,
                  const std::vector<std::uint32_t>& f0, const std::vector<std::uint32_t>& f1)
{
    const int n = f.degree + 1;
    const std::uint32_t p = alg.prime();
    Cochain out = alg.zero(n);
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        std::int64_t acc = 0;
        for (int i = 1; i <= n; ++i) {
            std::int64_t term = 0;
            if (op != FaceOp::One)
                term += f.values[f0[c * n + i - 1]];
            if (op != FaceOp::Zero)
                term -= (op == FaceOp::Both ? 1 : -1) * std::int64_t(f.values[f1[c * n + i - 1]]);
            acc += (i % 2 ? -term : term);
        }
        out.values[c] = mod::reduce(acc, p);
    }
    return out;
}

} // namespace

Cochain CochainAlgebra::coboundary(const Cochain& f) const
{
    check(f);
    auto t = face_table(f.degree + 1);
    return face_dual(*this, f, FaceOp::Both, t->f0, t->f1);
}

Cochain CochainAlgebra::partial0(const Cochain& f) const
{
    check(f);
    auto t = face_table(f.degree + 1);
    return face_dual(*this, f, FaceOp::Zero, t->f0, t->f1);
}

Cochain CochainAlgebra::partial1(const Cochain& f) const
{
    check(f);
    auto t = face_table(f.degree + 1);
    return face_dual(*this, f, FaceOp::One, t->f0, t->f1);
}

Cochain CochainAlgebra::bockstein(const Cochain& f) const
{
    check(f);
    const int n = f.degree + 1;
    auto t = face_table(n);
    Cochain out = zero(n);
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        std::int64_t acc = 0;
        for (int i = 1; i <= n; ++i) {
            std::int64_t term = std::int64_t(f.values[t->f0[c * n + i - 1]]) - f.values[t->f1[c * n + i - 1]];
            acc += (i % 2 ? -term : term);
        }
        if (acc % static_cast<std::int64_t>(p_) != 0)
            throw InvalidInput("Bockstein input is not a cocycle mod p");
        out.values[c] = mod::reduce(acc / static_cast<std::int64_t>(p_), p_);
    }
    return out;
}

namespace {

std::size_t power(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

void require_kind(const CochainAlgebra& alg, XSetKind kind, const char* what)
{
    if (alg.xset().kind() != kind)
        throw InvalidInput(std::string(what) + " needs the " + xset_kind_name(kind) + " X-set");
}

} // namespace

Cochain op_p(const CochainAlgebra& self, const Cochain& f)
{
    require_kind(self, XSetKind::SelfAction, "P");
    const int d = f.degree + 1;
    const std::size_t stride = power(self.xset().x_size(), d);
    const std::int64_t sgn = parity_sign(d + 1);
    Cochain out = self.zero(d);
    if (f.values.size() != stride)
        throw InvalidInput("P: cochain size mismatch");
    for (std::size_t c = 0; c < out.values.size(); ++c)
        out.values[c] = mod::reduce(sgn * f.values[c % stride], self.prime());
    return out;
}

Cochain op_d(const CochainAlgebra& self, const Cochain& f)
{
    require_kind(self, XSetKind::SelfAction, "D");
    if (!self.xset().quandle().is_idempotent())
        throw InvalidInput("D requires a quandle");
    const int d = f.degree - 1;
    if (d < 0)
        throw InvalidInput("D needs a cochain of positive degree");
    const std::size_t xs = self.xset().x_size();
    const std::size_t stride = power(xs, d);
    const std::int64_t sgn = parity_sign(d);
    Cochain out = self.zero(d);
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        const std::size_t y = c / stride, rest = c % stride;
        out.values[c] = mod::reduce(sgn * f.values[(y * xs + y) * stride + rest], self.prime());
    }
    return out;
}

Cochain lambda(const CochainAlgebra& self) { return op_p(self, self.one()); }

Cochain op_q(const CochainAlgebra& self, const Cochain& f)
{
    const int n = f.degree;
    Cochain pf = op_p(self, f);
    Cochain fl = self.cup(f, lambda(self));
    return pf + fl.scaled(parity_sign(n + 1));
}

Cochain op_psi(const CochainAlgebra& point, const Cochain& f)
{
    require_kind(point, XSetKind::Point, "psi");
    const int n = f.degree + 1;
    Cochain out = point.zero(n);
    if (out.values.size() != f.values.size())
        throw InvalidInput("psi: cochain size mismatch");
    const std::int64_t sgn = parity_sign(n - 1);
    for (std::size_t c = 0; c < out.values.size(); ++c)
        out.values[c] = mod::reduce(sgn * f.values[c], point.prime());
    return out;
}

Cochain op_chi(const CochainAlgebra& group, const Cochain& f)
{
    require_kind(group, XSetKind::GroupAction, "chi");
    const int n = f.degree;
    const std::size_t stride = power(group.xset().x_size(), n);
    Cochain out = group.zero(n);
    const auto& aug = group.xset().aug();
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        const auto g = static_cast<std::uint32_t>(c / stride);
        out.values[c] = f.values[aug.rho(0, g) * stride + c % stride];
    }
    return out;
}

bool psi_vanishes_on_degenerate(const Cochain& f)
{
    const XSet& xs = *f.xset;
    if (xs.kind() != XSetKind::SelfAction)
        throw InvalidInput("quandle-class test needs a cochain on B(X;X)");
    TupleCodec codec(xs.y_size(), xs.x_size(), f.degree);
    std::vector<std::uint32_t> t(f.degree + 1);
    for (std::uint32_t c = 0; c < f.values.size(); ++c) {
        codec.decode(c, t[0], t.data() + 1);
        if (f.values[c] != 0 && is_degenerate_tuple(t.data(), f.degree + 1))
            return false;
    }
    return true;
}

} // namespace qh
