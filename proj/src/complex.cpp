#include "qh/complex.hpp"

#include <cstdlib>
#include <string>
#include <unordered_map>

namespace qh {

TupleCodec::TupleCodec(std::size_t y_size, std::size_t x_size, int n)
    : y_size_(y_size), x_size_(x_size), n_(n), stride_(1)
{
    for (int i = 0; i < n; ++i)
        stride_ *= x_size;
}

std::uint32_t TupleCodec::encode(std::uint32_t y, const std::uint32_t* x) const
{
    std::size_t idx = y;
    for (int i = 0; i < n_; ++i)
        idx = idx * x_size_ + x[i];
    return static_cast<std::uint32_t>(idx);
}

void TupleCodec::decode(std::uint32_t idx, std::uint32_t& y, std::uint32_t* x) const
{
    std::size_t r = idx;
    for (int i = n_ - 1; i >= 0; --i) {
        x[i] = static_cast<std::uint32_t>(r % x_size_);
        r /= x_size_;
    }
    y = static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> TupleCodec::decode(std::uint32_t idx) const
{
    std::vector<std::uint32_t> out(n_ + 1);
    decode(idx, out[0], out.data() + 1);
    return out;
}

std::size_t cell_cap_from_env()
{
    if (const char* s = std::getenv("QH_CELL_CAP")) {
        try {
            return static_cast<std::size_t>(std::stoull(s));
        } catch (const std::exception&) {
            throw InvalidInput(std::string("QH_CELL_CAP is not a number: ") + s);
        }
    }
    return kDefaultCellCap;
}

std::size_t checked_cell_count(const XSet& xs, int n, std::size_t cap)
{
    if (n < 0)
        throw InvalidInput("negative degree");
    std::size_t count = xs.y_size();
    for (int i = 0; i < n; ++i) {
        count *= xs.x_size();
        if (count > cap || count > UINT32_MAX)
            throw ResourceCap("degree " + std::to_string(n) + " exceeds the cell cap of " + std::to_string(cap));
    }
    if (count > cap)
        throw ResourceCap("degree " + std::to_string(n) + " exceeds the cell cap of " + std::to_string(cap));
    return count;
}

namespace {

// Writes the face d^eps_i of (y; x_1..x_n) into (oy; ox_1..ox_{n-1}).
void apply_face(const XSet& xs, int n, std::uint32_t y, const std::uint32_t* x, int i, int eps, std::uint32_t& oy,
                std::uint32_t* ox)
{
    const auto& q = xs.quandle();
    const std::uint32_t xi = x[i - 1];
    if (eps == 0) {
        oy = y;
        for (int j = 0; j < i - 1; ++j)
            ox[j] = x[j];
    } else {
        oy = xs.star(y, xi);
        for (int j = 0; j < i - 1; ++j)
            ox[j] = q.op(x[j], xi);
    }
    for (int j = i; j < n; ++j)
        ox[j - 1] = x[j];
}

} // namespace

std::uint32_t face_cell(const XSet& xs, int n, std::uint32_t cell, int i, int eps)
{
    TupleCodec src(xs.y_size(), xs.x_size(), n), dst(xs.y_size(), xs.x_size(), n - 1);
    std::uint32_t y, oy;
    std::vector<std::uint32_t> x(n), ox(n > 0 ? n - 1 : 0);
    src.decode(cell, y, x.data());
    apply_face(xs, n, y, x.data(), i, eps, oy, ox.data());
    return dst.encode(oy, ox.data());
}

bool is_degenerate_tuple(const std::uint32_t* x, int n)
{
    for (int i = 0; i + 1 < n; ++i)
        if (x[i] == x[i + 1])
            return true;
    return false;
}

ComplexSlice boundary_matrices(std::shared_ptr<const XSet> xs, int n, Ring ring, std::size_t cell_cap)
{
    const std::size_t cols = checked_cell_count(*xs, n, cell_cap);
    const std::size_t rows = n == 0 ? 0 : checked_cell_count(*xs, n - 1, cell_cap);
    ComplexSlice s;
    s.xset = xs;
    s.degree = n;
    s.variant = xs->kind() == XSetKind::Point ? Variant::Rack : Variant::Full;
    s.ring = ring;
    s.d0 = SparseMatrix(rows, cols, ring);
    s.d1 = SparseMatrix(rows, cols, ring);
    s.d = SparseMatrix(rows, cols, ring);
    if (n == 0)
        return s;

    TupleCodec src(xs->y_size(), xs->x_size(), n), dst(xs->y_size(), xs->x_size(), n - 1);
    std::vector<std::uint32_t> x(n), ox(n - 1);
    std::uint32_t y, oy;
    std::vector<SparseVector::Entry> e0, e1, ed;
    for (std::uint32_t c = 0; c < cols; ++c) {
        src.decode(c, y, x.data());
        e0.clear();
        e1.clear();
        for (int i = 1; i <= n; ++i) {
            const std::int64_t sgn = (i % 2) ? -1 : 1;
            apply_face(*xs, n, y, x.data(), i, 0, oy, ox.data());
            e0.emplace_back(dst.encode(oy, ox.data()), sgn);
            apply_face(*xs, n, y, x.data(), i, 1, oy, ox.data());
            e1.emplace_back(dst.encode(oy, ox.data()), sgn);
        }
        ed = e0;
        for (auto [r, v] : e1)
            ed.emplace_back(r, -v);
        s.d0.set_column(c, SparseVector::from_pairs(e0, ring));
        s.d1.set_column(c, SparseVector::from_pairs(e1, ring));
        s.d.set_column(c, SparseVector::from_pairs(ed, ring));
    }
    return s;
}

namespace {

std::vector<std::uint32_t> cells_of_kind(const XSet& xs, int n, bool degenerate)
{
    TupleCodec codec(xs.y_size(), xs.x_size(), n);
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> x(n);
    std::uint32_t y;
    for (std::uint32_t c = 0; c < codec.size(); ++c) {
        codec.decode(c, y, x.data());
        if (is_degenerate_tuple(x.data(), n) == degenerate)
            out.push_back(c);
    }
    return out;
}

SparseMatrix restrict_matrix(const SparseMatrix& m, const std::vector<std::uint32_t>& cols,
                             const std::vector<std::uint32_t>& rows, bool require_closed, int degree)
{
    std::unordered_map<std::uint32_t, std::uint32_t> row_pos;
    for (std::uint32_t i = 0; i < rows.size(); ++i)
        row_pos.emplace(rows[i], i);
    SparseMatrix out(rows.size(), cols.size(), m.ring());
    for (std::uint32_t j = 0; j < cols.size(); ++j) {
        std::vector<SparseVector::Entry> e;
        for (const auto& [r, v] : m.column(cols[j]).entries()) {
            auto it = row_pos.find(r);
            if (it != row_pos.end())
                e.emplace_back(it->second, v);
            else if (require_closed)
                throw InvalidInput("degenerate subcomplex is not closed under the boundary in degree " +
                                   std::to_string(degree));
        }
        out.set_column(j, SparseVector::from_pairs(std::move(e), m.ring()));
    }
    return out;
}

} // namespace

ComplexSlice quandle_quotient(const ComplexSlice& full, Variant which)
{
    if (which != Variant::Degenerate && which != Variant::Quandle)
        throw InvalidInput("quotient variant must be Degenerate or Quandle");
    if (full.variant != Variant::Rack)
        throw InvalidInput("quandle quotient needs a full rack-complex slice");
    if (!check_axioms(full.xset->quandle()).is_quandle)
        throw InvalidInput("degeneracy subcomplex is only closed for quandles");
    const bool deg = which == Variant::Degenerate;
    ComplexSlice s;
    s.xset = full.xset;
    s.degree = full.degree;
    s.variant = which;
    s.ring = full.ring;
    s.cells = cells_of_kind(*full.xset, full.degree, deg);
    if (full.degree > 0)
        s.row_cells = cells_of_kind(*full.xset, full.degree - 1, deg);
    s.d0 = restrict_matrix(full.d0, s.cells, s.row_cells, deg, full.degree);
    s.d1 = restrict_matrix(full.d1, s.cells, s.row_cells, deg, full.degree);
    s.d = restrict_matrix(full.d, s.cells, s.row_cells, deg, full.degree);
    return s;
}

std::vector<ComplexSlice> build_complex(std::shared_ptr<const XSet> xs, int max_degree, Ring ring, Variant variant,
                                        std::size_t cell_cap)
{
    std::vector<ComplexSlice> out;
    for (int n = 0; n <= max_degree; ++n) {
        ComplexSlice s = boundary_matrices(xs, n, ring, cell_cap);
        if (variant == Variant::Degenerate || variant == Variant::Quandle)
            s = quandle_quotient(s, variant);
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

void require_kind(const XSet& xs, XSetKind kind, const char* what)
{
    if (xs.kind() != kind)
        throw InvalidInput(std::string(what) + " needs a " + xset_kind_name(kind) + " X-set");
}

std::int64_t sign_of(int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace

SparseMatrix psi_matrix(const XSet& point, const XSet& self, int n, Ring ring)
{
    require_kind(point, XSetKind::Point, "psi");
    require_kind(self, XSetKind::SelfAction, "psi");
    if (n < 1)
        throw InvalidInput("psi is defined from degree 1 on");
    // (x_1..x_n) and (x_1; x_2..x_n) share the same index
    const std::size_t size = TupleCodec(1, point.x_size(), n).size();
    return SparseMatrix::identity(size, ring).scaled(sign_of(n - 1));
}

SparseMatrix p_matrix(const XSet& self, int d, Ring ring)
{
    require_kind(self, XSetKind::SelfAction, "P");
    if (d < 1)
        throw InvalidInput("P is defined from degree 1 on");
    TupleCodec src(self.y_size(), self.x_size(), d), dst(self.y_size(), self.x_size(), d - 1);
    SparseMatrix out(dst.size(), src.size(), ring);
    std::vector<std::uint32_t> x(d);
    std::uint32_t y;
    const std::int64_t sgn = normalize_coefficient(sign_of(d + 1), ring);
    for (std::uint32_t c = 0; c < src.size(); ++c) {
        src.decode(c, y, x.data());
        out.set_column(c, SparseVector::from_pairs({{dst.encode(x[0], x.data() + 1), sgn}}, ring));
    }
    return out;
}

SparseMatrix d_matrix(const XSet& self, int d, Ring ring)
{
    require_kind(self, XSetKind::SelfAction, "D");
    if (!self.quandle().is_idempotent())
        throw InvalidInput("D requires a quandle");
    TupleCodec src(self.y_size(), self.x_size(), d), dst(self.y_size(), self.x_size(), d + 1);
    SparseMatrix out(dst.size(), src.size(), ring);
    std::vector<std::uint32_t> x(d + 1);
    std::uint32_t y;
    const std::int64_t sgn = normalize_coefficient(sign_of(d), ring);
    for (std::uint32_t c = 0; c < src.size(); ++c) {
        src.decode(c, y, x.data() + 1);
        x[0] = y;
        out.set_column(c, SparseVector::from_pairs({{dst.encode(y, x.data()), sgn}}, ring));
    }
    return out;
}

SparseMatrix chi_matrix(const XSet& group, const XSet& self, int n, Ring ring)
{
    require_kind(group, XSetKind::GroupAction, "chi");
    require_kind(self, XSetKind::SelfAction, "chi");
    TupleCodec src(group.y_size(), group.x_size(), n), dst(self.y_size(), self.x_size(), n);
    SparseMatrix out(dst.size(), src.size(), ring);
    std::vector<std::uint32_t> x(n);
    std::uint32_t g;
    for (std::uint32_t c = 0; c < src.size(); ++c) {
        src.decode(c, g, x.data());
        out.set_column(c, SparseVector::from_pairs({{dst.encode(group.aug().rho(0, g), x.data()), 1}}, ring));
    }
    return out;
}

namespace {

void require_same_augmentation(const XSet& y, const XSet& g)
{
    require_kind(g, XSetKind::GroupAction, "mu");
    if (y.aug_ptr() != g.aug_ptr() && !(y.quandle() == g.quandle()))
        throw InvalidInput("mu needs both factors over the same augmented quandle");
}

} // namespace

std::uint32_t mu_cell(const XSet& y, std::uint32_t a, int m, const XSet& g, std::uint32_t b, int k)
{
    TupleCodec ca(y.y_size(), y.x_size(), m), cb(g.y_size(), g.x_size(), k), cout(y.y_size(), y.x_size(), m + k);
    std::vector<std::uint32_t> x(m + k);
    std::uint32_t ya, gb;
    ca.decode(a, ya, x.data());
    cb.decode(b, gb, x.data() + m);
    const auto& aug = g.aug();
    for (int i = 0; i < m; ++i)
        x[i] = aug.rho(x[i], gb);
    return cout.encode(y.act(ya, gb), x.data());
}

SparseVector mu_chain(const XSet& y, const SparseVector& a, int m, const XSet& g, const SparseVector& b, int k)
{
    require_same_augmentation(y, g);
    const Ring ring = a.ring();
    std::vector<SparseVector::Entry> out;
    for (const auto& [ia, va] : a.entries())
        for (const auto& [ib, vb] : b.entries())
            out.emplace_back(mu_cell(y, ia, m, g, ib, k),
                             ring.is_field() ? mod::mul(static_cast<std::uint32_t>(va), static_cast<std::uint32_t>(vb),
                                                        ring.p)
                                             : va * vb);
    return SparseVector::from_pairs(std::move(out), ring);
}

SparseMatrix mu_right_matrix(const XSet& y, int m, const XSet& g, const SparseVector& b, int k)
{
    require_same_augmentation(y, g);
    TupleCodec ca(y.y_size(), y.x_size(), m), cout(y.y_size(), y.x_size(), m + k);
    SparseMatrix out(cout.size(), ca.size(), b.ring());
    for (std::uint32_t c = 0; c < ca.size(); ++c) {
        SparseVector unit = SparseVector::from_pairs({{c, 1}}, b.ring());
        out.set_column(c, mu_chain(y, unit, m, g, b, k));
    }
    return out;
}

std::optional<ChainMapWitness> verify_chain_map(const std::vector<SparseMatrix>& f,
                                                const std::vector<SparseMatrix>& src_d,
                                                const std::vector<SparseMatrix>& dst_d, int sign)
{
    if (src_d.size() < f.size() || dst_d.size() < f.size())
        throw InvalidInput("chain map check needs a boundary for every degree");
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (dst_d[i].cols() != f[i].rows() || f[i - 1].cols() != src_d[i].rows() || f[i].cols() != src_d[i].cols() ||
            dst_d[i].rows() != f[i - 1].rows())
            throw InvalidInput("chain map dimension mismatch at degree " + std::to_string(i));
        SparseMatrix lhs = dst_d[i] * f[i];
        SparseMatrix rhs = (f[i - 1] * src_d[i]).scaled(sign);
        if (auto col = lhs.first_differing_column(rhs))
            return ChainMapWitness{i, *col};
    }
    return std::nullopt;
}

} // namespace qh
