#include "qh/generators.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qh {

namespace {

std::vector<Cochain> class_reps(const CochainAlgebra& alg, const ComplexCache& cx, int n)
{
    std::vector<Cochain> out;
    for (const auto& r : cx.cohomology(n).reps())
        out.push_back(alg.from_sparse(n, r));
    return out;
}

SparseVector unit_vector(std::uint32_t pos, Ring ring)
{
    return SparseVector::from_pairs({{pos, 1}}, ring);
}

// Cells (y; x_1, x_2) of B(X;X) with y = x_1 or x_1 = x_2.
std::vector<std::uint32_t> degenerate_cells(const XSet& self)
{
    TupleCodec codec(self.y_size(), self.x_size(), 2);
    std::vector<std::uint32_t> out;
    std::uint32_t t[3];
    for (std::uint32_t c = 0; c < codec.size(); ++c) {
        codec.decode(c, t[0], t + 1);
        if (is_degenerate_tuple(t, 3))
            out.push_back(c);
    }
    return out;
}

SparseVector restrict_to(const Cochain& f, const std::vector<std::uint32_t>& cells, Ring ring)
{
    std::vector<SparseVector::Entry> e;
    for (std::uint32_t i = 0; i < cells.size(); ++i)
        if (f.values[cells[i]] != 0)
            e.emplace_back(i, f.values[cells[i]]);
    return SparseVector::from_pairs(std::move(e), ring);
}

std::uint32_t total(const SparseVector& v, std::uint32_t p)
{
    std::uint32_t s = 0;
    for (const auto& [i, c] : v.entries())
        s = mod::add(s, mod::reduce(c, p), p);
    return s;
}

bool is_cycle(const ComplexCache& cx, const SparseVector& v, int n)
{
    return n == 0 || cx.slice(n).d.apply(v).empty();
}

IdentityResult result(const std::string& name, std::optional<std::string> failure)
{
    IdentityResult r;
    r.name = name;
    r.space = "group";
    r.checks = 1;
    if (failure) {
        r.failures = 1;
        r.witness = *failure;
    }
    return r;
}

std::string coords_text(const std::vector<std::uint32_t>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

} // namespace

GeneratorSet identify_generators(const QuandleContext& ctx)
{
    const CochainAlgebra& S = ctx.self_alg;
    const ComplexCache& cx = ctx.self_cx;
    const std::uint32_t p = ctx.p;
    const Ring ring = Ring::prime_field(p);

    GeneratorSet gs;
    gs.p = p;
    gs.pone_self = lambda(S);
    const Cochain p2 = op_p(S, gs.pone_self);

    const auto h2 = class_reps(S, cx, 2);
    if (h2.size() != 2)
        throw std::runtime_error("expected dim H^2(B(X;X)) = 2, found " + std::to_string(h2.size()));
    std::vector<Cochain> p_image;
    for (const auto& c : class_reps(S, cx, 1))
        p_image.push_back(op_p(S, c));
    if (!independent_classes(cx, p_image) || p_image.size() != 1)
        throw std::runtime_error("image of P in H^2 is not one-dimensional");

    const Cochain* a0 = nullptr;
    for (const auto& c : h2) {
        std::vector<Cochain> trial = p_image;
        trial.push_back(c);
        if (independent_classes(cx, trial)) {
            a0 = &c;
            break;
        }
    }
    if (!a0)
        throw std::runtime_error("no class of H^2 outside the image of P");

    // Solve A0 = c P²𝟏 + δG on the degenerate cells.
    const auto cells = degenerate_cells(S.xset());
    const std::size_t g_cells = S.cells(1);
    FpEchelon ech(cells.size(), p, 1 + g_cells);
    ech.insert(restrict_to(p2, cells, ring), unit_vector(0, ring));
    for (std::uint32_t i = 0; i < g_cells; ++i) {
        Cochain e = S.zero(1);
        e.values[i] = 1;
        ech.insert(restrict_to(S.coboundary(e), cells, ring), unit_vector(i + 1, ring));
    }
    const auto sol = ech.express(restrict_to(*a0, cells, ring));
    if (!sol)
        throw std::runtime_error("A cannot be normalized to a quandle class");
    Cochain g = S.zero(1);
    for (const auto& [i, c] : sol->entries()) {
        if (i == 0)
            gs.removed_p2 = static_cast<std::uint32_t>(c);
        else
            g.values[i - 1] = static_cast<std::uint32_t>(c);
    }
    Cochain a = *a0 - p2.scaled(gs.removed_p2) - S.coboundary(g);

    // Scale to 1 on the first 2-cycle where P²𝟏 vanishes and A does not.
    const auto& reps = cx.homology(2).reps();
    std::optional<std::size_t> ref;
    for (std::size_t i = 0; i < reps.size() && !ref; ++i)
        if (p2.evaluate(reps[i]) == 0 && a.evaluate(reps[i]) != 0)
            ref = i;
    for (std::size_t i = 0; i < reps.size() && !ref; ++i)
        if (a.evaluate(reps[i]) != 0)
            ref = i;
    if (!ref)
        throw std::runtime_error("A vanishes on every 2-cycle");
    gs.reference_index = *ref;
    gs.reference_cycle = reps[*ref];
    gs.scale = mod::inv(a.evaluate(reps[*ref]), p);
    gs.a_self = a.scaled(gs.scale);
    gs.b_self = S.bockstein(gs.a_self);

    gs.pone = op_chi(ctx.group_alg, gs.pone_self);
    gs.a = op_chi(ctx.group_alg, gs.a_self);
    gs.b = ctx.group_alg.bockstein(gs.a);
    return gs;
}

nlohmann::ordered_json GeneratorSet::to_json() const
{
    nlohmann::ordered_json j;
    j["p"] = p;
    j["space"] = "group";
    j["normalization"] = {{"removed_p2_multiple", removed_p2},
                          {"scale", scale},
                          {"reference_index", reference_index},
                          {"reference_cycle", nlohmann::ordered_json::array()}};
    TupleCodec codec(a_self.xset->y_size(), a_self.xset->x_size(), 2);
    for (const auto& [c, v] : reference_cycle.entries())
        j["normalization"]["reference_cycle"].push_back({codec.decode(c), v});
    j["Pone"] = cochain_to_json(pone);
    j["A"] = cochain_to_json(a);
    j["B"] = cochain_to_json(b);
    return j;
}

std::vector<std::vector<std::uint32_t>> coproduct_pairing(const QuandleContext& ctx, const Cochain& f,
                                                          const std::vector<SparseVector>& left, int i,
                                                          const std::vector<SparseVector>& right, int j)
{
    if (f.xset->kind() != XSetKind::GroupAction || f.degree != i + j)
        throw InvalidInput("coproduct pairing needs a cochain on B(G;X) of degree i + j");
    for (const auto& a : left)
        if (!is_cycle(ctx.group_cx, a, i))
            throw InvalidInput("left factor is not a cycle");
    for (const auto& b : right)
        if (!is_cycle(ctx.group_cx, b, j))
            throw InvalidInput("right factor is not a cycle");
    const std::int64_t sgn = (i * j) % 2 == 0 ? 1 : -1;
    std::vector<std::vector<std::uint32_t>> m(left.size(), std::vector<std::uint32_t>(right.size()));
    for (std::size_t r = 0; r < left.size(); ++r)
        for (std::size_t c = 0; c < right.size(); ++c)
            m[r][c] = mod::reduce(sgn * f.evaluate(mu_chain(*ctx.group, left[r], i, *ctx.group, right[c], j)), ctx.p);
    return m;
}

std::size_t primitivity_defects(const QuandleContext& ctx, const Cochain& f, std::string* witness)
{
    const int n = f.degree;
    std::size_t defects = 0;
    for (int i = 0; i <= n; ++i) {
        const int j = n - i;
        const auto& left = ctx.group_cx.homology(i).reps();
        const auto& right = ctx.group_cx.homology(j).reps();
        const auto m = coproduct_pairing(ctx, f, left, i, right, j);
        bool bad = false;
        for (std::size_t r = 0; r < left.size() && !bad; ++r)
            for (std::size_t c = 0; c < right.size() && !bad; ++c) {
                std::uint32_t want = 0;
                if (i == 0)
                    want = mod::add(want, mod::mul(total(left[r], ctx.p), f.evaluate(right[c]), ctx.p), ctx.p);
                if (j == 0)
                    want = mod::add(want, mod::mul(f.evaluate(left[r]), total(right[c], ctx.p), ctx.p), ctx.p);
                if (m[r][c] != want) {
                    bad = true;
                    if (witness && witness->empty())
                        *witness = "degrees (" + std::to_string(i) + "," + std::to_string(j) + ") entry (" +
                                   std::to_string(r) + "," + std::to_string(c) + ") is " + std::to_string(m[r][c]) +
                                   ", expected " + std::to_string(want);
                }
            }
        defects += bad ? 1 : 0;
    }
    return defects;
}

SparseVector r_chain(const QuandleContext& ctx)
{
    const auto& aug = *ctx.aug;
    const Ring ring = Ring::prime_field(ctx.p);
    const std::uint32_t half = mod::inv(2 % ctx.p, ctx.p);
    const std::uint32_t xs = static_cast<std::uint32_t>(aug.x.size());
    return SparseVector::from_pairs({{aug.g.identity() * xs, half}, {aug.eta[0] * xs, half}}, ring);
}

SparseVector hs_chain(const QuandleContext& ctx)
{
    const auto& aug = *ctx.aug;
    const Ring ring = Ring::prime_field(ctx.p);
    const std::uint32_t xs = static_cast<std::uint32_t>(aug.x.size());
    TupleCodec codec(aug.g.order(), xs, 2);
    std::vector<SparseVector::Entry> e;
    for (std::uint32_t j = 0; j < xs; ++j) {
        const std::uint32_t x[2] = {j, (j + 1) % xs};
        e.emplace_back(codec.encode(aug.g.identity(), x), 1);
    }
    return SparseVector::from_pairs(std::move(e), ring);
}

SparseVector hprime_chain(const QuandleContext& ctx, std::uint32_t a)
{
    const auto& aug = *ctx.aug;
    if (a >= aug.x.size())
        throw InvalidInput("element out of range");
    const std::uint32_t xs = static_cast<std::uint32_t>(aug.x.size());
    return SparseVector::from_pairs({{aug.eta[a] * xs + a, 1}, {aug.g.identity() * xs + a, 1}},
                                    Ring::prime_field(ctx.p));
}

OperationImage homology_operation(const QuandleContext& ctx, const SparseVector& op, int op_degree, int n,
                                  Variant variant)
{
    if (variant != Variant::Rack && variant != Variant::Quandle)
        throw InvalidInput("homology operation needs the rack complex or the quandle quotient");
    if (!is_cycle(ctx.group_cx, op, op_degree))
        throw std::runtime_error("operation chain is not a cycle");
    const int top = n + op_degree;
    const auto slices = build_complex(ctx.point, top + 1, Ring::prime_field(ctx.p), variant, ctx.cell_cap);
    auto space = [&](int d) { return ClassSpace(slices[d + 1].d, slices[d].d); };
    const ClassSpace src = space(n), dst = space(top);
    const bool quotient = variant == Variant::Quandle;
    const auto& src_cells = slices[n].cells;
    const auto& dst_cells = slices[top].cells;

    OperationImage out;
    out.degree = n;
    out.source_dim = src.dim();
    out.target_dim = dst.dim();
    std::vector<std::vector<std::uint32_t>> cols;
    for (const auto& rep : src.reps()) {
        SparseVector full = rep;
        if (quotient) {
            std::vector<SparseVector::Entry> e;
            for (const auto& [i, c] : rep.entries())
                e.emplace_back(src_cells[i], c);
            full = SparseVector::from_pairs(std::move(e), rep.ring());
        }
        SparseVector img = mu_chain(*ctx.point, full, n, *ctx.group, op, op_degree);
        if (quotient) {
            std::vector<SparseVector::Entry> e;
            for (const auto& [c, v] : img.entries()) {
                auto it = std::lower_bound(dst_cells.begin(), dst_cells.end(), c);
                if (it != dst_cells.end() && *it == c)
                    e.emplace_back(static_cast<std::uint32_t>(it - dst_cells.begin()), v);
            }
            img = SparseVector::from_pairs(std::move(e), img.ring());
        }
        cols.push_back(dst.coordinates(img));
    }
    out.rank = rank_of_columns(cols, ctx.p);
    return out;
}

SuiteReport ring_suite(const QuandleContext& ctx, const GeneratorSet& gs)
{
    const CochainAlgebra& M = ctx.group_alg;
    const ComplexCache& cx = ctx.group_cx;
    SuiteReport rep;
    rep.suite = "ring";
    auto none = std::optional<std::string>();

    const Cochain aa = M.cup(gs.a, gs.a);
    rep.results.push_back(result("a_squared_nonzero",
                                 cx.is_coboundary(aa) ? std::optional<std::string>("A∪A is a coboundary") : none));
    rep.results.push_back(result("a_cubed_zero", cx.is_coboundary(M.cup(aa, gs.a))
                                                     ? none
                                                     : std::optional<std::string>("A∪A∪A is not a coboundary")));
    rep.results.push_back(result("b_squared_zero", cx.is_coboundary(M.cup(gs.b, gs.b))
                                                       ? none
                                                       : std::optional<std::string>("B∪B is not a coboundary")));

    const CochainAlgebra& S = ctx.self_alg;
    const std::vector<Cochain> h3 = {gs.b, M.cup(gs.a, gs.pone), op_chi(M, op_p(S, gs.a_self)),
                                     op_chi(M, op_p(S, op_p(S, gs.pone_self)))};
    std::optional<std::string> basis;
    if (cx.is_coboundary(gs.b))
        basis = "B is a coboundary";
    else if (cx.cohomology(3).dim() != h3.size())
        basis = "dim H^3 is " + std::to_string(cx.cohomology(3).dim());
    else if (!independent_classes(cx, h3))
        basis = "B, A∪P𝟏, PA, P³𝟏 are dependent";
    rep.results.push_back(result("bockstein_completes_basis", basis));

    for (const auto& [name, f] : {std::pair<const char*, const Cochain*>{"pone_primitive", &gs.pone},
                                  {"b_primitive", &gs.b}}) {
        std::string w;
        primitivity_defects(ctx, *f, &w);
        rep.results.push_back(result(name, w.empty() ? none : std::optional<std::string>(w)));
    }

    const SparseVector r = r_chain(ctx);
    const auto rr = coproduct_pairing(ctx, gs.a, {r}, 1, {r}, 1);
    rep.results.push_back(result("mu_a_rr_zero", rr[0][0] == 0 ? none
                                                               : std::optional<std::string>(
                                                                     "<μA, r⊗r> = " + coords_text(rr[0]))));

    rep.results.push_back(result("psi_a_quandle_class", psi_vanishes_on_degenerate(gs.a_self)
                                                            ? none
                                                            : std::optional<std::string>("ψA is nonzero on a "
                                                                                         "degenerate tuple")));
    rep.results.push_back(result("chi_commutes_with_bockstein",
                                 op_chi(M, gs.b_self) == gs.b
                                     ? none
                                     : std::optional<std::string>("χ(ΔA) differs from Δ(χA)")));
    return rep;
}

nlohmann::ordered_json cochain_to_json(const Cochain& f)
{
    nlohmann::ordered_json j;
    j["degree"] = f.degree;
    j["xset"] = xset_kind_name(f.xset->kind());
    j["p"] = f.p;
    j["values"] = nlohmann::ordered_json::array();
    TupleCodec codec(f.xset->y_size(), f.xset->x_size(), f.degree);
    for (std::uint32_t c = 0; c < f.values.size(); ++c)
        if (f.values[c] != 0)
            j["values"].push_back({codec.decode(c), f.values[c]});
    return j;
}

} // namespace qh
