#include "doctest.h"
#include "oracles.hpp"
#include "qh/context.hpp"

#include <algorithm>

using namespace qh;

namespace {

struct Space {
    Quandle q;
    bool self;
    std::shared_ptr<const XSet> xs;
    CochainAlgebra alg;

    Space(const Quandle& quandle, bool on_self, std::uint32_t p)
        : q(quandle),
          self(on_self),
          xs(std::make_shared<const XSet>(std::make_shared<const AugmentedQuandle>(inner_group(quandle)),
                                          on_self ? XSetKind::SelfAction : XSetKind::Point)),
          alg(xs, p)
    {
    }
};

// δ_A for A = {a_1 < ... < a_m}, applied from the highest index down.
oracle::Cell faces(const Space& s, oracle::Cell c, const std::vector<int>& a, int eps)
{
    for (auto it = a.rbegin(); it != a.rend(); ++it)
        c = oracle::face(s.q, s.self, c, *it, eps);
    return c;
}

// (f ∪ g)(x) = (-1)^(km) Σ_{|A| = m} ε(A) f(δ⁰_A x) g(δ¹_B x)
Cochain cup_by_definition(const Space& s, const Cochain& f, const Cochain& g)
{
    const int k = f.degree, m = g.degree, n = k + m;
    const std::int64_t p = s.alg.prime();
    const std::size_t xs = s.q.size();
    Cochain out = s.alg.zero(n);
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur;
    oracle::subsets(n, m, 0, cur, subsets);
    for (std::uint32_t c = 0; c < out.values.size(); ++c) {
        const oracle::Cell cell = oracle::decode(c, xs, n);
        std::int64_t acc = 0;
        for (const auto& sub : subsets) {
            std::vector<int> a, b;
            for (int i = 1; i <= n; ++i)
                (std::find(sub.begin(), sub.end(), static_cast<std::size_t>(i - 1)) != sub.end() ? a : b).push_back(i);
            std::vector<int> perm = b;
            perm.insert(perm.end(), a.begin(), a.end());
            const std::int64_t fv = f.values[oracle::encode(faces(s, cell, a, 0), xs)];
            const std::int64_t gv = g.values[oracle::encode(faces(s, cell, b, 1), xs)];
            acc += oracle::parity(perm) * fv * gv;
        }
        out.values[c] = static_cast<std::uint32_t>(oracle::reduce((k * m) % 2 ? -acc : acc, p));
    }
    return out;
}

Cochain coboundary_by_definition(const Space& s, const Cochain& f)
{
    const oracle::Dense d = oracle::boundary(s.q, s.self, f.degree + 1);
    Cochain out = s.alg.zero(f.degree + 1);
    for (std::size_t c = 0; c < out.values.size(); ++c) {
        std::int64_t acc = 0;
        for (std::size_t r = 0; r < d.size(); ++r)
            acc += d[r][c] * f.values[r];
        out.values[c] = static_cast<std::uint32_t>(oracle::reduce(acc, s.alg.prime()));
    }
    return out;
}

} // namespace

TEST_CASE("subset signs")
{
    CHECK(subset_sign({1}, 2) == -1);
    CHECK(subset_sign({}, 5) == 1);
    CHECK(subset_sign({3, 4}, 4) == 1);
    CHECK_THROWS(subset_sign({5}, 4));
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= n; ++m)
            for (const auto& a : subsets_of_size(n, m)) {
                std::vector<int> perm;
                for (int i = 1; i <= n; ++i)
                    if (std::find(a.begin(), a.end(), i) == a.end())
                        perm.push_back(i);
                perm.insert(perm.end(), a.begin(), a.end());
                CHECK(subset_sign(a, n) == oracle::parity(perm));
            }
}

TEST_CASE("property: cup product agrees with the defining sum")
{
    SplitMix64 rng(3);
    for (const auto& [q, p] : {std::pair{build_dihedral(3), 3u}, {build_dihedral(5), 5u}, {build_alexander(4, 3), 2u}}) {
        for (bool self : {false, true}) {
            const Space s(q, self, p);
            for (int k = 0; k <= 2; ++k)
                for (int m = 0; m + k <= 3; ++m) {
                    const Cochain f = s.alg.random(k, rng), g = s.alg.random(m, rng);
                    CHECK(s.alg.cup(f, g) == cup_by_definition(s, f, g));
                }
        }
    }
}

TEST_CASE("property: coboundary is the transpose of the boundary")
{
    SplitMix64 rng(4);
    const Space s(build_dihedral(3), true, 3);
    for (int k = 0; k <= 3; ++k)
        for (int t = 0; t < 5; ++t) {
            const Cochain f = s.alg.random(k, rng);
            CHECK(s.alg.coboundary(f) == coboundary_by_definition(s, f));
            CHECK(s.alg.coboundary(s.alg.coboundary(f)).is_zero());
        }
}

TEST_CASE("property: associativity, unit and the Leibniz rule")
{
    SplitMix64 rng(9);
    const Space s(build_dihedral(5), true, 5);
    const auto& A = s.alg;
    for (int t = 0; t < 30; ++t) {
        const int k = static_cast<int>(rng.below(3)), m = static_cast<int>(rng.below(2)), l = static_cast<int>(rng.below(2));
        const Cochain f = A.random(k, rng), g = A.random(m, rng), h = A.random(l, rng);
        CHECK(A.cup(A.cup(f, g), h) == A.cup(f, A.cup(g, h)));
        CHECK(A.cup(A.one(), f) == f);
        CHECK(A.cup(f, A.one()) == f);
        // coboundary = transpose of d, hence the sign on the first term
        const Cochain lhs = A.coboundary(A.cup(f, g));
        const Cochain rhs = A.cup(A.coboundary(f), g).scaled(m % 2 ? -1 : 1) + A.cup(f, A.coboundary(g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operator identities on R_3")
{
    SplitMix64 rng(12);
    const QuandleContext ctx(build_dihedral(3), 3);
    const auto& S = ctx.self_alg;
    const Cochain lam = lambda(S);
    CHECK(lam == S.constant(1, 1));
    for (int k = 0; k <= 3; ++k) {
        const Cochain f = S.random(k, rng);
        CHECK(S.cup(lam, lam).is_zero());
        CHECK(op_q(S, op_q(S, f)).is_zero());
        CHECK(S.partial0(f) == S.cup(f, lam).scaled(-1));
        CHECK(S.partial1(f) == S.cup(lam, f).scaled(k % 2 ? 1 : -1));
        CHECK(op_d(S, op_p(S, f)) == f);
        CHECK(op_psi(ctx.point_alg, op_q(S, f)) == ctx.point_alg.partial0(op_psi(ctx.point_alg, f)).scaled(k % 2 ? -1 : 1));
    }
    CHECK(op_q(S, S.one()).is_zero());
}

TEST_CASE("Bockstein of the Mochizuki-degree class is a nonzero cocycle")
{
    const QuandleContext ctx(build_dihedral(3), 3);
    const auto& S = ctx.self_alg;
    const auto& h2 = ctx.self_cx.cohomology(2);
    REQUIRE(h2.dim() == 2);
    bool nonzero = false;
    for (const auto& r : h2.reps()) {
        const Cochain b = S.bockstein(S.from_sparse(2, r));
        CHECK(S.coboundary(b).is_zero());
        nonzero |= !ctx.self_cx.is_coboundary(b);
    }
    CHECK(nonzero);
    SplitMix64 rng(1);
    Cochain f = S.random(2, rng);
    while (S.coboundary(f).is_zero())
        f = S.random(2, rng);
    CHECK_THROWS(S.bockstein(f));
}
