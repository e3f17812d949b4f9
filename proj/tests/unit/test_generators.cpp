#include "doctest.h"
#include "qh/generators.hpp"

using namespace qh;

namespace {

const QuandleContext& r3()
{
    static const QuandleContext ctx(build_dihedral(3), 3);
    return ctx;
}

const GeneratorSet& r3_generators()
{
    static const GeneratorSet gs = identify_generators(r3());
    return gs;
}

} // namespace

TEST_CASE("distinguished chains are cycles")
{
    const auto& ctx = r3();
    CHECK(ctx.group_cx.homology(1).is_cycle(r_chain(ctx)));
    CHECK(ctx.group_cx.homology(2).is_cycle(hs_chain(ctx)));
    for (std::uint32_t a = 0; a < 3; ++a)
        CHECK(ctx.group_cx.homology(1).is_cycle(hprime_chain(ctx, a)));
}

TEST_CASE("generators of R_3 and their normalization")
{
    const auto& ctx = r3();
    const GeneratorSet& gs = r3_generators();
    CHECK(gs.p == 3);
    CHECK(gs.removed_p2 == 0);
    CHECK(gs.scale == 1);
    CHECK(gs.reference_index == 1);
    CHECK(gs.a_self.degree == 2);
    CHECK(gs.b_self.degree == 3);
    CHECK(gs.pone.degree == 1);
    CHECK(ctx.self_alg.coboundary(gs.a_self).is_zero());
    CHECK(ctx.group_alg.coboundary(gs.b).is_zero());
    CHECK(gs.a_self.evaluate(gs.reference_cycle) == 1);
    CHECK(psi_vanishes_on_degenerate(gs.a_self));
    CHECK(primitivity_defects(ctx, gs.a) == 0);
    CHECK(primitivity_defects(ctx, gs.b) == 0);

    const SuiteReport rep = ring_suite(ctx, gs);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
    CHECK(rep.results.size() == 9);
}

TEST_CASE("the P²𝟏 correction is visible on r ⊗ r")
{
    const auto& ctx = r3();
    const GeneratorSet& gs = r3_generators();
    const SparseVector r = r_chain(ctx);
    const Cochain p2 = op_chi(ctx.group_alg, op_p(ctx.self_alg, gs.pone_self));
    CHECK(coproduct_pairing(ctx, gs.a, {r}, 1, {r}, 1)[0][0] == 0);
    CHECK(coproduct_pairing(ctx, gs.a + p2, {r}, 1, {r}, 1)[0][0] != 0);
    SparseVector not_cycle = SparseVector::from_pairs({{0, 1}}, Ring::prime_field(3));
    if (ctx.group_cx.homology(1).is_cycle(not_cycle))
        not_cycle = SparseVector::from_pairs({{1, 1}}, Ring::prime_field(3));
    CHECK_THROWS_AS(coproduct_pairing(ctx, gs.a, {not_cycle}, 1, {r}, 1), InvalidInput);
}

TEST_CASE("generators need a two-dimensional H²")
{
    const QuandleContext ctx(build_trivial(2), 2);
    CHECK_THROWS_AS(identify_generators(ctx), std::runtime_error);
}

TEST_CASE("cochain JSON lists nonzero values with their cells")
{
    const auto& ctx = r3();
    Cochain f = ctx.point_alg.zero(2);
    f.values[5] = 2; // (0; 1, 2)
    const auto j = cochain_to_json(f);
    CHECK(j["degree"] == 2);
    CHECK(j["xset"] == "point");
    CHECK(j["p"] == 3);
    REQUIRE(j["values"].size() == 1);
    CHECK(j["values"][0].dump() == "[[0,1,2],2]");
}

TEST_CASE("the h_s operation is injective on low rack homology")
{
    const auto& ctx = r3();
    const SparseVector hs = hs_chain(ctx);
    for (int n = 1; n <= 2; ++n) {
        const OperationImage im = homology_operation(ctx, hs, 2, n, Variant::Rack);
        CHECK(im.degree == n);
        CHECK(im.injective());
    }
}
