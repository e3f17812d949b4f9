#include "doctest.h"
#include "qh/identities.hpp"

using namespace qh;

namespace {

SuiteOptions small(int max_degree, std::uint64_t seed = 1, Fault fault = Fault::None)
{
    SuiteOptions o;
    o.max_degree = max_degree;
    o.trials = 10;
    o.seed = seed;
    o.fault = fault;
    o.threads = 1;
    return o;
}

} // namespace

TEST_CASE("identity suites pass on R_3")
{
    const QuandleContext ctx(build_dihedral(3), 3);
    for (const SuiteReport& rep : {chain_suite(ctx, small(3)), cup_suite(ctx, small(3)),
                                   triangulation_suite(ctx, small(3)), bockstein_suite(ctx, small(3))}) {
        CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
        CHECK_FALSE(rep.results.empty());
        for (const auto& r : rep.results)
            CHECK(r.checks > 0);
    }
}

TEST_CASE("identity suites pass on an Alexander quandle over F_2")
{
    const QuandleContext ctx(build_alexander(4, 3), 2);
    CHECK(chain_suite(ctx, small(3)).ok());
    CHECK(cup_suite(ctx, small(3)).ok());
}

TEST_CASE("injected faults are caught with a witness")
{
    const QuandleContext ctx(build_dihedral(3), 3);
    for (Fault f : {Fault::Psi, Fault::P, Fault::D, Fault::Cup}) {
        const SuiteReport rep = cup_suite(ctx, small(3, 1, f));
        CHECK_MESSAGE(!rep.ok(), fault_name(f));
        bool witnessed = false;
        for (const auto& r : rep.results)
            witnessed |= !r.ok() && !r.witness.empty();
        CHECK(witnessed);
    }
    CHECK_FALSE(triangulation_suite(ctx, small(3, 1, Fault::Tau)).ok());
    CHECK_FALSE(bockstein_suite(ctx, small(3, 1, Fault::Bockstein)).ok());
    CHECK(parse_fault("cup") == Fault::Cup);
    CHECK(std::string(fault_name(Fault::Tau)) == "tau");
    CHECK_THROWS(parse_fault("nonsense"));
}

TEST_CASE("suite reports are deterministic in the seed")
{
    const QuandleContext ctx(build_dihedral(3), 3);
    CHECK(cup_suite(ctx, small(3, 7)).to_json() == cup_suite(ctx, small(3, 7)).to_json());
    const SuiteReport faulty = cup_suite(ctx, small(3, 7, Fault::Cup));
    bool seeded = false;
    for (const auto& r : faulty.results)
        seeded |= !r.ok() && r.replay_seed.has_value();
    CHECK(seeded);
}

TEST_CASE("Bockstein data of R_3")
{
    const QuandleContext ctx(build_dihedral(3), 3);
    const BocksteinData d = bockstein_data(ctx, 5);
    CHECK(d.dims == std::vector<std::size_t>{1, 1, 1, 2, 4, 7});
    // exactness of the reduced complex: ker Δ̃_n = im Δ̃_{n+1}
    for (int n = 1; n < 5; ++n)
        CHECK(d.dims[n] - 1 - d.reduced_ranks[n] == d.reduced_ranks[n + 1]);
}
