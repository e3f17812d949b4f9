#include "doctest.h"
#include "oracles.hpp"
#include "qh/linalg_fp.hpp"
#include "qh/smith.hpp"

using namespace qh;

namespace {

SparseMatrix to_sparse(const oracle::Dense& m, Ring ring)
{
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    SparseMatrix out(rows, cols, ring);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<SparseVector::Entry> e;
        for (std::size_t r = 0; r < rows; ++r)
            if (m[r][c])
                e.emplace_back(static_cast<std::uint32_t>(r), ring.is_field() ? oracle::reduce(m[r][c], ring.p) : m[r][c]);
        out.set_column(c, SparseVector::from_pairs(e, ring));
    }
    return out;
}

oracle::Dense random_dense(SplitMix64& rng, std::size_t rows, std::size_t cols, int lo, int hi, int density)
{
    oracle::Dense m(rows, std::vector<std::int64_t>(cols, 0));
    for (auto& row : m)
        for (auto& v : row)
            if (static_cast<int>(rng.below(100)) < density)
                v = lo + static_cast<int>(rng.below(hi - lo + 1));
    return m;
}

} // namespace

TEST_CASE("property: sparse rank over F_p agrees with dense elimination")
{
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = trial % 3 == 0 ? 2 : trial % 3 == 1 ? 3 : 7;
        const auto rows = 1 + rng.below(9), cols = 1 + rng.below(9);
        const auto dense = random_dense(rng, rows, cols, 0, p - 1, 40);
        const SparseMatrix a = to_sparse(dense, Ring::prime_field(p));
        const std::size_t want = oracle::rank_mod(dense, p);
        CHECK(rank_fp(a) == want);
        const FpSolveResult s = solve_fp(a);
        CHECK(s.rank == want);
        CHECK(s.kernel.size() == cols - want);
        for (const auto& k : s.kernel) {
            CHECK_FALSE(k.empty());
            CHECK(a.apply(k).empty());
        }
    }
}

TEST_CASE("echelon expresses vectors through their tags")
{
    const Ring f = Ring::prime_field(5);
    FpEchelon ech(3, 5, 2);
    CHECK(ech.insert(SparseVector::from_pairs({{0, 1}, {1, 2}}, f), SparseVector::from_pairs({{0, 1}}, f)));
    CHECK(ech.insert(SparseVector::from_pairs({{1, 1}, {2, 4}}, f), SparseVector::from_pairs({{1, 1}}, f)));
    const auto target = SparseVector::from_pairs({{0, 2}, {1, 2}, {2, 2}}, f); // 2 v0 + 3 v1
    REQUIRE(ech.express(target));
    CHECK(*ech.express(target) == SparseVector::from_pairs({{0, 2}, {1, 3}}, f));
    CHECK_FALSE(ech.express(SparseVector::from_pairs({{2, 1}}, f)));
    SparseVector rel;
    CHECK_FALSE(ech.insert(target, SparseVector(), &rel));
}

TEST_CASE("property: Smith normal form matches determinantal divisors")
{
    SplitMix64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const auto rows = 1 + rng.below(4), cols = 1 + rng.below(4);
        const auto dense = random_dense(rng, rows, cols, -6, 6, 70);
        const SmithResult s = smith_normal_form(to_sparse(dense, Ring::integers()));
        const auto want = oracle::determinantal_invariants(dense);
        REQUIRE(s.invariant_factors.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i)
            CHECK(s.invariant_factors[i] == BigInt(want[i]));
        const DenseSmith d = smith_dense(to_dense(to_sparse(dense, Ring::integers())), true);
        CHECK(multiply(multiply(d.u, to_dense(to_sparse(dense, Ring::integers()))), d.v) == d.d);
    }
}

TEST_CASE("Smith normal form of small fixed matrices")
{
    const SmithResult s = smith_normal_form(to_sparse({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}, Ring::integers()));
    CHECK(s.invariant_factors == std::vector<BigInt>{2, 6, 12});
    CHECK(s.torsion() == std::vector<BigInt>{2, 6, 12});
    const SmithResult z = smith_normal_form(to_sparse({{0, 0}, {0, 0}}, Ring::integers()));
    CHECK(z.rank() == 0);
}

TEST_CASE("class space of a small complex")
{
    // F_3 complex C_1 -> C_0 with C_1 = <e0, e1, e2>, d(e_i) = v0 - v1 for all i
    const Ring f = Ring::prime_field(3);
    SparseMatrix out(2, 3, f), in(3, 1, f);
    for (std::size_t j = 0; j < 3; ++j)
        out.set_column(j, SparseVector::from_pairs({{0, 1}, {1, 2}}, f));
    in.set_column(0, SparseVector::from_pairs({{0, 1}, {1, 2}}, f)); // e0 - e1
    ClassSpace cs(in, out);
    CHECK(cs.cycle_dim() == 2);
    CHECK(cs.boundary_rank() == 1);
    CHECK(cs.dim() == 1);
    const auto e0e2 = SparseVector::from_pairs({{0, 1}, {2, 2}}, f);
    CHECK(cs.is_cycle(e0e2));
    CHECK_FALSE(cs.is_boundary(e0e2));
    CHECK(cs.is_boundary(SparseVector::from_pairs({{0, 2}, {1, 1}}, f)));
    CHECK_THROWS(cs.coordinates(SparseVector::from_pairs({{0, 1}}, f)));
}
