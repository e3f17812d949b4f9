#include "doctest.h"
#include "oracles.hpp"
#include "qh/homology.hpp"

using namespace qh;

namespace {

std::shared_ptr<const XSet> xset_of(const Quandle& q, XSetKind kind)
{
    auto aug = std::make_shared<const AugmentedQuandle>(inner_group(q));
    return std::make_shared<const XSet>(aug, kind);
}

// a * b = a + 1 mod 3: a rack that is not a quandle
Quandle shift_rack()
{
    return Quandle::from_rows({{1, 1, 1}, {2, 2, 2}, {0, 0, 0}});
}

std::vector<std::size_t> dims(const std::vector<HomologyResult>& h)
{
    std::vector<std::size_t> out;
    for (const auto& r : h)
        out.push_back(r.field_dim);
    return out;
}

} // namespace

TEST_CASE("boundary matrices agree with the face formula")
{
    for (const Quandle& q : {build_dihedral(3), build_alexander(4, 3), build_two_part_union(1, 2)}) {
        for (bool self : {false, true}) {
            auto xs = xset_of(q, self ? XSetKind::SelfAction : XSetKind::Point);
            for (int n = 1; n <= 3; ++n) {
                const ComplexSlice s = boundary_matrices(xs, n, Ring::integers());
                const oracle::Dense want = oracle::boundary(q, self, n);
                REQUIRE(s.d.rows() == want.size());
                for (std::size_t c = 0; c < s.d.cols(); ++c)
                    for (std::size_t r = 0; r < want.size(); ++r)
                        CHECK(s.d.column(c).coefficient(static_cast<std::uint32_t>(r)) == want[r][c]);
            }
        }
    }
}

TEST_CASE("rack homology of R_3 over F_3")
{
    const Quandle q = build_dihedral(3);
    const auto oracle_dims = oracle::betti_mod(q, false, 5, 3);
    CHECK(oracle_dims == std::vector<std::size_t>{1, 1, 1, 2, 4, 7});
    const auto slices = build_complex(xset_of(q, XSetKind::Point), 7, Ring::prime_field(3));
    CHECK(dims(homology_fp(slices, 6)) == std::vector<std::size_t>{1, 1, 1, 2, 4, 7, 12});
    CHECK(dims(cohomology_fp(slices, 6)) == std::vector<std::size_t>{1, 1, 1, 2, 4, 7, 12});
    const auto with_reps = homology_fp(slices, 4, true);
    for (const auto& h : with_reps)
        CHECK(h.reps.size() == h.field_dim);
}

TEST_CASE("shifted homology of R_3 on itself and on its inner group")
{
    const Quandle q = build_dihedral(3);
    CHECK(oracle::betti_mod(q, true, 4, 3) == std::vector<std::size_t>{1, 1, 2, 4, 7});
    const auto self = build_complex(xset_of(q, XSetKind::SelfAction), 6, Ring::prime_field(3));
    const auto group = build_complex(xset_of(q, XSetKind::GroupAction), 6, Ring::prime_field(3));
    CHECK(dims(homology_fp(self, 5)) == std::vector<std::size_t>{1, 1, 2, 4, 7, 12});
    CHECK(dims(homology_fp(group, 5)) == std::vector<std::size_t>{1, 1, 2, 4, 7, 12});
}

TEST_CASE("integral homology of R_3: free rank one, torsion of exponent three")
{
    const auto slices = build_complex(xset_of(build_dihedral(3), XSetKind::Point), 7, Ring::integers());
    const auto h = homology_z(slices, 6);
    const std::vector<std::size_t> counts{0, 0, 0, 1, 2, 4, 7};
    for (int n = 0; n <= 6; ++n) {
        CHECK(h[n].free_rank == 1);
        CHECK(h[n].torsion.size() == counts[n]);
        for (const auto& t : h[n].torsion)
            CHECK(t == 3);
    }
}

TEST_CASE("quandle homology of R_3 and the splitting")
{
    auto xs = xset_of(build_dihedral(3), XSetKind::Point);
    const auto rack = build_complex(xs, 7, Ring::prime_field(3), Variant::Full);
    const auto quandle = build_complex(xs, 7, Ring::prime_field(3), Variant::Quandle);
    const auto degenerate = build_complex(xs, 7, Ring::prime_field(3), Variant::Degenerate);
    const auto r = dims(homology_fp(rack, 6)), q = dims(homology_fp(quandle, 6)), d = dims(homology_fp(degenerate, 6));
    CHECK(q == std::vector<std::size_t>{1, 1, 0, 1, 2, 2, 3});
    for (int n = 0; n <= 6; ++n)
        CHECK(r[n] == q[n] + d[n]);
    CHECK_THROWS_AS(build_complex(xset_of(shift_rack(), XSetKind::Point), 2, Ring::prime_field(3),
                                  Variant::Quandle),
                    InvalidInput);
}

TEST_CASE("trivial quandle: every boundary vanishes")
{
    const auto slices = build_complex(xset_of(build_trivial(3), XSetKind::Point), 4, Ring::integers());
    const auto h = homology_z(slices, 3);
    std::size_t cells = 1;
    for (int n = 0; n <= 3; ++n) {
        CHECK(h[n].free_rank == cells);
        CHECK(h[n].torsion.empty());
        cells *= 3;
    }
}

TEST_CASE("cell cap")
{
    auto xs = xset_of(build_dihedral(3), XSetKind::Point);
    CHECK_THROWS_AS(boundary_matrices(xs, 5, Ring::prime_field(3), 100), ResourceCap);
    CHECK_NOTHROW(boundary_matrices(xs, 4, Ring::prime_field(3), 100));
}

TEST_CASE("Bockstein of a chain")
{
    // integral boundary d = [3]: the class of 1 mod 3 maps to 1
    SparseMatrix dz(1, 1, Ring::integers());
    dz.set_column(0, SparseVector::from_pairs({{0, 3}}, Ring::integers()));
    const auto b = bockstein_chain(SparseVector::from_pairs({{0, 1}}, Ring::prime_field(3)), dz, 3);
    CHECK(b == SparseVector::from_pairs({{0, 1}}, Ring::prime_field(3)));
    dz.set_column(0, SparseVector::from_pairs({{0, 2}}, Ring::integers()));
    CHECK_THROWS_AS(bockstein_chain(SparseVector::from_pairs({{0, 1}}, Ring::prime_field(3)), dz, 3), InvalidInput);
}
