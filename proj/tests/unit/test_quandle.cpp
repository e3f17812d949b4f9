#include "doctest.h"
#include "qh/quandle.hpp"
#include "qh/rng.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using namespace qh;

namespace {

// Closure of the right translations under composition.
std::size_t inner_order_by_closure(const Quandle& q)
{
    const std::size_t n = q.size();
    std::set<std::vector<std::uint32_t>> group;
    std::vector<std::vector<std::uint32_t>> gens, frontier;
    for (std::uint32_t b = 0; b < n; ++b) {
        std::vector<std::uint32_t> s(n);
        for (std::uint32_t a = 0; a < n; ++a)
            s[a] = q.op(a, b);
        gens.push_back(s);
    }
    std::vector<std::uint32_t> id(n);
    for (std::uint32_t a = 0; a < n; ++a)
        id[a] = a;
    group.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint32_t>> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                std::vector<std::uint32_t> h(n);
                for (std::uint32_t a = 0; a < n; ++a)
                    h[a] = s[g[a]];
                if (group.insert(h).second)
                    next.push_back(h);
            }
        frontier = std::move(next);
    }
    return group.size();
}

bool isomorphic_by_search(const Quandle& a, const Quandle& b)
{
    if (a.size() != b.size())
        return false;
    std::vector<std::uint32_t> phi(a.size());
    for (std::uint32_t i = 0; i < phi.size(); ++i)
        phi[i] = i;
    do {
        bool hom = true;
        for (std::uint32_t x = 0; x < a.size() && hom; ++x)
            for (std::uint32_t y = 0; y < a.size() && hom; ++y)
                hom = phi[a.op(x, y)] == b.op(phi[x], phi[y]);
        if (hom)
            return true;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return false;
}

Quandle random_permutation_rack(SplitMix64& rng, std::size_t n)
{
    // a*b = f(a) for a fixed permutation f is always a rack
    std::vector<std::uint32_t> f(n);
    for (std::uint32_t i = 0; i < n; ++i)
        f[i] = i;
    for (std::size_t i = n - 1; i > 0; --i)
        std::swap(f[i], f[rng.below(i + 1)]);
    std::vector<std::vector<std::uint32_t>> rows(n, std::vector<std::uint32_t>(n));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            rows[a][b] = f[a];
    return Quandle::from_rows(rows);
}

} // namespace

TEST_CASE("dihedral quandles of odd prime order")
{
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Quandle q = build_dihedral(p);
        const AxiomReport ax = check_axioms(q);
        CHECK(ax.is_rack);
        CHECK(ax.is_quandle);
        const AugmentedQuandle aug = inner_group(q);
        CHECK(aug.g.order() == 2 * p);
        CHECK(aug.g.order() == inner_order_by_closure(q));
        CHECK(aug.check());
        const Classification c = classify(aug);
        CHECK(c.connected);
        CHECK(c.faithful);
        CHECK(c.regular);
        CHECK(q.op(1, 0) == p - 1);
    }
}

TEST_CASE("transpositions of S3 form the dihedral quandle of order three")
{
    const FiniteGroup s3 = symmetric_group(3);
    CHECK(s3.order() == 6);
    CHECK(s3.check_axioms());
    std::vector<std::uint32_t> transpositions;
    for (std::uint32_t g = 0; g < s3.order(); ++g) {
        const auto& p = s3.perm(g);
        int fixed = 0;
        for (std::uint32_t i = 0; i < 3; ++i)
            fixed += p[i] == i;
        if (fixed == 1)
            transpositions.push_back(g);
    }
    REQUIRE(transpositions.size() == 3);
    const Quandle conj = build_conjugation(s3, transpositions);
    CHECK(check_axioms(conj).is_quandle);
    CHECK(isomorphic_by_search(conj, build_dihedral(3)));
    CHECK_FALSE(isomorphic_by_search(conj, build_trivial(3)));
}

TEST_CASE("trivial and Alexander quandles")
{
    const Quandle t = build_trivial(4);
    CHECK(check_axioms(t).is_quandle);
    CHECK(inner_group(t).g.order() == 1);
    CHECK_FALSE(classify(t).connected);
    CHECK(classify(t).orbits.size() == 4);

    const Quandle a = build_alexander(5, 2);
    CHECK(check_axioms(a).is_quandle);
    for (std::uint32_t x = 0; x < 5; ++x)
        for (std::uint32_t y = 0; y < 5; ++y)
            CHECK(a.op(x, y) == (2 * x + 4 * y) % 5);
    CHECK(inner_group(a).g.order() == inner_order_by_closure(a));
}

TEST_CASE("property: right translations of random racks are automorphisms")
{
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Quandle q = random_permutation_rack(rng, 2 + rng.below(4));
        const AxiomReport ax = check_axioms(q);
        CHECK(ax.is_rack);
        for (std::uint32_t a = 0; a < q.size(); ++a)
            for (std::uint32_t b = 0; b < q.size(); ++b) {
                CHECK(q.op(q.op_inv(a, b), b) == a);
                for (std::uint32_t c = 0; c < q.size(); ++c)
                    CHECK(q.op(q.op(a, b), c) == q.op(q.op(a, c), q.op(b, c)));
            }
        CHECK(inner_group(q).g.order() == inner_order_by_closure(q));
    }
}

TEST_CASE("X-sets are compatible with the rack operation")
{
    auto aug = std::make_shared<const AugmentedQuandle>(inner_group(build_dihedral(5)));
    for (XSetKind k : {XSetKind::Point, XSetKind::SelfAction, XSetKind::GroupAction}) {
        XSet xs(aug, k);
        std::string w;
        CHECK_MESSAGE(xs.check(&w), w);
        for (std::uint32_t y = 0; y < xs.y_size(); ++y)
            for (std::uint32_t a = 0; a < 5; ++a)
                for (std::uint32_t b = 0; b < 5; ++b)
                    CHECK(xs.star(xs.star(y, a), b) == xs.star(xs.star(y, b), aug->x.op(a, b)));
    }
    CHECK(XSet(aug, XSetKind::GroupAction).y_size() == 10);
}

TEST_CASE("quandle JSON input")
{
    std::istringstream good(R"({"size": 3, "table": [[0,2,1],[2,1,0],[1,0,2]]})");
    CHECK(load_quandle_json(good) == build_dihedral(3));

    std::istringstream not_bijective(R"({"size": 2, "table": [[0,0],[1,0]]})");
    try {
        load_quandle_json(not_bijective);
        FAIL("accepted a non-bijective column");
    } catch (const InvalidInput& e) {
        CHECK(std::string(e.what()).find("column 1") != std::string::npos);
    }
    std::istringstream out_of_range(R"({"size": 2, "table": [[0,5],[1,0]]})");
    CHECK_THROWS_AS(load_quandle_json(out_of_range), InvalidInput);
    std::istringstream garbage("not json");
    CHECK_THROWS_AS(load_quandle_json(garbage), InvalidInput);

    std::istringstream round(quandle_to_json(build_dihedral(5)));
    CHECK(load_quandle_json(round) == build_dihedral(5));
}
