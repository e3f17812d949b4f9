// Runs the acceptance criteria end to end, one PASS/FAIL line each, with a
// wall-clock limit per criterion. Exit status is the number of failures.

#include "qh/generators.hpp"
#include "qh/nodes.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace qh;

namespace {

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<bool(std::ostringstream&)> run;
};

std::shared_ptr<const XSet> xset_of(const Quandle& q, XSetKind kind)
{
    return std::make_shared<const XSet>(std::make_shared<const AugmentedQuandle>(inner_group(q)), kind);
}

std::vector<long long> field_dims(const Quandle& q, XSetKind kind, int max, std::uint32_t p,
                                  Variant v = Variant::Full)
{
    const auto slices = build_complex(xset_of(q, kind), max + 1, Ring::prime_field(p), v);
    std::vector<long long> out;
    for (const auto& h : homology_fp(slices, max))
        out.push_back(static_cast<long long>(h.field_dim));
    return out;
}

template <class T>
std::string show(const std::vector<T>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

bool suite_ok(const SuiteReport& rep, std::ostringstream& why)
{
    std::size_t checks = 0;
    for (const auto& r : rep.results) {
        checks += r.checks;
        if (!r.ok())
            why << rep.suite << ":" << r.name << "/" << r.space << " " << r.witness << "; ";
    }
    if (rep.ok())
        why << rep.suite << " " << checks << " checks; ";
    return rep.ok();
}

SuiteOptions options(int max_degree, int trials)
{
    SuiteOptions o;
    o.max_degree = max_degree;
    o.trials = trials;
    o.seed = 20240601;
    return o;
}

bool c1_dihedral(std::ostringstream& why)
{
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const Quandle q = build_dihedral(p);
        const AugmentedQuandle aug = inner_group(q);
        const Classification c = classify(aug);
        if (!check_axioms(q).is_quandle || !c.connected || !c.faithful || !c.regular || aug.g.order() != 2 * p) {
            why << "R_" << p << " failed";
            return false;
        }
    }
    why << "R_3..R_13 quandles, connected, faithful, regular, |Inn| = 2p";
    return true;
}

bool c2_complex(std::ostringstream& why)
{
    bool ok = true;
    for (auto [p, max] : {std::pair{3u, 6}, {5u, 5}}) {
        const QuandleContext ctx(build_dihedral(p), p);
        ok &= suite_ok(chain_suite(ctx, options(max, 100)), why);
    }
    return ok;
}

bool c3_operators(std::ostringstream& why)
{
    bool ok = true;
    for (std::uint32_t p : {3u, 5u}) {
        const QuandleContext ctx(build_dihedral(p), p);
        ok &= suite_ok(chain_suite(ctx, options(4, 100)), why);
        ok &= suite_ok(cup_suite(ctx, options(4, 100)), why);
    }
    return ok;
}

bool c4_triangulation(std::ostringstream& why)
{
    const QuandleContext ctx(build_dihedral(3), 3);
    return suite_ok(triangulation_suite(ctx, options(4, 100)), why);
}

bool c5_rack_betti(std::ostringstream& why)
{
    const Quandle q = build_dihedral(3);
    const auto rack = field_dims(q, XSetKind::Point, 6, 3);
    const auto self = field_dims(q, XSetKind::SelfAction, 5, 3);
    const auto group = field_dims(q, XSetKind::GroupAction, 5, 3);
    const BettiRecursion rec = betti_recursion(6);
    bool ok = rack == std::vector<long long>{1, 1, 1, 2, 4, 7, 12};
    for (int n = 0; n <= 6; ++n) {
        ok &= rack[n] == rec.rack[n];
        if (n >= 1)
            ok &= rack[n] == static_cast<long long>(enumerate_m_basis(n - 1).size());
    }
    for (int n = 0; n <= 5; ++n)
        ok &= self[n] == rack[n + 1] && group[n] == self[n];
    why << "BX " << show(rack) << ", B(X;X) " << show(self) << ", B(G;X) " << show(group);
    return ok;
}

bool c6_integral(std::ostringstream& why)
{
    const auto slices = build_complex(xset_of(build_dihedral(3), XSetKind::Point), 7, Ring::integers());
    const auto h = homology_z(slices, 6);
    std::vector<long long> counts, betti;
    bool ok = true;
    for (const auto& r : h) {
        ok &= r.free_rank == 1;
        for (const auto& t : r.torsion)
            ok &= t == 3;
        counts.push_back(static_cast<long long>(r.torsion.size()));
    }
    for (const auto& d : field_dims(build_dihedral(3), XSetKind::Point, 6, 3))
        betti.push_back(d);
    ok &= counts == std::vector<long long>{0, 0, 0, 1, 2, 4, 7};
    ok &= counts == predicted_torsion_counts(betti);
    why << "free rank 1, torsion Z/3 counts " << show(counts);
    return ok;
}

bool c7_quandle(std::ostringstream& why)
{
    const Quandle q = build_dihedral(3);
    const auto rack = field_dims(q, XSetKind::Point, 6, 3, Variant::Full);
    const auto quan = field_dims(q, XSetKind::Point, 6, 3, Variant::Quandle);
    const auto degen = field_dims(q, XSetKind::Point, 6, 3, Variant::Degenerate);
    const auto nodes = q_node_counts(5);
    bool ok = std::vector<long long>(quan.begin() + 1, quan.end()) == std::vector<long long>{1, 0, 1, 2, 2, 3};
    for (int n = 1; n <= 6; ++n)
        ok &= quan[n] == nodes[n - 1];
    for (int n = 0; n <= 6; ++n)
        ok &= rack[n] == quan[n] + degen[n];
    why << "H^Q " << show(quan) << ", degenerate " << show(degen);
    return ok;
}

bool c8_ring(std::ostringstream& why)
{
    const QuandleContext ctx(build_dihedral(3), 3);
    const GeneratorSet gs = identify_generators(ctx);
    return suite_ok(ring_suite(ctx, gs), why);
}

bool c9_bockstein(std::ostringstream& why)
{
    const QuandleContext ctx(build_dihedral(3), 3);
    bool ok = suite_ok(bockstein_suite(ctx, options(6, 100)), why);
    const BocksteinData d = bockstein_data(ctx, 6);
    for (int n = 1; n <= 5; ++n) {
        const std::size_t kernel = d.dims[n] - 1 - d.reduced_ranks[n];
        ok &= kernel == d.reduced_ranks[n + 1];
    }
    why << "reduced ranks " << show(d.reduced_ranks);
    return ok;
}

bool c10_operation(std::ostringstream& why)
{
    const QuandleContext ctx(build_dihedral(3), 3);
    const SparseVector hs = hs_chain(ctx);
    bool ok = true;
    // H^Q_2 = 0, so the range starts at n = 1
    for (int n = 1; n <= 3; ++n) {
        const OperationImage im = homology_operation(ctx, hs, 2, n, Variant::Quandle);
        why << "H^Q_" << n << " rank " << im.rank << "/" << im.source_dim << "; ";
        ok &= im.injective();
    }
    return ok;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "axioms and classification of R_p, p <= 13", 1, c1_dihedral},
        {2, "face and boundary identities on BX, B(X;X), B(G;X)", 30, c2_complex},
        {3, "operator and cup identities, k + m <= 4", 120, c3_operators},
        {4, "triangulation chain map and cup compatibility", 60, c4_triangulation},
        {5, "rack Betti numbers of R_3", 300, c5_rack_betti},
        {6, "integral homology of R_3", 600, c6_integral},
        {7, "quandle homology of R_3 and the splitting", 300, c7_quandle},
        {8, "ring and coproduct structure at p = 3", 300, c8_ring},
        {9, "Bockstein exactness", 120, c9_bockstein},
        {10, "h_s operation injective on quandle homology, n = 1..3", 120, c10_operation},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream why;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_s;
        if (!in_time)
            why << " over the " << c.limit_s << " s limit";
        const bool pass = ok && in_time;
        failures += !pass;
        std::printf("criterion %2d: %s  %-52s %8.2fs / %.0fs  %s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                    c.limit_s, why.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures;
}
