#include "qh/identities.hpp"
#include "qh/triangulation.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace qh {

bool SuiteReport::ok() const
{
    return std::all_of(results.begin(), results.end(), [](const IdentityResult& r) { return r.ok(); });
}

std::size_t SuiteReport::failures() const
{
    std::size_t n = 0;
    for (const auto& r : results)
        n += r.failures;
    return n;
}

nlohmann::ordered_json SuiteReport::to_json() const
{
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["ok"] = ok();
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
        nlohmann::ordered_json e;
        e["name"] = r.name;
        if (!r.space.empty())
            e["space"] = r.space;
        e["checks"] = r.checks;
        e["failures"] = r.failures;
        if (!r.ok()) {
            e["witness"] = r.witness;
            if (r.replay_seed)
                e["replay_seed"] = *r.replay_seed;
        }
        j["results"].push_back(e);
    }
    return j;
}

Fault parse_fault(const std::string& name)
{
    static const std::pair<const char*, Fault> table[] = {{"none", Fault::None}, {"psi", Fault::Psi},
                                                          {"p", Fault::P},       {"d", Fault::D},
                                                          {"cup", Fault::Cup},   {"tau", Fault::Tau},
                                                          {"bockstein", Fault::Bockstein}};
    for (const auto& [n, f] : table)
        if (name == n)
            return f;
    throw InvalidInput("unknown fault '" + name + "' (none, psi, p, d, cup, tau, bockstein)");
}

const char* fault_name(Fault f)
{
    switch (f) {
    case Fault::Psi:
        return "psi";
    case Fault::P:
        return "p";
    case Fault::D:
        return "d";
    case Fault::Cup:
        return "cup";
    case Fault::Tau:
        return "tau";
    case Fault::Bockstein:
        return "bockstein";
    default:
        return "none";
    }
}

namespace {

std::int64_t sign_of(int e) { return e % 2 == 0 ? 1 : -1; }

std::uint64_t name_hash(const std::string& s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

unsigned thread_count(unsigned requested)
{
    if (requested)
        return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

using TrialFn = std::function<std::optional<std::string>(int trial, SplitMix64& rng)>;

// Runs `trials` independent trials with seeds derived from (base seed, name, trial).
IdentityResult run_trials(const std::string& name, const std::string& space, int trials, const SuiteOptions& opt,
                          const TrialFn& fn)
{
    IdentityResult r;
    r.name = name;
    r.space = space;
    r.checks = static_cast<std::size_t>(std::max(trials, 0));
    std::vector<std::optional<std::string>> out(r.checks);
    std::vector<std::uint64_t> seeds(r.checks);
    const std::uint64_t base = opt.seed ^ name_hash(name + "/" + space);
    for (std::size_t t = 0; t < r.checks; ++t)
        seeds[t] = trial_seed(base, t);
    const unsigned nt = std::min<unsigned>(thread_count(opt.threads), std::max<std::size_t>(r.checks, 1));
    std::vector<std::exception_ptr> errors(nt);
    auto worker = [&](unsigned w) {
        try {
            for (std::size_t t = w; t < r.checks; t += nt) {
                SplitMix64 rng(seeds[t]);
                out[t] = fn(static_cast<int>(t), rng);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (nt == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nt; ++w)
            pool.emplace_back(worker, w);
        for (auto& th : pool)
            th.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    for (std::size_t t = 0; t < r.checks; ++t)
        if (out[t]) {
            if (r.failures == 0) {
                r.witness = "trial " + std::to_string(t) + ": " + *out[t];
                r.replay_seed = seeds[t];
            }
            ++r.failures;
        }
    return r;
}

IdentityResult named(std::string name, std::string space)
{
    IdentityResult r;
    r.name = std::move(name);
    r.space = std::move(space);
    return r;
}

IdentityResult single_check(const std::string& name, const std::string& space, std::optional<std::string> failure)
{
    IdentityResult r;
    r.name = name;
    r.space = space;
    r.checks = 1;
    if (failure) {
        r.failures = 1;
        r.witness = *failure;
    }
    return r;
}

std::string tuple_text(const XSet& xs, int degree, std::uint32_t cell)
{
    auto t = TupleCodec(xs.y_size(), xs.x_size(), degree).decode(cell);
    std::ostringstream os;
    os << '(' << t[0] << ';';
    for (std::size_t i = 1; i < t.size(); ++i)
        os << (i > 1 ? "," : "") << t[i];
    os << ')';
    return os.str();
}

std::optional<std::string> compare(const Cochain& a, const Cochain& b, const std::string& what)
{
    if (a.degree != b.degree)
        return what + ": degree " + std::to_string(a.degree) + " vs " + std::to_string(b.degree);
    for (std::size_t c = 0; c < a.values.size(); ++c)
        if (a.values[c] != b.values[c])
            return what + ": differs at " + tuple_text(*a.xset, a.degree, static_cast<std::uint32_t>(c)) + " (" +
                   std::to_string(a.values[c]) + " vs " + std::to_string(b.values[c]) + ")";
    return std::nullopt;
}

std::string degrees_text(std::initializer_list<int> ds)
{
    std::string s = "degrees";
    for (int d : ds)
        s += " " + std::to_string(d);
    return s;
}

std::vector<std::pair<int, int>> splits(int total_max, int kmin, int mmin)
{
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s <= total_max; ++s)
        for (int k = kmin; k <= s - mmin; ++k)
            out.emplace_back(k, s - k);
    return out;
}

int trials_covering(int trials, std::size_t cases) { return std::max<int>(trials, static_cast<int>(cases)); }

// Operators with optional injected faults.
struct Ops {
    const QuandleContext& ctx;
    Fault fault;

    static Cochain corrupt(Cochain c)
    {
        if (!c.values.empty())
            c.values[0] = (c.values[0] + 1) % c.p;
        return c;
    }
    Cochain cup(const CochainAlgebra& alg, const Cochain& f, const Cochain& g) const
    {
        Cochain c = alg.cup(f, g);
        return fault == Fault::Cup ? corrupt(std::move(c)) : c;
    }
    Cochain P(const Cochain& f) const
    {
        Cochain c = op_p(ctx.self_alg, f);
        return fault == Fault::P ? corrupt(std::move(c)) : c;
    }
    Cochain D(const Cochain& f) const
    {
        Cochain c = op_d(ctx.self_alg, f);
        return fault == Fault::D ? corrupt(std::move(c)) : c;
    }
    Cochain psi(const Cochain& f) const
    {
        Cochain c = op_psi(ctx.point_alg, f);
        return fault == Fault::Psi ? corrupt(std::move(c)) : c;
    }
    Cochain lam() const { return P(ctx.self_alg.one()); }
    Cochain Q(const Cochain& f) const
    {
        return P(f) + cup(ctx.self_alg, f, lam()).scaled(sign_of(f.degree + 1));
    }
};

// Uniform random cocycles from a kernel basis of the coboundary.
class CocycleSampler {
public:
    CocycleSampler(const CochainAlgebra& alg, const ComplexCache& cx) : alg_(alg), cx_(cx) {}

    Cochain sample(int m, SplitMix64& rng)
    {
        const std::vector<SparseVector>* basis;
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto& slot = kernels_[m];
            if (!slot)
                slot = std::make_unique<std::vector<SparseVector>>(
                    solve_fp(cx_.slice(m + 1).d.transpose(), true).kernel);
            basis = slot.get();
        }
        const std::uint32_t p = alg_.prime();
        std::vector<std::uint64_t> acc(alg_.cells(m), 0);
        for (const auto& v : *basis) {
            const std::uint64_t c = rng.below(p);
            if (!c)
                continue;
            for (const auto& [i, x] : v.entries())
                acc[i] = (acc[i] + c * static_cast<std::uint64_t>(x)) % p;
        }
        Cochain out = alg_.zero(m);
        for (std::size_t i = 0; i < acc.size(); ++i)
            out.values[i] = static_cast<std::uint32_t>(acc[i]);
        return out;
    }

private:
    const CochainAlgebra& alg_;
    const ComplexCache& cx_;
    std::mutex mu_;
    std::map<int, std::unique_ptr<std::vector<SparseVector>>> kernels_;
};

// Random cochain on (X;X) vanishing on (x_0; x_1..x_n) whenever two consecutive
// entries of (x_0, .., x_n) agree.
Cochain random_quandle_class(const CochainAlgebra& self, int n, SplitMix64& rng)
{
    Cochain f = self.random(n, rng);
    TupleCodec codec(self.xset().y_size(), self.xset().x_size(), n);
    std::vector<std::uint32_t> t(n + 1);
    for (std::uint32_t c = 0; c < f.values.size(); ++c) {
        codec.decode(c, t[0], t.data() + 1);
        if (is_degenerate_tuple(t.data(), n + 1))
            f.values[c] = 0;
    }
    return f;
}

std::size_t power(std::size_t b, int e)
{
    std::size_t r = 1;
    for (int i = 0; i < e; ++i)
        r *= b;
    return r;
}

} // namespace

SuiteReport cup_suite(const QuandleContext& ctx, const SuiteOptions& opt)
{
    const int K = opt.max_degree;
    if (K < 1)
        throw InvalidInput("cup suite needs a maximum degree of at least 1");
    Ops ops{ctx, opt.fault};
    const bool quandle = ctx.aug->x.is_idempotent();
    const auto& S = ctx.self_alg;
    SuiteReport rep;
    rep.suite = "cup";
    const std::uint32_t p = ctx.p;

    // associativity, unit and Leibniz on every space
    for (XSetKind kind : {XSetKind::Point, XSetKind::SelfAction, XSetKind::GroupAction}) {
        const CochainAlgebra& alg = ctx.algebra(kind);
        const std::string space = xset_kind_name(kind);
        std::vector<std::array<int, 3>> triples;
        for (int a = 0; a <= K; ++a)
            for (int b = 0; a + b <= K; ++b)
                for (int c = 0; a + b + c <= K; ++c)
                    triples.push_back({a, b, c});
        rep.results.push_back(run_trials(
            "cup_associative", space, trials_covering(opt.trials, triples.size()), opt,
            [&](int t, SplitMix64& rng) {
                auto [a, b, c] = triples[t % triples.size()];
                Cochain f = alg.random(a, rng), g = alg.random(b, rng), h = alg.random(c, rng);
                return compare(ops.cup(alg, ops.cup(alg, f, g), h), ops.cup(alg, f, ops.cup(alg, g, h)),
                               degrees_text({a, b, c}));
            }));
        rep.results.push_back(run_trials("cup_unit", space, opt.trials, opt, [&](int t, SplitMix64& rng) {
            const int k = t % (K + 1);
            Cochain f = alg.random(k, rng);
            if (auto e = compare(ops.cup(alg, alg.one(), f), f, "left unit, " + degrees_text({k})))
                return e;
            return compare(ops.cup(alg, f, alg.one()), f, "right unit, " + degrees_text({k}));
        }));
        const auto sp = splits(K, 0, 0);
        rep.results.push_back(run_trials(
            "coboundary_leibniz", space, trials_covering(opt.trials, sp.size()), opt, [&](int t, SplitMix64& rng) {
                auto [k, m] = sp[t % sp.size()];
                Cochain f = alg.random(k, rng), g = alg.random(m, rng);
                Cochain lhs = alg.coboundary(ops.cup(alg, f, g));
                // coboundary is the transpose of d, hence the sign on the first term
                Cochain rhs = ops.cup(alg, alg.coboundary(f), g).scaled(sign_of(m)) +
                              ops.cup(alg, f, alg.coboundary(g));
                return compare(lhs, rhs, degrees_text({k, m}));
            }));
    }

    const std::string self = "self";
    const auto sp = splits(K, 0, 0);
    const int covered = trials_covering(opt.trials, sp.size());

    rep.results.push_back(run_trials("psi_cup", self, covered, opt, [&](int t, SplitMix64& rng) {
        auto [k, m] = sp[t % sp.size()];
        Cochain F = S.random(k, rng), G = S.random(m, rng);
        Cochain lhs = ops.cup(ctx.point_alg, ops.psi(F), ops.psi(G));
        Cochain rhs = ops.psi(ops.cup(S, F, ops.P(G))) + ops.psi(ops.cup(S, ops.P(F), G)).scaled(sign_of(k + 1));
        return compare(lhs, rhs, degrees_text({k, m}));
    }));

    rep.results.push_back(run_trials("rota_baxter_p", self, covered, opt, [&](int t, SplitMix64& rng) {
        auto [k, m] = sp[t % sp.size()];
        Cochain F = S.random(k, rng), G = S.random(m, rng);
        Cochain lhs = ops.cup(S, ops.P(F), ops.P(G));
        Cochain rhs = ops.P(ops.cup(S, F, ops.P(G))) + ops.P(ops.cup(S, ops.P(F), G)).scaled(sign_of(k + 1));
        return compare(lhs, rhs, degrees_text({k, m}));
    }));

    if (quandle) {
        const auto sp11 = splits(K, 1, 1);
        rep.results.push_back(run_trials("d_derivation", self, trials_covering(opt.trials, sp11.size()), opt,
                                         [&](int t, SplitMix64& rng) {
                                             auto [k, m] = sp11[t % sp11.size()];
                                             Cochain F = S.random(k, rng), G = S.random(m, rng);
                                             Cochain lhs = ops.D(ops.cup(S, F, G));
                                             Cochain rhs = ops.cup(S, ops.D(F), G) +
                                                           ops.cup(S, F, ops.D(G)).scaled(sign_of(k));
                                             return compare(lhs, rhs, degrees_text({k, m}));
                                         }));
        rep.results.push_back(run_trials("dp_identity", self, opt.trials, opt, [&](int t, SplitMix64& rng) {
            const int k = t % (K + 1);
            Cochain F = S.random(k, rng);
            return compare(ops.D(ops.P(F)), F, degrees_text({k}));
        }));
    }

    rep.results.push_back(single_check("lambda_square", self, compare(ops.cup(S, ops.lam(), ops.lam()), S.zero(2), "")));

    rep.results.push_back(run_trials("partial0_lambda", self, opt.trials, opt, [&](int t, SplitMix64& rng) {
        const int k = t % (K + 1);
        Cochain F = S.random(k, rng);
        return compare(S.partial0(F), ops.cup(S, F, ops.lam()).scaled(-1), degrees_text({k}));
    }));
    rep.results.push_back(run_trials("partial1_lambda", self, opt.trials, opt, [&](int t, SplitMix64& rng) {
        const int k = t % (K + 1);
        Cochain F = S.random(k, rng);
        return compare(S.partial1(F), ops.cup(S, ops.lam(), F).scaled(sign_of(k + 1)), degrees_text({k}));
    }));

    rep.results.push_back(run_trials("q_square", self, opt.trials, opt, [&](int t, SplitMix64& rng) {
        const int k = t % (K + 1);
        Cochain F = S.random(k, rng);
        return compare(ops.Q(ops.Q(F)), S.zero(k + 2), degrees_text({k}));
    }));
    rep.results.push_back(single_check("q_unit", self, compare(ops.Q(S.one()), S.zero(1), "")));
    rep.results.push_back(run_trials("psi_q", self, opt.trials, opt, [&](int t, SplitMix64& rng) {
        const int k = t % (K + 1);
        Cochain F = S.random(k, rng);
        return compare(ops.psi(ops.Q(F)), ctx.point_alg.partial0(ops.psi(F)).scaled(sign_of(k)), degrees_text({k}));
    }));

    CocycleSampler self_cocycles(S, ctx.self_cx);
    rep.results.push_back(run_trials("q_rota_baxter_cocycle", self, covered, opt, [&](int t, SplitMix64& rng) {
        auto [k, m] = sp[t % sp.size()];
        Cochain F = S.random(k, rng), G = self_cocycles.sample(m, rng);
        Cochain lhs = ops.cup(S, ops.Q(F), ops.Q(G));
        Cochain rhs = ops.Q(ops.cup(S, F, ops.Q(G))) + ops.Q(ops.cup(S, ops.Q(F), G)).scaled(sign_of(k + 1));
        return compare(lhs, rhs, degrees_text({k, m}));
    }));

    const auto sp10 = splits(K, 1, 0);
    rep.results.push_back(run_trials(
        "cup_descends_left", self, trials_covering(opt.trials, sp10.size()), opt, [&](int t, SplitMix64& rng) {
            auto [k, m] = sp10[t % sp10.size()];
            Cochain f = S.random(k, rng), h = S.random(k - 1, rng), g = self_cocycles.sample(m, rng);
            Cochain lhs = ops.cup(S, f + S.coboundary(h), g) - ops.cup(S, f, g);
            return compare(lhs, S.coboundary(ops.cup(S, h, g)).scaled(sign_of(m)), degrees_text({k, m}));
        }));
    const auto sp01 = splits(K, 0, 1);
    rep.results.push_back(run_trials(
        "cup_descends_right", self, trials_covering(opt.trials, sp01.size()), opt, [&](int t, SplitMix64& rng) {
            auto [k, m] = sp01[t % sp01.size()];
            Cochain f = self_cocycles.sample(k, rng), g = S.random(m, rng), h = S.random(m - 1, rng);
            Cochain lhs = ops.cup(S, f, g + S.coboundary(h)) - ops.cup(S, f, g);
            return compare(lhs, S.coboundary(ops.cup(S, f, h)), degrees_text({k, m}));
        }));

    if (quandle) {
        rep.results.push_back(run_trials("quandle_class_cup", self, covered, opt, [&](int t, SplitMix64& rng) {
            auto [k, m] = sp[t % sp.size()];
            Cochain f = random_quandle_class(S, k, rng), g = random_quandle_class(S, m, rng);
            if (!psi_vanishes_on_degenerate(ops.cup(S, f, g)))
                return std::optional<std::string>("cup of quandle classes is not a quandle class, " +
                                                  degrees_text({k, m}));
            return std::optional<std::string>();
        }));
        rep.results.push_back(run_trials("quandle_class_q", self, opt.trials, opt, [&](int t, SplitMix64& rng) {
            const int k = t % (K + 1);
            Cochain f = random_quandle_class(S, k, rng);
            if (!psi_vanishes_on_degenerate(ops.Q(f)))
                return std::optional<std::string>("Q of a quandle class is not a quandle class, " + degrees_text({k}));
            return std::optional<std::string>();
        }));
    }

    // cochain forms of the μ formulas, evaluated on sampled basis pairs
    const XSet& X = *ctx.self;
    const XSet& G = *ctx.group;
    const std::size_t xs = X.x_size();
    auto p_cell = [&](std::uint32_t cell, int d) -> std::pair<std::uint32_t, std::int64_t> {
        // P(y; x_1..x_d) = (-1)^(d+1) (x_1; x_2..x_d), zero in degree 0
        if (d == 0)
            return {0, 0};
        return {static_cast<std::uint32_t>(cell % power(xs, d)), sign_of(d + 1)};
    };
    auto d_cell = [&](std::uint32_t cell, int d) -> std::pair<std::uint32_t, std::int64_t> {
        // D(y; x) = (-1)^d (y; y, x)
        const std::size_t stride = power(xs, d);
        const std::size_t y = cell / stride;
        return {static_cast<std::uint32_t>((y * xs + y) * stride + cell % stride), sign_of(d)};
    };
    auto chi_cell = [&](std::uint32_t cell, int m) {
        const std::size_t stride = power(xs, m);
        return static_cast<std::uint32_t>(G.aug().rho(0, static_cast<std::uint32_t>(cell / stride)) * stride +
                                          cell % stride);
    };
    auto val = [&](const Cochain& F, std::uint32_t cell, std::int64_t sgn) {
        return mod::reduce(sgn * static_cast<std::int64_t>(F.values[cell]), p);
    };
    constexpr int kPairsPerTrial = 64;
    const auto sp_mu = splits(K, 0, 0);
    std::vector<std::pair<int, int>> sp_mu_p;
    for (auto km : sp_mu)
        if (km.first + km.second >= 1)
            sp_mu_p.push_back(km);
    rep.results.push_back(run_trials(
        "mu_p_formula", self, trials_covering(opt.trials, sp_mu_p.size()), opt, [&](int t, SplitMix64& rng) {
            auto [k, m] = sp_mu_p[t % sp_mu_p.size()];
            Cochain F = S.random(k + m - 1, rng);
            const std::size_t na = S.cells(k), nb = ctx.group_alg.cells(m);
            for (int r = 0; r < kPairsPerTrial; ++r) {
                const auto a = static_cast<std::uint32_t>(rng.below(na));
                const auto b = static_cast<std::uint32_t>(rng.below(nb));
                auto [pl, sl] = p_cell(mu_cell(X, a, k, G, b, m), k + m);
                std::uint32_t lhs = val(F, pl, sl);
                std::uint32_t rhs = 0;
                if (k > 0) {
                    auto [pa, sa] = p_cell(a, k);
                    rhs = val(F, mu_cell(X, pa, k - 1, G, b, m), sa * sign_of(m));
                } else {
                    auto [pc, sc] = p_cell(chi_cell(b, m), m);
                    rhs = val(F, pc, sc);
                }
                if (ops.fault == Fault::P)
                    rhs = mod::add(rhs, 1, p);
                if (lhs != rhs)
                    return std::optional<std::string>("pair " + tuple_text(X, k, a) + " x " + tuple_text(G, m, b) +
                                                      ", " + degrees_text({k, m}));
            }
            return std::optional<std::string>();
        }));
    if (quandle) {
        rep.results.push_back(run_trials(
            "mu_d_formula", self, trials_covering(opt.trials, sp_mu.size()), opt, [&](int t, SplitMix64& rng) {
                auto [k, m] = sp_mu[t % sp_mu.size()];
                Cochain F = S.random(k + m + 1, rng);
                const std::size_t na = S.cells(k), nb = ctx.group_alg.cells(m);
                for (int r = 0; r < kPairsPerTrial; ++r) {
                    const auto a = static_cast<std::uint32_t>(rng.below(na));
                    const auto b = static_cast<std::uint32_t>(rng.below(nb));
                    auto [dl, sl] = d_cell(mu_cell(X, a, k, G, b, m), k + m);
                    auto [da, sa] = d_cell(a, k);
                    std::uint32_t lhs = val(F, dl, sl);
                    std::uint32_t rhs = val(F, mu_cell(X, da, k + 1, G, b, m), sa * sign_of(m));
                    if (ops.fault == Fault::D)
                        rhs = mod::add(rhs, 1, p);
                    if (lhs != rhs)
                        return std::optional<std::string>("pair " + tuple_text(X, k, a) + " x " +
                                                          tuple_text(G, m, b) + ", " + degrees_text({k, m}));
                }
                return std::optional<std::string>();
            }));
    }
    return rep;
}

SuiteReport chain_suite(const QuandleContext& ctx, const SuiteOptions& opt)
{
    const int N = opt.max_degree;
    if (N < 1)
        throw InvalidInput("chain suite needs a maximum degree of at least 1");
    const bool quandle = ctx.aug->x.is_idempotent();
    const Ring Z = Ring::integers();
    SuiteReport rep;
    rep.suite = "chain";

    for (XSetKind kind : {XSetKind::Point, XSetKind::SelfAction, XSetKind::GroupAction}) {
        const ComplexCache& cx = ctx.complex(kind);
        const std::string space = xset_kind_name(kind);
        IdentityResult r00 = named("d0_d0", space), r11 = named("d1_d1", space);
        IdentityResult r01 = named("d0_d1_anticommute", space), rdd = named("d_d", space);
        IdentityResult rsplit = named("d_equals_d0_minus_d1", space);
        for (int n = 1; n <= N; ++n) {
            const ComplexSlice& hi = cx.integral_slice(n);
            ++rsplit.checks;
            if (auto c = hi.d.first_differing_column(hi.d0 - hi.d1)) {
                if (!rsplit.failures++)
                    rsplit.witness = "degree " + std::to_string(n) + " column " + std::to_string(*c);
            }
            if (n < 2)
                continue;
            const ComplexSlice& lo = cx.integral_slice(n - 1);
            auto check = [&](IdentityResult& r, const SparseMatrix& m) {
                ++r.checks;
                if (!m.is_zero() && !r.failures++)
                    r.witness = "degree " + std::to_string(n);
            };
            check(r00, lo.d0 * hi.d0);
            check(r11, lo.d1 * hi.d1);
            check(r01, lo.d0 * hi.d1 + lo.d1 * hi.d0);
            check(rdd, lo.d * hi.d);
        }
        for (auto* r : {&rsplit, &r00, &r11, &r01, &rdd})
            rep.results.push_back(*r);
    }

    auto chain_map = [&](const std::string& name, std::vector<SparseMatrix> f, std::vector<SparseMatrix> src,
                         std::vector<SparseMatrix> dst, int first_degree) {
        IdentityResult r = named(name, "");
        r.checks = f.empty() ? 0 : f.size() - 1;
        if (auto w = verify_chain_map(f, src, dst, 1)) {
            r.failures = 1;
            r.witness = "source degree " + std::to_string(w->degree + first_degree) + " basis element " +
                        std::to_string(w->column);
        }
        rep.results.push_back(r);
    };
    auto flip = [](SparseMatrix m) {
        m.set_column(0, m.column(0).scaled(-1));
        return m;
    };
    {
        std::vector<SparseMatrix> f, src, dst;
        for (int j = 0; j < N; ++j) {
            SparseMatrix psi = psi_matrix(*ctx.point, *ctx.self, j + 1, Z);
            f.push_back(opt.fault == Fault::Psi && j == 1 ? flip(psi) : psi);
            src.push_back(ctx.point_cx.integral_slice(j + 1).d);
            dst.push_back(ctx.self_cx.integral_slice(j).d);
        }
        chain_map("psi_chain_map", f, src, dst, 1);
    }
    {
        std::vector<SparseMatrix> f, src, dst;
        for (int j = 0; j < N; ++j) {
            SparseMatrix P = p_matrix(*ctx.self, j + 1, Z);
            f.push_back(opt.fault == Fault::P && j == 1 ? flip(P) : P);
            src.push_back(ctx.self_cx.integral_slice(j + 1).d);
            dst.push_back(ctx.self_cx.integral_slice(j).d);
        }
        chain_map("p_chain_map", f, src, dst, 1);
    }
    if (quandle) {
        std::vector<SparseMatrix> f, src, dst;
        IdentityResult pd = named("pd_identity", "self");
        for (int j = 0; j < N; ++j) {
            SparseMatrix D = d_matrix(*ctx.self, j, Z);
            if (opt.fault == Fault::D && j == 1)
                D = flip(D);
            f.push_back(D);
            src.push_back(ctx.self_cx.integral_slice(j).d);
            dst.push_back(ctx.self_cx.integral_slice(j + 1).d);
            ++pd.checks;
            SparseMatrix prod = p_matrix(*ctx.self, j + 1, Z) * D;
            if (auto c = prod.first_differing_column(SparseMatrix::identity(prod.cols(), Z)))
                if (!pd.failures++)
                    pd.witness = "degree " + std::to_string(j) + " column " + std::to_string(*c);
        }
        chain_map("d_chain_map", f, src, dst, 0);
        rep.results.push_back(pd);

        IdentityResult closed = named("degenerate_subcomplex_closed", "point");
        for (int n = 1; n <= N; ++n) {
            ++closed.checks;
            try {
                quandle_quotient(ctx.point_cx.integral_slice(n), Variant::Degenerate);
            } catch (const InvalidInput& e) {
                if (!closed.failures++)
                    closed.witness = e.what();
            }
        }
        rep.results.push_back(closed);
    }
    {
        std::vector<SparseMatrix> f, src, dst;
        for (int j = 0; j <= N; ++j) {
            f.push_back(chi_matrix(*ctx.group, *ctx.self, j, Z));
            src.push_back(ctx.group_cx.integral_slice(j).d);
            dst.push_back(ctx.self_cx.integral_slice(j).d);
        }
        chain_map("chi_chain_map", f, src, dst, 0);
    }

    // μ: Leibniz and associativity on sampled basis elements
    const XSet& Gx = *ctx.group;
    const int mu_top = std::min(N, 5);
    for (XSetKind kind : {XSetKind::SelfAction, XSetKind::GroupAction}) {
        const XSet& Y = kind == XSetKind::SelfAction ? *ctx.self : Gx;
        const ComplexCache& ycx = ctx.complex(kind);
        const std::string space = xset_kind_name(kind);
        const auto sp = splits(mu_top, 0, 0);
        rep.results.push_back(run_trials(
            "mu_leibniz", space, trials_covering(opt.trials, sp.size()), opt, [&](int t, SplitMix64& rng) {
                auto [m, k] = sp[t % sp.size()];
                const auto a = static_cast<std::uint32_t>(rng.below(ycx.integral_slice(m).size()));
                const auto b = static_cast<std::uint32_t>(rng.below(ctx.group_cx.integral_slice(k).size()));
                SparseVector ea = SparseVector::from_pairs({{a, 1}}, Z), eb = SparseVector::from_pairs({{b, 1}}, Z);
                SparseVector lhs = m + k > 0
                                       ? ycx.integral_slice(m + k).d.apply(mu_chain(Y, ea, m, Gx, eb, k))
                                       : SparseVector(Z);
                SparseVector rhs(Z);
                if (m > 0)
                    rhs = rhs + mu_chain(Y, ycx.integral_slice(m).d.column(a), m - 1, Gx, eb, k);
                if (k > 0)
                    rhs = rhs + mu_chain(Y, ea, m, Gx, ctx.group_cx.integral_slice(k).d.column(b), k - 1)
                                    .scaled(sign_of(m));
                if (!(lhs == rhs))
                    return std::optional<std::string>("pair " + tuple_text(Y, m, a) + " x " + tuple_text(Gx, k, b));
                return std::optional<std::string>();
            }));
        std::vector<std::array<int, 3>> triples;
        for (int a = 0; a <= mu_top; ++a)
            for (int b = 0; a + b <= mu_top; ++b)
                for (int c = 0; a + b + c <= mu_top; ++c)
                    triples.push_back({a, b, c});
        rep.results.push_back(run_trials(
            "mu_associative", space, trials_covering(opt.trials, triples.size()), opt, [&](int t, SplitMix64& rng) {
                auto [m, k, l] = triples[t % triples.size()];
                const auto a = static_cast<std::uint32_t>(rng.below(TupleCodec(Y.y_size(), Y.x_size(), m).size()));
                const auto b = static_cast<std::uint32_t>(rng.below(TupleCodec(Gx.y_size(), Gx.x_size(), k).size()));
                const auto c = static_cast<std::uint32_t>(rng.below(TupleCodec(Gx.y_size(), Gx.x_size(), l).size()));
                const auto lhs = mu_cell(Y, mu_cell(Y, a, m, Gx, b, k), m + k, Gx, c, l);
                const auto rhs = mu_cell(Y, a, m, Gx, mu_cell(Gx, b, k, Gx, c, l), k + l);
                if (lhs != rhs)
                    return std::optional<std::string>("triple " + tuple_text(Y, m, a) + ", " + tuple_text(Gx, k, b) +
                                                      ", " + tuple_text(Gx, l, c));
                return std::optional<std::string>();
            }));
    }
    return rep;
}

SuiteReport triangulation_suite(const QuandleContext& ctx, const SuiteOptions& opt)
{
    SuiteReport rep;
    rep.suite = "triangulation";
    struct Target {
        std::shared_ptr<const XSet> xs;
        int dim;
    };
    const int top = std::min(opt.max_degree, 5);
    const std::vector<Target> targets{{ctx.point, top}, {ctx.self, std::min(top, 3)}, {ctx.group, std::min(top, 3)}};
    for (const auto& tg : targets) {
        TriangulationOptions to;
        to.max_dimension = tg.dim;
        to.trials = std::clamp(opt.trials / 10, 1, 10);
        to.seed = opt.seed;
        to.corrupt_tau = opt.fault == Fault::Tau;
        TriangulationReport tr = triangulation_check(tg.xs, to);
        const std::string space = xset_kind_name(tg.xs->kind());
        auto add = [&](const std::string& name, std::size_t checks, const std::string& prefix) {
            IdentityResult r = named(name, space);
            r.checks = checks;
            for (const auto& f : tr.failures)
                if (f.rfind(prefix, 0) == 0) {
                    if (!r.failures++)
                        r.witness = f;
                }
            rep.results.push_back(r);
        };
        add("cube_face_relations", tr.cube_relations, "cube relation");
        add("simplicial_face_relations", tr.delta_relations, "simplicial relation");
        add("tau_chain_map", tr.chain_map_cells, "tau fails");
        add("tau_cup_product", tr.cup_cells, "cup products");
    }
    return rep;
}

namespace {

struct BocksteinTables {
    std::vector<std::unique_ptr<ClassSpace>> spaces; // H_n with rep 0 = (0,..,0)
    std::vector<std::vector<std::vector<std::uint32_t>>> delta; // delta[n][i] = coords of Δ(rep i of H_n)
};

BocksteinTables bockstein_tables(const QuandleContext& ctx, int max_degree, bool corrupt)
{
    const ComplexCache& cx = ctx.point_cx;
    const Ring F = Ring::prime_field(ctx.p);
    BocksteinTables bt;
    for (int n = 0; n <= max_degree; ++n) {
        std::vector<SparseVector> preferred{SparseVector::from_pairs({{0, 1}}, F)};
        bt.spaces.push_back(std::make_unique<ClassSpace>(cx.slice(n + 1).d, cx.slice(n).d, preferred));
    }
    bt.delta.resize(max_degree + 1);
    for (int n = 1; n <= max_degree; ++n) {
        for (const auto& rep : bt.spaces[n]->reps()) {
            SparseVector d = bockstein_chain(rep, cx.integral_slice(n).d, ctx.p);
            bt.delta[n].push_back(bt.spaces[n - 1]->coordinates(d));
        }
        if (corrupt && n == 3 && bt.delta[n].size() > 1 && !bt.delta[n][1].empty())
            bt.delta[n][1][0] = (bt.delta[n][1][0] + 1) % ctx.p;
    }
    return bt;
}

std::size_t reduced_rank(const BocksteinTables& bt, int n, std::uint32_t p)
{
    if (n <= 0)
        return 0;
    std::vector<std::vector<std::uint32_t>> cols;
    for (std::size_t i = 1; i < bt.delta[n].size(); ++i) {
        const auto& c = bt.delta[n][i];
        cols.emplace_back(c.begin() + std::min<std::size_t>(1, c.size()), c.end());
    }
    return rank_of_columns(cols, p);
}

} // namespace

BocksteinData bockstein_data(const QuandleContext& ctx, int max_degree)
{
    BocksteinTables bt = bockstein_tables(ctx, max_degree, false);
    BocksteinData d;
    for (int n = 0; n <= max_degree; ++n) {
        d.dims.push_back(bt.spaces[n]->dim());
        d.reduced_ranks.push_back(reduced_rank(bt, n, ctx.p));
    }
    return d;
}

SuiteReport bockstein_suite(const QuandleContext& ctx, const SuiteOptions& opt)
{
    const int N = opt.max_degree;
    if (N < 2)
        throw InvalidInput("Bockstein suite needs a maximum degree of at least 2");
    const std::uint32_t p = ctx.p;
    const Ring F = Ring::prime_field(p);
    SuiteReport rep;
    rep.suite = "bockstein";
    BocksteinTables bt = bockstein_tables(ctx, N, opt.fault == Fault::Bockstein);
    const ComplexCache& cx = ctx.point_cx;

    IdentityResult r_fund = named("bockstein_of_diagonal_cycle", "point");
    IdentityResult r_sq = named("bockstein_squared", "point");
    IdentityResult r_rep = named("bockstein_representative_independent", "point");
    IdentityResult r_exact = named("reduced_bockstein_exact", "point");
    SplitMix64 rng(trial_seed(opt.seed, 0xb0c5));
    for (int n = 1; n <= N; ++n) {
        const ClassSpace& H = *bt.spaces[n];
        // Δ(r^n) vanishes at chain level
        ++r_fund.checks;
        if (!bockstein_chain(SparseVector::from_pairs({{0, 1}}, F), cx.integral_slice(n).d, p).empty())
            if (!r_fund.failures++)
                r_fund.witness = "degree " + std::to_string(n);
        for (std::size_t i = 0; i < H.dim(); ++i) {
            if (n >= 2) {
                // Δ∘Δ in coordinates
                ++r_sq.checks;
                std::vector<std::uint64_t> acc(bt.spaces[n - 2]->dim(), 0);
                for (std::size_t j = 0; j < bt.delta[n][i].size(); ++j)
                    for (std::size_t l = 0; l < acc.size(); ++l)
                        acc[l] = (acc[l] + std::uint64_t(bt.delta[n][i][j]) * bt.delta[n - 1][j][l]) % p;
                if (std::any_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v != 0; }))
                    if (!r_sq.failures++)
                        r_sq.witness = "class " + std::to_string(i) + " of degree " + std::to_string(n);
            }
            // changing the representative by a boundary keeps the class of Δ
            ++r_rep.checks;
            const ComplexSlice& up = cx.slice(n + 1);
            SparseVector shifted = H.reps()[i];
            if (up.size() > 0)
                for (int r = 0; r < 3; ++r)
                    shifted = shifted + up.d.column(rng.below(up.size())).scaled(static_cast<std::int64_t>(rng.below(p)));
            auto coords = bt.spaces[n - 1]->coordinates(bockstein_chain(shifted, cx.integral_slice(n).d, p));
            if (coords != bt.delta[n][i])
                if (!r_rep.failures++)
                    r_rep.witness = "class " + std::to_string(i) + " of degree " + std::to_string(n);
        }
    }
    for (int n = 0; n < N; ++n) {
        ++r_exact.checks;
        const std::size_t reduced_dim = bt.spaces[n]->dim() - 1;
        const std::size_t rk = reduced_rank(bt, n, p), rk_next = reduced_rank(bt, n + 1, p);
        if (reduced_dim - rk != rk_next)
            if (!r_exact.failures++)
                r_exact.witness = "degree " + std::to_string(n) + ": dim ker " + std::to_string(reduced_dim - rk) +
                                  " vs dim im " + std::to_string(rk_next);
    }
    for (auto* r : {&r_fund, &r_sq, &r_rep, &r_exact})
        rep.results.push_back(*r);

    // cochain Bockstein on (X;X) and B(G;X): Δ∘Δ lands in coboundaries
    for (XSetKind kind : {XSetKind::SelfAction, XSetKind::GroupAction}) {
        const CochainAlgebra& alg = ctx.algebra(kind);
        const ComplexCache& ccx = ctx.complex(kind);
        IdentityResult r = named("cochain_bockstein_squared", xset_kind_name(kind));
        const int top = kind == XSetKind::SelfAction ? std::min(N, 3) : std::min(N, 2);
        for (int n = 0; n <= top; ++n)
            for (const auto& v : ccx.cohomology(n).reps()) {
                ++r.checks;
                Cochain b = alg.bockstein(alg.bockstein(alg.from_sparse(n, v)));
                if (!ccx.is_coboundary(b) && !r.failures++)
                    r.witness = "class of degree " + std::to_string(n);
            }
        rep.results.push_back(r);
    }
    return rep;
}

} // namespace qh
