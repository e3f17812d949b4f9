#include "qh/cli.hpp"
#include "qh/generators.hpp"
#include "qh/nodes.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace qh {

namespace {

using ojson = nlohmann::ordered_json;

struct RunConfig {
    std::uint32_t dihedral = 0;
    std::uint32_t trivial = 0;
    std::vector<std::int64_t> alexander;
    std::string file;
    std::string theory = "rack";
    std::string coeff;
    std::string space = "bx";
    int max_degree = 4;
    std::uint64_t seed = 1;
    int trials = 100;
    std::size_t cell_cap = 0;
    std::string format = "table";

    // command specific
    std::string suite = "all";
    std::string fault = "none";
    std::string what = "basis";
    int degree = -1;
};

struct Source {
    Quandle q;
    ojson desc;
    std::optional<std::uint32_t> dihedral_prime;
};

Source load_source(const RunConfig& cfg)
{
    const int given = (cfg.dihedral ? 1 : 0) + (cfg.trivial ? 1 : 0) + (cfg.alexander.empty() ? 0 : 1) +
                      (cfg.file.empty() ? 0 : 1);
    if (given != 1)
        throw InvalidInput("give exactly one of --dihedral, --trivial, --alexander, --file");
    Source s;
    if (cfg.dihedral) {
        s.q = build_dihedral(cfg.dihedral);
        s.desc = {{"source", "dihedral"}, {"n", cfg.dihedral}};
        if (cfg.dihedral % 2 == 1 && is_prime(cfg.dihedral))
            s.dihedral_prime = cfg.dihedral;
    } else if (cfg.trivial) {
        s.q = build_trivial(cfg.trivial);
        s.desc = {{"source", "trivial"}, {"n", cfg.trivial}};
    } else if (!cfg.alexander.empty()) {
        if (cfg.alexander.size() != 2 || cfg.alexander[0] <= 0)
            throw InvalidInput("--alexander takes a modulus n > 0 and a unit t");
        s.q = build_alexander(static_cast<std::uint32_t>(cfg.alexander[0]), cfg.alexander[1]);
        s.desc = {{"source", "alexander"}, {"n", cfg.alexander[0]}, {"t", cfg.alexander[1]}};
    } else {
        std::ifstream in(cfg.file);
        if (!in)
            throw InvalidInput("cannot open " + cfg.file);
        s.q = load_quandle_json(in);
        s.desc = {{"source", "file"}, {"path", cfg.file}};
    }
    s.desc["size"] = s.q.size();
    return s;
}

Ring parse_coeff(const std::string& c)
{
    if (c == "z" || c == "Z")
        return Ring::integers();
    if (c.size() > 1 && (c[0] == 'f' || c[0] == 'F')) {
        std::uint32_t p = 0;
        try {
            p = static_cast<std::uint32_t>(std::stoul(c.substr(1)));
        } catch (const std::exception&) {
            throw InvalidInput("bad coefficient ring '" + c + "'");
        }
        if (!is_prime(p))
            throw InvalidInput("F_p needs p prime, got " + std::to_string(p));
        return Ring::prime_field(p);
    }
    throw InvalidInput("coefficient ring must be z or f<p>, got '" + c + "'");
}

// Prime for field computations: --coeff f<p>, else the dihedral prime, else 2.
std::uint32_t field_prime(const RunConfig& cfg, const Source& src)
{
    if (!cfg.coeff.empty()) {
        const Ring r = parse_coeff(cfg.coeff);
        if (!r.is_field())
            throw InvalidInput("this command needs field coefficients f<p>");
        return r.p;
    }
    return src.dihedral_prime.value_or(2);
}

XSetKind parse_space(const std::string& s)
{
    if (s == "bx")
        return XSetKind::Point;
    if (s == "bxx")
        return XSetKind::SelfAction;
    if (s == "bgx")
        return XSetKind::GroupAction;
    throw InvalidInput("space must be bx, bxx or bgx, got '" + s + "'");
}

std::size_t resolve_cap(const RunConfig& cfg) { return cfg.cell_cap ? cfg.cell_cap : cell_cap_from_env(); }

ojson header(const char* command, const Source& src)
{
    ojson j;
    j["schema"] = "qh/1";
    j["command"] = command;
    j["quandle"] = src.desc;
    return j;
}

void require_quandle(const Quandle& q, const char* what)
{
    if (!check_axioms(q).is_quandle)
        throw InvalidInput(std::string(what) + " needs a quandle");
}

std::string torsion_text(const std::vector<BigInt>& t)
{
    if (t.empty())
        return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < t.size(); ++i)
        os << (i ? "," : "") << t[i];
    return os.str();
}

// Generators for inputs outside the dihedral model fail as invalid input.
GeneratorSet generators_of(const QuandleContext& ctx)
{
    try {
        return identify_generators(ctx);
    } catch (const ResourceCap&) {
        throw;
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::runtime_error& e) {
        throw InvalidInput(std::string("generators: ") + e.what());
    }
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

// info ----------------------------------------------------------------------

int cmd_info(const RunConfig& cfg, std::ostream& out)
{
    const Source src = load_source(cfg);
    const AxiomReport ax = check_axioms(src.q);
    const AugmentedQuandle aug = inner_group(src.q);
    const Classification cl = classify(aug);
    const std::string type = ax.is_quandle ? "quandle" : "rack";

    if (cfg.format == "json") {
        ojson j = header("info", src);
        j["type"] = type;
        j["inner_group_order"] = aug.g.order();
        j["connected"] = cl.connected;
        j["faithful"] = cl.faithful;
        j["regular"] = cl.regular;
        j["orbits"] = cl.orbits;
        out << j.dump(2) << '\n';
        return kExitOk;
    }
    out << "size: " << src.q.size() << '\n'
        << "type: " << type << '\n'
        << "inner group order: " << aug.g.order() << '\n'
        << "connected: " << bool_text(cl.connected) << '\n'
        << "faithful: " << bool_text(cl.faithful) << '\n'
        << "regular: " << bool_text(cl.regular) << '\n'
        << "orbits:";
    for (const auto& o : cl.orbits) {
        out << " {";
        for (std::size_t i = 0; i < o.size(); ++i)
            out << (i ? "," : "") << o[i];
        out << '}';
    }
    out << '\n'
        << "summary: " << type << ", |Inn|=" << aug.g.order() << ", " << (cl.connected ? "" : "not ")
        << "connected, " << (cl.faithful ? "" : "not ") << "faithful, " << (cl.regular ? "" : "not ") << "regular\n";
    return kExitOk;
}

// homology ------------------------------------------------------------------

std::vector<HomologyResult> compute_homology(std::shared_ptr<const XSet> xs, int max, Ring ring, Variant v,
                                             std::size_t cap)
{
    const auto slices = build_complex(std::move(xs), max + 1, ring, v, cap);
    return ring.is_field() ? homology_fp(slices, max) : homology_z(slices, max);
}

ojson row_json(const HomologyResult& h) { return ojson::parse(to_json(h)); }

bool splits(const HomologyResult& r, const HomologyResult& q, const HomologyResult& d, bool field)
{
    if (field)
        return r.field_dim == q.field_dim + d.field_dim;
    auto t = q.torsion;
    t.insert(t.end(), d.torsion.begin(), d.torsion.end());
    std::sort(t.begin(), t.end());
    auto rt = r.torsion;
    std::sort(rt.begin(), rt.end());
    return r.free_rank == q.free_rank + d.free_rank && rt == t;
}

int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Source src = load_source(cfg);
    const Ring ring = parse_coeff(cfg.coeff.empty() ? "z" : cfg.coeff);
    const XSetKind kind = parse_space(cfg.space);
    if (cfg.theory != "rack" && cfg.theory != "quandle")
        throw InvalidInput("theory must be rack or quandle");
    const bool quandle = cfg.theory == "quandle";
    if (quandle) {
        require_quandle(src.q, "--theory quandle");
        if (kind != XSetKind::Point)
            throw InvalidInput("--theory quandle is defined on the space bx");
    }
    const std::size_t cap = resolve_cap(cfg);
    auto aug = std::make_shared<const AugmentedQuandle>(inner_group(src.q));
    auto xs = std::make_shared<const XSet>(aug, kind);

    std::vector<HomologyResult> main, rack, deg;
    if (quandle) {
        main = compute_homology(xs, cfg.max_degree, ring, Variant::Quandle, cap);
        rack = compute_homology(xs, cfg.max_degree, ring, Variant::Full, cap);
        deg = compute_homology(xs, cfg.max_degree, ring, Variant::Degenerate, cap);
    } else {
        main = compute_homology(xs, cfg.max_degree, ring, Variant::Full, cap);
    }
    std::vector<int> bad;
    if (quandle)
        for (int n = 0; n <= cfg.max_degree; ++n)
            if (!splits(rack[n], main[n], deg[n], ring.is_field()))
                bad.push_back(n);

    if (cfg.format == "json") {
        ojson j = header("homology", src);
        j["space"] = cfg.space;
        j["theory"] = cfg.theory;
        j["coeff"] = ring.name();
        j["rows"] = ojson::array();
        for (int n = 0; n <= cfg.max_degree; ++n) {
            ojson r = row_json(main[n]);
            if (quandle) {
                r["rack"] = row_json(rack[n]);
                r["degenerate"] = row_json(deg[n]);
            }
            j["rows"].push_back(r);
        }
        if (quandle) {
            j["splitting"] = bad.empty();
            j["splitting_failures"] = bad;
        }
        out << j.dump(2) << '\n';
    } else {
        auto cell = [&](const HomologyResult& h) {
            return ring.is_field() ? std::to_string(h.field_dim)
                                   : std::to_string(h.free_rank) + " + " + torsion_text(h.torsion);
        };
        const char* what = ring.is_field() ? "dim" : "rank + torsion";
        out << std::left << std::setw(8) << "degree" << std::setw(18) << what;
        if (quandle)
            out << std::setw(18) << "rack" << "degenerate";
        out << '\n';
        for (int n = 0; n <= cfg.max_degree; ++n) {
            out << std::left << std::setw(8) << n << std::setw(18) << cell(main[n]);
            if (quandle)
                out << std::setw(18) << cell(rack[n]) << cell(deg[n]);
            out << '\n';
        }
        if (quandle)
            out << "splitting rack = quandle + degenerate: " << (bad.empty() ? "holds" : "FAILS") << '\n';
    }
    if (!bad.empty()) {
        err << "splitting fails in degree " << bad.front() << '\n';
        return kExitIdentityFailure;
    }
    return kExitOk;
}

// verify --------------------------------------------------------------------

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Source src = load_source(cfg);
    const std::uint32_t p = field_prime(cfg, src);
    SuiteOptions opt;
    opt.max_degree = cfg.max_degree;
    opt.trials = cfg.trials;
    opt.seed = cfg.seed;
    opt.fault = parse_fault(cfg.fault);
    opt.threads = 1;

    std::vector<std::string> names;
    if (cfg.suite == "all")
        names = {"chain", "cup", "triangulation", "bockstein"};
    else if (cfg.suite == "chain" || cfg.suite == "cup" || cfg.suite == "triangulation" ||
             cfg.suite == "bockstein" || cfg.suite == "ring")
        names = {cfg.suite};
    else
        throw InvalidInput("unknown suite '" + cfg.suite + "'");

    const QuandleContext ctx(src.q, p, resolve_cap(cfg));
    std::vector<SuiteReport> reports;
    for (const auto& n : names) {
        if (n == "chain")
            reports.push_back(chain_suite(ctx, opt));
        else if (n == "cup")
            reports.push_back(cup_suite(ctx, opt));
        else if (n == "triangulation")
            reports.push_back(triangulation_suite(ctx, opt));
        else if (n == "bockstein")
            reports.push_back(bockstein_suite(ctx, opt));
        else
            reports.push_back(ring_suite(ctx, generators_of(ctx)));
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });

    if (cfg.format == "json") {
        ojson j = header("verify", src);
        j["p"] = p;
        j["seed"] = cfg.seed;
        j["trials"] = cfg.trials;
        j["max_degree"] = cfg.max_degree;
        j["fault"] = fault_name(opt.fault);
        j["ok"] = ok;
        j["suites"] = ojson::array();
        for (const auto& r : reports)
            j["suites"].push_back(r.to_json());
        out << j.dump(2) << '\n';
    } else {
        for (const auto& rep : reports) {
            out << "[" << rep.suite << "]\n";
            for (const auto& r : rep.results) {
                std::string name = r.name + (r.space.empty() ? "" : "/" + r.space);
                out << "  " << std::left << std::setw(36) << name << (r.ok() ? "pass" : "FAIL") << "  checks=" << r.checks
                    << " failures=" << r.failures << '\n';
            }
        }
        out << (ok ? "all identities hold\n" : "identity failures\n");
    }
    if (!ok) {
        for (const auto& rep : reports)
            for (const auto& r : rep.results)
                if (!r.ok()) {
                    err << rep.suite << ": " << r.name << (r.space.empty() ? "" : "/" + r.space) << " failed: " << r.witness;
                    if (r.replay_seed)
                        err << " (replay seed " << *r.replay_seed << ")";
                    err << '\n';
                    return kExitIdentityFailure;
                }
    }
    return kExitOk;
}

// compare -------------------------------------------------------------------

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Source src = load_source(cfg);
    const std::uint32_t p = field_prime(cfg, src);
    const Ring ring = Ring::prime_field(p);
    const int N = cfg.max_degree;
    if (N < 0)
        throw InvalidInput("negative degree");
    const std::size_t cap = resolve_cap(cfg);
    const bool predict = src.dihedral_prime.has_value() && *src.dihedral_prime == p;
    const bool is_quandle = check_axioms(src.q).is_quandle;

    auto aug = std::make_shared<const AugmentedQuandle>(inner_group(src.q));
    auto point = std::make_shared<const XSet>(aug, XSetKind::Point);
    auto self = std::make_shared<const XSet>(aug, XSetKind::SelfAction);
    auto group = std::make_shared<const XSet>(aug, XSetKind::GroupAction);
    auto dims = [](const std::vector<HomologyResult>& h) {
        std::vector<long long> d;
        for (const auto& r : h)
            d.push_back(static_cast<long long>(r.field_dim));
        return d;
    };
    const auto bx = dims(compute_homology(point, N + 1, ring, Variant::Full, cap));
    const auto bxx = dims(compute_homology(self, N, ring, Variant::Full, cap));
    const auto bgx = dims(compute_homology(group, N, ring, Variant::Full, cap));
    std::vector<long long> q;
    if (is_quandle)
        q = dims(compute_homology(point, N, ring, Variant::Quandle, cap));
    const auto hz = compute_homology(point, N, Ring::integers(), Variant::Full, cap);

    std::optional<BettiRecursion> rec;
    std::vector<long long> qnodes, tpred;
    if (predict) {
        rec = betti_recursion(N + 1);
        qnodes = q_node_counts(N);
        tpred = predicted_torsion_counts(std::vector<long long>(rec->rack.begin(), rec->rack.begin() + N + 1));
    }

    auto table = [&](BettiKind kind, auto&& pred, auto&& comp) {
        BettiTable t;
        t.p = p;
        t.kind = kind;
        for (int n = 0; n <= N; ++n)
            t.rows.push_back({n, predict ? pred(n) : std::nullopt, comp(n)});
        return t;
    };
    using opt = std::optional<long long>;
    std::vector<std::pair<std::string, BettiTable>> tables;
    tables.emplace_back("bx", table(
                                  BettiKind::RackSpace, [&](int n) { return opt(rec->rack[n]); },
                                  [&](int n) { return opt(bx[n]); }));
    tables.emplace_back("bxx", table(
                                   BettiKind::RackSpace, [&](int n) { return opt(rec->rack[n + 1]); },
                                   [&](int n) { return opt(bxx[n]); }));
    tables.emplace_back("bgx", table(
                                   BettiKind::MonoidM, [&](int n) { return opt(rec->monoid[n]); },
                                   [&](int n) { return opt(bgx[n]); }));
    tables.emplace_back("quandle", table(
                                       BettiKind::Quandle,
                                       [&](int n) { return n == 0 ? opt() : opt(qnodes[n - 1]); },
                                       [&](int n) { return is_quandle ? opt(q[n]) : opt(); }));
    tables.emplace_back("torsion", table(
                                       BettiKind::IntegralTorsionCount, [&](int n) { return opt(tpred[n]); },
                                       [&](int n) { return opt(static_cast<long long>(hz[n].torsion.size())); }));

    std::vector<std::string> mismatches;
    for (const auto& [name, t] : tables)
        for (int d : t.mismatched_degrees())
            mismatches.push_back(name + ":" + std::to_string(d));
    if (predict)
        for (int n = 0; n <= N; ++n) {
            const bool exponent_p = std::all_of(hz[n].torsion.begin(), hz[n].torsion.end(),
                                                [&](const BigInt& t) { return t == p; });
            if (hz[n].free_rank != 1 || !exponent_p)
                mismatches.push_back("integral:" + std::to_string(n));
        }

    // The two isomorphisms are claimed for connected racks only.
    const bool connected = classify(*aug).connected;
    ojson iso = ojson::array();
    for (int n = 0; n <= N; ++n) {
        const bool eq = bx[n + 1] == bxx[n] && bxx[n] == bgx[n];
        iso.push_back({{"degree", n}, {"bx_next", bx[n + 1]}, {"bxx", bxx[n]}, {"bgx", bgx[n]}, {"equal", eq}});
        if (connected && !eq)
            mismatches.push_back("isomorphism:" + std::to_string(n));
    }

    if (cfg.format == "json") {
        ojson j = header("compare", src);
        j["p"] = p;
        j["predictions"] = predict;
        j["tables"] = ojson::object();
        for (const auto& [name, t] : tables)
            j["tables"][name] = ojson::parse(t.to_json());
        j["isomorphisms"] = {{"checked", connected}, {"rows", iso}};
        j["mismatches"] = mismatches;
        j["ok"] = mismatches.empty();
        out << j.dump(2) << '\n';
    } else {
        for (const auto& [name, t] : tables)
            out << "[" << name << "]\n" << t.to_text();
        out << "[isomorphisms" << (connected ? "" : ", not checked: rack not connected") << "]\n";
        out << std::left << std::setw(8) << "degree" << std::setw(9) << "bx(n+1)" << std::setw(8) << "bxx" << "bgx\n";
        for (int n = 0; n <= N; ++n)
            out << std::left << std::setw(8) << n << std::setw(9) << bx[n + 1] << std::setw(8) << bxx[n] << bgx[n] << '\n';
        out << (mismatches.empty() ? "all rows equal\n" : "mismatches found\n");
    }
    if (!mismatches.empty()) {
        err << "mismatch at";
        for (const auto& m : mismatches)
            err << ' ' << m;
        err << '\n';
        return kExitMismatch;
    }
    return kExitOk;
}

// generators ----------------------------------------------------------------

int cmd_generators(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const Source src = load_source(cfg);
    require_quandle(src.q, "generators");
    const std::uint32_t p = field_prime(cfg, src);
    const QuandleContext ctx(src.q, p, resolve_cap(cfg));
    const GeneratorSet gs = generators_of(ctx);
    const SuiteReport ring = ring_suite(ctx, gs);
    std::vector<OperationImage> ops;
    for (int n = 1; n <= std::min(cfg.max_degree, 3); ++n)
        ops.push_back(homology_operation(ctx, hs_chain(ctx), 2, n, Variant::Quandle));
    const bool ok = ring.ok() && std::all_of(ops.begin(), ops.end(), [](const auto& o) { return o.injective(); });

    if (cfg.format == "json") {
        ojson j = header("generators", src);
        j["generators"] = gs.to_json();
        j["checks"] = ring.to_json();
        j["hs_operation"] = ojson::array();
        for (const auto& o : ops)
            j["hs_operation"].push_back({{"degree", o.degree},
                                         {"source_dim", o.source_dim},
                                         {"target_dim", o.target_dim},
                                         {"rank", o.rank},
                                         {"injective", o.injective()}});
        j["ok"] = ok;
        out << j.dump(2) << '\n';
    } else {
        out << "p: " << p << '\n'
            << "A: degree 2, reference cycle #" << gs.reference_index << ", scale " << gs.scale
            << ", removed P^2(1) multiple " << gs.removed_p2 << '\n'
            << "B: degree 3, Bockstein of A\n"
            << "P(1): degree 1, constant\n";
        for (const auto& r : ring.results)
            out << "  " << std::left << std::setw(30) << r.name << (r.ok() ? "pass" : "FAIL") << '\n';
        for (const auto& o : ops)
            out << "  h_s: H^Q_" << o.degree << " (dim " << o.source_dim << ") -> H^Q_" << o.degree + 2 << " (dim "
                << o.target_dim << "), rank " << o.rank << (o.injective() ? ", injective" : ", NOT injective") << '\n';
    }
    if (!ok) {
        for (const auto& r : ring.results)
            if (!r.ok()) {
                err << r.name << " failed: " << r.witness << '\n';
                break;
            }
        return kExitIdentityFailure;
    }
    return kExitOk;
}

// export --------------------------------------------------------------------

int cmd_export(const RunConfig& cfg, std::ostream& out)
{
    const Source src = load_source(cfg);
    const int degree = cfg.degree >= 0 ? cfg.degree : cfg.max_degree;
    const std::size_t cap = resolve_cap(cfg);
    if (cfg.what == "boundary") {
        auto aug = std::make_shared<const AugmentedQuandle>(inner_group(src.q));
        auto xs = std::make_shared<const XSet>(aug, parse_space(cfg.space));
        const Ring ring = parse_coeff(cfg.coeff.empty() ? "z" : cfg.coeff);
        boundary_matrices(xs, degree, ring, cap).d.write_sms(out);
        return kExitOk;
    }
    const std::uint32_t p = field_prime(cfg, src);
    const QuandleContext ctx(src.q, p, cap);
    ojson j = header("export", src);
    if (cfg.what == "basis") {
        const XSetKind kind = parse_space(cfg.space);
        const auto& alg = ctx.algebra(kind);
        j["cocycles"] = ojson::array();
        for (const auto& r : ctx.complex(kind).cohomology(degree).reps())
            j["cocycles"].push_back(cochain_to_json(alg.from_sparse(degree, r)));
    } else if (cfg.what == "A" || cfg.what == "B" || cfg.what == "Pone") {
        require_quandle(src.q, "generator export");
        const GeneratorSet gs = generators_of(ctx);
        const Cochain& c = cfg.what == "A" ? gs.a : cfg.what == "B" ? gs.b : gs.pone;
        j["cocycles"] = ojson::array({cochain_to_json(c)});
    } else {
        throw InvalidInput("--what must be basis, A, B, Pone or boundary");
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--dihedral", cfg.dihedral, "dihedral quandle R_n");
    sub->add_option("--trivial", cfg.trivial, "trivial quandle on n elements");
    sub->add_option("--alexander", cfg.alexander, "Alexander quandle Z/n with a*b = t a + (1-t) b")->expected(2);
    sub->add_option("--file", cfg.file, "quandle table as JSON");
    sub->add_option("--cell-cap", cfg.cell_cap, "largest number of cells per degree (default: QH_CELL_CAP or 10^7)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
}

void add_space(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--space", cfg.space, "bx, bxx or bgx")->check(CLI::IsMember({"bx", "bxx", "bgx"}));
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Rack and quandle (co)homology toolkit"};
    app.name("qh");
    app.require_subcommand(1);

    auto* info = app.add_subcommand("info", "size, axioms, inner group and classification");
    add_common(info, cfg);

    auto* hom = app.add_subcommand("homology", "homology by degree");
    add_common(hom, cfg);
    add_space(hom, cfg);
    hom->add_option("--theory", cfg.theory, "rack or quandle")->check(CLI::IsMember({"rack", "quandle"}));
    hom->add_option("--coeff", cfg.coeff, "z or f<p> (default z)");
    hom->add_option("--max-degree", cfg.max_degree)->check(CLI::NonNegativeNumber);

    auto* ver = app.add_subcommand("verify", "identity suites on random cochains");
    add_common(ver, cfg);
    ver->add_option("--suite", cfg.suite, "chain, cup, triangulation, bockstein, ring or all");
    ver->add_option("--coeff", cfg.coeff, "f<p> (default: the dihedral prime, else f2)");
    ver->add_option("--max-degree", cfg.max_degree)->check(CLI::NonNegativeNumber);
    ver->add_option("--seed", cfg.seed);
    ver->add_option("--trials", cfg.trials)->check(CLI::PositiveNumber);
    ver->add_option("--inject-fault", cfg.fault, "corrupt one operator: psi, p, d, cup, tau, bockstein");

    auto* cmp = app.add_subcommand("compare", "predicted against computed dimensions");
    add_common(cmp, cfg);
    cmp->add_option("--coeff", cfg.coeff, "f<p> (default: the dihedral prime, else f2)");
    cmp->add_option("--max-degree", cfg.max_degree)->check(CLI::NonNegativeNumber);

    auto* gen = app.add_subcommand("generators", "normalized generators A, B, P(1) and their ring checks");
    add_common(gen, cfg);
    gen->add_option("--coeff", cfg.coeff, "f<p> (default: the dihedral prime, else f2)");
    gen->add_option("--max-degree", cfg.max_degree, "top source degree of the h_s check (at most 3)");

    auto* exp = app.add_subcommand("export", "cocycles as JSON or boundary matrices as triplets");
    add_common(exp, cfg);
    add_space(exp, cfg);
    exp->add_option("--what", cfg.what, "basis, A, B, Pone or boundary");
    exp->add_option("--degree", cfg.degree);
    exp->add_option("--max-degree", cfg.max_degree);
    exp->add_option("--coeff", cfg.coeff);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*info)
            return cmd_info(cfg, out);
        if (*hom)
            return cmd_homology(cfg, out, err);
        if (*ver)
            return cmd_verify(cfg, out, err);
        if (*cmp)
            return cmd_compare(cfg, out, err);
        if (*gen)
            return cmd_generators(cfg, out, err);
        return cmd_export(cfg, out);
    } catch (const ResourceCap& e) {
        err << "resource cap: " << e.what() << '\n';
        return kExitCap;
    } catch (const InvalidInput& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

} // namespace qh
