#include "qh/quandle.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qh {

namespace {

std::string fmt_triple(const char* what, std::uint32_t a, std::uint32_t b, std::uint32_t c)
{
    std::ostringstream os;
    os << what << " (a,b,c)=(" << a << "," << b << "," << c << ")";
    return os.str();
}

std::int64_t positive_mod(std::int64_t v, std::int64_t n)
{
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

} // namespace

Quandle::Quandle(std::size_t size, std::vector<std::uint32_t> flat_table)
    : size_(size), table_(std::move(flat_table))
{
    if (size_ == 0)
        throw InvalidInput("quandle must have at least one element");
    if (table_.size() != size_ * size_)
        throw InvalidInput("operation table has wrong shape");
    for (auto v : table_)
        if (v >= size_)
            throw InvalidInput("operation table entry " + std::to_string(v) + " out of range");

    std::vector<std::uint32_t> inv(size_ * size_, UINT32_MAX);
    for (std::uint32_t b = 0; b < size_; ++b)
        for (std::uint32_t a = 0; a < size_; ++a) {
            std::uint32_t c = op(a, b);
            if (inv[c * size_ + b] != UINT32_MAX)
                return; // not a bijection; leave inv_table_ empty
            inv[c * size_ + b] = a;
        }
    inv_table_ = std::move(inv);
}

Quandle Quandle::from_rows(const std::vector<std::vector<std::uint32_t>>& rows)
{
    std::vector<std::uint32_t> flat;
    for (const auto& r : rows) {
        if (r.size() != rows.size())
            throw InvalidInput("operation table must be square");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Quandle(rows.size(), std::move(flat));
}

bool Quandle::is_idempotent() const
{
    for (std::uint32_t a = 0; a < size_; ++a)
        if (op(a, a) != a)
            return false;
    return true;
}

std::vector<std::vector<std::uint32_t>> Quandle::rows() const
{
    std::vector<std::vector<std::uint32_t>> out(size_);
    for (std::size_t a = 0; a < size_; ++a)
        out[a].assign(table_.begin() + a * size_, table_.begin() + (a + 1) * size_);
    return out;
}

AxiomReport check_axioms(const Quandle& q)
{
    AxiomReport rep;
    const auto d = static_cast<std::uint32_t>(q.size());
    bool bijective = true;
    for (std::uint32_t b = 0; b < d && bijective; ++b) {
        std::vector<std::uint32_t> seen(d, UINT32_MAX);
        for (std::uint32_t a = 0; a < d; ++a) {
            std::uint32_t c = q.op(a, b);
            if (seen[c] != UINT32_MAX) {
                std::ostringstream os;
                os << "column " << b << " is not a bijection: " << seen[c] << "*" << b << " = " << a << "*"
                   << b << " = " << c;
                rep.failures.push_back(os.str());
                bijective = false;
                break;
            }
            seen[c] = a;
        }
    }
    bool distributive = true;
    for (std::uint32_t a = 0; a < d && distributive; ++a)
        for (std::uint32_t b = 0; b < d && distributive; ++b)
            for (std::uint32_t c = 0; c < d; ++c)
                if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c))) {
                    rep.failures.push_back(fmt_triple("(a*b)*c != (a*c)*(b*c) at", a, b, c));
                    distributive = false;
                    break;
                }
    rep.is_rack = bijective && distributive;
    bool idem = true;
    for (std::uint32_t a = 0; a < d; ++a)
        if (q.op(a, a) != a) {
            rep.failures.push_back("a*a != a at a=" + std::to_string(a));
            idem = false;
            break;
        }
    rep.is_quandle = rep.is_rack && idem;
    return rep;
}

Quandle build_dihedral(std::uint32_t p)
{
    if (p == 0)
        throw InvalidInput("dihedral quandle needs p >= 1");
    std::vector<std::uint32_t> t(p * p);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            t[a * p + b] = static_cast<std::uint32_t>(positive_mod(2 * std::int64_t(b) - a, p));
    return Quandle(p, std::move(t));
}

Quandle build_alexander(std::uint32_t n, std::int64_t t)
{
    if (n == 0)
        throw InvalidInput("Alexander quandle needs n >= 1");
    std::int64_t tm = positive_mod(t, n);
    if (std::gcd<std::int64_t>(tm, n) != 1)
        throw InvalidInput("t=" + std::to_string(t) + " is not invertible mod " + std::to_string(n));
    std::vector<std::uint32_t> tab(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            tab[a * n + b] = static_cast<std::uint32_t>(positive_mod(tm * a + (1 - tm) * std::int64_t(b), n));
    return Quandle(n, std::move(tab));
}

Quandle build_trivial(std::uint32_t d)
{
    if (d == 0)
        throw InvalidInput("trivial quandle needs d >= 1");
    std::vector<std::uint32_t> t(d * d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b)
            t[a * d + b] = a;
    return Quandle(d, std::move(t));
}

Quandle build_two_part_union(std::uint32_t k, std::uint32_t m)
{
    if (k == 0 || m == 0)
        throw InvalidInput("both parts must be nonempty");
    const std::uint32_t d = k + m;
    auto part = [k](std::uint32_t a) { return a < k ? 0 : 1; };
    std::vector<std::uint32_t> t(d * d);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t b = 0; b < d; ++b) {
            if (part(a) == part(b))
                t[a * d + b] = a;
            else if (a < k)
                t[a * d + b] = (a + 1) % k;
            else
                t[a * d + b] = k + (a - k + 1) % m;
        }
    return Quandle(d, std::move(t));
}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<std::uint32_t> mul) : order_(order), mul_(std::move(mul))
{
    if (order_ == 0 || mul_.size() != order_ * order_)
        throw InvalidInput("group table has wrong shape");
    for (auto v : mul_)
        if (v >= order_)
            throw InvalidInput("group table entry out of range");
    bool found = false;
    for (std::uint32_t e = 0; e < order_ && !found; ++e) {
        bool ok = true;
        for (std::uint32_t g = 0; g < order_ && ok; ++g)
            ok = this->mul(e, g) == g && this->mul(g, e) == g;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw InvalidInput("group table has no identity");
    inv_.assign(order_, UINT32_MAX);
    for (std::uint32_t g = 0; g < order_; ++g)
        for (std::uint32_t h = 0; h < order_; ++h)
            if (this->mul(g, h) == identity_ && this->mul(h, g) == identity_) {
                inv_[g] = h;
                break;
            }
    for (auto v : inv_)
        if (v == UINT32_MAX)
            throw InvalidInput("group table has an element without inverse");
}

FiniteGroup FiniteGroup::from_permutations(std::vector<std::vector<std::uint32_t>> perms)
{
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < perms.size(); ++i)
        index.emplace(perms[i], i);
    const std::size_t n = perms.size();
    std::vector<std::uint32_t> mul(n * n);
    std::vector<std::uint32_t> prod;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) {
            const auto& pg = perms[g];
            const auto& ph = perms[h];
            prod.resize(pg.size());
            for (std::size_t a = 0; a < pg.size(); ++a)
                prod[a] = ph[pg[a]];
            auto it = index.find(prod);
            if (it == index.end())
                throw InvalidInput("permutation set is not closed under composition");
            mul[g * n + h] = it->second;
        }
    FiniteGroup grp(n, std::move(mul));
    grp.perms_ = std::move(perms);
    return grp;
}

std::int64_t FiniteGroup::index_of(const std::vector<std::uint32_t>& perm) const
{
    auto it = std::lower_bound(perms_.begin(), perms_.end(), perm);
    if (it == perms_.end() || *it != perm)
        return -1;
    return it - perms_.begin();
}

bool FiniteGroup::is_abelian() const
{
    for (std::uint32_t g = 0; g < order_; ++g)
        for (std::uint32_t h = 0; h < g; ++h)
            if (mul(g, h) != mul(h, g))
                return false;
    return true;
}

bool FiniteGroup::check_axioms(std::string* witness) const
{
    for (std::uint32_t a = 0; a < order_; ++a)
        for (std::uint32_t b = 0; b < order_; ++b)
            for (std::uint32_t c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    if (witness)
                        *witness = fmt_triple("associativity fails at", a, b, c);
                    return false;
                }
    for (std::uint32_t g = 0; g < order_; ++g)
        if (mul(g, identity_) != g || mul(identity_, g) != g || mul(g, inv_[g]) != identity_) {
            if (witness)
                *witness = "identity/inverse fails at g=" + std::to_string(g);
            return false;
        }
    return true;
}

FiniteGroup symmetric_group(std::uint32_t n)
{
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<std::vector<std::uint32_t>> perms;
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroup::from_permutations(std::move(perms));
}

Quandle build_conjugation(const FiniteGroup& g, const std::vector<std::uint32_t>& subset)
{
    std::map<std::uint32_t, std::uint32_t> pos;
    for (std::uint32_t i = 0; i < subset.size(); ++i) {
        if (subset[i] >= g.order())
            throw InvalidInput("subset element out of range");
        if (!pos.emplace(subset[i], i).second)
            throw InvalidInput("subset has repeated elements");
    }
    const auto d = static_cast<std::uint32_t>(subset.size());
    std::vector<std::uint32_t> t(d * d);
    for (std::uint32_t i = 0; i < d; ++i)
        for (std::uint32_t j = 0; j < d; ++j) {
            std::uint32_t b = subset[j];
            std::uint32_t c = g.mul(g.mul(g.inv(b), subset[i]), b);
            auto it = pos.find(c);
            if (it == pos.end())
                throw InvalidInput("subset is not closed under conjugation: b^-1 a b = " + std::to_string(c) +
                                   " for a=" + std::to_string(subset[i]) + ", b=" + std::to_string(b));
            t[i * d + j] = it->second;
        }
    return Quandle(d, std::move(t));
}

bool AugmentedQuandle::check(std::string* witness) const
{
    const auto n = static_cast<std::uint32_t>(x.size());
    const auto m = static_cast<std::uint32_t>(g.order());
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t h = 0; h < m; ++h)
            if (eta[rho(a, h)] != g.mul(g.mul(g.inv(h), eta[a]), h)) {
                if (witness)
                    *witness = "eta(rho(a,g)) != g^-1 eta(a) g at a=" + std::to_string(a) + ", g=" + std::to_string(h);
                return false;
            }
    for (std::uint32_t h = 0; h < m; ++h)
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                if (rho(x.op(a, b), h) != x.op(rho(a, h), rho(b, h))) {
                    if (witness)
                        *witness = "rho(.,g) is not an automorphism at g=" + std::to_string(h);
                    return false;
                }
    for (std::uint32_t a = 0; a < n; ++a)
        if (rho(a, eta[a]) != x.op(a, a)) {
            if (witness)
                *witness = "rho(a, eta(a)) != a*a at a=" + std::to_string(a);
            return false;
        }
    return true;
}

AugmentedQuandle inner_group(const Quandle& q, std::size_t order_cap)
{
    const auto d = static_cast<std::uint32_t>(q.size());
    if (!check_axioms(q).is_rack)
        throw InvalidInput("inner automorphism group requires a rack");
    std::vector<std::vector<std::uint32_t>> gens(d, std::vector<std::uint32_t>(d));
    for (std::uint32_t b = 0; b < d; ++b)
        for (std::uint32_t a = 0; a < d; ++a)
            gens[b][a] = q.op(a, b);

    std::vector<std::uint32_t> id(d);
    std::iota(id.begin(), id.end(), 0u);
    std::map<std::vector<std::uint32_t>, bool> seen{{id, true}};
    std::vector<std::vector<std::uint32_t>> frontier{id};
    std::vector<std::uint32_t> next(d);
    while (!frontier.empty()) {
        std::vector<std::vector<std::uint32_t>> fresh;
        for (const auto& f : frontier)
            for (const auto& s : gens) {
                for (std::uint32_t a = 0; a < d; ++a)
                    next[a] = s[f[a]];
                if (seen.emplace(next, true).second) {
                    if (seen.size() > order_cap)
                        throw ResourceCap("Inn(X) exceeds the order cap of " + std::to_string(order_cap));
                    fresh.push_back(next);
                }
            }
        frontier = std::move(fresh);
    }
    std::vector<std::vector<std::uint32_t>> perms;
    perms.reserve(seen.size());
    for (const auto& [p, _] : seen)
        perms.push_back(p);

    AugmentedQuandle aug;
    aug.x = q;
    aug.g = FiniteGroup::from_permutations(std::move(perms));
    const auto m = static_cast<std::uint32_t>(aug.g.order());
    aug.eta.resize(d);
    for (std::uint32_t b = 0; b < d; ++b)
        aug.eta[b] = static_cast<std::uint32_t>(aug.g.index_of(gens[b]));
    aug.action.resize(std::size_t(d) * m);
    for (std::uint32_t a = 0; a < d; ++a)
        for (std::uint32_t h = 0; h < m; ++h)
            aug.action[a * m + h] = aug.g.perm(h)[a];
    return aug;
}

Classification classify(const AugmentedQuandle& aug)
{
    Classification c;
    const auto d = static_cast<std::uint32_t>(aug.x.size());
    std::vector<bool> done(d, false);
    for (std::uint32_t a = 0; a < d; ++a) {
        if (done[a])
            continue;
        std::vector<std::uint32_t> orbit;
        for (std::uint32_t h = 0; h < aug.g.order(); ++h) {
            std::uint32_t b = aug.rho(a, h);
            if (!done[b]) {
                done[b] = true;
                orbit.push_back(b);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        c.orbits.push_back(std::move(orbit));
    }
    c.connected = c.orbits.size() == 1;

    c.faithful = true;
    for (std::uint32_t a = 0; a < d && c.faithful; ++a)
        for (std::uint32_t b = 0; b < a; ++b)
            if (aug.eta[a] == aug.eta[b]) {
                c.faithful = false;
                break;
            }

    for (std::uint32_t h = 0; h < aug.g.order(); ++h)
        if (aug.rho(0, h) == 0)
            ++c.stabilizer_order;
    c.regular = std::gcd<std::size_t>(d, c.stabilizer_order) == 1;
    return c;
}

Classification classify(const Quandle& q) { return classify(inner_group(q)); }

std::string xset_kind_name(XSetKind k)
{
    switch (k) {
    case XSetKind::Point:
        return "point";
    case XSetKind::SelfAction:
        return "self";
    case XSetKind::GroupAction:
        return "group";
    }
    return "?";
}

XSet::XSet(std::shared_ptr<const AugmentedQuandle> aug, XSetKind kind) : aug_(std::move(aug)), kind_(kind)
{
    const auto& a = *aug_;
    const std::size_t d = a.x.size();
    const std::size_t m = a.g.order();
    switch (kind_) {
    case XSetKind::Point:
        y_size_ = 1;
        star_.assign(d, 0);
        act_.assign(m, 0);
        break;
    case XSetKind::SelfAction:
        y_size_ = d;
        star_ = a.x.flat_table();
        act_ = a.action;
        break;
    case XSetKind::GroupAction:
        y_size_ = m;
        star_.resize(m * d);
        act_.resize(m * m);
        for (std::uint32_t g = 0; g < m; ++g) {
            for (std::uint32_t x = 0; x < d; ++x)
                star_[g * d + x] = a.g.mul(g, a.eta[x]);
            for (std::uint32_t h = 0; h < m; ++h)
                act_[g * m + h] = a.g.mul(g, h);
        }
        break;
    }
}

bool XSet::check(std::string* witness) const
{
    const auto& q = quandle();
    const auto d = static_cast<std::uint32_t>(x_size());
    for (std::uint32_t b = 0; b < d; ++b) {
        std::vector<bool> hit(y_size_, false);
        for (std::uint32_t y = 0; y < y_size_; ++y)
            hit[star(y, b)] = true;
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
            if (witness)
                *witness = "y -> y*" + std::to_string(b) + " is not a permutation";
            return false;
        }
    }
    for (std::uint32_t y = 0; y < y_size_; ++y)
        for (std::uint32_t b = 0; b < d; ++b)
            for (std::uint32_t c = 0; c < d; ++c)
                if (star(star(y, b), c) != star(star(y, c), q.op(b, c))) {
                    if (witness)
                        *witness = fmt_triple("(y*b)*c != (y*c)*(b*c) at (y,b,c)=", y, b, c);
                    return false;
                }
    return true;
}

XSet make_xset(std::shared_ptr<const AugmentedQuandle> aug, XSetKind kind) { return XSet(std::move(aug), kind); }

Quandle load_quandle_json(std::istream& in)
{
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("size") || !j.contains("table"))
        throw InvalidInput("quandle JSON needs \"size\" and \"table\"");
    std::vector<std::vector<std::uint32_t>> rows;
    std::size_t size = 0;
    try {
        size = j.at("size").get<std::size_t>();
        for (const auto& r : j.at("table")) {
            std::vector<std::uint32_t> row;
            for (const auto& v : r) {
                auto x = v.get<std::int64_t>();
                if (x < 0 || static_cast<std::size_t>(x) >= size)
                    throw InvalidInput("table entry " + std::to_string(x) + " out of range");
                row.push_back(static_cast<std::uint32_t>(x));
            }
            rows.push_back(std::move(row));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad quandle JSON: ") + e.what());
    }
    if (rows.size() != size)
        throw InvalidInput("table has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(size));
    Quandle q = Quandle::from_rows(rows);
    auto rep = check_axioms(q);
    if (!rep.is_rack)
        throw InvalidInput("not a rack: " + rep.failures.front());
    return q;
}

std::string quandle_to_json(const Quandle& q)
{
    nlohmann::json j;
    j["size"] = q.size();
    j["table"] = q.rows();
    return j.dump();
}

} // namespace qh
