#include "qh/nodes.hpp"
#include "qh/quandle.hpp"

#include "json.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <sstream>
#include <unordered_set>

namespace qh {

int node_weight(std::string_view word)
{
    int w = 0;
    for (char c : word) {
        switch (c) {
        case 'R':
            w += 1;
            break;
        case 'S':
            w += 2;
            break;
        case 'T':
            w += 3;
            break;
        default:
            throw InvalidInput(std::string("node symbol must be R, S or T, got '") + c + "'");
        }
    }
    return w;
}

bool is_node_word(std::string_view word)
{
    return std::all_of(word.begin(), word.end(), [](char c) { return c == 'R' || c == 'S' || c == 'T'; });
}

bool is_canonical(std::string_view word)
{
    if (!is_node_word(word))
        return false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i)
        if (word[i] == 'T' && word[i + 1] != 'R')
            return false;
    return true;
}

bool is_q_node(std::string_view word)
{
    if (!is_canonical(word))
        return false;
    if (!word.empty() && word.back() == 'R')
        return false;
    return word.find("RR") == std::string_view::npos;
}

namespace {

int pairs_before_r(std::string_view word, char sym)
{
    int seen = 0, v = 0;
    for (char c : word) {
        if (c == sym)
            ++seen;
        else if (c == 'R')
            v += seen;
    }
    return v;
}

void extend(std::string& cur, int remaining, bool q_only, std::vector<std::string>& out)
{
    if (remaining == 0) {
        if (!q_only || is_q_node(cur))
            out.push_back(cur);
        return;
    }
    for (char c : {'R', 'S', 'T'}) {
        const int w = c == 'R' ? 1 : c == 'S' ? 2 : 3;
        if (w > remaining)
            continue;
        if (!cur.empty() && cur.back() == 'T' && c != 'R')
            continue;
        if (q_only && c == 'R' && !cur.empty() && cur.back() == 'R')
            continue;
        cur.push_back(c);
        extend(cur, remaining - w, q_only, out);
        cur.pop_back();
    }
}

std::string sorted_letters(std::string s)
{
    std::sort(s.begin(), s.end());
    return s;
}

// Words reachable from `from` (reductions and equivalences), pruned by the
// S- and T-values of the target.
bool reaches(const std::string& from, const std::string& to, std::size_t cap)
{
    if (from == to)
        return true;
    const int vs = s_value(to), vt = t_value(to);
    std::unordered_set<std::string> seen{from};
    std::deque<std::string> queue{from};
    while (!queue.empty()) {
        std::string cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const char a = cur[i], b = cur[i + 1];
            const bool move = (b == 'R' && (a == 'S' || a == 'T')) || (a == 'S' && b == 'T') || (a == 'T' && b == 'S');
            if (!move)
                continue;
            std::string next = cur;
            std::swap(next[i], next[i + 1]);
            if (s_value(next) < vs || t_value(next) < vt)
                continue;
            if (next == to)
                return true;
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw ResourceCap("node comparison exceeded the search cap of " + std::to_string(cap));
                queue.push_back(std::move(next));
            }
        }
    }
    return false;
}

} // namespace

int s_value(std::string_view word) { return pairs_before_r(word, 'S'); }
int t_value(std::string_view word) { return pairs_before_r(word, 'T'); }

std::vector<std::string> enumerate_m_basis(int n)
{
    std::vector<std::string> out;
    if (n < 0)
        return out;
    std::string cur;
    extend(cur, n, false, out);
    return out;
}

std::vector<std::string> enumerate_q_nodes(int w)
{
    std::vector<std::string> out;
    if (w < 0)
        return out;
    std::string cur;
    extend(cur, w, true, out);
    return out;
}

const char* node_order_name(NodeOrder o)
{
    switch (o) {
    case NodeOrder::Greater:
        return "greater";
    case NodeOrder::Equivalent:
        return "equivalent";
    case NodeOrder::Less:
        return "less";
    default:
        return "incomparable";
    }
}

NodeOrder node_compare(const std::string& n, const std::string& k, std::size_t cap)
{
    for (const auto* w : {&n, &k}) {
        if (!is_node_word(*w))
            throw InvalidInput("not a node word: '" + *w + "'");
        if (w->find("TT") != std::string::npos)
            throw InvalidInput("node '" + *w + "' contains TT; such classes are excluded from the order");
    }
    if (sorted_letters(n) != sorted_letters(k))
        return NodeOrder::Incomparable;
    const bool down = reaches(n, k, cap);
    const bool up = reaches(k, n, cap);
    if (down && up)
        return NodeOrder::Equivalent;
    if (down)
        return NodeOrder::Greater;
    if (up)
        return NodeOrder::Less;
    return NodeOrder::Incomparable;
}

BettiRecursion betti_recursion(int max_n)
{
    if (max_n < 0)
        throw InvalidInput("negative degree");
    BettiRecursion r;
    r.c.assign(max_n + 1, 0);
    for (int k = 0; k <= max_n; ++k)
        for (int e = 0; e <= 1; ++e)
            if (k - 3 * e >= 0 && (k - 3 * e) % 2 == 0)
                ++r.c[k];
    r.rack.push_back(1);
    for (int n = 0; n <= max_n; ++n) {
        long long dim = 0;
        for (int k = 0; k <= n; ++k)
            dim += r.c[k] * r.rack[n - k];
        r.monoid.push_back(dim);
        r.rack.push_back(dim);
    }
    return r;
}

std::vector<long long> predicted_torsion_counts(const std::vector<long long>& betti)
{
    std::vector<long long> t;
    long long prev = 0;
    for (std::size_t n = 0; n < betti.size(); ++n) {
        const long long tn = betti[n] - 1 - prev;
        if (tn < 0)
            throw InvalidInput("Betti table inconsistent with free rank one in degree " + std::to_string(n));
        t.push_back(tn);
        prev = tn;
    }
    return t;
}

std::vector<long long> q_node_counts(int max_weight)
{
    std::vector<long long> out;
    for (int w = 0; w <= max_weight; ++w)
        out.push_back(static_cast<long long>(enumerate_q_nodes(w).size()));
    return out;
}

const char* betti_kind_name(BettiKind k)
{
    switch (k) {
    case BettiKind::RackSpace:
        return "rack_space";
    case BettiKind::MonoidM:
        return "monoid_m";
    case BettiKind::Quandle:
        return "quandle";
    default:
        return "integral_torsion_count";
    }
}

bool BettiTable::consistent() const { return mismatched_degrees().empty(); }

std::vector<int> BettiTable::mismatched_degrees() const
{
    std::vector<int> out;
    for (const auto& r : rows)
        if (r.predicted && r.computed && *r.predicted != *r.computed)
            out.push_back(r.degree);
    return out;
}

std::string BettiTable::to_json() const
{
    nlohmann::ordered_json j;
    j["kind"] = betti_kind_name(kind);
    j["p"] = p;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["degree"] = r.degree;
        row["predicted"] = r.predicted ? nlohmann::ordered_json(*r.predicted) : nlohmann::ordered_json(nullptr);
        row["computed"] = r.computed ? nlohmann::ordered_json(*r.computed) : nlohmann::ordered_json(nullptr);
        j["rows"].push_back(row);
    }
    return j.dump();
}

std::string BettiTable::to_text() const
{
    std::ostringstream os;
    auto cell = [](const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("N/A"); };
    os << std::left << std::setw(8) << "degree" << std::setw(11) << "predicted" << "computed\n";
    for (const auto& r : rows)
        os << std::left << std::setw(8) << r.degree << std::setw(11) << cell(r.predicted) << cell(r.computed) << '\n';
    return os.str();
}

} // namespace qh
