#include "doctest.h"
#include "qh/nodes.hpp"
#include "qh/quandle.hpp"
#include "qh/rng.hpp"

#include <regex>
#include <set>

using namespace qh;

namespace {

// Brute force: every word up to length n, kept when its weight is n and it
// parses as blocks S^m T^e R^j with j > 0 except in the last block.
std::vector<std::string> brute_force_words(int n, bool q_only)
{
    static const std::regex block_grammar("^((S*T?R+)*(S*T?))$");
    std::vector<std::string> out;
    std::vector<std::string> layer{""};
    for (int len = 0; len <= n; ++len) {
        std::vector<std::string> next;
        for (const auto& w : layer) {
            int weight = 0;
            for (char c : w)
                weight += c == 'R' ? 1 : c == 'S' ? 2 : 3;
            if (weight == n && std::regex_match(w, block_grammar)) {
                bool ok = true;
                if (q_only)
                    ok = w.find("RR") == std::string::npos && (w.empty() || w.back() != 'R');
                if (ok)
                    out.push_back(w);
            }
            for (char c : {'R', 'S', 'T'})
                next.push_back(w + c);
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string random_word(SplitMix64& rng, int len)
{
    std::string w;
    while (static_cast<int>(w.size()) < len) {
        const char c = "RST"[rng.below(3)];
        if (c == 'T' && !w.empty() && w.back() == 'T')
            continue;
        w.push_back(c);
    }
    return w;
}

} // namespace

TEST_CASE("canonical words agree with the block grammar oracle")
{
    for (int n = 0; n <= 9; ++n) {
        auto words = enumerate_m_basis(n);
        std::sort(words.begin(), words.end());
        CHECK(words == brute_force_words(n, false));
        auto q = enumerate_q_nodes(n);
        std::sort(q.begin(), q.end());
        CHECK(q == brute_force_words(n, true));
    }
}

TEST_CASE("weight three basis")
{
    auto words = enumerate_m_basis(3);
    CHECK(std::set<std::string>(words.begin(), words.end()) == std::set<std::string>{"T", "SR", "RS", "RRR"});
    CHECK(enumerate_m_basis(5).size() == 12);
    CHECK(enumerate_m_basis(6).size() == 21);
    CHECK(node_weight("STR") == 6);
    CHECK_THROWS_AS(node_weight("SX"), InvalidInput);
}

TEST_CASE("recursion matches enumeration")
{
    auto r = betti_recursion(12);
    CHECK(std::vector<long long>(r.c.begin(), r.c.begin() + 8) == std::vector<long long>{1, 0, 1, 1, 1, 1, 1, 1});
    CHECK(std::vector<long long>(r.rack.begin(), r.rack.begin() + 7) ==
          std::vector<long long>{1, 1, 1, 2, 4, 7, 12});
    for (int n = 0; n <= 12; ++n) {
        CHECK(r.monoid[n] == static_cast<long long>(enumerate_m_basis(n).size()));
        CHECK(r.rack[n + 1] == r.monoid[n]);
    }
}

TEST_CASE("q-node counts follow the delayed recurrence")
{
    auto q = q_node_counts(14);
    CHECK(std::vector<long long>(q.begin(), q.begin() + 8) == std::vector<long long>{1, 0, 1, 2, 2, 3, 5, 7});
    for (int d = 3; d <= 14; ++d)
        CHECK(q[d] == q[d - 1] + q[d - 3]);
    CHECK(enumerate_q_nodes(0) == std::vector<std::string>{""});
    CHECK(enumerate_q_nodes(2) == std::vector<std::string>{"S"});
}

TEST_CASE("torsion counts")
{
    auto t = predicted_torsion_counts({1, 1, 1, 2, 4, 7, 12});
    CHECK(t == std::vector<long long>{0, 0, 0, 1, 2, 4, 7});
    CHECK_THROWS_AS(predicted_torsion_counts({1, 1, 0}), InvalidInput);
}

TEST_CASE("node comparison examples")
{
    CHECK(node_compare("SR", "RS") == NodeOrder::Greater);
    CHECK(node_compare("RS", "SR") == NodeOrder::Less);
    CHECK(node_compare("ST", "TS") == NodeOrder::Equivalent);
    CHECK(node_compare("S", "T") == NodeOrder::Incomparable);
    CHECK(node_compare("RRS", "RRS") == NodeOrder::Equivalent);
    CHECK(node_compare("TRS", "RST") == NodeOrder::Greater);
    CHECK_THROWS_AS(node_compare("TT", "T"), InvalidInput);
}

TEST_CASE("node comparison is a partial order on equivalence classes")
{
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        // permutations of one multiset so that comparisons are informative
        std::string base = random_word(rng, 5);
        auto shuffle = [&](std::string w) {
            for (std::size_t i = w.size(); i > 1; --i)
                std::swap(w[i - 1], w[rng.below(i)]);
            return w;
        };
        std::string a = shuffle(base), b = shuffle(base), c = shuffle(base);
        if (a.find("TT") != std::string::npos || b.find("TT") != std::string::npos || c.find("TT") != std::string::npos)
            continue;
        auto ab = node_compare(a, b), ba = node_compare(b, a);
        if (ab == NodeOrder::Greater)
            CHECK(ba == NodeOrder::Less);
        if (ab == NodeOrder::Equivalent)
            CHECK(ba == NodeOrder::Equivalent);
        const bool a_ge_b = ab == NodeOrder::Greater || ab == NodeOrder::Equivalent;
        auto bc = node_compare(b, c);
        const bool b_ge_c = bc == NodeOrder::Greater || bc == NodeOrder::Equivalent;
        if (a_ge_b && b_ge_c) {
            auto ac = node_compare(a, c);
            CHECK((ac == NodeOrder::Greater || ac == NodeOrder::Equivalent));
        }
        if (ab == NodeOrder::Greater)
            CHECK((s_value(a) > s_value(b) || t_value(a) > t_value(b)));
    }
}

TEST_CASE("betti table output")
{
    BettiTable t;
    t.p = 3;
    t.rows = {{0, 1, 1}, {1, 1, std::nullopt}, {2, 2, 3}};
    CHECK_FALSE(t.consistent());
    CHECK(t.mismatched_degrees() == std::vector<int>{2});
    CHECK(t.to_text() == "degree  predicted  computed\n0       1          1\n1       1          N/A\n2       2          3\n");
    CHECK(t.to_json() ==
          R"({"kind":"rack_space","p":3,"rows":[{"degree":0,"predicted":1,"computed":1},{"degree":1,"predicted":1,"computed":null},{"degree":2,"predicted":2,"computed":3}]})");
}
