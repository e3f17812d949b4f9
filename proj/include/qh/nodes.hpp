#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qh {

/// Words over {R,S,T} with weights R=1, S=2, T=3.
int node_weight(std::string_view word);
bool is_node_word(std::string_view word);
/// Canonical: a concatenation of blocks S^m T^e R^j (e in {0,1}, j > 0 except
/// in the last block); equivalently the word has no TS and no TT.
bool is_canonical(std::string_view word);
/// Canonical, no RR, and not ending in R.
bool is_q_node(std::string_view word);
/// Number of pairs (i < j) with word[i] = S (resp. T) and word[j] = R.
int s_value(std::string_view word);
int t_value(std::string_view word);

/// Canonical words of weight n in lexicographic order.
std::vector<std::string> enumerate_m_basis(int n);
/// Q-nodes of weight w in lexicographic order.
std::vector<std::string> enumerate_q_nodes(int w);

enum class NodeOrder { Greater, Equivalent, Incomparable, Less };
const char* node_order_name(NodeOrder o);

/// Decides N >= K under the reductions SR -> RS, TR -> RT and the equivalence
/// ST <-> TS by breadth-first search. Inputs containing TT are rejected; the
/// search visits at most `cap` words per direction (ResourceCap beyond that).
NodeOrder node_compare(const std::string& n, const std::string& k, std::size_t cap = 1'000'000);

/// Betti numbers of the rack space of R_p and dims of H^n(M) from the
/// recursion b_{n+1} = sum_k c_k b_{n-k}, with c_k the number of (k', e),
/// e in {0,1}, solving 2k' + 3e = k.
struct BettiRecursion {
    std::vector<long long> c;      // c_0..c_max
    std::vector<long long> rack;   // b_0..b_{max+1}
    std::vector<long long> monoid; // dim H^0(M)..H^max(M)
};
BettiRecursion betti_recursion(int max_n);

/// Torsion counts t_n from dim H_n = 1 + t_n + t_{n-1}; throws InvalidInput
/// on a negative solution.
std::vector<long long> predicted_torsion_counts(const std::vector<long long>& betti);

/// Q-node counts for weights 0..max_weight.
std::vector<long long> q_node_counts(int max_weight);

enum class BettiKind { RackSpace, MonoidM, Quandle, IntegralTorsionCount };
const char* betti_kind_name(BettiKind k);

struct BettiRow {
    int degree = 0;
    std::optional<long long> predicted;
    std::optional<long long> computed;
};

struct BettiTable {
    std::uint32_t p = 0;
    BettiKind kind = BettiKind::RackSpace;
    std::vector<BettiRow> rows;

    /// True when every row holding both values has them equal.
    bool consistent() const;
    std::vector<int> mismatched_degrees() const;
    std::string to_json() const;
    /// Aligned columns: degree, predicted, computed (N/A when absent).
    std::string to_text() const;
};

} // namespace qh
