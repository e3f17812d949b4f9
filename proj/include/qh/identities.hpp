#pragma once

#include "qh/context.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

struct IdentityResult {
    std::string name;
    std::string space; // "point", "self", "group" or empty
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string witness; // first failure
    std::optional<std::uint64_t> replay_seed;

    bool ok() const { return failures == 0; }
};

struct SuiteReport {
    std::string suite;
    std::vector<IdentityResult> results;

    bool ok() const;
    std::size_t failures() const;
    nlohmann::ordered_json to_json() const;
};

/// Test hooks that corrupt one operator so that failure reporting can be exercised.
enum class Fault { None, Psi, P, D, Cup, Tau, Bockstein };
Fault parse_fault(const std::string& name);
const char* fault_name(Fault f);

struct SuiteOptions {
    int max_degree = 4;
    int trials = 100;
    std::uint64_t seed = 1;
    Fault fault = Fault::None;
    unsigned threads = 0; // 0: hardware concurrency
};

/// ∂⁰∂⁰, ∂¹∂¹, ∂⁰∂¹+∂¹∂⁰, ∂∂ on all three spaces over Z up to max_degree;
/// ψ, P, D, χ chain maps; PD = 1; degenerate closure; μ Leibniz and associativity.
SuiteReport chain_suite(const QuandleContext& ctx, const SuiteOptions& opt);

/// Cochain identities of the cup product and the operators P, D, Q, Λ, ψ, μ.
/// max_degree bounds k + m for the two factors.
SuiteReport cup_suite(const QuandleContext& ctx, const SuiteOptions& opt);

/// Face relations, τ chain map and τ(f ∪ g) = τf ∪ τg (ambient dimension ≤ min(max_degree, 5)).
SuiteReport triangulation_suite(const QuandleContext& ctx, const SuiteOptions& opt);

/// Bockstein checks on the rack space: Δ² = 0, Δ(r^n) = 0, independence of the
/// representative, and exactness of the reduced Bockstein complex for n < max_degree.
SuiteReport bockstein_suite(const QuandleContext& ctx, const SuiteOptions& opt);

/// The reduced Bockstein matrices Δ̃_n : H_n -> H_{n-1} (class of (0,..,0) removed)
/// and the dims of H_n(BX; F_p), for n = 0..max_degree.
struct BocksteinData {
    std::vector<std::size_t> dims;
    std::vector<std::size_t> reduced_ranks; // rank of Δ̃_n, index n (0 for n = 0)
};
BocksteinData bockstein_data(const QuandleContext& ctx, int max_degree);

} // namespace qh
