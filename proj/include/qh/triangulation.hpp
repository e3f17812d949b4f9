#pragma once

#include "qh/complex.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace qh {

/// A simplex (x; S_1; ...; S_k) of the triangulation T(X): a cube cell of
/// dimension n together with an ordered partition of its coordinates into k
/// nonempty blocks. blocks[j] is the (0-based) block holding coordinate j+1.
struct Simplex {
    std::uint32_t cell = 0;
    int n = 0;
    int k = 0;
    std::vector<std::uint8_t> blocks;

    bool operator==(const Simplex& o) const { return cell == o.cell && n == o.n && k == o.k && blocks == o.blocks; }
};

/// Δ-set faces and chains of T(X) for one X-set, up to cube dimension 7.
class Triangulation {
public:
    static constexpr int kMaxDimension = 7;
    using Chain = std::unordered_map<std::uint64_t, std::int64_t>;

    explicit Triangulation(std::shared_ptr<const XSet> xs);

    const XSet& xset() const { return *xs_; }

    /// Face δ_i, 0 <= i <= k.
    Simplex face(const Simplex& s, int i) const;
    std::uint64_t key(const Simplex& s) const;
    Simplex from_key(std::uint64_t key) const;

    /// The n-simplex σ(x), with S_α = {σ(α)}; perm holds σ(1..n) 1-based.
    Simplex permutation_simplex(std::uint32_t cell, int n, const std::vector<int>& perm) const;
    /// τ(x) = Σ_σ ε(σ) σ(x).
    Chain tau(std::uint32_t cell, int n) const;
    /// τ applied to a cube chain of dimension n.
    Chain tau(const SparseVector& chain, int n) const;
    /// Σ (-1)^i δ_i.
    Chain boundary(const Chain& c) const;
    /// Every simplex (x; S) with x of dimension n and S a k-partition.
    std::vector<Simplex> simplices(int n, int k) const;

private:
    std::shared_ptr<const XSet> xs_;
};

int permutation_sign(const std::vector<int>& perm);

struct TriangulationOptions {
    int max_dimension = 4;
    int trials = 4;
    std::uint64_t seed = 1;
    bool corrupt_tau = false; // flips one sign in τ; used to exercise failure reporting
};

struct TriangulationReport {
    std::size_t cube_relations = 0;  // δ^ε_i δ^ω_j = δ^ω_{j-1} δ^ε_i checks
    std::size_t delta_relations = 0; // δ_{j-1} δ_i = δ_i δ_j checks
    std::size_t chain_map_cells = 0; // ∂τ(x) = τ∂(x) checks
    std::size_t cup_cells = 0;       // τ(f ∪ g)(x) = (τf ∪ τg)(x) checks
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

/// Exhaustive face-relation and chain-map checks plus the cup comparison on
/// hashed pseudo-random cochains of T(X).
TriangulationReport triangulation_check(std::shared_ptr<const XSet> xs, const TriangulationOptions& opt);

} // namespace qh
