#pragma once

#include "qh/identities.hpp"

#include "json.hpp"

namespace qh {

/// Generators of the low-degree cohomology of M = B(G;X) for a dihedral quandle.
/// The `_self` cochains live on B(X;X); the others are their images under χ.
struct GeneratorSet {
    std::uint32_t p = 0;
    Cochain pone_self, a_self, b_self;
    Cochain pone, a, b;
    /// Multiple of P²𝟏 subtracted from the first choice of A, and the scale applied.
    std::uint32_t removed_p2 = 0;
    std::uint32_t scale = 1;
    /// Reference 2-cycle of B(X;X) on which A evaluates to 1, and its index among
    /// the homology representatives.
    std::size_t reference_index = 0;
    SparseVector reference_cycle;

    nlohmann::ordered_json to_json() const;
};

/// Picks A in H^2 outside the image of P, corrects it by P²𝟏 and a coboundary
/// until ψA vanishes on degenerate tuples, scales it to 1 on the reference cycle
/// and sets B = ΔA. Throws std::runtime_error when H^2 does not have dimension 2
/// or a step has no solution.
GeneratorSet identify_generators(const QuandleContext& ctx);

/// (-1)^(ij) F(μ(a ⊗ b)) for cycles a ∈ C_i(G;X), b ∈ C_j(G;X); rows index
/// `left`, columns `right`. Throws InvalidInput for non-cycles.
std::vector<std::vector<std::uint32_t>> coproduct_pairing(const QuandleContext& ctx, const Cochain& f,
                                                          const std::vector<SparseVector>& left, int i,
                                                          const std::vector<SparseVector>& right, int j);

/// Number of split degrees (i, j), i + j = deg F, at which the pairing of F
/// against the homology bases differs from that of F ⊗ 𝟏 + 𝟏 ⊗ F; the first
/// offending pair is described in *witness.
std::size_t primitivity_defects(const QuandleContext& ctx, const Cochain& f, std::string* witness = nullptr);

/// r = ½[(1;0) + (η(0);0)] in C_1(G;X).
SparseVector r_chain(const QuandleContext& ctx);
/// Σ_j (1; j, j+1) in C_2(G;X) (dihedral labelling).
SparseVector hs_chain(const QuandleContext& ctx);
/// (η(a); a) + (1; a) in C_1(G;X).
SparseVector hprime_chain(const QuandleContext& ctx, std::uint32_t a);

/// Class map c ↦ [μ(c ⊗ op)] from H_n to H_{n+k} of B(X), on the rack complex
/// (Variant::Rack) or the quandle quotient (Variant::Quandle).
struct OperationImage {
    int degree = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t rank = 0;
    bool injective() const { return rank == source_dim; }
};
OperationImage homology_operation(const QuandleContext& ctx, const SparseVector& op, int op_degree, int n,
                                  Variant variant);

/// Ring and coproduct checks on the generators: A² ≠ 0, A³ = 0, B² = 0, B
/// completes {A∪P𝟏, PA, P³𝟏} to a basis of H^3, P𝟏 and B primitive,
/// ⟨μA, r⊗r⟩ = 0, ψA a quandle class, χ commuting with Δ.
SuiteReport ring_suite(const QuandleContext& ctx, const GeneratorSet& gens);

/// {"degree", "xset", "p", "values": [[[y, x_1..x_k], v], ...]} over nonzero values.
nlohmann::ordered_json cochain_to_json(const Cochain& f);

} // namespace qh
