#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

/// Raised for structurally invalid input (bad tables, non-closed subsets, ...).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computation would exceed a configured size cap.
class ResourceCap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finite magma on {0..d-1} with table[a][b] = a*b. Axioms are not enforced
/// at construction; use check_axioms.
class Quandle {
public:
    Quandle() = default;
    Quandle(std::size_t size, std::vector<std::uint32_t> flat_table);
    static Quandle from_rows(const std::vector<std::vector<std::uint32_t>>& rows);

    std::size_t size() const { return size_; }
    std::uint32_t op(std::uint32_t a, std::uint32_t b) const { return table_[a * size_ + b]; }
    /// Inverse of the right translation by b: the unique c with c*b = a.
    std::uint32_t op_inv(std::uint32_t a, std::uint32_t b) const { return inv_table_[a * size_ + b]; }
    bool is_idempotent() const;
    const std::vector<std::uint32_t>& flat_table() const { return table_; }
    std::vector<std::vector<std::uint32_t>> rows() const;
    bool operator==(const Quandle& o) const { return size_ == o.size_ && table_ == o.table_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inv_table_; // empty unless every column is a bijection
};

struct AxiomReport {
    bool is_rack = false;
    bool is_quandle = false;
    std::vector<std::string> failures;
};

AxiomReport check_axioms(const Quandle& q);

Quandle build_dihedral(std::uint32_t p);
Quandle build_alexander(std::uint32_t n, std::int64_t t);
Quandle build_trivial(std::uint32_t d);
/// Disjoint union Z/k ∪ Z/m: a*b = a within a part, a+1 (mod the part size) across parts.
Quandle build_two_part_union(std::uint32_t k, std::uint32_t m);

/// Finite group given by its multiplication table. When built from permutations,
/// perm(g) holds the one-line notation and (g·h)(a) = h(g(a)).
class FiniteGroup {
public:
    FiniteGroup() = default;
    FiniteGroup(std::size_t order, std::vector<std::uint32_t> mul);
    /// Group of the given permutations (must be closed under composition).
    static FiniteGroup from_permutations(std::vector<std::vector<std::uint32_t>> perms);

    std::size_t order() const { return order_; }
    std::uint32_t mul(std::uint32_t g, std::uint32_t h) const { return mul_[g * order_ + h]; }
    std::uint32_t inv(std::uint32_t g) const { return inv_[g]; }
    std::uint32_t identity() const { return identity_; }
    bool has_permutations() const { return !perms_.empty(); }
    const std::vector<std::uint32_t>& perm(std::uint32_t g) const { return perms_[g]; }
    /// Index of a permutation, or -1 when absent.
    std::int64_t index_of(const std::vector<std::uint32_t>& perm) const;
    bool is_abelian() const;
    /// Exhaustive check of associativity, identity and inverses.
    bool check_axioms(std::string* witness = nullptr) const;

private:
    std::size_t order_ = 0;
    std::vector<std::uint32_t> mul_;
    std::vector<std::uint32_t> inv_;
    std::uint32_t identity_ = 0;
    std::vector<std::vector<std::uint32_t>> perms_;
};

FiniteGroup symmetric_group(std::uint32_t n);

/// Conjugation quandle on a conjugation-closed subset: a*b = b^-1 a b.
/// Element i of the result is subset[i].
Quandle build_conjugation(const FiniteGroup& g, const std::vector<std::uint32_t>& subset);

/// A rack together with Inn(X), η(b) = σ_b and ρ(a,g) = g(a).
struct AugmentedQuandle {
    Quandle x;
    FiniteGroup g;
    std::vector<std::uint32_t> eta;    // X -> G
    std::vector<std::uint32_t> action; // X x G -> X, action[a*|G| + g]

    std::uint32_t rho(std::uint32_t a, std::uint32_t g_idx) const { return action[a * g.order() + g_idx]; }
    bool check(std::string* witness = nullptr) const;
};

constexpr std::size_t kDefaultGroupCap = 10000;

AugmentedQuandle inner_group(const Quandle& q, std::size_t order_cap = kDefaultGroupCap);

struct Classification {
    bool connected = false;
    bool faithful = false;
    bool regular = false;
    std::size_t stabilizer_order = 0;
    std::vector<std::vector<std::uint32_t>> orbits;
};

Classification classify(const AugmentedQuandle& aug);
Classification classify(const Quandle& q);

enum class XSetKind { Point, SelfAction, GroupAction };

std::string xset_kind_name(XSetKind k);

/// A finite right X-set (Y, ⋆) with a compatible right action of G = Inn(X).
class XSet {
public:
    XSet(std::shared_ptr<const AugmentedQuandle> aug, XSetKind kind);

    XSetKind kind() const { return kind_; }
    std::size_t y_size() const { return y_size_; }
    std::size_t x_size() const { return aug_->x.size(); }
    const Quandle& quandle() const { return aug_->x; }
    const AugmentedQuandle& aug() const { return *aug_; }
    std::shared_ptr<const AugmentedQuandle> aug_ptr() const { return aug_; }

    std::uint32_t star(std::uint32_t y, std::uint32_t x) const { return star_[y * x_size() + x]; }
    /// Right action y·g of the augmentation group.
    std::uint32_t act(std::uint32_t y, std::uint32_t g) const { return act_[y * aug_->g.order() + g]; }
    bool check(std::string* witness = nullptr) const;

private:
    std::shared_ptr<const AugmentedQuandle> aug_;
    XSetKind kind_;
    std::size_t y_size_ = 0;
    std::vector<std::uint32_t> star_;
    std::vector<std::uint32_t> act_;
};

XSet make_xset(std::shared_ptr<const AugmentedQuandle> aug, XSetKind kind);

/// Reads {"size": d, "table": [[...]]}; throws InvalidInput with a witness when
/// the table is out of range or violates the rack axioms.
Quandle load_quandle_json(std::istream& in);
std::string quandle_to_json(const Quandle& q);

} // namespace qh
