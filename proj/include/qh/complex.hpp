#pragma once

#include "qh/quandle.hpp"
#include "qh/sparse.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace qh {

/// Index arithmetic for the lexicographic basis Y x X^n:
/// index = y*|X|^n + sum x_i |X|^(n-i).
class TupleCodec {
public:
    TupleCodec(std::size_t y_size, std::size_t x_size, int n);

    int degree() const { return n_; }
    std::size_t size() const { return y_size_ * stride_; }
    std::uint32_t encode(std::uint32_t y, const std::uint32_t* x) const;
    void decode(std::uint32_t idx, std::uint32_t& y, std::uint32_t* x) const;
    std::vector<std::uint32_t> decode(std::uint32_t idx) const; // y followed by x_1..x_n

private:
    std::size_t y_size_, x_size_;
    int n_;
    std::size_t stride_; // |X|^n
};

constexpr std::size_t kDefaultCellCap = 10'000'000;

/// Cell cap from QH_CELL_CAP when set, otherwise the default.
std::size_t cell_cap_from_env();

/// |Y|*|X|^n, throwing ResourceCap when it exceeds cap.
std::size_t checked_cell_count(const XSet& xs, int n, std::size_t cap);

/// Cell index of the face d^eps_i (i is 1-based) of a cell of degree n.
std::uint32_t face_cell(const XSet& xs, int n, std::uint32_t cell, int i, int eps);

bool is_degenerate_tuple(const std::uint32_t* x, int n);

enum class Variant { Full, Rack, Degenerate, Quandle };

/// Degree-n piece of C_*(Y;X): basis plus the boundary maps into degree n-1.
/// For the Degenerate and Quandle variants, `cells` lists the full-basis indices
/// of the columns and `row_cells` those of the rows.
struct ComplexSlice {
    std::shared_ptr<const XSet> xset;
    int degree = 0;
    Variant variant = Variant::Full;
    Ring ring;
    std::vector<std::uint32_t> cells;
    std::vector<std::uint32_t> row_cells;
    SparseMatrix d0, d1, d;

    std::size_t size() const { return d.cols(); }
};

ComplexSlice boundary_matrices(std::shared_ptr<const XSet> xs, int n, Ring ring,
                               std::size_t cell_cap = kDefaultCellCap);

/// Restricts a rack-complex slice to the degenerate subcomplex or projects it
/// onto the quandle quotient.
ComplexSlice quandle_quotient(const ComplexSlice& full, Variant which);

/// Slices for degrees 0..max_degree.
std::vector<ComplexSlice> build_complex(std::shared_ptr<const XSet> xs, int max_degree, Ring ring,
                                        Variant variant = Variant::Full, std::size_t cell_cap = kDefaultCellCap);

/// psi: C_n(point) -> C_{n-1}(X;X), (x_1..x_n) -> (-1)^(n-1) (x_1; x_2..x_n).
SparseMatrix psi_matrix(const XSet& point, const XSet& self, int n, Ring ring);
/// P: C_d(X;X) -> C_{d-1}(X;X), (y; x_1..x_d) -> (-1)^(d+1) (x_1; x_2..x_d).
SparseMatrix p_matrix(const XSet& self, int d, Ring ring);
/// D: C_d(X;X) -> C_{d+1}(X;X), (y; x_1..x_d) -> (-1)^d (y; y, x_1..x_d). Quandles only.
SparseMatrix d_matrix(const XSet& self, int d, Ring ring);
/// chi: C_n(G;X) -> C_n(X;X), (g; x) -> (rho(0,g); x).
SparseMatrix chi_matrix(const XSet& group, const XSet& self, int n, Ring ring);

/// mu((y; x_1..x_m) (x) (g; x'_1..x'_k)) = (y.g; rho(x_1,g)..rho(x_m,g), x'_1..x'_k).
std::uint32_t mu_cell(const XSet& y, std::uint32_t a, int m, const XSet& g, std::uint32_t b, int k);
SparseVector mu_chain(const XSet& y, const SparseVector& a, int m, const XSet& g, const SparseVector& b, int k);
/// The map a -> mu(a (x) b) from C_m(Y;X) to C_{m+k}(Y;X).
SparseMatrix mu_right_matrix(const XSet& y, int m, const XSet& g, const SparseVector& b, int k);

struct ChainMapWitness {
    std::size_t degree;
    std::size_t column;
};

/// f[i] maps source degree i to target degree i+shift; src_d[i] and dst_d[i]
/// are the boundaries out of the corresponding degrees (index 0 unused).
/// Checks dst_d[i] * f[i] == sign * f[i-1] * src_d[i] for i >= 1.
std::optional<ChainMapWitness> verify_chain_map(const std::vector<SparseMatrix>& f,
                                                const std::vector<SparseMatrix>& src_d,
                                                const std::vector<SparseMatrix>& dst_d, int sign = 1);

} // namespace qh
