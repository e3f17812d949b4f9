#include "qh/triangulation.hpp"
#include "qh/cochain.hpp"
#include "qh/rng.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qh {

namespace {

constexpr std::uint64_t kHashPrime = 2147483647ULL;

// Removes the coordinates with mask[j] set by the face δ^eps, highest index first.
void remove_coordinates(const XSet& xs, std::uint32_t& y, std::vector<std::uint32_t>& x,
                        const std::vector<bool>& mask, int eps)
{
    const auto& q = xs.quandle();
    for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j) {
        if (!mask[j])
            continue;
        const std::uint32_t xj = x[j];
        if (eps == 1) {
            y = xs.star(y, xj);
            for (int l = 0; l < j; ++l)
                x[l] = q.op(x[l], xj);
        }
        x.erase(x.begin() + j);
    }
}

std::string describe(const Simplex& s)
{
    std::ostringstream os;
    os << "(cell " << s.cell << ", n=" << s.n << ", blocks";
    for (auto b : s.blocks)
        os << ' ' << int(b);
    os << ')';
    return os.str();
}

std::uint64_t hashed_value(std::uint64_t key, std::uint64_t seed)
{
    SplitMix64 g(key * 0x9e3779b97f4a7c15ULL ^ seed);
    return g.next() % kHashPrime;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kHashPrime; }

std::uint64_t signed_add(std::uint64_t acc, std::uint64_t v, int sign)
{
    return sign > 0 ? (acc + v) % kHashPrime : (acc + kHashPrime - v) % kHashPrime;
}

} // namespace

int permutation_sign(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j])
                ++inv;
    return inv % 2 ? -1 : 1;
}

Triangulation::Triangulation(std::shared_ptr<const XSet> xs) : xs_(std::move(xs)) {}

std::uint64_t Triangulation::key(const Simplex& s) const
{
    std::uint64_t k = std::uint64_t(s.cell) << 32 | std::uint64_t(s.n) << 29 | std::uint64_t(s.k) << 26;
    for (int j = 0; j < s.n; ++j)
        k |= std::uint64_t(s.blocks[j]) << (3 * j);
    return k;
}

Simplex Triangulation::from_key(std::uint64_t key) const
{
    Simplex s;
    s.cell = static_cast<std::uint32_t>(key >> 32);
    s.n = static_cast<int>(key >> 29 & 7);
    s.k = static_cast<int>(key >> 26 & 7);
    s.blocks.resize(s.n);
    for (int j = 0; j < s.n; ++j)
        s.blocks[j] = static_cast<std::uint8_t>(key >> (3 * j) & 7);
    return s;
}

Simplex Triangulation::face(const Simplex& s, int i) const
{
    if (i < 0 || i > s.k || s.k == 0)
        throw InvalidInput("simplex face index out of range");
    Simplex out;
    out.k = s.k - 1;
    if (i > 0 && i < s.k) {
        out.cell = s.cell;
        out.n = s.n;
        out.blocks = s.blocks;
        for (auto& b : out.blocks)
            if (b >= i)
                --b;
        return out;
    }
    const XSet& xs = *xs_;
    TupleCodec src(xs.y_size(), xs.x_size(), s.n);
    std::uint32_t y;
    std::vector<std::uint32_t> x(s.n);
    src.decode(s.cell, y, x.data());
    const int removed = i == 0 ? 0 : s.k - 1;
    std::vector<bool> mask(s.n);
    for (int j = 0; j < s.n; ++j)
        mask[j] = s.blocks[j] == removed;
    remove_coordinates(xs, y, x, mask, i == 0 ? 1 : 0);
    for (int j = 0; j < s.n; ++j)
        if (!mask[j])
            out.blocks.push_back(static_cast<std::uint8_t>(i == 0 ? s.blocks[j] - 1 : s.blocks[j]));
    out.n = static_cast<int>(x.size());
    out.cell = TupleCodec(xs.y_size(), xs.x_size(), out.n).encode(y, x.data());
    return out;
}

Simplex Triangulation::permutation_simplex(std::uint32_t cell, int n, const std::vector<int>& perm) const
{
    Simplex s;
    s.cell = cell;
    s.n = n;
    s.k = n;
    s.blocks.assign(n, 0);
    for (int a = 0; a < n; ++a)
        s.blocks[perm[a] - 1] = static_cast<std::uint8_t>(a);
    return s;
}

Triangulation::Chain Triangulation::tau(std::uint32_t cell, int n) const
{
    if (n > kMaxDimension)
        throw InvalidInput("triangulation supports cube dimension at most 7");
    Chain out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do
        out[key(permutation_simplex(cell, n, perm))] += permutation_sign(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

Triangulation::Chain Triangulation::tau(const SparseVector& chain, int n) const
{
    Chain out;
    for (const auto& [cell, c] : chain.entries())
        for (const auto& [k, v] : tau(cell, n))
            out[k] += c * v;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Triangulation::Chain Triangulation::boundary(const Chain& c) const
{
    Chain out;
    for (const auto& [k, v] : c) {
        Simplex s = from_key(k);
        for (int i = 0; i <= s.k; ++i)
            out[key(face(s, i))] += (i % 2 ? -v : v);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<Simplex> Triangulation::simplices(int n, int k) const
{
    std::vector<Simplex> out;
    if (n > kMaxDimension || k > n || (k == 0 && n > 0))
        return out;
    const std::size_t cells = TupleCodec(xs_->y_size(), xs_->x_size(), n).size();
    // surjections [n] -> [k]
    std::vector<std::vector<std::uint8_t>> parts;
    std::vector<std::uint8_t> b(n, 0);
    for (;;) {
        std::vector<bool> hit(k, false);
        for (auto v : b)
            hit[v] = true;
        if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }))
            parts.push_back(b);
        int j = n - 1;
        while (j >= 0 && b[j] == k - 1)
            b[j--] = 0;
        if (j < 0)
            break;
        ++b[j];
    }
    if (n == 0)
        parts.assign(1, {});
    for (std::uint32_t c = 0; c < cells; ++c)
        for (const auto& part : parts)
            out.push_back(Simplex{c, n, k, part});
    return out;
}

TriangulationReport triangulation_check(std::shared_ptr<const XSet> xs, const TriangulationOptions& opt)
{
    if (opt.max_dimension > 5)
        throw InvalidInput("triangulation checks support ambient dimension at most 5");
    Triangulation tri(xs);
    TriangulationReport rep;
    auto fail = [&](std::string msg) {
        if (rep.failures.size() < 20)
            rep.failures.push_back(std::move(msg));
    };

    // cube face relations
    for (int n = 2; n <= opt.max_dimension; ++n) {
        const std::size_t cells = checked_cell_count(*xs, n, kDefaultCellCap);
        for (std::uint32_t c = 0; c < cells; ++c)
            for (int j = 2; j <= n; ++j)
                for (int i = 1; i < j; ++i)
                    for (int e = 0; e < 2; ++e)
                        for (int w = 0; w < 2; ++w) {
                            ++rep.cube_relations;
                            auto lhs = face_cell(*xs, n - 1, face_cell(*xs, n, c, j, w), i, e);
                            auto rhs = face_cell(*xs, n - 1, face_cell(*xs, n, c, i, e), j - 1, w);
                            if (lhs != rhs)
                                fail("cube relation fails at cell " + std::to_string(c) + " n=" + std::to_string(n));
                        }
    }

    // Δ-set relations
    for (int n = 1; n <= opt.max_dimension; ++n)
        for (int k = 2; k <= n; ++k)
            for (const auto& s : tri.simplices(n, k))
                for (int j = 1; j <= k; ++j)
                    for (int i = 0; i < j; ++i) {
                        ++rep.delta_relations;
                        if (!(tri.face(tri.face(s, j), i) == tri.face(tri.face(s, i), j - 1)))
                            fail("simplicial relation d" + std::to_string(i) + "d" + std::to_string(j) + " fails at " +
                                 describe(s));
                    }

    // τ is a chain map
    for (int n = 1; n <= opt.max_dimension; ++n) {
        const ComplexSlice slice = boundary_matrices(xs, n, Ring::integers());
        for (std::uint32_t c = 0; c < slice.size(); ++c) {
            ++rep.chain_map_cells;
            Triangulation::Chain t = tri.tau(c, n);
            if (opt.corrupt_tau && n >= 2 && c == 0)
                t.begin()->second = -t.begin()->second;
            if (tri.boundary(t) != tri.tau(slice.d.column(c), n - 1))
                fail("tau fails to commute with the boundary at cell " + std::to_string(c) + " n=" + std::to_string(n));
        }
    }

    // cup products agree under τ
    auto eval = [&](std::uint64_t seed, const Simplex& s) { return hashed_value(tri.key(s), seed); };
    auto tau_dual = [&](std::uint64_t seed, std::uint32_t cell, int n) {
        std::uint64_t acc = 0;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        do
            acc = signed_add(acc, eval(seed, tri.permutation_simplex(cell, n, perm)), permutation_sign(perm));
        while (std::next_permutation(perm.begin(), perm.end()));
        return acc;
    };
    for (int n = 1; n <= opt.max_dimension; ++n) {
        const std::size_t cells = checked_cell_count(*xs, n, kDefaultCellCap);
        TupleCodec cn(xs->y_size(), xs->x_size(), n);
        for (int k = 0; k <= n; ++k) {
            const int m = n - k;
            const int km_sign = (k * m) % 2 ? -1 : 1;
            const auto subsets = subsets_of_size(n, m);
            for (int t = 0; t < opt.trials; ++t) {
                const std::uint64_t fs = trial_seed(opt.seed, 2 * (t * 64 + n * 8 + k));
                const std::uint64_t gs = trial_seed(opt.seed, 2 * (t * 64 + n * 8 + k) + 1);
                for (std::uint32_t c = 0; c < cells; ++c) {
                    ++rep.cup_cells;
                    // Alexander-Whitney side, evaluated on τ(x)
                    std::uint64_t lhs = 0;
                    std::vector<int> perm(n);
                    std::iota(perm.begin(), perm.end(), 1);
                    do {
                        Simplex front = tri.permutation_simplex(c, n, perm), back = front;
                        for (int r = 0; r < m; ++r)
                            front = tri.face(front, front.k);
                        for (int r = 0; r < k; ++r)
                            back = tri.face(back, 0);
                        lhs = signed_add(lhs, mulmod(eval(fs, front), eval(gs, back)),
                                         permutation_sign(perm) * km_sign);
                    } while (std::next_permutation(perm.begin(), perm.end()));
                    // cubical side with τ-pulled-back factors
                    std::uint64_t rhs = 0;
                    std::uint32_t y;
                    std::vector<std::uint32_t> x0(n);
                    cn.decode(c, y, x0.data());
                    for (const auto& a : subsets) {
                        std::vector<bool> in_a(n, false);
                        for (int v : a)
                            in_a[v - 1] = true;
                        std::vector<bool> in_b(n);
                        for (int j = 0; j < n; ++j)
                            in_b[j] = !in_a[j];
                        std::uint32_t ya = y, yb = y;
                        std::vector<std::uint32_t> xa = x0, xb = x0;
                        remove_coordinates(*xs, ya, xa, in_a, 0);
                        remove_coordinates(*xs, yb, xb, in_b, 1);
                        const auto la = TupleCodec(xs->y_size(), xs->x_size(), k).encode(ya, xa.data());
                        const auto lb = TupleCodec(xs->y_size(), xs->x_size(), m).encode(yb, xb.data());
                        rhs = signed_add(rhs, mulmod(tau_dual(fs, la, k), tau_dual(gs, lb, m)),
                                         subset_sign(a, n) * km_sign);
                    }
                    if (lhs != rhs)
                        fail("cup products disagree under tau at cell " + std::to_string(c) + " n=" +
                             std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }
    }
    return rep;
}

} // namespace qh
