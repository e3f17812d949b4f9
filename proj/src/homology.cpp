#include "qh/homology.hpp"

#include "json.hpp"

namespace qh {

std::string to_json(const HomologyResult& h)
{
    nlohmann::ordered_json j;
    j["degree"] = h.degree;
    j["rank"] = h.free_rank;
    nlohmann::ordered_json t = nlohmann::ordered_json::array();
    for (const auto& d : h.torsion) {
        if (d <= BigInt(INT64_MAX))
            t.push_back(static_cast<std::int64_t>(d));
        else
            t.push_back(d.str());
    }
    j["torsion"] = t;
    j["field_dim"] = h.field_dim;
    return j.dump();
}

const SparseMatrix& slice_boundary(const std::vector<ComplexSlice>& slices, int n)
{
    if (n < 0 || static_cast<std::size_t>(n) >= slices.size())
        throw InvalidInput("degree " + std::to_string(n) + " not available in the complex");
    return slices[n].d;
}

std::vector<HomologyResult> homology_fp(const std::vector<ComplexSlice>& slices, int max_degree, bool with_reps)
{
    if (static_cast<std::size_t>(max_degree) + 1 >= slices.size())
        throw InvalidInput("homology up to degree " + std::to_string(max_degree) + " needs slices up to " +
                           std::to_string(max_degree + 1));
    std::vector<std::size_t> ranks(max_degree + 2, 0);
    if (!with_reps)
        for (int n = 1; n <= max_degree + 1; ++n)
            ranks[n] = rank_fp(slices[n].d);
    std::vector<HomologyResult> out;
    for (int n = 0; n <= max_degree; ++n) {
        HomologyResult h;
        h.degree = n;
        if (with_reps) {
            ClassSpace cs = homology_space(slices, n);
            h.field_dim = cs.dim();
            h.reps = cs.reps();
        } else {
            h.field_dim = slices[n].size() - ranks[n] - ranks[n + 1];
        }
        h.free_rank = h.field_dim;
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HomologyResult> cohomology_fp(const std::vector<ComplexSlice>& slices, int max_degree)
{
    if (static_cast<std::size_t>(max_degree) + 1 >= slices.size())
        throw InvalidInput("cohomology needs slices up to degree " + std::to_string(max_degree + 1));
    std::vector<std::size_t> ranks(max_degree + 2, 0);
    for (int n = 1; n <= max_degree + 1; ++n)
        ranks[n] = rank_fp(slices[n].d.transpose());
    std::vector<HomologyResult> out;
    for (int n = 0; n <= max_degree; ++n) {
        HomologyResult h;
        h.degree = n;
        h.field_dim = slices[n].size() - ranks[n + 1] - ranks[n];
        h.free_rank = h.field_dim;
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<HomologyResult> homology_z(const std::vector<ComplexSlice>& slices, int max_degree)
{
    if (static_cast<std::size_t>(max_degree) + 1 >= slices.size())
        throw InvalidInput("homology needs slices up to degree " + std::to_string(max_degree + 1));
    std::vector<SmithResult> snf(max_degree + 2);
    for (int n = 1; n <= max_degree + 1; ++n) {
        if (slices[n].ring.is_field())
            throw InvalidInput("integral homology needs integer slices");
        snf[n] = smith_normal_form(slices[n].d);
    }
    std::vector<HomologyResult> out;
    for (int n = 0; n <= max_degree; ++n) {
        HomologyResult h;
        h.degree = n;
        h.free_rank = slices[n].size() - snf[n].rank() - snf[n + 1].rank();
        h.torsion = snf[n + 1].torsion();
        h.field_dim = h.free_rank;
        out.push_back(std::move(h));
    }
    return out;
}

namespace {

SparseMatrix empty_map(std::size_t rows, std::size_t cols, Ring ring) { return SparseMatrix(rows, cols, ring); }

} // namespace

ClassSpace homology_space(const std::vector<ComplexSlice>& slices, int n, const std::vector<SparseVector>& preferred)
{
    const SparseMatrix& out = slice_boundary(slices, n);
    if (static_cast<std::size_t>(n) + 1 < slices.size())
        return ClassSpace(slices[n + 1].d, out, preferred);
    throw InvalidInput("homology in degree " + std::to_string(n) + " needs the next slice");
}

ClassSpace cohomology_space(const std::vector<ComplexSlice>& slices, int n,
                            const std::vector<SparseVector>& preferred)
{
    if (static_cast<std::size_t>(n) + 1 >= slices.size())
        throw InvalidInput("cohomology in degree " + std::to_string(n) + " needs the next slice");
    SparseMatrix out = slices[n + 1].d.transpose();
    SparseMatrix in = n == 0 ? empty_map(slices[0].size(), 0, slices[0].ring) : slices[n].d.transpose();
    return ClassSpace(in, out, preferred);
}

SparseVector bockstein_chain(const SparseVector& cycle, const SparseMatrix& d_z, std::uint32_t p)
{
    if (d_z.ring().is_field())
        throw InvalidInput("Bockstein needs the integral boundary");
    SparseVector lifted = SparseVector::from_pairs(
        std::vector<SparseVector::Entry>(cycle.entries().begin(), cycle.entries().end()), Ring::integers());
    SparseVector b = d_z.apply(lifted);
    std::vector<SparseVector::Entry> out;
    for (const auto& [i, v] : b.entries()) {
        if (v % static_cast<std::int64_t>(p) != 0)
            throw InvalidInput("Bockstein input is not a cycle mod p");
        out.emplace_back(i, v / static_cast<std::int64_t>(p));
    }
    return SparseVector::from_pairs(std::move(out), Ring::prime_field(p));
}

SparseVector bockstein_cochain(const SparseVector& cocycle, const SparseMatrix& d_z_next, std::uint32_t p)
{
    return bockstein_chain(cocycle, d_z_next.transpose(), p);
}

} // namespace qh
