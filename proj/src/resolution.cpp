#include "frob/resolution.hpp"

#include <algorithm>

namespace frob {

namespace {

struct NfContext {
    RingPtr ring;
    std::vector<Polynomial> gb;  // {f} or empty

    Polynomial reduce(const Polynomial& g) const {
        return gb.empty() ? g : normal_form(g, gb);
    }
};

void drop_zero_columns(PolyMatrix& d) {
    if (d.empty()) return;
    const std::size_t nc = d.front().size();
    std::vector<char> keep(nc, 0);
    for (std::size_t c = 0; c < nc; ++c)
        for (const auto& row : d)
            if (!row[c].is_zero()) { keep[c] = 1; break; }
    for (auto& row : d) {
        std::vector<Polynomial> next;
        next.reserve(nc);
        for (std::size_t c = 0; c < nc; ++c)
            if (keep[c]) next.push_back(row[c]);
        row = std::move(next);
    }
}

// First row-major entry that is a unit at the origin.
bool find_unit_entry(const PolyMatrix& d, std::size_t& pr, std::size_t& pc) {
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < d[r].size(); ++c)
            if (d[r][c].constant_term() != 0) {
                pr = r;
                pc = c;
                return true;
            }
    return false;
}

// Remove generator pr and relation pc from the presentation, folding the
// pivot into the remaining relations by cross-multiplication (the pivot is a
// unit at the origin and at every prime cut out by constant-free generators,
// so no rank seen by this module changes).
PolyMatrix pivot_out(const PolyMatrix& d, std::size_t pr, std::size_t pc,
                     const NfContext& ctx) {
    const Polynomial& g = d[pr][pc];
    PolyMatrix out;
    out.reserve(d.size() - 1);
    for (std::size_t r = 0; r < d.size(); ++r) {
        if (r == pr) continue;
        std::vector<Polynomial> row;
        row.reserve(d[r].size() - 1);
        for (std::size_t c = 0; c < d[r].size(); ++c) {
            if (c == pc) continue;
            row.push_back(ctx.reduce(poly_sub(poly_mul(g, d[r][c]),
                                              poly_mul(d[r][pc], d[pr][c]))));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<ModuleElement> matrix_columns(const RingPtr& ring,
                                          const PolyMatrix& d) {
    std::vector<ModuleElement> cols;
    if (d.empty()) return cols;
    const std::size_t nc = d.front().size();
    cols.reserve(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        std::vector<Polynomial> entries;
        entries.reserve(d.size());
        for (const auto& row : d) entries.push_back(row[c]);
        cols.push_back(module_from_entries(ring, entries));
    }
    return cols;
}

PolyMatrix syzygy_matrix(std::size_t rank,
                         const std::vector<ModuleElement>& syz) {
    PolyMatrix out(rank);
    for (std::size_t r = 0; r < rank; ++r) {
        out[r].reserve(syz.size());
        for (const auto& s : syz)
            out[r].push_back(s.entry(static_cast<uint32_t>(r)));
    }
    return out;
}

// Zero-test contexts for generic rank: the whole ring when it is a domain by
// construction, or each monomial component when the modulus is a monomial.
std::vector<std::vector<Polynomial>> rank_contexts(const RingPtr& ring) {
    if (!ring->has_modulus()) return {{}};
    Polynomial f = modulus_poly(ring);
    if (f.terms().size() == 1) {
        std::vector<std::vector<Polynomial>> out;
        for (const auto& p : monomial_minimal_primes(Ideal(ring, {})))
            out.push_back(p.gb());
        return out;
    }
    return {{f}};
}

}  // namespace

ResolutionSlice minimal_resolution(const PushforwardPresentation& m,
                                   int64_t i_max) {
    if (i_max < 0) throw PreconditionError("resolution needs i_max >= 0");
    const RingPtr& ring = m.ring;
    NfContext ctx{ring, {}};
    if (ring->has_modulus()) ctx.gb.push_back(modulus_poly(ring));

    ResolutionSlice slice;
    slice.ring = ring;
    slice.e = m.e;

    PolyMatrix d = m.relations;
    for (auto& row : d)
        for (auto& g : row) g = ctx.reduce(g);

    // Minimal generators of the module itself.
    for (;;) {
        drop_zero_columns(d);
        std::size_t pr = 0, pc = 0;
        if (!find_unit_entry(d, pr, pc)) break;
        d = pivot_out(d, pr, pc, ctx);
    }
    slice.betti.push_back(static_cast<int64_t>(d.size()));

    std::vector<std::vector<Polynomial>> contexts = rank_contexts(ring);
    for (int64_t level = 1; level <= i_max + 1; ++level) {
        // Prune redundant column generators: a syzygy with a coefficient that
        // is a unit at the origin expresses one column through the others.
        PolyMatrix s;
        for (;;) {
            drop_zero_columns(d);
            std::vector<ModuleElement> cols = matrix_columns(ring, d);
            s = syzygy_matrix(cols.size(), syzygies(ring, cols));
            for (auto& row : s)
                for (auto& g : row) g = ctx.reduce(g);
            std::size_t pr = 0, pc = 0;
            if (!find_unit_entry(s, pr, pc)) break;
            for (auto& row : d) row.erase(row.begin() + pr);
        }
        slice.matrices.push_back(d);
        if (level <= i_max) {
            slice.betti.push_back(
                d.empty() ? 0 : static_cast<int64_t>(d.front().size()));

            // Generic rank of Omega_level = column span of d.
            std::optional<int64_t> rank;
            bool agree = true;
            for (const auto& zero_gb : contexts) {
                std::optional<int64_t> r = generic_rank(d, zero_gb);
                if (!r) {
                    slice.notes.push_back(
                        "syzygy rank omitted: zero divisor over the modulus");
                    agree = false;
                    break;
                }
                if (!rank) rank = r;
                else if (*rank != *r) {
                    slice.notes.push_back(
                        "syzygy rank omitted: components disagree");
                    agree = false;
                    break;
                }
            }
            slice.syzygy_ranks.push_back(agree ? rank : std::nullopt);
        }
        d = std::move(s);
    }
    return slice;
}

std::vector<int64_t> localized_ranks(const ResolutionSlice& slice,
                                     const Ideal& p) {
    require_same_ring(slice.ring, p.ring(), "localized ranks");
    std::vector<int64_t> out;
    out.reserve(slice.matrices.size());
    for (const auto& d : slice.matrices) {
        std::optional<int64_t> r = generic_rank(d, p.gb());
        if (!r)
            throw PreconditionError(
                "zero divisor while localizing: p is not prime");
        out.push_back(*r);
    }
    return out;
}

}  // namespace frob
