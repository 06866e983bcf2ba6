#include "frob/matrix.hpp"

namespace frob {

std::optional<int64_t> generic_rank(const PolyMatrix& m,
                                    const std::vector<Polynomial>& zero_gb) {
    const std::size_t nr = matrix_rows(m);
    const std::size_t nc = matrix_cols(m);
    PolyMatrix a(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        a[r].reserve(nc);
        for (std::size_t c = 0; c < nc; ++c)
            a[r].push_back(normal_form(m[r][c], zero_gb));
    }
    std::vector<char> row_done(nr, 0), col_done(nc, 0);
    bool bad = false;
    auto mul_nf = [&](const Polynomial& x, const Polynomial& y) {
        Polynomial p = normal_form(poly_mul(x, y), zero_gb);
        if (!x.is_zero() && !y.is_zero() && p.is_zero()) bad = true;
        return p;
    };
    int64_t rank = 0;
    for (;;) {
        std::size_t pr = nr, pc = nc;
        std::size_t best = 0;
        for (std::size_t r = 0; r < nr; ++r) {
            if (row_done[r]) continue;
            for (std::size_t c = 0; c < nc; ++c) {
                if (col_done[c] || a[r][c].is_zero()) continue;
                std::size_t sz = a[r][c].terms().size();
                if (pr == nr || sz < best) {
                    pr = r;
                    pc = c;
                    best = sz;
                }
            }
        }
        if (pr == nr) return rank;
        ++rank;
        const Polynomial piv = a[pr][pc];
        for (std::size_t r = 0; r < nr; ++r) {
            if (row_done[r] || r == pr || a[r][pc].is_zero()) continue;
            const Polynomial factor = a[r][pc];
            for (std::size_t c = 0; c < nc; ++c) {
                if (col_done[c]) continue;
                Polynomial t1 = mul_nf(piv, a[r][c]);
                Polynomial t2 = mul_nf(factor, a[pr][c]);
                a[r][c] = normal_form(poly_sub(t1, t2), zero_gb);
                if (bad) return std::nullopt;
            }
        }
        row_done[pr] = 1;
        col_done[pc] = 1;
    }
}

}  // namespace frob
