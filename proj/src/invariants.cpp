#include "frob/invariants.hpp"

#include <algorithm>
#include <map>

#include "frob/parse.hpp"

namespace frob {

namespace {

int64_t sign_of(int64_t i) { return (i % 2 == 0) ? 1 : -1; }

int64_t finite_colength(const Ideal& i, const char* what) {
    Colength c = colength(i);
    if (!c.finite)
        throw PreconditionError(std::string(what) +
                                ": quotient has positive dimension");
    return c.value;
}

void require_origin(const std::vector<Polynomial>& gens, const char* what) {
    for (const auto& g : gens)
        if (g.constant_term() != 0)
            throw PreconditionError(std::string(what) +
                                    " needs generators vanishing at the origin");
}

Polynomial lex_max_outside(const Ideal& inside, const Ideal& outside_of) {
    Polynomial witness;
    for (const auto& g : inside.gb()) {
        if (outside_of.contains(g)) continue;
        if (witness.is_zero() || poly_cmp_lex(g, witness) > 0) witness = g;
    }
    return witness;
}

}  // namespace

std::string normalized_value(int64_t lambda, int64_t denom) {
    if (denom <= 0) throw Error("normalization by a nonpositive rank");
    if (lambda % denom == 0) return std::to_string(lambda / denom);
    return std::to_string(lambda) + "/" + std::to_string(denom);
}

HkTable hk_function(const Ideal& i, int64_t e_max) {
    if (e_max < 0) throw PreconditionError("hk needs e_max >= 0");
    finite_colength(i, "hk");
    const RingPtr& ring = i.ring();
    HkTable table;
    table.e_max = e_max;
    for (int64_t e = 0; e <= e_max; ++e) {
        HkRow row;
        row.e = e;
        row.lambda = finite_colength(bracket_power(i, e), "hk bracket power");
        row.denom = ring->pushforward_rank(e);
        table.rows.push_back(row);
    }
    return table;
}

FsigTable fsig_estimates(const Ideal& a, int64_t e_max) {
    if (e_max < 1) throw PreconditionError("fsig needs e_max >= 1");
    require_origin(a.gens(), "fsig");
    finite_colength(a, "fsig");
    const RingPtr& ring = a.ring();
    FsigTable table;
    table.e_max = e_max;
    for (int64_t e = 1; e <= e_max; ++e) {
        Ideal ie = splitting_ideal(a, e).result;
        FsigRow row;
        row.e = e;
        row.lambda = finite_colength(ie, "fsig splitting ideal");
        row.denom = ring->pushforward_rank(e);
        row.via_lambda =
            finite_colength(bracket_power(ie, 1), "fsig cross-check");
        row.via_denom = ring->pushforward_rank(e + 1);
        table.rows.push_back(row);
    }
    return table;
}

Rational fsig_via_hk(const Ideal& a, int64_t e, int64_t e_inner) {
    if (e_inner < 0) throw PreconditionError("fsig_via_hk needs e_inner >= 0");
    require_origin(a.gens(), "fsig_via_hk");
    finite_colength(a, "fsig_via_hk");
    Ideal ie = splitting_ideal(a, e).result;
    int64_t lambda =
        finite_colength(bracket_power(ie, e_inner), "fsig_via_hk");
    return Rational(lambda, a.ring()->pushforward_rank(e + e_inner));
}

BettiReport frobenius_betti_euler(const RingPtr& ring, int64_t e,
                                  int64_t i_max) {
    PushforwardPresentation pres = pushforward_presentation(ring, e);
    ResolutionSlice slice = minimal_resolution(pres, i_max);

    BettiReport rep;
    rep.ring = ring;
    rep.e = e;
    rep.i_max = i_max;
    rep.rank_unit = ring->pushforward_rank(e);
    rep.betti = slice.betti;
    rep.syzygy_ranks = slice.syzygy_ranks;
    rep.notes = slice.notes;

    rep.euler.reserve(rep.betti.size());
    for (std::size_t i = 0; i < rep.betti.size(); ++i)
        rep.euler.push_back(i == 0 ? rep.betti[0]
                                   : rep.betti[i] - rep.euler[i - 1]);

    rep.regular = true;
    for (std::size_t i = 1; i < rep.betti.size(); ++i)
        if (rep.betti[i] != 0) rep.regular = false;

    for (std::size_t i = 0; i < rep.betti.size(); ++i) {
        int64_t bound = sign_of(static_cast<int64_t>(i)) * rep.rank_unit;
        rep.euler_bound.push_back(rep.regular ? rep.euler[i] == bound
                                              : rep.euler[i] > bound);
        std::optional<int64_t> omega_rank =
            i == 0 ? std::optional<int64_t>(rep.rank_unit)
                   : rep.syzygy_ranks[i - 1];
        if (omega_rank)
            rep.betti_vs_rank.push_back(rep.regular
                                            ? rep.betti[i] == *omega_rank
                                            : rep.betti[i] > *omega_rank);
        else
            rep.betti_vs_rank.push_back(std::nullopt);
        if (i >= 1) {
            rep.betti_recompute.push_back(rep.betti[i] ==
                                          rep.euler[i] + rep.euler[i - 1]);
            if (rep.syzygy_ranks[i - 1])
                rep.rank_identity.push_back(
                    *rep.syzygy_ranks[i - 1] ==
                    rep.euler[i - 1] +
                        sign_of(static_cast<int64_t>(i)) * rep.rank_unit);
            else
                rep.rank_identity.push_back(std::nullopt);
        }
    }
    rep.slice = std::move(slice);
    return rep;
}

LocalizedBetti localize_betti(const BettiReport& rep, const Ideal& p) {
    require_origin(p.gens(), "localization");
    std::vector<int64_t> u = localized_ranks(rep.slice, p);
    LocalizedBetti loc;
    for (std::size_t i = 0; i < rep.betti.size(); ++i) {
        int64_t b = rep.betti[i];
        b -= (i == 0) ? 0 : u[i - 1];
        b -= u[i];
        if (b < 0) throw Error("localized Betti number went negative");
        loc.betti.push_back(b);
        loc.euler.push_back(i == 0 ? loc.betti[0]
                                   : loc.betti[i] - loc.euler[i - 1]);
        loc.betti_semi.push_back(rep.betti[i] >= loc.betti[i]);
        loc.euler_semi.push_back(rep.euler[i] >= loc.euler[i]);
    }
    return loc;
}

EquiCheckResult equi_check(const Ideal& p, int64_t e, const std::string& mode,
                           const std::optional<Ideal>& extra) {
    require_origin(p.gens(), "equi-check prime");
    const RingPtr& ring = p.ring();
    EquiCheckResult res;
    res.mode = mode;
    if (mode == "fsig") {
        Ideal ex = extra ? *extra : maximal_ideal(ring);
        require_origin(ex.gens(), "equi-check ideal");
        res.lhs = splitting_ideal(ideal_sum(p, ex), e).result;
        res.rhs =
            ideal_sum(splitting_ideal(p, e).result, bracket_power(ex, e).gens());
        res.equal = res.lhs.equals(res.rhs);
        if (!res.equal) {
            res.witness = lex_max_outside(res.lhs, res.rhs);
            if (res.witness.is_zero())
                res.witness = lex_max_outside(res.rhs, res.lhs);
        }
    } else if (mode == "hk") {
        res.mu_global = finite_colength(bracket_power(maximal_ideal(ring), e),
                                        "equi-check hk");
        PushforwardPresentation pres = pushforward_presentation(ring, e);
        std::optional<int64_t> r = generic_rank(pres.relations, p.gb());
        if (!r)
            throw PreconditionError(
                "zero divisor while localizing: p is not prime");
        res.mu_local = static_cast<int64_t>(pres.basis.size()) - *r;
        res.equal = res.mu_global == res.mu_local;
    } else {
        throw PreconditionError("equi-check mode must be fsig or hk");
    }
    return res;
}

std::vector<Polynomial> default_depth_candidates(const RingPtr& ring) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        out.push_back(poly_variable(ring, i));
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        for (std::size_t j = i + 1; j < ring->nvars(); ++j)
            out.push_back(
                poly_add(poly_variable(ring, i), poly_variable(ring, j)));
    return out;
}

DepthProbeResult depth_probe(const Ideal& p, int64_t e,
                             const std::vector<Polynomial>& candidates) {
    require_origin(p.gens(), "depth-probe prime");
    require_origin(candidates, "depth-probe candidates");
    const RingPtr& ring = p.ring();
    DepthProbeResult res;
    res.target = splitting_ideal(p, e).result;

    bool progressed = true;
    while (progressed) {
        progressed = false;
        Ideal cur = ideal_sum(res.target, res.sequence);
        if (cur.is_unit()) break;
        for (const auto& c : candidates) {
            bool used = false;
            for (const auto& s : res.sequence)
                if (s == c) { used = true; break; }
            if (used || c.is_zero()) continue;
            Ideal colon = ideal_quotient(cur, Ideal(ring, {c}), false);
            bool regular = true;
            for (const auto& g : colon.gb())
                if (!cur.contains(g)) { regular = false; break; }
            if (regular) {
                res.sequence.push_back(c);
                progressed = true;
                break;
            }
        }
    }
    Ideal k = ideal_sum(res.target, res.sequence);
    Ideal colon_m = ideal_quotient(k, maximal_ideal(ring), false);
    res.obstruction = lex_max_outside(colon_m, k);
    res.certified = !res.obstruction.is_zero();
    return res;
}

AssocCheckResult assoc_check(const Ideal& i, const std::vector<Polynomial>& xs,
                             int64_t e, int64_t n_max,
                             const std::vector<Ideal>& primes) {
    if (n_max < 1) throw PreconditionError("assoc-check needs n_max >= 1");
    const RingPtr& ring = i.ring();
    require_origin(i.gens(), "assoc-check ideal");
    require_origin(xs, "assoc-check parameters");
    const int64_t h = static_cast<int64_t>(xs.size());
    if (dimension(i) != h)
        throw PreconditionError(
            "parameter count does not match the dimension of the quotient");
    if (h > 0) {
        RegularSequenceResult reg = is_regular_sequence(xs, i);
        if (!reg.regular)
            throw PreconditionError(
                "parameters are not a regular sequence on the quotient (step " +
                std::to_string(reg.fail_index + 1) + ", witness " +
                to_string(reg.witness) + ")");
    }
    if (primes.empty())
        throw PreconditionError("assoc-check needs the minimal primes");
    for (const auto& p : primes) {
        require_origin(p.gens(), "assoc-check prime");
        if (dimension(p) != h)
            throw PreconditionError(
                "prime list inconsistent with the dimension of the quotient");
        if (!p.contains_ideal(i))
            throw PreconditionError("listed prime does not contain the ideal");
    }

    AssocCheckResult res;
    res.e = e;
    res.n_max = n_max;
    res.h = h;
    const int64_t qe = checked_pow(ring->p, e, "p^e");

    auto powers = [&](int64_t a, int64_t first) {
        // x_1^first, x_2^a, ..., x_h^a
        std::vector<Polynomial> out;
        for (std::size_t k = 0; k < xs.size(); ++k)
            out.push_back(poly_pow(xs[k], k == 0 ? first : a));
        return out;
    };
    std::map<std::pair<int64_t, int64_t>, int64_t> cache;
    auto lam_at = [&](int64_t a, int64_t first) {
        // exponent 0 puts a unit among the parameters
        if (h > 0 && (first == 0 || (a == 0 && h > 1))) return int64_t(0);
        auto key = std::make_pair(a, first);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        Ideal j = ideal_sum(i, powers(a, first));
        int64_t v = finite_colength(splitting_ideal(j, e).result,
                                    "assoc-check splitting colength");
        cache.emplace(key, v);
        return v;
    };
    auto lam_diag = [&](int64_t n) {
        return h == 0 ? lam_at(0, 1) : lam_at(n, n);
    };
    // h = 0 collapses every cell to lambda(R/I_e(I)).
    if (h == 0) cache.emplace(std::make_pair(int64_t(0), int64_t(1)),
                              finite_colength(splitting_ideal(i, e).result,
                                              "assoc-check splitting colength"));

    const int64_t grid = std::min<int64_t>(4, n_max);
    const int64_t n_hi = std::max(n_max, 2 * grid);
    for (int64_t n = 1; n <= n_hi; ++n) res.lambda.push_back(lam_diag(n));
    for (int64_t n = 1; n <= n_max; ++n)
        res.lhs.push_back(
            Rational(res.lambda[n - 1], checked_pow(n, h, "n^h")));

    if (h > 0) {
        for (int64_t n = 1; n + 1 <= n_max; ++n) {
            int64_t up = lam_at(n, n + 1);
            int64_t mid = lam_at(n, n);
            int64_t down = n == 1 ? 0 : lam_at(n, n - 1);
            res.mono_step.push_back(up - mid >= mid - down);
            res.mono_ratio.push_back(Rational(up, n + 1) >= Rational(mid, n));
        }
        for (int64_t n = 1; n <= grid; ++n) {
            std::vector<bool> row;
            for (int64_t m = 0; m <= grid; ++m) {
                Ideal ienm =
                    splitting_ideal(ideal_sum(i, powers(n + m, n + m)), e)
                        .result;
                int64_t a_nm = finite_colength(
                    ideal_sum(ienm, powers(checked_mul(n, qe, "n p^e"),
                                           checked_mul(n, qe, "n p^e"))),
                    "assoc-check claim cell");
                int64_t a_nm0 = res.lambda[n + m - 1];
                int64_t a_m0 = m == 0 ? 0 : res.lambda[m - 1];
                row.push_back(a_nm == a_nm0 - a_m0);
            }
            res.claim.push_back(std::move(row));
        }
    }

    Ideal ie_i = splitting_ideal(i, e).result;
    int64_t sum = 0;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        std::vector<Ideal> others;
        for (std::size_t j = 0; j < primes.size(); ++j)
            if (j != k) others.push_back(primes[j]);
        int64_t mult = cm_parameter_multiplicity(xs, primes[k]);
        int64_t len = local_length(ie_i, primes[k], others).total;
        res.component_mult.push_back(mult);
        res.component_length.push_back(len);
        sum = checked_add(sum, checked_mul(mult, len, "assoc rhs"),
                          "assoc rhs");
    }
    res.rhs_unfactored = sum;
    res.rhs = checked_mul(checked_pow(ring->p, checked_mul(e, h, "e h"), "p^(eh)"),
                          sum, "assoc rhs");

    res.stabilized = res.lhs.back() == Rational(res.rhs);
    res.nonincreasing = true;
    for (std::size_t n = 1; n < res.lhs.size(); ++n)
        if ((res.lhs[n] - Rational(res.rhs)).abs() >
            (res.lhs[n - 1] - Rational(res.rhs)).abs())
            res.nonincreasing = false;
    res.unfactored_match = res.rhs != res.rhs_unfactored &&
                           res.lhs.back() == Rational(res.rhs_unfactored);
    return res;
}

}  // namespace frob
