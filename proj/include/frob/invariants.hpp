#pragma once

#include "frob/rational.hpp"
#include "frob/resolution.hpp"

namespace frob {

// Normalized colengths are reported exactly: an integer when denom divides
// lambda, otherwise the unreduced fraction "lambda/denom".
std::string normalized_value(int64_t lambda, int64_t denom);

struct HkRow {
    int64_t e = 0;
    int64_t lambda = 0;  // colength of the e-th bracket power
    int64_t denom = 1;   // p^(e dim)
};

struct HkTable {
    int64_t e_max = 0;
    std::vector<HkRow> rows;  // e = 0..e_max
};

// Hilbert-Kunz colengths of an m-primary ideal.
HkTable hk_function(const Ideal& i, int64_t e_max);

struct FsigRow {
    int64_t e = 0;
    int64_t lambda = 0;      // colength of the e-th splitting ideal
    int64_t denom = 1;       // p^(e dim)
    int64_t via_lambda = 0;  // colength of bracket(I_e(a), 1)
    int64_t via_denom = 1;   // p^((e+1) dim)
};

// F-signature estimates of an m-primary ideal, with the one-step
// Hilbert-Kunz cross-check of each splitting ideal alongside.
struct FsigTable {
    int64_t e_max = 0;
    std::vector<FsigRow> rows;  // e = 1..e_max
};

FsigTable fsig_estimates(const Ideal& a, int64_t e_max);

// lambda(R/(I_e(a))^[p^e_inner]) / p^((e+e_inner) dim), the double sequence
// interpolating between splitting numbers and Hilbert-Kunz colengths.
Rational fsig_via_hk(const Ideal& a, int64_t e, int64_t e_inner);

struct BettiReport {
    RingPtr ring;
    int64_t e = 0;
    int64_t i_max = 0;
    int64_t rank_unit = 1;  // p^(e dim)
    bool regular = false;   // no higher Betti numbers in the window
    std::vector<int64_t> betti;   // beta_0..beta_i_max
    std::vector<int64_t> euler;   // chi_0..chi_i_max
    std::vector<std::optional<int64_t>> syzygy_ranks;  // Omega_1..Omega_i_max
    // Verdicts; entries are empty when the needed rank is unavailable.
    std::vector<std::optional<bool>> rank_identity;  // i>=1: rank = chi_(i-1) + (-1)^i p^(e dim)
    std::vector<std::optional<bool>> betti_vs_rank;  // i>=0: equality iff regular, else strict >
    std::vector<bool> euler_bound;      // i>=0: chi_i vs (-1)^i p^(e dim)
    std::vector<bool> betti_recompute;  // i>=1: beta_i = chi_i + chi_(i-1)
    std::vector<std::string> notes;
    ResolutionSlice slice;  // kept for localization
};

BettiReport frobenius_betti_euler(const RingPtr& ring, int64_t e,
                                  int64_t i_max);

struct LocalizedBetti {
    std::vector<int64_t> betti;  // at p
    std::vector<int64_t> euler;
    std::vector<bool> betti_semi;  // beta_i(R) >= beta_i(R_p)
    std::vector<bool> euler_semi;
};

LocalizedBetti localize_betti(const BettiReport& rep, const Ideal& p);

struct EquiCheckResult {
    std::string mode;  // "fsig" or "hk"
    bool equal = false;
    // fsig mode: both sides of I_e((p, extra)) = I_e(p) + extra^[p^e]
    Ideal lhs, rhs;
    Polynomial witness;  // lex-largest lhs basis element outside rhs
    // hk mode
    int64_t mu_global = 0;
    int64_t mu_local = 0;
};

EquiCheckResult equi_check(const Ideal& p, int64_t e, const std::string& mode,
                           const std::optional<Ideal>& extra);

struct DepthProbeResult {
    Ideal target;  // I_e(p)
    std::vector<Polynomial> sequence;
    bool certified = false;  // maximal-ideal colon obstruction after the run
    Polynomial obstruction;  // colon element outside the extended ideal
};

// Variables first, then pairwise sums.
std::vector<Polynomial> default_depth_candidates(const RingPtr& ring);

DepthProbeResult depth_probe(const Ideal& p, int64_t e,
                             const std::vector<Polynomial>& candidates);

struct AssocCheckResult {
    int64_t e = 0, n_max = 0, h = 0;
    std::vector<int64_t> lambda;    // lambda_n, n = 1..n_hi
    std::vector<Rational> lhs;      // lambda_n / n^h, n = 1..n_max
    int64_t rhs = 0;                // p^(e h) * sum of mult * local length
    int64_t rhs_unfactored = 0;     // the sum itself
    std::vector<int64_t> component_mult;    // per prime
    std::vector<int64_t> component_length;  // per prime
    std::vector<bool> mono_step;    // step lengths nondecreasing, per n
    std::vector<bool> mono_ratio;   // lambda_n / n nondecreasing, per n
    std::vector<std::vector<bool>> claim;  // a(n,m) = a(n+m,0) - a(m,0)
    bool stabilized = false;        // last lhs equals rhs
    bool nonincreasing = false;     // |lhs_n - rhs| nonincreasing
    bool unfactored_match = false;  // lhs settles on the unfactored sum instead
};

AssocCheckResult assoc_check(const Ideal& i, const std::vector<Polynomial>& xs,
                             int64_t e, int64_t n_max,
                             const std::vector<Ideal>& primes);

}  // namespace frob
