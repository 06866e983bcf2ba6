#pragma once

#include <optional>
#include <random>

#include "frob/groebner.hpp"

namespace frob::testing {

// Plain S-pair saturation Buchberger: FIFO pair queue, no elimination
// criteria, full interreduction at the end. Ignores any ring modulus; pass it
// explicitly when the ideal lives in a quotient.
std::vector<Polynomial> naive_reduced_gb(const RingPtr& ring,
                                         const std::vector<Polynomial>& gens);

// lambda(S/(gens)) by truncated linear algebra on monomials of degree < bound:
// the quotient dimension stops changing once bound exceeds the socle degree,
// which holds when gens contain pure powers x_i^(d_i) and
// bound > sum_i (d_i - 1).
int64_t dense_colength(const RingPtr& ring, const std::vector<Polynomial>& gens,
                       int64_t bound);

// All syzygies (h_1..h_k) with deg h_i <= deg_bound of the given columns over
// the ring (modulus respected by elementary division), as a kernel basis.
std::vector<std::vector<Polynomial>> dense_syzygies(
    const RingPtr& ring, const std::vector<std::vector<Polynomial>>& columns,
    int64_t deg_bound);

// Deterministic random data for property suites.
Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng,
                       int max_terms, int max_exp, bool zero_const);
std::vector<Polynomial> random_gens(const RingPtr& ring, std::mt19937_64& rng,
                                    int count, int max_terms, int max_exp,
                                    bool zero_const);

}  // namespace frob::testing
