#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "frob/groebner.hpp"

namespace frob {

// Ideal of the ambient ring, held as a generator list. The reduced Groebner
// basis of the preimage (generators plus quotient modulus, if any) is computed
// lazily, cached, and guarded by a mutex so concurrent reads are safe.
class Ideal {
  public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    // Reduced Groebner basis of the preimage ideal (modulus included).
    const std::vector<Polynomial>& gb() const;

    bool is_zero() const;  // zero ideal (gb empty)
    bool is_unit() const;  // whole ring
    bool contains(const Polynomial& g) const;
    bool contains_ideal(const Ideal& other) const;
    bool equals(const Ideal& other) const;

  private:
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    mutable std::shared_ptr<std::mutex> mu_;
    mutable std::shared_ptr<const std::vector<Polynomial>> gb_;
};

Ideal maximal_ideal(const RingPtr& ring);
Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra);

// Generated by g^(p^e) for each generator g.
Ideal bracket_power(const Ideal& i, int64_t e);

Ideal intersect(const Ideal& a, const Ideal& b);

// (i : j), or (i : j^infinity) when saturate is set. j must be nonzero.
Ideal ideal_quotient(const Ideal& i, const Ideal& j, bool saturate);

struct Colength {
    bool finite = false;
    int64_t value = 0;
};

// Vector space dimension of ring/i, counted from the Groebner staircase.
Colength colength(const Ideal& i);

// Krull dimension of ring/i; -1 for the unit ideal.
int64_t dimension(const Ideal& i);

// Minimal primes of an ideal generated by monomials (every generator, and the
// ring modulus if present, must be a single term). Each prime is generated by
// variables; the list is sorted by size then variable indices.
std::vector<Ideal> monomial_minimal_primes(const Ideal& i);

struct RegularSequenceResult {
    bool regular = false;
    std::size_t fail_index = 0;   // step that failed
    Polynomial witness;           // colon element outside the ideal
};

// Checks ((j, x_1..x_k) : x_{k+1}) = (j, x_1..x_k) step by step.
RegularSequenceResult is_regular_sequence(const std::vector<Polynomial>& xs,
                                          const Ideal& j);

// Length of ring/(p + xs) after validating that xs is a system of parameters
// acting as a regular sequence on ring/p. For a single parameter on a
// one-dimensional quotient the regularity check reduces to x not lying in p.
// When p has an all-monomial basis, primality is enforced (variables only).
int64_t cm_parameter_multiplicity(const std::vector<Polynomial>& xs,
                                  const Ideal& p);

struct LocalLengthCertificate {
    Ideal prime;                      // p
    Polynomial separator;             // s, a unit at p killing other components
    Ideal primary;                    // (j : s^infinity), the p-primary part
    std::vector<int64_t> layer_ranks; // dim of p^k/(p^(k+1)+q) over Frac(R/p)
    int64_t total = 0;                // length of (R/j) localized at p
};

// Length of the localization of ring/j at a minimal prime p of j. other_primes
// lists the remaining minimal primes of j (used to build the separator).
LocalLengthCertificate local_length(const Ideal& j, const Ideal& p,
                                    const std::vector<Ideal>& other_primes);

}  // namespace frob
