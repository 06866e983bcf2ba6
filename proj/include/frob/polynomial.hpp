#pragma once

#include <vector>

#include "frob/ring.hpp"

namespace frob {

// Sparse polynomial with terms kept strictly descending in the ring's order.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    // Normalizes: sorts, merges equal monomials, drops zero coefficients.
    Polynomial(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term& leading() const {
        if (terms_.empty()) throw Error("leading term of zero polynomial");
        return terms_.front();
    }

    coeff_t constant_term() const {
        if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
        return 0;
    }

    int64_t degree() const {  // total degree; -1 for zero
        int64_t d = -1;
        for (const Term& t : terms_) {
            int64_t td = t.m.degree();
            if (td > d) d = td;
        }
        return d;
    }

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial poly_zero(const RingPtr& ring);
Polynomial poly_constant(const RingPtr& ring, int64_t value);
Polynomial poly_variable(const RingPtr& ring, std::size_t index);
Polynomial poly_monomial(const RingPtr& ring, Monomial m, coeff_t c);

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b);
Polynomial poly_neg(const Polynomial& a);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, coeff_t c);
Polynomial poly_scale(const Polynomial& a, coeff_t c);
Polynomial poly_pow(const Polynomial& a, int64_t k);
Polynomial poly_monic(const Polynomial& a);

// a := a + c * x^m * b, the inner loop of division and Buchberger steps
void poly_add_multiple(Polynomial& a, const Polynomial& b, const Monomial& m,
                       coeff_t c);

// Raises every exponent by the factor p^e; coefficients are fixed by Frobenius
// on the prime field.
Polynomial frobenius_power(const Polynomial& a, int64_t e);

// f^(p^e - 1) assembled from Frobenius twists of f^(p-1), keeping the
// intermediate sizes small.
Polynomial pth_power_minus_one(const Polynomial& f, int64_t e);

// Rebuilds the value over a structurally compatible ring (possibly with a
// different term order or modulus tag); exponent layout must match.
Polynomial convert(const Polynomial& a, const RingPtr& ring);

// Pure-lex comparison of term lists; canonical tie-break for witnesses.
int poly_cmp_lex(const Polynomial& a, const Polynomial& b);

// The modulus as a polynomial over the ring.
Polynomial modulus_poly(const RingPtr& ring);

// Quotient ring S/(f). Validates f nonzero with zero constant term.
RingPtr make_quotient_ring(const RingPtr& base, const Polynomial& f);

}  // namespace frob
