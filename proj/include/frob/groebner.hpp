#pragma once

#include <vector>

#include "frob/polynomial.hpp"

namespace frob {

// Reduced basis together with the ring (and thus order) it was computed under.
struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> gens;  // monic, mutually reduced, ascending by LT

    bool operator==(const GroebnerBasis& o) const { return gens == o.gens; }
};

// Remainder of full division by the list, deterministic divisor choice.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

// Buchberger with the product and chain criteria, normal selection strategy.
// Returns a non-reduced basis; callers usually want reduced_groebner.
std::vector<Polynomial> buchberger(const RingPtr& ring,
                                   std::vector<Polynomial> gens);

GroebnerBasis reduced_groebner(const RingPtr& ring,
                               std::vector<Polynomial> gens);

// Generators of the ideal with the masked variables eliminated. The mask picks
// the variables to drop; the result lives in the original ring and involves
// only kept variables.
std::vector<Polynomial> eliminate_raw(const RingPtr& ring,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<uint8_t>& drop_mask);

// --- free modules -----------------------------------------------------------

struct MTerm {
    uint32_t comp = 0;
    Monomial m;
    coeff_t c = 0;

    bool operator==(const MTerm& o) const {
        return comp == o.comp && c == o.c && m == o.m;
    }
};

// Element of a free module R^rank. Terms descend in position-over-term order:
// lower component index dominates, ties break by the ring's monomial order.
class ModuleElement {
public:
    ModuleElement() = default;
    ModuleElement(RingPtr ring, uint32_t rank) : ring_(std::move(ring)), rank_(rank) {}
    ModuleElement(RingPtr ring, uint32_t rank, std::vector<MTerm> terms);

    const RingPtr& ring() const { return ring_; }
    uint32_t rank() const { return rank_; }
    const std::vector<MTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const MTerm& leading() const {
        if (terms_.empty()) throw Error("leading term of zero module element");
        return terms_.front();
    }

    // Entry at a component as a polynomial.
    Polynomial entry(uint32_t comp) const;

    bool operator==(const ModuleElement& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }

private:
    RingPtr ring_;
    uint32_t rank_ = 0;
    std::vector<MTerm> terms_;
};

int mterm_cmp(const MTerm& a, const MTerm& b, const OrderSpec& ord);

ModuleElement module_from_entries(const RingPtr& ring,
                                  const std::vector<Polynomial>& entries);
ModuleElement module_unit(const RingPtr& ring, uint32_t rank, uint32_t comp);
ModuleElement module_add(const ModuleElement& a, const ModuleElement& b);
ModuleElement module_mul_term(const ModuleElement& a, const Monomial& m, coeff_t c);
ModuleElement module_mul_poly(const ModuleElement& a, const Polynomial& f);
ModuleElement module_monic(const ModuleElement& a);

ModuleElement module_normal_form(const ModuleElement& f,
                                 const std::vector<ModuleElement>& basis);

std::vector<ModuleElement> module_reduced_groebner(const RingPtr& ring,
                                                   std::vector<ModuleElement> gens);

// Generators of the syzygy module of the given columns (elements of R^m):
// all vectors (a_1..a_k) with sum a_j c_j = 0. Over a hypersurface ring the
// columns are augmented with f times each unit vector and the result is
// projected back, so the relation holds in the quotient.
std::vector<ModuleElement> syzygies(const RingPtr& ring,
                                    const std::vector<ModuleElement>& columns);

}  // namespace frob
