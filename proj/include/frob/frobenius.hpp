#pragma once

#include "frob/ideal.hpp"
#include "frob/matrix.hpp"

namespace frob {

// p^e-th root coordinates of a polynomial: g = sum_b u_b^(p^e) * x^b where
// every exponent of b is below p^e. Parts are sorted ascending by b.
struct FrobeniusDecomposition {
    int64_t e = 0;
    std::vector<std::pair<Monomial, Polynomial>> parts;  // u_b nonzero
};

FrobeniusDecomposition frobenius_decompose(const Polynomial& g, int64_t e);

// F^e_*R presented over R: free on the basis monomials x^b with b < p^e
// componentwise. A polynomial ring contributes no relations; over S/(f) there
// is one relation column per basis index a, encoding F^e_*(f x^a).
struct PushforwardPresentation {
    RingPtr ring;
    int64_t e = 0;
    std::vector<Monomial> basis;  // ascending in the ambient order
    PolyMatrix relations;         // basis.size() rows; one column per basis index
};

PushforwardPresentation pushforward_presentation(const RingPtr& ring, int64_t e);

struct SplittingIdeal {
    Ideal base;
    int64_t e = 0;
    Ideal result;  // I_e(base)
};

// I_e(a): bracket power over a polynomial ring; over a hypersurface S/(f) the
// image in R of the Fedder-style colon ((lifts of a, f)^[p^e] : f^(p^e - 1)).
// Generators of a must vanish at the origin.
SplittingIdeal splitting_ideal(const Ideal& a, int64_t e);

// a_e = lambda(R/I_e(m)), the free rank of F^e_*R over a prime field.
int64_t splitting_number(const RingPtr& ring, int64_t e);

// Fedder's criterion: f^(p^e - 1) outside the bracketed maximal ideal of S.
// Polynomial rings are split for trivial reasons and report true.
bool fedder_is_fpure(const RingPtr& ring, int64_t e);

}  // namespace frob
