#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "frob/common.hpp"
#include "frob/monomial.hpp"

namespace frob {

struct Term {
    Monomial m;
    coeff_t c = 0;

    bool operator==(const Term& o) const { return c == o.c && m == o.m; }
};

// Coefficient field F_p, variable list, term order and an optional hypersurface
// modulus. Rings are immutable and shared by the values built over them.
class Ring {
public:
    uint32_t p = 2;
    std::vector<std::string> vars;
    OrderSpec order;
    std::vector<Term> modulus;  // empty: polynomial ring; else f, terms descending

    std::size_t nvars() const { return vars.size(); }
    bool has_modulus() const { return !modulus.empty(); }

    // Krull dimension of the ring itself (hypersurfaces drop one).
    int64_t dim() const {
        return int64_t(nvars()) - (has_modulus() ? 1 : 0);
    }

    // rank of the e-th Frobenius pushforward: p^(e * dim)
    int64_t pushforward_rank(int64_t e) const {
        return checked_pow(p, checked_mul(e, dim(), "pushforward rank"),
                           "pushforward rank");
    }

    std::optional<std::size_t> var_index(const std::string& name) const {
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }

    std::string describe() const;
};

using RingPtr = std::shared_ptr<const Ring>;

// Validates p prime and variable names nonempty/unique.
RingPtr make_ring(uint32_t p, std::vector<std::string> vars,
                  OrderKind kind = OrderKind::grevlex);

// Same ring with an explicit order spec (internal use for elimination).
RingPtr make_ring_with_order(const Ring& base, OrderSpec order);

// Forgets the modulus; values must be converted explicitly.
RingPtr strip_modulus(const RingPtr& ring);

bool same_ring(const Ring& a, const Ring& b);

inline void require_same_ring(const RingPtr& a, const RingPtr& b,
                              const char* what) {
    if (a.get() == b.get()) return;
    if (!a || !b || !same_ring(*a, *b))
        throw PreconditionError(std::string("mixed-ring operands in ") + what);
}

}  // namespace frob
