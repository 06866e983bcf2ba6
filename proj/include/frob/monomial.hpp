#pragma once

#include <cstdint>
#include <vector>

#include "frob/common.hpp"

namespace frob {

// Exponent vector of a monomial. The variable count is fixed by the ring.
struct Monomial {
    std::vector<int32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}

    std::size_t nvars() const { return e.size(); }

    int64_t degree() const {
        int64_t d = 0;
        for (int32_t x : e) d += x;
        return d;
    }

    bool is_one() const {
        for (int32_t x : e)
            if (x) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        int64_t s = int64_t(a.e[i]) + b.e[i];
        if (s > INT32_MAX) throw Error("monomial exponent overflow");
        r.e[i] = int32_t(s);
    }
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
    // a | b
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    // a / b, assuming b | a
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

inline Monomial mono_pow(const Monomial& a, int64_t k) {
    Monomial r(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        int64_t s = checked_mul(a.e[i], k, "monomial power");
        if (s > INT32_MAX) throw Error("monomial exponent overflow");
        r.e[i] = int32_t(s);
    }
    return r;
}

enum class OrderKind { lex, grevlex };

// Term order on exponent vectors. When the elimination mask is nonempty the
// masked variables form a dominant block (graded reverse lexicographic within
// each block), which is what the elimination routines need.
struct OrderSpec {
    OrderKind kind = OrderKind::grevlex;
    std::vector<uint8_t> elim;  // empty, or one flag per variable

    bool operator==(const OrderSpec& o) const {
        return kind == o.kind && elim == o.elim;
    }
};

namespace detail {

inline int cmp_lex(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
}

inline int cmp_grevlex_masked(const Monomial& a, const Monomial& b,
                              const std::vector<uint8_t>* mask, bool in_mask) {
    int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (mask && (((*mask)[i] != 0) != in_mask)) continue;
        da += a.e[i];
        db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (mask && (((*mask)[i] != 0) != in_mask)) continue;
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace detail

// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int mono_cmp(const Monomial& a, const Monomial& b, const OrderSpec& ord) {
    if (!ord.elim.empty()) {
        int c = detail::cmp_grevlex_masked(a, b, &ord.elim, true);
        if (c) return c;
        return detail::cmp_grevlex_masked(a, b, &ord.elim, false);
    }
    if (ord.kind == OrderKind::lex) return detail::cmp_lex(a, b);
    return detail::cmp_grevlex_masked(a, b, nullptr, true);
}

// Pure lexicographic comparison, independent of the ambient order. Used for
// canonical witness selection.
inline int mono_cmp_lex(const Monomial& a, const Monomial& b) {
    return detail::cmp_lex(a, b);
}

}  // namespace frob
