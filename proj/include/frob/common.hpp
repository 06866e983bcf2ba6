#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frob {

// Input or precondition problems surface as exceptions; the CLI maps them
// to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

inline int64_t checked_mul(int64_t a, int64_t b, const char* what) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(std::string("integer overflow in ") + what);
    return r;
}

inline int64_t checked_add(int64_t a, int64_t b, const char* what) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Error(std::string("integer overflow in ") + what);
    return r;
}

inline int64_t checked_pow(int64_t base, int64_t exp, const char* what) {
    int64_t r = 1;
    for (int64_t i = 0; i < exp; ++i) r = checked_mul(r, base, what);
    return r;
}

// Coefficient arithmetic mod a prime p < 2^31.
using coeff_t = uint32_t;

inline coeff_t add_mod(coeff_t a, coeff_t b, uint32_t p) {
    uint64_t s = uint64_t(a) + b;
    return coeff_t(s >= p ? s - p : s);
}

inline coeff_t sub_mod(coeff_t a, coeff_t b, uint32_t p) {
    return a >= b ? a - b : coeff_t(uint64_t(a) + p - b);
}

inline coeff_t mul_mod(coeff_t a, coeff_t b, uint32_t p) {
    return coeff_t((uint64_t(a) * b) % p);
}

inline coeff_t neg_mod(coeff_t a, uint32_t p) { return a == 0 ? 0 : p - a; }

inline coeff_t pow_mod(coeff_t a, uint64_t e, uint32_t p) {
    coeff_t r = 1 % p;
    coeff_t base = a;
    while (e) {
        if (e & 1) r = mul_mod(r, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return r;
}

inline coeff_t inv_mod(coeff_t a, uint32_t p) {
    if (a == 0) throw Error("division by zero in prime field");
    return pow_mod(a, p - 2, p);
}

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace frob
