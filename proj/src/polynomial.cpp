#include "frob/polynomial.hpp"

#include <algorithm>

namespace frob {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
    const OrderSpec& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
        return mono_cmp(a.m, b.m, ord) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        t.c = coeff_t(t.c % ring_->p);
        if (!merged.empty() && merged.back().m == t.m) {
            merged.back().c = add_mod(merged.back().c, t.c, ring_->p);
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (Term& t : merged)
        if (t.c) terms_.push_back(std::move(t));
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ring_.get() != o.ring_.get() &&
        (!ring_ || !o.ring_ || !same_ring(*ring_, *o.ring_)))
        return false;
    return terms_ == o.terms_;
}

Polynomial poly_zero(const RingPtr& ring) { return Polynomial(ring); }

Polynomial poly_constant(const RingPtr& ring, int64_t value) {
    int64_t v = value % int64_t(ring->p);
    if (v < 0) v += ring->p;
    if (v == 0) return Polynomial(ring);
    return Polynomial(ring, {Term{Monomial(ring->nvars()), coeff_t(v)}});
}

Polynomial poly_variable(const RingPtr& ring, std::size_t index) {
    Monomial m(ring->nvars());
    m.e[index] = 1;
    return Polynomial(ring, {Term{m, 1}});
}

Polynomial poly_monomial(const RingPtr& ring, Monomial m, coeff_t c) {
    c = coeff_t(c % ring->p);
    if (c == 0) return Polynomial(ring);
    return Polynomial(ring, {Term{std::move(m), c}});
}

// Merge of two descending term lists.
static Polynomial merge_linear(const Polynomial& a, const Polynomial& b,
                               bool negate_b) {
    const RingPtr& ring = a.ring() ? a.ring() : b.ring();
    require_same_ring(a.ring(), b.ring(), "polynomial arithmetic");
    uint32_t p = ring->p;
    const OrderSpec& ord = ring->order;
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    while (i < ta.size() || j < tb.size()) {
        int c;
        if (i >= ta.size())
            c = -1;
        else if (j >= tb.size())
            c = 1;
        else
            c = mono_cmp(ta[i].m, tb[j].m, ord);
        if (c > 0) {
            out.push_back(ta[i++]);
        } else if (c < 0) {
            Term t = tb[j++];
            if (negate_b) t.c = neg_mod(t.c, p);
            out.push_back(t);
        } else {
            coeff_t cb = negate_b ? neg_mod(tb[j].c, p) : tb[j].c;
            coeff_t s = add_mod(ta[i].c, cb, p);
            if (s) out.push_back(Term{ta[i].m, s});
            ++i;
            ++j;
        }
    }
    Polynomial r(ring);
    return Polynomial(ring, std::move(out));
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && !a.ring()) return b;
    if (b.is_zero() && !b.ring()) return a;
    return merge_linear(a, b, false);
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b) {
    return merge_linear(a, b, true);
}

Polynomial poly_neg(const Polynomial& a) {
    std::vector<Term> out = a.terms();
    for (Term& t : out) t.c = neg_mod(t.c, a.ring()->p);
    return Polynomial(a.ring(), std::move(out));
}

Polynomial poly_mul_term(const Polynomial& a, const Monomial& m, coeff_t c) {
    if (c == 0 || a.is_zero()) return Polynomial(a.ring());
    std::vector<Term> out;
    out.reserve(a.size());
    for (const Term& t : a.terms())
        out.push_back(Term{mono_mul(t.m, m), mul_mod(t.c, c, a.ring()->p)});
    return Polynomial(a.ring(), std::move(out));
}

Polynomial poly_scale(const Polynomial& a, coeff_t c) {
    return poly_mul_term(a, Monomial(a.ring()->nvars()), c);
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring(), b.ring(), "polynomial multiplication");
    Polynomial acc(a.ring());
    for (const Term& t : b.terms())
        acc = poly_add(acc, poly_mul_term(a, t.m, t.c));
    return acc;
}

Polynomial poly_pow(const Polynomial& a, int64_t k) {
    if (k < 0) throw Error("negative polynomial power");
    Polynomial r = poly_constant(a.ring(), 1);
    Polynomial base = a;
    while (k) {
        if (k & 1) r = poly_mul(r, base);
        k >>= 1;
        if (k) base = poly_mul(base, base);
    }
    return r;
}

Polynomial poly_monic(const Polynomial& a) {
    if (a.is_zero()) return a;
    coeff_t inv = inv_mod(a.leading().c, a.ring()->p);
    return poly_scale(a, inv);
}

void poly_add_multiple(Polynomial& a, const Polynomial& b, const Monomial& m,
                       coeff_t c) {
    a = poly_add(a, poly_mul_term(b, m, c));
}

Polynomial frobenius_power(const Polynomial& a, int64_t e) {
    if (e < 0) throw Error("negative Frobenius exponent");
    int64_t q = checked_pow(a.ring()->p, e, "Frobenius power");
    std::vector<Term> out;
    out.reserve(a.size());
    for (const Term& t : a.terms()) out.push_back(Term{mono_pow(t.m, q), t.c});
    return Polynomial(a.ring(), std::move(out));
}

Polynomial pth_power_minus_one(const Polynomial& f, int64_t e) {
    // p^e - 1 = sum over i < e of (p-1) p^i, so the power splits into
    // Frobenius twists of f^(p-1).
    Polynomial fp1 = poly_pow(f, int64_t(f.ring()->p) - 1);
    Polynomial acc = poly_constant(f.ring(), 1);
    for (int64_t i = 0; i < e; ++i)
        acc = poly_mul(acc, frobenius_power(fp1, i));
    return acc;
}

Polynomial convert(const Polynomial& a, const RingPtr& ring) {
    if (a.ring().get() == ring.get()) return a;
    if (a.ring()->nvars() != ring->nvars())
        throw Error("conversion between rings of different variable count");
    return Polynomial(ring, a.terms());
}

int poly_cmp_lex(const Polynomial& a, const Polynomial& b) {
    const auto& ta = a.terms();
    const auto& tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
        int c = mono_cmp_lex(ta[i].m, tb[i].m);
        if (c) return c;
        if (ta[i].c != tb[i].c) return ta[i].c > tb[i].c ? 1 : -1;
    }
    if (ta.size() != tb.size()) return ta.size() > tb.size() ? 1 : -1;
    return 0;
}

Polynomial modulus_poly(const RingPtr& ring) {
    if (!ring->has_modulus()) throw Error("ring has no modulus");
    return Polynomial(ring, ring->modulus);
}

RingPtr make_quotient_ring(const RingPtr& base, const Polynomial& f) {
    if (base->has_modulus())
        throw PreconditionError("only one level of quotient is supported");
    if (f.is_zero()) throw PreconditionError("zero modulus");
    if (f.constant_term() != 0)
        throw PreconditionError("modulus must have zero constant term");
    require_same_ring(base, f.ring(), "quotient ring construction");
    auto r = std::make_shared<Ring>(*base);
    r->modulus = f.terms();
    return r;
}

}  // namespace frob
