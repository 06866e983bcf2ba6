#include "frob/frobenius.hpp"

#include <algorithm>
#include <map>

namespace frob {

namespace {

void require_e_positive(int64_t e, const char* what) {
    if (e < 1) throw PreconditionError(std::string(what) + " needs e >= 1");
}

void require_origin_ideal(const Ideal& a) {
    for (const auto& g : a.gens())
        if (g.constant_term() != 0)
            throw PreconditionError(
                "splitting ideals need generators vanishing at the origin");
}

}  // namespace

FrobeniusDecomposition frobenius_decompose(const Polynomial& g, int64_t e) {
    require_e_positive(e, "frobenius_decompose");
    const RingPtr& ring = g.ring();
    const int64_t q = checked_pow(ring->p, e, "p^e");
    std::map<std::vector<int32_t>, std::vector<Term>> buckets;
    for (const auto& t : g.terms()) {
        Monomial b, u;
        b.e.reserve(t.m.e.size());
        u.e.reserve(t.m.e.size());
        for (int32_t x : t.m.e) {
            b.e.push_back(static_cast<int32_t>(x % q));
            u.e.push_back(static_cast<int32_t>(x / q));
        }
        buckets[b.e].push_back({std::move(u), t.c});
    }
    FrobeniusDecomposition out;
    out.e = e;
    for (auto& [be, terms] : buckets) {
        Monomial b;
        b.e = be;
        Polynomial u(ring, std::move(terms));
        if (!u.is_zero()) out.parts.emplace_back(std::move(b), std::move(u));
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [&](const auto& x, const auto& y) {
                  return mono_cmp(x.first, y.first, ring->order) < 0;
              });
    return out;
}

PushforwardPresentation pushforward_presentation(const RingPtr& ring,
                                                 int64_t e) {
    require_e_positive(e, "pushforward_presentation");
    const int64_t q = checked_pow(ring->p, e, "p^e");
    const std::size_t n = ring->nvars();
    int64_t size = 1;
    for (std::size_t v = 0; v < n; ++v) {
        size = checked_mul(size, q, "pushforward basis");
        if (size > 20000) throw Error("pushforward basis too large");
    }
    PushforwardPresentation out;
    out.ring = ring;
    out.e = e;
    out.basis.reserve(static_cast<std::size_t>(size));
    Monomial cur;
    cur.e.assign(n, 0);
    for (;;) {
        out.basis.push_back(cur);
        std::size_t v = 0;
        while (v < n) {
            if (++cur.e[v] < q) break;
            cur.e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    std::sort(out.basis.begin(), out.basis.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, ring->order) < 0;
              });
    std::map<std::vector<int32_t>, std::size_t> index;
    for (std::size_t i = 0; i < out.basis.size(); ++i)
        index[out.basis[i].e] = i;

    out.relations.assign(out.basis.size(), {});
    if (!ring->has_modulus()) return out;

    RingPtr base = strip_modulus(ring);
    Polynomial f = convert(modulus_poly(ring), base);
    std::vector<Polynomial> fgb = {modulus_poly(ring)};
    for (auto& row : out.relations)
        row.assign(out.basis.size(), poly_zero(ring));
    for (std::size_t a = 0; a < out.basis.size(); ++a) {
        Polynomial fa = poly_mul_term(f, out.basis[a], 1);
        FrobeniusDecomposition dec = frobenius_decompose(fa, e);
        for (auto& [b, u] : dec.parts) {
            std::size_t row = index.at(b.e);
            out.relations[row][a] =
                normal_form(convert(u, ring), fgb);
        }
    }
    return out;
}

SplittingIdeal splitting_ideal(const Ideal& a, int64_t e) {
    require_e_positive(e, "splitting_ideal");
    require_origin_ideal(a);
    const RingPtr& ring = a.ring();
    if (!ring->has_modulus())
        return {a, e, bracket_power(a, e)};

    RingPtr base = strip_modulus(ring);
    Polynomial f = convert(modulus_poly(ring), base);
    std::vector<Polynomial> bracketed;
    for (const auto& g : a.gens())
        if (!g.is_zero())
            bracketed.push_back(frobenius_power(convert(g, base), e));
    bracketed.push_back(frobenius_power(f, e));
    Polynomial fq1 = pth_power_minus_one(f, e);
    Ideal colon =
        ideal_quotient(Ideal(base, std::move(bracketed)), Ideal(base, {fq1}),
                       false);
    std::vector<Polynomial> gens;
    gens.reserve(colon.gens().size());
    for (const auto& g : colon.gens()) gens.push_back(convert(g, ring));
    return {a, e, Ideal(ring, std::move(gens))};
}

int64_t splitting_number(const RingPtr& ring, int64_t e) {
    Colength c = colength(splitting_ideal(maximal_ideal(ring), e).result);
    if (!c.finite)
        throw PreconditionError(
            "splitting ideal of the maximal ideal has positive dimension");
    return c.value;
}

bool fedder_is_fpure(const RingPtr& ring, int64_t e) {
    require_e_positive(e, "fedder_is_fpure");
    if (!ring->has_modulus()) return true;
    RingPtr base = strip_modulus(ring);
    Polynomial f = convert(modulus_poly(ring), base);
    Ideal mq = bracket_power(maximal_ideal(base), e);
    return !normal_form(pth_power_minus_one(f, e), mq.gb()).is_zero();
}

}  // namespace frob
