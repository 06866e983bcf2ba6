#include "frob/groebner.hpp"

#include <algorithm>
#include <set>

namespace frob {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (f.is_zero()) return f;
    const RingPtr& ring = f.ring();
    uint32_t p = ring->p;
    Polynomial h = f;
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& t = h.leading();
        const Polynomial* divisor = nullptr;
        for (const Polynomial& g : basis) {
            if (!g.is_zero() && mono_divides(g.leading().m, t.m)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Monomial q = mono_div(t.m, divisor->leading().m);
            coeff_t c = mul_mod(t.c, inv_mod(divisor->leading().c, p), p);
            poly_add_multiple(h, *divisor, q, neg_mod(c, p));
        } else {
            remainder.push_back(t);
            poly_add_multiple(h, poly_monomial(ring, t.m, 1), Monomial(ring->nvars()),
                              neg_mod(t.c, p));
        }
    }
    return Polynomial(ring, std::move(remainder));
}

namespace {

struct PairKey {
    int64_t lcm_deg;
    Monomial lcm;
    std::size_t i, j;
};

// Normal selection: smallest lcm degree, then lcm in the ambient order, then
// generator indices.
bool pair_less(const PairKey& a, const PairKey& b, const OrderSpec& ord) {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    int c = mono_cmp(a.lcm, b.lcm, ord);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

Polynomial s_polynomial(const Polynomial& a, const Polynomial& b,
                        const Monomial& lcm) {
    uint32_t p = a.ring()->p;
    Monomial qa = mono_div(lcm, a.leading().m);
    Monomial qb = mono_div(lcm, b.leading().m);
    Polynomial left = poly_mul_term(a, qa, inv_mod(a.leading().c, p));
    Polynomial right = poly_mul_term(b, qb, inv_mod(b.leading().c, p));
    return poly_sub(left, right);
}

}  // namespace

std::vector<Polynomial> buchberger(const RingPtr& ring,
                                   std::vector<Polynomial> gens) {
    std::vector<Polynomial> basis;
    for (Polynomial& g : gens)
        if (!g.is_zero()) basis.push_back(poly_monic(g));

    std::vector<PairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Monomial lcm = mono_lcm(basis[i].leading().m, basis[t].leading().m);
            pending.push_back(PairKey{lcm.degree(), lcm, i, t});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

    const OrderSpec& ord = ring->order;
    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (pair_less(pending[k], pending[best], ord)) best = k;
        PairKey pk = pending[best];
        pending.erase(pending.begin() + best);
        handled.insert({pk.i, pk.j});

        const Monomial& lti = basis[pk.i].leading().m;
        const Monomial& ltj = basis[pk.j].leading().m;
        if (mono_coprime(lti, ltj)) continue;  // product criterion

        // chain criterion: a third leading term divides the lcm and both
        // associated pairs are already handled
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!mono_divides(basis[k].leading().m, pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, k);
            auto key2 = std::minmax(pk.j, k);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Polynomial h = normal_form(s_polynomial(basis[pk.i], basis[pk.j], pk.lcm),
                                   basis);
        if (!h.is_zero()) {
            basis.push_back(poly_monic(h));
            push_pairs(basis.size() - 1);
        }
    }
    return basis;
}

GroebnerBasis reduced_groebner(const RingPtr& ring, std::vector<Polynomial> gens) {
    std::vector<Polynomial> basis = buchberger(ring, std::move(gens));

    // minimal: drop any generator whose leading monomial another one divides
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = basis[j].leading().m;
            const Monomial& b = basis[i].leading().m;
            if (mono_divides(a, b) && !(a == b && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // tail-reduce to the unique reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            others.reserve(minimal.size() - 1);
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial r = normal_form(minimal[i], others);
            if (r != minimal[i]) {
                minimal[i] = poly_monic(r);
                changed = true;
            }
        }
        // reduction can only shrink; loop until stable
    }

    std::sort(minimal.begin(), minimal.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return mono_cmp(a.leading().m, b.leading().m, ring->order) < 0;
              });
    return GroebnerBasis{ring, std::move(minimal)};
}

std::vector<Polynomial> eliminate_raw(const RingPtr& ring,
                                      const std::vector<Polynomial>& gens,
                                      const std::vector<uint8_t>& drop_mask) {
    OrderSpec block;
    block.kind = OrderKind::grevlex;
    block.elim = drop_mask;
    RingPtr elim_ring = make_ring_with_order(*strip_modulus(ring), block);

    std::vector<Polynomial> lifted;
    lifted.reserve(gens.size());
    for (const Polynomial& g : gens) lifted.push_back(convert(g, elim_ring));

    GroebnerBasis gb = reduced_groebner(elim_ring, std::move(lifted));
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.gens) {
        const Monomial& lt = g.leading().m;
        bool free_of_dropped = true;
        for (std::size_t i = 0; i < lt.nvars(); ++i)
            if (drop_mask[i] && lt.e[i]) free_of_dropped = false;
        if (free_of_dropped) kept.push_back(convert(g, ring));
    }
    std::sort(kept.begin(), kept.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return mono_cmp(a.leading().m, b.leading().m, ring->order) < 0;
              });
    return kept;
}

// --- modules ----------------------------------------------------------------

int mterm_cmp(const MTerm& a, const MTerm& b, const OrderSpec& ord) {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return mono_cmp(a.m, b.m, ord);
}

ModuleElement::ModuleElement(RingPtr ring, uint32_t rank, std::vector<MTerm> terms)
    : ring_(std::move(ring)), rank_(rank), terms_(std::move(terms)) {
    const OrderSpec& ord = ring_->order;
    std::sort(terms_.begin(), terms_.end(), [&](const MTerm& a, const MTerm& b) {
        return mterm_cmp(a, b, ord) > 0;
    });
    std::vector<MTerm> merged;
    merged.reserve(terms_.size());
    for (MTerm& t : terms_) {
        if (t.comp >= rank_) throw Error("module term component out of range");
        t.c = coeff_t(t.c % ring_->p);
        if (!merged.empty() && merged.back().comp == t.comp &&
            merged.back().m == t.m) {
            merged.back().c = add_mod(merged.back().c, t.c, ring_->p);
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_.clear();
    for (MTerm& t : merged)
        if (t.c) terms_.push_back(std::move(t));
}

Polynomial ModuleElement::entry(uint32_t comp) const {
    std::vector<Term> out;
    for (const MTerm& t : terms_)
        if (t.comp == comp) out.push_back(Term{t.m, t.c});
    return Polynomial(ring_, std::move(out));
}

ModuleElement module_from_entries(const RingPtr& ring,
                                  const std::vector<Polynomial>& entries) {
    std::vector<MTerm> terms;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (const Term& t : entries[i].terms())
            terms.push_back(MTerm{uint32_t(i), t.m, t.c});
    return ModuleElement(ring, uint32_t(entries.size()), std::move(terms));
}

ModuleElement module_unit(const RingPtr& ring, uint32_t rank, uint32_t comp) {
    return ModuleElement(ring, rank, {MTerm{comp, Monomial(ring->nvars()), 1}});
}

ModuleElement module_add(const ModuleElement& a, const ModuleElement& b) {
    if (a.is_zero() && a.rank() == 0) return b;
    if (b.is_zero() && b.rank() == 0) return a;
    if (a.rank() != b.rank()) throw Error("module rank mismatch");
    std::vector<MTerm> terms = a.terms();
    for (const MTerm& t : b.terms()) terms.push_back(t);
    return ModuleElement(a.ring(), a.rank(), std::move(terms));
}

ModuleElement module_mul_term(const ModuleElement& a, const Monomial& m, coeff_t c) {
    std::vector<MTerm> terms;
    terms.reserve(a.terms().size());
    uint32_t p = a.ring()->p;
    for (const MTerm& t : a.terms()) {
        coeff_t cc = mul_mod(t.c, c, p);
        if (cc) terms.push_back(MTerm{t.comp, mono_mul(t.m, m), cc});
    }
    return ModuleElement(a.ring(), a.rank(), std::move(terms));
}

ModuleElement module_mul_poly(const ModuleElement& a, const Polynomial& f) {
    ModuleElement acc(a.ring(), a.rank());
    for (const Term& t : f.terms())
        acc = module_add(acc, module_mul_term(a, t.m, t.c));
    return acc;
}

ModuleElement module_monic(const ModuleElement& a) {
    if (a.is_zero()) return a;
    return module_mul_term(a, Monomial(a.ring()->nvars()),
                           inv_mod(a.leading().c, a.ring()->p));
}

ModuleElement module_normal_form(const ModuleElement& f,
                                 const std::vector<ModuleElement>& basis) {
    if (f.is_zero()) return f;
    const RingPtr& ring = f.ring();
    uint32_t p = ring->p;
    ModuleElement h = f;
    std::vector<MTerm> remainder;
    while (!h.is_zero()) {
        const MTerm t = h.leading();
        const ModuleElement* divisor = nullptr;
        for (const ModuleElement& g : basis) {
            if (g.is_zero()) continue;
            const MTerm& lt = g.leading();
            if (lt.comp == t.comp && mono_divides(lt.m, t.m)) {
                divisor = &g;
                break;
            }
        }
        if (divisor) {
            Monomial q = mono_div(t.m, divisor->leading().m);
            coeff_t c = mul_mod(t.c, inv_mod(divisor->leading().c, p), p);
            h = module_add(h, module_mul_term(*divisor, q, neg_mod(c, p)));
        } else {
            remainder.push_back(t);
            h = module_add(h, ModuleElement(ring, h.rank(),
                                            {MTerm{t.comp, t.m, neg_mod(t.c, p)}}));
        }
    }
    return ModuleElement(ring, f.rank(), std::move(remainder));
}

namespace {

struct MPairKey {
    int64_t lcm_deg;
    Monomial lcm;
    uint32_t comp;
    std::size_t i, j;
};

bool mpair_less(const MPairKey& a, const MPairKey& b, const OrderSpec& ord) {
    if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
    if (a.comp != b.comp) return a.comp < b.comp;
    int c = mono_cmp(a.lcm, b.lcm, ord);
    if (c) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

}  // namespace

std::vector<ModuleElement> module_reduced_groebner(const RingPtr& ring,
                                                   std::vector<ModuleElement> gens) {
    std::vector<ModuleElement> basis;
    for (ModuleElement& g : gens)
        if (!g.is_zero()) basis.push_back(module_monic(g));

    std::vector<MPairKey> pending;
    std::set<std::pair<std::size_t, std::size_t>> handled;
    auto push_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            if (basis[i].leading().comp != basis[t].leading().comp) continue;
            Monomial lcm = mono_lcm(basis[i].leading().m, basis[t].leading().m);
            pending.push_back(
                MPairKey{lcm.degree(), lcm, basis[t].leading().comp, i, t});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) push_pairs(t);

    const OrderSpec& ord = ring->order;
    uint32_t p = ring->p;
    while (!pending.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k)
            if (mpair_less(pending[k], pending[best], ord)) best = k;
        MPairKey pk = pending[best];
        pending.erase(pending.begin() + best);
        handled.insert({pk.i, pk.j});

        // chain criterion within the shared component
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            const MTerm& lt = basis[k].leading();
            if (lt.comp != pk.comp || !mono_divides(lt.m, pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, k);
            auto key2 = std::minmax(pk.j, k);
            if (handled.count({key1.first, key1.second}) &&
                handled.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        Monomial qa = mono_div(pk.lcm, basis[pk.i].leading().m);
        Monomial qb = mono_div(pk.lcm, basis[pk.j].leading().m);
        ModuleElement s = module_add(
            module_mul_term(basis[pk.i], qa, 1),
            module_mul_term(basis[pk.j], qb, neg_mod(1, p)));
        ModuleElement h = module_normal_form(s, basis);
        if (!h.is_zero()) {
            basis.push_back(module_monic(h));
            push_pairs(basis.size() - 1);
        }
    }

    // minimal + reduced
    std::vector<ModuleElement> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const MTerm& a = basis[j].leading();
            const MTerm& b = basis[i].leading();
            if (a.comp == b.comp && mono_divides(a.m, b.m) &&
                !(a.m == b.m && j > i))
                redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<ModuleElement> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            ModuleElement r = module_normal_form(minimal[i], others);
            if (!(r == minimal[i])) {
                minimal[i] = module_monic(r);
                changed = true;
            }
        }
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const ModuleElement& a, const ModuleElement& b) {
                  return mterm_cmp(a.leading(), b.leading(), ring->order) < 0;
              });
    return minimal;
}

namespace {

// Syzygies over a plain polynomial ring by component elimination: track each
// column with a trailing unit component and keep the basis elements whose
// leading part left the front block.
std::vector<ModuleElement> syzygies_plain(const RingPtr& ring,
                                          const std::vector<ModuleElement>& columns) {
    if (columns.empty()) return {};
    uint32_t m = columns.front().rank();
    uint32_t k = uint32_t(columns.size());
    std::vector<ModuleElement> augmented;
    for (uint32_t j = 0; j < k; ++j) {
        if (columns[j].rank() != m) throw Error("syzygy columns of mixed rank");
        std::vector<MTerm> terms = columns[j].terms();
        terms.push_back(MTerm{m + j, Monomial(ring->nvars()), 1});
        augmented.push_back(ModuleElement(ring, m + k, std::move(terms)));
    }
    std::vector<ModuleElement> gb = module_reduced_groebner(ring, augmented);
    std::vector<ModuleElement> result;
    for (const ModuleElement& g : gb) {
        if (g.leading().comp < m) continue;  // still has a front part
        std::vector<MTerm> tail;
        for (const MTerm& t : g.terms())
            tail.push_back(MTerm{t.comp - m, t.m, t.c});
        result.push_back(ModuleElement(ring, k, std::move(tail)));
    }
    return result;
}

}  // namespace

std::vector<ModuleElement> syzygies(const RingPtr& ring,
                                    const std::vector<ModuleElement>& columns) {
    if (columns.empty()) return {};
    if (!ring->has_modulus()) return syzygies_plain(ring, columns);

    RingPtr base = strip_modulus(ring);
    Polynomial f = convert(modulus_poly(ring), base);
    uint32_t m = columns.front().rank();
    uint32_t k = uint32_t(columns.size());

    std::vector<ModuleElement> lifted;
    for (const ModuleElement& c : columns)
        lifted.push_back(ModuleElement(base, m, c.terms()));
    for (uint32_t i = 0; i < m; ++i)
        lifted.push_back(module_mul_poly(module_unit(base, m, i), f));

    std::vector<ModuleElement> raw = syzygies_plain(base, lifted);
    std::vector<Polynomial> fgb = {poly_monic(f)};
    std::vector<ModuleElement> result;
    for (const ModuleElement& s : raw) {
        std::vector<Polynomial> entries;
        bool nonzero = false;
        for (uint32_t j = 0; j < k; ++j) {
            Polynomial ej = normal_form(s.entry(j), fgb);
            if (!ej.is_zero()) nonzero = true;
            entries.push_back(convert(ej, ring));
        }
        if (nonzero) result.push_back(module_from_entries(ring, entries));
    }
    std::sort(result.begin(), result.end(),
              [&](const ModuleElement& a, const ModuleElement& b) {
                  return mterm_cmp(a.leading(), b.leading(), ring->order) < 0;
              });
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

}  // namespace frob
