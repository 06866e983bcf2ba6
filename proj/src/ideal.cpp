#include "frob/ideal.hpp"

#include <algorithm>
#include <bit>

#include "frob/matrix.hpp"
#include "frob/parse.hpp"

namespace frob {

namespace {

bool gens_equal(const std::vector<Polynomial>& a,
                const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i].terms() == b[i].terms())) return false;
    return true;
}

// Preimage generators in the modulus-free base ring: the ideal's generators
// plus the hypersurface equation when present.
std::vector<Polynomial> preimage_gens(const Ideal& i, const RingPtr& base) {
    std::vector<Polynomial> out;
    for (const auto& g : i.gens())
        if (!g.is_zero()) out.push_back(convert(g, base));
    if (i.ring()->has_modulus())
        out.push_back(convert(modulus_poly(i.ring()), base));
    return out;
}

// Ring with one auxiliary tag variable "@t" in front, ordered to eliminate it.
RingPtr tag_ring(const RingPtr& base) {
    std::vector<std::string> vars;
    vars.reserve(base->vars.size() + 1);
    vars.push_back("@t");
    for (const auto& v : base->vars) vars.push_back(v);
    RingPtr flat = make_ring(base->p, vars, OrderKind::grevlex);
    OrderSpec spec;
    spec.kind = OrderKind::grevlex;
    spec.elim.assign(vars.size(), 0);
    spec.elim[0] = 1;
    return make_ring_with_order(*flat, spec);
}

Polynomial lift_tag(const Polynomial& f, const RingPtr& tring) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m;
        m.e.reserve(t.m.e.size() + 1);
        m.e.push_back(0);
        for (auto x : t.m.e) m.e.push_back(x);
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial(tring, std::move(ts));
}

Polynomial drop_tag(const Polynomial& f, const RingPtr& base) {
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        Monomial m;
        m.e.assign(t.m.e.begin() + 1, t.m.e.end());
        ts.push_back({std::move(m), t.c});
    }
    return Polynomial(base, std::move(ts));
}

// Generators of (A) intersect (B) in the modulus-free ring via the tag trick:
// eliminate t from t*A + (1-t)*B.
std::vector<Polynomial> intersect_raw(const RingPtr& base,
                                      const std::vector<Polynomial>& a,
                                      const std::vector<Polynomial>& b) {
    RingPtr tring = tag_ring(base);
    Polynomial t = poly_variable(tring, 0);
    Polynomial one_minus_t = poly_sub(poly_constant(tring, 1), t);
    std::vector<Polynomial> gens;
    for (const auto& g : a)
        if (!g.is_zero()) gens.push_back(poly_mul(t, lift_tag(g, tring)));
    for (const auto& g : b)
        if (!g.is_zero()) gens.push_back(poly_mul(one_minus_t, lift_tag(g, tring)));
    GroebnerBasis gb = reduced_groebner(tring, std::move(gens));
    std::vector<Polynomial> out;
    for (const auto& g : gb.gens)
        if (g.leading().m.e[0] == 0) out.push_back(drop_tag(g, base));
    return out;
}

// Quotient f/g for an exact multiple of g (single-divisor division, zero
// remainder expected).
Polynomial poly_divide_exact(const Polynomial& f, const Polynomial& g) {
    const RingPtr& ring = f.ring();
    const Term& lg = g.leading();
    coeff_t lg_inv = inv_mod(lg.c, ring->p);
    Polynomial h = f;
    Polynomial q = poly_zero(ring);
    while (!h.is_zero()) {
        const Term t = h.leading();
        if (!mono_divides(lg.m, t.m))
            throw Error("internal: inexact division");
        Monomial qm = mono_div(t.m, lg.m);
        coeff_t qc = mul_mod(t.c, lg_inv, ring->p);
        q = poly_add(q, poly_monomial(ring, qm, qc));
        poly_add_multiple(h, g, qm, neg_mod(qc, ring->p));
    }
    return q;
}

// Reduced basis of ((A) : g) in the modulus-free ring.
std::vector<Polynomial> colon_single_raw(const RingPtr& base,
                                         const std::vector<Polynomial>& a,
                                         const Polynomial& g) {
    std::vector<Polynomial> meet = intersect_raw(base, a, {g});
    std::vector<Polynomial> out;
    out.reserve(meet.size());
    for (const auto& m : meet) out.push_back(poly_divide_exact(m, g));
    return reduced_groebner(base, std::move(out)).gens;
}

std::vector<Polynomial> colon_raw(const RingPtr& base,
                                  const std::vector<Polynomial>& a,
                                  const std::vector<Polynomial>& divisors) {
    std::vector<Polynomial> acc;
    bool first = true;
    for (const auto& g : divisors) {
        if (g.is_zero()) continue;
        std::vector<Polynomial> cg = colon_single_raw(base, a, g);
        if (first) {
            acc = std::move(cg);
            first = false;
        } else {
            acc = reduced_groebner(base, intersect_raw(base, acc, cg)).gens;
        }
    }
    if (first) throw PreconditionError("colon by the zero ideal");
    return acc;
}

int popcount_mask(uint32_t m) { return std::popcount(m); }

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)),
      mu_(std::make_shared<std::mutex>()) {
    if (!ring_) throw Error("ideal needs a ring");
    for (const auto& g : gens_)
        require_same_ring(ring_, g.ring(), "ideal generators");
}

const std::vector<Polynomial>& Ideal::gb() const {
    if (!ring_) throw Error("ideal is empty-constructed");
    std::lock_guard<std::mutex> lock(*mu_);
    if (!gb_) {
        std::vector<Polynomial> gens = gens_;
        if (ring_->has_modulus()) gens.push_back(modulus_poly(ring_));
        gb_ = std::make_shared<const std::vector<Polynomial>>(
            reduced_groebner(ring_, std::move(gens)).gens);
    }
    return *gb_;
}

bool Ideal::is_zero() const { return gb().empty(); }

bool Ideal::is_unit() const {
    const auto& b = gb();
    return !b.empty() && b.front().leading().m.is_one();
}

bool Ideal::contains(const Polynomial& g) const {
    require_same_ring(ring_, g.ring(), "ideal membership");
    return normal_form(g, gb()).is_zero();
}

bool Ideal::contains_ideal(const Ideal& other) const {
    require_same_ring(ring_, other.ring(), "ideal containment");
    for (const auto& g : other.gens())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    require_same_ring(ring_, other.ring(), "ideal comparison");
    return gens_equal(gb(), other.gb());
}

Ideal maximal_ideal(const RingPtr& ring) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        gens.push_back(poly_variable(ring, i));
    return Ideal(ring, std::move(gens));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "ideal sum");
    return ideal_sum(a, b.gens());
}

Ideal ideal_sum(const Ideal& a, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = a.gens();
    for (const auto& g : extra) {
        require_same_ring(a.ring(), g.ring(), "ideal sum");
        gens.push_back(g);
    }
    return Ideal(a.ring(), std::move(gens));
}

Ideal bracket_power(const Ideal& i, int64_t e) {
    if (e < 0) throw PreconditionError("bracket power needs e >= 0");
    std::vector<Polynomial> gens;
    gens.reserve(i.gens().size());
    for (const auto& g : i.gens()) gens.push_back(frobenius_power(g, e));
    return Ideal(i.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring(), "intersection");
    const RingPtr& ring = a.ring();
    RingPtr base = strip_modulus(ring);
    std::vector<Polynomial> raw =
        intersect_raw(base, preimage_gens(a, base), preimage_gens(b, base));
    std::vector<Polynomial> gens;
    gens.reserve(raw.size());
    for (const auto& g : raw) gens.push_back(convert(g, ring));
    return Ideal(ring, std::move(gens));
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j, bool saturate) {
    require_same_ring(i.ring(), j.ring(), "ideal quotient");
    const RingPtr& ring = i.ring();
    RingPtr base = strip_modulus(ring);
    std::vector<Polynomial> divisors;
    for (const auto& g : j.gens())
        if (!g.is_zero()) divisors.push_back(convert(g, base));
    if (divisors.empty()) throw PreconditionError("colon by the zero ideal");

    std::vector<Polynomial> cur =
        reduced_groebner(base, preimage_gens(i, base)).gens;
    for (int round = 0; round < 256; ++round) {
        std::vector<Polynomial> next = colon_raw(base, cur, divisors);
        bool stable = gens_equal(next, cur);
        cur = std::move(next);
        if (!saturate || stable) {
            std::vector<Polynomial> gens;
            gens.reserve(cur.size());
            for (const auto& g : cur) gens.push_back(convert(g, ring));
            return Ideal(ring, std::move(gens));
        }
    }
    throw Error("saturation did not stabilize");
}

Colength colength(const Ideal& i) {
    const auto& gb = i.gb();
    if (i.is_unit()) return {true, 0};
    const std::size_t n = i.ring()->nvars();
    std::vector<int64_t> bound(n, -1);
    for (const auto& g : gb) {
        const Monomial& lt = g.leading().m;
        int support = -1;
        bool pure = true;
        for (std::size_t v = 0; v < n; ++v) {
            if (lt.e[v] == 0) continue;
            if (support >= 0) { pure = false; break; }
            support = static_cast<int>(v);
        }
        if (!pure || support < 0) continue;
        int64_t d = lt.e[support];
        if (bound[support] < 0 || d < bound[support]) bound[support] = d;
    }
    int64_t box = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (bound[v] < 0) return {false, 0};
        box = checked_mul(box, bound[v], "staircase box");
        if (box > 100000000)
            throw Error("staircase enumeration too large");
    }
    std::vector<Monomial> lts;
    lts.reserve(gb.size());
    for (const auto& g : gb) lts.push_back(g.leading().m);
    Monomial cur;
    cur.e.assign(n, 0);
    int64_t count = 0;
    for (;;) {
        bool in_lt = false;
        for (const auto& lt : lts)
            if (mono_divides(lt, cur)) { in_lt = true; break; }
        if (!in_lt) ++count;
        std::size_t v = 0;
        while (v < n) {
            if (++cur.e[v] < bound[v]) break;
            cur.e[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return {true, count};
}

int64_t dimension(const Ideal& i) {
    const auto& gb = i.gb();
    if (i.is_unit()) return -1;
    const std::size_t n = i.ring()->nvars();
    if (n > 20) throw Error("too many variables for dimension scan");
    std::vector<uint32_t> supports;
    supports.reserve(gb.size());
    for (const auto& g : gb) {
        const Monomial& lt = g.leading().m;
        uint32_t s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (lt.e[v] > 0) s |= (1u << v);
        supports.push_back(s);
    }
    int64_t best = 0;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (uint32_t s : supports)
            if ((s & ~mask) == 0) { independent = false; break; }
        if (independent && popcount_mask(mask) > best)
            best = popcount_mask(mask);
    }
    return best;
}

std::vector<Ideal> monomial_minimal_primes(const Ideal& i) {
    const RingPtr& ring = i.ring();
    const std::size_t n = ring->nvars();
    if (n > 20) throw Error("too many variables for prime scan");
    std::vector<uint32_t> supports;
    auto add_gen = [&](const Polynomial& g) {
        if (g.is_zero()) return;
        if (g.terms().size() != 1)
            throw PreconditionError("minimal primes need monomial generators");
        const Monomial& m = g.leading().m;
        if (m.is_one()) {
            supports.push_back(0);  // unit ideal marker
            return;
        }
        uint32_t s = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m.e[v] > 0) s |= (1u << v);
        supports.push_back(s);
    };
    for (const auto& g : i.gens()) add_gen(g);
    if (ring->has_modulus()) add_gen(Polynomial(ring, ring->modulus));
    for (uint32_t s : supports)
        if (s == 0) return {};  // unit ideal has no primes
    if (supports.empty()) return {Ideal(ring, {})};

    std::vector<uint32_t> covers;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool cover = true;
        for (uint32_t s : supports)
            if ((s & mask) == 0) { cover = false; break; }
        if (cover) covers.push_back(mask);
    }
    std::vector<uint32_t> minimal;
    for (uint32_t m : covers) {
        bool is_min = true;
        for (uint32_t o : covers)
            if (o != m && (o & ~m) == 0) { is_min = false; break; }
        if (is_min) minimal.push_back(m);
    }
    std::sort(minimal.begin(), minimal.end(), [](uint32_t a, uint32_t b) {
        if (popcount_mask(a) != popcount_mask(b))
            return popcount_mask(a) < popcount_mask(b);
        return a < b;
    });
    std::vector<Ideal> out;
    out.reserve(minimal.size());
    for (uint32_t m : minimal) {
        std::vector<Polynomial> gens;
        for (std::size_t v = 0; v < n; ++v)
            if (m & (1u << v)) gens.push_back(poly_variable(ring, v));
        out.push_back(Ideal(ring, std::move(gens)));
    }
    return out;
}

RegularSequenceResult is_regular_sequence(const std::vector<Polynomial>& xs,
                                          const Ideal& j) {
    const RingPtr& ring = j.ring();
    std::vector<Polynomial> accum = j.gens();
    for (std::size_t k = 0; k < xs.size(); ++k) {
        require_same_ring(ring, xs[k].ring(), "regular sequence");
        if (xs[k].is_zero())
            throw PreconditionError("zero entry in candidate sequence");
        Ideal cur(ring, accum);
        if (cur.is_unit())
            return {false, k, poly_constant(ring, 1)};
        Ideal colon = ideal_quotient(cur, Ideal(ring, {xs[k]}), false);
        Polynomial witness = poly_zero(ring);
        bool ok = true;
        for (const auto& c : colon.gb()) {
            if (cur.contains(c)) continue;
            ok = false;
            if (witness.is_zero() || poly_cmp_lex(c, witness) > 0) witness = c;
        }
        if (!ok) return {false, k, witness};
        accum.push_back(xs[k]);
    }
    return {true, 0, Polynomial()};
}

int64_t cm_parameter_multiplicity(const std::vector<Polynomial>& xs,
                                  const Ideal& p) {
    int64_t dim = dimension(p);
    if (dim != static_cast<int64_t>(xs.size()))
        throw PreconditionError(
            "parameter count does not match the dimension of the quotient");
    bool all_monomial = true;
    for (const auto& g : p.gb())
        if (g.terms().size() != 1) { all_monomial = false; break; }
    if (all_monomial) {
        for (const auto& g : p.gb())
            if (g.leading().m.degree() != 1)
                throw PreconditionError("monomial ideal is not prime");
    }
    if (xs.size() == 1) {
        if (p.contains(xs[0]))
            throw PreconditionError("parameter lies in the prime");
    } else if (xs.size() >= 2) {
        RegularSequenceResult reg = is_regular_sequence(xs, p);
        if (!reg.regular)
            throw PreconditionError(
                "parameters are not a regular sequence on the quotient (step " +
                std::to_string(reg.fail_index + 1) + ", witness " +
                to_string(reg.witness) + ")");
    }
    Colength len = colength(ideal_sum(p, xs));
    if (!len.finite)
        throw PreconditionError("parameters do not cut down to finite length");
    return len.value;
}

LocalLengthCertificate local_length(const Ideal& j, const Ideal& p,
                                    const std::vector<Ideal>& other_primes) {
    const RingPtr& ring = j.ring();
    require_same_ring(ring, p.ring(), "local length");
    if (!p.contains_ideal(j))
        throw PreconditionError("prime does not contain the ideal");

    // Separating element: a product of generators, one from each other
    // minimal prime, that stays nonzero modulo p.
    Polynomial sep = poly_constant(ring, 1);
    if (!other_primes.empty()) {
        std::vector<std::vector<Polynomial>> pools;
        for (const auto& o : other_primes) {
            require_same_ring(ring, o.ring(), "local length");
            std::vector<Polynomial> pool;
            for (const auto& g : o.gens())
                if (!g.is_zero()) pool.push_back(g);
            if (pool.empty())
                throw PreconditionError("other component has no generators");
            pools.push_back(std::move(pool));
        }
        std::vector<std::size_t> idx(pools.size(), 0);
        bool found = false;
        for (;;) {
            Polynomial cand = poly_constant(ring, 1);
            for (std::size_t k = 0; k < pools.size(); ++k)
                cand = poly_mul(cand, pools[k][idx[k]]);
            if (!normal_form(cand, p.gb()).is_zero()) {
                sep = cand;
                found = true;
                break;
            }
            std::size_t k = 0;
            while (k < pools.size()) {
                if (++idx[k] < pools[k].size()) break;
                idx[k] = 0;
                ++k;
            }
            if (k == pools.size()) break;
        }
        if (!found)
            throw PreconditionError(
                "no separating element: components are not independent at p");
    }

    Ideal primary = other_primes.empty()
        ? j
        : ideal_quotient(j, Ideal(ring, {sep}), true);

    // Filtration by powers of p: layer k is p^k/(p^(k+1) + primary), a module
    // over R/p whose rank is counted at the generic point of p.
    const std::vector<Polynomial>& pg = p.gb();
    auto power_products = [&](int64_t k) {
        std::vector<Polynomial> out;
        if (k == 0) {
            out.push_back(poly_constant(ring, 1));
            return out;
        }
        std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
        for (;;) {
            Polynomial prod = poly_constant(ring, 1);
            for (std::size_t t = 0; t < pick.size(); ++t)
                prod = poly_mul(prod, pg[pick[t]]);
            out.push_back(prod);
            // next non-decreasing tuple
            std::size_t t = pick.size();
            while (t > 0) {
                --t;
                if (pick[t] + 1 < pg.size()) {
                    ++pick[t];
                    for (std::size_t u = t + 1; u < pick.size(); ++u)
                        pick[u] = pick[t];
                    break;
                }
                if (t == 0) return out;
            }
        }
    };

    LocalLengthCertificate cert;
    cert.prime = p;
    cert.separator = sep;
    cert.primary = primary;
    const auto& qb = primary.gb();
    for (int64_t level = 0;; ++level) {
        if (level > 64)
            throw PreconditionError(
                "filtration did not terminate; p is not minimal over the ideal");
        std::vector<Polynomial> us = power_products(level);
        bool contained = true;
        for (const auto& u : us)
            if (!normal_form(u, qb).is_zero()) { contained = false; break; }
        if (contained) break;

        std::vector<Polynomial> vs = power_products(level + 1);
        for (const auto& g : primary.gens())
            if (!g.is_zero()) vs.push_back(g);
        std::vector<ModuleElement> cols;
        cols.reserve(us.size() + vs.size());
        for (const auto& u : us) cols.push_back(module_from_entries(ring, {u}));
        for (const auto& v : vs) cols.push_back(module_from_entries(ring, {v}));
        std::vector<ModuleElement> syz = syzygies(ring, cols);

        const std::size_t k = us.size();
        PolyMatrix rel(k);
        for (std::size_t r = 0; r < k; ++r) {
            rel[r].reserve(syz.size());
            for (const auto& s : syz)
                rel[r].push_back(s.entry(static_cast<uint32_t>(r)));
        }
        std::optional<int64_t> rk = generic_rank(rel, pg);
        if (!rk)
            throw PreconditionError(
                "zero divisor at the localization: p is not prime");
        cert.layer_ranks.push_back(static_cast<int64_t>(k) - *rk);
        cert.total += cert.layer_ranks.back();
    }
    return cert;
}

}  // namespace frob
