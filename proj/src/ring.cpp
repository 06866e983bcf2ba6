#include "frob/ring.hpp"

#include <algorithm>
#include <set>

namespace frob {

std::string Ring::describe() const {
    std::string s = "F_" + std::to_string(p) + "[";
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) s += ",";
        s += vars[i];
    }
    s += "]";
    if (has_modulus()) s += " / (modulus)";
    return s;
}

static void validate_vars(const std::vector<std::string>& vars) {
    if (vars.empty()) throw PreconditionError("ring needs at least one variable");
    std::set<std::string> seen;
    for (const std::string& v : vars) {
        if (v.empty()) throw PreconditionError("empty variable name");
        if (!seen.insert(v).second)
            throw PreconditionError("duplicate variable name: " + v);
    }
}

RingPtr make_ring(uint32_t p, std::vector<std::string> vars, OrderKind kind) {
    if (!is_prime_u32(p))
        throw PreconditionError("characteristic must be prime, got " +
                                std::to_string(p));
    validate_vars(vars);
    auto r = std::make_shared<Ring>();
    r->p = p;
    r->vars = std::move(vars);
    r->order.kind = kind;
    return r;
}

RingPtr make_ring_with_order(const Ring& base, OrderSpec order) {
    auto r = std::make_shared<Ring>(base);
    r->order = std::move(order);
    if (!r->modulus.empty()) {
        std::sort(r->modulus.begin(), r->modulus.end(),
                  [&](const Term& a, const Term& b) {
                      return mono_cmp(a.m, b.m, r->order) > 0;
                  });
    }
    return r;
}

RingPtr strip_modulus(const RingPtr& ring) {
    if (!ring->has_modulus()) return ring;
    auto r = std::make_shared<Ring>(*ring);
    r->modulus.clear();
    return r;
}

bool same_ring(const Ring& a, const Ring& b) {
    return a.p == b.p && a.vars == b.vars && a.order == b.order &&
           a.modulus == b.modulus;
}

}  // namespace frob
