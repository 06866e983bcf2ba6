#include "frob/session.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "frob/parse.hpp"
#include "frob/polynomial.hpp"

namespace frob {

namespace {

using nlohmann::json;

// json::parse keeps the last value for a repeated key; catch repeats early.
json parse_rejecting_duplicates(const std::string& text) {
    std::vector<std::set<std::string>> keys;
    auto cb = [&](int, json::parse_event_t event, json& value) {
        switch (event) {
            case json::parse_event_t::object_start:
                keys.emplace_back();
                break;
            case json::parse_event_t::key: {
                auto name = value.get<std::string>();
                if (!keys.back().insert(name).second)
                    throw PreconditionError("duplicate session key: " + name);
                break;
            }
            case json::parse_event_t::object_end:
                keys.pop_back();
                break;
            default:
                break;
        }
        return true;
    };
    try {
        return json::parse(text, cb);
    } catch (const json::parse_error& e) {
        throw PreconditionError(std::string("session is not valid JSON: ") +
                                e.what());
    }
}

std::vector<std::string> string_list(const json& v, const std::string& what) {
    if (!v.is_array())
        throw PreconditionError(what + " must be a list of strings");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string())
            throw PreconditionError(what + " must be a list of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::map<std::string, Ideal> parse_ideal_map(const json& v, const RingPtr& ring,
                                             const std::string& section) {
    std::map<std::string, Ideal> out;
    if (!v.is_object())
        throw PreconditionError("session." + section + " must be an object");
    for (const auto& [name, gens] : v.items()) {
        if (name.empty())
            throw PreconditionError("empty name in session." + section);
        std::vector<Polynomial> polys;
        for (const auto& text :
             string_list(gens, "session." + section + "." + name)) {
            try {
                polys.push_back(parse_polynomial(ring, text));
            } catch (const Error& e) {
                throw PreconditionError("session." + section + "." + name +
                                        ": " + e.what());
            }
        }
        out.emplace(name, Ideal(ring, std::move(polys)));
    }
    return out;
}

}  // namespace

const Ideal* SessionDocument::find(const std::string& name) const {
    auto it = ideals.find(name);
    if (it != ideals.end()) return &it->second;
    it = primes.find(name);
    if (it != primes.end()) return &it->second;
    return nullptr;
}

SessionDocument parse_session(const std::string& text) {
    json doc = parse_rejecting_duplicates(text);
    if (!doc.is_object())
        throw PreconditionError("session must be a JSON object");
    for (const auto& [key, _] : doc.items())
        if (key != "ring" && key != "ideals" && key != "primes")
            throw PreconditionError("unknown session key: " + key);
    if (!doc.contains("ring") || !doc["ring"].is_object())
        throw PreconditionError("session.ring must be an object");

    const json& rj = doc["ring"];
    for (const auto& [key, _] : rj.items())
        if (key != "p" && key != "vars" && key != "order" && key != "modulus")
            throw PreconditionError("unknown session.ring key: " + key);
    if (!rj.contains("p") || !rj["p"].is_number_integer())
        throw PreconditionError("session.ring.p must be an integer");
    int64_t p = rj["p"].get<int64_t>();
    if (p < 2 || p > INT32_MAX || !is_prime_u32(static_cast<uint32_t>(p)))
        throw PreconditionError("session.ring.p must be a prime number");
    if (!rj.contains("vars"))
        throw PreconditionError("session.ring.vars must be a list of strings");
    auto vars = string_list(rj["vars"], "session.ring.vars");
    if (!rj.contains("order") || !rj["order"].is_string())
        throw PreconditionError(
            "session.ring.order must be \"lex\" or \"grevlex\"");
    std::string order = rj["order"].get<std::string>();
    OrderKind kind;
    if (order == "lex")
        kind = OrderKind::lex;
    else if (order == "grevlex")
        kind = OrderKind::grevlex;
    else
        throw PreconditionError(
            "session.ring.order must be \"lex\" or \"grevlex\"");

    SessionDocument session;
    session.ring = make_ring(static_cast<uint32_t>(p), vars, kind);
    if (rj.contains("modulus")) {
        if (!rj["modulus"].is_string())
            throw PreconditionError("session.ring.modulus must be a string");
        Polynomial f;
        try {
            f = parse_polynomial(session.ring, rj["modulus"].get<std::string>());
        } catch (const Error& e) {
            throw PreconditionError(std::string("session.ring.modulus: ") +
                                    e.what());
        }
        session.ring = make_quotient_ring(session.ring, f);
    }

    if (doc.contains("ideals"))
        session.ideals = parse_ideal_map(doc["ideals"], session.ring, "ideals");
    if (doc.contains("primes"))
        session.primes = parse_ideal_map(doc["primes"], session.ring, "primes");
    for (const auto& [name, _] : session.primes)
        if (session.ideals.count(name))
            throw PreconditionError("name declared in both ideals and primes: " +
                                    name);
    for (const auto& [name, p_ideal] : session.primes)
        for (const auto& g : p_ideal.gens())
            if (g.constant_term() != 0)
                throw PreconditionError(
                    "session.primes." + name +
                    ": generators must vanish at the origin");
    return session;
}

SessionDocument load_session(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open session file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str());
}

}  // namespace frob
