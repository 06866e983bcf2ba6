#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frob/parse.hpp"
#include "frob/report.hpp"
#include "frob/session.hpp"

using namespace frob;

namespace {

const char* kQuadricDoc = R"({
  "ring": {"p": 2, "vars": ["x", "y", "z", "w"], "order": "grevlex",
           "modulus": "x*y + z*w"},
  "ideals": {"m": ["x", "y", "z", "w"]},
  "primes": {"P": ["x", "z"]}
})";

}  // namespace

TEST_CASE("session parsing round trip") {
    auto doc = parse_session(kQuadricDoc);
    REQUIRE(doc.ring);
    CHECK(doc.ring->p == 2);
    CHECK(doc.ring->has_modulus());
    CHECK(doc.ideals.size() == 1);
    CHECK(doc.primes.size() == 1);
    REQUIRE(doc.find("m") != nullptr);
    REQUIRE(doc.find("P") != nullptr);
    CHECK(doc.find("missing") == nullptr);
    CHECK(doc.find("P")->gens().size() == 2);
    CHECK(ring_display(doc.ring) == "F_2[x,y,z,w] / (x*y + z*w)");
}

TEST_CASE("session parsing without a modulus") {
    auto doc = parse_session(R"({
      "ring": {"p": 5, "vars": ["x", "y"], "order": "lex"},
      "ideals": {"a": ["x + 2*y"]}
    })");
    CHECK_FALSE(doc.ring->has_modulus());
    CHECK(doc.ring->order.kind == OrderKind::lex);
    CHECK(ring_display(doc.ring) == "F_5[x,y]");
    CHECK(doc.primes.empty());
}

TEST_CASE("session parsing rejects malformed documents") {
    // not JSON at all
    CHECK_THROWS_AS(parse_session("ring p 2"), Error);
    // composite characteristic
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 4, "vars": ["x"],
        "order": "lex"}})"),
                    Error);
    // missing order
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x"]}})"),
                    Error);
    // unknown order
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x"],
        "order": "degrevlex"}})"),
                    Error);
    // unknown top-level key
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x"],
        "order": "lex"}, "extras": {}})"),
                    Error);
    // duplicate keys inside one object
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "p": 3, "vars": ["x"],
        "order": "lex"}})"),
                    Error);
    // name used by both an ideal and a prime
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x", "y"],
        "order": "lex"}, "ideals": {"a": ["x"]}, "primes": {"a": ["y"]}})"),
                    Error);
    // prime generators must vanish at the origin
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x"],
        "order": "lex"}, "primes": {"q": ["x + 1"]}})"),
                    Error);
    // malformed modulus polynomial
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x"],
        "order": "lex", "modulus": "x +"}})"),
                    Error);
    // constant modulus
    CHECK_THROWS_AS(parse_session(R"({"ring": {"p": 2, "vars": ["x"],
        "order": "lex", "modulus": "1"}})"),
                    Error);
}

TEST_CASE("ideal display is canonical") {
    auto doc = parse_session(kQuadricDoc);
    // splitting ideal of P at e = 1, written with redundant generators
    Ideal messy(doc.ring, {parse_polynomial(doc.ring, "x^2"),
                           parse_polynomial(doc.ring, "x*z"),
                           parse_polynomial(doc.ring, "z^2"),
                           parse_polynomial(doc.ring, "x^2 + x*z")});
    CHECK(ideal_display(messy) ==
          std::vector<std::string>{"x*z", "x^2", "z^2"});
    // the modulus class itself is dropped from displays, but its reduction
    // against other generators stays: (x) pulls z*w into the preimage basis
    Ideal with_f(doc.ring, {parse_polynomial(doc.ring, "x*y + z*w"),
                            parse_polynomial(doc.ring, "x")});
    CHECK(ideal_display(with_f) == std::vector<std::string>{"x", "z*w"});
    Ideal just_f(doc.ring, {parse_polynomial(doc.ring, "x*y + z*w")});
    CHECK(ideal_display(just_f).empty());
    CHECK(ideal_display(Ideal(doc.ring, {})).empty());
}

TEST_CASE("report scaffolding and rendering are stable") {
    auto rep = make_report("demo");
    rep["inputs"]["ring"] = "F_2[x]";
    rep["tables"]["rows"] = {1, 2, 3};
    rep["verdicts"]["fine"] = true;
    std::string text = render_report(rep);
    CHECK(text.back() == '\n');
    // insertion order survives into the rendered text
    CHECK(text.find("\"command\"") < text.find("\"inputs\""));
    CHECK(text.find("\"inputs\"") < text.find("\"tables\""));
    CHECK(text.find("\"tables\"") < text.find("\"verdicts\""));
    CHECK(text.find("\"verdicts\"") < text.find("\"witnesses\""));
    CHECK(text.find("\"witnesses\"") < text.find("\"timings\""));
    CHECK(render_report(rep) == text);
}

TEST_CASE("verdict scanning") {
    auto rep = make_report("demo");
    CHECK(verdicts_all_true(rep));
    rep["verdicts"]["a"] = true;
    rep["verdicts"]["nested"] = {{"b", true}, {"c", nullptr}};
    rep["verdicts"]["list"] = {true, true};
    CHECK(verdicts_all_true(rep));
    rep["verdicts"]["list"].push_back(false);
    CHECK_FALSE(verdicts_all_true(rep));
    rep["verdicts"]["list"] = {true};
    rep["verdicts"]["nested"]["b"] = false;
    CHECK_FALSE(verdicts_all_true(rep));
    // strings and numbers are not verdicts
    rep["verdicts"]["nested"]["b"] = true;
    rep["verdicts"]["note"] = "skipped";
    rep["verdicts"]["count"] = 0;
    CHECK(verdicts_all_true(rep));
}
