#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "frob/invariants.hpp"
#include "frob/parse.hpp"
#include "oracles.hpp"

using namespace frob;
using namespace frob::testing;

namespace {

Ideal ideal_of(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> ps;
    for (const auto& g : gens) ps.push_back(parse_polynomial(ring, g));
    return Ideal(ring, ps);
}

RingPtr quadric_ring() {
    auto s = make_ring(2, {"x", "y", "z", "w"});
    return make_quotient_ring(s, parse_polynomial(s, "x*y + z*w"));
}

RingPtr cross_ring() {
    auto s = make_ring(2, {"x", "y"});
    return make_quotient_ring(s, parse_polynomial(s, "x*y"));
}

}  // namespace

TEST_CASE("normalized values stay unreduced") {
    CHECK(normalized_value(10, 8) == "10/8");
    CHECK(normalized_value(8, 8) == "1");
    CHECK(normalized_value(84, 64) == "84/64");
    CHECK(normalized_value(0, 4) == "0");
    CHECK(normalized_value(44, 64) == "44/64");
    CHECK(normalized_value(6, 2) == "3");
    CHECK_THROWS_AS(normalized_value(1, 0), Error);
}

TEST_CASE("hilbert-kunz colengths of the quadric") {
    auto r = quadric_ring();
    auto table = hk_function(maximal_ideal(r), 2);
    REQUIRE(table.rows.size() == 3);
    CHECK(table.rows[0].lambda == 1);
    CHECK(table.rows[0].denom == 1);
    CHECK(table.rows[1].lambda == 10);
    CHECK(table.rows[1].denom == 8);
    CHECK(table.rows[2].lambda == 84);
    CHECK(table.rows[2].denom == 64);
    // the normalized sequence drifts upward but stays below the embedding bound
    CHECK(Rational(10, 8) < Rational(84, 64));
    CHECK(Rational(84, 64) < Rational(2, 1));
}

TEST_CASE("hilbert-kunz over polynomial rings is exact") {
    for (uint32_t p : {2u, 3u, 5u}) {
        auto r = make_ring(p, {"x", "y"});
        auto table = hk_function(maximal_ideal(r), 2);
        for (const auto& row : table.rows) {
            CHECK(row.lambda == row.denom);
            CHECK(normalized_value(row.lambda, row.denom) == "1");
        }
    }
}

TEST_CASE("hk rejects ideals of positive dimension") {
    auto r = quadric_ring();
    CHECK_THROWS_AS(hk_function(ideal_of(r, {"x", "z"}), 1),
                    PreconditionError);
}

TEST_CASE("f-signature estimates of the quadric") {
    auto r = quadric_ring();
    auto table = fsig_estimates(maximal_ideal(r), 2);
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].lambda == 6);
    CHECK(table.rows[0].denom == 8);
    CHECK(table.rows[0].via_lambda == 52);
    CHECK(table.rows[0].via_denom == 64);
    CHECK(table.rows[1].lambda == 44);
    CHECK(table.rows[1].denom == 64);
    // both estimates straddle the true signature 2/3
    CHECK(Rational(44, 64) > Rational(2, 3));
    CHECK(Rational(52, 64) > Rational(2, 3));
    CHECK(fsig_via_hk(maximal_ideal(r), 1, 1) == Rational(52, 64));
    CHECK(fsig_via_hk(maximal_ideal(r), 1, 0) == Rational(6, 8));
}

TEST_CASE("f-signature estimates are monotone in the ideal") {
    auto r2 = make_ring(2, {"x", "y"});
    auto m2 = fsig_estimates(maximal_ideal(r2), 2);
    Ideal msq = ideal_of(r2, {"x^2", "x*y", "y^2"});
    auto sq = fsig_estimates(msq, 2);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(sq.rows[k].lambda > m2.rows[k].lambda);
        CHECK(sq.rows[k].denom == m2.rows[k].denom);
    }
    CHECK(sq.rows[0].lambda == 12);
}

TEST_CASE("betti and euler report for the nodal curve") {
    auto r = cross_ring();
    auto rep = frobenius_betti_euler(r, 1, 3);
    CHECK(rep.rank_unit == 2);
    CHECK_FALSE(rep.regular);
    CHECK(rep.betti == std::vector<int64_t>{3, 2, 2, 2});
    CHECK(rep.euler == std::vector<int64_t>{3, -1, 3, -1});
    for (std::size_t i = 1; i < 4; ++i) {
        REQUIRE(rep.rank_identity[i - 1].has_value());
        CHECK(*rep.rank_identity[i - 1]);
        CHECK(rep.betti_recompute[i - 1]);
    }
    for (const auto& v : rep.betti_vs_rank) {
        REQUIRE(v.has_value());
        CHECK(*v);
    }
    for (bool b : rep.euler_bound) CHECK(b);
}

TEST_CASE("betti and euler report for the quadric") {
    auto r = quadric_ring();
    auto rep = frobenius_betti_euler(r, 1, 2);
    CHECK(rep.rank_unit == 8);
    CHECK_FALSE(rep.regular);
    CHECK(rep.betti == std::vector<int64_t>{10, 4, 4});
    CHECK(rep.euler == std::vector<int64_t>{10, -6, 10});
    for (const auto& v : rep.rank_identity) {
        REQUIRE(v.has_value());
        CHECK(*v);
    }
    for (const auto& v : rep.betti_vs_rank) {
        REQUIRE(v.has_value());
        CHECK(*v);
    }
    for (bool b : rep.euler_bound) CHECK(b);
    for (bool b : rep.betti_recompute) CHECK(b);
}

TEST_CASE("betti report sees regular rings as regular") {
    for (uint32_t p : {2u, 3u}) {
        auto r = make_ring(p, {"x", "y"});
        auto rep = frobenius_betti_euler(r, 1, 2);
        CHECK(rep.regular);
        CHECK(rep.betti[0] == rep.rank_unit);
        CHECK(rep.betti[1] == 0);
        CHECK(rep.betti[2] == 0);
        CHECK(rep.euler == std::vector<int64_t>{rep.rank_unit, -rep.rank_unit,
                                                rep.rank_unit});
        for (const auto& v : rep.betti_vs_rank) {
            REQUIRE(v.has_value());
            CHECK(*v);
        }
        for (bool b : rep.euler_bound) CHECK(b);
    }
}

TEST_CASE("localized betti numbers are semicontinuous") {
    auto r = quadric_ring();
    auto rep = frobenius_betti_euler(r, 1, 2);
    auto loc = localize_betti(rep, ideal_of(r, {"x", "z"}));
    CHECK(loc.betti == std::vector<int64_t>{8, 0, 0});
    CHECK(loc.euler == std::vector<int64_t>{8, -8, 8});
    for (bool b : loc.betti_semi) CHECK(b);
    for (bool b : loc.euler_semi) CHECK(b);

    auto cross = cross_ring();
    auto crep = frobenius_betti_euler(cross, 1, 3);
    auto cloc = localize_betti(crep, ideal_of(cross, {"x"}));
    CHECK(cloc.betti == std::vector<int64_t>{2, 0, 0, 0});
    for (bool b : cloc.betti_semi) CHECK(b);
    // localizing at the maximal ideal reproduces the global report
    auto at_m = localize_betti(crep, maximal_ideal(cross));
    CHECK(at_m.betti == crep.betti);
    CHECK(at_m.euler == crep.euler);
}

TEST_CASE("equimultiplicity check in fsig mode at the quadric prime") {
    auto r = quadric_ring();
    Ideal p = ideal_of(r, {"x", "z"});
    auto res = equi_check(p, 1, "fsig", std::nullopt);
    CHECK(res.mode == "fsig");
    CHECK_FALSE(res.equal);
    CHECK(to_string(res.witness) == "x*w");
    CHECK(res.lhs.contains(res.witness));
    CHECK_FALSE(res.rhs.contains(res.witness));
    CHECK(res.lhs.contains_ideal(res.rhs));
}

TEST_CASE("equimultiplicity check in hk mode at the quadric prime") {
    auto r = quadric_ring();
    Ideal p = ideal_of(r, {"x", "z"});
    auto res = equi_check(p, 1, "hk", std::nullopt);
    CHECK(res.mode == "hk");
    CHECK(res.mu_global == 10);
    CHECK(res.mu_local == 8);
    CHECK_FALSE(res.equal);
    CHECK_THROWS_AS(equi_check(ideal_of(r, {"x"}), 1, "hk", std::nullopt),
                    PreconditionError);
}

TEST_CASE("minimal generator counts drop at the branches of the node") {
    auto cross = cross_ring();
    for (const char* v : {"x", "y"}) {
        Ideal p = ideal_of(cross, {v});
        auto hk = equi_check(p, 1, "hk", std::nullopt);
        CHECK(hk.mu_global == 3);
        CHECK(hk.mu_local == 2);
        CHECK_FALSE(hk.equal);
    }
}

TEST_CASE("depth probe certifies depth one at the quadric prime") {
    auto r = quadric_ring();
    Ideal p = ideal_of(r, {"x", "z"});
    auto res = depth_probe(p, 1, default_depth_candidates(r));
    CHECK(res.sequence.size() == 1);
    CHECK(to_string(res.sequence[0]) == "y");
    CHECK(res.certified);
    CHECK_FALSE(res.obstruction.is_zero());
    CHECK(default_depth_candidates(r).size() == 10);
}

TEST_CASE("depth probe reaches the dimension on cohen-macaulay targets") {
    auto r2 = make_ring(2, {"x", "y"});
    auto res = depth_probe(maximal_ideal(r2), 1, default_depth_candidates(r2));
    // I_1(m) = (x^2, y^2) has depth 0: the quotient is m-primary
    CHECK(res.sequence.empty());
    CHECK(res.certified);

    auto cross = cross_ring();
    auto cres =
        depth_probe(ideal_of(cross, {"x"}), 1, default_depth_candidates(cross));
    CHECK(cres.sequence.size() == 1);
    CHECK(cres.certified);
}

TEST_CASE("associativity check for the nodal curve") {
    auto r2 = make_ring(2, {"x", "y"});
    Ideal i = ideal_of(r2, {"x*y"});
    std::vector<Polynomial> xs = {parse_polynomial(r2, "x + y")};
    std::vector<Ideal> primes = {ideal_of(r2, {"x"}), ideal_of(r2, {"y"})};
    auto res = assoc_check(i, xs, 1, 8, primes);
    CHECK(res.h == 1);
    REQUIRE(res.lambda.size() >= 8);
    for (std::size_t n = 1; n <= res.lambda.size(); ++n)
        CHECK(res.lambda[n - 1] == int64_t(8 * n));
    for (const auto& v : res.lhs) CHECK(v == Rational(8, 1));
    CHECK(res.rhs == 8);
    CHECK(res.rhs_unfactored == 4);
    CHECK(res.component_mult == std::vector<int64_t>{1, 1});
    CHECK(res.component_length == std::vector<int64_t>{2, 2});
    CHECK(res.stabilized);
    CHECK(res.nonincreasing);
    CHECK_FALSE(res.unfactored_match);
    for (bool b : res.mono_step) CHECK(b);
    for (bool b : res.mono_ratio) CHECK(b);
    for (const auto& row : res.claim)
        for (bool b : row) CHECK(b);
}

TEST_CASE("associativity check degenerates gracefully in height zero") {
    auto r2 = make_ring(2, {"x", "y"});
    Ideal i = ideal_of(r2, {"x^2", "y^2"});
    auto res = assoc_check(i, {}, 1, 4, {maximal_ideal(r2)});
    CHECK(res.h == 0);
    CHECK(res.rhs == 16);
    for (const auto& v : res.lhs) CHECK(v == Rational(16, 1));
    CHECK(res.stabilized);
}

TEST_CASE("associativity check validates its inputs") {
    auto r2 = make_ring(2, {"x", "y"});
    Ideal i = ideal_of(r2, {"x*y"});
    std::vector<Ideal> primes = {ideal_of(r2, {"x"}), ideal_of(r2, {"y"})};
    // wrong number of parameters for the height
    CHECK_THROWS_AS(assoc_check(i, {}, 1, 4, primes), PreconditionError);
    // x is not regular modulo a minimal prime of (x*y)
    CHECK_THROWS_AS(
        assoc_check(i, {parse_polynomial(r2, "x")}, 1, 4, primes),
        PreconditionError);
    // a listed prime must contain the ideal
    CHECK_THROWS_AS(assoc_check(i, {parse_polynomial(r2, "x + y")}, 1, 4,
                                {ideal_of(r2, {"x + y"})}),
                    PreconditionError);
}

TEST_CASE("splitting growth is strict on f-pure rings") {
    std::mt19937_64 rng(911);
    std::vector<RingPtr> rings = {make_ring(2, {"x", "y"}), quadric_ring(),
                                  cross_ring()};
    int checked = 0;
    for (const auto& r : rings) {
        for (int trial = 0; trial < 30 && checked < 51; ++trial) {
            Ideal big(r, random_gens(r, rng, 2, 2, 2, true));
            std::vector<Polynomial> shrunk;
            for (const auto& g : big.gens())
                for (uint32_t v = 0; v < r->nvars(); ++v) {
                    Monomial m(r->nvars());
                    m.e[v] = 1;
                    shrunk.push_back(poly_mul_term(g, m, 1));
                }
            Ideal small(r, shrunk);
            if (small.equals(big)) continue;
            ++checked;
            Ideal is = splitting_ideal(small, 1).result;
            Ideal ib = splitting_ideal(big, 1).result;
            CHECK(ib.contains_ideal(is));
            CHECK_FALSE(is.equals(ib));
        }
    }
    CHECK(checked >= 30);
}
