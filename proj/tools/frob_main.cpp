#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "frob/invariants.hpp"
#include "frob/parse.hpp"
#include "frob/report.hpp"
#include "frob/session.hpp"

namespace {

using namespace frob;

struct Opts {
    std::string session;
    std::string ideal;
    std::string prime;
    std::string mode;
    std::string out;
    int64_t e = 1;
    int64_t e_max = 2;
    int64_t n_max = 8;
    int64_t i_max = 2;
    bool assert_checks = false;
    std::vector<std::string> params;
};

const Ideal& need_ideal(const SessionDocument& s, const std::string& name) {
    if (name.empty()) throw PreconditionError("missing required flag --ideal");
    const Ideal* i = s.find(name);
    if (!i) throw PreconditionError("unknown ideal name: " + name);
    return *i;
}

const Ideal& need_prime(const SessionDocument& s, const std::string& name) {
    if (name.empty()) throw PreconditionError("missing required flag --prime");
    auto it = s.primes.find(name);
    if (it != s.primes.end()) return it->second;
    auto jt = s.ideals.find(name);
    if (jt == s.ideals.end())
        throw PreconditionError("unknown prime name: " + name);
    for (const auto& g : jt->second.gens())
        if (g.constant_term() != 0)
            throw PreconditionError(
                name + " is not usable as a prime: generators must vanish at "
                       "the origin");
    return jt->second;
}

Report run_groebner(const Opts& o, const SessionDocument& s) {
    Report r = make_report("groebner");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    r["tables"]["generators"] = ideal_display(need_ideal(s, o.ideal));
    return r;
}

Report run_colength(const Opts& o, const SessionDocument& s) {
    Report r = make_report("colength");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    Colength c = colength(need_ideal(s, o.ideal));
    if (c.finite)
        r["tables"]["lambda"] = c.value;
    else
        r["tables"]["lambda"] = "infinite";
    return r;
}

Report run_bracket_power(const Opts& o, const SessionDocument& s) {
    Report r = make_report("bracket-power");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    r["inputs"]["e"] = o.e;
    r["tables"]["generators"] =
        ideal_display(bracket_power(need_ideal(s, o.ideal), o.e));
    return r;
}

Report run_splitting_ideal(const Opts& o, const SessionDocument& s) {
    Report r = make_report("splitting-ideal");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    r["inputs"]["e"] = o.e;
    r["tables"]["generators"] =
        ideal_display(splitting_ideal(need_ideal(s, o.ideal), o.e).result);
    return r;
}

Report run_hk(const Opts& o, const SessionDocument& s) {
    Report r = make_report("hk");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    r["inputs"]["e_max"] = o.e_max;
    HkTable table = hk_function(need_ideal(s, o.ideal), o.e_max);
    auto rows = Report::array();
    for (const auto& row : table.rows)
        rows.push_back({{"e", row.e},
                        {"lambda", row.lambda},
                        {"normalized", normalized_value(row.lambda, row.denom)}});
    r["tables"]["hk"] = rows;
    return r;
}

Report run_fsig(const Opts& o, const SessionDocument& s) {
    Report r = make_report("fsig");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    r["inputs"]["e_max"] = o.e_max;
    FsigTable table = fsig_estimates(need_ideal(s, o.ideal), o.e_max);
    auto rows = Report::array();
    auto via = Report::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"e", row.e},
                        {"lambda", row.lambda},
                        {"normalized", normalized_value(row.lambda, row.denom)}});
        via.push_back(
            {{"e", row.e},
             {"lambda", row.via_lambda},
             {"normalized", normalized_value(row.via_lambda, row.via_denom)}});
    }
    r["tables"]["fsig"] = rows;
    r["tables"]["via_hk"] = via;
    return r;
}

Report run_betti(const Opts& o, const SessionDocument& s) {
    Report r = make_report("betti");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["e"] = o.e;
    r["inputs"]["i_max"] = o.i_max;
    if (!o.prime.empty()) r["inputs"]["prime"] = o.prime;
    BettiReport rep = frobenius_betti_euler(s.ring, o.e, o.i_max);
    auto rows = Report::array();
    for (std::size_t i = 0; i < rep.betti.size(); ++i) {
        Report row = {{"i", i}, {"beta", rep.betti[i]}, {"chi", rep.euler[i]}};
        if (i >= 1)
            row["syzygy_rank"] = rep.syzygy_ranks[i - 1]
                                     ? Report(*rep.syzygy_ranks[i - 1])
                                     : Report();
        rows.push_back(row);
    }
    r["tables"]["betti"] = rows;
    r["tables"]["rank_unit"] = rep.rank_unit;
    r["tables"]["notes"] = rep.notes;
    r["verdicts"]["regular_no_higher_betti"] = rep.regular;
    auto opt_bools = [](const std::vector<std::optional<bool>>& v) {
        auto out = Report::array();
        for (const auto& b : v) out.push_back(b ? Report(*b) : Report());
        return out;
    };
    r["verdicts"]["rank_identity"] = opt_bools(rep.rank_identity);
    r["verdicts"]["betti_vs_rank"] = opt_bools(rep.betti_vs_rank);
    r["verdicts"]["euler_bound"] = rep.euler_bound;
    r["verdicts"]["betti_recompute"] = rep.betti_recompute;
    if (!o.prime.empty()) {
        LocalizedBetti loc = localize_betti(rep, need_prime(s, o.prime));
        r["tables"]["localized"] = {{"prime", o.prime},
                                    {"betti", loc.betti},
                                    {"euler", loc.euler}};
        r["verdicts"]["betti_semicontinuous"] = loc.betti_semi;
        r["verdicts"]["euler_semicontinuous"] = loc.euler_semi;
    }
    return r;
}

Report run_equi_check(const Opts& o, const SessionDocument& s) {
    Report r = make_report("equi-check");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["prime"] = o.prime;
    r["inputs"]["e"] = o.e;
    if (o.mode.empty())
        throw PreconditionError("missing required flag --mode (fsig or hk)");
    r["inputs"]["mode"] = o.mode;
    std::optional<Ideal> extra;
    if (!o.ideal.empty()) {
        if (o.mode != "fsig")
            throw PreconditionError("--ideal applies to the fsig mode only");
        extra = need_ideal(s, o.ideal);
        r["inputs"]["ideal"] = o.ideal;
    }
    EquiCheckResult res = equi_check(need_prime(s, o.prime), o.e, o.mode, extra);
    if (o.mode == "fsig") {
        r["tables"]["lhs"] = ideal_display(res.lhs);
        r["tables"]["rhs"] = ideal_display(res.rhs);
        if (!res.equal) r["witnesses"]["witness"] = to_string(res.witness);
    } else {
        r["tables"]["mu_global"] = res.mu_global;
        r["tables"]["mu_local"] = res.mu_local;
    }
    r["verdicts"]["equal"] = res.equal;
    return r;
}

Report run_depth_probe(const Opts& o, const SessionDocument& s) {
    Report r = make_report("depth-probe");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["prime"] = o.prime;
    r["inputs"]["e"] = o.e;
    DepthProbeResult res = depth_probe(need_prime(s, o.prime), o.e,
                                       default_depth_candidates(s.ring));
    r["tables"]["target"] = ideal_display(res.target);
    auto seq = Report::array();
    for (const auto& c : res.sequence) seq.push_back(to_string(c));
    r["tables"]["sequence"] = seq;
    r["tables"]["depth"] = res.sequence.size();
    r["verdicts"]["certified"] = res.certified;
    if (res.certified) r["witnesses"]["obstruction"] = to_string(res.obstruction);
    return r;
}

Report run_assoc_check(const Opts& o, const SessionDocument& s) {
    Report r = make_report("assoc-check");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["ideal"] = o.ideal;
    r["inputs"]["params"] = o.params;
    r["inputs"]["e"] = o.e;
    r["inputs"]["n_max"] = o.n_max;
    std::vector<Polynomial> xs;
    for (const auto& text : o.params)
        xs.push_back(parse_polynomial(s.ring, text));
    std::vector<std::string> prime_names;
    std::vector<Ideal> primes;
    for (const auto& [name, p] : s.primes) {
        prime_names.push_back(name);
        primes.push_back(p);
    }
    AssocCheckResult res =
        assoc_check(need_ideal(s, o.ideal), xs, o.e, o.n_max, primes);
    auto lam = Report::array();
    for (std::size_t n = 0; n < res.lambda.size(); ++n)
        lam.push_back({{"n", n + 1}, {"lambda", res.lambda[n]}});
    r["tables"]["lambda"] = lam;
    auto lhs = Report::array();
    for (std::size_t n = 0; n < res.lhs.size(); ++n)
        lhs.push_back({{"n", n + 1}, {"value", res.lhs[n].str()}});
    r["tables"]["lhs"] = lhs;
    auto comps = Report::array();
    for (std::size_t k = 0; k < primes.size(); ++k)
        comps.push_back({{"prime", prime_names[k]},
                         {"multiplicity", res.component_mult[k]},
                         {"local_length", res.component_length[k]}});
    r["tables"]["components"] = comps;
    r["tables"]["rhs"] = {{"value", res.rhs},
                          {"unfactored", res.rhs_unfactored},
                          {"unfactored_match", res.unfactored_match}};
    r["verdicts"]["stabilized"] = res.stabilized;
    r["verdicts"]["nonincreasing"] = res.nonincreasing;
    r["verdicts"]["monotone_step"] = res.mono_step;
    r["verdicts"]["monotone_ratio"] = res.mono_ratio;
    r["verdicts"]["claim"] = res.claim;
    return r;
}

Report run_fpure(const Opts& o, const SessionDocument& s) {
    Report r = make_report("fpure");
    r["inputs"]["ring"] = ring_display(s.ring);
    r["inputs"]["e"] = o.e;
    r["tables"]["method"] =
        s.ring->has_modulus() ? "fedder" : "polynomial ring";
    r["verdicts"]["fpure"] = fedder_is_fpure(s.ring, o.e);
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frobenius invariants of F_p polynomial rings and "
                 "hypersurface quotients"};
    app.require_subcommand(1);
    Opts o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("session", o.session, "session file (JSON)")
            ->required();
        sub->add_option("--out", o.out, "write the report to this path");
        sub->add_flag("--assert", o.assert_checks,
                      "exit 2 when any verdict is false");
        return sub;
    };
    auto add_e = [&](CLI::App* sub) {
        sub->add_option("--e", o.e, "Frobenius iterate (default 1)");
        return sub;
    };

    auto* c_groebner = add_common(app.add_subcommand(
        "groebner", "reduced Groebner basis of a named ideal"));
    c_groebner->add_option("--ideal", o.ideal, "ideal name");
    auto* c_colength = add_common(app.add_subcommand(
        "colength", "vector space dimension of the quotient"));
    c_colength->add_option("--ideal", o.ideal, "ideal name");
    auto* c_bracket = add_e(add_common(app.add_subcommand(
        "bracket-power", "p^e-th bracket power of a named ideal")));
    c_bracket->add_option("--ideal", o.ideal, "ideal name");
    auto* c_split = add_e(add_common(app.add_subcommand(
        "splitting-ideal", "splitting ideal I_e of a named ideal")));
    c_split->add_option("--ideal", o.ideal, "ideal name");
    auto* c_hk = add_common(app.add_subcommand(
        "hk", "Hilbert-Kunz colengths lambda(R/I^[p^e])"));
    c_hk->add_option("--ideal", o.ideal, "ideal name");
    c_hk->add_option("--e-max", o.e_max, "largest e (default 2)");
    auto* c_fsig = add_common(app.add_subcommand(
        "fsig", "F-signature estimates lambda(R/I_e)/p^(e dim)"));
    c_fsig->add_option("--ideal", o.ideal, "ideal name");
    c_fsig->add_option("--e-max", o.e_max, "largest e (default 2)");
    auto* c_betti = add_e(add_common(app.add_subcommand(
        "betti", "Frobenius Betti and Euler numbers")));
    c_betti->add_option("--i-max", o.i_max, "largest homological index (default 2)");
    c_betti->add_option("--prime", o.prime, "also localize at this prime");
    auto* c_equi = add_e(add_common(app.add_subcommand(
        "equi-check", "equimultiplicity criterion at a prime")));
    c_equi->add_option("--prime", o.prime, "prime name");
    c_equi->add_option("--mode", o.mode, "fsig or hk");
    c_equi->add_option("--ideal", o.ideal, "extra ideal (fsig mode; default m)");
    auto* c_depth = add_e(add_common(app.add_subcommand(
        "depth-probe", "depth of R/I_e(p) by regular sequence search")));
    c_depth->add_option("--prime", o.prime, "prime name");
    auto* c_assoc = add_e(add_common(app.add_subcommand(
        "assoc-check", "associativity formula at fixed e")));
    c_assoc->add_option("--ideal", o.ideal, "ideal name");
    c_assoc->add_option("--params", o.params,
                        "parameter polynomials (one per occurrence)");
    c_assoc->add_option("--n-max", o.n_max, "largest n (default 8)");
    auto* c_fpure = add_e(add_common(
        app.add_subcommand("fpure", "F-purity via Fedder's criterion")));

    CLI11_PARSE(app, argc, argv);

    Report rep;
    try {
        frob::SessionDocument session = frob::load_session(o.session);
        auto t0 = std::chrono::steady_clock::now();
        if (app.got_subcommand(c_groebner)) rep = run_groebner(o, session);
        else if (app.got_subcommand(c_colength)) rep = run_colength(o, session);
        else if (app.got_subcommand(c_bracket)) rep = run_bracket_power(o, session);
        else if (app.got_subcommand(c_split)) rep = run_splitting_ideal(o, session);
        else if (app.got_subcommand(c_hk)) rep = run_hk(o, session);
        else if (app.got_subcommand(c_fsig)) rep = run_fsig(o, session);
        else if (app.got_subcommand(c_betti)) rep = run_betti(o, session);
        else if (app.got_subcommand(c_equi)) rep = run_equi_check(o, session);
        else if (app.got_subcommand(c_depth)) rep = run_depth_probe(o, session);
        else if (app.got_subcommand(c_assoc)) rep = run_assoc_check(o, session);
        else if (app.got_subcommand(c_fpure)) rep = run_fpure(o, session);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << "timing: " << rep["command"].get<std::string>() << " "
                  << ms << " ms\n";
    } catch (const frob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text = frob::render_report(rep);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write report to " << o.out << "\n";
            return 1;
        }
        out << text;
    }
    if (o.assert_checks && !frob::verdicts_all_true(rep)) return 2;
    return 0;
}
