#include "frob/report.hpp"

#include <algorithm>

#include "frob/parse.hpp"
#include "frob/polynomial.hpp"

namespace frob {

Report make_report(const std::string& command) {
    Report r;
    r["command"] = command;
    r["inputs"] = Report::object();
    r["tables"] = Report::object();
    r["verdicts"] = Report::object();
    r["witnesses"] = Report::object();
    r["timings"] = Report::object();
    return r;
}

std::string ring_display(const RingPtr& ring) {
    std::string s = "F_" + std::to_string(ring->p) + "[";
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
        if (i) s += ",";
        s += ring->vars[i];
    }
    s += "]";
    if (ring->has_modulus())
        s += " / (" + to_string(modulus_poly(ring)) + ")";
    return s;
}

std::vector<std::string> ideal_display(const Ideal& i) {
    std::vector<std::string> out;
    std::vector<Polynomial> mod;
    if (i.ring()->has_modulus()) mod.push_back(modulus_poly(i.ring()));
    for (const auto& g : i.gb()) {
        if (!mod.empty() && normal_form(g, mod).is_zero()) continue;
        out.push_back(to_string(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string render_report(const Report& r) { return r.dump(2) + "\n"; }

namespace {
bool all_true(const Report& v) {
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_array() || v.is_object())
        for (const auto& item : v)
            if (!all_true(item)) return false;
    return true;
}
}  // namespace

bool verdicts_all_true(const Report& r) {
    if (!r.contains("verdicts")) return true;
    return all_true(r["verdicts"]);
}

}  // namespace frob
