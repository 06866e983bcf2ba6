#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "frob/ideal.hpp"

namespace frob {

// Reports keep insertion order so the emitted key order is stable:
// command, inputs, tables, verdicts, witnesses, timings.
using Report = nlohmann::ordered_json;

Report make_report(const std::string& command);

std::string ring_display(const RingPtr& ring);

// Canonical reduced-GB generator strings, byte-sorted; classes of the modulus
// itself (zero in the quotient) are dropped.
std::vector<std::string> ideal_display(const Ideal& i);

std::string render_report(const Report& r);

// True when no boolean under r["verdicts"] is false (missing checks pass).
bool verdicts_all_true(const Report& r);

}  // namespace frob
