#pragma once

#include <map>
#include <string>

#include "frob/ideal.hpp"

namespace frob {

// A parsed session file: one ring, named ideals, named candidate primes.
// Names are unique across both maps so command flags can refer to either.
struct SessionDocument {
    RingPtr ring;
    std::map<std::string, Ideal> ideals;
    std::map<std::string, Ideal> primes;

    // Looks the name up in ideals first, then primes.
    const Ideal* find(const std::string& name) const;
};

SessionDocument load_session(const std::string& path);
SessionDocument parse_session(const std::string& text);

}  // namespace frob
