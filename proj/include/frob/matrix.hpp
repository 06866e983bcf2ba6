#pragma once

#include <optional>
#include <vector>

#include "frob/groebner.hpp"

namespace frob {

// Dense matrix of polynomial entries, rows x cols.
using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline std::size_t matrix_rows(const PolyMatrix& m) { return m.size(); }
inline std::size_t matrix_cols(const PolyMatrix& m) {
    return m.empty() ? 0 : m.front().size();
}

// Rank of the matrix over the fraction field of the domain cut out by
// zero_gb (entries are read modulo that basis). Division-free row elimination
// with cross-multiplication; pivots favor sparse entries. Returns nullopt if a
// product of two nonzero entries vanishes, which witnesses that the quotient
// by zero_gb is not a domain.
std::optional<int64_t> generic_rank(const PolyMatrix& m,
                                    const std::vector<Polynomial>& zero_gb);

}  // namespace frob
