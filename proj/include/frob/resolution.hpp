#pragma once

#include <string>

#include "frob/frobenius.hpp"

namespace frob {

// A slice of the minimal free resolution of the presented module, local at the
// origin: matrices d_1..d_(i_max+1) with every entry vanishing there, plus the
// Betti numbers beta_0..beta_i_max and the generic ranks of the syzygy modules
// Omega_1..Omega_i_max. Ranks are omitted (with a note) when the quotient is
// detectably not a domain and the component ranks disagree.
struct ResolutionSlice {
    RingPtr ring;
    int64_t e = 0;
    std::vector<PolyMatrix> matrices;
    std::vector<int64_t> betti;
    std::vector<std::optional<int64_t>> syzygy_ranks;
    std::vector<std::string> notes;
};

ResolutionSlice minimal_resolution(const PushforwardPresentation& m,
                                   int64_t i_max);

// Rank of each d_i over the residue field at p (i = 1..matrices.size()),
// computed by elimination with normal-form zero tests against p. These are the
// pivot counts of minimalization at p; localized Betti numbers follow as
// beta_i - u_i - u_(i+1).
std::vector<int64_t> localized_ranks(const ResolutionSlice& slice,
                                     const Ideal& p);

}  // namespace frob
