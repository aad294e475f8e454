#pragma once

#include <optional>
#include <vector>

#include "commat/grading.hpp"
#include "commat/homotopy.hpp"

namespace commat {

/// One induced summand Ind_{Sigma_n}^{FI}(coeff_group): evaluating the whole
/// decomposition at m gives the direct sum of C(m,n) copies of each
/// coeff_group, which equals pi_group(family, k, m).
struct FISummand {
    long long n = 0;
    FinAbGroup coeff_group;
};

struct FIDecomposition {
    SpaceFamily family{};
    int k = 0;
    std::vector<FISummand> summands;  // zero groups omitted, n ascending
    /// True when no summand with n > the scanned bound can be nonzero
    /// (by the monomial cutoff, see stability_cutoff).
    bool exact = false;
};

/// Coefficient group of the n-th induced summand for pi_k:
/// pi_{k-n}(ku), pi_{k-n}(HZ), or the RO-graded group in degree k - n*sigma
/// of the kR / HZ coefficients. Families Bcom*/Spin are unsupported.
FinAbGroup fi_coefficient_group(SpaceFamily family, int k, long long n);

/// Whether summands vanish for all n beyond some finite bound, and the bound.
/// Derived from the canonical-monomial shapes: a nonzero contribution with
/// n > k requires an a-power tower, which exists iff k == 0 mod 4 (kR side)
/// or k even (HZ side).
struct StabilityCutoff {
    bool finite = false;
    long long bound = 0;  // nonzero summands have n <= bound when finite
};
StabilityCutoff stability_cutoff(SpaceFamily family, int k);

FIDecomposition fi_decomposition(SpaceFamily family, int k, long long n_max);

struct StabilityVerdict {
    bool stable = false;
    /// Largest n with a nonzero induced summand; absent for the zero module
    /// and for unstable functors.
    std::optional<long long> stable_from;
};

StabilityVerdict is_rep_stable(SpaceFamily family, int k);

}  // namespace commat
