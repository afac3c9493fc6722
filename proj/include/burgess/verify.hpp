#pragma once

#include <cstdint>

#include "burgess/burgess.hpp"
#include "burgess/report.hpp"

namespace burgess::verify {

// summatory bounds vs certified-interval exact sums for every integer x <= x_max
report::VerificationSuite lemma_suite(long x_max);

// S1 identity (exact rationals) and S2/S3 domination for A in [2, A_max].
report::VerificationSuite pair_sum_suite(std::uint64_t A_max);

// both V2 bound variants vs exact V2 on a deterministic grid of instances
// with p <= prime_limit; also records the max observed exact/bound ratio.
report::VerificationSuite v2_suite(std::uint64_t prime_limit, std::uint64_t seed);

// Weil-derived moment bound vs exact W on the verification grid.
report::VerificationSuite weil_suite(std::uint64_t prime_limit);

// dual-route V2 equality and character-structure invariants.
report::VerificationSuite character_structure_suite();

// explicit Polya-Vinogradov bound vs the exact max window sum for every
// non-principal character mod every prime in (p_min, p_max].
report::VerificationSuite pv_suite(std::uint64_t p_min, std::uint64_t p_max);

// |S_chi(M,N)| <= C(r;1e5) N^{1-1/r} p^{(r+1)/(4r^2)} (log p)^{1/(2r)}
// for p in primes, characters of order 2 and 3, r in {2,3,4}, sampled N,
// all M via one sliding pass per (chi, N).
report::VerificationSuite burgess_empirical_suite(const std::vector<std::uint64_t>& primes,
                                                  const std::vector<Real>& c_by_r,
                                                  std::uint64_t seed, int n_samples = 6);

// reported, not asserted: least k-th power non-residue below p^{1/4}
struct NonresidueScan {
    std::uint64_t primes_checked = 0;
    std::uint64_t worst_p = 0;
    std::uint64_t worst_k = 0;
    std::uint64_t worst_n = 0;
    double worst_ratio = 0.0;  // n / p^{1/4}
    std::uint64_t exceeding = 0;  // count with n >= p^{1/4} (p >= 7)
};
NonresidueScan least_nonresidue_scan(std::uint64_t limit);

}  // namespace burgess::verify
