#pragma once

// Exact oracles used by the test suites. Independent of the bound
// implementations they check: plain summation, sieves, rational arithmetic.

#include <gmp.h>

#include <cstdint>
#include <vector>

#include "burgess/real.hpp"

namespace oracles {

// exact harmonic number as a rational, reduced
class RationalHarmonic {
  public:
    RationalHarmonic() { mpq_init(h_); }
    ~RationalHarmonic() { mpq_clear(h_); }
    // advance to H_{n}, n must increase by 1 each call
    void step(unsigned long n) {
        mpq_t t;
        mpq_init(t);
        mpq_set_ui(t, 1, n);
        mpq_add(h_, h_, t);
        mpq_clear(t);
    }
    // compare against a Real: -1, 0, +1 as H <=> x
    int cmp(const burgess::Real& x) const { return -mpfr_cmp_q(x.raw(), h_); }
    double to_double() const { return mpq_get_d(h_); }

  private:
    mpq_t h_;
};

inline std::vector<std::uint32_t> phi_sieve(std::uint32_t n) {
    std::vector<std::uint32_t> phi(n + 1);
    for (std::uint32_t i = 0; i <= n; ++i) phi[i] = i;
    for (std::uint32_t i = 2; i <= n; ++i)
        if (phi[i] == i)
            for (std::uint32_t j = i; j <= n; j += i) phi[j] -= phi[j] / i;
    return phi;
}

}  // namespace oracles
