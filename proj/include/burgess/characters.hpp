#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "burgess/real.hpp"

namespace burgess::chars {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);
u64 pow_mod(u64 b, u64 e, u64 m);
u64 inv_mod(u64 a, u64 m);
// smallest primitive root mod p (deterministic; p prime)
u64 primitive_root(u64 p);

// Dirichlet character mod a prime p of exact order k | p-1, tabulated as
// exponent indices: chi(n) = zeta_k^{expo[n]}, chi(0) = 0 (expo -1).
class DirichletCharacter {
  public:
    // index selects chi(g)=zeta_k^index; gcd(index,k)=1 keeps the order exactly k
    DirichletCharacter(u64 p, u64 order, u64 index = 1);

    u64 modulus() const { return p_; }
    u64 order() const { return k_; }
    u64 generator() const { return g_; }
    bool principal() const { return k_ == 1; }
    // chi(-1) = +1 (even) or -1 (odd)
    bool even() const;

    // exponent of chi(n) in [0,k), or -1 when p | n
    i64 exponent(u64 n) const { return expo_[n % p_]; }
    std::complex<double> value(u64 n) const {
        i64 e = exponent(n);
        return e < 0 ? std::complex<double>(0.0, 0.0) : roots_[static_cast<size_t>(e)];
    }
    const std::vector<std::complex<double>>& roots() const { return roots_; }

  private:
    u64 p_, k_, g_, index_;
    std::vector<i64> expo_;
    std::vector<std::complex<double>> roots_;
};

struct WindowSum {
    u64 M;
    u64 N;
    std::complex<double> value;
    double abs;
};

// exact S_chi(M,N) = sum_{n=M+1}^{M+N} chi(n)
WindowSum window_sum(const DirichletCharacter& chi, u64 M, u64 N);

struct V2Exact {
    u64 p, A, N, M;
    u64 count;  // sum over residues of v(x)^2
};

// histogram route: v(x) = #{(a,n): 1<=a<=A, M<n<=M+N, n = ax mod p}
V2Exact v2_exact(u64 p, u64 A, u64 N, u64 M);
// independent quadruple-count route, O((AN)^2); for cross-checking small cases
u64 v2_exact_quadruple_scan(u64 p, u64 A, u64 N, u64 M);

struct WeilMoment {
    Real value;         // exact 2r-th moment, high-precision accumulation
    Real error_budget;  // bound on accumulated floating error
    bool exact_integer; // true when computed in exact integer arithmetic
};

// W = sum_x |sum_{b<=B} chi(x+b)|^{2r}. Exact integers for orders 1,2,3,4,6;
// otherwise long double terms accumulated in mpfr with an explicit budget.
WeilMoment weil_moment(const DirichletCharacter& chi, u64 B, u64 r);

// max over sampled window starts of |S_chi(M,N)|; M_all uses one O(p) pass
double max_window_sum(const DirichletCharacter& chi, u64 N);
double max_window_sum_sampled(const DirichletCharacter& chi, u64 N,
                              const std::vector<u64>& starts);

// max over all N and all M of |S_chi(M,N)|: diameter of the prefix-sum set
// (convex hull + rotating calipers; real-valued fast path for order 2)
double max_window_sum_all_n(const DirichletCharacter& chi);

// least n >= 2 with n not a k-th power residue mod p (k | p-1)
u64 least_power_nonresidue(u64 p, u64 k);

}  // namespace burgess::chars
