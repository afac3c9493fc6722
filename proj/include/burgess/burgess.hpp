#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgess/constants.hpp"
#include "burgess/real.hpp"

namespace burgess::core {

enum class Parity { Even, Odd };

struct PVConstants {
    Parity parity;
    Real q0;
    Real alpha1;  // 2/pi^2 (even), 1/(2 pi) (odd)
    Real alpha2;  // rounded up
};

// alpha1 for the explicit Polya-Vinogradov inequality
Real pv_alpha1(Parity parity);

// alpha2 per the large-modulus refinement; valid for q0 >= 1200 (even) or
// q0 >= 40 (odd). Rounded up.
Real pv_alpha2(Parity parity, const Real& q0);

PVConstants pv_constants(Parity parity, const Real& q0);

// (2r-1)!! B^r p + (2r-1) B^{2r} sqrt(p), rounded up; requires r <= 9B
Real weil_bound(const Real& p, const Real& B, long r);

// B minimizing the moment factor: ((2r-3)!!(r-1))^{1/r} p^{1/(2r)}
Real choose_B(long r, const Real& p);

// p-free part of (2WB)^{1/(2r)}/B at the chosen B
Real moment_factor(long r);

// window ceiling nu_r(p): 2p^{5/8} for r=2, else
// min(2 p^{1/2+1/(4r)}, (C(r-1)/trial)^{r(r-1)} p^{1/4+1/(2r)+1/(4r(r-1))} sqrt(log p))
Real nu(long r, const Real& p, const std::optional<Real>& prior_C, const Real& trial);

// the master formula for C(r) at parameters (A, k); nullopt when the error
// denominator is non-positive or the bracket sits below its lemma floor
std::optional<Real> C_formula(long r, const Real& p, const Real& A, const Real& k, const Real& B,
                              const Real& nu_val, const Real& logp);

// the r=2 full-log-power formula c(2) at (A, k); B = p^{1/4}
std::optional<Real> c2_formula(const Real& p, const Real& A, const Real& k, const Real& B,
                               const Real& nu_val, const Real& logp);

enum class Mode {
    HalfLog,  // exponent 1/(2r) on log p
    FullLog,  // exponent 1/r; implemented for r = 2
};

struct BurgessParams {
    long r = 2;
    Real p0;
    Mode mode = Mode::HalfLog;
    Parity parity = Parity::Even;      // FullLog only
    std::optional<Real> prior;         // C(r-1), required for HalfLog r >= 3
    Real trial0 = Real(1);             // initial underline guess
    int grid_points = 2000;            // geometric A-grid size
    int refine_points = 100;           // linear refinement around the incumbent
    Real fix_tol = Real::parse("1e-9");
    int max_iterations = 80;
};

struct ConstantResult {
    long r = 0;
    Real p0;
    Mode mode = Mode::HalfLog;
    Parity parity = Parity::Even;
    Real value;       // full-precision optimum
    Real rounded;     // ceiling at the 4th decimal
    Real k_star;      // optimizing k = AB/N
    Real A0;          // evaluation point A
    Real B;
    Real nu_val;
    Real trial;       // underline constant of the final iteration
    int iterations = 0;
    bool adjusted = false;  // bootstrap replacement applied
};

// fixed-point optimization of the constant for the given parameters
ConstantResult optimize_constant(const BurgessParams& params);

// bootstrap Remark: replace C(2;p0) by c(2;p0)(log p1)^{1/4} with p1 = 10 p0
// when C(2;p1) <= c(2;p0)(log p1)^{1/4} <= C(2;p0)
ConstantResult bootstrap_adjust(const ConstantResult& c2_even, const ConstantResult& C2_at_p0,
                                const ConstantResult& C2_at_p1);

// condition for dropping the window restriction:
// (c2/Cr)^{2r/(r-2)} < 2 p0^{1/8} / (log p0)^{(r-1)/(r-2)}, with the right
// side verified increasing beyond p0
bool restriction_removal_check(long r, const Real& p0, const Real& c2, const Real& Cr);

// full bootstrap chain at one p0: c(2) both parities, C(2), adjustment,
// then C(3..r_max) each consuming the previous result
struct ChainResult {
    ConstantResult c2_even;
    ConstantResult c2_odd;
    ConstantResult C2_raw;
    ConstantResult C2_published;  // adjusted when the sandwich holds
    std::vector<ConstantResult> higher;  // r = 3..r_max
};

ChainResult run_chain(const Real& p0, long r_max, int grid_points = 2000);

}  // namespace burgess::core
