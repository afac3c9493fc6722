#include "burgess/burgess.hpp"

#include <stdexcept>

#include "burgess/interval.hpp"

namespace burgess::core {

namespace {

// The window-count bracket cannot fall below (6/pi^2)log(2 e^gamma) + 1 ~ 1.77
// for any admissible A, N; points below this are outside the provable region.
const char* kBracketFloor = "1.7";

Real bracket_floor() { return Real::parse(kBracketFloor); }

Real half(const Real& x) { return div(x, Real(2)); }

Real euler_corr_exponent(const Real& A) {
    Real A2 = A * A;
    return euler_gamma() + div(Real(1), Real(2) * A) - div(Real(1), Real(12) * A2) +
           div(Real(1), Real(64) * A2 * A2);
}

}  // namespace

Real pv_alpha1(Parity parity) {
    Real pi = pi_const();
    return parity == Parity::Even ? div(Real(2), pi * pi) : div(Real(1), Real(2) * pi);
}

Real pv_alpha2(Parity parity, const Real& q0) {
    // the bound itself is valid for q0 >= 1200 (even) / 40 (odd); the formula
    // is evaluated down to 40 so the alpha2 <= 1 crossover can be bracketed
    if (q0 < Real(40)) throw std::domain_error("pv_alpha2: q0 >= 40 required");
    Interval q(q0);
    Interval pi = pi_iv();
    Interval arg = (parity == Parity::Even)
                       ? pow(pi, iv(4)) / iv(16) + Interval::parse("5.075") * pi * pi / sqrt(q) +
                             Interval::parse("103.0225") / q
                       : pi * pi + Interval::parse("20.30") * pi / sqrt(q) +
                             Interval::parse("103.0225") / q;
    Interval a1 = (parity == Parity::Even) ? iv(2) / (pi * pi) : iv(1) / (iv(2) * pi);
    Interval a2 = a1 * (log(arg) + Interval::parse("2.8650"));
    return a2.upper();
}

PVConstants pv_constants(Parity parity, const Real& q0) {
    return {parity, q0, pv_alpha1(parity), pv_alpha2(parity, q0)};
}

Real weil_bound(const Real& p, const Real& B, long r) {
    if (Real(r) > Real(9) * B) throw std::domain_error("weil_bound: r <= 9B required");
    Interval P(p), Bi(B);
    Interval dfac(double_factorial_odd(2 * r - 1));
    Interval b = dfac * pow(Bi, iv(r)) * P + iv(2 * r - 1) * pow(Bi, iv(2 * r)) * sqrt(P);
    return b.upper();
}

Real choose_B(long r, const Real& p) {
    Real c = double_factorial_odd(2 * r - 3) * Real(r - 1);
    return root_ui(c, static_cast<unsigned long>(r)) *
           pow(p, div(Real(1), Real(2 * r)));
}

Real moment_factor(long r) {
    if (r < 2) throw std::domain_error("moment_factor: r >= 2 required");
    Real t1 = pow(Real(2), div(Real(1), Real(2 * r)));
    Real inner = double_factorial_odd(2 * r - 3) * Real(r - 1);
    Real t2 = pow(inner, div(Real(1), Real(2 * r * r)));
    long num = (2 * r - 3) * (2 * r - 1) * (r - 1) + 1;
    long den = (2 * r - 3) * (r - 1);
    Real t3 = pow(div(Real(num), Real(den)), div(Real(1), Real(2 * r)));
    return t1 * t2 * t3;
}

Real nu(long r, const Real& p, const std::optional<Real>& prior_C, const Real& trial) {
    if (r == 2) return Real(2) * pow(p, div(Real(5), Real(8)));
    if (!prior_C) throw std::invalid_argument("nu: prior C(r-1) required for r >= 3");
    Real b1 = Real(2) * pow(p, div(Real(1), Real(2)) + div(Real(1), Real(4 * r)));
    Real expo = div(Real(1), Real(4)) + div(Real(1), Real(2 * r)) + div(Real(1), Real(4 * r * (r - 1)));
    Real b2 = pow(div(*prior_C, trial), Real(r * (r - 1))) * pow(p, expo) * sqrt(log(p));
    return min(b1, b2);
}

std::optional<Real> C_formula(long r, const Real& p, const Real& A, const Real& k, const Real& B,
                              const Real& nu_val, const Real& logp) {
    if (!(A > Real(2))) return std::nullopt;
    Real bracket = div(Real(6), pi_const() * pi_const()) *
                       log(exp(euler_corr_exponent(A)) * k * nu_val / B) +
                   div(Real(3), Real(2)) + div(k, Real(2) * B) - div(Real(1), Real(2) * nu_val) -
                   div(Real(1), A);
    if (bracket < bracket_floor()) return std::nullopt;
    Real core = pow(div(bracket, k * logp), div(Real(1), Real(2 * r)));
    Real shape = pow(div((A + Real(1)) * (B + Real(1)), A * B),
                     Real(2) - div(Real(1), Real(r)));
    Real front = div(A * B, (A - Real(1)) * (B - Real(1)));
    Real err = div(Real(2 * r * r), Real((2 * r - 1) * (2 * r - 1))) *
               pow(k, Real(1) - div(Real(1), Real(r))) * shape * front;
    Real den = Real(1) - err;
    if (!(den > Real(0))) return std::nullopt;
    return front * moment_factor(r) * core / den;
}

std::optional<Real> c2_formula(const Real& p, const Real& A, const Real& k, const Real& B,
                               const Real& nu_val, const Real& logp) {
    if (!(A > Real(2))) return std::nullopt;
    Real bracket = Real::parse("0.83575") * k * nu_val * nu_val / (p * B) +
                   div(Real(6), pi_const() * pi_const()) *
                       log(exp(euler_corr_exponent(A)) * k * nu_val / B) +
                   div(Real(3), Real(2)) + div(k, Real(2) * B) - div(Real(1), Real(2) * nu_val) -
                   div(Real(1), A);
    if (bracket < bracket_floor()) return std::nullopt;
    Real core = pow(div(bracket, k * logp * logp), div(Real(1), Real(4)));
    Real shape = pow(div((A + Real(1)) * (B + Real(1)), A * B), div(Real(3), Real(2)));
    Real front = div(A * B, (A - Real(1)) * (B - Real(1)));
    Real err = div(Real(8), Real(9)) * sqrt(k) * shape * front;
    Real den = Real(1) - err;
    if (!(den > Real(0))) return std::nullopt;
    return front * pow(Real(8), div(Real(1), Real(4))) * core / den;
}

namespace {

struct MapResult {
    Real value;
    Real A;
    Real k;
};

// One evaluation of the inner optimization at a fixed trial constant:
// minimize the formula over the admissible A-range (equivalently over k).
std::optional<MapResult> engine_map(const BurgessParams& prm, const Real& trial) {
    const Real& p = prm.p0;
    Real logp = log(p);
    Real B, Nfloor, nu_val, Ahi, logpow;
    bool full = (prm.mode == Mode::FullLog);
    if (full) {
        if (prm.r != 2) throw std::invalid_argument("FullLog mode is implemented for r = 2");
        B = pow(p, div(Real(1), Real(4)));
        Nfloor = trial * trial * pow(p, div(Real(3), Real(8))) * logp;
        Real a1 = pv_alpha1(prm.parity);
        Real a2 = pv_alpha2(prm.parity, p);
        Real pv = a1 * sqrt(p) * logp + a2 * sqrt(p);
        nu_val = div(pv * pv, Nfloor);
        Real khi = div(B, Real(11));
        Ahi = div(khi * Nfloor, B);
    } else {
        B = choose_B(prm.r, p);
        Nfloor = pow(trial, Real(prm.r)) *
                 pow(p, div(Real(1), Real(4)) + div(Real(1), Real(4 * prm.r))) * sqrt(logp);
        nu_val = nu(prm.r, p, prm.prior, trial);
        // admissible k ceiling: 2 A N < p at the evaluation pair for r = 2,
        // and at the window ceiling for r >= 3
        Real khi = (prm.r == 2) ? div(B * p, Real(2) * Nfloor * Nfloor)
                                : div(B * p, Real(2) * nu_val * nu_val);
        Ahi = div(khi * Nfloor, B);
    }
    Real Alo = Real(2) + Real::parse("1e-9");
    if (!(Ahi > Alo)) return std::nullopt;

    auto eval = [&](const Real& A) -> std::optional<Real> {
        Real k = div(A * B, Nfloor);
        return full ? c2_formula(p, A, k, B, nu_val, logp)
                    : C_formula(prm.r, p, A, k, B, nu_val, logp);
    };

    std::optional<Real> best;
    Real bestA;
    auto consider = [&](const Real& A) {
        auto v = eval(A);
        if (v && (!best || *v < *best)) {
            best = *v;
            bestA = A;
        }
    };

    // stage 1: geometric sweep of the full admissible range
    int n1 = prm.grid_points;
    Real ratio1 = pow(div(Ahi, Alo), div(Real(1), Real(n1 - 1)));
    {
        Real A = Alo;
        for (int i = 0; i < n1; ++i) {
            consider(A);
            A = A * ratio1;
        }
    }
    if (!best) return std::nullopt;

    // stage 2: geometric zoom (needed when the range spans many decades)
    Real lo = max(Alo, div(bestA, ratio1 * ratio1));
    Real hi = min(Ahi, bestA * ratio1 * ratio1);
    {
        int n2 = 160;
        Real ratio2 = pow(div(hi, lo), div(Real(1), Real(n2 - 1)));
        Real A = lo;
        for (int i = 0; i < n2; ++i) {
            consider(A);
            A = A * ratio2;
        }
        lo = max(Alo, div(bestA, ratio2 * ratio2));
        hi = min(Ahi, bestA * ratio2 * ratio2);
    }

    // stage 3: linear refinement around the incumbent
    {
        int n3 = prm.refine_points;
        Real step = div(hi - lo, Real(n3 - 1));
        Real A = lo;
        for (int i = 0; i < n3; ++i) {
            consider(A);
            A = A + step;
        }
    }

    // stage 4: golden-section polish (the objective is smooth near the optimum)
    {
        Real gr = half(sqrt(Real(5)) - Real(1));
        Real a = max(Alo, div(bestA, ratio1));
        Real b = min(Ahi, bestA * ratio1);
        Real c = b - gr * (b - a);
        Real d = a + gr * (b - a);
        auto fc = eval(c), fd = eval(d);
        for (int i = 0; i < 120; ++i) {
            bool left = fc && (!fd || *fc < *fd);
            if (left) {
                b = d;
                d = c;
                fd = fc;
                c = b - gr * (b - a);
                fc = eval(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + gr * (b - a);
                fd = eval(d);
            }
        }
        if (fc && *fc < *best) {
            best = *fc;
            bestA = c;
        }
        if (fd && *fd < *best) {
            best = *fd;
            bestA = d;
        }
    }

    return MapResult{*best, bestA, div(bestA * B, Nfloor)};
}

}  // namespace

ConstantResult optimize_constant(const BurgessParams& prm) {
    if (prm.mode == Mode::HalfLog && prm.r >= 3 && !prm.prior)
        throw std::invalid_argument("optimize_constant: prior C(r-1) required for r >= 3");
    Real trial = prm.trial0;
    std::optional<MapResult> prev;
    Real prev_trial = trial;
    Real eps = Real::parse("1e-12");
    Real cap(50);
    int it = 0;
    for (; it < prm.max_iterations; ++it) {
        BurgessParams local = prm;
        auto res = engine_map(local, trial);
        bool bad = !res || res->value > cap;
        if (bad) {
            if (!prev) {
                trial = trial * Real::parse("1.25");
                if (trial > Real(1000))
                    throw std::runtime_error("optimize_constant: no feasible window found");
                continue;
            }
            trial = half(trial + prev_trial);
            continue;
        }
        if (prev && abs(res->value - prev->value) < prm.fix_tol) {
            prev = res;
            ++it;
            break;
        }
        prev_trial = trial;
        trial = res->value - eps;
        prev = res;
    }
    if (!prev) throw std::runtime_error("optimize_constant: did not converge");

    ConstantResult out;
    out.r = prm.r;
    out.p0 = prm.p0;
    out.mode = prm.mode;
    out.parity = prm.parity;
    out.value = prev->value;
    out.rounded = ceil_decimals(prev->value, 4);
    out.k_star = prev->k;
    out.A0 = prev->A;
    out.B = (prm.mode == Mode::FullLog) ? pow(prm.p0, div(Real(1), Real(4)))
                                        : choose_B(prm.r, prm.p0);
    out.trial = prev_trial;
    out.nu_val = (prm.mode == Mode::FullLog)
                     ? Real(0)
                     : nu(prm.r, prm.p0, prm.prior, prev_trial);
    out.iterations = it;
    return out;
}

ConstantResult bootstrap_adjust(const ConstantResult& c2_even, const ConstantResult& C2_at_p0,
                                const ConstantResult& C2_at_p1) {
    Real p1 = Real(10) * C2_at_p0.p0;
    Real candidate = c2_even.value * pow(log(p1), div(Real(1), Real(4)));
    if (C2_at_p1.value <= candidate && candidate <= C2_at_p0.value) {
        ConstantResult adj = C2_at_p0;
        adj.value = candidate;
        adj.rounded = ceil_decimals(candidate, 4);
        adj.adjusted = true;
        return adj;
    }
    return C2_at_p0;
}

bool restriction_removal_check(long r, const Real& p0, const Real& c2, const Real& Cr) {
    if (r < 3) throw std::domain_error("restriction_removal_check: r >= 3 required");
    Real expo = div(Real(2 * r), Real(r - 2));
    Real lhs = pow(div(c2, Cr), expo);
    Real logp = log(p0);
    Real rhs_exp = div(Real(r - 1), Real(r - 2));
    Real rhs = div(Real(2) * pow(p0, div(Real(1), Real(8))), pow(logp, rhs_exp));
    if (!(lhs < rhs)) return false;
    // the right side must keep growing beyond p0: sample d/dlogp sign
    Real lp = logp;
    Real prev_val = rhs;
    for (int i = 0; i < 64; ++i) {
        lp = lp * Real::parse("1.07");
        Real val = div(Real(2) * exp(div(lp, Real(8))), pow(lp, rhs_exp));
        if (!(val > prev_val)) return false;
        prev_val = val;
    }
    return true;
}

ChainResult run_chain(const Real& p0, long r_max, int grid_points) {
    ChainResult out;
    BurgessParams c2p;
    c2p.mode = Mode::FullLog;
    c2p.r = 2;
    c2p.p0 = p0;
    c2p.grid_points = grid_points;
    c2p.parity = Parity::Even;
    out.c2_even = optimize_constant(c2p);
    c2p.parity = Parity::Odd;
    out.c2_odd = optimize_constant(c2p);

    BurgessParams C2p;
    C2p.mode = Mode::HalfLog;
    C2p.r = 2;
    C2p.p0 = p0;
    C2p.grid_points = grid_points;
    out.C2_raw = optimize_constant(C2p);
    BurgessParams C2p1 = C2p;
    C2p1.p0 = Real(10) * p0;
    ConstantResult C2_at_p1 = optimize_constant(C2p1);
    out.C2_published = bootstrap_adjust(out.c2_even, out.C2_raw, C2_at_p1);

    Real prior = out.C2_published.value;
    for (long r = 3; r <= r_max; ++r) {
        BurgessParams prm;
        prm.mode = Mode::HalfLog;
        prm.r = r;
        prm.p0 = p0;
        prm.prior = prior;
        prm.grid_points = grid_points;
        ConstantResult res = optimize_constant(prm);
        prior = res.value;
        out.higher.push_back(std::move(res));
    }
    return out;
}

}  // namespace burgess::core
