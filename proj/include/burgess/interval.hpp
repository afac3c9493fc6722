#pragma once

#include "burgess/real.hpp"

namespace burgess {

// Closed interval [lo, hi] with outward-rounded endpoints. Every operation
// rounds lo toward -inf and hi toward +inf, so a chain of operations yields
// certified enclosures; .upper() / .lower() are the directed-rounded results
// the bound functions return.
class Interval {
  public:
    Interval() = default;
    Interval(const Real& point) : lo_(point), hi_(point) {}
    Interval(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::logic_error("Interval: lo > hi");
    }
    static Interval parse(const std::string& s) {
        return Interval(Real::parse(s, Round::Down), Real::parse(s, Round::Up));
    }

    const Real& lower() const { return lo_; }
    const Real& upper() const { return hi_; }
    Real width() const { return sub(hi_, lo_, Round::Up); }
    bool contains(const Real& x) const { return lo_ <= x && x <= hi_; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(add(a.lo_, b.lo_, Round::Down), add(a.hi_, b.hi_, Round::Up));
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(sub(a.lo_, b.hi_, Round::Down), sub(a.hi_, b.lo_, Round::Up));
    }
    friend Interval operator-(const Interval& a) {
        return Interval(neg(a.hi_), neg(a.lo_));
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        // general sign-aware product: min/max over the four corner products
        Real cand_lo = mul(a.lo_, b.lo_, Round::Down);
        Real cand_hi = mul(a.lo_, b.lo_, Round::Up);
        auto fold = [&](const Real& x, const Real& y) {
            cand_lo = min(cand_lo, mul(x, y, Round::Down));
            cand_hi = max(cand_hi, mul(x, y, Round::Up));
        };
        fold(a.lo_, b.hi_);
        fold(a.hi_, b.lo_);
        fold(a.hi_, b.hi_);
        return Interval(cand_lo, cand_hi);
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0)
            throw std::domain_error("Interval division by interval containing zero");
        Real cand_lo = div(a.lo_, b.lo_, Round::Down);
        Real cand_hi = div(a.lo_, b.lo_, Round::Up);
        auto fold = [&](const Real& x, const Real& y) {
            cand_lo = min(cand_lo, div(x, y, Round::Down));
            cand_hi = max(cand_hi, div(x, y, Round::Up));
        };
        fold(a.lo_, b.hi_);
        fold(a.hi_, b.lo_);
        fold(a.hi_, b.hi_);
        return Interval(cand_lo, cand_hi);
    }

    friend Interval log(const Interval& a) {
        return Interval(log(a.lo_, Round::Down), log(a.hi_, Round::Up));
    }
    friend Interval exp(const Interval& a) {
        return Interval(exp(a.lo_, Round::Down), exp(a.hi_, Round::Up));
    }
    friend Interval sqrt(const Interval& a) {
        return Interval(sqrt(a.lo_, Round::Down), sqrt(a.hi_, Round::Up));
    }
    // positive base; enclosure via the four directed corner powers
    friend Interval pow(const Interval& a, const Interval& b) {
        if (a.lo_.sign() <= 0) throw std::domain_error("Interval pow: base must be positive");
        Real cand_lo = pow(a.lo_, b.lo_, Round::Down);
        Real cand_hi = pow(a.lo_, b.lo_, Round::Up);
        auto fold = [&](const Real& x, const Real& y) {
            cand_lo = min(cand_lo, pow(x, y, Round::Down));
            cand_hi = max(cand_hi, pow(x, y, Round::Up));
        };
        fold(a.lo_, b.hi_);
        fold(a.hi_, b.lo_);
        fold(a.hi_, b.hi_);
        return Interval(cand_lo, cand_hi);
    }

  private:
    Real lo_;
    Real hi_;
};

inline Interval iv(long n) { return Interval(Real(n)); }

}  // namespace burgess
