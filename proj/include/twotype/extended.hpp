#pragma once

#include <limits>
#include <stdexcept>

namespace twotype {

// Nonnegative quantity that may be infinite (size-biased mean nu, critical
// parameter lambda_c). Infinity is an explicit state, not a sentinel float,
// because it marks a distinct regime (heavy-tailed degrees force a giant
// component regardless of the mixing parameters).
class ExtReal {
public:
    ExtReal(double v) : value_(v), infinite_(false) {} // NOLINT: implicit by design

    static ExtReal inf() {
        ExtReal r(0.0);
        r.infinite_ = true;
        return r;
    }

    bool infinite() const { return infinite_; }

    double value() const {
        if (infinite_) throw std::logic_error("ExtReal: value() on an infinite quantity");
        return value_;
    }

    // For printing and plotting: +inf as a double.
    double value_or_inf() const {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
        return a.value_ == b.value_;
    }

private:
    double value_;
    bool infinite_;
};

} // namespace twotype
