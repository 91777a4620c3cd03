#pragma once

namespace echarge {

/// Closed interval [lo, hi] in bits.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] bool   degenerate(double tol = 1e-9) const noexcept { return width() <= tol && width() >= -tol; }
};

} // namespace echarge
