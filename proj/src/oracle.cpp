#include "logwexp/oracle.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

namespace logwexp {

namespace {

double defect(double x, double y) {
    return (y - x) + std::exp(y);
}

double ulp_at(double v) {
    const double a = std::fabs(v);
    return std::nextafter(a, std::numeric_limits<double>::infinity()) - a;
}

}  // namespace

Bracket bracket(double x) {
    if (x < 1.0) {
        // defect(x-1) = exp(x-1) - 1 <= 0 and defect(x) = exp(x) > 0
        return {x - 1.0, x};
    }
    // defect(0) = 1 - x <= 0 and defect(log x) = log x >= 0
    return {0.0, std::log(x)};
}

double oracle_g(double x) {
    const Bracket b = bracket(x);
    double lo = b.lo;
    double hi = b.hi;
    double mid = lo + 0.5 * (hi - lo);

    for (int i = 0; i < 200; ++i) {
        if (hi - lo <= ulp_at(mid)) break;
        if (mid <= lo || mid >= hi) break;
        if (defect(x, mid) > 0.0)
            hi = mid;
        else
            lo = mid;
        mid = lo + 0.5 * (hi - lo);
    }

    // The midpoint and the two interval ends straddle the root within an
    // ulp; keep whichever of the three solves the equation best.
    double best = mid;
    double best_mag = std::fabs(defect(x, best));
    for (double cand : {lo, hi}) {
        const double mag = std::fabs(defect(x, cand));
        if (mag < best_mag) {
            best = cand;
            best_mag = mag;
        }
    }
    return best;
}

}  // namespace logwexp
