#include "logwexp/lambert.hpp"

#include "logwexp/eval.hpp"

#include <cmath>
#include <stdexcept>

namespace logwexp {

WResult w_principal(double z) {
    if (!(z > 0.0) || std::isinf(z)) {
        // !(z > 0) also catches NaN.
        throw std::domain_error(
            "w_principal: argument must be a positive finite real; "
            "non-positive arguments fall in the two-branch region where W "
            "is multivalued or complex, which is out of scope");
    }

    const double a = std::log(z);
    const double y = evaluate(a).value;

    // W(z) = exp(y) with y solving y + exp(y) = log(z). Taking the log of z
    // drops its low bits, so apply one first-order correction: a_lo is the
    // part of log(z) the rounding lost, r the solver's leftover defect, and
    // dy = (a_lo - r) / (1 + exp(y)) the resulting shift of the root.
    const double ea = std::exp(a);
    const double a_lo = (z - ea) / ea;
    const double ey = std::exp(y);
    const double r = (y - a) + ey;
    const double y_lo = (a_lo - r) / (1.0 + ey);
    return {z, ey + ey * y_lo};
}

}  // namespace logwexp
