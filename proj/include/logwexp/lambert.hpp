#pragma once

namespace logwexp {

// Principal-branch Lambert W restricted to strictly positive arguments,
// where the function is single-valued and nonnegative.

struct WResult {
    double argument;
    double value;
};

WResult w_principal(double z);

}  // namespace logwexp
