#pragma once

namespace logwexp {

// Bisection reference for the root of y + exp(y) = x. Deliberately
// self-contained: it shares no code with the Halley evaluator it is used
// to check, so agreement between the two carries weight.

struct Bracket {
    double lo;
    double hi;
};

Bracket bracket(double x);
double oracle_g(double x);

}  // namespace logwexp
