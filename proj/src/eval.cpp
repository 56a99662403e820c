#include "logwexp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace logwexp {

namespace {

const double kE = std::exp(1.0);

// Largest argument whose exponential is still finite. Iterates are capped
// here so no step can push the cached exponential to infinity.
const double kExpCap = std::log(std::numeric_limits<double>::max());

}  // namespace

EvalPolicy EvalPolicy::fixed(int count) {
    if (count < 1)
        throw std::invalid_argument("EvalPolicy::fixed: count must be >= 1");
    EvalPolicy p;
    p.mode = Mode::FixedIterations;
    p.iterations = count;
    return p;
}

EvalPolicy EvalPolicy::tolerance(double tol, int max_iterations) {
    if (!std::isfinite(tol) || tol < 0.0)
        throw std::invalid_argument("EvalPolicy::tolerance: tol must be finite and >= 0");
    if (max_iterations < 1)
        throw std::invalid_argument("EvalPolicy::tolerance: max_iterations must be >= 1");
    EvalPolicy p;
    p.mode = Mode::ResidualTolerance;
    p.iterations = max_iterations;
    p.tol = tol;
    return p;
}

HalleyState HalleyState::at(double y) {
    const double capped = std::min(y, kExpCap);
    return {capped, std::exp(capped)};
}

double initial_estimate(double x) {
    if (x <= -kE) return x;
    if (x >= kE) return std::log(x);
    // Chord through the endpoint values (-e, -e) and (e, 1); at most a few
    // tenths off anywhere in between, which the iteration mops up quickly.
    return -kE + (x + kE) * ((1.0 + kE) / (2.0 * kE));
}

double residual(double x, double y) {
    return (y - x) + std::exp(y);
}

HalleyState halley_step(double x, const HalleyState& state) {
    const double h = (state.y - x) + state.exp_y;
    if (h == 0.0) return state;

    // Rescaled Halley update: with t = h/h' and rho = exp(y)/h', the usual
    // y - 2*h*h' / (2*h'^2 - h*h'') turns into y - t / (1 - t*rho/2), which
    // never squares h' and so stays in range even for exp(y) near overflow.
    const double hp = 1.0 + state.exp_y;
    const double t = h / hp;
    const double rho = state.exp_y / hp;
    const double denom = 1.0 - 0.5 * t * rho;

    double next = denom > 0.0 ? state.y - t / denom
                              : std::numeric_limits<double>::quiet_NaN();
    if (!std::isfinite(next)) next = state.y - t;  // Newton step
    if (!std::isfinite(next)) next = initial_estimate(x);
    return HalleyState::at(next);
}

Evaluation evaluate(double x, const EvalPolicy& policy) {
    if (!std::isfinite(x)) {
        // Limits for the infinities, propagation for NaN.
        return {x, x, 0, std::numeric_limits<double>::quiet_NaN()};
    }

    HalleyState state = HalleyState::at(initial_estimate(x));
    int used = 0;
    if (policy.mode == EvalPolicy::Mode::FixedIterations) {
        for (; used < policy.iterations; ++used)
            state = halley_step(x, state);
    } else {
        const double bound = policy.tol * std::max(1.0, std::fabs(x));
        while (used < policy.iterations &&
               std::fabs((state.y - x) + state.exp_y) > bound) {
            state = halley_step(x, state);
            ++used;
        }
    }
    return {x, state.y, used, (state.y - x) + state.exp_y};
}

double derivative(double x, const EvalPolicy& policy) {
    const double ey = std::exp(evaluate(x, policy).value);
    return 1.0 / (1.0 + ey);
}

double second_derivative(double x, const EvalPolicy& policy) {
    const double ey = std::exp(evaluate(x, policy).value);
    const double slope = 1.0 / (1.0 + ey);
    // Factored so the cube of (1 + ey) is never formed; the plain quotient
    // would flush to zero long before the true value does.
    return -(ey * slope) * slope * slope;
}

}  // namespace logwexp
