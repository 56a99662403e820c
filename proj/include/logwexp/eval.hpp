#pragma once

namespace logwexp {

// Solver for the equation y + exp(y) = x. The solution, here called g(x),
// is evaluated by a piecewise initial estimate followed by Halley steps.
// g is defined for every real x, increases monotonically, and behaves like
// x for very negative arguments and like log(x) for very large ones.

struct EvalPolicy {
    enum class Mode { FixedIterations, ResidualTolerance };

    Mode mode = Mode::FixedIterations;
    int iterations = 4;  // exact step count in fixed mode, cap in tolerance mode
    double tol = 0.0;    // residual target, scaled by max(1, |x|)

    static EvalPolicy fixed(int count);
    static EvalPolicy tolerance(double tol, int max_iterations = 50);
};

struct Evaluation {
    double argument;
    double value;
    int iterations_used;
    double residual;
};

// Current iterate together with its exponential, so one exp call per step
// is enough.
struct HalleyState {
    double y;
    double exp_y;

    static HalleyState at(double y);
};

double initial_estimate(double x);
double residual(double x, double y);
HalleyState halley_step(double x, const HalleyState& state);

Evaluation evaluate(double x, const EvalPolicy& policy = {});
double derivative(double x, const EvalPolicy& policy = {});
double second_derivative(double x, const EvalPolicy& policy = {});

}  // namespace logwexp
