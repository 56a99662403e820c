#pragma once

#include "logwexp/eval.hpp"

#include <utility>
#include <vector>

namespace logwexp {

// Explicit solution of the implicit relation a*exp(b*u) + b*u = v for u,
// via the substitution y = b*u + log(a), plus helpers for sweeping u over
// a range of v.

struct DiodeParams {
    double a;
    double b;

    DiodeParams(double a, double b);
};

struct SweepSpec {
    double v_from;
    double v_to;
    int points;

    SweepSpec(double v_from, double v_to, int points);
};

double solve_u(const DiodeParams& params, double v, const EvalPolicy& policy = {});
double du_dv(const DiodeParams& params, double v, const EvalPolicy& policy = {});

std::vector<std::pair<double, double>> sweep_curve(const DiodeParams& params,
                                                   const SweepSpec& spec,
                                                   const EvalPolicy& policy = {});

}  // namespace logwexp
