#include "logwexp/diode.hpp"

#include <cmath>
#include <stdexcept>

namespace logwexp {

DiodeParams::DiodeParams(double a_in, double b_in) : a(a_in), b(b_in) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::domain_error("DiodeParams: a must be a positive finite real");
    if (!(b > 0.0) || !std::isfinite(b))
        throw std::domain_error("DiodeParams: b must be a positive finite real");
}

SweepSpec::SweepSpec(double v_from_in, double v_to_in, int points_in)
    : v_from(v_from_in), v_to(v_to_in), points(points_in) {
    if (!std::isfinite(v_from) || !std::isfinite(v_to) || !(v_from < v_to))
        throw std::invalid_argument("SweepSpec: need finite v_from < v_to");
    if (points < 2)
        throw std::invalid_argument("SweepSpec: need at least 2 points");
}

double solve_u(const DiodeParams& params, double v, const EvalPolicy& policy) {
    const double la = std::log(params.a);
    return (evaluate(v + la, policy).value - la) / params.b;
}

double du_dv(const DiodeParams& params, double v, const EvalPolicy& policy) {
    const double la = std::log(params.a);
    return derivative(v + la, policy) / params.b;
}

std::vector<std::pair<double, double>> sweep_curve(const DiodeParams& params,
                                                   const SweepSpec& spec,
                                                   const EvalPolicy& policy) {
    std::vector<std::pair<double, double>> curve;
    curve.reserve(static_cast<std::size_t>(spec.points));
    const int last = spec.points - 1;
    for (int i = 0; i <= last; ++i) {
        double v;
        if (i == 0)
            v = spec.v_from;
        else if (i == last)
            v = spec.v_to;
        else
            v = spec.v_from +
                (spec.v_to - spec.v_from) * (static_cast<double>(i) / last);
        curve.emplace_back(v, solve_u(params, v, policy));
    }
    return curve;
}

}  // namespace logwexp
