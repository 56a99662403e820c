#include "CLI11.hpp"

#include "logwexp/diode.hpp"
#include "logwexp/eval.hpp"
#include "logwexp/lambert.hpp"
#include "logwexp/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace {

struct FormatOpts {
    std::string kind = "csv";
    int precision = 17;
};

struct PolicyOpts {
    int iters = 4;
    double tol = 0.0;
};

std::string num(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

// JSON has no literals for infinities or NaN; emit null for those.
std::string json_num(double v, int precision) {
    if (!std::isfinite(v)) return "null";
    return num(v, precision);
}

void add_format_opts(CLI::App* cmd, FormatOpts* fmt) {
    cmd->add_option("--format", fmt->kind, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--precision", fmt->precision, "Significant digits, 1 to 17")
        ->check(CLI::Range(1, 17));
}

void add_policy_opts(CLI::App* cmd, PolicyOpts* po) {
    auto* iters =
        cmd->add_option("--iters", po->iters, "Run exactly N Halley iterations")
            ->check(CLI::PositiveNumber);
    auto* tol = cmd->add_option(
        "--tol", po->tol,
        "Iterate until |residual| <= tol*max(1,|x|), at most 50 iterations");
    iters->excludes(tol);
    tol->excludes(iters);
}

logwexp::EvalPolicy make_policy(const CLI::App* cmd, const PolicyOpts& po) {
    if (cmd->count("--tol")) return logwexp::EvalPolicy::tolerance(po.tol);
    return logwexp::EvalPolicy::fixed(po.iters);
}

double grid_point(double from, double to, int i, int last) {
    if (i == 0) return from;
    if (i == last) return to;
    return from + (to - from) * (static_cast<double>(i) / last);
}

void emit_pairs(const std::vector<std::pair<double, double>>& rows,
                const char* head_a, const char* head_b, const FormatOpts& fmt) {
    if (fmt.kind == "json") {
        std::printf("[");
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::printf("%s[%s,%s]", i ? "," : "",
                        json_num(rows[i].first, fmt.precision).c_str(),
                        json_num(rows[i].second, fmt.precision).c_str());
        std::printf("]\n");
        return;
    }
    std::printf("%s,%s\n", head_a, head_b);
    for (const auto& [a, b] : rows)
        std::printf("%s,%s\n", num(a, fmt.precision).c_str(),
                    num(b, fmt.precision).c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solver for y + exp(y) = x, with Lambert W and diode helpers"};
    app.require_subcommand(1);

    auto* cmd_eval = app.add_subcommand("eval", "Solve y + exp(y) = x for y");
    double eval_x = 0.0;
    bool eval_oracle = false;
    FormatOpts eval_fmt;
    PolicyOpts eval_po;
    cmd_eval->add_option("x", eval_x, "Argument (inf and nan accepted)")
        ->required();
    cmd_eval->add_flag("--oracle", eval_oracle,
                       "Answer from the bisection reference instead of Halley");
    add_policy_opts(cmd_eval, &eval_po);
    add_format_opts(cmd_eval, &eval_fmt);

    auto* cmd_w =
        app.add_subcommand("w", "Principal Lambert W of a positive argument");
    double w_z = 0.0;
    FormatOpts w_fmt;
    cmd_w->add_option("z", w_z, "Argument, must be positive and finite")
        ->required();
    add_format_opts(cmd_w, &w_fmt);

    auto* cmd_diode =
        app.add_subcommand("diode", "Solve a*exp(b*u) + b*u = v for u");
    double d_a = 0.0, d_b = 0.0, d_v = 0.0, d_from = 0.0, d_to = 0.0;
    int d_points = 801;
    FormatOpts d_fmt;
    PolicyOpts d_po;
    cmd_diode->add_option("--a", d_a, "Exponential coefficient, positive")
        ->required();
    cmd_diode->add_option("--b", d_b, "Linear coefficient, positive")
        ->required();
    auto* opt_v = cmd_diode->add_option("--v", d_v, "Single right-hand side");
    auto* opt_dfrom = cmd_diode->add_option("--from", d_from, "Sweep start");
    auto* opt_dto = cmd_diode->add_option("--to", d_to, "Sweep end");
    auto* opt_dpoints =
        cmd_diode->add_option("--points", d_points, "Sweep sample count");
    opt_v->excludes(opt_dfrom);
    opt_v->excludes(opt_dto);
    opt_v->excludes(opt_dpoints);
    add_policy_opts(cmd_diode, &d_po);
    add_format_opts(cmd_diode, &d_fmt);

    auto* cmd_sweep =
        app.add_subcommand("sweep", "Emit (x, y) samples of the solution curve");
    double s_from = 0.0, s_to = 0.0;
    int s_points = 801;
    bool s_oracle = false;
    FormatOpts s_fmt;
    PolicyOpts s_po;
    cmd_sweep->add_option("--from", s_from, "Range start")->required();
    cmd_sweep->add_option("--to", s_to, "Range end")->required();
    cmd_sweep->add_option("--points", s_points, "Sample count, at least 2");
    cmd_sweep->add_flag("--oracle", s_oracle,
                        "Answer from the bisection reference instead of Halley");
    add_policy_opts(cmd_sweep, &s_po);
    add_format_opts(cmd_sweep, &s_fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_eval) {
            const auto policy = make_policy(cmd_eval, eval_po);
            double value, resid;
            int used;
            if (eval_oracle && std::isfinite(eval_x)) {
                value = logwexp::oracle_g(eval_x);
                used = 0;
                resid = logwexp::residual(eval_x, value);
            } else {
                const auto r = logwexp::evaluate(eval_x, policy);
                value = r.value;
                used = r.iterations_used;
                resid = r.residual;
            }
            if (eval_fmt.kind == "json") {
                std::printf(
                    "{\"x\":%s,\"value\":%s,\"iterations_used\":%d,"
                    "\"residual\":%s}\n",
                    json_num(eval_x, eval_fmt.precision).c_str(),
                    json_num(value, eval_fmt.precision).c_str(), used,
                    json_num(resid, eval_fmt.precision).c_str());
            } else {
                std::printf("x,y,iterations,residual\n%s,%s,%d,%s\n",
                            num(eval_x, eval_fmt.precision).c_str(),
                            num(value, eval_fmt.precision).c_str(), used,
                            num(resid, eval_fmt.precision).c_str());
            }
        } else if (*cmd_w) {
            const auto r = logwexp::w_principal(w_z);
            if (w_fmt.kind == "json") {
                std::printf("{\"z\":%s,\"w\":%s}\n",
                            json_num(r.argument, w_fmt.precision).c_str(),
                            json_num(r.value, w_fmt.precision).c_str());
            } else {
                std::printf("z,w\n%s,%s\n",
                            num(r.argument, w_fmt.precision).c_str(),
                            num(r.value, w_fmt.precision).c_str());
            }
        } else if (*cmd_diode) {
            const logwexp::DiodeParams params(d_a, d_b);
            const auto policy = make_policy(cmd_diode, d_po);
            if (opt_v->count()) {
                const double u = logwexp::solve_u(params, d_v, policy);
                emit_pairs({{d_v, u}}, "v", "u", d_fmt);
            } else if (opt_dfrom->count() || opt_dto->count()) {
                if (!opt_dfrom->count() || !opt_dto->count())
                    throw std::invalid_argument(
                        "diode: a sweep needs both --from and --to");
                const logwexp::SweepSpec spec(d_from, d_to, d_points);
                emit_pairs(logwexp::sweep_curve(params, spec, policy), "v", "u",
                           d_fmt);
            } else {
                throw std::invalid_argument(
                    "diode: give --v for a single solve, or --from and --to "
                    "for a sweep");
            }
        } else if (*cmd_sweep) {
            const auto policy = make_policy(cmd_sweep, s_po);
            const logwexp::SweepSpec spec(s_from, s_to, s_points);
            std::vector<std::pair<double, double>> rows;
            rows.reserve(static_cast<std::size_t>(spec.points));
            const int last = spec.points - 1;
            for (int i = 0; i <= last; ++i) {
                const double x = grid_point(spec.v_from, spec.v_to, i, last);
                rows.emplace_back(x, s_oracle
                                         ? logwexp::oracle_g(x)
                                         : logwexp::evaluate(x, policy).value);
            }
            emit_pairs(rows, "x", "y", s_fmt);
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
