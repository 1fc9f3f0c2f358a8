#include "bkg/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bkg/construction.hpp"
#include "bkg/errors.hpp"

namespace bkg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void validate(const ProblemSpec& spec) {
    if (spec.k < 2 || spec.g < 1 || spec.n < 1) {
        throw InvalidInputError("need k >= 2, g >= 1, n >= 1");
    }
}

double log_factorial(u64 m) { return std::lgamma(double(m) + 1.0); }

double half_factorials_log(unsigned k) {
    return log_factorial(k / 2) + log_factorial((k + 1) / 2);
}

}  // namespace

double trivial_bound(const ProblemSpec& spec) {
    validate(spec);
    double log_val = std::log(double(spec.g)) + log_factorial(spec.k) +
                     std::log(double(spec.k)) + std::log(double(spec.n));
    return std::exp(log_val / spec.k);
}

std::optional<double> jia_chen_bound(const ProblemSpec& spec) {
    validate(spec);
    if (spec.g != 1) return std::nullopt;
    double log_val = half_factorials_log(spec.k) + std::log(double(spec.k)) +
                     std::log(double(spec.n));
    return std::exp(log_val / spec.k);
}

std::optional<double> green_bound(const ProblemSpec& spec) {
    validate(spec);
    if (spec.g != 1) return std::nullopt;
    double log_val = half_factorials_log(spec.k) +
                     0.5 * std::log(kPi * spec.k / 2.0) + std::log(double(spec.n));
    return std::exp(log_val / spec.k);
}

double crt_bound(const ProblemSpec& spec) {
    validate(spec);
    double cos_term = std::pow(std::cos(kPi / spec.k), double(spec.k));
    double log_val = log_factorial(spec.k) + std::log(double(spec.k)) +
                     std::log(double(spec.g)) + std::log(double(spec.n)) -
                     std::log1p(cos_term);
    return std::exp(log_val / spec.k);
}

double cj_bound(const ProblemSpec& spec) {
    validate(spec);
    double log_val = 0.5 * std::log(3.0 * spec.k) + log_factorial(spec.k) +
                     std::log(double(spec.g)) + std::log(double(spec.n));
    return std::exp(log_val / spec.k);
}

XkRoot solve_xk(unsigned k) {
    if (k < 2) throw InvalidInputError("solve_xk needs k >= 2");
    const double rhs = std::pow(4.0 / (3.0 - std::cos(kPi / k)) - 1.0, double(k));
    auto sinc = [](double x) { return std::sin(x) / x; };
    double lo = 1e-9, hi = kPi - 1e-9;
    if (!(sinc(lo) > rhs && sinc(hi) < rhs)) {
        throw InternalError("bisection bracket for x_k lost its sign change");
    }
    while (hi - lo >= 1e-12) {
        double mid = 0.5 * (lo + hi);
        if (sinc(mid) > rhs) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    XkRoot root;
    root.k = k;
    root.x = 0.5 * (lo + hi);
    root.residual = std::fabs(sinc(root.x) - rhs);
    return root;
}

double tait_bound(const ProblemSpec& spec) {
    validate(spec);
    XkRoot root = solve_xk(spec.k);
    double log_val = std::log(root.x) + log_factorial(spec.k) +
                     std::log(double(spec.k)) + std::log(double(spec.g)) +
                     std::log(double(spec.n)) - std::log(kPi);
    return std::exp(log_val / spec.k);
}

double variance_bound(const ProblemSpec& spec, double variance) {
    validate(spec);
    if (!(variance > 0)) {
        throw InvalidInputError("variance_bound needs a positive variance");
    }
    double log_val = std::log(12.0 * spec.k * variance) / (2.0 * spec.k);
    if (spec.g == 1) {
        log_val += half_factorials_log(spec.k) / spec.k;
    } else {
        log_val += (std::log(double(spec.g)) + log_factorial(spec.k)) / spec.k;
    }
    return std::exp(log_val);
}

double max_variance(u64 n) {
    double d = double(n) - 1.0;
    return d * d / 4.0;
}

ExplicitNormalBound explicit_normal_bound(const ProblemSpec& spec) {
    validate(spec);
    ExplicitNormalBound out;
    const double k = spec.k;
    const double cbrt_k = std::cbrt(k);
    const double main_term = (1.0 - 12.0 / (kPi * cbrt_k)) / std::sqrt(kPi * k / 2.0);
    double l;
    double log_numerator;  // log of the factorial-and-n product
    if (spec.g == 1) {
        // two jump endpoints, each off by at most 4 * 0.56 / sqrt(floor(k/2) delta)
        l = main_term -
            4.48 / (2.0 * cbrt_k * std::sqrt(double(spec.k / 2) * kPi / 24.0));
        log_numerator = half_factorials_log(spec.k) + std::log(double(spec.n));
    } else {
        // the one-sided sum needs only the single Berry-Esseen term per endpoint
        l = main_term - 1.12 / (2.0 * cbrt_k * std::sqrt(k * kPi / 24.0));
        log_numerator = std::log(double(spec.g)) + log_factorial(spec.k) +
                        std::log(double(spec.n));
    }
    out.l_coefficient = l;
    if (!(l > 0)) return out;

    out.applicable = true;
    out.be_branch = std::exp((log_numerator - std::log(l)) / k);
    out.variance_branch =
        variance_bound(spec, kPi * double(spec.n) * double(spec.n) / 24.0);
    out.value = std::max(out.be_branch, out.variance_branch);
    return out;
}

BoundReport bound_report(const ProblemSpec& spec, bool run_construction) {
    validate(spec);
    BoundReport report;
    report.spec = spec;

    auto push = [&](std::string name, std::optional<double> value, bool asymptotic,
                    std::string notes) {
        BoundEntry e;
        e.name = std::move(name);
        e.applicable = value.has_value();
        e.value = value.value_or(0.0);
        e.asymptotic = asymptotic;
        e.notes = std::move(notes);
        report.entries.push_back(std::move(e));
    };

    push("trivial", trivial_bound(spec), false, "");
    push("jia_chen", jia_chen_bound(spec), true,
         spec.g == 1 ? "additive O_k(1) term omitted" : "g = 1 only");
    push("green", green_bound(spec), true,
         spec.g == 1 ? "eps_k set to 0" : "g = 1 only");
    push("crt", crt_bound(spec), false, "");
    push("cj", cj_bound(spec), false, "");
    push("tait", tait_bound(spec), true, "(1+o(1)) factor dropped");
    const double worst_var = max_variance(spec.n);
    push("variance",
         worst_var > 0 ? std::optional<double>(variance_bound(spec, worst_var))
                       : std::nullopt,
         true,
         worst_var > 0 ? "at the maximal variance (n-1)^2/4; o(1) dropped"
                       : "vacuous at n = 1 (zero variance)");
    ExplicitNormalBound explicit_bound = explicit_normal_bound(spec);
    push("explicit_normal",
         explicit_bound.applicable ? std::optional<double>(explicit_bound.value)
                                   : std::nullopt,
         false,
         explicit_bound.applicable ? "max of normal-approximation and variance branches"
                                   : "leading coefficient nonpositive at this k");

    report.lower_target =
        std::exp((std::log(double(spec.g)) + std::log(double(spec.n))) / spec.k);
    if (run_construction) {
        try {
            ConstructionResult c = construct_bkg(spec.k, spec.g, spec.n);
            report.constructed = true;
            report.achieved_size = c.elements.size();
            report.chosen_q = c.q;
        } catch (const InfeasibleError&) {
            report.constructed = false;
        }
    }
    return report;
}

}  // namespace bkg
