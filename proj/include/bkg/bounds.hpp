#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkg/numeric.hpp"

namespace bkg {

struct ProblemSpec {
    unsigned k = 2;  // >= 2
    u64 g = 1;       // >= 1
    u64 n = 1;       // >= 1
};

/// (g * k! * k * n)^(1/k), evaluated in the log domain.
double trivial_bound(const ProblemSpec& spec);

/// (floor(k/2)! * ceil(k/2)! * k * n)^(1/k); main term only, g = 1 only.
/// The additive O_k(1) correction has no published constant and is reported
/// as a caveat, not a number.
std::optional<double> jia_chen_bound(const ProblemSpec& spec);

/// (ceil(k/2)! * floor(k/2)! * sqrt(pi k / 2) * n)^(1/k) with the eps_k
/// correction set to 0; g = 1 only. Asymptotic.
std::optional<double> green_bound(const ProblemSpec& spec);

/// (k! k g n / (1 + cos^k(pi/k)))^(1/k).
double crt_bound(const ProblemSpec& spec);

/// (sqrt(3k) * k! * g * n)^(1/k).
double cj_bound(const ProblemSpec& spec);

/// Unique root in (0, pi) of sin(x)/x = (4/(3 - cos(pi/k)) - 1)^k, by
/// bisection to interval width < 1e-12. sin(x)/x decreases from 1 to 0 on
/// (0, pi) and the right side lies strictly between, so the root exists and
/// is unique.
struct XkRoot {
    unsigned k = 0;
    double x = 0;
    double residual = 0;  // |sin(x)/x - rhs|
};

XkRoot solve_xk(unsigned k);

/// (x_k * k! * k * g * n / pi)^(1/k), dropping the (1+o(1)) factor. Asymptotic.
double tait_bound(const ProblemSpec& spec);

/// Variance-based bound with the o(1) dropped:
///   g = 1:  (12 k Var)^(1/2k) * (ceil(k/2)! floor(k/2)!)^(1/k)
///   g > 1:  (12 k Var)^(1/2k) * (g k!)^(1/k)
double variance_bound(const ProblemSpec& spec, double variance);

/// (n-1)^2 / 4, the largest variance a subset of [n] can have.
double max_variance(u64 n);

/// Non-asymptotic two-branch bound from the normal-approximation argument
/// with t = k^(1/3) n. The Berry-Esseen branch requires its leading
/// coefficient L(k) to be positive, which happens only for large k; below
/// that the bound is reported as not applicable.
struct ExplicitNormalBound {
    bool applicable = false;
    double value = 0;
    double be_branch = 0;
    double variance_branch = 0;
    double l_coefficient = 0;
};

ExplicitNormalBound explicit_normal_bound(const ProblemSpec& spec);

struct BoundEntry {
    std::string name;
    bool applicable = false;
    double value = 0;
    bool asymptotic = false;
    std::string notes;
};

struct BoundReport {
    ProblemSpec spec;
    std::vector<BoundEntry> entries;
    double lower_target = 0;   // (g n)^(1/k)
    bool constructed = false;
    u64 achieved_size = 0;
    u64 chosen_q = 0;
};

/// Every applicable bound for the given (k, g, n) plus the constructive
/// lower bound. When run_construction is false the achieved size is left at 0.
BoundReport bound_report(const ProblemSpec& spec, bool run_construction = true);

}  // namespace bkg
