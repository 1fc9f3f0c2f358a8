#pragma once

#include <cstdint>
#include <vector>

#include "bkg/numeric.hpp"

namespace bkg {

/// Exact first and second moments of a finite multiset of integers,
/// as the rationals mean = mean_num/den and var = var_num/den^2.
struct ExactMoments {
    i64 mean_num = 0;
    u64 den = 1;
    i128 var_num = 0;  // variance = var_num / den^2

    double mean() const { return double(mean_num) / double(den); }
    double variance() const {
        return double(var_num) / (double(den) * double(den));
    }
};

ExactMoments exact_moments(const std::vector<i64>& a);

/// Exact distribution of a sum of i.i.d. uniform draws from a set. Counts are
/// kept on the raw integer sums; the centering shift j*E(A) is the exact
/// rational shift_num/shift_den and is applied only when comparing against a
/// continuous distribution.
struct SumPmf {
    std::vector<i64> support;   // raw values, ascending
    std::vector<u64> counts;    // parallel to support, all positive
    unsigned j = 1;             // number of summands
    u64 base = 0;               // |A|
    u64 total = 0;              // |A|^j == sum of counts
    i64 shift_num = 0;          // centering shift = shift_num / shift_den
    u64 shift_den = 1;

    double centered_value(size_t i) const {
        return double(support[i]) - double(shift_num) / double(shift_den);
    }
    double mass(size_t i) const { return double(counts[i]) / double(total); }
    u64 max_count() const;
    double mean_centered() const;      // == 0 up to rounding
    double variance() const;           // exact-integer derived
};

inline constexpr u64 kDefaultSupportCap = 10'000'000;

/// j-fold convolution of the uniform counting measure on A. Requires
/// |A|^j < 2^63 and support width within the cap.
SumPmf sum_pmf(const std::vector<i64>& a, unsigned j,
               u64 support_cap = kDefaultSupportCap);

/// Distribution of S1 - S2 with S1 a ceil(k/2)-fold and S2 an independent
/// floor(k/2)-fold sum from A: convolution of sum_pmf(A, ceil) with the
/// reflection of sum_pmf(A, floor).
SumPmf difference_pmf(const std::vector<i64>& a, unsigned k,
                      u64 support_cap = kDefaultSupportCap);

/// Error function to absolute error below 1e-12 (power series for small
/// arguments, Lentz continued fraction for the tail).
double erf_value(double x);

/// CDF of the centered normal with standard deviation sigma.
double normal_cdf(double x, double sigma);

/// Exact sup of |F - Phi_sigma| over the reals: both one-sided limits of the
/// step CDF are compared against Phi at every jump.
double sup_distance(const SumPmf& pmf, double sigma);

/// delta = Var(A)/n^2, sigma = sqrt(k Var(A)), and the moment bounds
/// psi <= 1/sqrt(k delta), rho_i <= delta n^3 they certify.
struct DistributionStats {
    double delta = 0;
    double sigma = 0;
    double psi_bound = 0;
    double rho_bound = 0;
};

DistributionStats distribution_stats(const std::vector<i64>& a, u64 n, unsigned k);

struct BerryEsseenCertificate {
    u64 n = 0;
    unsigned k = 0;
    double delta = 0;
    double sigma = 0;
    double sup_distance_z = 0;
    double bound_z = 0;  // 0.56 / sqrt(k delta)
    double sup_distance_y = 0;
    double bound_y = 0;  // 4 * 0.56 / sqrt(floor(k/2) delta)
    bool pass = false;
};

/// Builds the exact k-fold sum and split-difference distributions of A in [n]
/// and compares their sup distances from the matching normal CDF against the
/// Berry-Esseen bounds. Requires Var(A) > 0.
BerryEsseenCertificate berry_esseen_certificate(const std::vector<i64>& a, u64 n,
                                                unsigned k);

/// Pointwise mass-bound check, exact integer comparison on counts:
///   Z:  max count of the k-fold sum     <= g * k!
///   Y:  max count of the split difference <= ceil(k/2)! * floor(k/2)!
/// The Y comparison is only run when g == 1. Note the Y inequality fails at
/// degenerate points (e.g. value 0 for even k) for any set with >= 2
/// elements, because representations repeating an element on both sides are
/// not limited by the distinct-sum property; the result records this rather
/// than hiding it.
struct PmfMaxCheck {
    u64 max_count_z = 0;
    u64 bound_z = 0;  // saturated at UINT64_MAX
    bool z_ok = false;
    bool y_checked = false;
    u64 max_count_y = 0;
    u64 bound_y = 0;
    bool y_ok = true;
    bool ok = false;
    i64 witness_y = 0;  // a value attaining the max Y count
};

PmfMaxCheck pmf_max_check(const std::vector<i64>& a, unsigned k, u64 g);

}  // namespace bkg
