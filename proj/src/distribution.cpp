#include "bkg/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "bkg/errors.hpp"

namespace bkg {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void validate_set(const std::vector<i64>& a) {
    if (a.empty()) throw InvalidInputError("set must be nonempty");
    if (!std::is_sorted(a.begin(), a.end()) ||
        std::adjacent_find(a.begin(), a.end()) != a.end()) {
        throw InvalidInputError("set must be sorted and distinct");
    }
}

// Dense counting vector over [lo, hi].
struct DenseCounts {
    i64 lo = 0;
    std::vector<u64> counts;
};

DenseCounts convolve(const DenseCounts& x, const DenseCounts& y, u64 support_cap) {
    DenseCounts out;
    out.lo = x.lo + y.lo;
    u64 width = x.counts.size() + y.counts.size() - 1;
    if (width > support_cap) {
        throw CapExceededError("pmf support exceeds the configured cap", width);
    }
    out.counts.assign(width, 0);
    for (size_t i = 0; i < x.counts.size(); ++i) {
        if (x.counts[i] == 0) continue;
        for (size_t j = 0; j < y.counts.size(); ++j) {
            out.counts[i + j] += x.counts[i] * y.counts[j];
        }
    }
    return out;
}

SumPmf from_dense(DenseCounts dense, unsigned j, u64 base, u64 total,
                  i64 shift_num, u64 shift_den) {
    SumPmf pmf;
    pmf.j = j;
    pmf.base = base;
    pmf.total = total;
    pmf.shift_num = shift_num;
    pmf.shift_den = shift_den;
    u128 mass = 0;
    for (size_t i = 0; i < dense.counts.size(); ++i) {
        if (dense.counts[i]) {
            pmf.support.push_back(dense.lo + i64(i));
            pmf.counts.push_back(dense.counts[i]);
            mass += dense.counts[i];
        }
    }
    if (mass != total) throw InternalError("pmf mass does not equal |A|^j");
    return pmf;
}

DenseCounts base_counts(const std::vector<i64>& a, u64 support_cap) {
    DenseCounts dense;
    dense.lo = a.front();
    u128 width = u128(a.back() - a.front()) + 1;
    if (width > support_cap) {
        throw CapExceededError("element range exceeds the configured cap",
                               u64(width));
    }
    dense.counts.assign(size_t(width), 0);
    for (i64 e : a) dense.counts[size_t(e - dense.lo)] = 1;
    return dense;
}

u64 checked_total(u64 base, unsigned j) {
    auto t = checked_pow(base, j);
    if (!t || *t >= (u64(1) << 63)) {
        throw OverflowError("|A|^j does not fit the counting range");
    }
    return *t;
}

DenseCounts reflect(const DenseCounts& x) {
    DenseCounts out;
    out.lo = -(x.lo + i64(x.counts.size()) - 1);
    out.counts.assign(x.counts.rbegin(), x.counts.rend());
    return out;
}

}  // namespace

ExactMoments exact_moments(const std::vector<i64>& a) {
    validate_set(a);
    i128 s1 = 0, s2 = 0;
    for (i64 e : a) {
        s1 += e;
        s2 += i128(e) * e;
    }
    ExactMoments m;
    m.den = a.size();
    m.mean_num = i64(s1);
    m.var_num = i128(a.size()) * s2 - s1 * s1;
    return m;
}

u64 SumPmf::max_count() const {
    u64 best = 0;
    for (u64 c : counts) best = std::max(best, c);
    return best;
}

double SumPmf::mean_centered() const {
    i128 weighted = 0;
    for (size_t i = 0; i < support.size(); ++i) {
        weighted += i128(counts[i]) * support[i];
    }
    // E[X] - shift, in exact integers over the common denominator.
    i128 num = weighted * i128(shift_den) - i128(shift_num) * i128(total);
    return double(num) / (double(total) * double(shift_den));
}

double SumPmf::variance() const {
    i128 s1 = 0, s2 = 0;
    for (size_t i = 0; i < support.size(); ++i) {
        s1 += i128(counts[i]) * support[i];
        s2 += i128(counts[i]) * support[i] * support[i];
    }
    i128 num = i128(total) * s2 - s1 * s1;  // total^2 * variance
    return double(num) / (double(total) * double(total));
}

SumPmf sum_pmf(const std::vector<i64>& a, unsigned j, u64 support_cap) {
    validate_set(a);
    if (j < 1) throw InvalidInputError("need j >= 1 summands");
    const u64 total = checked_total(a.size(), j);
    u128 width = u128(j) * u128(a.back() - a.front()) + 1;
    if (width > support_cap) {
        throw CapExceededError("pmf support exceeds the configured cap", u64(width));
    }

    DenseCounts acc = base_counts(a, support_cap);
    DenseCounts single = acc;
    for (unsigned step = 1; step < j; ++step) acc = convolve(acc, single, support_cap);

    ExactMoments m = exact_moments(a);
    return from_dense(std::move(acc), j, a.size(), total,
                      i64(j) * m.mean_num, m.den);
}

SumPmf difference_pmf(const std::vector<i64>& a, unsigned k, u64 support_cap) {
    validate_set(a);
    if (k < 2) throw InvalidInputError("need k >= 2");
    const unsigned s1 = (k + 1) / 2;
    const unsigned s2 = k / 2;
    const u64 total = checked_total(a.size(), k);

    SumPmf left = sum_pmf(a, s1, support_cap);
    SumPmf right = sum_pmf(a, s2, support_cap);

    DenseCounts dl;
    dl.lo = left.support.front();
    dl.counts.assign(size_t(left.support.back() - left.support.front()) + 1, 0);
    for (size_t i = 0; i < left.support.size(); ++i) {
        dl.counts[size_t(left.support[i] - dl.lo)] = left.counts[i];
    }
    DenseCounts dr;
    dr.lo = right.support.front();
    dr.counts.assign(size_t(right.support.back() - right.support.front()) + 1, 0);
    for (size_t i = 0; i < right.support.size(); ++i) {
        dr.counts[size_t(right.support[i] - dr.lo)] = right.counts[i];
    }

    DenseCounts diff = convolve(dl, reflect(dr), support_cap);
    ExactMoments m = exact_moments(a);
    return from_dense(std::move(diff), k, a.size(), total,
                      (i64(s1) - i64(s2)) * m.mean_num, m.den);
}

double erf_value(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::fabs(x);
    double result;
    if (ax < 2.0) {
        // erf(x) = 2x e^{-x^2}/sqrt(pi) * sum (2x^2)^n / (2n+1)!!
        // All terms positive, no cancellation.
        double term = 1.0, sum = 1.0;
        const double twox2 = 2.0 * ax * ax;
        for (unsigned n = 1; n < 200; ++n) {
            term *= twox2 / (2.0 * n + 1.0);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        result = 2.0 * ax * std::exp(-ax * ax) / kSqrtPi * sum;
    } else if (ax < 7.0) {
        // erfc continued fraction (Lentz): erfc(x) = e^{-x^2}/sqrt(pi) *
        // 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
        const double tiny = 1e-300;
        double f = ax, c = ax, d = 0.0;
        for (unsigned n = 1; n < 300; ++n) {
            double an = 0.5 * n;
            d = ax + an * d;
            if (d == 0.0) d = tiny;
            c = ax + an / c;
            if (c == 0.0) c = tiny;
            d = 1.0 / d;
            double mult = c * d;
            f *= mult;
            if (std::fabs(mult - 1.0) < 1e-16) break;
        }
        result = 1.0 - std::exp(-ax * ax) / (kSqrtPi * f);
    } else {
        result = 1.0;  // erfc < 1e-22 here, far below the error budget
    }
    return x < 0 ? -result : result;
}

double normal_cdf(double x, double sigma) {
    if (!(sigma > 0)) throw InvalidInputError("sigma must be positive");
    return 0.5 * (1.0 + erf_value(x / (sigma * std::sqrt(2.0))));
}

double sup_distance(const SumPmf& pmf, double sigma) {
    if (!(sigma > 0)) throw InvalidInputError("sigma must be positive");
    double best = 0;
    u128 cum = 0;
    for (size_t i = 0; i < pmf.support.size(); ++i) {
        const double x = pmf.centered_value(i);
        const double phi = normal_cdf(x, sigma);
        const double f_before = double(cum) / double(pmf.total);
        cum += pmf.counts[i];
        const double f_at = double(cum) / double(pmf.total);
        best = std::max(best, std::fabs(f_before - phi));
        best = std::max(best, std::fabs(f_at - phi));
    }
    return best;
}

DistributionStats distribution_stats(const std::vector<i64>& a, u64 n, unsigned k) {
    validate_set(a);
    if (n < 1) throw InvalidInputError("need n >= 1");
    ExactMoments m = exact_moments(a);
    DistributionStats stats;
    const double var = m.variance();
    stats.delta = var / (double(n) * double(n));
    stats.sigma = std::sqrt(double(k) * var);
    stats.psi_bound = stats.delta > 0 ? 1.0 / std::sqrt(double(k) * stats.delta) : 0;
    stats.rho_bound = stats.delta * double(n) * double(n) * double(n);
    return stats;
}

BerryEsseenCertificate berry_esseen_certificate(const std::vector<i64>& a, u64 n,
                                                unsigned k) {
    validate_set(a);
    if (k < 2) throw InvalidInputError("need k >= 2");
    ExactMoments m = exact_moments(a);
    if (m.var_num == 0) {
        throw InvalidInputError("constant sets have zero variance");
    }

    BerryEsseenCertificate cert;
    cert.n = n;
    cert.k = k;
    const double var = m.variance();
    cert.delta = var / (double(n) * double(n));
    cert.sigma = std::sqrt(double(k) * var);

    SumPmf z = sum_pmf(a, k);
    cert.sup_distance_z = sup_distance(z, cert.sigma);
    cert.bound_z = 0.56 / std::sqrt(double(k) * cert.delta);

    SumPmf y = difference_pmf(a, k);
    cert.sup_distance_y = sup_distance(y, cert.sigma);
    cert.bound_y = 4.0 * 0.56 / std::sqrt(double(k / 2) * cert.delta);

    cert.pass = cert.sup_distance_z <= cert.bound_z &&
                cert.sup_distance_y <= cert.bound_y;
    return cert;
}

PmfMaxCheck pmf_max_check(const std::vector<i64>& a, unsigned k, u64 g) {
    validate_set(a);
    if (k < 2 || g < 1) throw InvalidInputError("need k >= 2, g >= 1");

    PmfMaxCheck check;
    SumPmf z = sum_pmf(a, k);
    check.max_count_z = z.max_count();
    auto bound_z = checked_mul(g, factorial_saturated(k));
    check.bound_z = bound_z.value_or(UINT64_MAX);
    check.z_ok = check.max_count_z <= check.bound_z;

    if (g == 1) {
        check.y_checked = true;
        SumPmf y = difference_pmf(a, k);
        check.max_count_y = 0;
        for (size_t i = 0; i < y.counts.size(); ++i) {
            if (y.counts[i] > check.max_count_y) {
                check.max_count_y = y.counts[i];
                check.witness_y = y.support[i];
            }
        }
        auto bound_y =
            checked_mul(factorial_saturated((k + 1) / 2), factorial_saturated(k / 2));
        check.bound_y = bound_y.value_or(UINT64_MAX);
        check.y_ok = check.max_count_y <= check.bound_y;
    }
    check.ok = check.z_ok && check.y_ok;
    return check;
}

}  // namespace bkg
