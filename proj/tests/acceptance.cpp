// Acceptance suite: runs every contract-level criterion end to end and
// prints one [PASS]/[FAIL] line per criterion. Exit code 0 only if all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bkg/bounds.hpp"
#include "bkg/construction.hpp"
#include "bkg/distribution.hpp"
#include "bkg/errors.hpp"
#include "bkg/numeric.hpp"
#include "bkg/search.hpp"
#include "bkg/verify.hpp"

using namespace bkg;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

void report(const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str(), seconds);
    if (!pass) ++failures;
}

std::vector<i64> as_integers(const std::vector<u64>& values) {
    return std::vector<i64>(values.begin(), values.end());
}

std::vector<i64> random_subset_of_60(std::mt19937_64& rng) {
    size_t size = 3 + rng() % 58;  // |A| in [3, 60]
    std::vector<int> pool(60);
    for (int i = 0; i < 60; ++i) pool[i] = i + 1;
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<i64> out(pool.begin(), pool.begin() + size);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

void criterion_bose_chowla() {
    Timer timer;
    bool pass = true;
    std::string detail;
    int instances = 0;
    for (u64 q : {2, 3, 5, 7, 11, 13}) {
        for (unsigned k : {2u, 3u}) {
            u64 modulus = *checked_pow(q, k) - 1;
            if (modulus > 1000000) continue;
            BoseChowlaSet set = bose_chowla(q, k);
            ++instances;
            u64 observed =
                min_g(CandidateSet(as_integers(set.elements), k, 1,
                                   GroupSpec::cyclic(modulus)));
            if (set.elements.size() != q || observed != 1) {
                pass = false;
                detail = "q=" + std::to_string(q) + " k=" + std::to_string(k) +
                         " size=" + std::to_string(set.elements.size()) +
                         " min_g=" + std::to_string(observed);
            }
        }
    }
    if (pass) detail = std::to_string(instances) + " instances, all size q, min_g=1";
    report("bose-chowla-correctness", pass, detail, timer.seconds());
}

void criterion_quotient() {
    Timer timer;
    bool pass = true;
    std::string detail;
    const std::vector<std::tuple<u64, u64, unsigned>> cases = {
        {5, 2, 2}, {7, 2, 2}, {7, 3, 2}, {13, 3, 2}, {7, 2, 3}};
    for (auto [q, g, k] : cases) {
        BoseChowlaSet base = bose_chowla(q, k);
        bool disjoint = difference_avoids_subgroup(base, subgroup_elements(q, k, g));
        QuotientSet quotient = quotient_set(base, g);
        u64 observed = min_g(CandidateSet(as_integers(quotient.elements), k, g,
                                          GroupSpec::cyclic(quotient.mu)));
        bool ok = disjoint && quotient.elements.size() == q && observed <= g;
        if (!ok) {
            pass = false;
            detail = "q=" + std::to_string(q) + " g=" + std::to_string(g) +
                     " k=" + std::to_string(k) + " difference-subgroup=" +
                     (disjoint ? "ok" : "violated") +
                     " size=" + std::to_string(quotient.elements.size()) +
                     " min_g=" + std::to_string(observed);
        }
    }
    if (pass) detail = "5 cases: difference set meets H only in 0, quotient injective, min_g <= g";
    report("quotient-correctness", pass, detail, timer.seconds());
}

void criterion_lower_bound_pipeline() {
    Timer timer;
    bool pass = true;
    std::string detail;
    double worst_ratio = 2.0;
    for (u64 g : {1, 2, 3}) {
        for (u64 n : {50, 200, 1000}) {
            ConstructionResult r = construct_bkg(2, g, n);
            u64 observed = min_g(r.as_candidate());
            double ratio = double(r.elements.size()) /
                           std::sqrt(double(g) * double(n));
            worst_ratio = std::min(worst_ratio, ratio);
            bool ok = observed <= g && r.elements.size() == r.q &&
                      u64(r.elements.back()) <= n && r.elements.front() >= 1 &&
                      ratio >= 0.55;
            if (!ok) {
                pass = false;
                detail = "g=" + std::to_string(g) + " n=" + std::to_string(n) +
                         " size=" + std::to_string(r.elements.size()) +
                         " min_g=" + std::to_string(observed) +
                         " ratio=" + std::to_string(ratio);
            }
        }
    }
    if (pass) {
        char buf[80];
        std::snprintf(buf, sizeof(buf),
                      "9 specs verified, worst achieved/target ratio %.3f",
                      worst_ratio);
        detail = buf;
    }
    report("lower-bound-pipeline", pass, detail, timer.seconds());
}

u64 naive_subset_max(unsigned k, u64 g, unsigned n) {
    u64 best = 0;
    for (u32 mask = 1; mask < (1u << n); ++mask) {
        std::vector<i64> subset;
        for (unsigned i = 0; i < n; ++i) {
            if (mask & (1u << i)) subset.push_back(i64(i) + 1);
        }
        if (subset.size() <= best) continue;
        if (min_g(CandidateSet(subset, k, g)) <= g) best = subset.size();
    }
    return best;
}

void criterion_exact_search() {
    Timer timer;
    bool pass = true;
    std::string detail;

    for (unsigned k : {2u, 3u}) {
        for (u64 g : {1u, 2u}) {
            for (unsigned n = 1; n <= 14 && pass; ++n) {
                SearchResult result = exact_max({k, g, n});
                u64 oracle = naive_subset_max(k, g, n);
                if (!result.exact() || result.size() != oracle) {
                    pass = false;
                    detail = "mismatch at k=" + std::to_string(k) +
                             " g=" + std::to_string(g) + " n=" + std::to_string(n) +
                             ": search=" + std::to_string(result.size()) +
                             " oracle=" + std::to_string(oracle);
                }
            }
        }
    }

    u64 previous = 0;
    for (unsigned n = 1; n <= 25 && pass; ++n) {
        SearchResult result = exact_max({2, 1, n});
        if (!result.exact() || result.size() < previous) {
            pass = false;
            detail = "F(2,1," + std::to_string(n) + ") regressed";
        }
        previous = result.size();

        u64 constructed = 0;
        try {
            constructed = construct_bkg(2, 1, n).elements.size();
        } catch (const InfeasibleError&) {
            constructed = 0;
        }
        double trivial = trivial_bound({2, 1, n});
        if (constructed > result.size() ||
            double(result.size()) > std::ceil(trivial)) {
            pass = false;
            detail = "sandwich failed at n=" + std::to_string(n) + ": " +
                     std::to_string(constructed) + " <= " +
                     std::to_string(result.size()) +
                     " <= ceil(" + std::to_string(trivial) + ")";
        }
    }

    if (pass) {
        detail = "oracle equality on n<=14 (k in {2,3}, g in {1,2}); "
                 "F(2,1,n) monotone and sandwiched for n<=25";
    }
    report("exact-search-oracle", pass, detail, timer.seconds());
}

void criterion_berry_esseen() {
    Timer timer;
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(20260809);
    int violations = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<i64> a = random_subset_of_60(rng);
        unsigned k = 2 + unsigned(rng() % 7);  // k in [2, 8]
        BerryEsseenCertificate cert = berry_esseen_certificate(a, 60, k);
        if (!cert.pass) {
            ++violations;
            if (violations == 1) {
                detail = "first violation: |A|=" + std::to_string(a.size()) +
                         " k=" + std::to_string(k);
            }
        }
    }
    pass = violations == 0;
    if (pass) detail = "100 random (A, k) instances, zero violations";
    report("berry-esseen-certification", pass, detail, timer.seconds());
}

void criterion_pmf_max_bounds() {
    Timer timer;
    bool z_pass = true;
    bool y_pass = true;
    std::string detail;

    struct Instance {
        std::vector<i64> elements;
        unsigned k;
        u64 g;
        std::string label;
    };
    std::vector<Instance> instances;

    for (u64 q : {2, 3, 5, 7, 11, 13}) {
        for (unsigned k : {2u, 3u}) {
            BoseChowlaSet set = bose_chowla(q, k);
            instances.push_back({as_integers(set.elements), k, 1,
                                 "bose-chowla q=" + std::to_string(q) +
                                     " k=" + std::to_string(k)});
        }
    }
    const std::vector<std::tuple<u64, u64, unsigned>> quotients = {
        {5, 2, 2}, {7, 2, 2}, {7, 3, 2}, {13, 3, 2}, {7, 2, 3}};
    for (auto [q, g, k] : quotients) {
        QuotientSet quotient = quotient_set(bose_chowla(q, k), g);
        instances.push_back({as_integers(quotient.elements), k, g,
                             "quotient q=" + std::to_string(q) +
                                 " g=" + std::to_string(g)});
    }
    for (u64 g : {1, 2, 3}) {
        for (u64 n : {50, 200, 1000}) {
            ConstructionResult r = construct_bkg(2, g, n);
            instances.push_back({r.elements, 2, g,
                                 "construct g=" + std::to_string(g) +
                                     " n=" + std::to_string(n)});
        }
    }

    std::string z_detail, y_detail;
    for (const Instance& inst : instances) {
        PmfMaxCheck check = pmf_max_check(inst.elements, inst.k, inst.g);
        if (!check.z_ok && z_pass) {
            z_pass = false;
            z_detail = inst.label + ": max Z count " +
                       std::to_string(check.max_count_z) + " > " +
                       std::to_string(check.bound_z);
        }
        if (check.y_checked && !check.y_ok && y_pass) {
            y_pass = false;
            y_detail = inst.label + ": max Y count " +
                       std::to_string(check.max_count_y) + " > bound " +
                       std::to_string(check.bound_y) + " at value " +
                       std::to_string(check.witness_y);
        }
    }

    bool pass = z_pass && y_pass;
    if (pass) {
        detail = std::to_string(instances.size()) + " sets within both bounds";
    } else {
        detail = z_pass ? "Z side ok" : "Z side violated, " + z_detail;
        if (!y_pass) {
            detail += "; Y side violated, " + y_detail +
                      " (degenerate equal-block representations are not "
                      "limited by the collision property)";
        }
    }
    report("pmf-max-bounds", pass, detail, timer.seconds());
}

void criterion_exact_identities() {
    Timer timer;
    bool pass = true;
    std::string detail;
    std::mt19937_64 rng(424242);

    for (int trial = 0; trial < 50 && pass; ++trial) {
        std::vector<i64> a = random_subset_of_60(rng);
        unsigned k = 2 + unsigned(rng() % 7);
        ExactMoments m = exact_moments(a);
        SumPmf z = sum_pmf(a, k);
        SumPmf y = difference_pmf(a, k);

        const double target = double(k) * m.variance();
        auto rel = [&](double v) { return std::fabs(v - target) / target; };
        if (rel(z.variance()) > 1e-9 || rel(y.variance()) > 1e-9) {
            pass = false;
            detail = "variance identity failed at trial " + std::to_string(trial);
        }
        u128 mass_z = 0;
        for (u64 c : z.counts) mass_z += c;
        u128 mass_y = 0;
        for (u64 c : y.counts) mass_y += c;
        u128 expected = u128(*checked_pow(a.size(), k));
        if (mass_z != expected || mass_y != expected) {
            pass = false;
            detail = "mass conservation failed at trial " + std::to_string(trial);
        }
    }

    for (u64 l = 1; l <= 1000 && pass; ++l) {
        std::vector<i64> range(l);
        for (u64 i = 0; i < l; ++i) range[i] = i64(i + 1);
        ExactMoments m = exact_moments(range);
        if (i128(12) * m.var_num != i128(l * l - 1) * i128(l) * i128(l)) {
            pass = false;
            detail = "Var(1..l) failed at l=" + std::to_string(l);
        }
    }

    if (pass) {
        detail = "Var(Z)=Var(Y)=k*Var(A) @1e-9 on 50 sets; Var(1..l) exact to "
                 "l=1000; masses exact";
    }
    report("exact-identities", pass, detail, timer.seconds());
}

void criterion_bound_comparisons() {
    Timer timer;
    bool pass = true;
    std::string detail;

    double worst_residual = 0;
    for (unsigned k = 2; k <= 200; ++k) {
        XkRoot root = solve_xk(k);
        worst_residual = std::max(worst_residual, root.residual);
        if (root.residual > 1e-10) {
            pass = false;
            detail = "x_k residual " + std::to_string(root.residual) +
                     " at k=" + std::to_string(k);
        }
    }

    for (unsigned k = 3; k <= 30 && pass; ++k) {
        for (u64 g : {1, 2, 5}) {
            ProblemSpec spec{k, g, 1000000};
            double tait = tait_bound(spec);
            double other = std::min(crt_bound(spec), cj_bound(spec));
            if (tait > other * (1 + 1e-12)) {
                pass = false;
                detail = "tait " + std::to_string(tait) + " > min(crt,cj) " +
                         std::to_string(other) + " at k=" + std::to_string(k) +
                         " g=" + std::to_string(g);
            }
        }
    }

    if (pass) {
        char buf[96];
        std::snprintf(buf, sizeof(buf),
                      "x_k residual <= %.2e (k<=200); tait <= min(crt,cj) on "
                      "k=3..30, g in {1,2,5}",
                      worst_residual);
        detail = buf;
    }
    report("bound-comparisons", pass, detail, timer.seconds());
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_bose_chowla();
    criterion_quotient();
    criterion_lower_bound_pipeline();
    criterion_exact_search();
    criterion_berry_esseen();
    criterion_pmf_max_bounds();
    criterion_exact_identities();
    criterion_bound_comparisons();
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
