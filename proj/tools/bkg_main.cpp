// Command-line front end: constructs sets with prescribed additive collision
// bounds, verifies them exactly, evaluates the known size bounds, certifies
// normal approximation of sum distributions, and solves small instances
// exactly.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bkg/bounds.hpp"
#include "bkg/construction.hpp"
#include "bkg/distribution.hpp"
#include "bkg/errors.hpp"
#include "bkg/search.hpp"
#include "bkg/setfile.hpp"
#include "bkg/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerifyFail = 3;

// Round to 12 significant digits so printed reals are reproducible.
double round12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::stod(buf);
}

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct GlobalFlags {
    bool csv = false;
    bkg::u64 cap = bkg::kDefaultMultisetCap;
    double time_limit = 0;
    bkg::u64 seed = 0;
    unsigned threads = 1;

    json echo() const {
        return json{{"format", csv ? "csv" : "json"},
                    {"cap", cap},
                    {"time_limit", time_limit},
                    {"seed", seed},
                    {"threads", threads}};
    }
};

json set_summary(const bkg::CandidateSet& set) {
    json j{{"k", set.k}, {"g", set.g}, {"size", set.elements.size()}};
    j["group"] = set.group.is_cyclic() ? json{{"cyclic", set.group.modulus}}
                                       : json("integers");
    return j;
}

json truncated(const std::vector<bkg::i64>& values, size_t limit = 16) {
    json arr = json::array();
    for (size_t i = 0; i < values.size() && i < limit; ++i) arr.push_back(values[i]);
    return arr;
}

int cmd_construct(const GlobalFlags& flags, unsigned k, bkg::u64 g, bkg::u64 n,
                  const std::string& out_path, bkg::u64 certify_cap) {
    bkg::ConstructionResult result = bkg::construct_bkg(k, g, n, certify_cap);

    json doc;
    doc["k"] = k;
    doc["g"] = g;
    doc["group"] = "integers";
    doc["elements"] = result.elements;
    doc["construction"] = json{{"n", n},
                               {"q", result.q},
                               {"mu", result.mu},
                               {"target", round12(std::pow(double(g) * double(n),
                                                           1.0 / double(k)))},
                               {"achieved", result.elements.size()}};
    doc["certificate"] = json{{"attempted", result.certificate.attempted},
                              {"verified", result.certificate.verified},
                              {"min_g", result.certificate.achieved_min_g},
                              {"witness_sums",
                               truncated(result.certificate.witness_sums)},
                              {"multiset_count", result.certificate.multiset_total},
                              {"note", result.certificate.note}};
    doc["config"] = flags.echo();
    doc["config"]["k"] = k;
    doc["config"]["g"] = g;
    doc["config"]["n"] = n;
    doc["config"]["certify_cap"] = certify_cap;

    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw bkg::InvalidInputError("cannot write " + out_path);
        out << doc.dump(2) << '\n';
    }
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_verify(const GlobalFlags& flags, const std::string& path,
               const bkg::SetFileOverrides& overrides) {
    bkg::CandidateSet set = bkg::read_set_file(path, overrides);
    bkg::u64 observed = 0;
    json result;
    if (set.elements.empty()) {
        result = json{{"min_g", 0},
                      {"pass", true},
                      {"multiset_count", 0},
                      {"max_count", 0},
                      {"witness_sums", json::array()}};
    } else {
        bkg::SumProfile profile = bkg::sum_profile(set, flags.cap);
        observed = profile.max_count;
        result = json{{"min_g", profile.max_count},
                      {"pass", profile.max_count <= set.g},
                      {"multiset_count", profile.total},
                      {"max_count", profile.max_count},
                      {"witness_sums", truncated(profile.argmax_sums)}};
    }

    json doc{{"command", "verify"},
             {"set", set_summary(set)},
             {"result", result},
             {"config", flags.echo()}};
    doc["config"]["file"] = path;
    std::cout << doc.dump(2) << '\n';
    return observed <= set.g ? kExitOk : kExitVerifyFail;
}

void emit_bounds_csv_row(const bkg::BoundReport& report) {
    const auto& s = report.spec;
    std::printf("%u,%llu,%llu", s.k, (unsigned long long)s.g, (unsigned long long)s.n);
    for (const auto& entry : report.entries) {
        if (entry.applicable) {
            std::printf(",%s", format12(entry.value).c_str());
        } else {
            std::printf(",");
        }
    }
    std::printf(",%s,%llu\n", format12(report.lower_target).c_str(),
                (unsigned long long)report.achieved_size);
}

int cmd_bounds(const GlobalFlags& flags, unsigned k, bkg::u64 g, bkg::u64 n,
               unsigned k_max, const std::vector<bkg::u64>& n_list,
               bool no_construct) {
    if (k_max < k) k_max = k;
    std::vector<bkg::u64> n_values = n_list.empty() ? std::vector<bkg::u64>{n}
                                                    : n_list;
    std::vector<bkg::BoundReport> reports;
    for (unsigned kk = k; kk <= k_max; ++kk) {
        for (bkg::u64 nn : n_values) {
            reports.push_back(bkg::bound_report({kk, g, nn}, !no_construct));
        }
    }

    if (flags.csv) {
        std::printf("# config: cap=%llu threads=%u\n",
                    (unsigned long long)flags.cap, flags.threads);
        std::printf("k,g,n");
        for (const auto& entry : reports.front().entries) {
            std::printf(",%s", entry.name.c_str());
        }
        std::printf(",lower_target,achieved\n");
        for (const auto& report : reports) emit_bounds_csv_row(report);
        return kExitOk;
    }

    json out = json::array();
    for (const auto& report : reports) {
        json entries = json::array();
        for (const auto& entry : report.entries) {
            entries.push_back(json{{"name", entry.name},
                                   {"applicable", entry.applicable},
                                   {"value", round12(entry.value)},
                                   {"asymptotic", entry.asymptotic},
                                   {"notes", entry.notes}});
        }
        json lower{{"target", round12(report.lower_target)},
                   {"constructed", report.constructed}};
        if (report.constructed) {
            lower["achieved"] = report.achieved_size;
            lower["q"] = report.chosen_q;
        }
        out.push_back(json{{"spec",
                            {{"k", report.spec.k},
                             {"g", report.spec.g},
                             {"n", report.spec.n}}},
                           {"bounds", entries},
                           {"lower_bound", lower}});
    }
    json doc{{"command", "bounds"}, {"reports", out}, {"config", flags.echo()}};
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_search(const GlobalFlags& flags, unsigned k, bkg::u64 g, bkg::u64 n) {
    bkg::SearchOptions options;
    options.time_limit_seconds = flags.time_limit;
    options.threads = flags.threads;
    bkg::SearchResult result = bkg::exact_max({k, g, n}, options);

    const char* status = result.exact() ? "exact" : "timeout-lower-bound";
    if (flags.csv) {
        std::printf("# config: time_limit=%s threads=%u\n",
                    format12(flags.time_limit).c_str(), flags.threads);
        std::printf("n,k,g,F,witness,status,nodes,seconds\n");
        std::string witness;
        for (size_t i = 0; i < result.best.size(); ++i) {
            if (i) witness += ' ';
            witness += std::to_string(result.best[i]);
        }
        std::printf("%llu,%u,%llu,%zu,\"%s\",%s,%llu,%s\n",
                    (unsigned long long)n, k, (unsigned long long)g,
                    result.best.size(), witness.c_str(), status,
                    (unsigned long long)result.nodes,
                    format12(result.seconds).c_str());
        return kExitOk;
    }

    json doc{{"command", "search"},
             {"row",
              {{"n", n},
               {"k", k},
               {"g", g},
               {"F", result.best.size()},
               {"witness", result.best},
               {"status", status},
               {"nodes", result.nodes},
               {"seconds", round12(result.seconds)}}},
             {"config", flags.echo()}};
    std::cout << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_distribution(const GlobalFlags& flags, const std::string& path,
                     const bkg::SetFileOverrides& overrides,
                     std::optional<bkg::u64> ambient_n,
                     const std::string& dump_path) {
    bkg::CandidateSet set = bkg::read_set_file(path, overrides);
    if (set.group.is_cyclic()) {
        throw bkg::InvalidInputError(
            "distribution certificates are defined over the integers");
    }
    if (set.elements.empty()) {
        throw bkg::InvalidInputError("distribution needs a nonempty set");
    }
    bkg::u64 n = ambient_n.value_or(bkg::u64(set.elements.back()));
    bkg::BerryEsseenCertificate cert =
        bkg::berry_esseen_certificate(set.elements, n, set.k);

    if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw bkg::InvalidInputError("cannot write " + dump_path);
        dump << "variable,x,mass,cdf,normal_cdf\n";
        auto emit = [&](const char* name, const bkg::SumPmf& pmf) {
            bkg::u64 cum = 0;
            for (size_t i = 0; i < pmf.support.size(); ++i) {
                cum += pmf.counts[i];
                double x = pmf.centered_value(i);
                dump << name << ',' << format12(x) << ','
                     << format12(pmf.mass(i)) << ','
                     << format12(double(cum) / double(pmf.total)) << ','
                     << format12(bkg::normal_cdf(x, cert.sigma)) << '\n';
            }
        };
        emit("Z", bkg::sum_pmf(set.elements, set.k));
        emit("Y", bkg::difference_pmf(set.elements, set.k));
    }

    json doc{{"command", "distribution"},
             {"set", set_summary(set)},
             {"certificate",
              {{"n", cert.n},
               {"k", cert.k},
               {"delta", round12(cert.delta)},
               {"sigma", round12(cert.sigma)},
               {"sup_distance_z", round12(cert.sup_distance_z)},
               {"bound_z", round12(cert.bound_z)},
               {"sup_distance_y", round12(cert.sup_distance_y)},
               {"bound_y", round12(cert.bound_y)},
               {"pass", cert.pass}}},
             {"config", flags.echo()}};
    doc["config"]["file"] = path;
    if (!dump_path.empty()) doc["config"]["dump"] = dump_path;
    std::cout << doc.dump(2) << '\n';
    return cert.pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Toolkit for sets with bounded additive collisions: construction over "
        "prime fields, exact verification, size bounds, distribution "
        "certificates, and exact search.\n"
        "Exit codes: 0 success/pass, 1 internal error, 2 infeasible input, "
        "3 verification failure."};
    app.require_subcommand(1);

    GlobalFlags flags;
    bool want_json = false;
    app.add_flag("--json", want_json, "JSON output (default)");
    app.add_flag("--csv", flags.csv, "CSV output where supported");
    app.add_option("--cap", flags.cap, "multiset-count work cap");
    app.add_option("--time-limit", flags.time_limit, "time limit in seconds (search)");
    app.add_option("--seed", flags.seed,
                   "seed echoed for reproducibility (used only by randomized "
                   "test harnesses)");
    app.add_option("--threads", flags.threads, "worker threads (search)");

    unsigned k = 2;
    bkg::u64 g = 1, n = 1;
    std::string out_path, file_path, dump_path;
    bkg::u64 certify_cap = bkg::kDefaultCertifyCap;
    unsigned k_max = 0;
    bool no_construct = false;
    std::optional<unsigned> override_k;
    std::optional<bkg::u64> override_g, override_m, ambient_n;

    auto* construct = app.add_subcommand(
        "construct", "build a B_k[g] subset of [1, n] and certify it");
    construct->add_option("--k", k, "summand count k")->required();
    construct->add_option("--g", g, "collision bound g")->required();
    construct->add_option("--n", n, "ambient interval [1, n]")->required();
    construct->add_option("--out", out_path, "write the set file here");
    construct->add_option("--certify-cap", certify_cap,
                          "verify only when q^k is at most this");

    auto* verify = app.add_subcommand("verify", "check a set file exactly");
    verify->add_option("file", file_path, "set file (.json or one integer per line)")
        ->required();
    verify->add_option("--k", override_k, "override / supply k");
    verify->add_option("--g", override_g, "override / supply g");
    verify->add_option("--cyclic", override_m, "treat elements as residues mod m");

    std::vector<bkg::u64> n_list;
    auto* bounds = app.add_subcommand("bounds", "evaluate all size bounds");
    bounds->add_option("--k", k, "summand count k")->required();
    bounds->add_option("--g", g, "collision bound g")->required();
    bounds->add_option("--n", n, "ambient interval [1, n]")->required();
    bounds->add_option("--k-max", k_max, "sweep k up to this value");
    bounds->add_option("--n-list", n_list, "sweep these n values instead of --n")
        ->delimiter(',');
    bounds->add_flag("--no-construct", no_construct,
                     "skip the constructive lower bound");

    auto* search = app.add_subcommand("search", "exact maximum size by backtracking");
    search->add_option("--k", k, "summand count k")->required();
    search->add_option("--g", g, "collision bound g")->required();
    search->add_option("--n", n, "ambient interval [1, n]")->required();

    auto* distribution = app.add_subcommand(
        "distribution", "normal-approximation certificate for a set file");
    distribution->add_option("file", file_path, "set file")->required();
    distribution->add_option("--k", override_k, "override / supply k");
    distribution->add_option("--n", ambient_n, "ambient n (default: max element)");
    distribution->add_option("--dump", dump_path, "write (x, mass, cdf) rows here");

    // let the global flags appear after the subcommand as well
    for (auto* sub : {construct, verify, bounds, search, distribution}) {
        sub->fallthrough();
    }

    CLI11_PARSE(app, argc, argv);

    bkg::SetFileOverrides overrides;
    overrides.k = override_k;
    overrides.g = override_g;
    overrides.cyclic_modulus = override_m;
    if (distribution->parsed() && !override_g) overrides.g = 1;

    try {
        if (construct->parsed()) {
            return cmd_construct(flags, k, g, n, out_path, certify_cap);
        }
        if (verify->parsed()) {
            return cmd_verify(flags, file_path, overrides);
        }
        if (bounds->parsed()) {
            return cmd_bounds(flags, k, g, n, k_max, n_list, no_construct);
        }
        if (search->parsed()) {
            return cmd_search(flags, k, g, n);
        }
        if (distribution->parsed()) {
            return cmd_distribution(flags, file_path, overrides, ambient_n,
                                    dump_path);
        }
    } catch (const bkg::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const bkg::InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const bkg::OverflowError& e) {
        std::cerr << "out of range: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const bkg::CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInternal;
}
