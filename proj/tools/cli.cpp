#include "cli.hpp"

#include <atomic>
#include <functional>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rootloci/equivariant.hpp"
#include "rootloci/moduli.hpp"
#include "rootloci/partition.hpp"
#include "rootloci/thom.hpp"

namespace rootloci::cli {

namespace {

using nlohmann::ordered_json;

// ---- records -------------------------------------------------------------

struct TpRecord {
    Partition partition;
    int codim;
    SymForm tp;
    Integer degree;
    std::vector<std::string> methods;
};

ordered_json degree_json(const Integer& deg) {
    if (deg.fits_slong_p()) return ordered_json(deg.get_si());
    return ordered_json(deg.get_str());
}

ordered_json record_json(const TpRecord& rec) {
    ordered_json j;
    j["d"] = rec.partition.d();
    j["lambda"] = rec.partition.parts();
    j["codim"] = rec.codim;
    ordered_json terms = ordered_json::array();
    const SymForm& v = rec.tp;
    for (int k = 0; k <= v.degree() / 2; ++k) {
        if (v.coeff(k) == 0) continue;
        terms.push_back(ordered_json::array(
            {v.coeff(k).get_str(), v.degree() - 2 * k, k}));
    }
    j["tp"] = terms;
    j["degree"] = degree_json(rec.degree);
    j["methods"] = rec.methods;
    return j;
}

std::string record_text(const TpRecord& rec) {
    std::string out;
    out += "lambda: " + to_string(rec.partition) + "\n";
    out += "d: " + std::to_string(rec.partition.d()) + "\n";
    out += "codim: " + std::to_string(rec.codim) + "\n";
    out += "tp: " + to_string(rec.tp) + "\n";
    out += "degree: " + rec.degree.get_str() + "\n";
    std::string m;
    for (size_t i = 0; i < rec.methods.size(); ++i) {
        if (i) m += ",";
        m += rec.methods[i];
    }
    out += "methods: " + m + "\n";
    return out;
}

// computes by the requested methods, insisting on agreement
TpRecord compute_record(const Partition& p, const std::string& method) {
    TpRecord rec{p, p.codim(), SymForm::zero(), hilbert_degree(p), {}};
    std::vector<std::pair<std::string, SymForm>> got;
    if (method == "all" || method == "reduce")
        got.push_back({"reduce", tp_reduce(p).value});
    if (method == "all" || method == "naive")
        got.push_back({"naive", tp_naive(p).value});
    if (method == "all" || method == "sum")
        got.push_back({"sum", tp_sum(p).value});
    for (auto& [name, val] : got) {
        if (!rec.methods.empty() && !(val == rec.tp)) {
            std::string diff = "cross-method disagreement for lambda=" + to_string(p) + ":";
            for (auto& [n2, v2] : got) diff += "\n  " + n2 + ": " + to_string(v2);
            throw std::runtime_error(diff);
        }
        rec.tp = val;
        rec.methods.push_back(name);
    }
    return rec;
}

void warn_large_d(int d) {
    if (d > 14)
        std::cerr << "warning: d=" << d
                  << " exceeds the practical bound 14; the naive method multiplies "
                     "prod(e_i+1) terms and may be very slow\n";
}

// ---- moduli rendering ----------------------------------------------------

std::string series_csv(const std::vector<long>& coeffs) {
    std::string out;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(coeffs[i]);
    }
    return out;
}

ordered_json presentation_json(const RingPresentation& rp, int d) {
    ordered_json j;
    j["d"] = d;
    j["space"] = rp.space;
    j["grading"] = rp.space == "link" ? "cohomological degree" : "half degree (t convention)";
    ordered_json gens = ordered_json::array();
    for (const auto& g : rp.generators) {
        ordered_json e;
        e["name"] = g.name;
        e["degree"] = g.degree;
        gens.push_back(e);
    }
    j["generators"] = gens;
    j["relations"] = rp.relation_text;
    if (rp.space == "link") {
        j["betti"] = rp.betti;
    } else {
        j["series"] = rp.series.coeffs;
        j["closed_form"] = rp.series.closed_form;
    }
    j["verified"] = rp.series_verified;
    return j;
}

std::string presentation_text(const RingPresentation& rp, int d) {
    std::string out;
    out += "space: " + rp.space + "\n";
    out += "d: " + std::to_string(d) + "\n";
    out += std::string("grading: ") +
           (rp.space == "link" ? "cohomological degree" : "half degree (t convention)") + "\n";
    std::string gens;
    for (size_t i = 0; i < rp.generators.size(); ++i) {
        if (i) gens += ", ";
        gens += rp.generators[i].name + " (degree " +
                std::to_string(rp.generators[i].degree) + ")";
    }
    out += "generators: " + gens + "\n";
    for (const auto& r : rp.relation_text) out += "relation: " + r + "\n";
    if (rp.space == "link") {
        out += "betti: " + series_csv(rp.betti) + "\n";
    } else {
        out += "series: " + series_csv(rp.series.coeffs) + "\n";
        out += "closed form: " + rp.series.closed_form + "\n";
    }
    out += std::string("verified: ") + (rp.series_verified ? "yes" : "no") + "\n";
    return out;
}

// ---- verify suite --------------------------------------------------------

struct Check {
    std::string name;
    std::function<bool(std::string&)> body;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

void add_tp_checks(std::vector<Check>& checks, int max_d) {
    for (int d = 1; d <= max_d; ++d) {
        for (const Partition& p : partitions_of(d)) {
            checks.push_back(
                {"tp d=" + std::to_string(d) + " lambda=" + to_string(p),
                 [p](std::string& detail) {
                     auto a = tp_reduce(p), b = tp_naive(p), c = tp_sum(p);
                     if (!(a.value == b.value) || !(a.value == c.value)) {
                         detail = "three-way disagreement: reduce=" + to_string(a.value) +
                                  " naive=" + to_string(b.value) +
                                  " sum=" + to_string(c.value);
                         return false;
                     }
                     if (!a.value.all_integer()) {
                         detail = "non-integer coefficients: " + to_string(a.value);
                         return false;
                     }
                     if (!a.value.is_zero() && a.value.degree() != p.codim()) {
                         detail = "degree mismatch";
                         return false;
                     }
                     Rational deg = projective_degree(a);
                     if (!is_integer(deg) || !(deg.get_num() == hilbert_degree(p))) {
                         detail = "projective degree " + deg.get_str() +
                                  " != " + hilbert_degree(p).get_str();
                         return false;
                     }

                     // closed forms on their applicable shapes
                     const auto& e = p.evec();
                     std::vector<std::pair<int, int>> blocks;
                     for (size_t i = 0; i < e.size(); ++i)
                         if (e[i] > 0) blocks.push_back({int(i) + 1, e[i]});
                     if (blocks.size() == 1) {
                         auto t = tp_power_block(blocks[0].first, blocks[0].second);
                         if (!(t.value == a.value)) {
                             detail = "power-block closed form disagrees";
                             return false;
                         }
                     }
                     if (blocks.size() == 2) {
                         auto t = tp_two_block(blocks[0].first, blocks[0].second,
                                               blocks[1].first, blocks[1].second);
                         if (!(t.value == a.value)) {
                             detail = "two-block closed form disagrees";
                             return false;
                         }
                         if (blocks[0].first == 1 && blocks[1].second == 1 &&
                             blocks[1].first >= 2) {
                             auto k = tp_kirwan(blocks[0].second, blocks[1].first);
                             if (!(k.value == a.value)) {
                                 detail = "divided-difference closed form disagrees";
                                 return false;
                             }
                         }
                     }
                     int dd = p.d();
                     if (dd % 2 == 0 && blocks.size() == 3) {
                         int h = dd / 2;
                         const auto& parts = p.parts();
                         int j = parts[1];
                         if (parts[0] == h && j > 1 && j < h &&
                             p == Partition::from_evec([&] {
                                 std::vector<int> ev(h, 0);
                                 ev[0] = h - j;
                                 ev[j - 1] += 1;
                                 ev[h - 1] += 1;
                                 return ev;
                             }())) {
                             auto t = tp_e3(h, j);
                             if (!(t.value == a.value)) {
                                 detail = "difference-quotient closed form disagrees";
                                 return false;
                             }
                         }
                     }
                     return true;
                 }});
        }
    }
}

void add_moduli_checks(std::vector<Check>& checks, int max_d) {
    for (int d = 3; d <= max_d; ++d) {
        checks.push_back({"moduli d=" + std::to_string(d) + " equivariant series",
                          [d](std::string& detail) {
                              auto rp = presentation(d, "ss-equivariant");
                              if (!rp.series_verified)
                                  detail = "series does not match " + rp.series.closed_form;
                              return rp.series_verified;
                          }});
        if (d >= 5)
            checks.push_back({"moduli d=" + std::to_string(d) + " gcd certificates",
                              [d](std::string& detail) {
                                  auto rep = gcd_certificates(d);
                                  if (!rep.ok())
                                      detail = "gcd(Pi,Pi*)=" + to_string(rep.gcd_swap) +
                                               " gcd(Pi,dPi)=" + to_string(rep.gcd_dd);
                                  return rep.ok();
                              }});
        checks.push_back({"moduli d=" + std::to_string(d) + " generating coefficients",
                          [d](std::string& detail) {
                              auto rep = gen_function_check(d, 12);
                              if (!rep.coefficients_ok) detail = rep.detail;
                              return rep.coefficients_ok;
                          }});
        if (d % 2 != 0 || d < 4) continue;

        checks.push_back({"moduli d=" + std::to_string(d) + " quotient series",
                          [d](std::string& detail) {
                              auto rp = presentation(d, "ss-quotient");
                              if (!rp.series_verified)
                                  detail = "series does not match " + rp.series.closed_form;
                              return rp.series_verified;
                          }});
        checks.push_back({"moduli d=" + std::to_string(d) + " stable series",
                          [d](std::string& detail) {
                              auto rp = presentation(d, "stable-quotient");
                              if (!rp.series_verified)
                                  detail = "series does not match " + rp.series.closed_form;
                              return rp.series_verified;
                          }});
        if (d < 6) continue;
        const int h = d / 2;

        checks.push_back(
            {"moduli d=" + std::to_string(d) + " ideal identities",
             [d, h](std::string& detail) {
                 BiForm Pi = moduli_pi(d), dPi = divided_difference(Pi);
                 BiForm c1 = BiForm::linear(1, 1);
                 auto l1 = tp_reduce(parse_partition(
                     "1^" + std::to_string(d - h - 1) + " " + std::to_string(h + 1)));
                 auto l2 = tp_reduce(parse_partition(
                     "1^" + std::to_string(d - h - 2) + " " + std::to_string(h + 2)));
                 auto l0 = tp_reduce(parse_partition(
                     "1^" + std::to_string(h) + " " + std::to_string(h)));
                 auto l0p = tp_reduce(parse_partition(
                     "1^" + std::to_string(h - 2) + " 2 " + std::to_string(h)));
                 bool eq1 = ideal_equal_up_to(
                     GradedIdeal::from_sym_generators({l1.value, l2.value}),
                     GradedIdeal({c1 * dPi, c1 * Pi}), 2 * d);
                 bool eq2 = ideal_equal_up_to(
                     GradedIdeal::from_sym_generators({l0.value, l0p.value}),
                     GradedIdeal({dPi, Pi}), 2 * d);
                 BiForm Lstar = BiForm::linear(h + 1, h - 1);
                 bool lid = (from_sym(l2.value) ==
                             Lstar * c1 * dPi * Rational(h) - c1 * Pi * Rational(2 * h));
                 if (!eq1) detail += "(tp_l1,tp_l2) != (c1 dPi, c1 Pi); ";
                 if (!eq2) detail += "(tp_l0,tp_l0') != (dPi, Pi); ";
                 if (!lid) detail += "L-combination identity fails; ";
                 return eq1 && eq2 && lid;
             }});
        checks.push_back({"moduli d=" + std::to_string(d) + " relations identities",
                          [h](std::string& detail) {
                              auto rep = check_relations_even(h);
                              if (!rep.ok()) detail = rep.detail;
                              return rep.ok();
                          }});
        for (int j = 2; j < h; ++j)
            checks.push_back(
                {"moduli d=" + std::to_string(d) + " non-membership j=" + std::to_string(j),
                 [d, h, j](std::string& detail) {
                     auto l1 = tp_reduce(parse_partition(
                         "1^" + std::to_string(d - h - 1) + " " + std::to_string(h + 1)));
                     auto l2 = tp_reduce(parse_partition(
                         "1^" + std::to_string(d - h - 2) + " " + std::to_string(h + 2)));
                     auto tpj = tp_reduce(parse_partition(
                         "1^" + std::to_string(h - j) + " " + std::to_string(j) + " " +
                         std::to_string(h)));
                     auto I = GradedIdeal::from_sym_generators({l1.value, l2.value});
                     auto mem = membership(tpj.value, I);
                     if (mem.member) {
                         detail = "unexpected membership";
                         return false;
                     }
                     if (mem.rank_with_target != mem.rank_span + 1) {
                         detail = "rank certificate inconsistent";
                         return false;
                     }
                     return true;
                 }});
        checks.push_back({"moduli d=" + std::to_string(d) + " link presentation",
                          [d](std::string& detail) {
                              auto rp = presentation_link(d);
                              if (!rp.series_verified) detail = "duality or rank check failed";
                              return rp.series_verified;
                          }});
    }
}

int run_verify(int max_d, const std::string& suite, int jobs) {
    warn_large_d(max_d);
    std::vector<Check> checks;
    if (suite == "tp" || suite == "all") add_tp_checks(checks, max_d);
    if (suite == "moduli" || suite == "all") add_moduli_checks(checks, max_d);

    std::vector<CheckResult> results(checks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= checks.size()) break;
            CheckResult& r = results[i];
            r.name = checks[i].name;
            try {
                r.passed = checks[i].body(r.detail);
            } catch (const std::exception& ex) {
                r.passed = false;
                r.detail = std::string("exception: ") + ex.what();
            }
        }
    };
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    size_t passed = 0;
    for (const CheckResult& r : results) {
        if (r.passed) {
            ++passed;
        } else {
            std::cout << "FAIL " << r.name;
            if (!r.detail.empty()) std::cout << ": " << r.detail;
            std::cout << "\n";
        }
    }
    std::cout << "checks: " << results.size() << " passed: " << passed
              << " failed: " << (results.size() - passed) << "\n";
    return passed == results.size() ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"Equivariant classes of coincident-root loci and the cohomology "
                 "of the associated moduli spaces"};
    app.require_subcommand(1);

    std::string lambda_text, method = "all", format = "text";
    auto* tp_cmd = app.add_subcommand("tp", "Equivariant class of one root locus");
    tp_cmd->add_option("--lambda", lambda_text, "Partition, e.g. \"3,1,1\" or \"1^2 3\"")
        ->required();
    tp_cmd->add_option("--method", method, "all|reduce|naive|sum")
        ->check(CLI::IsMember({"all", "reduce", "naive", "sum"}));
    tp_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string deg_lambda;
    auto* deg_cmd = app.add_subcommand("degree", "Projective degree of one root locus");
    deg_cmd->add_option("--lambda", deg_lambda, "Partition")->required();

    int table_d = 0;
    std::string table_format = "text";
    auto* table_cmd = app.add_subcommand("table", "All classes for one d");
    table_cmd->add_option("--d", table_d, "Degree of the binary form")->required();
    table_cmd->add_option("--format", table_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    int moduli_d = 0, moduli_bound = -1;
    std::string moduli_space, moduli_format = "text";
    auto* moduli_cmd = app.add_subcommand("moduli", "Cohomology ring presentations");
    moduli_cmd->add_option("--d", moduli_d, "Degree of the binary form")->required();
    moduli_cmd->add_option("--space", moduli_space, "ss|ss-quotient|stable|link")
        ->required()
        ->check(CLI::IsMember({"ss", "ss-quotient", "stable", "link"}));
    moduli_cmd->add_option("--bound", moduli_bound, "Series truncation degree (default 2d)");
    moduli_cmd->add_option("--format", moduli_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    int verify_max_d = 10, verify_jobs = 1;
    std::string verify_suite = "all";
    auto* verify_cmd = app.add_subcommand("verify", "Run the cross-method verification suite");
    verify_cmd->add_option("--max-d", verify_max_d, "Largest d to cover (default 10)");
    verify_cmd->add_option("--suite", verify_suite, "tp|moduli|all")
        ->check(CLI::IsMember({"tp", "moduli", "all"}));
    verify_cmd->add_option("--jobs", verify_jobs, "Worker threads (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tp_cmd->parsed()) {
            Partition p = parse_partition(lambda_text);
            warn_large_d(p.d());
            TpRecord rec = compute_record(p, method);
            if (format == "json")
                std::cout << record_json(rec).dump(2) << "\n";
            else
                std::cout << record_text(rec);
            return 0;
        }
        if (deg_cmd->parsed()) {
            std::cout << hilbert_degree(parse_partition(deg_lambda)).get_str() << "\n";
            return 0;
        }
        if (table_cmd->parsed()) {
            if (table_d < 1) throw std::invalid_argument("table: d must be positive");
            warn_large_d(table_d);
            std::vector<TpRecord> recs;
            for (const Partition& p : partitions_of(table_d))
                recs.push_back(compute_record(p, "all"));
            if (table_format == "json") {
                ordered_json arr = ordered_json::array();
                for (const TpRecord& r : recs) arr.push_back(record_json(r));
                std::cout << arr.dump(2) << "\n";
            } else {
                for (const TpRecord& r : recs)
                    std::cout << "lambda=" << to_string(r.partition)
                              << " codim=" << r.codim
                              << " degree=" << r.degree.get_str()
                              << " tp=" << to_string(r.tp) << "\n";
            }
            return 0;
        }
        if (moduli_cmd->parsed()) {
            RingPresentation rp;
            if (moduli_space == "link") {
                rp = presentation_link(moduli_d);
            } else {
                std::string space = moduli_space == "ss"
                                        ? "ss-equivariant"
                                        : (moduli_space == "stable" ? "stable-quotient"
                                                                    : "ss-quotient");
                rp = presentation(moduli_d, space, moduli_bound);
            }
            if (moduli_format == "json")
                std::cout << presentation_json(rp, moduli_d).dump(2) << "\n";
            else
                std::cout << presentation_text(rp, moduli_d);
            return rp.series_verified ? 0 : 1;
        }
        if (verify_cmd->parsed()) {
            if (verify_max_d < 1)
                throw std::invalid_argument("verify: max-d must be positive");
            return run_verify(verify_max_d, verify_suite, verify_jobs);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace rootloci::cli
