// Command-line front end: permutation statistics, hook factorizations, the
// named transformations, polynomial families and identity verification
// sweeps with machine-readable output.

#include <algorithm>
#include <atomic>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qeulerian/qeulerian.hpp"

namespace qe = qeulerian;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct VerifyOptions {
    int max = 7;
    int jobs = 1;
    int a = -1, b = -1, j = -1, n = -1;
    std::string route = "cheap";
};

qe::VerifyRoute parse_route(const std::string& route) {
    if (route == "cheap") return qe::VerifyRoute::Cheap;
    if (route == "brute") return qe::VerifyRoute::Brute;
    throw CLI::ValidationError("--route must be cheap or brute");
}

// Runs the report tasks (in parallel when asked) and prints one JSON array,
// ordered by parameter tuple regardless of scheduling.
int run_reports(const std::vector<std::function<qe::VerifyReport()>>& tasks, int jobs) {
    std::vector<qe::VerifyReport> reports(tasks.size());
    if (jobs <= 1 || tasks.size() <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                reports[i] = tasks[i]();
            }
        };
        std::vector<std::thread> pool;
        const int count = std::min<int>(jobs, static_cast<int>(tasks.size()));
        for (int w = 0; w < count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    bool all_pass = true;
    std::cout << "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        std::cout << "  " << reports[i].json() << (i + 1 < reports.size() ? ",\n" : "\n");
        if (!reports[i].pass) all_pass = false;
    }
    std::cout << "]\n";
    return all_pass ? kExitPass : kExitVerifyFailed;
}

int cmd_stats(const std::string& input) {
    auto w = qe::parse_perm_or_gap(input);
    if (std::holds_alternative<qe::GapPerm>(w)) {
        const auto& g = std::get<qe::GapPerm>(w);
        auto lp = qe::lec_pix(g);
        std::cout << "lec = " << lp.first << "\n"
                  << "pix = " << lp.second << "\n"
                  << "inv = " << qe::inv_gap(g) << "\n";
        return kExitPass;
    }
    qe::StatRecord s = qe::stats(std::get<qe::Permutation>(w));
    std::cout << "des = " << s.des << "\nmaj = " << s.maj << "\nexc = " << s.exc
              << "\nfix = " << s.fix << "\ninv = " << s.inv << "\nimaj = " << s.imaj
              << "\nlec = " << s.lec << "\npix = " << s.pix << "\nai = " << s.ai
              << "\naid = " << s.aid << "\nrix = " << s.rix << "\n";
    return kExitPass;
}

int cmd_hook(const std::string& input) {
    auto w = qe::parse_perm_or_gap(input);
    qe::HookFactorization f = qe::hook_factorize(w);
    std::cout << "p = " << (f.prefix.empty() ? "-" : qe::to_string(f.prefix)) << "\n";
    for (std::size_t i = 0; i < f.hooks.size(); ++i)
        std::cout << "hook " << i + 1 << " = " << qe::to_string(f.hooks[i])
                  << " (inv " << qe::inv(f.hooks[i]) << ")\n";
    if (f.gap_hook) std::cout << "gap hook = _ 1 (inv 0)\n";
    std::cout << "pix = " << f.pix() << "\nlec = " << f.lec() << "\n";
    return kExitPass;
}

int cmd_transform(const std::string& name, const std::string& input) {
    if (name == "d") {
        std::cout << qe::to_string(qe::hook_d(qe::parse_permutation(input).letters())) << "\n";
    } else if (name == "dprime") {
        std::cout << qe::to_string(qe::hook_dprime(qe::parse_permutation(input).letters())) << "\n";
    } else if (name == "sympix") {
        std::cout << qe::to_string(qe::sympix_involution(qe::parse_permutation(input))) << "\n";
    } else if (name == "f") {
        std::cout << qe::to_string(qe::reflect_f(qe::parse_permutation(input))) << "\n";
    } else if (name == "fprime") {
        std::cout << qe::to_string(qe::reflect_fprime(qe::parse_permutation(input))) << "\n";
    } else if (name == "g") {
        std::cout << qe::to_string(qe::reflect_g(qe::parse_permutation(input))) << "\n";
    } else if (name == "twopix") {
        std::cout << qe::to_string(qe::twopix_involution(qe::parse_twopix(input))) << "\n";
    } else if (name == "jres") {
        std::cout << qe::to_string(qe::jres_involution(qe::parse_jres(input))) << "\n";
    } else {
        throw CLI::ValidationError("unknown transform '" + name + "'");
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-Eulerian polynomial and permutation statistic toolkit"};
    app.require_subcommand(1);

    // stats
    std::string stats_input;
    auto* stats_cmd = app.add_subcommand("stats", "print every statistic of a permutation");
    stats_cmd->add_option("perm", stats_input, "one-line notation, e.g. \"4 2 1 5 3\" or \"3 2 _ 1\"")
        ->required();

    // hook
    std::string hook_input;
    auto* hook_cmd = app.add_subcommand("hook", "print the hook factorization");
    hook_cmd->add_option("perm", hook_input, "one-line notation")->required();

    // transform
    std::string tr_name, tr_input;
    auto* tr_cmd = app.add_subcommand("transform", "apply a named transformation");
    tr_cmd->add_option("name", tr_name, "d|dprime|sympix|twopix|f|fprime|g|jres")->required();
    tr_cmd->add_option("input", tr_input, "transform argument")->required();

    // poly
    std::string poly_family, poly_triple, poly_route = "closed";
    int poly_n = -1, poly_j = -1;
    auto* poly_cmd = app.add_subcommand("poly", "print a polynomial family member");
    poly_cmd->add_option("family", poly_family, "A|B|Btrq|classic")->required();
    poly_cmd->add_option("--n", poly_n, "index n")->required();
    poly_cmd->add_option("--j", poly_j, "restriction position j (B, Btrq)");
    poly_cmd->add_option("--triple", poly_triple, "maj|inv|aid: force brute enumeration of A");
    poly_cmd->add_option("--route", poly_route, "lemma41|lemma44|closed (B only)");

    // verify
    VerifyOptions vo;
    std::string verify_id;
    auto* verify_cmd = app.add_subcommand("verify", "run identity verifiers, JSON reports");
    verify_cmd
        ->add_option("identity", verify_id,
                     "th16|th17|syfix|main1|egf|pixve|symmetries|equidist|lemma24|lemma46")
        ->required();
    verify_cmd->add_option("--max", vo.max, "sweep bound (default 7)");
    verify_cmd->add_option("--a", vo.a, "fix parameter a");
    verify_cmd->add_option("--b", vo.b, "fix parameter b");
    verify_cmd->add_option("--j", vo.j, "fix parameter j");
    verify_cmd->add_option("--n", vo.n, "fix parameter n");
    verify_cmd->add_option("--route", vo.route, "cheap|brute inputs");
    verify_cmd->add_option("--jobs", vo.jobs, "worker threads for sweeps");

    // table
    std::string table_family, table_format = "csv";
    int table_max = 5;
    auto* table_cmd = app.add_subcommand("table", "dump coefficient tables");
    table_cmd
        ->add_option("--family", table_family,
                     "classic_A|A_trq|B_restricted|B_trq|derangement_lhs")
        ->required();
    table_cmd->add_option("--max", table_max, "largest n");
    table_cmd->add_option("--format", table_format, "csv|json");

    try {
        app.parse(argc, argv);

        if (*stats_cmd) return cmd_stats(stats_input);
        if (*hook_cmd) return cmd_hook(hook_input);
        if (*tr_cmd) return cmd_transform(tr_name, tr_input);

        if (*poly_cmd) {
            if (poly_family == "A") {
                if (!poly_triple.empty()) {
                    qe::Triple triple;
                    if (poly_triple == "maj") triple = qe::Triple::MajExcFix;
                    else if (poly_triple == "inv") triple = qe::Triple::InvLecPix;
                    else if (poly_triple == "aid") triple = qe::Triple::AidDesRix;
                    else throw CLI::ValidationError("--triple must be maj, inv or aid");
                    std::cout << qe::A_brute(poly_n, triple).str() << "\n";
                } else if (poly_n == 0) {
                    std::cout << qe::TRQPoly{1}.str() << "\n";
                } else {
                    std::cout << qe::A_recurrence(poly_n).str() << "\n";
                }
            } else if (poly_family == "B") {
                qe::BRoute route;
                if (poly_route == "lemma41") route = qe::BRoute::Lemma41;
                else if (poly_route == "lemma44") route = qe::BRoute::Lemma44;
                else if (poly_route == "closed") route = qe::BRoute::ClosedForm;
                else throw CLI::ValidationError("--route must be lemma41, lemma44 or closed");
                if (poly_j < 0) throw CLI::ValidationError("B requires --j");
                std::cout << qe::B_restricted(poly_n, poly_j, route).str() << "\n";
            } else if (poly_family == "Btrq") {
                if (poly_j < 0) throw CLI::ValidationError("Btrq requires --j");
                std::cout << qe::B_trq(poly_n, poly_j).str() << "\n";
            } else if (poly_family == "classic") {
                std::cout << qe::classic_eulerian(poly_n).str() << "\n";
            } else {
                throw CLI::ValidationError("unknown family '" + poly_family + "'");
            }
            return kExitPass;
        }

        if (*verify_cmd) {
            const qe::VerifyRoute route = parse_route(vo.route);
            std::vector<std::function<qe::VerifyReport()>> tasks;
            auto add = [&](std::function<qe::VerifyReport()> fn) { tasks.push_back(std::move(fn)); };

            if (verify_id == "th16" || verify_id == "th17") {
                auto make = [&](int a, int b) {
                    add([=] { return verify_id == "th16" ? qe::verify_th16(a, b, route)
                                                         : qe::verify_th17(a, b, route); });
                };
                if (vo.a > 0 && vo.b > 0) make(vo.a, vo.b);
                else
                    for (int a = 1; a < vo.max; ++a)
                        for (int b = 1; a + b <= vo.max; ++b) make(a, b);
            } else if (verify_id == "syfix") {
                auto make = [&](int a, int b, int j) {
                    add([=] { return qe::verify_syfix(a, b, j, route); });
                };
                if (vo.a > 0 && vo.b > 0 && vo.j >= 0) make(vo.a, vo.b, vo.j);
                else
                    for (int a = 1; a + 2 <= vo.max; ++a)
                        for (int b = 1; a + b + 1 <= vo.max; ++b)
                            for (int j = 0; a + b + j + 1 <= vo.max; ++j) make(a, b, j);
            } else if (verify_id == "main1") {
                auto make = [&](int a, int b, int j) {
                    add([=] { return qe::verify_main1(a, b, j, route); });
                };
                if (vo.a > 0 && vo.b > 0 && vo.j >= 2) {
                    make(vo.a, vo.b, vo.j);
                } else {
                    const int jlo = vo.j >= 2 ? vo.j : 2;
                    const int jhi = vo.j >= 2 ? vo.j : 6;
                    for (int a = 1; a + 3 <= vo.max; ++a)
                        for (int b = 1; a + b + 2 <= vo.max; ++b)
                            for (int j = jlo; j <= jhi; ++j) make(a, b, j);
                }
            } else if (verify_id == "egf") {
                add([=] { return qe::verify_egf(vo.max); });
            } else if (verify_id == "pixve") {
                const int nlo = vo.n >= 0 ? vo.n : 0;
                const int nhi = vo.n >= 0 ? vo.n : vo.max;
                for (int n = nlo; n <= nhi; ++n) {
                    const int alo = vo.a >= 0 ? vo.a : 0;
                    const int ahi = vo.a >= 0 ? vo.a : n;
                    for (int a = alo; a <= ahi; ++a)
                        add([=] { return qe::verify_pixve(n, a); });
                }
            } else if (verify_id == "symmetries") {
                // Collected eagerly: each n yields a batch of reports.
                std::vector<qe::VerifyReport> all;
                for (int n = 1; n <= vo.max; ++n)
                    for (auto& r : qe::verify_symmetries(n, route)) all.push_back(std::move(r));
                for (auto& r : all) add([r] { return r; });
            } else if (verify_id == "equidist") {
                for (int n = 1; n <= vo.max; ++n)
                    add([=] { return qe::verify_equidistribution(n); });
            } else if (verify_id == "lemma24") {
                for (int n = 1; n <= vo.max; ++n)
                    for (int j = 0; j <= n; ++j)
                        for (int a = 0; a <= n - j; ++a)
                            add([=] { return qe::verify_lemma24(n, j, a, route); });
            } else if (verify_id == "lemma46") {
                for (int n = 1; n <= vo.max; ++n)
                    for (int j = 1; j <= n; ++j)
                        for (int a = 0; a <= std::max(0, n - 2); ++a)
                            add([=] { return qe::verify_lemma46(n, j, a, route); });
            } else {
                throw CLI::ValidationError("unknown identity '" + verify_id + "'");
            }
            return run_reports(tasks, vo.jobs);
        }

        if (*table_cmd) {
            struct Row {
                int n, k, j;
                bool has_j;
                std::string coeff;
            };
            std::vector<Row> rows;
            if (table_family == "classic_A") {
                for (int n = 0; n <= table_max; ++n) {
                    qe::TRQPoly p = qe::classic_eulerian(n);
                    for (const auto& [d, c] : p.terms())
                        rows.push_back({n, d.t, 0, false, c.at_one().str()});
                }
            } else if (table_family == "A_trq") {
                for (int n = 0; n <= table_max; ++n) {
                    qe::TRQPoly p = n == 0 ? qe::TRQPoly{1} : qe::A_recurrence(n);
                    for (const auto& [d, c] : p.terms())
                        rows.push_back({n, d.t, d.r, true, c.str()});
                }
            } else if (table_family == "B_restricted") {
                for (int n = 1; n <= table_max; ++n)
                    for (int j = 1; j <= n; ++j) {
                        qe::TRQPoly p = qe::B_restricted(n, j, qe::BRoute::ClosedForm);
                        for (const auto& [d, c] : p.terms())
                            rows.push_back({n, d.t, j, true, c.str()});
                    }
            } else if (table_family == "B_trq") {
                for (int n = 1; n <= table_max; ++n)
                    for (int j = 1; j <= n; ++j) {
                        qe::TRQPoly p = qe::B_trq(n, j);
                        // Group the r,q-part under each t-degree.
                        std::map<int, qe::TRQPoly> by_t;
                        for (const auto& [d, c] : p.terms())
                            by_t[d.t] += qe::TRQPoly::monomial(0, d.r, c);
                        for (const auto& [k, c] : by_t)
                            rows.push_back({n, k, j, true, c.str()});
                    }
            } else if (table_family == "derangement_lhs") {
                for (int n = 0; n <= table_max; ++n)
                    for (int a = 0; a <= n; ++a) {
                        auto [lhs, rhs] = qe::derangement_sum(n, a);
                        if (!lhs.is_zero()) rows.push_back({n, a, 0, false, lhs.str()});
                    }
            } else {
                throw CLI::ValidationError("unknown family '" + table_family + "'");
            }

            if (table_format == "csv") {
                std::cout << "n,k,j,family,coefficient\n";
                for (const auto& r : rows) {
                    std::cout << r.n << ',' << r.k << ',';
                    if (r.has_j) std::cout << r.j;
                    std::cout << ',' << table_family << ',' << r.coeff << "\n";
                }
            } else if (table_format == "json") {
                std::cout << "[\n";
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const auto& r = rows[i];
                    std::cout << "  {\"n\":" << r.n << ",\"k\":" << r.k << ",\"j\":";
                    if (r.has_j) std::cout << r.j;
                    else std::cout << "null";
                    std::cout << ",\"family\":\"" << table_family << "\",\"coefficient\":\""
                              << r.coeff << "\"}" << (i + 1 < rows.size() ? ",\n" : "\n");
                }
                std::cout << "]\n";
            } else {
                throw CLI::ValidationError("--format must be csv or json");
            }
            return kExitPass;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitBadInput;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
