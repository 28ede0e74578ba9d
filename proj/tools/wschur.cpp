// wschur: tables and verification for symmetric-function recovery from
// weak Schur sampling on qubit strings in an unknown basis.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "schur/inference.hpp"
#include "schur/numeric.hpp"
#include "schur/oracle.hpp"
#include "schur/repr_theory.hpp"
#include "schur/sampling.hpp"
#include "schur/simulate.hpp"
#include "schur/verify.hpp"

namespace {

constexpr const char* kVersion = "wschur 1.0.0";

using schur::Rational;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

struct Output {
    std::string format = "pretty";
    std::string command;
    std::uint64_t seed = 0;
    bool has_seed = false;
    bool deterministic = false;

    void emit(const Table& t) const {
        if (format == "csv") {
            emit_csv(t);
        } else if (format == "json") {
            emit_json(t);
        } else {
            emit_pretty(t);
        }
    }

private:
    static std::string csv_quote(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        return out + "\"";
    }

    void emit_csv(const Table& t) const {
        auto line = [](const std::vector<std::string>& cells) {
            std::string out;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i) out += ",";
                out += csv_quote(cells[i]);
            }
            return out;
        };
        std::cout << line(t.headers) << "\n";
        for (const auto& row : t.rows) std::cout << line(row) << "\n";
    }

    void emit_json(const Table& t) const {
        nlohmann::json meta;
        meta["tool"] = kVersion;
        meta["command"] = command;
        if (has_seed) meta["seed"] = seed;
        if (!deterministic) {
            meta["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                                    std::chrono::system_clock::now().time_since_epoch())
                                    .count();
        }
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json obj;
            for (std::size_t i = 0; i < t.headers.size(); ++i) obj[t.headers[i]] = row[i];
            rows.push_back(std::move(obj));
        }
        nlohmann::json doc;
        doc["meta"] = std::move(meta);
        doc["rows"] = std::move(rows);
        std::cout << doc.dump(2) << "\n";
    }

    void emit_pretty(const Table& t) const {
        std::vector<std::size_t> widths(t.headers.size());
        for (std::size_t i = 0; i < t.headers.size(); ++i) widths[i] = t.headers[i].size();
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                widths[i] = std::max(widths[i], row[i].size());
            }
        }
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                std::cout << std::left << std::setw(static_cast<int>(widths[i]) + 2) << cells[i];
            }
            std::cout << "\n";
        };
        line(t.headers);
        for (const auto& row : t.rows) line(row);
    }
};

std::string dec(const Rational& q) { return schur::decimal_string(q, 12); }
std::string rat(const Rational& q) { return q.get_str(); }

std::vector<int> parse_partition_arg(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        const int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty partition");
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) {
            throw std::invalid_argument("partition parts must be non-increasing");
        }
    }
    return parts;
}

schur::Prior load_prior(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open prior file: " + path);
    const int m = n / 2 + 1;
    std::vector<Rational> weights(m, Rational(0));
    std::vector<bool> seen(m, false);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("prior line " + std::to_string(lineno) +
                                        ": expected 'k,weight'");
        }
        int k;
        try {
            std::size_t pos = 0;
            k = std::stoi(line.substr(0, comma), &pos);
            if (pos != comma) throw std::invalid_argument("");
        } catch (...) {
            throw std::invalid_argument("prior line " + std::to_string(lineno) + ": bad k");
        }
        if (k < 0 || k >= m || seen[k]) {
            throw std::invalid_argument("prior line " + std::to_string(lineno) +
                                        ": k out of range or duplicated");
        }
        const Rational w = schur::parse_rational(line.substr(comma + 1));
        if (w < 0) {
            throw std::invalid_argument("prior line " + std::to_string(lineno) +
                                        ": negative weight");
        }
        weights[k] = w;
        seen[k] = true;
    }
    Rational total = 0;
    for (const auto& w : weights) total += w;
    if (total == 0) throw std::invalid_argument("prior has zero total weight");
    schur::Prior prior;
    for (auto& w : weights) prior.p.push_back(w / total);
    prior.validate();
    return prior;
}

Table report_table(const std::vector<schur::TrialReport>& reports, const schur::ScenarioConfig& cfg) {
    Table t;
    t.headers = {"n", "k", "task", "mode", "trials", "successes",
                 "empirical", "theoretical", "theoretical_decimal", "stderr", "z"};
    for (const auto& r : reports) {
        std::ostringstream emp, se, z;
        emp << std::setprecision(12) << r.empirical_rate;
        se << std::setprecision(6) << r.standard_error;
        z << std::setprecision(6) << r.z_score;
        t.add_row({std::to_string(r.n), std::to_string(r.k), schur::to_string(cfg.task),
                   schur::to_string(cfg.mode), std::to_string(r.trials),
                   std::to_string(r.successes), emp.str(), rat(r.theoretical),
                   dec(r.theoretical), se.str(), z.str()});
    }
    return t;
}

int run(int argc, char** argv) {
    CLI::App app{"Symmetric functions of qubits in an unknown basis: exact weak-Schur-sampling "
                 "statistics, inference strategies, bounds, and brute-force verification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Output out;
    if (const char* env = std::getenv("WSCHUR_FORMAT")) out.format = env;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "pretty"}))
        ->capture_default_str();
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "Random seed");
    app.add_flag("--deterministic", out.deterministic,
                 "Suppress the timestamp field in json meta");
    {
        std::string cmd;
        for (int i = 0; i < argc; ++i) {
            if (i) cmd += " ";
            cmd += argv[i];
        }
        out.command = cmd;
    }

    int n = 4, k = 0, t_param = 1, level_n = 4;
    long trials = 0;
    std::string lambda_str, rho_str, objective = "worst-case", prior_path;
    std::string level = "projector", task = "weight", mode = "exact";
    bool do_sweep = false;

    auto* dist = app.add_subcommand("dist", "Outcome distribution Pr[l|k]");
    dist->add_option("--n", n, "Qubit count")->required();
    dist->add_option("--k", k, "Hamming weight")->required();

    auto* dims = app.add_subcommand("dims", "Two-row irrep dimensions with hook-length cross-check");
    dims->add_option("--n", n, "Qubit count")->required();

    auto* chr = app.add_subcommand("char", "Symmetric-group character value");
    chr->add_option("--lambda", lambda_str, "Partition, e.g. 4,2")->required();
    chr->add_option("--rho", rho_str, "Cycle type, e.g. 3,2,1")->required();

    auto* bounds = app.add_subcommand("bounds", "l1 distances and distinguishability bounds per k");
    bounds->add_option("--n", n, "Qubit count")->required();

    auto* verify = app.add_subcommand("verify", "Brute-force oracle suite; nonzero exit on failure");
    verify->add_option("--n", level_n, "Dense-oracle size (projector level)")->capture_default_str();
    verify->add_option("--level", level, "Suite to run")
        ->check(CLI::IsMember({"projector", "character", "all"}))
        ->capture_default_str();

    auto* strategy = app.add_subcommand("strategy", "Inference strategy matrix and its value");
    strategy->add_option("--n", n, "Qubit count")->required();
    strategy->add_option("--objective", objective, "worst-case or bayes")
        ->check(CLI::IsMember({"worst-case", "bayes"}))
        ->capture_default_str();
    strategy->add_option("--prior", prior_path, "CSV prior file (k,weight) for bayes");

    auto* threshold = app.add_subcommand("threshold", "Two-sided threshold algorithm");
    threshold->add_option("--n", n, "Qubit count")->required();
    threshold->add_option("--t", t_param, "Threshold")->required();

    auto* parity = app.add_subcommand("parity", "Two-sided parity algorithm");
    parity->add_option("--n", n, "Qubit count")->required();

    auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo of the full protocol");
    simulate->add_option("--n", n, "Qubit count")->required();
    simulate->add_option("--k", k, "Hamming weight (ignored with --sweep)");
    simulate->add_option("--task", task, "weight, threshold or parity")
        ->check(CLI::IsMember({"weight", "threshold", "parity"}))
        ->capture_default_str();
    simulate->add_option("--t", t_param, "Threshold for --task threshold")->capture_default_str();
    simulate->add_option("--trials", trials, "Trials per scenario (default 1e5 exact, 1e4 statevector)");
    simulate->add_option("--mode", mode, "exact or statevector")
        ->check(CLI::IsMember({"exact", "statevector"}))
        ->capture_default_str();
    simulate->add_flag("--sweep", do_sweep, "Run every k in {0,...,n/2}");

    // Global flags (--format, --seed, --deterministic) may follow the subcommand.
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    out.has_seed = seed_opt->count() > 0;
    out.seed = seed;

    if (*dist) {
        const auto d = schur::weight_outcome_distribution(n, k);
        Table t;
        t.headers = {"l", "probability", "probability_decimal"};
        for (const auto& [l, p] : d.probs) {
            t.add_row({std::to_string(l), rat(p), dec(p)});
        }
        out.emit(t);
    } else if (*dims) {
        Table t;
        t.headers = {"l", "partition", "dim_two_row", "dim_hook_lengths"};
        for (int l = 0; l <= n / 2; ++l) {
            const schur::Partition lam(l == 0 ? std::vector<int>{n}
                                              : std::vector<int>{n - l, l});
            t.add_row({std::to_string(l), lam.to_string(),
                       schur::dim_two_row(n, l).get_str(),
                       schur::dim_irrep(lam).get_str()});
        }
        out.emit(t);
    } else if (*chr) {
        const schur::Partition lam(parse_partition_arg(lambda_str));
        const schur::CycleType rho(parse_partition_arg(rho_str));
        Table t;
        t.headers = {"lambda", "rho", "character"};
        t.add_row({lam.to_string(), rho.to_string(),
                   schur::character(lam, rho).get_str()});
        out.emit(t);
    } else if (*bounds) {
        Table t;
        t.headers = {"k", "l1_distance", "l1_decimal", "distinguish_bound", "bound_decimal"};
        for (int kk = 0; kk < n / 2; ++kk) {
            const auto l1 = schur::l1_closed_form(n, kk);
            const auto b = schur::distinguish_bound(n, kk);
            t.add_row({std::to_string(kk), rat(l1), dec(l1), rat(b), dec(b)});
        }
        out.emit(t);
    } else if (*verify) {
        std::vector<schur::CheckResult> results;
        if (level == "projector" || level == "all") {
            if (level_n < 1 || level_n > 6) {
                throw std::domain_error("verify --n must be in 1..6 for the projector level");
            }
            auto r = schur::verify_projectors(level_n, 20, out.has_seed ? seed : 42);
            results.insert(results.end(), r.begin(), r.end());
        }
        if (level == "character" || level == "all") {
            auto r = schur::verify_characters(8);
            results.insert(results.end(), r.begin(), r.end());
        }
        Table t;
        t.headers = {"check", "status", "observed", "tolerance", "detail"};
        for (const auto& r : results) {
            std::ostringstream obs, tol;
            obs << std::scientific << std::setprecision(3) << r.observed;
            tol << std::scientific << std::setprecision(0) << r.tolerance;
            t.add_row({r.name, r.pass ? "pass" : "FAIL", obs.str(), tol.str(), r.detail});
        }
        out.emit(t);
        if (!schur::all_pass(results)) return 1;
    } else if (*strategy) {
        schur::StrategyMatrix o;
        Rational value;
        if (objective == "worst-case") {
            std::tie(o, value) = schur::optimal_worst_case_strategy(n);
        } else {
            const schur::Prior prior =
                prior_path.empty() ? schur::Prior::uniform(n) : load_prior(prior_path, n);
            o = schur::bayes_optimal_strategy(n, prior);
            value = schur::bayes_success(o, prior, n);
        }
        Table t;
        t.headers = {"k", "l", "O_kl", "O_kl_decimal"};
        for (int kk = 0; kk < o.size(); ++kk) {
            for (int l = 0; l < o.size(); ++l) {
                t.add_row({std::to_string(kk), std::to_string(l), rat(o.entries[kk][l]),
                           dec(o.entries[kk][l])});
            }
        }
        t.add_row({"value", "", rat(value), dec(value)});
        out.emit(t);
    } else if (*threshold) {
        const auto post = schur::threshold_two_sided(n, t_param);
        const auto f = schur::SymmetricBooleanFunction::threshold(n, t_param);
        const auto profile =
            schur::function_success_profile(f, schur::standard_strategy(n), post);
        Table t;
        t.headers = {"quantity", "value", "decimal"};
        t.add_row({"q0", rat(post.q0), dec(post.q0)});
        t.add_row({"q1", rat(post.q1), dec(post.q1)});
        t.add_row({"worst_case_success", rat(post.worst_case_success),
                   dec(post.worst_case_success)});
        for (int kk = 0; kk <= n / 2; ++kk) {
            t.add_row({"success[k=" + std::to_string(kk) + "]", rat(profile[kk]),
                       dec(profile[kk])});
        }
        out.emit(t);
    } else if (*parity) {
        const auto alg = schur::parity_algorithm(n);
        Table t;
        t.headers = {"quantity", "value", "decimal"};
        t.add_row({"q0", rat(alg.post.q0), dec(alg.post.q0)});
        t.add_row({"q1", rat(alg.post.q1), dec(alg.post.q1)});
        t.add_row({"relabeled", alg.relabeled ? "1" : "0", ""});
        t.add_row({"worst_case_success", rat(alg.post.worst_case_success),
                   dec(alg.post.worst_case_success)});
        for (int kk = 0; kk <= n / 2; ++kk) {
            t.add_row({"success[k=" + std::to_string(kk) + "]", rat(alg.profile[kk]),
                       dec(alg.profile[kk])});
        }
        out.emit(t);
    } else if (*simulate) {
        schur::ScenarioConfig cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.seed = seed;
        cfg.mode = mode == "exact" ? schur::SimMode::kExactSampled
                                   : schur::SimMode::kStatevector;
        cfg.task = task == "weight"      ? schur::SimTask::kWeight
                   : task == "threshold" ? schur::SimTask::kThreshold
                                         : schur::SimTask::kParity;
        cfg.threshold_t = t_param;
        cfg.trials = trials > 0 ? trials
                     : cfg.mode == schur::SimMode::kExactSampled ? 100000
                                                                 : 10000;
        std::vector<schur::TrialReport> reports;
        if (do_sweep) {
            reports = schur::sweep(cfg);
        } else {
            reports.push_back(schur::run_scenario(cfg));
        }
        out.emit(report_table(reports, cfg));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
