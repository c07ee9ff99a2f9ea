#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qswap/bell.hpp"
#include "qswap/errors.hpp"
#include "qswap/families.hpp"
#include "qswap/format.hpp"
#include "qswap/protocols.hpp"
#include "qswap/report_io.hpp"
#include "qswap/swap_engine.hpp"
#include "qswap/verify.hpp"

namespace qswap::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t\r");
        if (b != std::string::npos) {
            parts.push_back(item.substr(b, e - b + 1));
        }
    }
    return parts;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    return v;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    for (const auto& p : split(s, ',')) out.push_back(parse_int(p));
    return out;
}

/// "u:v" pairs separated by commas.
std::vector<BellOutcome> parse_outcomes(const std::string& s) {
    std::vector<BellOutcome> out;
    for (const auto& p : split(s, ',')) {
        const auto uv = split(p, ':');
        if (uv.size() != 2) {
            throw ConfigError("outcome '" + p + "' is not of the form u:v");
        }
        out.push_back({parse_int(uv[0]), parse_int(uv[1])});
    }
    return out;
}

/// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::map<std::string, std::string> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
        }
        auto key = split(line.substr(0, eq), '\n');
        auto value = split(line.substr(eq + 1), '\n');
        if (key.empty()) {
            throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
        }
        values[key.front()] = value.empty() ? "" : value.front();
    }
    return values;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) {
        throw ConfigError("cannot write '" + path + "'");
    }
    file << text;
}

// --- verify --------------------------------------------------------------------

struct VerifyArgs {
    std::string dims, families, arities, pairs;
    bool exhaustive = false;
    bool sampled = false;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    double fidelity_tol = 1e-10;
    double prob_tol = 1e-10;
    unsigned threads = 0;
    std::string config_path, out_path, format = "json";
    bool no_timing = false;
};

SweepConfig build_sweep_config(const VerifyArgs& a, const CLI::App& cmd) {
    std::map<std::string, std::string> values;
    if (!a.config_path.empty()) {
        values = read_config_file(a.config_path);
    }
    auto given = [&](const char* flag) { return cmd.count(flag) > 0; };
    auto set = [&](const char* key, const char* flag, const std::string& v) {
        if (given(flag)) values[key] = v;
    };
    set("d", "--d", a.dims);
    set("families", "--families", a.families);
    set("n", "--n", a.arities);
    set("pairs", "--pairs", a.pairs);
    set("samples", "--samples", std::to_string(a.samples));
    set("seed", "--seed", std::to_string(a.seed));
    set("threads", "--threads", std::to_string(a.threads));
    if (given("--fidelity-tol")) values["fidelity-tol"] = format_number(a.fidelity_tol);
    if (given("--prob-tol")) values["prob-tol"] = format_number(a.prob_tol);
    if (a.exhaustive) values["mode"] = "exhaustive";
    if (a.sampled) values["mode"] = "sampled";

    SweepConfig c;
    c.dimensions = {2, 3};
    c.kinds = {FamilyKind::max_entangled, FamilyKind::bell, FamilyKind::ghz, FamilyKind::ghz_class,
               FamilyKind::cat_like};
    c.arities = {2, 3};
    for (const auto& [key, value] : values) {
        if (key == "d") {
            c.dimensions = parse_int_list(value);
        } else if (key == "families") {
            c.kinds.clear();
            for (const auto& k : split(value, ',')) c.kinds.push_back(parse_family_kind(k));
        } else if (key == "n") {
            c.arities = parse_int_list(value);
        } else if (key == "pairs") {
            c.pair_kinds.clear();
            for (const auto& k : split(value, ',')) c.pair_kinds.push_back(parse_pair_kind(k));
        } else if (key == "mode") {
            if (value == "exhaustive") c.mode = SweepMode::exhaustive;
            else if (value == "sampled") c.mode = SweepMode::sampled;
            else if (value == "auto") c.mode = SweepMode::automatic;
            else throw ConfigError("unknown mode '" + value + "'");
        } else if (key == "samples") {
            c.samples = static_cast<std::size_t>(parse_int(value));
        } else if (key == "seed") {
            c.seed = std::stoull(value);
        } else if (key == "threads") {
            c.threads = static_cast<unsigned>(parse_int(value));
        } else if (key == "fidelity-tol") {
            c.tolerances.fidelity = std::stod(value);
        } else if (key == "prob-tol") {
            c.tolerances.probability = std::stod(value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return c;
}

int run_verify(const VerifyArgs& a, const CLI::App& cmd, std::ostream& out, std::ostream& err) {
    if (a.format != "json" && a.format != "csv") {
        throw ConfigError("--format must be json or csv");
    }
    const auto config = build_sweep_config(a, cmd);
    const auto report = run_sweep(config);
    const std::string text =
        a.format == "csv" ? sweep_report_csv(report) : sweep_report_json(report, !a.no_timing);
    emit(text, a.out_path, out);
    (a.out_path.empty() ? err : out) << "verify: " << report.passed << " passed, " << report.failed
                                     << " failed, " << report.skipped << " skipped\n";
    return report.failed > 0 ? kExitFailedCase : kExitOk;
}

// --- demo-swap -----------------------------------------------------------------

struct DemoArgs {
    int d = 2;
    std::string family = "max";
    int n = 2;
    int slot = 2;
    std::string pair = "max";
    int pair_u = 0;
    int pair_v = 0;
    std::string outcome = "0:0";
    std::uint64_t seed = 1;
};

int run_demo(const DemoArgs& a, std::ostream& out) {
    const Dimension d(a.d);
    const auto kind = parse_family_kind(a.family);
    const auto outcomes = parse_outcomes(a.outcome);
    if (outcomes.size() != 1) {
        throw ConfigError("--outcome takes exactly one u:v");
    }
    PairSpec pair = parse_pair_kind(a.pair) == PairSpec::Kind::bell ? PairSpec::bell(a.pair_u, a.pair_v)
                                                                     : PairSpec::max_entangled();
    Rng rng(RandomSeed{a.seed});
    const auto family = random_family(kind, d, a.n, rng);
    const int n = family.arity();
    const SwapStep step{a.slot, pair.family(d), outcomes.front()};
    const CaseDescriptor desc{kind, a.d, n, a.slot, pair, outcomes.front()};

    out << "input family : " << to_string(family) << "\n";
    out << "input state  : " << to_string(family_to_state(family)) << "\n";
    out << "partner      : " << to_string(family_to_state(step.pair, {n + 1, n + 2})) << "\n";
    out << "measure      : Bell (" << a.slot << "," << n + 1 << ") -> (" << step.outcome.u << ","
        << step.outcome.v << ")\n";
    const auto report = verify_swap_case(family, step, {}, desc);
    const auto oracle = oracle_swap(family, step);
    if (oracle.post) {
        out << "oracle post  : " << to_string(*oracle.post) << "\n";
    }
    if (report.status != CaseStatus::skipped && predict_swap_probability(family, step) > kZeroProbability) {
        const auto predicted = predict_swap(family, step);
        out << "closed form  : " << to_string(predicted) << "\n";
    }
    out << "probability  : oracle " << format_number(report.probability_oracle) << ", closed form "
        << format_number(report.probability_expected) << "\n";
    out << "fidelity     : " << format_number(report.fidelity) << "\n";
    out << "status       : " << to_string(report.status) << (report.note.empty() ? "" : " (" + report.note + ")")
        << "\n";
    return report.status == CaseStatus::failed ? kExitFailedCase : kExitOk;
}

// --- chain ---------------------------------------------------------------------

struct ChainArgs {
    int d = 2;
    int pairs = 3;
    std::string outcomes;
    std::uint64_t seed = 1;
};

int run_chain(const ChainArgs& a, std::ostream& out) {
    const Dimension d(a.d);
    std::vector<BellOutcome> outcomes;
    if (!a.outcomes.empty()) {
        outcomes = parse_outcomes(a.outcomes);
    } else {
        if (a.pairs < 2) {
            throw ConfigError("--pairs must be at least 2");
        }
        Rng rng(RandomSeed{a.seed});
        for (int k = 1; k < a.pairs; ++k) {
            const int u = rng.below(a.d);
            outcomes.push_back({u, rng.below(a.d)});
        }
    }
    const auto closed = predict_chain(d, outcomes);
    std::vector<SwapStep> steps;
    for (const auto& o : outcomes) {
        steps.push_back({2, make_max_entangled(d, 2), o});
    }
    const auto folded = predict_multi_swap(make_max_entangled(d, 2), steps);
    const auto oracle = oracle_chain(d, outcomes);
    const int last = 2 * (static_cast<int>(outcomes.size()) + 1);

    out << "chain        : " << outcomes.size() + 1 << " pairs, outcomes";
    for (const auto& o : outcomes) out << " (" << o.u << "," << o.v << ")";
    out << "\n";
    out << "closed form  : " << to_string(closed) << "\n";
    out << "step by step : " << to_string(folded) << "\n";
    const bool fold_ok = same_family(closed, folded, 1e-10);
    double fidelity = 0.0;
    if (oracle.post) {
        out << "oracle       : " << to_string(*oracle.post) << "\n";
        fidelity = fidelity_up_to_phase(*oracle.post, family_to_state(closed, {1, last}));
    }
    out << "probability  : " << format_number(oracle.probability) << "\n";
    out << "fidelity     : " << format_number(fidelity) << "\n";
    const bool ok = fold_ok && fidelity >= 1.0 - 1e-10;
    out << "status       : " << (ok ? "passed" : "failed") << "\n";
    return ok ? kExitOk : kExitFailedCase;
}

// --- protocols -----------------------------------------------------------------

struct SumArgs {
    int d = 5;
    std::string secrets;
    std::string secrets_file;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_sum(const SumArgs& a, std::ostream& out) {
    const Dimension d(a.d);
    std::string text = a.secrets;
    if (!a.secrets_file.empty()) {
        std::ifstream in(a.secrets_file);
        if (!in || !std::getline(in, text)) {
            throw ConfigError("cannot read secrets from '" + a.secrets_file + "'");
        }
    }
    std::vector<ModInt> secrets;
    for (const int x : parse_int_list(text)) secrets.emplace_back(x, d);
    if (secrets.empty()) {
        throw ConfigError("sum needs --secrets or --secrets-file");
    }
    const auto t = run_summation(d, secrets, RandomSeed{a.seed});
    emit(transcript_json(t), a.out_path, out);
    return t.correct() ? kExitOk : kExitFailedCase;
}

struct QssArgs {
    int d = 3;
    int n = 3;
    std::uint64_t seed = 1;
    std::string out_path;
};

int run_qss(const QssArgs& a, std::ostream& out) {
    const auto t = run_secret_sharing(Dimension(a.d), a.n, RandomSeed{a.seed});
    emit(transcript_json(t), a.out_path, out);
    return t.consistent() ? kExitOk : kExitFailedCase;
}

int run_bell_table(const std::string& dims, std::ostream& out) {
    bool ok = true;
    out << "d  pairs  max|<Psi(u,v)|Psi(u',v')> - delta|\n";
    for (const int dv : parse_int_list(dims)) {
        const Dimension d(dv);
        std::vector<PureState> basis;
        for (int u = 0; u < dv; ++u) {
            for (int v = 0; v < dv; ++v) {
                basis.push_back(bell_state(d, ModInt(u, d), ModInt(v, d)));
            }
        }
        double worst = 0.0;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t k = 0; k < basis.size(); ++k) {
                const double delta = i == k ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(inner_product(basis[i], basis[k]) - delta));
            }
        }
        ok = ok && worst <= 1e-12;
        out << dv << "  " << basis.size() * basis.size() << "  " << format_number(worst) << "\n";
    }
    return ok ? kExitOk : kExitFailedCase;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Qudit entanglement-swapping simulator and verifier", "qswap"};
    app.require_subcommand(1);

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Sweep closed-form swap results against the oracle");
    verify_cmd->add_option("--d", verify.dims, "Dimensions, comma separated (default 2,3)");
    verify_cmd->add_option("--families", verify.families, "max,bell,ghz,ghz-class,cat-like");
    verify_cmd->add_option("--n", verify.arities, "Family arities, comma separated (default 2,3)");
    verify_cmd->add_option("--pairs", verify.pairs, "Swap partners: max,bell");
    auto* exhaustive = verify_cmd->add_flag("--exhaustive", verify.exhaustive, "Enumerate every case");
    verify_cmd->add_flag("--sampled", verify.sampled, "Seeded sampling per group")->excludes(exhaustive);
    verify_cmd->add_option("--samples", verify.samples, "Cases per sampled group");
    verify_cmd->add_option("--seed", verify.seed, "Master seed");
    verify_cmd->add_option("--fidelity-tol", verify.fidelity_tol);
    verify_cmd->add_option("--prob-tol", verify.prob_tol);
    verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores)");
    verify_cmd->add_option("--config", verify.config_path, "key=value sweep file")->check(CLI::ExistingFile);
    verify_cmd->add_option("--out", verify.out_path, "Write the report here instead of stdout");
    verify_cmd->add_option("--format", verify.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_flag("--no-timing", verify.no_timing, "Omit wall_ms from the JSON report");

    DemoArgs demo;
    auto* demo_cmd = app.add_subcommand("demo-swap", "Run and print one swap case");
    demo_cmd->add_option("--d", demo.d);
    demo_cmd->add_option("--family", demo.family, "max,bell,ghz,ghz-class,cat-like");
    demo_cmd->add_option("--n", demo.n);
    demo_cmd->add_option("--slot", demo.slot, "Measured qudit of the family (1-based)");
    demo_cmd->add_option("--pair", demo.pair, "max or bell");
    demo_cmd->add_option("--pair-u", demo.pair_u);
    demo_cmd->add_option("--pair-v", demo.pair_v);
    demo_cmd->add_option("--outcome", demo.outcome, "Bell outcome u:v");
    demo_cmd->add_option("--seed", demo.seed, "Seed for random family parameters");

    ChainArgs chain;
    auto* chain_cmd = app.add_subcommand("chain", "Swapping chain: closed form vs step-by-step vs oracle");
    chain_cmd->add_option("--d", chain.d);
    chain_cmd->add_option("--pairs", chain.pairs, "Number of pairs (random outcomes)");
    chain_cmd->add_option("--outcomes", chain.outcomes, "Explicit outcomes u:v,u:v,...");
    chain_cmd->add_option("--seed", chain.seed);

    SumArgs sum;
    auto* sum_cmd = app.add_subcommand("sum", "Secure multi-party summation");
    sum_cmd->add_option("--d", sum.d);
    auto* secrets_opt = sum_cmd->add_option("--secrets", sum.secrets, "Comma separated secrets");
    sum_cmd->add_option("--secrets-file", sum.secrets_file, "One-line CSV of secrets")->excludes(secrets_opt);
    sum_cmd->add_option("--seed", sum.seed);
    sum_cmd->add_option("--out", sum.out_path);

    QssArgs qss;
    auto* qss_cmd = app.add_subcommand("qss", "Secret sharing among n Bobs");
    qss_cmd->add_option("--d", qss.d);
    qss_cmd->add_option("--n", qss.n);
    qss_cmd->add_option("--seed", qss.seed);
    qss_cmd->add_option("--out", qss.out_path);

    std::string table_dims = "2,3,4,5,6,7";
    auto* table_cmd = app.add_subcommand("bell-table", "Bell basis orthonormality grid");
    table_cmd->add_option("--d", table_dims);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*verify_cmd) return run_verify(verify, *verify_cmd, out, err);
        if (*demo_cmd) return run_demo(demo, out);
        if (*chain_cmd) return run_chain(chain, out);
        if (*sum_cmd) return run_sum(sum, out);
        if (*qss_cmd) return run_qss(qss, out);
        if (*table_cmd) return run_bell_table(table_dims, out);
    } catch (const Error& e) {
        err << "qswap: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "qswap: invalid value: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qswap::cli
