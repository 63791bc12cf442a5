#include "optia/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include "CLI11.hpp"

#include "optia/analysis.hpp"
#include "optia/error.hpp"
#include "optia/harness.hpp"
#include "optia/text.hpp"

namespace optia::cli {

namespace {

const std::vector<std::string> kRunLike{"run", "sweep"};

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for problems with input or output files (exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

using Values = std::map<std::string, std::string>;

class Flags {
public:
    explicit Flags(const Values& v) : v_(v) {}

    bool has(const std::string& name) const { return v_.contains(name); }
    const std::string& str(const std::string& name) const {
        const auto it = v_.find(name);
        if (it == v_.end()) throw ConfigError("missing required flag --" + name);
        return it->second;
    }
    std::uint64_t uint(const std::string& name) const { return parse_uint(str(name), name); }
    std::uint64_t uint(const std::string& name, std::uint64_t fallback) const {
        return has(name) ? uint(name) : fallback;
    }
    double real(const std::string& name, double fallback) const {
        return has(name) ? parse_rational(str(name), name) : fallback;
    }

private:
    const Values& v_;
};

AlgorithmConfig algorithm_from(const Flags& f) {
    AlgorithmConfig a = default_config(parse_algorithm_id(f.str("algo")));
    auto& p = a.params;
    p.mu = f.uint("mu", 1);
    p.dup = f.uint("dup", 1);
    p.c = f.real("c", 1.0);
    p.p = f.real("p", 0.0);
    if (f.has("tau")) {
        if (f.str("tau") == "inf")
            p.tau.reset();
        else
            p.tau = f.uint("tau");
    }
    if (f.has("div")) {
        const auto div = f.uint("div");
        if (div > 1) throw ConfigError("div out of range: must be 0 or 1");
        p.div = div == 1;
    }
    if (f.has("cm-mode")) p.cm_mode = parse_cm_mode(f.str("cm-mode"));
    if (f.has("variation")) a.variation = parse_variation(f.str("variation"));
    validate(a);
    return a;
}

BenchmarkSpec benchmark_from(const Flags& f, std::size_t n) {
    BenchmarkSpec b;
    b.id = parse_function_id(f.str("function"));
    b.n = n;
    b.k = f.uint("k", 0);
    b.d = f.uint("d", 0);
    b.gamma = f.real("gamma", b.gamma);
    b.epsilon = f.real("epsilon", b.epsilon);
    if (b.id == FunctionId::SimpleTrap) {
        const auto defaults = BenchmarkSpec::simple_trap(n);
        b.z = f.real("z", defaults.z);
        b.b = f.real("b", static_cast<double>(n) - b.z - 1.0);
        b.a = f.real("a", 2.0 * b.b);
    }
    for (const char* key : {"k", "d", "gamma", "epsilon", "z", "a", "b"}) {
        const bool used = (b.id == FunctionId::Jump && std::string_view(key) == "k") ||
                          (b.id == FunctionId::Cliff && std::string_view(key) == "d") ||
                          (b.id == FunctionId::HyperTrap && std::string_view(key) == "gamma") ||
                          (b.id == FunctionId::HiddenPath && std::string_view(key) == "epsilon") ||
                          (b.id == FunctionId::SimpleTrap && std::string_view(key).size() == 1 &&
                           std::string_view("zab").find(key[0]) != std::string_view::npos);
        if (f.has(key) && !used) throw ConfigError("--" + std::string(key) + " does not apply to " + f.str("function"));
    }
    validate(b);
    return b;
}

ExperimentConfig experiment_from(const Flags& f, std::size_t n) {
    ExperimentConfig e;
    e.algorithm = algorithm_from(f);
    e.benchmark = benchmark_from(f, n);
    e.budget = f.uint("budget");
    e.runs = f.uint("runs", 1);
    e.master_seed = f.uint("seed", 0);
    e.parallelism = f.uint("parallelism", 1);
    validate(e);
    return e;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body) || !out.flush()) throw IoError("cannot write " + path.string());
}

void save_both(const ExperimentResult& result, const std::string& prefix) {
    try {
        save_results(result, prefix + ".json");
        save_results(result, prefix + ".csv");
    } catch (const std::runtime_error& e) {
        throw IoError(e.what());
    }
}

std::string describe(const ExperimentConfig& c) {
    return std::string(to_string(c.algorithm.id)) + " on " + to_string(c.benchmark);
}

int cmd_run(const Flags& f, std::ostream& out) {
    const auto config = experiment_from(f, f.uint("n"));
    const auto result = run_experiment(config);
    if (f.has("out")) save_both(result, f.str("out"));
    out << describe(config) << ": " << summary_line(summarize(result.records)) << '\n';
    return kOk;
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> ns;
    for (auto part : split(text, ',')) ns.push_back(parse_uint(part, "n-list"));
    if (ns.size() < 3) throw ConfigError("n-list needs at least 3 sizes");
    if (std::set<std::size_t>(ns.begin(), ns.end()).size() != ns.size()) throw ConfigError("n-list has duplicates");
    return ns;
}

int cmd_sweep(const Flags& f, std::ostream& out) {
    std::vector<ExperimentConfig> configs;
    for (auto n : parse_n_list(f.str("n-list"))) configs.push_back(experiment_from(f, n));

    std::vector<SweepRow> rows;
    for (const auto& config : configs) {
        const auto result = run_experiment(config);
        if (f.has("out")) save_both(result, f.str("out") + "-n" + std::to_string(config.benchmark.n));
        rows.push_back({config.benchmark.n, summarize(result.records)});
    }
    const std::string table = sweep_table(rows);
    if (f.has("out")) write_file(f.str("out") + ".tsv", table);
    out << table;
    return kOk;
}

int cmd_verify_op(const Flags& f, std::ostream& out) {
    const std::string which = f.str("which");
    Rng rng(f.uint("seed", 0));
    bool pass = false;
    if (which == "hypermutation") {
        const auto n = f.uint("n"), k = f.uint("k"), samples = f.uint("samples", 1000000);
        if (n < 1 || n > 20) throw ConfigError("n out of range: must satisfy 1 <= n <= 20");
        if (k < 1 || k > n) throw ConfigError("k out of range: must satisfy 1 <= k <= n");
        if (samples < 100000) throw ConfigError("samples out of range: must be at least 100000");
        const auto check = verify_hypermutation_distribution(n, k, samples, rng);
        out << "hypermutation n=" << n << " k=" << k << " samples=" << samples
            << " empirical=" << format_double(check.empirical) << " exact=" << format_double(check.exact)
            << (check.pass ? " PASS" : " FAIL") << '\n';
        pass = check.pass;
    } else if (which == "ageing") {
        const auto mu = f.uint("mu"), trials = f.uint("trials", 100000);
        if (mu < 1) throw ConfigError("mu out of range: must be at least 1");
        if (trials < 100000) throw ConfigError("trials out of range: must be at least 100000");
        const auto check = verify_ageing_survivors(mu, trials, rng);
        out << "ageing mu=" << mu << " trials=" << trials << " chi_square=" << format_double(check.chi_square)
            << " critical=" << format_double(check.critical) << " dof=" << check.dof
            << (check.pass ? " PASS" : " FAIL") << '\n';
        for (std::size_t s = 0; s < check.histogram.size(); ++s)
            out << "survivors=" << s << "\tobserved=" << check.histogram[s]
                << "\texpected=" << format_double(check.expected[s]) << '\n';
        pass = check.pass;
    } else {
        throw ConfigError("which out of range: expected hypermutation or ageing, got '" + which + "'");
    }
    return pass ? kOk : kVerificationFailed;
}

std::vector<ExperimentResult> load_all(const std::vector<std::string>& paths) {
    if (paths.empty()) throw ConfigError("missing required flag --in");
    std::vector<ExperimentResult> results;
    for (const auto& path : paths) {
        try {
            results.push_back(load_results(path));
        } catch (const std::runtime_error& e) {
            throw IoError(path + ": " + e.what());
        }
    }
    return results;
}

// All inputs must come from one configuration, apart from the problem size.
void require_homogeneous(const std::vector<ExperimentResult>& results) {
    auto key = [](ExperimentConfig c) {
        c.benchmark.n = 0;
        c.parallelism = 1;
        // SimpleTrap parameters scale with n.
        if (c.benchmark.id == FunctionId::SimpleTrap) c.benchmark.z = c.benchmark.a = c.benchmark.b = 0.0;
        return c;
    };
    std::set<std::size_t> sizes;
    for (const auto& r : results) {
        if (!(key(r.config) == key(results.front().config))) throw ConfigError("heterogeneous configs");
        if (!sizes.insert(r.config.benchmark.n).second) throw ConfigError("heterogeneous configs: repeated n");
    }
}

std::vector<SweepRow> rows_of(std::vector<ExperimentResult>& results) {
    std::sort(results.begin(), results.end(),
              [](const auto& a, const auto& b) { return a.config.benchmark.n < b.config.benchmark.n; });
    std::vector<SweepRow> rows;
    for (const auto& r : results) rows.push_back({r.config.benchmark.n, summarize(r.records)});
    return rows;
}

int cmd_report(const std::vector<std::string>& inputs, std::ostream& out) {
    auto results = load_all(inputs);
    require_homogeneous(results);
    if (results.size() == 1) {
        out << describe(results.front().config) << ": " << summary_line(summarize(results.front().records)) << '\n';
        return kOk;
    }
    const auto rows = rows_of(results);
    for (const auto& row : rows) out << "# n=" << row.n << ' ' << summary_line(row.stats) << '\n';
    out << sweep_table(rows);
    return kOk;
}

int cmd_fit(const std::vector<std::string>& inputs, std::ostream& out) {
    auto results = load_all(inputs);
    require_homogeneous(results);
    const auto rows = rows_of(results);
    out << sweep_table(rows);
    return sweep_fit(rows) ? kOk : kValidation;
}

}  // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"run", "sweep", "verify-op", "fit", "report"};
    return names;
}

const std::vector<FlagSpec>& flag_registry() {
    static const std::vector<FlagSpec> registry{
        {"algo", "optia|optia-star|ia-hyp|ea|rls1|mu-rls-p-ageing|mu-rls-ageing-div|mu-ea-ageing", "algorithm", kRunLike},
        {"function", "onemax|zeromax|leadingones|jump|cliff|simpletrap|hiddenpath|hypertrap", "benchmark function", kRunLike},
        {"n", "integer >= 1", "problem size", {"run", "verify-op"}},
        {"n-list", "comma-separated integers, at least 3", "problem sizes", {"sweep"}},
        {"budget", "integer >= 1", "fitness evaluations per run", kRunLike},
        {"runs", "integer >= 1 (default 1)", "independent runs", kRunLike},
        {"seed", "integer (default 0)", "master seed", with(kRunLike, {"verify-op"})},
        {"parallelism", "integer >= 1 (default 1)", "worker threads; results do not depend on it", kRunLike},
        {"mu", "integer >= 1 (default 1)", "population size", with(kRunLike, {"verify-op"})},
        {"dup", "integer >= 1 (default 1)", "clones per individual", kRunLike},
        {"c", "real in (0,1] (default 1)", "mutation potential factor, M = ceil(c n)", kRunLike},
        {"tau", "integer >= 1 | inf (default inf)", "ageing threshold", kRunLike},
        {"p", "real in [0,1/2) (default 0)", "copy probability of mu-rls-p-ageing", kRunLike},
        {"div", "0|1 (default 1 for optia-star and mu-rls-ageing-div, else 0)", "discard offspring equal to a parent",
         kRunLike},
        {"cm-mode", "none|strict|nonstrict (default nonstrict)", "stop-at-constructive-mutation rule", kRunLike},
        {"variation", "hypermutation|sbm (default hypermutation)", "variation operator of optia", kRunLike},
        {"k", "integer in [1,n]", "jump gap length", with(kRunLike, {"verify-op"})},
        {"d", "integer in [1,n]", "cliff distance", kRunLike},
        {"gamma", "rational in (0,1/8] (default 1/8)", "hypertrap trap distance factor", kRunLike},
        {"epsilon", "real in (0,1) (default 0.5)", "hiddenpath offset", kRunLike},
        {"z", "real (default floor(n/4))", "simpletrap trap width", kRunLike},
        {"a", "real in [3b/2,2b] (default 2b)", "simpletrap optimum value", kRunLike},
        {"b", "real = n-z-1 (default)", "simpletrap slope top value", kRunLike},
        {"out", "path prefix", "writes <prefix>.csv and <prefix>.json (sweep: per-n files and <prefix>.tsv)",
         kRunLike},
        {"which", "hypermutation|ageing", "operator to verify", {"verify-op"}},
        {"samples", "integer >= 100000 (default 1000000)", "hypermutation walks", {"verify-op"}},
        {"trials", "integer >= 100000 (default 100000)", "ageing trials", {"verify-op"}},
        {"in", "path to a JSON results file (repeatable)", "saved results", {"fit", "report"}},
    };
    return registry;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Opt-IA experiments: runs, sweeps, operator checks and reports"};
    app.require_subcommand(1);

    std::map<std::string, Values> values;
    std::map<std::string, std::map<std::string, std::string>> scratch;
    std::vector<std::string> inputs;
    std::map<std::string, CLI::App*> subs;
    const std::map<std::string, std::string> about{
        {"run", "run one seeded experiment"},
        {"sweep", "run one experiment per n and fit a log-log slope"},
        {"verify-op", "check an operator's distribution by Monte Carlo"},
        {"fit", "fit a log-log slope over saved results"},
        {"report", "summarise saved results"},
    };
    for (const auto& name : subcommands()) subs[name] = app.add_subcommand(name, about.at(name));

    for (const auto& flag : flag_registry()) {
        for (const auto& sub : flag.subcommands) {
            const std::string text = flag.description + " [" + flag.domain + "]";
            if (flag.name == "in")
                subs[sub]->add_option("--in", inputs, text);
            else
                subs[sub]->add_option("--" + flag.name, scratch[sub][flag.name], text);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kValidation;
    }

    try {
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            Values& v = values[name];
            for (const auto& [flag, value] : scratch[name])
                if (sub->count("--" + flag) > 0) v[flag] = value;
            const Flags f(v);
            if (name == "run") return cmd_run(f, out);
            if (name == "sweep") return cmd_sweep(f, out);
            if (name == "verify-op") return cmd_verify_op(f, out);
            if (name == "report") return cmd_report(inputs, out);
            if (name == "fit") return cmd_fit(inputs, out);
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    }
    return kValidation;
}

}  // namespace optia::cli
