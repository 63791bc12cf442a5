#include "optia/harness.hpp"

#include <array>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "optia/error.hpp"
#include "optia/rng.hpp"
#include "optia/text.hpp"

namespace optia {

using nlohmann::json;

namespace {

json algorithm_to_json(const AlgorithmConfig& a) {
    const auto& p = a.params;
    return json{{"algorithm_id", to_string(a.id)},
                {"variation", to_string(a.variation)},
                {"c", p.c},
                {"cm_mode", to_string(p.cm_mode)},
                {"dup", p.dup},
                {"tau", p.tau ? json(*p.tau) : json("inf")},
                {"mu", p.mu},
                {"p", p.p},
                {"div", p.div}};
}

json benchmark_to_json(const BenchmarkSpec& b) {
    return json{{"function_id", to_string(b.id)},
                {"n", b.n},
                {"k", b.k},
                {"d", b.d},
                {"gamma", b.gamma},
                {"epsilon", b.epsilon},
                {"z", b.z},
                {"a", b.a},
                {"b", b.b}};
}

json record_to_json(const RunRecord& r) {
    return json{{"success", r.success},
                {"evaluations_used", r.evaluations_used},
                {"generations", r.generations},
                {"best_fitness", r.best_fitness},
                {"seed", r.seed}};
}

// Field access that reports the full path of whatever is missing or mistyped.
class Reader {
public:
    Reader(const json& node, std::string path) : node_(node), path_(std::move(path)) {}

    Reader child(const std::string& key) const { return {at(key), path_ + "." + key}; }

    template <typename T>
    T get(const std::string& key) const {
        const json& v = at(key);
        try {
            if constexpr (std::is_same_v<T, double>) {
                if (!v.is_number()) throw std::invalid_argument("");
            } else if constexpr (std::is_same_v<T, bool>) {
                if (!v.is_boolean()) throw std::invalid_argument("");
            } else if constexpr (std::is_integral_v<T>) {
                if (!v.is_number_unsigned()) throw std::invalid_argument("");
            } else {
                if (!v.is_string()) throw std::invalid_argument("");
            }
            return v.get<T>();
        } catch (const std::exception&) {
            throw ParseError("field '" + path_ + "." + key + "': unexpected value " + v.dump());
        }
    }

    template <typename Parse>
    auto parse(const std::string& key, Parse&& fn) const {
        const auto text = get<std::string>(key);
        try {
            return fn(text);
        } catch (const ConfigError& e) {
            throw ParseError("field '" + path_ + "." + key + "': " + e.what());
        }
    }

    const json& node() const { return node_; }
    const std::string& path() const { return path_; }

private:
    const json& at(const std::string& key) const {
        if (!node_.is_object() || !node_.contains(key)) throw ParseError("field '" + path_ + "." + key + "': missing");
        return node_.at(key);
    }

    const json& node_;
    std::string path_;
};

AlgorithmConfig algorithm_from_json(const Reader& r) {
    AlgorithmConfig a;
    a.id = r.parse("algorithm_id", [](const std::string& s) { return parse_algorithm_id(s); });
    a.variation = r.parse("variation", [](const std::string& s) { return parse_variation(s); });
    auto& p = a.params;
    p.c = r.get<double>("c");
    p.cm_mode = r.parse("cm_mode", [](const std::string& s) { return parse_cm_mode(s); });
    p.dup = r.get<std::size_t>("dup");
    if (r.node().contains("tau") && r.node().at("tau").is_string()) {
        if (r.get<std::string>("tau") != "inf") throw ParseError("field '" + r.path() + ".tau': expected integer or \"inf\"");
        p.tau.reset();
    } else {
        p.tau = r.get<std::uint64_t>("tau");
    }
    p.mu = r.get<std::size_t>("mu");
    p.p = r.get<double>("p");
    p.div = r.get<bool>("div");
    return a;
}

BenchmarkSpec benchmark_from_json(const Reader& r) {
    BenchmarkSpec b;
    b.id = r.parse("function_id", [](const std::string& s) { return parse_function_id(s); });
    b.n = r.get<std::size_t>("n");
    b.k = r.get<std::size_t>("k");
    b.d = r.get<std::size_t>("d");
    b.gamma = r.get<double>("gamma");
    b.epsilon = r.get<double>("epsilon");
    b.z = r.get<double>("z");
    b.a = r.get<double>("a");
    b.b = r.get<double>("b");
    return b;
}

RunRecord record_from_json(const Reader& r) {
    RunRecord rec;
    rec.success = r.get<bool>("success");
    rec.evaluations_used = r.get<std::uint64_t>("evaluations_used");
    rec.generations = r.get<std::uint64_t>("generations");
    rec.best_fitness = r.get<double>("best_fitness");
    rec.seed = r.get<std::uint64_t>("seed");
    return rec;
}

constexpr std::string_view kCsvHeader = "run_index,seed,success,evaluations_used,generations,best_fitness";

}  // namespace

void validate(const ExperimentConfig& config) {
    validate(config.algorithm);
    validate(config.benchmark);
    if (config.budget < 1) throw ConfigError("budget out of range: must be at least 1");
    if (config.runs < 1) throw ConfigError("runs out of range: must be at least 1");
    if (config.parallelism < 1) throw ConfigError("parallelism out of range: must be at least 1");
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    validate(config);
    ExperimentResult result{config, std::vector<RunRecord>(config.runs)};
    const Landscape landscape = make_landscape(config.benchmark);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < config.runs; i = next++)
            result.records[i] = run_on(config.algorithm, config.benchmark.n, landscape, config.budget,
                                       derive_seed(config.master_seed, i));
    };

    const auto threads = static_cast<std::size_t>(std::min<std::uint64_t>(config.parallelism, config.runs));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return result;
}

std::string to_json(const ExperimentResult& result) {
    const auto& c = result.config;
    json records = json::array();
    for (const auto& r : result.records) records.push_back(record_to_json(r));
    json doc{{"config",
              {{"algorithm", algorithm_to_json(c.algorithm)},
               {"benchmark", benchmark_to_json(c.benchmark)},
               {"budget", c.budget},
               {"runs", c.runs},
               {"master_seed", c.master_seed}}},
             {"records", std::move(records)}};
    return doc.dump(2) + "\n";
}

ExperimentResult from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        // The library message carries the line and column of the failure.
        throw ParseError(e.what());
    }
    const Reader root(doc, "$");
    const Reader cfg = root.child("config");
    ExperimentResult result;
    result.config.algorithm = algorithm_from_json(cfg.child("algorithm"));
    result.config.benchmark = benchmark_from_json(cfg.child("benchmark"));
    result.config.budget = cfg.get<std::uint64_t>("budget");
    result.config.runs = cfg.get<std::uint64_t>("runs");
    result.config.master_seed = cfg.get<std::uint64_t>("master_seed");

    const Reader recs = root.child("records");
    if (!recs.node().is_array()) throw ParseError("field '$.records': expected an array");
    for (std::size_t i = 0; i < recs.node().size(); ++i)
        result.records.push_back(record_from_json(Reader(recs.node()[i], "$.records[" + std::to_string(i) + "]")));
    if (result.records.size() != result.config.runs)
        throw ParseError("field '$.records': expected " + std::to_string(result.config.runs) + " records, found " +
                         std::to_string(result.records.size()));
    return result;
}

std::string to_csv(const std::vector<RunRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += std::to_string(i) + ',' + std::to_string(r.seed) + ',' + (r.success ? "1" : "0") + ',' +
               std::to_string(r.evaluations_used) + ',' + std::to_string(r.generations) + ',' +
               format_double(r.best_fitness) + '\n';
    }
    return out;
}

std::vector<RunRecord> from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) throw ParseError("line 1: expected header '" + std::string(kCsvHeader) + "'");
    static constexpr std::array<std::string_view, 6> kFields{"run_index", "seed", "success", "evaluations_used",
                                                             "generations", "best_fitness"};
    std::vector<RunRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != kFields.size())
            throw ParseError("line " + std::to_string(line_no) + ": expected 6 fields, found " +
                             std::to_string(cells.size()));
        std::size_t field = 0;
        try {
            RunRecord r;
            if (parse_uint(cells[0], "run_index") != records.size())
                throw ConfigError("run_index out of sequence");
            field = 1;
            r.seed = parse_uint(cells[1], "seed");
            field = 2;
            const auto success = parse_uint(cells[2], "success");
            if (success > 1) throw ConfigError("success must be 0 or 1");
            r.success = success == 1;
            field = 3;
            r.evaluations_used = parse_uint(cells[3], "evaluations_used");
            field = 4;
            r.generations = parse_uint(cells[4], "generations");
            field = 5;
            r.best_fitness = parse_double(cells[5], "best_fitness");
            records.push_back(r);
        } catch (const ConfigError& e) {
            throw ParseError("line " + std::to_string(line_no) + ", field " + std::string(kFields[field]) + ": " +
                             e.what());
        }
    }
    return records;
}

void save_results(const ExperimentResult& result, const std::filesystem::path& path) {
    const auto ext = path.extension();
    std::string body;
    if (ext == ".json")
        body = to_json(result);
    else if (ext == ".csv")
        body = to_csv(result.records);
    else
        throw std::runtime_error("unsupported results extension '" + ext.string() + "' (use .json or .csv)");
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body) || !out.flush()) throw std::runtime_error("cannot write " + path.string());
}

ExperimentResult load_results(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

}  // namespace optia
