// chardeg: character degrees of S_n and A_n, the up/dn partition graph, and
// exact checks of the inequalities relating the largest degree to the rest.

#include "chardeg/branch.hpp"
#include "chardeg/cache.hpp"
#include "chardeg/checks.hpp"
#include "chardeg/graph.hpp"
#include "chardeg/io.hpp"
#include "chardeg/parallel.hpp"
#include "chardeg/scan.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <set>

namespace {

using namespace chardeg;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    int n = 0;
    std::string range;
    std::string group = "s";
    std::string format;
    std::string cache_dir;
    std::string checks = "all";
    std::string output;
    std::string partition;
    unsigned threads = 1;
    int max_n = 60;
    bool override_domain = false;
    bool timings = false;
};

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int n = std::stoi(text);
        return {n, n};
    }
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) {
        throw std::invalid_argument("range must be A..B with 1 <= A <= B, got '" + text + "'");
    }
    return {lo, hi};
}

SpectrumOptions spectrum_options(const RunConfig& cfg) {
    SpectrumOptions options;
    options.compute.threads = cfg.threads;
    options.compute.max_n = cfg.max_n;
    return options;
}

std::unique_ptr<SpectrumCache> open_cache(const RunConfig& cfg) {
    std::string dir = cfg.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv("CHARDEG_CACHE_DIR")) {
            dir = env;
        }
    }
    if (dir.empty()) {
        return nullptr;
    }
    return std::make_unique<SpectrumCache>(dir);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw std::invalid_argument("unsupported format '" + format + "' for this command");
}

int cmd_degree(const RunConfig& cfg) {
    const auto lambda = Partition::parse(cfg.partition);
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json"});
    if (format == "json") {
        nlohmann::json doc = {{"schema", kSchemaVersion}};
        doc.update(degree_record(lambda));
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << degree_record_text(lambda);
    }
    return 0;
}

int cmd_spectrum(const RunConfig& cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json", "csv"});
    const auto cache = open_cache(cfg);
    const auto spectrum = cached_spectrum(cfg.n, parse_group(cfg.group), spectrum_options(cfg), cache.get());
    if (format == "json") {
        std::cout << spectrum_json_document(spectrum);
    } else if (format == "csv") {
        std::cout << spectrum_csv(spectrum);
    } else {
        std::cout << spectrum_text(spectrum);
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json", "csv"});
    const auto [lo, hi] = cfg.range.empty() ? std::pair{cfg.n, cfg.n} : parse_range(cfg.range);
    if (lo < 1) {
        throw std::invalid_argument("verify needs --n or --range");
    }
    check_guard(hi, spectrum_options(cfg).compute);

    // Explicitly named checks must cover the whole range; "all" keeps each
    // check to its own domain.
    std::vector<CheckKind> kinds;
    std::set<CheckKind> named;
    std::stringstream list(cfg.checks);
    for (std::string name; std::getline(list, name, ',');) {
        for (auto kind : parse_check_set(name)) {
            if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
                kinds.push_back(kind);
            }
            if (name != "all") {
                named.insert(kind);
            }
        }
    }
    for (auto kind : named) {
        if (lo < domain_start(kind) && !cfg.override_domain) {
            std::cerr << "error: " << to_string(kind) << " is stated for n >= " << domain_start(kind)
                      << "; range starts at " << lo << " (use --override-domain for informational output)\n";
            return kExitUsage;
        }
    }

    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<VerificationReport>> per_n(count);
    SpectrumOptions options = spectrum_options(cfg);
    const unsigned outer = std::min<unsigned>(cfg.threads, static_cast<unsigned>(count));
    options.compute.threads = std::max(1u, cfg.threads / std::max(1u, outer));
    parallel_for(count, outer, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const int n = lo + static_cast<int>(k);
            const SpectrumContext ctx(n, options);
            for (auto kind : kinds) {
                const bool in_domain = n >= domain_start(kind);
                if (!in_domain && !cfg.override_domain) {
                    continue;
                }
                per_n[k].push_back(run_check(ctx, kind, cfg.override_domain));
            }
        }
    });

    std::vector<VerificationReport> reports;
    for (auto& batch : per_n) {
        for (auto& r : batch) {
            reports.push_back(std::move(r));
        }
    }
    bool ok = true;
    for (const auto& r : reports) {
        ok = ok && r.acceptable();
    }
    if (format == "json") {
        std::cout << reports_json_document(reports, cfg.timings);
    } else if (format == "csv") {
        std::cout << reports_csv(reports);
    } else {
        std::size_t passed = 0;
        for (const auto& r : reports) {
            std::cout << report_text(r);
            passed += r.status == Status::Pass;
        }
        std::cout << reports.size() << " reports, " << passed << " pass, overall "
                  << (ok ? "OK" : "FAILED") << "\n";
    }
    return ok ? 0 : kExitFail;
}

int cmd_graph(const RunConfig& cfg) {
    const std::string format = cfg.format.empty() ? "json" : cfg.format;
    require_format(format, {"json", "dot"});
    check_guard(cfg.n, spectrum_options(cfg).compute);
    const auto graph = PartitionGraph::build(cfg.n, cfg.threads);
    if (format == "dot") {
        std::cout << graph_dot(graph);
    } else {
        std::cout << graph_to_json(graph).dump(2) << "\n";
    }
    return 0;
}

int cmd_branch(const RunConfig& cfg) {
    const std::string format = cfg.format.empty() ? "text" : cfg.format;
    require_format(format, {"text", "json"});
    const auto d = branch_decompose(Partition::parse(cfg.partition));
    if (format == "json") {
        std::cout << branch_to_json(d).dump(2) << "\n";
    } else {
        std::cout << branch_text(d);
    }
    return 0;
}

int cmd_scan(const RunConfig& cfg) {
    const auto cache = open_cache(cfg);
    if (cfg.output.empty()) {
        std::cout << scan_csv(scan(cfg.n, spectrum_options(cfg), cache.get()));
    } else {
        write_scan(cfg.output, cfg.n, spectrum_options(cfg), cache.get());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Character degrees of symmetric and alternating groups"};
    app.fallthrough();
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--cache-dir", cfg.cache_dir, "Spectrum cache directory (default: $CHARDEG_CACHE_DIR)");
    app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--max-n", cfg.max_n, "Refuse to work above this n")->check(CLI::PositiveNumber);
    app.add_flag("--override-domain", cfg.override_domain,
                 "Evaluate checks outside their stated range (informational)");

    auto* degree = app.add_subcommand("degree", "Hook product and degrees of one partition");
    degree->add_option("partition", cfg.partition, "e.g. 3,1,1 or 2^3,1")->required();
    degree->add_option("--format", cfg.format, "text|json");

    auto* spectrum = app.add_subcommand("spectrum", "Distinct degrees of S_n or A_n");
    spectrum->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--group", cfg.group, "s|a");
    spectrum->add_option("--format", cfg.format, "text|json|csv");

    auto* verify = app.add_subcommand("verify", "Run checks over a range of n");
    verify->add_option("--n", cfg.n)->check(CLI::PositiveNumber);
    verify->add_option("--range", cfg.range, "A..B");
    verify->add_option("--checks", cfg.checks,
                       "Comma list of theorem1, theorem2, sandwich, ratio-lemma, count-lemmas, move-scan, "
                       "induced-bound, epsilon-bounds, graph, all");
    verify->add_option("--format", cfg.format, "text|json|csv");
    verify->add_flag("--timings", cfg.timings, "Include elapsed times in JSON");

    auto* graph = app.add_subcommand("graph", "Components of the up/dn partition graph");
    graph->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);
    graph->add_option("--format", cfg.format, "json|dot");

    auto* branch = app.add_subcommand("branch", "Constituents of the restricted-then-induced character");
    branch->add_option("partition", cfg.partition)->required();
    branch->add_option("--format", cfg.format, "text|json");

    auto* scan_cmd = app.add_subcommand("scan", "Epsilon trend table for n = 5..N as CSV");
    scan_cmd->add_option("--n", cfg.n, "Largest n in the table")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--output", cfg.output, "CSV path (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*degree) return cmd_degree(cfg);
        if (*spectrum) return cmd_spectrum(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*graph) return cmd_graph(cfg);
        if (*branch) return cmd_branch(cfg);
        if (*scan_cmd) return cmd_scan(cfg);
    } catch (const ResourceGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
