// mapcount: exact counts of rooted and unrooted orientable maps by genus,
// edges and vertices.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error,
// 3 internal exactness failure, 4 resource exhaustion.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mapcount/mapcount.hpp"

using namespace mapcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExactness = 3;
constexpr int kExitResource = 4;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Writes either to stdout or to --out; machine formats carry no log lines.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.emplace(path, std::ios::binary);
            if (!file_->good()) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

private:
    std::optional<std::ofstream> file_;
};

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw UsageError("unknown format '" + name + "' (expected csv or json)");
}

// The genus of a map with n edges is at most floor(n/2).
int effective_genus_bound(int requested, int max_edges) {
    return std::min(requested, max_edges / 2);
}

struct CommonOptions {
    int max_genus = -1;  // -1: default to floor(max_edges/2)
    int max_edges = 0;
    int threads = 1;
    std::string format = "csv";
    std::string out;
};

void add_table_options(CLI::App* cmd, CommonOptions& opts, bool with_genus = true) {
    cmd->add_option("--max-edges", opts.max_edges, "largest edge count to tabulate")
        ->required()
        ->check(CLI::NonNegativeNumber);
    if (with_genus)
        cmd->add_option("--max-genus", opts.max_genus,
                        "largest genus to tabulate (default and cap: floor(max-edges/2))")
            ->check(CLI::NonNegativeNumber);
    cmd->add_option("--threads", opts.threads, "worker threads for table construction")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", opts.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out, "write output to this file instead of stdout");
}

int resolved_genus_bound(const CommonOptions& opts) {
    const int requested = opts.max_genus < 0 ? opts.max_edges / 2 : opts.max_genus;
    return effective_genus_bound(requested, opts.max_edges);
}

int run_rooted(const CommonOptions& opts, bool bivariate) {
    OutputSink sink(opts.out);
    const int g = resolved_genus_bound(opts);
    if (bivariate) {
        const auto table =
            reinterpret_as_vertices(build_edge_vertex_table(g, opts.max_edges, opts.threads));
        export_table(table, parse_format(opts.format), sink.stream());
    } else {
        const auto table = build_edge_table(g, opts.max_edges);
        export_table(table, parse_format(opts.format), sink.stream());
    }
    return kExitOk;
}

int run_unrooted(const CommonOptions& opts) {
    OutputSink sink(opts.out);
    const int g = resolved_genus_bound(opts);
    const auto rooted =
        reinterpret_as_vertices(build_edge_vertex_table(g, opts.max_edges, opts.threads));
    const auto table = build_unrooted_table(rooted, opts.threads);
    export_table(table, parse_format(opts.format), sink.stream());
    return kExitOk;
}

int run_value(int genus, int edges, std::optional<int> vertices, const std::string& method) {
    if (method == "cc") {
        if (vertices) {
            const auto table = reinterpret_as_vertices(
                build_edge_vertex_table(effective_genus_bound(genus, edges), edges));
            std::cout << to_decimal(genus > edges / 2 ? Int(0) : table.lookup(genus, edges, *vertices))
                      << "\n";
        } else {
            const auto table = build_edge_table(effective_genus_bound(genus, edges), edges);
            std::cout << to_decimal(genus > edges / 2 ? Int(0) : table.lookup(genus, edges)) << "\n";
        }
        return kExitOk;
    }
    if (vertices) throw UsageError("--vertices is only available with --method cc");
    if (genus < 1) throw UsageError("--method " + method + " applies to positive genus only");

    if (method == "closed") {
        const auto table = build_edge_table(genus, 6 * genus - 4);
        std::cout << to_decimal(closed_form_value(compute_pg(genus, table), edges)) << "\n";
        return kExitOk;
    }
    if (method == "fixed") {
        if (edges < 6 * genus - 3)
            throw UsageError("--method fixed requires edges >= 6g-3 = " +
                             std::to_string(6 * genus - 3) +
                             "; smaller counts come from the recurrence table (--method cc)");
        const auto table = build_edge_table(genus, 6 * genus - 4);
        std::vector<Int> prefix;
        for (int e = 2 * genus; e <= 6 * genus - 4; ++e) prefix.push_back(table.lookup(genus, e));
        Int value;
        for (int n = 6 * genus - 3; n <= edges; ++n) {
            value = fixed_genus_next(genus, prefix, n);
            prefix.push_back(value);
        }
        std::cout << to_decimal(value) << "\n";
        return kExitOk;
    }
    throw UsageError("unknown method '" + method + "'");
}

int run_poly(int genus, const std::string& format, const std::string& out) {
    if (genus < 1) throw UsageError("--genus must be >= 1 for poly");
    OutputSink sink(out);
    const auto table = build_edge_table(genus, 6 * genus - 4);
    const auto poly = compute_pg(genus, table);
    if (format.empty()) {
        sink.stream() << "P_" << genus << "(m) = " << polynomial_text(poly) << "\n"
                      << "M_" << genus << "(z) = " << render_rational(make_rational_form(poly));
    } else if (parse_format(format) == Format::csv) {
        write_polynomial_csv(poly, sink.stream());
    } else {
        write_polynomial_json(poly, sink.stream());
    }
    return kExitOk;
}

int run_verify(const std::string& fixtures, int max_genus, int max_edges, int threads,
               bool verbose) {
    std::ifstream in(fixtures);
    if (!in.good()) throw UsageError("cannot open fixtures file: " + fixtures);
    auto records = parse_csv(in);

    // Optional bounds select the sub-block to verify; by default the built
    // tables are sized to cover every record.
    if (max_genus >= 0 || max_edges >= 0) {
        std::vector<CountRecord> kept;
        for (const auto& r : records) {
            if (max_genus >= 0 && r.genus > max_genus) continue;
            if (max_edges >= 0 && r.edges > max_edges) continue;
            kept.push_back(r);
        }
        records.swap(kept);
    }
    if (records.empty()) {
        std::cerr << "no fixture records selected\n";
        return kExitVerifyFailed;
    }

    int need_genus = 0, need_edges = 0;
    bool need_unrooted = false, need_bivariate = false, need_univariate = false;
    for (const auto& r : records) {
        need_genus = std::max(need_genus, r.genus);
        need_edges = std::max(need_edges, r.edges);
        need_unrooted |= r.kind == TableKind::unrooted;
        need_bivariate |= r.kind == TableKind::rooted_edges_vertices;
        need_univariate |= r.kind == TableKind::rooted_edges;
    }

    VerifyReport report;
    auto merge = [&report](VerifyReport part) {
        report.passed += part.passed;
        report.failed += part.failed;
        for (auto& r : part.results) report.results.push_back(std::move(r));
    };

    std::vector<CountRecord> uni, biv, unr;
    for (const auto& r : records) {
        if (r.kind == TableKind::rooted_edges) uni.push_back(r);
        else if (r.kind == TableKind::rooted_edges_vertices) biv.push_back(r);
        else unr.push_back(r);
    }
    if (need_univariate) merge(verify_fixtures(build_edge_table(need_genus, need_edges), uni));
    if (need_bivariate || need_unrooted) {
        const auto rooted = reinterpret_as_vertices(
            build_edge_vertex_table(need_genus, need_edges, threads));
        if (need_bivariate) merge(verify_fixtures(rooted, biv));
        if (need_unrooted) merge(verify_fixtures(build_unrooted_table(rooted, threads), unr));
    }

    for (const auto& res : report.results) {
        if (res.status != CheckStatus::pass)
            std::cout << describe(res) << "\n";
        else if (verbose)
            std::cout << describe(res) << "\n";
    }
    std::cout << report.passed << "/" << report.results.size() << " fixture records verified\n";
    return report.ok() ? kExitOk : kExitVerifyFailed;
}

int run_bench(int max_edges, int step, int threads, bool csv, const std::string& out) {
    const auto report = run_trials(max_edges, step, threads);
    OutputSink sink(out);
    sink.stream() << (csv ? format_csv(report) : format_text(report));
    if (!validate(report))
        std::cerr << "warning: timing rows are not monotone; results may be noisy\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of rooted and unrooted orientable maps by genus"};
    app.require_subcommand(1);

    CommonOptions rooted_opts;
    bool bivariate = false;
    auto* rooted_cmd = app.add_subcommand("rooted", "build and export rooted map tables");
    add_table_options(rooted_cmd, rooted_opts);
    rooted_cmd->add_flag("--bivariate", bivariate, "count by edges and vertices instead of edges only");

    CommonOptions unrooted_opts;
    auto* unrooted_cmd = app.add_subcommand("unrooted", "build and export the unrooted map table");
    add_table_options(unrooted_cmd, unrooted_opts);

    int value_genus = 0, value_edges = 0;
    std::optional<int> value_vertices;
    std::string value_method = "cc";
    auto* value_cmd = app.add_subcommand("value", "print a single exact count");
    value_cmd->add_option("--genus", value_genus, "genus")->required()->check(CLI::NonNegativeNumber);
    value_cmd->add_option("--edges", value_edges, "edge count")->required()->check(CLI::NonNegativeNumber);
    value_cmd->add_option("--vertices", value_vertices, "vertex count (bivariate lookup)")
        ->check(CLI::PositiveNumber);
    value_cmd->add_option("--method", value_method, "cc (recurrence table), closed, or fixed")
        ->check(CLI::IsMember({"cc", "closed", "fixed"}));

    int poly_genus = 0;
    std::string poly_format, poly_out;
    auto* poly_cmd = app.add_subcommand("poly", "numerator polynomial and rational generating function");
    poly_cmd->add_option("--genus", poly_genus, "genus (>= 1)")->required();
    poly_cmd->add_option("--format", poly_format, "machine-readable output: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    poly_cmd->add_option("--out", poly_out, "write output to this file instead of stdout");

    std::string verify_fixtures_path;
    int verify_genus = -1, verify_edges = -1, verify_threads = 1;
    bool verify_verbose = false;
    auto* verify_cmd = app.add_subcommand("verify", "check tables against fixture files");
    verify_cmd->add_option("--fixtures", verify_fixtures_path, "fixture CSV file")->required();
    verify_cmd->add_option("--max-genus", verify_genus, "verify only fixtures with genus <= this");
    verify_cmd->add_option("--max-edges", verify_edges, "verify only fixtures with edges <= this");
    verify_cmd->add_option("--threads", verify_threads, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_flag("-v,--verbose", verify_verbose, "print a line for every record");

    int bench_edges = 100, bench_step = 10, bench_threads = 1;
    bool bench_csv = false;
    std::string bench_out;
    auto* bench_cmd = app.add_subcommand("bench", "wall-clock trials of full table builds");
    bench_cmd->add_option("--max-edges", bench_edges, "largest edge bound")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--step", bench_step, "edge bound increment")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", bench_threads, "worker threads")->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--csv", bench_csv, "emit CSV instead of aligned text");
    bench_cmd->add_option("--out", bench_out, "write output to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (rooted_cmd->parsed()) return run_rooted(rooted_opts, bivariate);
        if (unrooted_cmd->parsed()) return run_unrooted(unrooted_opts);
        if (value_cmd->parsed()) return run_value(value_genus, value_edges, value_vertices, value_method);
        if (poly_cmd->parsed()) return run_poly(poly_genus, poly_format, poly_out);
        if (verify_cmd->parsed())
            return run_verify(verify_fixtures_path, verify_genus, verify_edges, verify_threads,
                              verify_verbose);
        if (bench_cmd->parsed())
            return run_bench(bench_edges, bench_step, bench_threads, bench_csv, bench_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ExactnessError& e) {
        std::cerr << "internal exactness failure: " << e.what() << "\n";
        return kExitExactness;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory while building tables\n";
        return kExitResource;
    } catch (const std::length_error& e) {
        std::cerr << "error: table size exceeds addressable memory: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
