// rslab command line: enumeration, exact verification, bijection-strategy
// sweeps and SVG rendering for fully packed loops.
//
// Exit codes are a stable contract:
//   0 pass, 1 internal error, 2 expected-negative finding, 3 cap exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "rslab/altpath.hpp"
#include "rslab/json_io.hpp"
#include "rslab/spectral.hpp"
#include "rslab/svg_render.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;
constexpr int kExitCapExceeded = 3;

// Writes to the file when a path is given, otherwise to stdout.
void emit(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

int cmd_enumerate(int n, const std::string& format, bool count_only, bool with_edges,
                  const std::string& out_path, int max_n) {
    using rslab::Json;
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
        out = &file;
    }

    long long count = 0;
    rslab::for_each_asm_capped(n, max_n, [&](const rslab::Asm& a) {
        ++count;
        if (count_only) return;
        if (format == "fpl")
            *out << rslab::to_json(rslab::asm_to_fpl(a), with_edges).dump() << "\n";
        else
            *out << rslab::to_json(a).dump() << "\n";
    });

    const rslab::BigInt expected = rslab::asm_count_formula(n);
    const bool ok = expected == count;
    std::cerr << "n=" << n << " count=" << count << " expected=" << expected
              << (ok ? " OK" : " MISMATCH") << "\n";
    if (count_only) std::cout << count << "\n";
    return ok ? kExitPass : kExitNegative;
}

int cmd_verify(int n, const std::string& kind, const std::string& out_path, int max_n,
               long long dim_cap) {
    rslab::Json report;
    bool pass = false;
    if (kind == "rs") {
        const auto rec = rslab::verify_rs(n, max_n, dim_cap);
        pass = rec.pass;
        report = rslab::to_json(rec);
    } else if (kind == "harmonic") {
        const auto rec = rslab::verify_harmonic(n, max_n);
        pass = rec.pass;
        report = rslab::to_json(rec);
    } else if (kind == "sets") {
        const auto recs = rslab::verify_set_equinumeracy_all(n, max_n);
        pass = true;
        for (const auto& r : recs) pass = pass && r.pass;
        report = rslab::to_json(recs);
    } else if (kind == "tl") {
        const auto rec = rslab::check_tl_relations(n);
        pass = rec.all_pass();
        report = rslab::to_json(rec);
    } else if (kind == "gyration") {
        const auto rec = rslab::verify_gyration(n, max_n);
        pass = rec.pass;
        report = rslab::to_json(rec);
    } else {
        throw CLI::ValidationError("--kind", "unknown verification kind: " + kind);
    }
    emit(out_path, report.dump(2) + "\n");
    std::cerr << "verify n=" << n << " kind=" << kind << (pass ? " PASS" : " FAIL") << "\n";
    return pass ? kExitPass : kExitNegative;
}

int cmd_search(int n, const std::string& strategy, const std::string& out_path,
               long long cycle_limit, int max_n) {
    const rslab::StrategyId id = rslab::parse_strategy(strategy);
    const auto [hist, audit] = rslab::run_search(n, id, cycle_limit, max_n);

    rslab::Json report = rslab::to_json(hist);
    report["audit"] = rslab::to_json(audit);
    emit(out_path, report.dump(2) + "\n");

    std::cerr << "search n=" << n << " strategy=" << strategy
              << " pass_2n=" << (hist.pass_2n ? "yes" : "no")
              << " ambiguous=" << hist.ambiguous.size() << " not_found=" << hist.not_found.size()
              << "\n";
    if (hist.pass_2n && hist.ambiguous.empty() && hist.not_found.empty()) return kExitPass;
    return kExitNegative;
}

int cmd_render(const std::string& in_path, const std::string& out_path,
               const std::string& cycle_path, const rslab::RenderSpec& spec) {
    rslab::Json input;
    if (in_path.empty() || in_path == "-") {
        std::cin >> input;
    } else {
        std::ifstream in(in_path);
        if (!in) throw std::runtime_error("cannot open input file: " + in_path);
        in >> input;
    }
    const rslab::Fpl f = rslab::fpl_from_json(input);

    std::optional<std::vector<rslab::Edge>> cycle;
    if (!cycle_path.empty()) {
        std::ifstream in(cycle_path);
        if (!in) throw std::runtime_error("cannot open cycle file: " + cycle_path);
        rslab::Json cj;
        in >> cj;
        cycle = rslab::edges_from_json(cj);
    }

    emit(out_path, rslab::render_fpl_svg(f, spec, cycle ? &*cycle : nullptr));
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact fully-packed-loop laboratory"};
    app.require_subcommand(1);

    int n = 1;
    int max_n = rslab::kDefaultEnumCap;
    long long dim_cap = rslab::kDefaultSolverDimCap;
    long long cycle_limit = rslab::kDefaultCycleLimit;
    std::string format = "asm", kind = "rs", strategy = "first-path";
    std::string out_path, in_path, cycle_path;
    bool count_only = false, with_edges = false;

    auto* enumerate = app.add_subcommand("enumerate", "stream all ASMs (or FPLs) of order n");
    enumerate->add_option("--n", n, "matrix order")->required();
    enumerate->add_option("--format", format, "asm | fpl | json (alias of asm)");
    enumerate->add_flag("--count-only", count_only, "print only the count");
    enumerate->add_flag("--with-edges", with_edges, "include the edge list in FPL records");
    enumerate->add_option("--out", out_path, "write records to a file instead of stdout");
    enumerate->add_option("--max-n", max_n, "enumeration cap (n=7 is opt-in)");

    auto* verify = app.add_subcommand("verify", "run one exact verification");
    verify->add_option("--n", n, "size")->required();
    verify->add_option("--kind", kind, "rs | harmonic | sets | tl | gyration")->required();
    verify->add_option("--out", out_path, "write the JSON report to a file");
    verify->add_option("--max-n", max_n, "enumeration cap");
    verify->add_option("--dim-cap", dim_cap, "solver dimension cap (C_n)");

    auto* search = app.add_subcommand("search", "sweep a bijection strategy over F_n x [1,2n]");
    search->add_option("--n", n, "size")->required();
    search->add_option("--strategy", strategy,
                       "first-path | shortest | first-path+dihedral | shortest+dihedral")
        ->required();
    search->add_option("--out", out_path, "write the JSON report to a file");
    search->add_option("--cycle-limit", cycle_limit, "cycles generated per search");
    search->add_option("--max-n", max_n, "enumeration cap");

    rslab::RenderSpec spec;
    auto* render = app.add_subcommand("render", "render an FPL JSON file as SVG");
    render->add_option("--input", in_path, "FPL JSON file (default: stdin)");
    render->add_option("--out", out_path, "SVG output file (default: stdout)");
    render->add_option("--cycle", cycle_path, "JSON edge list to highlight");
    render->add_option("--scale", spec.scale, "pixels per lattice unit");
    render->add_option("--path-color", spec.path_color, "color of path edges");
    render->add_option("--converse-color", spec.converse_color, "color of converse edges");
    render->add_option("--highlight-color", spec.highlight_color, "color of the cycle overlay");
    bool no_labels = false;
    render->add_flag("--no-labels", no_labels, "omit the stub labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitError; // 0 covers --help
    }

    try {
        if (*enumerate) {
            if (format == "json") format = "asm";
            if (format != "asm" && format != "fpl")
                throw CLI::ValidationError("--format", "unknown format: " + format);
            return cmd_enumerate(n, format, count_only, with_edges, out_path, max_n);
        }
        if (*verify) return cmd_verify(n, kind, out_path, max_n, dim_cap);
        if (*search) return cmd_search(n, strategy, out_path, cycle_limit, max_n);
        if (*render) {
            spec.labels = !no_labels;
            return cmd_render(in_path, out_path, cycle_path, spec);
        }
    } catch (const rslab::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
