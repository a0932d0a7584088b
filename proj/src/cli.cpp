#include "imd/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "imd/cell_complex.hpp"
#include "imd/homology.hpp"
#include "imd/io.hpp"
#include "imd/morse.hpp"
#include "imd/persistence.hpp"
#include "imd/reduction.hpp"

namespace imd {

namespace {

struct Options {
    std::string file;
    std::string format;  // "", "boundary" or "simplicial"
    bool json = false;
    bool trace = false;
    long long seed = 0;  // reserved for randomized self-tests
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ChainComplex load_complex(const Options& options) {
    std::string format = options.format;
    if (format.empty()) {
        if (options.file.size() >= 4 && options.file.substr(options.file.size() - 4) == ".bnd")
            format = "boundary";
        else if (options.file.size() >= 4 &&
                 options.file.substr(options.file.size() - 4) == ".smp")
            format = "simplicial";
        else
            throw InputError("cannot infer format of '" + options.file +
                             "'; pass --format boundary|simplicial");
    }
    const std::string text = read_file(options.file);
    try {
        return format == "boundary" ? parse_boundary_format(text)
                                    : parse_simplicial_format(text);
    } catch (const ParseError& error) {
        throw InputError(options.file + ": " + error.what());
    }
}

ChainComplex load_valid_complex(const Options& options) {
    ChainComplex complex = load_complex(options);
    const ValidationReport report = validate(complex);
    if (!report.ok()) {
        std::string message = options.file + ": invalid complex";
        for (const ValidationIssue& issue : report.issues) message += "\n  " + to_string(issue);
        throw InputError(message);
    }
    return complex;
}

nlohmann::json trace_json(const IterationTrace& trace) {
    return {{"sizes", trace.sizes}, {"iterations", trace.iterations}};
}

nlohmann::json intervals_json(const PersistenceIntervals& intervals) {
    nlohmann::json list = nlohmann::json::array();
    for (const PersistenceInterval& interval : intervals) {
        nlohmann::json entry = {{"dim", interval.dim}, {"birth", interval.birth}};
        if (interval.death)
            entry["death"] = *interval.death;
        else
            entry["death"] = "inf";
        list.push_back(std::move(entry));
    }
    return {{"intervals", std::move(list)}};
}

void print_trace_comment(const IterationTrace& trace) {
    std::cout << "# iterations: " << trace.iterations << "\n# sizes:";
    for (std::size_t size : trace.sizes) std::cout << ' ' << size;
    std::cout << '\n';
}

int cmd_validate(const Options& options) {
    const ChainComplex complex = load_complex(options);
    const ValidationReport report = validate(complex);
    if (options.json) {
        nlohmann::json issues = nlohmann::json::array();
        for (const ValidationIssue& issue : report.issues) issues.push_back(to_string(issue));
        std::cout << nlohmann::json{{"valid", report.ok()}, {"issues", std::move(issues)}}.dump()
                  << '\n';
    } else if (report.ok()) {
        std::cout << "valid: " << complex.size() << " cells, top dimension "
                  << complex.top_dim() << '\n';
    } else {
        for (const ValidationIssue& issue : report.issues)
            std::cout << to_string(issue) << '\n';
    }
    return report.ok() ? 0 : 1;
}

int cmd_homology(const Options& options) {
    const ChainComplex complex = load_valid_complex(options);
    auto [fixpoint, trace] = iterate_to_fixpoint(complex, MatchingPolicy::unconstrained());
    std::vector<std::size_t> betti(complex.top_dim() >= 0 ? complex.top_dim() + 1 : 0, 0);
    for (const Cell& cell : fixpoint.cells()) ++betti[static_cast<std::size_t>(cell.dim)];

    if (options.json) {
        nlohmann::json doc = {{"betti", betti}};
        if (options.trace) doc["trace"] = trace_json(trace);
        std::cout << doc.dump() << '\n';
    } else {
        if (options.trace) print_trace_comment(trace);
        std::cout << format_betti(betti);
    }
    return 0;
}

int cmd_simplify(const Options& options) {
    const ChainComplex complex = load_valid_complex(options);
    IterationTrace trace;
    const ChainComplex fixpoint = simplify_filtered(complex, &trace);
    if (options.trace) print_trace_comment(trace);
    std::cout << emit_boundary_format(fixpoint);
    return 0;
}

int cmd_persist(const Options& options) {
    const ChainComplex complex = load_valid_complex(options);
    IterationTrace trace;
    const PersistenceIntervals intervals = persistence_pipeline(complex, &trace);
    if (options.json) {
        nlohmann::json doc = intervals_json(intervals);
        if (options.trace) doc["trace"] = trace_json(trace);
        std::cout << doc.dump() << '\n';
    } else {
        if (options.trace) print_trace_comment(trace);
        std::cout << format_intervals(intervals);
    }
    return 0;
}

int cmd_reduce(const Options& options) {
    const ChainComplex complex = load_valid_complex(options);
    const IntervalReadout readout = read_intervals(matrix_reduce(build_matrix(complex)));
    if (options.json)
        std::cout << intervals_json(readout.intervals).dump() << '\n';
    else
        std::cout << format_intervals(readout.intervals);
    return 0;
}

int cmd_check(const Options& options) {
    const ChainComplex complex = load_valid_complex(options);
    PersistenceIntervals morse = persistence_pipeline(complex);
    PersistenceIntervals oracle = read_intervals(matrix_reduce(build_matrix(complex))).intervals;
    sort_intervals(morse);
    sort_intervals(oracle);
    if (morse != oracle) {
        std::cerr << "mismatch between Morse pipeline and matrix reduction\n"
                  << "--- morse pipeline ---\n"
                  << format_intervals(morse) << "--- matrix reduction ---\n"
                  << format_intervals(oracle);
        return 2;
    }
    if (options.json)
        std::cout << intervals_json(morse).dump() << '\n';
    else
        std::cout << format_intervals(morse);
    return 0;
}

void add_common(CLI::App* cmd, Options& options) {
    cmd->add_option("file", options.file, "input complex")->required();
    cmd->add_option("--format", options.format, "input format (default: by extension)")
        ->check(CLI::IsMember({"boundary", "simplicial"}));
    cmd->add_flag("--json", options.json, "structured output");
    cmd->add_flag("--trace", options.trace, "print the iteration trace");
    cmd->add_option("--seed", options.seed, "seed for randomized self-tests (reserved)");
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Betti numbers and persistence intervals of filtered Z2 chain complexes "
                 "by iterated Morse decomposition"};
    app.require_subcommand(1);

    Options options;
    int (*handler)(const Options&) = nullptr;

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
    };
    const Command commands[] = {
        {"validate", "check the structural invariants of a complex", cmd_validate},
        {"homology", "print the Betti numbers", cmd_homology},
        {"simplify", "print the filtration-compatible fixpoint in boundary format", cmd_simplify},
        {"persist", "print persistence intervals via the Morse pipeline", cmd_persist},
        {"reduce", "print persistence intervals via matrix reduction", cmd_reduce},
        {"check", "run both pipelines and compare", cmd_check},
    };
    for (const Command& command : commands) {
        CLI::App* sub = app.add_subcommand(command.name, command.help);
        add_common(sub, options);
        sub->callback([&handler, run = command.run]() { handler = run; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& error) {
        const int code = app.exit(error);
        return code == 0 ? 0 : 1;
    }

    try {
        return handler(options);
    } catch (const InputError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return 1;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << '\n';
        return 2;
    }
}

}  // namespace imd
