#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "maxcalc/errors.hpp"
#include "maxcalc/runner.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw maxcalc::DomainError("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// "P2" or "b0,b1,b2,b3,b4"
std::array<maxcalc::Int, 5> parse_surface_arg(const std::string& arg, std::string& label) {
    if (arg.find(',') == std::string::npos) {
        label = arg;
        if (arg == "P2")
            return {1, 0, 1, 0, 1};
        if (arg == "P1xP1")
            return {1, 0, 2, 0, 1};
        if (arg == "B1")
            return {1, 0, 9, 0, 1};
        if (arg == "K3")
            return {1, 0, 22, 0, 1};
        throw maxcalc::DomainError("unknown catalog surface '" + arg + "'");
    }
    std::array<maxcalc::Int, 5> b{};
    std::istringstream in(arg);
    std::string tok;
    size_t i = 0;
    std::ostringstream lb;
    lb << "[";
    while (std::getline(in, tok, ',')) {
        if (i >= 5)
            throw maxcalc::DomainError("--surface expects 5 comma-separated Betti numbers");
        long long v = std::stoll(tok);
        if (v < 0)
            throw maxcalc::DomainError("--surface: negative Betti number");
        b[i] = v;
        lb << (i ? "," : "") << v;
        ++i;
    }
    if (i != 5)
        throw maxcalc::DomainError("--surface expects 5 comma-separated Betti numbers");
    lb << "]";
    label = lb.str();
    return b;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxcalc: a maximality calculus for real algebraic varieties"};
    app.require_subcommand(1);

    bool strict = false;
    int trunc = 16;
    app.add_flag("--strict", strict, "turn trace-recorded assumptions into errors");
    app.add_option("--trunc", trunc, "series truncation guard (default 16)");

    std::string run_file;
    auto* run_cmd = app.add_subcommand("run", "execute a script and print its report");
    run_cmd->add_option("file", run_file, "script file")->required();

    std::string series_surface;
    int series_upto = 0;
    auto* series_cmd = app.add_subcommand("series", "Betti numbers of punctual Hilbert schemes");
    series_cmd->add_option("--surface", series_surface, "catalog name or b0,b1,b2,b3,b4")
        ->required();
    series_cmd->add_option("--upto", series_upto, "expansion order in q")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "list the generator catalog");

    std::string trace_file, trace_var;
    auto* trace_cmd = app.add_subcommand("trace", "print the proof trace of one variety");
    trace_cmd->add_option("file", trace_file, "script file")->required();
    trace_cmd->add_option("--var", trace_var, "variety id")->required();

    CLI11_PARSE(app, argc, argv);

    const maxcalc::RunOptions opts{strict, trunc};
    try {
        if (*run_cmd) {
            maxcalc::RunResult r = maxcalc::run_script(read_file(run_file), opts);
            std::cout << r.report;
            return r.exit_code;
        }
        if (*series_cmd) {
            if (series_upto > trunc)
                throw maxcalc::DomainError("series: expansion order exceeds the truncation "
                                           "guard (raise it with --trunc)");
            std::string label;
            const auto b = parse_surface_arg(series_surface, label);
            std::cout << maxcalc::series_report(label, b, series_upto);
            return 0;
        }
        if (*catalog_cmd) {
            std::cout << maxcalc::catalog_report();
            return 0;
        }
        if (*trace_cmd) {
            std::cout << maxcalc::trace_of(read_file(trace_file), trace_var, opts);
            return 0;
        }
    } catch (const maxcalc::EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
