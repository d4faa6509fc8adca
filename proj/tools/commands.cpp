#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "boxbound/eigensolve.hpp"
#include "boxbound/jackson.hpp"
#include "boxbound/parallel.hpp"
#include "boxbound/testfns.hpp"

namespace boxbound::cli {

namespace {

std::string fmt_raw(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_pretty(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

std::string subset_string(Subset subset) {
    if (subset == 0) return "-";
    std::string s;
    for (int i = 0; i < 32; ++i) {
        if (!((subset >> i) & 1)) continue;
        if (!s.empty()) s += ';';
        s += std::to_string(i + 1);
    }
    return s;
}

// Writes to the path when given, otherwise to stdout. LF line endings.
class CsvSink {
public:
    explicit CsvSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }

    void row(const std::vector<std::string>& cells) {
        std::ostream& os = file_.is_open() ? file_ : std::cout;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    }

private:
    std::ofstream file_;
};

const TestFunction& find_function(const std::string& name, int n) {
    return lookup(name, n);  // throws std::out_of_range listing valid keys
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kExitUsage;
}

int numeric_error(const std::string& message) {
    std::cerr << "numeric error: " << message << '\n';
    return kExitNumeric;
}

// One column of the paper's bound table: which degrees are printed.
struct Table1Column {
    const char* header;
    const char* function;
    int n;
    int r_lo;
    int r_hi;
};

constexpr Table1Column kTable1Columns[] = {
    {"booth", "booth", 2, 6, 48},
    {"matyas", "matyas", 2, 6, 48},
    {"motzkin", "motzkin", 2, 6, 48},
    {"three-hump", "three-hump", 2, 6, 48},
    {"styblinski-tang-2", "styblinski-tang", 2, 6, 48},
    {"styblinski-tang-3", "styblinski-tang", 3, 8, 24},
    {"rosenbrock-2", "rosenbrock", 2, 6, 48},
    {"rosenbrock-3", "rosenbrock", 3, 8, 24},
};

constexpr const char* kTable2Functions[] = {"booth", "matyas", "three-hump", "motzkin"};

}  // namespace

std::string pretty_path(const std::string& raw_path) {
    const auto dot = raw_path.find_last_of('.');
    const auto slash = raw_path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return raw_path + ".pretty";
    return raw_path.substr(0, dot) + ".pretty" + raw_path.substr(dot);
}

int run_bound(const BoundOptions& opt) {
    try {
        const TestFunction& f = find_function(opt.function, opt.n);
        if (opt.method != "schmudgen" && opt.method != "sos-lebesgue" && opt.method != "jackson")
            return usage_error("unknown method '" + opt.method + "'");

        double value = 0.0;
        Subset winner = 0;
        const auto start = std::chrono::steady_clock::now();
        if (opt.method == "jackson") {
            std::vector<double> x_star = opt.x_star ? *opt.x_star : f.minimizers.front();
            if (static_cast<int>(x_star.size()) != f.n)
                return usage_error("--x-star must have " + std::to_string(f.n) + " coordinates");
            const auto degrees = degree_split(opt.r, f.n);
            value = jackson_bound(f.cheb, x_star, degrees);
        } else if (opt.method == "schmudgen") {
            const BoundResult result = schmudgen_bound(f.cheb, opt.r, false);
            value = result.value;
            winner = result.winner;
        } else {
            const BoundResult result = sos_lebesgue_bound(f.cheb, opt.r, false);
            value = result.value;
        }
        const auto wall =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

        CsvSink sink(opt.out);
        sink.row({"function", "n", "r", "method", "value", "winner_subset", "wall_ms"});
        sink.row({opt.function, std::to_string(opt.n), std::to_string(opt.r), opt.method,
                  fmt_raw(value), opt.method == "schmudgen" ? subset_string(winner) : "-",
                  std::to_string(wall.count())});
        return kExitOk;
    } catch (const DefinitenessError& e) {
        return numeric_error(e.what());
    } catch (const std::out_of_range& e) {
        return usage_error(e.what());
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    }
}

namespace {

// Computes every printed cell of a table in parallel, deterministically
// ordered on output regardless of completion order.
int emit_table1(const TableOptions& opt) {
    const int r_hi = opt.r_max > 0 ? opt.r_max : 48;
    if (r_hi < 6 || r_hi % 2 != 0) return usage_error("--r-max must be an even value >= 6");

    std::vector<int> degrees;
    for (int r = 6; r <= r_hi; r += 2) degrees.push_back(r);
    const std::size_t ncols = std::size(kTable1Columns);
    const std::size_t nrows = degrees.size();

    std::vector<std::optional<double>> cells(nrows * ncols);
    std::vector<std::size_t> tasks;
    for (std::size_t row = 0; row < nrows; ++row) {
        for (std::size_t col = 0; col < ncols; ++col) {
            const auto& column = kTable1Columns[col];
            const int r = degrees[row];
            if (r >= column.r_lo && r <= column.r_hi) tasks.push_back(row * ncols + col);
        }
    }

    std::string error;
    parallel_for(tasks.size(), [&](std::size_t t) {
        const std::size_t flat = tasks[t];
        const auto& column = kTable1Columns[flat % ncols];
        const int r = degrees[flat / ncols];
        const TestFunction& f = find_function(column.function, column.n);
        cells[flat] = schmudgen_bound(f.cheb, r, /*extract_density=*/false).value;
    });

    CsvSink raw(opt.out);
    std::optional<CsvSink> pretty;
    if (!opt.out.empty()) pretty.emplace(pretty_path(opt.out));

    std::vector<std::string> header = {"r"};
    for (const auto& column : kTable1Columns) header.push_back(column.header);
    raw.row(header);
    if (pretty) pretty->row(header);

    for (std::size_t row = 0; row < nrows; ++row) {
        std::vector<std::string> raw_cells = {std::to_string(degrees[row])};
        std::vector<std::string> pretty_cells = raw_cells;
        for (std::size_t col = 0; col < ncols; ++col) {
            const auto& cell = cells[row * ncols + col];
            raw_cells.push_back(cell ? fmt_raw(*cell) : "");
            pretty_cells.push_back(cell ? fmt_pretty(*cell) : "");
        }
        raw.row(raw_cells);
        if (pretty) pretty->row(pretty_cells);
    }
    return kExitOk;
}

int emit_table2(const TableOptions& opt) {
    const int r_hi = opt.r_max > 0 ? opt.r_max : 40;
    if (r_hi < 6 || r_hi % 2 != 0) return usage_error("--r-max must be an even value >= 6");

    std::vector<int> degrees;
    for (int r = 6; r <= r_hi; r += 2) degrees.push_back(r);
    const std::size_t ncols = std::size(kTable2Functions);
    const std::size_t nrows = degrees.size();

    struct Pair {
        double sos_lebesgue = 0.0;
        double schmudgen = 0.0;
    };
    std::vector<Pair> cells(nrows * ncols);
    parallel_for(nrows * ncols, [&](std::size_t flat) {
        const char* name = kTable2Functions[flat % ncols];
        const int r = degrees[flat / ncols];
        const TestFunction& f = find_function(name, 2);
        cells[flat].sos_lebesgue = sos_lebesgue_bound(f.cheb, r, false).value;
        cells[flat].schmudgen = schmudgen_bound(f.cheb, r, false).value;
    });

    CsvSink raw(opt.out);
    std::optional<CsvSink> pretty;
    if (!opt.out.empty()) pretty.emplace(pretty_path(opt.out));

    std::vector<std::string> header = {"r"};
    for (const char* name : kTable2Functions) {
        header.push_back(std::string(name) + "-sos-lebesgue");
        header.push_back(std::string(name) + "-schmudgen");
        header.push_back(std::string(name) + "-schmudgen-exceeds");
    }
    raw.row(header);
    if (pretty) pretty->row(header);

    for (std::size_t row = 0; row < nrows; ++row) {
        std::vector<std::string> raw_cells = {std::to_string(degrees[row])};
        std::vector<std::string> pretty_cells = raw_cells;
        for (std::size_t col = 0; col < ncols; ++col) {
            const Pair& p = cells[row * ncols + col];
            const char* flag = p.schmudgen > p.sos_lebesgue ? "1" : "0";
            raw_cells.push_back(fmt_raw(p.sos_lebesgue));
            raw_cells.push_back(fmt_raw(p.schmudgen));
            raw_cells.push_back(flag);
            pretty_cells.push_back(fmt_pretty(p.sos_lebesgue));
            pretty_cells.push_back(fmt_pretty(p.schmudgen));
            pretty_cells.push_back(flag);
        }
        raw.row(raw_cells);
        if (pretty) pretty->row(pretty_cells);
    }
    return kExitOk;
}

}  // namespace

int run_table1(const TableOptions& opt) {
    try {
        return emit_table1(opt);
    } catch (const DefinitenessError& e) {
        return numeric_error(e.what());
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

int run_table2(const TableOptions& opt) {
    try {
        return emit_table2(opt);
    } catch (const DefinitenessError& e) {
        return numeric_error(e.what());
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

int run_density(const DensityOptions& opt) {
    try {
        const TestFunction& f = find_function(opt.function, opt.n);
        if (f.n != 2) return usage_error("density output is two-dimensional; need n = 2");
        const BoundResult result = schmudgen_bound(f.cheb, opt.r);
        const auto samples = density_eval_grid(result, opt.grid);

        CsvSink sink(opt.out);
        sink.row({"x1", "x2", "h"});
        for (const auto& s : samples) {
            sink.row({fmt_raw(s.point[0]), fmt_raw(s.point[1]), fmt_raw(s.value)});
        }
        return kExitOk;
    } catch (const DefinitenessError& e) {
        return numeric_error(e.what());
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

int run_overlay(const OverlayOptions& opt) {
    try {
        if (opt.grid < 2) return usage_error("--grid must be >= 2");
        std::vector<double> grid(static_cast<std::size_t>(opt.grid));
        for (int j = 0; j < opt.grid; ++j) {
            grid[static_cast<std::size_t>(j)] =
                -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(opt.grid - 1);
        }
        std::vector<double> excluded;
        const auto rows = gaussian_overlay(opt.x_star, opt.r, grid, &excluded);
        for (double x : excluded) {
            std::cerr << "warning: grid point " << x << " excluded (weight singular at +-1)\n";
        }

        CsvSink sink(opt.out);
        sink.row({"x", "delta_kpm", "gaussian"});
        for (const auto& row : rows) {
            sink.row({fmt_raw(row.x), fmt_raw(row.delta_kpm), fmt_raw(row.gaussian)});
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

int run_constants(const ConstantsOptions& opt) {
    try {
        CsvSink sink(opt.out);
        sink.row({"function", "n", "d", "psi_d", "c_d", "C_d", "C_f"});
        for (const auto& f : catalog()) {
            const ErrorConstants ec = error_constants(f.cheb);
            sink.row({f.name, std::to_string(f.n), std::to_string(ec.d), std::to_string(ec.psi_d),
                      fmt_raw(ec.c_d), fmt_raw(ec.C_d), fmt_raw(ec.C_f)});
        }
        return kExitOk;
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Measure-based upper bounds for polynomial minimization on [-1,1]^n"};
    app.require_subcommand(1);

    BoundOptions bound;
    auto* cmd_bound = app.add_subcommand("bound", "Compute a single bound value");
    cmd_bound->add_option("--function", bound.function, "Test function name")->required();
    cmd_bound->add_option("--n", bound.n, "Dimension");
    cmd_bound->add_option("--r", bound.r, "Hierarchy degree")->required();
    cmd_bound->add_option("--method", bound.method, "schmudgen | sos-lebesgue | jackson");
    std::vector<double> x_star_values;
    cmd_bound->add_option("--x-star", x_star_values, "Center for the jackson method")->delimiter(',');
    cmd_bound->add_option("--out", bound.out, "Output CSV path (default stdout)");

    TableOptions table1;
    auto* cmd_table1 = app.add_subcommand("table1", "Bound table across the benchmark corpus");
    cmd_table1->add_option("--r-max", table1.r_max, "Largest degree (even, default 48)");
    cmd_table1->add_option("--out", table1.out, "Output CSV path (default stdout)");

    TableOptions table2;
    auto* cmd_table2 = app.add_subcommand("table2", "Comparison of both bound families (n = 2)");
    cmd_table2->add_option("--r-max", table2.r_max, "Largest degree (even, default 40)");
    cmd_table2->add_option("--out", table2.out, "Output CSV path (default stdout)");

    DensityOptions density;
    auto* cmd_density = app.add_subcommand("density", "Grid evaluation of the optimal density");
    cmd_density->add_option("--function", density.function, "Test function name")->required();
    cmd_density->add_option("--n", density.n, "Dimension (must be 2)");
    cmd_density->add_option("--r", density.r, "Hierarchy degree")->required();
    cmd_density->add_option("--grid", density.grid, "Points per axis (default 101)");
    cmd_density->add_option("--out", density.out, "Output CSV path (default stdout)");
    std::string density_method = "schmudgen";
    cmd_density->add_option("--method", density_method, "Only schmudgen is supported");

    OverlayOptions overlay;
    auto* cmd_overlay = app.add_subcommand("overlay", "Smoothed delta versus its Gaussian shape");
    cmd_overlay->add_option("--x-star", overlay.x_star, "Center in [-1,1]")->required();
    cmd_overlay->add_option("--r", overlay.r, "Smoothing degree")->required();
    cmd_overlay->add_option("--grid", overlay.grid, "Grid points on [-1,1] (default 201)");
    cmd_overlay->add_option("--out", overlay.out, "Output CSV path (default stdout)");

    ConstantsOptions constants;
    auto* cmd_constants = app.add_subcommand("constants", "Convergence-rate constants per function");
    cmd_constants->add_option("--out", constants.out, "Output CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (cmd_bound->parsed()) {
        if (cmd_bound->count("--x-star")) bound.x_star = x_star_values;
        return run_bound(bound);
    }
    if (cmd_table1->parsed()) return run_table1(table1);
    if (cmd_table2->parsed()) return run_table2(table2);
    if (cmd_density->parsed()) {
        if (density_method != "schmudgen")
            return usage_error("density supports only --method schmudgen");
        return run_density(density);
    }
    if (cmd_overlay->parsed()) return run_overlay(overlay);
    if (cmd_constants->parsed()) return run_constants(constants);
    return usage_error("no subcommand given");
}

}  // namespace boxbound::cli
