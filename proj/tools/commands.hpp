#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace boxbound::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

struct BoundOptions {
    std::string function;
    int n = 2;
    int r = 0;
    std::string method = "schmudgen";  // schmudgen | sos-lebesgue | jackson
    std::optional<std::vector<double>> x_star;
    std::string out;  // empty = stdout
};

struct TableOptions {
    int r_max = 0;  // 0 = full printed range
    std::string out;
};

struct DensityOptions {
    std::string function;
    int n = 2;
    int r = 0;
    int grid = 101;
    std::string out;
};

struct OverlayOptions {
    double x_star = 0.0;
    int r = 0;
    int grid = 201;
    std::string out;
};

struct ConstantsOptions {
    std::string out;
};

int run_bound(const BoundOptions& opt);
int run_table1(const TableOptions& opt);
int run_table2(const TableOptions& opt);
int run_density(const DensityOptions& opt);
int run_overlay(const OverlayOptions& opt);
int run_constants(const ConstantsOptions& opt);

/// Full argv entry point (argument parsing + dispatch).
int run(int argc, const char* const* argv);

/// Companion path for the 4-decimal variant of a raw table: inserts
/// ".pretty" before the extension ("t.csv" -> "t.pretty.csv").
std::string pretty_path(const std::string& raw_path);

}  // namespace boxbound::cli
