#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rendezvous::cli {

/// Invalid flag combination; maps to exit code 2.
class UsageError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

using Cell = std::variant<double, long long, std::string>;

/// 12 significant digits, the fixed numeric format of every table.
std::string format_number(double value);

struct Table
{
    std::string comment;  ///< config echo, written after '#'
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

void write_csv(std::ostream& out, const Table& table);
void write_pretty(std::ostream& out, const Table& table);

/// Parses and runs one command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rendezvous::cli
