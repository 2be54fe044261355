#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hardy::cli {

using Cell = std::variant<double, std::int64_t, bool, std::string>;

// One report: a header, rows of cells, and metadata that only the JSON form carries.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;

  void add_row(std::vector<Cell> row);
};

// Header line then one line per row, "\n" endings, doubles with 17 significant digits.
void write_csv(std::ostream& out, const Table& t);
// {"meta": {...}, "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, const Table& t);

enum class Command {
  ValidateWeight,
  EtaTable,
  FindT,
  Quotient,
  Sharpness1d,
  SphereVerify,
  HalfspaceVerify,
  RearrangeDemo,
  Integrability,
};

enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::FindT;
  std::string weight = "sine";
  int n = 3;
  double p = 2.0;
  std::optional<double> a;  // defaults: 1 for power weights, pi/2 otherwise
  double delta = 1.0;
  std::vector<std::int64_t> ks = {16, 64, 256, 1024};
  std::int64_t k = 1024;
  double eps = 1e-3;
  std::uint64_t seed = 0;
  bool truncated = false;
  double radius = 1.0;
  std::vector<double> nodes;
  std::vector<double> values;
  Format format = Format::Csv;
  std::string output_path;  // empty: standard output
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitAssertion = 4;

const char* command_name(Command c);
std::optional<Command> parse_command(const std::string& name);

// Builds the table for the configured command. Library exceptions propagate.
Table build_table(const RunConfig& config);

// Writes exactly one table and returns the exit code; failures are reported as a
// single line on err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line front end.
int main(int argc, char** argv);

}  // namespace hardy::cli
