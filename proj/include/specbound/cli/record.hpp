#ifndef SPECBOUND_CLI_RECORD_HPP
#define SPECBOUND_CLI_RECORD_HPP

#include <string>
#include <utility>
#include <vector>

namespace specbound::cli {

inline constexpr const char* kSigmaConvention = "facet-measure-over-primitive-normal-length";
inline constexpr const char* kFiberConvention = "unit-radius-fiber-volume-coordinate-s-in-0-1";

/// Machine-readable result of one CLI invocation, serialised as `key=value`
/// lines in insertion order. Numbers are formatted with %.17g so identical
/// inputs give byte-identical records.
class RunRecord {
public:
  explicit RunRecord(std::string command) : command_(std::move(command)) {}

  void input(const std::string& key, const std::string& value);
  void input(const std::string& key, double value);
  void output(const std::string& key, const std::string& value);
  void output(const std::string& key, double value);
  void convergence(const std::string& key, const std::string& value);
  void convergence(const std::string& key, double value);

  /// Optional comma-separated table appended after the key=value block.
  void table_header(std::vector<std::string> columns);
  void table_row(const std::vector<double>& row);

  std::string to_text() const;

private:
  using Entries = std::vector<std::pair<std::string, std::string>>;
  std::string command_;
  Entries inputs_;
  Entries outputs_;
  Entries convergence_;
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
};

std::string format_number(double v);

} // namespace specbound::cli

#endif // SPECBOUND_CLI_RECORD_HPP
