#include "specbound/cli/record.hpp"

#include <fmt/format.h>

namespace specbound::cli {

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

void RunRecord::input(const std::string& key, const std::string& value) {
  inputs_.emplace_back(key, value);
}
void RunRecord::input(const std::string& key, double value) { input(key, format_number(value)); }
void RunRecord::output(const std::string& key, const std::string& value) {
  outputs_.emplace_back(key, value);
}
void RunRecord::output(const std::string& key, double value) { output(key, format_number(value)); }
void RunRecord::convergence(const std::string& key, const std::string& value) {
  convergence_.emplace_back(key, value);
}
void RunRecord::convergence(const std::string& key, double value) {
  convergence(key, format_number(value));
}

void RunRecord::table_header(std::vector<std::string> columns) { header_ = std::move(columns); }
void RunRecord::table_row(const std::vector<double>& row) { rows_.push_back(row); }

std::string RunRecord::to_text() const {
  std::string s = "command=" + command_ + "\n";
  for (const auto& [k, v] : inputs_)
    s += "input." + k + "=" + v + "\n";
  for (const auto& [k, v] : outputs_)
    s += "output." + k + "=" + v + "\n";
  for (const auto& [k, v] : convergence_)
    s += "convergence." + k + "=" + v + "\n";
  s += std::string("convention.sigma=") + kSigmaConvention + "\n";
  s += std::string("convention.fiber=") + kFiberConvention + "\n";
  if (!header_.empty()) {
    s += "table=";
    for (std::size_t i = 0; i < header_.size(); ++i)
      s += (i ? "," : "") + header_[i];
    s += "\n";
    for (const auto& row : rows_) {
      for (std::size_t i = 0; i < row.size(); ++i)
        s += (i ? "," : "") + format_number(row[i]);
      s += "\n";
    }
  }
  return s;
}

} // namespace specbound::cli
