#include "dirset/report.h"

#include <array>
#include <charconv>

namespace dirset {

std::string FormatDouble(double value) {
  if (value == 0.0) return "0";
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;
  return std::string(buf.data(), ptr);
}

void StructuredWriter::Indent() {
  for (int i = 0; i < depth_; ++i) out_ << "  ";
}

void StructuredWriter::Section(std::string_view name) {
  Indent();
  out_ << name << ":\n";
  ++depth_;
}

void StructuredWriter::End() {
  if (depth_ > 0) --depth_;
}

void StructuredWriter::Field(std::string_view key, std::string_view value) {
  Indent();
  out_ << key << ": " << value << '\n';
}

void StructuredWriter::Field(std::string_view key, double value) { Field(key, FormatDouble(value)); }
void StructuredWriter::Field(std::string_view key, std::int64_t value) { Field(key, std::to_string(value)); }
void StructuredWriter::Field(std::string_view key, std::uint64_t value) { Field(key, std::to_string(value)); }
void StructuredWriter::Field(std::string_view key, bool value) { Field(key, value ? "true" : "false"); }

void StructuredWriter::List(std::string_view key) { Section(key); }

void StructuredWriter::Item(std::string_view value) {
  Indent();
  out_ << "- " << value << '\n';
}

CsvWriter::CsvWriter(std::ostream& out, std::vector<std::string> columns)
    : out_(out), width_(columns.size()) {
  Row(columns);
}

void CsvWriter::Row(std::span<const std::string> cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  for (std::size_t i = cells.size(); i < width_; ++i) out_ << ',';
  out_ << '\n';
}

std::string JoinSpace(std::span<const std::uint64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string JoinSpace(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += FormatDouble(values[i]);
  }
  return out;
}

}  // namespace dirset
