#ifndef DIRSET_REPORT_H_
#define DIRSET_REPORT_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dirset {

// Shortest round-trip decimal form of a double. Identical input always
// yields identical text, which keeps reports byte-stable.
std::string FormatDouble(double value);

// Writes the indented key-value format used for all reports:
//
//   coverage:
//     epsilon: 0.02
//     uncovered:
//       - 0.6 0.8
class StructuredWriter {
 public:
  explicit StructuredWriter(std::ostream& out) : out_(out) {}

  void Section(std::string_view name);
  void End();

  void Field(std::string_view key, std::string_view value);
  void Field(std::string_view key, const char* value) { Field(key, std::string_view(value)); }
  void Field(std::string_view key, const std::string& value) { Field(key, std::string_view(value)); }
  void Field(std::string_view key, double value);
  void Field(std::string_view key, std::int64_t value);
  void Field(std::string_view key, std::uint64_t value);
  void Field(std::string_view key, int value) { Field(key, static_cast<std::int64_t>(value)); }
  void Field(std::string_view key, unsigned value) { Field(key, static_cast<std::uint64_t>(value)); }
  void Field(std::string_view key, bool value);

  // Starts a list under `key`; subsequent Item() calls append to it until End().
  void List(std::string_view key);
  void Item(std::string_view value);

 private:
  void Indent();

  std::ostream& out_;
  int depth_ = 0;
};

// Minimal CSV emitter. Cells are written verbatim; callers only pass
// numbers and identifiers, none of which need quoting.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> columns);

  void Row(std::span<const std::string> cells);
  void Row(std::initializer_list<std::string> cells) {
    Row(std::span<const std::string>(cells.begin(), cells.size()));
  }

 private:
  std::ostream& out_;
  std::size_t width_;
};

// Joins integers with single spaces: {3, 4} -> "3 4".
std::string JoinSpace(std::span<const std::uint64_t> values);
std::string JoinSpace(std::span<const double> values);

}  // namespace dirset

#endif  // DIRSET_REPORT_H_
