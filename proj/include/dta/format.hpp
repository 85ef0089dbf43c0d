#pragma once

// Line-oriented text format for arrays:
//
//   DTA 1
//   N=<int> k=<int> t=<int> d=<int> [lambda=<int>]
//   types=<v1> <v2> ... <vk>
//   <N lines of k space-separated levels>
//   # factor col=<j> <name>          (optional, any number)
//   # name col=<j> <level>=<name>    (optional, any number)
//
// Columns in comment lines are 1-based. Other lines starting with '#' after
// the rows are ignored. serialize() writes the canonical form: factor and
// level names ordered by column then level.

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dta/core.hpp"

namespace dta {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LevelNames {
  std::map<std::size_t, std::string> factors;
  std::map<std::pair<std::size_t, Level>, std::string> levels;

  bool empty() const { return factors.empty() && levels.empty(); }
  std::string factor(std::size_t col) const;
  std::optional<std::string> level(std::size_t col, Level x) const;
  bool operator==(const LevelNames&) const = default;
};

struct ArrayDocument {
  int version = 1;
  MixedArray array;
  std::size_t t = 2;
  std::size_t d = 1;
  /// Declared coverage index; advisory, never trusted without re-checking.
  std::optional<std::uint64_t> lambda;
  LevelNames names;

  bool operator==(const ArrayDocument&) const = default;
};

ArrayDocument parse_document(std::string_view text);
std::string serialize(const ArrayDocument& doc);

ArrayDocument read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path,
                    const ArrayDocument& doc);

/// "Function scope=Current, Client type=MSNET", falling back to the numeric
/// "c1=0" form where no name is known.
std::string name_interaction(const LevelNames& names, const Interaction& t);

}  // namespace dta
