#include "dta/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace dta {

std::string LevelNames::factor(std::size_t col) const {
  auto it = factors.find(col);
  return it != factors.end() ? it->second : "c" + std::to_string(col + 1);
}

std::optional<std::string> LevelNames::level(std::size_t col, Level x) const {
  auto it = levels.find({col, x});
  if (it == levels.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    auto j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t to_int(std::string_view s, std::size_t line,
                    const std::string& what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError(line, "expected integer for " + what + ", got '" +
                               std::string(s) + "'");
  return v;
}

std::int64_t keyed(std::string_view tok, std::string_view key,
                   std::size_t line) {
  if (tok.size() <= key.size() + 1 || tok.substr(0, key.size()) != key ||
      tok[key.size()] != '=')
    throw ParseError(line, "expected '" + std::string(key) + "=<int>', got '" +
                               std::string(tok) + "'");
  return to_int(tok.substr(key.size() + 1), line, std::string(key));
}

// "col=<j>" prefix of a comment payload; returns the 0-based column and the
// remainder after one space.
std::pair<std::size_t, std::string_view> comment_column(std::string_view rest,
                                                        std::size_t k,
                                                        std::size_t line) {
  auto sp = rest.find(' ');
  if (sp == std::string_view::npos)
    throw ParseError(line, "expected 'col=<j> ...'");
  auto col = keyed(rest.substr(0, sp), "col", line);
  if (col < 1 || static_cast<std::size_t>(col) > k)
    throw ParseError(line, "column " + std::to_string(col) + " outside 1.." +
                               std::to_string(k));
  return {static_cast<std::size_t>(col - 1), rest.substr(sp + 1)};
}

}  // namespace

ArrayDocument parse_document(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "DTA 1")
    throw ParseError(1, "expected header 'DTA 1'");
  if (lines.size() < 3) throw ParseError(lines.size() + 1, "truncated header");

  ArrayDocument doc;
  auto meta = split_ws(lines[1]);
  if (meta.size() != 4 && meta.size() != 5)
    throw ParseError(2, "expected 'N=<int> k=<int> t=<int> d=<int>'");
  auto n = keyed(meta[0], "N", 2);
  auto k = keyed(meta[1], "k", 2);
  auto t = keyed(meta[2], "t", 2);
  auto d = keyed(meta[3], "d", 2);
  if (meta.size() == 5) {
    auto lam = keyed(meta[4], "lambda", 2);
    if (lam < 0) throw ParseError(2, "lambda must be >= 0");
    doc.lambda = static_cast<std::uint64_t>(lam);
  }
  if (n < 1) throw ParseError(2, "N must be >= 1");
  if (k < 1) throw ParseError(2, "k must be >= 1");
  if (t < 0 || d < 0) throw ParseError(2, "t and d must be >= 0");
  doc.t = static_cast<std::size_t>(t);
  doc.d = static_cast<std::size_t>(d);

  if (lines[2].substr(0, 6) != "types=")
    throw ParseError(3, "expected 'types=<v1> ... <vk>'");
  std::vector<int> sizes;
  for (auto tok : split_ws(lines[2].substr(6))) {
    auto v = to_int(tok, 3, "alphabet size");
    if (v < 1) throw ParseError(3, "alphabet sizes must be >= 1");
    sizes.push_back(static_cast<int>(v));
  }
  if (sizes.size() != static_cast<std::size_t>(k))
    throw ParseError(3, "types lists " + std::to_string(sizes.size()) +
                            " sizes but k = " + std::to_string(k));
  TypeVector types(sizes);

  const auto rows = static_cast<std::size_t>(n);
  if (lines.size() < 3 + rows)
    throw ParseError(lines.size() + 1, "expected " + std::to_string(rows) +
                                           " rows, found " +
                                           std::to_string(lines.size() - 3));
  MixedArray array(types, rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t ln = 4 + r;
    auto toks = split_ws(lines[3 + r]);
    if (toks.size() != types.k())
      throw ParseError(ln, "row has " + std::to_string(toks.size()) +
                               " entries, expected " +
                               std::to_string(types.k()));
    for (std::size_t j = 0; j < types.k(); ++j) {
      auto v = to_int(toks[j], ln, "level");
      if (v < 0 || v >= types[j])
        throw ParseError(ln, "entry " + std::to_string(v) + " in column " +
                                 std::to_string(j + 1) +
                                 " outside alphabet 0.." +
                                 std::to_string(types[j] - 1));
      array.set(r, j, static_cast<Level>(v));
    }
  }
  doc.array = std::move(array);

  for (std::size_t i = 3 + rows; i < lines.size(); ++i) {
    const std::size_t ln = i + 1;
    auto line = lines[i];
    if (line.empty()) continue;
    if (line[0] != '#')
      throw ParseError(ln, "unexpected content after " + std::to_string(rows) +
                               " rows");
    if (line.substr(0, 7) == "# name ") {
      auto [col, rest] = comment_column(line.substr(7), types.k(), ln);
      auto eq = rest.find('=');
      if (eq == std::string_view::npos || eq + 1 >= rest.size())
        throw ParseError(ln, "expected '<level>=<name>'");
      auto level = to_int(rest.substr(0, eq), ln, "level");
      if (level < 0 || level >= types[col])
        throw ParseError(ln, "named level " + std::to_string(level) +
                                 " outside alphabet of column " +
                                 std::to_string(col + 1));
      doc.names.levels[{col, static_cast<Level>(level)}] =
          std::string(rest.substr(eq + 1));
    } else if (line.substr(0, 9) == "# factor ") {
      auto [col, rest] = comment_column(line.substr(9), types.k(), ln);
      if (rest.empty()) throw ParseError(ln, "empty factor name");
      doc.names.factors[col] = std::string(rest);
    }
  }
  return doc;
}

std::string serialize(const ArrayDocument& doc) {
  const auto& a = doc.array;
  std::ostringstream out;
  out << "DTA " << doc.version << '\n';
  out << "N=" << a.rows() << " k=" << a.cols() << " t=" << doc.t
      << " d=" << doc.d;
  if (doc.lambda) out << " lambda=" << *doc.lambda;
  out << "\ntypes=";
  for (std::size_t j = 0; j < a.cols(); ++j)
    out << (j ? " " : "") << a.types()[j];
  out << '\n';
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      out << (j ? " " : "") << a.at(r, j);
    out << '\n';
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (auto it = doc.names.factors.find(j); it != doc.names.factors.end())
      out << "# factor col=" << j + 1 << ' ' << it->second << '\n';
    for (Level x = 0; x < a.types()[j]; ++x)
      if (auto name = doc.names.level(j, x))
        out << "# name col=" << j + 1 << ' ' << x << '=' << *name << '\n';
  }
  return out.str();
}

ArrayDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_document(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path.string() + ": " +
                                   std::string(e.what()).substr(
                                       std::string(e.what()).find(": ") + 2));
  }
}

void write_document(const std::filesystem::path& path,
                    const ArrayDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize(doc);
}

std::string name_interaction(const LevelNames& names, const Interaction& t) {
  std::string out;
  for (const auto& p : t.pins()) {
    if (!out.empty()) out += ", ";
    auto level = names.level(p.column, p.level);
    out += names.factor(p.column) + "=" +
           (level ? *level : std::to_string(p.level));
  }
  return out;
}

}  // namespace dta
