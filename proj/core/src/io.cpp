#include "haken/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "haken/error.hpp"

namespace haken::io {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    start = end + 1;
  }
  return out;
}

Simplex parse_simplex(const Line& line) {
  Simplex::Storage labels;
  std::string_view rest = line.text;
  while (!rest.empty()) {
    auto sp = rest.find_first_of(" \t");
    auto token = rest.substr(0, sp);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0 ||
        value > std::numeric_limits<Vertex>::max())
      throw FormatError("invalid vertex label '" + std::string(token) + "'", line.number);
    if (!labels.empty() && value <= labels.back())
      throw FormatError(value == labels.back() ? "repeated vertex label" : "vertex labels are not increasing",
                        line.number);
    labels.push_back(static_cast<Vertex>(value));
    rest = sp == std::string_view::npos ? std::string_view{} : trim(rest.substr(sp));
  }
  return Simplex::from_sorted(std::move(labels));
}

Complex complex_from_lines(const std::vector<Line>& lines, std::vector<std::string>* warnings) {
  if (lines.size() == 1 && lines.front().text == "empty") return Complex::empty_sphere();
  std::vector<Simplex> simplices;
  std::set<Simplex> seen;
  for (const auto& line : lines) {
    if (line.text == "empty") throw FormatError("'empty' must be the only line of a complex", line.number);
    auto s = parse_simplex(line);
    if (!seen.insert(s).second && warnings)
      warnings->push_back("line " + std::to_string(line.number) + ": repeated simplex dropped");
    simplices.push_back(std::move(s));
  }
  Complex k(simplices);
  if (warnings && k.maximal_simplices().size() < seen.size())
    warnings->push_back(std::to_string(seen.size() - k.maximal_simplices().size()) +
                        " non-maximal simplices dropped");
  return k;
}

// Splits "[word rest]" into word and rest; returns false for other lines.
bool parse_header(std::string_view text, std::string_view& word, std::string_view& rest) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') return false;
  auto inner = trim(text.substr(1, text.size() - 2));
  auto sp = inner.find_first_of(" \t");
  word = inner.substr(0, sp);
  rest = sp == std::string_view::npos ? std::string_view{} : trim(inner.substr(sp));
  return true;
}

}  // namespace

Complex parse_complex(std::string_view text, std::vector<std::string>* warnings) {
  auto lines = content_lines(text);
  for (const auto& line : lines)
    if (line.text.front() == '[') throw FormatError("unexpected section header in a complex file", line.number);
  return complex_from_lines(lines, warnings);
}

std::string write_complex(const Complex& k) {
  if (k.is_void()) return {};
  if (k.vertices().empty()) return "empty\n";
  std::string out;
  for (const auto& s : k.maximal_simplices()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(s[i]);
    }
    out += '\n';
  }
  return out;
}

PatternedComplex parse_pattern(std::string_view text, std::vector<std::string>* warnings, PatternOptions options) {
  auto lines = content_lines(text);
  if (lines.empty()) throw FormatError("empty pattern file");
  std::optional<Complex> carrier;
  std::map<std::string, Complex> facets;
  std::size_t i = 0;
  while (i < lines.size()) {
    std::string_view word, rest;
    if (!parse_header(lines[i].text, word, rest))
      throw FormatError("expected a [carrier] or [facet <name>] header", lines[i].number);
    const int header_line = lines[i].number;
    std::vector<Line> body;
    for (++i; i < lines.size() && lines[i].text.front() != '['; ++i) body.push_back(lines[i]);
    if (word == "carrier") {
      if (!rest.empty()) throw FormatError("[carrier] takes no name", header_line);
      if (carrier) throw FormatError("second [carrier] section", header_line);
      carrier = complex_from_lines(body, warnings);
    } else if (word == "facet") {
      if (rest.empty()) throw FormatError("facet without a name", header_line);
      if (!carrier) throw FormatError("[facet] before [carrier]", header_line);
      if (facets.count(std::string(rest))) throw FormatError("facet " + std::string(rest) + " defined twice", header_line);
      facets.emplace(std::string(rest), complex_from_lines(body, warnings));
    } else {
      throw FormatError("unknown section [" + std::string(word) + "]", header_line);
    }
  }
  if (!carrier) throw FormatError("missing [carrier] section");
  try {
    PatternedComplex p(std::move(*carrier), std::move(facets), options);
    if (warnings) warnings->insert(warnings->end(), p.warnings().begin(), p.warnings().end());
    return p;
  } catch (const PatternError& e) {
    throw FormatError(e.what());
  }
}

std::string write_pattern(const PatternedComplex& p) {
  std::string out = "[carrier]\n" + write_complex(p.carrier());
  for (const auto& [name, f] : p.facets()) out += "[facet " + name + "]\n" + write_complex(f);
  return out;
}

std::vector<LedgerStep> parse_ledger(std::string_view text, std::vector<std::string>* warnings) {
  auto lines = content_lines(text);
  std::vector<LedgerStep> steps;
  std::size_t i = 0;
  while (i < lines.size()) {
    std::string_view word, rest;
    if (!parse_header(lines[i].text, word, rest) || word != "step")
      throw FormatError("expected [step " + std::to_string(steps.size() + 1) + "]", lines[i].number);
    if (rest != std::to_string(steps.size() + 1))
      throw FormatError("steps must be numbered 1, 2, ... in order", lines[i].number);
    ++i;
    if (i >= lines.size() || !parse_header(lines[i].text, word, rest) || word != "cut")
      throw FormatError("expected [cut] after [step]", i < lines.size() ? lines[i].number : lines.back().number);
    LedgerStep step;
    step.name = std::string(rest);
    std::vector<Line> body;
    for (++i; i < lines.size() && lines[i].text.front() != '['; ++i) body.push_back(lines[i]);
    step.cut = complex_from_lines(body, warnings);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::string write_ledger(const std::vector<LedgerStep>& steps) {
  std::string out;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    out += "[step " + std::to_string(k + 1) + "]\n";
    out += steps[k].name.empty() ? std::string("[cut]\n") : "[cut " + steps[k].name + "]\n";
    out += write_complex(steps[k].cut);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << contents;
  if (!out) throw InvalidArgument("cannot write " + path);
}

}  // namespace haken::io
