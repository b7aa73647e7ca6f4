#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "haken/complex.hpp"
#include "haken/pattern.hpp"
#include "haken/surgery.hpp"

// Text formats. All are line based; blank lines and lines starting with '#'
// are skipped on input and never written.
//
// complex:  one maximal simplex per line, increasing labels separated by a
//           single space, lines in lexicographic order. The complex {∅} is
//           the single line "empty"; the void complex is the empty file.
// pattern:  "[carrier]" followed by a complex, then "[facet <name>]" blocks
//           in name order.
// ledger:   "[step <k>]" for k = 1, 2, ..., each followed by "[cut]" or
//           "[cut <name>]" and the cut subcomplex.

namespace haken::io {

/// Throws FormatError with the line number on malformed input. Lines that
/// are faces of other lines are dropped with a warning.
Complex parse_complex(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_complex(const Complex& k);

PatternedComplex parse_pattern(std::string_view text, std::vector<std::string>* warnings = nullptr,
                               PatternOptions options = {});
std::string write_pattern(const PatternedComplex& p);

std::vector<LedgerStep> parse_ledger(std::string_view text, std::vector<std::string>* warnings = nullptr);
std::string write_ledger(const std::vector<LedgerStep>& steps);

/// Throws InvalidArgument when the file cannot be read or written.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace haken::io
