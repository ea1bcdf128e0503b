#pragma once

//
// ... Standard header files
//
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

//
// ... eigb header files
//
#include <eigb/error.hpp>
#include <eigb/matrix.hpp>

namespace eigb::io {

  inline constexpr std::string_view format_version = "EIGB1";

  namespace detail {

    struct Token {
      std::string_view text;
      std::size_t line;
      std::size_t column;
    };

    // Splits on whitespace; a line whose first character is '#' is skipped.
    inline std::vector<Token>
    tokenize(std::string_view text) {
      std::vector<Token> tokens;
      std::size_t line = 1;
      std::size_t pos = 0;
      while (pos < text.size()) {
        const std::size_t eol = std::min(text.find('\n', pos), text.size());
        const std::string_view row = text.substr(pos, eol - pos);
        if (row.empty() || row.front() != '#') {
          std::size_t c = 0;
          while (c < row.size()) {
            while (c < row.size() && std::isspace(static_cast<unsigned char>(row[c]))) {
              ++c;
            }
            const std::size_t start = c;
            while (c < row.size() && !std::isspace(static_cast<unsigned char>(row[c]))) {
              ++c;
            }
            if (c > start) {
              tokens.push_back({row.substr(start, c - start), line, start + 1});
            }
          }
        }
        pos = eol + 1;
        ++line;
      }
      return tokens;
    }

    inline bool
    parse_real(std::string_view s, double& out) {
      if (s.empty()) {
        return false;
      }
      // from_chars rejects a leading '+'; accept it like strtod would.
      if (s.front() == '+') {
        s.remove_prefix(1);
        if (s.empty() || s.front() == '-' || s.front() == '+') {
          return false;
        }
      }
      const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
    }

    inline complex_type
    parse_entry(const Token& tok) {
      const std::string_view s = tok.text;
      double re = 0.0;
      double im = 0.0;
      if (s.front() == '(') {
        const std::size_t comma = s.find(',');
        if (s.back() != ')' || comma == std::string_view::npos) {
          throw ParseError(tok.line, tok.column, "malformed complex literal '" + std::string(s) + "'");
        }
        if (!parse_real(s.substr(1, comma - 1), re) ||
            !parse_real(s.substr(comma + 1, s.size() - comma - 2), im)) {
          throw ParseError(tok.line, tok.column, "malformed complex literal '" + std::string(s) + "'");
        }
        return {re, im};
      }
      if (!parse_real(s, re)) {
        throw ParseError(tok.line, tok.column, "malformed real literal '" + std::string(s) + "'");
      }
      return {re, 0.0};
    }

  } // end of namespace detail

  /**
   * @brief Parses the text matrix format.
   *
   * Grammar: '#' comment lines, then a positive integer n, then exactly n²
   * whitespace-separated entries in row-major order. An entry is a real
   * literal or `(re,im)` without interior whitespace.
   */
  inline ComplexMatrix
  parse_matrix(std::string_view text) {
    const auto tokens = detail::tokenize(text);
    if (tokens.empty()) {
      throw ParseError(1, 1, "missing dimension");
    }
    const auto& head = tokens.front();
    std::size_t n = 0;
    const auto [ptr, ec] =
      std::from_chars(head.text.data(), head.text.data() + head.text.size(), n);
    if (ec != std::errc{} || ptr != head.text.data() + head.text.size() || n == 0) {
      throw ParseError(head.line, head.column, "dimension must be a positive integer");
    }
    // Malformed entries are reported by position before the count is checked.
    std::vector<complex_type> entries;
    entries.reserve(tokens.size() - 1);
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      entries.push_back(detail::parse_entry(tokens[i]));
    }
    if (n > 65536 || entries.size() != n * n) {
      throw Error(
        Errc::wrong_entry_count,
        "expected " + std::to_string(n) + "x" + std::to_string(n) + " entries, found " +
          std::to_string(entries.size()));
    }
    return ComplexMatrix(n, std::move(entries));
  }

  /// Writes with 17 significant digits so parsing recovers every entry exactly.
  inline std::string
  write_matrix(const ComplexMatrix& m) {
    std::string out = "# ";
    out += format_version;
    out += '\n';
    out += std::to_string(m.dim());
    out += '\n';
    char buf[64];
    for (std::size_t i = 0; i < m.dim(); ++i) {
      for (std::size_t j = 0; j < m.dim(); ++j) {
        const complex_type z = m(i, j);
        if (z.imag() == 0.0) {
          std::snprintf(buf, sizeof buf, "%.17g", z.real());
        } else {
          std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", z.real(), z.imag());
        }
        if (j > 0) {
          out += ' ';
        }
        out += buf;
      }
      out += '\n';
    }
    return out;
  }

  inline ComplexMatrix
  read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error(Errc::parse_error, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_matrix(ss.str());
  }

} // end of namespace eigb::io
