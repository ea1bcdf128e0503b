#pragma once

//
// ... Standard header files
//
#include <stdexcept>
#include <string>
#include <string_view>

namespace eigb {

  enum class Errc {
    not_square,
    non_finite,
    not_hermitian,
    not_psd,
    not_sorted,
    no_convergence,
    dimension_mismatch,
    index_out_of_range,
    invalid_index_sequence,
    not_nonnegative,
    not_stable,
    not_positive_definite,
    sign_condition_violated,
    no_sign_change,
    internal_consistency,
    invalid_spec,
    invalid_range,
    invalid_count,
    parse_error,
    wrong_entry_count
  };

  constexpr std::string_view
  to_string(Errc code) noexcept {
    switch (code) {
    case Errc::not_square: return "NotSquare";
    case Errc::non_finite: return "NonFinite";
    case Errc::not_hermitian: return "NotHermitian";
    case Errc::not_psd: return "NotPSD";
    case Errc::not_sorted: return "NotSorted";
    case Errc::no_convergence: return "NoConvergence";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_index_sequence: return "InvalidIndexSequence";
    case Errc::not_nonnegative: return "NotNonnegative";
    case Errc::not_stable: return "NotStable";
    case Errc::not_positive_definite: return "NotPositiveDefinite";
    case Errc::sign_condition_violated: return "SignConditionViolated";
    case Errc::no_sign_change: return "NoSignChange";
    case Errc::internal_consistency: return "InternalConsistency";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::invalid_range: return "InvalidRange";
    case Errc::invalid_count: return "InvalidCount";
    case Errc::parse_error: return "ParseError";
    case Errc::wrong_entry_count: return "WrongEntryCount";
    }
    return "Unknown";
  }

  /// Every failure raised by the library carries one of the codes above.
  class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

    [[nodiscard]] Errc
    code() const noexcept {
      return code_;
    }

  private:
    Errc code_;
  };

  /// Parse failures additionally record where in the input they occurred.
  class ParseError : public Error {
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& reason)
      : Error(
          Errc::parse_error,
          "line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + reason),
        line_(line), column_(column), reason_(reason) {}

    [[nodiscard]] std::size_t
    line() const noexcept {
      return line_;
    }
    [[nodiscard]] std::size_t
    column() const noexcept {
      return column_;
    }
    [[nodiscard]] const std::string&
    reason() const noexcept {
      return reason_;
    }

  private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
  };

} // end of namespace eigb
