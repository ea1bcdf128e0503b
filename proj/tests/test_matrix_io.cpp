//
// ... Test header files
//
#include <catch2/catch_amalgamated.hpp>

//
// ... Standard header files
//
#include <random>
#include <string>

//
// ... eigb header files
//
#include <eigb/matrix_io.hpp>

#include "support.hpp"

namespace eigb::testing {

  using namespace eigb::io;

  TEST_CASE("parse_matrix - example matrix A", "[io]") {
    const auto m = parse_matrix("3\n1 2 0\n2 1 0\n0 0 -4");
    CHECK(m == example_a());
  }

  TEST_CASE("parse_matrix - complex and assorted literals", "[io]") {
    const auto i = parse_matrix("1\n(0,1)");
    CHECK(i(0, 0) == complex_type(0, 1));

    const auto m = parse_matrix("# header\n# more\n2\n-4.0 1e-3\n+2 (1.5,-2e1)\n");
    CHECK(m(0, 0) == complex_type(-4.0, 0));
    CHECK(m(0, 1) == complex_type(1e-3, 0));
    CHECK(m(1, 0) == complex_type(2, 0));
    CHECK(m(1, 1) == complex_type(1.5, -20));

    // Entries need not follow row boundaries.
    CHECK(parse_matrix("2 1 2 3 4") == ComplexMatrix::from_rows({{1, 2}, {3, 4}}));
  }

  TEST_CASE("parse_matrix - entry count errors", "[io]") {
    try {
      parse_matrix("2\n1 2 3");
      FAIL("no error");
    } catch (const ParseError&) {
      FAIL("count errors are not positional");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::wrong_entry_count);
    }
    try {
      parse_matrix("1\n1 2");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::wrong_entry_count);
    }
  }

  TEST_CASE("parse_matrix - positional errors", "[io]") {
    auto where = [](const std::string& text) {
      try {
        parse_matrix(text);
      } catch (const ParseError& e) {
        CHECK(e.code() == Errc::parse_error);
        return std::pair{e.line(), e.column()};
      }
      FAIL("expected ParseError on: " << text);
      return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(where("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("# only a comment\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("0\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(where("-2\n1 2 3 4").first == 1);
    CHECK(where("2.5\n1").first == 1);
    CHECK(where("2\n1 2\n3 x") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(where("1\n(1, 2)").first == 2);
    CHECK(where("1\n(1,2").first == 2);
    CHECK(where("1\n(1;2)").first == 2);
    CHECK(where("1\nnan").first == 2);
    CHECK(where("1\ninf").first == 2);
    CHECK(where("1\n1e999").first == 2);
    CHECK(where("1\n+-1").first == 2);
    CHECK(where("# c\n1\n  abc") == std::pair<std::size_t, std::size_t>{3, 3});
  }

  TEST_CASE("write_matrix - round trip is exact", "[io][property]") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> g(0.0, 1e3);
    for (std::size_t n = 1; n <= 7; ++n) {
      ComplexMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          m(i, j) = (i + j) % 3 == 0 ? complex_type(g(rng), 0.0) : complex_type(g(rng), g(rng) * 1e-7);
        }
      }
      const std::string text = write_matrix(m);
      CHECK(text.rfind("# EIGB1\n", 0) == 0);
      const auto back = parse_matrix(text);
      CHECK(back == m);
      CHECK(write_matrix(back) == text);
    }
    const auto tiny = ComplexMatrix::from_rows({{5e-324, -0.1}, {1.7976931348623157e308, 3}});
    CHECK(parse_matrix(write_matrix(tiny)) == tiny);
  }

  TEST_CASE("read_matrix_file - missing file", "[io]") {
    try {
      read_matrix_file("/nonexistent/eigb/matrix.txt");
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
    }
  }

} // end of namespace eigb::testing
