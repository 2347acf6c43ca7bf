#include "doctest.h"

#include <cstring>
#include <filesystem>
#include <limits>
#include <random>

#include "hpineq/error.hpp"
#include "hpineq/linalg/matrix_io.hpp"
#include "oracles.hpp"

using namespace hpineq;

namespace {
bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) return false;
  return std::memcmp(a.entries().data(), b.entries().data(), a.entries().size_bytes()) == 0;
}
}  // namespace

TEST_CASE("matrix documents round-trip bit-exactly") {
  std::mt19937_64 rng(31);
  for (std::size_t m = 1; m <= 6; ++m) {
    const auto x = oracle::random_complex(m, rng, 1e3);
    CHECK(bit_equal(parse_matrix(format_matrix(x)), x));
  }
  const double tiny = std::numeric_limits<double>::denorm_min();
  const double big = std::numeric_limits<double>::max();
  const auto edge = ComplexMatrix(2, {cplx(tiny, -big), cplx(-0.0, 0.1), cplx(1.0 / 3, 1e-300), cplx(0, 0)});
  CHECK(bit_equal(parse_matrix(format_matrix(edge)), edge));
}

TEST_CASE("matrix documents: format") {
  const auto x = ComplexMatrix::from_rows({{cplx(1, 0), cplx(0.1, -2)}, {3, 4}});
  const std::string text = format_matrix(x);
  CHECK(text.find("\"dim\": 2") != std::string::npos);
  CHECK(text.find("0.10000000000000001") != std::string::npos);
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("matrix documents: malformed input") {
  CHECK_THROWS_AS(parse_matrix("not json"), InputError);
  CHECK_THROWS_AS(parse_matrix(R"({"entries": [[1, 0]]})"), InputError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 2, "entries": [[1, 0]]})"), InputError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 1, "entries": [[1]]})"), InputError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": 1, "entries": [["a", 0]]})"), InputError);
  CHECK_THROWS_AS(parse_matrix(R"({"dim": -1, "entries": []})"), InputError);
  CHECK(parse_matrix(R"({"dim": 1, "entries": [[2.5, -1]]})")(0, 0) == cplx(2.5, -1));
}

TEST_CASE("matrix files") {
  const auto path = std::filesystem::temp_directory_path() / "hpineq_io_test.json";
  std::mt19937_64 rng(32);
  const auto x = oracle::random_complex(3, rng);
  save_matrix(path, x);
  CHECK(bit_equal(load_matrix(path), x));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_matrix(path), InputError);
}
