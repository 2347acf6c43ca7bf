#include "hpineq/linalg/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "hpineq/error.hpp"
#include "json.hpp"

namespace hpineq {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  // JSON readers take "-0" as the integer 0
  if (x == 0.0 && std::signbit(x)) return "-0.0";
  return buf;
}

std::string format_matrix(const ComplexMatrix& m) {
  std::string out = "{\"dim\": " + std::to_string(m.dim()) + ", \"entries\": [";
  const auto e = m.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += (i % m.dim() == 0) ? ",\n  " : ", ";
    else out += "\n  ";
    out += "[" + format_double(e[i].real()) + ", " + format_double(e[i].imag()) + "]";
  }
  out += "\n]}\n";
  return out;
}

ComplexMatrix parse_matrix(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("matrix file: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw InputError("matrix file: expected an object with fields dim and entries");
  }
  if (!doc["dim"].is_number_unsigned()) throw InputError("matrix file: dim must be a positive integer");
  const auto dim = doc["dim"].get<std::size_t>();
  const auto& entries = doc["entries"];
  if (!entries.is_array()) throw InputError("matrix file: entries must be an array");
  std::vector<cplx> e;
  e.reserve(entries.size());
  for (const auto& pair : entries) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw InputError("matrix file: every entry must be a [re, im] pair of numbers");
    }
    e.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return ComplexMatrix(dim, std::move(e));
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

void save_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write matrix file " + path.string());
  out << format_matrix(m);
}

}  // namespace hpineq
