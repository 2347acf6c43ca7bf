#include "hpineq/matfun/characters.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "hpineq/error.hpp"
#include "hpineq/linalg/matrix_io.hpp"
#include "json.hpp"

namespace hpineq::matfun {
namespace {

// Beads on an abacus: beta_i = lambda_i + (L - 1 - i), strictly decreasing.
using BetaSet = std::vector<int>;

BetaSet beta_set(const Partition& lambda) {
  const auto& parts = lambda.parts();
  const int len = static_cast<int>(parts.size());
  BetaSet b(parts.size());
  for (int i = 0; i < len; ++i) b[static_cast<std::size_t>(i)] = parts[static_cast<std::size_t>(i)] + (len - 1 - i);
  return b;
}

class MnEvaluator {
 public:
  explicit MnEvaluator(const std::vector<int>& mu) : mu_(mu) {}

  // chi on the remaining parts mu_[pos..], for the shape encoded by `beads`.
  std::int64_t eval(const BetaSet& beads, std::size_t pos) {
    if (pos == mu_.size()) return 1;
    auto key = std::make_pair(beads, pos);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const int r = mu_[pos];
    std::int64_t total = 0;
    for (std::size_t i = 0; i < beads.size(); ++i) {
      const int from = beads[i];
      const int to = from - r;
      if (to < 0) continue;
      if (std::find(beads.begin(), beads.end(), to) != beads.end()) continue;
      // Leg length = beads strictly between `to` and `from`.
      int between = 0;
      for (int b : beads)
        if (b > to && b < from) ++between;
      BetaSet next = beads;
      next[i] = to;
      std::sort(next.begin(), next.end(), std::greater<>());
      const std::int64_t sub = eval(next, pos + 1);
      total += (between % 2 == 0) ? sub : -sub;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  std::vector<int> mu_;
  std::map<std::pair<BetaSet, std::size_t>, std::int64_t> memo_;
};

bool is_identity_perm(const Permutation& p) { return p.is_identity(); }

}  // namespace

std::int64_t mn_character(const Partition& lambda, const CycleType& mu) {
  if (lambda.size() != mu.size()) {
    throw InputError("mn_character: |lambda| = " + std::to_string(lambda.size()) +
                     " but |mu| = " + std::to_string(mu.size()));
  }
  MnEvaluator ev(mu.parts());
  return ev.eval(beta_set(lambda), 0);
}

std::int64_t character_degree(const Partition& lambda) {
  return mn_character(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1)));
}

std::string describe(const CharacterSpec& chi) {
  struct {
    std::string operator()(const PartitionCharacter& c) const {
      return "partition=" + c.lambda.to_string();
    }
    std::string operator()(const SignCharacter&) const { return "det"; }
    std::string operator()(const TrivialCharacter&) const { return "perm"; }
    std::string operator()(const TableCharacter&) const { return "table"; }
  } v;
  return std::visit(v, chi);
}

std::vector<cplx> character_values(const GroupSpec& group,
                                   const std::vector<Permutation>& elements,
                                   const CharacterSpec& chi) {
  std::vector<cplx> out;
  out.reserve(elements.size());
  if (std::holds_alternative<SignCharacter>(chi)) {
    for (const auto& s : elements) out.emplace_back(s.sign(), 0.0);
    return out;
  }
  if (std::holds_alternative<TrivialCharacter>(chi)) {
    out.assign(elements.size(), cplx(1.0, 0.0));
    return out;
  }
  if (const auto* pc = std::get_if<PartitionCharacter>(&chi)) {
    if (!std::holds_alternative<FullSymmetric>(group)) {
      throw InputError("partition characters are only defined for the full symmetric group");
    }
    if (pc->lambda.size() != group_degree(group)) {
      throw InputError("partition " + pc->lambda.to_string() + " does not match group degree " +
                       std::to_string(group_degree(group)));
    }
    std::map<CycleType, std::int64_t> cache;
    for (const auto& s : elements) {
      const CycleType ct = s.cycle_type();
      auto it = cache.find(ct);
      if (it == cache.end()) it = cache.emplace(ct, mn_character(pc->lambda, ct)).first;
      out.emplace_back(static_cast<double>(it->second), 0.0);
    }
    return out;
  }

  const auto& table = std::get<TableCharacter>(chi).values;
  std::map<Permutation, cplx> lookup;
  for (const auto& [p, v] : table) lookup[p] = v;
  cplx at_identity = 0.0;
  bool has_identity = false;
  for (const auto& s : elements) {
    auto it = lookup.find(s);
    if (it == lookup.end()) throw InputError("character table does not cover every group element");
    out.push_back(it->second);
    if (is_identity_perm(s)) {
      at_identity = it->second;
      has_identity = true;
    }
  }
  if (!has_identity || at_identity.imag() != 0.0 || !(at_identity.real() > 0.0)) {
    throw InputError("character table: chi(identity) must be real and positive");
  }
  const double bound = at_identity.real() * (1.0 + 1e-12);
  for (const cplx& v : out)
    if (std::abs(v) > bound) throw InputError("character table: |chi(sigma)| exceeds chi(identity)");
  return out;
}

namespace {

CharacterTable read_table(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("elements") ||
      !doc["elements"].is_array()) {
    throw InputError("character table: expected fields degree and elements");
  }
  const int degree = doc["degree"].get<int>();
  CharacterTable t;
  for (const auto& e : doc["elements"]) {
    if (!e.is_object() || !e.contains("perm") || !e.contains("value")) {
      throw InputError("character table: each element needs perm and value");
    }
    Permutation p(e["perm"].get<std::vector<int>>());
    if (p.degree() != degree) throw InputError("character table: permutation degree mismatch");
    const auto& v = e["value"];
    cplx value;
    if (v.is_number()) {
      value = cplx(v.get<double>(), 0.0);
    } else if (v.is_array() && v.size() == 2) {
      value = cplx(v[0].get<double>(), v[1].get<double>());
    } else {
      throw InputError("character table: value must be a number or [re, im]");
    }
    t.group.elements.push_back(p);
    t.character.values.emplace_back(std::move(p), value);
  }
  return t;
}

}  // namespace

// The listed permutations must form a group and the values must pass the
// character sanity checks; both are verified here so a bad file fails early.
CharacterTable parse_character_table(std::string_view text) {
  CharacterTable t;
  try {
    t = read_table(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("character table: ") + ex.what());
  }
  character_values(t.group, enumerate_group(t.group), t.character);
  return t;
}

CharacterTable load_character_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open character table " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_character_table(ss.str());
}

std::string format_character_table(const CharacterTable& table) {
  const int degree = table.group.elements.empty() ? 0 : table.group.elements.front().degree();
  std::string out = "{\"degree\": " + std::to_string(degree) + ", \"elements\": [";
  for (std::size_t i = 0; i < table.character.values.size(); ++i) {
    const auto& [p, v] = table.character.values[i];
    out += i ? ",\n  " : "\n  ";
    out += "{\"perm\": [";
    for (int k = 0; k < p.degree(); ++k) {
      if (k) out += ", ";
      out += std::to_string(p(k));
    }
    out += "], \"value\": [" + format_double(v.real()) + ", " + format_double(v.imag()) + "]}";
  }
  out += "\n]}\n";
  return out;
}

}  // namespace hpineq::matfun
