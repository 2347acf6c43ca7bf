#include "hpineq/matfun/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hpineq/error.hpp"

namespace hpineq::matfun {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw InputError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw InputError("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(tok, &used));
      if (tok.find_first_not_of(" \t", used) != std::string::npos) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("cannot parse partition '" + text + "'");
    }
  }
  if (parts.empty()) throw InputError("empty partition");
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  if (m <= 0) return out;
  std::vector<int> cur{m};
  while (true) {
    out.emplace_back(cur);
    // Next partition in reverse lexicographic order.
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      ++rem;
      cur.pop_back();
    }
    if (cur.empty()) return out;
    const int v = --cur.back();
    ++rem;
    while (rem > v) {
      cur.push_back(v);
      rem -= v;
    }
    if (rem > 0) cur.push_back(rem);
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() ||
        seen[static_cast<std::size_t>(v)]) {
      throw InputError("not a permutation: images must be distinct values in [0, m)");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::from_cycles(int m, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int a = c[i];
      if (a < 0 || a >= m || used[static_cast<std::size_t>(a)]) {
        throw InputError("cycles must be disjoint and within [0, m)");
      }
      used[static_cast<std::size_t>(a)] = true;
      v[static_cast<std::size_t>(a)] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.degree() != degree()) throw InputError("compose: degree mismatch");
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = images_[static_cast<std::size_t>(other.images_[i])];
  Permutation out;
  out.images_ = std::move(v);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(images_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(v);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

int Permutation::sign() const {
  const CycleType ct = cycle_type();
  return ((degree() - static_cast<int>(ct.length())) % 2 == 0) ? 1 : -1;
}

int group_degree(const GroupSpec& g) {
  if (const auto* s = std::get_if<FullSymmetric>(&g)) return s->degree;
  const auto& e = std::get<ExplicitGroup>(g).elements;
  return e.empty() ? 0 : e.front().degree();
}

std::vector<Permutation> enumerate_group(const GroupSpec& g) {
  if (const auto* s = std::get_if<FullSymmetric>(&g)) {
    if (s->degree < 1) throw InputError("symmetric group degree must be >= 1");
    if (s->degree > 8) {
      throw BudgetError("S_" + std::to_string(s->degree) + " exceeds the group order guard (8!)");
    }
    std::vector<int> v(static_cast<std::size_t>(s->degree));
    std::iota(v.begin(), v.end(), 0);
    std::vector<Permutation> out;
    do {
      out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::vector<Permutation> elems = std::get<ExplicitGroup>(g).elements;
  if (elems.empty()) throw InputError("explicit group has no elements");
  if (elems.size() > kMaxGroupOrder) throw BudgetError("explicit group exceeds 8! elements");
  const int m = elems.front().degree();
  for (const auto& p : elems)
    if (p.degree() != m) throw InputError("explicit group elements have different degrees");
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw InputError("explicit group lists an element twice");
  }
  const std::set<Permutation> members(elems.begin(), elems.end());
  if (!members.count(Permutation::identity(m))) throw InputError("explicit group lacks the identity");
  for (const auto& a : elems) {
    if (!members.count(a.inverse())) throw InputError("explicit group is not closed under inverse");
    for (const auto& b : elems)
      if (!members.count(a.compose(b))) {
        throw InputError("explicit group is not closed under composition");
      }
  }
  return elems;
}

std::vector<Permutation> generated_subgroup(const std::vector<Permutation>& generators) {
  if (generators.empty()) throw InputError("need at least one generator");
  const int m = generators.front().degree();
  std::set<Permutation> group{Permutation::identity(m)};
  std::vector<Permutation> frontier{Permutation::identity(m)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (const auto& gen : generators) {
        Permutation y = gen.compose(x);
        if (group.insert(y).second) {
          if (group.size() > kMaxGroupOrder) throw BudgetError("generated group exceeds 8! elements");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

}  // namespace hpineq::matfun
