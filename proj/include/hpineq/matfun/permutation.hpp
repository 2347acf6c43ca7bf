#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace hpineq::matfun {

// Integer partition, parts weakly decreasing and positive.
class Partition {
 public:
  Partition() = default;
  // Throws InputError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  // Sorts first; for cycle types gathered in arbitrary order.
  static Partition from_unsorted(std::vector<int> parts);
  // "3,2,1" -> (3,2,1)
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }  // sum of parts
  std::size_t length() const noexcept { return parts_.size(); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// A partition used as a conjugacy-class label of S_m.
using CycleType = Partition;

// All partitions of m, in reverse lexicographic order ((m) first).
std::vector<Partition> partitions_of(int m);

// Bijection on {0, ..., m-1}; images[i] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  // Throws InputError unless images is a permutation of 0..m-1.
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int m);
  // Product of disjoint cycles on m points, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(int m, const std::vector<std::vector<int>>& cycles);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const noexcept { return images_; }

  // (this ∘ other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  CycleType cycle_type() const;
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

inline constexpr std::size_t kMaxGroupOrder = 40320;  // 8!

struct FullSymmetric {
  int degree = 0;
};
struct ExplicitGroup {
  std::vector<Permutation> elements;
};

// Either S_m or an explicitly listed subgroup of S_m.
using GroupSpec = std::variant<FullSymmetric, ExplicitGroup>;

int group_degree(const GroupSpec& g);

// Every element in lexicographic order of image sequences. For explicit
// groups validates equal degrees, no duplicates, identity present and
// closure under composition and inverse (InputError otherwise). S_m is
// limited to m <= 8 and explicit lists to 8! elements (BudgetError).
std::vector<Permutation> enumerate_group(const GroupSpec& g);

// Subgroup generated by `generators` (identity included), as a sorted list.
std::vector<Permutation> generated_subgroup(const std::vector<Permutation>& generators);

}  // namespace hpineq::matfun
