#pragma once

#include <complex>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hpineq/matfun/permutation.hpp"

namespace hpineq::matfun {

using cplx = std::complex<double>;

// Irreducible character chi_lambda of S_m evaluated on the class with cycle
// type mu, by the Murnaghan-Nakayama rule (rim-hook removal on beta-sets).
// Exact integer result. InputError when |lambda| != |mu|.
std::int64_t mn_character(const Partition& lambda, const CycleType& mu);

// chi_lambda(identity): the dimension of the irreducible representation.
std::int64_t character_degree(const Partition& lambda);

struct PartitionCharacter {
  Partition lambda;
};
struct SignCharacter {};
struct TrivialCharacter {};
// Explicit values for an explicitly listed group.
struct TableCharacter {
  std::vector<std::pair<Permutation, cplx>> values;
};

using CharacterSpec =
    std::variant<PartitionCharacter, SignCharacter, TrivialCharacter, TableCharacter>;

std::string describe(const CharacterSpec& chi);

// chi(sigma) for every element of `elements` (as produced by
// enumerate_group). Partition characters require the full symmetric group of
// degree |lambda|. Tables must cover every element, have chi(id) > 0 real and
// |chi(sigma)| <= chi(id); irreducibility is not checked.
std::vector<cplx> character_values(const GroupSpec& group,
                                   const std::vector<Permutation>& elements,
                                   const CharacterSpec& chi);

// Character-table document:
//   {"degree": m, "elements": [{"perm": [images...], "value": [re, im]}, ...]}
// The listed permutations form the group.
struct CharacterTable {
  ExplicitGroup group;
  TableCharacter character;
};

CharacterTable parse_character_table(std::string_view text);
CharacterTable load_character_table(const std::filesystem::path& path);
std::string format_character_table(const CharacterTable& table);

}  // namespace hpineq::matfun
