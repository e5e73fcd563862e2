#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wonder/space.hpp"

namespace wonder {

inline constexpr std::size_t kDefaultMaxNests = 1000000;

// Recursive check on minimal layers. The empty set is a nest.
bool is_nest(const Space& space, std::span<const ElemId> building, std::span<const ElemId> subset);

// Nonempty nests, each listed in building-set order.
std::vector<std::vector<ElemId>> enumerate_nests(const Space& space,
                                                 std::span<const ElemId> building,
                                                 std::optional<std::size_t> max_size = {},
                                                 std::size_t max_results = kDefaultMaxNests);

// Strictly increasing flag S1 ⊊ S2 ⊊ ... inducing the nest.
std::vector<ElemId> flag_from_nest(const Space& space, std::span<const ElemId> building,
                                   std::span<const ElemId> nest);

// Union of the factors of the flag members, in building-set order.
std::vector<ElemId> nest_from_flag(const Space& space, std::span<const ElemId> building,
                                   std::span<const ElemId> flag);

}  // namespace wonder
