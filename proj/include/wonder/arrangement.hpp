#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wonder/space.hpp"

namespace wonder {

inline constexpr std::size_t kDefaultMaxElements = 100000;
inline constexpr std::size_t kDefaultIrreducibleCap = 64;

// Intersection of a list; the ambient for an empty list.
MaybeElem intersect_all(const Space& space, std::span<const ElemId> elems);

// Closure under pairwise intersection, in discovery order, inputs first.
std::vector<ElemId> close_intersections(const Space& space, std::span<const ElemId> elems,
                                        std::size_t max_elements = kDefaultMaxElements);

bool is_transversal(const Space& space, std::span<const ElemId> elems);

std::vector<ElemId> minimal_elements(const Space& space, std::span<const ElemId> elems);

// Minimal members of the building set containing s, without a membership check.
std::vector<ElemId> minimal_containing(const Space& space, std::span<const ElemId> building,
                                       ElemId s);

// Checked version: s must lie in the induced arrangement.
std::vector<ElemId> g_factors(const Space& space, std::span<const ElemId> building, ElemId s);

struct BuildingVerdict {
  bool ok = true;
  std::optional<ElemId> witness;
  std::vector<ElemId> arrangement;
  std::string reason;
};

BuildingVerdict is_building_set_of(const Space& space, std::span<const ElemId> building,
                                   std::span<const ElemId> arrangement);
BuildingVerdict is_building_set(const Space& space, std::span<const ElemId> building,
                                std::size_t max_elements = kDefaultMaxElements);

struct FFactorization {
  ElemId a = kAmbient;
  ElemId b = kAmbient;
};

FFactorization f_factorization(const Space& space, std::span<const ElemId> building, ElemId s,
                               ElemId f);

std::vector<ElemId> irreducible_elements(const Space& space, std::span<const ElemId> arrangement,
                                         std::size_t cap = kDefaultIrreducibleCap);

}  // namespace wonder
