#include "wonder/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "wonder/errors.hpp"

namespace wonder {

MaybeElem intersect_all(const Space& space, std::span<const ElemId> elems) {
  MaybeElem acc = kAmbient;
  for (ElemId e : elems) {
    acc = space.meet(*acc, e);
    if (!acc) return std::nullopt;
  }
  return acc;
}

std::vector<ElemId> close_intersections(const Space& space, std::span<const ElemId> elems,
                                        std::size_t max_elements) {
  std::vector<ElemId> out;
  std::unordered_set<ElemId> seen;
  auto add = [&](ElemId e) {
    if (e == kAmbient) throw InputError("the ambient space is not an arrangement element");
    if (!seen.insert(e).second) return;
    if (out.size() >= max_elements)
      throw ResourceError("induced arrangement exceeds " + std::to_string(max_elements) + " elements");
    out.push_back(e);
  };
  for (ElemId e : elems) add(e);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (MaybeElem x = space.meet(out[i], out[j])) add(*x);
  return out;
}

bool is_transversal(const Space& space, std::span<const ElemId> elems) {
  if (elems.empty()) throw InputError("transversality of an empty collection");
  if (elems.size() == 1) return true;
  MaybeElem x = intersect_all(space, elems);
  if (!x) return false;
  Affine total;
  for (ElemId e : elems) total += space.codim(e);
  return space.codim(*x) == total;
}

std::vector<ElemId> minimal_elements(const Space& space, std::span<const ElemId> elems) {
  std::vector<ElemId> out;
  for (ElemId e : elems) {
    bool minimal = std::none_of(elems.begin(), elems.end(),
                                [&](ElemId f) { return f != e && space.contains(e, f); });
    if (minimal && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

std::vector<ElemId> minimal_containing(const Space& space, std::span<const ElemId> building,
                                       ElemId s) {
  std::vector<ElemId> above;
  for (ElemId g : building)
    if (space.contains(g, s)) above.push_back(g);
  return minimal_elements(space, above);
}

std::vector<ElemId> g_factors(const Space& space, std::span<const ElemId> building, ElemId s) {
  std::vector<ElemId> above;
  for (ElemId g : building)
    if (space.contains(g, s)) above.push_back(g);
  if (above.empty() || intersect_all(space, above) != MaybeElem(s))
    throw InputError(space.name(s) + " is not in the induced arrangement");
  return minimal_elements(space, above);
}

BuildingVerdict is_building_set_of(const Space& space, std::span<const ElemId> building,
                                   std::span<const ElemId> arrangement) {
  BuildingVerdict v;
  v.arrangement.assign(arrangement.begin(), arrangement.end());
  for (ElemId s : arrangement) {
    auto factors = minimal_containing(space, building, s);
    std::string why;
    if (factors.empty())
      why = "no member of the building set contains it";
    else if (!is_transversal(space, factors))
      why = "its factors do not meet transversally";
    else if (intersect_all(space, factors) != MaybeElem(s))
      why = "its factors intersect in a larger element";
    if (!why.empty()) {
      v.ok = false;
      v.witness = s;
      v.reason = space.name(s) + ": " + why;
      return v;
    }
  }
  return v;
}

BuildingVerdict is_building_set(const Space& space, std::span<const ElemId> building,
                                std::size_t max_elements) {
  auto arrangement = close_intersections(space, building, max_elements);
  return is_building_set_of(space, building, arrangement);
}

FFactorization f_factorization(const Space& space, std::span<const ElemId> building, ElemId s,
                               ElemId f) {
  if (std::find(building.begin(), building.end(), f) == building.end())
    throw PreconditionError(space.name(f) + " is not in the building set");
  for (ElemId g : building)
    if (g != f && space.contains(f, g))
      throw PreconditionError(space.name(f) + " is not minimal in the building set");
  if (!space.meet(s, f)) throw PreconditionError(space.name(s) + " does not meet " + space.name(f));
  auto factors = g_factors(space, building, s);
  std::vector<ElemId> with_f, rest;
  for (ElemId g : factors) (space.contains(g, f) ? with_f : rest).push_back(g);
  FFactorization out{*intersect_all(space, with_f), *intersect_all(space, rest)};
  bool ok = space.contains(out.a, f) && space.meet(out.a, out.b) == MaybeElem(s);
  if (ok && out.b != kAmbient) {
    ElemId pair[] = {out.b, f};
    ok = is_transversal(space, pair);
  }
  if (!ok) throw InvariantError("F-factorization postcondition failed for " + space.name(s));
  return out;
}

namespace {

// Is g' = g'_1 ⋔ ... ⋔ g'_k for some g'_i in the arrangement or ambient with g'_i ⊇ parts[i]?
bool lifts(const Space& space, std::span<const ElemId> arrangement, std::span<const ElemId> parts,
           ElemId target) {
  std::vector<std::vector<ElemId>> choices(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    choices[i].push_back(kAmbient);
    for (ElemId t : arrangement)
      if (space.contains(t, parts[i]) && space.contains(t, target)) choices[i].push_back(t);
  }
  std::vector<ElemId> pick;
  std::function<bool(std::size_t, ElemId, Affine)> go = [&](std::size_t i, ElemId acc, Affine codim) {
    if (i == parts.size()) return acc == target;
    for (ElemId t : choices[i]) {
      MaybeElem next = space.meet(acc, t);
      if (!next) continue;
      Affine c = codim + space.codim(t);
      if (space.codim(*next) != c) continue;
      if (go(i + 1, *next, c)) return true;
    }
    return false;
  };
  return go(0, kAmbient, Affine{});
}

bool reducible(const Space& space, std::span<const ElemId> arrangement, ElemId g) {
  std::vector<ElemId> supers;
  for (ElemId s : arrangement)
    if (s != g && space.contains(s, g)) supers.push_back(s);
  std::vector<ElemId> parts;
  // Depth-first over transversal sub-collections; codim additivity is inherited by subsets.
  std::function<bool(std::size_t, ElemId, Affine)> go = [&](std::size_t start, ElemId acc, Affine codim) {
    if (parts.size() >= 2 && acc == g) {
      bool all = std::all_of(supers.begin(), supers.end(),
                             [&](ElemId sup) { return lifts(space, arrangement, parts, sup); });
      if (all) return true;
    }
    for (std::size_t i = start; i < supers.size(); ++i) {
      MaybeElem next = space.meet(acc, supers[i]);
      if (!next) continue;
      Affine c = codim + space.codim(supers[i]);
      if (space.codim(*next) != c) continue;
      parts.push_back(supers[i]);
      if (go(i + 1, *next, c)) return true;
      parts.pop_back();
    }
    return false;
  };
  return go(0, kAmbient, Affine{});
}

}  // namespace

std::vector<ElemId> irreducible_elements(const Space& space, std::span<const ElemId> arrangement,
                                         std::size_t cap) {
  if (arrangement.size() > cap)
    throw ResourceError("irreducibility search is capped at " + std::to_string(cap) + " elements");
  std::vector<ElemId> out;
  for (ElemId g : arrangement)
    if (!reducible(space, arrangement, g)) out.push_back(g);
  auto verdict = is_building_set_of(space, out, arrangement);
  if (!verdict.ok) throw InvariantError("irreducible elements are not a building set: " + verdict.reason);
  return out;
}

}  // namespace wonder
