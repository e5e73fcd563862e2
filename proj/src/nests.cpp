#include "wonder/nests.hpp"

#include <algorithm>
#include <functional>

#include "wonder/arrangement.hpp"
#include "wonder/errors.hpp"

namespace wonder {

namespace {

bool same_set(std::vector<ElemId> a, std::vector<ElemId> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool nest_rec(const Space& space, std::span<const ElemId> building, const std::vector<ElemId>& t) {
  if (t.empty()) return true;
  auto mins = minimal_elements(space, t);
  MaybeElem s = intersect_all(space, mins);
  if (!s) return false;
  if (!same_set(minimal_containing(space, building, *s), mins)) return false;
  for (ElemId a : mins) {
    std::vector<ElemId> above;
    for (ElemId x : t)
      if (x != a && space.contains(x, a)) above.push_back(x);
    if (!nest_rec(space, building, above)) return false;
  }
  return true;
}

std::vector<ElemId> in_building_order(std::span<const ElemId> building, const std::vector<ElemId>& xs) {
  std::vector<ElemId> out;
  for (ElemId g : building)
    if (std::find(xs.begin(), xs.end(), g) != xs.end()) out.push_back(g);
  return out;
}

}  // namespace

bool is_nest(const Space& space, std::span<const ElemId> building, std::span<const ElemId> subset) {
  std::vector<ElemId> t;
  for (ElemId e : subset) {
    if (std::find(building.begin(), building.end(), e) == building.end())
      throw InputError(space.name(e) + " is not in the building set");
    if (std::find(t.begin(), t.end(), e) == t.end()) t.push_back(e);
  }
  return nest_rec(space, building, t);
}

std::vector<std::vector<ElemId>> enumerate_nests(const Space& space, std::span<const ElemId> building,
                                                 std::optional<std::size_t> max_size,
                                                 std::size_t max_results) {
  std::vector<std::vector<ElemId>> out;
  std::vector<ElemId> current;
  // Nests are closed under taking subsets, so a non-nest prunes all its extensions.
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (max_size && current.size() >= *max_size) return;
    for (std::size_t i = start; i < building.size(); ++i) {
      current.push_back(building[i]);
      if (nest_rec(space, building, current)) {
        if (out.size() >= max_results)
          throw ResourceError("more than " + std::to_string(max_results) + " nests");
        out.push_back(current);
        go(i + 1);
      }
      current.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<ElemId> flag_from_nest(const Space& space, std::span<const ElemId> building,
                                   std::span<const ElemId> nest) {
  if (!is_nest(space, building, nest)) throw PreconditionError("not a nest");
  std::vector<ElemId> rest(nest.begin(), nest.end());
  std::vector<ElemId> flag;
  while (!rest.empty()) {
    MaybeElem s = intersect_all(space, rest);
    if (!s) throw InvariantError("nest with empty intersection");
    if (flag.empty() || flag.back() != *s) flag.push_back(*s);
    auto mins = minimal_elements(space, rest);
    std::erase_if(rest, [&](ElemId x) { return std::find(mins.begin(), mins.end(), x) != mins.end(); });
  }
  return flag;
}

std::vector<ElemId> nest_from_flag(const Space& space, std::span<const ElemId> building,
                                   std::span<const ElemId> flag) {
  for (std::size_t i = 1; i < flag.size(); ++i)
    if (!space.contains(flag[i], flag[i - 1])) throw InputError("flag is not ascending");
  std::vector<ElemId> all;
  for (ElemId s : flag)
    for (ElemId g : g_factors(space, building, s)) all.push_back(g);
  return in_building_order(building, all);
}

}  // namespace wonder
