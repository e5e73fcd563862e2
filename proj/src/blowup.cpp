#include "wonder/blowup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "wonder/errors.hpp"

namespace wonder {

BlowupSpace::BlowupSpace(std::shared_ptr<const Space> parent, std::vector<ElemId> parent_building,
                         ElemId center, std::optional<ElemId> passenger)
    : parent_(std::move(parent)), building_(std::move(parent_building)), center_(center) {
  if (std::find(building_.begin(), building_.end(), center_) == building_.end())
    throw PreconditionError("center " + parent_->name(center_) + " is not in the building set");
  for (ElemId g : building_)
    if (g != center_ && g != passenger && parent_->contains(center_, g))
      throw PreconditionError("center " + parent_->name(center_) + " is not minimal: it contains " +
                              parent_->name(g));
  center_dim_ = parent_->dim(center_);
  intern(Node{false, kAmbient, kAmbient});
}

ElemId BlowupSpace::intern(Node n) const {
  if (auto it = index_.find(n); it != index_.end()) return it->second;
  auto id = static_cast<ElemId>(nodes_.size());
  nodes_.push_back(n);
  index_.emplace(n, id);
  return id;
}

MaybeElem BlowupSpace::in_e(ElemId a, ElemId z) const {
  if (a == center_) return std::nullopt;
  if (!parent_->contains(a, center_) || !parent_->contains(center_, z))
    throw InvariantError("malformed exceptional element over " + parent_->name(z));
  return intern(Node{true, a, z});
}

ElemId BlowupSpace::transform(ElemId w) const {
  if (w == kAmbient) return kAmbient;
  if (parent_->contains(center_, w)) return *in_e(kAmbient, w);
  return intern(Node{false, w, kAmbient});
}

ElemId BlowupSpace::exceptional() const { return *in_e(kAmbient, center_); }

Affine BlowupSpace::dim(ElemId e) const {
  const Node& n = nodes_.at(e);
  if (!n.in_e) return parent_->dim(n.w_or_a);
  return parent_->dim(n.z) + parent_->dim(n.w_or_a) - center_dim_ - Affine::of(1);
}

std::optional<ElemId> BlowupSpace::span_with_center(ElemId w) const {
  if (w == kAmbient) return kAmbient;
  if (auto it = span_cache_.find(w); it != span_cache_.end()) return it->second;
  std::optional<ElemId> out;
  if (parent_->meet(w, center_)) {
    std::vector<ElemId> through_f;
    for (ElemId g : minimal_containing(*parent_, building_, w))
      if (parent_->contains(g, center_)) through_f.push_back(g);
    out = *intersect_all(*parent_, through_f);
  }
  span_cache_.emplace(w, out);
  return out;
}

MaybeElem BlowupSpace::meet_nodes(const Node& x, const Node& y) const {
  if (!x.in_e && !y.in_e) {
    MaybeElem meet = parent_->meet(x.w_or_a, y.w_or_a);
    if (!meet) return std::nullopt;
    if (!parent_->contains(center_, *meet)) {
      if (parent_->meet(*meet, center_)) {
        // The F-factorization of an intersection is the intersection of the factorizations.
        auto a = parent_->meet(*span_with_center(x.w_or_a), *span_with_center(y.w_or_a));
        if (a != span_with_center(*meet))
          throw InvariantError("F-factorization of " + parent_->name(*meet) +
                               " is not the intersection of the factorizations");
      }
      return intern(Node{false, *meet, kAmbient});
    }
    auto a = parent_->meet(*span_with_center(x.w_or_a), *span_with_center(y.w_or_a));
    return in_e(*a, *meet);
  }
  if (!x.in_e || !y.in_e) {
    const Node& s = x.in_e ? y : x;
    const Node& e = x.in_e ? x : y;
    MaybeElem z = parent_->meet(s.w_or_a, center_);
    if (!z) return std::nullopt;
    return meet_nodes(Node{true, *span_with_center(s.w_or_a), *z}, e);
  }
  MaybeElem z = parent_->meet(x.z, y.z);
  if (!z) return std::nullopt;
  return in_e(*parent_->meet(x.w_or_a, y.w_or_a), *z);
}

MaybeElem BlowupSpace::compute_meet(ElemId a, ElemId b) const {
  Node x = nodes_.at(a), y = nodes_.at(b);
  return meet_nodes(x, y);
}

std::string BlowupSpace::label(ElemId e) const {
  const Node& n = nodes_.at(e);
  if (!n.in_e) return parent_->name(n.w_or_a) + "~";
  if (n.w_or_a == kAmbient) return "π⁻¹(" + parent_->name(n.z) + ")";
  return "P(N " + parent_->name(n.w_or_a) + ")|" + parent_->name(n.z);
}

BlowupState initial_state(std::shared_ptr<const Space> base, std::vector<ElemId> building) {
  BlowupState s;
  for (ElemId g : building) {
    if (g == kAmbient) throw InputError("the ambient space cannot be a building-set member");
    s.names.push_back(base->name(g));
  }
  s.building = std::move(building);
  s.space = std::move(base);
  return s;
}

BlowupState blowup_step(const BlowupState& state, std::size_t center_index) {
  if (center_index >= state.building.size()) throw InputError("center index out of range");
  if (std::find(state.centers.begin(), state.centers.end(), center_index) != state.centers.end())
    throw PreconditionError(state.names[center_index] + " was already blown up");
  std::optional<ElemId> passenger;
  if (state.passenger && *state.passenger != center_index) passenger = state.building[*state.passenger];
  auto space = std::make_shared<BlowupSpace>(state.space, state.building, state.building[center_index],
                                             passenger);
  BlowupState next;
  next.names = state.names;
  next.centers = state.centers;
  next.centers.push_back(center_index);
  next.passenger = state.passenger;
  for (ElemId g : state.building) next.building.push_back(space->transform(g));
  for (std::size_t i : next.centers)
    if (space->codim(next.building[i]) != Affine::of(1))
      throw InvariantError("transform of blown-up center " + next.names[i] + " has codimension " +
                           space->codim(next.building[i]).to_string());
  next.space = std::move(space);
  return next;
}

StarVerdict check_star_order(const Space& space, std::span<const ElemId> order, std::size_t max_elements) {
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (order[i] == order[j]) throw InputError("order lists " + space.name(order[i]) + " twice");
  for (std::size_t i = 1; i <= order.size(); ++i) {
    auto v = is_building_set(space, order.first(i), max_elements);
    if (!v.ok) return StarVerdict{false, i, v.witness};
  }
  return {};
}

std::vector<ElemId> suggest_order(const Space& space, std::span<const ElemId> building,
                                  OrderStrategy strategy) {
  std::vector<ElemId> out;
  if (strategy == OrderStrategy::ascending_dim) {
    out.assign(building.begin(), building.end());
    std::stable_sort(out.begin(), out.end(), [&](ElemId a, ElemId b) {
      Affine da = space.dim(a), db = space.dim(b);
      if (da != db) return da < db;
      return space.name(a) < space.name(b);
    });
  } else {
    std::vector<ElemId> rest(building.begin(), building.end());
    while (!rest.empty()) {
      auto it = std::find_if(rest.begin(), rest.end(), [&](ElemId a) {
        return std::none_of(rest.begin(), rest.end(), [&](ElemId b) { return b != a && space.contains(a, b); });
      });
      out.push_back(*it);
      rest.erase(it);
    }
  }
  auto v = check_star_order(space, out);
  if (!v.ok)
    throw InvariantError("suggested order fails condition (*) at prefix " + std::to_string(*v.failing_prefix));
  return out;
}

namespace {

Affine closed_form(const Space& space, std::span<const ElemId> order, std::size_t j) {
  ElemId g = order[j - 1];
  std::vector<ElemId> above;
  for (std::size_t i = 0; i + 1 < j; ++i)
    if (space.contains(order[i], g)) above.push_back(order[i]);
  Affine d = space.ambient_dim();
  Affine out = space.dim(g);
  for (ElemId f : minimal_elements(space, above)) out += d - Affine::of(1) - space.dim(f);
  return out;
}

}  // namespace

Affine center_dim_closed_form(const Space& space, std::span<const ElemId> order, std::size_t j) {
  if (j < 1 || j > order.size()) throw InputError("step index out of range");
  auto v = check_star_order(space, order);
  if (!v.ok) throw PreconditionError("order fails condition (*) at prefix " + std::to_string(*v.failing_prefix));
  return closed_form(space, order, j);
}

BlowupTrace run_sequence(std::shared_ptr<const Space> base, std::span<const ElemId> order,
                         const RunOptions& options) {
  if (options.check_order) {
    auto v = check_star_order(*base, order, options.max_elements);
    if (!v.ok)
      throw PreconditionError("order fails condition (*) at prefix " + std::to_string(*v.failing_prefix) +
                              " (witness " + base->name(*v.witness) + ")");
  }
  BlowupTrace trace;
  trace.final_state = initial_state(base, {order.begin(), order.end()});
  for (std::size_t j = 1; j <= order.size(); ++j) {
    // Y_{G1..Gj} is reached by blowing up G1..G(j-1) in an inclusion-compatible
    // order, carrying Gj along as an extra member, then blowing up its transform.
    std::vector<std::size_t> idx(j - 1);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return base->dim(order[a]) < base->dim(order[b]); });
    std::vector<ElemId> building;
    for (std::size_t i : idx) building.push_back(order[i]);
    building.push_back(order[j - 1]);
    BlowupState state = initial_state(base, building);
    state.passenger = j - 1;
    for (std::size_t i = 0; i + 1 < j; ++i) state = blowup_step(state, i);

    CenterRecord rec;
    rec.step = j;
    rec.center = base->name(order[j - 1]);
    rec.dim = state.space->dim(state.building.back());
    rec.codim = state.space->codim(state.building.back());
    rec.dim_closed_form = closed_form(*base, order, j);
    if (rec.dim != rec.dim_closed_form)
      throw InvariantError("center " + rec.center + ": tracked dimension " + rec.dim.to_string() +
                           " differs from closed form " + rec.dim_closed_form.to_string());
    trace.steps.push_back(rec);

    if (j == order.size()) {
      state.passenger.reset();
      state = blowup_step(state, j - 1);
      // Report the final state in the caller's order.
      BlowupState final_state;
      final_state.space = state.space;
      final_state.building.resize(j);
      final_state.names.resize(j);
      for (std::size_t k = 0; k + 1 < j; ++k) {
        final_state.building[idx[k]] = state.building[k];
        final_state.names[idx[k]] = state.names[k];
        final_state.centers.push_back(idx[k]);
      }
      final_state.building[j - 1] = state.building.back();
      final_state.names[j - 1] = state.names.back();
      final_state.centers.push_back(j - 1);
      trace.final_state = std::move(final_state);
    }
  }
  return trace;
}

DivisorTable divisor_intersection_table(const BlowupState& state, std::size_t max_subsets) {
  const Space& space = *state.space;
  const std::size_t n = state.building.size();
  if (n > 63) throw ResourceError("divisor table supports at most 63 divisors");
  DivisorTable table;
  table.divisors = state.names;
  for (ElemId d : state.building) table.codims.push_back(space.codim(d));
  std::size_t visited = 0;
  // Supersets of an empty intersection are empty, so only nonempty branches are explored.
  std::function<void(std::size_t, std::uint64_t, ElemId, Affine)> go =
      [&](std::size_t start, std::uint64_t mask, ElemId acc, Affine codim) {
        for (std::size_t i = start; i < n; ++i) {
          if (++visited > max_subsets)
            throw ResourceError("divisor table exceeds " + std::to_string(max_subsets) + " subsets");
          MaybeElem next = space.meet(acc, state.building[i]);
          if (!next) continue;
          std::uint64_t m = mask | (std::uint64_t{1} << i);
          Affine c = codim + table.codims[i];
          if (space.codim(*next) != c) table.codim_additive = false;
          table.nonempty.push_back(m);
          go(i + 1, m, *next, c);
        }
      };
  go(0, 0, kAmbient, Affine{});
  std::sort(table.nonempty.begin(), table.nonempty.end());
  return table;
}

}  // namespace wonder
