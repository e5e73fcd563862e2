#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wonder/arrangement.hpp"
#include "wonder/space.hpp"

namespace wonder {

// The blow-up of a parent space along a member F of a building set.
//
// Elements are either Strict(W), the strict transform of W ⊄ F, or InE(A, Z),
// the restriction of P(N_F A) to Z, where A ⊋ F (A may be the ambient, giving
// the preimage of Z) and Z ⊆ F is nonempty. Members of the building set strictly
// inside F are allowed only as a single minimal passenger (extended building sets).
class BlowupSpace final : public Space {
 public:
  BlowupSpace(std::shared_ptr<const Space> parent, std::vector<ElemId> parent_building,
              ElemId center, std::optional<ElemId> passenger = {});

  const Space& parent() const { return *parent_; }
  ElemId center() const { return center_; }
  // The dominant transform of a parent element.
  ElemId transform(ElemId parent_elem) const;
  ElemId exceptional() const;
  Affine dim(ElemId e) const override;
  std::size_t size() const override { return nodes_.size(); }

 protected:
  MaybeElem compute_meet(ElemId a, ElemId b) const override;
  std::string label(ElemId e) const override;

 private:
  struct Node {
    bool in_e = false;
    ElemId w_or_a = kAmbient;  // W for Strict, A for InE
    ElemId z = kAmbient;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  ElemId intern(Node n) const;
  MaybeElem in_e(ElemId a, ElemId z) const;
  // Intersection of the factors of w that contain F; nullopt when w misses F.
  std::optional<ElemId> span_with_center(ElemId w) const;
  MaybeElem meet_nodes(const Node& x, const Node& y) const;

  std::shared_ptr<const Space> parent_;
  std::vector<ElemId> building_;
  ElemId center_;
  Affine center_dim_;
  mutable std::vector<Node> nodes_;
  mutable std::map<Node, ElemId> index_;
  mutable std::map<ElemId, std::optional<ElemId>> span_cache_;
};

// Building set tracked through a chain of blow-ups, indexed like the original list.
struct BlowupState {
  std::shared_ptr<const Space> space;
  std::vector<ElemId> building;
  std::vector<std::string> names;
  std::vector<std::size_t> centers;  // indices of blown-up members, in order
  // Member that may sit strictly inside a center (extended building set).
  std::optional<std::size_t> passenger;
  int level() const { return static_cast<int>(centers.size()); }
};

BlowupState initial_state(std::shared_ptr<const Space> base, std::vector<ElemId> building);
BlowupState blowup_step(const BlowupState& state, std::size_t center_index);

struct StarVerdict {
  bool ok = true;
  std::optional<std::size_t> failing_prefix;  // 1-based length
  std::optional<ElemId> witness;
};

StarVerdict check_star_order(const Space& space, std::span<const ElemId> order,
                             std::size_t max_elements = kDefaultMaxElements);

enum class OrderStrategy { inclusion, ascending_dim };

std::vector<ElemId> suggest_order(const Space& space, std::span<const ElemId> building,
                                  OrderStrategy strategy);

// dim G_j + sum (d - 1 - dim F) over the minimal earlier members containing G_j. j is 1-based.
Affine center_dim_closed_form(const Space& space, std::span<const ElemId> order, std::size_t j);

struct CenterRecord {
  std::size_t step = 0;
  std::string center;
  Affine dim;
  Affine dim_closed_form;
  Affine codim;
};

struct BlowupTrace {
  std::vector<CenterRecord> steps;
  BlowupState final_state;
};

struct RunOptions {
  bool check_order = true;
  std::size_t max_elements = kDefaultMaxElements;
};

BlowupTrace run_sequence(std::shared_ptr<const Space> base, std::span<const ElemId> order,
                         const RunOptions& options = {});

inline constexpr std::size_t kDefaultMaxSubsets = std::size_t{1} << 20;

struct DivisorTable {
  std::vector<std::string> divisors;
  std::vector<Affine> codims;
  // Nonempty subsets as bitmasks over `divisors`; every other subset is empty.
  std::vector<std::uint64_t> nonempty;
  bool codim_additive = true;
};

DivisorTable divisor_intersection_table(const BlowupState& final_state,
                                        std::size_t max_subsets = kDefaultMaxSubsets);

}  // namespace wonder
