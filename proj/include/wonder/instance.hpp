#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "wonder/graph.hpp"
#include "wonder/space.hpp"

namespace wonder {

enum class ModelKind { linear, polydiagonal, anchored };

struct ModelSpec {
  ModelKind kind = ModelKind::polydiagonal;
  int dim = 0;              // linear: vector space dimension
  bool projective = false;  // linear
  int n = 0;                // polydiagonal, anchored
  DimMultiplier m;          // polydiagonal

  friend bool operator==(const ModelSpec& a, const ModelSpec& b) {
    return a.kind == b.kind && a.dim == b.dim && a.projective == b.projective && a.n == b.n &&
           a.m.value == b.m.value;
  }
};

using ModelValue = std::variant<Subspace, Polydiagonal, AnchoredPolydiagonal>;

struct NamedElement {
  std::string name;
  ModelValue value;
  friend bool operator==(const NamedElement&, const NamedElement&) = default;
};

// A building set together with its space and any canonical orders.
struct Instance {
  ModelSpec model;
  std::shared_ptr<Space> space;
  std::vector<NamedElement> elements;
  std::vector<ElemId> ids;  // parallel to elements
  std::vector<ElemId> building;
  std::map<std::string, std::vector<ElemId>> orders;

  ElemId by_name(std::string_view name) const;
  std::vector<ElemId> by_names(const std::vector<std::string>& names) const;
  std::vector<std::string> names(const std::vector<ElemId>& ids) const;
};

std::shared_ptr<Space> make_space(const ModelSpec& model);

// Build an instance; `building` lists element names (all elements when empty).
Instance make_instance(const ModelSpec& model, std::vector<NamedElement> elements,
                       const std::vector<std::string>& building = {},
                       const std::map<std::string, std::vector<std::string>>& orders = {});

std::string diagonal_name(const Polydiagonal& p);
std::string anchored_name(const AnchoredPolydiagonal& p);

Instance generate_fm(int n, DimMultiplier m);
Instance generate_ulyanov(int n, DimMultiplier m);
Instance generate_kt(const LabeledGraph& g, DimMultiplier m);
Instance generate_m0n(int n);
Instance generate_kapranov(int n, std::uint64_t seed = 1);

// JSON forms.
nlohmann::json model_to_json(const ModelSpec& model);
ModelSpec model_from_json(const std::string& kind, const nlohmann::json& ambient);
nlohmann::json value_to_json(const ModelValue& v);
ModelValue value_from_json(const ModelSpec& model, const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j, std::optional<DimMultiplier> m_override = {});
LabeledGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const LabeledGraph& g);

}  // namespace wonder
