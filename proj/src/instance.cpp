#include "wonder/instance.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "wonder/arrangement.hpp"
#include "wonder/errors.hpp"

namespace wonder {

using nlohmann::json;

namespace {

struct Interner {
  Space& space;
  ElemId operator()(const Subspace& s) const {
    auto* ls = dynamic_cast<LinearSpace*>(&space);
    if (!ls) throw InputError("linear element in a non-linear model");
    if (s.ambient_dim() != ls->vector_dim()) throw InputError("subspace has the wrong ambient dimension");
    if (ls->projective() && s.is_zero()) throw InputError("the zero subspace is empty in a projective model");
    return ls->intern(s);
  }
  ElemId operator()(const Polydiagonal& p) const {
    auto* ds = dynamic_cast<DiagonalSpace*>(&space);
    if (!ds) throw InputError("polydiagonal in a different model");
    if (p.n() != ds->n()) throw InputError("polydiagonal has the wrong n");
    return ds->intern(p);
  }
  ElemId operator()(const AnchoredPolydiagonal& p) const {
    auto* as = dynamic_cast<AnchoredSpace*>(&space);
    if (!as) throw InputError("anchored polydiagonal in a different model");
    if (p.n() != as->n()) throw InputError("anchored polydiagonal has the wrong n");
    return as->intern(p);
  }
};

std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, std::size_t size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> go = [&](std::size_t start) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

// Set partitions of 1..n as block lists (singletons dropped), via restricted growth strings.
std::vector<std::vector<Block>> set_partitions(int n) {
  std::vector<std::vector<Block>> out;
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> go = [&](int i, int used) {
    if (i == n) {
      std::vector<Block> blocks(static_cast<std::size_t>(used));
      for (int k = 0; k < n; ++k) blocks[label[k]].push_back(k + 1);
      std::erase_if(blocks, [](const Block& b) { return b.size() < 2; });
      out.push_back(std::move(blocks));
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      label[i] = c;
      go(i + 1, std::max(used, c + 1));
    }
  };
  go(0, 0);
  return out;
}

std::vector<std::string> ascending_names(const Instance& inst) {
  std::vector<ElemId> order(inst.building);
  std::stable_sort(order.begin(), order.end(), [&](ElemId a, ElemId b) {
    return inst.space->dim(a) < inst.space->dim(b);
  });
  return inst.names(order);
}

void add_ascending(Instance& inst) {
  inst.orders["ascending"] = inst.by_names(ascending_names(inst));
}

json affine_json(const std::optional<long long>& m) {
  if (m) return *m;
  return "m";
}

}  // namespace

ElemId Instance::by_name(std::string_view name) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].name == name) return ids[i];
  throw InputError("unknown element '" + std::string(name) + "'");
}

std::vector<ElemId> Instance::by_names(const std::vector<std::string>& ns) const {
  std::vector<ElemId> out;
  for (const auto& n : ns) out.push_back(by_name(n));
  return out;
}

std::vector<std::string> Instance::names(const std::vector<ElemId>& xs) const {
  std::vector<std::string> out;
  for (ElemId x : xs) out.push_back(space->name(x));
  return out;
}

std::shared_ptr<Space> make_space(const ModelSpec& model) {
  switch (model.kind) {
    case ModelKind::linear:
      return std::make_shared<LinearSpace>(model.dim, model.projective);
    case ModelKind::polydiagonal:
      if (model.n < 2) throw InputError("polydiagonal model needs n >= 2");
      return std::make_shared<DiagonalSpace>(model.n, model.m);
    case ModelKind::anchored:
      if (model.n < 4) throw InputError("anchored model needs n >= 4");
      return std::make_shared<AnchoredSpace>(model.n);
  }
  throw InputError("unknown model");
}

Instance make_instance(const ModelSpec& model, std::vector<NamedElement> elements,
                       const std::vector<std::string>& building,
                       const std::map<std::string, std::vector<std::string>>& orders) {
  Instance inst;
  inst.model = model;
  inst.space = make_space(model);
  std::set<std::string> names;
  std::set<ElemId> seen;
  for (const auto& e : elements) {
    if (e.name.empty()) throw InputError("element without a name");
    if (!names.insert(e.name).second) throw InputError("duplicate element name '" + e.name + "'");
    ElemId id = std::visit(Interner{*inst.space}, e.value);
    if (id == kAmbient) throw InputError("element '" + e.name + "' is the whole ambient space");
    if (!seen.insert(id).second) throw InputError("element '" + e.name + "' repeats an earlier element");
    inst.space->set_name(id, e.name);
    inst.ids.push_back(id);
  }
  inst.elements = std::move(elements);
  inst.building = building.empty() ? inst.ids : inst.by_names(building);
  std::set<ElemId> in_building(inst.building.begin(), inst.building.end());
  if (in_building.size() != inst.building.size()) throw InputError("building set lists an element twice");
  for (const auto& [key, ns] : orders) {
    auto ids = inst.by_names(ns);
    std::set<ElemId> s(ids.begin(), ids.end());
    if (s != in_building || ids.size() != inst.building.size())
      throw InputError("order '" + key + "' is not a permutation of the building set");
    inst.orders[key] = ids;
  }
  return inst;
}

std::string diagonal_name(const Polydiagonal& p) { return p.label(); }
std::string anchored_name(const AnchoredPolydiagonal& p) { return p.label(); }

Instance generate_fm(int n, DimMultiplier m) {
  if (n < 2) throw InputError("fm needs n >= 2");
  std::vector<NamedElement> elems;
  // Original order: for k = 2..n the diagonals with max I = k, larger I first.
  for (int k = 2; k <= n; ++k)
    for (int size = k; size >= 2; --size)
      for (auto rest : subsets_of(range(1, k - 1), static_cast<std::size_t>(size - 1))) {
        rest.push_back(k);
        Polydiagonal p(n, {rest});
        elems.push_back({diagonal_name(p), p});
      }
  std::vector<std::string> fm;
  for (const auto& e : elems) fm.push_back(e.name);
  Instance inst = make_instance(ModelSpec{ModelKind::polydiagonal, 0, false, n, m}, elems, {}, {{"fm", fm}});
  add_ascending(inst);
  return inst;
}

Instance generate_ulyanov(int n, DimMultiplier m) {
  if (n < 2) throw InputError("ulyanov needs n >= 2");
  std::vector<Polydiagonal> ps;
  for (auto& blocks : set_partitions(n))
    if (!blocks.empty()) ps.emplace_back(n, blocks);
  // Ascending dimension; among equal dimension, fewer blocks first.
  std::sort(ps.begin(), ps.end(), [](const Polydiagonal& a, const Polydiagonal& b) {
    if (a.rank() != b.rank()) return a.rank() > b.rank();
    if (a.blocks().size() != b.blocks().size()) return a.blocks().size() < b.blocks().size();
    return a.blocks() < b.blocks();
  });
  std::vector<NamedElement> elems;
  std::vector<std::string> order;
  for (const auto& p : ps) {
    elems.push_back({diagonal_name(p), p});
    order.push_back(diagonal_name(p));
  }
  Instance inst = make_instance(ModelSpec{ModelKind::polydiagonal, 0, false, n, m}, elems, {}, {{"ulyanov", order}});
  add_ascending(inst);
  return inst;
}

Instance generate_kt(const LabeledGraph& g, DimMultiplier m) {
  if (g.n() < 2) throw InputError("kt needs a graph with at least two vertices");
  auto ps = kt_building_set(g);
  std::stable_sort(ps.begin(), ps.end(), [](const Polydiagonal& a, const Polydiagonal& b) {
    return a.rank() > b.rank();
  });
  std::vector<NamedElement> elems;
  for (const auto& p : ps) elems.push_back({diagonal_name(p), p});
  Instance inst = make_instance(ModelSpec{ModelKind::polydiagonal, 0, false, g.n(), m}, elems);
  add_ascending(inst);
  return inst;
}

Instance generate_m0n(int n) {
  if (n < 4) throw InputError("m0n needs n >= 4");
  const Anchor anchors[] = {Anchor::zero, Anchor::one, Anchor::infinity};
  std::vector<NamedElement> elems;
  auto add_anchored = [&](const std::vector<int>& members) {
    for (Anchor a : anchors) {
      AnchoredPolydiagonal p(n, {AnchoredBlock{members, a}});
      elems.push_back({anchored_name(p), p});
    }
  };
  auto add_plain = [&](const std::vector<int>& members) {
    AnchoredPolydiagonal p(n, {AnchoredBlock{members, std::nullopt}});
    elems.push_back({anchored_name(p), p});
  };
  // Keel's order: for max I = k, anchored loci with |I| = k-3, then each further
  // layer pairs anchored loci of size s with plain diagonals of size s + 1.
  for (int k = 5; k <= n; ++k)
    for (int s = k - 3; s + 1 >= 2; --s) {
      if (s >= 2)
        for (auto rest : subsets_of(range(4, k - 1), static_cast<std::size_t>(s - 1))) {
          rest.push_back(k);
          add_anchored(rest);
        }
      if (s < k - 3)
        for (auto rest : subsets_of(range(4, k - 1), static_cast<std::size_t>(s))) {
          rest.push_back(k);
          add_plain(rest);
        }
    }
  std::vector<std::string> keel;
  for (const auto& e : elems) keel.push_back(e.name);
  Instance inst = make_instance(ModelSpec{ModelKind::anchored, 0, false, n, DimMultiplier::fixed(1)}, elems, {},
                                {{"keel", keel}});
  add_ascending(inst);
  return inst;
}

Instance generate_kapranov(int n, std::uint64_t seed) {
  if (n < 4) throw InputError("kapranov needs n >= 4");
  const int d = n - 2;       // P^{n-3} as lines in Q^{n-2}
  const int points = n - 1;  // generic points
  auto point_name = [points](const std::vector<int>& idx) {
    std::string s = "L";
    bool wide = points > 9;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (wide && i ? "." : "") + std::to_string(idx[i]);
    return s;
  };
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    std::mt19937_64 rng(seed + attempt);
    std::uniform_int_distribution<long> coord(-9, 9);
    std::vector<RationalRow> pts(static_cast<std::size_t>(points), RationalRow(static_cast<std::size_t>(d)));
    for (auto& p : pts)
      for (auto& x : p) x = Rational(coord(rng));
    // General position: every d of the points are linearly independent.
    bool generic = true;
    for (const auto& idx : subsets_of(range(0, points - 1), static_cast<std::size_t>(d))) {
      std::vector<RationalRow> rows;
      for (int i : idx) rows.push_back(pts[i]);
      reduce_rows(rows);
      if (static_cast<int>(rows.size()) != d) generic = false;
    }
    if (!generic) continue;
    std::vector<NamedElement> elems;
    for (int size = 1; size <= n - 3; ++size)
      for (const auto& idx : subsets_of(range(1, points), static_cast<std::size_t>(size))) {
        std::vector<RationalRow> rows;
        for (int i : idx) rows.push_back(pts[i - 1]);
        elems.push_back({point_name(idx), subspace_spanned_by(d, rows)});
      }
    Instance inst = make_instance(ModelSpec{ModelKind::linear, d, true, 0, {}}, elems);
    if (!is_building_set(*inst.space, inst.building).ok) continue;
    add_ascending(inst);
    return inst;
  }
  throw InvariantError("no generic configuration found for kapranov");
}

json model_to_json(const ModelSpec& model) {
  switch (model.kind) {
    case ModelKind::linear:
      return {{"model", "linear"}, {"ambient", {{"dim", model.dim}, {"projective", model.projective}}}};
    case ModelKind::polydiagonal:
      return {{"model", "polydiagonal"}, {"ambient", {{"n", model.n}, {"m", affine_json(model.m.value)}}}};
    case ModelKind::anchored:
      return {{"model", "anchored"}, {"ambient", {{"n", model.n}}}};
  }
  return {};
}

namespace {

int int_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw InputError(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

DimMultiplier parse_m(const json& j) {
  if (j.is_string() && j.get<std::string>() == "m") return DimMultiplier::symbolic();
  if (j.is_number_integer()) return DimMultiplier::fixed(j.get<long long>());
  if (j.is_string()) {
    try {
      return DimMultiplier::fixed(std::stoll(j.get<std::string>()));
    } catch (const std::logic_error&) {
    }
  }
  throw InputError("m must be \"m\" or a positive integer");
}

Rational parse_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw InputError("rationals must be \"p/q\" strings or integers");
}

}  // namespace

ModelSpec model_from_json(const std::string& kind, const json& ambient) {
  ModelSpec m;
  if (kind == "linear") {
    m.kind = ModelKind::linear;
    m.dim = int_field(ambient, "dim");
    if (ambient.contains("projective")) {
      if (!ambient.at("projective").is_boolean()) throw InputError("'projective' must be a boolean");
      m.projective = ambient.at("projective").get<bool>();
    }
  } else if (kind == "polydiagonal") {
    m.kind = ModelKind::polydiagonal;
    m.n = int_field(ambient, "n");
    m.m = ambient.contains("m") ? parse_m(ambient.at("m")) : DimMultiplier::symbolic();
  } else if (kind == "anchored") {
    m.kind = ModelKind::anchored;
    m.n = int_field(ambient, "n");
    m.m = DimMultiplier::fixed(1);
  } else {
    throw InputError("unknown model '" + kind + "'");
  }
  return m;
}

json value_to_json(const ModelValue& v) {
  if (auto* s = std::get_if<Subspace>(&v)) {
    json rows = json::array();
    for (const auto& r : s->conormal()) {
      json row = json::array();
      for (const auto& x : r) row.push_back(x.to_string());
      rows.push_back(row);
    }
    return {{"conormal", rows}};
  }
  if (auto* p = std::get_if<Polydiagonal>(&v)) return {{"blocks", p->blocks()}};
  const auto& a = std::get<AnchoredPolydiagonal>(v);
  json blocks = json::array();
  for (const auto& b : a.blocks()) {
    json jb = {{"members", b.members}};
    if (b.anchor) jb["anchor"] = anchor_name(*b.anchor);
    blocks.push_back(jb);
  }
  return {{"blocks", blocks}};
}

ModelValue value_from_json(const ModelSpec& model, const json& j) {
  try {
    switch (model.kind) {
      case ModelKind::linear: {
        std::vector<RationalRow> rows;
        for (const auto& jr : j.at("conormal")) {
          RationalRow row;
          for (const auto& x : jr) row.push_back(parse_rational(x));
          rows.push_back(std::move(row));
        }
        return make_subspace(model.dim, rows);
      }
      case ModelKind::polydiagonal:
        return Polydiagonal(model.n, j.at("blocks").get<std::vector<Block>>());
      case ModelKind::anchored: {
        std::vector<AnchoredBlock> blocks;
        for (const auto& jb : j.at("blocks")) {
          AnchoredBlock b{jb.at("members").get<Block>(), std::nullopt};
          if (jb.contains("anchor")) b.anchor = parse_anchor(jb.at("anchor").get<std::string>());
          blocks.push_back(std::move(b));
        }
        return AnchoredPolydiagonal(model.n, std::move(blocks));
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed element: ") + e.what());
  }
  throw InputError("unknown model");
}

json instance_to_json(const Instance& inst) {
  json j = model_to_json(inst.model);
  json elems = json::array();
  for (const auto& e : inst.elements) {
    json je = value_to_json(e.value);
    je["name"] = e.name;
    elems.push_back(je);
  }
  j["elements"] = elems;
  j["building"] = inst.names(inst.building);
  if (!inst.orders.empty()) {
    json orders = json::object();
    for (const auto& [k, ids] : inst.orders) orders[k] = inst.names(ids);
    j["orders"] = orders;
  }
  return j;
}

Instance instance_from_json(const json& j, std::optional<DimMultiplier> m_override) {
  try {
    if (!j.is_object() || !j.contains("model") || !j.contains("ambient"))
      throw InputError("arrangement JSON needs 'model' and 'ambient'");
    ModelSpec model = model_from_json(j.at("model").get<std::string>(), j.at("ambient"));
    if (m_override && model.kind == ModelKind::polydiagonal) model.m = *m_override;
    std::vector<NamedElement> elems;
    for (const auto& je : j.value("elements", json::array()))
      elems.push_back({je.at("name").get<std::string>(), value_from_json(model, je)});
    auto building = j.value("building", std::vector<std::string>{});
    if (j.contains("building") && building.empty() && !elems.empty())
      throw InputError("empty 'building' list; omit the key to use all elements");
    auto orders = j.value("orders", std::map<std::string, std::vector<std::string>>{});
    return make_instance(model, std::move(elems), building, orders);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed arrangement JSON: ") + e.what());
  }
}

LabeledGraph graph_from_json(const json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", json::array())) {
      auto pair = e.get<std::vector<int>>();
      if (pair.size() != 2) throw InputError("edges must be vertex pairs");
      edges.emplace_back(pair[0], pair[1]);
    }
    return LabeledGraph(int_field(j, "n"), edges);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
}

json graph_to_json(const LabeledGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", edges}};
}

}  // namespace wonder
