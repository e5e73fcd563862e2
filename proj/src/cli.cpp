#include "wonder/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wonder/arrangement.hpp"
#include "wonder/blowup.hpp"
#include "wonder/errors.hpp"
#include "wonder/instance.hpp"
#include "wonder/nests.hpp"

namespace wonder::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::size_t max_elements = kDefaultMaxElements;
  std::size_t max_subsets = kDefaultMaxSubsets;
  std::string m;
  // gen
  std::string family;
  int n = 0;
  std::string graph;
  std::uint64_t seed = 1;
  // factors
  std::vector<std::string> of;
  std::string center;
  // nests
  bool count = false;
  bool list = false;
  std::size_t max_size = 0;
  // orders
  std::string order;
  std::string strategy = "ascending_dim";
  std::string trace;
};

// Result of a command: exit status plus the document to print.
struct Outcome {
  int status = kOk;
  std::string text;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::optional<DimMultiplier> parse_m_flag(const std::string& m) {
  if (m.empty()) return std::nullopt;
  if (m == "m") return DimMultiplier::symbolic();
  try {
    std::size_t pos = 0;
    long long v = std::stoll(m, &pos);
    if (pos == m.size()) return DimMultiplier::fixed(v);
  } catch (const std::logic_error&) {
  }
  throw InputError("--m must be 'm' or a positive integer");
}

Instance load(const Options& o) {
  if (o.input.empty()) throw InputError("an input file is required");
  return instance_from_json(read_json_file(o.input), parse_m_flag(o.m));
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Covering relations of a finite poset given by a strict order predicate.
template <class Less>
std::vector<std::pair<std::size_t, std::size_t>> hasse(std::size_t n, Less less) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!less(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n && covered; ++c)
        if (less(a, c) && less(c, b)) covered = false;
      if (covered) out.emplace_back(a, b);
    }
  return out;
}

std::vector<ElemId> resolve_order(const Instance& inst, const std::string& spec) {
  if (spec.empty() || spec == "building") return inst.building;
  if (auto it = inst.orders.find(spec); it != inst.orders.end()) return it->second;
  if (spec == "inclusion") return suggest_order(*inst.space, inst.building, OrderStrategy::inclusion);
  if (spec == "ascending_dim") return suggest_order(*inst.space, inst.building, OrderStrategy::ascending_dim);
  if (std::filesystem::exists(spec)) {
    json j = read_json_file(spec);
    if (j.is_object() && j.contains("order")) j = j.at("order");
    if (!j.is_array()) throw InputError("order file must hold a JSON array of names");
    return inst.by_names(j.get<std::vector<std::string>>());
  }
  throw InputError("unknown order '" + spec + "'");
}

Outcome cmd_gen(const Options& o) {
  DimMultiplier m = parse_m_flag(o.m).value_or(DimMultiplier::symbolic());
  Instance inst;
  if (o.family == "fm") {
    inst = generate_fm(o.n, m);
  } else if (o.family == "ulyanov") {
    inst = generate_ulyanov(o.n, m);
  } else if (o.family == "kt") {
    if (o.graph.empty()) throw InputError("kt needs --graph FILE");
    inst = generate_kt(graph_from_json(read_json_file(o.graph)), m);
  } else if (o.family == "m0n") {
    inst = generate_m0n(o.n);
  } else if (o.family == "kapranov") {
    inst = generate_kapranov(o.n, o.seed);
  } else if (o.family == "dp") {
    inst = load(o);
    if (inst.model.kind != ModelKind::linear) throw InputError("dp expects a linear-model input");
    if (!inst.orders.count("ascending"))
      inst.orders["ascending"] = suggest_order(*inst.space, inst.building, OrderStrategy::ascending_dim);
  } else {
    throw InputError("unknown family '" + o.family + "'");
  }
  return {kOk, dump(instance_to_json(inst))};
}

Outcome cmd_validate(const Options& o) {
  Instance inst = load(o);
  const Space& sp = *inst.space;
  auto v = is_building_set(sp, inst.building, o.max_elements);
  Outcome out{v.ok ? kOk : kFalse, {}};
  if (o.format == "dot") {
    std::ostringstream s;
    s << "digraph arrangement {\n  rankdir=BT;\n";
    for (ElemId e : v.arrangement) {
      bool member = std::find(inst.building.begin(), inst.building.end(), e) != inst.building.end();
      s << "  " << dot_quote(sp.name(e)) << (member ? " [shape=box]" : "") << ";\n";
    }
    auto less = [&](std::size_t a, std::size_t b) {
      return a != b && sp.contains(v.arrangement[b], v.arrangement[a]);
    };
    for (auto [a, b] : hasse(v.arrangement.size(), less))
      s << "  " << dot_quote(sp.name(v.arrangement[a])) << " -> " << dot_quote(sp.name(v.arrangement[b])) << ";\n";
    s << "}\n";
    out.text = s.str();
  } else if (o.format == "text") {
    out.text = v.ok ? "building set: yes (" + std::to_string(v.arrangement.size()) + " arrangement elements)\n"
                    : "building set: no, witness " + v.reason + "\n";
  } else {
    json j = {{"building_set", v.ok}, {"arrangement", inst.names(v.arrangement)}};
    if (!v.ok) {
      j["witness"] = sp.name(*v.witness);
      j["reason"] = v.reason;
    }
    out.text = dump(j);
  }
  return out;
}

Outcome cmd_factors(const Options& o) {
  Instance inst = load(o);
  const Space& sp = *inst.space;
  if (o.of.empty()) throw InputError("--of needs at least one element name");
  MaybeElem s = intersect_all(sp, inst.by_names(o.of));
  if (!s) throw InputError("the listed elements do not meet");
  json j = {{"element", sp.name(*s)}, {"factors", sorted(inst.names(g_factors(sp, inst.building, *s)))}};
  if (!o.center.empty()) {
    auto f = f_factorization(sp, inst.building, *s, inst.by_name(o.center));
    auto nm = [&](ElemId e) { return e == kAmbient ? std::string("AMBIENT") : sp.name(e); };
    j["f_factorization"] = {{"F", o.center}, {"A", nm(f.a)}, {"B", nm(f.b)}};
  }
  return {kOk, dump(j)};
}

Outcome cmd_nests(const Options& o) {
  Instance inst = load(o);
  const Space& sp = *inst.space;
  std::optional<std::size_t> cap;
  if (o.max_size > 0) cap = o.max_size;
  auto nests = enumerate_nests(sp, inst.building, cap, o.max_subsets);
  std::vector<std::vector<std::string>> named;
  for (const auto& t : nests) named.push_back(sorted(inst.names(t)));
  std::sort(named.begin(), named.end());
  if (o.format == "dot") {
    auto label = [](const std::vector<std::string>& t) {
      std::string s = "{";
      for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + t[i];
      return s + "}";
    };
    std::ostringstream s;
    s << "digraph nests {\n  rankdir=BT;\n";
    for (const auto& t : named) s << "  " << dot_quote(label(t)) << ";\n";
    for (const auto& a : named)
      for (const auto& b : named)
        if (b.size() == a.size() + 1 && std::includes(b.begin(), b.end(), a.begin(), a.end()))
          s << "  " << dot_quote(label(a)) << " -> " << dot_quote(label(b)) << ";\n";
    s << "}\n";
    return {kOk, s.str()};
  }
  if (o.list) return {kOk, dump(json(named))};
  return {kOk, dump(json{{"count", named.size()}})};
}

Outcome cmd_order_check(const Options& o) {
  Instance inst = load(o);
  auto order = resolve_order(inst, o.order);
  auto v = check_star_order(*inst.space, order, o.max_elements);
  json j = {{"valid", v.ok}, {"order", inst.names(order)}};
  if (!v.ok) {
    j["failing_prefix"] = *v.failing_prefix;
    j["witness"] = inst.space->name(*v.witness);
  }
  return {v.ok ? kOk : kFalse, dump(j)};
}

Outcome cmd_order_suggest(const Options& o) {
  Instance inst = load(o);
  OrderStrategy s;
  if (o.strategy == "inclusion")
    s = OrderStrategy::inclusion;
  else if (o.strategy == "ascending_dim")
    s = OrderStrategy::ascending_dim;
  else
    throw InputError("--strategy must be inclusion or ascending_dim");
  return {kOk, dump(json{{"order", inst.names(suggest_order(*inst.space, inst.building, s))}})};
}

json table_json(const DivisorTable& t) {
  json rows = json::array();
  for (std::uint64_t mask : t.nonempty) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < t.divisors.size(); ++i)
      if (mask >> i & 1) names.push_back(t.divisors[i]);
    rows.push_back(sorted(names));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

Outcome cmd_run(const Options& o) {
  Instance inst = load(o);
  auto order = resolve_order(inst, o.order);
  RunOptions ro;
  ro.max_elements = o.max_elements;
  auto trace = run_sequence(inst.space, order, ro);
  json steps = json::array();
  for (const auto& r : trace.steps)
    steps.push_back({{"j", r.step},
                     {"center", r.center},
                     {"dim", r.dim.to_string()},
                     {"dim_closed_form", r.dim_closed_form.to_string()},
                     {"codim", r.codim.to_string()}});
  auto table = divisor_intersection_table(trace.final_state, o.max_subsets);
  json divisors = json::array();
  for (std::size_t i = 0; i < table.divisors.size(); ++i)
    divisors.push_back({{"name", table.divisors[i]}, {"codim", table.codims[i].to_string()}});
  json j = {{"steps", steps}, {"divisors", divisors}, {"nest_table", table_json(table)}};
  if (!o.trace.empty()) {
    std::ofstream f(o.trace);
    if (!f) throw InputError("cannot write '" + o.trace + "'");
    f << dump(j);
  }
  return {kOk, dump(j)};
}

Outcome cmd_divisor_table(const Options& o) {
  Instance inst = load(o);
  auto order = resolve_order(inst, o.order);
  auto trace = run_sequence(inst.space, order, RunOptions{true, o.max_elements});
  auto table = divisor_intersection_table(trace.final_state, o.max_subsets);
  std::vector<std::vector<std::string>> nests;
  for (const auto& t : enumerate_nests(*inst.space, inst.building, {}, o.max_subsets))
    nests.push_back(sorted(inst.names(t)));
  std::sort(nests.begin(), nests.end());
  json rows = table_json(table);
  bool matches = rows == json(nests);
  json j = {{"divisors", table.divisors},
            {"nonempty", rows},
            {"codim_additive", table.codim_additive},
            {"matches_nests", matches}};
  return {matches && table.codim_additive ? kOk : kFalse, dump(j)};
}

Outcome cmd_minimal(const Options& o) {
  Instance inst = load(o);
  auto arrangement = close_intersections(*inst.space, inst.ids, o.max_elements);
  auto gmin = irreducible_elements(*inst.space, arrangement, o.max_elements == kDefaultMaxElements
                                                                 ? kDefaultIrreducibleCap
                                                                 : o.max_elements);
  json j = {{"minimal_building_set", inst.names(gmin)}, {"arrangement_size", arrangement.size()}};
  return {kOk, dump(j)};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"wonderful compactification toolkit"};
  app.require_subcommand(1);
  auto common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) sub->add_option("input", o.input, "arrangement JSON file")->required();
    sub->add_option("-o,--output", o.output, "write the result here instead of stdout");
    sub->add_option("--max-elements", o.max_elements, "cap on induced arrangement size")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-subsets", o.max_subsets, "cap on enumerated subsets")->check(CLI::PositiveNumber);
    sub->add_option("--m", o.m, "dim X: 'm' (symbolic) or a positive integer");
  };
  auto* gen = app.add_subcommand("gen", "emit a building set for a family");
  gen->add_option("family", o.family, "fm | ulyanov | kt | m0n | kapranov | dp")
      ->required()
      ->check(CLI::IsMember({"fm", "ulyanov", "kt", "m0n", "kapranov", "dp"}));
  gen->add_option("--n", o.n, "number of points");
  gen->add_option("--graph", o.graph, "graph JSON for kt");
  gen->add_option("--input", o.input, "linear arrangement JSON for dp");
  gen->add_option("--seed", o.seed, "seed for kapranov points");
  common(gen, false);
  auto* validate = app.add_subcommand("validate", "check the building-set property");
  common(validate);
  validate->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot", "text"}));
  auto* factors = app.add_subcommand("factors", "G-factors and F-factorization");
  common(factors);
  factors->add_option("--of", o.of, "elements whose intersection is factored")->required()->delimiter(',');
  factors->add_option("--center", o.center, "minimal member F for the F-factorization");
  auto* nests = app.add_subcommand("nests", "count or list nests");
  common(nests);
  auto* count_flag = nests->add_flag("--count", o.count);
  auto* list_flag = nests->add_flag("--list", o.list);
  count_flag->excludes(list_flag);
  nests->add_option("--max-size", o.max_size)->check(CLI::PositiveNumber);
  nests->add_option("--format", o.format)->check(CLI::IsMember({"json", "dot"}));
  auto* order_check = app.add_subcommand("order-check", "check condition (*) on an order");
  common(order_check);
  order_check->add_option("--order", o.order, "order name, strategy or JSON file");
  auto* order_suggest = app.add_subcommand("order-suggest", "suggest a valid order");
  common(order_suggest);
  order_suggest->add_option("--strategy", o.strategy)->check(CLI::IsMember({"inclusion", "ascending_dim"}));
  auto* run = app.add_subcommand("run", "run the blow-up sequence");
  common(run);
  run->add_option("--order", o.order, "order name, strategy or JSON file");
  run->add_option("--trace", o.trace, "also write the trace JSON here");
  auto* table = app.add_subcommand("divisor-table", "divisor intersections after the run");
  common(table);
  table->add_option("--order", o.order, "order name, strategy or JSON file");
  auto* minimal = app.add_subcommand("minimal-building-set", "irreducible elements of the arrangement");
  common(minimal);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    Outcome result;
    if (*gen) result = cmd_gen(o);
    else if (*validate) result = cmd_validate(o);
    else if (*factors) result = cmd_factors(o);
    else if (*nests) result = cmd_nests(o);
    else if (*order_check) result = cmd_order_check(o);
    else if (*order_suggest) result = cmd_order_suggest(o);
    else if (*run) result = cmd_run(o);
    else if (*table) result = cmd_divisor_table(o);
    else result = cmd_minimal(o);
    if (o.output.empty()) {
      out << result.text;
    } else {
      std::ofstream f(o.output);
      if (!f) throw InputError("cannot write '" + o.output + "'");
      f << result.text;
    }
    return result.status;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace wonder::cli
