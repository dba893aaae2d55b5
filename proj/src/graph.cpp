#include "arbor/graph.hpp"

#include <algorithm>

#include "arbor/errors.hpp"

namespace arbor {

using nlohmann::json;

VoltageGraph::VoltageGraph() : context_(SheetCount{1}) {}

VoltageGraph::VoltageGraph(VoltageContext context) : context_(std::move(context)) {
  if (auto* g = std::get_if<GroupPtr>(&context_)) {
    if (!*g) throw std::invalid_argument("null voltage group");
  } else if (std::get<SheetCount>(context_).k == 0) {
    throw std::invalid_argument("sheet count must be positive");
  }
}

std::size_t VoltageGraph::add_vertex(std::string label) {
  labels_.push_back(std::move(label));
  out_.emplace_back();
  in_.emplace_back();
  return labels_.size() - 1;
}

void VoltageGraph::check_vertex(std::size_t v) const {
  if (v >= labels_.size()) throw DanglingVertexIndex("edge endpoint " + std::to_string(v) + " is not a vertex");
}

std::size_t VoltageGraph::add_edge(std::size_t source, std::size_t target, std::string_view weight_name,
                                   Voltage voltage) {
  if (auto id = names_.find(weight_name); id && *id < weight_used_.size() && weight_used_[*id]) {
    throw DuplicateWeightName("weight name '" + std::string(weight_name) + "' is used twice");
  }
  check_vertex(source);
  check_vertex(target);
  return add_edge_with_weight(source, target, names_.intern(weight_name), std::move(voltage));
}

std::size_t VoltageGraph::add_edge(std::size_t source, std::size_t target, std::string_view weight_name) {
  return add_edge(source, target, weight_name, identity_voltage());
}

std::size_t VoltageGraph::add_edge_with_weight(std::size_t source, std::size_t target, VarId weight,
                                               Voltage voltage) {
  check_vertex(source);
  check_vertex(target);
  check_voltage(voltage);
  if (weight >= weight_used_.size()) weight_used_.resize(weight + 1, false);
  if (weight_used_[weight]) shared_weights_ = true;
  weight_used_[weight] = true;
  const std::size_t id = edges_.size();
  edges_.push_back(Edge{id, source, target, weight, std::move(voltage)});
  out_[source].push_back(id);
  in_[target].push_back(id);
  return id;
}

Vertex VoltageGraph::vertex(std::size_t index) const {
  if (index >= labels_.size()) throw IndexOutOfRange("vertex index out of range");
  return Vertex{index, labels_[index]};
}

std::optional<std::size_t> VoltageGraph::find_vertex(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

const GroupPtr& VoltageGraph::group() const {
  if (!has_group()) throw VoltageKindMismatch("graph carries permutation voltages, not group voltages");
  return std::get<GroupPtr>(context_);
}

std::size_t VoltageGraph::sheet_count() const noexcept {
  if (auto* g = std::get_if<GroupPtr>(&context_)) return (*g)->order();
  return std::get<SheetCount>(context_).k;
}

Permutation VoltageGraph::sheet_permutation(std::size_t edge_id) const {
  const Voltage& v = edge(edge_id).voltage;
  if (auto* p = std::get_if<Permutation>(&v)) return *p;
  const FiniteGroup& G = *group();
  const auto g = std::get<FiniteGroup::Element>(v);
  Permutation out(G.order());
  for (FiniteGroup::Element x = 0; x < G.order(); ++x) out[x] = G.mul(g, x);
  return out;
}

Voltage VoltageGraph::identity_voltage() const {
  if (has_group()) return FiniteGroup::identity();
  Permutation id(sheet_count());
  for (std::uint32_t i = 0; i < id.size(); ++i) id[i] = i;
  return id;
}

void VoltageGraph::check_voltage(const Voltage& v) const {
  if (has_group()) {
    const auto* g = std::get_if<FiniteGroup::Element>(&v);
    if (!g) throw VoltageKindMismatch("permutation voltage on a group-volted graph");
    if (!group()->contains(*g)) throw VoltageKindMismatch("voltage is not a group element");
    return;
  }
  const auto* p = std::get_if<Permutation>(&v);
  if (!p) throw VoltageKindMismatch("group voltage on a permutation-volted graph");
  if (p->size() != sheet_count()) throw VoltageKindMismatch("permutation voltage has the wrong number of sheets");
  std::vector<bool> seen(p->size());
  for (auto x : *p) {
    if (x >= p->size() || seen[x]) throw VoltageKindMismatch("voltage is not a permutation");
    seen[x] = true;
  }
}

void VoltageGraph::set_voltage(std::size_t edge_id, Voltage voltage) {
  check_voltage(voltage);
  edges_.at(edge_id).voltage = std::move(voltage);
}

VoltageGraph to_permutation_voltages(const VoltageGraph& g) {
  VoltageGraph out(SheetCount{g.sheet_count()});
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.label(v));
  out.set_names(g.names());
  for (const Edge& e : g.edges()) out.add_edge_with_weight(e.source, e.target, e.weight, g.sheet_permutation(e.id));
  return out;
}

VoltageGraph underlying_graph(const VoltageGraph& g) {
  VoltageGraph out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.label(v));
  out.set_names(g.names());
  for (const Edge& e : g.edges()) out.add_edge_with_weight(e.source, e.target, e.weight, Permutation{0});
  return out;
}

// ---------------------------------------------------------------- JSON

namespace {

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SchemaError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Permutation one_line(const json& j, std::size_t k) {
  if (!j.is_array()) throw VoltageKindMismatch("expected a one-line permutation array");
  Permutation p;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1 || x.get<std::size_t>() > k) {
      throw VoltageKindMismatch("permutation entries must lie in 1..k");
    }
    p.push_back(x.get<std::uint32_t>() - 1);
  }
  return p;
}

json one_line_json(const Permutation& p) {
  json arr = json::array();
  for (auto x : p) arr.push_back(x + 1);
  return arr;
}

std::size_t endpoint(const json& j, const VoltageGraph& g, const char* what) {
  if (j.is_string()) {
    if (auto v = g.find_vertex(j.get<std::string>())) return *v;
    throw DanglingVertexIndex(std::string(what) + " label \"" + j.get<std::string>() + "\" is not a vertex");
  }
  const std::size_t v = as_index(j, what);
  if (v >= g.vertex_count()) throw DanglingVertexIndex(std::string(what) + " index " + std::to_string(v) + " is not a vertex");
  return v;
}

}  // namespace

GroupPtr parse_group(const json& spec) {
  if (!spec.is_object()) throw SchemaError("group must be an object");
  const std::string type = require(spec, "type").get<std::string>();
  if (type == "cyclic") return FiniteGroup::cyclic(as_index(require(spec, "order"), "order"));
  if (type == "symmetric") return FiniteGroup::symmetric(as_index(require(spec, "degree"), "degree"));
  if (type == "table") {
    const json& mul = require(spec, "mul");
    if (!mul.is_array()) throw SchemaError("table \"mul\" must be an array of rows");
    std::vector<std::vector<FiniteGroup::Element>> rows;
    for (const auto& row : mul) {
      if (!row.is_array()) throw SchemaError("table rows must be arrays");
      auto& r = rows.emplace_back();
      for (const auto& x : row) r.push_back(static_cast<FiniteGroup::Element>(as_index(x, "table entry")));
    }
    return FiniteGroup::from_table(std::move(rows));
  }
  throw SchemaError("unknown group type \"" + type + "\"");
}

json serialize_group(const FiniteGroup& group) {
  switch (group.kind()) {
    case GroupKind::cyclic:
      return {{"type", "cyclic"}, {"order", group.order()}};
    case GroupKind::symmetric:
      return {{"type", "symmetric"}, {"degree", group.parameter()}};
    case GroupKind::table:
      break;
  }
  return {{"type", "table"}, {"mul", group.table()}};
}

json voltage_to_json(const VoltageGraph& g, const Voltage& v) {
  if (auto* p = std::get_if<Permutation>(&v)) return one_line_json(*p);
  const auto x = std::get<FiniteGroup::Element>(v);
  if (g.group()->kind() == GroupKind::symmetric) {
    const auto images = g.group()->permutation(x);
    return one_line_json(Permutation(images.begin(), images.end()));
  }
  return x;
}

std::string voltage_label(const VoltageGraph& g, const Voltage& v) {
  if (auto* p = std::get_if<Permutation>(&v)) {
    std::string s;
    for (auto x : *p) s += std::to_string(x + 1) + (p->size() > 9 ? "," : "");
    if (p->size() > 9) s.pop_back();
    return s;
  }
  return g.group()->label(std::get<FiniteGroup::Element>(v));
}

VoltageGraph parse_graph(const json& doc) {
  if (!doc.is_object()) throw SchemaError("graph document must be a JSON object");
  const bool has_group = doc.contains("group");
  const bool has_sheets = doc.contains("sheets");
  if (has_group && has_sheets) throw SchemaError("\"group\" and \"sheets\" are mutually exclusive");

  VoltageContext ctx = SheetCount{1};
  if (has_group) ctx = parse_group(doc["group"]);
  if (has_sheets) {
    const std::size_t k = as_index(doc["sheets"], "sheets");
    if (k == 0) throw SchemaError("sheets must be positive");
    ctx = SheetCount{k};
  }
  VoltageGraph g(ctx);

  const json& vertices = require(doc, "vertices");
  if (vertices.is_number_integer()) {
    const std::size_t n = as_index(vertices, "vertices");
    for (std::size_t i = 0; i < n; ++i) g.add_vertex(std::to_string(i + 1));
  } else if (vertices.is_array()) {
    for (const auto& v : vertices) {
      if (v.is_string()) {
        g.add_vertex(v.get<std::string>());
      } else if (v.is_object() && v.contains("label") && v["label"].is_string()) {
        g.add_vertex(v["label"].get<std::string>());
      } else {
        throw SchemaError("vertex entries must be labels");
      }
    }
  } else {
    throw SchemaError("\"vertices\" must be a count or an array of labels");
  }

  const bool allow_shared = doc.contains("projection");
  const json& edges = require(doc, "edges");
  if (!edges.is_array()) throw SchemaError("\"edges\" must be an array");
  for (const auto& e : edges) {
    if (!e.is_object()) throw SchemaError("edge entries must be objects");
    const std::size_t s = endpoint(require(e, "source"), g, "source");
    const std::size_t t = endpoint(require(e, "target"), g, "target");
    const json& w = require(e, "weight");
    if (!w.is_string() || w.get<std::string>().empty()) throw SchemaError("edge weight must be a nonempty name");
    const std::string name = w.get<std::string>();

    Voltage volt = g.identity_voltage();
    if (auto it = e.find("voltage"); it != e.end()) {
      if (g.has_group()) {
        if (g.group()->kind() == GroupKind::symmetric) {
          const Permutation p = one_line(*it, g.group()->parameter());
          auto x = g.group()->element_of_permutation(p);
          if (!x) throw VoltageKindMismatch("voltage is not a permutation of the right degree");
          volt = *x;
        } else {
          if (!it->is_number_integer()) throw VoltageKindMismatch("group voltage must be an element index");
          const long long raw = it->get<long long>();
          const auto order = static_cast<long long>(g.group()->order());
          if (g.group()->kind() == GroupKind::cyclic) {
            volt = static_cast<FiniteGroup::Element>(((raw % order) + order) % order);
          } else {
            if (raw < 0 || raw >= order) throw VoltageKindMismatch("voltage is not a group element");
            volt = static_cast<FiniteGroup::Element>(raw);
          }
        }
      } else {
        if (it->is_number_integer()) throw VoltageKindMismatch("permutation-volted graph needs one-line voltages");
        volt = one_line(*it, g.sheet_count());
      }
    }
    if (allow_shared) {
      g.add_edge_with_weight(s, t, g.names().intern(name), std::move(volt));
    } else {
      g.add_edge(s, t, name, std::move(volt));
    }
  }
  return g;
}

VoltageGraph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw SchemaError(std::string("invalid JSON: ") + err.what());
  }
  try {
    return parse_graph(doc);
  } catch (const json::type_error& err) {
    throw SchemaError(std::string("wrong JSON type: ") + err.what());
  }
}

json serialize_graph(const VoltageGraph& g) {
  json doc;
  json labels = json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  doc["vertices"] = labels;
  if (g.has_group()) {
    doc["group"] = serialize_group(*g.group());
  } else if (g.sheet_count() != 1) {
    doc["sheets"] = g.sheet_count();
  }
  const bool with_voltage = g.has_group() || g.sheet_count() != 1;
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json je = {{"source", e.source}, {"target", e.target}, {"weight", g.names().name(e.weight)}};
    if (with_voltage) je["voltage"] = voltage_to_json(g, e.voltage);
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  return doc;
}

}  // namespace arbor
