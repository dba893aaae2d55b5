#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arbor/catalog.hpp"
#include "arbor/cyclotomic.hpp"
#include "arbor/experiments.hpp"
#include "arbor/reproduce.hpp"

using namespace arbor;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_falsified = 2;

struct Options {
  std::string input;
  std::string output;
  std::string vertex;
  std::string method = "matrix-tree";
  std::string kind = "voltage";
  std::string group = "mixed";
  std::uint64_t seed = 1;
  std::size_t trials = 10'000;
  std::size_t max_n = 4;
  std::size_t max_k = 4;
  std::size_t sheets = 2;
  bool deck = false;
};

class Falsified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

VoltageGraph load_graph(const Options& opt) {
  if (opt.input.empty()) throw SchemaError("--input is required");
  std::ifstream in(opt.input);
  if (!in) throw SchemaError("cannot read " + opt.input);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  return parse_graph(std::string_view(text));
}

std::size_t resolve_vertex(const VoltageGraph& g, const std::string& spec) {
  if (spec.empty()) return 0;
  if (auto v = g.find_vertex(spec)) return *v;
  std::size_t pos = 0;
  unsigned long idx = 0;
  try {
    idx = std::stoul(spec, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != spec.size() || idx >= g.vertex_count()) throw IndexOutOfRange("no vertex \"" + spec + "\"");
  return idx;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw SchemaError("cannot write " + opt.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

json poly_json(const IntPoly& p, const VarNames& names) { return to_string(p, names); }

int run_cover(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const CoverGraph c = build_cover(g);
  json doc = serialize_cover(c);
  if (opt.deck) {
    doc["deck_group_order"] = deck_group(c).size();
    doc["regular"] = is_regular_cover(c);
  }
  emit(opt, doc.dump(2));
  return exit_ok;
}

int run_laplacian(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const VarNames& names = g.names();
  if (opt.kind == "plain") {
    emit(opt, to_string(laplacian(g), names));
  } else if (opt.kind == "voltage") {
    const auto L = voltage_laplacian(g);
    std::string out;
    for (std::size_t r = 0; r < L.size(); ++r) {
      for (std::size_t c = 0; c < L.size(); ++c) out += (c ? "  |  " : "") + to_string(L(r, c), names);
      out += '\n';
    }
    emit(opt, out);
  } else if (opt.kind == "restricted") {
    emit(opt, to_string(restricted_voltage_laplacian(g), names));
  } else if (opt.kind == "representation") {
    emit(opt, to_string(restricted_via_representation(g), names));
  } else if (opt.kind == "cover") {
    emit(opt, to_string(laplacian(as_plain_graph(build_cover(g))), names));
  } else if (opt.kind == "triangular") {
    emit(opt, to_string(triangularize(build_cover(g)).U, names));
  } else {
    throw std::invalid_argument("unknown --kind " + opt.kind);
  }
  return exit_ok;
}

int run_arbor(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const std::size_t root = resolve_vertex(g, opt.vertex);
  std::string out;
  IntPoly mt, bf;
  const bool want_mt = opt.method == "matrix-tree" || opt.method == "both";
  const bool want_bf = opt.method == "brute-force" || opt.method == "both";
  if (!want_mt && !want_bf) throw std::invalid_argument("unknown --method " + opt.method);
  if (want_mt) {
    mt = arborescence_polynomial(g, root, ArborMethod::matrix_tree);
    out += to_string(mt, g.names()) + '\n';
  }
  if (want_bf) {
    bf = arborescence_polynomial(g, root, ArborMethod::brute_force);
    out += to_string(bf, g.names()) + '\n';
  }
  emit(opt, out);
  if (want_mt && want_bf && !(mt == bf)) throw Falsified("matrix-tree and enumeration disagree");
  return exit_ok;
}

int run_ratio(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const std::size_t v = resolve_vertex(g, opt.vertex);
  const RatioReport r = ratio_report(g, v);
  const VarNames& n = g.names();
  json doc = {{"vertex", g.label(v)},
              {"k", r.k},
              {"A_base", poly_json(r.A_base, n)},
              {"A_cover", poly_json(r.A_cover, n)},
              {"det", poly_json(r.det, n)},
              {"rhs", poly_json(r.rhs, n)},
              {"ratio", r.ratio ? json(to_string(*r.ratio, n)) : json(nullptr)},
              {"theorem_holds", r.theorem_holds}};
  emit(opt, doc.dump(2));
  return r.theorem_holds ? exit_ok : exit_falsified;
}

int run_invariance(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const InvarianceReport r = invariance_report(g);
  json lifts = json::array();
  for (const auto& l : r.lifts) {
    lifts.push_back({{"vertex", g.label(l.vertex)},
                     {"sheet", l.sheet + 1},
                     {"A_cover", to_string(l.A_cover, g.names())},
                     {"ratio", l.ratio ? json(to_string(*l.ratio, g.names())) : json(nullptr)}});
  }
  json doc = {{"strongly_connected", r.strongly_connected},
              {"simple", r.simple},
              {"all_equal", r.all_equal},
              {"lifts", lifts}};
  if (!r.warning.empty()) {
    doc["warning"] = r.warning;
    std::cerr << "warning: " << r.warning << '\n';
  }
  emit(opt, doc.dump(2));
  const bool hypotheses = r.strongly_connected && r.simple;
  return hypotheses && !r.all_equal ? exit_falsified : exit_ok;
}

int run_vf(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  json fields = json::array();
  for (const auto& f : enumerate_vector_fields(g)) {
    json cycles = json::array();
    for (const auto& c : f.cycles) {
      json edges = json::array();
      for (auto id : c) edges.push_back(g.names().name(g.edge(id).weight));
      json jc = {{"edges", edges}};
      if (g.has_group() && g.group()->is_abelian()) jc["voltage"] = g.group()->label(cycle_voltage(g, c));
      cycles.push_back(std::move(jc));
    }
    fields.push_back({{"weight", to_string(vector_field_weight(g, f), g.names())}, {"cycles", cycles}});
  }
  json doc = {{"vector_fields", fields}};
  if (g.has_group() && g.group()->is_abelian()) {
    const ReducedGA w = omega(g);
    const ReducedGA det = det_group_algebra(voltage_laplacian(g));
    doc["omega"] = to_string(w, g.names());
    doc["det_voltage_laplacian"] = to_string(det, g.names());
    doc["equal"] = w == det;
    emit(opt, doc.dump(2));
    return w == det ? exit_ok : exit_falsified;
  }
  emit(opt, doc.dump(2));
  return exit_ok;
}

int run_norm(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const ReducedGA det = det_group_algebra(voltage_laplacian(g));
  const Cyclotomic z = embed(det);
  const IntPoly norm = field_norm(z);
  const IntPoly restricted = det_fraction_free(restricted_voltage_laplacian(g));
  json doc = {{"det_voltage_laplacian", to_string(z, g.names())},
              {"field_norm", to_string(norm, g.names())},
              {"det_restricted", to_string(restricted, g.names())},
              {"equal", norm == restricted}};
  emit(opt, doc.dump(2));
  return norm == restricted ? exit_ok : exit_falsified;
}

int run_positivity(const Options& opt) {
  PositivityConfig cfg;
  cfg.seed = opt.seed;
  cfg.trials = opt.trials;
  cfg.max_n = opt.max_n;
  cfg.max_k = opt.max_k;
  if (opt.group != "mixed") cfg.families = {opt.group};
  const PositivityReport r = positivity_scan(cfg);
  json doc = r.to_json();
  doc["config"] = {{"seed", cfg.seed},      {"trials", cfg.trials}, {"max_n", cfg.max_n},
                   {"max_k", cfg.max_k},    {"max_edges", cfg.max_edges}, {"families", cfg.families},
                   {"generator", "mt19937_64 seeded by splitmix64(seed, index)"}};
  emit(opt, doc.dump(2));
  return exit_ok;
}

int run_expectation(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const std::size_t root = resolve_vertex(g, opt.vertex);
  const ExpectationRecord r = expectation_check_exhaustive(g, opt.sheets, root);
  json doc = {{"k", r.k},
              {"assignments", r.assignments.get_str()},
              {"mean_ratio", r.mean(g.names())},
              {"formula", r.formula(g.names())},
              {"equal", r.equal}};
  emit(opt, doc.dump(2));
  return exit_ok;
}

int run_euler(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const EulerRecord r = euler_ratio(g, build_cover(g));
  auto opt_int = [](const std::optional<Integer>& x) { return x ? json(x->get_str()) : json(nullptr); };
  json doc = {{"E_base", r.E_base.get_str()},
              {"E_cover", r.E_cover.get_str()},
              {"ratio", r.ratio_integral ? json(r.ratio.get_str()) : json(nullptr)},
              {"formula_value", r.formula_integral ? json(r.formula_value.get_str()) : json(nullptr)},
              {"brute_force_base", opt_int(r.brute_base)},
              {"brute_force_cover", opt_int(r.brute_cover)},
              {"consistent", r.consistent}};
  emit(opt, doc.dump(2));
  return r.consistent ? exit_ok : exit_falsified;
}

int run_vftuple(const Options& opt) {
  const VoltageGraph g = load_graph(opt);
  const VfTupleReport r = vf_tuple_report(g);
  const auto fields = enumerate_vector_fields(g);
  json entries = json::array();
  for (const auto& e : r.entries) {
    json tuple = json::array();
    for (auto i : e.fields) tuple.push_back(to_string(vector_field_weight(g, fields[i]), g.names()));
    entries.push_back({{"vector_fields", tuple}, {"f", e.f.get_str()}});
  }
  json doc = {{"k", r.k},
              {"ratio", to_string(r.ratio, g.names())},
              {"vector_field_count", r.vector_fields},
              {"success", r.success},
              {"coefficients", entries}};
  if (!r.reason.empty()) doc["reason"] = r.reason;
  emit(opt, doc.dump(2));
  return exit_ok;
}

int run_reproduce(const Options& opt) {
  std::string out;
  bool all = true;
  for (const auto& c : reproduce_examples()) {
    out += (c.passed ? "PASS  " : "FAIL  ") + c.name + (c.passed ? "" : "  (" + c.detail + ")") + '\n';
    all = all && c.passed;
  }
  emit(opt, out);
  return all ? exit_ok : exit_falsified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arborescence ratios of voltage graph covers"};
  app.require_subcommand(1);
  Options opt;

  auto input = [&](CLI::App* sub) { sub->add_option("--input,-i", opt.input, "graph JSON")->required(); };
  auto output = [&](CLI::App* sub) { sub->add_option("--output,-o", opt.output, "write result here instead of stdout"); };
  auto vertex = [&](CLI::App* sub) {
    sub->add_option("--vertex,--root,-v", opt.vertex, "vertex label or 0-based index (default: first vertex)");
  };

  auto* cover = app.add_subcommand("cover", "derived or permutation cover as JSON with projection table");
  input(cover);
  output(cover);
  cover->add_flag("--deck", opt.deck, "also report deck group order and regularity");

  auto* lap = app.add_subcommand("laplacian", "print a Laplacian-type matrix");
  input(lap);
  output(lap);
  lap->add_option("--kind", opt.kind, "plain | voltage | restricted | representation | cover | triangular")
      ->capture_default_str();

  auto* arbor = app.add_subcommand("arbor", "arborescence polynomial at a root");
  input(arbor);
  output(arbor);
  vertex(arbor);
  arbor->add_option("--method", opt.method, "matrix-tree | brute-force | both")->capture_default_str();

  auto* ratio = app.add_subcommand("ratio", "cover/base arborescence ratio against the restricted determinant");
  input(ratio);
  output(ratio);
  vertex(ratio);

  auto* inv = app.add_subcommand("invariance", "ratio at every vertex and lift");
  input(inv);
  output(inv);

  auto* vf = app.add_subcommand("vf", "vector fields, cycle voltages and their determinant expansion");
  input(vf);
  output(vf);

  auto* norm = app.add_subcommand("norm", "cyclotomic norm of the voltage determinant (prime cyclic groups)");
  input(norm);
  output(norm);

  auto* exp = app.add_subcommand("experiment", "randomized and exhaustive experiments");
  exp->require_subcommand(1);
  auto* pos = exp->add_subcommand("positivity", "random scan for negative ratio coefficients");
  output(pos);
  pos->add_option("--seed", opt.seed)->capture_default_str();
  pos->add_option("--trials", opt.trials)->capture_default_str();
  pos->add_option("--max-n", opt.max_n)->capture_default_str();
  pos->add_option("--max-k", opt.max_k)->capture_default_str();
  pos->add_option("--group", opt.group, "mixed | z2 | z3 | z4 | z5 | z2xz2 | s3 | perm2 | perm3 | perm4")
      ->capture_default_str();
  auto* expct = exp->add_subcommand("expectation", "exhaustive mean ratio over permutation voltages");
  input(expct);
  output(expct);
  vertex(expct);
  expct->add_option("--sheets,-k", opt.sheets)->capture_default_str();
  auto* euler = exp->add_subcommand("euler", "Euler circuit counts of a base graph and its cover");
  input(euler);
  output(euler);
  auto* vft = exp->add_subcommand("vftuple", "ratio as a combination of vector-field tuples");
  input(vft);
  output(vft);

  auto* repro = app.add_subcommand("reproduce", "check the worked examples");
  output(repro);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cover) return run_cover(opt);
    if (*lap) return run_laplacian(opt);
    if (*arbor) return run_arbor(opt);
    if (*ratio) return run_ratio(opt);
    if (*inv) return run_invariance(opt);
    if (*vf) return run_vf(opt);
    if (*norm) return run_norm(opt);
    if (*pos) return run_positivity(opt);
    if (*expct) return run_expectation(opt);
    if (*euler) return run_euler(opt);
    if (*vft) return run_vftuple(opt);
    if (*repro) return run_reproduce(opt);
  } catch (const Falsified& err) {
    std::cerr << "identity failed: " << err.what() << '\n';
    return exit_falsified;
  } catch (const NotDivisible& err) {
    std::cerr << "identity failed: " << err.what() << '\n';
    return exit_falsified;
  } catch (const std::logic_error& err) {
    // ConsistencyError, BlockMismatch and NormNotRational; invalid_argument
    // and out_of_range are validation errors.
    if (dynamic_cast<const std::invalid_argument*>(&err) || dynamic_cast<const std::out_of_range*>(&err) ||
        dynamic_cast<const std::domain_error*>(&err)) {
      std::cerr << "error: " << err.what() << '\n';
      return exit_invalid;
    }
    std::cerr << "identity failed: " << err.what() << '\n';
    return exit_falsified;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return exit_invalid;
  }
  return exit_invalid;
}
