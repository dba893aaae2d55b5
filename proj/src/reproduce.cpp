#include "arbor/reproduce.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "arbor/catalog.hpp"
#include "arbor/cyclotomic.hpp"
#include "arbor/spanning.hpp"
#include "arbor/vecfield.hpp"

namespace arbor {

namespace {

const char* const nine_term_norm =
    "3*a^2*c^2*d^2 + 3*b^2*c^2*d^2 + 6*a*b*c^2*d^2 + 9*a^2*c^2*e^2 + 3*b^2*c^2*e^2 + 9*a*b*c^2*e^2 + "
    "9*a^2*c^2*d*e + 3*b^2*c^2*d*e + 12*a*b*c^2*d*e";

PolyMatrix poly_matrix(const std::vector<std::vector<const char*>>& rows, VarNames names) {
  PolyMatrix m(rows.size(), IntPoly{});
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = parse_poly(rows[r][c], names);
  return m;
}

// Coefficients of 1, g, g^2, ... as polynomial strings.
ReducedGA group_element(const GroupPtr& G, const std::vector<const char*>& coeffs, VarNames names) {
  std::vector<IntPoly> c;
  for (const char* s : coeffs) c.push_back(parse_poly(s, names));
  return ReducedGA::from_coefficients(G, std::move(c));
}

CheckResult check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
    if (r.passed) r.detail = "ok";
  } catch (const std::exception& err) {
    r.detail = std::string("exception: ") + err.what();
  }
  return r;
}

std::string compare(const IntPoly& got, const IntPoly& want, const VarNames& names) {
  if (got == want) return {};
  return "got " + to_string(got, names) + ", expected " + to_string(want, names);
}

std::string compare(const PolyMatrix& got, const PolyMatrix& want, const VarNames& names) {
  if (got.size() != want.size()) return "dimension mismatch";
  for (std::size_t r = 0; r < got.size(); ++r)
    for (std::size_t c = 0; c < got.size(); ++c)
      if (!(got(r, c) == want(r, c))) {
        return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): got " +
               to_string(got(r, c), names) + ", expected " + to_string(want(r, c), names);
      }
  return {};
}

}  // namespace

std::vector<CheckResult> reproduce_examples() {
  const VoltageGraph g = z3_triangle();
  const VarNames& names = g.names();
  const GroupPtr& G = g.group();
  std::vector<CheckResult> out;

  out.push_back(check("arborescences rooted at 2", [&]() -> std::string {
    const auto arbs = enumerate_arborescences(g, 1);
    std::set<std::vector<std::size_t>> sets;
    for (const auto& t : arbs) {
      auto e = t.edges();
      std::sort(e.begin(), e.end());
      sets.insert(e);
    }
    const std::set<std::vector<std::size_t>> want{{1, 3}, {1, 4}};
    if (sets != want) return "arborescence edge sets differ";
    VarNames n = names;
    const IntPoly expected = parse_poly("b*d + b*e", n);
    if (auto d = compare(arborescence_polynomial(g, 1, ArborMethod::brute_force), expected, names); !d.empty()) return d;
    return compare(arborescence_polynomial(g, 1, ArborMethod::matrix_tree), expected, names);
  }));

  out.push_back(check("Laplacian and matrix-tree minor", [&]() -> std::string {
    const PolyMatrix L = laplacian(g);
    if (auto d = compare(L, poly_matrix({{"b", "-b", "0"}, {"0", "c", "-c"}, {"-d", "-e", "d + e"}}, names), names);
        !d.empty())
      return d;
    const PolyMatrix minor = L.minor(1, 1);
    if (auto d = compare(minor, poly_matrix({{"b", "0"}, {"-d", "d + e"}}, names), names); !d.empty()) return d;
    VarNames n = names;
    return compare(det_fraction_free(minor), parse_poly("b*d + b*e", n), names);
  }));

  out.push_back(check("permutation cover is not regular", [&]() -> std::string {
    const CoverGraph c = build_cover(permuted_triangle());
    bool two_cycle = false, loop_on_second = false;
    const std::size_t v11 = c.vertex_index(0, 0), v12 = c.vertex_index(0, 1), v13 = c.vertex_index(0, 2);
    for (const auto& e : c.edges()) {
      if (e.source == v11 && e.target == v13) {
        for (const auto& f : c.edges())
          if (f.source == v13 && f.target == v11) two_cycle = true;
      }
      if (e.source == v12 && e.target == v12) loop_on_second = true;
    }
    if (!two_cycle) return "1^1 and 1^3 do not form a 2-cycle";
    if (!loop_on_second) return "1^2 has no loop";
    for (const auto& t : deck_group(c))
      if (t[v11] == v12) return "a deck transformation maps 1^1 to 1^2";
    if (is_regular_cover(c)) return "cover reported regular";
    return {};
  }));

  out.push_back(check("derived Z/3 cover", [&]() -> std::string {
    const CoverGraph c = build_cover(g);
    if (c.vertex_count() != 9 || c.edge_count() != 15) return "cover is not 9 vertices and 15 edges";
    std::set<std::pair<std::size_t, std::size_t>> lifts_of_a;
    for (const auto& e : c.edges())
      if (e.base_edge == 0) lifts_of_a.emplace(e.source, e.target);
    const std::set<std::pair<std::size_t, std::size_t>> want{{0, 3}, {3, 6}, {6, 0}};
    if (lifts_of_a != want) return "loop a does not lift to the 3-cycle 1^1 -> 1^g -> 1^g2";
    if (deck_group(c).size() != 3) return "deck group does not have order 3";
    if (!is_regular_cover(c)) return "cover reported non-regular";
    return {};
  }));

  out.push_back(check("voltage Laplacian over Z/3", [&]() -> std::string {
    const auto L = voltage_laplacian(g);
    const std::vector<std::vector<std::vector<const char*>>> want = {
        {{"a + b", "-a", "0"}, {"-b", "0", "0"}, {"0", "0", "0"}},
        {{"0", "0", "0"}, {"c", "0", "0"}, {"0", "0", "-c"}},
        {{"0", "0", "-d"}, {"-e", "0", "0"}, {"d + e", "0", "0"}},
    };
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        if (!(L(r, c) == group_element(G, want[r][c], names))) {
          return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is " + to_string(L(r, c), names);
        }
    return {};
  }));

  const PolyMatrix restricted_want = poly_matrix({{"a + b", "-b", "0", "-a", "0", "0"},
                                                  {"0", "c", "c", "0", "0", "c"},
                                                  {"d", "-e", "d + e", "d", "0", "0"},
                                                  {"a", "0", "0", "2*a + b", "-b", "0"},
                                                  {"0", "0", "-c", "0", "c", "0"},
                                                  {"-d", "0", "0", "0", "-e", "d + e"}},
                                                 names);
  VarNames scratch = names;
  const IntPoly norm_want = parse_poly(nine_term_norm, scratch);

  out.push_back(check("restriction of scalars to Z[E]", [&]() -> std::string {
    const PolyMatrix R = restricted_voltage_laplacian(g);
    if (auto d = compare(R, restricted_want, names); !d.empty()) return d;
    if (auto d = compare(restricted_via_representation(g), restricted_want, names); !d.empty()) {
      return "via representation: " + d;
    }
    return compare(det_fraction_free(R), norm_want, names);
  }));

  const ReducedGA omega_want =
      group_element(G, {"b*c*d + a*c*d + b*c*e + 2*a*c*e", "-b*c*d - a*c*d - a*c*e", "-b*c*e - a*c*e"}, names);

  out.push_back(check("vector-field expansion of the voltage determinant", [&]() -> std::string {
    const ReducedGA det = det_group_algebra(voltage_laplacian(g));
    if (!(det == omega_want)) return "determinant is " + to_string(det, names);
    const ReducedGA w = omega(g);
    if (!(w == omega_want)) return "vector-field sum is " + to_string(w, names);
    if (enumerate_vector_fields(g).size() != 4) return "expected four vector fields";
    return {};
  }));

  out.push_back(check("cyclotomic norm of the voltage determinant", [&]() -> std::string {
    const Cyclotomic det = embed(det_group_algebra(voltage_laplacian(g)));
    const Cyclotomic conj = galois_conjugate(det, 2);
    const Cyclotomic z = Cyclotomic::zeta_power(3, 1), z2 = Cyclotomic::zeta_power(3, 2);
    const Cyclotomic one = Cyclotomic::scalar(3, IntPoly::constant(1));
    VarNames n = names;
    auto mono = [&](const char* s) { return Cyclotomic::scalar(3, parse_poly(s, n)); };
    const Cyclotomic conj_want = (one - z2) * mono("b*c*d") + (one - z2) * mono("a*c*d") + (one - z) * mono("b*c*e") +
                                 (one - z2) * (one - z) * mono("a*c*e");
    if (!(conj == conj_want)) return "conjugate is " + to_string(conj, names);
    const Cyclotomic prod = det * conj;
    if (auto d = compare(prod.coeff(0), norm_want, names); !d.empty()) return d;
    if (!prod.coeff(1).is_zero()) return "product of conjugates is not rational";
    return compare(field_norm(det), norm_want, names);
  }));

  out.push_back(check("block triangularization of the cover Laplacian", [&]() -> std::string {
    const CoverGraph c = build_cover(g);
    const PolyMatrix cover_want = poly_matrix({{"a + b", "-b", "0", "-a", "0", "0", "0", "0", "0"},
                                               {"0", "c", "0", "0", "0", "0", "0", "0", "-c"},
                                               {"0", "-e", "d + e", "0", "0", "0", "-d", "0", "0"},
                                               {"0", "0", "0", "a + b", "-b", "0", "-a", "0", "0"},
                                               {"0", "0", "-c", "0", "c", "0", "0", "0", "0"},
                                               {"-d", "0", "0", "0", "-e", "d + e", "0", "0", "0"},
                                               {"-a", "0", "0", "0", "0", "0", "a + b", "-b", "0"},
                                               {"0", "0", "0", "0", "0", "-c", "0", "c", "0"},
                                               {"0", "0", "0", "-d", "0", "0", "0", "-e", "d + e"}},
                                              names);
    if (auto d = compare(laplacian(as_plain_graph(c)), cover_want, names); !d.empty()) return "cover Laplacian " + d;
    const PolyMatrix U_want = poly_matrix({{"b", "-b", "0", "0", "0", "0", "0", "0", "0"},
                                           {"0", "c", "-c", "0", "0", "0", "0", "0", "0"},
                                           {"-d", "-e", "d + e", "0", "0", "0", "0", "0", "0"},
                                           {"0", "0", "0", "a + b", "-b", "0", "-a", "0", "0"},
                                           {"0", "0", "-c", "0", "c", "c", "0", "0", "c"},
                                           {"-d", "0", "0", "d", "-e", "d + e", "d", "0", "0"},
                                           {"-a", "0", "0", "a", "0", "0", "2*a + b", "-b", "0"},
                                           {"0", "0", "0", "0", "0", "-c", "0", "c", "0"},
                                           {"0", "0", "0", "-d", "0", "0", "0", "-e", "d + e"}},
                                          names);
    const Triangularization t = triangularize(c);
    if (auto d = compare(t.U, U_want, names); !d.empty()) return "U " + d;
    if (auto d = compare(t.upper_left, laplacian(g), names); !d.empty()) return "upper-left " + d;
    return compare(t.lower_right, restricted_want, names);
  }));

  out.push_back(check("ratio of cover to base arborescences", [&]() -> std::string {
    const RatioReport r = ratio_report(g, 0);
    if (!r.theorem_holds) return "k * A_cover != A_base * det";
    if (auto d = compare(r.det, norm_want, names); !d.empty()) return d;
    if (!r.ratio) return "base has no arborescence";
    if (auto d = compare(*r.ratio, exact_div(norm_want, Integer(3)), names); !d.empty()) return d;
    const IntPoly brute = arborescence_polynomial(as_plain_graph(build_cover(g)), 0, ArborMethod::brute_force);
    return compare(brute, r.A_cover, names);
  }));

  out.push_back(check("cover arborescence that is not a lifted completion", [&]() -> std::string {
    const VoltageGraph s = signed_triangle();
    const CoverGraph c = build_cover(s);
    const VoltageGraph flat = as_plain_graph(c);
    auto lift = [&](std::size_t base_edge, std::size_t sheet) {
      for (std::size_t id = 0; id < c.edge_count(); ++id)
        if (c.edges()[id].base_edge == base_edge && c.edges()[id].source_sheet == sheet) return id;
      return c.edge_count();
    };
    std::vector<std::size_t> want{lift(2, 0), lift(1, 0), lift(0, 1), lift(4, 1), lift(3, 1)};
    std::sort(want.begin(), want.end());
    bool found = false;
    for (const auto& t : enumerate_arborescences(flat, c.vertex_index(2, 0))) {
      auto e = t.edges();
      std::sort(e.begin(), e.end());
      if (e == want) found = true;
    }
    if (!found) return "displayed arborescence not enumerated";
    for (const auto& t : enumerate_arborescences(s, 2)) {
      std::vector<std::size_t> sheet(3, 3);
      sheet[2] = 0;
      for (std::size_t round = 0; round < 3; ++round)
        for (std::size_t w = 0; w < 3; ++w) {
          if (w == 2 || sheet[w] != 3) continue;
          const std::size_t parent = s.edge(t.parent_edge[w]).target;
          if (sheet[parent] == 3) continue;
          const Permutation sigma = s.sheet_permutation(t.parent_edge[w]);
          sheet[w] = static_cast<std::size_t>(std::find(sigma.begin(), sigma.end(), sheet[parent]) - sigma.begin());
        }
      bool contained = true;
      for (std::size_t w = 0; w < 2; ++w)
        if (!std::binary_search(want.begin(), want.end(), lift(t.parent_edge[w], sheet[w]))) contained = false;
      if (contained) return "displayed arborescence contains the lift of a base arborescence";
    }
    return {};
  }));

  return out;
}

}  // namespace arbor
