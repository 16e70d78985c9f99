#include "chromalg/json_io.hpp"

#include <limits>

namespace chromalg {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidArgument("json: " + what); }

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

std::vector<Block> block_list(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of arrays");
  std::vector<Block> out;
  for (const auto& b : j) out.push_back(int_list(b, what));
  return out;
}

Json blocks_json(const std::vector<Block>& blocks) {
  Json j = Json::array();
  for (const auto& b : blocks) j.push_back(b);
  return j;
}

Json mpz_json(const mpz_class& c) {
  if (c.fits_slong_p()) return Json(c.get_si());
  return Json(c.get_str());
}

mpz_class mpz_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad("bad integer string");
    return v;
  }
  bad("coefficient must be an integer or integer string");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class Key, class F>
Json terms_json(const LinearCombination<Key>& f, F&& key_fields) {
  Json terms = Json::array();
  for (const auto& [k, c] : f) {
    Json t = Json::object();
    key_fields(t, k);
    t["coeff_t"] = to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace

Json to_json(const Composition& a) { return a.parts(); }
Json to_json(const Partition& l) { return l.parts(); }
Json to_json(const SetComposition& phi) { return blocks_json(phi.blocks()); }
Json to_json(const SetPartition& pi) { return blocks_json(pi.blocks()); }

Json to_json(const RLevel& r) {
  if (r.is_infinite()) return "inf";
  return r.value();
}

Json to_json(const RSetComposition& x) {
  return Json{{"r", to_json(x.r())}, {"comp", to_json(x.phi())}, {"part", to_json(x.pi())}};
}

Json to_json(const TPoly& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(mpz_json(c));
  return j;
}

Json to_json(const EdgeColouredDigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.from, e.to, to_string(e.kind)}));
  return Json{{"n", g.n()}, {"edges", edges}};
}

Json to_json(const LabelledDigraph& g) {
  Json j = to_json(g.graph());
  j["labels"] = g.labels();
  return j;
}

Json to_json(const SimpleGraph& h) {
  Json edges = Json::array();
  for (const auto& [a, b] : h.edges()) edges.push_back(Json::array({a, b}));
  return Json{{"n", h.n()}, {"edges", edges}};
}

Json to_json(const QSymExpr& f) {
  std::map<int, QSymExpr> by_degree;
  for (const auto& [a, c] : f) by_degree[a.size()].add(a, c);
  auto component = [](int d, const QSymExpr& g) {
    return Json{{"degree", d},
                {"terms", terms_json(g, [](Json& t, const Composition& a) { t["composition"] = to_json(a); })}};
  };
  if (by_degree.size() <= 1) return component(by_degree.empty() ? 0 : by_degree.begin()->first, f);
  Json comps = Json::array();
  for (const auto& [d, g] : by_degree) comps.push_back(component(d, g));
  return Json{{"components", comps}};
}

Json to_json(const QSymTensor& x) {
  return Json{{"terms", terms_json(x, [](Json& t, const std::pair<Composition, Composition>& k) {
                 t["left"] = to_json(k.first);
                 t["right"] = to_json(k.second);
               })}};
}

Json to_json(const NCQSymExpr& f) {
  return Json{{"terms", terms_json(f, [](Json& t, const SetComposition& k) { t["set_composition"] = to_json(k); })}};
}

Json to_json(const NCTensor& x) {
  return Json{{"terms", terms_json(x, [](Json& t, const std::pair<SetComposition, SetComposition>& k) {
                 t["left"] = to_json(k.first);
                 t["right"] = to_json(k.second);
               })}};
}

Json to_json(const NCSymCoords& f) {
  return Json{{"terms", terms_json(f, [](Json& t, const SetPartition& k) { t["set_partition"] = to_json(k); })}};
}

Json to_json(const RCoords& f) {
  Json j = Json::object();
  if (!f.is_zero()) j["r"] = to_json(f.begin()->first.r());
  j["terms"] = terms_json(f, [](Json& t, const RSetComposition& k) {
    t["comp_part"] = to_json(k.phi());
    t["part_part"] = to_json(k.pi());
  });
  return j;
}

Json to_json(const RTensor& x) {
  Json j = Json::object();
  if (!x.is_zero()) j["r"] = to_json(x.begin()->first.first.r());
  j["terms"] = terms_json(x, [](Json& t, const std::pair<RSetComposition, RSetComposition>& k) {
    t["left"] = Json{{"comp_part", to_json(k.first.phi())}, {"part_part", to_json(k.first.pi())}};
    t["right"] = Json{{"comp_part", to_json(k.second.phi())}, {"part_part", to_json(k.second.pi())}};
  });
  return j;
}

Json to_json(const RationalPoly& p) {
  Json c = Json::array();
  for (const auto& q : p.coeffs()) c.push_back(q.get_str());
  return Json{{"coeffs_p", c}};
}

Composition composition_from_json(const Json& j) { return Composition(int_list(j, "composition")); }
Partition partition_from_json(const Json& j) { return Partition(int_list(j, "partition")); }
SetComposition set_composition_from_json(const Json& j) {
  return SetComposition(block_list(j, "set composition"));
}
SetPartition set_partition_from_json(const Json& j) { return SetPartition(block_list(j, "set partition")); }

RLevel rlevel_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return RLevel::infinity();
  return RLevel(as_int(j, "r"));
}

RSetComposition r_set_composition_from_json(const Json& j) {
  return RSetComposition(rlevel_from_json(field(j, "r")), set_composition_from_json(field(j, "comp")),
                         set_partition_from_json(field(j, "part")));
}

TPoly tpoly_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return TPoly(mpz_from(j));
  if (!j.is_array()) bad("coeff_t must be an array");
  std::vector<mpz_class> c;
  for (const auto& x : j) c.push_back(mpz_from(x));
  return TPoly(std::move(c));
}

Permutation permutation_from_json(const Json& j) {
  if (j.is_string()) {
    std::vector<int> w;
    for (char ch : j.get<std::string>()) {
      if (ch < '1' || ch > '9') bad("permutation string must use digits 1-9");
      w.push_back(ch - '0');
    }
    return Permutation(w);
  }
  return Permutation(int_list(j, "permutation"));
}

LabelledDigraph digraph_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  if (n < 0 || n > 30) bad("n must lie in 0..30");
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    const auto& es = j.at("edges");
    if (!es.is_array()) bad("edges must be an array");
    for (const auto& e : es) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_string()) bad("edge must be [u, v, \"neq\"|\"lt\"|\"leq\"]");
      edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"),
                       constraint_from_string(e[2].get<std::string>())});
    }
  }
  EdgeColouredDigraph g(n, std::move(edges));
  if (j.contains("labels")) return LabelledDigraph(std::move(g), int_list(j.at("labels"), "labels"));
  return LabelledDigraph::standard(std::move(g));
}

SimpleGraph simple_graph_from_json(const Json& j) {
  int n = as_int(field(j, "n"), "n");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2) bad("edge must be [u, v]");
      edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint")});
    }
  return SimpleGraph(n, std::move(edges));
}

QSymExpr qsym_from_json(const Json& j) {
  QSymExpr f;
  if (j.contains("components")) {
    for (const auto& c : j.at("components")) f += qsym_from_json(c);
    return f;
  }
  for (const auto& t : field(j, "terms"))
    f.add(composition_from_json(field(t, "composition")), tpoly_from_json(field(t, "coeff_t")));
  return f;
}

NCQSymExpr ncqsym_from_json(const Json& j) {
  NCQSymExpr f;
  for (const auto& t : field(j, "terms"))
    f.add(set_composition_from_json(field(t, "set_composition")), tpoly_from_json(field(t, "coeff_t")));
  return f;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("json: ") + e.what());
  }
}

}  // namespace chromalg
