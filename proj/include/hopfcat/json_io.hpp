#pragma once

// JSON import/export. Scalars travel as strings in canonical reduced form, so
// files round-trip bit-exactly.

#include <json.hpp>

#include "hopfcat/pi1.hpp"

namespace hopfcat {

using json = nlohmann::json;

struct parse_error : error {
  using error::error;
};

// ---------------------------------------------------------------------------
// groups

inline json abelian_to_json(const FiniteAbelianGroup& g) {
  return json{{"invariant_factors", g.factors}};
}

inline FiniteAbelianGroup abelian_from_json(const json& j) {
  if (!j.contains("invariant_factors")) throw parse_error("missing invariant_factors");
  FiniteAbelianGroup g;
  for (const auto& v : j.at("invariant_factors")) g.factors.push_back(v.get<long>());
  return g;
}

inline json group_to_json(const FiniteGroup& g) {
  json tab = json::array();
  for (int a = 0; a < g.order; ++a) {
    json row = json::array();
    for (int b = 0; b < g.order; ++b) row.push_back(g.mul(a, b));
    tab.push_back(row);
  }
  return json{{"order", g.order}, {"table", tab}, {"labels", g.labels}};
}

inline FiniteGroup group_from_json(const json& j) {
  if (!j.contains("order") || !j.contains("table")) throw parse_error("missing group table");
  int n = j.at("order").get<int>();
  std::vector<int> tab;
  for (const auto& row : j.at("table"))
    for (const auto& v : row) tab.push_back(v.get<int>());
  if (static_cast<int>(tab.size()) != n * n) throw parse_error("group table size mismatch");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& v : j.at("labels")) labels.push_back(v.get<std::string>());
  return FiniteGroup::from_table(std::move(tab), std::move(labels));
}

inline json partition_to_json(const Partition& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  return blocks;
}

// ---------------------------------------------------------------------------
// algebras and categories

inline json vec_to_json(const FieldPtr& F, const Vec& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(F->to_string(s));
  return a;
}

inline Vec vec_from_json(const FieldPtr& F, const json& j) {
  Vec v;
  for (const auto& s : j) v.push_back(F->parse_scalar(s.get<std::string>()));
  return v;
}

inline json algebra_to_json(const HopfAlgebra& A) {
  const auto& F = A.field;
  json mult = json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (const auto& [k, c] : A.mult[i][j]) mult.push_back(json{i, j, k, F->to_string(c)});
  json comult = json::array();
  for (int i = 0; i < A.dim; ++i)
    for (const auto& [j, k, c] : A.comult[i]) comult.push_back(json{i, j, k, F->to_string(c)});
  json antipode = json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (!A.antipode[i][j].is_zero()) antipode.push_back(json{i, j, F->to_string(A.antipode[i][j])});
  return json{{"field", A.field->spec().to_string()},
              {"dim", A.dim},
              {"labels", A.labels},
              {"mult", mult},
              {"unit", vec_to_json(F, A.unit)},
              {"comult", comult},
              {"counit", vec_to_json(F, A.counit)},
              {"antipode", antipode}};
}

inline HopfAlgebra algebra_from_json(const json& j) {
  for (const char* key : {"field", "dim", "mult", "unit", "comult", "counit", "antipode"})
    if (!j.contains(key)) throw parse_error(std::string("missing algebra field: ") + key);
  FieldPtr F = Field::make(FieldSpec::parse(j.at("field").get<std::string>()));
  int dim = j.at("dim").get<int>();
  if (dim <= 0) throw parse_error("dimension must be positive");
  HopfAlgebra A(F, dim);
  if (j.contains("labels")) {
    auto lab = j.at("labels");
    if (static_cast<int>(lab.size()) != dim) throw parse_error("label count mismatch");
    for (int i = 0; i < dim; ++i) A.labels[i] = lab[i].get<std::string>();
  } else {
    for (int i = 0; i < dim; ++i) A.labels[i] = "e" + std::to_string(i);
  }
  auto idx = [&](const json& v) {
    int i = v.get<int>();
    if (i < 0 || i >= dim) throw parse_error("basis index out of range");
    return i;
  };
  for (const auto& e : j.at("mult")) {
    if (e.size() != 4) throw parse_error("mult entries are [i,j,k,scalar]");
    A.set_mult(idx(e[0]), idx(e[1]), idx(e[2]), F->parse_scalar(e[3].get<std::string>()));
  }
  for (const auto& e : j.at("comult")) {
    if (e.size() != 4) throw parse_error("comult entries are [i,j,k,scalar]");
    A.set_comult(idx(e[0]), idx(e[1]), idx(e[2]), F->parse_scalar(e[3].get<std::string>()));
  }
  A.unit = vec_from_json(F, j.at("unit"));
  A.counit = vec_from_json(F, j.at("counit"));
  if (static_cast<int>(A.unit.size()) != dim || static_cast<int>(A.counit.size()) != dim)
    throw parse_error("unit/counit length mismatch");
  for (const auto& e : j.at("antipode")) {
    if (e.size() != 3) throw parse_error("antipode entries are [i,j,scalar]");
    A.antipode[idx(e[0])][idx(e[1])] = F->parse_scalar(e[2].get<std::string>());
  }
  return A;
}

inline json category_to_json(const HopfCategory& C) {
  json j = algebra_to_json(C.algebra);
  j["group"] = group_to_json(C.group);
  json idem = json::object();
  for (int s = 0; s < C.group.order; ++s)
    idem[std::to_string(s)] = vec_to_json(C.algebra.field, C.idempotents[s]);
  j["idempotents"] = idem;
  json bo = json::array();
  for (const auto& [y, x] : C.basis_objects) bo.push_back(json{y, x});
  j["basis_objects"] = bo;
  return j;
}

inline HopfCategory category_from_json(const json& j) {
  HopfCategory C;
  C.algebra = algebra_from_json(j);
  if (!j.contains("group") || !j.contains("idempotents"))
    throw parse_error("missing category group or idempotents");
  C.group = group_from_json(j.at("group"));
  C.idempotents.resize(C.group.order);
  for (int s = 0; s < C.group.order; ++s) {
    auto key = std::to_string(s);
    if (!j.at("idempotents").contains(key)) throw parse_error("missing idempotent " + key);
    C.idempotents[s] = vec_from_json(C.algebra.field, j.at("idempotents").at(key));
  }
  if (j.contains("basis_objects")) {
    for (const auto& e : j.at("basis_objects")) C.basis_objects.push_back({e[0], e[1]});
    if (static_cast<int>(C.basis_objects.size()) != C.algebra.dim)
      throw parse_error("basis_objects length mismatch");
  } else {
    compute_basis_objects(C);
  }
  return C;
}

// ---------------------------------------------------------------------------
// gradings

inline json grading_to_json(const Grading& X) {
  json degs = json::array();
  for (const auto& d : X.degrees) degs.push_back(d);
  json rows = json::array();
  for (int i = 0; i < X.basis.rows(); ++i)
    rows.push_back(vec_to_json(X.algebra().field, X.basis.row(i)));
  return json{{"group", abelian_to_json(X.group.fin)},
              {"degrees", degs},
              {"basis", rows},
              {"target", category_to_json(*X.target)}};
}

inline Grading grading_from_json(const json& j) {
  if (!j.contains("target")) throw parse_error("grading needs an embedded target");
  auto target = std::make_shared<HopfCategory>(category_from_json(j.at("target")));
  const auto& F = target->algebra.field;
  Grading X;
  X.target = target;
  if (!j.contains("group")) throw parse_error("grading needs a group");
  X.group = DegreeGroup::finite(abelian_from_json(j.at("group")));
  if (j.contains("degrees") && j.contains("basis")) {
    for (const auto& d : j.at("degrees")) {
      Deg deg;
      for (const auto& v : d) deg.push_back(v.get<long>());
      X.degrees.push_back(std::move(deg));
    }
    std::vector<Vec> rows;
    for (const auto& r : j.at("basis")) rows.push_back(vec_from_json(F, r));
    if (rows.size() != X.degrees.size()) throw parse_error("degrees/basis length mismatch");
    X.basis = Mat::from_rows(F, rows);
  } else if (j.contains("components")) {
    std::vector<std::pair<Deg, std::vector<Vec>>> comps;
    for (const auto& c : j.at("components")) {
      Deg deg;
      for (const auto& v : c.at("degree")) deg.push_back(v.get<long>());
      std::vector<Vec> vecs;
      for (const auto& r : c.at("vectors")) vecs.push_back(vec_from_json(F, r));
      comps.push_back({std::move(deg), std::move(vecs)});
    }
    X = grading_from_components(target, X.group, comps);
  } else {
    throw parse_error("grading needs degrees/basis or components");
  }
  return X;
}

// ---------------------------------------------------------------------------
// results

inline json pi1_to_json(const Pi1Result& r) {
  json j{{"group", abelian_to_json(r.group)},
         {"nodes", r.node_count},
         {"edges", r.edge_count},
         {"universal", r.universal ? json(*r.universal) : json(nullptr)}};
  json wit = json::array();
  for (const auto& fam : r.witnesses) {
    json f = json::array();
    for (const auto& e : fam) f.push_back(e);
    wit.push_back(f);
  }
  j["generators"] = wit;
  return j;
}

inline json enumeration_to_json(const std::vector<EnumeratedGrading>& gs) {
  json out = json::array();
  for (const auto& g : gs) {
    json prov{{"partition", partition_to_json(g.partition)},
              {"group", abelian_to_json(g.gamma)}};
    json blocks = json::array();
    for (const auto& b : g.block_structures) {
      json chars = json::array();
      for (const auto& chi : b.chi) {
        json vals = json::array();
        for (const auto& v : chi.gen_values) vals.push_back(v.str());
        chars.push_back(vals);
      }
      blocks.push_back(json{{"block", b.block},
                            {"block_group", abelian_to_json(b.gamma)},
                            {"characters", chars}});
    }
    prov["block_structures"] = blocks;
    out.push_back(json{{"grading", grading_to_json(g.grading)}, {"provenance", prov}});
  }
  return out;
}

inline json taft_result_to_json(const TaftPi1Result& r) {
  json nodes = json::array();
  for (const auto& nd : r.nodes)
    nodes.push_back(json{{"modulus", nd.modulus}, {"generator", nd.generator}});
  json j{{"group", abelian_to_json(r.pi1.group)},
         {"nodes", nodes},
         {"edges", r.pi1.edge_count}};
  j["tau"] = json{{"ok", r.tau.ok},
                  {"checked", r.tau.witness_modulus.size()},
                  {"max_modulus", r.tau.max_modulus}};
  return j;
}

// algebra equality on the nose (structure constants, unit, counit, antipode)
inline bool algebra_equal(const HopfAlgebra& A, const HopfAlgebra& B) {
  if (A.dim != B.dim || !(A.field->spec() == B.field->spec())) return false;
  if (A.labels != B.labels) return false;
  auto norm_mult = [](const HopfAlgebra& H) {
    std::map<std::tuple<int, int, int>, std::string> m;
    for (int i = 0; i < H.dim; ++i)
      for (int j = 0; j < H.dim; ++j)
        for (const auto& [k, c] : H.mult[i][j])
          if (!c.is_zero()) m[{i, j, k}] = c.str();
    return m;
  };
  auto norm_comult = [](const HopfAlgebra& H) {
    std::map<std::tuple<int, int, int>, std::string> m;
    for (int i = 0; i < H.dim; ++i)
      for (const auto& [j, k, c] : H.comult[i])
        if (!c.is_zero()) m[{i, j, k}] = c.str();
    return m;
  };
  if (norm_mult(A) != norm_mult(B) || norm_comult(A) != norm_comult(B)) return false;
  if (A.unit != B.unit || A.counit != B.counit) return false;
  for (int i = 0; i < A.dim; ++i)
    if (A.antipode[i] != B.antipode[i]) return false;
  return true;
}

}  // namespace hopfcat
