#pragma once

// Gradings of Hopf algebras and Hopf categories: the data model, grading and
// Hopf-homogeneity verification (direct route and the dual-decomposition
// route on the group algebra), connectedness through homogeneous walks,
// partition extraction, and smash products.

#include "hopfcat/hopf.hpp"

namespace hopfcat {

using Deg = AbTuple;

// grading group: a finite abelian group, or the integers (degree labels only)
struct DegreeGroup {
  bool integers = false;
  FiniteAbelianGroup fin;

  static DegreeGroup finite(FiniteAbelianGroup g) { return {false, std::move(g)}; }
  static DegreeGroup Z() { return {true, {}}; }

  Deg zero() const { return integers ? Deg{0} : fin.zero(); }
  Deg add(const Deg& a, const Deg& b) const {
    if (integers) return Deg{a[0] + b[0]};
    return fin.add(a, b);
  }
  Deg neg(const Deg& a) const {
    if (integers) return Deg{-a[0]};
    return fin.neg(a);
  }
  bool is_zero(const Deg& a) const {
    if (integers) return a[0] == 0;
    return fin.is_zero(a);
  }
  std::string str(const Deg& a) const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
  }
};

struct Grading {
  std::shared_ptr<const HopfCategory> target;
  DegreeGroup group;
  Mat basis;              // rows: homogeneous basis over the sum-algebra basis
  std::vector<Deg> degrees;

  const HopfAlgebra& algebra() const { return target->algebra; }

  Mat basis_inverse() const {
    auto inv = inverse(basis);
    if (!inv) throw error("homogeneous basis is singular");
    return *inv;
  }

  // coefficients of v over the homogeneous basis
  Vec expand(const Vec& v, const Mat& basis_inv) const { return vec_mat(v, basis_inv); }
};

inline Grading trivial_grading(std::shared_ptr<const HopfCategory> target) {
  Grading X;
  X.target = std::move(target);
  X.group = DegreeGroup::finite(FiniteAbelianGroup::trivial());
  X.basis = Mat::identity(X.target->algebra.field, X.target->algebra.dim);
  X.degrees.assign(X.target->algebra.dim, Deg{});
  return X;
}

// re-basis components given as raw subspace spanning sets
inline Grading grading_from_components(std::shared_ptr<const HopfCategory> target,
                                       DegreeGroup group,
                                       const std::vector<std::pair<Deg, std::vector<Vec>>>& comps) {
  const auto& A = target->algebra;
  std::vector<Vec> rows;
  std::vector<Deg> degs;
  auto sorted = comps;
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [d, vecs] : sorted) {
    if (vecs.empty()) continue;
    Rref rr = rref(Mat::from_rows(A.field, vecs));
    for (int r = 0; r < rr.rank; ++r) {
      rows.push_back(rr.reduced.row(r));
      degs.push_back(d);
    }
  }
  Grading X;
  X.target = std::move(target);
  X.group = std::move(group);
  X.basis = Mat::from_rows(A.field, rows);
  X.degrees = std::move(degs);
  return X;
}

// ---------------------------------------------------------------------------
// Grading verification: direct-sum decomposition and multiplicativity

inline std::optional<std::pair<int, int>> row_hom_objects(const Grading& X, int row) {
  // the single hom-space supporting the row, or nullopt if mixed
  const auto& C = *X.target;
  std::pair<int, int> obj{-1, -1};
  for (int a = 0; a < C.algebra.dim; ++a) {
    if (X.basis.at(row, a).is_zero()) continue;
    if (obj.first < 0)
      obj = C.basis_objects[a];
    else if (obj != C.basis_objects[a])
      return std::nullopt;
  }
  if (obj.first < 0) return std::nullopt;
  return obj;
}

inline VerifyReport verify_grading(const Grading& X) {
  const auto& A = X.algebra();
  if (X.basis.rows() != A.dim || X.basis.cols() != A.dim ||
      static_cast<int>(X.degrees.size()) != A.dim)
    throw error("grading dimensions do not match the target");
  VerifyReport rep;
  auto add = [&](const std::string& ax, bool pass, const std::string& wit) {
    rep.items.push_back({ax, pass, pass ? "" : wit});
  };
  auto inv = inverse(X.basis);
  add("direct-sum", inv.has_value(), "basis matrix singular");
  if (!inv) return rep;

  if (X.target->group.order > 1) {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i)
      if (!row_hom_objects(X, i)) {
        ok = false;
        wit = "row " + std::to_string(i) + " crosses hom-spaces";
      }
    add("hom-space-decomposition", ok, wit);
  }

  bool ok = true;
  std::string wit;
  for (int i = 0; i < A.dim && ok; ++i)
    for (int j = 0; j < A.dim && ok; ++j) {
      Vec prod = A.mul_vec(X.basis.row(i), X.basis.row(j));
      Vec coeffs = X.expand(prod, *inv);
      Deg want = X.group.add(X.degrees[i], X.degrees[j]);
      for (int k = 0; k < A.dim; ++k)
        if (!coeffs[k].is_zero() && X.degrees[k] != want) {
          ok = false;
          wit = "X^" + X.group.str(X.degrees[i]) + " * X^" + X.group.str(X.degrees[j]) +
                " meets X^" + X.group.str(X.degrees[k]);
          break;
        }
    }
  add("multiplicative", ok, wit);
  return rep;
}

// ---------------------------------------------------------------------------
// Connectedness via the gain graph of homogeneous basis morphisms

struct WalkDegreeResult {
  int base = 0;
  bool all_reachable = false;
  bool connected = false;
  std::optional<SubgroupInfo> subgroup;  // finite grading groups
  std::optional<long> gain_gcd;          // integer-labeled gradings
};

inline WalkDegreeResult walk_degree_subgroup(const Grading& X, int base) {
  const auto& C = *X.target;
  const auto& A = C.algebra;
  int nobj = C.group.order;
  struct Edge {
    int x, y;
    Deg d;
  };
  std::vector<Edge> edges;
  for (int i = 0; i < A.dim; ++i) {
    auto obj = row_hom_objects(X, i);
    if (!obj) throw error("no homogeneous basis aligned with hom-spaces; re-basis first");
    edges.push_back({obj->second, obj->first, X.degrees[i]});
  }
  // BFS spanning tree on the underlying undirected graph
  std::vector<int> parent_edge(nobj, -1);
  std::vector<bool> seen(nobj, false);
  std::vector<Deg> pot(nobj, X.group.zero());
  std::vector<int> queue{base};
  seen[base] = true;
  std::vector<bool> tree_edge(edges.size(), false);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      int u = -1;
      Deg gain;
      if (edges[e].x == v && !seen[edges[e].y]) {
        u = edges[e].y;
        gain = X.group.add(edges[e].d, pot[v]);  // walk forward
      } else if (edges[e].y == v && !seen[edges[e].x]) {
        u = edges[e].x;
        gain = X.group.add(X.group.neg(edges[e].d), pot[v]);  // walk backward
      } else {
        continue;
      }
      seen[u] = true;
      pot[u] = gain;
      tree_edge[e] = true;
      queue.push_back(u);
    }
  }
  WalkDegreeResult res;
  res.base = base;
  res.all_reachable = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  std::vector<Deg> gains;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!seen[edges[e].x] || !seen[edges[e].y]) continue;
    // cycle gain d + pot[x] - pot[y]
    Deg g = X.group.add(edges[e].d, X.group.add(pot[edges[e].x], X.group.neg(pot[edges[e].y])));
    if (!X.group.is_zero(g)) gains.push_back(std::move(g));
  }
  if (X.group.integers) {
    long g = 0;
    for (const auto& d : gains) g = std::gcd(g, std::labs(d[0]));
    res.gain_gcd = g;
    res.connected = res.all_reachable && g == 1;
  } else {
    res.subgroup = subgroup_generated(X.group.fin, gains);
    res.connected = res.all_reachable && res.subgroup->equals_whole;
  }
  return res;
}

// connectedness with the convention for categories that have unreachable
// object pairs: such a category is connected only for the trivial group
inline bool is_connected_grading(const Grading& X) {
  auto w = walk_degree_subgroup(X, X.target->group.identity);
  if (!w.all_reachable) return !X.group.integers && X.group.fin.is_trivial();
  return w.connected;
}

// ---------------------------------------------------------------------------
// The partition of E induced by a grading of k^E

inline bool has_dirac_basis(const HopfAlgebra& A) {
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Vec prod = A.mul_vec(A.basis_vec(i), A.basis_vec(j));
      Vec want = (i == j) ? A.basis_vec(i) : zero_vec(A.field, A.dim);
      if (prod != want) return false;
    }
  return true;
}

inline Partition partition_of(const Grading& X) {
  const auto& A = X.algebra();
  if (!has_dirac_basis(A)) throw error("target is not split commutative semisimple");
  std::vector<Vec> triv_rows;
  for (int i = 0; i < A.dim; ++i)
    if (X.group.is_zero(X.degrees[i])) triv_rows.push_back(X.basis.row(i));
  // u ~ v iff every trivial-degree vector takes the same value at u and v
  std::vector<int> block(A.dim, -1);
  Partition P;
  for (int u = 0; u < A.dim; ++u) {
    if (block[u] >= 0) continue;
    int b = static_cast<int>(P.blocks.size());
    P.blocks.push_back({u});
    block[u] = b;
    for (int v = u + 1; v < A.dim; ++v) {
      if (block[v] >= 0) continue;
      bool same = true;
      for (const auto& r : triv_rows)
        if (r[u] != r[v]) {
          same = false;
          break;
        }
      if (same) {
        P.blocks[b].push_back(v);
        block[v] = b;
      }
    }
  }
  P.canonicalize();
  if (P.blocks.size() != triv_rows.size())
    throw error("trivial-degree component is not spanned by block indicators");
  return P;
}

// ---------------------------------------------------------------------------
// Hopf-homogeneity: the direct route

enum class AntipodeConvention { DegreePreserving, DegreeInverting };

struct HopfGradingCheck {
  bool comult_ok = true;
  bool counit_ok = true;
  bool antipode_ok = true;
  bool idempotents_ok = true;
  std::string witness;
  bool all() const { return comult_ok && counit_ok && antipode_ok && idempotents_ok; }
};

inline HopfGradingCheck is_hopf_grading_direct(
    const Grading& X, AntipodeConvention conv = AntipodeConvention::DegreePreserving) {
  const auto& A = X.algebra();
  if (X.group.integers) throw error("Hopf-homogeneity needs a finite abelian grading group");
  HopfGradingCheck res;
  Mat Minv = X.basis_inverse();
  // (a) Delta(X^r) inside the degree-split tensor square
  for (int i = 0; i < A.dim && res.comult_ok; ++i) {
    Tensor t = A.comult_vec(X.basis.row(i));
    Tensor tn;
    for (const auto& [p, c] : t)
      for (int a = 0; a < A.dim; ++a) {
        if (Minv.at(p.first, a).is_zero()) continue;
        for (int b = 0; b < A.dim; ++b)
          tensor_add(tn, a, b, c * Minv.at(p.first, a) * Minv.at(p.second, b));
      }
    for (const auto& [p, c] : tn) {
      if (X.group.add(X.degrees[p.first], X.degrees[p.second]) != X.degrees[i]) {
        res.comult_ok = false;
        res.witness = "Delta not homogeneous at row " + std::to_string(i);
        break;
      }
    }
  }
  // (b) counit vanishes off the trivial degree
  for (int i = 0; i < A.dim && res.counit_ok; ++i) {
    if (X.group.is_zero(X.degrees[i])) continue;
    if (!A.counit_vec(X.basis.row(i)).is_zero()) {
      res.counit_ok = false;
      res.witness = "counit nonzero on degree " + X.group.str(X.degrees[i]);
    }
  }
  // (c) antipode homogeneity
  for (int i = 0; i < A.dim && res.antipode_ok; ++i) {
    Vec simg = X.expand(A.antipode_vec(X.basis.row(i)), Minv);
    Deg want = (conv == AntipodeConvention::DegreePreserving) ? X.degrees[i]
                                                              : X.group.neg(X.degrees[i]);
    for (int k = 0; k < A.dim; ++k)
      if (!simg[k].is_zero() && X.degrees[k] != want) {
        res.antipode_ok = false;
        res.witness = "S not homogeneous at row " + std::to_string(i);
        break;
      }
  }
  // (d) in a category, object idempotents have trivial degree
  for (int s = 0; s < X.target->group.order && res.idempotents_ok; ++s) {
    Vec c = X.expand(X.target->idempotents[s], Minv);
    for (int k = 0; k < A.dim; ++k)
      if (!c[k].is_zero() && !X.group.is_zero(X.degrees[k])) {
        res.idempotents_ok = false;
        res.witness = "object idempotent " + std::to_string(s) + " not of trivial degree";
        break;
      }
  }
  return res;
}

// ---------------------------------------------------------------------------
// The dual route: the decomposition of kG by the dual basis (M^{-1})^t

struct DualDecomposition {
  Mat dual_basis;  // rows over the group-element basis of kG
  std::vector<Deg> degrees;
  bool multiplicative = true;
  std::string witness;
  Grading candidate;  // on kG as a single-object category
};

inline DualDecomposition dual_decomposition(const Grading& X, const FiniteGroup& G) {
  const auto& A = X.algebra();
  if (A.dim != G.order) throw error("grading target is not k^G for the given group");
  if (!has_dirac_basis(A)) throw error("grading target is not k^G for the given group");
  DualDecomposition out;
  auto Minv = inverse(X.basis);
  if (!Minv) throw error("singular homogeneous basis matrix");
  out.dual_basis = Minv->transpose();
  out.degrees = X.degrees;
  auto kG = std::make_shared<HopfCategory>(
      as_single_object_category(group_algebra(A.field, G)));
  Grading Y;
  Y.target = kG;
  Y.group = X.group;
  Y.basis = out.dual_basis;
  Y.degrees = X.degrees;
  // multiplicativity of the dual decomposition, computed through the product
  // of the group algebra
  const auto& B = kG->algebra;
  Mat Winv = X.basis.transpose();  // (M^{-1})^t inverse
  for (int i = 0; i < B.dim && out.multiplicative; ++i)
    for (int j = 0; j < B.dim; ++j) {
      Vec prod = B.mul_vec(out.dual_basis.row(i), out.dual_basis.row(j));
      Vec coeffs = vec_mat(prod, Winv);
      Deg want = Y.group.add(Y.degrees[i], Y.degrees[j]);
      bool bad = false;
      for (int k = 0; k < B.dim; ++k)
        if (!coeffs[k].is_zero() && Y.degrees[k] != want) {
          bad = true;
          break;
        }
      if (bad) {
        out.multiplicative = false;
        out.witness = "Y^" + Y.group.str(Y.degrees[i]) + " * Y^" + Y.group.str(Y.degrees[j]) +
                      " leaves its component";
        break;
      }
    }
  out.candidate = std::move(Y);
  return out;
}

// ---------------------------------------------------------------------------
// Hopf category verification: the sum-algebra axioms plus the idempotent
// family conditions

inline VerifyReport verify_hopf_category(const HopfCategory& C) {
  VerifyReport rep = verify_hopf(C.algebra);
  const auto& G = C.group;
  const auto& A = C.algebra;
  auto add = [&](const std::string& ax, bool pass, const std::string& wit) {
    rep.items.push_back({ax, pass, pass ? "" : wit});
  };
  // orthogonal complete family spanning k^G with the right Hopf structure
  {
    bool ok = true;
    std::string wit;
    try {
      check_idempotent_family(A, C.idempotents, G);
    } catch (const error& e) {
      ok = false;
      wit = e.what();
    }
    add("object-idempotents", ok, wit);
  }
  // basis aligned with hom-spaces
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i) {
      auto [y, x] = C.basis_objects[i];
      Vec v = A.mul_vec(C.idempotents[y], A.mul_vec(A.basis_vec(i), C.idempotents[x]));
      if (v != A.basis_vec(i)) {
        ok = false;
        wit = A.labels[i];
      }
    }
    add("hom-alignment", ok, wit);
  }
  // counit supported on hom(1,1)
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i) {
      auto [y, x] = C.basis_objects[i];
      if ((y != G.identity || x != G.identity) && !A.counit[i].is_zero()) {
        ok = false;
        wit = A.labels[i];
      }
    }
    add("counit-support", ok, wit);
  }
  // antipode maps hom(x -> y) into hom(y^{-1} -> x^{-1})
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i) {
      auto [y, x] = C.basis_objects[i];
      for (int j = 0; j < A.dim; ++j) {
        if (A.antipode[i][j].is_zero()) continue;
        if (C.basis_objects[j] != std::make_pair(G.inv(x), G.inv(y))) {
          ok = false;
          wit = A.labels[i];
          break;
        }
      }
    }
    add("antipode-object-map", ok, wit);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Smash product

struct SmashResult {
  HopfCategory category;
  // provenance: new basis index -> (homogeneous row of X, Gamma element index)
  std::vector<std::pair<int, int>> basis_source;
  // projection functor: object (g, t) -> g; morphisms by forgetting t
  std::vector<int> object_projection;
  // free Gamma-action by translation: per Gamma element, an object permutation
  // and the matching basis permutation
  std::vector<std::vector<int>> action_objects;
  std::vector<std::vector<int>> action_basis;
};

inline SmashResult smash(const Grading& X) {
  if (X.group.integers) throw error("smash products need a finite grading group");
  auto hopf = is_hopf_grading_direct(X);
  if (!hopf.all()) throw error("smash input is not a Hopf grading: " + hopf.witness);
  if (!is_connected_grading(X)) throw error("smash input is not a connected grading");
  const auto& C = *X.target;
  const auto& A = C.algebra;
  const auto& Gamma = X.group.fin;
  auto gels = Gamma.elements();
  int ng = static_cast<int>(gels.size());
  std::map<Deg, int> gidx;
  for (int i = 0; i < ng; ++i) gidx[gels[i]] = i;
  Mat Minv = X.basis_inverse();

  // objects: G x Gamma with index g*ng + t, matching FiniteGroup::product
  FiniteGroup GxGamma = FiniteGroup::product(C.group, Gamma.cayley());
  int n = A.dim;
  int dim = n * ng;
  auto bidx = [&](int r, int t) { return r * ng + t; };
  auto oidx = [&](int g, int t) { return g * ng + t; };

  // objects of each homogeneous row
  std::vector<std::pair<int, int>> row_obj(n);
  for (int i = 0; i < n; ++i) {
    auto obj = row_hom_objects(X, i);
    if (!obj) throw error("no homogeneous basis aligned with hom-spaces");
    row_obj[i] = *obj;
  }
  // degree-split coproduct and antipode over the homogeneous basis
  std::vector<Tensor> drows(n);
  std::vector<Vec> srows(n);
  for (int i = 0; i < n; ++i) {
    Tensor t = A.comult_vec(X.basis.row(i));
    Tensor tn;
    for (const auto& [p, c] : t)
      for (int a = 0; a < n; ++a) {
        if (Minv.at(p.first, a).is_zero()) continue;
        for (int b = 0; b < n; ++b)
          tensor_add(tn, a, b, c * Minv.at(p.first, a) * Minv.at(p.second, b));
      }
    drows[i] = std::move(tn);
    srows[i] = X.expand(A.antipode_vec(X.basis.row(i)), Minv);
  }
  // products of homogeneous rows over the homogeneous basis
  std::vector<std::vector<Vec>> prows(n, std::vector<Vec>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      prows[i][j] = X.expand(A.mul_vec(X.basis.row(i), X.basis.row(j)), Minv);

  SmashResult res;
  HopfAlgebra S(A.field, dim);
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < ng; ++t) {
      S.labels[bidx(r, t)] = "[" + std::to_string(r) + "@" + X.group.str(gels[t]) + "]";
      res.basis_source.push_back({r, t});
    }
  // multiplication: b_{r,t} * b_{r',t'} with x_r = y_{r'} and t' = t + d_r
  for (int r = 0; r < n; ++r)
    for (int rp = 0; rp < n; ++rp) {
      if (row_obj[r].second != row_obj[rp].first) continue;
      for (int t = 0; t < ng; ++t) {
        int tp = gidx.at(Gamma.add(gels[t], X.degrees[r]));
        const Vec& coeffs = prows[r][rp];
        for (int h = 0; h < n; ++h)
          if (!coeffs[h].is_zero()) S.set_mult(bidx(r, t), bidx(rp, tp), bidx(h, t), coeffs[h]);
      }
    }
  // comultiplication
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < ng; ++t)
      for (int u = 0; u < ng; ++u) {
        int tu = gidx.at(Gamma.add(gels[t], Gamma.neg(gels[u])));
        for (const auto& [p, c] : drows[r])
          S.set_comult(bidx(r, t), bidx(p.first, tu), bidx(p.second, u), c);
      }
  // counit
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < ng; ++t)
      S.counit[bidx(r, t)] = (Gamma.is_zero(gels[t]) && X.group.is_zero(X.degrees[r]))
                                 ? A.counit_vec(X.basis.row(r))
                                 : A.field->zero();
  // antipode
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < ng; ++t) {
      int ts = gidx.at(Gamma.neg(Gamma.add(gels[t], X.degrees[r])));
      for (int h = 0; h < n; ++h)
        if (!srows[r][h].is_zero()) S.antipode[bidx(r, t)][bidx(h, ts)] = srows[r][h];
    }
  // idempotents and unit
  HopfCategory cat;
  cat.group = GxGamma;
  for (int g = 0; g < C.group.order; ++g) {
    Vec coeffs = X.expand(C.idempotents[g], Minv);
    for (int h = 0; h < n; ++h)
      if (!coeffs[h].is_zero() && !X.group.is_zero(X.degrees[h]))
        throw error("object idempotent not of trivial degree");
    for (int t = 0; t < ng; ++t) {
      Vec e = zero_vec(A.field, dim);
      for (int h = 0; h < n; ++h)
        if (!coeffs[h].is_zero()) e[bidx(h, t)] = coeffs[h];
      cat.idempotents.push_back(std::move(e));
    }
  }
  S.unit = zero_vec(A.field, dim);
  for (const auto& e : cat.idempotents) S.unit = vec_add(S.unit, e);
  cat.algebra = std::move(S);
  for (int r = 0; r < n; ++r)
    for (int t = 0; t < ng; ++t) {
      int src = oidx(row_obj[r].second, gidx.at(Gamma.add(gels[t], X.degrees[r])));
      int tgt = oidx(row_obj[r].first, t);
      cat.basis_objects.push_back({tgt, src});
    }
  res.category = std::move(cat);
  res.object_projection.assign(C.group.order * ng, 0);
  for (int g = 0; g < C.group.order; ++g)
    for (int t = 0; t < ng; ++t) res.object_projection[oidx(g, t)] = g;
  for (int a = 0; a < ng; ++a) {
    std::vector<int> aobj(C.group.order * ng), abas(dim);
    for (int g = 0; g < C.group.order; ++g)
      for (int t = 0; t < ng; ++t)
        aobj[oidx(g, t)] = oidx(g, gidx.at(Gamma.add(gels[a], gels[t])));
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < ng; ++t)
        abas[bidx(r, t)] = bidx(r, gidx.at(Gamma.add(gels[a], gels[t])));
    // freeness on objects
    if (!Gamma.is_zero(gels[a]))
      for (std::size_t o = 0; o < aobj.size(); ++o)
        if (aobj[o] == static_cast<int>(o)) throw error("group action is not free on objects");
    res.action_objects.push_back(std::move(aobj));
    res.action_basis.push_back(std::move(abas));
  }
  return res;
}

}  // namespace hopfcat
