#pragma once

// Finite-dimensional Hopf algebras by structure constants, Hopf k-categories
// over a finite group (a Hopf algebra plus a complete orthogonal idempotent
// family spanning a copy of k^G), axiom verification, and the standard
// constructions: k^G, kG, the trivial category, Taft categories, the
// Peirce/sum-algebra correspondence and the Turaev coalgebra view.

#include <functional>

#include "hopfcat/groups.hpp"
#include "hopfcat/linalg.hpp"

namespace hopfcat {

using Tensor = std::map<std::pair<int, int>, Scalar>;
using Tensor3 = std::map<std::tuple<int, int, int>, Scalar>;

inline void tensor_add(Tensor& t, int i, int j, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

inline void tensor3_add(Tensor3& t, int i, int j, int k, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_tuple(i, j, k);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(key, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) t.erase(it);
  }
}

class HopfAlgebra {
 public:
  FieldPtr field;
  int dim = 0;
  std::vector<std::string> labels;
  // product e_i * e_j = sum_k c e_k
  std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> mult;
  // coproduct D(e_i) = sum c e_j (x) e_k
  std::vector<std::vector<std::tuple<int, int, Scalar>>> comult;
  Vec unit;
  Vec counit;
  std::vector<Vec> antipode;  // antipode[i] = S(e_i)

  HopfAlgebra() = default;
  HopfAlgebra(FieldPtr F, int n) : field(std::move(F)), dim(n) {
    labels.resize(n);
    mult.assign(n, std::vector<std::vector<std::pair<int, Scalar>>>(n));
    comult.assign(n, {});
    unit = zero_vec(field, n);
    counit = zero_vec(field, n);
    antipode.assign(n, zero_vec(field, n));
  }

  Vec basis_vec(int i) const {
    Vec v = zero_vec(field, dim);
    v[i] = field->one();
    return v;
  }

  void set_mult(int i, int j, int k, const Scalar& c) {
    if (!c.is_zero()) mult[i][j].push_back({k, c});
  }
  void set_comult(int i, int j, int k, const Scalar& c) {
    if (!c.is_zero()) comult[i].push_back({j, k, c});
  }

  Vec mul_vec(const Vec& a, const Vec& b) const {
    Vec r = zero_vec(field, dim);
    for (int i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) {
        if (b[j].is_zero()) continue;
        Scalar c = a[i] * b[j];
        for (const auto& [k, s] : mult[i][j]) r[k] = r[k] + c * s;
      }
    }
    return r;
  }

  Tensor comult_vec(const Vec& a) const {
    Tensor t;
    for (int i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (const auto& [j, k, c] : comult[i]) tensor_add(t, j, k, a[i] * c);
    }
    return t;
  }

  Scalar counit_vec(const Vec& a) const {
    Scalar r = field->zero();
    for (int i = 0; i < dim; ++i)
      if (!a[i].is_zero()) r = r + a[i] * counit[i];
    return r;
  }

  Vec antipode_vec(const Vec& a) const {
    Vec r = zero_vec(field, dim);
    for (int i = 0; i < dim; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; j < dim; ++j) r[j] = r[j] + a[i] * antipode[i][j];
    }
    return r;
  }

  // product on A (x) A
  Tensor tensor_mul(const Tensor& s, const Tensor& t) const {
    Tensor r;
    for (const auto& [p1, c1] : s)
      for (const auto& [p2, c2] : t) {
        Scalar c = c1 * c2;
        for (const auto& [k1, s1] : mult[p1.first][p2.first])
          for (const auto& [k2, s2] : mult[p1.second][p2.second])
            tensor_add(r, k1, k2, c * s1 * s2);
      }
    return r;
  }

  bool tensor_eq(const Tensor& s, const Tensor& t) const { return s == t; }
};

// ---------------------------------------------------------------------------
// Axiom verification

struct VerifyReport {
  struct Item {
    std::string axiom;
    bool pass = true;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
  std::string summary() const {
    std::string s;
    for (const auto& it : items) {
      s += (it.pass ? "pass  " : "FAIL  ") + it.axiom;
      if (!it.pass && !it.witness.empty()) s += "  [witness: " + it.witness + "]";
      s += "\n";
    }
    return s;
  }
};

inline VerifyReport verify_hopf(const HopfAlgebra& A) {
  if (static_cast<int>(A.labels.size()) != A.dim ||
      static_cast<int>(A.mult.size()) != A.dim || static_cast<int>(A.comult.size()) != A.dim ||
      static_cast<int>(A.unit.size()) != A.dim || static_cast<int>(A.counit.size()) != A.dim ||
      static_cast<int>(A.antipode.size()) != A.dim)
    throw error("dimension mismatch in Hopf algebra data");
  VerifyReport rep;
  auto add = [&](const std::string& ax, bool pass, const std::string& wit) {
    rep.items.push_back({ax, pass, pass ? "" : wit});
  };

  // associativity
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i)
      for (int j = 0; j < A.dim && ok; ++j) {
        Vec ij = A.mul_vec(A.basis_vec(i), A.basis_vec(j));
        for (int k = 0; k < A.dim && ok; ++k) {
          Vec l = A.mul_vec(ij, A.basis_vec(k));
          Vec r = A.mul_vec(A.basis_vec(i), A.mul_vec(A.basis_vec(j), A.basis_vec(k)));
          if (l != r) {
            ok = false;
            wit = A.labels[i] + "," + A.labels[j] + "," + A.labels[k];
          }
        }
      }
    add("associativity", ok, wit);
  }
  // unit
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i) {
      if (A.mul_vec(A.unit, A.basis_vec(i)) != A.basis_vec(i) ||
          A.mul_vec(A.basis_vec(i), A.unit) != A.basis_vec(i)) {
        ok = false;
        wit = A.labels[i];
      }
    }
    add("unit", ok, wit);
  }
  // coassociativity
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i) {
      Tensor3 l, r;
      for (const auto& [j, k, c] : A.comult[i]) {
        for (const auto& [p, q, c2] : A.comult[j]) tensor3_add(l, p, q, k, c * c2);
        for (const auto& [p, q, c2] : A.comult[k]) tensor3_add(r, j, p, q, c * c2);
      }
      if (l != r) {
        ok = false;
        wit = A.labels[i];
      }
    }
    add("coassociativity", ok, wit);
  }
  // counit
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i) {
      Vec l = zero_vec(A.field, A.dim), r = zero_vec(A.field, A.dim);
      for (const auto& [j, k, c] : A.comult[i]) {
        l[k] = l[k] + c * A.counit[j];
        r[j] = r[j] + c * A.counit[k];
      }
      if (l != A.basis_vec(i) || r != A.basis_vec(i)) {
        ok = false;
        wit = A.labels[i];
      }
    }
    add("counit", ok, wit);
  }
  // bialgebra: D and eps are algebra maps
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < A.dim && ok; ++i)
      for (int j = 0; j < A.dim && ok; ++j) {
        Vec prod = A.mul_vec(A.basis_vec(i), A.basis_vec(j));
        Tensor l = A.comult_vec(prod);
        Tensor r = A.tensor_mul(A.comult_vec(A.basis_vec(i)), A.comult_vec(A.basis_vec(j)));
        if (l != r) {
          ok = false;
          wit = A.labels[i] + "," + A.labels[j];
          break;
        }
        if (A.counit_vec(prod) != A.counit[i] * A.counit[j]) {
          ok = false;
          wit = A.labels[i] + "," + A.labels[j];
        }
      }
    add("bialgebra-mult", ok, wit);
  }
  {
    bool ok = true;
    Tensor du = A.comult_vec(A.unit);
    Tensor uu;
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) tensor_add(uu, i, j, A.unit[i] * A.unit[j]);
    if (du != uu) ok = false;
    if (!(A.counit_vec(A.unit) == A.field->one())) ok = false;
    add("bialgebra-unit", ok, "1");
  }
  // antipode identities
  {
    bool okl = true, okr = true;
    std::string witl, witr;
    for (int i = 0; i < A.dim; ++i) {
      Vec l = zero_vec(A.field, A.dim), r = zero_vec(A.field, A.dim);
      for (const auto& [j, k, c] : A.comult[i]) {
        Vec sl = A.mul_vec(vec_scale(c, A.antipode[j]), A.basis_vec(k));
        Vec sr = A.mul_vec(vec_scale(c, A.basis_vec(j)), A.antipode[k]);
        l = vec_add(l, sl);
        r = vec_add(r, sr);
      }
      Vec want = vec_scale(A.counit[i], A.unit);
      if (okl && l != want) {
        okl = false;
        witl = A.labels[i];
      }
      if (okr && r != want) {
        okr = false;
        witr = A.labels[i];
      }
    }
    add("antipode-left", okl, witl);
    add("antipode-right", okr, witr);
  }
  return rep;
}

// J is a Hopf algebra map iff it respects m, 1, D, eps, S.
inline bool is_hopf_map(const HopfAlgebra& A, const Mat& J) {
  auto apply = [&](const Vec& v) { return vec_mat(v, J); };
  if (apply(A.unit) != A.unit) return false;
  for (int i = 0; i < A.dim; ++i) {
    if (A.antipode_vec(apply(A.basis_vec(i))) != apply(A.antipode_vec(A.basis_vec(i))))
      return false;
    if (!(A.counit_vec(apply(A.basis_vec(i))) == A.counit[i])) return false;
    // (J (x) J) Delta == Delta J
    Tensor lhs;
    for (const auto& [j, k, c] : A.comult[i])
      for (int a = 0; a < A.dim; ++a)
        for (int b = 0; b < A.dim; ++b) tensor_add(lhs, a, b, c * J.at(j, a) * J.at(k, b));
    Tensor rhs = A.comult_vec(apply(A.basis_vec(i)));
    if (lhs != rhs) return false;
    for (int j = 0; j < A.dim; ++j) {
      Vec l = apply(A.mul_vec(A.basis_vec(i), A.basis_vec(j)));
      Vec r = A.mul_vec(apply(A.basis_vec(i)), apply(A.basis_vec(j)));
      if (l != r) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// k^G and kG

inline HopfAlgebra dual_group_hopf(const FieldPtr& F, const FiniteGroup& G) {
  int n = G.order;
  HopfAlgebra A(F, n);
  for (int s = 0; s < n; ++s) A.labels[s] = "d(" + G.labels[s] + ")";
  Scalar one = F->one();
  for (int s = 0; s < n; ++s) {
    A.set_mult(s, s, s, one);
    A.unit[s] = one;
    A.counit[s] = (s == G.identity) ? one : F->zero();
    A.antipode[s][G.inv(s)] = one;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (G.mul(a, b) == s) A.set_comult(s, a, b, one);
  }
  return A;
}

inline HopfAlgebra group_algebra(const FieldPtr& F, const FiniteGroup& G) {
  int n = G.order;
  HopfAlgebra A(F, n);
  A.labels = G.labels;
  Scalar one = F->one();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) A.set_mult(a, b, G.mul(a, b), one);
    A.set_comult(a, a, a, one);
    A.counit[a] = one;
    A.antipode[a][G.inv(a)] = one;
  }
  A.unit[G.identity] = one;
  return A;
}

// ---------------------------------------------------------------------------
// Hopf categories: a Hopf algebra with a distinguished k^G idempotent family

struct HopfCategory {
  FiniteGroup group;
  HopfAlgebra algebra;
  std::vector<Vec> idempotents;                    // per group element
  std::vector<std::pair<int, int>> basis_objects;  // (target y, source x) per basis index
};

// hom-space membership: e = delta_y e delta_x
inline void compute_basis_objects(HopfCategory& C) {
  C.basis_objects.assign(C.algebra.dim, {-1, -1});
  for (int i = 0; i < C.algebra.dim; ++i) {
    for (int y = 0; y < C.group.order && C.basis_objects[i].first < 0; ++y)
      for (int x = 0; x < C.group.order; ++x) {
        Vec v = C.algebra.mul_vec(C.idempotents[y],
                                  C.algebra.mul_vec(C.algebra.basis_vec(i), C.idempotents[x]));
        if (v == C.algebra.basis_vec(i)) {
          C.basis_objects[i] = {y, x};
          break;
        }
      }
    if (C.basis_objects[i].first < 0)
      throw error("algebra basis is not aligned with the hom-space decomposition");
  }
}

inline HopfCategory trivial_hopf_category(const FieldPtr& F, const FiniteGroup& G) {
  HopfCategory C;
  C.group = G;
  C.algebra = dual_group_hopf(F, G);
  for (int s = 0; s < G.order; ++s) C.idempotents.push_back(C.algebra.basis_vec(s));
  for (int s = 0; s < G.order; ++s) C.basis_objects.push_back({s, s});
  return C;
}

// view a Hopf algebra as a Hopf category with one object
inline HopfCategory as_single_object_category(HopfAlgebra A) {
  HopfCategory C;
  C.group = FiniteGroup::cyclic(1);
  C.idempotents.push_back(A.unit);
  C.basis_objects.assign(A.dim, {0, 0});
  C.algebra = std::move(A);
  return C;
}

// ---------------------------------------------------------------------------
// Taft categories. Basis: path classes p(u,l) from object t^u of length l,
// 0 <= l < n; composition is concatenation, zero at total length >= n.

namespace detail {

inline HopfCategory taft_category_raw(const FieldPtr& F, int n, const Scalar& q) {
  HopfCategory C;
  C.group = FiniteGroup::cyclic(n);
  int dim = n * n;
  HopfAlgebra A(F, dim);
  auto idx = [&](int u, int l) { return ((u % n + n) % n) * n + l; };
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l)
      A.labels[idx(u, l)] =
          l == 0 ? "1_(" + C.group.labels[u] + ")" : "p(" + C.group.labels[u] + ",+" + std::to_string(l) + ")";
  Scalar one = F->one();
  // product: p(v,m) o p(u,l) defined when v = t^l u, vanishing at length >= n
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) {
        if (l + m >= n) continue;
        A.set_mult(idx(u + l, m), idx(u, l), idx(u, l + m), one);
      }
  for (int u = 0; u < n; ++u) A.unit[idx(u, 0)] = one;
  // coproduct on identities and generators, extended multiplicatively
  std::vector<Tensor> delta(dim);
  for (int u = 0; u < n; ++u) {
    Tensor t;
    for (int j = 0; j < n; ++j) tensor_add(t, idx(j, 0), idx(u - j, 0), one);
    delta[idx(u, 0)] = std::move(t);
  }
  for (int i = 0; i < n; ++i) {
    Tensor t;
    for (int j = 0; j < n; ++j) {
      int k = ((i - j) % n + n) % n;
      tensor_add(t, idx(j, 0), idx(k, 1), one);
      tensor_add(t, idx(j, 1), idx(k, 0), q.pow(k));
    }
    delta[idx(i, 1)] = std::move(t);
  }
  // longer paths: products of the generator coproducts need the tensor product
  // over A, so fill mult first (done) and multiply step by step
  for (int l = 2; l < n; ++l)
    for (int u = 0; u < n; ++u)
      delta[idx(u, l)] = A.tensor_mul(delta[idx(u + l - 1, 1)], delta[idx(u, l - 1)]);
  for (int i = 0; i < dim; ++i)
    for (const auto& [p, c] : delta[i]) A.set_comult(i, p.first, p.second, c);
  // counit
  for (int u = 0; u < n; ++u) A.counit[idx(u, 0)] = (u == 0) ? one : F->zero();
  // antipode: S(1_u) = 1_{u^{-1}}, S(a_{t^j}) = -q^{j+1} a_{t^{-j-1}},
  // extended contravariantly
  std::vector<Vec> S(dim, zero_vec(F, dim));
  for (int u = 0; u < n; ++u) S[idx(u, 0)][idx(-u, 0)] = one;
  for (int j = 0; j < n; ++j) S[idx(j, 1)][idx(-j - 1, 1)] = -q.pow(j + 1);
  for (int l = 2; l < n; ++l)
    for (int u = 0; u < n; ++u) {
      // S(p(u,l)) = S(a_{t^u}) S(a_{t^{u+1}}) ... S(a_{t^{u+l-1}})
      Vec acc = S[idx(u, 1)];
      for (int r = 1; r < l; ++r) acc = A.mul_vec(acc, S[idx(u + r, 1)]);
      S[idx(u, l)] = std::move(acc);
    }
  A.antipode = std::move(S);
  C.algebra = std::move(A);
  for (int u = 0; u < n; ++u) C.idempotents.push_back(C.algebra.basis_vec(idx(u, 0)));
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l) C.basis_objects.push_back({(u + l) % n, u});
  return C;
}

}  // namespace detail

inline HopfCategory taft_category(const FieldPtr& F, int n, const Scalar& q) {
  if (n < 2) throw error("Taft category needs n >= 2");
  // q must be a primitive n-th root of unity
  bool primitive = !q.is_zero() && q.pow(n).is_one();
  if (primitive) {
    for (int d = 1; d < n; ++d)
      if (n % d == 0 && q.pow(d).is_one()) {
        primitive = false;
        break;
      }
  }
  if (!primitive) throw error("q is not a primitive root of unity of order " + std::to_string(n));
  return detail::taft_category_raw(F, n, q);
}

// ---------------------------------------------------------------------------
// Peirce category of an algebra with a k^G idempotent family, and back

inline void check_idempotent_family(const HopfAlgebra& H, const std::vector<Vec>& idem,
                                    const FiniteGroup& G) {
  if (static_cast<int>(idem.size()) != G.order)
    throw error("idempotent family size must equal the group order");
  Vec sum = zero_vec(H.field, H.dim);
  for (int s = 0; s < G.order; ++s) {
    sum = vec_add(sum, idem[s]);
    for (int t = 0; t < G.order; ++t) {
      Vec prod = H.mul_vec(idem[s], idem[t]);
      Vec want = (s == t) ? idem[s] : zero_vec(H.field, H.dim);
      if (prod != want) throw error("idempotent family is not orthogonal idempotent");
    }
  }
  if (sum != H.unit) throw error("idempotent family is not complete");
  for (int s = 0; s < G.order; ++s) {
    // Delta delta_s = sum_{s'' s' = s} delta_{s''} (x) delta_{s'}
    Tensor want;
    for (int a = 0; a < G.order; ++a)
      for (int b = 0; b < G.order; ++b)
        if (G.mul(a, b) == s)
          for (int i = 0; i < H.dim; ++i)
            for (int j = 0; j < H.dim; ++j) tensor_add(want, i, j, idem[a][i] * idem[b][j]);
    if (H.comult_vec(idem[s]) != want)
      throw error("idempotent family does not span a k^G Hopf subalgebra (coproduct)");
    if (H.antipode_vec(idem[s]) != idem[G.inv(s)])
      throw error("idempotent family does not span a k^G Hopf subalgebra (antipode)");
    Scalar eps = H.counit_vec(idem[s]);
    if (!(eps == ((s == G.identity) ? H.field->one() : H.field->zero())))
      throw error("idempotent family does not span a k^G Hopf subalgebra (counit)");
  }
}

inline HopfCategory peirce(const HopfAlgebra& H, const std::vector<Vec>& idem,
                           const FiniteGroup& G) {
  check_idempotent_family(H, idem, G);
  // hom-aligned basis: row reduce {delta_y e_i delta_x} per object pair
  std::vector<Vec> rows;
  std::vector<std::pair<int, int>> objs;
  for (int y = 0; y < G.order; ++y)
    for (int x = 0; x < G.order; ++x) {
      std::vector<Vec> span;
      for (int i = 0; i < H.dim; ++i) {
        Vec v = H.mul_vec(idem[y], H.mul_vec(H.basis_vec(i), idem[x]));
        if (!vec_is_zero(v)) span.push_back(std::move(v));
      }
      if (span.empty()) continue;
      Rref rr = rref(Mat::from_rows(H.field, span));
      for (int r = 0; r < rr.rank; ++r) {
        rows.push_back(rr.reduced.row(r));
        objs.push_back({y, x});
      }
    }
  if (static_cast<int>(rows.size()) != H.dim)
    throw error("hom spaces do not decompose the algebra");
  Mat T = Mat::from_rows(H.field, rows);
  auto Tinv_opt = inverse(T);
  if (!Tinv_opt) throw error("hom spaces do not decompose the algebra");
  Mat Tinv = *Tinv_opt;

  auto to_new = [&](const Vec& v) { return vec_mat(v, Tinv); };

  HopfCategory C;
  C.group = G;
  HopfAlgebra A(H.field, H.dim);
  for (int i = 0; i < H.dim; ++i)
    A.labels[i] = "h(" + G.labels[objs[i].first] + "," + G.labels[objs[i].second] + ";" +
                  std::to_string(i) + ")";
  for (int i = 0; i < H.dim; ++i) {
    for (int j = 0; j < H.dim; ++j) {
      Vec prod = to_new(H.mul_vec(rows[i], rows[j]));
      for (int k = 0; k < H.dim; ++k)
        if (!prod[k].is_zero()) A.set_mult(i, j, k, prod[k]);
    }
    Tensor t = H.comult_vec(rows[i]);
    Tensor tn;
    for (const auto& [p, c] : t)
      for (int a = 0; a < H.dim; ++a) {
        if (Tinv.at(p.first, a).is_zero()) continue;
        for (int b = 0; b < H.dim; ++b)
          tensor_add(tn, a, b, c * Tinv.at(p.first, a) * Tinv.at(p.second, b));
      }
    for (const auto& [p, c] : tn) A.set_comult(i, p.first, p.second, c);
    A.counit[i] = H.counit_vec(rows[i]);
    A.antipode[i] = to_new(H.antipode_vec(rows[i]));
  }
  A.unit = to_new(H.unit);
  C.algebra = std::move(A);
  for (int s = 0; s < G.order; ++s) C.idempotents.push_back(to_new(idem[s]));
  C.basis_objects = std::move(objs);
  return C;
}

// the canonical internal form of a Hopf category is its sum-algebra
inline const HopfAlgebra& sum_algebra(const HopfCategory& C) { return C.algebra; }

// ---------------------------------------------------------------------------
// Turaev view: Hopf G-coalgebras <-> Hopf categories with zero cross-object
// morphisms

struct GCoalgebraView {
  FiniteGroup group;
  FieldPtr field;
  std::vector<std::vector<int>> comp_basis;  // parent basis indices of H_s
  // per-component multiplication over local indices
  std::vector<std::vector<std::vector<std::vector<std::pair<int, Scalar>>>>> mult;
  std::vector<Vec> unit;  // unit of H_s, local coords
  // Delta_{s'', s'} : H_{s'' s'} -> H_{s''} (x) H_{s'}; entries (i, j, k, c):
  // source local index i maps to c * e_j (x) e_k
  std::map<std::pair<int, int>, std::vector<std::tuple<int, int, int, Scalar>>> delta;
  Vec counit;                 // on H_1, local coords
  std::vector<Mat> antipode;  // S_s : H_s -> H_{s^{-1}}, local coords
};

inline GCoalgebraView to_turaev(const HopfCategory& C) {
  const auto& G = C.group;
  const auto& A = C.algebra;
  for (int i = 0; i < A.dim; ++i)
    if (C.basis_objects[i].first != C.basis_objects[i].second)
      throw error("category has nonzero morphisms between different objects");
  GCoalgebraView V;
  V.group = G;
  V.field = A.field;
  V.comp_basis.assign(G.order, {});
  std::vector<int> local(A.dim, -1);
  for (int i = 0; i < A.dim; ++i) {
    int s = C.basis_objects[i].first;
    local[i] = static_cast<int>(V.comp_basis[s].size());
    V.comp_basis[s].push_back(i);
  }
  V.mult.assign(G.order, {});
  V.unit.clear();
  for (int s = 0; s < G.order; ++s) {
    int d = static_cast<int>(V.comp_basis[s].size());
    V.mult[s].assign(d, std::vector<std::vector<std::pair<int, Scalar>>>(d));
    Vec u(d, A.field->zero());
    for (int li = 0; li < d; ++li) {
      int i = V.comp_basis[s][li];
      u[li] = C.idempotents[s][i];
      for (int lj = 0; lj < d; ++lj) {
        int j = V.comp_basis[s][lj];
        for (const auto& [k, c] : A.mult[i][j]) V.mult[s][li][lj].push_back({local[k], c});
      }
    }
    V.unit.push_back(std::move(u));
  }
  // comultiplication components by projecting
  for (int i = 0; i < A.dim; ++i) {
    int s = C.basis_objects[i].first;
    for (const auto& [j, k, c] : A.comult[i]) {
      int s2 = C.basis_objects[j].first, s1 = C.basis_objects[k].first;
      if (G.mul(s2, s1) != s) throw error("coproduct does not respect object factorizations");
      V.delta[{s2, s1}].push_back({local[i], local[j], local[k], c});
    }
  }
  // counit on H_1
  {
    int d = static_cast<int>(V.comp_basis[G.identity].size());
    V.counit = Vec(d, A.field->zero());
    for (int li = 0; li < d; ++li) V.counit[li] = A.counit[V.comp_basis[G.identity][li]];
  }
  // antipodes
  V.antipode.clear();
  for (int s = 0; s < G.order; ++s) {
    int si = G.inv(s);
    Mat S(A.field, static_cast<int>(V.comp_basis[s].size()),
          static_cast<int>(V.comp_basis[si].size()));
    for (std::size_t li = 0; li < V.comp_basis[s].size(); ++li) {
      Vec img = A.antipode[V.comp_basis[s][li]];
      for (int j = 0; j < A.dim; ++j) {
        if (img[j].is_zero()) continue;
        if (C.basis_objects[j].first != si) throw error("antipode does not invert objects");
        S.at(static_cast<int>(li), local[j]) = img[j];
      }
    }
    V.antipode.push_back(std::move(S));
  }
  return V;
}

inline HopfCategory from_turaev(const GCoalgebraView& V) {
  const auto& G = V.group;
  int dim = 0;
  std::vector<std::pair<int, int>> where;  // component s, local index
  std::vector<std::vector<int>> global(G.order);
  for (int s = 0; s < G.order; ++s)
    for (std::size_t li = 0; li < V.comp_basis[s].size(); ++li) {
      global[s].push_back(dim);
      where.push_back({s, static_cast<int>(li)});
      ++dim;
    }
  HopfCategory C;
  C.group = G;
  HopfAlgebra A(V.field, dim);
  for (int g = 0; g < dim; ++g) {
    auto [s, li] = where[g];
    A.labels[g] = "H(" + G.labels[s] + ";" + std::to_string(li) + ")";
  }
  for (int s = 0; s < G.order; ++s) {
    int d = static_cast<int>(V.comp_basis[s].size());
    for (int li = 0; li < d; ++li)
      for (int lj = 0; lj < d; ++lj)
        for (const auto& [lk, c] : V.mult[s][li][lj])
          A.set_mult(global[s][li], global[s][lj], global[s][lk], c);
    for (int li = 0; li < d; ++li) A.unit[global[s][li]] = V.unit[s][li];
  }
  for (const auto& [key, entries] : V.delta) {
    auto [s2, s1] = key;
    int s = G.mul(s2, s1);
    for (const auto& [i, j, k, c] : entries)
      A.set_comult(global[s][i], global[s2][j], global[s1][k], c);
  }
  for (std::size_t li = 0; li < V.comp_basis[G.identity].size(); ++li)
    A.counit[global[G.identity][static_cast<int>(li)]] = V.counit[li];
  for (int s = 0; s < G.order; ++s) {
    int si = G.inv(s);
    for (int li = 0; li < V.antipode[s].rows(); ++li)
      for (int lj = 0; lj < V.antipode[s].cols(); ++lj)
        A.antipode[global[s][li]][global[si][lj]] = V.antipode[s].at(li, lj);
  }
  C.algebra = std::move(A);
  for (int s = 0; s < G.order; ++s) {
    Vec e = zero_vec(V.field, dim);
    for (std::size_t li = 0; li < V.comp_basis[s].size(); ++li)
      e[global[s][li]] = V.unit[s][li];
    C.idempotents.push_back(std::move(e));
  }
  for (int g = 0; g < dim; ++g) C.basis_objects.push_back({where[g].first, where[g].first});
  return C;
}

// ---------------------------------------------------------------------------
// Hopf automorphisms of k^G: induced by group automorphisms, (Jf)(x) = f(sx)

inline std::vector<std::vector<int>> group_automorphisms(const FiniteGroup& G) {
  // brute force over bijections fixing identity with the homomorphism property;
  // desk-scale orders only
  int n = G.order;
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  // backtracking over images
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  img[G.identity] = G.identity;
  used[G.identity] = true;
  std::vector<int> order;  // elements to assign
  for (int a = 0; a < n; ++a)
    if (a != G.identity) order.push_back(a);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (img[G.mul(a, b)] != G.mul(img[a], img[b])) return;
      out.push_back(img);
      return;
    }
    int a = order[pos];
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (G.element_order(a) != G.element_order(v)) continue;
      img[a] = v;
      used[v] = true;
      // partial consistency: products among assigned elements
      bool ok = true;
      for (std::size_t p = 0; p <= pos && ok; ++p) {
        int b = order[p];
        int ab = G.mul(a, b), ba = G.mul(b, a);
        if (img[ab] >= 0 && img[ab] != G.mul(img[a], img[b])) ok = false;
        if (img[ba] >= 0 && img[ba] != G.mul(img[b], img[a])) ok = false;
      }
      if (ok) rec(pos + 1);
      img[a] = -1;
      used[v] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

// automorphism matrices of k^G on the Dirac basis: J(delta_s) = delta_{s^{-1}(s)}
inline std::vector<Mat> hopf_automorphisms(const HopfAlgebra& kG_dual, const FiniteGroup& G) {
  if (kG_dual.dim != G.order) throw error("algebra is not k^G for the given group");
  std::vector<Mat> out;
  for (const auto& sigma : group_automorphisms(G)) {
    // sigma_inv
    std::vector<int> inv(G.order);
    for (int a = 0; a < G.order; ++a) inv[sigma[a]] = a;
    Mat J(kG_dual.field, G.order, G.order);
    for (int s = 0; s < G.order; ++s) J.at(s, inv[s]) = kG_dual.field->one();
    if (!is_hopf_map(kG_dual, J)) throw error("induced map is not a Hopf automorphism");
    out.push_back(std::move(J));
  }
  return out;
}

// brute-force cross-check: all Dirac-basis permutations that are Hopf maps
inline std::vector<Mat> hopf_automorphisms_bruteforce(const HopfAlgebra& kG_dual,
                                                      const FiniteGroup& G) {
  int n = G.order;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Mat> out;
  do {
    Mat J(kG_dual.field, n, n);
    for (int s = 0; s < n; ++s) J.at(s, perm[s]) = kG_dual.field->one();
    if (is_hopf_map(kG_dual, J)) out.push_back(std::move(J));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace hopfcat
