#pragma once

// Finite groups by Cayley table, finite abelian groups in invariant-factor
// form, characters, epimorphisms, Smith normal form over Z, limits of finite
// diagrams, and inversion-stable partitions of cyclic groups.

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>

#include "hopfcat/linalg.hpp"
#include "hopfcat/scalars.hpp"

namespace hopfcat {

// ---------------------------------------------------------------------------
// Cayley-table groups

struct FiniteGroup {
  int order = 1;
  std::vector<int> table;  // table[a*order+b] = a*b
  int identity = 0;
  std::vector<int> inverse;
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[a * order + b]; }
  int inv(int a) const { return inverse[a]; }
  int pow(int a, long k) const {
    long o = element_order(a);
    k %= o;
    if (k < 0) k += o;
    int r = identity;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  int element_order(int a) const {
    int r = a, n = 1;
    while (r != identity) {
      r = mul(r, a);
      ++n;
    }
    return n;
  }

  static FiniteGroup from_table(std::vector<int> tab, std::vector<std::string> lab = {}) {
    FiniteGroup g;
    int n = static_cast<int>(std::lround(std::sqrt(double(tab.size()))));
    if (n * n != static_cast<int>(tab.size())) throw error("table must be square");
    g.order = n;
    g.table = std::move(tab);
    // identity
    g.identity = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n; ++a)
        if (g.mul(e, a) != a || g.mul(a, e) != a) {
          ok = false;
          break;
        }
      if (ok) {
        g.identity = e;
        break;
      }
    }
    if (g.identity < 0) throw error("group has no identity");
    // associativity
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
            throw error("multiplication table is not associative");
    // inverses
    g.inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
          g.inverse[a] = b;
          break;
        }
      if (g.inverse[a] < 0) throw error("group element has no inverse");
    }
    if (lab.empty()) {
      for (int a = 0; a < n; ++a) lab.push_back("g" + std::to_string(a));
    }
    g.labels = std::move(lab);
    return g;
  }

  static FiniteGroup cyclic(int n) {
    if (n <= 0) throw error("cyclic group order must be positive");
    std::vector<int> tab(n * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) tab[a * n + b] = (a + b) % n;
    std::vector<std::string> lab;
    for (int a = 0; a < n; ++a)
      lab.push_back(a == 0 ? "1" : (a == 1 ? "t" : "t^" + std::to_string(a)));
    return from_table(std::move(tab), std::move(lab));
  }

  static FiniteGroup product(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order * B.order;
    std::vector<int> tab(n * n);
    auto idx = [&](int a, int b) { return a * B.order + b; };
    for (int a1 = 0; a1 < A.order; ++a1)
      for (int b1 = 0; b1 < B.order; ++b1)
        for (int a2 = 0; a2 < A.order; ++a2)
          for (int b2 = 0; b2 < B.order; ++b2)
            tab[idx(a1, b1) * n + idx(a2, b2)] = idx(A.mul(a1, a2), B.mul(b1, b2));
    std::vector<std::string> lab;
    for (int a = 0; a < A.order; ++a)
      for (int b = 0; b < B.order; ++b) lab.push_back("(" + A.labels[a] + "," + B.labels[b] + ")");
    return from_table(std::move(tab), std::move(lab));
  }
};

// ---------------------------------------------------------------------------
// Finite abelian groups, elements as residue tuples over the invariant factors

using AbTuple = std::vector<long>;

struct FiniteAbelianGroup {
  std::vector<long> factors;  // m1 | m2 | ... , each >= 2; empty = trivial

  static FiniteAbelianGroup trivial() { return {}; }
  static FiniteAbelianGroup cyclic(long n) {
    if (n <= 0) throw error("cyclic group order must be positive");
    FiniteAbelianGroup g;
    if (n > 1) g.factors = {n};
    return g;
  }
  static FiniteAbelianGroup product(const std::vector<long>& fs) {
    // normalizes an arbitrary factor list to invariant-factor form
    FiniteAbelianGroup g;
    std::vector<long> cur;
    for (long f : fs)
      if (f > 1) cur.push_back(f);
    // repeatedly replace (a, b) by (gcd, lcm) until chain condition holds
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < cur.size(); ++i)
        for (std::size_t j = i + 1; j < cur.size(); ++j) {
          if (cur[j] % cur[i] != 0) {
            long g2 = std::gcd(cur[i], cur[j]);
            long l2 = cur[i] / g2 * cur[j];
            cur[i] = g2;
            cur[j] = l2;
            changed = true;
          }
        }
      cur.erase(std::remove(cur.begin(), cur.end(), 1L), cur.end());
      std::sort(cur.begin(), cur.end());
    }
    g.factors = cur;
    return g;
  }

  int rank() const { return static_cast<int>(factors.size()); }
  mpz_class order() const {
    mpz_class o = 1;
    for (long f : factors) o *= f;
    return o;
  }
  long exponent() const {
    return factors.empty() ? 1 : factors.back();
  }
  bool is_trivial() const { return factors.empty(); }

  AbTuple zero() const { return AbTuple(factors.size(), 0); }
  AbTuple reduce(AbTuple x) const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      x[i] %= factors[i];
      if (x[i] < 0) x[i] += factors[i];
    }
    return x;
  }
  AbTuple add(const AbTuple& a, const AbTuple& b) const {
    AbTuple r(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) r[i] = (a[i] + b[i]) % factors[i];
    return r;
  }
  AbTuple neg(const AbTuple& a) const {
    AbTuple r(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) r[i] = (factors[i] - a[i]) % factors[i];
    return r;
  }
  AbTuple scale(long k, const AbTuple& a) const {
    AbTuple r(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      long v = (a[i] % factors[i]) * (k % factors[i]) % factors[i];
      if (v < 0) v += factors[i];
      r[i] = v;
    }
    return r;
  }
  bool is_zero(const AbTuple& a) const {
    for (long v : a)
      if (v != 0) return false;
    return true;
  }
  long element_order(const AbTuple& a) const {
    long o = 1;
    for (std::size_t i = 0; i < factors.size(); ++i)
      o = std::lcm(o, factors[i] / std::gcd(factors[i], a[i] == 0 ? factors[i] : a[i]));
    return o;
  }
  std::vector<AbTuple> generators() const {
    std::vector<AbTuple> g;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      AbTuple e = zero();
      e[i] = 1;
      g.push_back(e);
    }
    return g;
  }
  std::vector<AbTuple> elements() const {
    mpz_class o = order();
    if (o > 2000000) throw error("group too large to enumerate");
    std::vector<AbTuple> out;
    AbTuple cur = zero();
    out.push_back(cur);
    while (true) {
      std::size_t i = 0;
      while (i < factors.size()) {
        if (++cur[i] < factors[i]) break;
        cur[i] = 0;
        ++i;
      }
      if (i == factors.size()) break;
      out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  FiniteGroup cayley() const {
    auto els = elements();
    int n = static_cast<int>(els.size());
    std::map<AbTuple, int> index;
    for (int i = 0; i < n; ++i) index[els[i]] = i;
    std::vector<int> tab(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) tab[i * n + j] = index.at(add(els[i], els[j]));
    std::vector<std::string> lab;
    for (const auto& e : els) {
      std::string s = "(";
      for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
      lab.push_back(s + ")");
    }
    return FiniteGroup::from_table(std::move(tab), std::move(lab));
  }

  bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }

  std::string to_string() const {
    if (factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i)
      s += (i ? "x" : "") + std::string("C") + std::to_string(factors[i]);
    return s;
  }
};

struct GroupHom {
  FiniteAbelianGroup src, dst;
  std::vector<AbTuple> images;  // image of each source generator

  AbTuple apply(const AbTuple& x) const {
    AbTuple r = dst.zero();
    for (std::size_t i = 0; i < images.size(); ++i) r = dst.add(r, dst.scale(x[i], images[i]));
    return r;
  }
  bool well_defined() const {
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!dst.is_zero(dst.scale(src.factors[i], images[i]))) return false;
    return true;
  }
  static GroupHom compose(const GroupHom& g, const GroupHom& f) {
    // g after f
    if (!(f.dst == g.src)) throw error("homomorphisms not composable");
    GroupHom h;
    h.src = f.src;
    h.dst = g.dst;
    for (const auto& im : f.images) h.images.push_back(g.apply(im));
    return h;
  }
  static GroupHom identity(const FiniteAbelianGroup& g) {
    GroupHom h;
    h.src = h.dst = g;
    h.images = g.generators();
    return h;
  }
  bool operator==(const GroupHom& o) const {
    return src == o.src && dst == o.dst && images == o.images;
  }
  bool operator<(const GroupHom& o) const { return images < o.images; }
};

// cyclic(n): one group, two views sharing the element indexing t^a <-> a
struct CyclicViews {
  FiniteGroup cayley;
  FiniteAbelianGroup abelian;
};

inline CyclicViews cyclic(int n) {
  if (n <= 0) throw error("cyclic group order must be positive");
  return CyclicViews{FiniteGroup::cyclic(n), FiniteAbelianGroup::cyclic(n)};
}

// ---------------------------------------------------------------------------
// Characters with values in a field

struct Character {
  FieldPtr field;
  FiniteAbelianGroup group;
  std::vector<Scalar> gen_values;  // value on each invariant-factor generator

  Scalar eval(const AbTuple& x) const {
    Scalar r = field->one();
    for (std::size_t i = 0; i < gen_values.size(); ++i) r = r * gen_values[i].pow(x[i]);
    return r;
  }
  bool is_trivial() const {
    for (const auto& v : gen_values)
      if (!v.is_one()) return false;
    return true;
  }
  Character times(const Character& o) const {
    Character r = *this;
    for (std::size_t i = 0; i < gen_values.size(); ++i) r.gen_values[i] = gen_values[i] * o.gen_values[i];
    return r;
  }
  bool operator==(const Character& o) const { return gen_values == o.gen_values; }
};

// All homomorphisms G -> k^* (into the torsion units of the field).
inline std::vector<Character> characters(const FiniteAbelianGroup& G, const FieldPtr& F) {
  std::vector<std::vector<Scalar>> per_gen;
  for (long m : G.factors) {
    auto roots = F->roots_of_unity_dividing(static_cast<unsigned long>(m));
    std::sort(roots.begin(), roots.end(),
              [](const Scalar& a, const Scalar& b) { return scalar_cmp(a, b) < 0; });
    per_gen.push_back(std::move(roots));
  }
  std::vector<Character> out;
  std::vector<std::size_t> idx(per_gen.size(), 0);
  while (true) {
    Character c;
    c.field = F;
    c.group = G;
    for (std::size_t i = 0; i < per_gen.size(); ++i) c.gen_values.push_back(per_gen[i][idx[i]]);
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < per_gen.size()) {
      if (++idx[i] < per_gen[i].size()) break;
      idx[i] = 0;
      ++i;
    }
    if (i == per_gen.size() || per_gen.empty()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups, epimorphisms

struct SubgroupInfo {
  std::vector<AbTuple> elements;  // sorted
  bool equals_whole = false;
  FiniteAbelianGroup iso_class;
};

inline FiniteAbelianGroup subgroup_iso_class(const std::vector<AbTuple>& gens,
                                             const std::vector<long>& mods,
                                             std::vector<AbTuple>* witnesses);

inline std::vector<AbTuple> closure_elements(const FiniteAbelianGroup& G,
                                             const std::vector<AbTuple>& elems) {
  std::set<AbTuple> seen;
  std::vector<AbTuple> frontier{G.zero()};
  seen.insert(G.zero());
  while (!frontier.empty()) {
    std::vector<AbTuple> next;
    for (const auto& a : frontier)
      for (const auto& g : elems) {
        AbTuple b = G.add(a, G.reduce(g));
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return std::vector<AbTuple>(seen.begin(), seen.end());
}

inline SubgroupInfo subgroup_generated(const FiniteAbelianGroup& G,
                                       const std::vector<AbTuple>& elems) {
  SubgroupInfo info;
  info.elements = closure_elements(G, elems);
  info.equals_whole = (mpz_class(static_cast<long>(info.elements.size())) == G.order());
  info.iso_class = subgroup_iso_class(elems, G.factors, nullptr);
  return info;
}

inline std::vector<GroupHom> all_homomorphisms(const FiniteAbelianGroup& G,
                                               const FiniteAbelianGroup& H) {
  // brute force over generator images with order compatibility
  std::vector<std::vector<AbTuple>> cand;
  auto hel = H.elements();
  for (long m : G.factors) {
    std::vector<AbTuple> ok;
    for (const auto& h : hel)
      if (H.is_zero(H.scale(m, h))) ok.push_back(h);
    cand.push_back(std::move(ok));
  }
  std::vector<GroupHom> out;
  std::vector<std::size_t> idx(cand.size(), 0);
  while (true) {
    GroupHom f;
    f.src = G;
    f.dst = H;
    for (std::size_t i = 0; i < cand.size(); ++i) f.images.push_back(cand[i][idx[i]]);
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < cand.size()) {
      if (++idx[i] < cand[i].size()) break;
      idx[i] = 0;
      ++i;
    }
    if (i == cand.size() || cand.empty()) break;
  }
  return out;
}

inline std::vector<GroupHom> epimorphisms(const FiniteAbelianGroup& G,
                                          const FiniteAbelianGroup& H) {
  std::vector<GroupHom> out;
  for (auto& f : all_homomorphisms(G, H)) {
    auto sub = subgroup_generated(H, f.images);
    if (sub.equals_whole) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all subgroups of a small abelian group, as sorted element lists
inline std::vector<std::vector<AbTuple>> all_subgroups(const FiniteAbelianGroup& G) {
  auto els = G.elements();
  std::set<std::vector<AbTuple>> found;
  std::vector<std::vector<AbTuple>> queue;
  auto trivialsub = closure_elements(G, {});
  found.insert(trivialsub);
  queue.push_back(trivialsub);
  while (!queue.empty()) {
    auto sub = queue.back();
    queue.pop_back();
    for (const auto& e : els) {
      if (std::binary_search(sub.begin(), sub.end(), e)) continue;
      auto gens = sub;
      gens.push_back(e);
      auto bigger = closure_elements(G, gens);
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return std::vector<std::vector<AbTuple>>(found.begin(), found.end());
}

// ---------------------------------------------------------------------------
// Smith normal form over Z with transform tracking

struct ZMat {
  int rows = 0, cols = 0;
  std::vector<mpz_class> a;
  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(r * c, mpz_class(0)) {}
  mpz_class& at(int i, int j) { return a[i * cols + j]; }
  const mpz_class& at(int i, int j) const { return a[i * cols + j]; }
  static ZMat identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  ZMat mul(const ZMat& o) const {
    ZMat r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        if (at(i, k) == 0) continue;
        for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
      }
    return r;
  }
};

struct Smith {
  ZMat D, U, V, Uinv, Vinv;  // U*A*V = D
  std::vector<mpz_class> diag() const {
    std::vector<mpz_class> d;
    for (int i = 0; i < std::min(D.rows, D.cols); ++i) d.push_back(D.at(i, i));
    return d;
  }
};

inline Smith smith_normal_form(ZMat A) {
  int r = A.rows, c = A.cols;
  Smith s;
  s.U = ZMat::identity(r);
  s.Uinv = ZMat::identity(r);
  s.V = ZMat::identity(c);
  s.Vinv = ZMat::identity(c);

  auto row_swap = [&](int i, int j) {
    for (int k = 0; k < c; ++k) std::swap(A.at(i, k), A.at(j, k));
    for (int k = 0; k < r; ++k) std::swap(s.U.at(i, k), s.U.at(j, k));
    for (int k = 0; k < r; ++k) std::swap(s.Uinv.at(k, i), s.Uinv.at(k, j));
  };
  auto col_swap = [&](int i, int j) {
    for (int k = 0; k < r; ++k) std::swap(A.at(k, i), A.at(k, j));
    for (int k = 0; k < c; ++k) std::swap(s.V.at(k, i), s.V.at(k, j));
    for (int k = 0; k < c; ++k) std::swap(s.Vinv.at(i, k), s.Vinv.at(j, k));
  };
  auto row_add = [&](int i, int j, const mpz_class& q) {
    // row_i += q * row_j
    for (int k = 0; k < c; ++k) A.at(i, k) += q * A.at(j, k);
    for (int k = 0; k < r; ++k) s.U.at(i, k) += q * s.U.at(j, k);
    for (int k = 0; k < r; ++k) s.Uinv.at(k, j) -= q * s.Uinv.at(k, i);
  };
  auto col_add = [&](int i, int j, const mpz_class& q) {
    // col_i += q * col_j
    for (int k = 0; k < r; ++k) A.at(k, i) += q * A.at(k, j);
    for (int k = 0; k < c; ++k) s.V.at(k, i) += q * s.V.at(k, j);
    for (int k = 0; k < c; ++k) s.Vinv.at(j, k) -= q * s.Vinv.at(i, k);
  };
  auto row_negate = [&](int i) {
    for (int k = 0; k < c; ++k) A.at(i, k) = -A.at(i, k);
    for (int k = 0; k < r; ++k) s.U.at(i, k) = -s.U.at(i, k);
    for (int k = 0; k < r; ++k) s.Uinv.at(k, i) = -s.Uinv.at(k, i);
  };

  int t = 0;
  int mn = std::min(r, c);
  while (t < mn) {
    // locate smallest nonzero |entry| in the trailing submatrix
    int pi = -1, pj = -1;
    mpz_class best = 0;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        if (A.at(i, j) == 0) continue;
        mpz_class v = abs(A.at(i, j));
        if (pi < 0 || v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t) row_swap(pi, t);
    if (pj != t) col_swap(pj, t);
    bool clean = true;
    for (int i = t + 1; i < r; ++i) {
      if (A.at(i, t) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(i, t).get_mpz_t(), A.at(t, t).get_mpz_t());
      row_add(i, t, -q);
      if (A.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < c; ++j) {
      if (A.at(t, j) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), A.at(t, j).get_mpz_t(), A.at(t, t).get_mpz_t());
      col_add(j, t, -q);
      if (A.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // pivot shrank; repeat at the same t
    // pivot divides the rest? if not, fold the offending row in and retry
    bool divides_all = true;
    for (int i = t + 1; i < r && divides_all; ++i)
      for (int j = t + 1; j < c && divides_all; ++j)
        if (A.at(i, j) % A.at(t, t) != 0) {
          row_add(t, i, 1);
          divides_all = false;
        }
    if (!divides_all) continue;
    if (A.at(t, t) < 0) row_negate(t);
    ++t;
  }
  s.D = std::move(A);
  return s;
}

// ---------------------------------------------------------------------------
// Canonical form of a subgroup of prod Z/m_i given by generators

inline FiniteAbelianGroup subgroup_iso_class(const std::vector<AbTuple>& gens,
                                             const std::vector<long>& mods,
                                             std::vector<AbTuple>* witnesses) {
  int k = static_cast<int>(gens.size());
  if (witnesses) witnesses->clear();
  if (k == 0) return FiniteAbelianGroup::trivial();
  int n = static_cast<int>(mods.size());
  // relation lattice R <= Z^k of the map Z^k -> prod Z/m_i
  // start with R = Z^k (identity basis), intersect one congruence per coord
  ZMat R = ZMat::identity(k);
  for (int c = 0; c < n; ++c) {
    long m = mods[c];
    // values of the congruence on the current basis columns
    std::vector<mpz_class> v(k);
    bool all_zero = true;
    for (int j = 0; j < k; ++j) {
      mpz_class s = 0;
      for (int i = 0; i < k; ++i) s += R.at(i, j) * gens[i][c];
      mpz_mod_ui(s.get_mpz_t(), s.get_mpz_t(), m);
      v[j] = s;
      if (s != 0) all_zero = false;
    }
    if (all_zero) continue;
    // column-combine to make v = (g, 0, ..., 0)
    int lead = -1;
    for (int j = 0; j < k; ++j) {
      if (v[j] == 0) continue;
      if (lead < 0) {
        lead = j;
        continue;
      }
      mpz_class g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), v[lead].get_mpz_t(),
                 v[j].get_mpz_t());
      mpz_class a = v[lead] / g, b = v[j] / g;
      for (int i = 0; i < k; ++i) {
        mpz_class c0 = R.at(i, lead), c1 = R.at(i, j);
        R.at(i, lead) = x * c0 + y * c1;
        R.at(i, j) = -b * c0 + a * c1;
      }
      v[lead] = g;
      v[j] = 0;
    }
    // scale the lead column so the congruence vanishes
    mpz_class g = gcd(v[lead], mpz_class(m));
    mpz_class scale = m / g;
    for (int i = 0; i < k; ++i) R.at(i, lead) *= scale;
  }
  Smith sm = smith_normal_form(R);
  std::vector<long> factors;
  std::vector<int> kept;
  auto d = sm.diag();
  for (int i = 0; i < k; ++i) {
    if (d[i] == 0) throw error("relation lattice not full rank");
    if (d[i] > 1) {
      factors.push_back(d[i].get_si());
      kept.push_back(i);
    }
  }
  FiniteAbelianGroup out = FiniteAbelianGroup::product(factors);
  // product() keeps an already-chained list in order, but re-derive to be safe
  if (out.factors != factors) {
    // the SNF chain is already in divisibility order; they must agree
    throw error("invariant factors out of order");
  }
  if (witnesses) {
    for (int i : kept) {
      // generator = sum_j Uinv[j][i] * gens[j], reduced mod mods
      AbTuple w(n, 0);
      for (int j = 0; j < k; ++j) {
        mpz_class coef = sm.Uinv.at(j, i);
        for (int cdx = 0; cdx < n; ++cdx) {
          mpz_class t = coef * gens[j][cdx] + w[cdx];
          mpz_mod_ui(t.get_mpz_t(), t.get_mpz_t(), mods[cdx]);
          w[cdx] = t.get_si();
        }
      }
      witnesses->push_back(std::move(w));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Quotient of prod Z/m_i by a subgroup K (given by generating tuples), with
// the projection map in canonical coordinates.

struct AbelianQuotient {
  FiniteAbelianGroup group;
  std::vector<long> src_mods;
  std::vector<std::vector<mpz_class>> proj;  // rows: kept U rows
  std::vector<long> proj_mod;                // invariant factor per kept row

  AbTuple apply(const AbTuple& x) const {
    AbTuple r(proj.size(), 0);
    for (std::size_t i = 0; i < proj.size(); ++i) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < x.size(); ++j) s += proj[i][j] * x[j];
      mpz_mod_ui(s.get_mpz_t(), s.get_mpz_t(), proj_mod[i]);
      r[i] = s.get_si();
    }
    return r;
  }
};

inline AbelianQuotient quotient_by_subgroup(const std::vector<long>& mods,
                                            const std::vector<AbTuple>& K_gens) {
  int rdim = static_cast<int>(mods.size());
  ZMat A(rdim, rdim + static_cast<int>(K_gens.size()));
  for (int i = 0; i < rdim; ++i) A.at(i, i) = mods[i];
  for (std::size_t j = 0; j < K_gens.size(); ++j)
    for (int i = 0; i < rdim; ++i) A.at(i, rdim + static_cast<int>(j)) = K_gens[j][i];
  Smith sm = smith_normal_form(std::move(A));
  AbelianQuotient q;
  q.src_mods = mods;
  std::vector<long> factors;
  auto d = sm.diag();
  for (int i = 0; i < rdim; ++i) {
    if (d[i] == 0) throw error("quotient lattice not full rank");
    if (d[i] > 1) {
      factors.push_back(d[i].get_si());
      std::vector<mpz_class> row(rdim);
      for (int j = 0; j < rdim; ++j) row[j] = sm.U.at(i, j);
      q.proj.push_back(std::move(row));
      q.proj_mod.push_back(d[i].get_si());
    }
  }
  q.group = FiniteAbelianGroup::product(factors);
  if (q.group.factors != factors) throw error("invariant factors out of order");
  return q;
}

// ---------------------------------------------------------------------------
// Limits of finite diagrams of abelian groups

struct DiagramEdge {
  int src = 0, dst = 0;
  GroupHom hom;
};

struct LimitResult {
  FiniteAbelianGroup group;
  // generating compatible families, one tuple of node elements per generator
  std::vector<std::vector<AbTuple>> witnesses;
};

namespace detail {

inline std::vector<AbTuple> split_tuple(const AbTuple& flat,
                                        const std::vector<FiniteAbelianGroup>& nodes) {
  std::vector<AbTuple> out;
  std::size_t pos = 0;
  for (const auto& g : nodes) {
    AbTuple e(g.factors.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = flat[pos++];
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace detail

inline LimitResult diagram_limit(const std::vector<FiniteAbelianGroup>& nodes,
                                 const std::vector<DiagramEdge>& edges,
                                 mpz_class brute_bound = 1000000) {
  std::vector<long> mods;
  std::vector<std::size_t> offset;
  for (const auto& g : nodes) {
    offset.push_back(mods.size());
    for (long f : g.factors) mods.push_back(f);
  }
  int n = static_cast<int>(mods.size());
  for (const auto& e : edges) {
    if (e.src < 0 || e.src >= static_cast<int>(nodes.size()) || e.dst < 0 ||
        e.dst >= static_cast<int>(nodes.size()))
      throw error("diagram edge endpoints must be nodes");
    if (!(e.hom.src == nodes[e.src]) || !(e.hom.dst == nodes[e.dst]))
      throw error("diagram edge hom does not match its endpoints");
  }

  std::vector<AbTuple> gens;
  mpz_class total = 1;
  for (const auto& g : nodes) total *= g.order();
  if (total <= brute_bound) {
    // brute force over product tuples
    std::vector<std::vector<AbTuple>> els;
    for (const auto& g : nodes) els.push_back(g.elements());
    std::vector<std::size_t> idx(nodes.size(), 0);
    while (true) {
      bool ok = true;
      for (const auto& e : edges) {
        if (e.hom.apply(els[e.src][idx[e.src]]) != els[e.dst][idx[e.dst]]) {
          ok = false;
          break;
        }
      }
      if (ok) {
        AbTuple flat;
        for (std::size_t k = 0; k < nodes.size(); ++k)
          for (long v : els[k][idx[k]]) flat.push_back(v);
        gens.push_back(std::move(flat));
      }
      std::size_t i = 0;
      while (i < nodes.size()) {
        if (++idx[i] < els[i].size()) break;
        idx[i] = 0;
        ++i;
      }
      if (i == nodes.size() || nodes.empty()) break;
    }
  } else {
    // start from the full product and intersect one congruence per edge and
    // target coordinate: mu(x_src) - x_dst = 0
    gens.clear();
    for (int i = 0; i < n; ++i) {
      AbTuple e(n, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
    for (const auto& e : edges) {
      const auto& src = nodes[e.src];
      const auto& dst = nodes[e.dst];
      for (std::size_t j = 0; j < dst.factors.size(); ++j) {
        long beta = dst.factors[j];
        // congruence coefficients over ambient coordinates
        std::vector<long> coef(n, 0);
        for (std::size_t i = 0; i < src.factors.size(); ++i)
          coef[offset[e.src] + i] = e.hom.images[i][j] % beta;
        coef[offset[e.dst] + j] = (coef[offset[e.dst] + j] + beta - 1) % beta;
        // values on current generators
        int k = static_cast<int>(gens.size());
        std::vector<long> v(k, 0);
        bool all_zero = true;
        for (int g = 0; g < k; ++g) {
          long long s = 0;
          for (int i = 0; i < n; ++i)
            if (coef[i]) s += static_cast<long long>(coef[i]) * gens[g][i] % beta;
          long vv = static_cast<long>(s % beta);
          if (vv < 0) vv += beta;
          v[g] = vv;
          if (vv) all_zero = false;
        }
        if (all_zero) continue;
        int lead = -1;
        for (int g = 0; g < k; ++g) {
          if (v[g] == 0) continue;
          if (lead < 0) {
            lead = g;
            continue;
          }
          long gg, x, y;
          {
            mpz_class G, X, Y;
            mpz_gcdext(G.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t(),
                       mpz_class(v[lead]).get_mpz_t(), mpz_class(v[g]).get_mpz_t());
            gg = G.get_si();
            x = X.get_si();
            y = Y.get_si();
          }
          long a = v[lead] / gg, b = v[g] / gg;
          AbTuple nlead(n), nother(n);
          for (int i = 0; i < n; ++i) {
            long m = mods[i];
            long long c0 = gens[lead][i], c1 = gens[g][i];
            long long w0 = ((x % m) * c0 + (y % m) * c1) % m;
            long long w1 = ((-(b % m)) * c0 + (a % m) * c1) % m;
            if (w0 < 0) w0 += m;
            if (w1 < 0) w1 += m;
            nlead[i] = static_cast<long>(w0);
            nother[i] = static_cast<long>(w1);
          }
          gens[lead] = std::move(nlead);
          gens[g] = std::move(nother);
          v[lead] = gg;
          v[g] = 0;
        }
        long g2 = std::gcd(v[lead], beta);
        long scale = beta / g2;
        for (int i = 0; i < n; ++i)
          gens[lead][i] = static_cast<long>((static_cast<long long>(gens[lead][i]) * scale) %
                                            mods[i]);
      }
    }
  }

  LimitResult res;
  std::vector<AbTuple> flat_wit;
  res.group = subgroup_iso_class(gens, mods, &flat_wit);
  for (const auto& w : flat_wit) res.witnesses.push_back(detail::split_tuple(w, nodes));
  return res;
}

// ---------------------------------------------------------------------------
// Partitions of a cyclic group stable under inversion and containing {1}

struct Partition {
  std::vector<std::vector<int>> blocks;

  void canonicalize() {
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
  }
  bool operator==(const Partition& o) const { return blocks == o.blocks; }
  bool operator<(const Partition& o) const { return blocks < o.blocks; }
  std::size_t block_of(int x) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (int v : blocks[i])
        if (v == x) return i;
    throw error("element not covered by partition");
  }
};

inline std::vector<Partition> stable_partitions(int n) {
  if (n <= 0) throw error("group order must be positive");
  // partitions of {1, .., n-1} by restricted growth strings; {0} is forced
  std::vector<Partition> out;
  int m = n - 1;
  std::vector<int> rgs(m, 0);
  auto emit = [&]() {
    Partition p;
    p.blocks.push_back({0});
    int maxb = rgs.empty() ? -1 : *std::max_element(rgs.begin(), rgs.end());
    for (int b = 0; b <= maxb; ++b) {
      std::vector<int> blk;
      for (int i = 0; i < m; ++i)
        if (rgs[i] == b) blk.push_back(i + 1);
      p.blocks.push_back(std::move(blk));
    }
    p.canonicalize();
    // stability under inversion x -> -x mod n
    Partition img;
    for (const auto& b : p.blocks) {
      std::vector<int> nb;
      for (int v : b) nb.push_back((n - v) % n);
      img.blocks.push_back(std::move(nb));
    }
    img.canonicalize();
    if (img == p) out.push_back(std::move(p));
  };
  if (m == 0) {
    emit();
    return out;
  }
  // enumerate restricted growth strings
  while (true) {
    emit();
    int i = m - 1;
    while (i > 0) {
      int maxprev = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] <= maxprev) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
      rgs[i] = 0;
      --i;
    }
    if (i == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hopfcat
