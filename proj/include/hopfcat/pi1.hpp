#pragma once

// The fundamental group of a Hopf algebra / Hopf category: the diagram of
// connected Hopf gradings with its morphisms, the limit over that diagram,
// universal-grading detection, and the truncated limits for Taft categories.

#include "hopfcat/classify.hpp"

namespace hopfcat {

struct GradingMorphism {
  int src = 0, dst = 0;
  GroupHom mu;
  std::vector<int> witnesses;  // accepted automorphism indices
};

// morphisms X -> Y: epimorphisms mu with a homogeneous invertible Hopf
// endofunctor J sending every X-homogeneous basis vector to a Y-homogeneous
// vector of degree mu(deg_X)
inline std::vector<GradingMorphism> grading_morphisms(const Grading& X, const Grading& Y,
                                                      const std::vector<Mat>& autos) {
  if (X.algebra().dim != Y.algebra().dim || !(X.algebra().field->spec() == Y.algebra().field->spec()))
    throw error("gradings do not target the same Hopf algebra");
  if (X.group.integers || Y.group.integers)
    throw error("morphisms are defined for finite grading groups");
  Mat Yinv = Y.basis_inverse();
  std::vector<GradingMorphism> out;
  for (const auto& mu : epimorphisms(X.group.fin, Y.group.fin)) {
    GradingMorphism m;
    m.mu = mu;
    for (std::size_t j = 0; j < autos.size(); ++j) {
      bool ok = true;
      for (int i = 0; i < X.basis.rows() && ok; ++i) {
        Vec img = vec_mat(X.basis.row(i), autos[j]);
        Vec coeffs = Y.expand(img, Yinv);
        Deg want = mu.apply(X.degrees[i]);
        for (int k = 0; k < Y.basis.rows(); ++k)
          if (!coeffs[k].is_zero() && Y.degrees[k] != want) {
            ok = false;
            break;
          }
      }
      if (ok) m.witnesses.push_back(static_cast<int>(j));
    }
    if (!m.witnesses.empty()) out.push_back(std::move(m));
  }
  return out;
}

struct Pi1Result {
  FiniteAbelianGroup group;
  int node_count = 0;
  int edge_count = 0;
  std::optional<int> universal;
  std::vector<std::vector<AbTuple>> witnesses;  // generators as compatible families
};

struct Pi1Diagram {
  std::vector<EnumeratedGrading> nodes;
  std::vector<GradingMorphism> edges;
};

inline Pi1Result limit_of_diagram(const std::vector<FiniteAbelianGroup>& groups,
                                  const std::vector<GradingMorphism>& morphisms) {
  std::vector<DiagramEdge> edges;
  for (const auto& m : morphisms) edges.push_back({m.src, m.dst, m.mu});
  auto lim = diagram_limit(groups, edges);
  Pi1Result res;
  res.group = lim.group;
  res.node_count = static_cast<int>(groups.size());
  res.edge_count = static_cast<int>(morphisms.size());
  res.witnesses = lim.witnesses;
  return res;
}

inline std::optional<int> find_universal_node(int node_count,
                                              const std::vector<GradingMorphism>& edges) {
  for (int v = 0; v < node_count; ++v) {
    bool universal = true;
    for (int y = 0; y < node_count && universal; ++y) {
      int count = 0;
      for (const auto& e : edges)
        if (e.src == v && e.dst == y) ++count;
      if (count != 1) universal = false;
    }
    if (universal) return v;
  }
  return std::nullopt;
}

inline Pi1Result fundamental_group(const FieldPtr& F, int n, const EnumOptions& opt = {},
                                   Pi1Diagram* diagram_out = nullptr) {
  auto nodes = enumerate_hopf_gradings(F, n, opt);
  auto Cn = FiniteGroup::cyclic(n);
  auto autos = hopf_automorphisms(dual_group_hopf(F, Cn), Cn);
  int N = static_cast<int>(nodes.size());
  std::vector<std::vector<GradingMorphism>> per_pair(N * N);
  parallel_for(N * N, [&](int idx) {
    int a = idx / N, b = idx % N;
    auto ms = grading_morphisms(nodes[a].grading, nodes[b].grading, autos);
    for (auto& m : ms) {
      m.src = a;
      m.dst = b;
    }
    per_pair[idx] = std::move(ms);
  });
  std::vector<GradingMorphism> edges;
  for (auto& v : per_pair)
    for (auto& m : v) edges.push_back(std::move(m));
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& nd : nodes) groups.push_back(nd.gamma);
  Pi1Result res = limit_of_diagram(groups, edges);
  res.universal = find_universal_node(N, edges);
  if (diagram_out) {
    diagram_out->nodes = std::move(nodes);
    diagram_out->edges = std::move(edges);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Taft categories: truncated limits and the tau evidence report

struct TauReport {
  bool ok = true;
  // per integer x (1-based), a modulus m coprime to n with x mod m != 0
  std::vector<long> witness_modulus;
  long max_modulus = 0;
};

inline TauReport tau_injectivity_report(int n, long limit) {
  TauReport rep;
  for (long x = 1; x <= limit; ++x) {
    long found = 0;
    for (long m = 2; m <= 4 * (x + n) + 7; ++m) {
      if (std::gcd(m, static_cast<long>(n)) != 1) continue;
      if (x % m != 0) {
        found = m;
        break;
      }
    }
    if (!found) {
      rep.ok = false;
      break;
    }
    rep.witness_modulus.push_back(found);
    rep.max_modulus = std::max(rep.max_modulus, found);
  }
  return rep;
}

struct TaftPi1Result {
  Pi1Result pi1;
  std::vector<TaftGradingNode> nodes;
  TauReport tau;
};

inline TaftPi1Result taft_truncated_pi1(const FieldPtr& F, int n, const Scalar& q, int bound,
                                        long tau_limit = 1000) {
  auto taft = std::make_shared<HopfCategory>(taft_category(F, n, q));
  TaftPi1Result out;
  out.nodes = enumerate_taft_gradings(taft, n, bound);
  int N = static_cast<int>(out.nodes.size());
  std::vector<Mat> autos{Mat::identity(F, taft->algebra.dim)};
  std::vector<GradingMorphism> edges;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      if (out.nodes[a].modulus % out.nodes[b].modulus != 0) continue;
      auto ms = grading_morphisms(out.nodes[a].grading, out.nodes[b].grading, autos);
      if (ms.size() != 1) throw error("expected exactly one morphism between Taft gradings");
      ms[0].src = a;
      ms[0].dst = b;
      edges.push_back(std::move(ms[0]));
    }
  std::vector<FiniteAbelianGroup> groups;
  for (const auto& nd : out.nodes) groups.push_back(FiniteAbelianGroup::cyclic(nd.modulus));
  out.pi1 = limit_of_diagram(groups, edges);
  out.pi1.universal = find_universal_node(N, edges);
  out.tau = tau_injectivity_report(n, tau_limit);
  return out;
}

// ---------------------------------------------------------------------------
// The trivial Hopf category: every grading is of trivial degree (object
// idempotents span everything), so under the connectedness convention only
// the trivial grading remains and the fundamental group is zero.

inline Pi1Result trivial_category_pi1(const FieldPtr& F, const FiniteGroup& G) {
  auto cat = std::make_shared<HopfCategory>(trivial_hopf_category(F, G));
  // idempotent basis rows force trivial degrees: check that a nontrivial
  // grading group yields a disconnected grading
  if (G.order > 1) {
    Grading probe;
    probe.target = cat;
    probe.group = DegreeGroup::finite(FiniteAbelianGroup::cyclic(2));
    probe.basis = Mat::identity(F, G.order);
    probe.degrees.assign(G.order, Deg{0});
    if (!verify_grading(probe).all_pass()) throw error("trivial-degree probe must be a grading");
    if (is_connected_grading(probe))
      throw error("nontrivial grading of the trivial category must be disconnected");
  }
  Grading triv = trivial_grading(cat);
  GradingMorphism self;
  self.src = self.dst = 0;
  self.mu = GroupHom::identity(FiniteAbelianGroup::trivial());
  self.witnesses = {0};
  Pi1Result res = limit_of_diagram({FiniteAbelianGroup::trivial()}, {self});
  res.universal = 0;
  return res;
}

}  // namespace hopfcat
