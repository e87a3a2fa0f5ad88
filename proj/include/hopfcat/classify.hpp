#pragma once

// Exhaustive enumeration of the connected Hopf gradings of k^{C_n}: stable
// partitions, ergodic block structures from character assignments, ambient
// quotient enumeration, and the Hopf filters (direct and dual, cross-checked).
// Also the cyclic gradings of Taft categories and an independent brute-force
// search used as an exhaustiveness oracle at small n.

#include <array>
#include <atomic>
#include <mutex>
#include <thread>

#include "hopfcat/gradings.hpp"

namespace hopfcat {

inline int thread_budget() {
  if (const char* env = std::getenv("HOPF_PI1_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

template <class Fn>
inline void parallel_for(int n, Fn fn) {
  int threads = std::min(thread_budget(), n);
  if (threads <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Ergodic block structures

struct BlockStructure {
  std::vector<int> block;  // ascending element indices; block[0] is the base point
  FiniteAbelianGroup gamma;
  std::vector<Character> chi;  // per block element, chi[0] trivial
  std::vector<Vec> units;      // a_s per gamma element (gamma.elements() order)
};

inline std::vector<FiniteAbelianGroup> abelian_groups_of_order(long m) {
  // invariant factor chains m1 | m2 | ... with product m
  std::vector<FiniteAbelianGroup> out;
  if (m == 1) {
    out.push_back(FiniteAbelianGroup::trivial());
    return out;
  }
  std::vector<long> chain;
  std::function<void(long, long)> rec = [&](long rest, long maxdiv) {
    if (rest == 1) {
      FiniteAbelianGroup g;
      g.factors = chain;
      std::reverse(g.factors.begin(), g.factors.end());
      out.push_back(std::move(g));
      return;
    }
    for (long d = 2; d <= maxdiv; ++d) {
      if (rest % d) continue;
      if (!chain.empty() && chain.back() % d != 0) continue;
      chain.push_back(d);
      rec(rest / d, d);
      chain.pop_back();
    }
  };
  rec(m, m);
  std::sort(out.begin(), out.end(),
            [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
              return a.factors < b.factors;
            });
  return out;
}

// every ergodic connected grading structure on k^F, normalized at u0 = min(F):
// an abelian group of order |F| together with an injective character
// assignment F -> chars fixing the trivial character at u0
inline std::vector<BlockStructure> ergodic_block_structures(const FieldPtr& F,
                                                            const std::vector<int>& block,
                                                            int ambient_dim) {
  std::vector<BlockStructure> out;
  std::vector<int> blk = block;
  std::sort(blk.begin(), blk.end());
  long sz = static_cast<long>(blk.size());
  if (sz == 0) throw error("empty block");
  for (const auto& gamma : abelian_groups_of_order(sz)) {
    if (!F->primitive_root_of_unity(static_cast<unsigned long>(gamma.exponent()))) continue;
    auto chars = characters(gamma, F);
    if (static_cast<long>(chars.size()) != sz) continue;  // unreachable given the root test
    // locate the trivial character; assign it to u0 = blk[0]
    int triv = -1;
    for (std::size_t i = 0; i < chars.size(); ++i)
      if (chars[i].is_trivial()) {
        triv = static_cast<int>(i);
        break;
      }
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(chars.size()); ++i)
      if (i != triv) rest.push_back(i);
    std::sort(rest.begin(), rest.end());
    auto gels = gamma.elements();
    do {
      BlockStructure bs;
      bs.block = blk;
      bs.gamma = gamma;
      bs.chi.push_back(chars[triv]);
      for (int r : rest) bs.chi.push_back(chars[r]);
      // a_s(u) = chi_u(s)
      bool independent = true;
      for (const auto& s : gels) {
        Vec a = zero_vec(F, ambient_dim);
        for (std::size_t u = 0; u < blk.size(); ++u) a[blk[u]] = bs.chi[u].eval(s);
        bs.units.push_back(std::move(a));
      }
      {
        // multiplicativity a_s a_t = a_{st} and linear independence
        Mat m = Mat::from_rows(F, bs.units);
        if (rank(m) != static_cast<int>(sz)) independent = false;
        for (std::size_t i = 0; i < gels.size() && independent; ++i)
          for (std::size_t j = 0; j < gels.size(); ++j) {
            Vec prod(ambient_dim, F->zero());
            for (int k = 0; k < ambient_dim; ++k) prod[k] = bs.units[i][k] * bs.units[j][k];
            AbTuple st = gamma.add(gels[i], gels[j]);
            std::size_t idx = std::lower_bound(gels.begin(), gels.end(), st) - gels.begin();
            if (prod != bs.units[idx]) {
              independent = false;
              break;
            }
          }
      }
      if (!independent) throw error("block structure failed its invariants");
      out.push_back(std::move(bs));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The enumeration pipeline

struct DualCheckStats {
  long candidates = 0;
  long disagreements = 0;
};

struct EnumOptions {
  AntipodeConvention convention = AntipodeConvention::DegreePreserving;
  int desk_bound = 12;
  DualCheckStats* stats = nullptr;
};

struct EnumeratedGrading {
  Partition partition;
  FiniteAbelianGroup gamma;
  Grading grading;
  std::vector<BlockStructure> block_structures;
  std::string key;
};

inline std::string grading_key(const Grading& X) {
  std::map<Deg, std::vector<Vec>> comps;
  for (int i = 0; i < X.basis.rows(); ++i) comps[X.degrees[i]].push_back(X.basis.row(i));
  std::string key = "G[";
  for (std::size_t i = 0; i < X.group.fin.factors.size(); ++i)
    key += (i ? "," : "") + std::to_string(X.group.fin.factors[i]);
  key += "]";
  for (auto& [d, vecs] : comps) {
    key += ";" + X.group.str(d) + ":";
    Rref rr = rref(Mat::from_rows(X.algebra().field, vecs));
    for (int r = 0; r < rr.rank; ++r) {
      key += "[";
      for (int c = 0; c < rr.reduced.cols(); ++c)
        key += rr.reduced.at(r, c).str() + (c + 1 < rr.reduced.cols() ? "," : "");
      key += "]";
    }
  }
  return key;
}

inline std::vector<EnumeratedGrading> enumerate_hopf_gradings(const FieldPtr& F, int n,
                                                              const EnumOptions& opt = {}) {
  if (n < 2 || n > opt.desk_bound) throw error("n out of the supported range");
  auto Cn = FiniteGroup::cyclic(n);
  auto kCn = std::make_shared<HopfCategory>(as_single_object_category(dual_group_hopf(F, Cn)));
  auto parts = stable_partitions(n);

  std::vector<std::vector<EnumeratedGrading>> results(parts.size());
  std::vector<DualCheckStats> stats(parts.size());

  parallel_for(static_cast<int>(parts.size()), [&](int pi) {
    const Partition& P = parts[pi];
    // per-block structures (singletons contribute nothing to the ambient group)
    std::vector<std::vector<int>> nsblocks;
    std::vector<int> singletons;
    for (const auto& b : P.blocks) {
      if (b.size() == 1)
        singletons.push_back(b[0]);
      else
        nsblocks.push_back(b);
    }
    std::vector<std::vector<BlockStructure>> choices;
    for (const auto& b : nsblocks) {
      auto bs = ergodic_block_structures(F, b, n);
      if (bs.empty()) return;  // no ergodic structure over this field
      choices.push_back(std::move(bs));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      // assemble the ambient group of this combination
      std::vector<long> amb;
      std::vector<std::size_t> offset;
      std::vector<const BlockStructure*> combo;
      for (std::size_t b = 0; b < choices.size(); ++b) {
        const auto& bs = choices[b][pick[b]];
        combo.push_back(&bs);
        offset.push_back(amb.size());
        for (long f : bs.gamma.factors) amb.push_back(f);
      }
      FiniteAbelianGroup Gamb;
      Gamb.factors = amb;  // raw coordinates; not an invariant-factor chain
      for (const auto& K : all_subgroups(Gamb)) {
        // K must meet every block coordinate subgroup trivially
        bool ok = true;
        for (const auto& k : K) {
          if (Gamb.is_zero(k)) continue;
          for (std::size_t b = 0; b < combo.size() && ok; ++b) {
            std::size_t lo = offset[b], hi = offset[b] + combo[b]->gamma.factors.size();
            bool inside = true;
            for (std::size_t c = 0; c < amb.size(); ++c)
              if (k[c] != 0 && (c < lo || c >= hi)) {
                inside = false;
                break;
              }
            if (inside) ok = false;
          }
          if (!ok) break;
        }
        if (!ok) continue;
        AbelianQuotient q = quotient_by_subgroup(amb, K);
        // assemble the grading
        std::vector<Vec> rows;
        std::vector<Deg> degs;
        for (int x : singletons) {
          rows.push_back(kCn->algebra.basis_vec(x));
          degs.push_back(q.group.zero());
        }
        for (std::size_t b = 0; b < combo.size(); ++b) {
          auto gels = combo[b]->gamma.elements();
          for (std::size_t s = 0; s < gels.size(); ++s) {
            rows.push_back(combo[b]->units[s]);
            AbTuple lift(amb.size(), 0);
            for (std::size_t c = 0; c < gels[s].size(); ++c) lift[offset[b] + c] = gels[s][c];
            degs.push_back(q.apply(lift));
          }
        }
        Grading X;
        X.target = kCn;
        X.group = DegreeGroup::finite(q.group);
        X.basis = Mat::from_rows(F, rows);
        X.degrees = std::move(degs);
        if (!verify_grading(X).all_pass()) throw error("assembled candidate is not a grading");
        if (!is_connected_grading(X)) throw error("assembled candidate is not connected");
        auto direct = is_hopf_grading_direct(X, opt.convention);
        auto dual = dual_decomposition(X, Cn);
        stats[pi].candidates += 1;
        if (direct.comult_ok != dual.multiplicative) stats[pi].disagreements += 1;
        if (!direct.all() || !dual.multiplicative) continue;
        EnumeratedGrading eg;
        eg.partition = P;
        eg.gamma = q.group;
        eg.grading = std::move(X);
        for (const auto* c : combo) eg.block_structures.push_back(*c);
        eg.key = grading_key(eg.grading);
        // partition recovery
        if (!(partition_of(eg.grading) == P)) throw error("partition recovery failed");
        results[pi].push_back(std::move(eg));
      }
      // next combination
      std::size_t b = 0;
      while (b < choices.size()) {
        if (++pick[b] < choices[b].size()) break;
        pick[b] = 0;
        ++b;
      }
      if (b == choices.size()) break;
      if (choices.empty()) break;
    }
  });

  std::vector<EnumeratedGrading> all;
  for (auto& r : results)
    for (auto& eg : r) all.push_back(std::move(eg));
  if (opt.stats)
    for (const auto& s : stats) {
      opt.stats->candidates += s.candidates;
      opt.stats->disagreements += s.disagreements;
    }
  std::sort(all.begin(), all.end(), [](const EnumeratedGrading& a, const EnumeratedGrading& b) {
    if (a.gamma.factors != b.gamma.factors) return a.gamma.factors < b.gamma.factors;
    return a.key < b.key;
  });
  all.erase(std::unique(all.begin(), all.end(),
                        [](const EnumeratedGrading& a, const EnumeratedGrading& b) {
                          return a.key == b.key;
                        }),
            all.end());
  return all;
}

// ---------------------------------------------------------------------------
// Cyclic gradings of Taft categories: degree gamma^l on every length-l path

struct TaftGradingNode {
  long modulus = 1;
  long generator = 0;  // degree of the length-one paths, a generator of C_m
  Grading grading;
};

inline Grading taft_cyclic_grading(const std::shared_ptr<const HopfCategory>& taft, int n,
                                   long m, long gen) {
  Grading X;
  X.target = taft;
  X.group = DegreeGroup::finite(FiniteAbelianGroup::cyclic(m));
  X.basis = Mat::identity(taft->algebra.field, taft->algebra.dim);
  for (int u = 0; u < n; ++u)
    for (int l = 0; l < n; ++l) {
      if (m == 1)
        X.degrees.push_back({});
      else
        X.degrees.push_back({(static_cast<long>(l) * gen) % m});
    }
  return X;
}

inline std::vector<TaftGradingNode> enumerate_taft_gradings(
    const std::shared_ptr<const HopfCategory>& taft, int n, int bound) {
  if (bound < 1) throw error("modulus bound must be positive");
  std::vector<TaftGradingNode> out;
  for (long m = 1; m <= bound; ++m) {
    std::vector<long> gens;
    if (m == 1)
      gens.push_back(0);
    else
      for (long g = 1; g < m; ++g)
        if (std::gcd(g, m) == 1) gens.push_back(g);
    for (long g : gens) {
      Grading X = taft_cyclic_grading(taft, n, m, g);
      if (!verify_grading(X).all_pass()) throw error("Taft path grading failed verification");
      if (!is_hopf_grading_direct(X).all())
        throw error("Taft path grading failed Hopf homogeneity");
      bool connected = is_connected_grading(X);
      if (std::gcd(m, static_cast<long>(n)) == 1) {
        if (!connected) throw error("coprime Taft grading unexpectedly disconnected");
        out.push_back({m, g, std::move(X)});
      } else {
        if (connected) throw error("non-coprime Taft grading unexpectedly connected");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent exhaustiveness oracle: raw search over homogeneous-line
// candidates with root-of-unity entries, all degree assignments over small
// abelian groups. Finds every connected Hopf grading of k^{C_n} whose
// components are spanned by such lines (all of them, for these algebras).

inline std::vector<std::string> brute_force_hopf_grading_keys(const FieldPtr& F, int n,
                                                              long max_group_order = 0) {
  if (max_group_order == 0) max_group_order = 2 * n;
  auto Cn = FiniteGroup::cyclic(n);
  auto kCn = std::make_shared<HopfCategory>(as_single_object_category(dual_group_hopf(F, Cn)));
  const auto& A = kCn->algebra;
  long L = 1;
  for (int d = 1; d <= n - 1; ++d) L = std::lcm(L, static_cast<long>(d));
  auto U = F->roots_of_unity_dividing(static_cast<unsigned long>(L));
  std::vector<Scalar> entries;
  entries.push_back(F->zero());
  for (auto& u : U) entries.push_back(u);

  // normalized candidate lines: entries in {0} u U, first nonzero entry = 1
  std::vector<Vec> lines;
  {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      Vec v = zero_vec(F, n);
      for (int i = 0; i < n; ++i) v[i] = entries[idx[i]];
      int first = -1;
      for (int i = 0; i < n; ++i)
        if (!v[i].is_zero()) {
          first = i;
          break;
        }
      if (first >= 0 && v[first].is_one()) lines.push_back(v);
      std::size_t i = 0;
      while (i < static_cast<std::size_t>(n)) {
        if (++idx[i] < entries.size()) break;
        idx[i] = 0;
        ++i;
      }
      if (i == static_cast<std::size_t>(n)) break;
    }
  }
  std::vector<int> off_identity;  // lines vanishing at the group identity
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i][Cn.identity].is_zero()) off_identity.push_back(static_cast<int>(i));

  Vec one_vec = A.unit;

  // candidate groups with element index arithmetic tables
  struct GroupTab {
    FiniteAbelianGroup g;
    std::vector<AbTuple> els;
    std::vector<std::vector<int>> add;
    int zero;
  };
  std::vector<GroupTab> groups;
  for (long o = 1; o <= max_group_order; ++o)
    for (auto& g : abelian_groups_of_order(o)) {
      GroupTab gt;
      gt.g = g;
      gt.els = g.elements();
      int sz = static_cast<int>(gt.els.size());
      gt.add.assign(sz, std::vector<int>(sz));
      std::map<AbTuple, int> index;
      for (int i = 0; i < sz; ++i) index[gt.els[i]] = i;
      for (int i = 0; i < sz; ++i)
        for (int j = 0; j < sz; ++j) gt.add[i][j] = index.at(g.add(gt.els[i], gt.els[j]));
      gt.zero = index.at(g.zero());
      groups.push_back(std::move(gt));
    }

  std::set<std::string> keys;
  std::mutex keys_mutex;

  // examine one decomposition: trivial part spanned by {1} u extra, plus
  // nontrivial lines; try all degree assignments
  auto consider = [&](const std::vector<Vec>& triv_part, const std::vector<int>& nontriv) {
    int k = static_cast<int>(triv_part.size());
    int nn = static_cast<int>(nontriv.size());
    std::vector<Vec> rows = triv_part;
    for (int i : nontriv) rows.push_back(lines[i]);
    Mat M = Mat::from_rows(F, rows);
    auto Minv = inverse(M);
    if (!Minv) return;
    // nonzero patterns
    std::vector<std::array<int, 3>> mult_pat;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Vec coeffs = vec_mat(A.mul_vec(rows[i], rows[j]), *Minv);
        for (int kk = 0; kk < n; ++kk)
          if (!coeffs[kk].is_zero()) mult_pat.push_back({i, j, kk});
      }
    std::vector<std::array<int, 3>> comult_pat;
    for (int i = 0; i < n; ++i) {
      Tensor t = A.comult_vec(rows[i]);
      Tensor tn;
      for (const auto& [p, c] : t)
        for (int a = 0; a < n; ++a) {
          if (Minv->at(p.first, a).is_zero()) continue;
          for (int b = 0; b < n; ++b)
            tensor_add(tn, a, b, c * Minv->at(p.first, a) * Minv->at(p.second, b));
        }
      for (const auto& [p, c] : tn) comult_pat.push_back({i, p.first, p.second});
    }
    std::vector<std::array<int, 2>> anti_pat;
    for (int i = 0; i < n; ++i) {
      Vec coeffs = vec_mat(A.antipode_vec(rows[i]), *Minv);
      for (int kk = 0; kk < n; ++kk)
        if (!coeffs[kk].is_zero()) anti_pat.push_back({i, kk});
    }
    std::vector<bool> eps_nonzero(n);
    for (int i = 0; i < n; ++i) eps_nonzero[i] = !A.counit_vec(rows[i]).is_zero();

    for (const auto& gt : groups) {
      int sz = static_cast<int>(gt.els.size());
      if (sz == 1 && nn > 0) continue;
      if (sz > 1 && nn == 0) continue;
      // degree index per row: trivial part 0-deg, nontrivial rows iterate
      std::vector<int> deg(n, gt.zero);
      std::vector<int> cursor(nn, 0);
      // nontrivial rows take nonzero degrees
      std::vector<int> nzdeg;
      for (int d = 0; d < sz; ++d)
        if (d != gt.zero) nzdeg.push_back(d);
      if (nn > 0 && nzdeg.empty()) continue;
      while (true) {
        for (int i = 0; i < nn; ++i) deg[k + i] = nzdeg[cursor[i]];
        bool ok = true;
        for (const auto& p : mult_pat)
          if (gt.add[deg[p[0]]][deg[p[1]]] != deg[p[2]]) {
            ok = false;
            break;
          }
        if (ok)
          for (const auto& p : comult_pat)
            if (gt.add[deg[p[1]]][deg[p[2]]] != deg[p[0]]) {
              ok = false;
              break;
            }
        if (ok)
          for (const auto& p : anti_pat)
            if (deg[p[1]] != deg[p[0]]) {
              ok = false;
              break;
            }
        if (ok)
          for (int i = 0; i < n; ++i)
            if (eps_nonzero[i] && deg[i] != gt.zero) {
              ok = false;
              break;
            }
        if (ok) {
          // connectedness: support generates
          std::vector<AbTuple> support;
          for (int i = 0; i < n; ++i) support.push_back(gt.els[deg[i]]);
          if (subgroup_generated(gt.g, support).equals_whole) {
            Grading X;
            X.target = kCn;
            X.group = DegreeGroup::finite(gt.g);
            X.basis = M;
            for (int i = 0; i < n; ++i) X.degrees.push_back(gt.els[deg[i]]);
            if (verify_grading(X).all_pass() && is_hopf_grading_direct(X).all() &&
                is_connected_grading(X)) {
              std::lock_guard<std::mutex> lock(keys_mutex);
              keys.insert(grading_key(X));
            }
          }
        }
        int i = 0;
        while (i < nn) {
          if (++cursor[i] < static_cast<int>(nzdeg.size())) break;
          cursor[i] = 0;
          ++i;
        }
        if (i == nn || nn == 0) break;
      }
    }
  };

  // enumerate trivial-part spans and nontrivial line choices per dimension
  for (int k = 1; k <= n; ++k) {
    int nn = n - k;
    // trivial part: span{1, w_2, ..., w_k}, multiplicatively closed
    std::vector<std::vector<Vec>> triv_candidates;
    if (k == 1) {
      triv_candidates.push_back({one_vec});
    } else if (static_cast<int>(lines.size()) < k - 1) {
      // not enough lines
    } else {
      std::vector<int> comb(k - 1);
      for (int i = 0; i < k - 1; ++i) comb[i] = i;
      while (true) {
        std::vector<Vec> part{one_vec};
        for (int c : comb) part.push_back(lines[c]);
        Mat M = Mat::from_rows(F, part);
        if (rank(M) == k) {
          // closed under multiplication?
          bool closed = true;
          for (int i = 0; i < k && closed; ++i)
            for (int j = i; j < k; ++j) {
              Vec prod = A.mul_vec(part[i], part[j]);
              auto sol = solve_row(M, prod);
              if (!sol) {
                closed = false;
                break;
              }
            }
          if (closed) triv_candidates.push_back(part);
        }
        // next combination
        int i = k - 2;
        while (i >= 0 && comb[i] == static_cast<int>(lines.size()) - (k - 1 - i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k - 1; ++j) comb[j] = comb[j - 1] + 1;
      }
    }
    // nontrivial choices from off-identity lines
    std::vector<std::vector<int>> nchoices;
    if (nn == 0) {
      nchoices.push_back({});
    } else {
      std::vector<int> comb(nn);
      for (int i = 0; i < nn; ++i) comb[i] = i;
      if (static_cast<int>(off_identity.size()) >= nn) {
        while (true) {
          std::vector<int> pickv;
          for (int c : comb) pickv.push_back(off_identity[c]);
          nchoices.push_back(std::move(pickv));
          int i = nn - 1;
          while (i >= 0 && comb[i] == static_cast<int>(off_identity.size()) - (nn - i)) --i;
          if (i < 0) break;
          ++comb[i];
          for (int j = i + 1; j < nn; ++j) comb[j] = comb[j - 1] + 1;
        }
      }
    }
    std::vector<std::pair<int, int>> jobs;
    for (std::size_t a = 0; a < triv_candidates.size(); ++a)
      for (std::size_t b = 0; b < nchoices.size(); ++b)
        jobs.push_back({static_cast<int>(a), static_cast<int>(b)});
    parallel_for(static_cast<int>(jobs.size()), [&](int j) {
      consider(triv_candidates[jobs[j].first], nchoices[jobs[j].second]);
    });
  }
  return std::vector<std::string>(keys.begin(), keys.end());
}

}  // namespace hopfcat
