#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hopfcat/groups.hpp"

using namespace hopfcat;

TEST_CASE("cyclic groups") {
  auto c1 = cyclic(1);
  CHECK(c1.cayley.order == 1);
  CHECK(c1.abelian.is_trivial());

  auto c4 = cyclic(4);
  CHECK(c4.cayley.inv(1) == 3);  // inverse of t is t^3

  // brute-force element orders for n = 6
  auto c6 = cyclic(6);
  std::multiset<int> orders;
  for (int a = 0; a < 6; ++a) orders.insert(c6.cayley.element_order(a));
  CHECK(orders == std::multiset<int>{1, 6, 3, 2, 3, 6});

  CHECK_THROWS_AS(cyclic(0), error);
}

TEST_CASE("characters") {
  auto Q = Field::make(FieldSpec::rationals());
  auto Qi = Field::make(FieldSpec::cyclotomic(4));
  auto C2 = FiniteAbelianGroup::cyclic(2);
  auto C4 = FiniteAbelianGroup::cyclic(4);
  CHECK(characters(C2, Q).size() == 2);
  CHECK(characters(C4, Q).size() == 2);
  CHECK(characters(C4, Qi).size() == 4);
  // brute-force oracle over generator images {1, i, -1, -i}
  {
    auto i4 = *Qi->primitive_root_of_unity(4);
    int count = 0;
    for (long e = 0; e < 4; ++e)
      if (i4.pow(e).pow(4).is_one()) ++count;
    CHECK(count == 4);
  }
  // |characters| == |G| iff the field has a primitive root of order exp(G)
  std::vector<FieldPtr> fields{Q, Qi, Field::make(FieldSpec::prime(2)),
                               Field::make(FieldSpec::prime(7))};
  std::vector<FiniteAbelianGroup> gs{C2, C4, FiniteAbelianGroup::cyclic(3),
                                     FiniteAbelianGroup::cyclic(6),
                                     FiniteAbelianGroup::product({2, 2})};
  for (const auto& F : fields)
    for (const auto& G : gs) {
      bool full = mpz_class(static_cast<long>(characters(G, F).size())) == G.order();
      bool has_root =
          F->primitive_root_of_unity(static_cast<unsigned long>(G.exponent())).has_value();
      CHECK(full == has_root);
    }
}

TEST_CASE("epimorphisms") {
  auto C4 = FiniteAbelianGroup::cyclic(4);
  auto C2 = FiniteAbelianGroup::cyclic(2);
  auto C3 = FiniteAbelianGroup::cyclic(3);
  auto V = FiniteAbelianGroup::product({2, 2});
  CHECK(epimorphisms(C4, C2).size() == 1);
  CHECK(epimorphisms(C2, C3).empty());
  CHECK(epimorphisms(V, C2).size() == 3);
  // nonempty => |H| divides |G|
  std::vector<FiniteAbelianGroup> gs{C2, C3, C4, V, FiniteAbelianGroup::cyclic(6)};
  for (const auto& G : gs)
    for (const auto& H : gs)
      if (!epimorphisms(G, H).empty()) CHECK(G.order() % H.order() == 0);
}

TEST_CASE("generated subgroups") {
  auto C6 = FiniteAbelianGroup::cyclic(6);
  auto sub = subgroup_generated(C6, {{2}});
  CHECK(sub.elements.size() == 3);
  CHECK(!sub.equals_whole);
  CHECK(sub.iso_class.to_string() == "C3");

  auto C5 = FiniteAbelianGroup::cyclic(5);
  CHECK(subgroup_generated(C5, {{3}}).equals_whole);

  auto V = FiniteAbelianGroup::product({2, 2});
  CHECK(subgroup_generated(V, {{1, 0}}).elements.size() == 2);
}

TEST_CASE("diagram limits") {
  auto C4 = FiniteAbelianGroup::cyclic(4);
  auto C2 = FiniteAbelianGroup::cyclic(2);
  auto C3 = FiniteAbelianGroup::cyclic(3);

  CHECK(diagram_limit({C4}, {}).group.to_string() == "C4");
  CHECK(diagram_limit({}, {}).group.is_trivial());
  CHECK(diagram_limit({C2, C3}, {}).group.to_string() == "C6");

  // brute-force oracle: over the 8 product tuples exactly 4 are compatible
  auto epi = epimorphisms(C4, C2).at(0);
  {
    int compatible = 0;
    for (long a = 0; a < 4; ++a)
      for (long b = 0; b < 2; ++b)
        if (epi.apply({a}) == AbTuple{b}) ++compatible;
    CHECK(compatible == 4);
  }
  auto lim = diagram_limit({C4, C2}, {{0, 1, epi}});
  CHECK(lim.group.to_string() == "C4");
  REQUIRE(lim.witnesses.size() == 1);
  // the witness generates: its first coordinate generates C4
  CHECK(C4.element_order(lim.witnesses[0][0]) == 4);

  // congruence-solver path agrees with brute force
  auto lim2 = diagram_limit({C4, C2}, {{0, 1, epi}}, 1);
  CHECK(lim2.group == lim.group);
}

TEST_CASE("limit over a diagram with a universal node") {
  // V = C6 with unique epimorphisms onto C2 and C3: the limit is C6
  auto C6 = FiniteAbelianGroup::cyclic(6);
  auto C2 = FiniteAbelianGroup::cyclic(2);
  auto C3 = FiniteAbelianGroup::cyclic(3);
  std::vector<DiagramEdge> edges;
  edges.push_back({0, 1, epimorphisms(C6, C2).at(0)});
  edges.push_back({0, 2, epimorphisms(C6, C3).at(0)});
  edges.push_back({0, 0, GroupHom::identity(C6)});
  auto lim = diagram_limit({C6, C2, C3}, edges);
  CHECK(lim.group.to_string() == "C6");
  auto lim2 = diagram_limit({C6, C2, C3}, edges, 1);
  CHECK(lim2.group.to_string() == "C6");
}

TEST_CASE("randomized diagrams: brute force and congruence path agree") {
  std::mt19937 rng(7);
  std::vector<FiniteAbelianGroup> pool{
      FiniteAbelianGroup::cyclic(2), FiniteAbelianGroup::cyclic(3),
      FiniteAbelianGroup::cyclic(4), FiniteAbelianGroup::product({2, 2}),
      FiniteAbelianGroup::cyclic(6)};
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::vector<FiniteAbelianGroup> nodes{pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
    std::vector<DiagramEdge> edges;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        auto epis = epimorphisms(nodes[a], nodes[b]);
        if (epis.empty()) continue;
        std::uniform_int_distribution<int> pe(0, static_cast<int>(epis.size()) - 1);
        if (pe(rng) % 2 == 0) edges.push_back({a, b, epis[pe(rng)]});
      }
    auto brute = diagram_limit(nodes, edges);
    auto congr = diagram_limit(nodes, edges, 1);
    CHECK(brute.group == congr.group);
  }
}

TEST_CASE("smith normal form") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> entry(-9, 9), dims(1, 4);
  for (int trial = 0; trial < 60; ++trial) {
    int r = dims(rng), c = dims(rng);
    ZMat A(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) A.at(i, j) = entry(rng);
    auto s = smith_normal_form(A);
    // UAV == D
    auto chk = s.U.mul(A).mul(s.V);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) CHECK(chk.at(i, j) == s.D.at(i, j));
    // transforms are unimodular: tracked inverses really invert
    auto uu = s.U.mul(s.Uinv);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) CHECK(uu.at(i, j) == (i == j ? 1 : 0));
    auto vv = s.V.mul(s.Vinv);
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) CHECK(vv.at(i, j) == (i == j ? 1 : 0));
    // diagonal, nonnegative, divisibility chain
    auto d = s.diag();
    for (int i = 0; i < static_cast<int>(d.size()); ++i) {
      CHECK(d[i] >= 0);
      for (int j = 0; j < c; ++j)
        if (j != i && i < s.D.rows) CHECK(s.D.at(i, j) == 0);
      if (i + 1 < static_cast<int>(d.size()) && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
  }
}

TEST_CASE("stable partitions") {
  // n = 3: the finest partition and {{1},{t,t^2}}
  auto p3 = stable_partitions(3);
  REQUIRE(p3.size() == 2);
  Partition coarse;
  coarse.blocks = {{0}, {1, 2}};
  coarse.canonicalize();
  CHECK((p3[0] == coarse || p3[1] == coarse));

  // n = 4 includes A = {{1},{t^2},{t,t^3}} and B = {{1},{t,t^2,t^3}}
  auto p4 = stable_partitions(4);
  CHECK(p4.size() == 3);
  Partition A;
  A.blocks = {{0}, {2}, {1, 3}};
  A.canonicalize();
  Partition B;
  B.blocks = {{0}, {1, 2, 3}};
  B.canonicalize();
  CHECK(std::count(p4.begin(), p4.end(), A) == 1);
  CHECK(std::count(p4.begin(), p4.end(), B) == 1);

  // n = 5: exactly the finest plus A, B, C, C', D, D'
  auto p5 = stable_partitions(5);
  REQUIRE(p5.size() == 7);
  std::vector<Partition> expected;
  auto mk = [&](std::vector<std::vector<int>> blocks) {
    Partition p;
    p.blocks = std::move(blocks);
    p.canonicalize();
    expected.push_back(p);
  };
  mk({{0}, {1}, {2}, {3}, {4}});           // finest
  mk({{0}, {1, 4}, {2, 3}});               // A
  mk({{0}, {1, 2, 3, 4}});                 // B
  mk({{0}, {1}, {2, 3}, {4}});             // C
  mk({{0}, {2}, {1, 4}, {3}});             // C'
  mk({{0}, {1, 2}, {3, 4}});               // D
  mk({{0}, {2, 4}, {1, 3}});               // D'
  std::sort(expected.begin(), expected.end());
  CHECK(p5 == expected);

  // invariants: {1} is always a block, inversion permutes blocks
  for (int n : {2, 3, 4, 5, 6, 7}) {
    for (const auto& p : stable_partitions(n)) {
      CHECK(p.blocks[0] == std::vector<int>{0});
      Partition img;
      for (const auto& b : p.blocks) {
        std::vector<int> nb;
        for (int v : b) nb.push_back((n - v) % n);
        img.blocks.push_back(nb);
      }
      img.canonicalize();
      CHECK(img == p);
    }
  }
}
