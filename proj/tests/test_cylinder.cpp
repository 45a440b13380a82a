#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "gwring/cylinder.hpp"

using namespace gwring;
using namespace gwring::cyl;
using line::Sign;

namespace {

HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

PathProfile P(CylGeometry g, std::initializer_list<std::int64_t> twice) {
  std::vector<HalfInt> hs;
  for (auto t : twice) hs.push_back(h(t));
  return PathProfile(g, hs);
}

const CylGeometry G32 = CylGeometry::make(3, 2);

Configuration sum_of(const std::vector<PathProfile>& paths) {
  Configuration w(paths.front().geometry());
  for (const auto& p : paths) w = w + path_to_config(p);
  return w;
}

std::string data_path(const std::string& name) { return std::string(GWRING_TEST_DATA) + "/" + name; }

// Flood fill of the faces of the universal cover R^2 on a wide window. A
// bounded region that stays inside the window is a contractible component;
// a region crossing from the left edge to the right edge winds around the
// cylinder. Regions are identified modulo translation by (m, n).
struct CoverCount {
  std::set<std::set<Face>> contractible;  // canonical face sets
  int noncontractible = 0;
};

CoverCount cover_components(const Configuration& w) {
  const auto g = w.geometry();
  std::set<std::pair<std::int64_t, std::int64_t>> v_block;  // E1 at (a+1/2, b) blocks a|a+1
  std::set<std::pair<std::int64_t, std::int64_t>> h_block;  // E2 at (a, b+1/2) blocks b|b+1
  std::int64_t ymin = 0;
  std::int64_t ymax = 0;
  bool first = true;
  const std::int64_t reps = 6;
  for (const auto& [e, mult] : w.edges()) {
    for (std::int64_t j = -reps; j <= reps; ++j) {
      HalfInt x = e.s1 + HalfInt::from_int(j * g.m);
      HalfInt y = e.s2 + HalfInt::from_int(j * g.n);
      if (e.lattice == Lattice::E1) {
        v_block.insert({x.floor(), y.floor()});
      } else {
        h_block.insert({x.floor(), y.floor()});
      }
    }
    if (first || e.s2.floor() < ymin) ymin = e.s2.floor();
    if (first || e.s2.ceil() > ymax) ymax = e.s2.ceil();
    first = false;
  }
  const std::int64_t a0 = -3 * g.m;
  const std::int64_t a1 = 3 * g.m;
  const std::int64_t b0 = ymin - 3 * g.n - 2;
  const std::int64_t b1 = ymax + 3 * g.n + 2;
  auto canon = [&](Face f) {
    std::int64_t j = f.a >= 0 ? f.a / g.m : -((-f.a + g.m - 1) / g.m);
    return Face{f.a - j * g.m, f.b - j * g.n};
  };
  CoverCount out;
  std::set<Face> seen;
  for (std::int64_t a = a0; a <= a1; ++a) {
    for (std::int64_t b = b0; b <= b1; ++b) {
      if (seen.count(Face{a, b}) != 0) continue;
      std::set<Face> region;
      bool left = false;
      bool right = false;
      bool edge = false;
      std::queue<Face> q;
      q.push(Face{a, b});
      seen.insert(Face{a, b});
      while (!q.empty()) {
        Face f = q.front();
        q.pop();
        region.insert(f);
        left = left || f.a == a0;
        right = right || f.a == a1;
        edge = edge || f.a == a0 || f.a == a1 || f.b == b0 || f.b == b1;
        auto visit = [&](Face n, bool blocked) {
          if (blocked || n.a < a0 || n.a > a1 || n.b < b0 || n.b > b1) return;
          if (seen.insert(n).second) q.push(n);
        };
        visit(Face{f.a + 1, f.b}, v_block.count({f.a, f.b}) != 0);
        visit(Face{f.a - 1, f.b}, v_block.count({f.a - 1, f.b}) != 0);
        visit(Face{f.a, f.b + 1}, h_block.count({f.a, f.b}) != 0);
        visit(Face{f.a, f.b - 1}, h_block.count({f.a, f.b - 1}) != 0);
      }
      if (left && right) {
        ++out.noncontractible;
      } else if (!edge) {
        std::set<Face> c;
        for (const auto& f : region) c.insert(canon(f));
        out.contractible.insert(c);
      }
    }
  }
  return out;
}

}  // namespace

TEST(Geometry, RequiresCoprimePositive) {
  EXPECT_THROW(CylGeometry::make(2, 4), std::invalid_argument);
  EXPECT_THROW(CylGeometry::make(0, 1), std::invalid_argument);
  EXPECT_NO_THROW(CylGeometry::make(1, 1));
}

TEST(Edges, CanonicalizeByTranslation) {
  CylEdge a = e1_edge(G32, 4, 5);  // (9/2, 5) ~ (3/2, 3)
  EXPECT_EQ(a.s1, h(3));
  EXPECT_EQ(a.s2, h(6));
  CylEdge b = e2_edge(G32, -1, 0);  // (-1, 1/2) ~ (2, 5/2)
  EXPECT_EQ(b.s1, h(4));
  EXPECT_EQ(b.s2, h(5));
  EXPECT_THROW(make_edge(G32, Lattice::E1, h(2), h(2)), std::invalid_argument);
  EXPECT_EQ(to_string(a), "E1(3/2,3)");
}

TEST(IceRule, LoneEdgeRejectedAtAVertex) {
  EdgeMap raw{{e1_edge(G32, 0, 0), 1}};
  EXPECT_TRUE(find_ice_violation(G32, raw).has_value());
  try {
    ice_check(G32, raw);
    FAIL() << "expected a violation";
  } catch (const IceRuleViolation& v) {
    Vertex x = v.vertex();
    EXPECT_EQ(x.x.is_proper() && x.y.is_proper(), true);
  }
  EXPECT_THROW(ice_check(G32, {{e1_edge(G32, 0, 0), -1}}), std::invalid_argument);
}

TEST(Paths, ExampleConfiguration) {
  auto w = path_to_config(P(G32, {3, 3, 5}));
  EdgeMap want{{e2_edge(G32, 0, 1), 1}, {e2_edge(G32, 1, 1), 1}, {e2_edge(G32, 2, 2), 1},
               {e1_edge(G32, 1, 2), 1}, {e1_edge(G32, 2, 3), 1}};
  EXPECT_EQ(w.edges(), want);
  EXPECT_EQ(w, ice_check(G32, want));
}

TEST(Paths, ProfileValidation) {
  EXPECT_THROW(P(G32, {3, 1, 5}), std::invalid_argument);
  EXPECT_THROW(P(G32, {1, 3, 7}), std::invalid_argument);  // exceeds p(0) + n
  EXPECT_THROW(P(G32, {2, 2, 2}), std::invalid_argument);
  EXPECT_THROW(P(G32, {1, 1}), std::invalid_argument);
  EXPECT_EQ(P(G32, {1, 3, 5}).at(3), h(5));
  EXPECT_EQ(P(G32, {1, 3, 5}).at(-1), h(1));
}

TEST(Paths, StepCountsAndInjectivity) {
  for (auto g : {G32, CylGeometry::make(2, 3), CylGeometry::make(3, 4)}) {
    auto paths = paths_in_window(g, h(1), h(7));
    std::set<Configuration> seen;
    for (const auto& p : paths) {
      auto w = path_to_config(p);
      std::int64_t e1 = 0;
      std::int64_t e2 = 0;
      for (const auto& [e, k] : w.edges()) (e.lattice == Lattice::E1 ? e1 : e2) += k;
      EXPECT_EQ(e1, g.n);
      EXPECT_EQ(e2, g.m);
      EXPECT_TRUE(seen.insert(w).second) << to_string(p);
    }
  }
}

TEST(Paths, WindowEnumerationCount) {
  // nondecreasing triples in {1/2, 3/2, 5/2}: C(5, 3) = 10
  EXPECT_EQ(paths_in_window(G32, h(1), h(5)).size(), 10u);
}

TEST(Paths, OrderExamples) {
  auto a = P(G32, {3, 3, 5});
  auto b = P(G32, {3, 5, 5});
  auto c = P(G32, {1, 5, 5});
  EXPECT_TRUE(path_leq(a, b));
  EXPECT_FALSE(path_leq(b, a));
  EXPECT_TRUE(path_leq(a, a));
  EXPECT_FALSE(path_leq(a, c));
  EXPECT_FALSE(path_leq(c, a));
}

TEST(Paths, JoinMeetLatticeIdentities) {
  auto g43 = CylGeometry::make(3, 4);
  auto [j, m] = path_join_meet(P(g43, {3, 3, 9}), P(g43, {1, 5, 7}));
  EXPECT_EQ(j, P(g43, {3, 5, 9}));
  EXPECT_EQ(m, P(g43, {1, 3, 7}));

  auto paths = paths_in_window(G32, h(1), h(5));
  for (const auto& p : paths) {
    auto [pj, pm] = path_join_meet(p, p);
    EXPECT_EQ(pj, p);
    EXPECT_EQ(pm, p);
    for (const auto& q : paths) {
      auto [jn, mt] = path_join_meet(p, q);
      EXPECT_EQ(path_to_config(jn) + path_to_config(mt), path_to_config(p) + path_to_config(q));
      EXPECT_EQ(path_join_meet(q, p), std::make_pair(jn, mt));
      EXPECT_EQ(path_join_meet(p, jn).second, p);  // absorption
      EXPECT_EQ(path_join_meet(p, mt).first, p);
      EXPECT_EQ(path_leq(p, q), jn == q);
    }
  }
}

TEST(Chain, FourPathExample) {
  auto w = read_config_file(data_path("four_paths.cfg"));
  auto chain = chain_decompose(w);
  std::vector<PathProfile> want{P(G32, {7, 7, 7}), P(G32, {3, 7, 7}), P(G32, {3, 5, 5}),
                                P(G32, {3, 3, 5})};
  EXPECT_EQ(chain, want);
  EXPECT_EQ(sum_of(chain), w);
}

TEST(Chain, SinglePath) {
  auto w = read_config_file(data_path("single_path.cfg"));
  auto chain = chain_decompose(w);
  ASSERT_EQ(chain.size(), 1u);
  EXPECT_EQ(chain[0], P(G32, {3, 3, 5}));
}

TEST(Chain, RandomRoundTrips) {
  std::mt19937 rng(23);
  for (auto g : {G32, CylGeometry::make(2, 3), CylGeometry::make(1, 2)}) {
    auto paths = paths_in_window(g, h(-3), h(5));
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::uniform_int_distribution<int> count(1, 4);
    for (int i = 0; i < 400; ++i) {
      std::vector<PathProfile> chosen;
      for (int k = count(rng); k > 0; --k) chosen.push_back(paths[pick(rng)]);
      auto w = sum_of(chosen);
      auto chain = chain_decompose(w);
      EXPECT_EQ(sum_of(chain), w);
      for (std::size_t k = 1; k < chain.size(); ++k) EXPECT_TRUE(path_leq(chain[k], chain[k - 1]));
      std::shuffle(chosen.begin(), chosen.end(), rng);
      EXPECT_EQ(chain_decompose(sum_of(chosen)), chain);
      bool is_chain = true;
      for (const auto& a : chosen) {
        for (const auto& b : chosen) is_chain = is_chain && (path_leq(a, b) || path_leq(b, a));
      }
      if (is_chain) {
        std::sort(chosen.begin(), chosen.end(),
                  [](const PathProfile& a, const PathProfile& b) { return path_leq(b, a) && a != b; });
        EXPECT_EQ(chain, chosen);
      }
    }
  }
}

TEST(Components, FourPathsAndTrivialCases) {
  auto comps = complement_components(read_config_file(data_path("four_paths.cfg")));
  EXPECT_EQ(comps.size(), 5u);
  EXPECT_EQ(std::count_if(comps.begin(), comps.end(), [](const Component& c) { return !c.contractible; }), 2);

  auto zero = complement_components(Configuration(G32));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0].id.kind, ComponentKind::All);
  EXPECT_FALSE(zero[0].contractible);

  for (const auto& p : paths_in_window(G32, h(1), h(5))) {
    auto c = complement_components(path_to_config(p));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].id.kind, ComponentKind::Top);
    EXPECT_EQ(c[1].id.kind, ComponentKind::Bottom);
  }
}

TEST(Components, AgreeWithUniversalCoverFloodFill) {
  std::mt19937 rng(29);
  for (auto g : {G32, CylGeometry::make(2, 3), CylGeometry::make(3, 4)}) {
    auto paths = paths_in_window(g, h(-1), h(7));
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    std::uniform_int_distribution<int> count(1, 4);
    for (int i = 0; i < 150; ++i) {
      std::vector<PathProfile> chosen;
      for (int k = count(rng); k > 0; --k) chosen.push_back(paths[pick(rng)]);
      auto w = sum_of(chosen);
      auto comps = complement_components(w);
      auto oracle = cover_components(w);
      std::set<std::set<Face>> bounded;
      int nonc = 0;
      for (const auto& c : comps) {
        if (c.contractible) {
          bounded.insert(c.faces);
        } else {
          ++nonc;
        }
      }
      EXPECT_EQ(nonc, oracle.noncontractible) << to_string(w);
      EXPECT_EQ(bounded, oracle.contractible) << to_string(w);
    }
  }
}

TEST(Components, IntersectionExamples) {
  auto pa = P(G32, {3, 3, 5});
  auto pb = P(G32, {1, 5, 5});
  auto wa = path_to_config(pa);
  auto wb = path_to_config(pb);
  auto top = ComponentId{ComponentKind::Top, {0, 0}};
  auto bottom = ComponentId{ComponentKind::Bottom, {0, 0}};
  EXPECT_TRUE(intersect_components(wa, top, wa, bottom).empty());
  auto both = intersect_components(wa, top, wb, bottom);
  ASSERT_EQ(both.size(), 1u);
  EXPECT_TRUE(both[0].contractible);
  EXPECT_EQ(both[0].faces, (std::set<Face>{{1, 2}}));
  auto all = ComponentId{ComponentKind::All, {0, 0}};
  auto same = intersect_components(Configuration(G32), all, wa, top);
  ASSERT_EQ(same.size(), 1u);
  EXPECT_EQ(same[0].id.kind, ComponentKind::Top);
}

TEST(CylRing, ClassValidation) {
  auto w = path_to_config(P(G32, {3, 3, 5}));
  EXPECT_THROW(CylClass(w, ComponentId{ComponentKind::Top, {0, 0}}, Rational(0)),
               std::invalid_argument);
  EXPECT_THROW(CylClass(w, ComponentId{ComponentKind::All, {0, 0}}, Rational(1)),
               std::invalid_argument);
  EXPECT_THROW(gamma_class(G32, Rational(0)), std::invalid_argument);
}

TEST(CylRing, GroupAlgebraAndUnit) {
  EXPECT_EQ(cyl_mul(gamma_class(G32, Rational(2)), gamma_class(G32, Rational(3))),
            CylElement::basis(gamma_class(G32, Rational(6))));
  auto one = cyl_unit(G32);
  for (const auto& p : paths_in_window(G32, h(1), h(5))) {
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      auto x = CylElement::basis(path_class(p, s));
      EXPECT_EQ(cyl_mul(one, x), x);
      EXPECT_EQ(cyl_mul(x, one), x);
    }
  }
}

TEST(CylRing, CrossingProductIsContractible) {
  auto pa = P(G32, {3, 3, 5});
  auto pb = P(G32, {1, 5, 5});
  auto prod = cyl_mul(path_class(pa, Sign::Plus), path_class(pb, Sign::Minus));
  ASSERT_EQ(prod.size(), 1u);
  const auto& [c, k] = *prod.terms().begin();
  EXPECT_EQ(k, 1);
  EXPECT_EQ(c.xi(), Rational(0));
  EXPECT_EQ(c.component().kind, ComponentKind::Bounded);
  EXPECT_EQ(c.component().face, (Face{1, 2}));
  EXPECT_EQ(c.config(), path_to_config(pa) + path_to_config(pb));
}

TEST(CylRing, WedgeVeeIdentityExample) {
  auto pa = P(G32, {3, 3, 5});
  auto pb = P(G32, {1, 5, 5});
  auto [j, m] = path_join_meet(pa, pb);
  auto lhs = cyl_mul(path_class(pa, Sign::Plus), path_class(pb, Sign::Minus)) +
             cyl_mul(path_class(pb, Sign::Plus), path_class(pa, Sign::Minus));
  auto rhs = cyl_mul(path_class(m, Sign::Plus), path_class(j, Sign::Minus));
  EXPECT_EQ(lhs, rhs);
  ASSERT_EQ(rhs.size(), 2u);
  std::set<Face> faces;
  for (const auto& [c, k] : rhs.terms()) {
    EXPECT_EQ(c.xi(), Rational(0));
    faces.insert(c.component().face);
  }
  EXPECT_EQ(faces, (std::set<Face>{{0, 1}, {1, 2}}));
}

TEST(CylRing, EvalWordRelations) {
  auto p = P(G32, {3, 3, 5});
  using K = CylGenerator::Kind;
  EXPECT_TRUE(eval_word(G32, {{K::XPlus, Rational(1), p}, {K::XMinus, Rational(1), p}}).is_zero());
  auto pa = P(G32, {3, 3, 5});
  auto pb = P(G32, {1, 5, 5});
  auto plain = eval_word(G32, {{K::XPlus, Rational(1), pa}, {K::XMinus, Rational(1), pb}});
  auto twisted = eval_word(G32, {{K::Gamma, Rational(5), std::nullopt},
                                 {K::XPlus, Rational(1), pa},
                                 {K::XMinus, Rational(1), pb}});
  EXPECT_EQ(plain, twisted);
  EXPECT_EQ(eval_word(G32, {}), cyl_unit(G32));
}

TEST(CylRing, CommutativeAssociativeExhaustive) {
  std::vector<CylClass> classes{gamma_class(G32, Rational(1)), gamma_class(G32, Rational(-2))};
  for (const auto& p : paths_in_window(G32, h(1), h(5))) {
    classes.push_back(path_class(p, Sign::Plus));
    classes.push_back(path_class(p, Sign::Minus));
  }
  for (const auto& a : classes) {
    for (const auto& b : classes) {
      auto ab = cyl_mul(a, b);
      EXPECT_EQ(ab, cyl_mul(b, a));
      for (const auto& [c, k] : ab.terms()) EXPECT_EQ(c.xi() == Rational(0), [&] {
        return find_component(complement_components(c.config()), c.component()).contractible;
      }());
    }
  }
  for (std::size_t i = 0; i < classes.size(); i += 2) {
    for (std::size_t j = 1; j < classes.size(); j += 2) {
      for (const auto& c : classes) {
        auto ec = CylElement::basis(c);
        auto ea = CylElement::basis(classes[i]);
        auto eb = CylElement::basis(classes[j]);
        EXPECT_EQ(cyl_mul(cyl_mul(ea, eb), ec), cyl_mul(ea, cyl_mul(eb, ec)));
      }
    }
  }
}

TEST(Consistency, PathParametersAndChecks) {
  auto w = path_to_config(P(G32, {3, 3, 5}));
  auto [t1, t2] = config_to_t(w);
  EXPECT_EQ(t1, (line::RationalRoots{{Rational(3), 1}, {Rational(4), 1}}));
  EXPECT_EQ(t2, (line::RationalRoots{{Rational(5, 2), 1}, {Rational(7, 2), 1}, {Rational(9, 2), 1}}));
  EXPECT_TRUE(consistency_check(G32, t1, t2));
  EXPECT_TRUE(consistency_check(G32, {}, {}));
  EXPECT_FALSE(consistency_check(G32, {{Rational(0), 1}}, {}));
  auto z = config_to_t(Configuration(G32));
  EXPECT_TRUE(z.first.empty() && z.second.empty());
}

TEST(Consistency, AdditiveAndHoldsOnRandomSums) {
  std::mt19937 rng(31);
  for (auto g : {G32, CylGeometry::make(2, 5), CylGeometry::make(4, 3)}) {
    auto paths = paths_in_window(g, h(-3), h(5));
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    for (int i = 0; i < 200; ++i) {
      auto a = path_to_config(paths[pick(rng)]);
      auto b = path_to_config(paths[pick(rng)]);
      auto [a1, a2] = config_to_t(a);
      auto [b1, b2] = config_to_t(b);
      auto [s1, s2] = config_to_t(a + b);
      EXPECT_EQ(s1, line::roots_union(a1, b1));
      EXPECT_EQ(s2, line::roots_union(a2, b2));
      EXPECT_TRUE(consistency_check(g, s1, s2));
    }
  }
}

TEST(Relations, SuiteHoldsOnSmallWindow) {
  auto rep = verify_relations(G32, paths_in_window(G32, h(1), h(5)),
                              {Rational(1), Rational(2), Rational(-1, 3)});
  EXPECT_TRUE(rep.ok());
  ASSERT_EQ(rep.tallies.size(), 7u);
  for (const auto& t : rep.tallies) EXPECT_GT(t.checked, 0) << t.name;
}

TEST(TextFormat, ReadsAndRejects) {
  std::istringstream ok("# two rows\n3 2\nV 0 1 1\nV 1 1 1\nV 2 2 1\nH 1 2 1\nH 2 3 1\n");
  EXPECT_EQ(read_config(ok), path_to_config(P(G32, {3, 3, 5})));
  std::istringstream shifted("3 2\nV 3 3 1\nV 1 1 1\nV 2 2 1\nH 1 2 1\nH -1 1 1\n");
  EXPECT_EQ(read_config(shifted), path_to_config(P(G32, {3, 3, 5})));
  std::istringstream dup("3 2\nV 0 1 1\nV 0 1 1\n");
  EXPECT_THROW(read_config(dup), std::invalid_argument);
  std::istringstream zero("3 2\nV 0 1 0\n");
  EXPECT_THROW(read_config(zero), std::invalid_argument);
  std::istringstream bad("3 2\nQ 0 1 1\n");
  EXPECT_THROW(read_config(bad), std::invalid_argument);
  std::istringstream unbalanced("3 2\nV 0 1 1\n");
  EXPECT_THROW(read_config(unbalanced), IceRuleViolation);
  EXPECT_THROW(read_config_file(data_path("missing.cfg")), std::runtime_error);
}

TEST(TextFormat, RenderIsDeterministic) {
  auto w = read_config_file(data_path("four_paths.cfg"));
  auto a = render_ascii(w);
  EXPECT_EQ(a, render_ascii(read_config_file(data_path("four_paths.cfg"))));
  EXPECT_NE(a.find("edges=13"), std::string::npos);
  EXPECT_EQ(render_svg(w), render_svg(w));
  EXPECT_EQ(render_svg(w).rfind("<svg", 0), 0u);
  auto empty = render_ascii(Configuration(G32));
  EXPECT_NE(empty.find("edges=0"), std::string::npos);
}
