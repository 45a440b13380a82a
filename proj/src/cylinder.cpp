#include "gwring/cylinder.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace gwring::cyl {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Translate a point given in twice-coordinates into the canonical strip.
std::pair<std::int64_t, std::int64_t> canon_twice(const CylGeometry& g, std::int64_t x2,
                                                  std::int64_t y2) {
  std::int64_t k = floor_div(x2, 2 * g.m);
  return {x2 - 2 * g.m * k, y2 - 2 * g.n * k};
}

CylEdge edge_twice(const CylGeometry& g, Lattice lattice, std::int64_t x2, std::int64_t y2) {
  auto [cx, cy] = canon_twice(g, x2, y2);
  return CylEdge{lattice, HalfInt::from_twice(cx), HalfInt::from_twice(cy)};
}

Vertex vertex_twice(const CylGeometry& g, std::int64_t x2, std::int64_t y2) {
  auto [cx, cy] = canon_twice(g, x2, y2);
  return Vertex{HalfInt::from_twice(cx), HalfInt::from_twice(cy)};
}

std::int64_t lookup(const EdgeMap& edges, const CylEdge& e) {
  auto it = edges.find(e);
  return it == edges.end() ? 0 : it->second;
}

std::string vertex_string(const Vertex& v) {
  return "(" + to_string(v.x) + "," + to_string(v.y) + ")";
}

EdgeMap canonical_edges(const CylGeometry& g, const EdgeMap& raw) {
  EdgeMap out;
  for (const auto& [e, k] : raw) {
    if (k < 0) throw std::invalid_argument("negative multiplicity on edge " + to_string(e));
    if (k == 0) continue;
    out[make_edge(g, e.lattice, e.s1, e.s2)] += k;
  }
  return out;
}

std::optional<Vertex> violation_in(const CylGeometry& g, const EdgeMap& edges,
                                   std::int64_t* in_out = nullptr) {
  std::set<Vertex> candidates;
  for (const auto& [e, k] : edges) {
    std::int64_t x2 = e.s1.twice;
    std::int64_t y2 = e.s2.twice;
    if (e.lattice == Lattice::E2) {
      candidates.insert(vertex_twice(g, x2 - 1, y2));
      candidates.insert(vertex_twice(g, x2 + 1, y2));
    } else {
      candidates.insert(vertex_twice(g, x2, y2 - 1));
      candidates.insert(vertex_twice(g, x2, y2 + 1));
    }
  }
  for (const Vertex& v : candidates) {
    std::int64_t x2 = v.x.twice;
    std::int64_t y2 = v.y.twice;
    std::int64_t in = lookup(edges, edge_twice(g, Lattice::E2, x2 - 1, y2)) +
                      lookup(edges, edge_twice(g, Lattice::E1, x2, y2 - 1));
    std::int64_t out = lookup(edges, edge_twice(g, Lattice::E2, x2 + 1, y2)) +
                       lookup(edges, edge_twice(g, Lattice::E1, x2, y2 + 1));
    if (in != out) {
      if (in_out != nullptr) {
        in_out[0] = in;
        in_out[1] = out;
      }
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

CylGeometry CylGeometry::make(std::int64_t m, std::int64_t n) {
  if (m <= 0 || n <= 0) throw std::invalid_argument("m and n must be positive");
  if (std::gcd(m, n) != 1) {
    throw std::invalid_argument("m=" + std::to_string(m) + " and n=" + std::to_string(n) +
                                " are not coprime");
  }
  return CylGeometry{m, n};
}

CylEdge make_edge(const CylGeometry& g, Lattice lattice, HalfInt s1, HalfInt s2) {
  bool ok = lattice == Lattice::E1 ? (s1.is_proper() && s2.is_integer())
                                   : (s1.is_integer() && s2.is_proper());
  if (!ok) {
    throw std::invalid_argument("(" + to_string(s1) + "," + to_string(s2) +
                                ") is not an edge midpoint of " +
                                (lattice == Lattice::E1 ? "E1" : "E2"));
  }
  return edge_twice(g, lattice, s1.twice, s2.twice);
}

CylEdge e1_edge(const CylGeometry& g, std::int64_t a, std::int64_t b) {
  return edge_twice(g, Lattice::E1, 2 * a + 1, 2 * b);
}

CylEdge e2_edge(const CylGeometry& g, std::int64_t a, std::int64_t b) {
  return edge_twice(g, Lattice::E2, 2 * a, 2 * b + 1);
}

std::string to_string(const CylEdge& e) {
  return std::string(e.lattice == Lattice::E1 ? "E1" : "E2") + "(" + to_string(e.s1) + "," +
         to_string(e.s2) + ")";
}

IceRuleViolation::IceRuleViolation(Vertex v, std::int64_t in, std::int64_t out)
    : std::invalid_argument("ice rule fails at vertex " + vertex_string(v) + ": in=" +
                            std::to_string(in) + " out=" + std::to_string(out)),
      vertex_(v) {}

std::int64_t Configuration::multiplicity(const CylEdge& e) const { return lookup(edges_, e); }

std::int64_t Configuration::total() const {
  std::int64_t s = 0;
  for (const auto& [e, k] : edges_) s += k;
  return s;
}

Configuration Configuration::operator+(const Configuration& other) const {
  if (geometry_ != other.geometry_) throw std::invalid_argument("geometry mismatch");
  Configuration out = *this;
  for (const auto& [e, k] : other.edges_) out.edges_[e] += k;
  return out;
}

std::optional<Vertex> find_ice_violation(const CylGeometry& g, const EdgeMap& raw) {
  return violation_in(g, canonical_edges(g, raw));
}

Configuration ice_check(const CylGeometry& g, const EdgeMap& raw) {
  Configuration out(g);
  out.edges_ = canonical_edges(g, raw);
  std::int64_t io[2] = {0, 0};
  if (auto v = violation_in(g, out.edges_, io)) throw IceRuleViolation(*v, io[0], io[1]);
  return out;
}

std::string to_string(const Configuration& w) {
  if (w.is_zero()) return "0";
  std::string s;
  for (const auto& p : chain_decompose(w)) {
    if (!s.empty()) s += "+";
    s += to_string(p);
  }
  return s;
}

// ---------------------------------------------------------------------------

PathProfile::PathProfile(CylGeometry g, std::vector<HalfInt> heights)
    : geometry_(g), heights_(std::move(heights)) {
  if (static_cast<std::int64_t>(heights_.size()) != g.m) {
    throw std::invalid_argument("profile has " + std::to_string(heights_.size()) +
                                " heights, expected m=" + std::to_string(g.m));
  }
  for (std::size_t a = 0; a < heights_.size(); ++a) {
    if (!heights_[a].is_proper()) {
      throw std::invalid_argument("profile height " + to_string(heights_[a]) +
                                  " is not in Z+1/2");
    }
    if (a > 0 && heights_[a] < heights_[a - 1]) {
      throw std::invalid_argument("profile decreases at column " + std::to_string(a));
    }
  }
  if (heights_.back() > heights_.front() + HalfInt::from_int(g.n)) {
    throw std::invalid_argument("profile rises by more than n over one period");
  }
}

HalfInt PathProfile::at(std::int64_t column) const {
  std::int64_t k = floor_div(column, geometry_.m);
  return heights_[static_cast<std::size_t>(column - k * geometry_.m)] +
         HalfInt::from_int(k * geometry_.n);
}

std::string to_string(const PathProfile& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.heights().size(); ++i) {
    if (i > 0) s += ",";
    s += to_string(p.heights()[i]);
  }
  return s + "]";
}

Configuration path_to_config(const PathProfile& p) {
  const auto& g = p.geometry();
  EdgeMap raw;
  for (std::int64_t a = 0; a < g.m; ++a) {
    HalfInt h = p.at(a);
    HalfInt next = p.at(a + 1);
    raw[edge_twice(g, Lattice::E2, 2 * a, h.twice)] += 1;
    for (std::int64_t c = h.ceil(); next > HalfInt::from_int(c); ++c) {
      raw[edge_twice(g, Lattice::E1, 2 * a + 1, 2 * c)] += 1;
    }
  }
  return ice_check(g, raw);
}

std::vector<PathProfile> chain_decompose(const Configuration& w) {
  const auto& g = w.geometry();
  std::vector<std::vector<HalfInt>> columns(static_cast<std::size_t>(g.m));
  for (const auto& [e, k] : w.edges()) {
    if (e.lattice != Lattice::E2) continue;
    auto& col = columns[static_cast<std::size_t>(e.s1.twice / 2)];
    for (std::int64_t i = 0; i < k; ++i) col.push_back(e.s2);
  }
  for (auto& col : columns) {
    std::sort(col.begin(), col.end(), std::greater<>());
    if (col.size() != columns.front().size()) {
      throw std::logic_error("columns carry different numbers of east steps");
    }
  }
  std::vector<PathProfile> chain;
  Configuration sum(g);
  for (std::size_t j = 0; j < columns.front().size(); ++j) {
    std::vector<HalfInt> heights;
    for (const auto& col : columns) heights.push_back(col[j]);
    try {
      chain.emplace_back(g, std::move(heights));
    } catch (const std::invalid_argument& e) {
      throw std::logic_error(std::string("chain decomposition produced an invalid path: ") +
                             e.what());
    }
    sum = sum + path_to_config(chain.back());
  }
  if (sum != w) throw std::logic_error("chain decomposition does not re-sum to the input");
  return chain;
}

bool path_leq(const PathProfile& lower, const PathProfile& upper) {
  for (std::size_t a = 0; a < lower.heights().size(); ++a) {
    if (lower.heights()[a] > upper.heights()[a]) return false;
  }
  return true;
}

std::pair<PathProfile, PathProfile> path_join_meet(const PathProfile& a, const PathProfile& b) {
  if (a.geometry() != b.geometry()) throw std::invalid_argument("geometry mismatch");
  std::vector<HalfInt> hi;
  std::vector<HalfInt> lo;
  for (std::size_t i = 0; i < a.heights().size(); ++i) {
    hi.push_back(std::max(a.heights()[i], b.heights()[i]));
    lo.push_back(std::min(a.heights()[i], b.heights()[i]));
  }
  return {PathProfile(a.geometry(), hi), PathProfile(a.geometry(), lo)};
}

namespace {

std::set<std::pair<std::int64_t, std::int64_t>> path_vertices(const PathProfile& p) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 0; a < p.geometry().m; ++a) {
    for (std::int64_t y2 = p.at(a).twice; y2 <= p.at(a + 1).twice; y2 += 2) {
      out.emplace(2 * a + 1, y2);
    }
  }
  return out;
}

}  // namespace

bool paths_intersect(const PathProfile& a, const PathProfile& b) {
  auto va = path_vertices(a);
  for (const auto& v : path_vertices(b)) {
    if (va.count(v) != 0) return true;
  }
  return false;
}

std::vector<PathProfile> paths_in_window(const CylGeometry& g, HalfInt lo, HalfInt hi) {
  if (!lo.is_proper() || !hi.is_proper()) {
    throw std::invalid_argument("window bounds must be in Z+1/2");
  }
  std::vector<PathProfile> out;
  std::vector<HalfInt> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<std::int64_t>(cur.size()) == g.m) {
      if (cur.back() <= cur.front() + HalfInt::from_int(g.n)) out.emplace_back(g, cur);
      return;
    }
    HalfInt start = cur.empty() ? lo : cur.back();
    for (HalfInt h = start; h <= hi; h = h + HalfInt::from_int(1)) {
      cur.push_back(h);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const ComponentId& id) {
  switch (id.kind) {
    case ComponentKind::All: return "all";
    case ComponentKind::Top: return "top";
    case ComponentKind::Bottom: return "bottom";
    case ComponentKind::Bounded:
      return "bounded(" + std::to_string(id.face.a) + "," + std::to_string(id.face.b) + ")";
  }
  return "?";
}

bool Component::contains(const Face& f) const {
  if (id.kind == ComponentKind::All) return true;
  if (f.b < row_lo) return id.kind == ComponentKind::Bottom;
  if (f.b > row_hi) return id.kind == ComponentKind::Top;
  return faces.count(f) != 0;
}

Face Component::representative() const {
  switch (id.kind) {
    case ComponentKind::All: return Face{0, 0};
    case ComponentKind::Top: return Face{0, row_hi + 1};
    case ComponentKind::Bottom: return Face{0, row_lo - 1};
    case ComponentKind::Bounded: return id.face;
  }
  return id.face;
}

std::vector<Component> complement_components(const Configuration& w) {
  if (w.is_zero()) return {Component{ComponentId{}, false, {}, 0, -1}};
  const auto& g = w.geometry();
  std::int64_t row_lo = 0;
  std::int64_t row_hi = 0;
  bool first = true;
  for (const auto& [e, k] : w.edges()) {
    std::int64_t f = e.s2.floor();
    std::int64_t c = e.s2.ceil();
    row_lo = first ? f : std::min(row_lo, f);
    row_hi = first ? c : std::max(row_hi, c);
    first = false;
  }

  struct Seen {
    std::size_t comp;
    std::int64_t lift;
  };
  struct Raw {
    std::set<Face> faces;
    bool top = false;
    bool bottom = false;
    bool winds = false;
  };
  std::map<Face, Seen> seen;
  std::vector<Raw> raws;

  const std::int64_t steps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (std::int64_t b = row_lo; b <= row_hi; ++b) {
    for (std::int64_t a = 0; a < g.m; ++a) {
      if (seen.count(Face{a, b}) != 0) continue;
      std::size_t id = raws.size();
      raws.emplace_back();
      Raw& raw = raws.back();
      std::deque<std::pair<Face, std::int64_t>> queue;
      seen.emplace(Face{a, b}, Seen{id, 0});
      raw.faces.insert(Face{a, b});
      queue.emplace_back(Face{a, b}, 0);
      while (!queue.empty()) {
        auto [f, k] = queue.front();
        queue.pop_front();
        std::int64_t la = f.a + k * g.m;
        std::int64_t lb = f.b + k * g.n;
        for (const auto& st : steps) {
          // Separating edge in twice-coordinates.
          CylEdge sep = st[0] != 0
                            ? edge_twice(g, Lattice::E1, 2 * la + st[0], 2 * lb)
                            : edge_twice(g, Lattice::E2, 2 * la, 2 * lb + st[1]);
          if (w.multiplicity(sep) > 0) continue;
          std::int64_t na = la + st[0];
          std::int64_t nb = lb + st[1];
          std::int64_t nk = floor_div(na, g.m);
          Face nf{na - nk * g.m, nb - nk * g.n};
          if (nf.b < row_lo) {
            raw.bottom = true;
          } else if (nf.b > row_hi) {
            raw.top = true;
          } else if (auto it = seen.find(nf); it == seen.end()) {
            seen.emplace(nf, Seen{id, nk});
            raw.faces.insert(nf);
            queue.emplace_back(nf, nk);
          } else if (it->second.lift != nk) {
            raw.winds = true;
          }
        }
      }
    }
  }

  Component top{ComponentId{ComponentKind::Top, {}}, false, {}, row_lo, row_hi};
  Component bottom{ComponentId{ComponentKind::Bottom, {}}, false, {}, row_lo, row_hi};
  std::vector<Component> out;
  for (auto& raw : raws) {
    if (raw.top && raw.bottom) {
      throw std::logic_error("a nonzero configuration failed to separate the cylinder");
    }
    if (raw.top) {
      top.faces.insert(raw.faces.begin(), raw.faces.end());
    } else if (raw.bottom) {
      bottom.faces.insert(raw.faces.begin(), raw.faces.end());
    } else {
      Face minimal = *std::min_element(raw.faces.begin(), raw.faces.end(),
                                       [](const Face& x, const Face& y) {
                                         return std::pair(x.b, x.a) < std::pair(y.b, y.a);
                                       });
      out.push_back(Component{ComponentId{ComponentKind::Bounded, minimal}, !raw.winds,
                              std::move(raw.faces), row_lo, row_hi});
    }
  }
  out.push_back(std::move(top));
  out.push_back(std::move(bottom));
  std::sort(out.begin(), out.end(),
            [](const Component& x, const Component& y) { return x.id < y.id; });
  return out;
}

const Component& find_component(const std::vector<Component>& comps, const ComponentId& id) {
  for (const auto& c : comps) {
    if (c.id == id) return c;
  }
  throw std::invalid_argument("no component " + to_string(id));
}

std::vector<Component> intersect_components(const Configuration& w, const ComponentId& d,
                                            const Configuration& w2, const ComponentId& d2) {
  auto ca = complement_components(w);
  auto cb = complement_components(w2);
  const Component& da = find_component(ca, d);
  const Component& db = find_component(cb, d2);
  std::vector<Component> out;
  for (auto& c : complement_components(w + w2)) {
    Face rep = c.representative();
    if (da.contains(rep) && db.contains(rep)) out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------

CylClass::CylClass(Configuration w, ComponentId d, Rational xi)
    : config_(std::move(w)), component_(d), xi_(xi) {
  auto comps = complement_components(config_);
  const Component& c = find_component(comps, component_);
  if (c.contractible && xi_ != Rational(0)) {
    throw std::invalid_argument("contractible component " + to_string(d) + " needs xi = 0");
  }
  if (!c.contractible && xi_ == Rational(0)) {
    throw std::invalid_argument("noncontractible component " + to_string(d) +
                                " needs nonzero xi");
  }
}

CylClass::CylClass(Configuration w, ComponentId d, Rational xi, Trusted)
    : config_(std::move(w)), component_(d), xi_(xi) {}

bool CylClass::operator<(const CylClass& o) const {
  if (config_ != o.config_) return config_ < o.config_;
  if (component_ != o.component_) return component_ < o.component_;
  return xi_ < o.xi_;
}

std::string to_string(const CylClass& c) {
  return "C[" + to_string(c.config()) + ";" + to_string(c.component()) + ";" +
         gwring::to_string(c.xi()) + "]";
}

std::vector<std::pair<CylClass, Coefficient>> cyl_mul_terms(const CylClass& a,
                                                            const CylClass& b) {
  auto kept = intersect_components(a.config(), a.component(), b.config(), b.component());
  Configuration sum = a.config() + b.config();
  std::vector<std::pair<CylClass, Coefficient>> out;
  bool noncontractible = false;
  for (const auto& c : kept) {
    if (!c.contractible) {
      noncontractible = true;
      out.emplace_back(CylClass(sum, c.id, a.xi() * b.xi(), CylClass::Trusted{}), 1);
    } else {
      out.emplace_back(CylClass(sum, c.id, Rational(0), CylClass::Trusted{}), 1);
    }
  }
  if (noncontractible && out.size() != 1) {
    throw std::logic_error("intersection mixes a noncontractible component with others");
  }
  return out;
}

CylElement cyl_mul(const CylClass& a, const CylClass& b) {
  if (a.config().geometry() != b.config().geometry()) {
    throw std::invalid_argument("geometry mismatch");
  }
  return CylElement::from_terms(cyl_mul_terms(a, b));
}

CylElement cyl_mul(const CylElement& a, const CylElement& b) {
  return multiply(a, b, [](const CylClass& x, const CylClass& y) { return cyl_mul(x, y); });
}

CylClass gamma_class(const CylGeometry& g, const Rational& xi) {
  if (xi == Rational(0)) throw std::invalid_argument("gamma needs a nonzero scalar");
  return CylClass(Configuration(g), ComponentId{}, xi);
}

CylElement cyl_unit(const CylGeometry& g) { return CylElement::basis(gamma_class(g, 1)); }

CylClass path_class(const PathProfile& p, line::Sign sign) {
  ComponentId id{sign == line::Sign::Plus ? ComponentKind::Top : ComponentKind::Bottom, {}};
  return CylClass(path_to_config(p), id, 1);
}

CylElement eval_word(const CylGeometry& g, const std::vector<CylGenerator>& word) {
  CylElement acc = cyl_unit(g);
  for (const auto& gen : word) {
    CylClass c = gen.kind == CylGenerator::Kind::Gamma
                     ? gamma_class(g, gen.xi)
                     : path_class(gen.path.value(), gen.kind == CylGenerator::Kind::XPlus
                                                        ? line::Sign::Plus
                                                        : line::Sign::Minus);
    if (c.config().geometry() != g) throw std::invalid_argument("geometry mismatch");
    acc = cyl_mul(acc, CylElement::basis(c));
  }
  return acc;
}

std::pair<line::RationalRoots, line::RationalRoots> config_to_t(const Configuration& w) {
  const auto& g = w.geometry();
  line::RationalRoots t1;
  line::RationalRoots t2;
  for (const auto& [e, k] : w.edges()) {
    Rational root = e.s2.to_rational() * g.m - e.s1.to_rational() * g.n;
    (e.lattice == Lattice::E1 ? t1 : t2)[root] += static_cast<int>(k);
  }
  return {t1, t2};
}

bool consistency_check(const CylGeometry& g, const line::RationalRoots& t1,
                       const line::RationalRoots& t2) {
  auto shifted = [](const line::RationalRoots& t, const Rational& by, line::RationalRoots& into) {
    for (const auto& [root, k] : t) into[root + by] += k;
  };
  line::RationalRoots lhs;
  line::RationalRoots rhs;
  Rational half_m(g.m, 2);
  Rational half_n(g.n, 2);
  shifted(t2, -half_n, lhs);
  shifted(t1, half_m, lhs);
  shifted(t2, half_n, rhs);
  shifted(t1, -half_m, rhs);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

bool RelationReport::ok() const {
  return std::all_of(tallies.begin(), tallies.end(),
                     [](const RelationTally& t) { return t.failed == 0; });
}

RelationReport verify_relations(const CylGeometry& g, const std::vector<PathProfile>& paths,
                                const std::vector<Rational>& xis) {
  RelationReport report;
  auto tally = [&](const std::string& name) -> RelationTally& {
    report.tallies.push_back(RelationTally{name, 0, 0});
    return report.tallies.back();
  };
  auto record = [&](RelationTally& t, bool holds, const std::string& what) {
    ++t.checked;
    if (!holds) {
      ++t.failed;
      if (report.failures.size() < 20) report.failures.push_back(t.name + ": " + what);
    }
  };

  std::vector<Configuration> configs;
  std::vector<CylElement> plus;
  std::vector<CylElement> minus;
  for (const auto& p : paths) {
    configs.push_back(path_to_config(p));
    plus.push_back(CylElement::basis(path_class(p, line::Sign::Plus)));
    minus.push_back(CylElement::basis(path_class(p, line::Sign::Minus)));
  }
  const std::size_t np = paths.size();
  std::vector<std::vector<CylElement>> pm(np, std::vector<CylElement>(np));
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < np; ++j) pm[i][j] = cyl_mul(plus[i], minus[j]);
  }
  auto pair_name = [&](std::size_t i, std::size_t j) {
    return to_string(paths[i]) + "," + to_string(paths[j]);
  };

  {
    auto& t = tally("(i) gamma_1 is the unit");
    CylElement g1 = CylElement::basis(gamma_class(g, 1));
    record(t, g1 == cyl_unit(g), "gamma_1");
    for (std::size_t i = 0; i < np; ++i) {
      record(t, cyl_mul(g1, plus[i]) == plus[i], "x+" + to_string(paths[i]));
      record(t, cyl_mul(g1, minus[i]) == minus[i], "x-" + to_string(paths[i]));
    }
  }
  {
    auto& t = tally("(ii) gamma group law");
    for (const auto& a : xis) {
      for (const auto& b : xis) {
        record(t,
               cyl_mul(gamma_class(g, a), gamma_class(g, b)) ==
                   CylElement::basis(gamma_class(g, a * b)),
               gwring::to_string(a) + "*" + gwring::to_string(b));
      }
    }
  }
  {
    auto& t = tally("(iii) same-sign products depend on the sum");
    for (const auto* gens : {&plus, &minus}) {
      std::map<Configuration, CylElement> first;
      for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < np; ++j) {
          CylElement prod = cyl_mul((*gens)[i], (*gens)[j]);
          auto [it, fresh] = first.try_emplace(configs[i] + configs[j], prod);
          if (!fresh) record(t, it->second == prod, pair_name(i, j));
        }
      }
    }
  }
  {
    auto& t = tally("(iv) x+ x- vanishes when ordered");
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) {
        if (path_leq(paths[j], paths[i])) record(t, pm[i][j].is_zero(), pair_name(i, j));
      }
    }
  }
  {
    auto& t = tally("(v) mixed sums depend on the sums");
    std::map<Configuration, std::vector<std::pair<std::size_t, std::size_t>>> splits;
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) splits[configs[i] + configs[j]].emplace_back(i, j);
    }
    for (const auto& [w, list] : splits) {
      std::map<Configuration, CylElement> first;
      for (const auto& [i1, i2] : list) {
        for (const auto& [i3, i4] : list) {
          CylElement lhs = pm[i1][i2] + pm[i3][i4];
          auto [it, fresh] = first.try_emplace(configs[i1] + configs[i3], lhs);
          if (!fresh) {
            record(t, it->second == lhs, pair_name(i1, i2) + "|" + pair_name(i3, i4));
          }
        }
      }
    }
  }
  {
    auto& t = tally("(vi) gamma acts trivially on crossing products");
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) {
        if (!paths_intersect(paths[i], paths[j])) continue;
        for (const auto& xi : xis) {
          record(t, cyl_mul(CylElement::basis(gamma_class(g, xi)), pm[i][j]) == pm[i][j],
                 pair_name(i, j) + " xi=" + gwring::to_string(xi));
        }
      }
    }
  }
  {
    auto& t = tally("(vii) join/meet identity");
    for (std::size_t i = 0; i < np; ++i) {
      for (std::size_t j = 0; j < np; ++j) {
        auto [join, meet] = path_join_meet(paths[i], paths[j]);
        CylElement rhs = cyl_mul(CylElement::basis(path_class(meet, line::Sign::Plus)),
                                 CylElement::basis(path_class(join, line::Sign::Minus)));
        record(t, pm[i][j] + pm[j][i] == rhs, pair_name(i, j));
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

Configuration read_config(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<CylGeometry> g;
  EdgeMap raw;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!g) {
      std::int64_t m = 0;
      std::int64_t n = 0;
      std::istringstream hs(line);
      if (!(hs >> m >> n) || (hs >> tok)) fail("expected header 'm n'");
      try {
        g = CylGeometry::make(m, n);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      continue;
    }
    if (tok != "H" && tok != "V") fail("expected H or V, got '" + tok + "'");
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t k = 0;
    std::string extra;
    if (!(ls >> a >> b >> k) || (ls >> extra)) fail("expected '" + tok + " a b k'");
    if (k <= 0) fail("multiplicity must be positive");
    CylEdge e = tok == "H" ? e1_edge(*g, a, b) : e2_edge(*g, a, b);
    if (!raw.emplace(e, k).second) fail("duplicate edge " + to_string(e));
  }
  if (!g) throw std::invalid_argument("missing header 'm n'");
  return ice_check(*g, raw);
}

Configuration read_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return read_config(f);
}

namespace {

struct Rows {
  std::int64_t lo;
  std::int64_t hi;
};

Rows drawing_rows(const Configuration& w) {
  if (w.is_zero()) return {0, 1};
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool first = true;
  for (const auto& [e, k] : w.edges()) {
    lo = first ? e.s2.floor() : std::min(lo, e.s2.floor());
    hi = first ? e.s2.ceil() : std::max(hi, e.s2.ceil());
    first = false;
  }
  return {lo, hi};
}

}  // namespace

std::string render_ascii(const Configuration& w) {
  const auto& g = w.geometry();
  Rows rows = drawing_rows(w);
  std::ostringstream os;
  os << "m=" << g.m << " n=" << g.n << " edges=" << w.edges().size() << "\n";
  // Vertex rows y = r + 1/2 for r = hi .. lo-1, top first.
  for (std::int64_t r = rows.hi; r >= rows.lo - 1; --r) {
    std::int64_t y2 = 2 * r + 1;
    std::string vline;
    for (std::int64_t i = 0; i <= g.m; ++i) {
      vline += '+';
      if (i == g.m) break;
      std::int64_t k = w.multiplicity(edge_twice(g, Lattice::E2, 2 * i, y2));
      std::string cell = k > 0 ? "-" + std::to_string(k) : "";
      cell.resize(4, k > 0 ? '-' : ' ');
      vline += cell;
    }
    os << vline << "   y=" << to_string(HalfInt::from_twice(y2)) << "\n";
    if (r == rows.lo - 1) break;
    // Vertical edges with midpoints at height r, x = i - 1/2 for i = 1..m.
    std::string eline = " ";
    for (std::int64_t i = 1; i <= g.m; ++i) {
      std::int64_t k = w.multiplicity(edge_twice(g, Lattice::E1, 2 * i - 1, 2 * r));
      std::string cell = "   " + (k > 0 ? std::to_string(k) : std::string(" "));
      eline += cell;
      if (i < g.m) eline += " ";
    }
    while (!eline.empty() && eline.back() == ' ') eline.pop_back();
    os << eline << "\n";
  }
  return os.str();
}

std::string render_svg(const Configuration& w) {
  const auto& g = w.geometry();
  Rows rows = drawing_rows(w);
  const std::int64_t unit = 40;
  const std::int64_t margin = 30;
  std::int64_t width = g.m * unit + 2 * margin;
  std::int64_t height = (rows.hi - rows.lo + 1) * unit + 2 * margin;
  // Vertex (x, y) with x = i - 1/2, y = r + 1/2 maps to pixel coordinates.
  auto px = [&](std::int64_t x2) { return margin + (x2 + 1) * unit / 2; };
  auto py = [&](std::int64_t y2) { return margin + (2 * rows.hi + 1 - y2) * unit / 2; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::int64_t r = rows.lo - 1; r <= rows.hi; ++r) {
    os << "<line x1=\"" << px(-1) << "\" y1=\"" << py(2 * r + 1) << "\" x2=\"" << px(2 * g.m - 1)
       << "\" y2=\"" << py(2 * r + 1) << "\" stroke=\"#ccc\"/>\n";
  }
  for (std::int64_t i = 0; i <= g.m; ++i) {
    os << "<line x1=\"" << px(2 * i - 1) << "\" y1=\"" << py(2 * rows.hi + 1) << "\" x2=\""
       << px(2 * i - 1) << "\" y2=\"" << py(2 * rows.lo - 1) << "\" stroke=\"#ccc\""
       << (i == g.m ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  for (const auto& [e, k] : w.edges()) {
    std::int64_t x1 = 0, y1 = 0, x2 = 0, y2 = 0;
    if (e.lattice == Lattice::E2) {
      x1 = e.s1.twice - 1;
      x2 = e.s1.twice + 1;
      y1 = y2 = e.s2.twice;
    } else {
      x1 = x2 = e.s1.twice;
      y1 = e.s2.twice - 1;
      y2 = e.s2.twice + 1;
    }
    os << "<line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x2) << "\" y2=\""
       << py(y2) << "\" stroke=\"black\" stroke-width=\"" << 1 + k << "\"/>\n";
    os << "<text x=\"" << px(e.s1.twice) + 4 << "\" y=\"" << py(e.s2.twice) - 4
       << "\" font-size=\"12\">" << k << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace gwring::cyl
