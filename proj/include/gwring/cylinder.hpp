#pragma once

// Rank-two Grothendieck ring on the cylinder C = R^2 / (m,n)Z.
//
// Coordinates: vertices are (Z+1/2)^2, faces are Z^2. An E1 edge has
// midpoint (a+1/2, b) and is a north step; an E2 edge has midpoint
// (a, b+1/2) and is an east step. All stored coordinates are canonical,
// i.e. translated by a multiple of (m,n) so that 0 <= x < m.

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gwring/line_ring.hpp"
#include "gwring/numbers.hpp"
#include "gwring/ring_element.hpp"

namespace gwring::cyl {

struct CylGeometry {
  std::int64_t m = 1;
  std::int64_t n = 1;

  /// Throws std::invalid_argument unless m, n are coprime and positive.
  static CylGeometry make(std::int64_t m, std::int64_t n);

  auto operator<=>(const CylGeometry&) const = default;
};

enum class Lattice : std::uint8_t { E1, E2 };

struct CylEdge {
  Lattice lattice;
  HalfInt s1;
  HalfInt s2;
  auto operator<=>(const CylEdge&) const = default;
};

/// Validates the parity pattern of the midpoint and canonicalizes it.
CylEdge make_edge(const CylGeometry& g, Lattice lattice, HalfInt s1, HalfInt s2);
/// E1 edge at (a+1/2, b).
CylEdge e1_edge(const CylGeometry& g, std::int64_t a, std::int64_t b);
/// E2 edge at (a, b+1/2).
CylEdge e2_edge(const CylGeometry& g, std::int64_t a, std::int64_t b);

std::string to_string(const CylEdge& e);

using EdgeMap = std::map<CylEdge, std::int64_t>;

struct Vertex {
  HalfInt x;
  HalfInt y;
  auto operator<=>(const Vertex&) const = default;
};

class IceRuleViolation : public std::invalid_argument {
 public:
  IceRuleViolation(Vertex v, std::int64_t in, std::int64_t out);
  Vertex vertex() const { return vertex_; }

 private:
  Vertex vertex_;
};

/// Finite ice-rule configuration: pair (omega_1, omega_2) stored as one map
/// keyed by lattice-tagged canonical edges with positive multiplicities.
class Configuration {
 public:
  explicit Configuration(CylGeometry g) : geometry_(g) {}

  const CylGeometry& geometry() const { return geometry_; }
  const EdgeMap& edges() const { return edges_; }
  std::int64_t multiplicity(const CylEdge& e) const;
  bool is_zero() const { return edges_.empty(); }
  std::int64_t total() const;

  /// Sum of configurations (same geometry, else std::invalid_argument).
  Configuration operator+(const Configuration& other) const;

  bool operator==(const Configuration&) const = default;
  bool operator<(const Configuration& o) const {
    if (geometry_ != o.geometry_) return geometry_ < o.geometry_;
    return edges_ < o.edges_;
  }

 private:
  friend Configuration ice_check(const CylGeometry& g, const EdgeMap& raw);
  CylGeometry geometry_;
  EdgeMap edges_;
};

/// First vertex violating the ice rule, if any.
std::optional<Vertex> find_ice_violation(const CylGeometry& g, const EdgeMap& raw);

/// Canonicalizes and merges raw edges, drops zeros, rejects negative
/// multiplicities, and throws IceRuleViolation at the first unbalanced vertex.
Configuration ice_check(const CylGeometry& g, const EdgeMap& raw);

std::string to_string(const Configuration& w);

// ---------------------------------------------------------------------------
// (m,n)-paths as height profiles.

/// East-step heights p(0..m-1), nondecreasing with p(m-1) <= p(0) + n,
/// extended by p(a+m) = p(a) + n.
class PathProfile {
 public:
  PathProfile(CylGeometry g, std::vector<HalfInt> heights);

  const CylGeometry& geometry() const { return geometry_; }
  const std::vector<HalfInt>& heights() const { return heights_; }
  /// Height of the east step in any integer column.
  HalfInt at(std::int64_t column) const;

  auto operator<=>(const PathProfile&) const = default;

 private:
  CylGeometry geometry_;
  std::vector<HalfInt> heights_;
};

std::string to_string(const PathProfile& p);

Configuration path_to_config(const PathProfile& p);

/// Chain pi_1 >= pi_2 >= ... whose indicator sum is w.
std::vector<PathProfile> chain_decompose(const Configuration& w);

bool path_leq(const PathProfile& lower, const PathProfile& upper);
std::pair<PathProfile, PathProfile> path_join_meet(const PathProfile& a, const PathProfile& b);

/// True when the paths share a vertex.
bool paths_intersect(const PathProfile& a, const PathProfile& b);

/// Every profile with heights in [lo, hi].
std::vector<PathProfile> paths_in_window(const CylGeometry& g, HalfInt lo, HalfInt hi);

// ---------------------------------------------------------------------------
// Complement components.

struct Face {
  std::int64_t a;
  std::int64_t b;
  auto operator<=>(const Face&) const = default;
};

enum class ComponentKind : std::uint8_t { All, Top, Bottom, Bounded };

struct ComponentId {
  ComponentKind kind = ComponentKind::All;
  Face face{0, 0};  ///< minimal face by (b, a); only used for Bounded
  auto operator<=>(const ComponentId&) const = default;
};

std::string to_string(const ComponentId& id);

struct Component {
  ComponentId id;
  bool contractible = false;
  std::set<Face> faces;  ///< canonical faces inside [row_lo, row_hi]
  std::int64_t row_lo = 0;
  std::int64_t row_hi = -1;

  /// Membership of a canonical face.
  bool contains(const Face& f) const;
  /// A canonical face known to lie in the component.
  Face representative() const;
};

/// Connected components of C minus the support of w.
std::vector<Component> complement_components(const Configuration& w);

const Component& find_component(const std::vector<Component>& comps, const ComponentId& id);

/// Components of Supp(w+w')'s complement lying in both D and D'.
std::vector<Component> intersect_components(const Configuration& w, const ComponentId& d,
                                            const Configuration& w2, const ComponentId& d2);

// ---------------------------------------------------------------------------
// Ring.

/// Simple M^w_{(D, xi)} with xi = 0 exactly when D is contractible.
class CylClass {
 public:
  /// Throws std::invalid_argument if D is not a component of w or the
  /// xi / contractibility rule fails.
  CylClass(Configuration w, ComponentId d, Rational xi);

  const Configuration& config() const { return config_; }
  const ComponentId& component() const { return component_; }
  const Rational& xi() const { return xi_; }
  const Configuration& grade() const { return config_; }

  bool operator==(const CylClass&) const = default;
  bool operator<(const CylClass& o) const;

 private:
  struct Trusted {};
  CylClass(Configuration w, ComponentId d, Rational xi, Trusted);
  friend std::vector<std::pair<CylClass, Coefficient>> cyl_mul_terms(const CylClass&,
                                                                     const CylClass&);

  Configuration config_;
  ComponentId component_;
  Rational xi_;
};

std::string to_string(const CylClass& c);

using CylElement = RingElement<CylClass>;

CylElement cyl_mul(const CylClass& a, const CylClass& b);
CylElement cyl_mul(const CylElement& a, const CylElement& b);

/// gamma_xi = [M^0_{(C, xi)}]; gamma_1 is the unit.
CylClass gamma_class(const CylGeometry& g, const Rational& xi);
CylElement cyl_unit(const CylGeometry& g);
/// x_pi^+ is the region above pi, x_pi^- the region below.
CylClass path_class(const PathProfile& p, line::Sign sign);

struct CylGenerator {
  enum class Kind : std::uint8_t { Gamma, XPlus, XMinus };
  Kind kind;
  Rational xi{1};
  std::optional<PathProfile> path;
};

CylElement eval_word(const CylGeometry& g, const std::vector<CylGenerator>& word);

/// Parameters (t1, t2): an E_i edge (s1, s2) of multiplicity w contributes
/// the root s2*m - s1*n with multiplicity w to t_i.
std::pair<line::RationalRoots, line::RationalRoots> config_to_t(const Configuration& w);

/// (t2 - n/2) + (t1 + m/2) == (t2 + n/2) + (t1 - m/2) as multisets.
bool consistency_check(const CylGeometry& g, const line::RationalRoots& t1,
                       const line::RationalRoots& t2);

// ---------------------------------------------------------------------------
// Presentation relations over a finite set of paths.

struct RelationTally {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
};

struct RelationReport {
  std::vector<RelationTally> tallies;
  std::vector<std::string> failures;  ///< first few counterexamples
  bool ok() const;
};

/// Checks relations (i)-(vi) of the presentation and the join/meet identity
/// (vii) for every pair / admissible quadruple of the given paths; `xis` are
/// the nonzero scalars used for gamma.
RelationReport verify_relations(const CylGeometry& g, const std::vector<PathProfile>& paths,
                                const std::vector<Rational>& xis);

// ---------------------------------------------------------------------------
// Text formats.

/// Reads "m n" then lines "H a b k" (E1 at (a+1/2, b)) and "V a b k" (E2 at
/// (a, b+1/2)); '#' starts a comment. Duplicate edges are rejected.
Configuration read_config(std::istream& in);
Configuration read_config_file(const std::string& path);

/// Fundamental-strip drawing with edge multiplicities.
std::string render_ascii(const Configuration& w);
std::string render_svg(const Configuration& w);

}  // namespace gwring::cyl
