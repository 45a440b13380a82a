#include "gwring/module_sim.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace gwring::sim {

namespace {

std::size_t idx(const ExplicitModule& m, std::int64_t k) { return static_cast<std::size_t>(k - m.lo); }

ExplicitModule empty_like(const RootMultiset& t, std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty window");
  ExplicitModule m;
  m.t = t;
  m.lo = lo;
  m.hi = hi;
  auto n = static_cast<std::size_t>(hi - lo + 1);
  m.basis.assign(n, false);
  m.up.assign(n, Rational(0));
  m.down.assign(n, Rational(0));
  m.wall_t.reserve(n - 1);
  for (std::int64_t k = lo; k < hi; ++k) m.wall_t.push_back(t.evaluate(HalfInt::from_twice(2 * k + 1)));
  return m;
}

}  // namespace

bool ExplicitModule::has(std::int64_t k) const { return k >= lo && k <= hi && basis[idx(*this, k)]; }

Rational ExplicitModule::up_at(std::int64_t k) const {
  return (k >= lo && k <= hi) ? up[idx(*this, k)] : Rational(0);
}

Rational ExplicitModule::down_at(std::int64_t k) const {
  return (k >= lo && k <= hi) ? down[idx(*this, k)] : Rational(0);
}

std::int64_t ExplicitModule::dimension() const {
  return std::count(basis.begin(), basis.end(), true);
}

ExplicitModule zero_module(const RootMultiset& t, std::int64_t lo, std::int64_t hi) {
  return empty_like(t, lo, hi);
}

ExplicitModule build_indecomposable(const split::SplitClass& c, std::int64_t lo, std::int64_t hi) {
  ExplicitModule m = empty_like(c.t(), lo, hi);
  for (std::int64_t k = lo; k <= hi; ++k) m.basis[idx(m, k)] = c.piece().contains_integer(k);
  for (std::int64_t k = lo; k < hi; ++k) {
    if (!m.has(k) || !m.has(k + 1)) continue;
    const Rational& tv = m.wall_t[idx(m, k)];
    if (tv != Rational(0)) {
      m.up[idx(m, k)] = 1;
      m.down[idx(m, k + 1)] = tv;
      continue;
    }
    split::Mark mark = c.piece().at(HalfInt::from_twice(2 * k + 1));
    if (mark == split::Mark::Right) {
      m.up[idx(m, k)] = 1;
    } else if (mark == split::Mark::Left) {
      m.down[idx(m, k + 1)] = 1;
    } else {
      throw std::invalid_argument("root inside the piece carries no direction");
    }
  }
  return m;
}

std::vector<GwaViolation> gwa_check(const ExplicitModule& m) {
  std::vector<GwaViolation> out;
  auto fail = [&](std::int64_t k, std::string msg) { out.push_back({k, std::move(msg)}); };
  for (std::int64_t k = m.lo; k <= m.hi; ++k) {
    if (!m.has(k) && (m.up_at(k) != Rational(0) || m.down_at(k) != Rational(0))) {
      fail(k, "action on a weight outside the basis");
    }
  }
  if (m.hi >= m.lo) {
    if (m.up_at(m.hi) != Rational(0)) fail(m.hi, "X+ leaves the window");
    if (m.down_at(m.lo) != Rational(0)) fail(m.lo, "X- leaves the window");
  }
  for (std::int64_t k = m.lo; k < m.hi; ++k) {
    const Rational& tv = m.wall_t[idx(m, k)];
    Rational u = m.up_at(k);
    Rational d = m.down_at(k + 1);
    bool below = m.has(k);
    bool above = m.has(k + 1);
    if (below && above) {
      if (u * d != tv) {
        fail(k, "up*down = " + to_string(u * d) + " but t = " + to_string(tv));
      }
    } else if (below || above) {
      if (tv != Rational(0)) fail(k, "support ends at a wall where t = " + to_string(tv));
      if (u != Rational(0) || d != Rational(0)) fail(k, "action crosses the support boundary");
    }
  }
  return out;
}

ExplicitModule tensor_explicit(const ExplicitModule& a, const ExplicitModule& b) {
  if (a.lo != b.lo || a.hi != b.hi) throw std::invalid_argument("window mismatch");
  ExplicitModule m;
  m.t = a.t * b.t;
  m.lo = a.lo;
  m.hi = a.hi;
  std::size_t n = a.size();
  m.basis.resize(n);
  m.up.resize(n);
  m.down.resize(n);
  m.wall_t.resize(a.wall_t.size());
  for (std::size_t i = 0; i < n; ++i) {
    m.basis[i] = a.basis[i] && b.basis[i];
    m.up[i] = m.basis[i] ? a.up[i] * b.up[i] : Rational(0);
    m.down[i] = m.basis[i] ? a.down[i] * b.down[i] : Rational(0);
  }
  for (std::size_t i = 0; i < m.wall_t.size(); ++i) m.wall_t[i] = a.wall_t[i] * b.wall_t[i];
  return m;
}

split::DirectedSubset readout_directed_subset(const ExplicitModule& m) {
  std::vector<split::Piece> pieces;
  std::int64_t k = m.lo;
  while (k <= m.hi) {
    if (!m.has(k)) {
      ++k;
      continue;
    }
    split::Piece cur{k == m.lo ? ExtHalfInt::neg_inf() : ExtHalfInt(HalfInt::from_twice(2 * k - 1)),
                     ExtHalfInt::pos_inf(),
                     {}};
    for (;; ++k) {
      if (!m.has(k + 1)) {
        cur.hi = k == m.hi ? ExtHalfInt::pos_inf() : ExtHalfInt(HalfInt::from_twice(2 * k + 1));
        pieces.push_back(std::move(cur));
        ++k;
        break;
      }
      HalfInt wall = HalfInt::from_twice(2 * k + 1);
      if (m.wall_t[idx(m, k)] != Rational(0)) continue;
      bool u = m.up_at(k) != Rational(0);
      bool d = m.down_at(k + 1) != Rational(0);
      if (u && d) throw std::invalid_argument("both actions nonzero across a root wall");
      if (u) {
        cur.marks.emplace(wall, split::Mark::Right);
      } else if (d) {
        cur.marks.emplace(wall, split::Mark::Left);
      } else {
        cur.hi = ExtHalfInt(wall);
        pieces.push_back(std::move(cur));
        cur = split::Piece{ExtHalfInt(wall), ExtHalfInt::pos_inf(), {}};
      }
    }
  }
  return split::DirectedSubset(std::move(pieces));
}

std::vector<RootMultiset> parameters_up_to(const std::vector<HalfInt>& roots, int max_mult) {
  std::vector<RootMultiset> out;
  std::vector<int> mult(roots.size(), 0);
  while (true) {
    std::map<HalfInt, int> m;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (mult[i] > 0) m[roots[i]] = mult[i];
    }
    out.emplace_back(std::move(m));
    std::size_t i = 0;
    while (i < roots.size() && mult[i] == max_mult) mult[i++] = 0;
    if (i == roots.size()) break;
    ++mult[i];
  }
  return out;
}

namespace {

struct Entry {
  split::SplitClass cls;
  ExplicitModule module;
};

void merge(OracleReport& into, OracleReport&& part) {
  into.pairs += part.pairs;
  into.subset_mismatches += part.subset_mismatches;
  into.class_mismatches += part.class_mismatches;
  into.simple_pairs += part.simple_pairs;
  into.simple_mismatches += part.simple_mismatches;
  into.gwa_failures += part.gwa_failures;
  for (auto& e : part.examples) {
    if (into.examples.size() < 10) into.examples.push_back(std::move(e));
  }
}

void sweep_rows(const std::vector<Entry>& entries, std::size_t begin, std::size_t step,
                OracleReport& rep) {
  auto note = [&](const std::string& s) {
    if (rep.examples.size() < 10) rep.examples.push_back(s);
  };
  for (std::size_t i = begin; i < entries.size(); i += step) {
    const Entry& a = entries[i];
    split::DirectedSubset sa = a.cls.subset();
    for (const Entry& b : entries) {
      ++rep.pairs;
      ExplicitModule prod = tensor_explicit(a.module, b.module);
      if (!gwa_check(prod).empty()) {
        ++rep.gwa_failures;
        note("gwa: " + to_string(a.cls) + " x " + to_string(b.cls));
        continue;
      }
      split::DirectedSubset got = readout_directed_subset(prod);
      split::DirectedSubset want = split::ds_intersect(sa, b.cls.subset());
      if (got != want) {
        ++rep.subset_mismatches;
        note(to_string(a.cls) + " x " + to_string(b.cls) + ": read " + to_string(got) +
             ", expected " + to_string(want));
        continue;
      }
      if (split::class_of(prod.t, got) != split::split_mul(a.cls, b.cls)) {
        ++rep.class_mismatches;
        note("class: " + to_string(a.cls) + " x " + to_string(b.cls));
      }
      if (a.cls.is_simple() && b.cls.is_simple()) {
        ++rep.simple_pairs;
        line::LineElement rule = line::mul_interval(
            line::IntervalClass(a.cls.t(), a.cls.piece().lo, a.cls.piece().hi),
            line::IntervalClass(b.cls.t(), b.cls.piece().lo, b.cls.piece().hi));
        line::LineElement read;
        for (const auto& p : got.pieces()) {
          read = read + line::LineElement::basis(line::IntervalClass(prod.t, p.lo, p.hi));
        }
        if (read != rule) {
          ++rep.simple_mismatches;
          note("simple: " + to_string(a.cls) + " x " + to_string(b.cls));
        }
      }
    }
  }
}

}  // namespace

OracleReport oracle_sweep(const std::vector<RootMultiset>& params, std::int64_t lo,
                          std::int64_t hi, unsigned threads) {
  OracleReport rep;
  rep.parameters = static_cast<std::int64_t>(params.size());
  std::vector<Entry> entries;
  for (const auto& t : params) {
    for (const auto& [root, mult] : t.roots()) {
      if (root.floor() - 2 < lo || root.ceil() + 2 > hi) {
        throw std::invalid_argument("window [" + std::to_string(lo) + "," + std::to_string(hi) +
                                    "] leaves no margin around root " + to_string(root));
      }
    }
    for (auto& c : split::enumerate_indecomposables(t)) {
      ExplicitModule m = build_indecomposable(c, lo, hi);
      if (!gwa_check(m).empty()) {
        ++rep.gwa_failures;
        if (rep.examples.size() < 10) rep.examples.push_back("gwa: " + to_string(c));
      }
      entries.push_back(Entry{std::move(c), std::move(m)});
    }
  }
  rep.indecomposables = static_cast<std::int64_t>(entries.size());
  threads = std::max(1u, threads);
  if (threads == 1) {
    OracleReport part;
    sweep_rows(entries, 0, 1, part);
    merge(rep, std::move(part));
    return rep;
  }
  std::vector<OracleReport> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] { sweep_rows(entries, w, threads, parts[w]); });
  }
  for (auto& th : pool) th.join();
  for (auto& p : parts) merge(rep, std::move(p));
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Rational>(n, Rational(0))); }

Matrix mul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size();
  Matrix c = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == Rational(0)) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Matrix lin(const Matrix& a, const Rational& x, const Matrix& b, const Rational& y) {
  Matrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) c[i][j] = x * a[i][j] + y * b[i][j];
  }
  return c;
}

// Columns [0, cols) of a and b agree.
bool columns_equal(const Matrix& a, const Matrix& b, std::size_t cols) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (a[i][j] != b[i][j]) return false;
    }
  }
  return true;
}

}  // namespace

Sl2Module sl2_build(HalfInt k, HalfInt l, YFactor y, std::size_t max_dim) {
  HalfInt d = k - l;
  if (!d.is_integer()) throw std::invalid_argument("k - l must be an integer");
  Sl2Module m;
  HalfInt top;
  std::size_t dim = 0;
  if (y == YFactor::Plus) {
    if (d.twice <= 0) throw std::invalid_argument("k - l must be positive");
    top = k - HalfInt::from_twice(1);
    dim = static_cast<std::size_t>(d.twice / 2);
  } else {
    if (d.twice < 0) throw std::invalid_argument("k - l must be nonnegative");
    top = l - HalfInt::from_twice(1);
    dim = max_dim;
    m.truncated = true;
  }
  const HalfInt half = HalfInt::from_twice(1);
  auto up_total = [&](HalfInt w) {
    Rational ux = (w - k + half).to_rational();
    Rational uy = y == YFactor::Plus ? Rational(1) : (w - l + half).to_rational();
    return ux * uy;
  };
  auto down_total = [&](HalfInt w) {
    return y == YFactor::Plus ? (w - l - half).to_rational() : Rational(1);
  };
  m.e = zeros(dim);
  m.f = zeros(dim);
  m.h = zeros(dim);
  for (std::size_t s = 0; s < dim; ++s) {
    HalfInt w = top - HalfInt::from_int(static_cast<std::int64_t>(s));
    m.weights.push_back(w);
    if (s > 0) m.e[s - 1][s] = -up_total(w);
    if (s + 1 < dim) m.f[s + 1][s] = down_total(w);
    m.h[s][s] = (w + w - k - l).to_rational();
  }
  return m;
}

Sl2Report sl2_verify(const Sl2Module& m) {
  Sl2Report r;
  r.dim = m.dim();
  std::size_t cols = m.truncated && r.dim > 0 ? r.dim - 1 : r.dim;
  Matrix he = lin(mul(m.h, m.e), 1, mul(m.e, m.h), -1);
  Matrix hf = lin(mul(m.h, m.f), 1, mul(m.f, m.h), -1);
  Matrix ef = lin(mul(m.e, m.f), 1, mul(m.f, m.e), -1);
  r.he_ok = columns_equal(he, lin(m.e, 2, m.e, 0), cols);
  r.hf_ok = columns_equal(hf, lin(m.f, -2, m.f, 0), cols);
  r.ef_ok = columns_equal(ef, m.h, cols);
  for (std::size_t s = 0; s < r.dim; ++s) {
    r.h_spectrum.push_back(m.h[s][s]);
    bool killed = true;
    for (std::size_t i = 0; i < r.dim; ++i) killed = killed && m.e[i][s] == Rational(0);
    if (killed) ++r.highest_weight_vectors;
  }
  Matrix c = lin(lin(mul(m.e, m.f), 1, mul(m.f, m.e), 1), 1, mul(m.h, m.h), Rational(1, 2));
  if (cols > 0) {
    Rational value = c[0][0];
    Matrix scalar = zeros(r.dim);
    for (std::size_t i = 0; i < r.dim; ++i) scalar[i][i] = value;
    if (columns_equal(c, scalar, cols)) r.casimir = value;
  }
  return r;
}

Rational casimir_value(HalfInt k, HalfInt l) {
  Rational d = (k - l).to_rational();
  return (d * d - 1) / 2;
}

}  // namespace gwring::sim
