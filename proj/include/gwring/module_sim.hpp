#pragma once

// Explicit rank-one weight modules with exact structure constants, used as
// a brute-force check of the combinatorial tensor rules, plus the sl2
// example built from two Weyl-algebra modules.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gwring/line_split.hpp"
#include "gwring/numbers.hpp"

namespace gwring::sim {

using line::RootMultiset;

/// Thin weight module truncated to weights [lo, hi]. Vectors are indexed by
/// k - lo. up[k] is the X+ coefficient v_k -> v_{k+1}, down[k] the X-
/// coefficient v_k -> v_{k-1}. wall_t[k] = t(k + 1/2) for k in [lo, hi).
struct ExplicitModule {
  RootMultiset t;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<bool> basis;
  std::vector<Rational> up;
  std::vector<Rational> down;
  std::vector<Rational> wall_t;

  std::size_t size() const { return basis.size(); }
  bool has(std::int64_t k) const;
  Rational up_at(std::int64_t k) const;
  Rational down_at(std::int64_t k) const;
  std::int64_t dimension() const;
};

/// Module with empty basis over the given window.
ExplicitModule zero_module(const RootMultiset& t, std::int64_t lo, std::int64_t hi);

/// M^t_S on the window: generic walls get up = 1, down = t(k+1/2); a wall
/// at a root marked Right gets up = 1, down = 0; marked Left up = 0,
/// down = 1.
ExplicitModule build_indecomposable(const split::SplitClass& c, std::int64_t lo, std::int64_t hi);

struct GwaViolation {
  std::int64_t weight;  ///< lower weight k of the wall k+1/2
  std::string message;
};

/// Checks up(k) down(k+1) = t(k+1/2) across every wall inside the window,
/// and that no action leaves the basis.
std::vector<GwaViolation> gwa_check(const ExplicitModule& m);

/// Tensor product over C[z]: parameters multiply, bases intersect,
/// coefficients multiply. Throws std::invalid_argument on window mismatch.
ExplicitModule tensor_explicit(const ExplicitModule& a, const ExplicitModule& b);

/// Recovers the directed subset from supports and vanishing patterns.
/// Runs reaching the window edge are read as unbounded.
split::DirectedSubset readout_directed_subset(const ExplicitModule& m);

struct OracleReport {
  std::int64_t parameters = 0;
  std::int64_t indecomposables = 0;
  std::int64_t pairs = 0;
  std::int64_t subset_mismatches = 0;   ///< readout vs ds_intersect
  std::int64_t class_mismatches = 0;    ///< readout class vs split_mul
  std::int64_t simple_pairs = 0;
  std::int64_t simple_mismatches = 0;   ///< readout vs mul_interval
  std::int64_t gwa_failures = 0;
  std::vector<std::string> examples;    ///< first few mismatches
  bool ok() const {
    return subset_mismatches == 0 && class_mismatches == 0 && simple_mismatches == 0 &&
           gwa_failures == 0;
  }
};

/// All root multisets with support in `roots` and multiplicities <= max_mult.
std::vector<RootMultiset> parameters_up_to(const std::vector<HalfInt>& roots, int max_mult);

/// Tensors every ordered pair of indecomposables over the given parameters on
/// the window and compares the readout with the combinatorial rules. The
/// window must contain every root with two weights to spare.
OracleReport oracle_sweep(const std::vector<RootMultiset>& params, std::int64_t lo,
                          std::int64_t hi, unsigned threads = 1);

// ---------------------------------------------------------------------------
// sl2

enum class YFactor : std::uint8_t { Plus, Minus };

/// Matrices of e, f, h in the basis v_0, v_1, ... ordered by decreasing
/// weight. `truncated` marks a cut-off infinite module: the last basis
/// vector has f-image outside the window.
struct Sl2Module {
  std::vector<HalfInt> weights;  ///< GWA weight of each basis vector
  std::vector<std::vector<Rational>> e;
  std::vector<std::vector<Rational>> f;
  std::vector<std::vector<Rational>> h;
  bool truncated = false;

  std::size_t dim() const { return weights.size(); }
};

/// Tensor of the Weyl modules C[d_x] (root k, weights below k) and either
/// C[y] (root l, weights above l) or C[d_y] (root l, weights below l), with
/// e, f, h acting through the Weyl-algebra embedding and the scalar
/// sqrt(-1) absorbed into the basis. Infinite modules keep `max_dim`
/// vectors. Requires k - l to be a positive integer (nonnegative for the
/// lowest-weight-free case).
Sl2Module sl2_build(HalfInt k, HalfInt l, YFactor y, std::size_t max_dim = 8);

struct Sl2Report {
  std::size_t dim = 0;
  bool he_ok = false;  ///< [h,e] = 2e
  bool hf_ok = false;  ///< [h,f] = -2f
  bool ef_ok = false;  ///< [e,f] = h
  std::vector<Rational> h_spectrum;
  std::size_t highest_weight_vectors = 0;  ///< basis vectors killed by e
  std::optional<Rational> casimir;         ///< set when ef+fe+h^2/2 is scalar
  bool ok() const { return he_ok && hf_ok && ef_ok && casimir.has_value(); }
};

/// Checks the bracket relations, the h-spectrum and the Casimir. Columns
/// of the last vector are skipped for truncated modules.
Sl2Report sl2_verify(const Sl2Module& m);

/// Value of ef + fe + h^2/2 on the module with highest weight k - l - 1.
Rational casimir_value(HalfInt k, HalfInt l);

}  // namespace gwring::sim
