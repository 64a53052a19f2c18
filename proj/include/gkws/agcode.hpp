#pragma once

// Multi-point AG codes C_L(D, G) on the GK curve, their duals, and distance
// bounds.

#include <cstdint>
#include <optional>
#include <vector>

#include "gkws/curve.hpp"
#include "gkws/linalg.hpp"
#include "gkws/rrspace.hpp"
#include "gkws/wsemi.hpp"

namespace gkws::code {

struct GenMatrix {
  linalg::Matrix entries;                 // one row per basis function of L(G)
  std::vector<curve::CurvePoint> columns;  // the points of D
};

struct CodeSummary {
  long length = 0;
  long deg_G = 0;
  long k = 0;        // rank of the generator matrix
  long k_omega = 0;  // length - k
  /// deg G - g + 1, present when 2g - 2 < deg G < length.
  std::optional<long> k_formula;
  /// length - deg G, present when deg G < length.
  std::optional<long> goppa_d;
  /// deg G - 2g + 2, present when deg G > 2g - 2.
  std::optional<long> goppa_d_omega;
  std::optional<long> puregap_d_omega;
  double rate = 0.0;
  std::optional<double> delta_goppa;
};

struct AGCode {
  rr::Divisor G;
  GenMatrix generator;
  CodeSummary summary;
};

/// D is every rational point outside supp(G). Basis functions of L(G) come
/// from the kernel computed by the dimension oracle. Throws DegenerateG when
/// deg G <= 0.
AGCode build_code(const rr::Workspace& ws, const rr::Divisor& G, unsigned threads = 1);

struct DualData {
  linalg::Matrix parity;  // basis of the dual code, one row per codeword
  bool orthogonal = false;
};

/// Null space of the generator matrix and a check that every generator row is
/// orthogonal to every parity row.
DualData dual_check(const gf::Field& F, const GenMatrix& M);

struct PureGapBound {
  rr::Divisor G;  // sum (alpha_i + beta_i - 1) P_i
  long bound = 0;  // deg G - (2g - 2) + (number of points)
};

/// The divisor and the bound, without checking the pure-gap hypothesis.
PureGapBound pure_gap_divisor(const curve::GKParams& params, const ws::PoleVector& alpha,
                              const ws::PoleVector& beta);

/// Same, after confirming both tuples with the oracle; throws NotPureGap.
PureGapBound pure_gap_bound(const rr::RiemannRoch& rr, const ws::PoleVector& alpha, const ws::PoleVector& beta);

inline constexpr std::uint64_t kDefaultWeightCap = std::uint64_t{1} << 24;

/// Minimum Hamming weight over all nonzero codewords of the row space of M,
/// or nullopt when q^k exceeds `cap` (or the code is zero).
std::optional<long> min_weight_exhaustive(const gf::Field& F, const linalg::Matrix& M,
                                          std::uint64_t cap = kDefaultWeightCap, unsigned threads = 1);

}  // namespace gkws::code
