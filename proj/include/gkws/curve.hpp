#pragma once

// The GK curve  Z^(n^2-n+1) = Y h(X),  X^n + X = Y^(n+1)  over GF(n^6).

#include <cstddef>
#include <memory>
#include <vector>

#include "gkws/gf.hpp"

namespace gkws::curve {

struct GKParams {
  unsigned n = 0;
  unsigned p = 0;  // n = p^e
  unsigned e = 0;
  long a = 0;  // n^2 - n + 1
  long b = 0;  // n^3
  long c = 0;  // n^3 + 1
  long q = 0;  // n^3; the field has q^2 elements
  long genus = 0;
  long expected_points = 0;
  std::shared_ptr<const gf::Field> field;
};

inline constexpr unsigned kDefaultMaxN = 4;

/// Throws NotPrimePower for n < 2 or composite non-prime-powers, and
/// UnsupportedSize when n exceeds `max_n`.
GKParams make_params(unsigned n, unsigned max_n = kDefaultMaxN);

struct CurvePoint {
  bool at_infinity = false;
  gf::Fe x, y, z;

  static CurvePoint infinity() { return CurvePoint{true, {}, {}, {}}; }
  static CurvePoint affine(gf::Fe x, gf::Fe y, gf::Fe z) { return CurvePoint{false, x, y, z}; }

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Coefficients of h(X) = sum_{i=0}^{n} (-1)^(i+1) X^(i(n-1)), index = degree.
std::vector<gf::Fe> h_coefficients(const GKParams& params);
/// Horner evaluation of h.
gf::Fe h_eval(const GKParams& params, gf::Fe x);
/// Term-by-term evaluation of the defining sum; kept as a cross-check of h_eval.
gf::Fe h_eval_direct(const GKParams& params, gf::Fe x);

bool on_curve(const GKParams& params, const CurvePoint& pt);

struct PointSet {
  CurvePoint p_inf = CurvePoint::infinity();
  std::vector<CurvePoint> p_list;  // (a_j, 0, 0)
  std::vector<CurvePoint> q_list;  // (a_l, b_l, 0), b_l != 0
  std::vector<CurvePoint> others;  // z != 0

  std::size_t total() const { return 1 + p_list.size() + q_list.size() + others.size(); }
};

/// All GF(n^6)-rational points, classified and ordered by (x, y, z) in field
/// enumeration order. Throws CountMismatch if the total disagrees with
/// n^8 - n^6 + n^5 + 1.
PointSet enumerate_points(const GKParams& params, unsigned threads = 1);

}  // namespace gkws::curve
