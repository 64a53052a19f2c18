#pragma once

// Riemann-Roch dimensions l(G) for divisors supported on {P_inf, P_1, ..., P_n}.

#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "gkws/curve.hpp"
#include "gkws/linalg.hpp"
#include "gkws/localdata.hpp"

namespace gkws::rr {

/// 0 is P_inf; s >= 1 is P_s (the s-th entry of PointSet::p_list).
using PointIndex = std::size_t;

class Divisor {
 public:
  Divisor() = default;
  /// The zero divisor over P_inf, P_1, ..., P_n.
  explicit Divisor(unsigned n) : coeffs_(n + 1, 0) {}
  Divisor(long inf, std::vector<long> pj);
  /// Pole-vector layout: v[0] at P_inf, v[s] at P_s; missing P_s are zero.
  static Divisor from_coeffs(unsigned n, std::span<const long> v);

  long inf() const { return coeffs_.empty() ? 0 : coeffs_[0]; }
  long coeff(PointIndex i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::span<const long> coeffs() const noexcept { return coeffs_; }
  std::size_t slots() const noexcept { return coeffs_.size(); }
  long degree() const;

  /// this + k * P_i
  Divisor plus(PointIndex i, long k) const;

  friend bool operator==(const Divisor&, const Divisor&) = default;

 private:
  std::vector<long> coeffs_;
};

Divisor operator+(const Divisor& a, const Divisor& b);
Divisor operator-(const Divisor& a, const Divisor& b);

/// (n^2 - 2) c P_inf, of degree 2g - 2.
Divisor canonical_divisor(const curve::GKParams& params);

struct Monomial {
  unsigned alpha = 0;  // power of x
  unsigned beta = 0;   // power of y, <= n
  unsigned gamma = 0;  // power of z, <= n^2 - n
  long pole_order = 0;
};

/// Basis x^alpha y^beta z^gamma of L(N P_inf) sorted by pole order.
std::vector<Monomial> onepoint_basis(const curve::GKParams& params, long N);

/// L(G) written as F / prod (x - a_j)^shift[j] with F in L(shifted_inf P_inf);
/// each row of `functions` holds the coefficients of one F over `basis`.
struct RRBasis {
  std::vector<long> shift;  // t_j per P_j (index j-1)
  long shifted_inf = 0;
  std::vector<Monomial> basis;
  linalg::Matrix functions;
};

class RiemannRoch {
 public:
  RiemannRoch(const curve::GKParams& params, const local::ChartAtlas& atlas);

  const curve::GKParams& params() const noexcept { return *params_; }

  /// Memoized l(G). Throws UnsupportedSupport for divisors with more than
  /// n + 1 slots.
  long dim(const Divisor& G) const;
  /// Uncached l(G); `extra_shift` adds one more factor of each (x - a_j)
  /// beyond the minimal shift.
  long dim_uncached(const Divisor& G, long extra_shift = 0) const;

  RRBasis basis(const Divisor& G) const;

  /// l(A) != l(A-P) = l(A-P-Q) and l(A) != l(A-Q) = l(A-P-Q).
  bool is_discrepancy(const Divisor& A, PointIndex P, PointIndex Q) const;

  std::size_t cache_size() const;

 private:
  struct Reduced {
    std::vector<long> shift;
    long shifted_inf = 0;
    std::vector<Monomial> basis;
    linalg::Matrix constraints;
  };
  Reduced reduce(const Divisor& G, long extra_shift) const;
  Divisor normalized(const Divisor& G) const;

  struct KeyHash {
    std::size_t operator()(const std::vector<long>& v) const noexcept;
  };

  const curve::GKParams* params_;
  const local::ChartAtlas* atlas_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<std::vector<long>, long, KeyHash> cache_;
};

/// Owns everything needed to query a GK curve of a given n.
class Workspace {
 public:
  static std::unique_ptr<Workspace> create(unsigned n, unsigned threads = 1, unsigned max_n = curve::kDefaultMaxN);

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const curve::GKParams& params() const noexcept { return params_; }
  const gf::Field& field() const noexcept { return *params_.field; }
  const curve::PointSet& points() const noexcept { return points_; }
  const local::ChartAtlas& atlas() const noexcept { return *atlas_; }
  const RiemannRoch& rr() const noexcept { return *rr_; }

 private:
  Workspace() = default;
  curve::GKParams params_;
  curve::PointSet points_;
  std::unique_ptr<local::ChartAtlas> atlas_;
  std::unique_ptr<RiemannRoch> rr_;
};

}  // namespace gkws::rr
