#pragma once

// Truncated power series in the local uniformizer z and the local expansions
// of x - a_j and y at the points P_j = (a_j, 0, 0).

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "gkws/curve.hpp"
#include "gkws/gf.hpp"

namespace gkws::local {

/// sum_{i < prec} coeffs[i] z^i + O(z^prec). Precision is absolute: binary
/// operations return the smaller of the two precisions.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t prec) : coeffs_(prec) {}

  static Series constant(gf::Fe c, std::size_t prec);
  /// z^k + O(z^prec).
  static Series z_power(std::size_t k, std::size_t prec);

  std::size_t prec() const noexcept { return coeffs_.size(); }
  gf::Fe operator[](std::size_t i) const { return coeffs_[i]; }
  gf::Fe& operator[](std::size_t i) { return coeffs_[i]; }
  std::span<const gf::Fe> coeffs() const noexcept { return coeffs_; }

  /// Index of the first nonzero coefficient; empty if zero to this precision.
  std::optional<std::size_t> valuation() const;
  Series truncated(std::size_t prec) const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<gf::Fe> coeffs_;
};

Series add(const gf::Field& F, const Series& s, const Series& t);
Series sub(const gf::Field& F, const Series& s, const Series& t);
Series mul(const gf::Field& F, const Series& s, const Series& t);
Series scale(const gf::Field& F, const Series& s, gf::Fe c);
/// Multiplication by z^k; coefficients pushed past the precision are dropped.
Series shift(const Series& s, std::size_t k);
/// Inverse of a series with nonzero constant term; throws NonUnitInverse.
Series inv_unit(const gf::Field& F, const Series& s);
Series pow(const gf::Field& F, const Series& s, unsigned k);
/// Evaluates the polynomial sum coeffs[i] X^i at a series X (Horner).
Series compose(const gf::Field& F, std::span<const gf::Fe> poly, const Series& x);

struct LocalChart {
  std::size_t point = 0;  // index into PointSet::p_list
  gf::Fe base;            // a_j
  Series xi;              // x - a_j
  Series eta;             // y
  std::size_t prec = 0;
};

/// Solves eta = z^a / h(a_j + xi) and xi = eta^(n+1) - xi^n by fixed-point
/// iteration from xi = 0, then checks both curve equations to O(z^prec).
/// Throws PrecisionNotReached if the iteration stalls or a residual survives.
LocalChart expand_at(const curve::GKParams& params, const curve::PointSet& points, std::size_t j, std::size_t prec);

/// (a_j + xi)^alpha * eta^beta * z^gamma at the chart precision.
Series monomial_series(const gf::Field& F, const LocalChart& chart, unsigned alpha, unsigned beta, unsigned gamma);

/// Pole order of x^alpha y^beta z^gamma at P_inf: alpha c + beta n a + gamma b.
long pole_order_at_inf(const curve::GKParams& params, long alpha, long beta, long gamma);

/// Lazily expanded charts at every P_j; grows the precision on demand.
/// Thread-safe.
class ChartAtlas {
 public:
  ChartAtlas(const curve::GKParams& params, const curve::PointSet& points);

  std::shared_ptr<const LocalChart> chart(std::size_t j, std::size_t min_prec) const;
  std::size_t size() const noexcept { return charts_.size(); }

 private:
  const curve::GKParams* params_;
  const curve::PointSet* points_;
  mutable std::mutex mu_;
  mutable std::vector<std::shared_ptr<const LocalChart>> charts_;
};

}  // namespace gkws::local
