#include "gkws/localdata.hpp"

#include <algorithm>
#include <string>

#include "gkws/error.hpp"

namespace gkws::local {

using gf::Fe;

Series Series::constant(Fe c, std::size_t prec) {
  Series s(prec);
  if (prec > 0) s[0] = c;
  return s;
}

Series Series::z_power(std::size_t k, std::size_t prec) {
  Series s(prec);
  if (k < prec) s[k] = gf::Field::one();
  return s;
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != gf::Field::zero()) return i;
  return std::nullopt;
}

Series Series::truncated(std::size_t prec) const {
  Series s(std::min(prec, this->prec()));
  std::copy_n(coeffs_.begin(), s.prec(), s.coeffs_.begin());
  return s;
}

Series add(const gf::Field& F, const Series& s, const Series& t) {
  Series r(std::min(s.prec(), t.prec()));
  for (std::size_t i = 0; i < r.prec(); ++i) r[i] = F.add(s[i], t[i]);
  return r;
}

Series sub(const gf::Field& F, const Series& s, const Series& t) {
  Series r(std::min(s.prec(), t.prec()));
  for (std::size_t i = 0; i < r.prec(); ++i) r[i] = F.sub(s[i], t[i]);
  return r;
}

Series mul(const gf::Field& F, const Series& s, const Series& t) {
  const std::size_t prec = std::min(s.prec(), t.prec());
  Series r(prec);
  for (std::size_t i = 0; i < prec; ++i) {
    if (s[i] == F.zero()) continue;
    for (std::size_t j = 0; i + j < prec; ++j) r[i + j] = F.add(r[i + j], F.mul(s[i], t[j]));
  }
  return r;
}

Series scale(const gf::Field& F, const Series& s, Fe c) {
  Series r(s.prec());
  for (std::size_t i = 0; i < r.prec(); ++i) r[i] = F.mul(s[i], c);
  return r;
}

Series shift(const Series& s, std::size_t k) {
  Series r(s.prec());
  for (std::size_t i = 0; i + k < s.prec(); ++i) r[i + k] = s[i];
  return r;
}

Series inv_unit(const gf::Field& F, const Series& s) {
  if (s.prec() == 0) return s;
  if (s[0] == F.zero()) throw Error(Errc::NonUnitInverse, "series has zero constant term");
  const Fe c0_inv = F.inv(s[0]);
  Series t(s.prec());
  t[0] = c0_inv;
  for (std::size_t k = 1; k < s.prec(); ++k) {
    Fe acc = F.zero();
    for (std::size_t i = 1; i <= k; ++i) acc = F.add(acc, F.mul(s[i], t[k - i]));
    t[k] = F.neg(F.mul(c0_inv, acc));
  }
  return t;
}

Series pow(const gf::Field& F, const Series& s, unsigned k) {
  Series result = Series::constant(F.one(), s.prec());
  Series base = s;
  for (; k; k >>= 1) {
    if (k & 1) result = mul(F, result, base);
    if (k > 1) base = mul(F, base, base);
  }
  return result;
}

Series compose(const gf::Field& F, std::span<const Fe> poly, const Series& x) {
  Series acc(x.prec());
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
    acc = mul(F, acc, x);
    if (acc.prec() > 0) acc[0] = F.add(acc[0], *it);
  }
  return acc;
}

LocalChart expand_at(const curve::GKParams& params, const curve::PointSet& points, std::size_t j, std::size_t prec) {
  if (j >= points.p_list.size()) throw Error(Errc::InvalidArgument, "no point P_" + std::to_string(j + 1));
  if (prec < 1) throw Error(Errc::InvalidArgument, "precision must be positive");
  const auto& F = *params.field;
  const auto hpoly = curve::h_coefficients(params);
  const Fe base = points.p_list[j].x;
  if (curve::h_eval(params, base) == F.zero())
    throw Error(Errc::PrecisionNotReached, "h(a_j) vanishes, z is not a uniformizer");

  const Series za = Series::z_power(static_cast<std::size_t>(params.a), prec);
  const Series a_const = Series::constant(base, prec);
  Series xi(prec), eta(prec);
  bool converged = false;
  for (std::size_t round = 0; round <= prec + 2 && !converged; ++round) {
    const Series x = add(F, a_const, xi);
    Series eta_next = mul(F, za, inv_unit(F, compose(F, hpoly, x)));
    Series xi_next = sub(F, pow(F, eta_next, params.n + 1), pow(F, xi, params.n));
    converged = (eta_next == eta && xi_next == xi);
    eta = std::move(eta_next);
    xi = std::move(xi_next);
  }
  if (!converged) throw Error(Errc::PrecisionNotReached, "local expansion did not stabilise");

  // Residuals of both defining equations, with (a_j + xi)^n expanded directly.
  const Series x = add(F, a_const, xi);
  const Series r1 = sub(F, za, mul(F, eta, compose(F, hpoly, x)));
  const Series r2 = sub(F, add(F, pow(F, x, params.n), x), pow(F, eta, params.n + 1));
  if (r1.valuation() || r2.valuation())
    throw Error(Errc::PrecisionNotReached, "curve equations not satisfied to O(z^prec)");

  return LocalChart{j, base, std::move(xi), std::move(eta), prec};
}

Series monomial_series(const gf::Field& F, const LocalChart& chart, unsigned alpha, unsigned beta, unsigned gamma) {
  const Series x = add(F, Series::constant(chart.base, chart.prec), chart.xi);
  return shift(mul(F, pow(F, x, alpha), pow(F, chart.eta, beta)), gamma);
}

long pole_order_at_inf(const curve::GKParams& params, long alpha, long beta, long gamma) {
  return alpha * params.c + beta * static_cast<long>(params.n) * params.a + gamma * params.b;
}

ChartAtlas::ChartAtlas(const curve::GKParams& params, const curve::PointSet& points)
    : params_(&params), points_(&points), charts_(points.p_list.size()) {}

std::shared_ptr<const LocalChart> ChartAtlas::chart(std::size_t j, std::size_t min_prec) const {
  std::lock_guard lock(mu_);
  if (j >= charts_.size()) throw Error(Errc::InvalidArgument, "no point P_" + std::to_string(j + 1));
  auto& slot = charts_[j];
  if (!slot || slot->prec < min_prec) {
    const auto c = static_cast<std::size_t>(params_->c);
    const std::size_t prec = std::max(min_prec + c, 2 * c);
    slot = std::make_shared<const LocalChart>(expand_at(*params_, *points_, j, prec));
  }
  return slot;
}

}  // namespace gkws::local
