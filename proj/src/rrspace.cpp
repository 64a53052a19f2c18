#include "gkws/rrspace.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include "gkws/error.hpp"

namespace gkws::rr {

using gf::Fe;
using local::Series;

Divisor::Divisor(long inf, std::vector<long> pj) {
  coeffs_.reserve(pj.size() + 1);
  coeffs_.push_back(inf);
  coeffs_.insert(coeffs_.end(), pj.begin(), pj.end());
}

Divisor Divisor::from_coeffs(unsigned n, std::span<const long> v) {
  if (v.size() > n + 1)
    throw Error(Errc::UnsupportedSupport, "divisor touches more than P_inf, P_1..P_" + std::to_string(n));
  Divisor d(n);
  std::copy(v.begin(), v.end(), d.coeffs_.begin());
  return d;
}

long Divisor::degree() const {
  long s = 0;
  for (long v : coeffs_) s += v;
  return s;
}

Divisor Divisor::plus(PointIndex i, long k) const {
  Divisor d = *this;
  if (i >= d.coeffs_.size()) d.coeffs_.resize(i + 1, 0);
  d.coeffs_[i] += k;
  return d;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  std::vector<long> v(std::max(a.slots(), b.slots()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
  return Divisor(v.empty() ? 0 : v[0], v.empty() ? std::vector<long>{} : std::vector<long>(v.begin() + 1, v.end()));
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  std::vector<long> v(std::max(a.slots(), b.slots()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
  return Divisor(v.empty() ? 0 : v[0], v.empty() ? std::vector<long>{} : std::vector<long>(v.begin() + 1, v.end()));
}

Divisor canonical_divisor(const curve::GKParams& params) {
  const long n = params.n;
  Divisor K(params.n);
  return K.plus(0, (n * n - 2) * params.c);
}

std::vector<Monomial> onepoint_basis(const curve::GKParams& params, long N) {
  std::vector<Monomial> out;
  if (N < 0) return out;
  const unsigned n = params.n;
  for (unsigned beta = 0; beta <= n; ++beta)
    for (unsigned gamma = 0; gamma <= n * n - n; ++gamma) {
      const long base = local::pole_order_at_inf(params, 0, beta, gamma);
      for (unsigned alpha = 0; base + static_cast<long>(alpha) * params.c <= N; ++alpha)
        out.push_back(Monomial{alpha, beta, gamma, base + static_cast<long>(alpha) * params.c});
    }
  std::sort(out.begin(), out.end(), [](const Monomial& l, const Monomial& r) { return l.pole_order < r.pole_order; });
  return out;
}

std::size_t RiemannRoch::KeyHash::operator()(const std::vector<long>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (long x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

RiemannRoch::RiemannRoch(const curve::GKParams& params, const local::ChartAtlas& atlas)
    : params_(&params), atlas_(&atlas) {}

Divisor RiemannRoch::normalized(const Divisor& G) const {
  return Divisor::from_coeffs(params_->n, G.coeffs());
}

RiemannRoch::Reduced RiemannRoch::reduce(const Divisor& G, long extra_shift) const {
  const auto& F = *params_->field;
  const long c = params_->c;
  const unsigned n = params_->n;

  // Multiplying by prod (x - a_j)^t_j maps L(G) onto L(G') with every P_j
  // coefficient of G' nonpositive.
  Reduced red;
  red.shift.assign(n, 0);
  red.shifted_inf = G.inf();
  std::vector<long> vanish(n, 0);
  for (unsigned j = 1; j <= n; ++j) {
    const long gj = G.coeff(j);
    long t = gj > 0 ? (gj + c - 1) / c : 0;
    t += extra_shift;
    red.shift[j - 1] = t;
    red.shifted_inf += c * t;
    vanish[j - 1] = c * t - gj;
  }
  red.basis = onepoint_basis(*params_, red.shifted_inf);
  const std::size_t cols = red.basis.size();

  long total_rows = 0;
  for (long r : vanish) total_rows += std::max(0L, r);
  red.constraints = linalg::Matrix(static_cast<std::size_t>(total_rows), cols);
  if (cols == 0) return red;

  unsigned max_alpha = 0;
  for (const auto& m : red.basis) max_alpha = std::max(max_alpha, m.alpha);

  std::size_t row0 = 0;
  for (unsigned j = 0; j < n; ++j) {
    const long r = vanish[j];
    if (r <= 0) continue;
    const auto prec = static_cast<std::size_t>(r);
    const auto chart = atlas_->chart(j, prec);
    const Series x = local::add(F, Series::constant(chart->base, prec), chart->xi.truncated(prec));
    const Series eta = chart->eta.truncated(prec);

    std::vector<Series> eta_pow(n + 1);
    eta_pow[0] = Series::constant(F.one(), prec);
    for (unsigned b = 1; b <= n; ++b) eta_pow[b] = local::mul(F, eta_pow[b - 1], eta);
    // prod[alpha][beta] = x^alpha eta^beta, filled lazily.
    std::vector<std::vector<Series>> prod(max_alpha + 1, std::vector<Series>(n + 1));
    Series x_pow = Series::constant(F.one(), prec);
    for (unsigned a = 0; a <= max_alpha; ++a) {
      if (a > 0) x_pow = local::mul(F, x_pow, x);
      for (unsigned b = 0; b <= n; ++b) prod[a][b] = local::mul(F, x_pow, eta_pow[b]);
    }

    for (std::size_t col = 0; col < cols; ++col) {
      const auto& m = red.basis[col];
      const auto& s = prod[m.alpha][m.beta];
      for (std::size_t t = m.gamma; t < prec; ++t) red.constraints.at(row0 + t, col) = s[t - m.gamma];
    }
    row0 += prec;
  }
  return red;
}

long RiemannRoch::dim_uncached(const Divisor& G0, long extra_shift) const {
  const Divisor G = normalized(G0);
  if (G.degree() < 0) return 0;
  Reduced red = reduce(G, extra_shift);
  if (red.basis.empty()) return 0;
  return static_cast<long>(red.basis.size() - linalg::rank(*params_->field, std::move(red.constraints)));
}

long RiemannRoch::dim(const Divisor& G0) const {
  const Divisor G = normalized(G0);
  std::vector<long> key(G.coeffs().begin(), G.coeffs().end());
  {
    std::shared_lock lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  const long value = dim_uncached(G);
  std::unique_lock lock(mu_);
  cache_.emplace(std::move(key), value);
  return value;
}

RRBasis RiemannRoch::basis(const Divisor& G0) const {
  const Divisor G = normalized(G0);
  RRBasis out;
  if (G.degree() < 0) {
    out.shift.assign(params_->n, 0);
    return out;
  }
  Reduced red = reduce(G, 0);
  out.shift = std::move(red.shift);
  out.shifted_inf = red.shifted_inf;
  out.basis = std::move(red.basis);
  if (out.basis.empty()) return out;
  out.functions = linalg::nullspace(*params_->field, std::move(red.constraints));
  return out;
}

bool RiemannRoch::is_discrepancy(const Divisor& A, PointIndex P, PointIndex Q) const {
  if (P == Q) throw Error(Errc::InvalidArgument, "discrepancy needs two distinct points");
  if (P > params_->n || Q > params_->n) throw Error(Errc::UnsupportedSupport, "point outside P_inf, P_1..P_n");
  const long lA = dim(A);
  const long lAP = dim(A.plus(P, -1));
  const long lAQ = dim(A.plus(Q, -1));
  const long lAPQ = dim(A.plus(P, -1).plus(Q, -1));
  return lA != lAP && lAP == lAPQ && lA != lAQ && lAQ == lAPQ;
}

std::size_t RiemannRoch::cache_size() const {
  std::shared_lock lock(mu_);
  return cache_.size();
}

std::unique_ptr<Workspace> Workspace::create(unsigned n, unsigned threads, unsigned max_n) {
  std::unique_ptr<Workspace> ws(new Workspace());
  ws->params_ = curve::make_params(n, max_n);
  ws->points_ = curve::enumerate_points(ws->params_, threads);
  ws->atlas_ = std::make_unique<local::ChartAtlas>(ws->params_, ws->points_);
  ws->rr_ = std::make_unique<RiemannRoch>(ws->params_, *ws->atlas_);
  return ws;
}

}  // namespace gkws::rr
