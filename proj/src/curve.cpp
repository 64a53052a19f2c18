#include "gkws/curve.hpp"

#include <algorithm>
#include <string>

#include "gkws/detail/parallel.hpp"
#include "gkws/error.hpp"

namespace gkws::curve {

using gf::Fe;

GKParams make_params(unsigned n, unsigned max_n) {
  if (n < 2) throw Error(Errc::NotPrimePower, "n must be at least 2");
  unsigned p = 2;
  while (n % p != 0) ++p;
  unsigned e = 0;
  for (unsigned t = n; t > 1; t /= p) {
    if (t % p != 0) throw Error(Errc::NotPrimePower, std::to_string(n) + " is not a prime power");
    ++e;
  }
  if (n > max_n) throw Error(Errc::UnsupportedSize, "n = " + std::to_string(n) + " exceeds the cap " + std::to_string(max_n));

  GKParams P;
  P.n = n;
  P.p = p;
  P.e = e;
  const long N = n;
  P.a = N * N - N + 1;
  P.b = N * N * N;
  P.c = N * N * N + 1;
  P.q = N * N * N;
  P.genus = (N * N * N + 1) * (N * N - 2) / 2 + 1;
  P.expected_points = N * N * N * N * N * N * N * N - N * N * N * N * N * N + N * N * N * N * N + 1;
  P.field = std::make_shared<const gf::Field>(gf::Field::create(p, 6 * e));
  return P;
}

std::vector<Fe> h_coefficients(const GKParams& params) {
  const auto& F = *params.field;
  std::vector<Fe> coeffs(params.n * (params.n - 1) + 1, F.zero());
  for (unsigned i = 0; i <= params.n; ++i) {
    const Fe sign = (i % 2 == 1) ? F.one() : F.neg(F.one());  // (-1)^(i+1)
    auto& slot = coeffs[i * (params.n - 1)];
    slot = F.add(slot, sign);
  }
  return coeffs;
}

Fe h_eval(const GKParams& params, Fe x) {
  const auto& F = *params.field;
  const auto coeffs = h_coefficients(params);
  Fe acc = F.zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

Fe h_eval_direct(const GKParams& params, Fe x) {
  const auto& F = *params.field;
  Fe acc = F.zero();
  for (unsigned i = 0; i <= params.n; ++i) {
    Fe term = F.pow(x, static_cast<long long>(i) * (params.n - 1));
    acc = (i % 2 == 1) ? F.add(acc, term) : F.sub(acc, term);
  }
  return acc;
}

bool on_curve(const GKParams& params, const CurvePoint& pt) {
  if (pt.at_infinity) return true;
  const auto& F = *params.field;
  const Fe lhs1 = F.pow(pt.z, params.a);
  const Fe rhs1 = F.mul(pt.y, h_eval(params, pt.x));
  const Fe lhs2 = F.add(F.pow(pt.x, params.n), pt.x);
  const Fe rhs2 = F.pow(pt.y, params.n + 1);
  return lhs1 == rhs1 && lhs2 == rhs2;
}

PointSet enumerate_points(const GKParams& params, unsigned threads) {
  const auto& F = *params.field;
  const std::uint32_t q2 = F.order();

  // Preimage buckets: y with y^(n+1) = v, and z with z^a = v, each ascending.
  std::vector<std::vector<Fe>> y_roots(q2), z_roots(q2);
  for (std::uint32_t v = 0; v < q2; ++v) {
    y_roots[F.pow(Fe{v}, params.n + 1).value].push_back(Fe{v});
    z_roots[F.pow(Fe{v}, params.a).value].push_back(Fe{v});
  }

  // One bucket of points per x value keeps the merge order independent of
  // the thread count.
  std::vector<std::vector<CurvePoint>> found(q2);
  detail::parallel_chunks(q2, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t xv = lo; xv < hi; ++xv) {
      const Fe x{static_cast<std::uint32_t>(xv)};
      const Fe rhs = F.add(F.pow(x, params.n), x);
      const Fe hx = h_eval(params, x);
      for (Fe y : y_roots[rhs.value])
        for (Fe z : z_roots[F.mul(y, hx).value]) found[xv].push_back(CurvePoint::affine(x, y, z));
    }
  });

  PointSet out;
  for (const auto& chunk : found)
    for (const auto& pt : chunk) {
      if (pt.z != F.zero())
        out.others.push_back(pt);
      else if (pt.y == F.zero())
        out.p_list.push_back(pt);
      else
        out.q_list.push_back(pt);
    }
  if (static_cast<long>(out.total()) != params.expected_points)
    throw Error(Errc::CountMismatch, "enumerated " + std::to_string(out.total()) + " points, expected " +
                                         std::to_string(params.expected_points));
  return out;
}

}  // namespace gkws::curve
