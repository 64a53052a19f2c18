#include "gkws/agcode.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>
#include <utility>

#include "gkws/detail/parallel.hpp"
#include "gkws/error.hpp"

namespace gkws::code {

using gf::Fe;

namespace {

struct SparseRow {
  std::vector<std::pair<std::size_t, Fe>> terms;
};

}  // namespace

AGCode build_code(const rr::Workspace& ws, const rr::Divisor& G0, unsigned threads) {
  const auto& params = ws.params();
  const auto& F = ws.field();
  const auto& pts = ws.points();
  const rr::Divisor G = rr::Divisor::from_coeffs(params.n, G0.coeffs());
  if (G.degree() <= 0) throw Error(Errc::DegenerateG, "deg G = " + std::to_string(G.degree()) + " is not positive");

  AGCode code;
  code.G = G;
  auto& cols = code.generator.columns;
  if (G.inf() == 0) cols.push_back(pts.p_inf);
  for (std::size_t j = 0; j < pts.p_list.size(); ++j)
    if (G.coeff(j + 1) == 0) cols.push_back(pts.p_list[j]);
  cols.insert(cols.end(), pts.q_list.begin(), pts.q_list.end());
  cols.insert(cols.end(), pts.others.begin(), pts.others.end());

  const rr::RRBasis space = ws.rr().basis(G);
  const std::size_t nfun = space.functions.rows();
  const std::size_t nmono = space.basis.size();
  std::vector<SparseRow> funcs(nfun);
  for (std::size_t r = 0; r < nfun; ++r)
    for (std::size_t c = 0; c < nmono; ++c)
      if (space.functions.at(r, c) != F.zero()) funcs[r].terms.emplace_back(c, space.functions.at(r, c));

  unsigned max_alpha = 0;
  long total_shift = 0;
  for (const auto& m : space.basis) max_alpha = std::max(max_alpha, m.alpha);
  for (long t : space.shift) total_shift += t;
  std::optional<std::size_t> top_x_power;  // x^(sum t_j): the value at P_inf
  for (std::size_t c = 0; c < nmono; ++c) {
    const auto& m = space.basis[c];
    if (static_cast<long>(m.alpha) == total_shift && m.beta == 0 && m.gamma == 0) top_x_power = c;
  }

  const std::size_t len = cols.size();
  linalg::Matrix M(nfun, len);
  detail::parallel_chunks(len, threads, [&](std::size_t lo, std::size_t hi) {
    std::vector<Fe> xp(max_alpha + 1), yp(params.n + 1), zp(params.n * params.n - params.n + 1), mono(nmono);
    for (std::size_t col = lo; col < hi; ++col) {
      const auto& pt = cols[col];
      if (pt.at_infinity) {
        for (std::size_t r = 0; r < nfun; ++r)
          M.at(r, col) = top_x_power ? space.functions.at(r, *top_x_power) : F.zero();
        continue;
      }
      xp[0] = yp[0] = zp[0] = F.one();
      for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = F.mul(xp[i - 1], pt.x);
      for (std::size_t i = 1; i < yp.size(); ++i) yp[i] = F.mul(yp[i - 1], pt.y);
      for (std::size_t i = 1; i < zp.size(); ++i) zp[i] = F.mul(zp[i - 1], pt.z);
      for (std::size_t c = 0; c < nmono; ++c) {
        const auto& m = space.basis[c];
        mono[c] = F.mul(F.mul(xp[m.alpha], yp[m.beta]), zp[m.gamma]);
      }
      Fe denom = F.one();
      for (std::size_t j = 0; j < space.shift.size(); ++j)
        if (space.shift[j] > 0) denom = F.mul(denom, F.pow(F.sub(pt.x, pts.p_list[j].x), space.shift[j]));
      const Fe scale = F.inv(denom);
      for (std::size_t r = 0; r < nfun; ++r) {
        Fe acc = F.zero();
        for (const auto& [c, coef] : funcs[r].terms) acc = F.add(acc, F.mul(coef, mono[c]));
        M.at(r, col) = F.mul(acc, scale);
      }
    }
  });

  auto& s = code.summary;
  s.length = static_cast<long>(len);
  s.deg_G = G.degree();
  s.k = static_cast<long>(linalg::rank(F, M));
  s.k_omega = s.length - s.k;
  const long g = params.genus;
  if (s.deg_G < s.length) {
    s.goppa_d = s.length - s.deg_G;
    s.delta_goppa = static_cast<double>(*s.goppa_d) / static_cast<double>(s.length);
  }
  if (s.deg_G > 2 * g - 2) s.goppa_d_omega = s.deg_G - 2 * g + 2;
  if (s.deg_G > 2 * g - 2 && s.deg_G < s.length) s.k_formula = s.deg_G - g + 1;
  s.rate = s.length > 0 ? static_cast<double>(s.k) / static_cast<double>(s.length) : 0.0;
  code.generator.entries = std::move(M);
  return code;
}

DualData dual_check(const gf::Field& F, const GenMatrix& M) {
  DualData out;
  out.parity = linalg::nullspace(F, M.entries);
  out.orthogonal = true;
  for (std::size_t r = 0; r < M.entries.rows() && out.orthogonal; ++r)
    for (std::size_t h = 0; h < out.parity.rows(); ++h)
      if (linalg::dot(F, M.entries.row(r), out.parity.row(h)) != F.zero()) {
        out.orthogonal = false;
        break;
      }
  return out;
}

PureGapBound pure_gap_divisor(const curve::GKParams& params, const ws::PoleVector& alpha,
                              const ws::PoleVector& beta) {
  if (alpha.size() != beta.size() || alpha.empty())
    throw Error(Errc::InvalidArgument, "pure-gap tuples must have the same nonzero length");
  ws::PoleVector sum(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) sum[i] = alpha[i] + beta[i] - 1;
  PureGapBound out;
  out.G = ws::to_divisor(params, sum);
  out.bound = out.G.degree() - (2 * params.genus - 2) + static_cast<long>(alpha.size());
  return out;
}

PureGapBound pure_gap_bound(const rr::RiemannRoch& rr, const ws::PoleVector& alpha, const ws::PoleVector& beta) {
  PureGapBound out = pure_gap_divisor(rr.params(), alpha, beta);
  if (!ws::is_pure_gap(rr, alpha)) throw Error(Errc::NotPureGap, "first tuple is not a pure gap");
  if (!ws::is_pure_gap(rr, beta)) throw Error(Errc::NotPureGap, "second tuple is not a pure gap");
  return out;
}

std::optional<long> min_weight_exhaustive(const gf::Field& F, const linalg::Matrix& M0, std::uint64_t cap,
                                          unsigned threads) {
  linalg::Matrix M = M0;
  const std::size_t k = linalg::row_reduce(F, M).size();
  if (k == 0) return std::nullopt;
  const std::uint64_t q = F.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > cap / q) return std::nullopt;
    total *= q;
  }

  const std::size_t len = M.cols();
  auto weight = [&](std::span<const Fe> w) {
    return static_cast<long>(std::count_if(w.begin(), w.end(), [&](Fe v) { return v != F.zero(); }));
  };
  long best = weight(M.row(k - 1));
  if (k == 1) return best;

  // Every nonzero codeword is a scalar multiple of one whose first nonzero
  // message symbol (at `lead`) is 1. The last message symbol lambda is
  // resolved for all q values at once: position t of partial + lambda*last
  // vanishes for exactly one lambda when last[t] != 0.
  const auto last = M.row(k - 1);
  std::vector<Fe> root_scale(len);
  for (std::size_t t = 0; t < len; ++t)
    root_scale[t] = last[t] == F.zero() ? F.zero() : F.neg(F.inv(last[t]));

  std::atomic<long> global_best{best};
  for (std::size_t lead = 0; lead + 1 < k; ++lead) {
    // Rows lead+1 .. k-2 carry free symbols; the first of them varies
    // innermost, the rest ("outer") are decoded from a combo index.
    const std::size_t free_rows = k - 2 - lead;
    const std::size_t outer_rows = free_rows > 0 ? free_rows - 1 : 0;
    std::uint64_t outer = 1;
    for (std::size_t i = 0; i < outer_rows; ++i) outer *= q;
    std::vector<std::vector<Fe>> inner_multiples;
    if (free_rows > 0) {
      const auto row = M.row(lead + 1);
      inner_multiples.assign(q, std::vector<Fe>(len));
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::size_t t = 0; t < len; ++t) inner_multiples[c][t] = F.mul(Fe{c}, row[t]);
    }
    detail::parallel_chunks(static_cast<std::size_t>(outer), threads, [&](std::size_t lo, std::size_t hi) {
      std::vector<Fe> base(len), partial(len);
      std::vector<long> zeros_at(q);
      long local_best = global_best.load();
      auto scan = [&](std::span<const Fe> w) {
        std::fill(zeros_at.begin(), zeros_at.end(), 0);
        long common = 0;
        for (std::size_t t = 0; t < len; ++t) {
          if (root_scale[t] == F.zero())
            common += w[t] == F.zero();
          else
            ++zeros_at[F.mul(w[t], root_scale[t]).value];
        }
        const long most = *std::max_element(zeros_at.begin(), zeros_at.end());
        local_best = std::min(local_best, static_cast<long>(len) - common - most);
      };
      for (std::size_t combo = lo; combo < hi; ++combo) {
        std::copy(M.row(lead).begin(), M.row(lead).end(), base.begin());
        std::size_t digits = combo;
        for (std::size_t i = 0; i < outer_rows; ++i, digits /= q) {
          const Fe coef{static_cast<std::uint32_t>(digits % q)};
          if (coef == F.zero()) continue;
          const auto row = M.row(lead + 2 + i);
          for (std::size_t t = 0; t < len; ++t) base[t] = F.add(base[t], F.mul(coef, row[t]));
        }
        if (free_rows == 0) {
          scan(base);
          continue;
        }
        for (std::uint32_t c = 0; c < q; ++c) {
          const auto& mult = inner_multiples[c];
          for (std::size_t t = 0; t < len; ++t) partial[t] = F.add(base[t], mult[t]);
          scan(partial);
        }
      }
      long seen = global_best.load();
      while (local_best < seen && !global_best.compare_exchange_weak(seen, local_best)) {
      }
    });
  }
  return global_best.load();
}

}  // namespace gkws::code
