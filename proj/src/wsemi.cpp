#include "gkws/wsemi.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "gkws/detail/parallel.hpp"
#include "gkws/error.hpp"

namespace gkws::ws {

namespace {

void check_m(const curve::GKParams& params, unsigned m) {
  if (m < 1 || m > params.n)
    throw Error(Errc::MOutOfRange, "m = " + std::to_string(m) + " outside [1, " + std::to_string(params.n) + "]");
}

// Calls fn on every vector w with 0 <= w <= upper coordinatewise and
// w[fixed] = upper[fixed]; stops early when fn returns true.
bool any_below(const PoleVector& upper, std::size_t fixed, const std::function<bool(const PoleVector&)>& fn) {
  PoleVector w(upper.size(), 0);
  w[fixed] = upper[fixed];
  while (true) {
    if (fn(w)) return true;
    std::size_t i = 0;
    for (; i < w.size(); ++i) {
      if (i == fixed) continue;
      if (w[i] < upper[i]) {
        ++w[i];
        break;
      }
      w[i] = 0;
    }
    if (i == w.size()) return false;
  }
}

}  // namespace

std::vector<PoleVector> gamma_closed_form(const curve::GKParams& params, unsigned m) {
  check_m(params, m);
  const long n = params.n, a = params.a, b = params.b, c = params.c;
  std::vector<PoleVector> out;
  std::vector<long> js(m, 0);
  // positivity forces sum j_s <= n^2 - m - 1
  const long max_sum = n * n - static_cast<long>(m) - 1;

  std::function<void(unsigned, long)> rec = [&](unsigned s, long used) {
    if (s == m) {
      for (long k = 1; k <= a; ++k)
        for (long i = 0; i <= n; ++i) {
          const long first = (n * n - static_cast<long>(m) - used) * c - i * n * a - k * b;
          if (first <= 0) continue;
          PoleVector v{first};
          for (long j : js) v.push_back(j * c + i * a + k);
          out.push_back(std::move(v));
        }
      return;
    }
    for (long j = 0; used + j <= max_sum; ++j) {
      js[s] = j;
      rec(s + 1, used + j);
    }
    js[s] = 0;
  };
  rec(0, 0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<long> single_point_gaps(const curve::GKParams& params) {
  const long limit = 2 * params.genus;
  const long gens[] = {static_cast<long>(params.n) * params.a, params.b, params.c};
  std::vector<char> in(limit + 1, 0);
  in[0] = 1;
  for (long s = 1; s <= limit; ++s)
    for (long g : gens)
      if (s >= g && in[s - g]) {
        in[s] = 1;
        break;
      }
  std::vector<long> gaps;
  for (long s = 1; s <= limit; ++s)
    if (!in[s]) gaps.push_back(s);
  if (static_cast<long>(gaps.size()) != params.genus)
    throw Error(Errc::CountMismatch, "gap count " + std::to_string(gaps.size()) + " differs from the genus");
  return gaps;
}

PoleVector lub(std::span<const PoleVector> vs) {
  if (vs.empty()) throw Error(Errc::EmptyInput, "lub of no vectors");
  PoleVector out = vs.front();
  for (const auto& v : vs.subspan(1)) {
    if (v.size() != out.size()) throw Error(Errc::InvalidArgument, "lub of vectors of different lengths");
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(out[i], v[i]);
  }
  return out;
}

rr::Divisor to_divisor(const curve::GKParams& params, const PoleVector& v) {
  return rr::Divisor::from_coeffs(params.n, v);
}

bool is_member(const rr::RiemannRoch& rr, const PoleVector& v) {
  const rr::Divisor A = to_divisor(rr.params(), v);
  const long lA = rr.dim(A);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    if (v[i] > 0 && rr.dim(A.plus(i, -1)) == lA) return false;
  }
  return true;
}

Box::Box(std::size_t dims, long bound) : dims_(dims), bound_(bound), size_(1) {
  if (dims == 0 || bound < 0) throw Error(Errc::InvalidArgument, "empty box");
  for (std::size_t i = 0; i < dims; ++i) {
    size_ *= static_cast<std::size_t>(bound + 1);
    if (size_ > kMaxVectors) throw Error(Errc::BoxTooLarge, "box has more than 2^26 vectors");
  }
}

bool Box::inside(const PoleVector& v) const {
  if (v.size() != dims_) return false;
  return std::all_of(v.begin(), v.end(), [&](long x) { return x >= 0 && x <= bound_; });
}

std::size_t Box::index(const PoleVector& v) const {
  std::size_t idx = 0;
  for (long x : v) idx = idx * static_cast<std::size_t>(bound_ + 1) + static_cast<std::size_t>(x);
  return idx;
}

PoleVector Box::vector(std::size_t index) const {
  PoleVector v(dims_);
  for (std::size_t i = dims_; i-- > 0;) {
    v[i] = static_cast<long>(index % static_cast<std::size_t>(bound_ + 1));
    index /= static_cast<std::size_t>(bound_ + 1);
  }
  return v;
}

std::vector<PoleVector> SemigroupBox::members() const {
  std::vector<PoleVector> out;
  for (std::size_t idx = 0; idx < box_.size(); ++idx)
    if (member_[idx]) out.push_back(box_.vector(idx));
  return out;
}

std::vector<PoleVector> SemigroupBox::gaps() const {
  std::vector<PoleVector> out;
  for (std::size_t idx = 0; idx < box_.size(); ++idx)
    if (!member_[idx]) out.push_back(box_.vector(idx));
  return out;
}

SemigroupBox semigroup_box(const rr::RiemannRoch& rr, unsigned m, long T, unsigned threads) {
  const auto& params = rr.params();
  check_m(params, m);
  if (T > 4 * params.genus) throw Error(Errc::InvalidArgument, "box bound exceeds 4g");
  SemigroupBox hbox(m, T);
  const Box& box = hbox.box();
  std::vector<std::uint8_t> flags(box.size(), 0);
  detail::parallel_chunks(box.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) flags[idx] = is_member(rr, box.vector(idx)) ? 1 : 0;
  });
  for (std::size_t idx = 0; idx < box.size(); ++idx) hbox.set(idx, flags[idx] != 0);
  return hbox;
}

bool is_minimal_in_nabla(const PoleVector& v, std::size_t i, const SemigroupBox& hbox) {
  if (i >= v.size()) throw Error(Errc::InvalidArgument, "coordinate index out of range");
  if (!hbox.contains(v)) return false;
  return !any_below(v, i, [&](const PoleVector& w) { return w != v && hbox.contains(w); });
}

std::vector<PoleVector> gamma_of_support(const SemigroupBox& hbox, std::span<const std::size_t> support) {
  if (support.size() < 2) throw Error(Errc::InvalidArgument, "support needs at least two points");
  const Box& box = hbox.box();
  std::vector<bool> in_support(box.dims(), false);
  for (auto s : support) {
    if (s >= box.dims()) throw Error(Errc::InvalidArgument, "support index out of range");
    in_support[s] = true;
  }
  std::vector<PoleVector> out;
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (!hbox.contains_index(idx)) continue;
    const PoleVector v = box.vector(idx);
    bool shape = true;
    for (std::size_t i = 0; i < v.size() && shape; ++i) shape = in_support[i] ? v[i] >= 1 : v[i] == 0;
    if (!shape) continue;
    // Minimal for one coordinate iff minimal for all of them.
    if (is_minimal_in_nabla(v, support.front(), hbox)) out.push_back(v);
  }
  return out;
}

std::vector<PoleVector> gamma_from_box(const curve::GKParams& params, const SemigroupBox& hbox) {
  if (hbox.box().bound() < 2 * params.genus - 1)
    throw Error(Errc::BoxTooSmall, "box bound must be at least 2g - 1 = " + std::to_string(2 * params.genus - 1));
  std::vector<std::size_t> all(hbox.box().dims());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return gamma_of_support(hbox, all);
}

SemigroupBox lub_closure_box(const curve::GKParams& params, const SemigroupBox& oracle_box) {
  const Box& box = oracle_box.box();
  const std::size_t dims = box.dims();
  const long T = box.bound();

  std::vector<PoleVector> generators;
  // Single points: every point has H(P) = <na, b, c>.
  const auto gaps = single_point_gaps(params);
  for (std::size_t s = 0; s < dims; ++s)
    for (long v = 1; v <= T; ++v)
      if (!std::binary_search(gaps.begin(), gaps.end(), v)) {
        PoleVector g(dims, 0);
        g[s] = v;
        generators.push_back(std::move(g));
      }
  for (std::size_t mask = 1; mask < (std::size_t{1} << dims); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t s = 0; s < dims; ++s)
      if (mask & (std::size_t{1} << s)) support.push_back(s);
    if (support.size() < 2) continue;
    auto gamma = gamma_of_support(oracle_box, support);
    generators.insert(generators.end(), gamma.begin(), gamma.end());
  }

  SemigroupBox closure(static_cast<unsigned>(dims - 1), T);
  std::vector<std::size_t> reached{0};
  closure.set(0, true);
  for (const auto& g : generators) {
    const std::size_t current = reached.size();
    for (std::size_t r = 0; r < current; ++r) {
      PoleVector u = box.vector(reached[r]);
      for (std::size_t i = 0; i < dims; ++i) u[i] = std::max(u[i], g[i]);
      const std::size_t idx = box.index(u);
      if (!closure.contains_index(idx)) {
        closure.set(idx, true);
        reached.push_back(idx);
      }
    }
  }
  return closure;
}

std::vector<PoleVector> gap_box(const SemigroupBox& hbox) { return hbox.gaps(); }

bool is_pure_gap(const rr::RiemannRoch& rr, const PoleVector& v) {
  if (v.empty()) throw Error(Errc::EmptyInput, "empty tuple");
  const rr::Divisor A = to_divisor(rr.params(), v);
  const long lA = rr.dim(A);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (rr.dim(A.plus(i, -1)) != lA) return false;
  return true;
}

PoleVector pure_gap_ladder(const curve::GKParams& params, unsigned m, long k) {
  check_m(params, m);
  if (k < 2 || k > params.a)
    throw Error(Errc::KOutOfRange, "k = " + std::to_string(k) + " outside [2, " + std::to_string(params.a) + "]");
  const long n = params.n;
  const long first = (n * n - static_cast<long>(m)) * params.c - k * params.b;
  if (first <= 0) throw Error(Errc::KOutOfRange, "first coordinate is not positive");
  PoleVector v(m + 1, k);
  v[0] = first;
  v[m] = k - 1;
  return v;
}

bool unit_tail_qualifies(const curve::GKParams& params, unsigned m, long alpha) {
  check_m(params, m);
  const long top = 2 * params.genus - 1;
  if (alpha < 0 || alpha >= top)
    throw Error(Errc::AlphaOutOfRange, "alpha = " + std::to_string(alpha) + " outside [0, 2g-1)");
  const long R = top - alpha;
  const long an = params.a * static_cast<long>(params.n), b = params.b, c = params.c;
  auto representable = [&](long r) {  // r = beta a n + gamma b
    for (long beta = 0; beta * an <= r; ++beta)
      if ((r - beta * an) % b == 0) return true;
    return false;
  };
  for (long lambda = m; lambda * c <= R; ++lambda)
    if (representable(R - lambda * c)) return true;
  return R >= static_cast<long>(m - 1) * c && representable(R);
}

std::vector<FamilyVerdict> ladder_family(const rr::RiemannRoch& rr, unsigned m) {
  const auto& params = rr.params();
  check_m(params, m);
  std::vector<FamilyVerdict> out;
  const long n = params.n;
  for (long k = 2; k <= params.a; ++k) {
    if ((n * n - static_cast<long>(m)) * params.c - k * params.b <= 0) continue;
    FamilyVerdict fv;
    fv.tuple = pure_gap_ladder(params, m, k);
    fv.gap = !is_member(rr, fv.tuple);
    fv.pure = is_pure_gap(rr, fv.tuple);
    out.push_back(std::move(fv));
  }
  return out;
}

std::vector<FamilyVerdict> unit_tail_family(const rr::RiemannRoch& rr, unsigned m) {
  const auto& params = rr.params();
  check_m(params, m);
  std::vector<FamilyVerdict> out;
  for (long alpha = 1; alpha < 2 * params.genus - 1; ++alpha) {
    if (!unit_tail_qualifies(params, m, alpha)) continue;
    FamilyVerdict fv;
    fv.tuple = PoleVector(m + 1, 1);
    fv.tuple[0] = alpha;
    fv.gap = !is_member(rr, fv.tuple);
    fv.pure = is_pure_gap(rr, fv.tuple);
    out.push_back(std::move(fv));
  }
  return out;
}

std::vector<PoleVector> pure_gaps_in_box(const rr::RiemannRoch& rr, unsigned m, long T, unsigned threads) {
  check_m(rr.params(), m);
  const Box box(m + 1, T);
  std::vector<std::uint8_t> flags(box.size(), 0);
  detail::parallel_chunks(box.size(), threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t idx = lo; idx < hi; ++idx) {
      const PoleVector v = box.vector(idx);
      if (std::any_of(v.begin(), v.end(), [](long x) { return x < 1; })) continue;
      flags[idx] = is_pure_gap(rr, v) ? 1 : 0;
    }
  });
  std::vector<PoleVector> out;
  for (std::size_t idx = 0; idx < box.size(); ++idx)
    if (flags[idx]) out.push_back(box.vector(idx));
  return out;
}

}  // namespace gkws::ws
