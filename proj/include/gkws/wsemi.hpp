#pragma once

// Weierstrass semigroups H(P_inf, P_1, ..., P_m), their minimal generating
// sets, gap boxes and pure gaps.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gkws/curve.hpp"
#include "gkws/rrspace.hpp"

namespace gkws::ws {

/// Entry 0 is the coordinate at P_inf, entry s the coordinate at P_s.
using PoleVector = std::vector<long>;

/// The closed-form minimal generating set of H(P_inf, P_1, ..., P_m):
///   ((n^2-m-sum j_s)c - i n a - k b, j_1 c + i a + k, ..., j_m c + i a + k)
/// over 1 <= k <= a, 0 <= i <= n, j_s >= 0 with a positive first entry.
/// Deduplicated and sorted lexicographically. Throws MOutOfRange unless
/// 1 <= m <= n.
std::vector<PoleVector> gamma_closed_form(const curve::GKParams& params, unsigned m);

/// Gaps of <n^3 - n^2 + n, n^3, n^3 + 1>; throws CountMismatch if their number
/// is not the genus.
std::vector<long> single_point_gaps(const curve::GKParams& params);

/// Coordinatewise maximum. Throws EmptyInput / InvalidArgument.
PoleVector lub(std::span<const PoleVector> vs);

/// Divisor sum v_i P_i.
rr::Divisor to_divisor(const curve::GKParams& params, const PoleVector& v);

/// v is in H iff l(A) > l(A - P_i) for every i with v_i > 0, A = sum v_i P_i.
bool is_member(const rr::RiemannRoch& rr, const PoleVector& v);

/// The lattice box [0, T]^dims with row-major indexing.
class Box {
 public:
  static constexpr std::size_t kMaxVectors = std::size_t{1} << 26;

  Box(std::size_t dims, long bound);

  std::size_t dims() const noexcept { return dims_; }
  long bound() const noexcept { return bound_; }
  std::size_t size() const noexcept { return size_; }
  bool inside(const PoleVector& v) const;
  std::size_t index(const PoleVector& v) const;
  PoleVector vector(std::size_t index) const;

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::size_t dims_;
  long bound_;
  std::size_t size_;
};

/// Membership flags for H(P_inf, P_1, ..., P_m) on a box.
class SemigroupBox {
 public:
  SemigroupBox(unsigned m, long bound) : box_(m + 1, bound), member_(box_.size(), 0) {}

  unsigned m() const noexcept { return static_cast<unsigned>(box_.dims() - 1); }
  const Box& box() const noexcept { return box_; }
  /// False for vectors outside the box.
  bool contains(const PoleVector& v) const { return box_.inside(v) && member_[box_.index(v)]; }
  bool contains_index(std::size_t idx) const { return member_[idx] != 0; }
  void set(std::size_t idx, bool value) { member_[idx] = value ? 1 : 0; }

  std::vector<PoleVector> members() const;
  std::vector<PoleVector> gaps() const;

  friend bool operator==(const SemigroupBox&, const SemigroupBox&) = default;

 private:
  Box box_;
  std::vector<std::uint8_t> member_;
};

/// H(P_inf, P_1, ..., P_m) cut to [0,T]^(m+1), decided by `is_member` on every
/// vector. Throws MOutOfRange, BoxTooLarge, or InvalidArgument if T > 4g.
SemigroupBox semigroup_box(const rr::RiemannRoch& rr, unsigned m, long T, unsigned threads = 1);

/// Rebuilds the box as the lub-closure of zero-padded minimal generating sets
/// of every nonempty subset of the points. Single-point sets come from the
/// numerical semigroup; larger ones from minimality inside `oracle_box`.
SemigroupBox lub_closure_box(const curve::GKParams& params, const SemigroupBox& oracle_box);

/// Complement of the semigroup inside the box.
std::vector<PoleVector> gap_box(const SemigroupBox& hbox);

/// v minimal w.r.t. the coordinatewise order among members w with w_i = v_i.
bool is_minimal_in_nabla(const PoleVector& v, std::size_t i, const SemigroupBox& hbox);

/// Members with every entry >= 1 that are minimal in some nabla_i. Throws
/// BoxTooSmall if the bound is below 2g - 1.
std::vector<PoleVector> gamma_from_box(const curve::GKParams& params, const SemigroupBox& hbox);

/// Same, restricted to members whose support is exactly `support`
/// (indices into the pole vector, at least two of them).
std::vector<PoleVector> gamma_of_support(const SemigroupBox& hbox, std::span<const std::size_t> support);

/// l(A) = l(A - P_i) at every position i of the tuple.
bool is_pure_gap(const rr::RiemannRoch& rr, const PoleVector& v);

/// ((n^2 - m)c - k b, k, ..., k, k - 1). Throws MOutOfRange / KOutOfRange.
PoleVector pure_gap_ladder(const curve::GKParams& params, unsigned m, long k);

/// Whether 2g - 1 - alpha = lambda c + beta a n + gamma b with lambda >= m, or
/// 2g - 1 - alpha >= (m-1)c and = beta a n + gamma b. Arithmetic only: the
/// gap hypothesis on (alpha, 1, ..., 1) is the caller's. Throws
/// AlphaOutOfRange unless 0 <= alpha < 2g - 1.
bool unit_tail_qualifies(const curve::GKParams& params, unsigned m, long alpha);

struct FamilyVerdict {
  PoleVector tuple;
  bool gap = false;  // not in H by the membership oracle
  bool pure = false;
};

/// Ladder tuples for every admissible k, with oracle verdicts.
std::vector<FamilyVerdict> ladder_family(const rr::RiemannRoch& rr, unsigned m);
/// (alpha, 1, ..., 1) for every alpha in [1, 2g-2] passing the arithmetic
/// conditions, with oracle verdicts.
std::vector<FamilyVerdict> unit_tail_family(const rr::RiemannRoch& rr, unsigned m);

/// Pure gaps inside the box, sorted, with every entry >= 1.
std::vector<PoleVector> pure_gaps_in_box(const rr::RiemannRoch& rr, unsigned m, long T, unsigned threads = 1);

}  // namespace gkws::ws
