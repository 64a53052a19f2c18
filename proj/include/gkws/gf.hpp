#pragma once

// Arithmetic in small finite fields GF(p^d) in a polynomial basis over Z_p.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gkws::gf {

/// A field element. `value` packs the polynomial-basis coordinates as the
/// base-p integer sum(c_i * p^i), constant term least significant, so the
/// natural integer order is the coefficient-lexicographic enumeration order.
struct Fe {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(Fe, Fe) = default;
};

bool is_prime(std::uint64_t v) noexcept;

class Field {
 public:
  static constexpr unsigned kMaxDegree = 12;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Builds GF(p^d) over the smallest monic irreducible modulus of degree d,
  /// where polynomials are ordered by the base-p integer of their non-leading
  /// coefficients. Throws NonPrimeCharacteristic, DegreeOutOfRange or
  /// FieldTooLarge.
  static Field create(unsigned p, unsigned d);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return d_; }
  std::uint32_t order() const noexcept { return q_; }
  /// Constant term first, leading 1 last.
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  static constexpr Fe zero() noexcept { return Fe{0}; }
  static constexpr Fe one() noexcept { return Fe{1}; }
  /// Image of an integer in the prime subfield.
  Fe from_int(long long v) const noexcept;
  Fe from_coeffs(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coeffs(Fe a) const;

  Fe add(Fe a, Fe b) const noexcept {
    if (p_ == 2) return Fe{a.value ^ b.value};
    return add_table_.empty() ? add_digits(a, b) : Fe{add_table_[std::size_t{a.value} * q_ + b.value]};
  }
  Fe neg(Fe a) const noexcept { return Fe{neg_table_[a.value]}; }
  Fe sub(Fe a, Fe b) const noexcept { return add(a, neg(b)); }
  Fe mul(Fe a, Fe b) const noexcept {
    if (a.value == 0 || b.value == 0) return zero();
    return Fe{exp_[log_[a.value] + log_[b.value]]};
  }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const;
  Fe pow(Fe a, long long k) const;
  /// a^(p^r).
  Fe frobenius(Fe a, unsigned r) const;

  /// Product computed by polynomial multiplication and reduction modulo the
  /// modulus, without the log tables.
  Fe mul_schoolbook(Fe a, Fe b) const;

  /// All q elements in coefficient-lexicographic order: 0, 1, ...
  std::vector<Fe> elements() const;

  /// Base-p digit string (0-9a-z), constant term first, always `degree()`
  /// digits. Characteristics above 36 are not serializable.
  std::string to_string(Fe a) const;
  Fe parse(std::string_view digits) const;

  /// The generator used for the log tables.
  Fe primitive_element() const noexcept { return primitive_; }

 private:
  Field() = default;
  Fe add_digits(Fe a, Fe b) const noexcept;

  unsigned p_ = 0;
  unsigned d_ = 0;
  std::uint32_t q_ = 0;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i, i = 0..d
  std::vector<std::uint32_t> exp_;    // length 2(q-1)
  std::vector<std::uint32_t> log_;    // log_[0] unused
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> add_table_;  // q*q for odd p when small enough
  Fe primitive_;
};

}  // namespace gkws::gf
