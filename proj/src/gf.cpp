#include "gkws/gf.hpp"

#include <algorithm>

#include "gkws/error.hpp"

namespace gkws::gf {

bool is_prime(std::uint64_t v) noexcept {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f)
    if (v % f == 0) return false;
  return true;
}

namespace {

// Dense polynomials over Z_p, constant term first, no trailing zeros.
using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  // p is prime, a != 0 mod p
  unsigned long long r = 1, b = a % p;
  for (unsigned e = p - 2; e; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<unsigned>(r);
}

Poly poly_mod(Poly a, const Poly& f, unsigned p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const unsigned lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const unsigned factor = static_cast<unsigned>((unsigned long long)a.back() * lead_inv % p);
    for (std::size_t i = 0; i <= df; ++i) {
      unsigned long long sub = (unsigned long long)factor * f[i] % p;
      a[shift + i] = static_cast<unsigned>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<unsigned>((r[i + j] + (unsigned long long)a[i] * b[j]) % p);
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, unsigned p) {
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  for (; e; e >>= 1) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b, unsigned p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<unsigned> prime_factors(std::uint64_t v) {
  std::vector<unsigned> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(static_cast<unsigned>(f));
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(static_cast<unsigned>(v));
  return out;
}

// Rabin's test: f of degree d is irreducible iff x^(p^d) = x mod f and
// gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
bool is_irreducible(const Poly& f, unsigned p) {
  const unsigned d = static_cast<unsigned>(f.size() - 1);
  if (d == 1) return true;
  const Poly x{0, 1};
  auto x_pow_p_pow = [&](unsigned k) {
    Poly r = x;
    for (unsigned i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
    return r;
  };
  if (poly_sub(x_pow_p_pow(d), x, p) != Poly{}) return false;
  for (unsigned r : prime_factors(d)) {
    Poly g = poly_gcd(f, poly_sub(x_pow_p_pow(d / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

Field Field::create(unsigned p, unsigned d) {
  if (!is_prime(p)) throw Error(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
  if (d < 1 || d > kMaxDegree)
    throw Error(Errc::DegreeOutOfRange, "extension degree " + std::to_string(d) + " outside [1, 12]");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(Errc::FieldTooLarge, "field order exceeds 2^20");
  }

  Field F;
  F.p_ = p;
  F.d_ = d;
  F.q_ = static_cast<std::uint32_t>(q);
  F.pow_p_.resize(d + 1);
  F.pow_p_[0] = 1;
  for (unsigned i = 1; i <= d; ++i) F.pow_p_[i] = F.pow_p_[i - 1] * p;

  for (std::uint32_t tail = 0; tail < F.q_; ++tail) {
    Poly f(d + 1);
    for (unsigned i = 0, t = tail; i < d; ++i, t /= p) f[i] = t % p;
    f[d] = 1;
    if (is_irreducible(f, p)) {
      F.modulus_ = std::move(f);
      break;
    }
  }

  F.neg_table_.resize(F.q_);
  for (std::uint32_t v = 0; v < F.q_; ++v) {
    std::uint32_t r = 0;
    for (unsigned i = 0, t = v; i < d; ++i, t /= p) r += ((p - t % p) % p) * F.pow_p_[i];
    F.neg_table_[v] = r;
  }
  if (p != 2 && std::uint64_t{F.q_} * F.q_ <= (std::uint64_t{1} << 22)) {
    F.add_table_.resize(std::size_t{F.q_} * F.q_);
    for (std::uint32_t a = 0; a < F.q_; ++a)
      for (std::uint32_t b = 0; b < F.q_; ++b)
        F.add_table_[std::size_t{a} * F.q_ + b] = F.add_digits(Fe{a}, Fe{b}).value;
  }

  // Smallest element (in enumeration order) of multiplicative order q-1.
  const std::uint32_t group = F.q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](Fe a, std::uint64_t e) {
    Fe r = one();
    for (; e; e >>= 1) {
      if (e & 1) r = F.mul_schoolbook(r, a);
      a = F.mul_schoolbook(a, a);
    }
    return r;
  };
  for (std::uint32_t g = 1; g < F.q_; ++g) {
    bool primitive = true;
    for (unsigned r : factors)
      if (group > 1 && slow_pow(Fe{g}, group / r) == one()) {
        primitive = false;
        break;
      }
    if (primitive) {
      F.primitive_ = Fe{g};
      break;
    }
  }

  F.exp_.resize(2 * std::size_t{group} + 1);
  F.log_.assign(F.q_, 0);
  Fe cur = one();
  for (std::uint32_t i = 0; i < group; ++i) {
    F.exp_[i] = cur.value;
    F.exp_[i + group] = cur.value;
    F.log_[cur.value] = i;
    cur = F.mul_schoolbook(cur, F.primitive_);
  }
  F.exp_[2 * std::size_t{group}] = F.exp_[0];
  return F;
}

Fe Field::add_digits(Fe a, Fe b) const noexcept {
  std::uint32_t r = 0;
  std::uint32_t x = a.value, y = b.value;
  for (unsigned i = 0; i < d_; ++i, x /= p_, y /= p_) r += ((x % p_ + y % p_) % p_) * pow_p_[i];
  return Fe{r};
}

Fe Field::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Fe{static_cast<std::uint32_t>(r)};
}

Fe Field::from_coeffs(std::span<const unsigned> coeffs) const {
  if (coeffs.size() > d_) throw Error(Errc::InvalidArgument, "too many coordinates for field element");
  std::uint32_t r = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= p_) throw Error(Errc::InvalidArgument, "coordinate not reduced mod p");
    r += coeffs[i] * pow_p_[i];
  }
  return Fe{r};
}

std::vector<unsigned> Field::coeffs(Fe a) const {
  std::vector<unsigned> out(d_);
  std::uint32_t v = a.value;
  for (unsigned i = 0; i < d_; ++i, v /= p_) out[i] = v % p_;
  return out;
}

Fe Field::inv(Fe a) const {
  if (a.value == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  const std::uint32_t group = q_ - 1;
  return Fe{exp_[(group - log_[a.value]) % group]};
}

Fe Field::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe Field::pow(Fe a, long long k) const {
  if (k == 0) return one();
  if (a.value == 0) {
    if (k < 0) throw Error(Errc::DivisionByZero, "negative power of zero");
    return zero();
  }
  const long long group = q_ - 1;
  long long e = (static_cast<long long>(log_[a.value]) * (k % group)) % group;
  if (e < 0) e += group;
  return Fe{exp_[e]};
}

Fe Field::frobenius(Fe a, unsigned r) const {
  Fe out = a;
  for (unsigned i = 0; i < r % d_; ++i) out = pow(out, p_);
  return out;
}

Fe Field::mul_schoolbook(Fe a, Fe b) const {
  Poly r = poly_mulmod(coeffs(a), coeffs(b), modulus_, p_);
  r.resize(d_, 0);
  return from_coeffs(r);
}

std::vector<Fe> Field::elements() const {
  std::vector<Fe> out(q_);
  for (std::uint32_t v = 0; v < q_; ++v) out[v] = Fe{v};
  return out;
}

std::string Field::to_string(Fe a) const {
  static constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  std::string s(d_, '0');
  std::uint32_t v = a.value;
  for (unsigned i = 0; i < d_; ++i, v /= p_) s[i] = kDigits[v % p_];
  return s;
}

Fe Field::parse(std::string_view digits) const {
  std::vector<unsigned> c;
  for (char ch : digits) {
    if (ch >= '0' && ch <= '9')
      c.push_back(static_cast<unsigned>(ch - '0'));
    else if (ch >= 'a' && ch <= 'z')
      c.push_back(static_cast<unsigned>(ch - 'a' + 10));
    else
      throw Error(Errc::InvalidArgument, "bad digit in field element");
  }
  return from_coeffs(c);
}

}  // namespace gkws::gf
