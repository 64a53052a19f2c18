#include <doctest.h>

#include <algorithm>

#include "gkws/curve.hpp"
#include "testing.hpp"

using gkws::Errc;
using gkws::gf::Fe;
using gkws::testing::error_of;
namespace curve = gkws::curve;

namespace {

Fe power(const gkws::gf::Field& F, Fe x, long k) { return F.pow(x, k); }

// Counts affine solutions by scanning all (x, y) and then every z.
long brute_force_affine_count(const curve::GKParams& P) {
  const auto& F = *P.field;
  const auto els = F.elements();
  long count = 0;
  for (Fe x : els) {
    // h(X) = sum_{i=0}^{n} (-1)^(i+1) X^(i(n-1)), evaluated term by term
    Fe h = F.zero();
    for (unsigned i = 0; i <= P.n; ++i) {
      const Fe term = power(F, x, static_cast<long>(i * (P.n - 1)));
      h = i % 2 == 1 ? F.add(h, term) : F.sub(h, term);
    }
    const Fe lhs2 = F.add(power(F, x, P.n), x);
    for (Fe y : els) {
      if (power(F, y, P.n + 1) != lhs2) continue;
      const Fe rhs1 = F.mul(y, h);
      for (Fe z : els) count += power(F, z, P.a) == rhs1;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("curve constants") {
  const auto P2 = curve::make_params(2);
  CHECK(P2.a == 3);
  CHECK(P2.b == 8);
  CHECK(P2.c == 9);
  CHECK(P2.genus == 10);
  CHECK(P2.expected_points == 225);
  CHECK(P2.field->order() == 64);

  const auto P3 = curve::make_params(3);
  CHECK(P3.a == 7);
  CHECK(P3.c == 28);
  CHECK(P3.genus == 99);
  CHECK(P3.expected_points == 6076);
  CHECK(P3.field->order() == 729);

  const auto P4 = curve::make_params(4);
  CHECK(P4.p == 2);
  CHECK(P4.e == 2);
  CHECK(P4.field->degree() == 12);

  for (unsigned n : {2u, 3u, 4u}) {
    const auto P = curve::make_params(n);
    const long nn = n;
    CHECK(P.a * (nn + 1) == P.c);
    CHECK(nn * P.a == P.b - nn * nn + nn);
    // maximal: q^2 + 1 + 2 g q points over GF(q^2)
    CHECK(P.expected_points == P.q * P.q + 1 + 2 * P.genus * P.q);
  }
}

TEST_CASE("parameter errors") {
  CHECK(error_of([] { curve::make_params(1); }) == Errc::NotPrimePower);
  CHECK(error_of([] { curve::make_params(6); }) == Errc::NotPrimePower);
  CHECK(error_of([] { curve::make_params(5); }) == Errc::UnsupportedSize);
  CHECK(error_of([] { curve::make_params(11, 11); }) == Errc::FieldTooLarge);
}

TEST_CASE("Horner evaluation of h matches the defining sum") {
  for (unsigned n : {2u, 3u}) {
    const auto P = curve::make_params(n);
    for (Fe x : P.field->elements()) REQUIRE(curve::h_eval(P, x) == curve::h_eval_direct(P, x));
  }
}

TEST_CASE("n=2 point count matches a brute-force scan") {
  const auto P = curve::make_params(2);
  const auto pts = curve::enumerate_points(P);
  CHECK(brute_force_affine_count(P) + 1 == 225);
  CHECK(pts.total() == 225);
}

TEST_CASE("n=3 point count matches a brute-force scan") {
  const auto P = curve::make_params(3);
  CHECK(brute_force_affine_count(P) + 1 == 6076);
  CHECK(curve::enumerate_points(P, 2).total() == 6076);
}

TEST_CASE("point classification") {
  for (unsigned n : {2u, 3u, 4u}) {
    CAPTURE(n);
    const auto P = curve::make_params(n);
    const auto& F = *P.field;
    const auto pts = curve::enumerate_points(P);
    const std::size_t nn = n;
    CHECK(pts.p_list.size() == nn);
    CHECK(pts.q_list.size() == nn * nn * nn - nn);
    CHECK(1 + pts.p_list.size() + pts.q_list.size() == nn * nn * nn + 1);
    CHECK(static_cast<long>(pts.total()) == P.expected_points);
    CHECK(pts.p_inf.at_infinity);
    for (const auto& pt : pts.p_list) {
      CHECK(pt.y == F.zero());
      CHECK(pt.z == F.zero());
      CHECK(F.add(F.pow(pt.x, n), pt.x) == F.zero());
      CHECK(curve::h_eval(P, pt.x) != F.zero());
    }
    for (const auto& pt : pts.q_list) {
      CHECK(pt.y != F.zero());
      CHECK(pt.z == F.zero());
      CHECK(curve::on_curve(P, pt));
    }
    for (const auto& pt : pts.others) REQUIRE((pt.z != F.zero() && curve::on_curve(P, pt)));
    auto key = [](const curve::CurvePoint& p) { return std::tuple(p.x, p.y, p.z); };
    CHECK(std::is_sorted(pts.others.begin(), pts.others.end(),
                         [&](const auto& l, const auto& r) { return key(l) < key(r); }));
    CHECK(std::is_sorted(pts.p_list.begin(), pts.p_list.end(),
                         [&](const auto& l, const auto& r) { return key(l) < key(r); }));
  }
}

TEST_CASE("enumeration does not depend on the thread count") {
  const auto P = curve::make_params(3);
  const auto one = curve::enumerate_points(P, 1);
  const auto four = curve::enumerate_points(P, 4);
  CHECK(one.p_list == four.p_list);
  CHECK(one.q_list == four.q_list);
  CHECK(one.others == four.others);
}
