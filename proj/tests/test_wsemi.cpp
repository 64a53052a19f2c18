#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "gkws/wsemi.hpp"
#include "testing.hpp"

using gkws::Errc;
using gkws::testing::error_of;
namespace rr = gkws::rr;
namespace ws = gkws::ws;
using ws::PoleVector;

namespace {

const rr::Workspace& ws2() {
  static const auto w = rr::Workspace::create(2);
  return *w;
}

const rr::Workspace& ws3() {
  static const auto w = rr::Workspace::create(3);
  return *w;
}

const ws::SemigroupBox& box2(unsigned m) {
  static const auto b1 = ws::semigroup_box(ws2().rr(), 1, 19, 2);
  static const auto b2 = ws::semigroup_box(ws2().rr(), 2, 19, 2);
  return m == 1 ? b1 : b2;
}

const std::vector<PoleVector> kGamma21 = {{1, 19}, {2, 11}, {3, 3},   {4, 13}, {5, 5},
                                          {7, 7},  {10, 10}, {11, 2}, {13, 4}, {19, 1}};
const std::vector<PoleVector> kGamma22 = {{1, 1, 10}, {1, 10, 1}, {2, 2, 2}, {4, 4, 4}, {10, 1, 1}};
const std::vector<long> kGaps2 = {1, 2, 3, 4, 5, 7, 10, 11, 13, 19};

}  // namespace

TEST_CASE("closed-form generating sets for n=2") {
  CHECK(ws::gamma_closed_form(ws2().params(), 1) == kGamma21);
  CHECK(ws::gamma_closed_form(ws2().params(), 2) == kGamma22);
  CHECK(error_of([] { ws::gamma_closed_form(ws2().params(), 0); }) == Errc::MOutOfRange);
  CHECK(error_of([] { ws::gamma_closed_form(ws2().params(), 3); }) == Errc::MOutOfRange);
}

TEST_CASE("closed-form tuples are discrepancies and members for n=3") {
  const auto& R = ws3().rr();
  for (unsigned m = 1; m <= 3; ++m) {
    const auto gamma = ws::gamma_closed_form(ws3().params(), m);
    CHECK(std::is_sorted(gamma.begin(), gamma.end()));
    CHECK(std::adjacent_find(gamma.begin(), gamma.end()) == gamma.end());
    for (const auto& v : gamma) {
      CAPTURE(v);
      REQUIRE(ws::is_member(R, v));
      const auto A = ws::to_divisor(ws3().params(), v);
      for (std::size_t P = 0; P < v.size(); ++P)
        for (std::size_t Q = P + 1; Q < v.size(); ++Q) REQUIRE(R.is_discrepancy(A, P, Q));
    }
  }
}

TEST_CASE("generating-set coordinates are single-point gaps") {
  for (const auto* w : {&ws2(), &ws3()}) {
    const auto gaps = ws::single_point_gaps(w->params());
    const std::set<long> G(gaps.begin(), gaps.end());
    for (unsigned m = 1; m <= w->params().n; ++m)
      for (const auto& v : ws::gamma_closed_form(w->params(), m))
        for (long x : v) REQUIRE(G.count(x));
  }
}

TEST_CASE("single-point gaps") {
  CHECK(ws::single_point_gaps(ws2().params()) == kGaps2);
  CHECK(ws::single_point_gaps(ws3().params()).size() == 99);
}

TEST_CASE("lub") {
  const std::vector<PoleVector> a{{1, 19}, {19, 1}};
  CHECK(ws::lub(a) == PoleVector{19, 19});
  const std::vector<PoleVector> b{{1, 1, 10}, {1, 10, 1}};
  CHECK(ws::lub(b) == PoleVector{1, 10, 10});
  const std::vector<PoleVector> c{{4, 2}};
  CHECK(ws::lub(c) == PoleVector{4, 2});
  CHECK(error_of([] { ws::lub(std::vector<PoleVector>{}); }) == Errc::EmptyInput);
  const std::vector<PoleVector> d{{1}, {1, 2}};
  CHECK(error_of([&] { ws::lub(d); }) == Errc::InvalidArgument);
}

TEST_CASE("membership examples") {
  const auto& R = ws2().rr();
  CHECK(ws::is_member(R, {0, 0}));
  CHECK(ws::is_member(R, {0, 0, 0}));
  CHECK(ws::is_member(R, {3, 3}));
  CHECK_FALSE(ws::is_member(R, {1, 1}));
  CHECK(ws::is_member(R, {6, 0}));
  CHECK_FALSE(ws::is_member(R, {7, 0}));
}

TEST_CASE("oracle box matches the closure of the known generators (n=2, m=1)") {
  // Independent rebuild of H(P_inf, P_1): lubs of the listed generating set
  // and the axis semigroups <6,8,9>.
  const long T = 30;
  std::set<long> numerical;
  for (long s = 0; s <= T; ++s)
    if (std::find(kGaps2.begin(), kGaps2.end(), s) == kGaps2.end()) numerical.insert(s);
  std::set<PoleVector> gens;
  for (long s : numerical) {
    gens.insert({s, 0});
    gens.insert({0, s});
  }
  gens.insert(kGamma21.begin(), kGamma21.end());
  std::set<PoleVector> H;
  for (const auto& u : gens)
    for (const auto& v : gens) {
      const PoleVector w{std::max(u[0], v[0]), std::max(u[1], v[1])};
      if (w[0] <= T && w[1] <= T) H.insert(w);
    }
  const auto box = ws::semigroup_box(ws2().rr(), 1, T);
  const auto members = box.members();
  CHECK(std::set<PoleVector>(members.begin(), members.end()) == H);
}

TEST_CASE("semigroup and gap boxes (n=2)") {
  const auto& b1 = box2(1);
  CHECK(b1.contains({6, 0}));
  CHECK_FALSE(b1.contains({1, 1}));
  for (const auto& v : kGamma21) CHECK(b1.contains(v));
  const auto gaps = ws::gap_box(b1);
  CHECK(gaps == b1.gaps());
  CHECK(std::binary_search(gaps.begin(), gaps.end(), PoleVector{1, 1}));
  CHECK_FALSE(std::binary_search(gaps.begin(), gaps.end(), PoleVector{3, 3}));
  std::vector<long> axis0, axis1;
  for (const auto& v : gaps) {
    if (v[1] == 0) axis0.push_back(v[0]);
    if (v[0] == 0) axis1.push_back(v[1]);
  }
  CHECK(axis0 == kGaps2);
  CHECK(axis1 == kGaps2);
}

TEST_CASE("generating set from the oracle box equals the closed form") {
  CHECK(ws::gamma_from_box(ws2().params(), box2(1)) == kGamma21);
  CHECK(ws::gamma_from_box(ws2().params(), box2(2)) == kGamma22);
  const auto b31 = ws::semigroup_box(ws3().rr(), 1, 2 * 99 - 1, 2);
  CHECK(ws::gamma_from_box(ws3().params(), b31) == ws::gamma_closed_form(ws3().params(), 1));
  const auto g22 = ws::gamma_from_box(ws2().params(), box2(2));
  CHECK_FALSE(std::binary_search(g22.begin(), g22.end(), PoleVector{0, 0, 0}));
  for (const auto& v : g22) CHECK(ws::is_minimal_in_nabla(v, 0, box2(2)));
  const auto small = ws::semigroup_box(ws2().rr(), 1, 10);
  CHECK(error_of([&] { ws::gamma_from_box(ws2().params(), small); }) == Errc::BoxTooSmall);
}

TEST_CASE("lub closure reproduces the oracle box") {
  CHECK(ws::lub_closure_box(ws2().params(), box2(1)) == box2(1));
  CHECK(ws::lub_closure_box(ws2().params(), box2(2)) == box2(2));
}

TEST_CASE("lub of members is a member") {
  const auto& b = box2(2);
  const auto members = b.members();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const std::vector<PoleVector> pair{members[pick(rng)], members[pick(rng)]};
    REQUIRE(b.contains(ws::lub(pair)));
  }
}

TEST_CASE("discrepancy characterizes the generating set") {
  const auto& R = ws2().rr();
  for (unsigned m : {1u, 2u}) {
    const auto& b = box2(m);
    const auto gamma = ws::gamma_from_box(ws2().params(), b);
    for (std::size_t idx = 0; idx < b.box().size(); ++idx) {
      const auto v = b.box().vector(idx);
      if (std::any_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
      const auto A = ws::to_divisor(ws2().params(), v);
      bool all = true;
      for (std::size_t P = 0; P <= m && all; ++P)
        for (std::size_t Q = P + 1; Q <= m && all; ++Q) all = R.is_discrepancy(A, P, Q);
      REQUIRE(all == std::binary_search(gamma.begin(), gamma.end(), v));
    }
  }
}

TEST_CASE("boxes are symmetric in the P_j coordinates") {
  const auto& b = box2(2);
  for (std::size_t idx = 0; idx < b.box().size(); ++idx) {
    auto v = b.box().vector(idx);
    const bool in = b.contains_index(idx);
    std::swap(v[1], v[2]);
    REQUIRE(b.contains(v) == in);
  }
  const auto gamma = ws::gamma_closed_form(ws3().params(), 3);
  for (auto v : gamma) {
    std::swap(v[1], v[3]);
    REQUIRE(std::binary_search(gamma.begin(), gamma.end(), v));
  }
}

TEST_CASE("generating sets by support") {
  const std::vector<std::size_t> s12{1, 2};
  const auto g12 = ws::gamma_of_support(box2(2), s12);
  // H(P_1, P_2) is the image of H(P_inf, P_1) under an automorphism.
  for (const auto& v : g12) {
    REQUIRE(v[0] == 0);
    REQUIRE(std::binary_search(kGamma21.begin(), kGamma21.end(), PoleVector{v[1], v[2]}));
  }
  CHECK(g12.size() == kGamma21.size());
}

TEST_CASE("pure gaps (n=2)") {
  const auto& R = ws2().rr();
  CHECK(ws::is_pure_gap(R, {11, 1}));
  CHECK(ws::is_pure_gap(R, {3, 2}));
  CHECK_FALSE(ws::is_pure_gap(R, {3, 3}));
  CHECK(ws::pure_gap_ladder(ws2().params(), 1, 2) == PoleVector{11, 1});
  CHECK(ws::pure_gap_ladder(ws2().params(), 1, 3) == PoleVector{3, 2});
  CHECK(error_of([] { ws::pure_gap_ladder(ws2().params(), 1, 1); }) == Errc::KOutOfRange);
  CHECK(error_of([] { ws::pure_gap_ladder(ws2().params(), 1, 4); }) == Errc::KOutOfRange);
  CHECK(ws::unit_tail_qualifies(ws2().params(), 1, 11));
  CHECK(ws::unit_tail_qualifies(ws2().params(), 1, 19 - 1) == false);
  CHECK(error_of([] { ws::unit_tail_qualifies(ws2().params(), 1, 19); }) == Errc::AlphaOutOfRange);
  CHECK(error_of([] { ws::unit_tail_qualifies(ws2().params(), 1, -1); }) == Errc::AlphaOutOfRange);

  for (unsigned m : {1u, 2u}) {
    const auto pure = ws::pure_gaps_in_box(R, m, 19);
    const auto gaps = box2(m).gaps();
    for (const auto& v : pure) {
      REQUIRE(std::binary_search(gaps.begin(), gaps.end(), v));
      REQUIRE(std::all_of(v.begin(), v.end(), [](long x) { return x >= 1; }));
    }
    for (const auto& fv : ws::ladder_family(R, m)) CHECK(fv.pure);
    for (const auto& fv : ws::unit_tail_family(R, m)) CHECK((fv.gap && fv.pure));
  }
}

TEST_CASE("pure gaps (n=3, m=3)") {
  const auto& P = ws3().params();
  const auto& R = ws3().rr();
  CHECK(ws::pure_gap_ladder(P, 3, 2) == PoleVector{114, 2, 2, 1});
  CHECK(ws::is_pure_gap(R, {114, 2, 2, 1}));
  CHECK_FALSE(ws::unit_tail_qualifies(P, 3, 155));
  for (const auto& fv : ws::ladder_family(R, 3)) CHECK((fv.gap && fv.pure));
  for (const PoleVector v : {PoleVector{142, 2, 2, 1}, PoleVector{155, 1, 1, 1}})
    if (ws::is_pure_gap(R, v)) CHECK_FALSE(ws::is_member(R, v));
}

TEST_CASE("box limits") {
  CHECK(error_of([] { ws::semigroup_box(ws2().rr(), 1, 41); }) == Errc::InvalidArgument);
  CHECK(error_of([] { ws::Box(8, 40); }) == Errc::BoxTooLarge);
  const ws::Box b(3, 4);
  for (std::size_t i = 0; i < b.size(); ++i) REQUIRE(b.index(b.vector(i)) == i);
  CHECK_FALSE(b.inside({5, 0, 0}));
}
