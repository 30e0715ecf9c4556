#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace oalgdim;

namespace {

struct Case {
  Series series;
  int rank;
  int num_pos;
  std::uint64_t order;
};

const std::vector<Case> kClassical = {
    {Series::A, 1, 1, 2},        {Series::A, 2, 3, 6},      {Series::A, 3, 6, 24},      {Series::A, 4, 10, 120},
    {Series::A, 5, 15, 720},     {Series::B, 2, 4, 8},      {Series::B, 3, 9, 48},      {Series::B, 4, 16, 384},
    {Series::C, 2, 4, 8},        {Series::C, 3, 9, 48},     {Series::C, 4, 16, 384},    {Series::D, 3, 6, 24},
    {Series::D, 4, 12, 192},     {Series::D, 5, 20, 1920},  {Series::G, 2, 6, 12},      {Series::F, 4, 24, 1152},
    {Series::E, 6, 36, 51840},   {Series::E, 7, 63, 2903040}, {Series::E, 8, 120, 696729600},
    {Series::GL, 1, 0, 1},       {Series::GL, 2, 1, 2},     {Series::GL, 3, 3, 6},      {Series::GL, 5, 10, 120},
};

Weight W(const DatumPtr& d, std::vector<int> v) {
  RationalVector c(v.begin(), v.end());
  return Weight(d, c);
}

// All integral weights with coordinates in [-b, b].
std::vector<Weight> box(const DatumPtr& d, int b) {
  std::vector<Weight> out;
  const int n = d->ambient_dim();
  std::vector<int> v(n, -b);
  while (true) {
    out.push_back(W(d, v));
    int k = 0;
    while (k < n && v[k] == b) v[k++] = -b;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

}  // namespace

TEST_CASE("positive root counts and Weyl group orders match the classification") {
  for (const auto& c : kClassical) {
    CAPTURE(to_string(c.series));
    CAPTURE(c.rank);
    const auto d = build_root_datum(c.series, c.rank, Orientation::Upper, UINT64_MAX);
    CHECK(d->num_pos_roots() == c.num_pos);
    CHECK(d->weyl_order() == c.order);
    CHECK(weyl_group_order(c.series, c.rank) == c.order);
  }
  for (int n = 1; n <= 8; ++n) CHECK(build_root_datum(Series::A, n, Orientation::Upper, UINT64_MAX)->num_pos_roots() == n * (n + 1) / 2);
}

TEST_CASE("worked examples for build_root_datum") {
  CHECK(build_root_datum(Series::A, 1)->num_pos_roots() == 1);
  CHECK(build_root_datum(Series::A, 2)->num_pos_roots() == 3);
  CHECK(build_root_datum(Series::B, 2)->num_pos_roots() == 4);
}

TEST_CASE("rho and t are normalized against every simple root") {
  for (const auto& c : kClassical) {
    for (auto o : {Orientation::Upper, Orientation::Lower}) {
      const auto d = build_root_datum(c.series, c.rank, o, UINT64_MAX);
      const Weight rho = Weight::rho(d);
      for (int i = 0; i < d->semisimple_rank(); ++i) {
        CHECK(pairing(rho, i) == 1);
        Rational at_t = 0;
        for (int k = 0; k < d->ambient_dim(); ++k) at_t += d->t_vec()[k] * d->simple_roots()[i][k];
        CHECK(at_t == 1);
        CHECK(pairing(Weight::zero(d), i) == 0);
      }
    }
  }
}

TEST_CASE("positive roots are the W-orbit of the simple roots cut in half") {
  for (const auto& c : kClassical) {
    if (c.order > 2000 || c.rank == 1) continue;
    CAPTURE(to_string(c.series));
    CAPTURE(c.rank);
    const auto d = build_root_datum(c.series, c.rank);
    const oracle::Group g(d);
    REQUIRE(static_cast<std::uint64_t>(g.size()) == c.order);
    const int n = d->ambient_dim();
    std::set<IntVector> orbit;
    for (int w = 0; w < g.size(); ++w)
      for (const auto& alpha : d->simple_roots()) {
        IntVector image(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) image[i] += g.matrix(w)[i * n + j] * alpha[j];
        orbit.insert(image);
      }
    std::set<IntVector> pos, all;
    for (const auto& r : d->positive_roots()) {
      pos.insert(r.ambient);
      IntVector neg = r.ambient;
      for (auto& x : neg) x = -x;
      all.insert(r.ambient);
      all.insert(neg);
    }
    CHECK(pos.size() == d->positive_roots().size());
    CHECK(orbit == all);
    // additive closure inside the positive system
    for (const auto& a : pos)
      for (const auto& b : pos) {
        IntVector s(n);
        for (int i = 0; i < n; ++i) s[i] = a[i] + b[i];
        if (orbit.count(s)) CHECK(pos.count(s) == 1);
      }
    // simple coordinates reproduce the ambient vector
    for (const auto& r : d->positive_roots()) {
      IntVector v(n, 0);
      for (int i = 0; i < d->semisimple_rank(); ++i)
        for (int k = 0; k < n; ++k) v[k] += r.support[i] * d->simple_roots()[i][k];
      CHECK(v == r.ambient);
      CHECK(r.height() >= 1);
    }
  }
}

TEST_CASE("lower orientation negates roots, coroots, rho and pairings") {
  for (const auto& c : kClassical) {
    if (c.order > 5040) continue;
    const auto up = build_root_datum(c.series, c.rank, Orientation::Upper);
    const auto low = build_root_datum(c.series, c.rank, Orientation::Lower);
    CHECK(up->flipped()->fingerprint() == low->fingerprint());
    REQUIRE(up->num_pos_roots() == low->num_pos_roots());
    std::set<IntVector> up_roots, low_neg;
    for (const auto& r : up->positive_roots()) up_roots.insert(r.ambient);
    for (const auto& r : low->positive_roots()) {
      IntVector v = r.ambient;
      for (auto& x : v) x = -x;
      low_neg.insert(v);
    }
    CHECK(up_roots == low_neg);
    for (int k = 0; k < up->ambient_dim(); ++k) CHECK(low->rho()[k] == -up->rho()[k]);
    CHECK(up->cartan() == low->cartan());
    for (const auto& lambda : box(up, 1)) {
      const Weight mirrored(low, lambda.coords());
      for (int i = 0; i < up->semisimple_rank(); ++i) CHECK(pairing(mirrored, i) == -pairing(lambda, i));
    }
  }
}

TEST_CASE("pairing examples and errors") {
  const auto gl3 = build_root_datum(Series::GL, 3);
  CHECK(pairing(W(gl3, {1, 0, 0}), 0) == 1);
  CHECK(pairing(W(gl3, {1, 0, 0}), 1) == 0);
  CHECK(pairing(W(gl3, {1, 0, 0}), IntVector{1, 0, -1}) == 1);
  const auto a2 = build_root_datum(Series::A, 2);
  CHECK_THROWS_AS(pairing(W(a2, {1, 0}), IntVector{1, 0, 0}), Error);
  // bilinear
  const Weight a = W(a2, {2, -1}), b = W(a2, {-3, 5});
  for (int i = 0; i < 2; ++i) CHECK(pairing(a + b, i) == pairing(a, i) + pairing(b, i));
  // mixing data is refused
  const auto a2_low = build_root_datum(Series::A, 2, Orientation::Lower);
  try {
    (void)(W(a2, {0, 0}) + W(a2_low, {0, 0}));
    FAIL("expected DatumMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DatumMismatch);
  }
}

TEST_CASE("unsupported types and the rank cap") {
  auto kind_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { build_root_datum(Series::E, 5); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { build_root_datum(Series::D, 2); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { build_root_datum(Series::G, 3); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { build_root_datum(Series::A, 0); }) == ErrorKind::UnsupportedType);
  CHECK(kind_of([] { build_root_datum(Series::A, 7); }) == ErrorKind::RankTooLarge);
  CHECK(kind_of([] { build_root_datum(Series::E, 6); }) == ErrorKind::RankTooLarge);
  CHECK_NOTHROW(build_root_datum(Series::A, 6));
  CHECK(parse_series("GL") == Series::GL);
  CHECK(parse_series("b") == Series::B);
  CHECK_THROWS_AS(parse_series("H"), Error);
  CHECK_THROWS_AS(parse_orientation("sideways"), Error);
}

TEST_CASE("integrality") {
  const auto a2 = build_root_datum(Series::A, 2);
  CHECK(is_integral(W(a2, {1, -4})));
  const Weight half(a2, {Rational(1, 2), Rational(0)});
  CHECK_FALSE(is_integral(half));
  try {
    dot_dominant(half);
    FAIL("expected NonIntegralWeight");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegralWeight);
  }
  CHECK_THROWS_AS(singular_support(half), Error);
  CHECK_THROWS_AS(maximal_parabolic_for(half), Error);
  // GL: a non-integral central part still pairs integrally
  const auto gl2 = build_root_datum(Series::GL, 2);
  CHECK(is_integral(Weight(gl2, {Rational(1, 2), Rational(-1, 2)})));
  CHECK_FALSE(is_integral(Weight(gl2, {Rational(1, 2), Rational(0)})));
}

TEST_CASE("dot dominance and singular support") {
  for (const auto& c : kClassical) {
    if (c.order > 5040) continue;
    const auto d = build_root_datum(c.series, c.rank);
    std::vector<int> all(d->semisimple_rank());
    for (int i = 0; i < d->semisimple_rank(); ++i) all[i] = i;
    CHECK(dot_dominant(Weight::minus_rho(d)));
    CHECK(singular_support(Weight::minus_rho(d)) == all);
    CHECK(dot_dominant(Weight::zero(d)));
    CHECK(singular_support(Weight::zero(d)).empty());
  }
  const auto a2 = build_root_datum(Series::A, 2);
  // <lambda + rho, a1> = 0, <lambda + rho, a2> = 2
  CHECK(singular_support(W(a2, {-1, 1})) == std::vector<int>{0});
  CHECK(dot_dominant(W(a2, {-1, 1})));
  CHECK_FALSE(dot_dominant(W(a2, {-2, 1})));
}

TEST_CASE("maximal parabolic uses the unshifted pairing") {
  const auto gl3 = build_root_datum(Series::GL, 3);
  CHECK(maximal_parabolic_for(W(gl3, {0, 1, 0})) == std::vector<int>{1});
  CHECK(maximal_parabolic_for(W(gl3, {2, 1, 0})) == std::vector<int>{0, 1});
  const auto b3 = build_root_datum(Series::B, 3);
  CHECK(maximal_parabolic_for(Weight::minus_rho(b3)).empty());
  CHECK(maximal_parabolic_for(W(b3, {0, 3, 1})) == std::vector<int>{0, 1, 2});
}

TEST_CASE("trivial singular support iff trivial dot stabilizer, for dot-dominant weights") {
  for (auto [series, rank] : std::vector<std::pair<Series, int>>{
           {Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::B, 2}, {Series::C, 3}, {Series::G, 2}, {Series::B, 3}}) {
    const auto d = build_root_datum(series, rank);
    const oracle::Group g(d);
    const int n = d->ambient_dim();
    for (const auto& lambda : box(d, rank <= 2 ? 3 : 2)) {
      if (!dot_dominant(lambda)) continue;
      const Weight shifted = lambda + Weight::rho(d);
      int stabilizer = 0;
      for (int w = 0; w < g.size(); ++w) {
        bool fixes = true;
        for (int i = 0; i < n && fixes; ++i) {
          Rational v = 0;
          for (int j = 0; j < n; ++j) v += g.matrix(w)[i * n + j] * shifted.coords()[j];
          fixes = v == shifted.coords()[i];
        }
        stabilizer += fixes;
      }
      CHECK((stabilizer == 1) == singular_support(lambda).empty());
    }
  }
}

TEST_CASE("dim g/p") {
  const auto gl4 = build_root_datum(Series::GL, 4);
  CHECK(dim_g_mod_p(*gl4, {0, 1, 2}) == 0);
  CHECK(dim_g_mod_p(*gl4, {}) == 6);
  CHECK(dim_g_mod_p(*gl4, {1, 2}) == 3);  // Levi GL1 x GL3
  CHECK(levi_positive_roots(*gl4, {1, 2}) == 3);
  // monotone under inclusion
  for (const auto& c : kClassical) {
    if (c.order > 5040 || c.rank > 5) continue;
    const auto d = build_root_datum(c.series, c.rank);
    const int r = d->semisimple_rank();
    const auto subsets = oracle::all_subsets(r);
    for (const auto& small : subsets)
      for (const auto& big : subsets) {
        if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) continue;
        CHECK(dim_g_mod_p(*d, big) <= dim_g_mod_p(*d, small));
      }
  }
}

TEST_CASE("parse_simple_subset") {
  const auto a3 = build_root_datum(Series::A, 3);
  CHECK(parse_simple_subset(*a3, "").empty());
  CHECK(parse_simple_subset(*a3, "3,1") == std::vector<int>{0, 2});
  CHECK_THROWS_AS(parse_simple_subset(*a3, "4"), Error);
  CHECK_THROWS_AS(parse_simple_subset(*a3, "0"), Error);
  CHECK_THROWS_AS(parse_simple_subset(*a3, "1/2"), Error);
}

TEST_CASE("exact rational parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(parse_rational_list("1,-2,3/4") == RationalVector{1, -2, Rational(3, 4)});
  CHECK(parse_rational_list("").empty());
  for (const char* bad : {"0.5", "1e3", "1/0", "abc", "", "1/-2", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}
