#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "radvar/convex_scalar.hpp"
#include "radvar/envelope.hpp"
#include "radvar/gluing.hpp"
#include "radvar/nagumo.hpp"

using namespace radvar;

namespace {

// Brute-force conjugate oracle: sup over a fine s-grid of p*s - f(|s|).
double conjugate_oracle(const ConvexScalar& f, double p, double s_max = 8.0,
                        int n = 40001) {
  double best = -kInf;
  for (int i = -n; i <= n; ++i) {
    double s = s_max * i / n;
    double v = f.value(s);
    if (std::isinf(v)) continue;
    best = std::max(best, p * s - v);
  }
  return best;
}

// Grid-scan argmax oracle for the inverse subgradient.
double argmax_oracle(const ConvexScalar& f, double p, double s_max = 8.0,
                     int n = 80001) {
  double best = -kInf, arg = 0.0;
  for (int i = 0; i <= n; ++i) {
    double s = s_max * i / n;
    double v = f.value(s);
    if (std::isinf(v)) continue;
    double t = p * s - v;
    if (t > best) {
      best = t;
      arg = s;
    }
  }
  return arg;
}

ConvexScalar random_pwl(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int m = 1 + static_cast<int>(uni(rng) * 7);
  std::vector<double> b{0.0}, v;
  double slope = (uni(rng) < 0.3) ? 0.0 : 2.0 * uni(rng);
  v.push_back(2.0 * uni(rng) - 1.0);
  for (int i = 0; i < m; ++i) {
    double db = 0.1 + 1.9 * uni(rng);
    b.push_back(b.back() + db);
    v.push_back(v.back() + slope * db);
    slope += 1e-3 + 1.5 * uni(rng);
  }
  double D = (uni(rng) < 0.3) ? b.back() + uni(rng) : kInf;
  return ConvexScalar::pwl(std::move(b), std::move(v), D);
}

}  // namespace

TEST_CASE("make_pwl validation") {
  CHECK_NOTHROW(make_pwl({0, 1, 2}, {0, 0, 1}));
  CHECK_THROWS_AS(make_pwl({0, 1, 2}, {0, 1, 1}), Error);
  try {
    make_pwl({0, 1, 2}, {0, 1, 1});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonConvexData);
  }
  auto f = make_pwl({0, 1}, {0, 1}, 1.0);
  CHECK(f.value(0.5) == doctest::Approx(0.5));
  CHECK(std::isinf(f.value(1.5)));
  CHECK_THROWS_AS(make_pwl({0, 1, 2}, {0, 0, 1}, 1.5), Error);  // BadDomain
  CHECK_THROWS_AS(make_pwl({0.5, 1}, {0, 0}), Error);  // must start at 0
}

TEST_CASE("subgradient basics") {
  auto absf = ConvexScalar::absval();
  auto d0 = subgradient(absf, 0.0);
  CHECK(d0.lo == doctest::Approx(-1.0));
  CHECK(d0.hi == doctest::Approx(1.0));

  auto quad = ConvexScalar::power(0.5, 2.0);
  auto d3 = subgradient(quad, 3.0);
  CHECK(d3.lo == doctest::Approx(3.0));
  CHECK(d3.hi == doctest::Approx(3.0));

  auto capped = ConvexScalar::power(0.5, 2.0, 2.0);
  auto dcap = subgradient(capped, 2.0);
  CHECK(dcap.lo == doctest::Approx(2.0));
  CHECK(std::isinf(dcap.hi));
  CHECK_THROWS_AS(subgradient(capped, 2.5), Error);  // OutsideDomain

  // Even extension at negative arguments.
  auto dm = subgradient(quad, -3.0);
  CHECK(dm.lo == doctest::Approx(-3.0));
  CHECK(dm.hi == doctest::Approx(-3.0));
}

TEST_CASE("conjugate of the quadratic is self-dual") {
  auto quad = ConvexScalar::power(0.5, 2.0);
  auto star = conjugate(quad);
  for (int i = 0; i <= 40; ++i) {
    double p = -4.0 + 8.0 * i / 40;
    CHECK(star.value(p) == doctest::Approx(0.5 * p * p).epsilon(1e-12));
  }
}

TEST_CASE("conjugate of |s| is the indicator of [-1,1]") {
  auto star = conjugate(ConvexScalar::absval());
  CHECK(star.value(0.0) == doctest::Approx(0.0));
  CHECK(star.value(0.7) == doctest::Approx(0.0));
  CHECK(star.value(1.0) == doctest::Approx(0.0));
  CHECK(std::isinf(star.value(1.0000001)));
  CHECK(std::isinf(star.value(-1.5)));
}

TEST_CASE("conjugate of max(0, s-1) against the brute-force oracle") {
  auto f = make_pwl({0, 1, 2}, {0, 0, 1});  // slopes 0, 1; tail slope 1
  auto star = conjugate(f);
  for (int i = 0; i <= 40; ++i) {
    double p = -2.0 + 4.0 * i / 40;
    double expect = (std::abs(p) <= 1.0) ? std::abs(p) : kInf;
    double got = star.value(p);
    if (std::isinf(expect)) {
      CHECK(std::isinf(got));
    } else {
      CHECK(got == doctest::Approx(expect).epsilon(1e-12));
      CHECK(got == doctest::Approx(conjugate_oracle(f, p)).epsilon(1e-4));
    }
  }
}

TEST_CASE("inverse subgradient basics") {
  auto quad = ConvexScalar::power(0.5, 2.0);
  auto iv = inverse_subgradient(quad, 4.0);
  CHECK(iv.lo == doctest::Approx(4.0));
  CHECK(iv.hi == doctest::Approx(4.0));

  auto absf = ConvexScalar::absval();
  auto iv2 = inverse_subgradient(absf, 0.5);
  CHECK(iv2.lo == doctest::Approx(0.0));
  CHECK(iv2.hi == doctest::Approx(0.0));

  auto hinge = make_pwl({0, 1, 2}, {0, 0, 1});
  auto iv3 = inverse_subgradient(hinge, 0.5);
  CHECK(iv3.lo == doctest::Approx(1.0));
  CHECK(iv3.hi == doctest::Approx(1.0));
  CHECK(argmax_oracle(hinge, 0.5) == doctest::Approx(1.0).epsilon(1e-3));

  CHECK_THROWS_AS(inverse_subgradient(absf, 1.5), Error);  // OutsideDualDomain
}

TEST_CASE("convex envelope") {
  SUBCASE("convex input is its own envelope") {
    std::vector<double> s{0, 1, 2, 3}, v{0, 0.5, 2, 4.5};
    auto [env, P] = convex_envelope(s, v);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(env.value(s[i]) == doctest::Approx(v[i]).epsilon(1e-12));
    CHECK(P.points.size() == 4);
  }
  SUBCASE("nonconvex data") {
    std::vector<double> s{0, 1, 2, 3}, v{0, 1, 1, 3};
    auto [env, P] = convex_envelope(s, v);
    REQUIRE(P.points.size() == 3);
    CHECK(P.points[0] == doctest::Approx(0.0));
    CHECK(P.points[1] == doctest::Approx(2.0));
    CHECK(P.points[2] == doctest::Approx(3.0));
    CHECK(env.value(1.0) == doctest::Approx(0.5));
  }
  SUBCASE("double well has zero envelope between its zeros") {
    std::vector<double> s, v;
    for (int i = 0; i <= 300; ++i) {
      double x = 0.01 * i;
      s.push_back(x);
      v.push_back(x * x * (x - 1.0) * (x - 1.0));
    }
    auto [env, P] = convex_envelope(s, v);
    for (double x : {0.0, 0.25, 0.5, 0.99, 1.0})
      CHECK(env.value(x) == doctest::Approx(0.0).epsilon(1e-12));
    // P inside [0,1] holds only the endpoints, up to grid resolution.
    for (double z : P.points)
      if (z > 0.011 && z < 0.989) CHECK(z >= 0.989);
    CHECK(P.distance(0.0) == doctest::Approx(0.0));
    CHECK(P.distance(1.0) <= 0.011);
  }
  SUBCASE("envelope below input, equality on P") {
    std::vector<double> s{0, 0.5, 1, 1.5, 2}, v{1, 0.9, 0.2, 0.6, 0.7};
    auto [env, P] = convex_envelope(s, v);
    for (std::size_t i = 0; i < s.size(); ++i)
      CHECK(env.value(s[i]) <= v[i] + 1e-12);
    for (double z : P.points) {
      std::size_t idx = 0;
      while (s[idx] != z) ++idx;
      CHECK(env.value(z) == doctest::Approx(v[idx]).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(convex_envelope(std::vector<double>{0.0},
                                  std::vector<double>{1.0}),
                  Error);
}

TEST_CASE("nagumo gauges") {
  SUBCASE("autonomous quadratic") {
    auto nag = nagumo_from_g(ConvexScalar::power(0.5, 2.0));
    CHECK(std::isinf(nag.asymptotic_slope));
    CHECK(nag.s0 == doctest::Approx(0.0));
    CHECK(nag.psi.value(3.0) == doctest::Approx(4.5));
  }
  SUBCASE("autonomous linear growth") {
    auto nag = nagumo_from_g(ConvexScalar::absval());
    CHECK(nag.asymptotic_slope == doctest::Approx(1.0));
    CHECK(nag.s0 == doctest::Approx(0.0));
    CHECK(nag.psi.value(2.0) == doctest::Approx(2.0));
  }
  SUBCASE("r-scaled family takes the pointwise min then the hull") {
    auto g_at = [](double r) {
      return ConvexScalar::scaled(ConvexScalar::absval(), 1.0 + r);
    };
    std::vector<double> rs{0.0, 0.5, 1.0, 2.0};
    auto nag = nagumo_from_g(g_at, rs, 8.0);
    CHECK(nag.asymptotic_slope == doctest::Approx(1.0).epsilon(1e-9));
    for (double x : {0.5, 1.0, 4.0})
      CHECK(nag.psi.value(x) == doctest::Approx(x).epsilon(1e-9));
  }
  SUBCASE("degenerate gauge is rejected") {
    auto g_at = [](double) { return ConvexScalar::constant(1.0); };
    std::vector<double> rs{1.0};
    CHECK_THROWS_AS(nagumo_from_g(g_at, rs, 4.0), Error);
  }
}

TEST_CASE("ratio_root") {
  auto nag_half = nagumo_from_g(ConvexScalar::power(0.5, 2.0));
  CHECK(ratio_root(nag_half, 4.0) == doctest::Approx(8.0).epsilon(1e-10));
  auto nag_sq = nagumo_from_g(ConvexScalar::power(1.0, 2.0));
  CHECK(ratio_root(nag_sq, 2.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(ratio_root(nag_sq, 1e-9) == doctest::Approx(1e-9).epsilon(1e-6));
  auto nag_lin = nagumo_from_g(ConvexScalar::absval());
  CHECK_THROWS_AS(ratio_root(nag_lin, 1.0), Error);  // m >= M
}

TEST_CASE("build_phi_a") {
  auto sq = ConvexScalar::power(1.0, 2.0);
  auto pa = build_phi_a(sq, 2.0);
  CHECK(pa.value(2.0) == doctest::Approx(0.0));
  CHECK(pa.value(1.0) == doctest::Approx(0.0));
  CHECK(pa.value(3.0) == doctest::Approx(5.0));

  auto p0 = build_phi_a(sq, 0.0);
  CHECK(p0.value(3.0) == doctest::Approx(9.0));

  auto sl = build_phi_a(ConvexScalar::slog(), 1.0);
  CHECK(sl.value(1.0) == doctest::Approx(0.0));
  double prev = -kInf;
  for (int i = 1; i <= 64; ++i) {
    double s = 4.0 * i / 64;
    Interval d = subgradient(sl, s);
    CHECK(d.lo >= prev - 1e-12);
    prev = d.hi;
  }

  CHECK_THROWS_AS(build_phi_a(make_pwl({0, 1}, {0, 1}), 1.0), Error);
}

TEST_CASE("glued Lagrangian") {
  SUBCASE("linear g with sigma_hat at zero") {
    auto g = ConvexScalar::power(2.0, 1.0);  // 2s, M = 2
    auto nag = nagumo_from_g(g);
    auto params = make_gluing_params(nag, 1.0, 2.0);  // delta = 1/3, zeta = 2
    CHECK(params.delta == doctest::Approx(1.0 / 3.0));
    CHECK(sigma_hat(g, params) == doctest::Approx(0.0));
    auto gt = build_glued(g, params);
    CHECK(gt.value(1.0) == doctest::Approx(4.0 / 3.0));  // tangent (4/3)s
  }
  SUBCASE("g is kept exactly below sigma_hat and estimates hold") {
    auto g = make_pwl({0, 1, 2}, {0, 0.5, 2.5});  // slopes 0.5, 2; M = 2
    auto nag = nagumo_from_g(g);
    double m0 = 1.0;
    auto params = make_gluing_params(nag, m0, 1.0);
    double sh = sigma_hat(g, params);
    CHECK(sh == doctest::Approx(1.0));  // first slope reaching 4/3 starts at 1
    auto gt = build_glued(g, params);
    for (double s : {0.0, 0.3, 0.7, 1.0})
      CHECK(gt.value(s) == doctest::Approx(g.value(s)).epsilon(1e-14));
    // (i) glued stays below g + phi_zeta everywhere
    for (int i = 0; i <= 100; ++i) {
      double s = 6.0 * i / 100;
      CHECK(gt.value(s) <=
            g.value(s) + params.phi_zeta.value(s) + 1e-10);
    }
    // (ii) the linear gap estimate on [sigma1, zeta]
    for (int i = 0; i <= 50; ++i) {
      double s = params.sigma1 + (params.zeta - params.sigma1) * i / 50;
      CHECK(gt.value(s) <=
            g.value(s) - params.delta * (s - params.sigma1) + 1e-10);
    }
    // output is convex: slope scan
    double prev = -kInf;
    for (int i = 1; i <= 120; ++i) {
      double s = 6.0 * i / 120;
      Interval d = subgradient(gt, s);
      CHECK(d.lo >= prev - 1e-9);
      prev = std::isinf(d.hi) ? d.lo : d.hi;
    }
  }
  SUBCASE("slope continuity at the junction for smooth g") {
    GluingParams params;
    params.m0 = 0.5;
    params.delta = 0.5;  // tangent slope 1
    params.sigma1 = 2.0;
    params.zeta = 3.0;
    params.phi_zeta = build_phi_a(ConvexScalar::power(1.0, 2.0), 3.0);
    auto g = ConvexScalar::power(0.5, 2.0);
    CHECK(sigma_hat(g, params) == doctest::Approx(1.0));
    auto gt = build_glued(g, params);
    auto d = subgradient(gt, 1.0);
    CHECK(d.lo == doctest::Approx(1.0));
    CHECK(d.hi == doctest::Approx(1.0));
  }
}

TEST_CASE("Fenchel-Moreau involution on random PWL functions") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_pwl(rng);
    auto fss = conjugate(conjugate(f));
    auto b0 = f.breakpoints();
    auto v0 = f.knot_values();
    auto b2 = fss.breakpoints();
    auto v2 = fss.knot_values();
    REQUIRE(b2.size() == b0.size());
    for (std::size_t i = 0; i < b0.size(); ++i) {
      CHECK(b2[i] == doctest::Approx(b0[i]).epsilon(1e-12));
      CHECK(v2[i] == doctest::Approx(v0[i]).epsilon(1e-12));
    }
    if (std::isinf(f.domain_end()))
      CHECK(fss.domain_end() == doctest::Approx(f.domain_end()));
    else
      CHECK(fss.domain_end() == doctest::Approx(f.domain_end()).epsilon(1e-12));
    // dense value probes
    double S = (std::isinf(f.domain_end()) ? b0.back() + 2.0 : f.domain_end());
    for (int i = 0; i <= 64; ++i) {
      double s = S * i / 64;
      CHECK(fss.value(s) == doctest::Approx(f.value(s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Young-Fenchel inequality and equality at subgradients") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    auto f = random_pwl(rng);
    auto star = conjugate(f);
    double S = std::min(f.domain_end(), f.breakpoints().back() + 2.0);
    for (int i = 0; i <= 20; ++i) {
      double s = S * uni(rng);
      double p = star.domain_end() * std::min(1.0, uni(rng));
      double lhs = f.value(s) + star.value(p);
      if (!std::isinf(lhs)) CHECK(lhs >= p * s - 1e-12);
      // equality at a subgradient selection
      Interval d = subgradient(f, s);
      double psel = std::isinf(d.hi) ? d.lo : d.midpoint();
      if (!std::isinf(psel) && psel >= 0.0 && psel <= star.domain_end()) {
        double eq = f.value(s) + star.value(psel) - psel * s;
        CHECK(std::abs(eq) <= 1e-9);
      }
    }
  }
}

TEST_CASE("subgradient monotonicity in x") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_pwl(rng);
    double S = std::min(f.domain_end(), f.breakpoints().back() + 1.0);
    double x = S * uni(rng), y = S * uni(rng);
    if (x > y) std::swap(x, y);
    if (x == y) continue;
    auto dx = subgradient(f, x);
    auto dy = subgradient(f, y);
    if (!std::isinf(dx.hi)) CHECK(dx.hi <= dy.lo + 1e-12);
  }
}

TEST_CASE("inverse subgradient equals subgradient of the conjugate") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = random_pwl(rng);
    auto star = conjugate(f);
    double pmax = star.domain_end();
    double plim = std::isinf(pmax) ? 4.0 : pmax;
    for (int i = 1; i <= 10; ++i) {
      double p = plim * uni(rng);
      if (p > pmax) continue;
      auto inv = inverse_subgradient(f, p);
      auto ds = subgradient(star, p);
      if (p == 0.0) continue;  // even-extension convention differs at 0
      CHECK(inv.lo == doctest::Approx(ds.lo).epsilon(1e-10));
      if (!std::isinf(inv.hi) && !std::isinf(ds.hi))
        CHECK(inv.hi == doctest::Approx(ds.hi).epsilon(1e-10));
      else
        CHECK(std::isinf(inv.hi) == std::isinf(ds.hi));
    }
  }
}

TEST_CASE("prox agrees with a grid scan") {
  std::mt19937_64 rng(91);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto probe = [&](const ConvexScalar& f, double z, double t) {
    double best = kInf, arg = 0.0;
    double S = std::min(f.domain_end(), 12.0);
    for (int i = 0; i <= 60000; ++i) {
      double s = S * i / 60000;
      double v = f.value(s);
      if (std::isinf(v)) break;
      double obj = v + (s - z) * (s - z) / (2.0 * t);
      if (obj < best) {
        best = obj;
        arg = s;
      }
    }
    return arg;
  };
  for (int trial = 0; trial < 12; ++trial) {
    auto f = random_pwl(rng);
    double z = 6.0 * uni(rng), t = 0.1 + 2.0 * uni(rng);
    CHECK(f.prox(z, t) == doctest::Approx(probe(f, z, t)).epsilon(5e-4));
  }
  auto quad = ConvexScalar::power(0.5, 2.0);
  CHECK(quad.prox(3.0, 1.0) == doctest::Approx(1.5));
  auto absf = ConvexScalar::absval();
  CHECK(absf.prox(3.0, 1.0) == doctest::Approx(2.0));
  CHECK(absf.prox(0.5, 1.0) == doctest::Approx(0.0));
  CHECK(absf.prox(-3.0, 1.0) == doctest::Approx(-2.0));
}
