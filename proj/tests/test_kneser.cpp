#include <doctest.h>

#include <stdexcept>

#include "ekr/kneser.hpp"

using namespace ekr;

TEST_CASE("kneser_params frozen values") {
  KneserParams petersen = kneser_params(5, 2);
  CHECK(petersen.N == 10);
  CHECK(petersen.D == 3);
  CHECK(petersen.lambda_min == -2);
  CHECK(petersen.edge_count == 15);

  KneserParams p123 = kneser_params(12, 3);
  CHECK(p123.N == 220);
  CHECK(p123.D == 84);
  CHECK(p123.lambda_min == -28);
  CHECK(p123.edge_count == 9240);

  KneserParams p125 = kneser_params(12, 5);
  CHECK(p125.N == 792);
  CHECK(p125.D == 21);
  CHECK(p125.lambda_min == -15);
  CHECK(p125.edge_count == 8316);

  // lambda_min = -(k/(n-k)) D as an exact identity
  for (int n = 4; n <= 20; ++n)
    for (int k = 2; 2 * k <= n; ++k) {
      KneserParams kp = kneser_params(n, k);
      CHECK(kp.lambda_min * (n - k) == -BigInt(k) * kp.D);
    }
}

TEST_CASE("kneser_params rejects invalid shapes") {
  CHECK_THROWS_AS(kneser_params(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(kneser_params(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(kneser_params(65, 2), std::invalid_argument);
}

TEST_CASE("neighbors are exactly the disjoint sets") {
  for (auto [n, k] : {std::pair{5, 2}, std::pair{7, 3}, std::pair{9, 4}}) {
    KneserParams kp = kneser_params(n, k);
    const std::uint64_t N = static_cast<std::uint64_t>(kp.N);
    for (std::uint64_t r = 0; r < N; r += 3) {
      KSubset v = colex_unrank(r, n, k);
      std::vector<KSubset> nb = neighbors(v);
      CHECK(nb.size() == static_cast<std::uint64_t>(kp.D));
      std::uint64_t prev_rank = 0;
      bool first = true;
      for (const KSubset& u : nb) {
        CHECK(disjoint(u, v));
        std::uint64_t ur = colex_rank(u);
        if (!first) CHECK(ur > prev_rank);  // colex order
        prev_rank = ur;
        first = false;
      }
      // oracle: count disjoint sets by full scan
      std::uint64_t cnt = 0;
      for (std::uint64_t q = 0; q < N; ++q)
        if ((colex_unrank(q, n, k).bits & v.bits) == 0) ++cnt;
      CHECK(cnt == nb.size());
    }
  }
}

TEST_CASE("is_edge is disjointness") {
  KSubset a = make_ksubset({1, 2}, 5);
  KSubset b = make_ksubset({3, 4}, 5);
  KSubset c = make_ksubset({2, 3}, 5);
  CHECK(is_edge(a, b));
  CHECK(!is_edge(a, c));
}

TEST_CASE("principal_family is an independent family of size C(n-1,k-1)") {
  for (auto [n, k] : {std::pair{5, 2}, std::pair{8, 3}}) {
    for (int i = 1; i <= n; ++i) {
      std::vector<KSubset> star = principal_family(i, n, k);
      CHECK(star.size() == binomial_u64(n - 1, k - 1));
      for (std::size_t a = 0; a < star.size(); ++a) {
        CHECK(star[a].contains(i));
        for (std::size_t b = a + 1; b < star.size(); ++b) CHECK(!disjoint(star[a], star[b]));
      }
    }
  }
  CHECK_THROWS_AS(principal_family(0, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(principal_family(6, 5, 2), std::invalid_argument);
}

TEST_CASE("materialize builds the disjointness graph with colex labels") {
  KneserParams kp = kneser_params(6, 2);
  ExplicitGraph g = materialize(kp);
  CHECK(g.vertex_count() == 15);
  CHECK(g.edge_count() == 45);
  CHECK(g.is_regular());
  CHECK(g.degree(0) == 6);
  REQUIRE(g.has_kneser_labels());
  for (int u = 0; u < g.vertex_count(); ++u) {
    CHECK(g.kneser_ranks()[static_cast<std::size_t>(u)] == static_cast<std::uint64_t>(u));
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      bool dj = (colex_unrank(static_cast<std::uint64_t>(u), 6, 2).bits &
                 colex_unrank(static_cast<std::uint64_t>(v), 6, 2).bits) == 0;
      CHECK(g.has_edge(u, v) == dj);
    }
  }
  // Petersen is triangle-free; K(6,2) is not
  CHECK(materialize(kneser_params(5, 2)).triangle_count() == 0);
  CHECK(g.triangle_count() == 15);  // perfect matchings of K6
}

TEST_CASE("materialize refuses huge instances") {
  CHECK_THROWS_AS(materialize(kneser_params(30, 8)), std::length_error);
}
