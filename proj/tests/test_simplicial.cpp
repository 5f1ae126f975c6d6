#include <doctest.h>

#include "kholo/kholo.hpp"
#include "oracles.hpp"

using namespace kholo;

namespace {

RationalVector pt(std::initializer_list<Rational> c) {
  RationalVector v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index k = 0;
  for (const auto& x : c) v(k++) = x;
  return v;
}

RationalVector pt2(long x, long y) { return pt({Rational(x), Rational(y)}); }

SimplicialComplex unit_square() {
  return SimplicialComplex(2, {pt2(0, 0), pt2(1, 0), pt2(1, 1), pt2(0, 1)}, {{0, 1, 2}, {0, 2, 3}});
}

// rows x cols squares, each split along the same diagonal
SimplicialComplex grid(std::size_t rows, std::size_t cols) {
  std::vector<RationalVector> v;
  for (std::size_t r = 0; r <= rows; ++r)
    for (std::size_t c = 0; c <= cols; ++c) v.push_back(pt2(static_cast<long>(c), static_cast<long>(r)));
  auto at = [&](std::size_t r, std::size_t c) { return r * (cols + 1) + c; };
  std::vector<Simplex> top;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      top.push_back({at(r, c), at(r, c + 1), at(r + 1, c + 1)});
      top.push_back({at(r, c), at(r + 1, c), at(r + 1, c + 1)});
    }
  return SimplicialComplex(2, std::move(v), std::move(top));
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidDocument;
}

}  // namespace

TEST_SUITE("simplicial") {
  TEST_CASE("facet adjacency examples") {
    const auto sq = facet_adjacency(unit_square());
    CHECK(sq.edge_count() == 1);
    CHECK(sq.neighbours[0] == std::vector<std::size_t>{1});

    const SimplicialComplex bowtie(2, {pt2(0, 0), pt2(1, 0), pt2(0, 1), pt2(-1, 0), pt2(0, -1)}, {{0, 1, 2}, {0, 3, 4}});
    CHECK(facet_adjacency(bowtie).edge_count() == 0);

    const SimplicialComplex g = grid(3, 3);
    REQUIRE(g.top().size() == 18);
    // 9 diagonals inside the squares plus 12 interior grid segments
    CHECK(facet_adjacency(g).edge_count() == oracle::facet_pairs(g));
    CHECK(facet_adjacency(g).edge_count() == 21);
  }

  TEST_CASE("faces") {
    const SimplicialComplex sq = unit_square();
    CHECK(sq.faces(0).size() == 4);
    CHECK(sq.faces(1).size() == 5);
    CHECK(sq.faces(2).size() == 2);
    CHECK(sq.is_face({0, 2}));
    CHECK_FALSE(sq.is_face({1, 3}));
  }

  TEST_CASE("complex validation") {
    CHECK(kind_of([] { SimplicialComplex(2, {pt2(0, 0), pt2(1, 1), pt2(2, 2)}, {{0, 1, 2}}); }) == ErrorKind::InvalidComplex);
    // overlapping triangles
    CHECK(kind_of([] {
            SimplicialComplex(2, {pt2(0, 0), pt2(2, 0), pt2(0, 2), pt2(1, 1), pt2(2, 2)}, {{0, 1, 2}, {0, 1, 4}});
          }) == ErrorKind::InvalidComplex);
    // a vertex in the middle of a neighbour's edge
    CHECK(kind_of([] {
            SimplicialComplex(2, {pt2(0, 0), pt2(2, 0), pt2(0, 2), pt2(1, 0), pt2(1, -1)}, {{0, 1, 2}, {0, 3, 4}});
          }) == ErrorKind::InvalidComplex);
    CHECK(kind_of([] { SimplicialComplex(2, {pt2(0, 0), pt2(1, 0), pt2(0, 1)}, {{0, 1, 2}, {2, 1, 0}}); }) ==
          ErrorKind::InvalidComplex);
    CHECK(kind_of([] { SimplicialComplex(2, {pt2(0, 0), pt2(1, 0), pt2(0, 1)}, {{0, 1}}); }) == ErrorKind::InvalidComplex);
    CHECK(kind_of([] { SimplicialComplex(2, {pt2(0, 0), pt2(1, 0), pt2(0, 1)}, {{0, 1, 5}}); }) == ErrorKind::InvalidComplex);
    CHECK(kind_of([] { SimplicialComplex(2, {pt2(0, 0), pt({Rational(1)}), pt2(0, 1)}, {{0, 1, 2}}); }) ==
          ErrorKind::InvalidComplex);
  }

  TEST_CASE("subcomplex validation and closure") {
    const SimplicialComplex sq = unit_square();
    CHECK(kind_of([&] { Subcomplex(sq, {{0, 2}}, 1, 3); }) == ErrorKind::InvalidComplex);
    CHECK(kind_of([&] { Subcomplex(sq, {{1, 3}}, 0, 2); }) == ErrorKind::InvalidComplex);
    CHECK(kind_of([&] { Subcomplex(sq, {}, 1, 1); }) == ErrorKind::InvalidEndpoints);
    CHECK(kind_of([&] { Subcomplex(sq, {}, 1, 9); }) == ErrorKind::InvalidEndpoints);
    const Subcomplex ok(sq, {{3}}, 0, 1);
    CHECK(ok.marked() == std::set<Simplex>{{0}, {1}, {3}});

    const SimplicialComplex tet(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})}, {{0, 1, 2, 3}});
    const Subcomplex edge(tet, {{2, 3}}, 0, 1);
    CHECK(edge.marked() == std::set<Simplex>{{0}, {1}, {2}, {3}, {2, 3}});
    CHECK(kind_of([&] { Subcomplex(tet, {{1, 2, 3}}, 0, 1); }) == ErrorKind::InvalidComplex);
  }

  TEST_CASE("route within one triangle") {
    const SimplicialComplex sq = unit_square();
    const Subcomplex marked(sq, {{3}}, 0, 1);
    const PLPath path = route_path(sq, marked);
    REQUIRE(path.waypoints.size() == 3);
    CHECK(path.waypoints[0].position == pt2(0, 0));
    CHECK(path.waypoints[1].position == pt({Rational(2, 3), Rational(1, 3)}));
    CHECK(path.waypoints[1].kind == WaypointKind::TopBarycenter);
    CHECK(path.waypoints[2].position == pt2(1, 0));
    CHECK(verify_avoidance(path, sq, marked).avoids);
  }

  TEST_CASE("route across the diagonal") {
    const SimplicialComplex sq = unit_square();
    const Subcomplex marked(sq, {{2}}, 1, 3);
    const PLPath path = route_path(sq, marked);
    REQUIRE(path.waypoints.size() == 5);
    CHECK(path.waypoints[0].position == pt2(1, 0));
    CHECK(path.waypoints[1].position == pt({Rational(2, 3), Rational(1, 3)}));
    CHECK(path.waypoints[2].position == pt({Rational(1, 2), Rational(1, 2)}));
    CHECK(path.waypoints[2].kind == WaypointKind::FacetBarycenter);
    CHECK(path.waypoints[2].simplex == Simplex{0, 2});
    CHECK(path.waypoints[3].position == pt({Rational(1, 3), Rational(2, 3)}));
    CHECK(path.waypoints[4].position == pt2(0, 1));
    CHECK(verify_avoidance(path, sq, marked).avoids);
  }

  TEST_CASE("disconnected endpoints") {
    const SimplicialComplex apart(2, {pt2(0, 0), pt2(1, 0), pt2(0, 1), pt2(5, 5), pt2(6, 5), pt2(5, 6)}, {{0, 1, 2}, {3, 4, 5}});
    const Subcomplex marked(apart, {}, 0, 4);
    CHECK(kind_of([&] { route_path(apart, marked); }) == ErrorKind::Disconnected);
    const SimplicialComplex loose(2, {pt2(0, 0), pt2(1, 0), pt2(0, 1), pt2(7, 7)}, {{0, 1, 2}});
    CHECK(kind_of([&] { route_path(loose, Subcomplex(loose, {}, 0, 3)); }) == ErrorKind::InvalidEndpoints);
  }

  TEST_CASE("avoidance detects a crossing") {
    // four triangles fanned around the centre (1, 1) of [0, 2]^2
    const SimplicialComplex fan(2, {pt2(0, 0), pt2(2, 0), pt2(2, 2), pt2(0, 2), pt2(1, 1)},
                                {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {0, 3, 4}});
    const Subcomplex marked(fan, {{4}}, 0, 2);
    PLPath straight;
    straight.waypoints = {{pt2(0, 0), WaypointKind::Endpoint, {0}}, {pt2(2, 2), WaypointKind::Endpoint, {2}}};
    const auto check = verify_avoidance(straight, fan, marked);
    CHECK_FALSE(check.avoids);
    REQUIRE(check.violation.has_value());
    CHECK(check.violation->face == Simplex{4});
    CHECK(check.violation->segment == 0);

    const auto routed = route_path(fan, marked);
    CHECK(verify_avoidance(routed, fan, marked).avoids);
    CHECK(verify_avoidance(routed, fan, Subcomplex(fan, {}, 0, 2)).avoids);

    // passing through the start vertex again is not exempt
    PLPath back;
    back.waypoints = {{pt2(0, 0), WaypointKind::Endpoint, {0}},
                      {pt({Rational(1, 2), Rational(1, 4)}), WaypointKind::TopBarycenter, {0, 1, 4}},
                      {pt2(0, 0), WaypointKind::Endpoint, {0}},
                      {pt2(2, 2), WaypointKind::Endpoint, {2}}};
    CHECK_FALSE(verify_avoidance(back, fan, Subcomplex(fan, {}, 0, 2)).avoids);
  }

  TEST_CASE("routing in three dimensions") {
    const SimplicialComplex two(3, {pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1}), pt({1, 1, 1})},
                                {{0, 1, 2, 3}, {1, 2, 3, 4}});
    const Subcomplex marked(two, {{1, 2}}, 0, 4);
    const PLPath path = route_path(two, marked);
    CHECK(path.waypoints.size() == 5);
    CHECK(path.waypoints[2].simplex == Simplex{1, 2, 3});
    CHECK(verify_avoidance(path, two, marked).avoids);
  }

  TEST_CASE("randomized grids") {
    corpus::Rng rng(71);
    std::size_t routed = 0, disconnected = 0;
    for (int k = 0; k < 100; ++k) {
      const auto g = corpus::random_grid(rng);
      REQUIRE(g.complex.top().size() <= 32);
      REQUIRE(facet_adjacency(g.complex).edge_count() == oracle::facet_pairs(g.complex));
      const Subcomplex marked(g.complex, g.marked, g.from, g.to);
      const bool connected = oracle::facet_connected(g.complex, g.from, g.to);
      if (!connected) {
        REQUIRE(kind_of([&] { route_path(g.complex, marked); }) == ErrorKind::Disconnected);
        ++disconnected;
        continue;
      }
      const PLPath path = route_path(g.complex, marked);
      ++routed;
      const auto& wp = path.waypoints;
      REQUIRE(wp.front().position == g.complex.vertices()[g.from]);
      REQUIRE(wp.back().position == g.complex.vertices()[g.to]);
      for (std::size_t i = 0; i + 1 < wp.size(); ++i) REQUIRE_FALSE(wp[i].position == wp[i + 1].position);
      REQUIRE(verify_avoidance(path, g.complex, marked).avoids);

      // independent check: no marked vertex lies on a segment except at the two ends
      for (const auto& face : marked.marked()) {
        const RationalVector& q = g.complex.vertices()[face[0]];
        for (std::size_t i = 0; i + 1 < wp.size(); ++i) {
          if (!oracle::on_segment_2d(wp[i].position, wp[i + 1].position, q)) continue;
          const bool at_start = i == 0 && q == wp.front().position;
          const bool at_end = i + 2 == wp.size() && q == wp.back().position;
          REQUIRE((at_start || at_end));
        }
      }

      // top barycenters have equal positive barycentric coordinates
      for (const auto& w : wp) {
        if (w.kind != WaypointKind::TopBarycenter) continue;
        const auto& v = g.complex.vertices();
        RationalMatrix m(3, 3);
        RationalVector rhs(3);
        for (int i = 0; i < 3; ++i) {
          m.col(i).head(2) = v[w.simplex[static_cast<std::size_t>(i)]];
          m(2, i) = Rational(1);
        }
        rhs.head(2) = w.position;
        rhs(2) = Rational(1);
        const auto lambda = lp::solve_square(m, rhs);
        REQUIRE(lambda.has_value());
        for (int i = 0; i < 3; ++i) REQUIRE((*lambda)(i) == Rational(1, 3));
      }

      const PLPath again = route_path(g.complex, marked);
      REQUIRE(again.waypoints.size() == wp.size());
      for (std::size_t i = 0; i < wp.size(); ++i) REQUIRE(again.waypoints[i].position == wp[i].position);
    }
    CHECK(routed > 50);
    CHECK(disconnected > 0);
  }

  TEST_CASE("exact lp") {
    // max x + y subject to x + 2y + s = 4, 3x + y + s2 = 6
    RationalMatrix a(2, 4);
    a << Rational(1), Rational(2), Rational(1), Rational(0), Rational(3), Rational(1), Rational(0), Rational(1);
    RationalVector b(2), c(4);
    b << Rational(4), Rational(6);
    c << Rational(1), Rational(1), Rational(0), Rational(0);
    CHECK(lp::maximize(a, b, c) == std::optional<Rational>(Rational(14, 5)));
    RationalVector infeasible(2);
    infeasible << Rational(-1), Rational(6);
    CHECK_FALSE(lp::maximize(a, infeasible, c).has_value());
  }
}
