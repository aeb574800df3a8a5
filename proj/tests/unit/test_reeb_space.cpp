#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "reebforge/error.hpp"
#include "reebforge/reeb.hpp"

using namespace testing;

namespace {

BettiVector reeb_betti(const SimplicialMap& f) {
  return betti(*reeb_space(f, {.build_quotient_map = false}).realization);
}

std::vector<SimplicialMap> test_maps() {
  std::vector<SimplicialMap> maps;
  maps.push_back(disk_collapse(1));
  maps.push_back(disk_collapse(2));
  maps.push_back(torus_height().map);
  maps.push_back(identity_map(share(minimal_torus())));
  maps.push_back(constant_map(share(circle(4))));
  maps.push_back(constant_map(share(disjoint_union(circle(3), full_simplex(3)))));
  for (std::uint64_t seed = 0; seed < 25; ++seed) maps.push_back(random_map(seed));
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    maps.push_back(random_map(seed, {.max_vertices = 12, .connected = false}));
  }
  return maps;
}

}  // namespace

TEST_CASE("identity map: Reeb space is the domain") {
  for (const auto& k : {minimal_torus(), tetrahedron_boundary(), circle(5)}) {
    const auto f = identity_map(share(k));
    const auto r = reeb_space(f);
    CHECK(r.strata.size() == k.size());
    CHECK(betti(*r.realization) == betti(k));
  }
}

TEST_CASE("disk collapse n=2: Reeb space is a sphere") {
  const auto f = disk_collapse(2);
  CHECK(betti(f.domain()) == bv({1}));
  CHECK(reeb_betti(f) == bv({1, 0, 1}));
}

TEST_CASE("disk collapse n=1: Reeb space is an interval") {
  CHECK(reeb_betti(disk_collapse(1)) == bv({1}));
}

TEST_CASE("fiber_components_at examples") {
  auto k = share(disjoint_union(circle(3), full_simplex(3)));
  const auto constant = constant_map(k);
  const Vertex the_point[] = {0};
  CHECK(fiber_components_at(constant, the_point).size() == vertex_components(*k).size());

  const auto d1 = disk_collapse(1);
  const Vertex a[] = {0};
  const auto over_a = fiber_components_at(d1, a);
  REQUIRE(over_a.size() == 2);
  CHECK(over_a.classes[0].front() == 0);  // v0
  CHECK(over_a.classes[1].front() == 3);  // v3
  const Vertex ab[] = {0, 1};
  CHECK(fiber_components_at(d1, ab).size() == 1);

  const Vertex abc[] = {0, 1, 2};
  try {
    fiber_components_at(d1, abc);
    FAIL("expected UnknownSimplex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownSimplex);
  }
  CHECK_THROWS_AS(fiber_components_at(d1, SimplexId{99}), Error);
}

TEST_CASE("strata match barycenter fibers and vertex full subcomplexes") {
  for (const auto& f : test_maps()) {
    CHECK(vertex_strata_mismatches(f).empty());
    for (SimplexId tau = 0; tau < f.codomain().size(); ++tau) {
      const Partition strata = fiber_components_at(f, tau);
      const auto fibers = oracle::barycenter_fiber_components(f, tau);
      REQUIRE(strata.size() == fibers.size());
      // Each fiber class sits inside exactly one stratum class, bijectively.
      std::vector<int> used(strata.size(), 0);
      for (const auto& cls : fibers) {
        int owner = -1;
        for (std::size_t c = 0; c < strata.size(); ++c) {
          const auto& members = strata.classes[c];
          if (std::binary_search(members.begin(), members.end(), cls.front())) owner = static_cast<int>(c);
        }
        REQUIRE(owner >= 0);
        for (SimplexId s : cls) {
          CHECK(std::binary_search(strata.classes[owner].begin(), strata.classes[owner].end(), s));
        }
        CHECK(used[owner]++ == 0);
      }
    }
  }
}

TEST_CASE("quotient map is valid, surjective and commutes") {
  for (const auto& f : test_maps()) {
    const auto r = reeb_space(f);
    REQUIRE(r.quotient_map);
    CHECK(r.quotient_map->codomain().vertex_count() == r.strata.size());
    const auto report = verify_quotient(f);
    CAPTURE(report.failures.size());
    CHECK(report.ok());
  }
}

TEST_CASE("verify_quotient on a constant map from two components") {
  const auto f = constant_map(share(disjoint_union(circle(3), circle(4))));
  const auto report = verify_quotient(f);
  CHECK(report.strata == 2);
  CHECK(report.ok());
}

TEST_CASE("idempotence: the Reeb space of the quotient map is itself") {
  for (const auto& f : test_maps()) {
    const auto r = reeb_space(f);
    CHECK(reeb_betti(*r.quotient_map) == betti(*r.realization));
  }
}

TEST_CASE("b1 inequality") {
  const auto torus = b1_inequality_check(torus_height().map);
  REQUIRE(torus.components.size() == 1);
  CHECK(torus.components[0].b1_domain == 2);
  CHECK(torus.components[0].b1_reeb == 1);
  CHECK(torus.holds());

  const auto id = b1_inequality_check(identity_map(share(minimal_torus())));
  CHECK(id.components[0].b1_reeb == id.components[0].b1_domain);

  const auto disk = b1_inequality_check(disk_collapse(2));
  CHECK(disk.components[0].b1_domain == 0);
  CHECK(disk.components[0].b1_reeb == 0);
  CHECK(disk.holds());

  for (const auto& f : test_maps()) CHECK(b1_inequality_check(f).holds());
}

TEST_CASE("b1 check runs per component") {
  const auto f = constant_map(share(disjoint_union(circle(3), minimal_torus())));
  const auto report = b1_inequality_check(f);
  REQUIRE(report.components.size() == 2);
  CHECK(report.components[0].b1_domain == 1);
  CHECK(report.components[1].b1_domain == 2);
  CHECK(report.holds());
}

TEST_CASE("product law: Reeb Betti numbers convolve") {
  const std::vector<SimplicialMap> factors = {disk_collapse(1), disk_collapse(2),
                                              constant_map(share(circle(3))),
                                              identity_map(share(circle(3)))};
  for (const auto& a : factors) {
    for (const auto& b : factors) {
      if (a.domain().size() * b.domain().size() > 2000) continue;
      const auto product = staircase_product(monotone_relabel(a), monotone_relabel(b));
      CHECK(reeb_betti(product) == convolve(reeb_betti(a), reeb_betti(b)));
    }
  }
}

TEST_CASE("strata are listed canonically") {
  const auto r = reeb_space(disk_collapse(2));
  for (std::size_t i = 1; i < r.strata.size(); ++i) {
    const auto& p = r.strata[i - 1];
    const auto& q = r.strata[i];
    CHECK((p.tau < q.tau || (p.tau == q.tau && p.component < q.component)));
  }
  // two runs, same output
  const auto again = reeb_space(disk_collapse(2));
  CHECK(again.strata == r.strata);
  CHECK(*again.realization == *r.realization);
}
