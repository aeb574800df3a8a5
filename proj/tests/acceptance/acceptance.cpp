// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "reebforge/bounds.hpp"
#include "reebforge/error.hpp"
#include "reebforge/fiber_power.hpp"
#include "reebforge/fixtures.hpp"
#include "reebforge/homology.hpp"
#include "reebforge/reeb.hpp"
#include "reebforge/reeb_graph.hpp"

using namespace reebforge;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock budgets, seconds.
constexpr double kDiskBudget = 5.0;
constexpr double kProductBudget = 600.0;
constexpr double kKunnethBudget = 10.0;
constexpr double kDescentBudget = 300.0;

constexpr int kRandomB1Maps = 100;
constexpr int kRandomDescentMaps = 50;
// Size budget for the descent sweep: at 10 vertices one seed maps 68
// simplices onto a point and its threefold power alone has 68^3 cells.
constexpr std::size_t kDescentMapVertices = 8;
constexpr int kRandomFunctions = 100;
constexpr std::size_t kDescentPMax = 2;
constexpr std::size_t kOracleMaxMaximal = 6;
// Six mutually overlapping triangles give nerve skeletons of ~370k simplices.
constexpr std::size_t kOracleCellCap = 1'000'000;

struct Criterion {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      if (ok) notes << "; failed: ";
      else notes << ", ";
      notes << what;
      ok = false;
    }
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string str(const BettiVector& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.b.size(); ++i) s += (i ? "," : "") + std::to_string(b.b[i]);
  return s + ")";
}

BettiVector reeb_betti(const SimplicialMap& f) {
  return betti(*reeb_space(f, {.build_quotient_map = false}).realization);
}

int failures = 0;

void report(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.2fs", seconds_since(start));
  std::cout << (c.ok ? "PASS" : "FAIL") << " [" << number << "] " << title << " (" << elapsed << ")"
            << c.notes.str() << std::endl;
  if (!c.ok) ++failures;
}

SimplicialComplex full_simplex(std::size_t n) {
  Simplex s(n);
  std::iota(s.begin(), s.end(), Vertex{0});
  return SimplicialComplex::generated_by(n, {s});
}

std::vector<SimplicialComplex> complex_suite() {
  std::vector<SimplicialComplex> out = {
      SimplicialComplex(),
      SimplicialComplex::validate(1, {}),
      full_simplex(2),
      full_simplex(3),
      full_simplex(4),
      circle(3),
      circle(6),
      tetrahedron_boundary(),
      minimal_torus(),
      disjoint_union(circle(4), tetrahedron_boundary()),
      staircase_product(circle(3), circle(3)),
      staircase_product(circle(3), tetrahedron_boundary()),
      disk_collapse(1).domain(),
      disk_collapse(2).domain(),
      torus_height().map.domain(),
  };
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    out.push_back(random_map(seed, {.max_vertices = 12, .connected = seed % 2 == 0}).domain());
  }
  return out;
}

std::vector<std::pair<std::string, SimplicialMap>> fixture_maps() {
  std::vector<std::pair<std::string, SimplicialMap>> out;
  out.emplace_back("disk_collapse(1)", disk_collapse(1));
  out.emplace_back("disk_collapse(2)", disk_collapse(2));
  out.emplace_back("product_power(disk_collapse(1), 2)", product_power(disk_collapse(1), 2));
  out.emplace_back("torus_height", torus_height().map);
  out.emplace_back("identity(torus)", identity_map(share(minimal_torus())));
  out.emplace_back("identity(circle)", identity_map(share(circle(3))));
  out.emplace_back("constant(circle)", constant_map(share(circle(3))));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    out.emplace_back("random_map(" + std::to_string(seed) + ")",
                     random_map(seed, {.max_vertices = 10, .connected = seed % 4 != 0}));
  }
  return out;
}

// Components of the full subcomplex on the given vertices, by a plain
// edge walk; each component is returned as its sorted vertex list.
std::vector<std::vector<Vertex>> full_subcomplex_components(const SimplicialComplex& k,
                                                            const std::vector<Vertex>& keep) {
  std::vector<char> in(k.vertex_count(), 0);
  for (Vertex v : keep) in[v] = 1;
  std::vector<std::vector<Vertex>> adjacent(k.vertex_count());
  for (SimplexId s = 0; s < k.size(); ++s) {
    const auto e = k.simplex(s);
    if (e.size() == 2 && in[e[0]] && in[e[1]]) {
      adjacent[e[0]].push_back(e[1]);
      adjacent[e[1]].push_back(e[0]);
    }
  }
  std::vector<char> seen(k.vertex_count(), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v : keep) {
    if (seen[v]) continue;
    std::vector<Vertex> comp, stack = {v};
    seen[v] = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : adjacent[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main() {
  report(1, "disk collapse: betti(domain) = (1), betti(Reeb) = (1,0,1)", [](Criterion& c) {
    const auto start = Clock::now();
    const auto f = disk_collapse(2);
    const auto domain = betti(f.domain());
    const auto reeb = reeb_betti(f);
    const double t = seconds_since(start);
    c.notes << ": domain " << str(domain) << ", Reeb " << str(reeb);
    c.expect(domain == make_betti({1}), "domain Betti");
    c.expect(reeb == make_betti({1, 0, 1}), "Reeb Betti");
    c.expect(t < kDiskBudget, "runtime " + std::to_string(t) + "s over budget");
  });

  report(2, "product blow-up: Reeb(product_power(disk_collapse(2), 2)) = (1,0,2,0,1)", [](Criterion& c) {
    const auto start = Clock::now();
    const auto reeb = reeb_betti(product_power(disk_collapse(2), 2));
    const double t = seconds_since(start);
    c.notes << ": Reeb " << str(reeb) << ", total " << reeb.total();
    c.expect(reeb == make_betti({1, 0, 2, 0, 1}), "Reeb Betti");
    c.expect(reeb.total() == 4, "total 2^k");
    c.expect(t < kProductBudget, "product runtime over budget");

    const auto kstart = Clock::now();
    const std::vector<SimplicialMap> factors = {disk_collapse(1), disk_collapse(2), constant_map(share(circle(3))),
                                                identity_map(share(circle(3))), torus_height().map};
    int checked = 0;
    for (const auto& a : factors) {
      for (const auto& b : factors) {
        if (a.domain().size() * b.domain().size() > 2500) continue;
        const auto product = staircase_product(monotone_relabel(a), monotone_relabel(b));
        c.expect(reeb_betti(product) == convolve(reeb_betti(a), reeb_betti(b)), "Kunneth convolution");
        ++checked;
      }
    }
    const double kt = seconds_since(kstart);
    c.notes << ", Kunneth pairs " << checked << " in " << kt << "s";
    c.expect(kt < kKunnethBudget, "Kunneth runtime over budget");
  });

  report(3, "b1(Reeb) <= b1(domain) on torus_height and 100 random connected maps", [](Criterion& c) {
    const auto torus = b1_inequality_check(torus_height().map);
    c.expect(torus.holds(), "torus_height");
    c.expect(torus.components.size() == 1 && torus.components[0].b1_reeb == 1 &&
                 torus.components[0].b1_domain == 2,
             "torus values 1 <= 2");
    for (int seed = 0; seed < kRandomB1Maps; ++seed) {
      const auto f = random_map(static_cast<std::uint64_t>(seed), {.max_vertices = 10, .connected = true});
      c.expect(vertex_components(f.domain()).size() == 1, "random map connected, seed " + std::to_string(seed));
      c.expect(b1_inequality_check(f).holds(), "seed " + std::to_string(seed));
    }
  });

  report(4, "descent inequality for p <= 2", [](Criterion& c) {
    const auto start = Clock::now();
    const auto disk = descent_check(disk_collapse(2), DescentTarget::Reeb, kDescentPMax);
    c.expect(disk.holds(), "disk_collapse(2) onto its Reeb space");
    c.expect(descent_check(disk_collapse(2), DescentTarget::Image, kDescentPMax).holds(),
             "disk_collapse(2) onto its image");
    for (const auto& k : {minimal_torus(), tetrahedron_boundary(), circle(4)}) {
      const auto id = descent_check(identity_map(share(k)), DescentTarget::Image, kDescentPMax);
      c.expect(id.holds(), "identity");
    }
    const auto constant = descent_check(constant_map(share(circle(3))), DescentTarget::Image, kDescentPMax);
    c.expect(constant.holds(), "constant circle");
    c.expect(constant.power_betti.size() > 1 && constant.power_betti[1] == make_betti({1, 2, 1}),
             "b(S1 x S1) = (1,2,1)");
    for (int seed = 0; seed < kRandomDescentMaps; ++seed) {
      const auto f = random_map(static_cast<std::uint64_t>(seed), {.max_vertices = kDescentMapVertices});
      c.expect(descent_check(f, DescentTarget::Image, kDescentPMax).holds(), "image, seed " + std::to_string(seed));
      c.expect(descent_check(f, DescentTarget::Reeb, kDescentPMax).holds(), "reeb, seed " + std::to_string(seed));
    }
    const double t = seconds_since(start);
    c.notes << ": random maps with <= " << kDescentMapVertices << " vertices, default cell cap; disk fiber powers";
    for (const auto& b : disk.power_betti) c.notes << " " << str(b);
    c.expect(t < kDescentBudget, "runtime over budget");
  });

  report(5, "bound evaluators", [](Criterion& c) {
    c.expect(bound_closed(1, 2, 1) == 28, "closed(1,2,1) = 28");
    c.expect(bound_general(1, 2, 1) == 40, "general(1,2,1) = 40");
    c.expect(bound_sign_components(1, 1, 1) == 4, "sign(1,1,1) = 4");
    const std::vector<std::pair<std::vector<const char*>, std::size_t>> families = {
        {{"X"}, 3}, {{"X", "X-1"}, 5}, {{"X^2-1"}, 5}};
    for (const auto& [texts, expected] : families) {
      std::vector<Polynomial> polys;
      int degree = 1;
      for (const char* t : texts) {
        polys.push_back(Polynomial::parse(t));
        degree = std::max(degree, polys.back().degree());
      }
      const std::size_t count = univariate_sign_components(polys);
      c.notes << (expected == 3 ? ": counts " : " ") << count;
      c.expect(count == expected, "univariate count");
      c.expect(BigInt(static_cast<unsigned long>(count)) <= bound_sign_components(polys.size(), degree, 1),
               "count within bound");
    }
  });

  report(6, "Reeb bound: exact parametric evaluation (comparison reported, not asserted)", [](Criterion& c) {
    c.expect(bound_reeb(2, 2, 1, 1, 1) == 16, "(2*2)^((1+1)^1) = 16");
    c.expect(bound_reeb(1, 1, 3, 3, 2) == 1, "sd = 1 gives 1");
    for (unsigned long s = 1; s <= 3; ++s) {
      for (unsigned long d = 1; d <= 3; ++d) {
        for (unsigned long n = 1; n <= 2; ++n) {
          for (unsigned long m = 1; m <= 2; ++m) {
            for (unsigned long cc = 1; cc <= 2; ++cc) {
              unsigned long exponent = 1;
              for (unsigned long i = 0; i < cc; ++i) exponent *= n + m;
              BigInt expected;
              mpz_ui_pow_ui(expected.get_mpz_t(), s * d, exponent);
              c.expect(bound_reeb(s, d, n, m, cc) == expected, "exact power");
            }
          }
        }
      }
    }
    // disk_collapse(2): s, d and the constant are not defined for a
    // simplicial map, so this line is informational only.
    const auto total = reeb_betti(disk_collapse(2)).total();
    c.notes << ": b(Reeb(disk_collapse(2))) = " << total << " vs bound_reeb(2,2,2,2,1) = "
            << to_string(bound_reeb(2, 2, 2, 2, 1));
  });

  report(7, "oracle equivalence", [](Criterion& c) {
    for (int seed = 0; seed < kRandomFunctions; ++seed) {
      const auto g = random_function(static_cast<std::uint64_t>(seed), {.max_vertices = 10, .connected = seed % 3 != 0});
      const auto graph = reeb_graph(g).betti();
      const auto space = reeb_betti(level_subdivision(g).map);
      c.expect(graph == space, "reeb_graph vs reeb_space, seed " + std::to_string(seed));
    }

    std::size_t vertex_checks = 0;
    for (const auto& [name, f] : fixture_maps()) {
      for (Vertex w = 0; w < f.codomain().vertex_count(); ++w) {
        std::vector<Vertex> preimage;
        for (Vertex v = 0; v < f.domain().vertex_count(); ++v) {
          if (f(v) == w) preimage.push_back(v);
        }
        const Vertex tau[] = {w};
        const Partition strata = fiber_components_at(f, tau);
        std::vector<std::vector<Vertex>> from_strata;
        for (const auto& cls : strata.classes) {
          std::vector<Vertex> verts;
          for (SimplexId s : cls) {
            if (f.domain().simplex(s).size() == 1) verts.push_back(f.domain().simplex(s)[0]);
          }
          std::sort(verts.begin(), verts.end());
          from_strata.push_back(std::move(verts));
        }
        std::sort(from_strata.begin(), from_strata.end());
        c.expect(from_strata == full_subcomplex_components(f.domain(), preimage), name + " over vertex " +
                                                                                     std::to_string(w));
        ++vertex_checks;
      }
    }

    std::size_t nerve_checks = 0;
    std::vector<std::pair<std::string, SimplicialMap>> small;
    for (auto& entry : fixture_maps()) {
      if (entry.second.domain().maximal_simplices().size() <= kOracleMaxMaximal) small.push_back(std::move(entry));
    }
    for (std::uint64_t seed = 1000; small.size() < 60; ++seed) {
      auto f = random_map(seed, {.max_vertices = 6, .connected = seed % 2 == 0});
      if (f.domain().maximal_simplices().size() <= kOracleMaxMaximal) {
        small.emplace_back("random_map(" + std::to_string(seed) + ")", std::move(f));
      }
    }
    for (const auto& [name, f] : small) {
      for (std::size_t p = 0; p <= 1; ++p) {
        const auto truth = betti(oracle::fiber_power_triangulation(f, p + 1));
        c.expect(fiber_power_betti(f, p, FiberPowerMethod::Nerve, kOracleCellCap) == truth,
                 "nerve vs triangulation, " + name);
        c.expect(fiber_power_betti(f, p, FiberPowerMethod::Cellular) == truth, "cells vs triangulation, " + name);
        ++nerve_checks;
      }
    }
    c.notes << ": " << kRandomFunctions << " functions, " << vertex_checks << " codomain vertices, "
            << nerve_checks << " fiber powers";
  });

  report(8, "homology engine: Euler consistency and subdivision invariance", [](Criterion& c) {
    std::size_t n = 0;
    for (const auto& k : complex_suite()) {
      const auto b = betti(k);
      c.expect(b.euler() == euler_characteristic(k), "Euler consistency");
      c.expect(betti(*barycentric_subdivision(k).complex) == b, "subdivision invariance");
      if (k.size() <= 300) c.expect(b.b == oracle::betti_dense(k), "dense rational oracle");
      ++n;
    }
    c.notes << ": " << n << " complexes";
  });

  return failures == 0 ? 0 : 1;
}
