#include "reebforge/fixtures.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "reebforge/error.hpp"

namespace reebforge {

SimplicialComplex tetrahedron_boundary() {
  return SimplicialComplex::generated_by(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

SimplicialComplex circle(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, "a circle needs at least 3 vertices");
  std::vector<Simplex> edges;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex j = static_cast<Vertex>((i + 1) % n);
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return SimplicialComplex::generated_by(n, edges);
}

SimplicialComplex minimal_torus() {
  std::vector<Simplex> triangles;
  for (Vertex i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7};
    Simplex b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    triangles.push_back(a);
    triangles.push_back(b);
  }
  return SimplicialComplex::generated_by(7, triangles);
}

SimplicialMap identity_map(const ComplexPtr& complex) {
  std::vector<Vertex> images(complex->vertex_count());
  std::iota(images.begin(), images.end(), Vertex{0});
  return SimplicialMap::check(complex, complex, std::move(images));
}

SimplicialMap constant_map(const ComplexPtr& complex) {
  return SimplicialMap::check(complex, share(SimplicialComplex::validate(1, {})),
                              std::vector<Vertex>(complex->vertex_count(), 0));
}

SimplicialMap disk_collapse(int n) {
  if (n == 1) {
    auto path = share(SimplicialComplex::validate(4, {{0, 1}, {1, 2}, {2, 3}}));
    return SimplicialMap::check(path, share(circle(3)), {0, 1, 2, 0});
  }
  if (n != 2) {
    throw Error(ErrorKind::UnsupportedDimension,
                "disk_collapse is defined for n = 1 and n = 2 only, got " + std::to_string(n));
  }
  auto sphere = share(tetrahedron_boundary());
  const Subdivision sd = barycentric_subdivision(*sphere);
  // Removing the open star of sd-vertex 0 (the original vertex 0) leaves the
  // full subcomplex on all other sd-vertices.
  std::vector<Vertex> kept;
  for (Vertex v = 1; v < sd.complex->vertex_count(); ++v) kept.push_back(v);
  auto disk = share(full_subcomplex(*sd.complex, kept));
  std::vector<Vertex> images;
  for (Vertex v : kept) images.push_back(sphere->simplex(sd.carrier[v]).front());
  return SimplicialMap::check(disk, sphere, std::move(images));
}

SimplicialMap product_power(const SimplicialMap& f, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "product_power needs k >= 1");
  const SimplicialMap base = monotone_relabel(f);
  SimplicialMap out = base;
  for (int i = 1; i < k; ++i) out = staircase_product(out, base);
  return out;
}

TorusHeight torus_height() {
  auto torus = share(minimal_torus());
  std::vector<Rational> height;
  for (int v = 0; v < 7; ++v) height.emplace_back(v);
  PLFunction g(torus, std::move(height));
  LevelSubdivision cut = level_subdivision(g);
  return {std::move(g), std::move(cut.map)};
}

// ---------------------------------------------------------------------------

namespace {

struct Codomain {
  SimplicialComplex complex;
  std::vector<std::vector<Vertex>> neighbours;  // including the vertex itself
};

Codomain random_codomain(std::mt19937_64& rng) {
  SimplicialComplex l;
  switch (rng() % 6) {
    case 0: l = SimplicialComplex::validate(1, {}); break;
    case 1: l = SimplicialComplex::validate(3, {{0, 1}, {1, 2}}); break;
    case 2: l = circle(3); break;
    case 3: l = SimplicialComplex::generated_by(3, {{0, 1, 2}}); break;
    case 4: l = tetrahedron_boundary(); break;
    default: l = SimplicialComplex::generated_by(4, {{0, 1, 2}, {0, 2, 3}}); break;
  }
  Codomain c{std::move(l), {}};
  c.neighbours.resize(c.complex.vertex_count());
  for (Vertex w = 0; w < c.complex.vertex_count(); ++w) c.neighbours[w].push_back(w);
  for (std::size_t i = 0; i < c.complex.count(1); ++i) {
    const auto e = c.complex.simplex(static_cast<SimplexId>(c.complex.first_id(1) + i));
    c.neighbours[e[0]].push_back(e[1]);
    c.neighbours[e[1]].push_back(e[0]);
  }
  return c;
}

// Grows a random 2-complex on [3, max_vertices] vertices. `admissible`
// filters candidate simplices; `attach(u, v)` is called before vertex v is
// joined to the earlier vertex u and may veto the edge.
SimplicialComplex random_complex(std::mt19937_64& rng, const RandomOptions& options,
                                 const std::function<void(Vertex, Vertex)>& attach,
                                 const std::function<bool(const Simplex&)>& admissible,
                                 std::size_t& vertex_count) {
  const std::size_t cap = std::max<std::size_t>(options.max_vertices, 3);
  const std::size_t n = 3 + rng() % (cap - 2);
  vertex_count = n;
  std::vector<Simplex> generators;
  for (Vertex v = 1; v < n; ++v) {
    if (!options.connected && rng() % 4 == 0) continue;
    const auto u = static_cast<Vertex>(rng() % v);
    attach(u, v);
    generators.push_back({u, v});
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (std::size_t attempt = 0; attempt < 3 * n; ++attempt) {
    std::set<Vertex> chosen;
    const std::size_t size = rng() % 3 == 0 ? 2 : 3;
    while (chosen.size() < size) chosen.insert(pick(rng));
    Simplex s(chosen.begin(), chosen.end());
    if (admissible(s)) generators.push_back(std::move(s));
  }
  return SimplicialComplex::generated_by(n, generators);
}

}  // namespace

SimplicialMap random_map(std::uint64_t seed, const RandomOptions& options) {
  std::mt19937_64 rng(seed);
  Codomain l = random_codomain(rng);
  const std::size_t cap = std::max<std::size_t>(options.max_vertices, 3);
  std::vector<Vertex> images(cap);
  for (auto& w : images) w = static_cast<Vertex>(rng() % l.complex.vertex_count());

  auto attach = [&](Vertex u, Vertex v) {
    const auto& choices = l.neighbours[images[u]];
    images[v] = choices[rng() % choices.size()];
  };
  auto admissible = [&](const Simplex& s) {
    Simplex image;
    for (Vertex v : s) image.push_back(images[v]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    return l.complex.contains(image);
  };
  std::size_t n = 0;
  auto domain = share(random_complex(rng, options, attach, admissible, n));
  images.resize(n);
  return SimplicialMap::check(std::move(domain), share(std::move(l.complex)), std::move(images));
}

PLFunction random_function(std::uint64_t seed, const RandomOptions& options) {
  std::mt19937_64 rng(seed);
  std::size_t n = 0;
  auto domain = share(random_complex(
      rng, options, [](Vertex, Vertex) {}, [](const Simplex&) { return true; }, n));
  std::vector<std::int64_t> order(n);
  std::iota(order.begin(), order.end(), std::int64_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  // Distinct integer parts keep the values distinct; the fractional parts
  // keep them from being integers.
  std::vector<Rational> values;
  for (std::size_t v = 0; v < n; ++v) {
    Rational x(static_cast<long>(order[v]));
    x += Rational(1, static_cast<unsigned long>(2 + rng() % 5));
    values.push_back(x);
  }
  return PLFunction(std::move(domain), std::move(values));
}

// ---------------------------------------------------------------------------

const std::vector<FixtureInfo>& fixture_catalog() {
  static const std::vector<FixtureInfo> catalog = {
      {"disk_collapse", "disk onto sphere collapsing the boundary to a point (map)", {{"n", 2}}},
      {"product_power", "k-fold product of disk_collapse(n) (map)", {{"n", 2}, {"k", 2}}},
      {"torus_height", "height on the 7-vertex torus, cut along its levels (map)", {}},
      {"torus_function", "height on the 7-vertex torus (function)", {}},
      {"torus", "7-vertex torus (complex)", {}},
      {"sphere", "boundary of the 3-simplex (complex)", {}},
      {"circle", "cycle on n vertices (complex)", {{"n", 3}}},
      {"identity_circle", "identity on the n-cycle (map)", {{"n", 3}}},
      {"constant_circle", "n-cycle onto a point (map)", {{"n", 3}}},
      {"random_map", "seeded random 2-complex over a small codomain (map)",
       {{"seed", 0}, {"vertices", 10}, {"connected", 1}}},
      {"random_function", "seeded random 2-complex with distinct values (function)",
       {{"seed", 0}, {"vertices", 10}, {"connected", 1}}},
  };
  return catalog;
}

Fixture make_fixture(const FixtureSpec& spec) {
  const auto& catalog = fixture_catalog();
  auto info = std::find_if(catalog.begin(), catalog.end(),
                           [&](const FixtureInfo& i) { return i.name == spec.name; });
  if (info == catalog.end()) throw Error(ErrorKind::UnknownFixture, "no fixture named " + spec.name);
  std::map<std::string, std::int64_t> p = info->defaults;
  for (const auto& [key, value] : spec.params) {
    if (!p.count(key)) {
      throw Error(ErrorKind::UnknownFixture, spec.name + " has no parameter " + key);
    }
    p[key] = value;
  }
  auto at_least = [&](const char* key, std::int64_t lo, std::int64_t hi) {
    if (p[key] < lo || p[key] > hi) {
      throw Error(ErrorKind::InvalidParams, spec.name + ": " + key + " must lie in [" +
                                                std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return p[key];
  };

  Fixture out;
  const std::string& name = spec.name;
  if (name == "disk_collapse") {
    out.map = disk_collapse(static_cast<int>(p["n"]));
  } else if (name == "product_power") {
    const auto k = at_least("k", 1, 3);
    out.map = product_power(disk_collapse(static_cast<int>(p["n"])), static_cast<int>(k));
  } else if (name == "torus_height") {
    out.map = torus_height().map;
  } else if (name == "torus_function") {
    out.function = torus_height().function;
  } else if (name == "torus") {
    out.complex = minimal_torus();
  } else if (name == "sphere") {
    out.complex = tetrahedron_boundary();
  } else if (name == "circle" || name == "identity_circle" || name == "constant_circle") {
    auto c = circle(static_cast<std::size_t>(at_least("n", 3, 1'000'000)));
    if (name == "circle") {
      out.complex = std::move(c);
    } else if (name == "identity_circle") {
      out.map = identity_map(share(std::move(c)));
    } else {
      out.map = constant_map(share(std::move(c)));
    }
  } else {
    RandomOptions options;
    options.max_vertices = static_cast<std::size_t>(at_least("vertices", 3, 10'000));
    options.connected = at_least("connected", 0, 1) == 1;
    const auto seed = static_cast<std::uint64_t>(p["seed"]);
    if (name == "random_map") {
      out.map = random_map(seed, options);
    } else {
      out.function = random_function(seed, options);
    }
  }
  return out;
}

}  // namespace reebforge
