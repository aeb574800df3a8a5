#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "reebforge/complex.hpp"
#include "reebforge/reeb_graph.hpp"

namespace reebforge {

/// Collapse of a disk onto a sphere that sends the whole boundary to one
/// point. n = 1: the path v0 v1 v2 v3 onto the hollow triangle abc with
/// images a, b, c, a. n = 2: sd of the boundary of a tetrahedron minus the
/// open star of original vertex 0, mapped onto that boundary by sending each
/// barycenter of sigma to 0 if 0 is in sigma and to min(sigma) otherwise.
/// Other n throw UnsupportedDimension.
SimplicialMap disk_collapse(int n);

/// k-fold staircase power f x ... x f (after monotone relabeling).
SimplicialMap product_power(const SimplicialMap& f, int k);

struct TorusHeight {
  PLFunction function;  // vertex height on the 7-vertex torus
  SimplicialMap map;    // the same function cut along its levels, onto a path
};

TorusHeight torus_height();

/// 7-vertex torus (triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7).
SimplicialComplex minimal_torus();
/// Boundary of the 3-simplex.
SimplicialComplex tetrahedron_boundary();
/// Cycle on n >= 3 vertices.
SimplicialComplex circle(std::size_t n);

SimplicialMap identity_map(const ComplexPtr& complex);
SimplicialMap constant_map(const ComplexPtr& complex);

struct RandomOptions {
  std::size_t max_vertices = 10;
  bool connected = true;
};

/// Reproducible random 2-complex mapped simplicially onto one of a few
/// small codomains (point, path, hollow and solid triangle, tetrahedron
/// boundary, square). Identical seeds give identical maps.
SimplicialMap random_map(std::uint64_t seed, const RandomOptions& options = {});

/// Random 2-complex with pairwise distinct rational vertex values.
PLFunction random_function(std::uint64_t seed, const RandomOptions& options = {});

// ---------------------------------------------------------------------------

struct FixtureSpec {
  std::string name;
  std::map<std::string, std::int64_t> params;
};

struct FixtureInfo {
  std::string name;
  std::string description;
  std::map<std::string, std::int64_t> defaults;
};

/// Whatever the fixture naturally is: a complex, a map, or a function.
struct Fixture {
  std::optional<SimplicialComplex> complex;
  std::optional<SimplicialMap> map;
  std::optional<PLFunction> function;
};

const std::vector<FixtureInfo>& fixture_catalog();

/// Throws UnknownFixture for an unknown name or parameter, InvalidParams for
/// out-of-range values.
Fixture make_fixture(const FixtureSpec& spec);

}  // namespace reebforge
