#include "reebforge/reeb.hpp"

#include <algorithm>
#include <stdexcept>

#include "reebforge/error.hpp"
#include "reebforge/union_find.hpp"

namespace reebforge {

namespace {

// S_tau for every codomain simplex, with component labels.
struct StrataTable {
  std::vector<std::vector<SimplexId>> members;          // sorted
  std::vector<std::vector<std::uint32_t>> component;    // parallel to members
  std::vector<std::vector<SimplexId>> representative;   // smallest member per class

  std::uint32_t component_of(SimplexId tau, SimplexId sigma) const {
    const auto& m = members[tau];
    auto it = std::lower_bound(m.begin(), m.end(), sigma);
    return component[tau][static_cast<std::size_t>(it - m.begin())];
  }
};

StrataTable build_strata(const SimplicialMap& f) {
  const SimplicialComplex& k = f.domain();
  const SimplicialComplex& l = f.codomain();

  std::vector<std::vector<SimplexId>> codomain_faces(l.size());
  for (SimplexId tau = 0; tau < l.size(); ++tau) {
    codomain_faces[tau] = l.proper_faces(tau);
    codomain_faces[tau].push_back(tau);
  }

  StrataTable t;
  t.members.resize(l.size());
  for (SimplexId sigma = 0; sigma < k.size(); ++sigma) {
    for (SimplexId tau : codomain_faces[f.image_of(sigma)]) t.members[tau].push_back(sigma);
  }

  std::vector<std::vector<SimplexId>> domain_facets(k.size());
  for (SimplexId sigma = 0; sigma < k.size(); ++sigma) domain_facets[sigma] = k.facets(sigma);

  t.component.resize(l.size());
  t.representative.resize(l.size());
  for (SimplexId tau = 0; tau < l.size(); ++tau) {
    const auto& m = t.members[tau];
    UnionFind uf(m.size());
    // S_tau is closed under cofaces, so codimension-one incidences already
    // generate the face relation inside it.
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (SimplexId face : domain_facets[m[i]]) {
        auto it = std::lower_bound(m.begin(), m.end(), face);
        if (it != m.end() && *it == face) uf.unite(i, static_cast<std::size_t>(it - m.begin()));
      }
    }
    std::vector<std::int64_t> label(m.size(), -1);
    auto& comp = t.component[tau];
    comp.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::size_t root = uf.find(i);
      if (label[root] < 0) {
        label[root] = static_cast<std::int64_t>(t.representative[tau].size());
        t.representative[tau].push_back(m[i]);
      }
      comp[i] = static_cast<std::uint32_t>(label[root]);
    }
  }
  return t;
}

}  // namespace

std::size_t ReebComplex::stratum_index(SimplexId tau, std::uint32_t component) const {
  return first_stratum[tau] + component;
}

ReebComplex reeb_space(const SimplicialMap& f, const ReebOptions& options) {
  const SimplicialComplex& l = f.codomain();
  const StrataTable table = build_strata(f);

  ReebComplex r;
  r.first_stratum.resize(l.size() + 1, 0);
  for (SimplexId tau = 0; tau < l.size(); ++tau) {
    r.first_stratum[tau + 1] = r.first_stratum[tau] + table.representative[tau].size();
    for (std::uint32_t c = 0; c < table.representative[tau].size(); ++c) {
      r.strata.push_back({tau, c});
      r.codomain_projection.push_back(tau);
    }
  }

  std::vector<Poset::Relation> covers;
  for (std::size_t s = 0; s < r.strata.size(); ++s) {
    const auto [tau, c] = r.strata[s];
    const SimplexId rep = table.representative[tau][c];
    for (SimplexId rho : l.facets(tau)) {
      covers.emplace_back(r.stratum_index(rho, table.component_of(rho, rep)), s);
    }
  }
  r.poset = Poset(r.strata.size(), std::move(covers));
  r.realization = share(r.poset.order_complex());

  r.simplex_stratum.resize(f.domain().size());
  for (SimplexId sigma = 0; sigma < f.domain().size(); ++sigma) {
    const SimplexId tau = f.image_of(sigma);
    r.simplex_stratum[sigma] = static_cast<std::uint32_t>(r.stratum_index(tau, table.component_of(tau, sigma)));
  }

  if (options.build_quotient_map) {
    Subdivision sd = barycentric_subdivision(f.domain());
    std::vector<Vertex> images(sd.complex->vertex_count());
    std::vector<char> hit(r.strata.size(), 0);
    for (Vertex v = 0; v < images.size(); ++v) {
      const std::size_t s = r.simplex_stratum[sd.carrier[v]];
      images[v] = static_cast<Vertex>(s);
      hit[s] = 1;
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) {
      throw std::logic_error("quotient map misses a stratum");
    }
    r.quotient_map = SimplicialMap::check(sd.complex, r.realization, std::move(images));
  }
  if (!vertex_strata_mismatches(f).empty()) {
    throw std::logic_error("strata over a codomain vertex disagree with the full-subcomplex components");
  }
  return r;
}

Partition fiber_components_at(const SimplicialMap& f, SimplexId tau) {
  const SimplicialComplex& k = f.domain();
  const SimplicialComplex& l = f.codomain();
  if (tau >= l.size()) {
    throw Error(ErrorKind::UnknownSimplex, "codomain simplex id " + std::to_string(tau));
  }
  const auto tv = l.simplex(tau);
  std::vector<SimplexId> members;
  for (SimplexId sigma = 0; sigma < k.size(); ++sigma) {
    const auto image = l.simplex(f.image_of(sigma));
    if (std::includes(image.begin(), image.end(), tv.begin(), tv.end())) members.push_back(sigma);
  }
  return connected_components(k, members);
}

Partition fiber_components_at(const SimplicialMap& f, std::span<const Vertex> tau) {
  std::vector<Vertex> sorted(tau.begin(), tau.end());
  std::sort(sorted.begin(), sorted.end());
  auto id = f.codomain().find(sorted);
  if (!id) throw Error(ErrorKind::UnknownSimplex, "tau is not a codomain simplex");
  return fiber_components_at(f, *id);
}

std::vector<Vertex> vertex_strata_mismatches(const SimplicialMap& f) {
  const SimplicialComplex& k = f.domain();
  std::vector<Vertex> bad;
  for (Vertex w = 0; w < f.codomain().vertex_count(); ++w) {
    std::vector<Vertex> preimage;
    for (Vertex v = 0; v < k.vertex_count(); ++v) {
      if (f(v) == w) preimage.push_back(v);
    }
    const Partition strata = fiber_components_at(f, static_cast<SimplexId>(w));
    const Partition pieces = vertex_components(full_subcomplex(k, preimage));

    // Every piece must land in exactly one class, and the assignment must be
    // a bijection.
    std::vector<std::int64_t> class_of_vertex(k.vertex_count(), -1);
    for (std::size_t c = 0; c < strata.size(); ++c) {
      for (SimplexId sigma : strata.classes[c]) {
        if (sigma < k.vertex_count()) class_of_vertex[sigma] = static_cast<std::int64_t>(c);
      }
    }
    std::vector<int> used(strata.size(), 0);
    bool ok = pieces.size() == strata.size();
    for (const auto& piece : pieces.classes) {
      const std::int64_t c = class_of_vertex[preimage[piece.front()]];
      for (SimplexId local : piece) {
        if (class_of_vertex[preimage[local]] != c) ok = false;
      }
      if (c < 0 || used[static_cast<std::size_t>(c)]++) ok = false;
    }
    if (!ok) bad.push_back(w);
  }
  return bad;
}

QuotientReport verify_quotient(const SimplicialMap& f) {
  QuotientReport report;
  const ReebComplex r = reeb_space(f);
  const SimplicialMap& q = *r.quotient_map;
  report.strata = r.strata.size();

  report.commutes = true;
  for (Vertex v = 0; v < q.domain().vertex_count(); ++v) {
    // sd-vertex v is carried by domain simplex v.
    if (r.codomain_projection[q(v)] != f.image_of(v)) {
      report.commutes = false;
      report.failures.push_back("projection disagrees with f at sd-vertex " + std::to_string(v));
      break;
    }
  }

  std::vector<char> hit(r.strata.size(), 0);
  for (Vertex v = 0; v < q.domain().vertex_count(); ++v) hit[q(v)] = 1;
  report.surjective = std::find(hit.begin(), hit.end(), 0) == hit.end();
  if (!report.surjective) report.failures.push_back("quotient map is not vertex-surjective");

  const ReebComplex rq = reeb_space(q, ReebOptions{.build_quotient_map = false});
  report.fibers_connected = rq.strata.size() == q.codomain().size();
  for (SimplexId s = 0; s < q.codomain().size() && report.fibers_connected; ++s) {
    if (rq.first_stratum[s + 1] - rq.first_stratum[s] != 1) report.fibers_connected = false;
  }
  if (!report.fibers_connected) {
    report.failures.push_back("some fiber of the quotient map is disconnected or empty");
  }
  return report;
}

bool B1Report::holds() const {
  return std::all_of(components.begin(), components.end(),
                     [](const B1Entry& e) { return e.holds; });
}

SimplicialMap restrict_to_vertices(const SimplicialMap& f, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  auto domain = share(full_subcomplex(f.domain(), sorted));
  std::vector<Vertex> images;
  images.reserve(sorted.size());
  for (Vertex v : sorted) images.push_back(f(v));
  return SimplicialMap::check(std::move(domain), f.codomain_ptr(), std::move(images));
}

B1Report b1_inequality_check(const SimplicialMap& f) {
  B1Report report;
  const Partition comps = vertex_components(f.domain());
  for (const auto& cls : comps.classes) {
    std::vector<Vertex> verts(cls.begin(), cls.end());
    const SimplicialMap part = restrict_to_vertices(f, verts);
    B1Entry e;
    e.b1_domain = betti(part.domain())[1];
    e.b1_reeb = betti(*reeb_space(part, {.build_quotient_map = false}).realization)[1];
    e.holds = e.b1_reeb <= e.b1_domain;
    report.components.push_back(e);
  }
  return report;
}

}  // namespace reebforge
