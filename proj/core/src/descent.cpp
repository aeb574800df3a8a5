#include <algorithm>
#include <future>

#include "reebforge/fiber_power.hpp"
#include "reebforge/reeb.hpp"

namespace reebforge {

SimplicialComplex image_complex(const SimplicialMap& f) {
  const SimplicialComplex& l = f.codomain();
  std::vector<char> used(l.size(), 0);
  for (SimplexId s = 0; s < f.domain().size(); ++s) used[f.image_of(s)] = 1;

  std::vector<std::int64_t> relabel(l.vertex_count(), -1);
  Vertex next = 0;
  for (Vertex w = 0; w < l.vertex_count(); ++w) {
    if (used[w]) relabel[w] = next++;
  }
  std::vector<Simplex> generators;
  for (SimplexId tau = 0; tau < l.size(); ++tau) {
    if (!used[tau]) continue;
    Simplex s;
    for (Vertex w : l.simplex(tau)) s.push_back(static_cast<Vertex>(relabel[w]));
    generators.push_back(std::move(s));
  }
  return SimplicialComplex::generated_by(next, generators);
}

bool DescentReport::holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const DescentRow& r) { return r.inequality_holds; });
}

DescentReport descent_check(const SimplicialMap& f, DescentTarget target, std::size_t p_max,
                            const DescentOptions& options) {
  DescentReport report;
  report.target = target;

  // Stratum cells model the quotient's fiber powers without subdividing.
  const bool strata_cells = target == DescentTarget::Reeb && options.method == FiberPowerMethod::Cellular &&
                            !options.reeb_on_subdivision;
  std::optional<SimplicialMap> quotient;
  if (target == DescentTarget::Reeb) {
    ReebComplex r = reeb_space(f, {.build_quotient_map = !strata_cells});
    if (strata_cells) {
      report.target_betti = betti(*r.realization);
    } else {
      quotient = std::move(*r.quotient_map);
    }
  }
  const SimplicialMap& map = quotient ? *quotient : f;
  if (!strata_cells) report.target_betti = betti(image_complex(map));

  auto power = [&](std::size_t j) {
    if (strata_cells) return betti(reeb_fiber_power_cells(f, j, options.cell_cap).chain_complex());
    return fiber_power_betti(map, j, options.method, options.cell_cap);
  };
  report.power_betti.resize(p_max + 1);
  if (options.threads > 1) {
    // Fiber powers of different order are independent; futures are joined in
    // order so exceptions surface deterministically.
    std::vector<std::future<BettiVector>> pending;
    for (std::size_t j = 0; j <= p_max; ++j) pending.push_back(std::async(std::launch::async, power, j));
    for (std::size_t j = 0; j <= p_max; ++j) report.power_betti[j] = pending[j].get();
  } else {
    for (std::size_t j = 0; j <= p_max; ++j) report.power_betti[j] = power(j);
  }

  for (std::size_t p = 0; p <= p_max; ++p) {
    DescentRow row;
    row.p = p;
    row.betti_target = report.target_betti[p];
    for (std::size_t j = 0; j <= p; ++j) {
      row.betti_powers.push_back(report.power_betti[j][p - j]);
      row.bound += row.betti_powers.back();
    }
    row.inequality_holds = row.betti_target <= row.bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace reebforge
