#include "artin/homalg.hpp"

#include <algorithm>

#include "artin/error.hpp"

namespace artin {

int InvariantFactors::torsion_dimension() const {
  int dim = 0;
  for (const auto& f : torsion) dim += f.span();
  return dim;
}

namespace {

void require_field(const Domain& domain) {
  if (!domain.is_field()) {
    throw Error(Errc::UnsupportedDomain,
                "Z[q, q^-1] is not a PID; run over Q or Z/p (got " + domain.name() + ")");
  }
}

}  // namespace

std::vector<InvariantFactors> cohomology(const CochainComplex& c, const DegreeCallback& on_degree) {
  require_field(c.domain());
  std::vector<InvariantFactors> out;
  // factors of d^{k-1}; empty for k = 0
  std::vector<LaurentPoly> previous;
  for (int k = 0; k <= c.top_degree(); ++k) {
    std::vector<LaurentPoly> current;
    if (k < c.top_degree()) {
      current = smith_normal_form(c.differential(k), {.with_transforms = false}).invariant_factors;
    }
    InvariantFactors h;
    h.degree = k;
    h.free_rank = c.rank(k) - current.size() - previous.size();
    for (const auto& f : previous) {
      if (!f.is_unit()) h.torsion.push_back(f);
    }
    if (on_degree) on_degree(h);
    out.push_back(std::move(h));
    previous = std::move(current);
  }
  return out;
}

std::vector<InvariantFactors> homology(const CochainComplex& c) {
  require_field(c.domain());
  std::vector<InvariantFactors> dual = cohomology(transpose_complex(c));
  std::reverse(dual.begin(), dual.end());
  for (std::size_t k = 0; k < dual.size(); ++k) dual[k].degree = static_cast<int>(k);
  return dual;
}

int WindowPolicy::start_radius(const CochainComplex& c) const {
  if (initial_radius > 0) return initial_radius;
  return 8 * std::max(1, c.max_entry_span());
}

bool ShiftReport::all_match() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const ShiftDegree& d) { return d.match; });
}

ShiftReport verify_shift_theorem(const CochainComplex& c, const WindowPolicy& policy) {
  require_field(c.domain());
  ShiftReport report;
  report.well_filtered = is_well_filtered(c);
  if (!report.well_filtered.ok) throw Error(Errc::NotWellFiltered, report.well_filtered.describe());
  if (report.well_filtered.by_convention || c.is_zero()) {
    throw Error(Errc::NotWellFiltered,
                "the rank-one complex R has infinite-dimensional M-side cohomology; nothing to compare");
  }
  report.cohomology = cohomology(c);
  const auto free_rank = [&](int k) -> std::size_t {
    return k >= 0 && k <= c.top_degree() ? report.cohomology[static_cast<std::size_t>(k)].free_rank : 0;
  };
  const auto torsion_dim = [&](int k) -> int {
    return k >= 0 && k <= c.top_degree() ? report.cohomology[static_cast<std::size_t>(k)].torsion_dimension() : 0;
  };

  for (int k = -1; k <= c.top_degree(); ++k) {
    ShiftDegree row;
    row.k = k;
    row.r_dimension = torsion_dim(k + 1);
    row.free_rank_k = free_rank(k);
    row.free_rank_next = free_rank(k + 1);
    if (k >= 0) {
      int radius = policy.start_radius(c);
      for (int attempt = 0;; ++attempt) {
        const WindowDimension w = m_cohomology_dim_window(c, k, radius);
        if (w.stabilized) {
          row.m_dimension = w.dimension;
          row.radius = radius;
          break;
        }
        if (attempt >= policy.max_doublings) {
          throw Error(Errc::NotStabilized, "H^" + std::to_string(k) + " window dimension " +
                                               std::to_string(w.dimension) + " vs " +
                                               std::to_string(w.check_dimension) + " at radius " +
                                               std::to_string(radius));
        }
        radius *= 2;
      }
    }
    row.match = row.m_dimension == row.r_dimension && row.free_rank_k == 0 && row.free_rank_next == 0;
    report.degrees.push_back(row);
  }
  return report;
}

std::vector<MonodromyDegree> monodromy_char_poly(const std::vector<InvariantFactors>& h, Domain domain) {
  std::vector<MonodromyDegree> out;
  for (const auto& group : h) {
    if (group.degree < 1) continue;
    MonodromyDegree m;
    m.degree = group.degree - 1;
    m.charpoly = LaurentPoly::constant(domain, 1);
    for (const auto& f : group.torsion) m.charpoly = m.charpoly * f.normalized();
    if (domain.kind() == Domain::Kind::Rational) m.eigenvalues = factor_cyclotomic(m.charpoly);
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace artin
