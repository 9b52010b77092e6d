#include "artin/filtration.hpp"

#include "artin/error.hpp"

namespace artin {

Filtration::Filtration(std::vector<std::vector<std::vector<bool>>> members, bool standard)
    : members_(std::move(members)), standard_(standard) {
  if (members_.size() < 2) {
    throw Error(Errc::RankMismatch, "a filtration needs at least the levels F_0 and F_1");
  }
}

bool Filtration::contains(int level, int degree, std::size_t index) const {
  if (level < 0 || level >= static_cast<int>(members_.size())) return false;
  const auto& by_degree = members_[static_cast<std::size_t>(level)];
  if (degree < 0 || degree >= static_cast<int>(by_degree.size())) return false;
  const auto& flags = by_degree[static_cast<std::size_t>(degree)];
  return index < flags.size() && flags[index];
}

std::vector<std::pair<int, std::size_t>> Filtration::elements(int level) const {
  std::vector<std::pair<int, std::size_t>> out;
  if (level < 0 || level >= static_cast<int>(members_.size())) return out;
  const auto& by_degree = members_[static_cast<std::size_t>(level)];
  for (std::size_t k = 0; k < by_degree.size(); ++k) {
    for (std::size_t b = 0; b < by_degree[k].size(); ++b) {
      if (by_degree[k][b]) out.emplace_back(static_cast<int>(k), b);
    }
  }
  return out;
}

std::vector<std::pair<int, std::size_t>> Filtration::layer(int level) const {
  std::vector<std::pair<int, std::size_t>> out;
  for (const auto& [k, b] : elements(level)) {
    if (!contains(level + 1, k, b)) out.emplace_back(k, b);
  }
  return out;
}

namespace {

// First differential entry leaving F_level, as a message; empty if closed.
std::string escape_from_level(const CochainComplex& c, const Filtration& f, int level) {
  for (const auto& [k, col] : f.elements(level)) {
    if (k >= c.top_degree()) continue;
    const PolyMatrix& d = c.differentials()[static_cast<std::size_t>(k)];
    for (std::size_t row = 0; row < d.rows(); ++row) {
      if (!d(row, col).is_zero() && !f.contains(level, k + 1, row)) {
        return "d maps basis element " + std::to_string(col) + " of degree " + std::to_string(k) +
               " out of F_" + std::to_string(level);
      }
    }
  }
  return {};
}

}  // namespace

Filtration standard_filtration(const CochainComplex& c) {
  if (!c.subset_indexed()) {
    throw Error(Errc::NotSubsetIndexed, "the standard filtration needs a subset-indexed complex");
  }
  const int n = c.generators();
  std::vector<std::vector<std::vector<bool>>> members;
  for (int i = 0; i <= n + 1; ++i) {
    std::vector<std::vector<bool>> level;
    const SubsetMask top = i <= n ? interval(n - i + 1, n) : 0;
    for (int k = 0; k <= c.top_degree(); ++k) {
      const auto& basis = c.basis(k);
      std::vector<bool> flags(basis.size(), false);
      if (i <= n) {
        for (std::size_t b = 0; b < basis.size(); ++b) flags[b] = (basis[b] & top) == top;
      }
      level.push_back(std::move(flags));
    }
    members.push_back(std::move(level));
  }
  Filtration f(std::move(members), true);
  for (int i = 0; i <= n + 1; ++i) {
    if (auto why = escape_from_level(c, f, i); !why.empty()) {
      throw Error(Errc::NotSubsetIndexed, "standard filtration is not a filtration by subcomplexes: " + why);
    }
  }
  return f;
}

CochainComplex quotient_complex(const CochainComplex& c, const Filtration& f, int level) {
  if (level < 0 || level > f.length()) {
    throw Error(Errc::IndexOutOfRange, "quotient level " + std::to_string(level) + " outside 0.." +
                                           std::to_string(f.length()));
  }
  if (f.is_standard() && c.subset_indexed()) {
    const int n = c.generators();
    const SubsetMask base = interval(n - level + 1, n);
    const int m = std::max(n - level - 1, 0);
    PolynomialFamily family(m, c.domain());
    const SubsetMask all = full_set(m);
    for (SubsetMask s = 0;; ++s) {
      for (int j = 1; j <= m; ++j) {
        if (!contains(s, j)) family.set(s, j, c.entry(s | base, j));
      }
      if (s == all) break;
    }
    return build_generic_complex(family);
  }
  const auto layer = f.layer(level);
  std::vector<std::vector<std::size_t>> picked(static_cast<std::size_t>(std::max(c.degree_count(), 0)));
  for (const auto& [k, b] : layer) picked[static_cast<std::size_t>(k)].push_back(b);
  std::vector<std::size_t> ranks;
  for (const auto& p : picked) ranks.push_back(p.size());
  std::vector<PolyMatrix> d;
  for (int k = 0; k + 1 < c.degree_count(); ++k) {
    const auto& rows = picked[static_cast<std::size_t>(k + 1)];
    const auto& cols = picked[static_cast<std::size_t>(k)];
    const PolyMatrix& full = c.differentials()[static_cast<std::size_t>(k)];
    PolyMatrix m(rows.size(), cols.size(), c.domain());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t col = 0; col < cols.size(); ++col) m(r, col) = full(rows[r], cols[col]);
    }
    d.push_back(std::move(m));
  }
  return CochainComplex(c.domain(), std::move(ranks), std::move(d));
}

LaurentPoly induced_differential(const CochainComplex& c, const Filtration& f) {
  const int n = f.length();
  const auto top = f.elements(n);
  const auto below = f.layer(n - 1);
  if (top.size() != 1 || below.size() != 1) {
    throw Error(Errc::RankMismatch, "F_n has rank " + std::to_string(top.size()) +
                                        " and F_{n-1}/F_n has rank " + std::to_string(below.size()) +
                                        "; both must be one");
  }
  const auto [k_top, i_top] = top.front();
  const auto [k_below, i_below] = below.front();
  if (k_top != k_below + 1) {
    throw Error(Errc::RankMismatch, "F_n and F_{n-1}/F_n are not in consecutive degrees");
  }
  return c.differentials()[static_cast<std::size_t>(k_below)](i_top, i_below);
}

std::string WellFilteredResult::describe() const {
  std::string where = "[";
  for (std::size_t i = 0; i < path.size(); ++i) where += (i ? "," : "") + std::to_string(path[i]);
  where += "]";
  if (ok) {
    return by_convention ? "well filtered (rank-one complex on no generators, accepted by convention)"
                         : "well filtered";
  }
  return "well-filtered condition (" + condition + ") fails at quotient path " + where + ": " + detail;
}

namespace {

WellFilteredResult fail(const std::string& condition, const std::vector<int>& path, std::string detail) {
  WellFilteredResult r;
  r.ok = false;
  r.condition = condition;
  r.path = path;
  r.detail = std::move(detail);
  return r;
}

WellFilteredResult check(const CochainComplex& c, const Filtration& f, std::vector<int> path) {
  if (c.is_zero()) return {};
  if (c.subset_indexed() && c.generators() == 0) {
    WellFilteredResult r;
    r.by_convention = true;
    r.path = path;
    return r;
  }
  if (c.total_rank() == 1) return fail("a", path, "the complex is R itself, which is excluded");
  const int n = f.length();

  // (a) bounds, monotonicity, compatibility with d.
  if (n <= 0) return fail("a", path, "filtration length must be positive");
  for (int k = 0; k <= c.top_degree(); ++k) {
    for (std::size_t b = 0; b < c.rank(k); ++b) {
      if (!f.contains(0, k, b)) return fail("a", path, "F_0 C is not all of C");
      if (f.contains(n + 1, k, b)) return fail("a", path, "F_{n+1} C is not zero");
      for (int i = 0; i <= n; ++i) {
        if (f.contains(i + 1, k, b) && !f.contains(i, k, b)) {
          return fail("a", path, "F_" + std::to_string(i + 1) + " is not inside F_" + std::to_string(i));
        }
      }
    }
  }
  for (int i = 0; i <= n + 1; ++i) {
    if (auto why = escape_from_level(c, f, i); !why.empty()) return fail("a", path, why);
  }

  // (b) F_n and F_{n-1}/F_n are copies of R in degrees n and n-1.
  const auto top = f.elements(n);
  const auto below = f.layer(n - 1);
  if (top.size() != 1 || top.front().first != n) {
    return fail("b", path, "F_n C must be a single generator in degree " + std::to_string(n));
  }
  if (below.size() != 1 || below.front().first != n - 1) {
    return fail("b", path, "F_{n-1} C / F_n C must be a single generator in degree " + std::to_string(n - 1));
  }

  // (c) the induced differential.
  const LaurentPoly p = induced_differential(c, f);
  if (p.is_zero()) return fail("c", path, "induced differential is zero");
  if (!extremes_invertible(p)) {
    return fail("c", path, "induced differential " + p.to_string() +
                               " has a non-invertible extreme coefficient over " + c.domain().name());
  }

  // (d) every other layer, recursively, under its standard filtration.
  for (int i = 0; i <= n - 2; ++i) {
    std::vector<int> sub_path = path;
    sub_path.push_back(i);
    const CochainComplex q = quotient_complex(c, f, i);
    if (!q.subset_indexed()) {
      return fail("d", sub_path, "quotient carries no filtration (not subset-indexed)");
    }
    WellFilteredResult r = check(q, standard_filtration(q), sub_path);
    if (!r.ok) return r;
  }
  return {};
}

}  // namespace

WellFilteredResult is_well_filtered(const CochainComplex& c, const Filtration& f) {
  return check(c, f, {});
}

WellFilteredResult is_well_filtered(const CochainComplex& c) {
  if (c.is_zero()) return {};
  if (!c.subset_indexed()) {
    return fail("a", {}, "no filtration available: the complex is not subset-indexed");
  }
  return check(c, standard_filtration(c), {});
}

}  // namespace artin
