#include "artin/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "artin/error.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// PolynomialFamily

PolynomialFamily::PolynomialFamily(int generators, Domain domain)
    : n_(generators), domain_(domain) {
  if (generators < 0 || generators > kMaxGenerators) {
    throw Error(Errc::InvalidRank, "family needs 0.." + std::to_string(kMaxGenerators) +
                                       " generators, got " + std::to_string(generators));
  }
  const std::size_t size = (std::size_t{1} << generators) * static_cast<std::size_t>(std::max(generators, 1));
  entries_.resize(size);
  lines_.assign(size, 0);
}

std::size_t PolynomialFamily::slot(SubsetMask subset, int w) const {
  if (w < 1 || w > n_ || contains(subset, w) || (subset & ~full_set(n_)) != 0) {
    throw Error(Errc::IndexOutOfRange, "no family entry p_{" + format_subset(subset) + "," +
                                           std::to_string(w) + "} for " + std::to_string(n_) +
                                           " generators");
  }
  return static_cast<std::size_t>(subset) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w - 1);
}

void PolynomialFamily::set(SubsetMask subset, int w, LaurentPoly p, int line) {
  if (p.domain() != domain_) {
    throw Error(Errc::DomainMismatch, "family over " + domain_.name() + " got a polynomial over " +
                                          p.domain().name());
  }
  const auto s = slot(subset, w);
  entries_[s] = std::move(p);
  lines_[s] = line;
}

bool PolynomialFamily::has(SubsetMask subset, int w) const {
  return entries_[slot(subset, w)].has_value();
}

const LaurentPoly& PolynomialFamily::at(SubsetMask subset, int w) const {
  const auto& e = entries_[slot(subset, w)];
  if (!e) {
    throw Error(Errc::MissingEntry, "family has no entry for D = " + format_subset(subset) +
                                        ", w = " + std::to_string(w));
  }
  return *e;
}

int PolynomialFamily::line(SubsetMask subset, int w) const { return lines_[slot(subset, w)]; }

PolynomialFamily PolynomialFamily::in_domain(Domain target) const {
  PolynomialFamily out = *this;
  out.domain_ = target;
  for (auto& e : out.entries_) {
    if (e) e = e->in_domain(target);
  }
  return out;
}

std::optional<CocycleViolation> find_cocycle_violation(const PolynomialFamily& family) {
  const int n = family.generators();
  const SubsetMask all = full_set(n);
  // Total on every admissible pair.
  for (SubsetMask s = 0; s <= all; ++s) {
    for (int w = 1; w <= n; ++w) {
      if (!contains(s, w)) family.at(s, w);
    }
    if (s == all) break;
  }
  for (SubsetMask s = 0; s <= all; ++s) {
    for (int w = 1; w <= n; ++w) {
      if (contains(s, w)) continue;
      for (int v = w + 1; v <= n; ++v) {
        if (contains(s, v)) continue;
        const SubsetMask sw = s | generator_bit(w);
        const SubsetMask sv = s | generator_bit(v);
        const LaurentPoly lhs =
            family.at(s, w) * family.at(sw, v) + family.at(s, v) * family.at(sv, w);
        if (!lhs.is_zero()) {
          const int line = std::max({family.line(s, w), family.line(sw, v), family.line(s, v),
                                     family.line(sv, w)});
          return CocycleViolation{s, w, v, line};
        }
      }
    }
    if (s == all) break;
  }
  return std::nullopt;
}

bool check_cocycle_family(const PolynomialFamily& family) {
  return !find_cocycle_violation(family).has_value();
}

// ---------------------------------------------------------------------------
// CochainComplex

CochainComplex::CochainComplex(Domain domain, std::vector<std::size_t> ranks,
                               std::vector<PolyMatrix> differentials)
    : domain_(domain), ranks_(std::move(ranks)), d_(std::move(differentials)) {
  const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
  if (d_.size() != expected) {
    throw Error(Errc::RankMismatch, "expected " + std::to_string(expected) + " differentials, got " +
                                        std::to_string(d_.size()));
  }
  for (std::size_t k = 0; k < d_.size(); ++k) {
    if (d_[k].rows() != ranks_[k + 1] || d_[k].cols() != ranks_[k]) {
      throw Error(Errc::RankMismatch, "d^" + std::to_string(k) + " has shape " +
                                          std::to_string(d_[k].rows()) + "x" +
                                          std::to_string(d_[k].cols()));
    }
    if (d_[k].domain() != domain_) {
      throw Error(Errc::DomainMismatch, "differential over " + d_[k].domain().name());
    }
  }
}

std::size_t CochainComplex::rank(int k) const {
  if (k < 0 || k >= degree_count()) return 0;
  return ranks_[static_cast<std::size_t>(k)];
}

std::size_t CochainComplex::total_rank() const {
  return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0});
}

PolyMatrix CochainComplex::differential(int k) const {
  if (k >= 0 && k < static_cast<int>(d_.size())) return d_[static_cast<std::size_t>(k)];
  return PolyMatrix(rank(k + 1), rank(k), domain_);
}

int CochainComplex::max_entry_span() const {
  int best = 0;
  for (const auto& m : d_) best = std::max(best, m.max_entry_span());
  return best;
}

const std::vector<SubsetMask>& CochainComplex::basis(int k) const {
  static const std::vector<SubsetMask> empty;
  if (k < 0 || k >= static_cast<int>(labels_.size())) return empty;
  return labels_[static_cast<std::size_t>(k)];
}

const LaurentPoly& CochainComplex::entry(SubsetMask subset, int w) const {
  if (!subset_indexed()) throw Error(Errc::NotSubsetIndexed, "complex has no subset basis");
  if (w < 1 || w > generators_ || contains(subset, w) || (subset & ~full_set(generators_)) != 0) {
    throw Error(Errc::IndexOutOfRange, "no entry for D = " + format_subset(subset) +
                                           ", w = " + std::to_string(w));
  }
  const int k = cardinality(subset);
  return d_[static_cast<std::size_t>(k)](colex_rank(subset | generator_bit(w)), colex_rank(subset));
}

CochainComplex CochainComplex::in_domain(Domain target) const {
  CochainComplex out = *this;
  out.domain_ = target;
  for (auto& m : out.d_) m = m.in_domain(target);
  return out;
}

CochainComplex CochainComplex::with_entry(int k, std::size_t row, std::size_t col,
                                          LaurentPoly value) const {
  if (k < 0 || k >= static_cast<int>(d_.size()) || row >= d_[static_cast<std::size_t>(k)].rows() ||
      col >= d_[static_cast<std::size_t>(k)].cols()) {
    throw Error(Errc::IndexOutOfRange, "no matrix entry at d^" + std::to_string(k));
  }
  CochainComplex out(domain_, ranks_, d_);
  out.d_[static_cast<std::size_t>(k)](row, col) = std::move(value);
  return out;
}

bool operator==(const CochainComplex& a, const CochainComplex& b) {
  return a.domain_ == b.domain_ && a.ranks_ == b.ranks_ && a.d_ == b.d_ &&
         a.generators_ == b.generators_ && a.labels_ == b.labels_ && a.direction_ == b.direction_;
}

// ---------------------------------------------------------------------------
// Builders

CochainComplex build_generic_complex(const PolynomialFamily& family) {
  if (auto bad = find_cocycle_violation(family)) {
    std::string where = bad->line > 0 ? " (line " + std::to_string(bad->line) + ")" : "";
    throw Error(Errc::CocycleViolation,
                "p_{D,w} p_{D+w,w'} + p_{D,w'} p_{D+w',w} != 0 for D = " +
                    format_subset(bad->subset) + ", w = " + std::to_string(bad->w) +
                    ", w' = " + std::to_string(bad->w_prime) + where);
  }
  const int n = family.generators();
  const Domain& dom = family.domain();
  std::vector<std::vector<SubsetMask>> labels;
  std::vector<std::size_t> ranks;
  for (int k = 0; k <= n; ++k) {
    labels.push_back(subsets_of_size(n, k));
    ranks.push_back(labels.back().size());
  }
  std::vector<PolyMatrix> d;
  for (int k = 0; k < n; ++k) {
    PolyMatrix m(ranks[static_cast<std::size_t>(k + 1)], ranks[static_cast<std::size_t>(k)], dom);
    const auto& sources = labels[static_cast<std::size_t>(k)];
    for (std::size_t col = 0; col < sources.size(); ++col) {
      for (int w = 1; w <= n; ++w) {
        if (contains(sources[col], w)) continue;
        m(colex_rank(sources[col] | generator_bit(w)), col) = family.at(sources[col], w);
      }
    }
    d.push_back(std::move(m));
  }
  CochainComplex c(dom, std::move(ranks), std::move(d));
  c.generators_ = n;
  c.labels_ = std::move(labels);
  return c;
}

PolynomialFamily salvetti_family(const CoxeterSystem& system, Domain domain) {
  const int n = system.rank();
  PolynomialFamily family(n, domain);
  std::map<SubsetMask, LaurentPoly> poincare;
  auto w_of = [&](SubsetMask s) -> const LaurentPoly& {
    auto it = poincare.find(s);
    if (it == poincare.end()) it = poincare.emplace(s, poincare_poly(system, s)).first;
    return it->second;
  };
  const SubsetMask all = full_set(n);
  for (SubsetMask s = 0;; ++s) {
    for (int j = 1; j <= n; ++j) {
      if (contains(s, j)) continue;
      LaurentPoly quotient;
      try {
        quotient = divexact(w_of(s | generator_bit(j)), w_of(s));
      } catch (const Error& e) {
        throw Error(Errc::NotDivisible, "internal consistency failure: W_{" + format_subset(s) +
                                            "} does not divide W_{" +
                                            format_subset(s | generator_bit(j)) + "}");
      }
      LaurentPoly p = quotient.negated_variable();
      if (sigma(j, s) % 2 != 0) p = -p;
      family.set(s, j, p.in_domain(domain));
    }
    if (s == all) break;
  }
  return family;
}

CochainComplex build_salvetti_complex(const CoxeterSystem& system, Domain domain) {
  return build_generic_complex(salvetti_family(system, domain));
}

PolynomialFamily koszul_family(const std::vector<LaurentPoly>& f) {
  const int n = static_cast<int>(f.size());
  const Domain dom = f.empty() ? Domain::rationals() : f.front().domain();
  PolynomialFamily family(n, dom);
  const SubsetMask all = full_set(n);
  for (SubsetMask s = 0;; ++s) {
    for (int w = 1; w <= n; ++w) {
      if (contains(s, w)) continue;
      const LaurentPoly& fw = f[static_cast<std::size_t>(w - 1)];
      family.set(s, w, sigma(w, s) % 2 != 0 ? -fw : fw);
    }
    if (s == all) break;
  }
  return family;
}

PolynomialFamily random_koszul_family(int generators, std::uint64_t seed, int max_span,
                                      Domain domain) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> span_dist(0, std::max(max_span, 0));
  std::uniform_int_distribution<int> interior(-3, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> shift(-2, 2);
  std::vector<LaurentPoly> f;
  for (int w = 0; w < generators; ++w) {
    const int span = span_dist(rng);
    std::vector<long> c(static_cast<std::size_t>(span + 1));
    for (int i = 0; i <= span; ++i) {
      c[static_cast<std::size_t>(i)] = (i == 0 || i == span) ? (sign(rng) ? 1 : -1) : interior(rng);
    }
    f.push_back(LaurentPoly::from_ints(domain, shift(rng), c));
  }
  if (generators == 0) return PolynomialFamily(0, domain);
  return koszul_family(f);
}

bool check_d_squared(const CochainComplex& c) {
  const auto& d = c.differentials();
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    if (!(d[k + 1] * d[k]).is_zero()) return false;
  }
  return true;
}

CochainComplex transpose_complex(const CochainComplex& c) {
  std::vector<std::size_t> ranks(c.ranks_.rbegin(), c.ranks_.rend());
  std::vector<PolyMatrix> d;
  for (auto it = c.d_.rbegin(); it != c.d_.rend(); ++it) d.push_back(it->transposed());
  CochainComplex t(c.domain_, std::move(ranks), std::move(d));
  t.generators_ = c.generators_;
  t.labels_.assign(c.labels_.rbegin(), c.labels_.rend());
  t.direction_ = c.direction_ == CochainComplex::Direction::Cochain
                     ? CochainComplex::Direction::Chain
                     : CochainComplex::Direction::Cochain;
  return t;
}

}  // namespace artin
