#include "artin/series_window.hpp"

#include <algorithm>
#include <map>

#include "artin/error.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// WindowSeries

WindowSeries::WindowSeries(Domain domain, int lo, std::vector<Scalar> coefficients)
    : domain_(domain), lo_(lo), c_(std::move(coefficients)) {
  if (c_.empty()) throw Error(Errc::WindowTooSmall, "a series window must be nonempty");
  for (auto& x : c_) x = domain_.from_rational(x);
}

WindowSeries WindowSeries::zeros(Domain domain, int lo, int hi) {
  if (hi < lo) {
    throw Error(Errc::WindowTooSmall, "empty window [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return WindowSeries(domain, lo, std::vector<Scalar>(static_cast<std::size_t>(hi - lo + 1)));
}

WindowSeries WindowSeries::of(const LaurentPoly& p, int lo, int hi) {
  WindowSeries w = zeros(p.domain(), lo, hi);
  for (int i = lo; i <= hi; ++i) w.c_[static_cast<std::size_t>(i - lo)] = p.coefficient(i);
  return w;
}

Scalar WindowSeries::at(int i) const {
  if (i < lo_ || i > hi()) return 0;
  return c_[static_cast<std::size_t>(i - lo_)];
}

void WindowSeries::set(int i, const Scalar& value) {
  if (i < lo_ || i > hi()) {
    throw Error(Errc::IndexOutOfRange, "q^" + std::to_string(i) + " outside the window");
  }
  c_[static_cast<std::size_t>(i - lo_)] = domain_.from_rational(value);
}

WindowSeries WindowSeries::restricted(int lo, int hi) const {
  lo = std::max(lo, lo_);
  hi = std::min(hi, this->hi());
  WindowSeries out = zeros(domain_, lo, hi);
  for (int i = lo; i <= hi; ++i) out.c_[static_cast<std::size_t>(i - lo)] = at(i);
  return out;
}

WindowSeries WindowSeries::multiplied_by(const LaurentPoly& p) const {
  if (p.domain() != domain_) throw Error(Errc::DomainMismatch, "series and polynomial domains differ");
  if (p.is_zero()) return zeros(domain_, lo_, hi());
  const int out_lo = lo_ + p.top_exponent();
  const int out_hi = hi() + p.valuation();
  WindowSeries out = zeros(domain_, out_lo, out_hi);
  for (int j = out_lo; j <= out_hi; ++j) {
    Scalar acc = 0;
    for (int e = p.valuation(); e <= p.top_exponent(); ++e) {
      const Scalar b = p.coefficient(e);
      if (b != 0) acc = domain_.add(acc, domain_.mul(b, at(j - e)));
    }
    out.c_[static_cast<std::size_t>(j - out_lo)] = acc;
  }
  return out;
}

bool WindowSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x == 0; });
}

std::string WindowSeries::to_json() const {
  std::string out = "{\"lo\": " + std::to_string(lo_) + ", \"coefficients\": [";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += "\"" + domain_.display(c_[i]).get_str() + "\"";
  }
  return out + "]}";
}

// ---------------------------------------------------------------------------
// Scalar multiplication on A[[q, q^-1]]

namespace {

void require_invertible_extremes(const LaurentPoly& p) {
  if (!extremes_invertible(p)) {
    throw Error(Errc::NonInvertibleExtremes,
                p.to_string() + " needs unit extreme coefficients over " + p.domain().name());
  }
}

}  // namespace

WindowSeries recurrence_extend(const WindowSeries& seed, const LaurentPoly& p,
                               ExtendDirection direction, int steps) {
  require_invertible_extremes(p);
  if (seed.domain() != p.domain()) throw Error(Errc::DomainMismatch, "seed and polynomial domains differ");
  const int span = p.span();
  if (static_cast<int>(seed.size()) < span) {
    throw Error(Errc::SeedTooShort, "seed of length " + std::to_string(seed.size()) +
                                        " is shorter than span " + std::to_string(span));
  }
  const Domain& dom = p.domain();
  const int s = p.valuation();
  const int t = p.top_exponent();
  steps = std::max(steps, 0);
  if (direction == ExtendDirection::Right) {
    WindowSeries out = WindowSeries::zeros(dom, seed.lo(), seed.hi() + steps);
    for (int i = seed.lo(); i <= seed.hi(); ++i) out.set(i, seed.at(i));
    const Scalar inv = dom.neg(dom.inverse(p.trailing()));
    for (int k = seed.hi() + 1; k <= out.hi(); ++k) {
      Scalar acc = 0;
      for (int i = 1; i <= span; ++i) acc = dom.add(acc, dom.mul(p.coefficient(s + i), out.at(k - i)));
      out.set(k, dom.mul(inv, acc));
    }
    return out;
  }
  WindowSeries out = WindowSeries::zeros(dom, seed.lo() - steps, seed.hi());
  for (int i = seed.lo(); i <= seed.hi(); ++i) out.set(i, seed.at(i));
  const Scalar inv = dom.neg(dom.inverse(p.leading()));
  for (int k = seed.lo() - 1; k >= out.lo(); --k) {
    Scalar acc = 0;
    for (int i = 1; i <= span; ++i) acc = dom.add(acc, dom.mul(p.coefficient(t - i), out.at(k + i)));
    out.set(k, dom.mul(inv, acc));
  }
  return out;
}

RecurrenceKernel kernel_of_scalar_mul(const LaurentPoly& p) {
  require_invertible_extremes(p);
  RecurrenceKernel kernel{p, {}};
  const int span = p.span();
  for (int i = 0; i < span; ++i) {
    WindowSeries seed = WindowSeries::zeros(p.domain(), 0, span - 1);
    seed.set(i, 1);
    kernel.seeds.push_back(std::move(seed));
  }
  return kernel;
}

WindowSeries RecurrenceKernel::element(int index, int lo, int hi) const {
  if (index < 0 || index >= dimension()) {
    throw Error(Errc::IndexOutOfRange, "kernel has dimension " + std::to_string(dimension()));
  }
  const WindowSeries& seed = seeds[static_cast<std::size_t>(index)];
  WindowSeries grown = recurrence_extend(seed, p, ExtendDirection::Right, std::max(hi - seed.hi(), 0));
  grown = recurrence_extend(grown, p, ExtendDirection::Left, std::max(grown.lo() - lo, 0));
  return grown.restricted(lo, hi);
}

WindowSeries solve_scalar_mul(const LaurentPoly& p, const WindowSeries& rhs) {
  require_invertible_extremes(p);
  if (rhs.domain() != p.domain()) throw Error(Errc::DomainMismatch, "rhs and polynomial domains differ");
  const Domain& dom = p.domain();
  const int s = p.valuation();
  const int t = p.top_exponent();
  const int lo = rhs.lo() - t;
  const int hi = rhs.hi() - s;
  if (hi < lo) throw Error(Errc::WindowTooSmall, "no interior left for the preimage");

  auto m_plus = [&](int k) { return k >= 0 ? rhs.at(k) : Scalar(0); };
  auto m_minus = [&](int k) { return k < 0 ? rhs.at(k) : Scalar(0); };

  // x+ = p+^-1 m+, the expansion in nonnegative powers of q: solved upward.
  WindowSeries plus = WindowSeries::zeros(dom, lo, hi);
  const Scalar inv_s = dom.inverse(p.trailing());
  for (int e = lo; e <= hi; ++e) {
    Scalar acc = m_plus(e + s);
    for (int i = s + 1; i <= t; ++i) acc = dom.sub(acc, dom.mul(p.coefficient(i), plus.at(e + s - i)));
    plus.set(e, dom.mul(acc, inv_s));
  }
  // x- = p-^-1 m-, the expansion in nonpositive powers of q: solved downward.
  WindowSeries minus = WindowSeries::zeros(dom, lo, hi);
  const Scalar inv_t = dom.inverse(p.leading());
  for (int e = hi; e >= lo; --e) {
    Scalar acc = m_minus(e + t);
    for (int i = s; i < t; ++i) acc = dom.sub(acc, dom.mul(p.coefficient(i), minus.at(e + t - i)));
    minus.set(e, dom.mul(acc, inv_t));
  }
  for (int e = lo; e <= hi; ++e) plus.set(e, dom.add(plus.at(e), minus.at(e)));
  return plus;
}

// ---------------------------------------------------------------------------
// Exact rank of banded operators

std::size_t sparse_rank(std::vector<SparseRow> rows, const Domain& dom) {
  if (!dom.is_field()) throw Error(Errc::UnsupportedDomain, "rank needs a field, got " + dom.name());
  std::map<std::size_t, std::vector<SparseRow>> buckets;
  for (auto& r : rows) {
    if (!r.empty()) buckets[r.front().first].push_back(std::move(r));
  }
  std::size_t rank = 0;
  SparseRow scratch;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    auto& group = node.mapped();
    const auto pivot_it = std::min_element(group.begin(), group.end(),
                                           [](const SparseRow& a, const SparseRow& b) { return a.size() < b.size(); });
    SparseRow pivot = std::move(*pivot_it);
    group.erase(pivot_it);
    ++rank;
    const Scalar inv = dom.inverse(pivot.front().second);
    for (auto& row : group) {
      const Scalar factor = dom.mul(row.front().second, inv);
      scratch.clear();
      std::size_t a = 1, b = 1;  // leading entries cancel
      while (a < row.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
          scratch.push_back(std::move(row[a++]));
        } else if (a == row.size() || pivot[b].first < row[a].first) {
          scratch.emplace_back(pivot[b].first, dom.neg(dom.mul(factor, pivot[b].second)));
          ++b;
        } else {
          Scalar v = dom.sub(row[a].second, dom.mul(factor, pivot[b].second));
          if (v != 0) scratch.emplace_back(row[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      if (!scratch.empty()) {
        const std::size_t lead = scratch.front().first;
        buckets[lead].push_back(scratch);
      }
    }
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Window operators

std::pair<int, int> exponent_range(const PolyMatrix& d) {
  bool any = false;
  int lo = 0, hi = 0;
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const auto& e = d(r, c);
      if (e.is_zero()) continue;
      if (!any) {
        lo = e.valuation();
        hi = e.top_exponent();
        any = true;
      } else {
        lo = std::min(lo, e.valuation());
        hi = std::max(hi, e.top_exponent());
      }
    }
  }
  return {lo, hi};
}

WindowOperator WindowOperator::assemble(const PolyMatrix& d, int in_lo, int in_hi) {
  WindowOperator op;
  op.source_rank = d.cols();
  op.target_rank = d.rows();
  op.entries = d;
  op.in_lo = in_lo;
  op.in_hi = in_hi;
  const auto [lowest, highest] = exponent_range(d);
  op.out_lo = in_lo + highest;
  op.out_hi = in_hi + lowest;
  const Domain& dom = d.domain();
  for (int j = op.out_lo; j <= op.out_hi; ++j) {
    for (std::size_t r = 0; r < d.rows(); ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const LaurentPoly& p = d(r, c);
        for (int e = p.valuation(); !p.is_zero() && e <= p.top_exponent(); ++e) {
          Scalar b = p.coefficient(e);
          if (b != 0) row.emplace_back(op.column_of(j - e, c), dom.from_rational(b));
        }
      }
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      op.rows.push_back(std::move(row));
    }
  }
  return op;
}

std::vector<SparseRow> WindowOperator::rows_without_positions(int lo, int hi) const {
  std::vector<SparseRow> out;
  for (const auto& row : rows) {
    SparseRow kept;
    for (const auto& [col, v] : row) {
      const int position = in_lo + static_cast<int>(col / source_rank);
      if (position < lo || position > hi) kept.emplace_back(col, v);
    }
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return out;
}

// ---------------------------------------------------------------------------
// H^k of the complex with coefficients in A[[q, q^-1]]

namespace {

int total_band(const CochainComplex& c) {
  int band = 0;
  for (const auto& d : c.differentials()) {
    const auto [lo, hi] = exponent_range(d);
    band += hi - lo;
  }
  return band;
}

}  // namespace

int m_cohomology_dim_at(const CochainComplex& c, int k, int radius) {
  const Domain& dom = c.domain();
  if (!dom.is_field()) {
    throw Error(Errc::UnsupportedDomain, "window cohomology needs a field, got " + dom.name());
  }
  const std::size_t rk = c.rank(k);
  if (rk == 0) return 0;
  const int inner = 2 * radius + 1;
  const int outer = 2 * radius + total_band(c);

  // Cocycles on the wide window, restricted to [-radius, radius]:
  // dim = nullity(T) - nullity(T with the inner columns deleted).
  const WindowOperator cocycle = WindowOperator::assemble(c.differential(k), -outer, outer);
  const std::size_t cols = cocycle.column_count();
  const std::size_t null_all = cols - sparse_rank(cocycle.rows, dom);
  const std::size_t cols_out = cols - static_cast<std::size_t>(inner) * rk;
  const std::size_t null_out = cols_out - sparse_rank(cocycle.rows_without_positions(-radius, radius), dom);
  const std::size_t cocycles = null_all - null_out;

  // Coboundaries restricted to [-radius, radius], read from the inputs they need.
  std::size_t coboundaries = 0;
  if (k >= 1 && c.rank(k - 1) > 0) {
    const PolyMatrix prev = c.differential(k - 1);
    const auto [lowest, highest] = exponent_range(prev);
    const WindowOperator op = WindowOperator::assemble(prev, -radius - highest, radius - lowest);
    coboundaries = sparse_rank(op.rows, dom);
  }
  return static_cast<int>(cocycles) - static_cast<int>(coboundaries);
}

WindowDimension m_cohomology_dim_window(const CochainComplex& c, int k, int radius) {
  const int bandwidth = std::max(1, c.max_entry_span());
  if (radius < bandwidth) {
    throw Error(Errc::WindowTooSmall, "radius " + std::to_string(radius) +
                                          " is below the bandwidth " + std::to_string(bandwidth));
  }
  WindowDimension out;
  out.radius = radius;
  out.dimension = m_cohomology_dim_at(c, k, radius);
  out.check_dimension = m_cohomology_dim_at(c, k, radius + 2 * bandwidth);
  out.stabilized = out.dimension == out.check_dimension;
  return out;
}

}  // namespace artin
