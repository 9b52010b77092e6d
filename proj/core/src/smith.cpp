#include "artin/smith.hpp"

#include <limits>
#include <utility>

#include "artin/error.hpp"

namespace artin {

namespace {

// Pivot preference: smaller span; ties keep the first position.
std::pair<int, std::size_t> pivot_cost(const LaurentPoly& e) { return {e.span(), 0}; }

class SmithReducer {
 public:
  SmithReducer(const PolyMatrix& a, bool with_transforms)
      : d_(a), track_(with_transforms), dom_(a.domain()) {
    if (track_) {
      u_ = PolyMatrix::identity(a.rows(), dom_);
      v_ = PolyMatrix::identity(a.cols(), dom_);
    }
  }

  SmithDecomposition run() {
    // Over Q every nonzero scalar is a unit, so rows are kept integral and
    // primitive during elimination; pivots are made monic at the end.
    for (std::size_t r = 0; r < d_.rows(); ++r) {
      mpz_class den = 1;
      for (std::size_t c = 0; c < d_.cols(); ++c) den = lcm(den, denominator_lcm(d_(r, c)));
      if (den != 1) scale_row(r, Scalar(den));
      make_row_primitive(r);
    }
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    std::vector<LaurentPoly> factors;
    for (std::size_t t = 0; t < steps; ++t) {
      if (!move_min_span_pivot(t)) break;
      reduce_at(t);
      normalize_pivot(t);
      factors.push_back(d_(t, t));
    }
    return {std::move(u_), std::move(d_), std::move(v_), std::move(factors)};
  }

 private:
  // Smallest-span nonzero entry of the trailing block, ties by position.
  bool move_min_span_pivot(std::size_t t) {
    std::pair<int, std::size_t> best{std::numeric_limits<int>::max(), 0};
    std::size_t br = 0, bc = 0;
    for (std::size_t r = t; r < d_.rows(); ++r) {
      for (std::size_t c = t; c < d_.cols(); ++c) {
        const auto& e = d_(r, c);
        if (e.is_zero()) continue;
        const auto cost = pivot_cost(e);
        if (cost < best) {
          best = cost;
          br = r;
          bc = c;
        }
      }
    }
    if (best.first == std::numeric_limits<int>::max()) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  void reduce_at(std::size_t t) {
    while (true) {
      const LaurentPoly pivot = d_(t, t);
      bool clean = true;
      for (std::size_t r = t + 1; r < d_.rows(); ++r) {
        if (d_(r, t).is_zero()) continue;
        auto [quot, rem] = divmod(d_(r, t), pivot);
        if (!quot.is_zero()) {
          // c * row_r - (c * quot) * row_t with c clearing the quotient's denominators
          const mpz_class c = denominator_lcm(quot);
          if (c != 1) {
            scale_row(r, Scalar(c));
            quot = quot.scaled(Scalar(c));
          }
          add_row_multiple(r, t, -quot);
          make_row_primitive(r);
        }
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t c = t + 1; c < d_.cols(); ++c) {
        if (d_(t, c).is_zero()) continue;
        auto [quot, rem] = divmod(d_(t, c), pivot);
        if (!quot.is_zero()) {
          const mpz_class k = denominator_lcm(quot);
          if (k != 1) {
            scale_col(c, Scalar(k));
            quot = quot.scaled(Scalar(k));
          }
          add_col_multiple(c, t, -quot);
          make_col_primitive(c);
        }
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) {
        move_min_span_in_cross(t);
        continue;
      }
      // Row and column cleared; the pivot must also divide the trailing block.
      bool divides_all = true;
      for (std::size_t r = t + 1; r < d_.rows() && divides_all; ++r) {
        for (std::size_t c = t + 1; c < d_.cols(); ++c) {
          if (d_(r, c).is_zero()) continue;
          if (!divmod(d_(r, c), pivot).second.is_zero()) {
            add_row_multiple(t, r, LaurentPoly::constant(dom_, 1));
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) return;
    }
  }

  void move_min_span_in_cross(std::size_t t) {
    std::pair<int, std::size_t> best{std::numeric_limits<int>::max(), 0};
    std::size_t br = t, bc = t;
    for (std::size_t r = t + 1; r < d_.rows(); ++r) {
      if (d_(r, t).is_zero()) continue;
      const auto cost = pivot_cost(d_(r, t));
      if (cost < best) {
        best = cost;
        br = r;
        bc = t;
      }
    }
    for (std::size_t c = t + 1; c < d_.cols(); ++c) {
      if (d_(t, c).is_zero()) continue;
      const auto cost = pivot_cost(d_(t, c));
      if (cost < best) {
        best = cost;
        br = t;
        bc = c;
      }
    }
    swap_rows(t, br);
    swap_cols(t, bc);
  }

  void normalize_pivot(std::size_t t) {
    const LaurentPoly& p = d_(t, t);
    if (p.valuation() == 0 && p.leading() == 1) return;
    const LaurentPoly unit = LaurentPoly::monomial(dom_, dom_.inverse(p.leading()), -p.valuation());
    for (std::size_t c = 0; c < d_.cols(); ++c) {
      if (!d_(t, c).is_zero()) d_(t, c) = d_(t, c) * unit;
    }
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) {
        if (!u_(t, c).is_zero()) u_(t, c) = u_(t, c) * unit;
      }
    }
  }

  static mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
  }

  static mpz_class denominator_lcm(const LaurentPoly& p) {
    mpz_class den = 1;
    for (int k = p.valuation(); k <= p.top_exponent() && !p.is_zero(); ++k) {
      den = lcm(den, p.coefficient(k).get_den());
    }
    return den;
  }

  bool rational() const { return dom_.kind() == Domain::Kind::Rational; }

  void scale_row(std::size_t r, const Scalar& c) {
    for (std::size_t j = 0; j < d_.cols(); ++j) d_(r, j) = d_(r, j).scaled(c);
    if (track_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = u_(r, j).scaled(c);
    }
  }

  void scale_col(std::size_t c, const Scalar& k) {
    for (std::size_t i = 0; i < d_.rows(); ++i) d_(i, c) = d_(i, c).scaled(k);
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, c) = v_(i, c).scaled(k);
    }
  }

  // gcd of the integer coefficients seen so far; 0 once a fraction shows up
  static bool accumulate_content(const LaurentPoly& p, mpz_class& g) {
    for (int k = p.valuation(); k <= p.top_exponent() && !p.is_zero(); ++k) {
      const Scalar x = p.coefficient(k);
      if (x.get_den() != 1) return false;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    return true;
  }

  void make_row_primitive(std::size_t r) {
    if (!rational()) return;
    mpz_class g = 0;
    for (std::size_t j = 0; j < d_.cols(); ++j) {
      if (!accumulate_content(d_(r, j), g)) return;
    }
    if (track_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) {
        if (!accumulate_content(u_(r, j), g)) return;
      }
    }
    if (g > 1) scale_row(r, Scalar(mpz_class(1), g));
  }

  void make_col_primitive(std::size_t c) {
    if (!rational()) return;
    mpz_class g = 0;
    for (std::size_t i = 0; i < d_.rows(); ++i) {
      if (!accumulate_content(d_(i, c), g)) return;
    }
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) {
        if (!accumulate_content(v_(i, c), g)) return;
      }
    }
    if (g > 1) scale_col(c, Scalar(mpz_class(1), g));
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
    }
  }

  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const LaurentPoly& factor) {
    for (std::size_t c = 0; c < d_.cols(); ++c) {
      if (!d_(source, c).is_zero()) d_(target, c) += factor * d_(source, c);
    }
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) {
        if (!u_(source, c).is_zero()) u_(target, c) += factor * u_(source, c);
      }
    }
  }

  // col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const LaurentPoly& factor) {
    for (std::size_t r = 0; r < d_.rows(); ++r) {
      if (!d_(r, source).is_zero()) d_(r, target) += d_(r, source) * factor;
    }
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) {
        if (!v_(r, source).is_zero()) v_(r, target) += v_(r, source) * factor;
      }
    }
  }

  PolyMatrix d_;
  PolyMatrix u_;
  PolyMatrix v_;
  bool track_;
  Domain dom_;
};

}  // namespace

SmithDecomposition smith_normal_form(const PolyMatrix& a, SmithOptions options) {
  if (!a.domain().is_field()) {
    throw Error(Errc::UnsupportedDomain,
                "Smith normal form needs field coefficients; " + a.domain().name() +
                    "[q,q^-1] is not a PID");
  }
  return SmithReducer(a, options.with_transforms).run();
}

}  // namespace artin
