#include "artin/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <unordered_set>

#include "artin/cyclotomic.hpp"
#include "artin/error.hpp"

namespace artin {

// ---------------------------------------------------------------------------
// Labels

namespace {
void validate_rank(const FiniteTypeLabel& label);
}

FiniteTypeLabel FiniteTypeLabel::parse(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  auto invalid = [&]() -> Error {
    return Error(Errc::InvalidLabel, "unrecognized Coxeter type '" + raw + "'");
  };
  if (text.size() < 2) throw invalid();
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto parse_int = [&](const std::string& digits) {
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw invalid();
    }
    return std::stoi(digits);
  };
  FiniteTypeLabel label;
  if (family == 'G') {
    if (text.substr(1) != "2") throw invalid();
    label = {Family::I, 2, 6};
  } else if (family == 'I') {
    const auto open = text.find('(');
    if (open == std::string::npos || text.back() != ')') throw invalid();
    label.family = Family::I;
    label.rank = parse_int(text.substr(1, open - 1));
    label.m = parse_int(text.substr(open + 1, text.size() - open - 2));
  } else {
    switch (family) {
      case 'A': label.family = Family::A; break;
      case 'B': label.family = Family::B; break;
      case 'C': label.family = Family::B; break;  // same Coxeter group
      case 'D': label.family = Family::D; break;
      case 'E': label.family = Family::E; break;
      case 'F': label.family = Family::F; break;
      case 'H': label.family = Family::H; break;
      default: throw invalid();
    }
    label.rank = parse_int(text.substr(1));
  }
  validate_rank(label);
  return label;
}

std::string FiniteTypeLabel::to_string() const {
  std::string s(1, static_cast<char>(family));
  s += std::to_string(rank);
  if (family == Family::I) s += "(" + std::to_string(m) + ")";
  return s;
}

namespace {

void validate_rank(const FiniteTypeLabel& label) {
  using F = FiniteTypeLabel::Family;
  const int n = label.rank;
  bool ok = false;
  switch (label.family) {
    case F::A: ok = n >= 1; break;
    case F::B: ok = n >= 2; break;
    case F::D: ok = n >= 2; break;
    case F::E: ok = n >= 6 && n <= 8; break;
    case F::F: ok = n == 4; break;
    case F::H: ok = n == 3 || n == 4; break;
    case F::I: ok = n == 2 && label.m >= 2; break;
  }
  if (!ok) throw Error(Errc::InvalidRank, "no finite Coxeter type " + label.to_string());
  if (n > kMaxGenerators) {
    throw Error(Errc::InvalidRank, label.to_string() + " exceeds " +
                                       std::to_string(kMaxGenerators) + " generators");
  }
}

}  // namespace

std::vector<int> degrees(const FiniteTypeLabel& label) {
  using F = FiniteTypeLabel::Family;
  validate_rank(label);
  const int n = label.rank;
  std::vector<int> d;
  switch (label.family) {
    case F::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case F::B:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case F::D:
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case F::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case F::F:
      d = {2, 6, 8, 12};
      break;
    case F::H:
      d = n == 3 ? std::vector<int>{2, 6, 10} : std::vector<int>{2, 12, 20, 30};
      break;
    case F::I:
      d = {2, label.m};
      break;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Systems

CoxeterSystem::CoxeterSystem(std::vector<std::vector<int>> coxeter_matrix)
    : m_(std::move(coxeter_matrix)) {
  const std::size_t n = m_.size();
  if (n > static_cast<std::size_t>(kMaxGenerators)) {
    throw Error(Errc::InvalidRank, "at most " + std::to_string(kMaxGenerators) + " generators");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw Error(Errc::InvalidRank, "Coxeter matrix is not square");
    if (m_[i][i] != 1) throw Error(Errc::InvalidRank, "Coxeter matrix needs m(s,s) = 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (m_[i][j] < 2 || m_[i][j] != m_[j][i])) {
        throw Error(Errc::InvalidRank, "Coxeter matrix entries must be symmetric and >= 2");
      }
    }
  }
}

bool CoxeterSystem::is_irreducible() const {
  const int n = rank();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{1};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int s = stack.back();
    stack.pop_back();
    for (int t = 1; t <= n; ++t) {
      if (!seen[static_cast<std::size_t>(t - 1)] && t != s && m(s, t) >= 3) {
        seen[static_cast<std::size_t>(t - 1)] = true;
        ++count;
        stack.push_back(t);
      }
    }
  }
  return count == n;
}

CoxeterSystem CoxeterSystem::disjoint_union(const CoxeterSystem& other) const {
  const std::size_t a = m_.size();
  const std::size_t n = a + other.m_.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) m[i][j] = m_[i][j];
  }
  for (std::size_t i = 0; i < other.m_.size(); ++i) {
    for (std::size_t j = 0; j < other.m_.size(); ++j) m[a + i][a + j] = other.m_[i][j];
  }
  CoxeterSystem out(std::move(m));
  out.set_name(a == 0 ? other.name_ : name_ + "x" + other.name_);
  return out;
}

CoxeterSystem finite_type_system(const FiniteTypeLabel& label) {
  using F = FiniteTypeLabel::Family;
  validate_rank(label);
  const int n = label.rank;
  std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 2));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  auto edge = [&](int s, int t, int label_m) {
    m[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)] = label_m;
    m[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(s - 1)] = label_m;
  };
  switch (label.family) {
    case F::A:
      for (int i = 1; i < n; ++i) edge(i, i + 1, 3);
      break;
    case F::B:
      edge(1, 2, 4);
      for (int i = 2; i < n; ++i) edge(i, i + 1, 3);
      break;
    case F::D:
      if (n >= 3) {
        for (int i = 1; i < n - 2; ++i) edge(i, i + 1, 3);
        edge(n - 2, n - 1, 3);
        edge(n - 2, n, 3);
      }
      break;
    case F::E:
      edge(1, 3, 3);
      edge(2, 4, 3);
      for (int i = 3; i < n; ++i) edge(i, i + 1, 3);
      break;
    case F::F:
      edge(1, 2, 3);
      edge(2, 3, 4);
      edge(3, 4, 3);
      break;
    case F::H:
      edge(1, 2, 5);
      for (int i = 2; i < n; ++i) edge(i, i + 1, 3);
      break;
    case F::I:
      if (label.m > 2) edge(1, 2, label.m);
      break;
  }
  CoxeterSystem system(std::move(m));
  system.set_name(label.to_string());
  return system;
}

CoxeterSystem parse_coxeter_system(const std::string& text) {
  CoxeterSystem out;
  std::size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    std::size_t stop = text.find_first_of("x*", start);
    if (stop == std::string::npos) stop = text.size();
    const std::string piece = text.substr(start, stop - start);
    if (piece.empty()) throw Error(Errc::InvalidLabel, "empty factor in '" + text + "'");
    out = out.disjoint_union(finite_type_system(FiniteTypeLabel::parse(piece)));
    any = true;
    start = stop + 1;
  }
  if (!any) throw Error(Errc::InvalidLabel, "empty Coxeter type");
  if (out.rank() > kMaxGenerators) {
    throw Error(Errc::InvalidRank, "at most " + std::to_string(kMaxGenerators) + " generators");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parabolic classification

namespace {

using Family = FiniteTypeLabel::Family;

FiniteTypeLabel classify_component(const CoxeterSystem& s, const std::vector<int>& nodes) {
  const int k = static_cast<int>(nodes.size());
  auto not_finite = [&]() -> Error {
    std::string list;
    for (int g : nodes) list += (list.empty() ? "" : ",") + std::to_string(g);
    return Error(Errc::NotFiniteType, "component {" + list + "} is not a finite Coxeter diagram");
  };
  if (k == 1) return {Family::A, 1, 0};
  if (k == 2) {
    const int m = s.m(nodes[0], nodes[1]);
    if (m == 3) return {Family::A, 2, 0};
    if (m == 4) return {Family::B, 2, 0};
    return {Family::I, 2, m};
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
  int edges = 0;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (s.m(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]) >= 3) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
        ++edges;
      }
    }
  }
  if (edges != k - 1) throw not_finite();
  int branch = -1;
  for (int i = 0; i < k; ++i) {
    const auto deg = adj[static_cast<std::size_t>(i)].size();
    if (deg > 3) throw not_finite();
    if (deg == 3) {
      if (branch >= 0) throw not_finite();
      branch = i;
    }
  }
  auto label_of = [&](int a, int b) {
    return s.m(nodes[static_cast<std::size_t>(a)], nodes[static_cast<std::size_t>(b)]);
  };
  if (branch < 0) {
    int end = 0;
    while (adj[static_cast<std::size_t>(end)].size() != 1) ++end;
    std::vector<int> labels;
    int prev = -1;
    int cur = end;
    while (true) {
      int next = -1;
      for (int nb : adj[static_cast<std::size_t>(cur)]) {
        if (nb != prev) next = nb;
      }
      if (next < 0) break;
      labels.push_back(label_of(cur, next));
      prev = cur;
      cur = next;
    }
    int odd_pos = -1;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
      if (labels[static_cast<std::size_t>(i)] != 3) {
        if (odd_pos >= 0) throw not_finite();
        odd_pos = i;
      }
    }
    if (odd_pos < 0) return {Family::A, k, 0};
    const int value = labels[static_cast<std::size_t>(odd_pos)];
    const bool at_end = odd_pos == 0 || odd_pos == static_cast<int>(labels.size()) - 1;
    if (value == 4 && at_end) return {Family::B, k, 0};
    if (value == 4 && k == 4 && odd_pos == 1) return {Family::F, 4, 0};
    if (value == 5 && at_end && (k == 3 || k == 4)) return {Family::H, k, 0};
    throw not_finite();
  }
  std::vector<int> arms;
  for (int start : adj[static_cast<std::size_t>(branch)]) {
    if (label_of(branch, start) != 3) throw not_finite();
    int length = 1;
    int prev = branch;
    int cur = start;
    while (true) {
      int next = -1;
      for (int nb : adj[static_cast<std::size_t>(cur)]) {
        if (nb != prev) next = nb;
      }
      if (next < 0) break;
      if (label_of(cur, next) != 3) throw not_finite();
      ++length;
      prev = cur;
      cur = next;
    }
    arms.push_back(length);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, k, 0};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, k, 0};
  throw not_finite();
}

}  // namespace

std::vector<ParabolicComponent> parabolic_components(const CoxeterSystem& system,
                                                     SubsetMask subset) {
  if ((subset & ~full_set(system.rank())) != 0) {
    throw Error(Errc::IndexOutOfRange, "subset " + format_subset(subset) +
                                           " exceeds the generators of " + system.name());
  }
  std::vector<ParabolicComponent> out;
  SubsetMask remaining = subset;
  while (remaining != 0) {
    const int first = std::countr_zero(remaining) + 1;
    SubsetMask component = generator_bit(first);
    std::vector<int> stack{first};
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (int t : members(remaining)) {
        if (!contains(component, t) && system.m(s, t) >= 3) {
          component |= generator_bit(t);
          stack.push_back(t);
        }
      }
    }
    remaining &= ~component;
    ParabolicComponent piece;
    piece.generators = members(component);
    piece.label = classify_component(system, piece.generators);
    out.push_back(std::move(piece));
  }
  return out;
}

LaurentPoly poincare_poly(const CoxeterSystem& system, SubsetMask subset, Domain domain) {
  LaurentPoly w = LaurentPoly::constant(Domain::rationals(), 1);
  for (const auto& piece : parabolic_components(system, subset)) {
    for (int d : degrees(piece.label)) w *= q_bracket(d);
  }
  return w.in_domain(domain);
}

LaurentPoly poincare_quotient(const CoxeterSystem& system, SubsetMask subset, int j,
                              Domain domain) {
  if (j < 1 || j > system.rank() || contains(subset, j)) {
    throw Error(Errc::IndexOutOfRange, "generator " + std::to_string(j) + " is not outside " +
                                           format_subset(subset));
  }
  const LaurentPoly big = poincare_poly(system, subset | generator_bit(j));
  const LaurentPoly small = poincare_poly(system, subset);
  try {
    return divexact(big, small).in_domain(domain);
  } catch (const Error& e) {
    throw Error(Errc::NotDivisible, "internal consistency failure: W_{" + format_subset(subset) +
                                        "} does not divide W_{" +
                                        format_subset(subset | generator_bit(j)) + "} (" +
                                        e.what() + ")");
  }
}

// ---------------------------------------------------------------------------
// Brute-force enumeration

namespace {

/// Z[x] / (Phi_L(x)): exact arithmetic for 2cos(pi/m) = zeta_2m + zeta_2m^-1.
class CyclotomicIntegers {
 public:
  using Element = std::vector<std::int64_t>;

  explicit CyclotomicIntegers(int order) : order_(order) {
    const LaurentPoly phi = cyclotomic(order);
    for (const auto& c : phi.coefficients()) phi_.push_back(c.get_num().get_si());
    degree_ = static_cast<int>(phi_.size()) - 1;
  }

  int degree() const noexcept { return degree_; }

  Element zero() const { return Element(static_cast<std::size_t>(degree_), 0); }
  Element one() const {
    Element e = zero();
    e[0] = 1;
    return e;
  }

  /// zeta^k + zeta^-k for zeta a primitive order-th root of unity.
  Element two_cos(int k) const {
    std::vector<std::int64_t> p(static_cast<std::size_t>(order_), 0);
    const int a = ((k % order_) + order_) % order_;
    const int b = ((-k % order_) + order_) % order_;
    p[static_cast<std::size_t>(a)] += 1;
    p[static_cast<std::size_t>(b)] += 1;
    return reduce(std::move(p));
  }

  Element mul(const Element& a, const Element& b) const {
    std::vector<std::int64_t> p(static_cast<std::size_t>(2 * degree_), 0);
    for (int i = 0; i < degree_; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; j < degree_; ++j) {
        p[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
      }
    }
    return reduce(std::move(p));
  }

 private:
  Element reduce(std::vector<std::int64_t> p) const {
    for (int i = static_cast<int>(p.size()) - 1; i >= degree_; --i) {
      const std::int64_t c = p[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      p[static_cast<std::size_t>(i)] = 0;
      for (int j = 0; j < degree_; ++j) {
        p[static_cast<std::size_t>(i - degree_ + j)] -= c * phi_[static_cast<std::size_t>(j)];
      }
    }
    p.resize(static_cast<std::size_t>(degree_));
    for (auto c : p) {
      if (c > (std::int64_t{1} << 50) || c < -(std::int64_t{1} << 50)) {
        throw Error(Errc::GroupTooLarge, "coordinate overflow during enumeration");
      }
    }
    return p;
  }

  int order_;
  int degree_ = 0;
  std::vector<std::int64_t> phi_;
};

struct VectorHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

LaurentPoly poincare_poly_bruteforce(const CoxeterSystem& system, SubsetMask subset,
                                     std::size_t bound) {
  const Domain q = Domain::rationals();
  const std::vector<int> gens = members(subset);
  const int n = static_cast<int>(gens.size());
  if (n == 0) return LaurentPoly::constant(q, 1);
  if (gens.back() > system.rank()) {
    throw Error(Errc::IndexOutOfRange, "subset exceeds the generators of " + system.name());
  }

  int order = 2;
  for (int a : gens) {
    for (int b : gens) {
      if (a != b) order = std::lcm(order, 2 * system.m(a, b));
    }
  }
  const CyclotomicIntegers ring(order);
  const int deg = ring.degree();

  // coupling[i][j] = 2cos(pi/m(i,j)), absent when the generators commute.
  std::vector<std::vector<CyclotomicIntegers::Element>> coupling(
      static_cast<std::size_t>(n), std::vector<CyclotomicIntegers::Element>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int m = system.m(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)]);
      if (i != j && m >= 3) coupling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = ring.two_cos(order / (2 * m));
    }
  }

  // A point is stored by its coordinates x_j = 2B(alpha_j, v) in Z[zeta]^n,
  // flattened. The start point has every x_j = 1 (open fundamental chamber).
  using Point = std::vector<std::int64_t>;
  Point start(static_cast<std::size_t>(n * deg), 0);
  for (int j = 0; j < n; ++j) start[static_cast<std::size_t>(j * deg)] = 1;

  auto reflect = [&](const Point& x, int i) {
    Point y = x;
    const CyclotomicIntegers::Element xi(x.begin() + i * deg, x.begin() + (i + 1) * deg);
    for (int t = 0; t < deg; ++t) y[static_cast<std::size_t>(i * deg + t)] = -xi[static_cast<std::size_t>(t)];
    for (int j = 0; j < n; ++j) {
      const auto& c = coupling[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c.empty()) continue;
      const auto prod = ring.mul(c, xi);
      for (int t = 0; t < deg; ++t) y[static_cast<std::size_t>(j * deg + t)] += prod[static_cast<std::size_t>(t)];
    }
    return y;
  };

  std::unordered_set<Point, VectorHash> seen{start};
  std::vector<Point> frontier{start};
  std::vector<Scalar> counts;
  while (!frontier.empty()) {
    counts.emplace_back(static_cast<long>(frontier.size()));
    std::vector<Point> next;
    for (const auto& x : frontier) {
      for (int i = 0; i < n; ++i) {
        Point y = reflect(x, i);
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
          if (seen.size() > bound) {
            bool finite = true;
            try {
              parabolic_components(system, subset);
            } catch (const Error&) {
              finite = false;
            }
            throw Error(finite ? Errc::GroupTooLarge : Errc::InfiniteGroup,
                        "enumeration of W_{" + format_subset(subset) + "} exceeded " +
                            std::to_string(bound) + " elements");
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return LaurentPoly::from_coefficients(q, 0, std::move(counts));
}

}  // namespace artin
