#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "artin/laurent.hpp"
#include "artin/subsets.hpp"

namespace artin {

/// Name of an irreducible finite Coxeter diagram.
struct FiniteTypeLabel {
  enum class Family : char { A = 'A', B = 'B', D = 'D', E = 'E', F = 'F', H = 'H', I = 'I' };

  Family family = Family::A;
  int rank = 1;
  /// Edge label for I2(m); unused otherwise.
  int m = 0;

  /// "A3", "B4", "E8", "I2(7)". "G2" is read as I2(6).
  static FiniteTypeLabel parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const FiniteTypeLabel&, const FiniteTypeLabel&) = default;
};

/// Degrees of the basic invariants of the irreducible group.
std::vector<int> degrees(const FiniteTypeLabel& label);

/// Coxeter system with generators 1..n in a fixed total order.
///
/// Numbering conventions: chains run left to right; B_n carries the 4 on
/// edge (1,2); D_n attaches n-1 and n to the branch node n-2; E_n follows
/// Bourbaki (1-3-4-5-...-n with 2 attached to 4); F4 has the 4 on (2,3);
/// H3 and H4 carry the 5 on (1,2).
class CoxeterSystem {
 public:
  CoxeterSystem() = default;
  /// Throws InvalidRank on a malformed matrix.
  explicit CoxeterSystem(std::vector<std::vector<int>> coxeter_matrix);

  int rank() const noexcept { return static_cast<int>(m_.size()); }
  /// m(s, t) for generators s, t in 1..n.
  int m(int s, int t) const { return m_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(t - 1)]; }
  const std::vector<std::vector<int>>& matrix() const noexcept { return m_; }

  /// Connected Coxeter diagram (edges where m >= 3).
  bool is_irreducible() const;
  /// Display name: the labels of the pieces it was built from, or "custom".
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Block-diagonal union; generators of `other` are renumbered after ours.
  CoxeterSystem disjoint_union(const CoxeterSystem& other) const;

 private:
  std::vector<std::vector<int>> m_;
  std::string name_ = "custom";
};

CoxeterSystem finite_type_system(const FiniteTypeLabel& label);

/// Parses a label or an 'x'-separated product of labels, e.g. "A1xA2".
CoxeterSystem parse_coxeter_system(const std::string& text);

struct ParabolicComponent {
  FiniteTypeLabel label;
  /// Generators of the component, increasing.
  std::vector<int> generators;
};

/// Connected components of the diagram induced on `subset`, classified.
/// Throws NotFiniteType for an unrecognized component.
std::vector<ParabolicComponent> parabolic_components(const CoxeterSystem& system,
                                                     SubsetMask subset);

/// W_subset(q) from the degree tables: product over components of [d_i]_q.
LaurentPoly poincare_poly(const CoxeterSystem& system, SubsetMask subset,
                          Domain domain = Domain::rationals());

inline constexpr std::size_t kDefaultEnumerationBound = 1'000'000;

/// Sum over w in W_subset of q^length(w), by breadth-first enumeration of the
/// orbit of a regular point in the geometric representation, with exact
/// arithmetic in Z[zeta_L] for L = 2 lcm(m). Independent of the degree
/// tables. Throws GroupTooLarge or InfiniteGroup past `bound` elements.
LaurentPoly poincare_poly_bruteforce(const CoxeterSystem& system, SubsetMask subset,
                                     std::size_t bound = kDefaultEnumerationBound);

/// W_{subset + j}(q) / W_subset(q), exact. NotDivisible would be an internal
/// consistency failure.
LaurentPoly poincare_quotient(const CoxeterSystem& system, SubsetMask subset, int j,
                              Domain domain = Domain::rationals());

}  // namespace artin
