#ifndef LIEOPS_LIE_CORE_HPP
#define LIEOPS_LIE_CORE_HPP

#include "lieops/rational.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lieops {

enum class Series { A, B, C, D, E, F, G };

char series_letter(Series s);

/// Simple type and rank with its Cartan matrix.
///
/// Entries follow a_ij = (alpha_i, alpha_j^vee) = 2(alpha_i, alpha_j)/(alpha_j, alpha_j),
/// so row i holds the fundamental-weight coordinates of alpha_i. Nodes are numbered
/// as in Bourbaki, except G2 where alpha_1 is the long simple root.
struct CartanDatum {
  Series series = Series::A;
  int rank = 0;
  std::vector<std::vector<int>> cartan_matrix;
  std::vector<std::string> node_labels;

  std::string name() const;
  int entry(int i, int j) const { return cartan_matrix[i][j]; }

  friend bool operator==(const CartanDatum&, const CartanDatum&) = default;
};

/// Builds the standard datum. Throws DomainError on unsupported (series, rank).
CartanDatum make_cartan_datum(Series series, int rank);

/// Parses `<letter><rank>`, e.g. "G2", "A4". Throws ParseError.
CartanDatum parse_dynkin(std::string_view spec);

/// Exact determinant of the Cartan matrix.
Integer cartan_determinant(const CartanDatum& datum);

/// Order of the Weyl group from the standard product formulas.
Integer weyl_group_order(const CartanDatum& datum);

enum class LengthClass { long_root, short_root };

/// A root in simple-root coordinates.
struct Root {
  std::vector<int> coords;
  LengthClass length_class = LengthClass::long_root;

  int height() const;
  bool is_long() const { return length_class == LengthClass::long_root; }
  bool is_positive() const;
  Root operator-() const;

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend auto operator<=>(const Root& a, const Root& b) { return a.coords <=> b.coords; }
};

/// A weight in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(RationalVector coords) : coords_(std::move(coords)) {}
  static Weight zero(int rank);
  static Weight fundamental(int rank, int i);
  static Weight from_ints(const std::vector<long>& coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  const RationalVector& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[i]; }
  Rational& operator[](int i) { return coords_[i]; }
  bool is_integral() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight w);
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Weight& a, const Weight& b) { return lex_less(a.coords_, b.coords_); }

  std::string str() const;

 private:
  RationalVector coords_;
};

/// Fundamental-weight coordinates of a root.
Weight root_to_weight(const Root& root, const CartanDatum& datum);
/// Simple-root coordinates of a weight (rational in general).
RationalVector weight_to_root_basis(const Weight& w, const CartanDatum& datum);
Weight root_basis_to_weight(const RationalVector& c, const CartanDatum& datum);

/// Complete positive system, ordered by height, then by coordinates descending
/// (so simple roots appear in node order).
std::vector<Root> positive_roots(const CartanDatum& datum);

/// Invariant symmetric bilinear form. With scale 1 long roots have (a, a) = 2.
class InvariantForm {
 public:
  InvariantForm(CartanDatum datum, Rational scale);

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank; }
  const Rational& scale() const { return scale_; }
  /// (alpha_i, alpha_j) on simple roots.
  const Rational& gram(int i, int j) const { return gram_[i][j]; }
  /// (omega_i, omega_j) on fundamental weights.
  const Rational& weight_gram(int i, int j) const { return weight_gram_[i][j]; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  Rational operator()(const Weight& a, const Weight& b) const;
  Rational operator()(const Weight& a, const Root& b) const;
  Rational operator()(const Root& a, const Root& b) const;
  Rational norm2(const Weight& w) const { return (*this)(w, w); }
  Rational norm2(const Root& r) const { return (*this)(r, r); }

  bool is_root(const Root& r) const;
  /// Same as weight_to_root_basis, using the cached inverse Cartan matrix.
  RationalVector to_root_basis(const Weight& w) const;

 private:
  CartanDatum datum_;
  Rational scale_;
  std::vector<Rational> simple_norm2_;
  std::vector<RationalVector> gram_;
  std::vector<RationalVector> weight_gram_;
  std::vector<RationalVector> to_root_basis_;
  std::vector<Root> positive_;
};

/// Throws DomainError if scale is zero.
InvariantForm invariant_form(const CartanDatum& datum, const Rational& scale = Rational(1));

/// Half sum of positive roots, i.e. (1, ..., 1) in the fundamental basis.
Weight delta(const CartanDatum& datum);

/// 2(v, alpha)/(alpha, alpha). Independent of the form scale.
Rational coroot_pairing(const Weight& v, const Root& alpha, const InvariantForm& form);

/// sigma_alpha(v) = v - (v, alpha^vee) alpha. Throws DomainError if alpha is not a root.
Weight reflect(const Weight& v, const Root& alpha, const InvariantForm& form);

/// Reflection in the i-th simple root, no validation.
Weight simple_reflect(const Weight& v, int i, const CartanDatum& datum);

struct WeylCaps {
  std::size_t max_orbit = 60000;
  int max_rank = 6;
};

/// The W-orbit of v, sorted. Throws CapExceeded on oversized requests.
std::vector<Weight> weyl_orbit(const Weight& v, const InvariantForm& form, const WeylCaps& caps = {});

/// "α3" style label for the 1-based position of `root` in the positive system;
/// negative roots get a leading minus. Empty if not found.
std::string root_label(const Root& root, const std::vector<Root>& positive);

/// "2α1 + 3α2" in the simple-root basis.
std::string root_expression(const Root& root);

}  // namespace lieops

#endif  // LIEOPS_LIE_CORE_HPP
