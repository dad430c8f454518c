#ifndef LIEOPS_PARABOLIC_HPP
#define LIEOPS_PARABOLIC_HPP

#include "lieops/lie_core.hpp"

#include <string_view>
#include <vector>

namespace lieops {

/// A crossed Dynkin diagram. `crossed` holds sorted, distinct, 0-based node indices.
struct ParabolicDatum {
  CartanDatum datum;
  std::vector<int> crossed;

  bool is_crossed(int node) const;
  std::vector<int> uncrossed() const;
};

/// Validates and normalizes a crossing. Throws DomainError on an empty or
/// out-of-range node set.
ParabolicDatum make_parabolic(CartanDatum datum, std::vector<int> crossed_zero_based);

/// Parses a comma separated list of 1-based node indices, e.g. "1,4".
ParabolicDatum parse_crossing(CartanDatum datum, std::string_view spec);

/// One Levi-irreducible block of f* = g_1, attached to a crossed simple root.
struct FStarBlock {
  int crossed_node = 0;
  std::vector<Root> roots;
};

/// The |k|-grading induced by a crossing.
struct GradingReport {
  ParabolicDatum parabolic;
  int depth = 0;
  std::vector<Root> positive;
  std::vector<int> height_of;               ///< parallel to `positive`
  std::vector<std::vector<Root>> g_layers;  ///< g_layers[j-1] = roots of height j
  std::vector<Root> f_star_roots;
  std::vector<FStarBlock> f_star_blocks;
  std::vector<Root> levi_roots;
  Weight delta0;

  const CartanDatum& datum() const { return parabolic.datum; }
  int rank() const { return parabolic.datum.rank; }
  /// Height of any root (positive or negative) with respect to the crossing.
  int height(const Root& root) const;
  const std::vector<Root>& layer(int j) const { return g_layers.at(j - 1); }
};

GradingReport grading(const ParabolicDatum& pd, const InvariantForm& form);

/// Height-1 roots.
const std::vector<Root>& f_star_roots(const GradingReport& report);

/// Half sum of the Levi positive roots.
Weight delta0(const GradingReport& report, const InvariantForm& form);

/// (v, alpha^vee) in Z>=0 for every uncrossed simple alpha. Throws DomainError
/// if v is not integral.
bool is_p_dominant(const Weight& v, const GradingReport& report);

/// Eigenvalue of the grading element: sum of the simple-root coordinates of v
/// over crossed nodes.
Rational geometric_weight(const Weight& v, const GradingReport& report, const InvariantForm& form);

}  // namespace lieops

#endif  // LIEOPS_PARABOLIC_HPP
