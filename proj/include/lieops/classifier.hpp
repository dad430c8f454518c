#ifndef LIEOPS_CLASSIFIER_HPP
#define LIEOPS_CLASSIFIER_HPP

#include "lieops/lie_core.hpp"
#include "lieops/parabolic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieops {

/// One standard operator V_lambda -> V_mu of order k in direction alpha.
struct OperatorDescriptor {
  Weight source;
  Weight target;
  Root direction;
  int order = 0;
  bool constructed = false;
  /// c_j = 1/2 |alpha|^2 j (j - k) for j = 1..k; the last entry is always 0.
  std::vector<Rational> eigen_ladder;
};

/// Which existence hypothesis failed.
enum class Rejection {
  short_root,
  height_not_one,
  k_nonpositive,
  k_noninteger,
  target_not_dominant,
};

std::string to_string(Rejection r);

/// Either a descriptor or every hypothesis that failed.
struct Classification {
  std::optional<OperatorDescriptor> op;
  std::vector<Rejection> reasons;

  explicit operator bool() const { return op.has_value(); }
  bool rejected_for(Rejection r) const;
};

/// Existence test for the operator from lambda in direction alpha (alpha positive).
/// Throws DomainError if lambda is not p-dominant.
Classification classify_pair(const Weight& lambda, const Root& alpha, const GradingReport& report,
                             const InvariantForm& form);

/// Number of positive roots beta with (v + delta, beta^vee) < 0.
int bruhat_length(const Weight& v, const InvariantForm& form);

struct HasseVertex {
  Weight weight;
  int length = 0;
};

/// The p-dominant part of the affine Weyl orbit W.(Lambda + delta) - delta,
/// sorted by length and then by weight.
std::vector<HasseVertex> bgg_vertices(const Weight& dominant, const GradingReport& report,
                                      const InvariantForm& form, const WeylCaps& caps = {});

enum class EdgeStyle { full, dotted };

struct HasseEdge {
  int from = 0;
  int to = 0;
  Root label;
  int order = 0;
  bool constructed = false;
  EdgeStyle style = EdgeStyle::dotted;
  /// Set to "first-order-by-SlSo" on non-constructed first-order short-root edges.
  std::string note;
};

struct HasseGraph {
  std::vector<HasseVertex> vertices;
  std::vector<HasseEdge> edges;
};

/// Single-reflection, length-raising edges between the given vertices.
HasseGraph bgg_edges(std::vector<HasseVertex> vertices, const GradingReport& report, const InvariantForm& form);

struct TelescopingRecord {
  /// Per-step eigenvalues psi(lambda + (j-1) alpha -> lambda + j alpha).
  std::vector<Rational> steps;
  Rational sum;
};

/// Recomputes the eigenvalue ladder and checks that it telescopes to zero and
/// agrees with the stored gamma ladder. Throws InvariantViolation otherwise.
TelescopingRecord telescoping_report(const OperatorDescriptor& desc, const InvariantForm& form);

}  // namespace lieops

#endif  // LIEOPS_CLASSIFIER_HPP
