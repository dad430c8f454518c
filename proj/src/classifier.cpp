#include "lieops/classifier.hpp"

#include "lieops/module_theory.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace lieops {

std::string to_string(Rejection r) {
  switch (r) {
    case Rejection::short_root: return "short-root";
    case Rejection::height_not_one: return "height-not-one";
    case Rejection::k_nonpositive: return "k-nonpositive";
    case Rejection::k_noninteger: return "k-noninteger";
    case Rejection::target_not_dominant: return "target-not-dominant";
  }
  return "unknown";
}

bool Classification::rejected_for(Rejection r) const {
  return std::find(reasons.begin(), reasons.end(), r) != reasons.end();
}

Classification classify_pair(const Weight& lambda, const Root& alpha, const GradingReport& report,
                             const InvariantForm& form) {
  if (!alpha.is_positive() || !form.is_root(alpha)) throw DomainError("direction must be a positive root");
  if (!lambda.is_integral() || !is_p_dominant(lambda, report))
    throw DomainError("source weight " + lambda.str() + " is not p-dominant");

  Classification result;
  if (report.height(alpha) != 1) result.reasons.push_back(Rejection::height_not_one);
  if (!alpha.is_long()) result.reasons.push_back(Rejection::short_root);

  const auto& datum = form.datum();
  const Rational k = -coroot_pairing(lambda + delta(datum), alpha, form);
  std::optional<Weight> target;
  if (!is_integer(k)) {
    result.reasons.push_back(Rejection::k_noninteger);
  } else if (k <= 0) {
    result.reasons.push_back(Rejection::k_nonpositive);
  } else {
    target = lambda + k * root_to_weight(alpha, datum);
    if (!is_p_dominant(*target, report)) result.reasons.push_back(Rejection::target_not_dominant);
  }
  if (!result.reasons.empty()) return result;

  OperatorDescriptor desc;
  desc.source = lambda;
  desc.target = *target;
  desc.direction = alpha;
  desc.order = static_cast<int>(to_long(k));
  desc.constructed = true;
  for (int j = 1; j <= desc.order; ++j) desc.eigen_ladder.push_back(gamma_coefficient(lambda, alpha, j, form));
  result.op = std::move(desc);
  return result;
}

int bruhat_length(const Weight& v, const InvariantForm& form) {
  const Weight shifted = v + delta(form.datum());
  int length = 0;
  for (const Root& beta : form.positive_roots())
    if (coroot_pairing(shifted, beta, form) < 0) ++length;
  return length;
}

std::vector<HasseVertex> bgg_vertices(const Weight& dominant, const GradingReport& report,
                                      const InvariantForm& form, const WeylCaps& caps) {
  if (!dominant.is_integral() ||
      std::any_of(dominant.coords().begin(), dominant.coords().end(), [](const Rational& c) { return c < 0; }))
    throw DomainError("BGG seed " + dominant.str() + " must be g-dominant and integral");
  const Weight d = delta(form.datum());
  std::vector<HasseVertex> vertices;
  for (const Weight& x : weyl_orbit(dominant + d, form, caps)) {
    Weight v = x - d;
    if (!is_p_dominant(v, report)) continue;
    const int length = bruhat_length(v, form);
    vertices.push_back({std::move(v), length});
  }
  std::sort(vertices.begin(), vertices.end(), [](const HasseVertex& a, const HasseVertex& b) {
    if (a.length != b.length) return a.length < b.length;
    return b.weight < a.weight;
  });
  return vertices;
}

HasseGraph bgg_edges(std::vector<HasseVertex> vertices, const GradingReport& report, const InvariantForm& form) {
  const auto& datum = form.datum();
  const Weight d = delta(datum);
  std::map<Weight, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) index.emplace(vertices[i].weight, static_cast<int>(i));

  HasseGraph graph;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const Weight& lambda = vertices[i].weight;
    for (const Root& alpha : form.positive_roots()) {
      const Weight image = reflect(lambda + d, alpha, form) - d;
      auto it = index.find(image);
      if (it == index.end() || vertices[it->second].length != vertices[i].length + 1) continue;
      HasseEdge edge;
      edge.from = static_cast<int>(i);
      edge.to = it->second;
      edge.label = alpha;
      Rational k = -coroot_pairing(lambda + d, alpha, form);
      if (k <= 0) k = -coroot_pairing(image + d, alpha, form);
      edge.order = static_cast<int>(to_long(k));
      edge.constructed = alpha.is_long() && report.height(alpha) == 1;
      edge.style = edge.constructed ? EdgeStyle::full : EdgeStyle::dotted;
      if (!edge.constructed && edge.order == 1 && !alpha.is_long()) edge.note = "first-order-by-SlSo";
      graph.edges.push_back(std::move(edge));
    }
  }
  std::sort(graph.edges.begin(), graph.edges.end(), [](const HasseEdge& a, const HasseEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  graph.vertices = std::move(vertices);
  return graph;
}

TelescopingRecord telescoping_report(const OperatorDescriptor& desc, const InvariantForm& form) {
  const Weight step = root_to_weight(desc.direction, form.datum());
  TelescopingRecord record;
  record.sum = 0;
  Weight prev = desc.source;
  for (int j = 1; j <= desc.order; ++j) {
    Weight next = prev + step;
    record.steps.push_back(psi_eigenvalue(prev, next, form));
    record.sum += record.steps.back();
    if (j - 1 < static_cast<int>(desc.eigen_ladder.size()) && record.sum != desc.eigen_ladder[j - 1])
      throw InvariantViolation("eigenvalue ladder disagrees with gamma coefficient at step " + std::to_string(j));
    prev = std::move(next);
  }
  if (!(prev == desc.target)) throw InvariantViolation("ladder does not end at the target weight");
  if (record.sum != 0) throw InvariantViolation("eigenvalue ladder does not telescope: sum " + to_string(record.sum));
  return record;
}

}  // namespace lieops
