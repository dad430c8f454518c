#include "lieops/parabolic.hpp"

#include <algorithm>

namespace lieops {

bool ParabolicDatum::is_crossed(int node) const {
  return std::binary_search(crossed.begin(), crossed.end(), node);
}

std::vector<int> ParabolicDatum::uncrossed() const {
  std::vector<int> out;
  for (int i = 0; i < datum.rank; ++i)
    if (!is_crossed(i)) out.push_back(i);
  return out;
}

ParabolicDatum make_parabolic(CartanDatum datum, std::vector<int> crossed) {
  if (crossed.empty()) throw DomainError("empty crossing: p = g has no grading");
  std::sort(crossed.begin(), crossed.end());
  if (std::adjacent_find(crossed.begin(), crossed.end()) != crossed.end())
    throw DomainError("repeated node in crossing");
  for (int c : crossed)
    if (c < 0 || c >= datum.rank)
      throw DomainError("crossed node " + std::to_string(c + 1) + " outside 1.." + std::to_string(datum.rank));
  return ParabolicDatum{std::move(datum), std::move(crossed)};
}

ParabolicDatum parse_crossing(CartanDatum datum, std::string_view spec) {
  std::vector<int> nodes;
  for (long n : parse_int_list(spec)) nodes.push_back(static_cast<int>(n) - 1);
  try {
    return make_parabolic(std::move(datum), std::move(nodes));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

int GradingReport::height(const Root& root) const {
  int h = 0;
  for (int c : parabolic.crossed) h += root.coords[c];
  return h;
}

GradingReport grading(const ParabolicDatum& pd, const InvariantForm& form) {
  if (!(pd.datum == form.datum())) throw DomainError("form and parabolic datum disagree on the algebra");
  GradingReport report;
  report.parabolic = pd;
  report.positive = form.positive_roots();
  for (const Root& root : report.positive) {
    const int h = report.height(root);
    report.height_of.push_back(h);
    report.depth = std::max(report.depth, h);
  }
  report.g_layers.resize(report.depth);
  for (std::size_t i = 0; i < report.positive.size(); ++i) {
    const Root& root = report.positive[i];
    const int h = report.height_of[i];
    if (h == 0)
      report.levi_roots.push_back(root);
    else
      report.g_layers[h - 1].push_back(root);
  }
  report.f_star_roots = report.g_layers.at(0);
  // A height-1 root has coefficient 1 on exactly one crossed node; the roots
  // sharing that node form one irreducible Levi module with lowest weight beta_i.
  for (int node : pd.crossed) {
    FStarBlock block{node, {}};
    for (const Root& root : report.f_star_roots)
      if (root.coords[node] == 1) block.roots.push_back(root);
    report.f_star_blocks.push_back(std::move(block));
  }
  report.delta0 = Weight::zero(pd.datum.rank);
  for (const Root& root : report.levi_roots) report.delta0 += root_to_weight(root, pd.datum);
  report.delta0 = Rational(1, 2) * report.delta0;
  return report;
}

const std::vector<Root>& f_star_roots(const GradingReport& report) { return report.f_star_roots; }

Weight delta0(const GradingReport& report, const InvariantForm&) { return report.delta0; }

bool is_p_dominant(const Weight& v, const GradingReport& report) {
  if (!v.is_integral()) throw DomainError("weight " + v.str() + " is not integral");
  // (v, alpha_i^vee) is the i-th fundamental coordinate.
  for (int i : report.parabolic.uncrossed())
    if (v[i] < 0) return false;
  return true;
}

Rational geometric_weight(const Weight& v, const GradingReport& report, const InvariantForm& form) {
  const RationalVector c = form.to_root_basis(v);
  Rational sum = 0;
  for (int node : report.parabolic.crossed) sum += c[node];
  return sum;
}

}  // namespace lieops
