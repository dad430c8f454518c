#include "lieops/module_theory.hpp"

#include <algorithm>
#include <set>

namespace lieops {

namespace {

bool supported_on(const Root& root, const std::vector<int>& nodes) {
  for (std::size_t i = 0; i < root.coords.size(); ++i)
    if (root.coords[i] != 0 && !std::binary_search(nodes.begin(), nodes.end(), static_cast<int>(i)))
      return false;
  return true;
}

}  // namespace

Levi make_levi(const InvariantForm& form, std::vector<int> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  Levi levi;
  levi.nodes = std::move(nodes);
  levi.delta = Weight::zero(form.rank());
  for (const Root& root : form.positive_roots()) {
    if (!supported_on(root, levi.nodes)) continue;
    levi.positive.push_back(root);
    levi.delta += root_to_weight(root, form.datum());
  }
  levi.delta = Rational(1, 2) * levi.delta;
  return levi;
}

Levi levi_of(const GradingReport& report) {
  Levi levi;
  levi.nodes = report.parabolic.uncrossed();
  levi.positive = report.levi_roots;
  levi.delta = report.delta0;
  return levi;
}

bool is_levi_dominant(const Weight& v, const Levi& levi) {
  for (int i : levi.nodes)
    if (!is_integer(v[i]) || v[i] < 0) return false;
  return true;
}

Character freudenthal_character(const Weight& highest, const Levi& levi, const InvariantForm& form) {
  if (!is_levi_dominant(highest, levi))
    throw DomainError("highest weight " + highest.str() + " is not Levi dominant");
  const auto& datum = form.datum();
  std::vector<Weight> root_weights;
  std::vector<int> root_heights;
  std::vector<Rational> root_norms;
  for (const Root& root : levi.positive) {
    root_weights.push_back(root_to_weight(root, datum));
    root_heights.push_back(root.height());
    root_norms.push_back(form.norm2(root));
  }
  std::vector<Weight> simple_weights;
  for (int i : levi.nodes) {
    Root r;
    r.coords.assign(datum.rank, 0);
    r.coords[i] = 1;
    simple_weights.push_back(root_to_weight(r, datum));
  }

  const Rational top = form.norm2(highest + levi.delta);
  Character ch{{highest, Integer(1)}};
  std::vector<Weight> layer{highest};
  for (int level = 1; !layer.empty(); ++level) {
    std::set<Weight> candidates;
    for (const Weight& mu : layer)
      for (const Weight& s : simple_weights) candidates.insert(mu - s);
    std::vector<Weight> next;
    for (const Weight& mu : candidates) {
      Rational numerator = 0;
      for (std::size_t a = 0; a < root_weights.size(); ++a) {
        Weight shifted = mu;
        for (int t = 1; t * root_heights[a] <= level; ++t) {
          shifted += root_weights[a];
          auto it = ch.find(shifted);
          if (it == ch.end()) continue;
          // (mu + t alpha, alpha) with alpha = root_weights[a]
          numerator += Rational(it->second) * form(shifted, levi.positive[a]);
        }
      }
      numerator *= 2;
      const Rational denominator = top - form.norm2(mu + levi.delta);
      if (denominator == 0) {
        if (numerator != 0) throw InvariantViolation("Freudenthal recursion hit a zero denominator");
        continue;
      }
      const Rational m = numerator / denominator;
      if (!is_integer(m) || m < 0) throw InvariantViolation("non-integral weight multiplicity");
      if (m == 0) continue;
      ch.emplace(mu, m.get_num());
      next.push_back(mu);
    }
    layer = std::move(next);
  }
  return ch;
}

Integer weyl_dimension(const Weight& highest, const Levi& levi, const InvariantForm& form) {
  Rational dim = 1;
  const Weight shifted = highest + levi.delta;
  for (const Root& root : levi.positive) dim *= form(shifted, root) / form(levi.delta, root);
  if (!is_integer(dim)) throw InvariantViolation("Weyl dimension formula gave a non-integer");
  return dim.get_num();
}

Integer character_dimension(const Character& ch) {
  Integer total = 0;
  for (const auto& [w, m] : ch) total += m;
  return total;
}

std::vector<IsotypicComponent> klimyk_decompose(const Weight& lambda, const Character& module_weights,
                                                const Levi& levi, const InvariantForm& form,
                                                MultiplicityPolicy policy) {
  if (!is_levi_dominant(lambda, levi))
    throw DomainError("weight " + lambda.str() + " is not Levi dominant");
  const auto& datum = form.datum();
  std::map<Weight, Integer> acc;
  for (const auto& [nu, mult] : module_weights) {
    Weight x = lambda + nu + levi.delta;
    int sign = 1;
    bool singular = false;
    // Walk into the dominant chamber by simple reflections; each step strictly
    // raises x in the dominance order, so this terminates.
    while (true) {
      auto bad = std::find_if(levi.nodes.begin(), levi.nodes.end(), [&](int i) { return x[i] <= 0; });
      if (bad == levi.nodes.end()) break;
      if (x[*bad] == 0) {
        singular = true;
        break;
      }
      x = simple_reflect(x, *bad, datum);
      sign = -sign;
    }
    if (singular) continue;
    acc[x - levi.delta] += sign * mult;
  }
  std::vector<IsotypicComponent> out;
  for (auto& [w, m] : acc) {
    if (m == 0) continue;
    if (m < 0) throw InvariantViolation("Klimyk sum produced a negative multiplicity at " + w.str());
    if (policy == MultiplicityPolicy::require_free && m > 1)
      throw MultiplicityOverflow("component " + w.str() + " has multiplicity " + to_string(m));
    out.push_back({w, m});
  }
  return out;
}

std::vector<IsotypicComponent> klimyk_decompose(const Weight& lambda, const Character& module_weights,
                                                const GradingReport& report, const InvariantForm& form,
                                                MultiplicityPolicy policy) {
  return klimyk_decompose(lambda, module_weights, levi_of(report), form, policy);
}

Character f_star_block_character(const GradingReport& report, int block) {
  const auto& b = report.f_star_blocks.at(block);
  Character ch;
  for (const Root& root : b.roots) ch[-root_to_weight(root, report.datum())] += 1;
  return ch;
}

Weight f_star_block_highest_weight(const GradingReport& report, int block) {
  Root beta;
  beta.coords.assign(report.rank(), 0);
  beta.coords[report.f_star_blocks.at(block).crossed_node] = 1;
  return -root_to_weight(beta, report.datum());
}

Rational casimir_scalar(const Weight& lambda, const GradingReport& report, const InvariantForm& form) {
  return form(lambda, lambda + Rational(2) * report.delta0);
}

Rational psi_eigenvalue(const Weight& lambda, const Weight& mu, const InvariantForm& form) {
  const Weight d = delta(form.datum());
  return (form.norm2(mu + d) - form.norm2(lambda + d)) / 2;
}

Rational psi_eigenvalue_via_casimir(const Weight& lambda, const Weight& mu, int block,
                                    const GradingReport& report, const InvariantForm& form) {
  const Weight nu = f_star_block_highest_weight(report, block);
  return (casimir_scalar(mu, report, form) - casimir_scalar(lambda, report, form) -
          casimir_scalar(nu, report, form)) /
         2;
}

PsiSpectrum psi_spectrum(const Weight& lambda, int block, const GradingReport& report, const InvariantForm& form) {
  const Levi levi = levi_of(report);
  if (!is_levi_dominant(lambda, levi)) throw DomainError("weight " + lambda.str() + " is not Levi dominant");
  if (block < 0 || block >= static_cast<int>(report.f_star_blocks.size()))
    throw DomainError("no f* block with index " + std::to_string(block + 1));
  PsiSpectrum spectrum;
  spectrum.source = lambda;
  spectrum.block = block;
  const auto components = klimyk_decompose(lambda, f_star_block_character(report, block), levi, form,
                                            MultiplicityPolicy::require_free);
  for (const auto& c : components)
    spectrum.entries.push_back({c, psi_eigenvalue(lambda, c.highest_weight, form)});
  return spectrum;
}

Rational gamma_coefficient(const Weight& lambda, const Root& alpha, int j, const InvariantForm& form) {
  if (j < 1) throw DomainError("ladder index must be at least 1");
  if (!form.is_root(alpha)) throw DomainError("direction is not a root");
  const auto& datum = form.datum();
  const Weight d = delta(datum);
  const Rational k = -coroot_pairing(lambda + d, alpha, form);
  const Weight step = Rational(j) * root_to_weight(alpha, datum);
  const Rational direct = (form.norm2(lambda + step + d) - form.norm2(lambda + d)) / 2;
  const Rational closed = form.norm2(alpha) * j * (j - k) / 2;
  if (direct != closed)
    throw InvariantViolation("gamma coefficient mismatch: " + to_string(direct) + " vs " + to_string(closed));
  return direct;
}

}  // namespace lieops
