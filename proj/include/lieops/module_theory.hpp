#ifndef LIEOPS_MODULE_THEORY_HPP
#define LIEOPS_MODULE_THEORY_HPP

#include "lieops/lie_core.hpp"
#include "lieops/parabolic.hpp"

#include <map>
#include <vector>

namespace lieops {

/// Reductive subalgebra spanned by the Cartan and the roots supported on `nodes`.
///
/// Weights stay in the fundamental basis of the ambient algebra; the centre acts
/// through the coordinates on the remaining nodes.
struct Levi {
  std::vector<int> nodes;
  std::vector<Root> positive;
  Weight delta;  ///< half sum of `positive`
};

Levi make_levi(const InvariantForm& form, std::vector<int> nodes);
Levi levi_of(const GradingReport& report);

/// Integral and non-negative on every Levi simple coroot.
bool is_levi_dominant(const Weight& v, const Levi& levi);

/// Weight -> multiplicity.
using Character = std::map<Weight, Integer>;

/// Weight multiplicities of the irreducible Levi module with the given highest
/// weight, by Freudenthal's recursion.
Character freudenthal_character(const Weight& highest, const Levi& levi, const InvariantForm& form);

/// Weyl dimension formula, evaluated exactly.
Integer weyl_dimension(const Weight& highest, const Levi& levi, const InvariantForm& form);

Integer character_dimension(const Character& ch);

struct IsotypicComponent {
  Weight highest_weight;
  Integer multiplicity;

  friend bool operator==(const IsotypicComponent&, const IsotypicComponent&) = default;
};

/// Raised when an f* (x) V_lambda decomposition is not multiplicity free.
class MultiplicityOverflow : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

enum class MultiplicityPolicy { allow, require_free };

/// Klimyk's rule: V_lambda (x) M = sum over weights nu of M of
/// sign(w) V_{w(lambda + nu + delta_L) - delta_L}. Components sorted by weight.
std::vector<IsotypicComponent> klimyk_decompose(const Weight& lambda, const Character& module_weights,
                                                const Levi& levi, const InvariantForm& form,
                                                MultiplicityPolicy policy = MultiplicityPolicy::allow);

std::vector<IsotypicComponent> klimyk_decompose(const Weight& lambda, const Character& module_weights,
                                                const GradingReport& report, const InvariantForm& form,
                                                MultiplicityPolicy policy = MultiplicityPolicy::allow);

/// Weights of the i-th block of f*, i.e. minus the height-1 roots attached to the
/// i-th crossed node, each with multiplicity one. Highest weight is -beta_i.
Character f_star_block_character(const GradingReport& report, int block);
Weight f_star_block_highest_weight(const GradingReport& report, int block);

/// (lambda, lambda + 2 delta_0): the Levi Casimir on V_lambda.
Rational casimir_scalar(const Weight& lambda, const GradingReport& report, const InvariantForm& form);

/// c = 1/2 (|mu + delta|^2 - |lambda + delta|^2).
Rational psi_eigenvalue(const Weight& lambda, const Weight& mu, const InvariantForm& form);

/// The same eigenvalue through Levi Casimirs,
/// 1/2 [C(mu) - C(lambda) - C(-beta_i)], for mu a component of f*_i (x) V_lambda.
Rational psi_eigenvalue_via_casimir(const Weight& lambda, const Weight& mu, int block,
                                    const GradingReport& report, const InvariantForm& form);

struct PsiEntry {
  IsotypicComponent component;
  Rational eigenvalue;
};

struct PsiSpectrum {
  Weight source;
  int block = 0;
  std::vector<PsiEntry> entries;
};

/// Eigenvalues of Psi on each isotypic component of f*_block (x) V_lambda.
/// Throws DomainError if lambda is not Levi dominant, MultiplicityOverflow if the
/// decomposition has repeated components.
PsiSpectrum psi_spectrum(const Weight& lambda, int block, const GradingReport& report, const InvariantForm& form);

/// 1/2 (|lambda + j alpha + delta|^2 - |lambda + delta|^2), cross-checked against
/// 1/2 |alpha|^2 j (j - k) with k = -(lambda + delta, alpha^vee).
Rational gamma_coefficient(const Weight& lambda, const Root& alpha, int j, const InvariantForm& form);

}  // namespace lieops

#endif  // LIEOPS_MODULE_THEORY_HPP
