#ifndef LIEOPS_SYMBOLIC_HPP
#define LIEOPS_SYMBOLIC_HPP

#include "lieops/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lieops {

/// Composition (a_0, ..., a_m) standing for D^{a_0}(G (x) D^{a_1}(G (x) ... D^{a_m} s)),
/// where G is the Ricci-type term inserted by the recurrence.
using Word = std::vector<int>;

int gamma_degree(const Word& w);
/// Sum of the a_i plus two per G.
int word_order(const Word& w);

/// Canonical order: by G-degree, then by (a_m, ..., a_0) ascending.
struct CanonicalWordLess {
  bool operator()(const Word& a, const Word& b) const;
};

using TermMap = std::map<Word, Integer, CanonicalWordLess>;

struct FormulaTerm {
  Integer coefficient;
  Word word;

  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

/// D_k in normal form. G = -1/2 |alpha|^2 r^D for the chosen form normalization.
struct UniversalFormula {
  int order = 0;
  std::vector<FormulaTerm> terms;

  /// Coefficient of `w`, zero when absent.
  Integer coefficient(const Word& w) const;
  friend bool operator==(const UniversalFormula&, const UniversalFormula&) = default;
};

inline constexpr int default_order_cap = 32;

/// D_{k,0}, ..., D_{k,k} from
///   D_{k,j+1} = D o D_{k,j} + j(k-j) G (x) D_{k,j-1},  D_{k,0} = id,  D_{k,1} = D.
std::vector<TermMap> expand_partials(int k, int cap = default_order_cap);

/// One step of the recurrence producing D_{k,j+1}.
TermMap recurrence_step(int k, int j, const TermMap& current, const TermMap& previous);

/// D_k = D_{k,k}. Throws CapExceeded when k > cap and DomainError when k < 0.
UniversalFormula expand_Dk(int k, int cap = default_order_cap);

UniversalFormula to_formula(int order, const TermMap& terms);

enum class RenderFormat { text, latex, json };

/// text: "D^3 s + 2 D(G s) + 2 G Ds"; latex: an align body; json: {order, terms}.
std::string render(const UniversalFormula& f, RenderFormat format);
std::string render_word_text(const Word& w);

/// Inverse of the json rendering. Throws ParseError.
UniversalFormula parse_formula_json(std::string_view text);

struct FactorWitness {
  Word word;
  Integer coefficient;
  /// For each G, read outermost first: the G-linear word with the same amount
  /// of derivative order to its right, and that word's coefficient in D_k.
  std::vector<std::pair<Word, Integer>> factors;
  Integer product;
};

struct FactorizationReport {
  int order = 0;
  std::vector<FactorWitness> witnesses;  ///< one per term with two or more G
  bool holds = true;
};

/// Checks that nonlinear coefficients are products of linear ones. Requires k >= 2.
FactorizationReport factorization_check(int k, int cap = default_order_cap);

/// Terms of the summed closed form, one per G-position set, uncollapsed, each
/// weighted by prod_t (r_t + 1)(k - r_t - 1) with r_t the order to the right of
/// the t-th G.
std::vector<FormulaTerm> summed_form_terms(int k, int cap = default_order_cap);

/// Aggregates summed_form_terms(k) and compares with expand_Dk(k).
bool summed_form_check(int k, int cap = default_order_cap);

/// (D^{p_1} G)(D^{p_2} G) ... (D^{p_m} G) D^q s.
struct LeibnizTerm {
  Integer coefficient;
  std::vector<int> gamma_derivatives;
  int trailing = 0;

  friend bool operator==(const LeibnizTerm&, const LeibnizTerm&) = default;
};

/// Distributes every D across the G factors by the product rule.
std::vector<LeibnizTerm> leibniz_expand(const UniversalFormula& f);
std::string render_leibniz_text(const std::vector<LeibnizTerm>& terms);

/// Polynomial in (g, y, x) keyed by exponents.
using ScalarPolynomial = std::map<std::array<int, 3>, Integer>;

/// Evaluation with s = e^{xt}, G = g e^{yt} and D = d/dt at t = 0. Both normal
/// forms of the same operator give the same polynomial.
ScalarPolynomial scalar_evaluate(const UniversalFormula& f);
ScalarPolynomial scalar_evaluate(const std::vector<LeibnizTerm>& terms);

}  // namespace lieops

#endif  // LIEOPS_SYMBOLIC_HPP
