#include "lieops/symbolic.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lieops {

namespace {

// Textual conventions for the two human-readable renderings.
struct Notation {
  std::string gamma;
  std::string (*power)(const std::string& base, int n);
  std::string after_gamma;     // between a G block and what follows it
  std::string before_section;  // between D^n (n > 1) and s
};

std::string text_power(const std::string& base, int n) {
  return n == 1 ? base : base + "^" + std::to_string(n);
}

std::string latex_power(const std::string& base, int n) {
  return n == 1 ? base : base + "^{" + std::to_string(n) + "}";
}

const Notation text_notation{"G", text_power, " ", " "};
const Notation latex_notation{"\\Gamma", latex_power, " ", ""};

std::string render_word(const Word& w, const Notation& n) {
  const int m = gamma_degree(w);
  std::string out;
  int closers = 0;
  int pending_gammas = 0;
  auto flush_gammas = [&](const std::string& sep) {
    if (pending_gammas == 0) return;
    out += n.power(n.gamma, pending_gammas) + sep;
    pending_gammas = 0;
  };
  for (int i = 0; i <= m; ++i) {
    const int a = w[i];
    if (i == m) {
      if (a == 0) {
        flush_gammas(n.after_gamma);
        out += "s";
      } else {
        flush_gammas(n.after_gamma);
        out += n.power("D", a) + (a == 1 ? "" : n.before_section) + "s";
      }
    } else if (a > 0) {
      flush_gammas(n.after_gamma);
      out += n.power("D", a) + "(";
      ++closers;
      ++pending_gammas;
    } else {
      ++pending_gammas;
    }
  }
  out.append(closers, ')');
  return out;
}

std::string coefficient_prefix(const Integer& c, bool text) {
  if (c == 1) return {};
  return to_string(c) + (text ? " " : "");
}

nlohmann::json coefficient_json(const Integer& c) {
  if (c.fits_slong_p()) return c.get_si();
  return to_string(c);
}

Integer binomial(int n, int k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

int gamma_degree(const Word& w) { return static_cast<int>(w.size()) - 1; }

int word_order(const Word& w) { return std::accumulate(w.begin(), w.end(), 0) + 2 * gamma_degree(w); }

bool CanonicalWordLess::operator()(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

Integer UniversalFormula::coefficient(const Word& w) const {
  for (const auto& t : terms)
    if (t.word == w) return t.coefficient;
  return 0;
}

TermMap recurrence_step(int k, int j, const TermMap& current, const TermMap& previous) {
  TermMap next;
  for (const auto& [w, c] : current) {
    Word d = w;
    d.front() += 1;
    next[d] += c;
  }
  const long weight = static_cast<long>(j) * (k - j);
  if (weight != 0) {
    for (const auto& [w, c] : previous) {
      Word g;
      g.reserve(w.size() + 1);
      g.push_back(0);
      g.insert(g.end(), w.begin(), w.end());
      next[g] += c * weight;
    }
  }
  return next;
}

std::vector<TermMap> expand_partials(int k, int cap) {
  if (k < 0) throw DomainError("order must be non-negative");
  if (k > cap) throw CapExceeded("order " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  std::vector<TermMap> table;
  table.push_back(TermMap{{Word{0}, Integer(1)}});
  if (k >= 1) table.push_back(TermMap{{Word{1}, Integer(1)}});
  for (int j = 1; j < k; ++j) table.push_back(recurrence_step(k, j, table[j], table[j - 1]));
  return table;
}

UniversalFormula to_formula(int order, const TermMap& terms) {
  UniversalFormula f;
  f.order = order;
  for (const auto& [w, c] : terms)
    if (c != 0) f.terms.push_back({c, w});
  return f;
}

UniversalFormula expand_Dk(int k, int cap) {
  if (k < 0) throw DomainError("order must be non-negative");
  if (k > cap) throw CapExceeded("order " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  // Only the two most recent partial sums feed the next step.
  TermMap prev{{Word{0}, Integer(1)}};
  if (k == 0) return to_formula(0, prev);
  TermMap cur{{Word{1}, Integer(1)}};
  for (int j = 1; j < k; ++j) {
    TermMap next = recurrence_step(k, j, cur, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return to_formula(k, cur);
}

std::string render_word_text(const Word& w) { return render_word(w, text_notation); }

std::string render(const UniversalFormula& f, RenderFormat format) {
  switch (format) {
    case RenderFormat::text: {
      std::string out;
      for (const auto& t : f.terms) {
        if (!out.empty()) out += " + ";
        out += coefficient_prefix(t.coefficient, true) + render_word(t.word, text_notation);
      }
      return out;
    }
    case RenderFormat::latex: {
      std::ostringstream os;
      os << "\\mathcal{D}_{" << f.order << "}s &= ";
      int degree = -1;
      bool first = true;
      for (const auto& t : f.terms) {
        const int g = gamma_degree(t.word);
        if (!first) os << (g != degree ? " \\\\\n  &\\quad + " : " + ");
        degree = g;
        first = false;
        os << coefficient_prefix(t.coefficient, false) << render_word(t.word, latex_notation);
      }
      return os.str();
    }
    case RenderFormat::json: {
      // Written by hand: a DOM for millions of terms costs gigabytes.
      std::string out = "{\"schema_version\":1,\"order\":" + std::to_string(f.order) + ",\"terms\":[";
      for (std::size_t i = 0; i < f.terms.size(); ++i) {
        out += i ? ",{\"coeff\":" : "{\"coeff\":";
        out += coefficient_json(f.terms[i].coefficient).dump();
        out += ",\"word\":[";
        for (std::size_t a = 0; a < f.terms[i].word.size(); ++a) {
          if (a) out += ',';
          out += std::to_string(f.terms[i].word[a]);
        }
        out += "]}";
      }
      return out + "]}";
    }
  }
  return {};
}

UniversalFormula parse_formula_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    UniversalFormula f;
    f.order = j.at("order").get<int>();
    for (const auto& t : j.at("terms")) {
      FormulaTerm term;
      const auto& c = t.at("coeff");
      term.coefficient = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>());
      term.word = t.at("word").get<Word>();
      if (term.word.empty()) throw ParseError("empty word");
      if (std::any_of(term.word.begin(), term.word.end(), [](int a) { return a < 0; }))
        throw ParseError("negative exponent in word");
      if (word_order(term.word) != f.order) throw ParseError("word order does not match formula order");
      f.terms.push_back(std::move(term));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad formula JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad formula JSON: ") + e.what());
  }
}

FactorizationReport factorization_check(int k, int cap) {
  if (k < 2) throw DomainError("factorization check needs order at least 2");
  const UniversalFormula f = expand_Dk(k, cap);
  FactorizationReport report;
  report.order = k;
  for (const auto& t : f.terms) {
    const int m = gamma_degree(t.word);
    if (m < 2) continue;
    FactorWitness witness{t.word, t.coefficient, {}, Integer(1)};
    for (int g = 0; g < m; ++g) {
      int right = 2 * (m - 1 - g);
      for (int l = g + 1; l <= m; ++l) right += t.word[l];
      const Word linear{k - 2 - right, right};
      const Integer c = f.coefficient(linear);
      witness.factors.emplace_back(linear, c);
      witness.product *= c;
    }
    if (witness.product != witness.coefficient) report.holds = false;
    report.witnesses.push_back(std::move(witness));
  }
  return report;
}

std::vector<FormulaTerm> summed_form_terms(int k, int cap) {
  if (k < 0) throw DomainError("order must be non-negative");
  if (k > cap) throw CapExceeded("order " + std::to_string(k) + " exceeds cap " + std::to_string(cap));
  std::vector<FormulaTerm> out;
  for (int ell = 0; 2 * ell <= k; ++ell) {
    const int slots = k - ell;
    // positions 1 <= i_1 < ... < i_ell <= slots, enumerated via a selection mask
    std::vector<bool> mask(slots, false);
    std::fill(mask.end() - ell, mask.end(), true);
    do {
      std::vector<int> pos;
      for (int s = 0; s < slots; ++s)
        if (mask[s]) pos.push_back(s + 1);
      Word w(ell + 1);
      Integer weight = 1;
      int prev = 0;
      for (int t = 1; t <= ell; ++t) {
        w[ell - t + 1] = pos[t - 1] - prev - 1;
        prev = pos[t - 1];
        const int r = pos[t - 1] + t - 2;
        weight *= static_cast<long>(r + 1) * (k - r - 1);
      }
      w[0] = slots - prev;
      out.push_back({weight, std::move(w)});
    } while (std::next_permutation(mask.begin(), mask.end()));
  }
  return out;
}

bool summed_form_check(int k, int cap) {
  TermMap acc;
  for (const auto& t : summed_form_terms(k, cap)) acc[t.word] += t.coefficient;
  return to_formula(k, acc) == expand_Dk(k, cap);
}

std::vector<LeibnizTerm> leibniz_expand(const UniversalFormula& f) {
  struct Key {
    std::vector<int> p;
    int q;
    bool operator<(const Key& o) const {
      if (p.size() != o.p.size()) return p.size() < o.p.size();
      if (p != o.p) return p > o.p;
      return q > o.q;
    }
  };
  std::map<Key, Integer> acc;
  for (const auto& t : f.terms) {
    const int m = gamma_degree(t.word);
    // Distribute the pending derivatives over each G in turn, outermost first.
    struct Partial {
      std::vector<int> p;
      int carry;
      Integer coeff;
    };
    std::vector<Partial> frontier{{{}, t.word[0], t.coefficient}};
    for (int g = 1; g <= m; ++g) {
      std::vector<Partial> next;
      for (const auto& part : frontier) {
        for (int p = 0; p <= part.carry; ++p) {
          Partial child = part;
          child.p.push_back(p);
          child.coeff *= binomial(part.carry, p);
          child.carry = part.carry - p + t.word[g];
          next.push_back(std::move(child));
        }
      }
      frontier = std::move(next);
    }
    for (auto& part : frontier) acc[Key{std::move(part.p), part.carry}] += part.coeff;
  }
  std::vector<LeibnizTerm> out;
  for (auto& [key, c] : acc)
    if (c != 0) out.push_back({c, key.p, key.q});
  return out;
}

std::string render_leibniz_text(const std::vector<LeibnizTerm>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += coefficient_prefix(t.coefficient, true);
    int plain = 0;
    auto flush = [&] {
      if (plain) out += text_power("G", plain) + " ";
      plain = 0;
    };
    for (int p : t.gamma_derivatives) {
      if (p == 0) {
        ++plain;
        continue;
      }
      flush();
      out += "(" + text_power("D", p) + "G) ";
    }
    flush();
    out += t.trailing == 0 ? "s" : text_power("D", t.trailing) + (t.trailing == 1 ? "s" : " s");
  }
  return out;
}

ScalarPolynomial scalar_evaluate(const UniversalFormula& f) {
  // D^{a_0}(G D^{a_1}(... G D^{a_m} s)) = g^m prod_i (x + (m - i) y)^{a_i}
  ScalarPolynomial total;
  for (const auto& t : f.terms) {
    const int m = gamma_degree(t.word);
    ScalarPolynomial poly{{{m, 0, 0}, t.coefficient}};
    for (int i = 0; i <= m; ++i) {
      const int shift = m - i;
      for (int rep = 0; rep < t.word[i]; ++rep) {
        ScalarPolynomial next;
        for (const auto& [e, c] : poly) {
          next[{e[0], e[1], e[2] + 1}] += c;
          if (shift) next[{e[0], e[1] + 1, e[2]}] += c * shift;
        }
        poly = std::move(next);
      }
    }
    for (const auto& [e, c] : poly) total[e] += c;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

ScalarPolynomial scalar_evaluate(const std::vector<LeibnizTerm>& terms) {
  ScalarPolynomial total;
  for (const auto& t : terms) {
    const int m = static_cast<int>(t.gamma_derivatives.size());
    const int y = std::accumulate(t.gamma_derivatives.begin(), t.gamma_derivatives.end(), 0);
    total[{m, y, t.trailing}] += t.coefficient;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

}  // namespace lieops
