#include "lieops/cli.hpp"

#include "lieops/classifier.hpp"
#include "lieops/lie_core.hpp"
#include "lieops/module_theory.hpp"
#include "lieops/parabolic.hpp"
#include "lieops/symbolic.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

namespace lieops::cli {

namespace {

using nlohmann::json;

constexpr int schema_version = 1;

json rational_json(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& c : w.coords()) a.push_back(rational_json(c));
  return a;
}

json root_json(const Root& r, const std::vector<Root>& positive) {
  return {{"label", root_label(r, positive)}, {"coords", r.coords}, {"length", r.is_long() ? "long" : "short"}};
}

json header(const RunConfig& cfg) {
  json j;
  j["schema_version"] = schema_version;
  j["command"] = cfg.command;
  return j;
}

std::string crossing_text(const ParabolicDatum& pd) {
  std::string s = "{";
  for (std::size_t i = 0; i < pd.crossed.size(); ++i) s += (i ? "," : "") + std::to_string(pd.crossed[i] + 1);
  return s + "}";
}

std::vector<int> one_based(const std::vector<int>& nodes) {
  std::vector<int> out;
  for (int n : nodes) out.push_back(n + 1);
  return out;
}

std::string join_labels(const std::vector<Root>& roots, const std::vector<Root>& positive) {
  if (roots.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < roots.size(); ++i) s += (i ? ", " : "") + root_label(roots[i], positive);
  return s;
}

std::string rational_list(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

void require_format(const RunConfig& cfg, std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed)
    if (f == cfg.format) return;
  throw ParseError("output format not supported by '" + cfg.command + "'");
}

struct Context {
  CartanDatum datum;
  InvariantForm form;
};

Context load_algebra(const RunConfig& cfg) {
  if (cfg.algebra.empty()) throw ParseError("--algebra is required");
  CartanDatum datum = parse_dynkin(cfg.algebra);
  return {datum, invariant_form(datum, cfg.scale)};
}

GradingReport load_grading(const RunConfig& cfg, const Context& ctx) {
  if (!cfg.crossing_given) throw ParseError("--cross is required");
  return grading(parse_crossing(ctx.datum, cfg.crossing), ctx.form);
}

Weight load_weight(const std::string& text, const CartanDatum& datum, const char* flag) {
  const auto ints = parse_int_list(text);
  if (static_cast<int>(ints.size()) != datum.rank)
    throw ParseError(std::string(flag) + " needs " + std::to_string(datum.rank) + " comma separated integers");
  return Weight::from_ints(ints);
}

Root load_alpha(const RunConfig& cfg, const InvariantForm& form) {
  const auto& pos = form.positive_roots();
  if (cfg.alpha < 1 || cfg.alpha > static_cast<int>(pos.size()))
    throw ParseError("--alpha must be between 1 and " + std::to_string(pos.size()));
  return pos[cfg.alpha - 1];
}

void cmd_roots(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json});
  const Context ctx = load_algebra(cfg);
  const auto& pos = ctx.form.positive_roots();
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg);
    j["algebra"] = ctx.datum.name();
    j["cartan_matrix"] = ctx.datum.cartan_matrix;
    j["roots"] = json::array();
    for (const Root& r : pos) {
      json e = root_json(r, pos);
      e["height"] = r.height();
      e["norm2"] = rational_json(ctx.form.norm2(r));
      j["roots"].push_back(e);
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << ctx.datum.name() << ": " << pos.size() << " positive roots\n";
  for (const Root& r : pos) {
    out << root_label(r, pos) << " = " << root_expression(r) << "  height " << r.height() << "  "
        << (r.is_long() ? "long" : "short") << "  |a|^2 = " << to_string(ctx.form.norm2(r)) << '\n';
  }
}

void cmd_grading(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json});
  const Context ctx = load_algebra(cfg);
  const GradingReport rep = load_grading(cfg, ctx);
  const auto& pos = rep.positive;
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg);
    j["algebra"] = ctx.datum.name();
    j["crossed"] = one_based(rep.parabolic.crossed);
    j["depth"] = rep.depth;
    j["layers"] = json::array();
    for (int h = 1; h <= rep.depth; ++h) {
      json layer = {{"height", h}, {"roots", json::array()}};
      for (const Root& r : rep.layer(h)) layer["roots"].push_back(root_json(r, pos));
      j["layers"].push_back(layer);
    }
    j["levi_roots"] = json::array();
    for (const Root& r : rep.levi_roots) j["levi_roots"].push_back(root_json(r, pos));
    j["f_star_blocks"] = json::array();
    for (const auto& b : rep.f_star_blocks) {
      json block = {{"crossed_node", b.crossed_node + 1}, {"dim", b.roots.size()}, {"roots", json::array()}};
      for (const Root& r : b.roots) block["roots"].push_back(root_json(r, pos));
      j["f_star_blocks"].push_back(block);
    }
    j["delta0"] = weight_json(rep.delta0);
    out << j.dump(2) << '\n';
    return;
  }
  out << ctx.datum.name() << " crossed " << crossing_text(rep.parabolic) << ": depth " << rep.depth << '\n';
  for (int h = 1; h <= rep.depth; ++h)
    out << "g" << h << " (dim " << rep.layer(h).size() << "): " << join_labels(rep.layer(h), pos) << '\n';
  out << "levi (" << rep.levi_roots.size() << " positive roots): " << join_labels(rep.levi_roots, pos) << '\n';
  for (const auto& b : rep.f_star_blocks)
    out << "f* block at node " << b.crossed_node + 1 << " (dim " << b.roots.size()
        << "): " << join_labels(b.roots, pos) << '\n';
  out << "delta0 = " << rep.delta0.str() << '\n';
}

void cmd_classify(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json});
  const Context ctx = load_algebra(cfg);
  const GradingReport rep = load_grading(cfg, ctx);
  if (!cfg.weight_given) throw ParseError("--weight is required");
  const Weight lambda = load_weight(cfg.weight, ctx.datum, "--weight");
  if (!is_p_dominant(lambda, rep)) throw DomainError("source weight " + lambda.str() + " is not p-dominant");
  std::vector<Root> directions;
  if (cfg.alpha != 0)
    directions.push_back(load_alpha(cfg, ctx.form));
  else
    directions = ctx.form.positive_roots();

  const auto& pos = ctx.form.positive_roots();
  json results = json::array();
  std::ostringstream text;
  text << "source " << lambda.str() << " on " << ctx.datum.name() << " crossed " << crossing_text(rep.parabolic)
       << '\n';
  for (const Root& alpha : directions) {
    const Classification c = classify_pair(lambda, alpha, rep, ctx.form);
    json e = {{"direction", root_json(alpha, pos)}, {"exists", c.op.has_value()}};
    text << root_label(alpha, pos) << ": ";
    if (c.op) {
      const auto& op = *c.op;
      const TelescopingRecord tele = telescoping_report(op, ctx.form);
      e["order"] = op.order;
      e["target"] = weight_json(op.target);
      e["constructed"] = op.constructed;
      e["eigen_ladder"] = json::array();
      for (const auto& x : op.eigen_ladder) e["eigen_ladder"].push_back(rational_json(x));
      e["telescoping_steps"] = json::array();
      for (const auto& x : tele.steps) e["telescoping_steps"].push_back(rational_json(x));
      text << "order " << op.order << " operator " << op.source.str() << " -> " << op.target.str()
           << ", constructed, gamma ladder " << rational_list(op.eigen_ladder) << ", steps "
           << rational_list(tele.steps) << '\n';
    } else {
      e["reasons"] = json::array();
      text << "rejected (";
      for (std::size_t i = 0; i < c.reasons.size(); ++i) {
        e["reasons"].push_back(to_string(c.reasons[i]));
        text << (i ? ", " : "") << to_string(c.reasons[i]);
      }
      text << ")\n";
    }
    results.push_back(e);
  }
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg);
    j["algebra"] = ctx.datum.name();
    j["crossed"] = one_based(rep.parabolic.crossed);
    j["source"] = weight_json(lambda);
    j["scale"] = rational_json(cfg.scale);
    j["results"] = results;
    out << j.dump(2) << '\n';
  } else {
    out << text.str();
  }
}

void cmd_hasse(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json, OutputFormat::dot});
  const Context ctx = load_algebra(cfg);
  const GradingReport rep = load_grading(cfg, ctx);
  const Weight seed =
      cfg.weight_given ? load_weight(cfg.weight, ctx.datum, "--weight") : Weight::zero(ctx.datum.rank);
  WeylCaps caps;
  caps.max_orbit = cfg.weyl_cap;
  const HasseGraph g = bgg_edges(bgg_vertices(seed, rep, ctx.form, caps), rep, ctx.form);
  const auto& pos = ctx.form.positive_roots();

  if (cfg.format == OutputFormat::dot) {
    out << "digraph hasse {\n  rankdir=LR;\n  node [shape=point];\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      out << "  v" << i << " [xlabel=\"" << g.vertices[i].weight.str() << "\", length=" << g.vertices[i].length
          << "];\n";
    for (const auto& e : g.edges) {
      out << "  v" << e.from << " -> v" << e.to << " [label=\"" << root_label(e.label, pos)
          << "\", style=" << (e.constructed ? "solid" : "dashed") << ", order=" << e.order;
      if (!e.note.empty()) out << ", comment=\"" << e.note << "\"";
      out << "];\n";
    }
    out << "}\n";
    return;
  }
  if (cfg.format == OutputFormat::json) {
    json j = header(cfg);
    j["algebra"] = ctx.datum.name();
    j["crossed"] = one_based(rep.parabolic.crossed);
    j["seed"] = weight_json(seed);
    j["vertices"] = json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({{"weight", weight_json(v.weight)}, {"length", v.length}});
    j["edges"] = json::array();
    for (const auto& e : g.edges) {
      json je = {{"from", e.from},
                 {"to", e.to},
                 {"label", root_json(e.label, pos)},
                 {"order", e.order},
                 {"constructed", e.constructed},
                 {"style", e.style == EdgeStyle::full ? "full" : "dotted"}};
      if (!e.note.empty()) je["note"] = e.note;
      j["edges"].push_back(je);
    }
    out << j.dump(2) << '\n';
    return;
  }
  out << "BGG graph of " << seed.str() << " on " << ctx.datum.name() << " crossed " << crossing_text(rep.parabolic)
      << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    out << "  v" << i << "  " << g.vertices[i].weight.str() << "  length " << g.vertices[i].length << '\n';
  for (const auto& e : g.edges) {
    out << "  v" << e.from << " -> v" << e.to << "  " << root_label(e.label, pos) << "  order " << e.order << "  "
        << (e.style == EdgeStyle::full ? "full" : "dotted");
    if (!e.note.empty()) out << "  (" << e.note << ")";
    out << '\n';
  }
}

void cmd_expand(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json, OutputFormat::latex});
  if (cfg.order < 0) throw ParseError("--order is required and must be non-negative");
  const UniversalFormula f = expand_Dk(cfg.order, cfg.order_cap);
  switch (cfg.format) {
    case OutputFormat::json: out << "{\"command\":\"expand\"," << render(f, RenderFormat::json).substr(1) << '\n'; break;
    case OutputFormat::latex: out << render(f, RenderFormat::latex) << '\n'; break;
    default: out << render(f, RenderFormat::text) << '\n'; break;
  }
}

void cmd_casimir(const RunConfig& cfg, std::ostream& out) {
  require_format(cfg, {OutputFormat::text, OutputFormat::json});
  const Context ctx = load_algebra(cfg);
  if (!cfg.weight_given) throw ParseError("--weight is required");
  const Weight lambda = load_weight(cfg.weight, ctx.datum, "--weight");
  json j = header(cfg);
  j["algebra"] = ctx.datum.name();
  j["source"] = weight_json(lambda);
  j["scale"] = rational_json(cfg.scale);
  std::ostringstream text;

  if (!cfg.target.empty()) {
    const Weight mu = load_weight(cfg.target, ctx.datum, "--target");
    const Rational c = psi_eigenvalue(lambda, mu, ctx.form);
    j["target"] = weight_json(mu);
    j["psi_eigenvalue"] = rational_json(c);
    text << "c(" << lambda.str() << " -> " << mu.str() << ") = " << to_string(c) << '\n';
  } else if (cfg.alpha != 0) {
    if (cfg.ladder_step < 1) throw ParseError("--j must be a positive ladder index");
    const Root alpha = load_alpha(cfg, ctx.form);
    const Rational c = gamma_coefficient(lambda, alpha, cfg.ladder_step, ctx.form);
    j["direction"] = root_json(alpha, ctx.form.positive_roots());
    j["j"] = cfg.ladder_step;
    j["gamma_coefficient"] = rational_json(c);
    text << "gamma(" << lambda.str() << ", " << root_label(alpha, ctx.form.positive_roots()) << ", j=" << cfg.ladder_step
         << ") = " << to_string(c) << '\n';
  } else {
    const GradingReport rep = load_grading(cfg, ctx);
    const Rational cas = casimir_scalar(lambda, rep, ctx.form);
    j["crossed"] = one_based(rep.parabolic.crossed);
    j["casimir"] = rational_json(cas);
    j["spectra"] = json::array();
    text << "Casimir on V" << lambda.str() << " = " << to_string(cas) << '\n';
    for (int b = 0; b < static_cast<int>(rep.f_star_blocks.size()); ++b) {
      const PsiSpectrum spec = psi_spectrum(lambda, b, rep, ctx.form);
      json js = {{"block", b + 1}, {"crossed_node", rep.f_star_blocks[b].crossed_node + 1}, {"entries", json::array()}};
      text << "f* block " << b + 1 << " (node " << rep.f_star_blocks[b].crossed_node + 1 << "):\n";
      for (const auto& e : spec.entries) {
        js["entries"].push_back({{"highest_weight", weight_json(e.component.highest_weight)},
                                 {"multiplicity", e.component.multiplicity.get_si()},
                                 {"eigenvalue", rational_json(e.eigenvalue)}});
        text << "  " << e.component.highest_weight.str() << "  c = " << to_string(e.eigenvalue) << '\n';
      }
      j["spectra"].push_back(js);
    }
  }
  if (cfg.format == OutputFormat::json)
    out << j.dump(2) << '\n';
  else
    out << text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Invariant operators on parabolic geometries: roots, gradings, BGG graphs, universal formulae"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "key=value file mirroring the long flags");

  std::string scale_text = "1";
  std::string format_text = "text";
  app.add_option("--algebra", cfg.algebra, "Dynkin type, e.g. G2, A4, B3");
  app.add_option("--cross", cfg.crossing, "crossed nodes, 1-based, comma separated (e.g. 1,4)");
  app.add_option("--weight", cfg.weight, "weight in fundamental coordinates, comma separated integers");
  app.add_option("--scale", scale_text, "invariant form scale (rational, nonzero)")->capture_default_str();
  app.add_option("--format", format_text, "text | json | dot | latex")
      ->check(CLI::IsMember({"text", "json", "dot", "latex"}))
      ->capture_default_str();
  app.add_option("--weyl-cap", cfg.weyl_cap, "maximal Weyl orbit size")->capture_default_str();
  app.add_option("--order-cap", cfg.order_cap, "maximal order for expand")->capture_default_str();

  auto* roots = app.add_subcommand("roots", "list positive roots");
  auto* grading_cmd = app.add_subcommand("grading", "grading induced by a crossing");
  auto* classify = app.add_subcommand("classify", "existence of standard operators from a weight");
  classify->add_option("--alpha", cfg.alpha, "direction as 1-based positive root index (default: all)");
  auto* hasse = app.add_subcommand("hasse", "labelled BGG Hasse graph");
  auto* expand = app.add_subcommand("expand", "universal formula D_k");
  expand->add_option("--order", cfg.order, "order k")->required();
  auto* casimir = app.add_subcommand("casimir", "Casimir and Psi eigenvalue queries");
  casimir->add_option("--target", cfg.target, "target weight for a single eigenvalue");
  casimir->add_option("--alpha", cfg.alpha, "direction index for a gamma coefficient");
  casimir->add_option("--j", cfg.ladder_step, "ladder index for a gamma coefficient");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  }

  cfg.crossing_given = app.count("--cross") > 0;
  cfg.weight_given = app.count("--weight") > 0;
  for (auto* sub : {roots, grading_cmd, classify, hasse, expand, casimir})
    if (sub->parsed()) cfg.command = sub->get_name();

  try {
    cfg.scale = parse_rational(scale_text);
    if (cfg.scale == 0) throw ParseError("--scale must be nonzero");
    if (format_text == "json")
      cfg.format = OutputFormat::json;
    else if (format_text == "dot")
      cfg.format = OutputFormat::dot;
    else if (format_text == "latex")
      cfg.format = OutputFormat::latex;

    std::ostringstream buffer;
    if (cfg.command == "roots") cmd_roots(cfg, buffer);
    else if (cfg.command == "grading") cmd_grading(cfg, buffer);
    else if (cfg.command == "classify") cmd_classify(cfg, buffer);
    else if (cfg.command == "hasse") cmd_hasse(cfg, buffer);
    else if (cfg.command == "expand") cmd_expand(cfg, buffer);
    else if (cfg.command == "casimir") cmd_casimir(cfg, buffer);
    out << buffer.str();
    return ExitCode::ok;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage_error;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCode::internal_error;
  }
}

}  // namespace lieops::cli
