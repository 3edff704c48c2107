#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "socle/convert.hpp"
#include "socle/io.hpp"
#include "socle/realize.hpp"
#include "socle/switching.hpp"

namespace socle {

namespace {

struct Common {
  int prime = 2;
  bool prime_given = false;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string output;
};

class Emitter {
 public:
  Emitter(const Common& c, std::string command, std::ostream& out) : c_(c), command_(std::move(command)), out_(out) {}
  bool json() const { return c_.format == "json"; }

  void result(const Json& value, const std::string& text) {
    std::string body;
    if (json()) {
      Json j;
      j["version"] = 1;
      j["command"] = command_;
      j["result"] = value;
      body = j.dump(2) + "\n";
    } else {
      body = text;
    }
    if (!c_.output.empty()) {
      std::ofstream f(c_.output);
      if (!f) throw ParseError("cannot write " + c_.output);
      f << (json() ? body : value.dump(2) + "\n");
    }
    out_ << body;
  }

 private:
  const Common& c_;
  std::string command_;
  std::ostream& out_;
};

std::string lines(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& l : v) s += l + "\n";
  return s;
}

TableauKind parse_kind(const std::string& k) {
  if (k == "socle") return TableauKind::socle;
  if (k == "lr") return TableauKind::lr;
  throw ParseError("kind must be socle or lr");
}

std::string tableau_text(const SkewTableau& t) {
  const auto a = t.alpha();
  return "shape " + (a ? a->to_string() : std::string("?")) + "/" + t.beta().to_string() + "/" +
         t.gamma().to_string() + "\n" + lines(render_tableau(t));
}

int cmd_enum(const Common& c, const std::string& shape_text, const std::string& kind_text, std::ostream& out) {
  const ShapeTriple shape = parse_shape(shape_text);
  const TableauKind kind = parse_kind(kind_text);
  if (!shape.valid()) throw ParseError("shape " + shape.to_string() + " is not a valid triple");
  const auto all = enumerate(shape, kind);
  Json list = Json::array();
  std::string text = std::to_string(all.size()) + " " + kind_text + " tableaux of shape " + shape.to_string() + "\n";
  for (const auto& t : all) {
    list.push_back(tableau_to_json(t));
    text += "\n" + lines(render_tableau(t));
  }
  Json r;
  r["shape"] = shape.to_string();
  r["kind"] = kind_text;
  r["count"] = all.size();
  r["tableaux"] = list;
  Emitter(c, "enum", out).result(r, text);
  return exit_ok;
}

int cmd_lr_coeff(const Common& c, const std::string& shape_text, std::ostream& out) {
  const ShapeTriple shape = parse_shape(shape_text);
  const std::size_t v = lr_coefficient(shape);
  Json r;
  r["shape"] = shape.to_string();
  r["value"] = v;
  Emitter(c, "lr-coeff", out).result(r, std::to_string(v) + "\n");
  return exit_ok;
}

Embedding load_embedding(const Common& c, const std::string& path) {
  Json j = read_json_file(path);
  if (c.prime_given && j.is_object()) j["prime"] = c.prime;
  return embedding_from_json(j);
}

int cmd_analyze(const Common& c, const std::string& path, std::ostream& out) {
  const Embedding x = load_embedding(c, path);
  const Embedding d = dual_embedding(x);
  const ShapeTriple shape = x.shape();
  const SkewTableau sigma = socle_tableau(x), gamma = lr_tableau(x);
  const SkewTableau sigma_d = socle_tableau(d), gamma_d = lr_tableau(d);
  const HomMatrix h = hom_matrix(x);
  // defect table: row l, column r holds defect(X, l, l + r)
  Json table = Json::array();
  std::vector<std::string> defect_lines;
  for (int l = 1; l <= shape.alpha.first(); ++l) {
    std::vector<int> row;
    std::string line = "l=" + std::to_string(l) + ":";
    for (int r = 1; r <= shape.beta.first(); ++r) {
      row.push_back(defect(x, l, l + r));
      line += " " + std::to_string(row.back());
    }
    table.push_back(row);
    defect_lines.push_back(line);
  }
  Json r;
  r["shape"] = {{"alpha", partition_to_json(shape.alpha)},
                {"beta", partition_to_json(shape.beta)},
                {"gamma", partition_to_json(shape.gamma)}};
  r["prime"] = x.prime();
  r["sigma"] = tableau_to_json(sigma);
  r["gamma"] = tableau_to_json(gamma);
  r["sigma_dual"] = tableau_to_json(sigma_d);
  r["gamma_dual"] = tableau_to_json(gamma_d);
  r["hom"] = hom_to_json(h);
  r["defect"] = table;
  std::string text = "shape " + shape.to_string() + " over F_" + std::to_string(x.prime()) + "\n\n";
  text += side_by_side({{"Sigma", render_tableau(sigma)},
                        {"Gamma", render_tableau(gamma)},
                        {"Sigma*", render_tableau(sigma_d)},
                        {"Gamma*", render_tableau(gamma_d)}});
  text += "\nHom-matrix h[l][m] (rows l, columns m)\n" + lines(render_hom(h));
  text += "\ndefect(X, l, l+r) for r = 1.." + std::to_string(shape.beta.first()) + "\n" + lines(defect_lines);
  Emitter(c, "analyze", out).result(r, text);
  return exit_ok;
}

int cmd_realize(const Common& c, const std::string& path, const std::string& kind_text, std::ostream& out) {
  const SkewTableau t = tableau_from_json(read_json_file(path));
  TableauKind kind;
  if (kind_text == "auto") {
    if (check_socle(t))
      kind = TableauKind::socle;
    else if (check_lr(t))
      kind = TableauKind::lr;
    else
      throw InvalidTableau("tableau is neither a socle tableau nor an LR-tableau");
  } else {
    kind = parse_kind(kind_text);
  }
  const Embedding x = kind == TableauKind::socle ? realize_socle(t, c.prime) : realize_lr(t, c.prime);
  const Json j = embedding_to_json(x);
  Emitter(c, "realize", out).result(j, j.dump(2) + "\n");
  return exit_ok;
}

int cmd_convert(const Common& c, const std::string& from, const std::string& to, const std::string& path,
                std::ostream& out) {
  const Json in = read_json_file(path);
  const std::set<std::string> kinds{"socle", "duallr", "hom"};
  if (!kinds.count(from) || !kinds.count(to)) throw ParseError("--from/--to must be socle, duallr or hom");
  HomMatrix h;
  std::optional<SkewTableau> sigma, gamma_star;
  if (from == "hom") {
    h = hom_from_json(in);
  } else {
    const SkewTableau t = tableau_from_json(in);
    if (from == "socle") {
      if (!check_socle(t)) throw InvalidTableau("input is not a socle tableau");
      sigma = t;
    } else {
      if (!check_lr(t)) throw InvalidTableau("input is not an LR-tableau");
      gamma_star = t;
    }
  }
  Json r;
  std::string text;
  if (to == "hom") {
    const HomMatrix out_h = from == "hom" ? h : sigma ? socle_to_hom(*sigma) : duallr_to_hom(*gamma_star);
    r = hom_to_json(out_h);
    text = lines(render_hom(out_h));
  } else {
    SkewTableau t;
    if (to == "socle")
      t = from == "hom" ? hom_to_socle(h) : sigma ? *sigma : duallr_to_socle(*gamma_star);
    else
      t = from == "hom" ? hom_to_duallr(h) : gamma_star ? *gamma_star : socle_to_duallr(*sigma);
    r = tableau_to_json(t);
    text = tableau_text(t);
  }
  Emitter(c, "convert", out).result(r, text);
  return exit_ok;
}

int cmd_switch(const Common& c, const std::string& path, bool trace, bool random_order, std::ostream& out) {
  const SkewTableau sigma = tableau_from_json(read_json_file(path));
  if (!check_socle(sigma)) throw InvalidTableau("input is not a socle tableau");
  SwitchOrder order;
  if (random_order) order.seed = c.seed;
  const SwitchState start = init_switch(sigma);
  const SwitchState end = run_switch(start, order);
  const SkewTableau result = switch_to_duallr(sigma, order);
  Json r;
  r["tableau"] = tableau_to_json(result);
  r["swaps"] = end.history.size();
  std::string text = tableau_text(result) + std::to_string(end.history.size()) + " swaps\n";
  if (trace) {
    Json steps = Json::array();
    std::string t;
    const auto states = replay(start, end.history);
    for (std::size_t i = 0; i < states.size(); ++i) {
      Json step = switch_state_to_json(states[i]);
      if (i > 0) step["swap"] = swap_to_json(end.history[i - 1]);
      steps.push_back(step);
      t += "\nstep " + std::to_string(i) + "\n" + lines(render_switch_state(states[i]));
    }
    r["trace"] = steps;
    text += t;
  }
  Emitter(c, "switch", out).result(r, text);
  return exit_ok;
}

struct SuiteResult {
  std::string name;
  bool ok = true;
  bool counterexample = false;
  Json detail;
  std::string text;
};

SuiteResult suite_counts(int n) {
  SuiteResult s{"counts"};
  std::size_t shapes = 0, tableaux = 0, failures = 0;
  Json failed = Json::array();
  for (const auto& shape : shapes_up_to(n)) {
    ++shapes;
    const auto socle = enumerate(shape, TableauKind::socle);
    const auto lr = count_tableaux(shape, TableauKind::lr);
    const ShapeTriple dual{shape.gamma, shape.beta, shape.alpha};
    const auto lr_dual = enumerate(dual, TableauKind::lr);
    tableaux += socle.size();
    std::set<std::vector<int>> images;
    for (const auto& t : socle) images.insert(socle_to_duallr(t).reading_word());
    std::set<std::vector<int>> targets;
    for (const auto& t : lr_dual) targets.insert(t.reading_word());
    if (socle.size() != lr || lr != lr_dual.size() || images != targets) {
      ++failures;
      failed.push_back(shape.to_string());
    }
  }
  s.ok = failures == 0;
  s.detail = {{"shapes", shapes}, {"tableaux", tableaux}, {"failures", failed}};
  s.text = "counts: " + std::to_string(shapes) + " shapes, " + std::to_string(tableaux) + " socle tableaux, " +
           std::to_string(failures) + " failures\n";
  return s;
}

SuiteResult suite_realize(int n, const std::vector<int>& primes) {
  SuiteResult s{"realize"};
  std::size_t cases = 0, failures = 0;
  Json failed = Json::array();
  for (const auto& shape : shapes_up_to(n))
    for (const auto& t : enumerate(shape, TableauKind::socle))
      for (int p : primes) {
        ++cases;
        const Embedding x = realize_socle(t, p);
        if (!(socle_tableau(x) == t) || !(x.shape() == shape)) {
          ++failures;
          failed.push_back(tableau_to_json(t));
        }
      }
  s.ok = failures == 0;
  s.detail = {{"cases", cases}, {"failures", failed}};
  s.text = "realize: " + std::to_string(cases) + " round trips, " + std::to_string(failures) + " failures\n";
  return s;
}

SuiteResult suite_hom(int n, std::size_t count, std::uint64_t seed, const std::vector<int>& primes) {
  SuiteResult s{"hom"};
  CorpusOptions opt;
  opt.max_weight = n;
  opt.count = count;
  opt.seed = seed;
  std::size_t cases = 0, failures = 0;
  Json failed = Json::array();
  for (const auto& item : symbolic_corpus(opt))
    for (int p : primes) {
      ++cases;
      const Embedding x = from_generators(p, item.beta, item.generators);
      const SkewTableau sigma = socle_tableau(x);
      const SkewTableau gs = lr_tableau(dual_embedding(x));
      const HomMatrix h = hom_matrix(x, HomMethod::linear_system);
      bool ok = socle_to_hom(sigma) == h && duallr_to_hom(gs) == h && hom_to_socle(h) == sigma &&
                hom_to_duallr(h) == gs && socle_to_duallr(sigma) == gs;
      const ShapeTriple shape = x.shape();
      const EntryMultiplicity mu(sigma);
      const int top = shape.alpha.first() + shape.beta.first();
      for (int l = 1; ok && l <= top; ++l)
        for (int m = l; ok && m <= top; ++m) {
          const int d = defect(x, l, m);
          ok = d == mu(l, m - l) && (m == l || d == four_term(h, l, m));
        }
      if (!ok) {
        ++failures;
        Json j = embedding_to_json(x);
        failed.push_back(j);
      }
    }
  s.ok = failures == 0;
  s.detail = {{"cases", cases}, {"failures", failed}};
  s.text = "hom: " + std::to_string(cases) + " embeddings, " + std::to_string(failures) + " failures\n";
  return s;
}

Json conjecture_case_json(const ConjectureCase& c) {
  Json j;
  j["shape"] = c.shape.to_string();
  j["order"] = c.order;
  j["sigma"] = tableau_to_json(c.sigma);
  j["expected"] = tableau_to_json(c.expected);
  j["got"] = c.got ? tableau_to_json(*c.got) : Json(nullptr);
  j["error"] = c.error;
  Json trace = Json::array();
  for (const auto& s : c.trace) trace.push_back(swap_to_json(s));
  j["trace"] = trace;
  return j;
}

SuiteResult suite_switching(int n, int seeds, std::uint64_t seed) {
  SuiteResult s{"switching"};
  const ConjectureReport rep = check_conjecture(n, seeds, seed);
  Json mism = Json::array(), dep = Json::array();
  for (const auto& c : rep.mismatches) mism.push_back(conjecture_case_json(c));
  for (const auto& c : rep.order_dependent) dep.push_back(conjecture_case_json(c));
  s.ok = rep.ok();
  s.counterexample = !rep.mismatches.empty();
  s.detail = {{"relabeling", "i -> s+1-i with s the largest socle entry (inferred from a single worked example)"},
              {"shapes", rep.shapes},
              {"cases", rep.cases},
              {"runs", rep.runs},
              {"mismatches", mism},
              {"order_dependent", dep}};
  s.text = "switching: relabeling i -> s+1-i (inferred from one worked example)\n";
  s.text += "switching: " + std::to_string(rep.cases) + " socle tableaux, " + std::to_string(rep.runs) +
            " runs, " + std::to_string(rep.mismatches.size()) + " mismatches, " +
            std::to_string(rep.order_dependent.size()) + " order-dependent\n";
  for (const auto& c : rep.mismatches)
    s.text += "  counterexample " + c.shape.to_string() + " (" + c.order + "): " + conjecture_case_json(c).dump() + "\n";
  return s;
}

int cmd_check(const Common& c, int n, const std::string& suite, int seeds, std::size_t count, std::ostream& out) {
  const std::set<std::string> names{"counts", "realize", "hom", "switching", "all"};
  if (!names.count(suite)) throw ParseError("unknown suite " + suite);
  if (n < 1) throw ParseError("--max-beta must be at least 1");
  const std::vector<int> primes = c.prime_given ? std::vector<int>{c.prime} : std::vector<int>{2, 3};
  std::vector<SuiteResult> results;
  if (suite == "counts" || suite == "all") results.push_back(suite_counts(n));
  if (suite == "realize" || suite == "all") results.push_back(suite_realize(n, primes));
  if (suite == "hom" || suite == "all") results.push_back(suite_hom(n, count, c.seed, primes));
  if (suite == "switching" || suite == "all") results.push_back(suite_switching(n, seeds, c.seed));
  Json r;
  r["max_beta"] = n;
  std::string text;
  bool ok = true, counterexample = false;
  for (const auto& s : results) {
    r[s.name] = s.detail;
    text += s.text;
    ok = ok && s.ok;
    counterexample = counterexample || s.counterexample;
  }
  r["ok"] = ok;
  text += ok ? "all checks passed\n" : "CHECK FAILED\n";
  Emitter(c, "check", out).result(r, text);
  if (counterexample) return exit_counterexample;
  return ok ? exit_ok : exit_internal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Socle tableaux, LR-tableaux and embeddings of modules over a truncated valuation ring"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prime", c.prime, "Prime p (2, 3, 5, 7, 11 or 13)")->check(CLI::IsMember({2, 3, 5, 7, 11, 13}));
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--seed", c.seed, "Random seed");
    sub->add_option("-o,--output", c.output, "Also write the result file here");
  };

  std::string shape, kind = "socle", file, from, to, suite = "all", realize_kind = "auto";
  bool trace = false, random_order = false;
  int max_beta = 9, seeds = 5;
  std::size_t count = 200;

  auto* e = app.add_subcommand("enum", "List all tableaux of a shape");
  e->add_option("--shape", shape, "alpha/beta/gamma, e.g. 42/532/31")->required();
  e->add_option("--kind", kind, "socle or lr")->check(CLI::IsMember({"socle", "lr"}));
  add_common(e);

  auto* lc = app.add_subcommand("lr-coeff", "Littlewood-Richardson coefficient of a shape");
  lc->add_option("--shape", shape, "alpha/beta/gamma")->required();
  add_common(lc);

  auto* an = app.add_subcommand("analyze", "All four tableaux, Hom-matrix and defects of an embedding");
  an->add_option("file", file, "Embedding JSON")->required();
  add_common(an);

  auto* re = app.add_subcommand("realize", "Build an embedding with the given tableau");
  re->add_option("file", file, "Tableau JSON")->required();
  re->add_option("--kind", realize_kind, "socle, lr or auto")->check(CLI::IsMember({"socle", "lr", "auto"}));
  add_common(re);

  auto* cv = app.add_subcommand("convert", "Convert between socle tableau, dual LR-tableau and Hom-matrix");
  cv->add_option("--from", from, "socle, duallr or hom")->required();
  cv->add_option("--to", to, "socle, duallr or hom")->required();
  cv->add_option("file", file, "Tableau or Hom-matrix JSON")->required();
  add_common(cv);

  auto* sw = app.add_subcommand("switch", "Tableau switching of a socle tableau");
  sw->add_option("file", file, "Socle tableau JSON")->required();
  sw->add_flag("--trace", trace, "Show every intermediate grid");
  sw->add_flag("--random", random_order, "Random swap order from --seed");
  add_common(sw);

  auto* ck = app.add_subcommand("check", "Exhaustive property checks");
  ck->add_option("--max-beta", max_beta, "Largest |beta|");
  ck->add_option("--suite", suite, "counts, realize, hom, switching or all")
      ->check(CLI::IsMember({"counts", "realize", "hom", "switching", "all"}));
  ck->add_option("--seeds", seeds, "Random switching orders per tableau");
  ck->add_option("--count", count, "Embeddings in the hom suite corpus");
  add_common(ck);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? exit_ok : exit_invalid_input;
  }
  for (auto* sub : app.get_subcommands())
    if (sub->count("--prime")) c.prime_given = true;

  try {
    if (e->parsed()) return cmd_enum(c, shape, kind, out);
    if (lc->parsed()) return cmd_lr_coeff(c, shape, out);
    if (an->parsed()) return cmd_analyze(c, file, out);
    if (re->parsed()) return cmd_realize(c, file, realize_kind, out);
    if (cv->parsed()) return cmd_convert(c, from, to, file, out);
    if (sw->parsed()) return cmd_switch(c, file, trace, random_order, out);
    if (ck->parsed()) return cmd_check(c, max_beta, suite, seeds, count, out);
  } catch (const ConditionStarViolated& ex) {
    err << "internal error: " << ex.what() << "\n";
    return exit_internal;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid_input;
  } catch (const std::out_of_range& ex) {
    err << "error: " << ex.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return exit_internal;
  }
  return exit_invalid_input;
}

}  // namespace socle
