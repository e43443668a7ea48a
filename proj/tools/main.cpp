// Command-line front end for the ybp library.
//
// Exit codes: 0 = property holds / operation succeeded, 1 = property fails
// or the result is undefined (a witness is printed), 2 = usage or schema
// error.  Results go to stdout, diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybp/analysis.hpp"
#include "ybp/codec.hpp"
#include "ybp/cycle_set.hpp"
#include "ybp/error.hpp"
#include "ybp/monoid.hpp"
#include "ybp/registry.hpp"
#include "ybp/reversing.hpp"
#include "ybp/solution.hpp"
#include "ybp/thompson.hpp"
#include "ybp/word.hpp"

namespace {

using nlohmann::json;
using namespace ybp;

struct SolutionArgs {
  std::string example;
  std::string file;
};

void add_solution_flags(CLI::App* sc, SolutionArgs& a, bool secondary = false) {
  if (secondary) {
    sc->add_option("--example2", a.example, "built-in name of the second solution");
    sc->add_option("--file2", a.file, "JSON file with the second solution");
  } else {
    sc->add_option("--example", a.example, "built-in example name (see `examples`)");
    sc->add_option("--file", a.file, "JSON file describing the solution");
  }
}

PartialSolution resolve(const SolutionArgs& a, bool secondary = false) {
  const char* ex = secondary ? "--example2" : "--example";
  const char* fi = secondary ? "--file2" : "--file";
  if (a.example.empty() == a.file.empty())
    fail(Errc::BadArgument,
         std::string("exactly one of ") + ex + " or " + fi + " is required");
  if (!a.example.empty()) return example(a.example);
  return load_solution_file(a.file);
}

std::optional<Index> window_arg(const CLI::Option* opt, std::uint64_t value) {
  if (opt->count() == 0) return std::nullopt;
  return value;
}

// Scans over a countable carrier have to be bounded up front; turning the
// library error into a flag-naming message keeps usage failures uniform.
void require_window(const PartialSolution& S, const std::optional<Index>& win) {
  if (S.carrier().countable() && !win)
    fail(Errc::MissingWindow, "--window is required when the carrier is countable");
}

std::string tuple_str(const std::vector<Index>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

void print_report(const AxiomReport& rep) {
  if (rep.holds) {
    std::cout << rep.axiom << ": holds\n";
  } else {
    std::cout << rep.axiom << ": fails at " << tuple_str(rep.witness->tuple)
              << ": " << rep.witness->equation << "\n";
  }
}

json report_json(const AxiomReport& rep) {
  json j{{"axiom", rep.axiom}, {"holds", rep.holds}, {"skipped", rep.skipped}};
  if (rep.witness) {
    j["witness"] = {{"tuple", rep.witness->tuple}, {"equation", rep.witness->equation}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_verify(const PartialSolution& S, const std::string& axiom_sel,
               std::optional<Index> win, bool parallel, bool as_json) {
  require_window(S, win);
  std::vector<AxiomReport> reports;
  if (axiom_sel == "all") {
    reports = verify_all(S, win, parallel);
  } else {
    auto ax = axiom_from_name(axiom_sel);
    if (!ax) fail(Errc::BadArgument, "--axiom must be all or an axiom name, got '" + axiom_sel + "'");
    reports.push_back(verify(S, *ax, win, parallel));
  }
  bool ok = true;
  json jr = json::array();
  for (const auto& rep : reports) {
    ok = ok && rep.holds;
    if (as_json) jr.push_back(report_json(rep));
    else print_report(rep);
  }
  if (as_json) emit_json(json{{"reports", jr}});
  return ok ? 0 : 1;
}

int cmd_apply(const PartialSolution& S, Index x, Index y, bool as_json) {
  if (!S.carrier().contains(x) || !S.carrier().contains(y))
    fail(Errc::BadArgument, "--x and --y must lie in the carrier " + S.carrier().str());
  auto im = S.r(x, y);
  if (as_json) {
    json j{{"defined", im.has_value()}};
    if (im) j["image"] = {im->first, im->second};
    emit_json(j);
  } else if (im) {
    std::cout << "r(" << x << ", " << y << ") = (" << im->first << ", " << im->second << ")\n";
  } else {
    std::cout << "r(" << x << ", " << y << ") is undefined\n";
  }
  return im ? 0 : 1;
}

int cmd_embed(const PartialSolution& S, const std::string& word, bool as_json) {
  MonoidWord w = parse_word(word, S.carrier());
  EmbeddedElement e = psi(S, w);
  if (as_json) {
    emit_json(json{{"pi", e.fun.str()}, {"sigma", e.bij.str()}});
  } else {
    std::cout << e.str() << "\n";
  }
  return 0;
}

int cmd_eq(const PartialSolution& S, const std::string& w1, const std::string& w2,
           bool as_json) {
  bool eq = words_equal(S, parse_word(w1, S.carrier()), parse_word(w2, S.carrier()));
  if (as_json) emit_json(json{{"equal", eq}});
  else std::cout << (eq ? "equal" : "not equal") << "\n";
  return eq ? 0 : 1;
}

int cmd_oplus(const PartialSolution& S, const std::string& g, const std::string& h,
              std::optional<std::uint64_t> max_steps, bool as_json) {
  auto res = oplus(S, parse_word(g, S.carrier()), parse_word(h, S.carrier()), max_steps);
  if (as_json) {
    json j{{"defined", res.has_value()}};
    if (res) j["result"] = word_str(*res);
    emit_json(j);
  } else if (res) {
    std::cout << word_str(*res) << "\n";
  } else {
    std::cout << "undefined\n";
  }
  return res ? 0 : 1;
}

int cmd_reverse(const PartialSolution& S, const std::string& w1, const std::string& w2,
                std::optional<std::uint64_t> max_steps, const std::string& dot_path,
                bool dump, bool as_json) {
  ReversingOutcome out = reverse_words(S, parse_word(w1, S.carrier()),
                                       parse_word(w2, S.carrier()), max_steps);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) fail(Errc::BadArgument, "cannot write --dot file '" + dot_path + "'");
    f << out.diagram.dot();
  }
  using K = ReversingOutcome::Kind;
  if (as_json) {
    json j{{"steps", out.steps}};
    switch (out.kind) {
      case K::Closed:
        j["kind"] = "Closed";
        j["u"] = word_str(out.u);
        j["v"] = word_str(out.v);
        break;
      case K::NoRelation:
        j["kind"] = "NoRelation";
        j["row"] = out.row;
        j["col"] = out.col;
        if (out.letters) {
          j["vertical"] = letter_str(out.letters->first);
          j["horizontal"] = letter_str(out.letters->second);
        }
        break;
      case K::StepLimit:
        j["kind"] = "StepLimit";
        break;
    }
    emit_json(j);
  } else {
    switch (out.kind) {
      case K::Closed:
        std::cout << "closed in " << out.steps << " steps\n"
                  << "u = " << word_str(out.u) << "\n"
                  << "v = " << word_str(out.v) << "\n";
        break;
      case K::NoRelation:
        std::cout << "NoRelation at (" << out.row << "," << out.col << ")\n";
        if (out.letters)
          std::cout << "blocked pair: vertical=" << letter_str(out.letters->first)
                    << " horizontal=" << letter_str(out.letters->second) << "\n";
        break;
      case K::StepLimit:
        std::cout << "step limit reached after " << out.steps << " steps\n";
        break;
    }
    if (dump) std::cout << out.diagram.dump();
  }
  return out.kind == K::Closed ? 0 : 1;
}

int cmd_cycleset(const PartialSolution& S, std::optional<Index> win, bool parallel,
                 bool as_json) {
  require_window(S, win);
  CycleSet C = derive_cycle_set(S);
  CycleSetReport rep = verify_cycle_set(C, win, parallel);
  const AxiomReport* parts[] = {&rep.identity, &rep.square_free, &rep.non_degenerate};
  if (as_json) {
    json jr = json::array();
    for (const auto* p : parts) jr.push_back(report_json(*p));
    emit_json(json{{"reports", jr}});
  } else {
    for (const auto* p : parts) print_report(*p);
  }
  return rep.all_hold() ? 0 : 1;
}

int cmd_retract(const PartialSolution& S, bool as_json) {
  std::optional<RetractResult> out;
  try {
    out = retract(S);
  } catch (const Error& e) {
    if (e.code() != Errc::QuotientNotWellDefined) throw;
    if (as_json) emit_json(json{{"well_defined", false}, {"reason", e.what()}});
    else std::cout << e.what() << "\n";
    return 1;
  }
  const RetractResult& res = *out;
  if (as_json) {
    json jr = json::array();
    for (const auto& rep : res.quotient_reports) jr.push_back(report_json(rep));
    emit_json(json{{"well_defined", true},
                   {"classes", res.size()},
                   {"class_of", res.class_of},
                   {"quotient", save_solution(res.quotient)},
                   {"reports", jr}});
  } else {
    std::cout << "classes = " << res.size() << "\n";
    std::cout << "class_of =";
    for (Index c : res.class_of) std::cout << " " << c;
    std::cout << "\n";
    for (const auto& rep : res.quotient_reports) print_report(rep);
  }
  return 0;
}

int cmd_mpl(const PartialSolution& S, Index max_iter, bool as_json) {
  MplResult res = multipermutation_level(S, max_iter);
  using O = MplResult::Outcome;
  if (as_json) {
    json j{{"final_size", res.final_size}};
    switch (res.outcome) {
      case O::Reached: j["outcome"] = "Reached"; j["level"] = *res.level; break;
      case O::FixedPoint: j["outcome"] = "FixedPoint"; break;
      case O::MaxIter: j["outcome"] = "MaxIter"; break;
    }
    emit_json(j);
  } else {
    switch (res.outcome) {
      case O::Reached:
        std::cout << "level = " << *res.level << "\n";
        break;
      case O::FixedPoint:
        std::cout << "no level: fixed point at size " << res.final_size << "\n";
        break;
      case O::MaxIter:
        std::cout << "no level: iteration budget exhausted at size " << res.final_size << "\n";
        break;
    }
  }
  return res.outcome == O::Reached ? 0 : 1;
}

int cmd_decompose(const PartialSolution& S, Index limit, bool as_json) {
  auto res = decompose(S, limit);
  if (as_json) {
    json j{{"decomposable", res.has_value()}};
    if (res) {
      j["first"] = res->first.str();
      j["second"] = res->second.str();
    }
    emit_json(j);
  } else if (res) {
    std::cout << "first = " << res->first.str() << "\n"
              << "second = " << res->second.str() << "\n";
  } else {
    std::cout << "indecomposable\n";
  }
  return res ? 0 : 1;
}

int cmd_iso(const PartialSolution& S1, const PartialSolution& S2, Index limit,
            bool as_json) {
  auto perm = are_isomorphic(S1, S2, limit);
  if (as_json) {
    json j{{"isomorphic", perm.has_value()}};
    if (perm) j["perm"] = *perm;
    emit_json(j);
  } else if (perm) {
    std::cout << "perm =";
    for (Index p : *perm) std::cout << " " << p;
    std::cout << "\n";
  } else {
    std::cout << "not isomorphic\n";
  }
  return perm ? 0 : 1;
}

int cmd_thompson_nf(const std::string& word, bool as_json) {
  FNormalForm nf = f_normal_form(parse_f_word(word));
  if (as_json) {
    emit_json(json{{"a", nf.a}, {"b", nf.b}, {"normal_form", nf.str()}});
  } else {
    std::cout << nf.str() << "\n";
  }
  return 0;
}

int cmd_thompson_eq(const std::string& w1, const std::string& w2, bool as_json) {
  bool eq = f_words_equal(parse_f_word(w1), parse_f_word(w2));
  if (as_json) emit_json(json{{"equal", eq}});
  else std::cout << (eq ? "equal" : "not equal") << "\n";
  return eq ? 0 : 1;
}

int cmd_thompson_check(Index window, bool as_json) {
  WindowReport rep = window_checks(window);
  if (as_json) {
    emit_json(json{{"window", rep.window},
                   {"relations", rep.relation_count},
                   {"relations_match", rep.relations_match},
                   {"presentation_match", rep.presentation_match},
                   {"irretractable", rep.irretractable},
                   {"invariant_x0", rep.invariant_x0},
                   {"invariant_tail", rep.invariant_tail}});
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "window = " << rep.window << "\n"
              << "relations = " << rep.relation_count << "\n"
              << "relations_match: " << yn(rep.relations_match) << "\n"
              << "presentation_match: " << yn(rep.presentation_match) << "\n"
              << "irretractable: " << yn(rep.irretractable) << "\n"
              << "invariant_x0: " << yn(rep.invariant_x0) << "\n"
              << "invariant_tail: " << yn(rep.invariant_tail) << "\n";
  }
  return rep.all_hold() ? 0 : 1;
}

int cmd_examples(bool as_json) {
  auto cat = example_catalog();
  if (as_json) {
    json jr = json::array();
    for (const auto& [name, blurb] : cat) jr.push_back(json{{"name", name}, {"blurb", blurb}});
    emit_json(json{{"examples", jr}});
  } else {
    for (const auto& [name, blurb] : cat) std::cout << name << ": " << blurb << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial Yang-Baxter solutions: verification, structure monoid words, "
               "reversing, cycle sets, and the Thompson F word problem"};
  app.require_subcommand(1);
  int rc = 0;

  // verify
  SolutionArgs verify_sol;
  std::string verify_axiom = "all";
  std::uint64_t verify_window = 0;
  bool verify_parallel = false, verify_json = false;
  auto* sc_verify = app.add_subcommand("verify", "check the solution axioms");
  add_solution_flags(sc_verify, verify_sol);
  sc_verify->add_option("--axiom", verify_axiom,
                        "all, NonDegenerate, Involutive, Braided, or SquareFree");
  auto* verify_wopt = sc_verify->add_option("--window", verify_window,
                                            "scan bound for countable carriers");
  sc_verify->add_flag("--parallel", verify_parallel, "use the chunked parallel scan");
  sc_verify->add_flag("--json", verify_json, "emit JSON");
  sc_verify->callback([&] {
    rc = cmd_verify(resolve(verify_sol), verify_axiom,
                    window_arg(verify_wopt, verify_window), verify_parallel, verify_json);
  });

  // apply
  SolutionArgs apply_sol;
  std::uint64_t apply_x = 0, apply_y = 0;
  bool apply_json = false;
  auto* sc_apply = app.add_subcommand("apply", "apply r to a pair (x, y)");
  add_solution_flags(sc_apply, apply_sol);
  sc_apply->add_option("--x", apply_x, "left coordinate")->required();
  sc_apply->add_option("--y", apply_y, "right coordinate")->required();
  sc_apply->add_flag("--json", apply_json, "emit JSON");
  sc_apply->callback([&] {
    rc = cmd_apply(resolve(apply_sol), apply_x, apply_y, apply_json);
  });

  // embed
  SolutionArgs embed_sol;
  std::string embed_word;
  bool embed_json = false;
  auto* sc_embed = app.add_subcommand("embed", "embed a word: its translation part and total bijection");
  add_solution_flags(sc_embed, embed_sol);
  sc_embed->add_option("--word", embed_word, "word, e.g. \"0 2' 1\"")->required();
  sc_embed->add_flag("--json", embed_json, "emit JSON");
  sc_embed->callback([&] {
    rc = cmd_embed(resolve(embed_sol), embed_word, embed_json);
  });

  // eq
  SolutionArgs eq_sol;
  std::string eq_w1, eq_w2;
  bool eq_json = false;
  auto* sc_eq = app.add_subcommand("eq", "decide equality of two words in the inverse monoid");
  add_solution_flags(sc_eq, eq_sol);
  sc_eq->add_option("--w1", eq_w1, "first word")->required();
  sc_eq->add_option("--w2", eq_w2, "second word")->required();
  sc_eq->add_flag("--json", eq_json, "emit JSON");
  sc_eq->callback([&] {
    rc = cmd_eq(resolve(eq_sol), eq_w1, eq_w2, eq_json);
  });

  // oplus
  SolutionArgs oplus_sol;
  std::string oplus_g, oplus_h;
  std::uint64_t oplus_steps = 0;
  bool oplus_json = false;
  auto* sc_oplus = app.add_subcommand("oplus", "partial brace addition g (+) h via reversing");
  // --h would collide with the default -h short help name.
  sc_oplus->set_help_flag("--help", "Print this help message and exit");
  add_solution_flags(sc_oplus, oplus_sol);
  sc_oplus->add_option("--g", oplus_g, "left word")->required();
  sc_oplus->add_option("--h", oplus_h, "right word")->required();
  auto* oplus_sopt = sc_oplus->add_option("--max-steps", oplus_steps, "reversing step budget");
  sc_oplus->add_flag("--json", oplus_json, "emit JSON");
  sc_oplus->callback([&] {
    std::optional<std::uint64_t> steps;
    if (oplus_sopt->count()) steps = oplus_steps;
    rc = cmd_oplus(resolve(oplus_sol), oplus_g, oplus_h, steps, oplus_json);
  });

  // reverse
  SolutionArgs rev_sol;
  std::string rev_w1, rev_w2, rev_dot;
  std::uint64_t rev_steps = 0;
  bool rev_dump = false, rev_json = false;
  auto* sc_rev = app.add_subcommand("reverse", "right-reverse w2^-1 w1 into u v^-1");
  add_solution_flags(sc_rev, rev_sol);
  sc_rev->add_option("--w1", rev_w1, "first word")->required();
  sc_rev->add_option("--w2", rev_w2, "second word")->required();
  auto* rev_sopt = sc_rev->add_option("--max-steps", rev_steps, "step budget");
  sc_rev->add_option("--dot", rev_dot, "write the reversing diagram as Graphviz dot");
  sc_rev->add_flag("--dump", rev_dump, "print the square-by-square log");
  sc_rev->add_flag("--json", rev_json, "emit JSON");
  sc_rev->callback([&] {
    std::optional<std::uint64_t> steps;
    if (rev_sopt->count()) steps = rev_steps;
    rc = cmd_reverse(resolve(rev_sol), rev_w1, rev_w2, steps, rev_dot, rev_dump, rev_json);
  });

  // cycleset
  SolutionArgs cyc_sol;
  std::uint64_t cyc_window = 0;
  bool cyc_parallel = false, cyc_json = false;
  auto* sc_cyc = app.add_subcommand("cycleset", "derive the cycle set and check its laws");
  add_solution_flags(sc_cyc, cyc_sol);
  auto* cyc_wopt = sc_cyc->add_option("--window", cyc_window, "scan bound for countable carriers");
  sc_cyc->add_flag("--parallel", cyc_parallel, "use the chunked parallel scan");
  sc_cyc->add_flag("--json", cyc_json, "emit JSON");
  sc_cyc->callback([&] {
    rc = cmd_cycleset(resolve(cyc_sol), window_arg(cyc_wopt, cyc_window), cyc_parallel,
                      cyc_json);
  });

  // retract
  SolutionArgs ret_sol;
  bool ret_json = false;
  auto* sc_ret = app.add_subcommand("retract", "quotient by equal sigma maps");
  add_solution_flags(sc_ret, ret_sol);
  sc_ret->add_flag("--json", ret_json, "emit JSON");
  sc_ret->callback([&] { rc = cmd_retract(resolve(ret_sol), ret_json); });

  // mpl
  SolutionArgs mpl_sol;
  std::uint64_t mpl_iter = 64;
  bool mpl_json = false;
  auto* sc_mpl = app.add_subcommand("mpl", "iterate retracts to a multipermutation level");
  add_solution_flags(sc_mpl, mpl_sol);
  sc_mpl->add_option("--max-iter", mpl_iter, "retract iteration budget (default 64)");
  sc_mpl->add_flag("--json", mpl_json, "emit JSON");
  sc_mpl->callback([&] { rc = cmd_mpl(resolve(mpl_sol), mpl_iter, mpl_json); });

  // decompose
  SolutionArgs dec_sol;
  std::uint64_t dec_limit = 12;
  bool dec_json = false;
  auto* sc_dec = app.add_subcommand("decompose", "search for an invariant two-part split");
  add_solution_flags(sc_dec, dec_sol);
  sc_dec->add_option("--limit", dec_limit, "largest carrier to search (default 12)");
  sc_dec->add_flag("--json", dec_json, "emit JSON");
  sc_dec->callback([&] { rc = cmd_decompose(resolve(dec_sol), dec_limit, dec_json); });

  // iso
  SolutionArgs iso_sol1, iso_sol2;
  std::uint64_t iso_limit = 8;
  bool iso_json = false;
  auto* sc_iso = app.add_subcommand("iso", "search for an isomorphism between two solutions");
  add_solution_flags(sc_iso, iso_sol1);
  add_solution_flags(sc_iso, iso_sol2, /*secondary=*/true);
  sc_iso->add_option("--limit", iso_limit, "largest carrier to search (default 8)");
  sc_iso->add_flag("--json", iso_json, "emit JSON");
  sc_iso->callback([&] {
    rc = cmd_iso(resolve(iso_sol1), resolve(iso_sol2, /*secondary=*/true), iso_limit,
                 iso_json);
  });

  // thompson-nf
  std::string tnf_word;
  bool tnf_json = false;
  auto* sc_tnf = app.add_subcommand("thompson-nf", "normal form of an F word");
  sc_tnf->add_option("word", tnf_word, "F word, e.g. \"1 0\" or \"0^-2 3\"")->required();
  sc_tnf->add_flag("--json", tnf_json, "emit JSON");
  sc_tnf->callback([&] { rc = cmd_thompson_nf(tnf_word, tnf_json); });

  // thompson-eq
  std::string teq_w1, teq_w2;
  bool teq_json = false;
  auto* sc_teq = app.add_subcommand("thompson-eq", "decide equality of two F words");
  sc_teq->add_option("w1", teq_w1, "first F word")->required();
  sc_teq->add_option("w2", teq_w2, "second F word")->required();
  sc_teq->add_flag("--json", teq_json, "emit JSON");
  sc_teq->callback([&] { rc = cmd_thompson_eq(teq_w1, teq_w2, teq_json); });

  // thompson-check
  std::uint64_t tch_window = 0;
  bool tch_json = false;
  auto* sc_tch = app.add_subcommand("thompson-check",
                                    "windowed checks of the countable solution's presentation");
  sc_tch->add_option("--window", tch_window, "index bound, at least 3")->required();
  sc_tch->add_flag("--json", tch_json, "emit JSON");
  sc_tch->callback([&] { rc = cmd_thompson_check(tch_window, tch_json); });

  // examples
  bool exl_json = false;
  auto* sc_exl = app.add_subcommand("examples", "list the built-in example solutions");
  sc_exl->add_flag("--json", exl_json, "emit JSON");
  sc_exl->callback([&] { rc = cmd_examples(exl_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
