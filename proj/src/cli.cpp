// Copyright 2026 The dlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlgames/cli.hpp"

#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dlgames/bisim.hpp"
#include "dlgames/bnf.hpp"
#include "dlgames/characteristic.hpp"
#include "dlgames/comonad.hpp"
#include "dlgames/errors.hpp"
#include "dlgames/game.hpp"
#include "dlgames/io.hpp"
#include "dlgames/parser.hpp"
#include "dlgames/reductions.hpp"
#include "dlgames/sampler.hpp"
#include "dlgames/semantics.hpp"

namespace dlgames {
namespace {

constexpr std::size_t kOmega = StratifiedBisim::kOmega;

// `field` names the option in error messages.
std::size_t parse_rounds(const std::string& text, bool allow_omega,
                         const std::string& field = "rounds") {
  if (text == "omega") {
    if (!allow_omega) {
      throw PreconditionError(field + ": omega is not allowed here, " +
                              "a finite number is needed");
    }
    return kOmega;
  }
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw PreconditionError(field + ": expected a natural number" +
                            (allow_omega ? " or omega" : "") + ", got '" +
                            text + "'");
  }
  return std::stoul(text);
}

std::string rounds_text(std::size_t k) {
  return k == kOmega ? "omega" : std::to_string(k);
}

std::string logic_text(const LogicSelector& l) {
  return "{" + l.to_string() + "}";
}

std::string game_verdict(bool duplicator, std::size_t k,
                         const LogicSelector& l) {
  return std::string("VERDICT: ") + (duplicator ? "duplicator" : "spoiler") +
         " rounds=" + rounds_text(k) + " logic=" + logic_text(l);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw FormatError("output", "cannot write " + path);
  f << text;
}

std::size_t layer_size(const std::vector<std::uint8_t>& z) {
  std::size_t n = 0;
  for (auto b : z) n += b;
  return n;
}

struct Options {
  std::string left, right, input, output, model, concept_text, script;
  std::string logic;
  std::string rounds = "omega";
  std::string play_rounds = "3";
  std::string depth = "2";
  std::size_t samples = 10;
  std::size_t oracle_samples = 200;
  std::uint64_t seed = 7;
  std::size_t max_size = 12;
  std::string kernel = "parallel";
  std::string spoiler = "interactive";
  bool report = false;
  bool transcript = false;
  bool literal_nominals = false;
};

int cmd_check(const Options& o, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.model);
  Concept c = parse_concept(o.concept_text);
  bool sat = satisfies(p, c);
  out << "concept: " << print(c) << "\n";
  out << "rank: " << rank(c) << "\n";
  out << "logic: " << logic_text(c.required_logic()) << "\n";
  out << "point: " << p.point << "\n";
  out << "VERDICT: " << (sat ? "satisfied" : "unsatisfied") << "\n";
  return sat ? kExitEquivalent : kExitDistinguished;
}

int cmd_bisim(const Options& o, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.left);
  PointedInterpretation q = read_interpretation_file(o.right);
  LogicSelector logic = LogicSelector::parse(o.logic);
  std::size_t k = parse_rounds(o.rounds, true);
  Kernel kernel = o.kernel == "serial" ? Kernel::kSerial : Kernel::kParallel;
  StratifiedBisim sb = stratified_bisim(p, q, logic, k, kernel);
  out << "layers:";
  for (std::size_t i = 0; i < sb.layer_count(); ++i) {
    out << " |Z_" << i << "|=" << layer_size(sb.layer(i));
  }
  out << (sb.stable() ? " (stable)" : "") << "\n";
  if (auto d = sb.distinguishing_round()) {
    out << "distinguishing round: " << *d << "\n";
  } else {
    out << "distinguishing round: none within " << (sb.layer_count() - 1)
        << (sb.stable() ? " (fixpoint reached)" : "") << "\n";
  }
  if (o.transcript) {
    ExhaustiveSpoiler spoiler;
    Transcript t = run_game(sb, spoiler);
    for (const auto& line : t.lines(sb)) out << line << "\n";
  }
  const bool dup = sb.duplicator_wins();
  out << game_verdict(dup, k, logic) << "\n";
  return dup ? kExitEquivalent : kExitDistinguished;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  if (o.report && o.output.empty()) {
    throw PreconditionError("--report needs --output");
  }
  PointedInterpretation p = read_interpretation_file(o.input);
  LogicSelector logic = LogicSelector::parse(o.logic);
  NominalOptions opts;
  if (o.literal_nominals) opts = NominalOptions{false, false};
  ReductionReport report;
  PointedInterpretation r = tau_phi(p, logic, opts, &report);
  std::string text = to_text(interpretation_to_json(r));
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
    out << "wrote " << o.output << "\n";
  }
  if (o.report) {
    write_text(o.output + ".report.json", to_text(report_to_json(report)));
    out << "wrote " << o.output << ".report.json\n";
  }
  out << "VERDICT: reduced logic=" << logic_text(logic)
      << " elements=" << report.input_elements << "->"
      << report.output_elements << "\n";
  return kExitEquivalent;
}

int cmd_unravel(const Options& o, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.input);
  const std::size_t depth = parse_rounds(o.depth, false, "depth");
  UnravelTree t = unravel(p, depth);
  std::string text = to_text(interpretation_to_json(t.to_pointed()));
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
    out << "wrote " << o.output << "\n";
  }
  out << "VERDICT: unravelled nodes=" << t.size() << " depth=" << depth
      << "\n";
  return kExitEquivalent;
}

int cmd_laws(const Options& o, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.input);
  const std::size_t depth = parse_rounds(o.depth, false, "depth");
  LawReport report = check_comonad_laws(p, depth, o.samples, o.seed);
  for (const auto& line : report.lines()) out << line << "\n";
  const bool ok = report.all_passed();
  out << "VERDICT: " << (ok ? "pass" : "fail") << " depth=" << depth
      << " samples=" << o.samples << " seed=" << o.seed << "\n";
  return ok ? kExitEquivalent : kExitDistinguished;
}

int cmd_bnf(const Options& o, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.left);
  PointedInterpretation q = read_interpretation_file(o.right);
  LogicSelector logic = LogicSelector::parse(o.logic);
  std::size_t k = parse_rounds(o.rounds, false);
  NominalOptions opts;
  if (o.literal_nominals) opts = NominalOptions{false, false};
  BnfResult r = bnf_game(p, q, logic, k, opts);
  out << "tree nodes: left=" << r.left_nodes << " right=" << r.right_nodes
      << "\n";
  out << "positions explored: " << r.positions_explored << "\n";
  out << game_verdict(r.duplicator_wins, k, logic) << "\n";
  return r.duplicator_wins ? kExitEquivalent : kExitDistinguished;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.left);
  PointedInterpretation q = read_interpretation_file(o.right);
  LogicSelector logic = LogicSelector::parse(o.logic);
  std::size_t k = parse_rounds(o.rounds, false);
  const bool dup = stratified_bisim(p, q, logic, k).duplicator_wins();
  out << "game: " << (dup ? "duplicator" : "spoiler") << " wins\n";
  bool agree = true;

  if (logic.empty() && !p.interp.vocab.concepts.empty()) {
    for (int side = 0; side < 2; ++side) {
      const auto& from = side == 0 ? p : q;
      const auto& other = side == 0 ? q : p;
      Concept x = characteristic_concept(from, k);
      bool sat = satisfies(other, x);
      out << "characteristic concept of " << (side == 0 ? "left" : "right")
          << " (size " << x.size() << ") holds on "
          << (side == 0 ? "right" : "left") << ": " << (sat ? "yes" : "no")
          << (sat == dup ? "" : "  MISMATCH") << "\n";
      agree = agree && sat == dup;
    }
  } else {
    out << "characteristic concept: skipped (plain ALC with a concept name "
           "only)\n";
  }

  Model mp(p);
  Model mq(q);
  Evaluator ep(mp);
  Evaluator eq(mq);
  std::mt19937_64 seeder(o.seed);
  std::size_t distinguishing = 0;
  std::optional<Concept> witness;
  for (std::size_t i = 0; i < o.oracle_samples; ++i) {
    Concept c = random_concept(p.interp.vocab, logic, k, o.max_size, seeder());
    if (ep.holds_at_point(c) != eq.holds_at_point(c)) {
      ++distinguishing;
      if (!witness) witness = c;
    }
  }
  out << "sampled concepts: " << o.oracle_samples << ", distinguishing: "
      << distinguishing << "\n";
  if (witness) out << "first distinguishing concept: " << print(*witness) << "\n";
  if (dup && distinguishing > 0) {
    out << "MISMATCH: a concept separates a Duplicator-winning pair\n";
    agree = false;
  }
  out << "VERDICT: " << (agree ? "agree" : "disagree")
      << " rounds=" << k << " logic=" << logic_text(logic) << "\n";
  return agree ? kExitEquivalent : kExitDistinguished;
}

int cmd_play(const Options& o, std::istream& in, std::ostream& out) {
  PointedInterpretation p = read_interpretation_file(o.left);
  PointedInterpretation q = read_interpretation_file(o.right);
  LogicSelector logic = LogicSelector::parse(o.logic);
  std::size_t k = parse_rounds(o.play_rounds, true);
  StratifiedBisim sb = stratified_bisim(p, q, logic, k);
  std::unique_ptr<SpoilerSource> spoiler;
  if (o.spoiler == "exhaustive") {
    spoiler = std::make_unique<ExhaustiveSpoiler>();
  } else if (o.spoiler == "script") {
    if (o.script.empty()) throw PreconditionError("--spoiler script needs --script");
    std::ifstream f(o.script);
    if (!f) throw FormatError("script", "cannot open " + o.script);
    std::vector<NamedMove> moves;
    std::string line;
    while (std::getline(f, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line[line.find_first_not_of(" \t")] == '#') continue;
      moves.push_back(parse_named_move(line));
    }
    spoiler = std::make_unique<ScriptedSpoiler>(std::move(moves));
  } else {
    spoiler = std::make_unique<InteractiveSpoiler>(in, out);
  }
  Transcript t = run_game(sb, *spoiler);
  for (const auto& line : t.lines(sb)) out << line << "\n";
  const bool dup = t.winner == Player::kDuplicator;
  out << game_verdict(dup, k, logic) << "\n";
  return dup ? kExitEquivalent : kExitDistinguished;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out, std::ostream& err) {
  CLI::App app{"Bisimulation games, reductions and unravellings for "
               "description logics between ALC and ALC_Self I b O",
               "dlgames"};
  app.require_subcommand(1);
  Options o;

  auto pair_inputs = [&](CLI::App* sub) {
    sub->add_option("--left", o.left, "left pointed interpretation (JSON)")
        ->required();
    sub->add_option("--right", o.right, "right pointed interpretation (JSON)")
        ->required();
    sub->add_option("--logic", o.logic,
                    "comma-separated extensions among Self,I,b,O");
  };

  auto* check = app.add_subcommand("check", "does the point satisfy a concept");
  check->add_option("--model", o.model, "pointed interpretation (JSON)")
      ->required();
  check->add_option("--concept", o.concept_text, "concept, e.g. 'A & !B'")
      ->required();

  auto* bisim = app.add_subcommand("bisim", "stratified bisimulation verdict");
  pair_inputs(bisim);
  bisim->add_option("--rounds", o.rounds, "natural number or omega");
  bisim->add_option("--kernel", o.kernel, "serial or parallel")
      ->check(CLI::IsMember({"serial", "parallel"}));
  bisim->add_flag("--transcript", o.transcript,
                  "print an optimal-Spoiler play");

  auto* reduce = app.add_subcommand("reduce", "apply the reductions of a logic");
  reduce->add_option("--input", o.input, "pointed interpretation (JSON)")
      ->required();
  reduce->add_option("--logic", o.logic, "extensions among Self,I,b,O");
  reduce->add_option("--output", o.output, "output path (default stdout)");
  reduce->add_flag("--report", o.report, "write <output>.report.json");
  reduce->add_flag("--literal-nominals", o.literal_nominals,
                   "undirected distances, no @is markers");

  auto* unrav = app.add_subcommand("unravel", "depth-k unravelling");
  unrav->add_option("--input", o.input, "pointed interpretation (JSON)")
      ->required();
  unrav->add_option("--depth", o.depth, "unravelling depth, a natural number")->required();
  unrav->add_option("--output", o.output, "output path (default stdout)");

  auto* laws = app.add_subcommand("laws", "check the comonad laws");
  laws->add_option("--input", o.input, "pointed interpretation (JSON)")
      ->required();
  laws->add_option("--depth", o.depth, "unravelling depth");
  laws->add_option("--samples", o.samples, "random coKleisli samples");
  laws->add_option("--seed", o.seed, "random seed");

  auto* bnf = app.add_subcommand("bnf", "back-and-forth game on unravellings");
  pair_inputs(bnf);
  bnf->add_option("--rounds", o.rounds, "natural number")->required();
  bnf->add_flag("--literal-nominals", o.literal_nominals,
                "undirected distances, no @is markers");

  auto* oracle = app.add_subcommand(
      "oracle", "compare the game with characteristic and sampled concepts");
  pair_inputs(oracle);
  oracle->add_option("--rounds", o.rounds, "natural number")->required();
  oracle->add_option("--samples", o.oracle_samples, "random concepts")
      ->capture_default_str();
  oracle->add_option("--seed", o.seed, "random seed");
  oracle->add_option("--max-size", o.max_size, "concept size budget");

  auto* play = app.add_subcommand("play", "play the game against Duplicator");
  pair_inputs(play);
  play->add_option("--rounds", o.play_rounds, "natural number or omega")
      ->capture_default_str();
  play->add_option("--spoiler", o.spoiler, "interactive, script or exhaustive")
      ->check(CLI::IsMember({"interactive", "script", "exhaustive"}));
  play->add_option("--script", o.script, "file with one move per line");

  std::vector<std::string> argv{"dlgames"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*bisim) return cmd_bisim(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*unrav) return cmd_unravel(o, out);
    if (*laws) return cmd_laws(o, out);
    if (*bnf) return cmd_bnf(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*play) return cmd_play(o, in, out);
  } catch (const IllegalMoveError& e) {
    err << "error: illegal move " << e.index() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace dlgames
