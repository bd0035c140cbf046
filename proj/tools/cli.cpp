#include "cli.h"

#include <CLI11.hpp>

#include <charconv>
#include <optional>

#include "rbs/branching.h"
#include "rbs/embed.h"
#include "rbs/errors.h"
#include "rbs/expression.h"
#include "rbs/serialize.h"
#include "suites.h"

namespace rbs::cli {

namespace {

struct Options {
  std::string rep = "|1";
  std::optional<Letter> N;
  std::string model = "word";
  std::string expr;
  std::string state = "omega";
  std::optional<Mode> modes;
  std::optional<std::uint32_t> exponents;
  std::uint32_t cutoff = 4;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
  bool json = false;
  std::string occ;
  std::string suite;
  std::string family = "typej";
  Letter j = 1;
  std::optional<Letter> generator;
  std::optional<std::string> word;
};

RepSpec parse_rep(const Options& o) {
  const auto bar = o.rep.find('|');
  if (bar == std::string::npos) throw ParseError("representation must be written '|cycle'", o.rep.size());
  if (!parse_word(o.rep.substr(0, bar)).empty()) throw ParseError("representation takes no prefix", 0);
  Word cycle = parse_word(std::string_view(o.rep).substr(bar + 1));
  if (cycle.empty()) throw ParseError("empty cycle", bar + 1);
  return RepSpec(o.N ? Alphabet::finite(*o.N) : Alphabet::infinite(), std::move(cycle));
}

OdometerLabel parse_odometer_state(const std::string& text) {
  if (text == "omega") return {1};
  if (text.starts_with('e')) {
    std::uint64_t index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), index);
    if (ec != std::errc() || ptr != text.data() + text.size() || index == 0) {
      throw ParseError("expected e<index> with index >= 1", 1);
    }
    return {index};
  }
  return odometer_from_word(parse_epword(text));
}

Ket parse_state(const RepSpec& spec, const std::string& text) {
  if (text == "omega") return gp_vector(spec);
  EPWord label = parse_epword(text);
  if (!spec.contains(label)) {
    throw DomainError("state " + label.to_string() + " is not a basis label of " + spec.to_string());
  }
  return Ket(std::move(label));
}

int cmd_act(const Options& o, std::ostream& out) {
  const OperatorExpression expr = parse_expression(o.expr);
  if (o.model == "odometer") {
    const OdometerKet result = apply_expression(expr, OdometerKet(parse_odometer_state(o.state)));
    if (o.json) {
      out << nlohmann::json{{"model", "odometer"}, {"expression", expr.to_string()}, {"ket", ket_to_json(result)}}.dump(2)
          << '\n';
    } else {
      out << to_string(result) << '\n';
    }
    return kPass;
  }
  const RepSpec spec = parse_rep(o);
  const Ket result = apply_expression(expr, spec, parse_state(spec, o.state));
  if (o.json) {
    out << nlohmann::json{{"representation", spec.to_string()}, {"expression", expr.to_string()},
                          {"ket", ket_to_json(result)}}
               .dump(2)
        << '\n';
  } else {
    out << to_string(result) << '\n';
  }
  return kPass;
}

int cmd_branch(const Options& o, std::ostream& out) {
  const RepSpec spec = parse_rep(o);
  const auto components = branch(spec, o.modes.value_or(6));
  if (o.json) {
    out << nlohmann::json{{"representation", spec.to_string()}, {"components", components_to_json(components)}}.dump(2)
        << '\n';
    return kPass;
  }
  out << "representation " << spec.to_string() << '\n';
  out << "components: " << components.size() << '\n';
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    out << '[' << i + 1 << "] vacuum " << c.vacuum.to_string() << "  pattern " << word_to_string(c.pattern) << "  "
        << c.classification.to_string() << '\n';
    for (const auto& id : c.verified) {
      out << "    " << id.identity << "  : " << id.scalar.to_string() << (id.passed ? "  ok" : "  FAILED") << '\n';
    }
  }
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  if (!is_suite(o.suite)) {
    err << "unknown suite '" << o.suite << "'; known suites:";
    for (const auto& n : suite_names()) err << ' ' << n;
    err << '\n';
    return kUsage;
  }
  SuiteOptions so;
  so.modes = o.modes;
  so.exponents = o.exponents;
  so.cutoff = o.cutoff;
  so.samples = o.samples;
  so.seed = o.seed;
  so.N = o.N;
  const auto reports = run_suite(o.suite, so);
  std::size_t passed = 0;
  std::size_t total = 0;
  for (const auto& r : reports) {
    passed += r.passed_count();
    total += r.checks().size();
  }
  const bool ok = passed == total;
  if (o.json) {
    auto list = nlohmann::json::array();
    for (const auto& r : reports) list.push_back(report_to_json(r));
    out << nlohmann::json{{"suite", o.suite}, {"passed", ok}, {"reports", list}}.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.title() << '\n';
      for (const auto& c : r.checks()) {
        out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
      }
    }
    out << o.suite << ": " << passed << '/' << total << " checks passed, " << (ok ? "pass" : "FAIL") << '\n';
  }
  return ok ? kPass : kVerificationFailed;
}

int cmd_fock(const Options& o, std::ostream& out) {
  const Occupations occ = parse_occupations(o.occ);
  const FockWord fw = fock_word(occ);
  const EPWord label(fw.word, {1});
  std::optional<Word> t_word;
  if (o.N) t_word = fock_word_in_ON(EmbeddingSpec(*o.N), occ);
  if (o.json) {
    nlohmann::json j{{"occupations", occupations_to_string(occ)},
                     {"word", fw.word},
                     {"coefficient", scalar_to_json(fw.coefficient)},
                     {"label", label.to_string()}};
    if (t_word) {
      j["N"] = *o.N;
      j["t_word"] = *t_word;
    }
    out << j.dump(2) << '\n';
    return kPass;
  }
  out << "occupations: " << (occ.empty() ? "(vacuum)" : occupations_to_string(occ)) << '\n';
  out << "word: " << (fw.word.empty() ? "(empty)" : word_to_string(fw.word)) << '\n';
  out << "coefficient: " << fw.coefficient.to_string() << '\n';
  out << "label: " << label.to_string() << '\n';
  if (t_word) out << "t-word in O_" << *o.N << ": " << (t_word->empty() ? "(empty)" : word_to_string(*t_word)) << '\n';
  return kPass;
}

std::string t_product(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) out += (out.empty() ? "t" : " t") + std::to_string(l);
  return out;
}

int cmd_embed(const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.N) {
    err << "embed needs --N\n";
    return kUsage;
  }
  const EmbeddingSpec spec(*o.N);
  Word source;
  Word target;
  std::string what;
  if (o.generator) {
    source = {*o.generator};
    target = embed_generator(spec, *o.generator);
    what = "s" + std::to_string(*o.generator);
  } else if (o.word) {
    source = parse_word(*o.word);
    target = translate_word(spec, source);
    for (Letter l : source) what += (what.empty() ? "s" : " s") + std::to_string(l);
    if (what.empty()) what = "1";
  } else if (!o.occ.empty()) {
    const Occupations occ = parse_occupations(o.occ);
    target = fock_word_in_ON(spec, occ);
    what = "[" + occupations_to_string(occ) + "]";
  } else {
    err << "embed needs one of --generator, --word, --occ\n";
    return kUsage;
  }
  if (o.json) {
    out << nlohmann::json{{"N", spec.N}, {"source", what}, {"word", target}}.dump(2) << '\n';
  } else {
    out << what << " -> " << t_product(target) << '\n';
  }
  return kPass;
}

std::string monomial_string(const NormalizedMonomial& m) {
  std::string body = BosonPolynomial(m.monomial).to_string();
  return scalar_factor_string(m.normalizer) + " * " + (body == "1" ? "" : body + " ") + "Omega";
}

int cmd_bases(const Options& o, std::ostream& out, std::ostream& err) {
  const Mode modes = o.modes.value_or(2);
  const std::uint32_t exponents = o.exponents.value_or(2);
  Report report;
  if (o.family == "lambda") {
    const RepSpec spec = RepSpec::infinite({o.j});
    for (const Word& index : lambda_j_indices(o.j, modes)) {
      const Ket v = apply_polynomial(spec, CuntzPolynomial(CuntzMonomial{RadicalScalar(1L), index, {}}), gp_vector(spec));
      std::string s;
      for (Letter l : index) s += (s.empty() ? "s" : " s") + std::to_string(l);
      out << s << " Omega = " << to_string(v) << '\n';
    }
    report = check_lambda_basis(o.j, modes);
  } else {
    std::vector<NormalizedMonomial> family;
    EPWord vacuum(Word{1});
    if (o.family == "typej") {
      family = basis_typej(o.j, modes, exponents);
      vacuum = EPWord(Word{o.j});
    } else if (o.family == "onetwo" || o.family == "twoone") {
      const bool swapped = o.family == "twoone";
      family = basis_onetwov(modes, exponents, swapped);
      vacuum = EPWord(swapped ? Word{2, 1} : Word{1, 2});
    } else {
      err << "unknown family '" << o.family << "' (lambda, typej, onetwo, twoone)\n";
      return kUsage;
    }
    for (const auto& m : family) {
      out << monomial_string(m) << " = " << to_string(m.normalizer * apply_boson(m.monomial, Ket(vacuum))) << '\n';
    }
    report = check_basis_family(o.family, family, vacuum, modes, exponents);
  }
  for (const auto& c : report.checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  return report.all_passed() ? kPass : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact boson operators in permutative representations of Cuntz algebras"};
  app.name("rbs_cli");
  app.require_subcommand(1);
  Options o;

  auto add_rep = [&](CLI::App* sub) {
    sub->add_option("--rep", o.rep, "cyclic representation '|cycle', e.g. '|1,2'");
    sub->add_option("--N", o.N, "finite N: act in a representation of O_N")->check(CLI::Range(2u, 1u << 20));
  };
  auto add_cutoffs = [&](CLI::App* sub) {
    sub->add_option("--modes", o.modes, "largest boson mode")->check(CLI::PositiveNumber);
    sub->add_option("--exponents", o.exponents, "largest exponent")->check(CLI::PositiveNumber);
  };

  auto* act = app.add_subcommand("act", "apply an operator expression to a state");
  add_rep(act);
  act->add_option("--expr", o.expr, "expression, e.g. 's1 s2* + sqrt(2) a3*'")->required();
  act->add_option("--state", o.state, "omega, a label 'prefix|cycle', or e<n> for the odometer model");
  act->add_option("--model", o.model, "word or odometer")->check(CLI::IsMember({"word", "odometer"}));

  auto* br = app.add_subcommand("branch", "decompose the restriction to the boson algebra");
  add_rep(br);
  add_cutoffs(br);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required();
  add_cutoffs(verify);
  verify->add_option("--cutoff", o.cutoff, "cutoff for occupations and generators")->check(CLI::PositiveNumber);
  verify->add_option("--samples", o.samples, "random samples per check");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--N", o.N, "embedding target O_N")->check(CLI::Range(2u, 1u << 20));

  auto* fock = app.add_subcommand("fock", "word and coefficient of a Fock state");
  fock->add_option("--occ", o.occ, "occupations 'mode:count,...'")->required();
  fock->add_option("--N", o.N, "also give the word in O_N")->check(CLI::Range(2u, 1u << 20));

  auto* embed = app.add_subcommand("embed", "translate O_inf generators into O_N");
  embed->add_option("--N", o.N, "target O_N")->check(CLI::Range(2u, 1u << 20));
  embed->add_option("--generator", o.generator, "generator index m of s_m")->check(CLI::PositiveNumber);
  embed->add_option("--word", o.word, "word of generator indices, e.g. 2,3");
  embed->add_option("--occ", o.occ, "occupations 'mode:count,...'");

  auto* bases = app.add_subcommand("bases", "list and check an orthonormal basis family");
  bases->add_option("--family", o.family, "lambda, typej, onetwo or twoone");
  bases->add_option("--j", o.j, "j of Lambda_j or the type-j family")->check(CLI::PositiveNumber);
  add_cutoffs(bases);

  for (auto* sub : {act, br, verify, fock, embed, bases}) sub->add_flag("--json", o.json, "machine-readable output");

  std::vector<const char*> argv{"rbs_cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (act->parsed()) return cmd_act(o, out);
    if (br->parsed()) return cmd_branch(o, out);
    if (verify->parsed()) return cmd_verify(o, out, err);
    if (fock->parsed()) return cmd_fock(o, out);
    if (embed->parsed()) return cmd_embed(o, out, err);
    if (bases->parsed()) return cmd_bases(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::overflow_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::logic_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace rbs::cli
