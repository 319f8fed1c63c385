#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "disep/classify.hpp"
#include "disep/errors.hpp"
#include "disep/json_io.hpp"
#include "disep/pencil.hpp"
#include "disep/quad.hpp"
#include "disep/random.hpp"
#include "disep/separability.hpp"

namespace disep::cli {

using nlohmann::json;
namespace jio = disep::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

struct Options {
  std::string case_name = "all";
  std::string kind;
  std::map<std::string, std::string> params;
  std::size_t samples = 5;
  std::size_t trials = 100;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
  std::string input;
  std::string policy = "strict";
  bool symbolic = false;
  std::string alpha, beta, gamma;
  std::string convention = "alternating";
  unsigned threads = 1;
  unsigned degree = 4;
};

struct Outcome {
  Report report;
  json data = json::object();
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Rational parse_rational(const std::string& text, const std::string& what) {
  try {
    return Rational::parse(text);
  } catch (const Error&) {
    throw UsageError("cannot parse " + what + " '" + text + "' as a rational");
  }
}

// Parameters given on the command line that belong to `names`.
std::map<std::string, FieldElement> case_params(const Options& o, const std::vector<std::string>& names) {
  std::map<std::string, FieldElement> out;
  for (const auto& n : names) {
    auto it = o.params.find(n);
    if (it != o.params.end()) out.emplace(n, FieldElement(parse_rational(it->second, "--" + n)));
  }
  return out;
}

DegreePolicy parse_policy(const std::string& s) {
  if (s == "strict") return DegreePolicy::strict;
  if (s == "formal") return DegreePolicy::formal;
  throw UsageError("unknown degree policy '" + s + "'");
}

std::vector<CaseTag> selected_tags(const std::string& name) {
  if (name == "all") return theorem1_tags();
  try {
    return {case_tag_from_string(name)};
  } catch (const Error&) {
    throw UsageError("unknown case '" + name + "'");
  }
}

MultiPoly read_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid JSON in '" + path + "': " + e.what());
  }
  return jio::decode_poly(j);
}

Outcome cmd_verify_theorem1(const Options& o) {
  Outcome out;
  const DegreePolicy policy = parse_policy(o.policy);
  const auto tags = selected_tags(o.case_name);
  json cases = json::array();
  for (std::size_t t = 0; t < tags.size(); ++t) {
    const CaseTag tag = tags[t];
    const auto given = case_params(o, parameter_names(tag));
    std::vector<CanonicalCase> samples;
    if (tags.size() == 1 && !given.empty()) {
      samples.emplace_back(tag, given);
    } else {
      for (std::size_t i = 0; i < o.samples; ++i) {
        Rng rng(derive_seed(o.seed, (static_cast<std::uint64_t>(tag) << 20) + i));
        samples.push_back(random_case(tag, rng));
      }
    }
    bool all = true;
    json members = json::array();
    for (const auto& c : samples) {
      const Report r = verify_theorem1_case(c, policy);
      out.report.merge(r, c.to_string() + ": ");
      all = all && r.passed();
      members.push_back(json{{"case", jio::encode(c)}, {"passed", r.passed()}});
    }
    cases.push_back(json{{"tag", to_string(tag)}, {"passed", all}, {"samples", members}});
  }
  out.data["cases"] = cases;
  return out;
}

Outcome cmd_check(const Options& o) {
  Outcome out;
  const MultiPoly f = read_poly(o.input);
  const auto cert = check_strong_separability(f, parse_policy(o.policy));
  out.report.add("strongly separable", cert.kind == SeparabilityKind::strong, "kind " + to_string(cert.kind));
  out.report.add("remultiplication", cert.remultiplication_exact());
  out.data["kind"] = to_string(cert.kind);
  out.data["P"] = cert.P ? json(cert.P->to_string()) : json(nullptr);
  out.data["certificate"] = jio::encode(cert);
  return out;
}

Outcome cmd_root_structure(const Options& o) {
  Outcome out;
  MultiPoly p;
  if (!o.input.empty()) {
    p = read_poly(o.input);
    if (p.ring().arity() != 1) throw UsageError("root-structure needs a univariate polynomial");
  } else {
    const auto tags = selected_tags(o.case_name);
    if (tags.size() != 1) throw UsageError("root-structure needs --input or a single --case");
    p = canonical_P(CanonicalCase(tags[0], case_params(o, parameter_names(tags[0]))));
  }
  const RootStructure rs = root_structure(p, o.degree);
  out.data = jio::encode(rs);
  out.data["P"] = p.to_string();
  out.data["projective_degree"] = o.degree;
  return out;
}

std::map<std::string, Rational> rational_params(const Options& o, const std::vector<std::string>& names) {
  std::map<std::string, Rational> out;
  for (const auto& n : names) {
    auto it = o.params.find(n);
    if (it != o.params.end()) out.emplace(n, parse_rational(it->second, "--" + n));
  }
  return out;
}

Outcome cmd_pencil(const Options& o) {
  Outcome out;
  PencilKind kind;
  try {
    kind = pencil_kind_from_string(o.kind);
  } catch (const Error&) {
    throw UsageError("pencil kind must be one of general, B, D, C22");
  }
  json models = json::array();
  auto record = [&](const PencilModel& m, const std::string& prefix, const json& params) {
    out.report.merge(m.report, prefix);
    json j = jio::encode(m);
    j["params"] = params;
    models.push_back(std::move(j));
  };

  if (kind == PencilKind::general) {
    if (o.symbolic) {
      record(tangential_pencil_equation(TangentialConic::symbolic()), "symbolic: ", json::object());
      out.report.merge(remark_identity_checks(PencilKind::general, {}), "identities: ");
    } else {
      const std::vector<std::string> names{"a0", "a1", "a2", "a3", "a4", "a5"};
      const auto given = rational_params(o, names);
      std::vector<std::array<Rational, 6>> conics;
      if (given.size() == 6) {
        std::array<Rational, 6> a;
        for (std::size_t i = 0; i < 6; ++i) a[i] = given.at(names[i]);
        conics.push_back(a);
      } else if (!given.empty()) {
        throw UsageError("a numeric general pencil needs all of --a0 .. --a5");
      } else {
        for (std::size_t i = 0; i < o.samples; ++i) {
          Rng rng(derive_seed(o.seed, i));
          std::array<Rational, 6> a;
          for (auto& v : a) v = rng.rational();
          conics.push_back(a);
        }
      }
      for (std::size_t i = 0; i < conics.size(); ++i) {
        json params = json::object();
        for (std::size_t j = 0; j < 6; ++j) params[names[j]] = conics[i][j].to_string();
        record(tangential_pencil_equation(TangentialConic::numeric(conics[i])), "[" + std::to_string(i) + "] ",
               params);
      }
    }
  } else {
    std::vector<std::string> names{"a"};
    if (kind == PencilKind::B) names.insert(names.end(), {"a0", "a1"});
    if (kind == PencilKind::D) names.insert(names.end(), {"a3", "a4"});
    if (kind == PencilKind::C22) names.insert(names.end(), {"a4", "a5"});
    const auto given = rational_params(o, names);
    std::vector<std::map<std::string, Rational>> points;
    if (given.size() == names.size()) {
      points.push_back(given);
    } else if (!given.empty()) {
      throw UsageError("pencil " + o.kind + " needs all or none of its parameters");
    } else {
      for (std::size_t i = 0; i < o.samples; ++i) {
        Rng rng(derive_seed(o.seed, i));
        points.push_back(random_degenerate_params(kind, rng));
      }
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
      json params = json::object();
      for (const auto& [k, v] : points[i]) params[k] = v.to_string();
      const std::string prefix = "[" + std::to_string(i) + "] ";
      record(degenerate_pencil(kind, points[i]), prefix, params);
      out.report.merge(remark_identity_checks(kind, points[i]), prefix + "identities: ");
    }
  }
  out.data["kind"] = to_string(kind);
  out.data["models"] = models;
  return out;
}

Outcome cmd_kowalevski(const Options& o) {
  Outcome out;
  const auto given = rational_params(o, {"l1", "l", "c", "k"});
  KowalevskiModel m = [&] {
    if (o.symbolic || given.empty()) return build_kowalevski_symbolic();
    if (given.size() != 4) throw UsageError("kowalevski needs all of --l1 --l --c --k, or --symbolic");
    return build_kowalevski(given.at("l1"), given.at("l"), given.at("c"), given.at("k"));
  }();
  out.report.merge(m.report);
  out.data = jio::encode(m);
  json params = json::object();
  for (const auto& [k, v] : given) params[k] = v.to_string();
  out.data["params"] = params;
  return out;
}

Outcome cmd_quad(const Options& o) {
  Outcome out;
  const auto tags = selected_tags(o.case_name);
  if (tags.size() != 1) throw UsageError("quad needs a single --case");
  const CanonicalCase c(tags[0], case_params(o, parameter_names(tags[0])));
  if (o.alpha.empty() || o.beta.empty()) throw UsageError("quad needs --alpha and --beta");
  const Rational alpha = parse_rational(o.alpha, "--alpha");
  const Rational beta = parse_rational(o.beta, "--beta");
  const EdgeSignConvention conv = [&] {
    try {
      return edge_sign_convention_from_string(o.convention);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();

  const MultiaffineQ q = quad_for_case(c, alpha, beta, conv);
  out.report.merge(q.report, "synthesis: ");
  const QuadClassification cls = classify_type_QH(q.Q);

  std::optional<Rational> gamma;
  if (!o.gamma.empty()) {
    gamma = parse_rational(o.gamma, "--gamma");
  } else {
    for (const auto& v : find_square_parameters(c, 13)) {
      if (v != alpha && v != beta) {
        gamma = v;
        break;
      }
    }
  }
  if (!gamma) throw UsageError("no third cube parameter found; pass --gamma");
  const ConsistencyReport cr = check_3d_consistency(c, alpha, beta, *gamma, o.trials, o.seed, conv, o.threads);
  out.report.add("3D consistency", cr.passed(),
                 std::to_string(cr.agreements) + "/" + std::to_string(cr.trials) + " agreements", cr.witnesses);

  out.data["case"] = jio::encode(c);
  out.data["quad"] = jio::encode(q);
  out.data["type"] = to_string(cls.type);
  out.data["edges_nondegenerate"] = cls.nondegenerate;
  out.data["edge_parameters"] = {{"x1x2", alpha.to_string()},
                                 {"x3x4", alpha.to_string()},
                                 {"x2x3", beta.to_string()},
                                 {"x1x4", beta.to_string()}};
  out.data["cube_parameters"] = {alpha.to_string(), beta.to_string(), gamma->to_string()};
  out.data["consistency"] = jio::encode(cr);
  return out;
}

Outcome cmd_system(const Options& o) {
  Outcome out;
  SeparabilitySystem sys = [&] {
    if (o.case_name == "all" || o.symbolic) return generate_separability_system_symbolic();
    const auto tags = selected_tags(o.case_name);
    const CanonicalCase c(tags[0], case_params(o, parameter_names(tags[0])));
    const MultiPoly p = canonical_P(c);
    std::array<FieldElement, 5> coeffs;
    for (unsigned d = 0; d <= 4; ++d) coeffs[d] = FieldElement::lift(p.coefficient(Exponents{4 - d}), c.ext());
    return generate_separability_system(coeffs);
  }();
  out.report.add("75 equations", sys.equations.size() == 75, std::to_string(sys.equations.size()));
  json eqs = json::array();
  for (std::size_t i = 0; i < sys.equations.size(); ++i) {
    eqs.push_back(json{{"label", sys.labels[i]}, {"equation", sys.equations[i].to_string()}});
  }
  out.data["unknowns"] = sys.unknowns.names();
  out.data["count"] = sys.equations.size();
  out.data["equations"] = eqs;
  return out;
}

Outcome cmd_system_check(const Options& o) {
  Outcome out;
  json cases = json::array();
  for (const CaseTag tag : selected_tags(o.case_name)) {
    bool all = true;
    for (std::size_t i = 0; i < o.samples; ++i) {
      Rng rng(derive_seed(o.seed, (static_cast<std::uint64_t>(tag) << 20) + i));
      const CanonicalCase c = random_case(tag, rng);
      const Report r = separability_system_check(c);
      all = all && r.passed();
      out.report.merge(r, c.to_string() + ": ");
    }
    cases.push_back(json{{"tag", to_string(tag)}, {"passed", all}});
  }
  out.data["cases"] = cases;
  return out;
}

void add_params(CLI::App* sub, Options& o, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    sub->add_option_function<std::string>("--" + n, [&o, n](const std::string& v) { o.params[n] = v; },
                                          "parameter " + n + " as p/q");
  }
}

}  // namespace

json report_schema() {
  const json check{{"type", "object"},
                   {"required", {"name", "passed", "detail", "witnesses"}},
                   {"properties",
                    {{"name", {{"type", "string"}}},
                     {"passed", {{"type", "boolean"}}},
                     {"detail", {{"type", "string"}}},
                     {"witnesses", {{"type", "array"}, {"items", {{"type", "string"}}}}}}}};
  const json diff{{"type", "object"},
                  {"required", {"name", "printed", "computed", "difference", "matches"}},
                  {"properties",
                   {{"name", {{"type", "string"}}},
                    {"printed", {{"type", "string"}}},
                    {"computed", {{"type", "string"}}},
                    {"difference", {{"type", "string"}}},
                    {"matches", {{"type", "boolean"}}}}}};
  const json consistency{{"type", "object"},
                         {"required", {"trials", "agreements", "singular_resamples", "type", "edges_nondegenerate",
                                       "seed"}},
                         {"properties",
                          {{"trials", {{"type", "integer"}, {"minimum", 0}}},
                           {"agreements", {{"type", "integer"}, {"minimum", 0}}},
                           {"failures", {{"type", "integer"}, {"minimum", 0}}},
                           {"singular_resamples", {{"type", "integer"}, {"minimum", 0}}},
                           {"type", {{"enum", {"Q", "H"}}}},
                           {"edges_nondegenerate", {{"type", "array"}, {"items", {{"type", "boolean"}}}}},
                           {"seed", {{"type", "integer"}, {"minimum", 0}}}}}};
  const json poly{{"type", "object"},
                  {"required", {"vars", "ext", "terms"}},
                  {"properties",
                   {{"vars", {{"type", "array"}, {"items", {{"type", "string"}}}}},
                    {"ext", {{"type", "array"}, {"items", {{"type", "integer"}}}, {"maxItems", 2}}},
                    {"terms",
                     {{"type", "array"},
                      {"items",
                       {{"type", "object"},
                        {"required", {"coeff", "exps"}},
                        {"properties",
                         {{"exps", {{"type", "array"}, {"items", {{"type", "integer"}, {"minimum", 0}}}}}}}}}}}}}};
  return json{
      {"$schema", "http://json-schema.org/draft-07/schema#"},
      {"title", "disep report"},
      {"type", "object"},
      {"required", {"command", "seed", "config", "passed", "checks", "printed_diffs", "data"}},
      {"properties",
       {{"command",
         {{"enum",
           {"verify-theorem1", "check", "root-structure", "pencil", "kowalevski", "quad", "system",
            "separability-system-check"}}}},
        {"seed", {{"type", "integer"}, {"minimum", 0}}},
        {"config", {{"type", "object"}}},
        {"passed", {{"type", "boolean"}}},
        {"checks", {{"type", "array"}, {"items", {{"$ref", "#/definitions/check"}}}}},
        {"printed_diffs", {{"type", "array"}, {"items", {{"$ref", "#/definitions/printed_diff"}}}}},
        {"data", {{"type", "object"}}}}},
      {"definitions", {{"check", check}, {"printed_diff", diff}, {"consistency", consistency}, {"poly", poly}}},
  };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of discriminantly separable polynomials, pencils of conics and quad-equations",
               "disep"};
  app.require_subcommand(1);
  std::optional<std::uint64_t> seed_flag;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed_flag, "random seed (default: $DISEP_SEED, else 1)");
    sub->add_option("--out", o.out, "write the report here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify-theorem1", "check every canonical family at random parameters");
  verify->add_option("--case", o.case_name, "family tag or 'all'");
  verify->add_option("--samples", o.samples, "random parameter points per family")->check(CLI::PositiveNumber);
  verify->add_option("--policy", o.policy, "degree policy: strict or formal");
  add_params(verify, o, {"k", "e", "lambda", "mu", "nu"});
  common(verify);

  auto* check = app.add_subcommand("check", "certify strong separability of a polynomial in x1, x2, x3");
  check->add_option("--input", o.input, "polynomial JSON file")->required();
  check->add_option("--policy", o.policy, "degree policy: strict or formal");
  common(check);

  auto* roots = app.add_subcommand("root-structure", "multiplicity partition of a binary quartic");
  roots->add_option("--input", o.input, "univariate polynomial JSON file");
  roots->add_option("--case", o.case_name, "use the canonical P of this family");
  roots->add_option("--degree", o.degree, "projective degree")->check(CLI::Range(1u, 64u));
  add_params(roots, o, {"k", "e", "lambda", "mu", "nu"});
  common(roots);

  auto* pencil = app.add_subcommand("pencil", "pencil of conics in Darboux coordinates");
  pencil->add_option("kind", o.kind, "general, B, D or C22")->required();
  pencil->add_flag("--symbolic", o.symbolic, "general pencil with symbolic a0..a5");
  pencil->add_option("--samples", o.samples, "random parameter points")->check(CLI::PositiveNumber);
  add_params(pencil, o, {"a", "a0", "a1", "a2", "a3", "a4", "a5"});
  common(pencil);

  auto* kow = app.add_subcommand("kowalevski", "fundamental Kowalevski equation");
  kow->add_flag("--symbolic", o.symbolic, "symbolic in l1, l, c, k");
  add_params(kow, o, {"l1", "l", "c", "k"});
  common(kow);

  auto* quad = app.add_subcommand("quad", "synthesize a quad-equation and test 3D consistency");
  quad->add_option("--case", o.case_name, "family tag")->required();
  quad->add_option("--alpha", o.alpha, "parameter on the x1x2 and x3x4 edges")->required();
  quad->add_option("--beta", o.beta, "parameter on the x2x3 and x1x4 edges")->required();
  quad->add_option("--gamma", o.gamma, "third cube parameter (default: a square parameter)");
  quad->add_option("--trials", o.trials, "consistency trials")->check(CLI::PositiveNumber);
  quad->add_option("--convention", o.convention, "edge signs: alternating or uniform");
  quad->add_option("--threads", o.threads, "worker threads for the trials")->check(CLI::Range(1u, 64u));
  add_params(quad, o, {"k", "e", "lambda", "mu", "nu"});
  common(quad);

  auto* system = app.add_subcommand("system", "emit the 75 separability equations");
  system->add_option("--case", o.case_name, "substitute the canonical P of this family");
  system->add_flag("--symbolic", o.symbolic, "keep the coefficients of P symbolic");
  add_params(system, o, {"k", "e", "lambda", "mu", "nu"});
  common(system);

  auto* syscheck = app.add_subcommand("separability-system-check", "75 residuals at each family's coefficients");
  syscheck->add_option("--case", o.case_name, "family tag or 'all'");
  syscheck->add_option("--samples", o.samples, "random parameter points per family")->check(CLI::PositiveNumber);
  common(syscheck);

  app.add_subcommand("schema", "print the report JSON schema");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "disep: " << e.what() << "\n" << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "schema") {
    out << report_schema().dump(2) << "\n";
    return 0;
  }

  if (seed_flag) {
    o.seed = *seed_flag;
  } else if (const char* env = std::getenv("DISEP_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "disep: DISEP_SEED is not an unsigned integer\n";
      return 2;
    }
  }

  json config = json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->get_name().empty() || opt->count() == 0 || opt->get_name() == "--help") continue;
    const std::string name = opt->get_name().substr(opt->get_name().rfind('-') + 1);
    if (name == "seed" || name == "out") continue;
    const auto results = opt->results();
    config[name] = opt->get_type_size() == 0 ? json(true) : json(results.back());
  }

  Outcome outcome;
  try {
    if (command == "verify-theorem1") outcome = cmd_verify_theorem1(o);
    if (command == "check") outcome = cmd_check(o);
    if (command == "root-structure") outcome = cmd_root_structure(o);
    if (command == "pencil") outcome = cmd_pencil(o);
    if (command == "kowalevski") outcome = cmd_kowalevski(o);
    if (command == "quad") outcome = cmd_quad(o);
    if (command == "system") outcome = cmd_system(o);
    if (command == "separability-system-check") outcome = cmd_system_check(o);
  } catch (const UsageError& e) {
    err << "disep: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "disep: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    err << "disep: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    outcome = Outcome{};
    outcome.report.add("run", false, e.what());
  }

  const json encoded = jio::encode(outcome.report);
  const json report{{"command", command},
                    {"seed", o.seed},
                    {"config", config},
                    {"passed", outcome.report.passed()},
                    {"checks", encoded["checks"]},
                    {"printed_diffs", encoded["printed_diffs"]},
                    {"data", outcome.data}};
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!file) {
      err << "disep: cannot write '" << o.out << "'\n";
      return 2;
    }
    file << text;
  }
  return outcome.report.passed() ? 0 : 1;
}

}  // namespace disep::cli
