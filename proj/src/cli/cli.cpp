#include "entwine/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>

#include "entwine/catalog.hpp"
#include "entwine/certificate.hpp"
#include "entwine/frobenius.hpp"
#include "entwine/galois.hpp"
#include "entwine/json_io.hpp"
#include "entwine/maschke.hpp"
#include "entwine/smash.hpp"

namespace entwine::cli {

namespace {

using io::json;
namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string output;
  std::string algebra;
  std::string coalgebra;
  std::string module;
  std::string target;
  std::string kind;
  std::string via = "integral";
  std::string split = "section";
  std::string name;
  bool all = false;
  std::uint64_t seed = 0;
  std::size_t trials = 32;
  std::optional<std::uint32_t> field;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    if (o.field) {
      try {
        ctx_.field = Field::of_characteristic(*o.field);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
  }

  int validate();
  int build(const std::string& what);
  int galois();
  int smash();
  int integrals();
  int frobenius();
  int map(MapKind kind);
  int split();
  int recheck();
  int catalog_list();
  int catalog_emit();

 private:
  json load(const std::string& path, const char* flag) {
    if (path.empty()) throw UsageError(std::string("missing ") + flag);
    json j = io::read_file(path);
    inputs_.push_back(j);
    ctx_.base_dir = fs::path(path).parent_path();
    return j;
  }

  Entwining input_entwining() {
    const json j = load(o_.input, "--input");
    Entwining e = io::entwining_from_json(j, ctx_);
    require_valid(validate_entwining(e), "entwining");
    return e;
  }

  static void require_valid(const ValidationReport& r, const std::string& what) {
    if (!r.ok()) throw InvalidStructure(what + " fails validation", r);
  }

  json report(const std::string& command, const std::string& verdict, bool seeded = false) const {
    json in{{"files", inputs_}};
    if (ctx_.field) in["field"] = ctx_.field->characteristic();
    return json{{"command", command},
                {"version", version},
                {"seed", seeded ? json(o_.seed) : json(nullptr)},
                {"inputs_digest", io::digest(in)},
                {"verdict", verdict}};
  }

  void emit(const json& j) const { write(io::dump(j)); }

  void write(const std::string& text) const {
    if (o_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.output);
    if (!f) throw io::ParseError("cannot write " + o_.output);
    f << text;
  }

  const Options& o_;
  std::ostream& out_;
  io::ParseContext ctx_;
  std::vector<json> inputs_;
};

int Runner::validate() {
  const json j = load(o_.input, "--input");
  const std::string kind = io::kind_of(j);
  ValidationReport r;
  if (kind == "algebra") r = validate_algebra(io::algebra_from_json(j, ctx_));
  else if (kind == "coalgebra") r = validate_coalgebra(io::coalgebra_from_json(j, ctx_));
  else if (kind == "bialgebra") r = validate_bialgebra(io::bialgebra_from_json(j, ctx_));
  else if (kind == "entwining") r = validate_entwining(io::entwining_from_json(j, ctx_));
  else if (kind == "doi-hopf") r = validate_doi_hopf(io::doi_hopf_from_json(j, ctx_));
  else if (kind == "comodule-algebra") r = validate_comodule_structure(io::comodule_algebra_from_json(j, ctx_));
  else if (kind == "entwined-module") {
    const EntwinedModule m = io::entwined_module_from_json(j, ctx_);
    r.append(validate_entwining(m.entwining), "entwining: ");
    r.append(validate_entwined_module(m));
  } else throw io::ParseError("cannot validate kind \"" + kind + "\"");
  json rep = report("validate", r.ok() ? "valid" : "invalid");
  rep["kind"] = kind;
  rep["failures"] = io::to_json(r);
  emit(rep);
  return r.ok() ? 0 : 1;
}

int Runner::build(const std::string& what) {
  if (what == "flip") {
    const FiniteAlgebra a = io::algebra_from_json(load(o_.algebra, "--algebra"), ctx_);
    const FiniteCoalgebra c = io::coalgebra_from_json(load(o_.coalgebra, "--coalgebra"), ctx_);
    require_valid(validate_algebra(a), "algebra");
    require_valid(validate_coalgebra(c), "coalgebra");
    if (a.field != c.field) throw io::ParseError("algebra and coalgebra fields differ");
    emit(io::to_json(build_flip(a, c)));
    return 0;
  }
  if (what == "doi-hopf") {
    const DoiHopfDatum d = io::doi_hopf_from_json(load(o_.input, "--input"), ctx_);
    emit(io::to_json(build_doi_hopf(d)));
    return 0;
  }
  const ComoduleAlgebra ca = io::comodule_algebra_from_json(load(o_.input, "--input"), ctx_);
  const GaloisResult r = canonical_entwining(ca);
  if (!r.galois) {
    json rep = report("build galois", "not galois");
    rep["rank_defect"] = r.rank_defect;
    emit(rep);
    return 0;
  }
  emit(io::to_json(r.entwining));
  return 0;
}

int Runner::galois() {
  const ComoduleAlgebra ca = io::comodule_algebra_from_json(load(o_.input, "--input"), ctx_);
  const GaloisResult r = canonical_entwining(ca);
  json rep = report("galois", r.galois ? "galois" : "not galois");
  rep["b_dim"] = r.data.b_basis.size();
  rep["quotient_dim"] = r.data.quotient.dim;
  rep["rank_defect"] = r.rank_defect;
  if (r.galois) {
    rep["checks"] = io::to_json(r.checks);
    rep["certificate"] = cert::galois(ca, r);
  }
  emit(rep);
  return 0;
}

int Runner::smash() {
  const Entwining e = input_entwining();
  const SmashAlgebra x = build_smash(e);
  ValidationReport checks;
  checks.append(check_psi_bar(e, x.psi_bar), "psi-bar: ");
  checks.append(validate_algebra(x.algebra), "smash algebra: ");
  checks.append(check_smash_embeddings(e, x), "embeddings: ");
  json rep = report("smash", checks.ok() ? "associative" : "failed");
  rep["dim"] = x.algebra.dim;
  rep["checks"] = io::to_json(checks);
  rep["certificate"] = cert::smash(e, x);
  emit(rep);
  return 0;
}

int Runner::integrals() {
  const Entwining e = input_entwining();
  json rep;
  if (o_.kind == "smash") {
    const std::vector<Mat> basis = smash_integrals(e);
    rep = report("integrals", "dimension " + std::to_string(basis.size()));
    rep["certificate"] = cert::smash_integrals(e, basis);
  } else {
    const std::vector<Vec> basis = entwining_integrals(e);
    rep = report("integrals", "dimension " + std::to_string(basis.size()));
    rep["certificate"] = cert::entwining_integrals(e, basis);
  }
  rep["kind"] = o_.kind;
  emit(rep);
  return 0;
}

int Runner::frobenius() {
  const Entwining e = input_entwining();
  FrobeniusOutcome out;
  if (o_.via == "integral") out = frobenius_search(e, o_.seed, o_.trials);
  else if (o_.via == "element") out = frobenius_element_search(e, o_.seed, o_.trials);
  else out = frobenius_form_search(e, o_.seed, o_.trials);
  json rep = report("frobenius",
                    out.found ? "frobenius"
                              : "no certificate found after " + std::to_string(out.candidates_tried) + " candidates",
                    true);
  rep["via"] = o_.via;
  rep["trials"] = o_.trials;
  rep["space_dim"] = out.space_dim;
  rep["candidates_tried"] = out.candidates_tried;
  if (out.found) rep["certificate"] = cert::frobenius(e, out);
  else rep["rank_defect"] = out.rank_defect;
  emit(rep);
  return 0;
}

int Runner::map(MapKind kind) {
  const Entwining e = input_entwining();
  const MapSolution sol = kind == MapKind::integral ? find_integral_map(e) : find_cointegral_map(e);
  const std::string command = map_kind_name(kind) + "-map";
  json rep = report(command, sol.exists ? "found" : "none exists");
  rep["homogeneous_dim"] = sol.homogeneous_dim;
  if (sol.exists) {
    rep["verification"] = io::to_json(sol.verification);
    rep["certificate"] = cert::map(e, kind, sol);
  } else {
    rep["failure"] = sol.failure;
  }
  emit(rep);
  return 0;
}

int Runner::split() {
  const MapKind via = o_.kind == "integral" ? MapKind::integral : MapKind::cointegral;
  const SplitKind kind = o_.split == "section" ? SplitKind::section : SplitKind::retraction;
  const EntwinedModule m = io::entwined_module_from_json(load(o_.module, "--module"), ctx_);
  const EntwinedModule other =
      o_.target.empty() ? m : io::entwined_module_from_json(load(o_.target, "--target"), ctx_);
  if (!o_.input.empty()) {
    const Entwining e = io::entwining_from_json(load(o_.input, "--input"), ctx_);
    if (!(e.map == m.entwining.map) || !(e.algebra.product == m.entwining.algebra.product) ||
        !(e.coalgebra.coproduct == m.entwining.coalgebra.coproduct))
      throw io::ParseError("--module is not over the entwining given by --input");
  }
  if (!(other.entwining.map == m.entwining.map)) throw io::ParseError("--module and --target use different entwinings");
  require_valid(validate_entwining(m.entwining), "entwining");
  require_valid(validate_entwined_module(m), "module");
  require_valid(validate_entwined_module(other), "target module");

  const MapSolution sol = via == MapKind::integral ? find_integral_map(m.entwining) : find_cointegral_map(m.entwining);
  if (!sol.exists) {
    json rep = report("split", "no " + map_kind_name(via) + " map", true);
    rep["failure"] = sol.failure;
    emit(rep);
    return 0;
  }
  const SplitProblem pr = make_split_problem(m, other, kind, via, o_.seed);
  const SplitCertificate c = entwine::split(pr, via, sol.map);
  json rep = report("split", c.ok() ? "split" : "failed", true);
  rep["preconditions"] = io::to_json(c.preconditions);
  rep["checks"] = io::to_json(c.checks);
  rep["g_tilde_equals_g"] = c.g_tilde == c.g;
  rep["certificate"] = cert::split(pr, c);
  emit(rep);
  return 0;
}

int Runner::recheck() {
  const json j = load(o_.input, "--input");
  const cert::Recheck r = cert::recheck(j, ctx_);
  json rep = report("recheck", r.accepted ? "accepted" : "rejected");
  rep["type"] = r.type;
  rep["failures"] = io::to_json(r.failures);
  emit(rep);
  return 0;
}

int Runner::catalog_list() {
  const catalog::Catalog c = catalog::load(ctx_.field.value_or(Field::rationals()));
  std::string text;
  for (const catalog::Entry& e : catalog::entries(c)) {
    text += e.name + "\t" + e.kind;
    if (!e.note.empty()) text += "\t" + e.note;
    text += "\n";
  }
  write(text);
  return 0;
}

int Runner::catalog_emit() {
  if (o_.all == !o_.name.empty()) throw UsageError("catalog emit takes either NAME or --all");
  const catalog::Catalog c = catalog::load(ctx_.field.value_or(Field::rationals()));
  const fs::path dir = o_.output.empty() ? fs::path(".") : fs::path(o_.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::size_t written = 0;
  for (const catalog::Entry& e : catalog::entries(c)) {
    if (!o_.all && e.name != o_.name) continue;
    std::ofstream f(dir / e.file_name());
    if (!f) throw io::ParseError("cannot write " + (dir / e.file_name()).string());
    f << io::dump(e.data);
    out_ << (dir / e.file_name()).string() << "\n";
    ++written;
  }
  if (written == 0) throw UsageError("unknown catalog entry \"" + o_.name + "\"");
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with finite-dimensional entwining structures", "entwine"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("entwine ") + version);
  Options o;
  app.add_option("--field", o.field, "Reinterpret all inputs over GF(p), or 0 for the rationals")->check(CLI::NonNegativeNumber);

  const auto input = [&](CLI::App* s, bool required = true) {
    auto* opt = s->add_option("--input,-i", o.input, "Input JSON file");
    if (required) opt->required();
  };
  const auto output = [&](CLI::App* s) { s->add_option("--output,-o", o.output, "Write the report here instead of stdout"); };
  const auto seeded = [&](CLI::App* s) { s->add_option("--seed", o.seed, "Seed for randomized choices"); };

  auto* validate = app.add_subcommand("validate", "Check every axiom of a structure");
  input(validate);
  output(validate);

  auto* build = app.add_subcommand("build", "Construct an entwining");
  build->require_subcommand(1);
  auto* flip = build->add_subcommand("flip", "Flip entwining of an algebra and a coalgebra");
  flip->add_option("--algebra", o.algebra)->required();
  flip->add_option("--coalgebra", o.coalgebra)->required();
  output(flip);
  auto* doi = build->add_subcommand("doi-hopf", "Entwining of a Doi-Hopf datum");
  input(doi);
  output(doi);
  auto* bgal = build->add_subcommand("galois", "Canonical entwining of a coalgebra-Galois extension");
  input(bgal);
  output(bgal);

  auto* galois = app.add_subcommand("galois", "Decide whether A is coalgebra-Galois over its coinvariants");
  input(galois);
  output(galois);

  auto* smash = app.add_subcommand("smash", "Build and check the smash product algebra");
  input(smash);
  output(smash);

  auto* integrals = app.add_subcommand("integrals", "Basis of the integral space");
  input(integrals);
  output(integrals);
  integrals->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"smash", "entwining"}));

  auto* frob = app.add_subcommand("frobenius", "Search for a Frobenius certificate");
  input(frob);
  output(frob);
  seeded(frob);
  frob->add_option("--via", o.via)->check(CLI::IsMember({"integral", "element", "form"}));
  frob->add_option("--trials", o.trials, "Random combinations tried after the basis");

  auto* imap = app.add_subcommand("integral-map", "Find a normalised integral map");
  input(imap);
  output(imap);
  auto* cmap = app.add_subcommand("cointegral-map", "Find a normalised cointegral map");
  input(cmap);
  output(cmap);

  auto* split = app.add_subcommand("split", "Lift a module-level splitting to an entwined-module splitting");
  split->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"integral", "cointegral"}));
  split->add_option("--module", o.module, "Entwined module M split off from M ⊕ N")->required();
  split->add_option("--target", o.target, "Complement N (defaults to M)");
  split->add_option("--split", o.split)->check(CLI::IsMember({"section", "retraction"}));
  input(split, false);
  output(split);
  seeded(split);

  auto* recheck = app.add_subcommand("recheck", "Re-verify a certificate with the diagram evaluators");
  input(recheck);
  output(recheck);

  auto* cat = app.add_subcommand("catalog", "Built-in examples");
  cat->require_subcommand(1);
  auto* list = cat->add_subcommand("list", "List entries");
  auto* emit = cat->add_subcommand("emit", "Write entries as JSON files");
  emit->add_option("name", o.name, "Entry name");
  emit->add_flag("--all", o.all, "Emit every entry");
  emit->add_option("--output,-o", o.output, "Directory to write into (default .)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << "entwine " << version << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "entwine: " << e.what() << "\n";
    return 2;
  }

  try {
    Runner r(o, out);
    if (*validate) return r.validate();
    if (*build) return r.build(*flip ? "flip" : *doi ? "doi-hopf" : "galois");
    if (*galois) return r.galois();
    if (*smash) return r.smash();
    if (*integrals) return r.integrals();
    if (*frob) return r.frobenius();
    if (*imap) return r.map(MapKind::integral);
    if (*cmap) return r.map(MapKind::cointegral);
    if (*split) return r.split();
    if (*recheck) return r.recheck();
    if (*list) return r.catalog_list();
    if (*emit) return r.catalog_emit();
  } catch (const InvalidStructure& e) {
    err << "entwine: " << e.what() << "\n";
    for (const Failure& f : e.report().failures) {
      err << "  " << f.axiom << " at (";
      for (std::size_t i = 0; i < f.tuple.size(); ++i) err << (i ? "," : "") << f.tuple[i];
      err << ")\n";
    }
    return 1;
  } catch (const UsageError& e) {
    err << "entwine: " << e.what() << "\n";
    return 2;
  } catch (const io::ParseError& e) {
    err << "entwine: " << e.what() << "\n";
    return 2;
  } catch (const io::json::exception& e) {
    err << "entwine: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "entwine: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace entwine::cli
