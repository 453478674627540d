#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "entwine/catalog.hpp"
#include "entwine/certificate.hpp"
#include "entwine/cli.hpp"
#include "entwine/json_io.hpp"
#include "support.hpp"

using namespace entwine;
using io::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

// One scratch directory per process holding the emitted catalog.
struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("entwine-cli-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir / "cat");
    fs::create_directories(dir / "out");
    const Result r = run({"catalog", "emit", "--all", "-o", (dir / "cat").string()});
    REQUIRE(r.code == 0);
  }
  ~Scratch() { fs::remove_all(dir); }
  fs::path cat(const std::string& file) const { return dir / "cat" / file; }
  fs::path out(const std::string& file) const { return dir / "out" / file; }
};

const Scratch& scratch() {
  static Scratch s;
  return s;
}

json reparse(const json& j, const io::ParseContext& ctx) {
  const std::string kind = io::kind_of(j);
  if (kind == "algebra") return io::to_json(io::algebra_from_json(j, ctx));
  if (kind == "coalgebra") return io::to_json(io::coalgebra_from_json(j, ctx));
  if (kind == "bialgebra") return io::to_json(io::bialgebra_from_json(j, ctx));
  if (kind == "entwining") return io::to_json(io::entwining_from_json(j, ctx));
  if (kind == "comodule-algebra") return io::to_json(io::comodule_algebra_from_json(j, ctx));
  if (kind == "doi-hopf") return io::to_json(io::doi_hopf_from_json(j, ctx));
  if (kind == "entwined-module") return io::to_json(io::entwined_module_from_json(j, ctx));
  FAIL("unexpected kind " << kind);
  return {};
}

}  // namespace

TEST_CASE("catalog files round trip byte for byte") {
  const catalog::Catalog c = catalog::load(Field::rationals());
  const auto entries = catalog::entries(c);
  CHECK(entries.size() >= 60);
  for (const catalog::Entry& e : entries) {
    CAPTURE(e.name);
    const fs::path p = scratch().cat(e.file_name());
    REQUIRE(fs::exists(p));
    const std::string text = slurp(p);
    CHECK(text == io::dump(e.data));
    io::ParseContext ctx;
    ctx.base_dir = p.parent_path();
    CHECK(io::dump(reparse(io::read_file(p), ctx)) == text);
  }
}

TEST_CASE("catalog list names every (name, kind) once") {
  const Result r = run({"catalog", "list"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::set<std::pair<std::string, std::string>> keys;
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    const std::size_t a = line.find('\t'), b = line.find('\t', a + 1);
    keys.emplace(line.substr(0, a), line.substr(a + 1, b - a - 1));
  }
  CHECK(lines == keys.size());
  CHECK(lines == catalog::entries(catalog::load(Field::rationals())).size());
  CHECK(keys.count({"z2-hopf", "entwining"}));
  CHECK(keys.count({"sweedler-h4", "doi-hopf"}));
}

TEST_CASE("reports are deterministic and carry the common fields") {
  const std::string ent = scratch().cat("z2-hopf.entwining.json").string();
  const std::vector<std::vector<std::string>> commands = {
      {"validate", "-i", ent},
      {"galois", "-i", scratch().cat("z2-hopf.comodule-algebra.json").string()},
      {"smash", "-i", ent},
      {"integrals", "-i", ent, "--kind", "smash"},
      {"integrals", "-i", ent, "--kind", "entwining"},
      {"frobenius", "-i", ent, "--via", "integral"},
      {"frobenius", "-i", ent, "--via", "element", "--seed", "3"},
      {"frobenius", "-i", ent, "--via", "form", "--seed", "3"},
      {"integral-map", "-i", ent},
      {"cointegral-map", "-i", ent},
      {"split", "--kind", "integral", "--module", scratch().cat("z2-hopf.induced-regular-c.entwined-module.json").string(),
       "--seed", "9"},
  };
  for (const auto& args : commands) {
    CAPTURE(args[0]);
    const Result a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const json j = json::parse(a.out);
    CHECK(j.at("command") == args[0]);
    CHECK(j.at("version") == cli::version);
    CHECK(j.at("inputs_digest").get<std::string>().size() == 16);
    CHECK(j.contains("verdict"));
    CHECK(io::dump(j) == a.out);
  }
}

TEST_CASE("the seed changes only seeded reports") {
  const std::string mod = scratch().cat("z2-hopf.induced-regular-c.entwined-module.json").string();
  const Result a = run({"split", "--kind", "integral", "--module", mod, "--seed", "1"});
  const Result b = run({"split", "--kind", "integral", "--module", mod, "--seed", "2"});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(json::parse(a.out).at("seed") == 1);
  CHECK(json::parse(a.out).at("inputs_digest") == json::parse(b.out).at("inputs_digest"));
  const Result v = run({"validate", "-i", mod});
  CHECK(json::parse(v.out).at("seed").is_null());
}

TEST_CASE("exit codes") {
  const std::string ent = scratch().cat("z2-hopf.entwining.json").string();
  CHECK(run({"validate", "-i", ent}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"validate"}).code == 2);
  CHECK(run({"validate", "-i", scratch().out("missing.json").string()}).code == 2);
  CHECK(run({"catalog", "emit", "no-such-entry", "-o", scratch().out("").string()}).code == 2);
  CHECK(run({"--field", "4", "validate", "-i", ent}).code == 2);
  CHECK(run({"integrals", "-i", ent, "--kind", "neither"}).code == 2);
  CHECK(run({"--version"}).code == 0);

  // Negative verdicts still exit 0.
  const Result none = run({"--field", "2", "cointegral-map", "-i", scratch().cat("z2-flip-k.entwining.json").string()});
  CHECK(none.code == 0);
  CHECK(json::parse(none.out).at("verdict") == "none exists");

  // Broken associativity exits 1 and names the axiom.
  json alg = io::read_file(scratch().cat("kz2.algebra.json"));
  alg["mult"][0][3] = "5";
  const fs::path bad = scratch().out("bad.algebra.json");
  spit(bad, io::dump(alg));
  const Result r = run({"validate", "-i", bad.string()});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out).at("failures").size() > 0);
  CHECK(run({"smash", "-i", bad.string()}).code == 2);
}

TEST_CASE("malformed inputs are parse errors") {
  const json good = io::read_file(scratch().cat("kz2.algebra.json"));
  const auto rejects = [](const json& j) {
    CHECK_THROWS_AS(io::algebra_from_json(j, {}), io::ParseError);
  };
  json j = good;
  j["mult"].push_back(j["mult"][0]);
  rejects(j);  // duplicate entry
  j = good;
  j["mult"][0][0] = 7;
  rejects(j);  // index out of range
  j = good;
  j["unit"] = json::array({"1"});
  rejects(j);  // wrong length
  j = good;
  j["mult"][0][3] = "1/0";
  rejects(j);
  j = good;
  j["field"] = {{"char", 6}};
  rejects(j);
  j = good;
  j["kind"] = "coalgebra";
  CHECK_THROWS(io::algebra_from_json(j, {}));
  CHECK_THROWS_AS(io::kind_of(json::object()), io::ParseError);

  const fs::path p = scratch().out("truncated.json");
  spit(p, "{\"kind\": \"algebra\", ");
  CHECK(run({"validate", "-i", p.string()}).code == 2);
}

TEST_CASE("field reinterpretation reduces every scalar") {
  const fs::path p = scratch().cat("qxq-galois.comodule-algebra.json");
  io::ParseContext ctx;
  ctx.field = Field::of_characteristic(3);
  const ComoduleAlgebra ca = io::comodule_algebra_from_json(io::read_file(p), ctx);
  CHECK(ca.algebra.field == Field::of_characteristic(3));
  // ½ becomes 2 in GF(3).
  bool saw_two = false;
  for (const Scalar& s : ca.map.entries()) saw_two |= s == Scalar(ca.algebra.field, 2L);
  CHECK(saw_two);
  ctx.field = Field::of_characteristic(2);
  CHECK_THROWS(io::comodule_algebra_from_json(io::read_file(p), ctx));
}

TEST_CASE("every emitted certificate is accepted by recheck") {
  std::size_t checked = 0;
  for (const fs::directory_entry& d : fs::directory_iterator(scratch().dir / "cat")) {
    const std::string file = d.path().filename().string();
    if (file.find(".entwining.json") == std::string::npos) continue;
    const std::string stem = file.substr(0, file.find('.'));
    CAPTURE(file);
    std::vector<std::vector<std::string>> commands = {
        {"smash", "-i", d.path().string()},
        {"integrals", "-i", d.path().string(), "--kind", "smash"},
        {"integrals", "-i", d.path().string(), "--kind", "entwining"},
        {"frobenius", "-i", d.path().string(), "--via", "integral"},
        {"frobenius", "-i", d.path().string(), "--via", "element"},
        {"frobenius", "-i", d.path().string(), "--via", "form"},
        {"integral-map", "-i", d.path().string()},
        {"cointegral-map", "-i", d.path().string()},
    };
    for (const char* m : {"regular-a", "regular-c"}) {
      const fs::path mod = scratch().cat(stem + ".induced-" + m + ".entwined-module.json");
      for (const char* kind : {"integral", "cointegral"})
        for (const char* how : {"section", "retraction"})
          commands.push_back({"split", "--kind", kind, "--module", mod.string(), "--split", how, "--seed", "5"});
    }
    for (const auto& args : commands) {
      CAPTURE(args[0]);
      const Result r = run(args);
      REQUIRE(r.code == 0);
      const json report = json::parse(r.out);
      if (!report.contains("certificate")) continue;
      const fs::path saved = scratch().out("report.json");
      spit(saved, r.out);
      const Result back = run({"recheck", "-i", saved.string()});
      REQUIRE(back.code == 0);
      CHECK(json::parse(back.out).at("verdict") == "accepted");
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("recheck rejects corrupted certificates") {
  const std::string ent = scratch().cat("sweedler-h4.entwining.json").string();
  Result r = run({"frobenius", "-i", ent, "--via", "form"});
  REQUIRE(r.code == 0);
  json report = json::parse(r.out);
  REQUIRE(report.contains("certificate"));
  json& cert = report["certificate"];
  REQUIRE(cert.contains("form"));
  // Replace the first nonzero entry of the form.
  bool changed = false;
  for (auto& row : cert["form"]) {
    for (auto& x : row)
      if (x != "0") {
        x = x == "1" ? "2" : "1";
        changed = true;
        break;
      }
    if (changed) break;
  }
  REQUIRE(changed);
  const fs::path bad = scratch().out("corrupt.json");
  spit(bad, io::dump(report));
  const Result back = run({"recheck", "-i", bad.string()});
  CHECK(back.code == 0);
  const json verdict = json::parse(back.out);
  CHECK(verdict.at("verdict") == "rejected");
  CHECK(verdict.at("failures").size() > 0);

  json bare = io::read_file(scratch().cat("kz2.algebra.json"));
  const fs::path nothing = scratch().out("nothing.json");
  spit(nothing, io::dump(bare));
  CHECK(run({"recheck", "-i", nothing.string()}).code == 2);
}

TEST_CASE("build outputs match the catalog") {
  const Result doi = run({"build", "doi-hopf", "-i", scratch().cat("z3-hopf.doi-hopf.json").string()});
  REQUIRE(doi.code == 0);
  CHECK(doi.out == slurp(scratch().cat("z3-hopf.entwining.json")));
  const Result gal = run({"build", "galois", "-i", scratch().cat("qxq-galois.comodule-algebra.json").string()});
  REQUIRE(gal.code == 0);
  CHECK(gal.out == slurp(scratch().cat("qxq-galois.entwining.json")));
  const Result flip = run({"build", "flip", "--algebra", scratch().cat("kz2.algebra.json").string(), "--coalgebra",
                           scratch().cat("grouplike2.coalgebra.json").string()});
  REQUIRE(flip.code == 0);
  CHECK(flip.out == slurp(scratch().cat("groupdim2-flip.entwining.json")));
}

TEST_CASE("output option writes the same report") {
  const std::string ent = scratch().cat("z2-hopf.entwining.json").string();
  const fs::path p = scratch().out("smash.json");
  const Result a = run({"smash", "-i", ent});
  const Result b = run({"smash", "-i", ent, "-o", p.string()});
  REQUIRE(b.code == 0);
  CHECK(slurp(p) == a.out);
}
