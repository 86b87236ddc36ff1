// Command-line front door: verification sweeps, table emission, JSON export.
//
// Commands (two-word and hyphenated spellings are equivalent):
//   nichols table    --p P --op concat|shuffle
//   nichols verify   --p P [--grade-bound N]
//   ydmod   dims     --p P --range N
//   cft     verify   --p P
//   cft     octuplet --p P
//   cft     singvec  --p P --m M --n N [--max L]
//
// Every command supports --format text|json|csv and --out PATH (relative
// paths resolve against $W3OCT_OUT_DIR when it is set). Exit status is 0
// iff every check in the run passes.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "w3oct/json_io.hpp"
#include "w3oct/octuplet.hpp"
#include "w3oct/screening.hpp"
#include "w3oct/verify.hpp"

using namespace w3oct;
using nlohmann::json;

namespace {

std::string csvQuote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

json checksToJson(const std::vector<Check>& cs) {
  json arr = json::array();
  for (const auto& c : cs) arr.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return arr;
}

std::string checksToCsv(const std::vector<Check>& cs) {
  std::string out = "name,pass,detail\n";
  for (const auto& c : cs)
    out += csvQuote(c.name) + "," + (c.pass ? "true" : "false") + "," + csvQuote(c.detail) + "\n";
  return out;
}

// Writes to --out (under $W3OCT_OUT_DIR when relative) or to stdout.
void emit(const std::string& outPath, const std::string& payload) {
  if (outPath.empty()) {
    std::cout << payload;
    return;
  }
  std::string path = outPath;
  const char* dir = std::getenv("W3OCT_OUT_DIR");
  if (dir && *dir && path.front() != '/') path = std::string(dir) + "/" + path;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << payload;
}

struct Common {
  int p = 2;
  std::string format = "text";
  std::string out;
};

void addCommon(CLI::App* cmd, Common& c) {
  cmd->add_option("-p,--p", c.p, "root-of-unity order parameter (>= 2)")
      ->required()
      ->check(CLI::Range(2, 1000));
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "output file (default: stdout)");
}

int emitChecks(const Common& c, const std::string& command, const std::vector<Check>& checks) {
  bool pass = allPass(checks);
  std::string payload;
  if (c.format == "json") {
    json j{{"schema", "v1"}, {"command", command}, {"p", c.p}, {"pass", pass},
           {"checks", checksToJson(checks)}};
    payload = j.dump(2) + "\n";
  } else if (c.format == "csv") {
    payload = checksToCsv(checks);
  } else {
    payload = formatChecks(checks);
    payload += pass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n";
  }
  emit(c.out, payload);
  return pass ? 0 : 1;
}

int runNicholsTable(const Common& c, const std::string& op) {
  auto mul = op == "shuffle" ? &multiplyShuffle : &multiplyConcat;
  std::vector<PbwIndex> basis;
  for (int r = 0; r < c.p; ++r)
    for (int t = 0; t < c.p; ++t)
      for (int s = 0; s < c.p; ++s) basis.push_back(PbwIndex{r, t, s});

  std::string payload;
  if (c.format == "json") {
    json entries = json::array();
    for (const auto& a : basis)
      for (const auto& b : basis) {
        NicholsElem prod = mul(NicholsElem::basis(c.p, a), NicholsElem::basis(c.p, b));
        entries.push_back(json{{"a", {a.r, a.t, a.s}},
                               {"b", {b.r, b.t, b.s}},
                               {"product", nicholsElemToJson(prod)}});
      }
    json j{{"schema", "v1"}, {"command", "nichols-table"}, {"p", c.p}, {"op", op},
           {"entries", entries}};
    payload = j.dump(2) + "\n";
  } else if (c.format == "csv") {
    payload = "a,b,product\n";
    for (const auto& a : basis)
      for (const auto& b : basis) {
        NicholsElem prod = mul(NicholsElem::basis(c.p, a), NicholsElem::basis(c.p, b));
        payload += csvQuote(pbwStr(a)) + "," + csvQuote(pbwStr(b)) + "," +
                   csvQuote(prod.str()) + "\n";
      }
  } else {
    std::ostringstream os;
    os << "product table (" << op << "), p = " << c.p << "\n";
    for (const auto& a : basis)
      for (const auto& b : basis) {
        NicholsElem prod = mul(NicholsElem::basis(c.p, a), NicholsElem::basis(c.p, b));
        os << pbwStr(a) << " * " << pbwStr(b) << " = " << prod.str() << "\n";
      }
    payload = os.str();
  }
  emit(c.out, payload);
  return 0;
}

int runYdmodDims(const Common& c, int range) {
  std::vector<YdDimRow> table = ydmodDimsTable(c.p, range);
  bool pass = true;
  for (const auto& row : table)
    if (row.computed != row.formula) pass = false;

  std::string payload;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& row : table)
      rows.push_back(json{{"n1", row.n1}, {"n2", row.n2}, {"computed", row.computed},
                          {"formula", row.formula}});
    json j{{"schema", "v1"}, {"command", "ydmod-dims"}, {"p", c.p}, {"range", range},
           {"pass", pass}, {"rows", rows}};
    payload = j.dump(2) + "\n";
  } else if (c.format == "csv") {
    payload = "n1,n2,computed,formula\n";
    for (const auto& row : table)
      payload += std::to_string(row.n1) + "," + std::to_string(row.n2) + "," +
                 std::to_string(row.computed) + "," + std::to_string(row.formula) + "\n";
  } else {
    std::ostringstream os;
    os << "one-vertex module dimensions, p = " << c.p << "\n";
    os << "n1\tn2\tcomputed\tformula\n";
    for (const auto& row : table)
      os << row.n1 << '\t' << row.n2 << '\t' << row.computed << '\t' << row.formula << '\n';
    os << (pass ? "computed column equals formula column\n" : "COLUMN MISMATCH\n");
    payload = os.str();
  }
  emit(c.out, payload);
  return pass ? 0 : 1;
}

int runCftOctuplet(const Common& c) {
  OctupletResult res = octupletChain(c.p);
  bool pass = allPass(res.checks);

  std::string payload;
  if (c.format == "json") {
    json fields;
    for (const auto& [name, f] : res.fields) fields[name] = fieldExprToJson(f);
    json j{{"schema", "v1"},
           {"command", "cft-octuplet"},
           {"p", c.p},
           {"pass", pass},
           {"closureRatio", ratToJson(res.closureRatio)},
           {"fields", fields},
           {"checks", checksToJson(res.checks)}};
    payload = j.dump(2) + "\n";
  } else if (c.format == "csv") {
    payload = checksToCsv(res.checks);
  } else {
    std::ostringstream os;
    for (const auto& [name, f] : res.fields)
      os << name << ": " << f.terms().size() << " terms\n";
    os << "endpoint closure ratio: " << ratStr(res.closureRatio) << "\n";
    os << formatChecks(res.checks);
    os << (pass ? "all checks passed\n" : "CHECK FAILURES PRESENT\n");
    payload = os.str();
  }
  emit(c.out, payload);
  return pass ? 0 : 1;
}

int runCftSingvec(const Common& c, long m, long n, long maxLevel) {
  if (maxLevel <= 0) maxLevel = 2L * c.p + 2;
  std::vector<SingularVector> svs = singularVectorLevels(c.p, HwParams{m, n}, maxLevel);

  std::string payload;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& sv : svs)
      rows.push_back(json{{"level", sv.level},
                          {"params", {ratToJson(sv.params.m), ratToJson(sv.params.n)}},
                          {"canonical", {ratToJson(sv.canonical.m), ratToJson(sv.canonical.n)}}});
    json j{{"schema", "v1"}, {"command", "cft-singvec"}, {"p", c.p},
           {"m", m}, {"n", n}, {"maxLevel", maxLevel}, {"singularVectors", rows}};
    payload = j.dump(2) + "\n";
  } else if (c.format == "csv") {
    payload = "level,param_m,param_n,canonical_m,canonical_n\n";
    for (const auto& sv : svs)
      payload += std::to_string(sv.level) + "," + ratStr(sv.params.m) + "," +
                 ratStr(sv.params.n) + "," + ratStr(sv.canonical.m) + "," +
                 ratStr(sv.canonical.n) + "\n";
  } else {
    std::ostringstream os;
    os << "singular vectors for parameters (" << m << "," << n << "), p = " << c.p
       << ", levels <= " << maxLevel << "\n";
    for (const auto& sv : svs)
      os << "level " << sv.level << ": params (" << ratStr(sv.params.m) << ","
         << ratStr(sv.params.n) << "), orbit representative (" << ratStr(sv.canonical.m)
         << "," << ratStr(sv.canonical.n) << ")\n";
    payload = os.str();
  }
  emit(c.out, payload);
  return 0;
}

// The spec'd single-word spellings are aliases for the two-word commands.
std::vector<std::string> splitAliases(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (i == 1) {
      for (const char* alias : {"nichols-table", "nichols-verify", "ydmod-dims",
                                "cft-verify", "cft-octuplet", "cft-singvec"}) {
        if (a == alias) {
          std::string s(alias);
          auto dash = s.find('-');
          args.push_back(s.substr(0, dash));
          a = s.substr(dash + 1);
          break;
        }
      }
    }
    args.push_back(a);
  }
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer-algebra engine: rank-2 diagonal Nichols algebra, "
               "one-vertex modules, and the two-boson screening kernel"};
  app.require_subcommand(1);

  // nichols
  CLI::App* nichols = app.add_subcommand("nichols", "finite quantum-group half commands");
  nichols->require_subcommand(1);
  Common ntC;
  std::string op = "concat";
  CLI::App* ntable = nichols->add_subcommand("table", "emit the full basis product table");
  addCommon(ntable, ntC);
  ntable->add_option("--op", op, "product normalization")
      ->check(CLI::IsMember({"concat", "shuffle"}))
      ->capture_default_str();
  Common nvC;
  int gradeBound = 8;
  CLI::App* nverify = nichols->add_subcommand("verify", "run product/Hopf/ideal check sweep");
  addCommon(nverify, nvC);
  nverify->add_option("--grade-bound", gradeBound, "oracle sweep grade bound")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();

  // ydmod
  CLI::App* ydmod = app.add_subcommand("ydmod", "one-vertex module commands");
  ydmod->require_subcommand(1);
  Common ydC;
  int range = 0;
  CLI::App* ydims = ydmod->add_subcommand("dims", "emit the dimension table");
  addCommon(ydims, ydC);
  ydims->add_option("--range", range, "label grid bound (default 2p)");

  // cft
  CLI::App* cft = app.add_subcommand("cft", "free-boson screening-kernel commands");
  cft->require_subcommand(1);
  Common cvC;
  CLI::App* cverify = cft->add_subcommand("verify", "run current/kernel/dimension check sweep");
  addCommon(cverify, cvC);
  Common coC;
  CLI::App* coct = cft->add_subcommand("octuplet", "build and export the octuplet chain");
  addCommon(coct, coC);
  Common csC;
  long svM = 0, svN = 0, svMax = 0;
  CLI::App* csing = cft->add_subcommand("singvec", "enumerate singular-vector levels");
  addCommon(csing, csC);
  csing->add_option("--m", svM, "first highest-weight parameter")->required();
  csing->add_option("--n", svN, "second highest-weight parameter")->required();
  csing->add_option("--max", svMax, "level bound (default 2p+2)");

  std::vector<std::string> args = splitAliases(argc, argv);
  try {
    // CLI11 parses reversed vectors in place.
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (ntable->parsed()) return runNicholsTable(ntC, op);
    if (nverify->parsed()) return emitChecks(nvC, "nichols-verify", verifyNichols(nvC.p, gradeBound));
    if (ydims->parsed()) return runYdmodDims(ydC, range > 0 ? range : 2 * ydC.p);
    if (cverify->parsed()) return emitChecks(cvC, "cft-verify", verifyCft(cvC.p));
    if (coct->parsed()) return runCftOctuplet(coC);
    if (csing->parsed()) return runCftSingvec(csC, svM, svN, svMax);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
