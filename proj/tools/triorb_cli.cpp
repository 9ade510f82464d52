// triorb: command-line front end. Exit codes: 0 true/ok, 2 usage or invalid
// parameters, 3 false, 4 unknown, 5 internal error.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "triorb/acceptance.hpp"
#include "triorb/autos.hpp"
#include "triorb/exterior.hpp"
#include "triorb/gammal.hpp"
#include "triorb/groups.hpp"
#include "triorb/serialize.hpp"

#ifndef TRIORB_VERSION
#define TRIORB_VERSION "0.0.0"
#endif

namespace {

using namespace triorb;

constexpr int kExitTrue = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFalse = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitInternal = 5;

int exit_for(Tri t) { return t == Tri::kTrue ? kExitTrue : t == Tri::kFalse ? kExitFalse : kExitUnknown; }

struct Options {
  std::string out;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  // construct
  std::string family;
  Residue p = 0;
  std::uint64_t q = 0;
  unsigned n = 0;
  unsigned m = 1;
  unsigned e = 1;
  unsigned k = 4;
  std::string modulus;
  std::string w;
  std::string u;
  std::string parent;
  // other commands
  std::string group;
  std::string strategy = "exhibited";
  std::size_t dim = 1;
  std::string format = "json";
  std::vector<int> only;
};

// "1,0,2;0,1,1" -> rows. Whitespace is ignored; an empty string gives no rows.
std::vector<VecFp> parse_rows(const std::string& text) {
  std::vector<VecFp> rows;
  std::stringstream all(text);
  std::string row;
  while (std::getline(all, row, ';')) {
    VecFp v;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
      if (cell.empty()) continue;
      try {
        v.push_back(static_cast<Residue>(std::stoul(cell)));
      } catch (const std::exception&) {
        fail(ErrorCode::kParseError, "bad matrix entry '" + cell + "'");
      }
    }
    if (!v.empty()) rows.push_back(std::move(v));
  }
  return rows;
}

std::pair<Residue, unsigned> split_prime_power(std::uint64_t q) {
  if (q < 2) fail(ErrorCode::kInvalidArgument, "q must be a prime power");
  const auto factors = prime_factors(q);
  if (factors.size() != 1) fail(ErrorCode::kInvalidArgument, std::to_string(q) + " is not a prime power");
  unsigned n = 0;
  for (std::uint64_t x = q; x > 1; x /= factors[0]) ++n;
  return {static_cast<Residue>(factors[0]), n};
}

FieldPtr field_for(const Options& o) {
  const auto [p, n] = split_prime_power(o.q);
  if (o.modulus.empty()) return FieldCtx::make(p, n);
  const auto rows = parse_rows(o.modulus);
  if (rows.size() != 1) fail(ErrorCode::kParseError, "--modulus takes one comma-separated coefficient list");
  return FieldCtx::make(p, n, PolyFp(rows[0]));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FNV-1a, for recording which input a report came from.
std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Loaded {
  AnyGroup group;
  std::string digest;
};

Loaded load_group(const std::string& path) {
  if (path.empty()) fail(ErrorCode::kInvalidArgument, "--group is required");
  const std::string bytes = read_file(path);
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, "'" + path + "' is not valid JSON: " + e.what());
  }
  return {group_from_json(j), digest(bytes)};
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) fail(ErrorCode::kInvalidArgument, "cannot write '" + o.out + "'");
  f << text;
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

Json run_report(const std::string& command, Json parameters, const std::string& input_digest, Json result) {
  Json j{{"command", command}, {"parameters", std::move(parameters)}, {"version", TRIORB_VERSION}};
  j["input_digest"] = input_digest.empty() ? Json(nullptr) : Json(input_digest);
  j["result"] = std::move(result);
  return j;
}

// ---------------------------------------------------------------- commands

int cmd_construct(const Options& o) {
  Json file;
  Json summary;
  const std::string& fam = o.family;
  if (fam == "homocyclic" || fam == "pq_frobenius" || fam == "dihedral") {
    TableWithAuts t;
    if (fam == "homocyclic") {
      t = homocyclic(o.p, o.n);
    } else if (fam == "pq_frobenius") {
      if (o.q > 0xffff) fail(ErrorCode::kInvalidArgument, "q is out of range");
      t = pq_frobenius(o.p, static_cast<Residue>(o.q), o.n == 0 ? 1 : o.n);
    } else {
      t.group = dihedral(o.k);
    }
    file = table_group_json(t.group, t.auts);
    summary = Json{{"family", fam}, {"order", t.group.order()}, {"automorphisms", t.auts.size()}};
  } else {
    CocycleGroup g;
    if (fam == "suzuki_A") {
      g = suzuki_A(field_for(o), o.e);
    } else if (fam == "su3_sylow") {
      const auto [p, n] = split_prime_power(o.q);
      g = su3_sylow(p, n);
    } else if (fam == "heisenberg_q") {
      g = heisenberg_q(field_for(o));
    } else if (fam == "extraspecial_q") {
      g = extraspecial_q(field_for(o), o.m);
    } else if (fam == "p_epsilon") {
      g = p_epsilon();
    } else if (fam == "presented_3_10") {
      g = presented_3_10();
    } else if (fam == "heisenberg_quotient") {
      const std::size_t ext_dim = static_cast<std::size_t>(o.n) * (o.n - 1) / 2;
      g = heisenberg_quotient(o.n, o.p, Subspace::from_gens(o.p, ext_dim, parse_rows(o.w)));
    } else if (fam == "central_quotient") {
      if (o.parent.empty()) fail(ErrorCode::kInvalidArgument, "central_quotient needs --parent");
      const CocycleGroup parent = cocycle_group_from_json(read_json_file(o.parent));
      g = central_quotient(parent, Subspace::from_gens(parent.p(), parent.m(), parse_rows(o.u)));
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown family '" + fam + "'");
    }
    file = cocycle_group_json(g);
    summary = Json{{"family", family_json(g.family())},
                   {"p", g.p()},
                   {"n", g.n()},
                   {"m", g.m()},
                   {"order", g.order()},
                   {"center_order", g.center_order()}};
  }
  if (o.out.empty()) {
    emit_json(o, file);
  } else {
    write_json_file(o.out, file);
    std::cout << summary.dump() << "\n";
  }
  return kExitTrue;
}

int cmd_check3(const Options& o) {
  const Loaded in = load_group(o.group);
  VerdictOptions vo;
  vo.search.seed = o.seed;
  const Strategy strategy = strategy_from_name(o.strategy);
  Verdict v;
  if (const auto* t = std::get_if<TableGroup>(&in.group)) {
    // Table files carry no V/M structure; only the oracle applies.
    v = is_3orbit_table(*t, vo.oracle);
  } else {
    v = is_3orbit(std::get<CocycleGroup>(in.group), strategy, vo);
  }
  emit_json(o, run_report("check3", Json{{"strategy", o.strategy}, {"seed", o.seed}}, in.digest, verdict_json(v)));
  return exit_for(v.is3);
}

std::string census_csv(const Census& c) {
  std::ostringstream os;
  os << "q,dim,total,hyperplane,admissible,both,neither\n"
     << c.q << "," << c.dim << "," << c.total << "," << c.hyperplane << "," << c.admissible << "," << c.both << ","
     << c.neither << "\n\nwitness_index,basis\n";
  for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
    os << c.witness_ids[i] << ",\"";
    const auto rows = c.witnesses[i].rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r) os << ";";
      for (std::size_t x = 0; x < rows[r].size(); ++x) os << (x ? "," : "") << rows[r][x];
    }
    os << "\"\n";
  }
  return os.str();
}

int cmd_scan(const Options& o) {
  if (o.format != "json" && o.format != "csv") fail(ErrorCode::kInvalidArgument, "--format must be json or csv");
  const FieldPtr f = field_for(o);
  const Census c = admissible_scan(*f, o.dim, o.jobs);
  if (o.format == "csv") {
    emit(o, census_csv(c));
  } else {
    // --jobs is left out so that the report does not depend on it.
    emit_json(o, run_report("scan", Json{{"q", o.q}, {"dim", o.dim}, {"modulus", f->modulus()}}, "", census_json(c)));
  }
  return kExitTrue;
}

int cmd_orbits(const Options& o) {
  const Loaded in = load_group(o.group);
  Json result;
  if (const auto* t = std::get_if<TableGroup>(&in.group)) {
    result = Json{{"elements", orbit_report_json(generic_aut_orbits(*t).report)}};
  } else {
    const CocycleGroup& g = std::get<CocycleGroup>(in.group);
    VerdictOptions vo;
    vo.search.seed = o.seed;
    const Verdict v = is_3orbit(g, Strategy::kExhibitedThenSearch, vo);
    Json reports = Json::array();
    for (const auto& r : v.reports) reports.push_back(orbit_report_json(r));
    result = Json{{"reports", reports}};
    result["r"] = v.r ? Json(*v.r) : Json(nullptr);
    if (g.order() <= kElementCap && !v.witnesses.empty()) {
      result["elements"] = orbit_report_json(orbit_partition_elements(g, v.witnesses, true));
    }
  }
  emit_json(o, run_report("orbits", Json{{"seed", o.seed}}, in.digest, result));
  return kExitTrue;
}

int cmd_rank(const Options& o) {
  const Loaded in = load_group(o.group);
  const TableGroup t =
      std::holds_alternative<TableGroup>(in.group) ? std::get<TableGroup>(in.group) : to_table(std::get<CocycleGroup>(in.group));
  const OracleResult res = generic_aut_orbits(t);
  const std::uint64_t rank = holomorph_rank(t, res.automorphisms);
  emit_json(o, run_report("rank", Json::object(), in.digest, Json{{"rank", rank}, {"aut_order", res.aut_order}}));
  return kExitTrue;
}

int cmd_standardize(const Options& o) {
  const Loaded in = load_group(o.group);
  const auto* g = std::get_if<CocycleGroup>(&in.group);
  if (!g) fail(ErrorCode::kInvalidArgument, "standardize needs a cocycle group file");
  const StandardForm sf = symplectic_standardize(*g);
  const std::size_t half = sf.canonical.n() / 2;
  const std::string name = std::to_string(g->p()) + "^{1+" + std::to_string(2 * half) + "}_+";
  Json result{{"certified", sf.certified},
              {"isomorphic_to", sf.certified ? Json(name) : Json(nullptr)},
              {"transform", matrix_json(sf.transform)},
              {"canonical", cocycle_group_json(sf.canonical)}};
  emit_json(o, run_report("standardize", Json::object(), in.digest, result));
  if (sf.certified) std::cerr << "isomorphic to " << name << "\n";
  return sf.certified ? kExitTrue : kExitUnknown;
}

int cmd_lambda2(const Options& o) {
  const bool ok = singer_multiplicity_free_check(*FieldCtx::make(o.p, o.n));
  emit_json(o, run_report("lambda2", Json{{"p", o.p}, {"n", o.n}}, "", Json{{"multiplicity_free", ok}}));
  return ok ? kExitTrue : kExitFalse;
}

int cmd_selftest(const Options& o) {
  AcceptanceOptions ao;
  ao.jobs = o.jobs;
  ao.only = o.only;
  const auto results = run_acceptance(ao);
  for (const auto& r : results) std::cout << format_result(r) << "\n";
  return acceptance_exit_code(results) == 0 ? kExitTrue : kExitFalse;
}

void print_error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 3-orbit groups: constructions, verdicts and scans"};
  app.set_version_flag("--version", TRIORB_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "Write the result here instead of stdout");
  app.add_option("--seed", o.seed, "Search order seed (never changes verdicts)");

  auto* construct = app.add_subcommand("construct", "Build a group file");
  construct->add_option("family", o.family, "homocyclic, pq_frobenius, dihedral, suzuki_A, su3_sylow, heisenberg_q, "
                                            "extraspecial_q, p_epsilon, presented_3_10, heisenberg_quotient, "
                                            "central_quotient")
      ->required();
  construct->add_option("--p", o.p, "Prime");
  construct->add_option("--q", o.q, "Field order (prime power); the second prime for pq_frobenius");
  construct->add_option("--n", o.n, "Rank or degree");
  construct->add_option("--m", o.m, "Extraspecial rank");
  construct->add_option("--e", o.e, "Suzuki twist theta = x^(p^e)");
  construct->add_option("--k", o.k, "Dihedral group of order 2k");
  construct->add_option("--modulus", o.modulus, "Field modulus coefficients, low degree first");
  construct->add_option("--w", o.w, "Rows spanning W in the exterior square, e.g. \"1,0,0;0,1,0\"");
  construct->add_option("--parent", o.parent, "Parent group file for central_quotient");
  construct->add_option("--u", o.u, "Rows spanning U in the center");

  auto* check3 = app.add_subcommand("check3", "Decide the 3-orbit property");
  check3->add_option("--group", o.group)->required();
  check3->add_option("--strategy", o.strategy)->check(CLI::IsMember({"exhibited", "search", "oracle"}));

  auto* scan = app.add_subcommand("scan", "Census of subspaces of F_q");
  scan->add_option("--q", o.q)->required();
  scan->add_option("--dim", o.dim)->required();
  scan->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  scan->add_option("--modulus", o.modulus, "Field modulus coefficients, low degree first");
  scan->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* orbits = app.add_subcommand("orbits", "Automorphism orbit reports");
  orbits->add_option("--group", o.group)->required();
  auto* rank = app.add_subcommand("rank", "Rank of the holomorph");
  rank->add_option("--group", o.group)->required();
  auto* standardize = app.add_subcommand("standardize", "Symplectic normal form (odd p, cyclic center)");
  standardize->add_option("--group", o.group)->required();
  auto* lambda2 = app.add_subcommand("lambda2", "Singer cycle on the exterior square");
  lambda2->add_option("--p", o.p)->required();
  lambda2->add_option("--n", o.n)->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  selftest->add_option("--only", o.only, "Criterion ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(o);
    if (*check3) return cmd_check3(o);
    if (*scan) return cmd_scan(o);
    if (*orbits) return cmd_orbits(o);
    if (*rank) return cmd_rank(o);
    if (*standardize) return cmd_standardize(o);
    if (*lambda2) return cmd_lambda2(o);
    if (*selftest) return cmd_selftest(o);
  } catch (const Error& e) {
    print_error(std::string(error_code_name(e.code())), e.what());
    switch (e.code()) {
      case ErrorCode::kInternal:
        return kExitInternal;
      case ErrorCode::kTooLarge:
      case ErrorCode::kBudgetExhausted:
      case ErrorCode::kUnknownFamily:
        return kExitUnknown;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    print_error("Internal", e.what());
    return kExitInternal;
  }
  return kExitUsage;
}
