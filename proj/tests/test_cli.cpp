// Runs the built CLI binary and checks exit codes and outputs.
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

int run(const std::string& args, const std::string& out = "") {
  std::string cmd = std::string(TRIORB_CLI) + " " + args;
  cmd += out.empty() ? " > /dev/null 2>&1" : " > " + out + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse(const std::string& path) { return nlohmann::json::parse(slurp(path)); }

}  // namespace

TEST_CASE("construct") {
  CHECK(run("construct extraspecial_q --q 9 --m 1 --out cli_x9.json") == 0);
  const auto x9 = parse("cli_x9.json");
  CHECK(x9["p"] == 3);
  CHECK(x9["n"] == 4);
  CHECK(x9["m"] == 2);
  CHECK(run("construct p_epsilon --out cli_pe.json") == 0);
  CHECK(parse("cli_pe.json")["order"] == 512);
  CHECK(run("construct heisenberg_q --q 9 --out cli_h9.json") == 0);
  CHECK(run("construct central_quotient --parent cli_h9.json --u \"1,0\" --out cli_cq.json") == 0);
  CHECK(parse("cli_cq.json")["order"] == 243);
  CHECK(run("construct extraspecial_q --q 12") == 2);
  CHECK(run("construct nothing") == 2);
  CHECK(run("construct") == 2);
}

TEST_CASE("check3 exit codes") {
  CHECK(run("construct extraspecial_q --q 3 --m 1 --out cli_e3.json") == 0);
  CHECK(run("check3 --group cli_e3.json") == 0);
  CHECK(run("construct dihedral --k 4 --out cli_d4.json") == 0);
  CHECK(run("check3 --group cli_d4.json --strategy oracle") == 3);
  CHECK(run("construct extraspecial_q --q 9 --m 1 --out cli_x9.json") == 0);
  CHECK(run("check3 --group cli_x9.json --strategy oracle", "cli_big.json") == 4);
  CHECK(parse("cli_big.json")["result"]["reason"].get<std::string>().rfind("TooLarge", 0) == 0);
  CHECK(run("check3 --group missing.json") == 2);
  CHECK(run("check3 --group cli_e3.json --strategy nope") == 2);
}

TEST_CASE("seed changes search order only") {
  CHECK(run("construct p_epsilon --out cli_pe.json") == 0);
  CHECK(run("check3 --group cli_pe.json --strategy search --seed 0", "cli_s0.json") == 0);
  CHECK(run("check3 --group cli_pe.json --strategy search --seed 9", "cli_s9.json") == 0);
  CHECK(parse("cli_s0.json")["result"]["is3orbit"] == parse("cli_s9.json")["result"]["is3orbit"]);
  CHECK(run("check3 --group cli_pe.json --strategy search --seed 0", "cli_s0b.json") == 0);
  CHECK(slurp("cli_s0.json") == slurp("cli_s0b.json"));
}

TEST_CASE("scan") {
  CHECK(run("scan --q 81 --dim 2 --modulus 2,0,0,2,1 --jobs 1", "cli_scan1.json") == 0);
  CHECK(run("scan --q 81 --dim 2 --modulus 2,0,0,2,1 --jobs 3", "cli_scan3.json") == 0);
  CHECK(slurp("cli_scan1.json") == slurp("cli_scan3.json"));
  const auto census = parse("cli_scan1.json")["result"];
  CHECK(census["total"] == 130);
  // U1 = <1 + t^2, 2t + t^2 + 2t^3> in reduced echelon form.
  const nlohmann::json u1 = {{1, 0, 1, 0}, {0, 1, 2, 1}};
  bool found = false;
  for (const auto& w : census["witnesses"]) found |= w == u1;
  CHECK(found);
  CHECK(run("scan --q 81 --dim 3", "cli_scan_d3.json") == 0);
  CHECK(parse("cli_scan_d3.json")["result"]["cells"]["both"] == 40);
  CHECK(run("scan --q 9 --dim 1", "cli_scan9.json") == 0);
  CHECK(parse("cli_scan9.json")["result"]["witnesses"].empty());
  CHECK(run("scan --q 12 --dim 1") == 2);
  CHECK(run("scan --q 81 --dim 2 --format csv", "cli_scan.csv") == 0);
  CHECK(slurp("cli_scan.csv").rfind("q,dim,total", 0) == 0);
}

TEST_CASE("rank, orbits, standardize, lambda2") {
  CHECK(run("construct pq_frobenius --p 2 --q 3 --out cli_a4.json") == 0);
  CHECK(run("rank --group cli_a4.json", "cli_rank.json") == 0);
  CHECK(parse("cli_rank.json")["result"]["rank"] == 3);
  CHECK(run("construct heisenberg_q --q 9 --out cli_h9.json") == 0);
  CHECK(run("orbits --group cli_h9.json", "cli_orb.json") == 0);
  CHECK(parse("cli_orb.json")["result"]["elements"]["count"] == 3);
  CHECK(run("construct central_quotient --parent cli_h9.json --u \"0,1\" --out cli_cq.json") == 0);
  CHECK(run("standardize --group cli_cq.json", "cli_std.json") == 0);
  CHECK(parse("cli_std.json")["result"]["isomorphic_to"] == "3^{1+4}_+");
  CHECK(run("lambda2 --p 3 --n 4", "cli_l2.json") == 0);
  CHECK(parse("cli_l2.json")["result"]["multiplicity_free"] == true);
}
