#include <cstdio>

#include "doctest.h"
#include "triorb/error.hpp"
#include "triorb/serialize.hpp"

using namespace triorb;

TEST_CASE("cocycle group files round-trip") {
  for (const auto& g : {extraspecial_q(FieldCtx::make(3, 2), 1), p_epsilon(), su3_sylow(2, 2),
                        central_quotient(heisenberg_q(FieldCtx::make(3, 2)), Subspace::from_gens(3, 2, {{1, 2}}))}) {
    const Json j = cocycle_group_json(g);
    CHECK(j["format"] == kCocycleFormat);
    const CocycleGroup back = cocycle_group_from_json(Json::parse(j.dump()));
    CHECK(back == g);
    CHECK(back.family().name == g.family().name);
    CHECK(std::holds_alternative<CocycleGroup>(group_from_json(j)));
  }
}

TEST_CASE("table group files round-trip with automorphisms") {
  const auto t = pq_frobenius(2, 3, 1);
  const Json j = table_group_json(t.group, t.auts);
  const TableGroup back = table_group_from_json(j);
  CHECK(back == t.group);
  CHECK(table_auts_from_json(j) == t.auts);
  CHECK(std::holds_alternative<TableGroup>(group_from_json(j)));
}

TEST_CASE("files on disk") {
  const std::string path = "serialize_test_group.json";
  write_json_file(path, cocycle_group_json(p_epsilon()));
  CHECK(cocycle_group_from_json(read_json_file(path)) == p_epsilon());
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_json_file("does/not/exist.json"), Error);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(group_from_json(Json{{"format", "other"}}), Error);
  CHECK_THROWS_AS(cocycle_group_from_json(Json{{"format", kCocycleFormat}, {"p", 3}}), Error);
  Json t = table_group_json(dihedral(3));
  t["table"].erase(0);
  CHECK_THROWS_AS(table_group_from_json(t), Error);
}

TEST_CASE("verdict records are deterministic") {
  const CocycleGroup g = suzuki_A(FieldCtx::make(2, 3), 1);
  const Json a = verdict_json(is_3orbit(g, Strategy::kExhibited));
  const Json b = verdict_json(is_3orbit(g, Strategy::kExhibited));
  CHECK(a.dump() == b.dump());
  CHECK(a["is3orbit"] == "true");
  CHECK(a["r"] == 3);
  CHECK(a["reports"][0]["method"] == "exhibited");
}
