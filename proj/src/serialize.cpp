#include "triorb/serialize.hpp"

#include <fstream>
#include <sstream>

namespace triorb {

Json cocycle_group_json(const CocycleGroup& group) {
  Json beta = Json::array();
  for (std::size_t i = 0; i < group.n(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < group.n(); ++j) row.push_back(group.beta(i, j));
    beta.push_back(row);
  }
  return Json{{"format", kCocycleFormat},
              {"p", group.p()},
              {"n", group.n()},
              {"m", group.m()},
              {"order", group.order()},
              {"center_order", group.center_order()},
              {"family", family_json(group.family())},
              {"beta", beta}};
}

CocycleGroup cocycle_group_from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != kCocycleFormat) fail(ErrorCode::kParseError, "not a cocycle group file");
    const auto p = j.at("p").get<Residue>();
    const auto n = j.at("n").get<std::size_t>();
    const auto m = j.at("m").get<std::size_t>();
    CocycleGroup::BetaTable beta;
    for (const auto& row : j.at("beta")) {
      std::vector<VecFp> r;
      for (const auto& v : row) r.push_back(v.get<VecFp>());
      beta.push_back(std::move(r));
    }
    FamilyInfo fam = j.contains("family") ? family_from_json(j.at("family")) : FamilyInfo{"custom", Json::object()};
    return CocycleGroup(p, n, m, std::move(beta), std::move(fam));
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, std::string("bad cocycle group file: ") + e.what());
  }
}

Json table_group_json(const TableGroup& group, const std::vector<Perm>& auts) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < group.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < group.order(); ++b) {
      row.push_back(group.mul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)));
    }
    rows.push_back(row);
  }
  Json j{{"format", kTableFormat}, {"name", group.name()}, {"order", group.order()}, {"identity", group.identity()},
         {"table", rows}};
  if (!group.labels().empty()) j["labels"] = group.labels();
  if (!auts.empty()) j["automorphisms"] = auts;
  return j;
}

TableGroup table_group_from_json(const Json& j) {
  try {
    if (j.at("format").get<std::string>() != kTableFormat) fail(ErrorCode::kParseError, "not a table group file");
    const auto order = j.at("order").get<std::size_t>();
    if (order > kTableCap) fail(ErrorCode::kTooLarge, "table files are capped at order 4096");
    std::vector<std::uint32_t> table;
    table.reserve(order * order);
    const Json& rows = j.at("table");
    if (rows.size() != order) fail(ErrorCode::kParseError, "table has the wrong number of rows");
    for (const auto& row : rows) {
      if (row.size() != order) fail(ErrorCode::kParseError, "table row has the wrong length");
      for (const auto& x : row) table.push_back(x.get<std::uint32_t>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return TableGroup(order, std::move(table), j.value("identity", 0u), j.value("name", std::string()),
                      std::move(labels));
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, std::string("bad table group file: ") + e.what());
  }
}

std::vector<Perm> table_auts_from_json(const Json& j) {
  if (!j.contains("automorphisms")) return {};
  try {
    return j.at("automorphisms").get<std::vector<Perm>>();
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, std::string("bad automorphism list: ") + e.what());
  }
}

AnyGroup group_from_json(const Json& j) {
  const std::string format = j.value("format", std::string());
  if (format == kCocycleFormat) return cocycle_group_from_json(j);
  if (format == kTableFormat) return table_group_from_json(j);
  fail(ErrorCode::kParseError, "unknown group file format '" + format + "'");
}

Json matrix_json(const MatFp& m) {
  Json rows = Json::array();
  for (const auto& r : m.row_list()) rows.push_back(r);
  return rows;
}

Json pair_json(const AutoPair& pair) { return Json{{"g", matrix_json(pair.g)}, {"h", matrix_json(pair.h)}}; }

Json orbit_report_json(const OrbitReport& r) {
  return Json{{"action", r.action},
              {"count", r.count},
              {"sizes", r.sizes},
              {"representatives", r.representatives},
              {"method", r.method}};
}

Json verdict_json(const Verdict& v) {
  Json reports = Json::array();
  for (const auto& r : v.reports) reports.push_back(orbit_report_json(r));
  Json witnesses = Json::array();
  for (const auto& w : v.witnesses) witnesses.push_back(pair_json(w));
  Json j{{"is3orbit", tri_name(v.is3)}, {"strategy", strategy_name(v.strategy)}, {"reason", v.reason}};
  j["r"] = v.r ? Json(*v.r) : Json(nullptr);
  j["reports"] = reports;
  j["witnesses"] = witnesses;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kParseError, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParseError, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace triorb
