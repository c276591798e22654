#include "starblock/report_json.hpp"

namespace starblock::report {
namespace {

json opt_natural(const std::optional<arith::Natural>& n) {
  return n ? json(arith::to_decimal(*n)) : json(nullptr);
}

std::optional<arith::Natural> natural_opt(const json& j) {
  if (j.is_null()) return std::nullopt;
  return arith::parse_natural(j.get<std::string>());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ReportError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<std::string> strings(const json& j) { return j.get<std::vector<std::string>>(); }

}  // namespace

json to_json(const classify::Verdict& v) {
  json just = json::array();
  for (const auto& s : v.justification) just.push_back({{"rule", s.rule_id}, {"anchor", s.anchor}});
  return {{"status", classify::status_name(v.status)},
          {"e", opt_natural(v.e)},
          {"m", opt_natural(v.m)},
          {"shape", classify::shape_name(v.shape)},
          {"justification", just},
          {"warnings", v.warnings}};
}

classify::Verdict verdict_from_json(const json& j) {
  try {
    classify::Verdict v;
    v.status = classify::parse_status(field(j, "status").get<std::string>());
    v.e = natural_opt(field(j, "e"));
    v.m = natural_opt(field(j, "m"));
    v.shape = classify::parse_shape(field(j, "shape").get<std::string>());
    for (const auto& s : field(j, "justification")) {
      v.justification.push_back({field(s, "rule").get<std::string>(), field(s, "anchor").get<std::string>()});
    }
    v.warnings = strings(field(j, "warnings"));
    return v;
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed verdict: ") + e.what());
  }
}

json to_json(const oracle::CrossCheckReport& r) {
  const auto& m = r.measured;
  json measured = {
      {"cyclic", oracle::tri_name(m.cyclic)},
      {"sylow_order", arith::to_decimal(m.sylow_order)},
      {"e", opt_natural(m.e)},
      {"m", opt_natural(m.m)},
      {"involution_classes", m.involution_classes ? json(std::to_string(*m.involution_classes)) : json(nullptr)},
      {"centralizer_P_order_parity",
       m.centralizer_P_odd ? json(*m.centralizer_P_odd ? "odd" : "even") : json(nullptr)},
  };
  return {{"group", catalog::to_string(r.group)},
          {"p", arith::to_decimal(r.p)},
          {"measured", measured},
          {"claimed", to_json(r.claimed)},
          {"agreements", r.agreements},
          {"disagreements", r.disagreements},
          {"undecided", r.undecided}};
}

oracle::CrossCheckReport crosscheck_from_json(const json& j) {
  try {
    oracle::CrossCheckReport r;
    r.group = catalog::parse_group(field(j, "group").get<std::string>());
    r.p = arith::parse_natural(field(j, "p").get<std::string>());
    const json& m = field(j, "measured");
    r.measured.cyclic = oracle::parse_tri(field(m, "cyclic").get<std::string>());
    r.measured.sylow_order = arith::parse_natural(field(m, "sylow_order").get<std::string>());
    r.measured.e = natural_opt(field(m, "e"));
    r.measured.m = natural_opt(field(m, "m"));
    if (const json& ic = field(m, "involution_classes"); !ic.is_null()) {
      r.measured.involution_classes = static_cast<unsigned>(std::stoul(ic.get<std::string>()));
    }
    if (const json& par = field(m, "centralizer_P_order_parity"); !par.is_null()) {
      const auto s = par.get<std::string>();
      if (s != "odd" && s != "even") throw ReportError("bad parity '" + s + "'");
      r.measured.centralizer_P_odd = s == "odd";
    }
    r.claimed = verdict_from_json(field(j, "claimed"));
    r.agreements = strings(field(j, "agreements"));
    r.disagreements = strings(field(j, "disagreements"));
    r.undecided = strings(field(j, "undecided"));
    return r;
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed crosscheck report: ") + e.what());
  }
}

json to_json(const classify::SweepRow& row) {
  return {{"group", catalog::to_string(row.group)}, {"p", arith::to_decimal(row.p)}, {"verdict", to_json(row.verdict)}};
}

classify::SweepRow sweep_row_from_json(const json& j) {
  try {
    return {catalog::parse_group(field(j, "group").get<std::string>()),
            arith::parse_natural(field(j, "p").get<std::string>()), verdict_from_json(field(j, "verdict"))};
  } catch (const json::exception& e) {
    throw ReportError(std::string("malformed sweep row: ") + e.what());
  }
}

}  // namespace starblock::report
