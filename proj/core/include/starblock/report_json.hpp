#pragma once

#include <nlohmann/json.hpp>

#include "starblock/classifier.hpp"
#include "starblock/oracle.hpp"

// JSON payloads for verdicts, crosscheck reports and sweep rows. Every number
// is a decimal string; groups are written in catalog notation.
namespace starblock::report {

using nlohmann::json;

class ReportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const classify::Verdict& v);
classify::Verdict verdict_from_json(const json& j);

json to_json(const oracle::CrossCheckReport& r);
oracle::CrossCheckReport crosscheck_from_json(const json& j);

json to_json(const classify::SweepRow& row);
classify::SweepRow sweep_row_from_json(const json& j);

}  // namespace starblock::report
