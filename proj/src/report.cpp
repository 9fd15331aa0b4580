#include "doubleseq/report.hpp"

#include <sstream>

namespace doubleseq {

std::string to_string(Status s) {
  switch (s) {
    case Status::verified:
      return "verified";
    case Status::violated:
      return "violated";
    case Status::undetermined:
      return "undetermined";
    case Status::definitely_divergent:
      return "definitely-divergent";
  }
  return "undetermined";
}

namespace {

Json value_field(const std::vector<double>& v) {
  if (v.size() == 1) return Json(v[0]);
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

}  // namespace

Json counterexample_to_json(const CounterexamplePair& ce) {
  Json j = Json::array();
  j.push_back(ce.a.k);
  j.push_back(ce.a.l);
  j.push_back(ce.b.k);
  j.push_back(ce.b.l);
  Json values = Json::array();
  values.push_back(value_field(ce.value_a));
  values.push_back(value_field(ce.value_b));
  j.push_back(values);
  return j;
}

Json ConvergenceReport::to_json() const {
  Json j;
  j["status"] = to_string(status);
  j["limit"] = limit ? Json(*limit) : Json(nullptr);
  j["epsilon"] = epsilon;
  j["threshold"] = threshold;
  j["horizon"] = horizon;
  j["counterexample"] =
      counterexample ? counterexample_to_json(*counterexample) : Json(nullptr);
  return j;
}

std::string ConvergenceReport::to_csv() const {
  std::ostringstream out;
  out << "field,value\n";
  out << "status," << to_string(status) << "\n";
  out << "limit,";
  if (limit) out << Json(*limit).dump();
  out << "\n";
  out << "epsilon," << Json(epsilon).dump() << "\n";
  out << "threshold," << threshold << "\n";
  out << "horizon," << horizon << "\n";
  if (counterexample) {
    out << "counterexample," << counterexample_to_json(*counterexample).dump()
        << "\n";
  }
  return out.str();
}

}  // namespace doubleseq
