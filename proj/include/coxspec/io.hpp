#pragma once

#include <map>
#include <string>
#include <utility>

#include <json.hpp>

#include "coxspec/analysis.hpp"

namespace coxspec::io {

using json = nlohmann::ordered_json;

// cyclotomic numbers: { "order": N, "coeffs": [[num, den], ...] };
// coefficient vectors of any length <= N are reduced mod Phi_N on load
json cyc_to_json(const Cyc& c);
Cyc cyc_from_json(const json& j);

json coxeter_to_json(const CoxeterMatrix& m);
CoxeterMatrix coxeter_from_json(const json& j);

json repspec_to_json(const RepSpec& s);
RepSpec repspec_from_json(const json& j);

json matrixrep_to_json(const MatrixRep& r);
MatrixRep matrixrep_from_json(const json& j);

// curve sets keyed by generator pair:
// { "pairs": [ { "i":, "j":, "lines": [...], "ellipses": [...] } ] }
json curvesets_to_json(const std::map<std::pair<int, int>, CurveSet>& pairs);
std::map<std::pair<int, int>, CurveSet> curvesets_from_json(const json& j);

json verdict_to_json(const FaithfulnessVerdict& v);
json reconstruction_to_json(const ReconstructionReport& r);
json analysis_to_json(const AnalysisReport& r);

// file helpers; all load failures surface as input_error
json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);
std::string dump(const json& j);  // canonical two-space indent + newline

}  // namespace coxspec::io
