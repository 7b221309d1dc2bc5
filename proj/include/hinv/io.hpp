// JSON documents for H-matrices, Q-profiles, verdicts and witnesses.
#pragma once

#include <string>

#include <json.hpp>

#include "hinv/certify.hpp"
#include "hinv/worstcase.hpp"

namespace hinv {

using json = nlohmann::json;

json to_json(const HMatrix& h);
// Throws std::invalid_argument on any schema violation.
HMatrix hmatrix_from_json(const json& doc);

json to_json(const QProfile& q);
QProfile qprofile_from_json(const json& doc);

json to_json(const CertificateSet& lambda);
json to_json(const InvarianceReport& report);
json to_json(const Verdict& v);

json to_json(const GramWitness& w, bool with_vectors = false);

HMatrix read_hmatrix_file(const std::string& path);

}  // namespace hinv
