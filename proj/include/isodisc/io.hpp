#pragma once

#include "isodisc/action.hpp"
#include "isodisc/certificate.hpp"
#include "isodisc/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace isodisc {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"vars": [...], "terms": [["p/q", [e_0, ..., e_{d-1}]], ...]}, terms in
/// descending graded-lex order.
Json poly_to_json(const MVPoly& p, const std::vector<std::string>& vars);
MVPoly poly_from_json(const Json& j, std::vector<std::string>* vars = nullptr);

Json action_to_json(const LinearAction& action);
/// Parses and re-validates (including the stored roots against the roots
/// read off the generators); schema problems raise FormatError, invariant
/// failures raise ActionError.
LinearAction action_from_json(const Json& j);

Json certificate_to_json(const SosCertificate& cert);
SosCertificate certificate_from_json(const Json& j);

/// Canonical text form: two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);
Json parse_document(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace isodisc
