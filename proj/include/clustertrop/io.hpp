#pragma once

// JSON formats for matrices, traces, quivers, polytopes, certificates and
// family specifications. Rationals are written as "p/q" strings.

#include "clustertrop/exchange_matrix.hpp"
#include "clustertrop/polytope.hpp"
#include "clustertrop/quiver.hpp"
#include "clustertrop/tropical.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace clustertrop {

using Json = nlohmann::ordered_json;

/// Malformed input. The message starts with the offending field path.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

Json to_json(const Rational& x);
Json to_json(const RationalVector& v);
Json to_json(const ExchangeMatrix& eps);
Json to_json(const MutationTrace& t);
Json to_json(const Quiver& q);
Json to_json(const RationalPolytope& p);
Json to_json(const PolytopePiece& p);
Json to_json(const QGFCertificate& c);
Json to_json(const TropImage& img);
Json to_json(const FamilySpec& f);
Json to_json(const DistinguishCertificate& c);

Rational rational_from_json(const Json& j, const std::string& field);
RationalVector point_from_json(const Json& j, const std::string& field);
ExchangeMatrix matrix_from_json(const Json& j, const std::string& field = "matrix");
MutationTrace trace_from_json(const Json& j, const std::string& field = "trace");
Quiver quiver_from_json(const Json& j, const std::string& field = "quiver");
RationalPolytope polytope_from_json(const Json& j, const std::string& field = "polytope");
FamilySpec family_from_json(const Json& j, const std::string& field = "family");
std::vector<Label> labels_from_json(const Json& j, const std::string& field);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Comma-separated integer labels such as "6,2,3".
std::vector<Label> parse_label_list(const std::string& text, const std::string& field);

}  // namespace clustertrop
