#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "freeinv/basis.hpp"
#include "freeinv/counting.hpp"
#include "freeinv/evaluator.hpp"
#include "freeinv/rewriter.hpp"

namespace freeinv {

using Json = nlohmann::ordered_json;

// Malformed input: unknown names, bad JSON, schema violations.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// sym<d>-natural, cyclic<n>-natural, dihedral<n>-natural, even2, trivial<d>.
std::optional<UnitaryRep> builtin_rep(const std::string& name);

// {"group": {"kind": ...}, "rep": {"kind": ..., "dim": d, "data": ...}}
UnitaryRep rep_from_json(const Json& j);
Json rep_to_json(const UnitaryRep& rep);

// A built-in name, or else a path to a JSON file.
UnitaryRep load_rep(const std::string& source);

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

Json to_json(const CountReport& r);
Json to_json(const RewriteResult& r);
Json to_json(const SuperorthoBasis& basis);
Json to_json(const SuperorthoReport& r);
Json to_json(const RowBallReport& r);
Json to_json(const SupNormReport& r);
Json to_json(const DilationReport& r);

// Reads a basis written by to_json. Coefficient vectors are taken from the
// "coefficients" arrays; the rep fingerprint must match `rep`.
SuperorthoBasis basis_from_json(const Json& j, const UnitaryRep& rep);

Json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);

}  // namespace freeinv
