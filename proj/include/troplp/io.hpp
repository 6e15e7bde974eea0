#ifndef TROPLP_IO_HPP
#define TROPLP_IO_HPP

#include <json.hpp>

#include <string>

#include "troplp/linalg.hpp"
#include "troplp/mpg.hpp"
#include "troplp/tropical.hpp"

namespace troplp {

using Json = nlohmann::json;

/// Canonical encodings:
///   rational       -> "p/q" (q > 0, reduced)
///   group value    -> array of rationals
///   tropical       -> null (bottom) or a group value
///   signed number  -> {"sign": -1|0|1, "mod": tropical}
/// Parsers additionally accept integers and bare "p" strings for rationals,
/// and scalars where a one-coordinate group value is meant.

Json to_json(const Rational& r);
Json to_json(const GroupValue& v);
Json to_json(const Tropical& t);
Json to_json(const SignedTropical& s);
Json to_json(const SignedMatrix& m);
Json to_json(const TropicalLP& lp);
Json to_json(const MeanPayoffGame& game);

Rational rational_from_json(const Json& j);
GroupValue group_from_json(const Json& j);
Tropical tropical_from_json(const Json& j);
SignedTropical signed_from_json(const Json& j);
SignedMatrix matrix_from_json(const Json& j);
TropicalLP lp_from_json(const Json& j);
MeanPayoffGame game_from_json(const Json& j);

/// Reads and parses a JSON document; throws ParseError on syntax errors.
Json load_json_file(const std::string& path);

} // namespace troplp

#endif
