#include "troplp/io.hpp"

#include <fstream>

#include "troplp/errors.hpp"

namespace troplp {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const GroupValue& v) {
  Json arr = Json::array();
  for (const auto& c : v.coords()) arr.push_back(c.str());
  return arr;
}

Json to_json(const Tropical& t) { return t.is_bottom() ? Json(nullptr) : to_json(t.value()); }

Json to_json(const SignedTropical& s) {
  return Json{{"sign", s.sign()}, {"mod", to_json(s.modulus())}};
}

Json to_json(const SignedMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"arity", m.arity()}, {"entries", std::move(rows)}};
}

Json to_json(const TropicalLP& lp) {
  Json rows = Json::array();
  for (const auto& row : lp.rows) {
    Json coeffs = Json::array();
    for (const auto& c : row.coeffs) coeffs.push_back(to_json(c));
    rows.push_back(Json{{"coeffs", std::move(coeffs)}, {"const", to_json(row.constant)}});
  }
  Json objective = Json::array();
  for (const auto& c : lp.objective) objective.push_back(to_json(c));
  return Json{{"arity", lp.arity}, {"rows", std::move(rows)}, {"objective", std::move(objective)}};
}

Json to_json(const MeanPayoffGame& game) {
  auto encode = [](const std::vector<std::vector<Tropical>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& e : row) r.push_back(e.is_bottom() ? Json(nullptr) : Json(e.value().coord(0).str()));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  return Json{{"A", encode(game.payments_to_min)}, {"B", encode(game.payments_to_max)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational (\"p/q\" string or integer), got " + j.dump());
}

GroupValue group_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.empty()) throw ParseError("group value must have at least one coordinate");
    std::vector<Rational> coords;
    coords.reserve(j.size());
    for (const auto& e : j) coords.push_back(rational_from_json(e));
    return GroupValue(std::move(coords));
  }
  return GroupValue(rational_from_json(j));
}

Tropical tropical_from_json(const Json& j) {
  if (j.is_null()) return Tropical::bottom();
  return Tropical(group_from_json(j));
}

SignedTropical signed_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sign") || !j.contains("mod"))
    throw ParseError("expected a signed number {\"sign\": .., \"mod\": ..}, got " + j.dump());
  int sign = j.at("sign").get<int>();
  if (sign < -1 || sign > 1) throw ParseError("sign must be -1, 0 or 1");
  Tropical mod = tropical_from_json(j.at("mod"));
  if ((sign == 0) != mod.is_bottom())
    throw ParseError("sign 0 and bottom modulus must coincide in " + j.dump());
  return SignedTropical::of(sign, std::move(mod));
}

namespace {

int infer_arity(const Tropical& t, int current) {
  if (t.is_bottom()) return current;
  int a = t.value().arity();
  if (current != 0 && current != a) throw ParseError("mixed group arities in input");
  return a;
}

} // namespace

SignedMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw ParseError("expected a matrix object with an \"entries\" field");
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.empty()) throw ParseError("matrix needs at least one row");
  std::vector<std::vector<SignedTropical>> parsed;
  int arity = j.contains("arity") ? j.at("arity").get<int>() : 0;
  std::size_t width = 0;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) throw ParseError("matrix rows must be non-empty arrays");
    if (parsed.empty())
      width = row.size();
    else if (row.size() != width)
      throw ParseError("matrix is not rectangular");
    std::vector<SignedTropical> r;
    r.reserve(row.size());
    for (const auto& e : row) {
      r.push_back(signed_from_json(e));
      arity = infer_arity(r.back().modulus(), arity);
    }
    parsed.push_back(std::move(r));
  }
  if (arity == 0) arity = 1;  // all-bottom matrix
  SignedMatrix m(static_cast<int>(parsed.size()), static_cast<int>(width), arity);
  for (std::size_t i = 0; i < parsed.size(); ++i)
    for (std::size_t k = 0; k < width; ++k)
      m.set(static_cast<int>(i), static_cast<int>(k), parsed[i][k]);
  return m;
}

TropicalLP lp_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows"))
    throw ParseError("expected a program object with a \"rows\" field");
  TropicalLP lp;
  int arity = j.contains("arity") ? j.at("arity").get<int>() : 0;
  std::size_t vars = 0;
  bool have_vars = false;
  for (const auto& row_json : j.at("rows")) {
    if (!row_json.is_object() || !row_json.contains("coeffs"))
      throw ParseError("each row needs a \"coeffs\" array");
    SignedRow row;
    for (const auto& c : row_json.at("coeffs")) {
      row.coeffs.push_back(signed_from_json(c));
      arity = infer_arity(row.coeffs.back().modulus(), arity);
    }
    row.constant = row_json.contains("const") ? signed_from_json(row_json.at("const"))
                                              : SignedTropical::bottom();
    arity = infer_arity(row.constant.modulus(), arity);
    if (!have_vars) {
      vars = row.coeffs.size();
      have_vars = true;
    } else if (row.coeffs.size() != vars) {
      throw ParseError("rows disagree on the number of variables");
    }
    lp.rows.push_back(std::move(row));
  }
  if (j.contains("objective") && !j.at("objective").is_null()) {
    for (const auto& c : j.at("objective")) {
      lp.objective.push_back(tropical_from_json(c));
      arity = infer_arity(lp.objective.back(), arity);
    }
    if (have_vars && lp.objective.size() != vars)
      throw ParseError("objective length disagrees with the rows");
  } else {
    if (!have_vars) throw ParseError("cannot infer the number of variables");
    lp.objective.assign(vars, Tropical::bottom());
  }
  lp.arity = arity == 0 ? 1 : arity;
  lp.validate();
  return lp;
}

MeanPayoffGame game_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw ParseError("expected a game object with \"A\" and \"B\" matrices");
  auto decode = [](const Json& mat, const char* name) {
    if (!mat.is_array() || mat.empty())
      throw ParseError(std::string(name) + " must be a non-empty array of rows");
    std::vector<std::vector<Tropical>> out;
    for (const auto& row : mat) {
      if (!row.is_array()) throw ParseError(std::string(name) + " rows must be arrays");
      std::vector<Tropical> r;
      for (const auto& e : row)
        r.push_back(e.is_null() ? Tropical::bottom() : Tropical(GroupValue(rational_from_json(e))));
      out.push_back(std::move(r));
    }
    return out;
  };
  MeanPayoffGame game{decode(j.at("A"), "A"), decode(j.at("B"), "B")};
  game.validate();
  return game;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

} // namespace troplp
