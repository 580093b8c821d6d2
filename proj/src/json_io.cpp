#include "discordq/json_io.hpp"

#include <json.hpp>

#include "discordq/error.hpp"

namespace discordq::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

double number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where + " must be a number");
  return j.get<double>();
}

Eigen::Matrix4d matrix4(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) fail(where + " must be a 4x4 array");
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != 4) fail(where + " must be a 4x4 array");
    for (int c = 0; c < 4; ++c) m(r, c) = number(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_json(const Eigen::Matrix4d& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

cv::CovarianceMatrix covariance_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("V")) fail("covariance file must be an object with field \"V\"");
  return cv::CovarianceMatrix{matrix4(doc.at("V"), "V")};
}

std::string covariance_to_json(const cv::CovarianceMatrix& v) {
  return json{{"V", matrix_json(v.v)}}.dump();
}

wigner::WignerState wigner_from_json(const std::string& text) {
  const json doc = parse(text);
  if (!doc.is_object() || !doc.contains("components") || !doc.at("components").is_array()) {
    fail("Wigner state must be an object with array field \"components\"");
  }
  wigner::WignerState w;
  std::size_t index = 0;
  for (const json& cj : doc.at("components")) {
    const std::string where = "components[" + std::to_string(index++) + "]";
    if (!cj.is_object()) fail(where + " must be an object");
    for (const char* key : {"poly", "quad", "lin", "logconst"}) {
      if (!cj.contains(key)) fail(where + " is missing \"" + key + "\"");
    }
    wigner::WignerComponent c;
    c.poly = poly::SparsePoly(4);
    if (!cj.at("poly").is_array()) fail(where + ".poly must be an array");
    for (const json& tj : cj.at("poly")) {
      if (!tj.is_object() || !tj.contains("exp") || !tj.at("exp").is_array() || tj.at("exp").size() != 4) {
        fail(where + ".poly terms need \"exp\" with 4 exponents");
      }
      poly::Exponents e(4);
      for (int i = 0; i < 4; ++i) {
        const json& ej = tj.at("exp")[i];
        if (!ej.is_number_integer() || ej.get<long>() < 0 || ej.get<long>() > 255) {
          fail(where + ".poly exponents must be integers in [0, 255]");
        }
        e.set(i, ej.get<int>());
      }
      const double re = tj.contains("re") ? number(tj.at("re"), where + ".poly.re") : 0.0;
      const double im = tj.contains("im") ? number(tj.at("im"), where + ".poly.im") : 0.0;
      c.poly.add_term(e, {re, im});
    }
    c.poly.prune();
    c.quad = matrix4(cj.at("quad"), where + ".quad");
    const json& lj = cj.at("lin");
    if (!lj.is_array() || lj.size() != 4) fail(where + ".lin must have 4 entries");
    for (int i = 0; i < 4; ++i) c.lin(i) = number(lj[i], where + ".lin");
    c.logconst = number(cj.at("logconst"), where + ".logconst");
    w.components.push_back(std::move(c));
  }
  return w;
}

std::string wigner_to_json(const wigner::WignerState& w, int indent) {
  json comps = json::array();
  for (const auto& c : w.components) {
    json terms = json::array();
    for (const auto& [e, coeff] : c.poly.terms()) {
      terms.push_back({{"exp", {e[0], e[1], e[2], e[3]}}, {"re", coeff.real()}, {"im", coeff.imag()}});
    }
    comps.push_back({{"poly", terms},
                     {"quad", matrix_json(c.quad)},
                     {"lin", {c.lin(0), c.lin(1), c.lin(2), c.lin(3)}},
                     {"logconst", c.logconst}});
  }
  return json{{"components", comps}}.dump(indent);
}

}  // namespace discordq::io
