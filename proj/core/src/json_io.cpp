#include "hyperdet/json_io.hpp"

#include <json.hpp>
#include <sstream>

namespace hyperdet {

using nlohmann::json;

namespace {

json parse_doc(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("JSON input must be an object");
  return j;
}

ExactScalar scalar_field(const json& v) {
  if (v.is_number_integer()) return ExactScalar(Rat(v.get<long>()));
  if (v.is_string()) return ExactScalar::parse(v.get<std::string>());
  throw std::invalid_argument("scalar entries must be integers or strings");
}

std::string exps_key(const MultiPoly::Exponents& e) {
  std::ostringstream os;
  for (size_t i = 0; i < e.size(); ++i) {
    if (i) os << ',';
    os << e[i];
  }
  return os.str();
}

}  // namespace

TensorRequest parse_tensor_json(const std::string& text) {
  json j = parse_doc(text);
  TensorRequest req;
  req.order = j.at("order").get<int>();
  req.dim = j.at("dim").get<int>();
  if (req.order < 1 || req.dim < 1) throw std::invalid_argument("bad tensor shape");
  size_t expect = 1;
  for (int i = 0; i < req.order; ++i) expect *= size_t(req.dim);
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != expect)
    throw std::invalid_argument("entries must hold dim^order scalars");
  for (const auto& v : entries) req.entries.push_back(scalar_field(v));
  return req;
}

HankelRequest parse_hankel_json(const std::string& text) {
  json j = parse_doc(text);
  HankelRequest req;
  req.n = j.at("n").get<int>();
  req.k = j.at("k").get<int>();
  req.r = j.value("r", 0);
  for (const auto& v : j.at("moments")) req.moments.push_back(scalar_field(v));
  return req;
}

ToeplitzRequest parse_toeplitz_json(const std::string& text) {
  json j = parse_doc(text);
  ToeplitzRequest req;
  req.n = j.at("n").get<int>();
  req.k = j.at("k").get<int>();
  for (const auto& [key, v] : j.at("offsets").items())
    req.offsets.emplace(std::stoi(key), scalar_field(v));
  return req;
}

std::string multipoly_json(const MultiPoly& p) {
  json terms = json::object();
  for (const auto& [e, c] : p.terms()) terms[exps_key(e)] = rat_to_string(c);
  json j;
  j["schema"] = "hyperdet/1";
  j["vars"] = p.vars();
  j["terms"] = terms;
  return j.dump();
}

std::string unipoly_json(const UniPoly& p) {
  return multipoly_json(MultiPoly::from_unipoly(p));
}

std::string sym_expansion_json(const SymExpansion& f) {
  json terms = json::object();
  for (const auto& [lam, c] : f.coeffs) {
    std::ostringstream os;
    for (size_t i = 0; i < lam.size(); ++i) {
      if (i) os << ',';
      os << lam[i];
    }
    terms[lam.empty() ? "0" : os.str()] = rat_to_string(c);
  }
  json j;
  j["schema"] = "hyperdet/1";
  switch (f.basis) {
    case SymBasis::monomial: j["basis"] = "monomial"; break;
    case SymBasis::schur: j["basis"] = "schur"; break;
    case SymBasis::h: j["basis"] = "h"; break;
    case SymBasis::e: j["basis"] = "e"; break;
    case SymBasis::p: j["basis"] = "p"; break;
  }
  j["n"] = f.nvars;
  j["terms"] = terms;
  return j.dump();
}

}  // namespace hyperdet
