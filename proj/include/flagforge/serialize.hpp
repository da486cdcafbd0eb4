#pragma once

/// JSON wire formats. Field elements are written as their integer codes and
/// matrices as {rows, cols, data} in row-major order; nothing is floating point.

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include "flagforge/analysis.hpp"
#include "flagforge/bounds.hpp"
#include "flagforge/error.hpp"
#include "flagforge/flag.hpp"
#include "flagforge/galois.hpp"
#include "flagforge/matrix.hpp"
#include "flagforge/rank_metric.hpp"
#include "flagforge/subspace.hpp"

namespace flagforge {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFlagCodeFormat = "flagforge/1";

/// Unsigned number when it fits, decimal string otherwise.
inline Json big_to_json(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) return x.convert_to<std::uint64_t>();
  return x.str();
}

inline Json to_json(const Field& f) {
  Json modulus = Json::array();
  for (Element c : f.modulus()) modulus.push_back(c);
  return {{"p", f.characteristic()}, {"e", f.prime_degree()}, {"modulus", modulus}};
}

inline Json to_json(const Matrix& m) {
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Element x : m.row(r)) row.push_back(x);
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

inline Json to_json(const Subspace& s) {
  return {{"n", s.ambient()}, {"dim", s.dimension()}, {"basis", to_json(s.basis())}};
}

inline Json to_json(const MrdCode& c) {
  Json ext = Json::array();
  for (Element x : c.extension()->modulus()) ext.push_back(x);
  return {{"q", c.field()->order()}, {"m", c.side()}, {"delta", c.delta()}, {"ext_modulus", std::move(ext)}};
}

inline Json to_json(const FlagCode& code) {
  const Field& f = *code.params().field;
  Json out = {{"format", kFlagCodeFormat}, {"q", f.order()}, {"p", f.characteristic()}, {"e", f.prime_degree()}};
  out["modulus"] = to_json(f)["modulus"];
  out["n"] = code.params().n;
  out["k"] = code.params().k;
  out["type"] = code.type().ticks();
  Json flags = Json::array();
  for (std::size_t i = 0; i < code.size(); ++i) {
    const Flag& fl = code.flags()[i];
    if (!fl.generator()) throw Error(ErrorKind::Malformed, "flag without a generator cannot be serialized");
    Json entry = {{"generator", to_json(*fl.generator())}};
    if (!code.provenance().empty()) {
      const Provenance& p = code.provenance()[i];
      entry["provenance"] = {{"family", p.label()}, {"index", p.index}};
    }
    flags.push_back(std::move(entry));
  }
  out["flags"] = std::move(flags);
  return out;
}

inline Json to_json(const VerificationReport& rep) {
  Json ticks = Json::array();
  for (const auto& t : rep.per_tick) {
    Json jt = {{"t", t.t}, {"projected_size", t.projected_size}};
    jt["projected_min_distance"] = t.projected_min_distance ? Json(*t.projected_min_distance) : Json(nullptr);
    jt["target"] = t.target;
    jt["attains"] = t.attains();
    ticks.push_back(std::move(jt));
  }
  Json out = {{"q", rep.q}, {"n", rep.n}, {"k", rep.k}, {"a", rep.a}, {"r", rep.r}, {"type", rep.type}};
  out["size"] = rep.size;
  out["min_flag_distance"] = rep.min_flag_distance;
  out["max_distance_bound"] = rep.max_distance_bound;
  out["per_tick"] = std::move(ticks);
  out["disjoint"] = rep.disjoint;
  out["is_odfc"] = rep.is_odfc;
  out["size_formula"] = big_to_json(rep.size_formula);
  out["upper_bound"] = rep.upper_bound ? big_to_json(*rep.upper_bound) : Json(nullptr);
  out["drake_freeman"] = rep.drake_freeman ? big_to_json(*rep.drake_freeman) : Json(nullptr);
  out["gaussian_r"] = big_to_json(rep.gaussian_r);
  out["bound_applicable"] = rep.bound_applicable;
  out["optimality"] = std::string(to_string(rep.optimality));
  return out;
}

namespace detail {

inline const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::Malformed, std::string("missing key '") + key + "'");
  return j.at(key);
}

inline std::uint64_t unsigned_member(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (!v.is_number_unsigned()) throw Error(ErrorKind::Malformed, std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

inline std::vector<std::uint64_t> unsigned_array(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::Malformed, std::string(what) + " must be an array");
  std::vector<std::uint64_t> out;
  for (const auto& x : v) {
    if (!x.is_number_unsigned()) throw Error(ErrorKind::Malformed, std::string(what) + " entries must be non-negative integers");
    out.push_back(x.get<std::uint64_t>());
  }
  return out;
}

}  // namespace detail

inline Matrix matrix_from_json(const Json& j, const FieldPtr& f) {
  const std::uint64_t rows = detail::unsigned_member(j, "rows");
  const std::uint64_t cols = detail::unsigned_member(j, "cols");
  const Json& data = detail::member(j, "data");
  if (!data.is_array() || data.size() != rows) throw Error(ErrorKind::Malformed, "matrix data has wrong row count");
  std::vector<Element> flat;
  for (const auto& row : data) {
    const auto entries = detail::unsigned_array(row, "matrix row");
    if (entries.size() != cols) throw Error(ErrorKind::Malformed, "matrix row has wrong length");
    for (auto x : entries) {
      if (x >= f->order()) throw Error(ErrorKind::Malformed, "matrix entry outside the field");
      flat.push_back(static_cast<Element>(x));
    }
  }
  return Matrix(f, rows, cols, std::move(flat));
}

/// Parses and re-validates a FlagCode document. Subspaces are recomputed from
/// each generator. Every schema violation is reported as Malformed.
inline FlagCode flag_code_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Malformed, "flag code must be a JSON object");
  const Json& format = detail::member(j, "format");
  if (!format.is_string() || format.get<std::string>() != kFlagCodeFormat) {
    throw Error(ErrorKind::Malformed, "unsupported format tag");
  }
  const std::uint64_t p = detail::unsigned_member(j, "p");
  const std::uint64_t e = detail::unsigned_member(j, "e");
  const std::uint64_t q = detail::unsigned_member(j, "q");
  if (p > UINT32_MAX || e > 64) throw Error(ErrorKind::Malformed, "field parameters out of range");
  FieldPtr f;
  try {
    f = make_field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e));
  } catch (const Error& err) {
    throw Error(ErrorKind::Malformed, err.what());
  }
  if (f->order() != q) throw Error(ErrorKind::Malformed, "q disagrees with p^e");
  const auto modulus = detail::unsigned_array(detail::member(j, "modulus"), "modulus");
  if (!std::equal(modulus.begin(), modulus.end(), f->modulus().begin(), f->modulus().end())) {
    throw Error(ErrorKind::Malformed, "modulus differs from the canonical modulus for GF(p^e)");
  }
  const std::uint64_t n = detail::unsigned_member(j, "n");
  const std::uint64_t k = detail::unsigned_member(j, "k");
  if (n > 64) throw Error(ErrorKind::Malformed, "n out of range");
  auto ticks = detail::unsigned_array(detail::member(j, "type"), "type");

  try {
    CodeParams params = CodeParams::make(f, n, k);
    require_allowed_ticks(n, k, ticks);
    FlagType type(n, ticks);
    const Json& flags_json = detail::member(j, "flags");
    if (!flags_json.is_array()) throw Error(ErrorKind::Malformed, "'flags' must be an array");
    std::vector<Flag> flags;
    std::vector<Provenance> provenance;
    for (const auto& entry : flags_json) {
      const Matrix g = matrix_from_json(detail::member(entry, "generator"), f);
      if (g.rows() != n || g.cols() != n) throw Error(ErrorKind::Malformed, "generator must be n x n");
      flags.push_back(flag_from_matrix(g, type));
      if (entry.contains("provenance")) {
        const Json& pj = entry.at("provenance");
        const Json& family = detail::member(pj, "family");
        if (!family.is_string()) throw Error(ErrorKind::Malformed, "provenance family must be a string");
        provenance.push_back(Provenance::parse(family.get<std::string>(), detail::unsigned_member(pj, "index")));
      }
    }
    if (!provenance.empty() && provenance.size() != flags.size()) {
      throw Error(ErrorKind::Malformed, "provenance present on some flags only");
    }
    return FlagCode(std::move(params), std::move(type), std::move(flags), std::move(provenance));
  } catch (const Error& err) {
    if (err.kind() == ErrorKind::Malformed) throw;
    throw Error(ErrorKind::Malformed, err.what());
  }
}

inline FlagCode flag_code_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Malformed, std::string("invalid JSON: ") + ex.what());
  }
  return flag_code_from_json(j);
}

}  // namespace flagforge
