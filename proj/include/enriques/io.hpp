#pragma once

// JSON forms of the library's values.
//
//   NumClass          [c0, ..., c9]
//   DivisorClass      {"d": [...], "eps": 0|1}
//   MukaiVector       {"r": int, "d": [...], "eps": 0|1, "t": int}
//   K3MukaiVector     {"r": int, "d": [...], "s": int, "form": "doubled"}
//   CurveTestSet      {"curves": [[...], ...], "cone_ref": [...]}
//
// Parse errors name the offending field.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "enriques/collections.hpp"
#include "enriques/k3_cover.hpp"
#include "enriques/mukai.hpp"
#include "enriques/polarization.hpp"

namespace enriques::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, where + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw Error(ErrorKind::Parse, where + ": missing field '" + name + "'");
  return *it;
}

inline Int integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw Error(ErrorKind::Parse, where + ": expected an integer");
  return j.get<Int>();
}

}  // namespace detail

inline Json to_json(const NumClass& x) {
  Json out = Json::array();
  for (Int c : x.coords()) out.push_back(c);
  return out;
}

inline NumClass num_class_from_json(const Json& j, std::size_t rank, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, where + ": expected an integer array");
  if (j.size() != rank) {
    throw Error(ErrorKind::Parse, where + ": expected " + std::to_string(rank) +
                                      " coordinates, got " + std::to_string(j.size()));
  }
  std::vector<Int> coords;
  coords.reserve(rank);
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(detail::integer(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return NumClass(std::move(coords));
}

inline int eps_from_json(const Json& j, const std::string& where) {
  if (!j.contains("eps")) return 0;
  const Int e = detail::integer(j["eps"], where + ".eps");
  if (e != 0 && e != 1) throw Error(ErrorKind::Parse, where + ".eps: must be 0 or 1");
  return static_cast<int>(e);
}

inline Json to_json(const DivisorClass& D) {
  return Json{{"d", to_json(D.num)}, {"eps", D.eps}};
}

inline DivisorClass divisor_from_json(const Json& j, std::size_t rank,
                                      const std::string& where = "divisor") {
  return DivisorClass(num_class_from_json(detail::field(j, "d", where), rank, where + ".d"),
                      eps_from_json(j, where));
}

inline Json to_json(const MukaiVector& v) {
  return Json{{"r", v.r}, {"d", to_json(v.D.num)}, {"eps", v.D.eps}, {"t", v.t}};
}

/// Rejects vectors violating t = r (mod 2), naming the invariant.
inline MukaiVector vector_from_json(const Json& j, std::size_t rank,
                                    const std::string& where = "vector") {
  MukaiVector v{detail::integer(detail::field(j, "r", where), where + ".r"),
                divisor_from_json(j, rank, where),
                detail::integer(detail::field(j, "t", where), where + ".t")};
  if (!v.parity_ok()) {
    throw Error(ErrorKind::ParityViolation, where + ": invariant 't = r (mod 2)' violated");
  }
  return v;
}

inline Json to_json(const K3MukaiVector& w) {
  return Json{{"r", w.r}, {"d", to_json(w.D)}, {"s", w.s}, {"form", "doubled"}};
}

inline K3MukaiVector k3_vector_from_json(const Json& j, std::size_t rank,
                                         const std::string& where = "k3 vector") {
  if (j.contains("form") && j["form"] != "doubled") {
    throw Error(ErrorKind::Parse, where + ".form: only \"doubled\" is supported");
  }
  return {detail::integer(detail::field(j, "r", where), where + ".r"),
          num_class_from_json(detail::field(j, "d", where), rank, where + ".d"),
          detail::integer(detail::field(j, "s", where), where + ".s")};
}

inline CurveTestSet test_set_from_json(const GramLattice& L, const Json& j,
                                       const std::string& where = "test set") {
  const Json& curves = detail::field(j, "curves", where);
  if (!curves.is_array()) throw Error(ErrorKind::Parse, where + ".curves: expected an array");
  std::vector<NumClass> cs;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    cs.push_back(num_class_from_json(curves[i], L.rank(), where + ".curves[" + std::to_string(i) + "]"));
  }
  return CurveTestSet(L, std::move(cs),
                      num_class_from_json(detail::field(j, "cone_ref", where), L.rank(),
                                          where + ".cone_ref"));
}

inline Json to_json(const CurveTestSet& T) {
  Json curves = Json::array();
  for (const auto& c : T.curves()) curves.push_back(to_json(c));
  return Json{{"curves", curves}, {"cone_ref", to_json(T.cone_ref())}};
}

inline Json to_json(const PolarizationCertificate& c) {
  return Json{{"X", to_json(c.X)},
              {"k", c.k},
              {"Hprime", to_json(c.Hprime)},
              {"d", c.d},
              {"gcd_value", c.gcd_value}};
}

inline Json to_json(const IsotropicSequence& seq) {
  Json out = Json::array();
  for (const auto& f : seq.classes) out.push_back(to_json(f));
  return out;
}

inline Json to_json(const CollectionReport& report) {
  return Json{{"chi", report.chi}, {"verdict", report.pass ? "PASS" : "FAIL"}};
}

/// Parses text as JSON; a malformed document is a Parse error.
inline Json parse(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, where + ": " + e.what());
  }
}

/// An argument is either inline JSON or a path to a file holding one document.
inline Json load_document(const std::string& arg, const std::string& where) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return parse(arg, where);
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorKind::Parse, where + ": cannot open '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), where + " (" + arg + ")");
}

}  // namespace enriques::io
