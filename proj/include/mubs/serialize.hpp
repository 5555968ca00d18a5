#pragma once

// JSON / CSV / pretty-text serialization of MUB sets and verification
// reports.
//
// JSON is the interchange format and stores exponents as integers, so a
// round trip loses nothing; keys are emitted in sorted order and dumps are
// byte-identical across round trips.  CSV has one row per (vector, position)
// with either the exponent or the numeric amplitude.  The pretty renderer
// writes each vector as a sum of root-of-unity multiples of kets, with the
// conductor reduced by the common exponent gcd and printed once in a header.

#include <cstdint>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mubs/basis.hpp"
#include "mubs/constructions.hpp"
#include "mubs/verify.hpp"

namespace mubs {

using nlohmann::json;

inline json mub_to_json(const MubSet& set) {
  json j;
  j["dimension"] = set.dimension;
  j["conductor"] = set.conductor;
  j["method"] = method_name(set.method);
  j["normalization"] = "1/sqrt(d)";
  if (set.field) {
    j["field"] = json{{"p", set.field->p}, {"m", set.field->m}, {"modulus", set.field->modulus}};
  } else {
    j["field"] = nullptr;
  }
  if (set.ring) {
    j["ring"] = json{{"m", set.ring->m}, {"basic_irreducible", set.ring->basic_irreducible}};
  } else {
    j["ring"] = nullptr;
  }
  j["bases"] = json::array();
  for (const auto& basis : set.bases) {
    json jb;
    jb["label"] = basis.label;
    jb["kind"] = basis.is_computational() ? "computational" : "phase";
    json vectors = json::array();
    for (const auto& v : basis.vectors) {
      if (v.kind == VectorKind::Unit) {
        vectors.push_back(json::array({v.unit_index}));
      } else {
        vectors.push_back(v.exponents);
      }
    }
    jb["vectors"] = std::move(vectors);
    j["bases"].push_back(std::move(jb));
  }
  return j;
}

inline std::string mub_to_json_string(const MubSet& set) { return mub_to_json(set).dump(2) + "\n"; }

namespace sdetail {

inline void require_keys(const json& j, std::initializer_list<const char*> keys,
                         const std::string& where) {
  for (const char* k : keys)
    if (!j.contains(k)) throw std::invalid_argument(where + ": missing key \"" + k + "\"");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* want : keys) known = known || k == want;
    if (!known) throw std::invalid_argument(where + ": unknown key \"" + k + "\"");
  }
}

inline int64_t require_int(const json& j, const char* key, const std::string& where) {
  if (!j.at(key).is_number_integer())
    throw std::invalid_argument(where + ": \"" + key + "\" must be an integer");
  return j.at(key).get<int64_t>();
}

inline std::vector<int64_t> require_int_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw std::invalid_argument(where + ": expected an array");
  std::vector<int64_t> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument(where + ": expected integers");
    out.push_back(e.get<int64_t>());
  }
  return out;
}

}  // namespace sdetail

inline MubSet mub_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("mub json: top level must be an object");
  sdetail::require_keys(
      j, {"dimension", "conductor", "method", "field", "ring", "bases", "normalization"},
      "mub json");

  MubSet set;
  set.dimension = sdetail::require_int(j, "dimension", "mub json");
  set.conductor = sdetail::require_int(j, "conductor", "mub json");
  if (set.dimension < 2) throw std::invalid_argument("mub json: dimension must be at least 2");
  if (set.conductor < 1) throw std::invalid_argument("mub json: conductor must be positive");
  if (!j.at("method").is_string()) throw std::invalid_argument("mub json: method must be a string");
  set.method = method_from_name(j.at("method").get<std::string>());
  if (j.at("normalization") != "1/sqrt(d)")
    throw std::invalid_argument("mub json: normalization must be \"1/sqrt(d)\"");

  if (!j.at("field").is_null()) {
    const json& f = j.at("field");
    sdetail::require_keys(f, {"p", "m", "modulus"}, "mub json field");
    FieldInfo info;
    info.p = sdetail::require_int(f, "p", "mub json field");
    info.m = sdetail::require_int(f, "m", "mub json field");
    info.modulus = sdetail::require_int_array(f.at("modulus"), "mub json field modulus");
    set.field = std::move(info);
  }
  if (!j.at("ring").is_null()) {
    const json& r = j.at("ring");
    sdetail::require_keys(r, {"m", "basic_irreducible"}, "mub json ring");
    RingInfo info;
    info.m = sdetail::require_int(r, "m", "mub json ring");
    info.basic_irreducible =
        sdetail::require_int_array(r.at("basic_irreducible"), "mub json ring basic_irreducible");
    set.ring = std::move(info);
  }
  if ((set.method == MubMethod::GaloisField) != set.field.has_value())
    throw std::invalid_argument("mub json: field metadata must accompany exactly the gf method");
  if ((set.method == MubMethod::GaloisRing) != set.ring.has_value())
    throw std::invalid_argument("mub json: ring metadata must accompany exactly the gr method");

  if (!j.at("bases").is_array() || j.at("bases").empty())
    throw std::invalid_argument("mub json: bases must be a non-empty array");
  for (const auto& jb : j.at("bases")) {
    sdetail::require_keys(jb, {"label", "kind", "vectors"}, "mub json basis");
    if (!jb.at("label").is_string())
      throw std::invalid_argument("mub json basis: label must be a string");
    Basis basis;
    basis.label = jb.at("label").get<std::string>();
    const std::string kind = jb.at("kind").is_string() ? jb.at("kind").get<std::string>() : "";
    if (kind != "phase" && kind != "computational")
      throw std::invalid_argument("mub json basis: kind must be \"phase\" or \"computational\"");
    if (!jb.at("vectors").is_array() ||
        static_cast<int64_t>(jb.at("vectors").size()) != set.dimension)
      throw std::invalid_argument("mub json basis " + basis.label + ": expected d vectors");
    for (const auto& jv : jb.at("vectors")) {
      auto entries = sdetail::require_int_array(jv, "mub json basis " + basis.label);
      if (kind == "computational") {
        if (entries.size() != 1)
          throw std::invalid_argument("mub json basis " + basis.label +
                                      ": computational vectors are single-element arrays");
        basis.vectors.push_back(BasisVector::unit(set.dimension, entries[0]));
      } else {
        if (static_cast<int64_t>(entries.size()) != set.dimension)
          throw std::invalid_argument("mub json basis " + basis.label +
                                      ": phase vectors need d exponents");
        for (const auto e : entries)
          if (e < 0 || e >= set.conductor)
            throw std::invalid_argument("mub json basis " + basis.label +
                                        ": exponent out of [0, conductor)");
        basis.vectors.push_back(BasisVector::phase(set.dimension, set.conductor, std::move(entries)));
      }
    }
    set.bases.push_back(std::move(basis));
  }

  const int64_t nb = static_cast<int64_t>(set.bases.size());
  set.completeness_claimed = completeness_claim_for(set.method, set.dimension, nb);
  set.claimed_pairs = claimed_pairs_for(set.method, set.dimension, nb);
  return set;
}

inline MubSet mub_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("mub json: parse error: ") + e.what());
  }
  return mub_from_json(j);
}

// CSV: one data row per stored amplitude.  Exponent mode writes the root
// exponent; numeric mode writes the normalized amplitude.  Computational
// vectors occupy a single row at their unit position.
inline std::string mub_to_csv(const MubSet& set, bool numeric = false) {
  std::ostringstream os;
  os << "# dimension=" << set.dimension << " conductor=" << set.conductor
     << " method=" << method_name(set.method) << " normalization=1/sqrt(d)\n";
  os << (numeric ? "basis_label,vector_index,position,re,im\n"
                 : "basis_label,vector_index,position,exponent\n");
  os << std::setprecision(17);
  for (const auto& basis : set.bases) {
    for (size_t idx = 0; idx < basis.vectors.size(); ++idx) {
      const auto& v = basis.vectors[idx];
      if (v.kind == VectorKind::Unit) {
        os << basis.label << ',' << idx << ',' << v.unit_index << ',';
        if (numeric)
          os << 1.0 << ',' << 0.0;
        else
          os << 0;
        os << '\n';
        continue;
      }
      for (int64_t x = 0; x < v.dimension; ++x) {
        os << basis.label << ',' << idx << ',' << x << ',';
        if (numeric) {
          const auto amp = v.amplitude(x);
          os << amp.real() << ',' << amp.imag();
        } else {
          os << v.exponents[static_cast<size_t>(x)];
        }
        os << '\n';
      }
    }
  }
  return os.str();
}

namespace sdetail {

const char* const kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴",
                                       "⁵", "⁶", "⁷", "⁸", "⁹"};

inline std::string superscript(int64_t e) {
  std::string digits = std::to_string(e);
  std::string out;
  for (const char c : digits) out += kSuperscripts[c - '0'];
  return out;
}

// Coefficient in front of a ket for the root zeta_display^e: "" for 1,
// "-" for -1, "i"/"-i" when the display conductor is 4, else an omega power.
inline std::string coefficient(int64_t e, int64_t display_conductor) {
  if (e == 0) return "";
  if (display_conductor == 2) return "-";
  if (display_conductor == 4) {
    switch (e) {
      case 1: return "i";
      case 2: return "-";
      case 3: return "-i";
    }
  }
  if (e == 1) return "ω";
  return std::string("ω") + superscript(e);
}

}  // namespace sdetail

// Human-oriented rendering: each vector as (c_0|0> + c_1|1> + ...)/sqrt(d)
// with root-of-unity coefficients over the reduced conductor.
inline std::string mub_to_pretty(const MubSet& set) {
  int64_t g = set.conductor;
  for (const auto& basis : set.bases)
    for (const auto& v : basis.vectors)
      if (v.kind == VectorKind::Phase)
        for (const auto e : v.exponents) g = std::gcd(g, e);
  const int64_t display = set.conductor / g;  // g >= 1: it starts from the conductor

  std::ostringstream os;
  os << "# method " << method_name(set.method) << ", dimension " << set.dimension << ", "
     << set.bases.size() << " bases, conductor " << set.conductor << "\n";
  if (display > 4 || display == 3)
    os << "# ω = exp(2πi/" << display << ")\n";
  for (const auto& basis : set.bases) {
    os << basis.label << (basis.is_computational() ? " (computational)" : "") << "\n";
    for (size_t idx = 0; idx < basis.vectors.size(); ++idx) {
      const auto& v = basis.vectors[idx];
      os << "  [" << idx << "]  ";
      if (v.kind == VectorKind::Unit) {
        os << "|" << v.unit_index << "⟩\n";
        continue;
      }
      os << "(";
      for (int64_t x = 0; x < v.dimension; ++x) {
        const int64_t e = display == 1 ? 0 : v.exponents[static_cast<size_t>(x)] / g;
        std::string term = sdetail::coefficient(e, display) + "|" + std::to_string(x) + "⟩";
        if (x == 0) {
          os << term;
        } else if (!term.empty() && term[0] == '-') {
          os << "-" << term.substr(1);
        } else {
          os << "+" << term;
        }
      }
      os << ")/√" << set.dimension << "\n";
    }
  }
  return os.str();
}

inline json witness_to_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return json{{"vector_a", w->vector_a}, {"vector_b", w->vector_b}, {"detail", w->detail}};
}

inline json report_to_json(const VerificationReport& report) {
  json j;
  j["dimension"] = report.dimension;
  j["bases"] = report.basis_count;
  j["mode"] = report.mode == CheckMode::Exact ? "exact" : "float";
  j["tol"] = report.tol;
  j["completeness_claimed"] = report.completeness_claimed;
  j["verdict"] = verdict_name(report.verdict);
  j["orthonormal"] = json::array();
  for (const auto& b : report.basis_checks)
    j["orthonormal"].push_back(
        json{{"basis", b.basis}, {"ok", b.ok}, {"witness", witness_to_json(b.witness)}});
  j["unbiased"] = json::array();
  for (const auto& p : report.pair_checks)
    j["unbiased"].push_back(json{{"first", p.first},
                                 {"second", p.second},
                                 {"ok", p.ok},
                                 {"witness", witness_to_json(p.witness)}});
  return j;
}

}  // namespace mubs
