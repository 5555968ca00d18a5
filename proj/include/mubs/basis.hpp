#pragma once

// Data model for bases and sets of mutually unbiased bases.
//
// A phase-form basis vector in dimension d stores one integer exponent per
// position: amplitude at position x is zeta_n^{k_x} / sqrt(d), with the
// conductor n recorded on the vector.  A unit-form vector is a computational
// basis vector e_x.  A MubSet carries d+1 (or fewer) labeled bases, the
// construction that produced it, optional field/ring metadata, and the list
// of basis pairs whose unbiasedness the construction claims.

#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mubs/cyclotomic.hpp"

namespace mubs {

enum class VectorKind { Phase, Unit };

struct BasisVector {
  int64_t dimension = 0;
  int64_t conductor = 1;
  VectorKind kind = VectorKind::Phase;
  std::vector<int64_t> exponents;  // kind == Phase: size d, values in [0, conductor)
  int64_t unit_index = 0;          // kind == Unit

  static BasisVector phase(int64_t d, int64_t conductor, std::vector<int64_t> exps) {
    if (static_cast<int64_t>(exps.size()) != d)
      throw std::invalid_argument("BasisVector::phase: exponent count must equal the dimension");
    BasisVector v;
    v.dimension = d;
    v.conductor = conductor;
    v.kind = VectorKind::Phase;
    for (auto& e : exps) e = mod_pos(e, conductor);
    v.exponents = std::move(exps);
    return v;
  }

  static BasisVector unit(int64_t d, int64_t x) {
    if (x < 0 || x >= d) throw std::invalid_argument("BasisVector::unit: index out of range");
    BasisVector v;
    v.dimension = d;
    v.conductor = 1;
    v.kind = VectorKind::Unit;
    v.unit_index = x;
    return v;
  }

  // Amplitude at position x including the 1/sqrt(d) normalization.
  std::complex<double> amplitude(int64_t x) const {
    if (x < 0 || x >= dimension) throw std::out_of_range("BasisVector::amplitude: position out of range");
    if (kind == VectorKind::Unit) return x == unit_index ? 1.0 : 0.0;
    const double arg = 2.0 * std::numbers::pi * static_cast<double>(exponents[x]) / static_cast<double>(conductor);
    return std::complex<double>(std::cos(arg), std::sin(arg)) / std::sqrt(static_cast<double>(dimension));
  }

  std::vector<std::complex<double>> amplitudes() const {
    std::vector<std::complex<double>> out(static_cast<size_t>(dimension));
    for (int64_t x = 0; x < dimension; ++x) out[x] = amplitude(x);
    return out;
  }

  friend bool operator==(const BasisVector& a, const BasisVector& b) = default;
};

struct Basis {
  std::string label;
  std::vector<BasisVector> vectors;

  int64_t dimension() const { return vectors.empty() ? 0 : vectors.front().dimension; }

  bool is_computational() const {
    for (const auto& v : vectors)
      if (v.kind != VectorKind::Unit) return false;
    return !vectors.empty();
  }

  // Computational basis |0>, ..., |d-1>.
  static Basis computational(int64_t d, std::string label) {
    Basis b;
    b.label = std::move(label);
    for (int64_t x = 0; x < d; ++x) b.vectors.push_back(BasisVector::unit(d, x));
    return b;
  }
};

enum class MubMethod { Master, Alternative, GaloisField, GaloisRing, WBases };

inline std::string method_name(MubMethod m) {
  switch (m) {
    case MubMethod::Master: return "master";
    case MubMethod::Alternative: return "alternative";
    case MubMethod::GaloisField: return "gf";
    case MubMethod::GaloisRing: return "gr";
    case MubMethod::WBases: return "w4";
  }
  throw std::logic_error("method_name: bad enum");
}

inline MubMethod method_from_name(const std::string& s) {
  if (s == "master") return MubMethod::Master;
  if (s == "alternative") return MubMethod::Alternative;
  if (s == "gf") return MubMethod::GaloisField;
  if (s == "gr") return MubMethod::GaloisRing;
  if (s == "w4") return MubMethod::WBases;
  throw std::invalid_argument("unknown construction method: " + s);
}

struct FieldInfo {
  int64_t p = 0;
  int64_t m = 0;
  std::vector<int64_t> modulus;  // monic, constant first, length m+1
  friend bool operator==(const FieldInfo&, const FieldInfo&) = default;
};

struct RingInfo {
  int64_t m = 0;
  std::vector<int64_t> basic_irreducible;  // monic over Z_4, constant first
  friend bool operator==(const RingInfo&, const RingInfo&) = default;
};

struct MubSet {
  int64_t dimension = 0;
  int64_t conductor = 1;
  MubMethod method = MubMethod::Master;
  bool completeness_claimed = false;
  std::optional<FieldInfo> field;
  std::optional<RingInfo> ring;
  std::vector<Basis> bases;
  // Pairs (i, j), i < j, whose unbiasedness the construction asserts.
  // Orthonormality of every basis is always asserted.
  std::vector<std::pair<int64_t, int64_t>> claimed_pairs;

  const Basis& basis_by_label(const std::string& label) const {
    for (const auto& b : bases)
      if (b.label == label) return b;
    throw std::invalid_argument("MubSet: no basis labeled " + label);
  }
};

}  // namespace mubs
