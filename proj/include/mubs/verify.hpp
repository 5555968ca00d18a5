#pragma once

// Verification of orthonormality, unbiasedness, Hadamard structure,
// quadratic Gauss sums, basis equivalence, and counting bounds.
//
// The exact engine never touches floating point: for phase vectors u, v with
// exponents over a common conductor n, the unnormalized inner product is
// s = sum_x zeta^{v_x - u_x}.  Orthogonality asks s == 0, which is decided by
// reducing the exponent histogram modulo the cyclotomic polynomial.
// Unbiasedness asks |s|^2 == d; |s|^2 = sum_m c_m zeta^m where c is the
// cyclic autocorrelation of the histogram, so one more reduction decides it.
// A float engine with a tolerance is available for imported data.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mubs/basis.hpp"
#include "mubs/cyclotomic.hpp"
#include "mubs/exact_matrix.hpp"

namespace mubs {

enum class CheckMode { Exact, Float };

struct CheckOptions {
  CheckMode mode = CheckMode::Exact;
  double tol = 1e-10;                                   // float mode only
  int64_t conductor_cap = CycloContext::kMaxConductor;  // refuse larger inputs
};

struct Witness {
  int64_t vector_a = 0;  // index within the first basis
  int64_t vector_b = 0;  // index within the second basis
  std::string detail;
};

struct BasisCheck {
  int64_t basis = 0;
  bool ok = true;
  std::optional<Witness> witness;
};

struct PairCheck {
  int64_t first = 0;
  int64_t second = 0;
  bool ok = true;
  std::optional<Witness> witness;
};

enum class Verdict {
  Complete,        // every pair of the d+1 bases verified unbiased
  ClaimsVerified,  // all claimed pairs verified, but claims do not cover everything
  Violation,       // some claimed property failed
};

inline std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Complete: return "complete";
    case Verdict::ClaimsVerified: return "claims-verified";
    case Verdict::Violation: return "violation";
  }
  throw std::logic_error("verdict_name: bad enum");
}

struct VerificationReport {
  int64_t dimension = 0;
  int64_t basis_count = 0;
  CheckMode mode = CheckMode::Exact;
  double tol = 0.0;
  bool completeness_claimed = false;
  Verdict verdict = Verdict::Violation;
  std::vector<BasisCheck> basis_checks;
  std::vector<PairCheck> pair_checks;
};

namespace vdetail {

// Exact decisions about sums of roots of unity over one conductor.
class ExactEngine {
 public:
  explicit ExactEngine(int64_t conductor)
      : ctx_(cyclo_context(conductor)), n_(conductor), hist_(static_cast<size_t>(conductor)) {}

  const CycloContextPtr& context() const { return ctx_; }

  // s = sum_x zeta^{b_x - a_x} over all positions; true iff s == 0.
  bool orthogonal(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    fill_histogram(a, b);
    reduce_begin();
    for (const auto k : nonzero_)
      accumulate(hist_[static_cast<size_t>(k)], ctx_->reduced_power(k));
    return reduced_is_zero();
  }

  // True iff |s|^2 == target, decided via the autocorrelation of the
  // exponent histogram.
  bool modulus_squared_equals(const std::vector<int64_t>& a, const std::vector<int64_t>& b,
                              int64_t target) {
    fill_histogram(a, b);
    reduce_begin();
    // |s|^2 = sum_{k,l} h_k h_l zeta^{k-l}; group by m = k - l mod n.
    for (const auto k : nonzero_)
      for (const auto l : nonzero_) {
        const int64_t m = mod_pos(k - l, n_);
        accumulate(hist_[static_cast<size_t>(k)] * hist_[static_cast<size_t>(l)],
                    ctx_->reduced_power(m));
      }
    return reduced_equals_integer(target);
  }

 private:
  void fill_histogram(const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    for (const auto k : nonzero_) hist_[static_cast<size_t>(k)] = 0;
    nonzero_.clear();
    for (size_t x = 0; x < a.size(); ++x) {
      const int64_t k = mod_pos(b[x] - a[x], n_);
      if (hist_[static_cast<size_t>(k)]++ == 0) nonzero_.push_back(k);
    }
  }

  void reduce_begin() { red_.assign(static_cast<size_t>(ctx_->degree()), 0); }

  void accumulate(int64_t weight, std::span<const int64_t> row) {
    for (size_t t = 0; t < row.size(); ++t)
      red_[t] += static_cast<__int128>(weight) * row[t];
  }

  bool reduced_is_zero() const {
    for (const auto v : red_)
      if (v != 0) return false;
    return true;
  }

  bool reduced_equals_integer(int64_t target) const {
    if (red_[0] != target) return false;
    for (size_t t = 1; t < red_.size(); ++t)
      if (red_[t] != 0) return false;
    return true;
  }

  CycloContextPtr ctx_;
  int64_t n_;
  std::vector<int64_t> hist_;
  std::vector<int64_t> nonzero_;
  std::vector<__int128> red_;
};

inline std::vector<int64_t> scaled_exponents(const BasisVector& v, int64_t conductor) {
  if (conductor % v.conductor != 0)
    throw std::invalid_argument("scaled_exponents: conductor is not a multiple");
  const int64_t s = conductor / v.conductor;
  std::vector<int64_t> out(v.exponents.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = v.exponents[i] * s;
  return out;
}

inline double inner_product_abs(const BasisVector& u, const BasisVector& v) {
  std::complex<double> s = 0.0;
  for (int64_t x = 0; x < u.dimension; ++x) s += std::conj(u.amplitude(x)) * v.amplitude(x);
  return std::abs(s);
}

inline Witness make_witness(int64_t i, int64_t j, const BasisVector& u, const BasisVector& v,
                            double expected) {
  std::ostringstream os;
  os << "|<" << i << "|" << j << ">| = " << inner_product_abs(u, v) << ", expected " << expected;
  return Witness{i, j, os.str()};
}

}  // namespace vdetail

// Structural validation shared by both engines; throws on malformed input.
inline void validate_mub_set(const MubSet& set, const CheckOptions& options = {}) {
  if (set.dimension < 2) throw std::invalid_argument("mub set: dimension must be at least 2");
  if (set.conductor < 1 || set.conductor > options.conductor_cap)
    throw std::invalid_argument("mub set: conductor out of range");
  if (set.bases.empty()) throw std::invalid_argument("mub set: no bases");
  for (const auto& basis : set.bases) {
    if (static_cast<int64_t>(basis.vectors.size()) != set.dimension)
      throw std::invalid_argument("mub set: basis " + basis.label +
                                  " does not have d vectors");
    for (const auto& v : basis.vectors) {
      if (v.dimension != set.dimension)
        throw std::invalid_argument("mub set: vector dimension mismatch in " + basis.label);
      if (v.kind == VectorKind::Phase) {
        if (set.conductor % v.conductor != 0)
          throw std::invalid_argument("mub set: vector conductor does not divide the set's");
        for (const auto e : v.exponents)
          if (e < 0 || e >= v.conductor)
            throw std::invalid_argument("mub set: exponent out of range in " + basis.label);
      }
    }
  }
  const int64_t nb = static_cast<int64_t>(set.bases.size());
  for (const auto& [i, j] : set.claimed_pairs)
    if (i < 0 || j < 0 || i >= nb || j >= nb || i >= j)
      throw std::invalid_argument("mub set: claimed pair out of range");
}

// Orthonormality of one basis.  Exact mode: phase-vector norms are
// automatically d, so the content is pairwise orthogonality; unit vectors
// must sit at pairwise distinct positions, and a unit vector is never
// orthogonal to a phase vector (every amplitude of the latter is nonzero).
inline BasisCheck check_orthonormal(const Basis& basis, int64_t basis_index, int64_t conductor,
                                    const CheckOptions& options = {}) {
  BasisCheck out;
  out.basis = basis_index;
  vdetail::ExactEngine engine(conductor);
  std::vector<std::vector<int64_t>> scaled(basis.vectors.size());
  if (options.mode == CheckMode::Exact)
    for (size_t i = 0; i < basis.vectors.size(); ++i)
      if (basis.vectors[i].kind == VectorKind::Phase)
        scaled[i] = vdetail::scaled_exponents(basis.vectors[i], conductor);

  for (size_t i = 0; i < basis.vectors.size() && out.ok; ++i)
    for (size_t j = i + 1; j < basis.vectors.size() && out.ok; ++j) {
      const auto& u = basis.vectors[i];
      const auto& v = basis.vectors[j];
      bool orthogonal = false;
      if (options.mode == CheckMode::Float) {
        orthogonal = vdetail::inner_product_abs(u, v) <= options.tol;
      } else if (u.kind == VectorKind::Unit && v.kind == VectorKind::Unit) {
        orthogonal = u.unit_index != v.unit_index;
      } else if (u.kind == VectorKind::Phase && v.kind == VectorKind::Phase) {
        orthogonal = engine.orthogonal(scaled[i], scaled[j]);
      } else {
        orthogonal = false;  // unit against phase: inner product has modulus 1/sqrt(d)
      }
      if (!orthogonal) {
        out.ok = false;
        out.witness = vdetail::make_witness(static_cast<int64_t>(i), static_cast<int64_t>(j),
                                            u, v, 0.0);
      }
    }
  return out;
}

// Unbiasedness of two bases: |<u|v>| = 1/sqrt(d) for every cross pair.  On
// failure the witness is the worst offender, the failing pair of largest
// measured modulus (ties broken by scan order), so that a vector the two
// bases share is always the exhibited counterexample when one exists.
inline PairCheck check_unbiased(const Basis& first, const Basis& second, int64_t index_first,
                                int64_t index_second, int64_t conductor,
                                const CheckOptions& options = {}) {
  PairCheck out;
  out.first = index_first;
  out.second = index_second;
  const int64_t d = first.dimension();
  const double expected = 1.0 / std::sqrt(static_cast<double>(d));
  vdetail::ExactEngine engine(conductor);

  std::vector<std::vector<int64_t>> su(first.vectors.size()), sv(second.vectors.size());
  if (options.mode == CheckMode::Exact) {
    for (size_t i = 0; i < first.vectors.size(); ++i)
      if (first.vectors[i].kind == VectorKind::Phase)
        su[i] = vdetail::scaled_exponents(first.vectors[i], conductor);
    for (size_t j = 0; j < second.vectors.size(); ++j)
      if (second.vectors[j].kind == VectorKind::Phase)
        sv[j] = vdetail::scaled_exponents(second.vectors[j], conductor);
  }

  double worst = -1.0;
  for (size_t i = 0; i < first.vectors.size(); ++i)
    for (size_t j = 0; j < second.vectors.size(); ++j) {
      const auto& u = first.vectors[i];
      const auto& v = second.vectors[j];
      bool unbiased = false;
      if (options.mode == CheckMode::Float) {
        unbiased = std::abs(vdetail::inner_product_abs(u, v) - expected) <= options.tol;
      } else if (u.kind == VectorKind::Unit && v.kind == VectorKind::Unit) {
        unbiased = false;  // modulus is 0 or 1, never 1/sqrt(d) for d >= 2
      } else if (u.kind == VectorKind::Phase && v.kind == VectorKind::Phase) {
        unbiased = engine.modulus_squared_equals(su[i], sv[j], d);
      } else {
        unbiased = true;  // unit against phase: modulus is exactly 1/sqrt(d)
      }
      if (!unbiased) {
        out.ok = false;
        const double measured = vdetail::inner_product_abs(u, v);
        if (measured > worst) {
          worst = measured;
          out.witness = vdetail::make_witness(static_cast<int64_t>(i), static_cast<int64_t>(j),
                                              u, v, expected);
        }
      }
    }
  return out;
}

// Full verification pass: orthonormality of every basis plus unbiasedness of
// every claimed pair.
inline VerificationReport check_mub_set(const MubSet& set, const CheckOptions& options = {}) {
  validate_mub_set(set, options);
  VerificationReport report;
  report.dimension = set.dimension;
  report.basis_count = static_cast<int64_t>(set.bases.size());
  report.mode = options.mode;
  report.tol = options.tol;
  report.completeness_claimed = set.completeness_claimed;

  bool failed = false;
  for (size_t b = 0; b < set.bases.size(); ++b) {
    report.basis_checks.push_back(
        check_orthonormal(set.bases[b], static_cast<int64_t>(b), set.conductor, options));
    failed = failed || !report.basis_checks.back().ok;
  }
  for (const auto& [i, j] : set.claimed_pairs) {
    report.pair_checks.push_back(check_unbiased(set.bases[static_cast<size_t>(i)],
                                                set.bases[static_cast<size_t>(j)], i, j,
                                                set.conductor, options));
    failed = failed || !report.pair_checks.back().ok;
  }

  const int64_t nb = report.basis_count;
  const bool all_pairs_claimed =
      static_cast<int64_t>(set.claimed_pairs.size()) == nb * (nb - 1) / 2;
  if (failed)
    report.verdict = Verdict::Violation;
  else if (set.completeness_claimed && all_pairs_claimed && nb == set.dimension + 1)
    report.verdict = Verdict::Complete;
  else
    report.verdict = Verdict::ClaimsVerified;
  return report;
}

// Square matrix whose columns are the basis vectors, unnormalized (each
// phase amplitude is a root of unity; unit vectors contribute a 1).
inline ExactMatrix basis_matrix(const Basis& basis, int64_t conductor) {
  const int64_t d = basis.dimension();
  const auto ctx = cyclo_context(conductor);
  ExactMatrix mat(ctx, d, d);
  for (int64_t col = 0; col < d; ++col) {
    const auto& v = basis.vectors[static_cast<size_t>(col)];
    if (v.kind == VectorKind::Unit) {
      mat.at(v.unit_index, col) = CycloInt::integer(ctx, 1);
    } else {
      const auto scaled = vdetail::scaled_exponents(v, conductor);
      for (int64_t row = 0; row < d; ++row)
        mat.at(row, col) = CycloInt::root(ctx, scaled[static_cast<size_t>(row)]);
    }
  }
  return mat;
}

// Generalized Hadamard test: every entry satisfies e conj(e) == s and
// M^dagger M == (n s) I for an n x n matrix.  s = 1 is the plain Hadamard
// case; s = n covers unnormalized products of two Hadamard matrices.
inline bool hadamard_check(const ExactMatrix& m, const BigInt& entry_norm_squared = 1) {
  if (m.rows() != m.cols()) return false;
  const int64_t n = m.rows();
  const auto& ctx = m.context();
  const CycloInt target = CycloInt::integer(ctx, entry_norm_squared);
  for (int64_t r = 0; r < n; ++r)
    for (int64_t c = 0; c < n; ++c) {
      const CycloInt& e = m.at(r, c);
      if (e * e.conj() != target) return false;
    }
  return m.dagger() * m == ExactMatrix::scalar(ctx, n, CycloInt::integer(ctx, n * entry_norm_squared));
}

// Quadratic Gauss sum S(u, v, w) = sum_{k=0}^{|w|-1} exp(i pi (u k^2 + v k) / w)
// as an exact element of Z[zeta_{2|w|}].  Requires u w != 0, gcd(u, w) = 1,
// and u w + v even; under these conditions |S|^2 = |w|.
inline CycloInt gauss_sum(int64_t u, int64_t v, int64_t w) {
  if (u == 0 || w == 0) throw std::invalid_argument("gauss_sum: u and w must be nonzero");
  if (std::gcd(u, w) != 1) throw std::invalid_argument("gauss_sum: u and w must be coprime");
  if (mod_pos(u * w + v, 2) != 0) throw std::invalid_argument("gauss_sum: u w + v must be even");
  const int64_t W = w < 0 ? -w : w;
  const auto ctx = cyclo_context(2 * W);
  CycloInt s = CycloInt::zero(ctx);
  for (int64_t k = 0; k < W; ++k) {
    const int64_t raw = u * k * k + v * k;
    s = s + CycloInt::root(ctx, mod_pos(w > 0 ? raw : -raw, 2 * W));
  }
  return s;
}

inline BigInt gauss_sum_modulus_squared(int64_t u, int64_t v, int64_t w) {
  const CycloInt s = gauss_sum(u, v, w);
  const CycloInt m = s * s.conj();
  if (!m.is_integer()) throw std::logic_error("gauss_sum: |S|^2 is not an integer");
  return m.as_integer();
}

// Equality of two bases up to vector order and global phases:
// to.vectors[j] == zeta^{phase_exponents[j]} * from.vectors[permutation[j]]
// over the common conductor.  Matching is greedy in index order, taking the
// first unused source vector.
struct Equivalence {
  std::vector<int64_t> permutation;
  std::vector<int64_t> phase_exponents;
  int64_t conductor = 1;
};

inline std::optional<Equivalence> bases_equivalent(const Basis& from, const Basis& to) {
  if (from.vectors.size() != to.vectors.size() || from.dimension() != to.dimension())
    return std::nullopt;
  const int64_t d = from.dimension();
  int64_t L = 1;
  for (const auto& v : from.vectors) L = std::lcm(L, v.conductor);
  for (const auto& v : to.vectors) L = std::lcm(L, v.conductor);

  // zeta^t * u == v test; returns t on success.
  auto phase_match = [&](const BasisVector& u, const BasisVector& v) -> std::optional<int64_t> {
    if (u.kind != v.kind) return std::nullopt;
    if (u.kind == VectorKind::Unit)
      return u.unit_index == v.unit_index ? std::optional<int64_t>(0) : std::nullopt;
    const auto eu = vdetail::scaled_exponents(u, L);
    const auto ev = vdetail::scaled_exponents(v, L);
    const int64_t t = mod_pos(ev[0] - eu[0], L);
    for (int64_t x = 1; x < d; ++x)
      if (mod_pos(ev[static_cast<size_t>(x)] - eu[static_cast<size_t>(x)], L) != t)
        return std::nullopt;
    return t;
  };

  Equivalence eq;
  eq.conductor = L;
  eq.permutation.assign(to.vectors.size(), -1);
  eq.phase_exponents.assign(to.vectors.size(), 0);
  std::vector<bool> used(from.vectors.size(), false);
  for (size_t j = 0; j < to.vectors.size(); ++j) {
    bool found = false;
    for (size_t i = 0; i < from.vectors.size() && !found; ++i) {
      if (used[i]) continue;
      if (const auto t = phase_match(from.vectors[i], to.vectors[j])) {
        used[i] = true;
        eq.permutation[j] = static_cast<int64_t>(i);
        eq.phase_exponents[j] = *t;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  return eq;
}

// Known bounds on the number of mutually unbiased bases in dimension d:
// with d = prod p_i^{m_i}, at least min(p_i^{m_i}) + 1 and at most d + 1,
// attained (d + 1) whenever d is a prime power.
struct MubBounds {
  int64_t dimension = 0;
  int64_t lower = 0;
  int64_t upper = 0;
  bool exact = false;  // lower == upper == d + 1
  std::vector<std::pair<int64_t, int64_t>> factorization;
};

inline MubBounds mub_bounds(int64_t d) {
  if (d < 2) throw std::invalid_argument("mub_bounds: dimension must be at least 2");
  MubBounds out;
  out.dimension = d;
  out.upper = d + 1;
  out.factorization = factorize(d);
  int64_t min_power = d;
  for (const auto& [p, e] : out.factorization) {
    int64_t pe = 1;
    for (int64_t k = 0; k < e; ++k) pe *= p;
    min_power = std::min(min_power, pe);
  }
  out.lower = min_power + 1;
  out.exact = out.factorization.size() == 1;
  return out;
}

}  // namespace mubs
