#pragma once

// Constructions of mutually unbiased bases.
//
//  - mub_master(d):      d phase bases over zeta_{2d} plus the computational
//                        basis, from a single exponent formula valid for any
//                        d >= 2 (complete set exactly when d is prime).
//  - mub_alternative(p): p phase bases over zeta_p plus the computational
//                        basis, from the quadratic exponent (an + alpha)n.
//                        Genuinely unbiased only for odd primes; p = 2 is
//                        constructed anyway so a verifier can exhibit the
//                        failure.
//  - mub_gf(p, m):       complete set of p^m + 1 bases in dimension p^m from
//                        trace sums over GF(p^m), odd p.
//  - mub_gr(m):          complete set of 2^m + 1 bases in dimension 2^m from
//                        trace sums over the Galois ring GR(4, m).
//  - mub_w4():           the five d = 4 bases obtained from tensor products
//                        of the d = 2 master-formula bases, with the two
//                        entangled bases rebuilt from lambda/mu combinations.
//
// Also provides the cyclic-shift matrix V_a, the Hadamard matrix H_a whose
// columns are the B_a vectors, and the permutation P that diagonalizes V_a,
// all as exact matrices.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mubs/basis.hpp"
#include "mubs/cyclotomic.hpp"
#include "mubs/exact_matrix.hpp"
#include "mubs/galois_field.hpp"
#include "mubs/galois_ring.hpp"

namespace mubs {

namespace detail {

inline std::vector<std::pair<int64_t, int64_t>> all_pairs(int64_t count) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t i = 0; i < count; ++i)
    for (int64_t j = i + 1; j < count; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace detail

// Which pairs a set with this method/shape asserts as unbiased, and whether
// it asserts completeness.  Used both by the generators and when importing.
inline std::vector<std::pair<int64_t, int64_t>> claimed_pairs_for(MubMethod method, int64_t d,
                                                                  int64_t basis_count) {
  if (method == MubMethod::Master && !is_prime(d) && basis_count == d + 1)
    return {{0, 1}, {0, d}, {1, d}};
  return detail::all_pairs(basis_count);
}

inline bool completeness_claim_for(MubMethod method, int64_t d, int64_t basis_count) {
  if (basis_count != d + 1) return false;
  switch (method) {
    case MubMethod::Master: return is_prime(d);
    case MubMethod::Alternative: return d != 2;
    case MubMethod::GaloisField:
    case MubMethod::GaloisRing:
    case MubMethod::WBases: return true;
  }
  return false;
}

// Exponent of the master formula at position n for basis a, vector alpha,
// over zeta_{2d}: (n+1)(d-n-1)a - 2(n+1)alpha  (mod 2d).
inline int64_t master_exponent(int64_t d, int64_t a, int64_t alpha, int64_t n) {
  return mod_pos((n + 1) * (d - n - 1) * a - 2 * (n + 1) * alpha, 2 * d);
}

// d phase bases B_0..B_{d-1} plus the computational basis B_d, in dimension
// d >= 2, over zeta_{2d}.  For prime d all pairs are claimed unbiased; for
// composite d only the guaranteed triple {B_0, B_1, B_d} is claimed.
inline MubSet mub_master(int64_t d) {
  if (d < 2) throw std::invalid_argument("mub_master: dimension must be at least 2");
  MubSet set;
  set.dimension = d;
  set.conductor = 2 * d;
  set.method = MubMethod::Master;
  set.completeness_claimed = is_prime(d);
  for (int64_t a = 0; a < d; ++a) {
    Basis basis;
    basis.label = "B_" + std::to_string(a);
    for (int64_t alpha = 0; alpha < d; ++alpha) {
      std::vector<int64_t> exps(static_cast<size_t>(d));
      for (int64_t n = 0; n < d; ++n) exps[n] = master_exponent(d, a, alpha, n);
      basis.vectors.push_back(BasisVector::phase(d, 2 * d, std::move(exps)));
    }
    set.bases.push_back(std::move(basis));
  }
  set.bases.push_back(Basis::computational(d, "B_" + std::to_string(d)));
  set.claimed_pairs = claimed_pairs_for(set.method, d, d + 1);
  return set;
}

// p phase bases plus the computational basis over zeta_p, from the exponent
// (an + alpha)n mod p.  All pairs are claimed; the claim is honest only for
// odd p (for p = 2 two of the bases share vectors, which a verifier reports).
inline MubSet mub_alternative(int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("mub_alternative: p must be prime");
  MubSet set;
  set.dimension = p;
  set.conductor = p;
  set.method = MubMethod::Alternative;
  set.completeness_claimed = p != 2;
  for (int64_t a = 0; a < p; ++a) {
    Basis basis;
    basis.label = "B_" + std::to_string(a);
    for (int64_t alpha = 0; alpha < p; ++alpha) {
      std::vector<int64_t> exps(static_cast<size_t>(p));
      for (int64_t n = 0; n < p; ++n) exps[n] = mod_pos((a * n + alpha) * n, p);
      basis.vectors.push_back(BasisVector::phase(p, p, std::move(exps)));
    }
    set.bases.push_back(std::move(basis));
  }
  set.bases.push_back(Basis::computational(p, "B_" + std::to_string(p)));
  set.claimed_pairs = detail::all_pairs(p + 1);
  return set;
}

// Complete set of p^m + 1 bases in dimension q = p^m (p an odd prime) over
// zeta_p.  Basis a, vector alpha, position x (all ranging over GF(q) in
// lexicographic order) carries the exponent Tr(a x^2) + Tr(alpha x) mod p.
inline MubSet mub_gf(int64_t p, int64_t m,
                     std::optional<std::vector<int64_t>> modulus_lower = std::nullopt) {
  if (p == 2)
    throw std::invalid_argument(
        "mub_gf: p must be an odd prime; characteristic 2 needs the Galois-ring "
        "construction (mub_gr)");
  GfFieldPtr field = modulus_lower ? GfField::make(p, m, *modulus_lower) : GfField::make(p, m);
  const int64_t q = field->q();
  const auto elements = field->enumerate_lex();

  MubSet set;
  set.dimension = q;
  set.conductor = p;
  set.method = MubMethod::GaloisField;
  set.completeness_claimed = true;
  set.field = FieldInfo{p, m, field->modulus()};
  for (int64_t ia = 0; ia < q; ++ia) {
    const GfElement a = elements[static_cast<size_t>(ia)];
    Basis basis;
    basis.label = "B_" + std::to_string(ia);
    for (int64_t ial = 0; ial < q; ++ial) {
      const GfElement alpha = elements[static_cast<size_t>(ial)];
      std::vector<int64_t> exps(static_cast<size_t>(q));
      for (int64_t ix = 0; ix < q; ++ix) {
        const GfElement x = elements[static_cast<size_t>(ix)];
        const int64_t e = field->trace(field->mul(a, field->mul(x, x))) +
                          field->trace(field->mul(alpha, x));
        exps[ix] = mod_pos(e, p);
      }
      basis.vectors.push_back(BasisVector::phase(q, p, std::move(exps)));
    }
    set.bases.push_back(std::move(basis));
  }
  set.bases.push_back(Basis::computational(q, "B_" + std::to_string(q)));
  set.claimed_pairs = detail::all_pairs(q + 1);
  return set;
}

// Complete set of 2^m + 1 bases in dimension 2^m over zeta_4.  Basis a,
// vector alpha and position x all range over the Teichmuller set of GR(4, m)
// in the order [0, beta, beta^2, ..., beta^{2^m - 1} = 1]; the exponent is
// the ring trace Tr(x (a + 2 alpha)) in Z_4.
inline MubSet mub_gr(int64_t m) {
  GaloisRingPtr ring = GaloisRing::make(m);
  const auto& teich = ring->teichmuller();
  const int64_t d = ring->teich_size();

  MubSet set;
  set.dimension = d;
  set.conductor = 4;
  set.method = MubMethod::GaloisRing;
  set.completeness_claimed = true;
  set.ring = RingInfo{m, ring->basic_irreducible()};
  const GrElement two = ring->two();
  for (int64_t ia = 0; ia < d; ++ia) {
    const GrElement a = teich[static_cast<size_t>(ia)];
    Basis basis;
    basis.label = "B_" + std::to_string(ia);
    for (int64_t ial = 0; ial < d; ++ial) {
      const GrElement shift = ring->add(a, ring->mul(two, teich[static_cast<size_t>(ial)]));
      std::vector<int64_t> exps(static_cast<size_t>(d));
      for (int64_t ix = 0; ix < d; ++ix)
        exps[ix] = ring->trace(ring->mul(teich[static_cast<size_t>(ix)], shift));
      basis.vectors.push_back(BasisVector::phase(d, 4, std::move(exps)));
    }
    set.bases.push_back(std::move(basis));
  }
  set.bases.push_back(Basis::computational(d, "B_" + std::to_string(d)));
  set.claimed_pairs = detail::all_pairs(d + 1);
  return set;
}

// The five d = 4 bases W_00, W_11, W_01, W_10, B_4 over zeta_8.
//
// W_aa vectors are plain tensor products |a alpha> (x) |a beta> of the d = 2
// phase vectors; the entangled bases combine two tensor products with the
// weights lambda = (1 - i)/2 and mu = (1 + i)/2, which always collapses each
// amplitude to a single root of unity.  Every vector is rescaled by a global
// phase so its amplitude at position 0 equals +1.
inline MubSet mub_w4() {
  const auto ctx8 = cyclo_context(8);
  // d = 2 master vectors as zeta_8 exponents (conductor 4 scaled by 2):
  // row [a][alpha][n].
  int64_t q2[2][2][2];
  for (int64_t a = 0; a < 2; ++a)
    for (int64_t alpha = 0; alpha < 2; ++alpha)
      for (int64_t n = 0; n < 2; ++n) q2[a][alpha][n] = 2 * master_exponent(2, a, alpha, n);

  const CycloInt two_lambda = CycloInt::integer(ctx8, 1) - CycloInt::root(ctx8, 2);  // 1 - i
  const CycloInt two_mu = CycloInt::integer(ctx8, 1) + CycloInt::root(ctx8, 2);      // 1 + i

  // Exponent array of one W vector, before phase normalization.
  // Positions are (x, y) -> 2x + y for the two 2-state factors.
  auto product_vector = [&](int64_t a1, int64_t alpha1, int64_t a2, int64_t alpha2) {
    std::vector<int64_t> exps(4);
    for (int64_t x = 0; x < 2; ++x)
      for (int64_t y = 0; y < 2; ++y)
        exps[2 * x + y] = mod_pos(q2[a1][alpha1][x] + q2[a2][alpha2][y], 8);
    return exps;
  };
  auto combined_vector = [&](int64_t a, int64_t alpha, int64_t beta) {
    const auto t1 = product_vector(a, alpha, 1 - a, beta);
    const auto t2 = product_vector(a, 1 - alpha, 1 - a, 1 - beta);
    std::vector<int64_t> exps(4);
    for (int64_t pos = 0; pos < 4; ++pos) {
      // 2 * amplitude = (1 - i) zeta^e1 + (1 + i) zeta^e2, always 2 zeta^e.
      CycloInt v = two_lambda * CycloInt::root(ctx8, t1[pos]) +
                   two_mu * CycloInt::root(ctx8, t2[pos]);
      const auto root = v.divided_by(2).as_root_of_unity();
      if (!root) throw std::logic_error("mub_w4: amplitude did not collapse to a single root");
      exps[pos] = *root;
    }
    return exps;
  };
  auto normalize_leading = [](std::vector<int64_t> exps) {
    const int64_t lead = exps[0];
    for (auto& e : exps) e = mod_pos(e - lead, 8);
    return exps;
  };

  MubSet set;
  set.dimension = 4;
  set.conductor = 8;
  set.method = MubMethod::WBases;
  set.completeness_claimed = true;

  for (int64_t a = 0; a < 2; ++a) {  // W_00 then W_11
    Basis basis;
    basis.label = "W_" + std::to_string(a) + std::to_string(a);
    for (int64_t alpha = 0; alpha < 2; ++alpha)
      for (int64_t beta = 0; beta < 2; ++beta)
        basis.vectors.push_back(
            BasisVector::phase(4, 8, normalize_leading(product_vector(a, alpha, a, beta))));
    set.bases.push_back(std::move(basis));
  }
  for (int64_t a = 0; a < 2; ++a) {  // W_01 then W_10
    Basis basis;
    basis.label = "W_" + std::to_string(a) + std::to_string(1 - a);
    for (int64_t alpha = 0; alpha < 2; ++alpha)
      for (int64_t beta = 0; beta < 2; ++beta)
        basis.vectors.push_back(
            BasisVector::phase(4, 8, normalize_leading(combined_vector(a, alpha, beta))));
    set.bases.push_back(std::move(basis));
  }
  set.bases.push_back(Basis::computational(4, "B_4"));
  set.claimed_pairs = detail::all_pairs(5);
  return set;
}

// The cyclic-shift matrix V_a over zeta_d: entry omega^{(n+1)a} at
// (n, n+1) for n = 0..d-2 and 1 at (d-1, 0).  Its eigenvectors are the B_a
// vectors.
inline ExactMatrix matrix_Va(int64_t d, int64_t a) {
  const auto ctx = cyclo_context(d);
  ExactMatrix mat(ctx, d, d);
  for (int64_t n = 0; n + 1 < d; ++n)
    mat.at(n, n + 1) = CycloInt::root(ctx, mod_pos((n + 1) * a, d));
  mat.at(d - 1, 0) = CycloInt::integer(ctx, 1);
  return mat;
}

// The generalized Hadamard matrix H_a over zeta_{2d} whose column alpha is
// the (unnormalized) vector |a alpha>; H_a^dagger H_a = d I.
inline ExactMatrix matrix_Ha(int64_t d, int64_t a) {
  const auto ctx = cyclo_context(2 * d);
  ExactMatrix mat(ctx, d, d);
  for (int64_t n = 0; n < d; ++n)
    for (int64_t alpha = 0; alpha < d; ++alpha)
      mat.at(n, alpha) = CycloInt::root(ctx, master_exponent(d, a, alpha, n));
  return mat;
}

// Permutation with row 0 -> column 0 and row j -> column d - j for j >= 1;
// (H_a P)^dagger V_a (H_a P) is diagonal.
inline ExactMatrix perm_P(int64_t d) {
  const auto ctx = cyclo_context(2 * d);
  ExactMatrix mat(ctx, d, d);
  mat.at(0, 0) = CycloInt::integer(ctx, 1);
  for (int64_t j = 1; j < d; ++j) mat.at(j, d - j) = CycloInt::integer(ctx, 1);
  return mat;
}

}  // namespace mubs
