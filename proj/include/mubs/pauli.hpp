#pragma once

// Generalized Pauli (Heisenberg-Weyl) operators in dimension d.
//
// X is the cyclic shift, Z the diagonal clock matrix, both over zeta_d, with
// XZ = omega ZX.  Group elements are labels (a, b, c) representing
// omega^a X^b Z^c with all components mod d; multiplication and inversion
// are done on labels and can be cross-checked against exact matrices.  For
// prime d the d^2 - 1 non-identity operators X^a Z^b split into d + 1
// commuting classes, one per basis of the complete MUB set.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "mubs/basis.hpp"
#include "mubs/constructions.hpp"
#include "mubs/cyclotomic.hpp"
#include "mubs/exact_matrix.hpp"

namespace mubs {

// omega^a X^b Z^c with a, b, c taken mod d.
struct PauliLabel {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
  friend bool operator==(const PauliLabel&, const PauliLabel&) = default;
  friend auto operator<=>(const PauliLabel&, const PauliLabel&) = default;
};

inline PauliLabel pauli_normalized(int64_t d, PauliLabel g) {
  return {mod_pos(g.a, d), mod_pos(g.b, d), mod_pos(g.c, d)};
}

// (omega^a X^b Z^c)(omega^e X^f Z^g) = omega^{a + e - c f} X^{b + f} Z^{c + g}.
inline PauliLabel pauli_mul(int64_t d, PauliLabel g, PauliLabel h) {
  return pauli_normalized(d, {g.a + h.a - g.c * h.b, g.b + h.b, g.c + h.c});
}

inline PauliLabel pauli_inverse(int64_t d, PauliLabel g) {
  return pauli_normalized(d, {-g.a - g.c * g.b, -g.b, -g.c});
}

// Cyclic shift X = V_0 and clock Z = V_0^dagger V_1 = diag(omega^n), over zeta_d.
inline ExactMatrix matrix_X(int64_t d) { return matrix_Va(d, 0); }

inline ExactMatrix matrix_Z(int64_t d) {
  const auto ctx = cyclo_context(d);
  ExactMatrix mat(ctx, d, d);
  for (int64_t n = 0; n < d; ++n) mat.at(n, n) = CycloInt::root(ctx, n);
  return mat;
}

inline std::pair<ExactMatrix, ExactMatrix> weyl_pair(int64_t d) {
  return {matrix_X(d), matrix_Z(d)};
}

// Exact matrix of omega^a X^b Z^c: entry omega^{a + c y} at row (y - b mod d),
// column y, since X is the down-shift X|y> = |y - 1> (the convention under
// which XZ = omega ZX and the label product above both hold).
inline ExactMatrix pauli_matrix(int64_t d, PauliLabel g) {
  g = pauli_normalized(d, g);
  const auto ctx = cyclo_context(d);
  ExactMatrix mat(ctx, d, d);
  for (int64_t y = 0; y < d; ++y)
    mat.at(mod_pos(y - g.b, d), y) = CycloInt::root(ctx, mod_pos(g.a + g.c * y, d));
  return mat;
}

// Commutation of U_ab = X^a Z^b and U_ef = X^e Z^f is governed by
// a f - b e mod d: zero means commuting, d/2 (d even) means anticommuting.
inline bool pauli_commute(int64_t d, int64_t a, int64_t b, int64_t e, int64_t f) {
  return mod_pos(a * f - b * e, d) == 0;
}

inline bool pauli_anticommute(int64_t d, int64_t a, int64_t b, int64_t e, int64_t f) {
  return d % 2 == 0 && mod_pos(a * f - b * e, d) == d / 2;
}

// All d^3 group elements.
inline std::vector<PauliLabel> pauli_group(int64_t d) {
  std::vector<PauliLabel> out;
  out.reserve(static_cast<size_t>(d * d * d));
  for (int64_t a = 0; a < d; ++a)
    for (int64_t b = 0; b < d; ++b)
      for (int64_t c = 0; c < d; ++c) out.push_back({a, b, c});
  return out;
}

namespace detail {

// Closure of a generating set under the label product.
inline std::vector<PauliLabel> generated_subgroup(int64_t d, std::vector<PauliLabel> gens) {
  std::set<PauliLabel> seen;
  std::vector<PauliLabel> frontier;
  auto push = [&](PauliLabel g) {
    if (seen.insert(g).second) frontier.push_back(g);
  };
  push(pauli_normalized(d, {0, 0, 0}));
  for (auto g : gens) push(pauli_normalized(d, g));
  while (!frontier.empty()) {
    const PauliLabel g = frontier.back();
    frontier.pop_back();
    push(pauli_inverse(d, g));
    for (const auto& h : seen) {
      push(pauli_mul(d, g, h));
      push(pauli_mul(d, h, g));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// Subgroup generated by all commutators g h g^{-1} h^{-1}.
inline std::vector<PauliLabel> commutator_subgroup(int64_t d) {
  const auto group = pauli_group(d);
  std::vector<PauliLabel> gens;
  for (const auto& g : group)
    for (const auto& h : group) {
      const PauliLabel c = pauli_mul(
          d, pauli_mul(d, g, h), pauli_mul(d, pauli_inverse(d, g), pauli_inverse(d, h)));
      if (!(c == PauliLabel{0, 0, 0})) gens.push_back(c);
    }
  return detail::generated_subgroup(d, std::move(gens));
}

// gamma_1 = P_d, gamma_{k+1} = [gamma_k, P_d]; the series reaches {1} after
// gamma_3 because gamma_2 lies in the center {omega^a I}.
inline std::vector<std::vector<PauliLabel>> lower_central_series(int64_t d) {
  const auto group = pauli_group(d);
  std::vector<std::vector<PauliLabel>> series;
  series.push_back(group);
  while (series.back().size() > 1) {
    std::vector<PauliLabel> gens;
    for (const auto& g : series.back())
      for (const auto& h : group) {
        const PauliLabel c = pauli_mul(
            d, pauli_mul(d, g, h), pauli_mul(d, pauli_inverse(d, g), pauli_inverse(d, h)));
        if (!(c == PauliLabel{0, 0, 0})) gens.push_back(c);
      }
    auto next = detail::generated_subgroup(d, std::move(gens));
    if (next.size() == series.back().size())
      throw std::logic_error("lower_central_series: series does not descend");
    series.push_back(std::move(next));
  }
  return series;
}

// For prime p: the d + 1 commuting classes of non-identity X^a Z^b labels
// as (a, b) pairs.  Class 0 is {Z^a}, class 1 is {X^a}, class k + 1 is
// {X^a Z^{ka}} for k = 1..p-1.
inline std::vector<std::vector<std::pair<int64_t, int64_t>>> commuting_classes(int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("commuting_classes: p must be prime");
  std::vector<std::vector<std::pair<int64_t, int64_t>>> classes;
  std::vector<std::pair<int64_t, int64_t>> z_class;
  for (int64_t a = 1; a < p; ++a) z_class.emplace_back(0, a);
  classes.push_back(std::move(z_class));
  for (int64_t k = 0; k < p; ++k) {
    std::vector<std::pair<int64_t, int64_t>> cls;
    for (int64_t a = 1; a < p; ++a) cls.emplace_back(a, mod_pos(k * a, p));
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Certifies the class <-> basis correspondence behind the prime-dimension
// MUB set: every master vector |a alpha> is an eigenvector of V_a = X Z^a
// with eigenvalue zeta_{2d}^{(d-1)a - 2 alpha}, and every computational
// vector is an eigenvector of Z.
inline bool classes_match_bases(int64_t d) {
  const auto ctx2d = cyclo_context(2 * d);
  const MubSet set = mub_master(d);
  for (int64_t a = 0; a < d; ++a) {
    const ExactMatrix va = matrix_Va(d, a).embedded(ctx2d);
    for (int64_t alpha = 0; alpha < d; ++alpha) {
      const auto& vec = set.bases[static_cast<size_t>(a)].vectors[static_cast<size_t>(alpha)];
      std::vector<CycloInt> phi;
      for (int64_t n = 0; n < d; ++n) phi.push_back(CycloInt::root(ctx2d, vec.exponents[n]));
      const auto image = va.apply(phi);
      const CycloInt eig = CycloInt::root(ctx2d, mod_pos((d - 1) * a - 2 * alpha, 2 * d));
      for (int64_t n = 0; n < d; ++n)
        if (image[static_cast<size_t>(n)] != eig * phi[static_cast<size_t>(n)]) return false;
    }
  }
  const ExactMatrix z = matrix_Z(d);
  const auto ctxd = cyclo_context(d);
  for (int64_t x = 0; x < d; ++x) {
    std::vector<CycloInt> e(static_cast<size_t>(d), CycloInt::zero(ctxd));
    e[static_cast<size_t>(x)] = CycloInt::integer(ctxd, 1);
    const auto image = z.apply(e);
    for (int64_t n = 0; n < d; ++n)
      if (image[static_cast<size_t>(n)] != CycloInt::root(ctxd, x) * e[static_cast<size_t>(n)])
        return false;
  }
  return true;
}

// Exact check of the product rule
//   U_ab U_ef -+ U_ef U_ab = (omega^{-be} -+ omega^{-af}) U_{a+e, b+f}
// for all label pairs in dimension d.
inline bool structure_constants_hold(int64_t d) {
  const auto ctx = cyclo_context(d);
  std::vector<std::vector<ExactMatrix>> u;
  for (int64_t a = 0; a < d; ++a) {
    u.emplace_back();
    for (int64_t b = 0; b < d; ++b) u.back().push_back(pauli_matrix(d, {0, a, b}));
  }
  for (int64_t a = 0; a < d; ++a)
    for (int64_t b = 0; b < d; ++b)
      for (int64_t e = 0; e < d; ++e)
        for (int64_t f = 0; f < d; ++f) {
          const ExactMatrix gh = u[a][b] * u[e][f];
          const ExactMatrix hg = u[e][f] * u[a][b];
          const auto& sum = u[mod_pos(a + e, d)][mod_pos(b + f, d)];
          const CycloInt wbe = CycloInt::root(ctx, mod_pos(-b * e, d));
          const CycloInt waf = CycloInt::root(ctx, mod_pos(-a * f, d));
          if (gh + hg != sum.scaled(wbe + waf)) return false;
          if (gh + hg.scaled(CycloInt::integer(ctx, -1)) != sum.scaled(wbe - waf)) return false;
        }
  return true;
}

}  // namespace mubs
