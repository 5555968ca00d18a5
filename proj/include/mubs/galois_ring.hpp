#pragma once

// Galois rings GR(4, m) = Z_4[xi] / <P_m(xi)>.
//
// P_m is a monic basic irreducible polynomial: its mod-2 reduction is the
// degree-m seed polynomial over F_2, and it is lifted so that the class
// beta of xi satisfies beta^{2^m - 1} = 1.  The lift runs the Graeffe
// root-squaring step f(x) f(-x) = (-1)^m g(x^2) to a fixed point, which
// replaces the roots by Teichmuller units while preserving the reduction
// mod 2.  The Teichmuller set T_m = {0} u {beta^j} is a transversal of the
// residue field; every x decomposes uniquely as x = a + 2b with a, b in T_m,
// the generalized Frobenius is phi(a + 2b) = a^2 + 2b^2, and the trace is
// Tr = sum of Frobenius powers, landing in Z_4.
//
// Seed choice: the lexicographically smallest monic f over F_2 (coefficient
// tuple c_0..c_{m-1}, c_0 most significant) such that x has multiplicative
// order exactly 2^m - 1 modulo f.  The order condition forces f irreducible
// and primitive, which the beta invariant requires; for every m <= 6 it
// picks the lexicographically smallest irreducible as well (m = 1: x + 1,
// m = 2: x^2 + x + 1, m = 3: x^3 + x^2 + 1, m = 4: x^4 + x^3 + 1).

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "mubs/cyclotomic.hpp"

namespace mubs {

class GaloisRing;
using GaloisRingPtr = std::shared_ptr<const GaloisRing>;

struct GrElement {
  int32_t code = 0;  // base-4 encoding of the coefficient tuple
  const GaloisRing* ring = nullptr;
  friend bool operator==(const GrElement& a, const GrElement& b) = default;
};

class GaloisRing : public std::enable_shared_from_this<GaloisRing> {
 public:
  static constexpr int64_t kMaxM = 8;

  static GaloisRingPtr make(int64_t m) { return GaloisRingPtr(new GaloisRing(m)); }

  int64_t m() const { return m_; }
  int64_t size() const { return size_; }        // 4^m
  int64_t teich_size() const { return tsize_; }  // 2^m

  // Monic basic irreducible P_m over Z_4, constant coefficient first.
  const std::vector<int64_t>& basic_irreducible() const { return pm_; }
  // Mod-2 seed polynomial, constant coefficient first.
  const std::vector<int64_t>& seed_polynomial() const { return seed_; }

  GrElement zero() const { return GrElement{0, this}; }
  GrElement one() const { return from_coeffs({1}); }
  GrElement two() const { return from_coeffs({2}); }
  GrElement beta() const { return beta_; }

  GrElement from_coeffs(const std::vector<int64_t>& c) const {
    if (static_cast<int64_t>(c.size()) > m_) throw std::invalid_argument("GaloisRing::from_coeffs: too long");
    int32_t code = 0;
    for (int64_t i = m_ - 1; i >= 0; --i) {
      int64_t v = i < static_cast<int64_t>(c.size()) ? mod_pos(c[i], 4) : 0;
      code = static_cast<int32_t>(code * 4 + v);
    }
    return GrElement{code, this};
  }

  // Constant-first coefficient tuple, length m, entries in [0, 4).
  std::vector<int64_t> coeffs(GrElement x) const {
    check(x);
    std::vector<int64_t> c(static_cast<size_t>(m_));
    int32_t code = x.code;
    for (int64_t i = 0; i < m_; ++i) { c[i] = code & 3; code >>= 2; }
    return c;
  }

  GrElement add(GrElement a, GrElement b) const {
    check(a); check(b);
    auto ca = coeffs(a), cb = coeffs(b);
    for (int64_t i = 0; i < m_; ++i) ca[i] = (ca[i] + cb[i]) & 3;
    return from_coeffs(ca);
  }

  GrElement neg(GrElement a) const {
    check(a);
    auto c = coeffs(a);
    for (auto& v : c) v = (4 - v) & 3;
    return from_coeffs(c);
  }

  GrElement sub(GrElement a, GrElement b) const { return add(a, neg(b)); }

  GrElement mul(GrElement a, GrElement b) const {
    check(a); check(b);
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<int64_t> prod(static_cast<size_t>(2 * m_ - 1), 0);
    for (int64_t i = 0; i < m_; ++i) {
      if (ca[i] == 0) continue;
      for (int64_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) & 3;
    }
    // fold xi^k for k >= m through the precomputed reduction rows
    std::vector<int64_t> out(prod.begin(), prod.begin() + m_);
    for (int64_t k = m_; k < 2 * m_ - 1; ++k) {
      if (prod[k] == 0) continue;
      const auto& row = xi_pow_[k];
      for (int64_t i = 0; i < m_; ++i) out[i] = (out[i] + prod[k] * row[i]) & 3;
    }
    return from_coeffs(out);
  }

  GrElement pow(GrElement a, int64_t e) const {
    if (e < 0) throw std::invalid_argument("GaloisRing::pow: negative exponent");
    GrElement acc = one(), base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  // Teichmuller set in the order 0, beta, beta^2, ..., beta^{2^m - 1} = 1.
  const std::vector<GrElement>& teichmuller() const { return teich_; }

  bool in_teichmuller(GrElement x) const {
    check(x);
    auto it = teich_pos_.find(x.code);
    return it != teich_pos_.end();
  }

  int64_t teich_index(GrElement x) const {
    check(x);
    auto it = teich_pos_.find(x.code);
    if (it == teich_pos_.end()) throw std::domain_error("GaloisRing: element is not in the Teichmuller set");
    return it->second;
  }

  // Unique decomposition x = a + 2b with a, b in the Teichmuller set.
  std::pair<GrElement, GrElement> two_adic(GrElement x) const {
    check(x);
    GrElement a = teich_of_residue(x);
    GrElement diff = sub(x, a);
    auto dc = coeffs(diff);
    int32_t key = 0;
    for (int64_t i = m_ - 1; i >= 0; --i) {
      if (dc[i] % 2 != 0) throw std::logic_error("GaloisRing::two_adic: x - a is not even");
      key = static_cast<int32_t>(key * 2 + dc[i] / 2);
    }
    GrElement b = teich_[teich_residue_.at(key)];
    if (add(a, mul(two(), b)) != x) throw std::logic_error("GaloisRing::two_adic: decomposition check failed");
    return {a, b};
  }

  // Generalized Frobenius phi(a + 2b) = a^2 + 2b^2; a ring automorphism of
  // order m fixing Z_4.
  GrElement frobenius(GrElement x) const {
    auto [a, b] = two_adic(x);
    return add(mul(a, a), mul(two(), mul(b, b)));
  }

  // Tr(x) = x + phi(x) + ... + phi^{m-1}(x), a value in Z_4.
  int64_t trace(GrElement x) const {
    check(x);
    return trace_[x.code];
  }

  // sum over the Teichmuller set of i^{Tr(u t)}, exact in Z[i].
  CycloInt character_sum(GrElement u) const {
    check(u);
    auto ctx = cyclo_context(4);
    CycloInt acc = CycloInt::zero(ctx);
    for (const auto& t : teich_) acc += CycloInt::root(ctx, trace(mul(u, t)));
    return acc;
  }

 private:
  explicit GaloisRing(int64_t m) : m_(m) {
    if (m < 1 || m > kMaxM) throw std::invalid_argument("GaloisRing: m out of range [1, 8]");
    size_ = int64_t{1} << (2 * m);
    tsize_ = int64_t{1} << m;

    seed_ = find_seed(m_);
    pm_ = graeffe_lift(seed_, m_);

    // reduction rows: xi^k mod P_m for k = m .. 2m-2
    xi_pow_.assign(static_cast<size_t>(2 * m_ - 1), {});
    {
      std::vector<int64_t> cur(static_cast<size_t>(m_), 0);
      if (m_ == 1) {
        // xi reduces to the constant -P_1(0)
        cur[0] = mod_pos(-pm_[0], 4);
      } else {
        cur[1] = 1;
      }
      // advance cur = xi^k starting at k = 1
      for (int64_t k = 1; k <= 2 * m_ - 2; ++k) {
        if (k >= m_) xi_pow_[k] = cur;
        // cur *= xi with monic fold
        std::vector<int64_t> next(static_cast<size_t>(m_), 0);
        int64_t top = cur[m_ - 1];
        for (int64_t i = m_ - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        if (top != 0)
          for (int64_t i = 0; i < m_; ++i) next[i] = mod_pos(next[i] - top * pm_[i], 4);
        cur = next;
      }
    }

    // beta = class of xi
    beta_ = m_ == 1 ? from_coeffs({mod_pos(-pm_[0], 4)}) : from_coeffs({0, 1});

    // Teichmuller set [0, beta, beta^2, ..., beta^{2^m-1} = 1]
    teich_.clear();
    teich_.push_back(zero());
    GrElement cur = beta_;
    for (int64_t j = 1; j <= tsize_ - 1; ++j) {
      teich_.push_back(cur);
      cur = mul(cur, beta_);
    }
    if (teich_.back() != one()) throw std::logic_error("GaloisRing: beta does not have order 2^m - 1");
    teich_pos_.clear();
    teich_residue_.clear();
    for (size_t j = 0; j < teich_.size(); ++j) {
      if (!teich_pos_.emplace(teich_[j].code, static_cast<int64_t>(j)).second)
        throw std::logic_error("GaloisRing: Teichmuller elements are not distinct");
      auto c = coeffs(teich_[j]);
      int32_t key = 0;
      for (int64_t i = m_ - 1; i >= 0; --i) key = static_cast<int32_t>(key * 2 + c[i] % 2);
      if (!teich_residue_.emplace(key, static_cast<int64_t>(j)).second)
        throw std::logic_error("GaloisRing: Teichmuller set does not split the residue field");
      // t^{2^m} = t
      if (pow(teich_[j], tsize_) != teich_[j])
        throw std::logic_error("GaloisRing: Teichmuller element fails t^{2^m} = t");
    }

    // trace table (also validates that traces are constants)
    trace_.assign(static_cast<size_t>(size_), 0);
    for (int64_t code = 0; code < size_; ++code) {
      GrElement x{static_cast<int32_t>(code), this};
      GrElement acc = zero(), cur2 = x;
      for (int64_t k = 0; k < m_; ++k) {
        acc = add(acc, cur2);
        cur2 = frobenius(cur2);
      }
      if (cur2 != x) throw std::logic_error("GaloisRing: Frobenius does not have order m");
      auto c = coeffs(acc);
      for (int64_t i = 1; i < m_; ++i)
        if (c[i] != 0) throw std::logic_error("GaloisRing: trace is not in Z_4");
      trace_[code] = c[0];
    }
  }

  // Teichmuller representative of x's residue class mod 2.
  GrElement teich_of_residue(GrElement x) const {
    auto c = coeffs(x);
    int32_t key = 0;
    for (int64_t i = m_ - 1; i >= 0; --i) key = static_cast<int32_t>(key * 2 + c[i] % 2);
    return teich_[teich_residue_.at(key)];
  }

  // Lexicographically smallest monic f over F_2 of degree m such that x has
  // multiplicative order exactly 2^m - 1 modulo f.
  static std::vector<int64_t> find_seed(int64_t m) {
    const int64_t count = int64_t{1} << m;
    const int64_t target = count - 1;
    auto prime_factors = factorize(std::max<int64_t>(target, 1));
    for (int64_t t = 0; t < count; ++t) {
      std::vector<int64_t> f(static_cast<size_t>(m + 1), 0);
      f[m] = 1;
      int64_t r = t;
      for (int64_t i = m - 1; i >= 0; --i) { f[i] = r & 1; r >>= 1; }
      if (f[0] == 0) continue;  // x | f, so x is not a unit mod f
      if (order_of_x_is(f, m, target, prime_factors)) return f;
    }
    throw std::logic_error("GaloisRing: no primitive seed polynomial found");
  }

  static bool order_of_x_is(const std::vector<int64_t>& f, int64_t m, int64_t target,
                            const std::vector<std::pair<int64_t, int64_t>>& prime_factors) {
    if (!poly2_pow_x_is_one(f, m, target)) return false;
    for (auto [r, e] : prime_factors)
      if (target / r > 0 && poly2_pow_x_is_one(f, m, target / r)) return false;
    return true;
  }

  // x^e == 1 in F_2[x]/(f)?
  static bool poly2_pow_x_is_one(const std::vector<int64_t>& f, int64_t m, int64_t e) {
    auto mulmod = [&](const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
      std::vector<int64_t> prod(static_cast<size_t>(2 * m - 1), 0);
      for (int64_t i = 0; i < m; ++i) {
        if (a[i] == 0) continue;
        for (int64_t j = 0; j < m; ++j) prod[i + j] ^= a[i] & b[j];
      }
      for (int64_t k = 2 * m - 2; k >= m; --k) {
        if (prod[k] == 0) continue;
        for (int64_t i = 0; i <= m; ++i) prod[k - m + i] ^= f[i];
      }
      prod.resize(static_cast<size_t>(m));
      return prod;
    };
    std::vector<int64_t> acc(static_cast<size_t>(m), 0), base(static_cast<size_t>(m), 0);
    acc[0] = 1;
    if (m == 1) {
      base[0] = f[0];  // x reduces to the constant f_0 (= 1 for valid seeds)
    } else {
      base[1] = 1;
    }
    int64_t k = e;
    while (k > 0) {
      if (k & 1) acc = mulmod(acc, base);
      base = mulmod(base, base);
      k >>= 1;
    }
    for (int64_t i = 1; i < m; ++i)
      if (acc[i] != 0) return false;
    return acc[0] == 1;
  }

  // Graeffe step to a fixed point: start from the seed lifted with {0,1}
  // coefficients and repeat f(x) f(-x) = (-1)^m g(x^2) until g = f over Z_4.
  static std::vector<int64_t> graeffe_lift(const std::vector<int64_t>& seed, int64_t m) {
    std::vector<int64_t> f(seed.begin(), seed.end());
    for (int iter = 0; iter < 16; ++iter) {
      // product f(x) * f(-x) over Z_4
      std::vector<int64_t> fm(f);
      for (int64_t i = 1; i <= m; i += 2) fm[i] = mod_pos(-fm[i], 4);
      std::vector<int64_t> prod(static_cast<size_t>(2 * m + 1), 0);
      for (int64_t i = 0; i <= m; ++i) {
        if (f[i] == 0) continue;
        for (int64_t j = 0; j <= m; ++j) prod[i + j] = (prod[i + j] + f[i] * fm[j]) & 3;
      }
      std::vector<int64_t> g(static_cast<size_t>(m + 1), 0);
      const int64_t sign = (m % 2 == 0) ? 1 : 3;  // (-1)^m mod 4
      for (int64_t k = 0; k <= m; ++k) g[k] = mod_pos(sign * prod[2 * k], 4);
      for (int64_t k = 0; k < m; ++k)
        if (prod[2 * k + 1] != 0) throw std::logic_error("GaloisRing: Graeffe product is not even");
      if (g == f) return f;
      f = std::move(g);
    }
    throw std::logic_error("GaloisRing: Graeffe lift did not converge");
  }

  void check(GrElement x) const {
    if (x.ring != this) throw std::invalid_argument("GaloisRing: element belongs to a different ring");
    if (x.code < 0 || x.code >= size_) throw std::out_of_range("GaloisRing: element code out of range");
  }

  int64_t m_, size_, tsize_;
  std::vector<int64_t> seed_;  // F_2 coefficients, length m+1
  std::vector<int64_t> pm_;    // Z_4 coefficients, length m+1
  std::vector<std::vector<int64_t>> xi_pow_;
  GrElement beta_;
  std::vector<GrElement> teich_;
  std::map<int32_t, int64_t> teich_pos_;
  std::map<int32_t, int64_t> teich_residue_;
  std::vector<int64_t> trace_;
};

}  // namespace mubs
