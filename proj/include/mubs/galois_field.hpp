#pragma once

// Finite fields GF(p^m) with explicit polynomial representation.
//
// Elements are residues of F_p[x] modulo a monic irreducible modulus of
// degree m, written as coefficient tuples [x_0 x_1 ... x_{m-1}] with x_0 the
// constant term.  The canonical enumeration is lexicographic over tuples
// with x_0 as the most significant digit (so for GF(9): 00, 01, 02, 10, ...),
// and element indices are ranks in that order.  Multiplication runs through
// discrete-log tables built on a primitive element found by exhaustive order
// test.  Elements remember their field; operations on elements from
// different field objects are hard errors.

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mubs/cyclotomic.hpp"
#include "mubs/exact_matrix.hpp"

namespace mubs {

class GfField;
using GfFieldPtr = std::shared_ptr<const GfField>;

struct GfElement {
  int64_t index = 0;
  const GfField* field = nullptr;
  friend bool operator==(const GfElement& a, const GfElement& b) = default;
};

namespace gfdetail {

// Dense polynomials over F_p, constant coefficient first.
using Poly = std::vector<int64_t>;

inline int64_t degree(const Poly& f) {
  for (int64_t i = static_cast<int64_t>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

inline Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly mul_mod_p(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return trim(std::move(out));
}

// Remainder of a modulo monic f, over F_p.
inline Poly rem_mod(Poly a, const Poly& f, int64_t p) {
  const int64_t df = degree(f);
  for (int64_t k = degree(a); k >= df; --k) {
    int64_t c = a[k];
    if (c == 0) continue;
    for (int64_t i = 0; i <= df; ++i) a[k - df + i] = mod_pos(a[k - df + i] - c * f[i], p);
  }
  a.resize(static_cast<size_t>(df > 0 ? df : 1), 0);
  return a;
}

inline Poly powmod(Poly base, BigInt e, const Poly& f, int64_t p) {
  Poly acc{1};
  base = rem_mod(std::move(base), f, p);
  while (e > 0) {
    if ((e & 1) != 0) acc = rem_mod(mul_mod_p(acc, base, p), f, p);
    base = rem_mod(mul_mod_p(base, base, p), f, p);
    e >>= 1;
  }
  return acc;
}

inline Poly gcd_mod_p(Poly a, Poly b, int64_t p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (degree(b) >= 0) {
    // reduce a mod b after making b monic
    int64_t db = degree(b);
    int64_t lead = b[db];
    if (lead != 1) {
      // multiply b by lead^{-1} mod p (p prime)
      int64_t inv = 1;
      for (int64_t t = 1; t < p; ++t)
        if ((lead * t) % p == 1) { inv = t; break; }
      for (auto& c : b) c = (c * inv) % p;
    }
    for (int64_t k = degree(a); k >= db; --k) {
      int64_t c = a[k];
      if (c == 0) continue;
      for (int64_t i = 0; i <= db; ++i) a[k - db + i] = mod_pos(a[k - db + i] - c * b[i], p);
    }
    a = trim(std::move(a));
    std::swap(a, b);
  }
  return a;
}

inline bool poly_is_one(const Poly& f) { return degree(f) == 0 && f[0] == 1; }

// Irreducibility of a monic degree-m polynomial over F_p: trial division
// against every monic polynomial of degree 1..m/2 when m <= 4, otherwise the
// x^{p^k} gcd test (x^{p^m} = x mod f and gcd(x^{p^{m/q}} - x, f) = 1 for
// every prime q | m).
inline bool is_irreducible(const Poly& f, int64_t p, int64_t m) {
  if (degree(f) != m) return false;
  if (m == 1) return true;
  if (m <= 4) {
    for (int64_t d = 1; d * 2 <= m; ++d) {
      // all monic polynomials of degree d: p^d of them
      int64_t count = 1;
      for (int64_t i = 0; i < d; ++i) count *= p;
      for (int64_t t = 0; t < count; ++t) {
        Poly g(static_cast<size_t>(d + 1), 0);
        g[d] = 1;
        int64_t r = t;
        for (int64_t i = 0; i < d; ++i) { g[i] = r % p; r /= p; }
        Poly rem = rem_mod(Poly(f), g, p);
        if (degree(rem) < 0) return false;
      }
    }
    return true;
  }
  BigInt pm = 1;
  for (int64_t i = 0; i < m; ++i) pm *= p;
  Poly x{0, 1};
  Poly xq = powmod(x, pm, f, p);
  Poly diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = mod_pos(diff[1] - 1, p);
  if (degree(trim(diff)) >= 0) return false;
  for (auto [q, e] : factorize(m)) {
    BigInt pk = 1;
    for (int64_t i = 0; i < m / q; ++i) pk *= p;
    Poly xk = powmod(x, pk, f, p);
    Poly d2 = xk;
    d2.resize(std::max<size_t>(d2.size(), 2), 0);
    d2[1] = mod_pos(d2[1] - 1, p);
    d2 = trim(std::move(d2));
    // d2 = 0 would mean every root of f lies in GF(p^{m/q}); otherwise a
    // nontrivial gcd exposes a factor of degree dividing m/q.
    if (degree(d2) < 0) return false;
    if (!poly_is_one(gcd_mod_p(d2, f, p))) return false;
  }
  return true;
}

}  // namespace gfdetail

class GfField : public std::enable_shared_from_this<GfField> {
 public:
  static constexpr int64_t kMaxSize = int64_t{1} << 20;

  // Default modulus: the lexicographically smallest monic irreducible of
  // degree m, coefficient tuple (c_0,...,c_{m-1}) with c_0 most significant.
  static GfFieldPtr make(int64_t p, int64_t m) {
    return GfFieldPtr(new GfField(p, m, default_modulus(p, m)));
  }

  // Explicit modulus: lower coefficients c_0..c_{m-1} of the monic polynomial
  // x^m + c_{m-1} x^{m-1} + ... + c_0.  Verified irreducible.
  static GfFieldPtr make(int64_t p, int64_t m, std::vector<int64_t> lower_coeffs) {
    if (static_cast<int64_t>(lower_coeffs.size()) != m)
      throw std::invalid_argument("GfField: modulus must list exactly m lower coefficients");
    gfdetail::Poly f(static_cast<size_t>(m + 1), 0);
    f[m] = 1;
    for (int64_t i = 0; i < m; ++i) f[i] = mod_pos(lower_coeffs[i], p);
    return GfFieldPtr(new GfField(p, m, std::move(f)));
  }

  int64_t p() const { return p_; }
  int64_t m() const { return m_; }
  int64_t q() const { return q_; }

  // Monic modulus, constant coefficient first, length m+1.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  GfElement el(int64_t index) const {
    if (index < 0 || index >= q_) throw std::out_of_range("GfField::el: index out of range");
    return GfElement{index, this};
  }
  GfElement zero() const { return el(0); }
  GfElement one() const { return from_coeffs({1}); }
  GfElement alpha() const { return el(alpha_); }

  // Coefficient tuple -> element.  Input is constant-first and may be short.
  GfElement from_coeffs(const std::vector<int64_t>& c) const {
    if (static_cast<int64_t>(c.size()) > m_) throw std::invalid_argument("GfField::from_coeffs: too long");
    std::vector<int64_t> full(static_cast<size_t>(m_), 0);
    for (size_t i = 0; i < c.size(); ++i) full[i] = mod_pos(c[i], p_);
    return GfElement{encode(full), this};
  }

  // Constant-first coefficient tuple of an element.
  std::vector<int64_t> coeffs(GfElement x) const {
    check(x);
    return decode(x.index);
  }

  GfElement add(GfElement a, GfElement b) const {
    check(a); check(b);
    auto ca = decode(a.index), cb = decode(b.index);
    for (int64_t i = 0; i < m_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
    return GfElement{encode(ca), this};
  }

  GfElement neg(GfElement a) const {
    check(a);
    auto c = decode(a.index);
    for (auto& v : c) v = mod_pos(-v, p_);
    return GfElement{encode(c), this};
  }

  GfElement sub(GfElement a, GfElement b) const { return add(a, neg(b)); }

  GfElement mul(GfElement a, GfElement b) const {
    check(a); check(b);
    if (a.index == 0 || b.index == 0) return GfElement{0, this};
    int64_t l = (log_[a.index] + log_[b.index]) % (q_ - 1);
    return GfElement{exp_[l], this};
  }

  GfElement inv(GfElement a) const {
    check(a);
    if (a.index == 0) throw std::domain_error("GfField::inv: zero has no inverse");
    int64_t l = (q_ - 1 - log_[a.index]) % (q_ - 1);
    return GfElement{exp_[l], this};
  }

  GfElement pow(GfElement a, int64_t e) const {
    check(a);
    if (a.index == 0) {
      if (e < 0) throw std::domain_error("GfField::pow: negative power of zero");
      return e == 0 ? one() : zero();
    }
    int64_t l = mod_pos(log_[a.index] * mod_pos(e, q_ - 1), q_ - 1);
    return GfElement{exp_[l], this};
  }

  int64_t log(GfElement a) const {
    check(a);
    if (a.index == 0) throw std::domain_error("GfField::log: log of zero");
    return log_[a.index];
  }

  // Absolute trace Tr(x) = x + x^p + ... + x^{p^{m-1}}, a value in [0, p).
  int64_t trace(GfElement x) const {
    check(x);
    return trace_[x.index];
  }

  // All q elements in lexicographic tuple order (index order).
  std::vector<GfElement> enumerate_lex() const {
    std::vector<GfElement> out;
    out.reserve(q_);
    for (int64_t i = 0; i < q_; ++i) out.push_back(GfElement{i, this});
    return out;
  }

  // 0, 1, alpha, alpha^2, ..., alpha^{q-2}.
  std::vector<GfElement> enumerate_multiplicative() const {
    std::vector<GfElement> out;
    out.reserve(q_);
    out.push_back(GfElement{0, this});
    for (int64_t l = 0; l < q_ - 1; ++l) out.push_back(GfElement{exp_[l], this});
    return out;
  }

  // Shift operator on the computational basis indexed by lex order:
  // X_x |y> = |y - x>.  Entries live in Z[zeta_p] (they are 0/1).
  ExactMatrix shift_operator(GfElement x) const {
    check(x);
    auto ctx = cyclo_context(p_);
    ExactMatrix mat(ctx, q_, q_);
    for (int64_t y = 0; y < q_; ++y) {
      GfElement target = sub(el(y), x);
      mat.at(target.index, y) = CycloInt::integer(ctx, 1);
    }
    return mat;
  }

  // Phase operator Z_x |y> = chi(x y) |y> with chi(t) = zeta_p^{Tr(t)}.
  ExactMatrix phase_operator(GfElement x) const {
    check(x);
    auto ctx = cyclo_context(p_);
    ExactMatrix mat(ctx, q_, q_);
    for (int64_t y = 0; y < q_; ++y)
      mat.at(y, y) = CycloInt::root(ctx, trace(mul(x, el(y))));
    return mat;
  }

 private:
  GfField(int64_t p, int64_t m, gfdetail::Poly modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("GfField: p must be prime");
    if (m < 1) throw std::invalid_argument("GfField: m must be >= 1");
    q_ = 1;
    for (int64_t i = 0; i < m; ++i) {
      q_ *= p;
      if (q_ > kMaxSize) throw std::invalid_argument("GfField: field too large");
    }
    if (!gfdetail::is_irreducible(modulus_, p_, m_))
      throw std::invalid_argument("GfField: modulus is not irreducible over F_p");

    // Primitive element: first index (lex order) of multiplicative order q-1.
    auto factors = factorize(q_ - 1);
    alpha_ = -1;
    for (int64_t cand = 1; cand < q_ && alpha_ < 0; ++cand) {
      auto cp = decode_raw(cand);
      bool primitive = true;
      for (auto [r, e] : factors) {
        auto powed = gfdetail::powmod(cp, BigInt((q_ - 1) / r), modulus_, p_);
        if (gfdetail::poly_is_one(powed)) { primitive = false; break; }
      }
      if (primitive) {
        auto full = gfdetail::powmod(cp, BigInt(q_ - 1), modulus_, p_);
        if (!gfdetail::poly_is_one(full)) throw std::logic_error("GfField: order test failed");
        alpha_ = cand;
      }
    }
    if (alpha_ < 0) throw std::logic_error("GfField: no primitive element found");

    // exp/log tables over the primitive element.
    exp_.assign(static_cast<size_t>(q_ - 1), 0);
    log_.assign(static_cast<size_t>(q_), -1);
    gfdetail::Poly cur{1};
    auto ap = decode_raw(alpha_);
    for (int64_t l = 0; l < q_ - 1; ++l) {
      int64_t idx = encode_raw(cur);
      exp_[l] = idx;
      if (log_[idx] != -1) throw std::logic_error("GfField: exp table collision");
      log_[idx] = l;
      cur = gfdetail::rem_mod(gfdetail::mul_mod_p(cur, ap, p_), modulus_, p_);
    }
    if (!gfdetail::poly_is_one(cur)) throw std::logic_error("GfField: alpha order mismatch");

    // Trace table via Frobenius through the log tables.
    trace_.assign(static_cast<size_t>(q_), 0);
    for (int64_t i = 1; i < q_; ++i) {
      std::vector<int64_t> acc(static_cast<size_t>(m_), 0);
      int64_t cur_idx = i;
      for (int64_t k = 0; k < m_; ++k) {
        auto c = decode(cur_idx);
        for (int64_t j = 0; j < m_; ++j) acc[j] = (acc[j] + c[j]) % p_;
        cur_idx = exp_[(log_[cur_idx] * p_) % (q_ - 1)];  // x -> x^p
      }
      for (int64_t j = 1; j < m_; ++j)
        if (acc[j] != 0) throw std::logic_error("GfField: trace is not in the prime field");
      trace_[i] = acc[0];
    }
  }

  static gfdetail::Poly default_modulus(int64_t p, int64_t m) {
    if (!is_prime(p)) throw std::invalid_argument("GfField: p must be prime");
    if (m < 1) throw std::invalid_argument("GfField: m must be >= 1");
    int64_t count = 1;
    for (int64_t i = 0; i < m; ++i) count *= p;
    for (int64_t t = 0; t < count; ++t) {
      gfdetail::Poly f(static_cast<size_t>(m + 1), 0);
      f[m] = 1;
      // tuple (c_0,...,c_{m-1}) in lex order, c_0 the most significant digit
      int64_t r = t;
      for (int64_t i = m - 1; i >= 0; --i) { f[i] = r % p; r /= p; }
      if (gfdetail::is_irreducible(f, p, m)) return f;
    }
    throw std::logic_error("GfField: no irreducible modulus found");
  }

  // index <-> constant-first tuple; x_0 is the most significant digit.
  std::vector<int64_t> decode(int64_t index) const { return decode_digits(index, p_, m_); }
  gfdetail::Poly decode_raw(int64_t index) const {
    auto d = decode_digits(index, p_, m_);
    return gfdetail::trim(std::move(d));
  }
  int64_t encode(const std::vector<int64_t>& c) const {
    int64_t idx = 0;
    for (int64_t i = 0; i < m_; ++i) idx = idx * p_ + c[i];
    return idx;
  }
  int64_t encode_raw(const gfdetail::Poly& c) const {
    std::vector<int64_t> full(static_cast<size_t>(m_), 0);
    for (size_t i = 0; i < c.size(); ++i) full[i] = c[i];
    return encode(full);
  }
  static std::vector<int64_t> decode_digits(int64_t index, int64_t p, int64_t m) {
    std::vector<int64_t> c(static_cast<size_t>(m), 0);
    for (int64_t i = m - 1; i >= 0; --i) { c[i] = index % p; index /= p; }
    return c;
  }

  void check(GfElement x) const {
    if (x.field != this) throw std::invalid_argument("GfField: element belongs to a different field");
    if (x.index < 0 || x.index >= q_) throw std::out_of_range("GfField: element index out of range");
  }

  int64_t p_, m_, q_;
  gfdetail::Poly modulus_;
  int64_t alpha_ = -1;
  std::vector<int64_t> exp_, log_;
  std::vector<int64_t> trace_;
};

}  // namespace mubs
