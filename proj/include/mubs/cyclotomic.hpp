#pragma once

// Exact arithmetic in rings of cyclotomic integers Z[zeta_n].
//
// A value is an integer-coefficient polynomial in zeta_n = exp(2*pi*i/n),
// kept reduced modulo the n-th cyclotomic polynomial Phi_n.  Phi_n is the
// minimal polynomial of zeta_n, so reduced coefficient vectors are a
// canonical form: two values are equal in the ring exactly when their
// vectors are equal.  Coefficients are arbitrary-precision integers, which
// keeps inner products and matrix products of unit-modulus amplitudes exact
// with no floating-point tolerance anywhere.

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mubs {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// small number-theory helpers
// ---------------------------------------------------------------------------

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<int64_t, int64_t>> factorize(int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<int64_t, int64_t>> out;
  for (int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      int64_t e = 0;
      while (n % q == 0) { n /= q; ++e; }
      out.emplace_back(q, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int64_t euler_phi(int64_t n) {
  int64_t result = n;
  for (auto [p, e] : factorize(n)) result -= result / p;
  return result;
}

// Nonnegative remainder of a mod n.
inline int64_t mod_pos(int64_t a, int64_t n) {
  int64_t r = a % n;
  return r < 0 ? r + n : r;
}

// ---------------------------------------------------------------------------
// dense integer polynomials (constant coefficient first)
// ---------------------------------------------------------------------------

namespace poly {

inline int64_t degree(const std::vector<BigInt>& f) {
  for (int64_t i = static_cast<int64_t>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;  // zero polynomial
}

inline std::vector<BigInt> mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Long division by a monic divisor; throws unless the division is exact.
inline std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  int64_t dn = degree(num), dd = degree(den);
  if (dd < 0 || den[dd] != 1) throw std::invalid_argument("divide_exact: divisor must be monic");
  if (dn < dd) throw std::invalid_argument("divide_exact: divisor degree too large");
  std::vector<BigInt> quot(dn - dd + 1);
  for (int64_t k = dn - dd; k >= 0; --k) {
    BigInt c = num[k + dd];
    if (c == 0) continue;
    quot[k] = c;
    for (int64_t i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
  }
  if (degree(num) >= 0) throw std::invalid_argument("divide_exact: nonzero remainder");
  return quot;
}

}  // namespace poly

// Phi_n computed by exact division of x^n - 1 by Phi_d over the proper
// divisors d of n; returned monic, constant coefficient first, degree phi(n).
// Memoized: the recursion revisits every divisor chain otherwise.
inline const std::vector<BigInt>& cyclotomic_polynomial(int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::mutex mu;
  static std::map<int64_t, std::vector<BigInt>> cache{{1, {BigInt(-1), BigInt(1)}}};
  std::lock_guard<std::mutex> lock(mu);
  auto compute = [](auto&& self, int64_t k) -> const std::vector<BigInt>& {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> num(k + 1);
    num[0] = -1;
    num[k] = 1;
    for (int64_t d = 1; d < k; ++d)
      if (k % d == 0) num = poly::divide_exact(std::move(num), self(self, d));
    return cache.emplace(k, std::move(num)).first->second;
  };
  return compute(compute, n);
}

// ---------------------------------------------------------------------------
// CycloContext / CycloInt
// ---------------------------------------------------------------------------

class CycloContext;
using CycloContextPtr = std::shared_ptr<const CycloContext>;

// One ring Z[zeta_n]: holds Phi_n and the canonical reduced form of every
// power zeta^0..zeta^{n-1}.  Obtain instances through cyclo_context(n).
class CycloContext {
 public:
  static constexpr int64_t kMaxConductor = 2048;

  explicit CycloContext(int64_t n) : n_(n) {
    if (n < 1 || n > kMaxConductor)
      throw std::invalid_argument("CycloContext: conductor out of range [1, 2048]");
    phi_ = cyclotomic_polynomial(n);
    deg_ = poly::degree(phi_);
    if (deg_ != euler_phi(n)) throw std::logic_error("CycloContext: bad Phi_n degree");

    // Reduced form of zeta^k for k = 0..n-1, built by repeated multiplication
    // by zeta with a fold of the overflowing top coefficient (Phi_n is monic).
    pw_.assign(static_cast<size_t>(n_ * deg_), 0);
    std::vector<BigInt> cur(deg_);
    cur[0] = 1;
    for (int64_t k = 0; k < n_; ++k) {
      for (int64_t i = 0; i < deg_; ++i) {
        if (cur[i] < kMinEntry || cur[i] > kMaxEntry)
          throw std::logic_error("CycloContext: power-table entry out of range");
        pw_[static_cast<size_t>(k * deg_ + i)] = cur[i].convert_to<int64_t>();
      }
      // cur <- cur * x mod Phi_n
      BigInt top = cur[deg_ - 1];
      for (int64_t i = deg_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int64_t i = 0; i < deg_; ++i) cur[i] -= top * phi_[i];
    }
    // Internal consistency: zeta^n must come back to 1.
    BigInt top = cur[0] - 1;
    if (top != 0) throw std::logic_error("CycloContext: zeta^n != 1 after reduction");
    for (int64_t i = 1; i < deg_; ++i)
      if (cur[i] != 0) throw std::logic_error("CycloContext: zeta^n != 1 after reduction");
  }

  int64_t conductor() const { return n_; }
  int64_t degree() const { return deg_; }

  // Phi_n, monic, constant coefficient first, length degree()+1.
  const std::vector<BigInt>& reduction_polynomial() const { return phi_; }

  // Canonical coefficients (length degree()) of zeta^k, any integer k.
  std::span<const int64_t> reduced_power(int64_t k) const {
    int64_t r = mod_pos(k, n_);
    return std::span<const int64_t>(pw_.data() + r * deg_, static_cast<size_t>(deg_));
  }

 private:
  static constexpr int64_t kMaxEntry = int64_t{1} << 20;
  static constexpr int64_t kMinEntry = -(int64_t{1} << 20);
  int64_t n_;
  int64_t deg_;
  std::vector<BigInt> phi_;
  std::vector<int64_t> pw_;  // n_ rows of deg_ entries
};

// Memoized context factory: one shared ring object per conductor.
inline CycloContextPtr cyclo_context(int64_t n) {
  static std::mutex mu;
  static std::map<int64_t, CycloContextPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::make_shared<const CycloContext>(n);
  cache.emplace(n, ctx);
  return ctx;
}

// An element of Z[zeta_n] in canonical reduced form.
class CycloInt {
 public:
  CycloInt() = default;  // empty placeholder; any arithmetic on it throws

  CycloInt(CycloContextPtr ctx, std::vector<BigInt> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    if (!ctx_ || static_cast<int64_t>(c_.size()) != ctx_->degree())
      throw std::invalid_argument("CycloInt: coefficient vector has wrong length");
  }

  static CycloInt zero(const CycloContextPtr& ctx) {
    return CycloInt(ctx, std::vector<BigInt>(ctx->degree()));
  }

  static CycloInt integer(const CycloContextPtr& ctx, BigInt v) {
    std::vector<BigInt> c(ctx->degree());
    c[0] = std::move(v);
    return CycloInt(ctx, std::move(c));
  }

  // zeta_n^k for any integer k.
  static CycloInt root(const CycloContextPtr& ctx, int64_t k) {
    auto row = ctx->reduced_power(k);
    std::vector<BigInt> c(row.begin(), row.end());
    return CycloInt(ctx, std::move(c));
  }

  // sum_k counts[k] * zeta^k for a length-n exponent histogram.
  static CycloInt from_counts(const CycloContextPtr& ctx, const std::vector<BigInt>& counts) {
    if (static_cast<int64_t>(counts.size()) != ctx->conductor())
      throw std::invalid_argument("CycloInt::from_counts: histogram length must equal the conductor");
    std::vector<BigInt> c(ctx->degree());
    for (int64_t k = 0; k < ctx->conductor(); ++k) {
      if (counts[k] == 0) continue;
      auto row = ctx->reduced_power(k);
      for (int64_t i = 0; i < ctx->degree(); ++i)
        if (row[i] != 0) c[i] += counts[k] * row[i];
    }
    return CycloInt(ctx, std::move(c));
  }

  const CycloContextPtr& context() const { return ctx_; }
  int64_t conductor() const { return require().conductor(); }
  const std::vector<BigInt>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  bool is_integer() const {
    for (size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  BigInt as_integer() const {
    if (!is_integer()) throw std::domain_error("CycloInt::as_integer: value is not a rational integer");
    return c_.empty() ? BigInt(0) : c_[0];
  }

  friend bool operator==(const CycloInt& a, const CycloInt& b) {
    return a.conductor() == b.conductor() && a.c_ == b.c_;
  }
  friend bool operator!=(const CycloInt& a, const CycloInt& b) { return !(a == b); }

  friend CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    a.match(b);
    std::vector<BigInt> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.c_[i];
    return CycloInt(a.ctx_, std::move(c));
  }

  friend CycloInt operator-(const CycloInt& a, const CycloInt& b) {
    a.match(b);
    std::vector<BigInt> c(a.c_);
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.c_[i];
    return CycloInt(a.ctx_, std::move(c));
  }

  friend CycloInt operator-(const CycloInt& a) {
    std::vector<BigInt> c(a.c_);
    for (auto& v : c) v = -v;
    return CycloInt(a.ctx_, std::move(c));
  }

  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    a.match(b);
    const auto& ctx = a.require();
    const int64_t deg = ctx.degree();
    std::vector<BigInt> prod(2 * deg - 1);
    for (int64_t i = 0; i < deg; ++i) {
      if (a.c_[i] == 0) continue;
      for (int64_t j = 0; j < deg; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<BigInt> c(prod.begin(), prod.begin() + deg);
    for (int64_t k = deg; k < 2 * deg - 1; ++k) {
      if (prod[k] == 0) continue;
      auto row = ctx.reduced_power(k);
      for (int64_t i = 0; i < deg; ++i)
        if (row[i] != 0) c[i] += prod[k] * row[i];
    }
    return CycloInt(a.ctx_, std::move(c));
  }

  CycloInt& operator+=(const CycloInt& b) { return *this = *this + b; }
  CycloInt& operator-=(const CycloInt& b) { return *this = *this - b; }
  CycloInt& operator*=(const CycloInt& b) { return *this = *this * b; }

  // Complex conjugate: zeta^k -> zeta^{n-k} applied on the exponent basis.
  CycloInt conj() const {
    const auto& ctx = require();
    const int64_t n = ctx.conductor(), deg = ctx.degree();
    std::vector<BigInt> c(deg);
    for (int64_t k = 0; k < deg; ++k) {
      if (c_[k] == 0) continue;
      auto row = ctx.reduced_power(mod_pos(n - k, n));
      for (int64_t i = 0; i < deg; ++i)
        if (row[i] != 0) c[i] += c_[k] * row[i];
    }
    return CycloInt(ctx_, std::move(c));
  }

  // |z|^2 = z * conj(z), always a totally real cyclotomic integer.
  CycloInt norm_squared() const { return *this * conj(); }

  // Exact division by a rational integer; throws if any coefficient resists.
  CycloInt divided_by(const BigInt& q) const {
    if (q == 0) throw std::invalid_argument("CycloInt::divided_by: division by zero");
    std::vector<BigInt> c(c_);
    for (auto& v : c) {
      if (v % q != 0) throw std::domain_error("CycloInt::divided_by: not divisible");
      v /= q;
    }
    return CycloInt(ctx_, std::move(c));
  }

  // If the value equals some zeta^k, return k (in [0, n)).
  std::optional<int64_t> as_root_of_unity() const {
    const auto& ctx = require();
    for (int64_t k = 0; k < ctx.conductor(); ++k) {
      auto row = ctx.reduced_power(k);
      bool eq = true;
      for (int64_t i = 0; i < ctx.degree() && eq; ++i) eq = (c_[i] == row[i]);
      if (eq) return k;
    }
    return std::nullopt;
  }

  // Re-embed into Z[zeta_N] for a conductor N that is a multiple of n
  // (zeta_n = zeta_N^{N/n}).
  CycloInt embedded(const CycloContextPtr& target) const {
    const auto& ctx = require();
    const int64_t n = ctx.conductor(), N = target->conductor();
    if (N % n != 0) throw std::invalid_argument("CycloInt::embedded: target conductor not a multiple");
    const int64_t scale = N / n;
    std::vector<BigInt> c(target->degree());
    for (int64_t k = 0; k < ctx.degree(); ++k) {
      if (c_[k] == 0) continue;
      auto row = target->reduced_power(k * scale);
      for (int64_t i = 0; i < target->degree(); ++i)
        if (row[i] != 0) c[i] += c_[k] * row[i];
    }
    return CycloInt(target, std::move(c));
  }

  std::complex<double> to_complex() const {
    const auto& ctx = require();
    std::complex<double> acc{0.0, 0.0};
    for (int64_t k = 0; k < ctx.degree(); ++k) {
      if (c_[k] == 0) continue;
      const double arg = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(ctx.conductor());
      acc += c_[k].convert_to<double>() * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    return acc;
  }

  // Human-readable form, e.g. "2 - z^3" with z = zeta_n.
  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int64_t k = static_cast<int64_t>(c_.size()) - 1; k >= 0; --k) {
      if (c_[k] == 0) continue;
      BigInt v = c_[k];
      if (first) {
        if (v < 0) { os << "-"; v = -v; }
      } else {
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
      }
      if (v != 1 || k == 0) os << v.str();
      if (k > 0) {
        if (v != 1) os << "*";
        os << "z";
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  const CycloContext& require() const {
    if (!ctx_) throw std::logic_error("CycloInt: using an empty value");
    return *ctx_;
  }
  void match(const CycloInt& other) const {
    if (require().conductor() != other.require().conductor())
      throw std::invalid_argument("CycloInt: mixed conductors (embed explicitly first)");
  }

  CycloContextPtr ctx_;
  std::vector<BigInt> c_;
};

}  // namespace mubs
