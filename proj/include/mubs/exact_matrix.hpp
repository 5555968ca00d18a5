#pragma once

// Small dense matrices over a cyclotomic integer ring, used for exact
// operator identities (shift/phase operators, generalized Hadamard matrices,
// Pauli matrices).  Matrices are stored unnormalized: a matrix whose unitary
// form carries a 1/sqrt(d) factor is kept with unit-modulus entries and the
// factor is tracked by the caller (so U unitary becomes M^dagger M = d*I).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mubs/cyclotomic.hpp"

namespace mubs {

class ExactMatrix {
 public:
  ExactMatrix(CycloContextPtr ctx, int64_t rows, int64_t cols)
      : ctx_(std::move(ctx)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows * cols), CycloInt::zero(ctx_)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("ExactMatrix: bad shape");
  }

  static ExactMatrix identity(const CycloContextPtr& ctx, int64_t n) {
    ExactMatrix m(ctx, n, n);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = CycloInt::integer(ctx, 1);
    return m;
  }

  static ExactMatrix scalar(const CycloContextPtr& ctx, int64_t n, const CycloInt& v) {
    ExactMatrix m(ctx, n, n);
    for (int64_t i = 0; i < n; ++i) m.at(i, i) = v;
    return m;
  }

  int64_t rows() const { return rows_; }
  int64_t cols() const { return cols_; }
  const CycloContextPtr& context() const { return ctx_; }

  CycloInt& at(int64_t r, int64_t c) { return a_[index(r, c)]; }
  const CycloInt& at(int64_t r, int64_t c) const { return a_[index(r, c)]; }

  friend ExactMatrix operator*(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    x.match(y);
    ExactMatrix out(x.ctx_, x.rows_, y.cols_);
    for (int64_t i = 0; i < x.rows_; ++i)
      for (int64_t k = 0; k < x.cols_; ++k) {
        const CycloInt& v = x.at(i, k);
        if (v.is_zero()) continue;
        for (int64_t j = 0; j < y.cols_; ++j) {
          const CycloInt& w = y.at(k, j);
          if (!w.is_zero()) out.at(i, j) += v * w;
        }
      }
    return out;
  }

  friend ExactMatrix operator+(const ExactMatrix& x, const ExactMatrix& y) {
    x.match_shape(y);
    ExactMatrix out(x.ctx_, x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] + y.a_[i];
    return out;
  }

  friend ExactMatrix operator-(const ExactMatrix& x, const ExactMatrix& y) {
    x.match_shape(y);
    ExactMatrix out(x.ctx_, x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
    return out;
  }

  friend bool operator==(const ExactMatrix& x, const ExactMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    if (x.ctx_->conductor() != y.ctx_->conductor()) return false;
    return x.a_ == y.a_;
  }
  friend bool operator!=(const ExactMatrix& x, const ExactMatrix& y) { return !(x == y); }

  // Conjugate transpose.
  ExactMatrix dagger() const {
    ExactMatrix out(ctx_, cols_, rows_);
    for (int64_t i = 0; i < rows_; ++i)
      for (int64_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).conj();
    return out;
  }

  ExactMatrix scaled(const CycloInt& v) const {
    ExactMatrix out(ctx_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * v;
    return out;
  }

  // Matrix-vector product.
  std::vector<CycloInt> apply(const std::vector<CycloInt>& v) const {
    if (static_cast<int64_t>(v.size()) != cols_)
      throw std::invalid_argument("ExactMatrix::apply: length mismatch");
    std::vector<CycloInt> out(static_cast<size_t>(rows_), CycloInt::zero(ctx_));
    for (int64_t i = 0; i < rows_; ++i)
      for (int64_t j = 0; j < cols_; ++j) {
        const CycloInt& w = at(i, j);
        if (!w.is_zero()) out[i] += w * v[j];
      }
    return out;
  }

  bool is_diagonal() const {
    for (int64_t i = 0; i < rows_; ++i)
      for (int64_t j = 0; j < cols_; ++j)
        if (i != j && !at(i, j).is_zero()) return false;
    return true;
  }

  CycloInt trace() const {
    if (rows_ != cols_) throw std::invalid_argument("ExactMatrix::trace: not square");
    CycloInt t = CycloInt::zero(ctx_);
    for (int64_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  // Re-embed every entry into a larger-conductor ring.
  ExactMatrix embedded(const CycloContextPtr& target) const {
    ExactMatrix out(target, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i].embedded(target);
    return out;
  }

 private:
  size_t index(int64_t r, int64_t c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("ExactMatrix: index out of range");
    return static_cast<size_t>(r * cols_ + c);
  }
  void match(const ExactMatrix& other) const {
    if (ctx_->conductor() != other.ctx_->conductor())
      throw std::invalid_argument("ExactMatrix: mixed conductors");
  }
  void match_shape(const ExactMatrix& other) const {
    match(other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw std::invalid_argument("ExactMatrix: shape mismatch");
  }

  CycloContextPtr ctx_;
  int64_t rows_, cols_;
  std::vector<CycloInt> a_;
};

}  // namespace mubs
