#pragma once
// Dense exact matrices over a field descriptor F (see field.hpp).
// Convention used throughout the library: modules act on ROW vectors, so a
// linear map V -> W is a dim(V) x dim(W) matrix applied as x -> x*M.
// Subspaces are therefore stored as row bases; reduced row echelon form gives
// a canonical basis, so two spans are equal iff their rref rows coincide.
#include <cstddef>
#include <optional>
#include <vector>

#include "bqa/field.hpp"

namespace bqa {

template <class F>
class Mat {
 public:
  using K = typename F::Elem;

  Mat(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Mat identity(F field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  // Build from integer entries, row major.
  static Mat from(F field, std::vector<std::vector<std::int64_t>> rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      check(rows[i].size() == c, "ragged matrix literal");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = field.from_long(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  K& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const K& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const K& x : a_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!field_.eq(a_[i], o.a_[i])) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in +");
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
    return r;
  }
  Mat operator-(const Mat& o) const {
    check(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch in -");
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
    return r;
  }
  Mat operator*(const Mat& o) const {
    check(cols_ == o.rows_, "matrix shape mismatch in *");
    Mat r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const K& x = at(i, k);
        if (field_.is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(x, o.at(k, j)));
      }
    return r;
  }
  Mat scaled(const K& c) const {
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], c);
    return r;
  }
  Mat negated() const {
    Mat r(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.neg(a_[i]);
    return r;
  }

  Mat transposed() const {
    Mat r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::vector<K> row(std::size_t r) const {
    return std::vector<K>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_);
  }
  void set_row(std::size_t r, const std::vector<K>& v) {
    check(v.size() == cols_, "row length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(r, j) = v[j];
  }

  // Stack o below this.
  Mat vstack(const Mat& o) const {
    check(cols_ == o.cols_, "vstack width mismatch");
    Mat r(field_, rows_ + o.rows_, cols_);
    r.a_ = a_;
    r.a_.insert(r.a_.end(), o.a_.begin(), o.a_.end());
    return r;
  }
  Mat hstack(const Mat& o) const {
    check(rows_ == o.rows_, "hstack height mismatch");
    Mat r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat r(field_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
  }

 private:
  F field_;
  std::size_t rows_, cols_;
  std::vector<K> a_;
};

template <class F>
std::vector<typename F::Elem> apply_row(const std::vector<typename F::Elem>& x, const Mat<F>& m) {
  check(x.size() == m.rows(), "row/matrix size mismatch");
  const F& f = m.field();
  std::vector<typename F::Elem> r(m.cols(), f.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = f.add(r[j], f.mul(x[i], m.at(i, j)));
  }
  return r;
}

template <class F>
struct Rref {
  Mat<F> mat;                       // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank;
};

// Gauss-Jordan elimination; exact, deterministic (first nonzero pivot).
template <class F>
Rref<F> rref(const Mat<F>& m) {
  const F& f = m.field();
  Mat<F> a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && f.is_zero(a.at(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    typename F::Elem ip = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), ip);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || f.is_zero(a.at(i, c))) continue;
      typename F::Elem t = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Rref<F> out{a.block(0, 0, r, a.cols()), pivots, r};
  return out;
}

template <class F>
std::size_t rank(const Mat<F>& m) {
  return rref(m).rank;
}

// Canonical basis (rref rows) of the row space.
template <class F>
Mat<F> row_basis(const Mat<F>& m) {
  return rref(m).mat;
}

// Rows spanning {x : x*m = 0}.  Computed from the rref of m^T.
template <class F>
Mat<F> row_kernel(const Mat<F>& m) {
  const F& f = m.field();
  Rref<F> e = rref(m.transposed());
  std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  Mat<F> k(f, n - e.rank, n);
  std::size_t kr = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    k.at(kr, c) = f.one();
    for (std::size_t i = 0; i < e.rank; ++i)
      k.at(kr, e.pivots[i]) = f.neg(e.mat.at(i, c));
    ++kr;
  }
  check(kr == k.rows(), "row_kernel row count");
  return k;
}

// Columns spanning {x : m*x = 0}.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  return row_kernel(m.transposed()).transposed();
}

// Solve a*x = b for a column vector x.
template <class F>
std::optional<std::vector<typename F::Elem>> solve(const Mat<F>& a,
                                                   const std::vector<typename F::Elem>& b) {
  const F& f = a.field();
  check(b.size() == a.rows(), "solve: rhs size mismatch");
  Mat<F> rhs(f, a.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs.at(i, 0) = b[i];
  Rref<F> e = rref(a.hstack(rhs));
  std::vector<typename F::Elem> x(a.cols(), f.zero());
  for (std::size_t i = 0; i < e.rank; ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;  // pivot in rhs column
    x[e.pivots[i]] = e.mat.at(i, a.cols());
  }
  return x;
}

// Solve x*a = b row-wise for every row of b; returns c with c*a = b.
template <class F>
std::optional<Mat<F>> solve_left(const Mat<F>& a, const Mat<F>& b) {
  const F& f = a.field();
  check(a.cols() == b.cols(), "solve_left width mismatch");
  Mat<F> at = a.transposed();
  Mat<F> c(f, b.rows(), a.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto x = solve(at, b.row(i));
    if (!x) return std::nullopt;
    c.set_row(i, *x);
  }
  return c;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& m) {
  check(m.rows() == m.cols(), "inverse of non-square matrix");
  Rref<F> e = rref(m.hstack(Mat<F>::identity(m.field(), m.rows())));
  if (e.rank != m.rows()) return std::nullopt;
  for (std::size_t i = 0; i < e.rank; ++i)
    if (e.pivots[i] != i) return std::nullopt;
  return e.mat.block(0, m.cols(), m.rows(), m.cols());
}

// True iff the row space of sub is contained in the row space of big.
template <class F>
bool rows_contained(const Mat<F>& sub, const Mat<F>& big) {
  if (sub.rows() == 0) return true;
  return rank(big) == rank(big.vstack(sub));
}

template <class F>
bool same_row_space(const Mat<F>& a, const Mat<F>& b) {
  return row_basis(a) == row_basis(b);
}

}  // namespace bqa
