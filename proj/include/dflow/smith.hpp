#pragma once

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "dflow/integer.hpp"

namespace dflow {

/// Smith normal form u * m * v = d of an integer matrix.
///
/// u and v are unimodular, d is diagonal with nonnegative entries
/// d(0,0) | d(1,1) | ... ; the nonzero entries occupy the first `rank`
/// diagonal slots. u_inverse is tracked alongside u so callers can move
/// between the original and the diagonal coordinates without inverting.
template <typename Scalar>
struct SmithForm {
  Matrix<Scalar> u;
  Matrix<Scalar> u_inverse;
  Matrix<Scalar> d;
  Matrix<Scalar> v;
  Eigen::Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    for (Eigen::Index i = 0; i < std::min(d.rows(), d.cols()); ++i)
      out.push_back(d(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

}  // namespace detail

/// Reduces m by elementary row and column operations, always pivoting on
/// the entry of least magnitude in the active block.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(const Matrix<Scalar>& m) {
  using detail::magnitude;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  SmithForm<Scalar> s;
  s.d = m;
  s.u = Matrix<Scalar>::Identity(rows, rows);
  s.u_inverse = Matrix<Scalar>::Identity(rows, rows);
  s.v = Matrix<Scalar>::Identity(cols, cols);
  Matrix<Scalar>& a = s.d;

  // Row op: row_i += q * row_j, mirrored on u and (inversely) on u_inverse.
  auto add_row = [&](Eigen::Index i, Eigen::Index j, const Scalar& q) {
    a.row(i) += q * a.row(j);
    s.u.row(i) += q * s.u.row(j);
    s.u_inverse.col(j) -= q * s.u_inverse.col(i);
  };
  auto add_col = [&](Eigen::Index i, Eigen::Index j, const Scalar& q) {
    a.col(i) += q * a.col(j);
    s.v.col(i) += q * s.v.col(j);
  };
  auto swap_rows = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    s.u.row(i).swap(s.u.row(j));
    s.u_inverse.col(i).swap(s.u_inverse.col(j));
  };
  auto swap_cols = [&](Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    s.v.col(i).swap(s.v.col(j));
  };
  auto negate_row = [&](Eigen::Index i) {
    a.row(i) = -a.row(i);
    s.u.row(i) = -s.u.row(i);
    s.u_inverse.col(i) = -s.u_inverse.col(i);
  };

  const Eigen::Index diag = std::min(rows, cols);
  for (Eigen::Index t = 0; t < diag; ++t) {
    for (;;) {
      // Least-magnitude nonzero pivot in the active block.
      std::optional<std::pair<Eigen::Index, Eigen::Index>> pivot;
      for (Eigen::Index j = t; j < cols; ++j)
        for (Eigen::Index i = t; i < rows; ++i)
          if (a(i, j) != 0 &&
              (!pivot || magnitude(a(i, j)) <
                             magnitude(a(pivot->first, pivot->second))))
            pivot = std::make_pair(i, j);
      if (!pivot) {
        s.rank = t;
        return s;
      }
      swap_rows(t, pivot->first);
      swap_cols(t, pivot->second);

      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Scalar q = a(i, t) / a(t, t);
        add_row(i, t, Scalar(-q));
        if (a(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Scalar q = a(t, j) / a(t, t);
        add_col(j, t, Scalar(-q));
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce divisibility by the remaining block.
      std::optional<Eigen::Index> offender;
      for (Eigen::Index i = t + 1; i < rows && !offender; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            offender = i;
            break;
          }
      if (offender) {
        add_row(t, *offender, Scalar(1));
        continue;
      }
      if (a(t, t) < 0) negate_row(t);
      break;
    }
  }
  s.rank = diag;
  return s;
}

/// Basis of the integer kernel of m, one column per generator.
template <typename Scalar>
Matrix<Scalar> kernel_basis(const Matrix<Scalar>& m) {
  if (m.rows() == 0) return Matrix<Scalar>::Identity(m.cols(), m.cols());
  const auto s = smith_normal_form(m);
  return s.v.rightCols(m.cols() - s.rank);
}

/// Solves m * x = b over the integers for many right-hand sides, reusing
/// one Smith form of m.
template <typename Scalar>
class IntegerSolver {
 public:
  explicit IntegerSolver(const Matrix<Scalar>& m)
      : rows_(m.rows()), cols_(m.cols()), form_(smith_normal_form(m)) {}

  std::optional<Vector<Scalar>> solve(const Vector<Scalar>& b) const {
    if (cols_ == 0) {
      if ((b.array() == Scalar(0)).all()) return Vector<Scalar>(0);
      return std::nullopt;
    }
    const Vector<Scalar> ub = form_.u * b;
    Vector<Scalar> y = Vector<Scalar>::Zero(cols_);
    for (Eigen::Index i = 0; i < ub.size(); ++i) {
      if (i < form_.rank) {
        if (ub(i) % form_.d(i, i) != 0) return std::nullopt;
        y(i) = ub(i) / form_.d(i, i);
      } else if (ub(i) != 0) {
        return std::nullopt;
      }
    }
    return Vector<Scalar>(form_.v * y);
  }

  const SmithForm<Scalar>& form() const { return form_; }

 private:
  Eigen::Index rows_;
  Eigen::Index cols_;
  SmithForm<Scalar> form_;
};

/// Integer solution x of m * x = b, if one exists.
template <typename Scalar>
std::optional<Vector<Scalar>> solve_integer(const Matrix<Scalar>& m,
                                            const Vector<Scalar>& b) {
  return IntegerSolver<Scalar>(m).solve(b);
}

/// Whether every column of `inner` lies in the lattice spanned by the
/// columns of `outer`.
template <typename Scalar>
bool lattice_contains(const Matrix<Scalar>& outer, const Matrix<Scalar>& inner,
                      Eigen::Index* witness = nullptr) {
  const IntegerSolver<Scalar> solver(outer);
  for (Eigen::Index j = 0; j < inner.cols(); ++j) {
    if (!solver.solve(inner.col(j))) {
      if (witness) *witness = j;
      return false;
    }
  }
  return true;
}

template <typename Scalar>
Matrix<Scalar> hstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace dflow
