#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

namespace dflow {

/// Arbitrary-precision integer used by all homology computations.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<Integer>;
using IntegerVector = Vector<Integer>;

}  // namespace dflow

namespace Eigen {

template <>
struct NumTraits<dflow::Integer> : GenericNumTraits<dflow::Integer> {
  using Real = dflow::Integer;
  using NonInteger = dflow::Integer;
  using Literal = dflow::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
