// Copyright 2026 The blvl Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Dense>

#include <string>
#include <string_view>

namespace blvl {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowMatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using VecQ = VectorX<Rat>;
using MatQ = MatrixX<Rat>;

/// num/den built through big integers. Never use Rat(int, int): the
/// backend reinterprets a negative denominator as unsigned.
Rat rat(long num, long den = 1);

/// Parses "p", "-p", "p/q" or "-p/q" (decimal digits, q > 0). Throws
/// ParseError on anything else, including decimal points and exponents.
Rat parse_rat(std::string_view text);

/// Lowest-terms text: "0", "-25/2", "7".
std::string to_string(const Rat& value);

/// Zero-filled vector / matrix of the requested shape.
VecQ zeros(Index size);
MatQ zeros(Index rows, Index cols);

/// Exact equality that tolerates shape mismatch (Eigen asserts on it).
template <typename Derived1, typename Derived2>
bool same(const Eigen::MatrixBase<Derived1>& lhs, const Eigen::MatrixBase<Derived2>& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return false;
  for (Index i = 0; i < lhs.rows(); ++i)
    for (Index j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) return false;
  return true;
}

/// Dot product that is well defined for empty operands.
template <typename Derived1, typename Derived2>
typename Derived1::Scalar dot(const Eigen::MatrixBase<Derived1>& lhs,
                              const Eigen::MatrixBase<Derived2>& rhs) {
  typename Derived1::Scalar sum(0);
  for (Index i = 0; i < lhs.size(); ++i) {
    if (lhs(i) == 0 || rhs(i) == 0) continue;
    sum += lhs(i) * rhs(i);
  }
  return sum;
}

/// Matrix-vector product that skips zeros and handles empty shapes.
template <typename Derived1, typename Derived2>
VectorX<typename Derived1::Scalar> times(const Eigen::MatrixBase<Derived1>& mat,
                                         const Eigen::MatrixBase<Derived2>& vec) {
  using Scalar = typename Derived1::Scalar;
  VectorX<Scalar> out(mat.rows());
  for (Index i = 0; i < mat.rows(); ++i) {
    Scalar sum(0);
    for (Index j = 0; j < mat.cols(); ++j) {
      if (mat(i, j) == 0 || vec(j) == 0) continue;
      sum += mat(i, j) * vec(j);
    }
    out(i) = sum;
  }
  return out;
}

}  // namespace blvl
