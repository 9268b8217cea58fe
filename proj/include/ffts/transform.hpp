#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ffts/characters.hpp"
#include "ffts/group.hpp"
#include "ffts/mappings.hpp"

namespace ffts {

template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Matrix of the concrete transform: A(x, y) = |G|^{-1/2} j(x)(y).
template <typename Scalar = double>
using TransformMatrix = ComplexMatrix<Scalar>;

/// Exact angle numerators of j(x)(y) over spec.exponent(), rows x, columns y.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> angle_table(const GroupSpec& spec,
                                                                        const TableMap& j);

/// (j~ o F)(delta_g)(x) = |G|^{-1/2} j(x)(g): column g, row x.
template <typename Scalar = double>
TransformMatrix<Scalar> build_transform(const GroupSpec& spec, const MappingJ& j) {
  const auto angles = angle_table(spec, as_table(spec, j));
  const std::int64_t big = spec.exponent();
  const Scalar scale = Scalar(1) / std::sqrt(static_cast<Scalar>(spec.order()));
  // Only spec.exponent() distinct values occur.
  std::vector<std::complex<Scalar>> roots(static_cast<std::size_t>(big));
  for (std::int64_t k = 0; k < big; ++k) roots[k] = unit_root<Scalar>(k, big) * scale;
  return angles.unaryExpr([&roots](std::int64_t a) { return roots[static_cast<std::size_t>(a)]; });
}

/// max |A^H A - I|
template <typename Derived>
typename Derived::RealScalar unitarity_residual(const Eigen::MatrixBase<Derived>& a) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Matrix gram = a.adjoint() * a;
  return (gram - Matrix::Identity(a.rows(), a.cols())).cwiseAbs().maxCoeff();
}

/// A^k by repeated multiplication; k = 0 gives the identity.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix_power(
    const Eigen::MatrixBase<Derived>& a, std::size_t k) {
  using Matrix = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix out = Matrix::Identity(a.rows(), a.cols());
  for (std::size_t i = 0; i < k; ++i) out = out * a;
  return out;
}

template <typename Lhs, typename Rhs>
Eigen::Matrix<typename Lhs::Scalar, Eigen::Dynamic, Eigen::Dynamic> kronecker(
    const Eigen::MatrixBase<Lhs>& a, const Eigen::MatrixBase<Rhs>& b) {
  Eigen::Matrix<typename Lhs::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                                          a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

inline constexpr double kPermutationTolerance = 1e-8;

struct PermutationDetection {
  bool is_permutation = false;
  /// Row g carries its 1 in column p[g], so P f = f o p.
  std::optional<Permutation> p;
};

template <typename Derived>
PermutationDetection is_permutation_operator(const Eigen::MatrixBase<Derived>& m,
                                             double tol = kPermutationTolerance) {
  if (m.rows() != m.cols()) return {};
  Permutation p(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Eigen::Index one = -1;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto v = m(r, c);
      if (std::abs(v - decltype(v)(1)) <= tol) {
        if (one >= 0) return {};
        one = c;
      } else if (std::abs(v) > tol) {
        return {};
      }
    }
    if (one < 0) return {};
    p[static_cast<std::size_t>(r)] = static_cast<std::size_t>(one);
  }
  if (!is_bijection(p)) return {};
  return {true, std::move(p)};
}

struct Theorem3Result {
  bool is_perm = false;
  bool is_iso = false;
  std::optional<Permutation> p;

  friend bool operator==(const Theorem3Result&, const Theorem3Result&) = default;
};

/// Raised when the matrix route and the group-theoretic route disagree.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Squares the transform, tests for a permutation, and checks the verdict and
/// the detected p against is_homomorphism and induced_p.
Theorem3Result theorem3_check(const GroupSpec& spec, const MappingJ& j);

/// F(f)(chi_h) = |G|^{-1/2} sum_g f(g) chi_h(g), indexed by h.
ComplexVector<double> fourier_transform(const GroupSpec& spec, const ComplexVector<double>& f);
/// f(x) = |G|^{-1/2} sum_h F(f)(chi_h) conj(chi_h(x)).
ComplexVector<double> fourier_inverse(const GroupSpec& spec, const ComplexVector<double>& ff);

/// <f1, f2> = |G|^{-1/2} sum_g conj(f1(g)) f2(g).
std::complex<double> scalar_product(const GroupSpec& spec, const ComplexVector<double>& f1,
                                    const ComplexVector<double>& f2);

/// max |f - F^{-1} F f|
double fourier_inversion_check(const GroupSpec& spec, const ComplexVector<double>& f);
/// |<F f1, F f2> - <f1, f2>|
double parseval_residual(const GroupSpec& spec, const ComplexVector<double>& f1,
                         const ComplexVector<double>& f2);

}  // namespace ffts
