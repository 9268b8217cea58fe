#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ffts/characters.hpp"
#include "ffts/group.hpp"
#include "ffts/mappings.hpp"
#include "ffts/transform.hpp"

namespace ffts {

/// Element of the group algebra Z[R_r]: entry a is the coefficient of
/// [e^{2 pi i a / r}]. Spectra have nonnegative entries; algebra arithmetic
/// may produce negative ones.
///
/// Equality is equality in the algebra of all roots of unity: vectors over
/// different root orders compare equal when they agree after embedding.
class SpectrumVector {
 public:
  SpectrumVector() : SpectrumVector(1) {}
  explicit SpectrumVector(std::size_t root_order);
  SpectrumVector(std::size_t root_order, std::vector<std::int64_t> coefficients);

  /// s = 1 + [-1] + [i] + [-i]
  static SpectrumVector s();
  /// [e^{2 pi i a / r}]
  static SpectrumVector root(std::int64_t a, std::size_t r);
  static SpectrumVector root(const RootOfUnity& z);

  std::size_t root_order() const { return coefficients_.size(); }
  const std::vector<std::int64_t>& coefficients() const { return coefficients_; }
  std::int64_t operator[](std::size_t a) const { return coefficients_[a]; }
  /// Coefficient of the given root, zero when it is not an r-th root.
  std::int64_t coefficient(const RootOfUnity& z) const;

  std::int64_t total() const;
  bool is_nonnegative() const;

  /// Same element over the least root order containing its support.
  SpectrumVector reduced() const;
  /// Same element over root order r; r must be a multiple of the reduced order.
  SpectrumVector embedded(std::size_t r) const;

  SpectrumVector& operator+=(const SpectrumVector& rhs);
  SpectrumVector& operator-=(const SpectrumVector& rhs);

  friend bool operator==(const SpectrumVector& a, const SpectrumVector& b);
  /// Same root order and same coefficients.
  bool identical(const SpectrumVector& other) const { return coefficients_ == other.coefficients_; }

 private:
  std::vector<std::int64_t> coefficients_;
};

SpectrumVector operator+(SpectrumVector a, const SpectrumVector& b);
SpectrumVector operator-(SpectrumVector a, const SpectrumVector& b);
SpectrumVector operator-(const SpectrumVector& a);
SpectrumVector operator*(std::int64_t k, const SpectrumVector& a);

/// Convolution product; operands are embedded into Z[R_lcm].
SpectrumVector algebra_mul(const SpectrumVector& a, const SpectrumVector& b);
SpectrumVector operator*(const SpectrumVector& a, const SpectrumVector& b);
/// a^m, m >= 0 (a^0 = [1]).
SpectrumVector algebra_pow(const SpectrumVector& a, unsigned m);

/// "+1", "-1", "i", "-i", otherwise "e^(2pi i 1/6)".
std::string root_label(const RootOfUnity& z);

inline constexpr double kMultiplicityTolerance = 1e-6;

/// Raised when a trace-formula multiplicity is not close to an integer.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// m_a = r^{-1} sum_k e^{-2 pi i a k / r} tr(A^k) for a matrix with A^r = I.
/// Powers are formed by repeated multiplication.
SpectrumVector trace_formula(const ComplexMatrix<double>& a, std::size_t r,
                             double tol = kMultiplicityTolerance);

/// Eigenvalue multiplicities of j~ o F for an isomorphism j.
///
/// With P = A^2 the permutation of p = j-hat^{-1} o j of order d, A^{2d} = I, so
/// the trace formula over r = 2d applies. The traces are read off the
/// permutation: tr(A^{2t}) counts fixed points of p^t and
/// tr(A^{2t+1}) = sum_x A(x, p^{-t}(x)). The result is reduced.
SpectrumVector spectrum(const GroupSpec& spec, const MappingJ& j,
                        double tol = kMultiplicityTolerance);

struct TensorSpectrumCheck {
  SpectrumVector left;
  SpectrumVector right;
  SpectrumVector product;          // algebra_mul(left, right)
  SpectrumVector kronecker;        // trace formula on kron(A, B)
  SpectrumVector product_group;    // spectrum() on the product isomorphism
  double kronecker_mismatch = 0;   // max |kron(A, B) - build(product)|
  bool holds = false;
};

TensorSpectrumCheck tensor_spectrum_check(const GroupSpec& spec_a, const MappingJ& ja,
                                          const GroupSpec& spec_b, const MappingJ& jb);

/// j~ o F on Z/p in the orthonormal basis
/// (delta_0, alpha psi_0, alpha psi_1, ..., alpha psi_{p-2}), alpha = (p-1)^{-1/2}.
struct BlockDecomposition {
  struct PairBlock {
    std::int64_t a = 0;  // psi_a
    std::int64_t b = 0;  // psi_b = conj(psi_a)
    Eigen::Matrix2cd block;  // [[0, S_l(psi_b)], [S_l(psi_a), 0]] in order (a, b)
  };
  struct LegendreBlock {
    std::int64_t a = 0;
    std::complex<double> value;  // S_l(psi_a)
  };

  std::int64_t p = 0;
  std::int64_t l = 0;
  Eigen::Matrix2cd northwest;
  std::vector<PairBlock> pairs;
  LegendreBlock legendre;

  /// Basis vectors as columns, in delta coordinates.
  ComplexMatrix<double> basis() const;
  /// The block-structured matrix in the character basis.
  ComplexMatrix<double> assembled() const;
  /// basis() * assembled() * basis()^H, to compare with build_transform.
  ComplexMatrix<double> reconstruct() const;
};

BlockDecomposition block_decompose(std::int64_t p, std::int64_t l);

/// prod_a (lambda - e^{2 pi i a / r})^{m_a}, coefficients from degree 0 upward.
std::vector<std::complex<double>> char_poly(const SpectrumVector& sv);

/// Which admissible form of the Z/p spectrum theorem a spectrum takes:
/// k s + [z] with k = (p-1)/4 (p = 1 mod 4) or k s - [z] with k = (p+1)/4
/// (p = 3 mod 4). Returns nullopt when neither form matches.
struct ZpForm {
  std::int64_t k = 0;
  int sign = 1;              // +1: k s + [z], -1: k s - [z]
  RootOfUnity distinguished;  // z
  std::string description;

  friend bool operator==(const ZpForm&, const ZpForm&) = default;
};

std::optional<ZpForm> zp_theorem_form(std::int64_t p, const SpectrumVector& sv);

}  // namespace ffts
