#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ffts/group.hpp"

namespace ffts {

// Scalar arithmetic in Z/n. All inputs may be any int64; outputs are in [0, n).

std::int64_t mod(std::int64_t a, std::int64_t n);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n);
/// Throws DomainError when gcd(a, n) != 1.
std::int64_t inv_mod(std::int64_t a, std::int64_t n);

bool is_prime(std::int64_t n);

/// Smallest root r with r^2 = a (mod p), or nullopt for a non-residue.
/// Tonelli-Shanks; p must be an odd prime.
std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p);

/// k = (1 - sqrt(-3)) / 2 in Z/p, defined for p = 1 (mod 3).
struct CubeRootParameter {
  std::int64_t k;          // from the smaller square root of -3
  std::int64_t alternate;  // from the other square root
};
CubeRootParameter build_k(std::int64_t p);

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix over Z/n with entries kept in [0, n).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::int64_t modulus, const IntMatrix& entries);

  static ModMatrix identity(std::int64_t modulus, Eigen::Index dim);
  /// Rows separated by ';', entries by ',' (e.g. "1,0;1,1").
  static ModMatrix parse(std::int64_t modulus, std::string_view rows);

  std::int64_t modulus() const { return modulus_; }
  Eigen::Index dim() const { return entries_.rows(); }
  const IntMatrix& entries() const { return entries_; }
  std::int64_t operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_diagonal() const;

  /// Applies the matrix to a residue vector.
  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  std::string to_string() const;

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }

 private:
  std::int64_t modulus_ = 1;
  IntMatrix entries_;
};

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b);
ModMatrix operator-(const ModMatrix& a);
ModMatrix transpose(const ModMatrix& a);
std::int64_t det(const ModMatrix& a);
bool is_invertible(const ModMatrix& a);
/// Throws DomainError unless gcd(det, n) = 1.
ModMatrix inverse(const ModMatrix& a);

/// M = T^t D T with D diagonal, plus a normal form whose diagonal is
/// (1, ..., 1, d) with d either 1 or the least quadratic non-residue.
struct CongruenceDiagonalization {
  ModMatrix transform;             // T
  ModMatrix diagonal;              // D
  ModMatrix normalized_transform;  // T'
  ModMatrix normalized_diagonal;   // D' = diag(1, ..., 1, d)
};

/// Symmetric invertible M over F_p, p an odd prime.
CongruenceDiagonalization congruence_diagonalize(const ModMatrix& m);

}  // namespace ffts
