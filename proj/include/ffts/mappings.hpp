#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ffts/group.hpp"
#include "ffts/modlinalg.hpp"

namespace ffts {

/// Permutation of canonical indices: element i maps to images[i].
using Permutation = std::vector<std::size_t>;

/// j(g) = chi_{images[index(g)]}, dual elements indexed canonically.
struct TableMap {
  Permutation images;

  friend bool operator==(const TableMap&, const TableMap&) = default;
};

/// G = Z/n, j(x)(y) = e_n(x y l), gcd(l, n) = 1.
struct CyclicScalar {
  std::int64_t l = 1;
};

/// G = (Z/n)^m, j(g)(h) = e_n(<h, M g>), M in GL_m(Z/n).
struct MatrixMap {
  ModMatrix m;
};

/// A bijection G -> dual(G) in one of three presentations.
using MappingJ = std::variant<TableMap, CyclicScalar, MatrixMap>;

/// Explicit lookup table for any presentation. Throws DomainError when the
/// presentation does not fit the group or does not describe a bijection.
TableMap as_table(const GroupSpec& spec, const MappingJ& j);

/// j-hat(h)(x) = conj(j(x)(h)), as a numerator over spec.exponent().
std::int64_t dual_angle_numerator(const GroupSpec& spec, const TableMap& j,
                                  std::size_t h, std::size_t x);
std::complex<double> dual_value(const GroupSpec& spec, const TableMap& j,
                                std::size_t h, std::size_t x);

/// The dual map of a bijection. characters[h] holds the dual index of
/// j-hat(h) when that function is a character, and nullopt otherwise.
struct DualMap {
  std::vector<std::optional<std::size_t>> characters;

  /// Every j-hat(h) is a character.
  bool lands_in_dual() const;
  /// j-hat(G) equals the whole dual group.
  bool is_isomorphism() const;
  /// Table form; throws DomainError unless is_isomorphism().
  TableMap table() const;
};

DualMap dual(const GroupSpec& spec, const MappingJ& j);

struct HomomorphismCheck {
  bool is_homomorphism = true;
  /// (x, y) with j(x + y) != j(x) j(y), as canonical indices.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

HomomorphismCheck is_homomorphism(const GroupSpec& spec, const MappingJ& j);

/// p = j-hat^{-1} o j. Throws DomainError when j is not an isomorphism.
Permutation induced_p(const GroupSpec& spec, const MappingJ& j);

/// -(M^t)^{-1} M
ModMatrix matrix_induced_p(const ModMatrix& m);

Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation invert(const Permutation& perm);
bool is_bijection(const Permutation& perm);
/// Least d >= 1 with perm^d = id.
std::size_t permutation_order(const Permutation& perm);

/// The isomorphism (x, y) -> jA(x) jB(y) on the product presentation.
std::pair<GroupSpec, TableMap> product_mapping(const GroupSpec& spec_a, const MappingJ& ja,
                                               const GroupSpec& spec_b, const MappingJ& jb,
                                               std::size_t dim_cap = kDefaultDimCap);

/// Every isomorphism G -> dual(G), found by extending generator images.
std::vector<TableMap> enumerate_isomorphisms(const GroupSpec& spec);

}  // namespace ffts
