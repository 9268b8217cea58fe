#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ffts {

/// Raised for every violated precondition on domain values (bad group,
/// non-bijective mapping, non-invertible matrix, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultDimCap = 4096;

/// A finite abelian group presented as Z/n_1 x ... x Z/n_k.
///
/// The presentation is kept as given: [2,2] and [4] are different specs.
/// Elements are enumerated in mixed-radix order with the last factor varying
/// fastest; every matrix in the library is indexed by that order.
class GroupSpec {
 public:
  explicit GroupSpec(std::vector<std::int64_t> moduli,
                     std::size_t dim_cap = kDefaultDimCap);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::int64_t modulus(std::size_t i) const { return moduli_[i]; }
  std::size_t rank() const { return moduli_.size(); }
  std::size_t order() const { return order_; }

  /// True when all cyclic factors share one modulus, i.e. G = (Z/n)^m.
  bool is_homogeneous() const;
  /// lcm of the moduli; every character value is an exponent()-th root.
  std::int64_t exponent() const { return exponent_; }

  /// "Z2xZ4" style rendering, parseable by parse_group.
  std::string to_string() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.moduli_ == b.moduli_;
  }

 private:
  std::vector<std::int64_t> moduli_;
  std::size_t order_ = 1;
  std::int64_t exponent_ = 1;
};

struct GroupElement {
  std::vector<std::int64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Parses "Z5", "z7^2", "Z2xZ4", "Z3^2xZ5".
GroupSpec parse_group(std::string_view text,
                      std::size_t dim_cap = kDefaultDimCap);

/// Direct product presentation: moduli of a followed by moduli of b.
GroupSpec product(const GroupSpec& a, const GroupSpec& b,
                  std::size_t dim_cap = kDefaultDimCap);

std::vector<GroupElement> enumerate(const GroupSpec& spec);
std::size_t index_of(const GroupSpec& spec, const GroupElement& e);
GroupElement element_at(const GroupSpec& spec, std::size_t index);
GroupElement identity(const GroupSpec& spec);

/// Reduces arbitrary integers into an element of spec.
GroupElement make_element(const GroupSpec& spec,
                          std::vector<std::int64_t> values);

bool belongs_to(const GroupSpec& spec, const GroupElement& e);

GroupElement add(const GroupSpec& spec, const GroupElement& a,
                 const GroupElement& b);
GroupElement neg(const GroupSpec& spec, const GroupElement& a);
GroupElement scale(const GroupSpec& spec, std::int64_t k, const GroupElement& a);

std::int64_t element_order(const GroupSpec& spec, const GroupElement& a);

/// Standard dot product sum h_i g_i mod n; homogeneous specs only.
std::int64_t scalar_product(const GroupSpec& spec, const GroupElement& h,
                            const GroupElement& g);

/// Index-space addition table lookup helpers. add_index is O(rank).
std::size_t add_index(const GroupSpec& spec, std::size_t a, std::size_t b);
std::size_t neg_index(const GroupSpec& spec, std::size_t a);

}  // namespace ffts
