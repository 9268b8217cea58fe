#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "ffts/group.hpp"

namespace ffts {

/// exp(2 pi i num / den), stored as a reduced fraction with 0 <= num < den.
struct RootOfUnity {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static RootOfUnity make(std::int64_t num, std::int64_t den);

  /// Evaluated from the exact angle, never by repeated multiplication.
  template <typename Scalar = double>
  std::complex<Scalar> value() const {
    if (4 % den == 0) {
      switch (num * (4 / den)) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
      }
    }
    constexpr long double kTwoPi = 6.283185307179586476925286766559005768L;
    const long double angle = kTwoPi * static_cast<long double>(num) / static_cast<long double>(den);
    return {static_cast<Scalar>(std::cos(angle)), static_cast<Scalar>(std::sin(angle))};
  }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
};

/// e^{2 pi i k / n}
template <typename Scalar = double>
std::complex<Scalar> unit_root(std::int64_t k, std::int64_t n) {
  return RootOfUnity::make(k, n).value<Scalar>();
}

/// chi_h(x) = prod_i e_{n_i}(h_i x_i) as a numerator over spec.exponent().
std::int64_t char_angle_numerator(const GroupSpec& spec, const GroupElement& h,
                                  const GroupElement& x);
RootOfUnity char_angle(const GroupSpec& spec, const GroupElement& h,
                       const GroupElement& x);
std::complex<double> char_value(const GroupSpec& spec, const GroupElement& h,
                                const GroupElement& x);

/// sum_g chi_h(g); equals |G| for the trivial character, else 0.
std::complex<double> orthogonality_sum(const GroupSpec& spec, const GroupElement& h);
/// sum_chi chi(g); equals |G| for the identity, else 0.
std::complex<double> dual_orthogonality_sum(const GroupSpec& spec, const GroupElement& g);

/// Smallest primitive root modulo an odd prime.
std::int64_t primitive_root(std::int64_t p);

/// Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion.
int legendre_symbol(std::int64_t a, std::int64_t p);

/// psi_a(g^b) = e^{2 pi i a b / (p-1)}, psi_a(0) = 0.
class MultCharacter {
 public:
  MultCharacter(std::int64_t p, std::int64_t generator, std::int64_t exponent,
                std::shared_ptr<const std::vector<std::int64_t>> dlog);

  std::int64_t prime() const { return p_; }
  std::int64_t generator() const { return generator_; }
  std::int64_t exponent() const { return exponent_; }

  bool is_trivial() const { return exponent_ == 0; }
  /// psi = conj(psi), i.e. the Legendre character.
  bool is_real() const { return (2 * exponent_) % (p_ - 1) == 0; }
  bool is_legendre() const { return !is_trivial() && is_real(); }

  /// The angle of psi(x) for x != 0 (mod p).
  RootOfUnity angle(std::int64_t x) const;
  std::complex<double> operator()(std::int64_t x) const;
  MultCharacter conj() const;

 private:
  std::int64_t p_;
  std::int64_t generator_;
  std::int64_t exponent_;
  std::shared_ptr<const std::vector<std::int64_t>> dlog_;
};

/// All p-1 multiplicative characters of Z/p, psi_0 first.
std::vector<MultCharacter> mult_characters(std::int64_t p);

/// S_l(psi) = p^{-1/2} sum_y psi(y) e_p(l y). Throws for l = 0 (mod p).
std::complex<double> gauss_sum(std::int64_t p, std::int64_t l, const MultCharacter& psi);

struct GaussSumReport {
  std::int64_t p = 0;
  std::int64_t l = 0;
  std::int64_t a = 0;
  std::complex<double> value;
  bool l_is_residue = false;

  friend bool operator==(const GaussSumReport&, const GaussSumReport&) = default;
};

GaussSumReport gauss_sum_report(std::int64_t p, std::int64_t l, std::int64_t a);

}  // namespace ffts
