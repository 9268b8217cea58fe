#include "ffts/characters.hpp"

#include <numeric>

#include "ffts/modlinalg.hpp"

namespace ffts {

RootOfUnity RootOfUnity::make(std::int64_t num, std::int64_t den) {
  if (den < 1) throw DomainError("root of unity needs a positive order");
  num = mod(num, den);
  const std::int64_t g = std::gcd(num, den);
  if (num == 0) return {0, 1};
  return {num / g, den / g};
}

std::int64_t char_angle_numerator(const GroupSpec& spec, const GroupElement& h,
                                  const GroupElement& x) {
  if (!belongs_to(spec, h) || !belongs_to(spec, x)) {
    throw DomainError("character arguments do not belong to " + spec.to_string());
  }
  const std::int64_t big = spec.exponent();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    const std::int64_t n = spec.modulus(i);
    acc = mod(acc + mul_mod(h.residues[i] * x.residues[i] % n, big / n, big), big);
  }
  return acc;
}

RootOfUnity char_angle(const GroupSpec& spec, const GroupElement& h, const GroupElement& x) {
  return RootOfUnity::make(char_angle_numerator(spec, h, x), spec.exponent());
}

std::complex<double> char_value(const GroupSpec& spec, const GroupElement& h,
                                const GroupElement& x) {
  return char_angle(spec, h, x).value();
}

std::complex<double> orthogonality_sum(const GroupSpec& spec, const GroupElement& h) {
  std::complex<double> acc = 0;
  for (const GroupElement& g : enumerate(spec)) acc += char_value(spec, h, g);
  return acc;
}

std::complex<double> dual_orthogonality_sum(const GroupSpec& spec, const GroupElement& g) {
  std::complex<double> acc = 0;
  for (const GroupElement& h : enumerate(spec)) acc += char_value(spec, h, g);
  return acc;
}

namespace {

void require_odd_prime(std::int64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw DomainError(std::to_string(p) + " is not an odd prime");
  }
}

}  // namespace

std::int64_t primitive_root(std::int64_t p) {
  require_odd_prime(p);
  const std::int64_t order = p - 1;
  std::vector<std::int64_t> factors;
  std::int64_t rest = order;
  for (std::int64_t d = 2; d * d <= rest; ++d) {
    if (rest % d == 0) {
      factors.push_back(d);
      while (rest % d == 0) rest /= d;
    }
  }
  if (rest > 1) factors.push_back(rest);
  for (std::int64_t g = 2; g < p; ++g) {
    bool generates = true;
    for (std::int64_t f : factors) {
      if (pow_mod(g, order / f, p) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return g;
  }
  throw DomainError("no primitive root found");  // unreachable for primes
}

int legendre_symbol(std::int64_t a, std::int64_t p) {
  require_odd_prime(p);
  const std::int64_t e = pow_mod(a, (p - 1) / 2, p);
  return e == 0 ? 0 : (e == 1 ? 1 : -1);
}

MultCharacter::MultCharacter(std::int64_t p, std::int64_t generator, std::int64_t exponent,
                             std::shared_ptr<const std::vector<std::int64_t>> dlog)
    : p_(p), generator_(generator), exponent_(mod(exponent, p - 1)), dlog_(std::move(dlog)) {}

RootOfUnity MultCharacter::angle(std::int64_t x) const {
  x = mod(x, p_);
  if (x == 0) throw DomainError("multiplicative character angle undefined at 0");
  return RootOfUnity::make(exponent_ * (*dlog_)[x], p_ - 1);
}

std::complex<double> MultCharacter::operator()(std::int64_t x) const {
  if (mod(x, p_) == 0) return 0.0;
  return angle(x).value();
}

MultCharacter MultCharacter::conj() const {
  return MultCharacter(p_, generator_, -exponent_, dlog_);
}

std::vector<MultCharacter> mult_characters(std::int64_t p) {
  require_odd_prime(p);
  const std::int64_t g = primitive_root(p);
  auto dlog = std::make_shared<std::vector<std::int64_t>>(p, 0);
  std::int64_t power = 1;
  for (std::int64_t b = 0; b < p - 1; ++b) {
    (*dlog)[power] = b;
    power = mul_mod(power, g, p);
  }
  std::vector<MultCharacter> out;
  out.reserve(p - 1);
  for (std::int64_t a = 0; a < p - 1; ++a) out.emplace_back(p, g, a, dlog);
  return out;
}

std::complex<double> gauss_sum(std::int64_t p, std::int64_t l, const MultCharacter& psi) {
  require_odd_prime(p);
  if (psi.prime() != p) throw DomainError("character belongs to a different prime");
  if (mod(l, p) == 0) throw DomainError("Gauss sum needs l != 0 mod p");
  std::complex<double> acc = 0;
  for (std::int64_t y = 1; y < p; ++y) {
    acc += psi(y) * unit_root(mul_mod(l, y, p), p);
  }
  return acc / std::sqrt(static_cast<double>(p));
}

GaussSumReport gauss_sum_report(std::int64_t p, std::int64_t l, std::int64_t a) {
  require_odd_prime(p);
  if (a < 0 || a > p - 2) throw DomainError("character index must lie in [0, p-2]");
  const auto chars = mult_characters(p);
  return {p, l, a, gauss_sum(p, l, chars[a]), legendre_symbol(l, p) == 1};
}

}  // namespace ffts
