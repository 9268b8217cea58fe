#include "ffts/spectra.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ffts/modlinalg.hpp"

namespace ffts {

SpectrumVector::SpectrumVector(std::size_t root_order)
    : coefficients_(root_order, 0) {
  if (root_order == 0) throw DomainError("root order must be >= 1");
}

SpectrumVector::SpectrumVector(std::size_t root_order, std::vector<std::int64_t> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (root_order == 0 || coefficients_.size() != root_order) {
    throw DomainError("coefficient count must equal the root order");
  }
}

SpectrumVector SpectrumVector::s() { return SpectrumVector(4, {1, 1, 1, 1}); }

SpectrumVector SpectrumVector::root(std::int64_t a, std::size_t r) {
  SpectrumVector out(r);
  out.coefficients_[static_cast<std::size_t>(mod(a, static_cast<std::int64_t>(r)))] = 1;
  return out;
}

SpectrumVector SpectrumVector::root(const RootOfUnity& z) {
  return root(z.num, static_cast<std::size_t>(z.den));
}

std::int64_t SpectrumVector::coefficient(const RootOfUnity& z) const {
  const auto r = static_cast<std::int64_t>(root_order());
  if (r % z.den != 0) return 0;
  return coefficients_[static_cast<std::size_t>(z.num * (r / z.den))];
}

std::int64_t SpectrumVector::total() const {
  return std::accumulate(coefficients_.begin(), coefficients_.end(), std::int64_t{0});
}

bool SpectrumVector::is_nonnegative() const {
  for (std::int64_t c : coefficients_) {
    if (c < 0) return false;
  }
  return true;
}

SpectrumVector SpectrumVector::reduced() const {
  const std::size_t r = root_order();
  std::size_t d = 1;
  for (std::size_t a = 0; a < r; ++a) {
    if (coefficients_[a] != 0) d = std::lcm(d, r / std::gcd(a, r));
  }
  SpectrumVector out(d);
  for (std::size_t a = 0; a < r; ++a) {
    if (coefficients_[a] != 0) out.coefficients_[a * d / r] = coefficients_[a];
  }
  return out;
}

SpectrumVector SpectrumVector::embedded(std::size_t r) const {
  const SpectrumVector base = reduced();
  if (r == 0 || r % base.root_order() != 0) {
    throw DomainError("cannot embed into Z[R_" + std::to_string(r) + "]");
  }
  SpectrumVector out(r);
  const std::size_t step = r / base.root_order();
  for (std::size_t a = 0; a < base.root_order(); ++a) out.coefficients_[a * step] = base.coefficients_[a];
  return out;
}

SpectrumVector& SpectrumVector::operator+=(const SpectrumVector& rhs) {
  const std::size_t r = std::lcm(root_order(), rhs.root_order());
  SpectrumVector lhs = embedded(r);
  const SpectrumVector other = rhs.embedded(r);
  for (std::size_t a = 0; a < r; ++a) lhs.coefficients_[a] += other.coefficients_[a];
  *this = std::move(lhs);
  return *this;
}

SpectrumVector& SpectrumVector::operator-=(const SpectrumVector& rhs) { return *this += -rhs; }

bool operator==(const SpectrumVector& a, const SpectrumVector& b) {
  return a.reduced().coefficients_ == b.reduced().coefficients_;
}

SpectrumVector operator+(SpectrumVector a, const SpectrumVector& b) { return a += b; }
SpectrumVector operator-(SpectrumVector a, const SpectrumVector& b) { return a -= b; }

SpectrumVector operator-(const SpectrumVector& a) { return -1 * a; }

SpectrumVector operator*(std::int64_t k, const SpectrumVector& a) {
  std::vector<std::int64_t> c = a.coefficients();
  for (auto& v : c) v *= k;
  return SpectrumVector(a.root_order(), std::move(c));
}

SpectrumVector algebra_mul(const SpectrumVector& a, const SpectrumVector& b) {
  const std::size_t r = std::lcm(a.root_order(), b.root_order());
  const SpectrumVector x = a.embedded(r);
  const SpectrumVector y = b.embedded(r);
  std::vector<std::int64_t> out(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < r; ++k) out[(i + k) % r] += x[i] * y[k];
  }
  return SpectrumVector(r, std::move(out));
}

SpectrumVector operator*(const SpectrumVector& a, const SpectrumVector& b) { return algebra_mul(a, b); }

SpectrumVector algebra_pow(const SpectrumVector& a, unsigned m) {
  SpectrumVector out = SpectrumVector::root(0, a.root_order());
  for (unsigned i = 0; i < m; ++i) out = algebra_mul(out, a);
  return out;
}

std::string root_label(const RootOfUnity& z) {
  if (z.den == 1) return "+1";
  if (z.den == 2) return "-1";
  if (z.den == 4) return z.num == 1 ? "i" : "-i";
  std::ostringstream os;
  os << "e^(2pi i " << z.num << "/" << z.den << ")";
  return os.str();
}

namespace {

SpectrumVector round_multiplicities(const std::vector<std::complex<double>>& traces, double tol) {
  const std::size_t r = traces.size();
  std::vector<std::int64_t> mult(r, 0);
  for (std::size_t a = 0; a < r; ++a) {
    std::complex<double> acc = 0;
    for (std::size_t k = 0; k < r; ++k) {
      acc += unit_root(-static_cast<std::int64_t>((a * k) % r), static_cast<std::int64_t>(r)) * traces[k];
    }
    acc /= static_cast<double>(r);
    const double nearest = std::round(acc.real());
    if (std::abs(acc - nearest) > tol) {
      std::ostringstream os;
      os << "multiplicity of root " << a << "/" << r << " is " << acc.real() << "+" << acc.imag()
         << "i, not within " << tol << " of an integer";
      throw NumericalError(os.str());
    }
    mult[a] = static_cast<std::int64_t>(nearest);
  }
  return SpectrumVector(r, std::move(mult));
}

}  // namespace

SpectrumVector trace_formula(const ComplexMatrix<double>& a, std::size_t r, double tol) {
  if (r == 0) throw DomainError("trace formula needs r >= 1");
  std::vector<std::complex<double>> traces(r);
  ComplexMatrix<double> power = ComplexMatrix<double>::Identity(a.rows(), a.cols());
  for (std::size_t k = 0; k < r; ++k) {
    traces[k] = power.trace();
    power = power * a;
  }
  return round_multiplicities(traces, tol).reduced();
}

SpectrumVector spectrum(const GroupSpec& spec, const MappingJ& j, double tol) {
  const TableMap table = as_table(spec, j);
  const Permutation p = induced_p(spec, table);  // throws unless j is an isomorphism
  const Permutation p_inv = invert(p);
  const std::size_t d = permutation_order(p);
  const std::size_t r = 2 * d;
  const std::size_t n = spec.order();
  const auto elements = enumerate(spec);
  const std::int64_t big = spec.exponent();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));

  std::vector<std::complex<double>> traces(r);
  Permutation forward(n), backward(n);  // p^t and p^{-t}
  std::iota(forward.begin(), forward.end(), std::size_t{0});
  std::iota(backward.begin(), backward.end(), std::size_t{0});
  for (std::size_t t = 0; 2 * t < r; ++t) {
    std::size_t fixed = 0;
    std::complex<double> odd = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (forward[x] == x) ++fixed;
      odd += unit_root(char_angle_numerator(spec, elements[table.images[x]], elements[backward[x]]), big);
    }
    traces[2 * t] = static_cast<double>(fixed);
    traces[2 * t + 1] = odd * scale;
    forward = compose(p, forward);
    backward = compose(p_inv, backward);
  }
  SpectrumVector out = round_multiplicities(traces, tol);
  if (!out.is_nonnegative() || out.total() != static_cast<std::int64_t>(n)) {
    throw NumericalError("multiplicities do not form a spectrum of dimension " + std::to_string(n));
  }
  return out.reduced();
}

TensorSpectrumCheck tensor_spectrum_check(const GroupSpec& spec_a, const MappingJ& ja,
                                          const GroupSpec& spec_b, const MappingJ& jb) {
  TensorSpectrumCheck out;
  out.left = spectrum(spec_a, ja);
  out.right = spectrum(spec_b, jb);
  out.product = algebra_mul(out.left, out.right);

  const auto [spec, table] = product_mapping(spec_a, ja, spec_b, jb);
  out.product_group = spectrum(spec, table);

  const ComplexMatrix<double> kron = kronecker(build_transform(spec_a, ja), build_transform(spec_b, jb));
  out.kronecker_mismatch = (kron - build_transform(spec, table)).cwiseAbs().maxCoeff();
  const std::size_t r = std::lcm(2 * permutation_order(induced_p(spec_a, ja)),
                                 2 * permutation_order(induced_p(spec_b, jb)));
  out.kronecker = trace_formula(kron, r);

  out.holds = out.product == out.kronecker && out.product == out.product_group;
  return out;
}

ComplexMatrix<double> BlockDecomposition::basis() const {
  const auto chars = mult_characters(p);
  const double alpha = 1.0 / std::sqrt(static_cast<double>(p - 1));
  ComplexMatrix<double> u = ComplexMatrix<double>::Zero(p, p);
  u(0, 0) = 1.0;
  for (std::int64_t a = 0; a < p - 1; ++a) {
    for (std::int64_t x = 1; x < p; ++x) u(x, a + 1) = alpha * chars[a](x);
  }
  return u;
}

ComplexMatrix<double> BlockDecomposition::assembled() const {
  ComplexMatrix<double> b = ComplexMatrix<double>::Zero(p, p);
  b.topLeftCorner<2, 2>() = northwest;
  for (const PairBlock& pair : pairs) {
    const Eigen::Index ia = pair.a + 1, ib = pair.b + 1;
    b(ia, ia) = pair.block(0, 0);
    b(ia, ib) = pair.block(0, 1);
    b(ib, ia) = pair.block(1, 0);
    b(ib, ib) = pair.block(1, 1);
  }
  b(legendre.a + 1, legendre.a + 1) = legendre.value;
  return b;
}

ComplexMatrix<double> BlockDecomposition::reconstruct() const {
  const ComplexMatrix<double> u = basis();
  return u * assembled() * u.adjoint();
}

BlockDecomposition block_decompose(std::int64_t p, std::int64_t l) {
  if (p < 3 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (mod(l, p) == 0) throw DomainError("l must be coprime to p");
  const auto chars = mult_characters(p);
  const double sp = std::sqrt(static_cast<double>(p));
  const double sq = std::sqrt(static_cast<double>(p - 1));

  BlockDecomposition out;
  out.p = p;
  out.l = mod(l, p);
  out.northwest << 1.0 / sp, sq / sp, sq / sp, -1.0 / sp;
  const std::int64_t half = (p - 1) / 2;
  for (std::int64_t a = 1; a < half; ++a) {
    const std::int64_t b = p - 1 - a;
    BlockDecomposition::PairBlock pair{a, b, Eigen::Matrix2cd::Zero()};
    pair.block(0, 1) = gauss_sum(p, l, chars[b]);
    pair.block(1, 0) = gauss_sum(p, l, chars[a]);
    out.pairs.push_back(pair);
  }
  out.legendre = {half, gauss_sum(p, l, chars[half])};
  return out;
}

std::vector<std::complex<double>> char_poly(const SpectrumVector& sv) {
  if (!sv.is_nonnegative()) throw DomainError("characteristic polynomial needs nonnegative multiplicities");
  std::vector<std::complex<double>> coeffs{1.0};
  const auto r = static_cast<std::int64_t>(sv.root_order());
  for (std::int64_t a = 0; a < r; ++a) {
    const std::complex<double> z = unit_root(a, r);
    for (std::int64_t m = 0; m < sv[static_cast<std::size_t>(a)]; ++m) {
      // multiply by (lambda - z)
      std::vector<std::complex<double>> next(coeffs.size() + 1, 0.0);
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        next[i + 1] += coeffs[i];
        next[i] -= z * coeffs[i];
      }
      coeffs = std::move(next);
    }
  }
  return coeffs;
}

std::optional<ZpForm> zp_theorem_form(std::int64_t p, const SpectrumVector& sv) {
  if (p < 3 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  const bool one_mod_four = p % 4 == 1;
  const std::int64_t k = one_mod_four ? (p - 1) / 4 : (p + 1) / 4;
  const int sign = one_mod_four ? 1 : -1;
  const std::vector<RootOfUnity> candidates =
      one_mod_four ? std::vector<RootOfUnity>{{0, 1}, {1, 2}} : std::vector<RootOfUnity>{{1, 4}, {3, 4}};
  for (const RootOfUnity& z : candidates) {
    const SpectrumVector form = k * SpectrumVector::s() + sign * SpectrumVector::root(z);
    if (form == sv) {
      std::ostringstream os;
      os << k << "s " << (sign > 0 ? "+ " : "- ") << "[" << root_label(z) << "]";
      return ZpForm{k, sign, z, os.str()};
    }
  }
  return std::nullopt;
}

}  // namespace ffts
