#include "ffts/modlinalg.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <utility>

namespace ffts {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, n)) * mod(b, n) % n);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t n) {
  if (exp < 0) return pow_mod(inv_mod(base, n), -exp, n);
  std::int64_t result = 1 % n;
  base = mod(base, n);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = mod(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw DomainError(std::to_string(a) + " is not invertible mod " + std::to_string(n));
  }
  return mod(old_s, n);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::int64_t> sqrt_mod(std::int64_t a, std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("sqrt_mod needs an odd prime");
  a = mod(a, p);
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  std::int64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::int64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;

  std::int64_t m = s;
  std::int64_t c = pow_mod(z, q, p);
  std::int64_t t = pow_mod(a, q, p);
  std::int64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0;
    std::int64_t t2 = t;
    while (t2 != 1) {
      t2 = mul_mod(t2, t2, p);
      ++i;
    }
    std::int64_t b = pow_mod(c, std::int64_t{1} << (m - i - 1), p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

CubeRootParameter build_k(std::int64_t p) {
  if (p < 3 || !is_prime(p)) throw DomainError("build_k needs an odd prime");
  if (p % 3 != 1) {
    throw DomainError("k = (1 - sqrt(-3))/2 lies in Z/p only for p = 1 mod 3");
  }
  std::int64_t r = *sqrt_mod(-3, p);
  std::int64_t half = inv_mod(2, p);
  return {mul_mod(1 - r, half, p), mul_mod(1 + r, half, p)};
}

ModMatrix::ModMatrix(std::int64_t modulus, const IntMatrix& entries)
    : modulus_(modulus), entries_(entries) {
  if (modulus < 1) throw DomainError("matrix modulus must be >= 1");
  if (entries.rows() != entries.cols() || entries.rows() == 0) {
    throw DomainError("modular matrix must be square and non-empty");
  }
  entries_ = entries_.unaryExpr([modulus](std::int64_t v) { return mod(v, modulus); });
}

ModMatrix ModMatrix::identity(std::int64_t modulus, Eigen::Index dim) {
  return ModMatrix(modulus, IntMatrix::Identity(dim, dim));
}

ModMatrix ModMatrix::parse(std::int64_t modulus, std::string_view text) {
  std::vector<std::vector<std::int64_t>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    std::string_view row = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= row.size()) {
      std::size_t comma = row.find(',', pos);
      std::string_view tok = row.substr(pos, comma == std::string_view::npos ? row.npos : comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw DomainError("malformed matrix '" + std::string(text) + "'");
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    rows.push_back(std::move(values));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  const auto dim = static_cast<Eigen::Index>(rows.size());
  IntMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != dim) {
      throw DomainError("matrix '" + std::string(text) + "' is not square");
    }
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return ModMatrix(modulus, m);
}

bool ModMatrix::is_symmetric() const { return entries_ == entries_.transpose(); }

bool ModMatrix::is_antisymmetric() const { return *this == -transpose(*this); }

bool ModMatrix::is_diagonal() const {
  for (Eigen::Index r = 0; r < dim(); ++r)
    for (Eigen::Index c = 0; c < dim(); ++c)
      if (r != c && entries_(r, c) != 0) return false;
  return true;
}

std::vector<std::int64_t> ModMatrix::apply(const std::vector<std::int64_t>& v) const {
  if (static_cast<Eigen::Index>(v.size()) != dim()) {
    throw DomainError("vector length does not match matrix dimension");
  }
  std::vector<std::int64_t> out(v.size(), 0);
  for (Eigen::Index r = 0; r < dim(); ++r) {
    std::int64_t acc = 0;
    for (Eigen::Index c = 0; c < dim(); ++c) {
      acc = mod(acc + mul_mod(entries_(r, c), v[c], modulus_), modulus_);
    }
    out[r] = acc;
  }
  return out;
}

std::string ModMatrix::to_string() const {
  std::ostringstream os;
  for (Eigen::Index r = 0; r < dim(); ++r) {
    if (r) os << ';';
    for (Eigen::Index c = 0; c < dim(); ++c) {
      if (c) os << ',';
      os << entries_(r, c);
    }
  }
  return os.str();
}

ModMatrix operator*(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus() || a.dim() != b.dim()) {
    throw DomainError("modular matrix shapes or moduli differ");
  }
  const std::int64_t n = a.modulus();
  IntMatrix out = IntMatrix::Zero(a.dim(), a.dim());
  for (Eigen::Index r = 0; r < a.dim(); ++r)
    for (Eigen::Index c = 0; c < a.dim(); ++c)
      for (Eigen::Index k = 0; k < a.dim(); ++k)
        out(r, c) = mod(out(r, c) + mul_mod(a(r, k), b(k, c), n), n);
  return ModMatrix(n, out);
}

ModMatrix operator-(const ModMatrix& a) { return ModMatrix(a.modulus(), -a.entries()); }

ModMatrix transpose(const ModMatrix& a) {
  return ModMatrix(a.modulus(), a.entries().transpose());
}

namespace {

// Row-reduces to upper triangular form using only unimodular integer row
// operations (Euclid on each column), so it works for composite moduli where
// a column may contain no unit. Returns the sign picked up by row swaps.
int euclid_reduce(IntMatrix& m, IntMatrix* companion, std::int64_t n) {
  int sign = 1;
  const Eigen::Index dim = m.rows();
  auto swap_rows = [&](Eigen::Index a, Eigen::Index b) {
    m.row(a).swap(m.row(b));
    if (companion) companion->row(a).swap(companion->row(b));
    sign = -sign;
  };
  auto sub_row = [&](Eigen::Index dst, Eigen::Index src, std::int64_t q) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      m(dst, c) = mod(m(dst, c) - mul_mod(q, m(src, c), n), n);
      if (companion) {
        (*companion)(dst, c) = mod((*companion)(dst, c) - mul_mod(q, (*companion)(src, c), n), n);
      }
    }
  };
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (Eigen::Index r = col + 1; r < dim; ++r) {
      while (m(r, col) != 0) {
        sub_row(col, r, m(col, col) / m(r, col));
        swap_rows(col, r);
      }
    }
  }
  return sign;
}

}  // namespace

std::int64_t det(const ModMatrix& a) {
  IntMatrix m = a.entries();
  const std::int64_t n = a.modulus();
  std::int64_t d = mod(euclid_reduce(m, nullptr, n), n);
  for (Eigen::Index i = 0; i < m.rows(); ++i) d = mul_mod(d, m(i, i), n);
  return d;
}

bool is_invertible(const ModMatrix& a) {
  return std::gcd(det(a), a.modulus()) == 1;
}

ModMatrix inverse(const ModMatrix& a) {
  const std::int64_t n = a.modulus();
  if (!is_invertible(a)) {
    throw DomainError("matrix " + a.to_string() + " is not invertible mod " + std::to_string(n));
  }
  IntMatrix m = a.entries();
  IntMatrix inv = IntMatrix::Identity(m.rows(), m.cols());
  euclid_reduce(m, &inv, n);
  // Diagonal entries multiply to a unit, so each one is a unit.
  for (Eigen::Index col = m.rows(); col-- > 0;) {
    std::int64_t pivot_inv = inv_mod(m(col, col), n);
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      m(col, c) = mul_mod(m(col, c), pivot_inv, n);
      inv(col, c) = mul_mod(inv(col, c), pivot_inv, n);
    }
    for (Eigen::Index r = 0; r < col; ++r) {
      std::int64_t f = m(r, col);
      if (f == 0) continue;
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        m(r, c) = mod(m(r, c) - mul_mod(f, m(col, c), n), n);
        inv(r, c) = mod(inv(r, c) - mul_mod(f, inv(col, c), n), n);
      }
    }
  }
  return ModMatrix(n, inv);
}

namespace {

// Accumulates P with P M P^t = D by mirrored row/column operations.
struct SymmetricReducer {
  IntMatrix d;
  IntMatrix p;
  std::int64_t n;

  void add_multiple(Eigen::Index dst, Eigen::Index src, std::int64_t f) {
    for (Eigen::Index c = 0; c < d.cols(); ++c) {
      d(dst, c) = mod(d(dst, c) + mul_mod(f, d(src, c), n), n);
      p(dst, c) = mod(p(dst, c) + mul_mod(f, p(src, c), n), n);
    }
    for (Eigen::Index r = 0; r < d.rows(); ++r) {
      d(r, dst) = mod(d(r, dst) + mul_mod(f, d(r, src), n), n);
    }
  }
  void swap(Eigen::Index a, Eigen::Index b) {
    d.row(a).swap(d.row(b));
    d.col(a).swap(d.col(b));
    p.row(a).swap(p.row(b));
  }
};

std::int64_t least_non_residue(std::int64_t p) {
  std::int64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  return z;
}

}  // namespace

CongruenceDiagonalization congruence_diagonalize(const ModMatrix& m) {
  const std::int64_t p = m.modulus();
  if (p < 3 || !is_prime(p)) throw DomainError("congruence diagonalization needs an odd prime modulus");
  if (!m.is_symmetric()) throw DomainError("matrix " + m.to_string() + " is not symmetric");
  if (!is_invertible(m)) throw DomainError("matrix " + m.to_string() + " is singular");

  const Eigen::Index dim = m.dim();
  SymmetricReducer red{m.entries(), IntMatrix::Identity(dim, dim), p};
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (red.d(i, i) == 0) {
      Eigen::Index j = i + 1;
      while (j < dim && red.d(i, j) == 0) ++j;
      // j < dim since the trailing block stays invertible.
      if (red.d(j, j) != 0) {
        red.swap(i, j);
      } else {
        // d_ii becomes 2 d_ij, nonzero for odd p.
        red.add_multiple(i, j, 1);
      }
    }
    const std::int64_t pivot_inv = inv_mod(red.d(i, i), p);
    for (Eigen::Index k = i + 1; k < dim; ++k) {
      if (red.d(k, i) != 0) red.add_multiple(k, i, mod(-mul_mod(red.d(k, i), pivot_inv, p), p));
    }
  }

  CongruenceDiagonalization out;
  ModMatrix p_mat(p, red.p);
  out.diagonal = ModMatrix(p, red.d);
  out.transform = transpose(inverse(p_mat));

  // Normal form: pairwise turn (a, b) into (1, ab) using a vector v = x e_i + y e_{i+1}
  // with a x^2 + b y^2 = 1, then rescale the last entry by a square.
  IntMatrix q = red.p;
  std::vector<std::int64_t> diag(dim);
  for (Eigen::Index i = 0; i < dim; ++i) diag[i] = red.d(i, i);
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    const std::int64_t a = diag[i], b = diag[i + 1];
    std::int64_t x = 0, y = 0;
    const std::int64_t b_inv = inv_mod(b, p);
    for (x = 0; x < p; ++x) {
      auto root = sqrt_mod(mul_mod(mod(1 - mul_mod(a, mul_mod(x, x, p), p), p), b_inv, p), p);
      if (root) {
        y = *root;
        break;
      }
    }
    Eigen::Matrix<std::int64_t, 1, Eigen::Dynamic> v = q.row(i), w = q.row(i + 1);
    const std::int64_t wx = mod(-mul_mod(b, y, p), p), wy = mul_mod(a, x, p);
    for (Eigen::Index c = 0; c < dim; ++c) {
      q(i, c) = mod(mul_mod(x, v(c), p) + mul_mod(y, w(c), p), p);
      q(i + 1, c) = mod(mul_mod(wx, v(c), p) + mul_mod(wy, w(c), p), p);
    }
    diag[i] = 1;
    diag[i + 1] = mul_mod(a, b, p);
  }
  const std::int64_t last = diag[dim - 1];
  const bool square = pow_mod(last, (p - 1) / 2, p) == 1;
  const std::int64_t target = square ? 1 : least_non_residue(p);
  // last * s^2 = target with s = sqrt(target / last)
  const std::int64_t s = *sqrt_mod(mul_mod(target, inv_mod(last, p), p), p);
  for (Eigen::Index c = 0; c < dim; ++c) q(dim - 1, c) = mul_mod(s, q(dim - 1, c), p);
  diag[dim - 1] = target;

  IntMatrix dn = IntMatrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) dn(i, i) = diag[i];
  out.normalized_diagonal = ModMatrix(p, dn);
  out.normalized_transform = transpose(inverse(ModMatrix(p, q)));
  return out;
}

}  // namespace ffts
