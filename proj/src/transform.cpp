#include "ffts/transform.hpp"

#include <string>

namespace ffts {

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> angle_table(const GroupSpec& spec,
                                                                        const TableMap& j) {
  const auto n = static_cast<Eigen::Index>(spec.order());
  const auto elements = enumerate(spec);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> out(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    const GroupElement& image = elements[j.images[static_cast<std::size_t>(x)]];
    for (Eigen::Index y = 0; y < n; ++y) {
      out(x, y) = char_angle_numerator(spec, image, elements[static_cast<std::size_t>(y)]);
    }
  }
  return out;
}

Theorem3Result theorem3_check(const GroupSpec& spec, const MappingJ& j) {
  const TransformMatrix<double> a = build_transform(spec, j);
  const TransformMatrix<double> square = a * a;
  PermutationDetection detected = is_permutation_operator(square);
  const bool iso = is_homomorphism(spec, j).is_homomorphism;
  if (detected.is_permutation != iso) {
    throw InternalConsistencyError("permutation verdict " + std::to_string(detected.is_permutation) +
                                   " disagrees with isomorphism verdict " + std::to_string(iso) +
                                   " on " + spec.to_string());
  }
  if (iso && *detected.p != induced_p(spec, j)) {
    throw InternalConsistencyError("detected permutation differs from j-hat^{-1} o j on " +
                                   spec.to_string());
  }
  return {detected.is_permutation, iso, std::move(detected.p)};
}

namespace {

ComplexMatrix<double> character_matrix(const GroupSpec& spec) {
  // Row h, column g: chi_h(g).
  return build_transform(spec, TableMap{[&] {
                           Permutation id(spec.order());
                           for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
                           return id;
                         }()}) *
         std::sqrt(static_cast<double>(spec.order()));
}

void require_length(const GroupSpec& spec, const ComplexVector<double>& f) {
  if (static_cast<std::size_t>(f.size()) != spec.order()) {
    throw DomainError("function length does not match |G| = " + std::to_string(spec.order()));
  }
}

}  // namespace

ComplexVector<double> fourier_transform(const GroupSpec& spec, const ComplexVector<double>& f) {
  require_length(spec, f);
  return character_matrix(spec) * f / std::sqrt(static_cast<double>(spec.order()));
}

ComplexVector<double> fourier_inverse(const GroupSpec& spec, const ComplexVector<double>& ff) {
  require_length(spec, ff);
  // sum_h F(h) conj(chi_h(x)) = (X^H F)(x) with X(h, x) = chi_h(x).
  return character_matrix(spec).adjoint() * ff / std::sqrt(static_cast<double>(spec.order()));
}

std::complex<double> scalar_product(const GroupSpec& spec, const ComplexVector<double>& f1,
                                    const ComplexVector<double>& f2) {
  require_length(spec, f1);
  require_length(spec, f2);
  return f1.dot(f2) / std::sqrt(static_cast<double>(spec.order()));
}

double fourier_inversion_check(const GroupSpec& spec, const ComplexVector<double>& f) {
  const ComplexVector<double> back = fourier_inverse(spec, fourier_transform(spec, f));
  return (back - f).cwiseAbs().maxCoeff();
}

double parseval_residual(const GroupSpec& spec, const ComplexVector<double>& f1,
                         const ComplexVector<double>& f2) {
  return std::abs(scalar_product(spec, fourier_transform(spec, f1), fourier_transform(spec, f2)) -
                  scalar_product(spec, f1, f2));
}

}  // namespace ffts
