#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ffts/group.hpp"
#include "ffts/spectra.hpp"
#include "ffts/transform.hpp"

namespace ffts {

/// Outcome of sweeping bijections G -> dual(G) and comparing
/// "A^2 is a permutation" with "j is a homomorphism".
struct Theorem3Report {
  std::string group;
  std::size_t bijections = 0;
  std::size_t isomorphisms = 0;
  std::size_t disagreements = 0;
  std::vector<Permutation> counterexamples;

  friend bool operator==(const Theorem3Report&, const Theorem3Report&) = default;
};

inline constexpr std::size_t kExhaustiveLimit = 6;

/// All |G|! tables, |G| <= 6.
Theorem3Report exhaustive_theorem3(const GroupSpec& spec);

/// `samples` uniformly random tables plus every isomorphism of spec.
Theorem3Report sampled_theorem3(const GroupSpec& spec, std::size_t samples, std::uint64_t seed);

/// Multiplicities from a dense eigensolver, snapped to the nearest r-th root
/// where r is the order of m found by powering (up to max_order).
SpectrumVector eig_oracle(const ComplexMatrix<double>& m, std::size_t max_order,
                          double tol = kMultiplicityTolerance);

/// Closed-form multiplicities for M_j = [[1,0],[1,1]] on (Z/p)^2,
/// p prime, p = 1 mod 3, p >= 7; over the 12th roots of unity.
SpectrumVector final_table(std::int64_t p);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::map<std::string, std::int64_t> counters;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool passed() const;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

/// Suites: "theorem3", "zp", "table6", "gauss", "tensor", "symmetric",
/// "antisymmetric", "all". Throws DomainError for anything else.
VerifyReport run_suite(const std::string& suite);

}  // namespace ffts
