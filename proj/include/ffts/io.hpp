#pragma once

#include <complex>

#include "json.hpp"

#include "ffts/characters.hpp"
#include "ffts/modlinalg.hpp"
#include "ffts/oracle.hpp"
#include "ffts/spectra.hpp"
#include "ffts/transform.hpp"

// JSON forms of every result type. Complex numbers are {re, im}; roots of
// unity are exact fractions {num, den}.

namespace ffts {

using nlohmann::json;

json complex_to_json(const std::complex<double>& z);
std::complex<double> complex_from_json(const json& j);

void to_json(json& j, const RootOfUnity& z);
void from_json(const json& j, RootOfUnity& z);

/// {root_order, multiplicities: [{num, den, mult}], sum}
void to_json(json& j, const SpectrumVector& sv);
void from_json(const json& j, SpectrumVector& sv);

/// {modulus, rows: [[...]]}
void to_json(json& j, const ModMatrix& m);
void from_json(const json& j, ModMatrix& m);

void to_json(json& j, const CongruenceDiagonalization& d);
void from_json(const json& j, CongruenceDiagonalization& d);

/// {is_perm, is_iso, p: [...] | null}
void to_json(json& j, const Theorem3Result& r);
void from_json(const json& j, Theorem3Result& r);

/// {p, l, a, re, im, abs, l_is_residue}
void to_json(json& j, const GaussSumReport& g);
void from_json(const json& j, GaussSumReport& g);

void to_json(json& j, const ZpForm& f);
void from_json(const json& j, ZpForm& f);

void to_json(json& j, const Theorem3Report& r);
void from_json(const json& j, Theorem3Report& r);

void to_json(json& j, const CheckResult& c);
void from_json(const json& j, CheckResult& c);

void to_json(json& j, const VerifyReport& r);
void from_json(const json& j, VerifyReport& r);

}  // namespace ffts
