#include "ffts/io.hpp"

namespace ffts {

json complex_to_json(const std::complex<double>& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> complex_from_json(const json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

void to_json(json& j, const RootOfUnity& z) { j = json{{"num", z.num}, {"den", z.den}}; }

void from_json(const json& j, RootOfUnity& z) {
  z = RootOfUnity::make(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

void to_json(json& j, const SpectrumVector& sv) {
  const auto r = static_cast<std::int64_t>(sv.root_order());
  json entries = json::array();
  for (std::int64_t a = 0; a < r; ++a) {
    const RootOfUnity z = RootOfUnity::make(a, r);
    entries.push_back({{"num", z.num}, {"den", z.den}, {"mult", sv[static_cast<std::size_t>(a)]}});
  }
  j = json{{"root_order", r}, {"multiplicities", entries}, {"sum", sv.total()}};
}

void from_json(const json& j, SpectrumVector& sv) {
  const auto r = j.at("root_order").get<std::int64_t>();
  if (r < 1) throw DomainError("root_order must be >= 1");
  std::vector<std::int64_t> mult(static_cast<std::size_t>(r), 0);
  for (const json& e : j.at("multiplicities")) {
    const RootOfUnity z = e.get<RootOfUnity>();
    if (r % z.den != 0) throw DomainError("root is not of the declared order");
    mult[static_cast<std::size_t>(z.num * (r / z.den))] = e.at("mult").get<std::int64_t>();
  }
  sv = SpectrumVector(static_cast<std::size_t>(r), std::move(mult));
}

void to_json(json& j, const ModMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.dim(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  j = json{{"modulus", m.modulus()}, {"rows", rows}};
}

void from_json(const json& j, ModMatrix& m) {
  const auto& rows = j.at("rows");
  const auto dim = static_cast<Eigen::Index>(rows.size());
  IntMatrix e(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    if (static_cast<Eigen::Index>(rows[r].size()) != dim) throw DomainError("matrix rows are ragged");
    for (Eigen::Index c = 0; c < dim; ++c) e(r, c) = rows[r][c].get<std::int64_t>();
  }
  m = ModMatrix(j.at("modulus").get<std::int64_t>(), e);
}

void to_json(json& j, const CongruenceDiagonalization& d) {
  j = json{{"T", d.transform},
           {"D", d.diagonal},
           {"normalized_T", d.normalized_transform},
           {"normalized_D", d.normalized_diagonal}};
}

void from_json(const json& j, CongruenceDiagonalization& d) {
  d.transform = j.at("T").get<ModMatrix>();
  d.diagonal = j.at("D").get<ModMatrix>();
  d.normalized_transform = j.at("normalized_T").get<ModMatrix>();
  d.normalized_diagonal = j.at("normalized_D").get<ModMatrix>();
}

void to_json(json& j, const Theorem3Result& r) {
  j = json{{"is_perm", r.is_perm}, {"is_iso", r.is_iso}, {"p", nullptr}};
  if (r.p) j["p"] = *r.p;
}

void from_json(const json& j, Theorem3Result& r) {
  r.is_perm = j.at("is_perm").get<bool>();
  r.is_iso = j.at("is_iso").get<bool>();
  r.p.reset();
  if (!j.at("p").is_null()) r.p = j.at("p").get<Permutation>();
}

void to_json(json& j, const GaussSumReport& g) {
  j = json{{"p", g.p},
           {"l", g.l},
           {"a", g.a},
           {"re", g.value.real()},
           {"im", g.value.imag()},
           {"abs", std::abs(g.value)},
           {"l_is_residue", g.l_is_residue}};
}

void from_json(const json& j, GaussSumReport& g) {
  g.p = j.at("p").get<std::int64_t>();
  g.l = j.at("l").get<std::int64_t>();
  g.a = j.at("a").get<std::int64_t>();
  g.value = {j.at("re").get<double>(), j.at("im").get<double>()};
  g.l_is_residue = j.at("l_is_residue").get<bool>();
}

void to_json(json& j, const ZpForm& f) {
  j = json{{"k", f.k}, {"sign", f.sign}, {"root", f.distinguished}, {"description", f.description}};
}

void from_json(const json& j, ZpForm& f) {
  f.k = j.at("k").get<std::int64_t>();
  f.sign = j.at("sign").get<int>();
  f.distinguished = j.at("root").get<RootOfUnity>();
  f.description = j.at("description").get<std::string>();
}

void to_json(json& j, const Theorem3Report& r) {
  j = json{{"group", r.group},
           {"bijections", r.bijections},
           {"isomorphisms", r.isomorphisms},
           {"disagreements", r.disagreements},
           {"counterexamples", r.counterexamples}};
}

void from_json(const json& j, Theorem3Report& r) {
  r.group = j.at("group").get<std::string>();
  r.bijections = j.at("bijections").get<std::size_t>();
  r.isomorphisms = j.at("isomorphisms").get<std::size_t>();
  r.disagreements = j.at("disagreements").get<std::size_t>();
  r.counterexamples = j.at("counterexamples").get<std::vector<Permutation>>();
}

void to_json(json& j, const CheckResult& c) {
  j = json{{"name", c.name}, {"passed", c.passed}, {"counters", c.counters}, {"detail", c.detail}};
}

void from_json(const json& j, CheckResult& c) {
  c.name = j.at("name").get<std::string>();
  c.passed = j.at("passed").get<bool>();
  c.counters = j.at("counters").get<std::map<std::string, std::int64_t>>();
  c.detail = j.at("detail").get<std::string>();
}

void to_json(json& j, const VerifyReport& r) {
  j = json{{"suite", r.suite}, {"passed", r.passed()}, {"checks", r.checks}};
}

void from_json(const json& j, VerifyReport& r) {
  r.suite = j.at("suite").get<std::string>();
  r.checks = j.at("checks").get<std::vector<CheckResult>>();
}

}  // namespace ffts
