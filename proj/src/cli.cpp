#include "ffts/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "ffts/characters.hpp"
#include "ffts/io.hpp"
#include "ffts/mappings.hpp"
#include "ffts/modlinalg.hpp"
#include "ffts/oracle.hpp"
#include "ffts/spectra.hpp"
#include "ffts/transform.hpp"

namespace ffts {

std::size_t resolve_dim_cap(std::optional<std::size_t> flag, const char* env_value) {
  if (flag) return *flag;
  if (env_value && *env_value) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env_value, &end, 10);
    if (end == env_value || *end != '\0') {
      throw DomainError(std::string("FFTS_DIM_CAP is not a number: '") + env_value + "'");
    }
    return static_cast<std::size_t>(v);
  }
  return kDefaultDimCap;
}

namespace {

struct MappingArgs {
  std::optional<std::int64_t> l;
  std::optional<std::string> matrix;
  std::optional<std::string> table;
};

void add_mapping_options(CLI::App* cmd, MappingArgs& args) {
  auto* l = cmd->add_option("--l", args.l, "scalar l for Z/n: j(x)(y) = e_n(x y l)");
  auto* m = cmd->add_option("--iso-matrix", args.matrix, "matrix M_j for (Z/n)^m, rows separated by ';'");
  auto* t = cmd->add_option("--table", args.table, "dual indices j(g) in canonical element order");
  l->excludes(m)->excludes(t);
  m->excludes(t);
}

MappingJ resolve_mapping(const GroupSpec& spec, const MappingArgs& args) {
  if (args.l) return CyclicScalar{*args.l};
  if (args.matrix) {
    if (!spec.is_homogeneous()) throw DomainError("--iso-matrix needs a group (Z/n)^m");
    return MatrixMap{ModMatrix::parse(spec.modulus(0), *args.matrix)};
  }
  if (args.table) {
    TableMap t;
    std::stringstream ss(*args.table);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        t.images.push_back(static_cast<std::size_t>(v));
      } catch (const std::exception&) {
        throw DomainError("malformed table entry '" + tok + "'");
      }
    }
    return t;
  }
  throw CLI::ValidationError("mapping", "one of --l, --iso-matrix, --table is required");
}

std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void print_spectrum(std::ostream& out, const GroupSpec& spec, const SpectrumVector& sv,
                    const std::string& format) {
  const auto r = static_cast<std::int64_t>(sv.root_order());
  if (format == "json") {
    out << json(sv).dump() << '\n';
  } else if (format == "csv") {
    out << "num,den,multiplicity\n";
    for (std::int64_t a = 0; a < r; ++a) {
      const RootOfUnity z = RootOfUnity::make(a, r);
      out << z.num << ',' << z.den << ',' << sv[static_cast<std::size_t>(a)] << '\n';
    }
  } else {
    out << "group " << spec.to_string() << ", eigenvalues are " << r << "-th roots of unity\n";
    out << std::left << std::setw(20) << "lambda" << "multiplicity\n";
    for (std::int64_t a = 0; a < r; ++a) {
      out << std::setw(20) << root_label(RootOfUnity::make(a, r)) << sv[static_cast<std::size_t>(a)] << '\n';
    }
    out << std::setw(20) << "sum" << sv.total() << '\n';
  }
}

void print_matrix_text(std::ostream& out, const std::string& name, const ModMatrix& m) {
  out << name << " =\n";
  for (Eigen::Index r = 0; r < m.dim(); ++r) {
    out << " ";
    for (Eigen::Index c = 0; c < m.dim(); ++c) out << ' ' << std::setw(4) << m(r, c);
    out << '\n';
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectra of concrete finite Fourier transforms j~ o F", "ffts"};
  app.require_subcommand(1);
  std::optional<std::size_t> dim_cap_flag;
  app.add_option("--dim-cap", dim_cap_flag, "largest |G| accepted (default $FFTS_DIM_CAP or 4096)");

  std::string group_text;
  std::string format = "text";
  bool as_json = false;
  MappingArgs mapping;
  std::int64_t p = 0, l = 1, char_index = 0;
  std::string matrix_text;
  std::string suite = "all";

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalue multiplicities of j~ o F");
  spectrum_cmd->add_option("--group", group_text, "group, e.g. Z5, Z7^2, Z2xZ4")->required();
  add_mapping_options(spectrum_cmd, mapping);
  spectrum_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  auto* perm_cmd = app.add_subcommand("check-permutation", "is (j~ o F)^2 a permutation?");
  perm_cmd->add_option("--group", group_text)->required();
  add_mapping_options(perm_cmd, mapping);
  perm_cmd->add_flag("--json", as_json);

  auto* gauss_cmd = app.add_subcommand("gauss-sum", "normalized Gauss sum S_l(psi_a)");
  gauss_cmd->add_option("--p", p)->required();
  gauss_cmd->add_option("--l", l);
  gauss_cmd->add_option("--char", char_index, "exponent a of psi_a");
  gauss_cmd->add_flag("--json", as_json);

  auto* diag_cmd = app.add_subcommand("diagonalize", "congruence diagonalization M = T^t D T over F_p");
  diag_cmd->add_option("--p", p)->required();
  diag_cmd->add_option("--matrix", matrix_text)->required();
  diag_cmd->add_flag("--json", as_json);

  auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification suites");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"theorem3", "zp", "table6", "gauss", "tensor", "symmetric", "antisymmetric", "all"}));
  verify_cmd->add_flag("--json", as_json);

  auto* table_cmd = app.add_subcommand("char-table", "character values chi_h(x) as exact angles");
  table_cmd->add_option("--group", group_text)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const std::size_t cap = resolve_dim_cap(dim_cap_flag, std::getenv("FFTS_DIM_CAP"));

    if (spectrum_cmd->parsed()) {
      const GroupSpec spec = parse_group(group_text, cap);
      const MappingJ j = resolve_mapping(spec, mapping);
      if (!is_homomorphism(spec, j).is_homomorphism) throw DomainError("j is not an isomorphism");
      print_spectrum(out, spec, spectrum(spec, j), format);
    } else if (perm_cmd->parsed()) {
      const GroupSpec spec = parse_group(group_text, cap);
      const Theorem3Result r = theorem3_check(spec, resolve_mapping(spec, mapping));
      if (as_json) {
        out << json(r).dump() << '\n';
      } else {
        out << "is_perm " << (r.is_perm ? "true" : "false") << "\nis_iso " << (r.is_iso ? "true" : "false") << '\n';
        if (r.p) {
          out << "p";
          for (std::size_t v : *r.p) out << ' ' << v;
          out << '\n';
        }
      }
    } else if (gauss_cmd->parsed()) {
      const GaussSumReport g = gauss_sum_report(p, l, char_index);
      if (as_json) {
        out << json(g).dump() << '\n';
      } else {
        out << format_double(g.value.real(), 15) << ',' << format_double(g.value.imag(), 15) << '\n';
      }
    } else if (diag_cmd->parsed()) {
      const CongruenceDiagonalization d = congruence_diagonalize(ModMatrix::parse(p, matrix_text));
      if (as_json) {
        out << json(d).dump() << '\n';
      } else {
        print_matrix_text(out, "T", d.transform);
        print_matrix_text(out, "D", d.diagonal);
        print_matrix_text(out, "T (normalized)", d.normalized_transform);
        print_matrix_text(out, "D (normalized)", d.normalized_diagonal);
      }
    } else if (verify_cmd->parsed()) {
      const VerifyReport report = run_suite(suite);
      if (as_json) {
        out << json(report).dump() << '\n';
      } else {
        for (const CheckResult& c : report.checks) {
          out << (c.passed ? "PASS " : "FAIL ") << c.name;
          for (const auto& [k, v] : c.counters) out << "  " << k << '=' << v;
          if (!c.detail.empty()) out << "  (" << c.detail << ')';
          out << '\n';
        }
      }
      return report.passed() ? kExitOk : kExitDomainError;
    } else if (table_cmd->parsed()) {
      const GroupSpec spec = parse_group(group_text, cap);
      const auto elements = enumerate(spec);
      if (format == "json") {
        json rows = json::array();
        for (const auto& h : elements) {
          json row = json::array();
          for (const auto& x : elements) row.push_back(char_angle(spec, h, x));
          rows.push_back(row);
        }
        json elems = json::array();
        for (const auto& e : elements) elems.push_back(e.residues);
        out << json{{"group", spec.to_string()}, {"elements", elems}, {"values", rows}}.dump() << '\n';
      } else if (format == "csv") {
        out << "h,x,num,den\n";
        for (std::size_t h = 0; h < elements.size(); ++h)
          for (std::size_t x = 0; x < elements.size(); ++x) {
            const RootOfUnity z = char_angle(spec, elements[h], elements[x]);
            out << h << ',' << x << ',' << z.num << ',' << z.den << '\n';
          }
      } else {
        out << "chi_h(x) = e^(2 pi i t), entries t\n";
        for (const auto& h : elements) {
          for (std::size_t x = 0; x < elements.size(); ++x) {
            const RootOfUnity z = char_angle(spec, h, elements[x]);
            if (x) out << ' ';
            out << std::setw(6) << (z.num == 0 ? std::string("0") : std::to_string(z.num) + "/" + std::to_string(z.den));
          }
          out << '\n';
        }
      }
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace ffts
