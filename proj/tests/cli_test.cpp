#include "ffts/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "ffts/io.hpp"
#include "ffts/oracle.hpp"
#include "gtest/gtest.h"

namespace ffts {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ffts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { unsetenv("FFTS_DIM_CAP"); }
};

TEST_F(CliTest, SpectrumJson) {
  const Outcome r = run({"spectrum", "--group", "Z7^2", "--iso-matrix", "1,0;1,1", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const SpectrumVector sv = json::parse(r.out).get<SpectrumVector>();
  EXPECT_EQ(sv, final_table(7));
  EXPECT_EQ(json::parse(r.out)["sum"], 49);
}

TEST_F(CliTest, SpectrumTextAndCsv) {
  const Outcome text = run({"spectrum", "--group", "Z5", "--l", "1"});
  ASSERT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("+1"), std::string::npos);
  EXPECT_NE(text.out.find("sum"), std::string::npos);

  const Outcome csv = run({"spectrum", "--group", "Z5", "--l", "1", "--format", "csv"});
  ASSERT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out, "num,den,multiplicity\n0,1,2\n1,4,1\n1,2,1\n3,4,1\n");

  const Outcome table = run({"spectrum", "--group", "Z2xZ2", "--table", "0,2,1,3", "--format", "csv"});
  EXPECT_EQ(table.code, kExitOk) << table.err;
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> cmds{
      {"spectrum", "--group", "Z13^2", "--iso-matrix", "1,0;1,1", "--format", "json"},
      {"gauss-sum", "--p", "11", "--l", "3", "--char", "5", "--json"},
      {"diagonalize", "--p", "7", "--matrix", "1,2;2,5", "--json"},
      {"verify", "--suite", "zp", "--json"},
      {"char-table", "--group", "Z2xZ3", "--format", "csv"}};
  for (const auto& c : cmds) {
    const Outcome a = run(c), b = run(c);
    EXPECT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST_F(CliTest, CheckPermutation) {
  const Outcome iso = run({"check-permutation", "--group", "Z6", "--l", "5", "--json"});
  ASSERT_EQ(iso.code, kExitOk);
  const auto r = json::parse(iso.out).get<Theorem3Result>();
  EXPECT_TRUE(r.is_perm && r.is_iso);
  EXPECT_EQ(*r.p, (Permutation{0, 5, 4, 3, 2, 1}));

  const Outcome non = run({"check-permutation", "--group", "Z4", "--table", "0,2,1,3"});
  ASSERT_EQ(non.code, kExitOk);
  EXPECT_EQ(non.out, "is_perm false\nis_iso false\n");
}

TEST_F(CliTest, GaussSum) {
  const Outcome r = run({"gauss-sum", "--p", "7", "--l", "1", "--char", "3"});
  ASSERT_EQ(r.code, kExitOk);
  const auto comma = r.out.find(',');
  ASSERT_NE(comma, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(0, comma)), 0.0, 1e-12);
  EXPECT_NEAR(std::stod(r.out.substr(comma + 1)), 1.0, 1e-12);

  const Outcome j = run({"gauss-sum", "--p", "5", "--l", "1", "--char", "2", "--json"});
  ASSERT_EQ(j.code, kExitOk);
  const auto g = json::parse(j.out);
  EXPECT_NEAR(g["re"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(g["l_is_residue"].get<bool>());
}

TEST_F(CliTest, Diagonalize) {
  const Outcome r = run({"diagonalize", "--p", "3", "--matrix", "0,1;1,0", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto d = json::parse(r.out).get<CongruenceDiagonalization>();
  EXPECT_EQ(transpose(d.transform) * d.diagonal * d.transform, ModMatrix::parse(3, "0,1;1,0"));
  EXPECT_EQ(d.normalized_diagonal, ModMatrix::parse(3, "1,0;0,2"));
  EXPECT_EQ(run({"diagonalize", "--p", "3", "--matrix", "0,1;1,0"}).code, kExitOk);
}

TEST_F(CliTest, VerifyAndCharTable) {
  const Outcome v = run({"verify", "--suite", "theorem3"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_EQ(v.out.find("FAIL"), std::string::npos);
  const Outcome vj = run({"verify", "--suite", "table6", "--json"});
  ASSERT_EQ(vj.code, kExitOk);
  EXPECT_TRUE(json::parse(vj.out).get<VerifyReport>().passed());

  const Outcome t = run({"char-table", "--group", "Z4", "--format", "json"});
  ASSERT_EQ(t.code, kExitOk);
  const auto tj = json::parse(t.out);
  EXPECT_EQ(tj["values"][1][1], (json{{"num", 1}, {"den", 4}}));
  EXPECT_EQ(run({"char-table", "--group", "Z3"}).code, kExitOk);
}

TEST_F(CliTest, DomainErrorsExitOne) {
  for (const auto& c : std::vector<std::vector<std::string>>{
           {"spectrum", "--group", "Z4", "--table", "0,2,1,3"},
           {"spectrum", "--group", "Z6", "--l", "2"},
           {"spectrum", "--group", "Z0", "--l", "1"},
           {"spectrum", "--group", "Z2xZ4", "--iso-matrix", "1,0;0,1"},
           {"spectrum", "--group", "Z4", "--table", "0,1,x,3"},
           {"gauss-sum", "--p", "9", "--l", "1", "--char", "1"},
           {"gauss-sum", "--p", "7", "--l", "0", "--char", "1"},
           {"diagonalize", "--p", "5", "--matrix", "1,2;3,4"}}) {
    const Outcome r = run(c);
    EXPECT_EQ(r.code, kExitDomainError) << c[0] << ' ' << c[2];
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
  }
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  for (const auto& c : std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"spectrum", "--group", "Z5"},
           {"spectrum", "--l", "1"},
           {"spectrum", "--group", "Z5", "--l", "1", "--table", "0,1,2,3,4"},
           {"spectrum", "--group", "Z5", "--l", "1", "--format", "xml"},
           {"verify", "--suite", "nope"},
           {"gauss-sum", "--l", "1"}}) {
    EXPECT_EQ(run(c).code, kExitUsage);
  }
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DimCapPrecedence) {
  EXPECT_EQ(resolve_dim_cap(std::nullopt, nullptr), kDefaultDimCap);
  EXPECT_EQ(resolve_dim_cap(std::nullopt, ""), kDefaultDimCap);
  EXPECT_EQ(resolve_dim_cap(std::nullopt, "100"), 100u);
  EXPECT_EQ(resolve_dim_cap(7, "100"), 7u);
  EXPECT_THROW(resolve_dim_cap(std::nullopt, "lots"), DomainError);

  EXPECT_EQ(run({"--dim-cap", "4", "spectrum", "--group", "Z5", "--l", "1"}).code, kExitDomainError);
  EXPECT_EQ(run({"spectrum", "--group", "Z2^13", "--l", "1"}).code, kExitDomainError);

  setenv("FFTS_DIM_CAP", "4", 1);
  EXPECT_EQ(run({"spectrum", "--group", "Z5", "--l", "1"}).code, kExitDomainError);
  EXPECT_EQ(run({"--dim-cap", "5", "spectrum", "--group", "Z5", "--l", "1"}).code, kExitOk);
  unsetenv("FFTS_DIM_CAP");
}

}  // namespace
}  // namespace ffts
