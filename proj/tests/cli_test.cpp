#include "cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

namespace labgraph::cli {
namespace {

const std::string kFixtures = LABGRAPH_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Call(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.ends_with(".json")) a = kFixtures + "/" + a;
  }
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

bool HasLine(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(CliTest, FishProperties) {
  const auto r = Call({"properties", "fish.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(HasLine(r.out, "left-resolving: true"));
  EXPECT_TRUE(HasLine(r.out, "weakly-left-resolving: true"));
  EXPECT_TRUE(HasLine(r.out, "row-finite+essential: true"));
}

TEST(CliTest, GrossTuckerShifted) {
  const auto r = Call({"gross-tucker", "shifted-action.json", "--eta0", "shifted-sections.json", "--window", "-4:6"});
  EXPECT_EQ(r.code, 0) << r.err;
  for (const char* line : {"c(e)=1", "c(f)=-1", "c(g)=3", "d(f)=0", "d(g)=2", "eta1(g)=(g,2)", "isomorphism: true",
                           "equivariant: true"}) {
    EXPECT_TRUE(HasLine(r.out, line)) << line << "\n" << r.out;
  }
}

TEST(CliTest, NofdHasNoFundamentalDomain) {
  const auto r = Call({"fundomain", "nofd.json", "--window", "-3:3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(HasLine(r.out, "domain: NONE")) << r.out;
}

TEST(CliTest, NofdSuppliedDomainWitness) {
  const auto r = Call({"fundomain", "nofd.json", "--window=-3:3", "--domain", "nofd-domain.json", "--json"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["fundamental domain"].get<bool>());
  bool found = false;
  for (const auto& v : j["violations"]) {
    if (v["clause"] == "(b) source") {
      found = true;
      EXPECT_EQ(v["label1"], "(1,3)");
      EXPECT_EQ(v["label2"], "(1,0)");
    }
  }
  EXPECT_TRUE(found) << r.out;
}

TEST(CliTest, JsonReportsParse) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"properties", "complement-witness.json", "--json"},
        {"lattice", "fish.json", "--json"},
        {"paths", "fish4.json", "--max-len", "2", "--json"},
        {"skew", "fdok.json", "--json"},
        {"translate", "skewz.json", "--window", "-2:2", "--json"},
        {"quotient", "fdok-explicit.json", "--json"},
        {"act-check", "swap-action.json", "--json"},
        {"label-consistency", "nofd.json", "--json"},
        {"iso-check", "skewz.json", "skewz-d5.json", "--window", "-6:6", "--json"},
        {"export-dot", "fish.json", "--json"}}) {
    const auto r = Call(args);
    EXPECT_LE(r.code, 1) << args[0] << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << args[0];
  }
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Call({"properties", "fish.json"}).code, 0);
  EXPECT_EQ(Call({"properties", "complement-witness.json"}).code, 1);
  EXPECT_EQ(Call({"label-consistency", "fdok.json"}).code, 0);
  EXPECT_EQ(Call({"label-consistency", "nofd.json"}).code, 1);
  EXPECT_EQ(Call({"act-check", "swap-action.json"}).code, 0);
  EXPECT_EQ(Call({"gross-tucker", "swap-action.json"}).code, 1);
  EXPECT_EQ(Call({"gross-tucker", "nofd.json", "--window", "-3:3"}).code, 1);
  EXPECT_EQ(Call({"range", "fish.json", "--word", "11", "--from", "w"}).code, 1);
  EXPECT_EQ(Call({"iso-check", "fish.json", "fish4.json", "--morphism", "shifted-sections.json"}).code, 2);
  // Usage and input errors.
  EXPECT_EQ(Call({}).code, 2);
  EXPECT_EQ(Call({"frobnicate"}).code, 2);
  EXPECT_EQ(Call({"properties", "fish.json", "--unknown"}).code, 2);
  EXPECT_EQ(Call({"properties", "skewz.json"}).code, 2);
  EXPECT_EQ(Call({"properties", "fish.json", "--window", "0:1"}).code, 2);
  EXPECT_EQ(Call({"properties", "skewz.json", "--window", "3:1"}).code, 2);
  EXPECT_EQ(Call({"properties", "missing.json"}).code, 2);
  EXPECT_EQ(Call({"range", "fish.json", "--word", "7"}).code, 2);
  EXPECT_EQ(Call({"paths", "fish.json", "--max-len", "0"}).code, 2);
  EXPECT_EQ(Call({"--help"}).code, 0);
}

TEST(CliTest, Deterministic) {
  const std::vector<std::string> args{"lattice", "complement-witness.json", "--complements"};
  EXPECT_EQ(Call(args).out, Call(args).out);
}

TEST(CliTest, DotForNofdWindow) {
  const auto r = Call({"export-dot", "nofd.json", "--window", "-1:2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"(w,1)\" -> \"(w,2)\" [label=\"(1,3)\""), std::string::npos) << r.out;
}

}  // namespace
}  // namespace labgraph::cli
