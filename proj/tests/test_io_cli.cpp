#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace phantomkit;

namespace {

const std::string kData = PHANTOMKIT_TEST_DATA;

std::string data(const std::string& name) { return kData + "/" + name; }

RingResolver catalog_resolver() {
  return [](const std::string& name) { return Ring::make(catalog_algebra(name)); };
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "phantomkit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string parse_error(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    return e.what();
  }
  ADD_FAILURE() << "no error";
  return {};
}

}  // namespace

// ---------------------------------------------------------------- JSON forms

TEST(Io, ModuleRoundTrip) {
  auto r = support::ring("nakayama:2,2,1@p=2");
  for (std::size_t t = 0; t < 10; ++t) {
    Rng rng = derived_rng(1300, t);
    auto m = gen_random_module(r, t % 2 ? Side::Left : Side::Right, 4, rng);
    const std::string text = module_to_json(m).dump(2);
    EXPECT_EQ(parse_module(text, "mem", catalog_resolver()), m);
  }
}

TEST(Io, AlgebraRoundTrip) {
  for (const char* spec : {"triangular_2", "truncated_poly:3@p=3", "nakayama:2,2@p=3"}) {
    auto a = catalog_algebra(spec);
    EXPECT_EQ(parse_algebra(algebra_to_json(a).dump(), "mem"), a);
  }
  auto sq = parse_algebra(read_text_file(data("square_zero.json")), "square_zero.json");
  EXPECT_EQ(sq.dim(), 3u);
  EXPECT_FALSE(sq.declared_gorenstein());
}

TEST(Io, MorphismWithRelativePaths) {
  auto f = parse_morphism(read_text_file(data("socle.json")), "socle.json", catalog_resolver(), kData);
  EXPECT_EQ(f.source().dim(), 1u);
  EXPECT_EQ(f.target().dim(), 2u);
  auto j = morphism_to_json(f);
  auto g = parse_morphism(j.dump(), "inline", catalog_resolver(), ".");
  EXPECT_EQ(g.matrix(), f.matrix());
}

TEST(Io, ErrorsAreLineAnchored) {
  auto res = catalog_resolver();
  EXPECT_NE(parse_error([&] { parse_module(read_text_file(data("malformed.json")), "malformed.json", res); })
                .find("malformed.json:5:"),
            std::string::npos);
  EXPECT_NE(parse_error([&] { parse_module(read_text_file(data("bad_action.json")), "bad_action.json", res); })
                .find("bad_action.json:5:"),
            std::string::npos);
  EXPECT_NE(parse_error([&] { parse_algebra(read_text_file(data("bad_unit.json")), "bad_unit.json"); })
                .find("bad_unit.json:6:"),
            std::string::npos);
  EXPECT_NE(parse_error([&] { read_text_file(data("missing.json")); }).find("cannot open"), std::string::npos);
  EXPECT_NE(parse_error([&] { parse_module(R"({"algebra": "field@p=2", "side": "up", "dim": 1, "action": [[[1]]]})",
                                           "inline", res); })
                .find("\"side\""),
            std::string::npos);
}

// ---------------------------------------------------------------- command line

TEST(Cli, ZeroMorphismIsPhantom) {
  auto r = cli({"check", "--builtin", "truncated_poly:2@p=2", data("zero_k.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("phantom: yes (witness h=0)"), std::string::npos) << r.out;
}

TEST(Cli, IdentityOnTrivialModuleFailsAllFour) {
  auto r = cli({"check", "--builtin", "truncated_poly:2@p=2", data("id_k.json")});
  EXPECT_EQ(r.code, 0);
  for (const char* label : {"phantom: no (witness", "projective morphism: no (witness", "Ext-phantom: no (witness",
                            "injective morphism: no (witness"})
    EXPECT_NE(r.out.find(label), std::string::npos) << label << "\n" << r.out;
}

TEST(Cli, CheckJsonAndSamples) {
  auto r = cli({"check", "--builtin", "truncated_poly:2@p=2", data("id_k.json"), "--json", "--samples", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["phantom"]["verdict"], false);
  EXPECT_EQ(j["sampled"]["implication_holds"], true);
  EXPECT_EQ(r.out, cli({"check", "--builtin", "truncated_poly:2@p=2", data("id_k.json"), "--json", "--samples", "4"}).out);
}

TEST(Cli, ExtAndTorTables) {
  auto e = cli({"ext", "--builtin", "truncated_poly:2@p=2", data("k.json"), data("k.json"), "--json"});
  ASSERT_EQ(e.code, 0) << e.err;
  auto j = Json::parse(e.out);
  ASSERT_EQ(j.size(), 5u);
  for (const auto& row : j) EXPECT_EQ(row["dim"], 1);
  auto t = cli({"tor", "--builtin", "truncated_poly:2@p=2", data("regular.json"), data("k_left.json"), "--json"});
  ASSERT_EQ(t.code, 0) << t.err;
  auto tj = Json::parse(t.out);
  EXPECT_EQ(tj[0]["dim"], 1);
  for (std::size_t i = 1; i < tj.size(); ++i) EXPECT_EQ(tj[i]["dim"], 0);
}

TEST(Cli, RingInfo) {
  auto r = cli({"ringinfo", "--builtin", "truncated_poly:2@p=2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("certificate: 0-Gorenstein"), std::string::npos) << r.out;
  auto t = cli({"ringinfo", "--builtin", "triangular_2"});
  EXPECT_NE(t.out.find("certificate: 1-Gorenstein"), std::string::npos) << t.out;
  auto u = cli({"ringinfo", "--ring", data("square_zero.json"), "--cutoff", "3"});
  EXPECT_EQ(u.code, 0);
  EXPECT_NE(u.out.find("refusal"), std::string::npos) << u.out;
}

TEST(Cli, GpTest) {
  auto ok = cli({"gp-test", "--builtin", "truncated_poly:2@p=2", data("k.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("gorenstein projective: yes"), std::string::npos) << ok.out;
  auto refused = cli({"gp-test", "--ring", data("square_zero.json"), data("square_zero_k.json"), "--cutoff", "3"});
  EXPECT_EQ(refused.code, 2);
  EXPECT_NE(refused.err.find("ConfigError"), std::string::npos) << refused.err;
}

TEST(Cli, VerifyExitCodes) {
  auto ok = cli({"verify", "--theorem", "thm11"});
  EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
  auto bad = cli({"verify", "--theorem", "cor_gor", "--builtin", "nakayama:3,3,2@p=2", "--trials", "2"});
  EXPECT_EQ(bad.code, 2);
  auto unknown = cli({"verify", "--theorem", "nope"});
  EXPECT_EQ(unknown.code, 2);
}

TEST(Cli, VerifyReportIsDeterministic) {
  const std::vector<std::string> args{"verify", "--theorem", "thm11", "--trials", "10", "--out", "-"};
  auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(cli({"ext", "--builtin", "truncated_poly:2@p=2", data("malformed.json"), data("k.json")}).code, 2);
  EXPECT_EQ(cli({"ext", "--builtin", "truncated_poly:2@p=2", data("missing.json"), data("k.json")}).code, 2);
  EXPECT_EQ(cli({"check", "--builtin", "truncated_poly:2@p=2", data("not_intertwining.json")}).code, 2);
  EXPECT_EQ(cli({"ringinfo", "--ring", data("bad_unit.json")}).code, 2);
  EXPECT_EQ(cli({"ext", "--no-such-flag"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
  auto e = cli({"ext", "--builtin", "truncated_poly:2@p=2", data("bad_action.json"), data("k.json")});
  EXPECT_NE(e.err.find("bad_action.json:5:"), std::string::npos) << e.err;
}
