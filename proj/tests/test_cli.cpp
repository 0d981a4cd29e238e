#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "modrep/cli.hpp"
#include "modrep/error.hpp"
#include "modrep/suites.hpp"

using namespace modrep;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "modrep");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(MODREP_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("fnv1a reference values") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("json round trips") {
  auto f9 = FiniteField::create(3, 2);
  auto f = field_from_json(to_json(*f9));
  CHECK(same_field(f, f9));
  for (std::uint32_t c = 0; c < f9->order(); ++c) {
    CHECK(scalar_from_json(*f9, scalar_to_json(*f9, f9->element(c))) == f9->element(c));
  }
  Matrix m(f9, 2, 3);
  m(0, 1) = f9->element(7);
  m(1, 2) = f9->element(4);
  CHECK(matrix_from_json(f9, to_json(m)) == m);

  auto d4 = builtin_group("D4");
  auto g = group_from_json(to_json(*d4));
  CHECK(g->order() == 8);
  CHECK(to_json(*g) == to_json(*d4));
  auto s = all_subgroups(Subgroup::whole(d4))[3];
  CHECK(subgroup_from_json(d4, to_json(s)) == s);

  auto v = Rep::regular(Subgroup::whole(d4), f9);
  auto back = rep_from_json(d4, to_json(v, "D4"));
  CHECK(back.same_action(v));
}

TEST_CASE("rep_from_json generator form and errors") {
  auto c3 = builtin_group("C3");
  json j = {{"field", {{"p", 3}}}, {"dim", 2}, {"generators", {{"1", {{1, 1}, {0, 1}}}}}};
  auto v = rep_from_json(c3, j);
  CHECK(v.dim() == 2);
  j["generators"]["1"] = {{2, 0}, {0, 1}};
  CHECK_THROWS_AS(rep_from_json(c3, j), InputError);
}

TEST_CASE("group files") {
  auto s3 = group_from_file(data("groups/s3_perm.json"));
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  auto c3 = group_from_file(data("groups/c3_shifted.json"));
  CHECK(c3->identity() == 2);
  CHECK_THROWS_AS(group_from_file(data("groups/missing.json")), InputError);
}

TEST_CASE("catalogs") {
  auto def = default_catalog();
  CHECK(def.groups.size() == 9);
  CHECK(def.fields.size() == 4);
  auto file = load_catalog(data("catalog.json"));
  REQUIRE(file.groups.size() == def.groups.size());
  for (std::size_t i = 0; i < def.groups.size(); ++i) CHECK(file.groups[i].name == def.groups[i].name);
  auto small = load_catalog(data("catalog_small.json"));
  CHECK(small.groups.size() == 5);
  CHECK(small.groups[3].name == "V4");
  CHECK_THROWS_AS(catalog_from_json(json{{"groups", {"C7x"}}, {"fields", {{{"p", 2}}}}}), InputError);
  CHECK_THROWS_AS(catalog_from_json(json{{"groups", {"C2"}}, {"fields", {{{"p", 4}}}}}), InputError);
}

TEST_CASE("rep_catalog is deterministic and bounded") {
  auto g = Subgroup::whole(builtin_group("S3"));
  auto f = FiniteField::create(2);
  auto a = rep_catalog(g, f, 4, 7);
  auto b = rep_catalog(g, f, 4, 7);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() <= 8);
  CHECK(a.front().name == "triv");
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].rep.same_action(b[i].rep));
    CHECK(a[i].rep.dim() <= 4);
  }
}

TEST_CASE("report summary and ordering") {
  Report r{"demo", 3, {}};
  r.cases.push_back({"b", "00", Outcome::fail, json::object()});
  r.cases.push_back({"a", "01", Outcome::pass, json{{"checks", 2}}});
  r.cases.push_back({"c", "02", Outcome::error, json{{"error", "x"}}});
  auto j = r.to_json();
  CHECK(j["schema"] == "1");
  CHECK(j["seed"] == 3);
  CHECK(j["cases"][0]["id"] == "a");
  CHECK(j["summary"]["total"] == 3);
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["error"] == 1);
  CHECK_FALSE(r.all_pass());
  auto text = r.to_text();
  CHECK(text.back() == '\n');
  CHECK(text.find("checks=2") != std::string::npos);
}

TEST_CASE("verify command") {
  auto ok = cli({"verify", "--suite", "phi-machinery"});
  CHECK(ok.code == kExitOk);
  auto j = json::parse(ok.out);
  CHECK(j["suite"] == "phi-machinery");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(ok.out.back() == '\n');

  CHECK(cli({"verify", "--suite", "nonsense"}).code == kExitInput);
  CHECK(cli({"verify"}).code == kExitInput);
  CHECK(cli({"verify", "--suite", "higman", "--catalog", data("nope.json")}).code == kExitInput);

  auto text = cli({"verify", "--suite", "higman", "--catalog", data("catalog_small.json"), "--format", "text"});
  CHECK(text.code == kExitOk);
  auto small = load_catalog(data("catalog_small.json"));
  std::size_t expected = 0;
  for (const auto& g : small.groups) expected += all_subgroups(Subgroup::whole(g.group)).size() * small.fields.size();
  std::size_t rows = 0;
  std::istringstream is(text.out);
  for (std::string line; std::getline(is, line);) rows += line.find("/W=triv") != std::string::npos;
  CHECK(rows == expected);
}

TEST_CASE("verify is byte-deterministic and honours --out") {
  const auto a = cli({"verify", "--suite", "chi-functor", "--seed", "11"});
  const auto b = cli({"verify", "--suite", "chi-functor", "--seed", "11"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto c = cli({"verify", "--suite", "chi-functor", "--seed", "12"});
  CHECK(json::parse(c.out)["seed"] == 12);

  const auto path = (std::filesystem::temp_directory_path() / "modrep_cli_out.json").string();
  const auto d = cli({"verify", "--suite", "chi-functor", "--seed", "11", "--out", path});
  CHECK(d.code == kExitOk);
  CHECK(d.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
  std::filesystem::remove(path);
}

TEST_CASE("fairness sl2") {
  auto r = cli({"fairness", "--mode", "sl2", "--p", "2", "--m", "1", "--n", "1", "--oracle-N", "4"});
  CHECK(r.code == kExitOk);
  auto j = json::parse(r.out);
  CHECK(j["certificate"]["n_prime"] == 2);
  CHECK(j["certificate"]["strict_component"] == "torus");
  CHECK(j["oracle"]["agreement"] == "pass");
  CHECK(j["oracle"]["runs"].size() == 2);

  auto bad = cli({"fairness", "--mode", "sl2", "--p", "2", "--m", "1", "--n", "1", "--oracle-N", "2", "--a", "1"});
  CHECK(bad.code == kExitPrecondition);
  CHECK(bad.err.find("n + 2a") != std::string::npos);

  auto plain = cli({"fairness", "--p", "3", "--m", "2", "--n", "1", "--format", "text"});
  CHECK(plain.code == kExitOk);
  CHECK(plain.out.find("n'=3") != std::string::npos);
}

TEST_CASE("fairness finite") {
  auto same = cli({"fairness", "--mode", "finite", "--group", "S3", "--K", "(1 2)", "--H", "(1 2)", "--Hprime", "(1 2)"});
  CHECK(same.code == kExitOk);
  auto j = json::parse(same.out);
  CHECK(j["report"]["outcome"] == "witness-found");
  CHECK(j["report"]["g_label"] == "e");

  auto w = cli({"fairness", "--mode", "finite", "--group", "S3", "--K", "(1 2)", "--H", "(1 2)", "--Hprime", "e"});
  CHECK(json::parse(w.out)["report"]["g_label"] == "(1 2 3)");

  auto ex = cli({"fairness", "--mode", "finite", "--group", data("groups/s3_perm.json"), "--K", "(1 2 3)", "--H",
                 "(1 2 3)", "--Hprime", "e"});
  CHECK(ex.code == kExitOk);
  CHECK(json::parse(ex.out)["report"]["outcome"] == "exhausted");

  CHECK(cli({"fairness", "--mode", "finite", "--group", "S3", "--H", "e", "--Hprime", "(1 2)"}).code == kExitInput);
  CHECK(cli({"fairness", "--mode", "finite", "--group", "nosuch.json"}).code == kExitInput);
}

TEST_CASE("stable command") {
  auto c2 = cli({"stable", "--group", "C2", "--field", "2", "--U", "e", "--pair", "triv,triv"});
  CHECK(c2.code == kExitOk);
  auto j = json::parse(c2.out);
  CHECK(j["pairs"][0]["injective"]["stable_dim"] == 1);
  CHECK(j["pairs"][0]["projective"]["stable_dim"] == 1);
  for (const auto& o : j["objects"]) CHECK(o["frobenius_cross_check"] == "pass");

  auto whole = cli({"stable", "--group", "S3", "--field", "F_4", "--U", "G", "--pair", "triv,triv", "--pair",
                    "perm{0,5},triv", "--pair", "triv,perm{0,1,2}"});
  CHECK(whole.code == kExitOk);
  for (const auto& p : json::parse(whole.out)["pairs"]) CHECK(p["injective"]["stable_dim"] == 0);

  auto c3 = json::parse(cli({"stable", "--group", "C3", "--field", "3"}).out);
  std::map<std::string, std::pair<int, int>> dims;
  for (const auto& o : c3["objects"]) dims[o["name"]] = {o["T_dim"], o["Omega_dim"]};
  CHECK(dims["triv"] == std::pair{2, 2});
  CHECK(dims["J2"] == std::pair{4, 4});

  CHECK(cli({"stable", "--group", "C2", "--pair", "triv,ghost"}).code == kExitInput);
  CHECK(cli({"stable", "--group", "C2", "--field", "6"}).code == kExitInput);
  CHECK(cli({"stable", "--group", "C2", "--U", "9"}).code == kExitInput);
}
