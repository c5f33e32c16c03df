#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "birkit/session.hpp"

using namespace birkit;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  return std::string(BIRKIT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("conic fixture loads with the right presentation") {
  Session s = load_session(fixture("conic.json"));
  CHECK(s.variety->r() == 2);
  CHECK(s.variety->d0() == 2);
  CHECK(s.variety->nondegenerate());
  CHECK(s.has_map("sigma1"));
  CHECK(s.has_map("sigma1_lin"));
  CHECK(s.map("sigma1").degree == 2);
  CHECK(s.map("sigma1_lin").degree == 1);
  CHECK_THROWS_AS(s.map("nope"), Error);
}

TEST_CASE("veronese fixture loads in five variables") {
  Session s = load_session(fixture("veronese.json"));
  CHECK(s.ring->nvars() == 5);
  CHECK(s.variety->r() == 3);
  CHECK(s.variety->d0() == 2);
  CHECK(s.map("phi").degree == 2);
  CHECK(s.map("phi_inv").degree == 3);
}

TEST_CASE("p2 control fixture has the zero ideal") {
  Session s = load_session(fixture("p2.json"));
  CHECK(s.variety->defining_ideal().gens.empty());
  CHECK(s.variety->r() == 3);
  CHECK(s.variety->d0() == 0);
}

TEST_CASE("round trip: load, serialize, reload agree") {
  for (const char* name : {"conic.json", "cusp.json", "veronese.json", "p2.json"}) {
    Session a = load_session(fixture(name));
    json j = session_to_json(a);
    Session b = session_from_json(j, "roundtrip");
    CHECK(a.digest == b.digest);
    CHECK(a.variety->defining_ideal().gens.size() == b.variety->defining_ideal().gens.size());
    for (size_t i = 0; i < a.variety->defining_ideal().gens.size(); ++i)
      CHECK(reorder(a.variety->defining_ideal().gens[i], b.ring) ==
            b.variety->defining_ideal().gens[i]);
    CHECK(a.maps.size() == b.maps.size());
    for (size_t i = 0; i < a.maps.size(); ++i) {
      CHECK(a.maps[i].first == b.maps[i].first);
      for (size_t k = 0; k < a.maps[i].second.forms.size(); ++k)
        CHECK(reorder(a.maps[i].second.forms[k], b.ring) == b.maps[i].second.forms[k]);
    }
  }
}

TEST_CASE("schema errors carry the field path") {
  json bad = {{"field", "QQ"}, {"vars", {"x", "y"}}};
  try {
    session_from_json(bad, "inline");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Schema);
    CHECK(std::string(e.what()).find("/ideal") != std::string::npos);
  }

  json bad2 = {{"field", "ZZ"}, {"vars", {"x"}}, {"ideal", json::array()}};
  CHECK_THROWS_AS(session_from_json(bad2, "inline"), Error);

  json bad3 = {{"field", json{{"prime", 10}}}, {"vars", {"x"}}, {"ideal", json::array()}};
  CHECK_THROWS_AS(session_from_json(bad3, "inline"), Error);  // not prime
}

TEST_CASE("homogeneity errors name the offending map") {
  json j = {{"field", "QQ"},
            {"vars", {"x", "y", "z"}},
            {"ideal", {"y^2 - x*z"}},
            {"maps", {{"bad", {{"degree", 2}, {"forms", {"x + y^2", "x^2", "z^2"}}}}}}};
  try {
    session_from_json(j, "inline");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Homogeneity);
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }

  // declared degree disagrees with the forms
  json j2 = {{"field", "QQ"},
             {"vars", {"x", "y", "z"}},
             {"ideal", {"y^2 - x*z"}},
             {"maps", {{"off", {{"degree", 3}, {"forms", {"x^2", "y^2", "z^2"}}}}}}};
  CHECK_THROWS_AS(session_from_json(j2, "inline"), Error);
}

TEST_CASE("io error on missing file") {
  try {
    load_session(fixture("missing.json"));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Io);
    CHECK(exit_code_for(e.kind()) == 1);
  }
}

TEST_CASE("limits: session options and exit codes") {
  json j = {{"field", "QQ"},
            {"vars", {"x", "y", "z"}},
            {"ideal", {"y^2 - x*z"}},
            {"options", {{"max_degree", 17}, {"max_pairs", 1234}, {"seed", 9}}}};
  Session s = session_from_json(j, "inline");
  CHECK(s.limits.max_degree == 17);
  CHECK(s.limits.max_pairs == 1234);
  CHECK(s.seed == 9);
  CHECK(exit_code_for(ErrorKind::ResourceLimit) == 2);
  CHECK(exit_code_for(ErrorKind::Internal) == 3);
  CHECK(exit_code_for(ErrorKind::Syntax) == 1);
}

TEST_CASE("digest is stable and content-sensitive") {
  Session a = load_session(fixture("conic.json"));
  Session b = load_session(fixture("conic.json"));
  CHECK(a.digest == b.digest);
  Session c = load_session(fixture("cusp.json"));
  CHECK(a.digest != c.digest);
}

TEST_CASE("prime field sessions run the pipeline end to end") {
  json j = {{"field", {{"prime", 101}}},
            {"vars", {"x", "y", "z"}},
            {"ideal", {"y^2 - x*z"}},
            {"maps",
             {{"sigma1", {{"degree", 2}, {"forms", {"y*z", "x*z", "x*y"}}}},
              {"lin", {{"degree", 1}, {"forms", {"z", "y", "x"}}}}}}};
  Session s = session_from_json(j, "inline-f101");
  CHECK(s.variety->r() == 2);
  CHECK(s.variety->hilbert_function(2) == 5);
  CHECK(same_map(s.map("sigma1"), s.map("lin")));
  MapVerdict mv = bir_xd_membership(s.map("lin"));
  CHECK(mv.in_bir_xd);
  BirationalVerdict v = is_birational(s.map("sigma1"));
  CHECK(v.kind == BirKind::Yes);
  CHECK(v.inverse_degree == 1);
}

TEST_CASE("the stored veronese ideal is the recomputed projection kernel") {
  // kernel of a_i -> (st, su, t^2, tu, u^2), recomputed by elimination
  RingPtr big = make_ring(FieldSpec::rationals(),
                          {"s", "t", "u", "a0", "a1", "a2", "a3", "a4"});
  std::vector<std::string> rel = {"a0 - s*t", "a1 - s*u", "a2 - t^2", "a3 - t*u",
                                  "a4 - u^2"};
  Ideal kernel = eliminate(make_ideal(big, rel), {3, 4, 5, 6, 7});

  Session v = load_session(fixture("veronese.json"));
  std::vector<Poly> stored;
  for (const auto& g : v.variety->defining_ideal().gens)
    stored.push_back(reorder(g, kernel.ring));
  CHECK(ideal_equal(kernel, make_ideal(kernel.ring, stored)));
}

TEST_CASE("reports conform to the schema") {
  Session s = load_session(fixture("conic.json"));
  auto report = make_report("dim", &s, nlohmann::ordered_json::object(),
                            nlohmann::ordered_json{{"dim_R", 2}},
                            nlohmann::ordered_json::object(), 1.25, s.limits);
  std::string why;
  CHECK(report_conforms(report, &why));
  report.erase("verdicts");
  CHECK(!report_conforms(report, &why));
  CHECK(!why.empty());
}
