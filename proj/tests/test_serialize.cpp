#include "doctest.h"
#include "xfkit/double_description.hpp"
#include "xfkit/errors.hpp"
#include "xfkit/parallel.hpp"
#include "xfkit/polyhedral_model.hpp"
#include "xfkit/serialize.hpp"
#include "xfkit/suites.hpp"

using namespace xfkit;

namespace {

ExtendedFormulation reload(const ExtendedFormulation& ext) {
  return formulation_from_json(Json::parse(to_json(ext).dump()));
}

}  // namespace

TEST_CASE("serialize: rationals are p/q strings") {
  CHECK(to_json(Rational(-3, 6)) == "-1/2");
  CHECK(to_json(Rational(4)) == "4/1");
  CHECK(rational_from_json(Json("7/14")) == Rational(1, 2));
  CHECK(rational_from_json(Json(3)) == Rational(3));
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), MalformedInput);
  CHECK_THROWS_AS(rational_from_json(Json("1/0")), MalformedInput);
  CHECK_THROWS_AS(rational_from_json(Json("x")), MalformedInput);
}

TEST_CASE("serialize: polyhedra round trip") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const HPolyhedron h = tjoin_dominant_h(s);
  const Json j = to_json(h, s.edge_labels());
  CHECK(j.at("variables").at(0) == "x12");
  CHECK(j.at("inequalities").at(0).at("coeffs").size() == 6);
  const HPolyhedron back = hpolyhedron_from_json(Json::parse(j.dump()));
  CHECK(back.inequalities() == h.inequalities());
  CHECK(back.equalities() == h.equalities());

  const VPolyhedron v = h_to_v(h);
  const VPolyhedron vb = vpolyhedron_from_json(Json::parse(to_json(v).dump()));
  CHECK(vb.vertices() == v.vertices());
  CHECK(vb.rays() == v.rays());
}

TEST_CASE("serialize: formulations keep blocks, notes and size") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const auto ext = tjoin_dominant_extension(s);
  const Json j = to_json(ext);
  CHECK(j.at("size") == 114);
  CHECK(j.at("blocks").size() == ext.blocks.size());
  const auto back = reload(ext);
  CHECK(back.kind == ext.kind);
  CHECK(back.size() == 114);
  CHECK(back.lifted.inequalities() == ext.lifted.inequalities());
  CHECK(back.lifted.equalities() == ext.lifted.equalities());
  CHECK(back.projection.rows() == ext.projection.rows());
  CHECK(back.notes == ext.notes);
  REQUIRE(back.blocks.size() == ext.blocks.size());
  for (std::size_t i = 0; i < ext.blocks.size(); ++i) {
    CHECK(back.blocks[i].label == ext.blocks[i].label);
    CHECK(back.blocks[i].start == ext.blocks[i].start);
    CHECK(back.blocks[i].count == ext.blocks[i].count);
  }
}

TEST_CASE("serialize: malformed formulation documents are rejected") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  Json j = to_json(tjoin_flow_piece(s, {{1, 2}}));
  {
    Json bad = j;
    bad["size"] = 17;
    CHECK_THROWS_AS(formulation_from_json(bad), MalformedInput);
  }
  {
    Json bad = j;
    bad["inequalities"][0]["coeffs"].erase(0);
    CHECK_THROWS_AS(formulation_from_json(bad), MalformedInput);
  }
  {
    Json bad = j;
    bad.erase("projection");
    CHECK_THROWS_AS(formulation_from_json(bad), MalformedInput);
  }
  {
    Json bad = j;
    bad["blocks"][0]["count"] = 1000;
    CHECK_THROWS_AS(formulation_from_json(bad), MalformedInput);
  }
  CHECK_THROWS_AS(hpolyhedron_from_json(Json::array()), MalformedInput);
}

TEST_CASE("serialize: build, save, load and verify matches the in-process report") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const HPolyhedron target = tjoin_dominant_h(s);
  const VPolyhedron target_v = h_to_v(target);
  const std::vector<ExtendedFormulation> exts{tjoin_dominant_extension(s), tcut_dominant_extension(s),
                                              ve_radial_cone_extension(s, s.parse_edges("12,34"))};
  const std::vector<HPolyhedron> targets{target, tcut_dominant_h(s),
                                         radial_cone_h(target, characteristic_vector(s, s.parse_edges("12,34")))};
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const VPolyhedron tv = h_to_v(targets[i]);
    const auto direct = verify_extension_projects_to(exts[i], targets[i], tv, "claim");
    const auto loaded = verify_extension_projects_to(reload(exts[i]), targets[i], tv, "claim");
    CHECK(direct.verified());
    CHECK(to_json(direct, false) == to_json(loaded, false));
  }
}

TEST_CASE("serialize: refutation certificates carry their witness point") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const auto sel = piece_selectors(s).front();
  const auto report =
      verify_extension_contained_in(tjoin_flow_piece_without_capacity(s, sel, 0), tjoin_dominant_h(s));
  REQUIRE(report.status == ReportStatus::refuted);
  const Json j = to_json(report);
  const Json& last = j.at("certificates").back();
  CHECK(last.at("kind") == "row-violated-ray");
  CHECK(last.contains("point"));
  CHECK(last.at("image").size() == 6);
  CHECK(j.contains("seconds"));
  CHECK_FALSE(to_json(report, false).contains("seconds"));
  CHECK(summary_line(report).find("witness:") != std::string::npos);
}

TEST_CASE("serialize: main theorem face document") {
  const EdgeSpace s = EdgeSpace::all_terminals(4);
  const Json j = to_json(main_theorem_face(s, {1}), s);
  CHECK(j.at("kind") == "main-theorem-face");
  CHECK(j.at("forbidden") == "{13,14,23,24}");
  CHECK(j.at("blocks").size() >= 1);
}

TEST_CASE("suites: names, unknown suite and expected refutations") {
  const auto& names = suite_names();
  CHECK(names.back() == "all-desk-scale");
  CHECK(std::find(names.begin(), names.end(), "q-equals-qtilde") != names.end());
  CHECK_THROWS_AS(run_suite("no-such-suite", {}), MalformedInput);

  VerificationReport ok;
  ok.claim = "inner";
  CHECK(expect_refuted("outer", ok).status == ReportStatus::refuted);
  VerificationReport skipped = ok;
  skipped.status = ReportStatus::skipped;
  CHECK(expect_refuted("outer", skipped).status == ReportStatus::refuted);
}

TEST_CASE("suites: sizes and mutations at n = 4") {
  SuiteConfig c;
  for (const auto& r : run_suite("sizes", c)) CHECK_MESSAGE(r.verified(), r.claim << ": " << r.detail);
  const auto mutations = run_suite("mutations", c);
  CHECK(mutations.size() == 4 + 6 + 1);
  for (const auto& r : mutations) CHECK_MESSAGE(r.verified(), r.claim << ": " << r.detail);
}

TEST_CASE("suites: options narrow the instance") {
  SuiteConfig c;
  c.join = "12,34";
  CHECK(run_suite("fm-equals-gm", c).size() == 2);
  c.edge = "34";
  const auto one = run_suite("fm-equals-gm", c);
  REQUIRE(one.size() == 1);
  CHECK(one[0].claim.find("m = 34") != std::string::npos);
  c.edge = "12,34";
  CHECK_THROWS_AS(run_suite("fm-equals-gm", c), MalformedInput);

  SuiteConfig q;
  q.n = 6;
  q.u1 = std::vector<Node>{1, 2, 3};
  const auto r = run_suite("q-equals-qtilde", q);
  REQUIRE(r.size() == 1);
  CHECK(r[0].verified());

  SuiteConfig pair;
  pair.terminals = {1, 2};
  const auto faces = run_suite("face-radial-cone", pair);
  CHECK(faces.size() >= 1);
  CHECK(run_suite("mutations", pair).size() == 4 + 6);
}

TEST_CASE("suites: report JSON does not depend on the worker count") {
  SuiteConfig c;
  const std::size_t before = default_workers();
  set_default_workers(1);
  const auto a = run_suite("structure-lemma", c);
  set_default_workers(4);
  const auto b = run_suite("structure-lemma", c);
  set_default_workers(before);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i], false) == to_json(b[i], false));
}
