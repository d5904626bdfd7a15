#include "k3lat/commands.hpp"

#include "k3lat/errors.hpp"

#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

using namespace k3lat;
using nlohmann::ordered_json;

namespace {

Config lambda_config() {
  return parse_config(R"({
    "schema": 1,
    "gram": [[2, 5], [5, 4]],
    "basis_names": ["L", "H"],
    "ample": "L",
    "polarizations": ["H", "5L-H"],
    "search_degree_max": 50,
    "orbit_count": 10
  })");
}

Config perturbed_config() {
  return parse_config(R"({
    "schema": 1,
    "gram": [[2, 7], [7, 4]],
    "basis_names": ["L", "H"],
    "ample": "L",
    "polarizations": ["H", "5L-H"],
    "search_degree_max": 50,
    "orbit_count": 10
  })");
}

const std::vector<std::string> kCheckOrder{
    "discriminant",
    "no-isotropic-classes",
    "no-degree-zero-rational-curve",
    "ample-chamber-reduction",
    "section-dimensions",
    "covering-involution-matrix",
    "effective-cone",
    "pell-rational-curve",
    "pell-mobile-part",
    "ample-degrees",
    "very-ampleness",
    "no-line",
    "polarization-intersection",
    "beauville-matrices",
    "composite-char-poly",
    "infinite-order",
    "fixed-vector",
    "orbit-witness",
    "product-mds",
};

const CheckResult& find_check(const Report& r, const std::string& id) {
  auto it = std::find_if(r.checks.begin(), r.checks.end(),
                         [&](const CheckResult& c) { return c.id == id; });
  REQUIRE(it != r.checks.end());
  return *it;
}

}  // namespace

TEST_CASE("the verification suite passes end to end") {
  Report r = cmd_verify_paper(lambda_config(), {});

  std::vector<std::string> ids;
  for (const CheckResult& c : r.checks) ids.push_back(c.id);
  CHECK(ids == kCheckOrder);
  for (const CheckResult& c : r.checks) CHECK(c.status == "pass");
  CHECK(r.skipped.empty());
  CHECK(exit_code(r) == 0);

  CHECK(find_check(r, "discriminant").data["abs_determinant"] == "17");
  CHECK(find_check(r, "effective-cone").data["ray1"]["coordinates"] ==
        ordered_json::array({"-1", "2"}));
  CHECK(find_check(r, "polarization-intersection").data["pairing"] == "21");
  const auto& bm = find_check(r, "beauville-matrices").data;
  CHECK(bm["composite"] ==
        ordered_json::array({ordered_json::array({"360", "19", "36"}),
                             ordered_json::array({"-19", "-1", "-2"}),
                             ordered_json::array({"0", "0", "1"})}));
  const auto& fv = find_check(r, "fixed-vector").data;
  CHECK(fv["vector_in_working_basis"] ==
        ordered_json::array({"2", "2", "-21"}));
  CHECK(fv["vector"] == ordered_json::array({"10", "0", "-25"}));
  CHECK(fv["norm"] == "-1050");
  CHECK(find_check(r, "composite-char-poly").data["characteristic"]["text"] ==
        "t^3 - 360t^2 + 360t - 1");
  CHECK(find_check(r, "product-mds").data["conclusion"] == "mds-consistent");
}

TEST_CASE("a perturbed form fails the discriminant check first") {
  Report r = cmd_verify_paper(perturbed_config(), {});

  REQUIRE(!r.checks.empty());
  CHECK(r.checks[0].id == "discriminant");
  CHECK(r.checks[0].status == "fail");
  CHECK(r.checks[0].data["abs_determinant"] == "41");
  CHECK(exit_code(r) == 1);

  // informative diffs on the determinant-sensitive checks
  const auto& tau = find_check(r, "covering-involution-matrix");
  CHECK(tau.status == "fail");
  CHECK(tau.data["matrix"] ==
        ordered_json::array(
            {ordered_json::array({"1", "7"}), ordered_json::array({"0", "-1"})}));
  CHECK(find_check(r, "pell-rational-curve").status == "fail");
  CHECK(find_check(r, "pell-rational-curve").data["solutions"] ==
        ordered_json::array());
  const auto& pi = find_check(r, "polarization-intersection");
  CHECK(pi.status == "fail");
  CHECK(pi.data["pairing"] == "31");

  // cone-dependent checks refuse to answer within the default budget
  CHECK(find_check(r, "ample-chamber-reduction").status == "inconclusive");
  CHECK(find_check(r, "effective-cone").status == "inconclusive");
  CHECK(find_check(r, "product-mds").status == "inconclusive");
}

TEST_CASE("missing polarizations downgrade checks to skipped") {
  Config cfg = parse_config(R"({
    "schema": 1,
    "gram": [[2, 5], [5, 4]],
    "basis_names": ["L", "H"],
    "ample": "L"
  })");
  Report r = cmd_verify_paper(cfg, {});

  CHECK(r.checks.size() == 9);
  CHECK(r.skipped.size() == 10);
  CHECK(r.skipped[0].id == "section-dimensions");
  for (const CheckResult& c : r.checks) CHECK(c.status == "pass");
  CHECK(exit_code(r) == 0);

  // with one polarization only the two-polarization checks are skipped
  Config one = parse_config(R"({
    "schema": 1,
    "gram": [[2, 5], [5, 4]],
    "basis_names": ["L", "H"],
    "ample": "L",
    "polarizations": ["H"]
  })");
  Report r1 = cmd_verify_paper(one, {});
  CHECK(r1.checks.size() == 13);
  CHECK(r1.skipped.size() == 6);
  CHECK(r1.skipped[0].id == "polarization-intersection");
  CHECK(exit_code(r1) == 0);
}

TEST_CASE("an undersized degree budget yields inconclusive, never a guess") {
  CommandOptions opt;
  opt.degree_max = 3;
  Report r = cmd_verify_paper(lambda_config(), opt);

  CHECK(exit_code(r) == 2);
  CHECK(find_check(r, "discriminant").status == "pass");
  CHECK(find_check(r, "effective-cone").status == "inconclusive");
  CHECK(find_check(r, "effective-cone").data["degree_max"] == 3);
  for (const CheckResult& c : r.checks) CHECK(c.status != "fail");
}

TEST_CASE("orbit length can be overridden") {
  CommandOptions opt;
  opt.orbit = 4;
  Report r = cmd_verify_paper(lambda_config(), opt);
  CHECK(find_check(r, "orbit-witness").data["count"] == 4);
  CHECK(find_check(r, "orbit-witness").status == "pass");
}

TEST_CASE("info reports lattice facts") {
  Report r = cmd_info(lambda_config());
  CHECK(r.command == "info");
  CHECK(r.checks.empty());
  CHECK(r.data["rank"] == 2);
  CHECK(r.data["abs_determinant"] == "17");
  CHECK(r.data["even"] == true);
  CHECK(r.data["signature"]["positive"] == 1);
  CHECK(r.data["polarizations"][1]["name"] == "5L-H");
  CHECK(r.data["isotropic_classes"] == ordered_json::array());
  CHECK(exit_code(r) == 0);

  Config bad = parse_config(R"({
    "schema": 1,
    "gram": [[2, 1, 0], [1, -2, 0], [0, 0, -2]],
    "basis_names": ["a", "b", "c"],
    "ample": [1, 0, 0]
  })");
  CHECK_THROWS_AS(cmd_info(bad), ConfigError);  // rank 3 is out of scope
}

TEST_CASE("curves and cones report the certified rays") {
  Report rc = cmd_curves(lambda_config(), {});
  REQUIRE(rc.checks.size() == 1);
  CHECK(rc.checks[0].id == "cone-resolution");
  CHECK(rc.checks[0].status == "pass");
  CHECK(rc.data["rational_curve_classes"].size() == 2);
  CHECK(rc.data["rational_curve_classes"][0]["degree"] == "8");
  CHECK(rc.data["degree_zero_classes"] == ordered_json::array());

  Report rn = cmd_cones(lambda_config(), {});
  CHECK(rn.data["nef_cone"]["ray1"]["coordinates"] ==
        ordered_json::array({"-3", "8"}));
  CHECK(rn.data["nef_cone"]["ray_pairing"] == "1122");
  CHECK(rn.data["ample_is_nef"] == true);

  CommandOptions tight;
  tight.degree_max = 3;
  Report rt = cmd_cones(lambda_config(), tight);
  CHECK(rt.checks[0].status == "inconclusive");
  CHECK(exit_code(rt) == 2);
  CHECK(rt.data.find("nef_cone") == rt.data.end());
}

TEST_CASE("the involution command pins the covering action") {
  Report r = cmd_involution(lambda_config());
  CHECK(r.data["matrix"] ==
        ordered_json::array(
            {ordered_json::array({"1", "5"}), ordered_json::array({"0", "-1"})}));
  CHECK(r.data["squares_to_identity"] == true);
  CHECK(r.data["curve_action"][0]["to"] == ordered_json::array({"9", "-2"}));

  // an ample class of the wrong degree cannot define the double cover
  Config cfg = parse_config(R"({
    "schema": 1,
    "gram": [[2, 5], [5, 4]],
    "basis_names": ["L", "H"],
    "ample": "H"
  })");
  CHECK_THROWS_AS(cmd_involution(cfg), ConfigError);
}

TEST_CASE("the dynamics command exposes powers and orbits") {
  CommandOptions opt;
  opt.power = 3;
  Report r = cmd_dynamics(lambda_config(), opt);

  CHECK(r.data["pairing_m"] == "21");
  CHECK(r.data["composite"]["matrix_in_working_basis"] ==
        ordered_json::array({ordered_json::array({"360", "19", "36"}),
                             ordered_json::array({"-19", "-1", "-2"}),
                             ordered_json::array({"0", "0", "1"})}));
  CHECK(r.data["power"]["exponent"] == 3);
  CHECK(r.data["power"]["matrix_in_working_basis"] ==
        ordered_json::array(
            {ordered_json::array({"46396441", "2448720", "4651920"}),
             ordered_json::array({"-2448720", "-129239", "-245520"}),
             ordered_json::array({"0", "0", "1"})}));
  CHECK(r.data["order_certificate"]["finite"] == false);
  CHECK(r.data["orbit"]["classes"].size() == 10);
  CHECK(r.data["orbit"]["classes"][1]["coordinates"] ==
        ordered_json::array({"-10", "38", "-33"}));
  CHECK(r.data["orbit"]["classes"][1]["degree"] == "102");

  Config one = parse_config(R"({
    "schema": 1,
    "gram": [[2, 5], [5, 4]],
    "basis_names": ["L", "H"],
    "ample": "L",
    "polarizations": ["H"]
  })");
  CHECK_THROWS_AS(cmd_dynamics(one, {}), ConfigError);

  CommandOptions tight;
  tight.degree_max = 3;  // certification cannot resolve the nef cone
  CHECK_THROWS_AS(cmd_dynamics(lambda_config(), tight), InconclusiveConeError);
}

TEST_CASE("the product command reports the squared surface") {
  CommandOptions opt;
  opt.seed = 5;
  Report r = cmd_product(lambda_config(), opt);

  CHECK(r.data["copies"] == 2);
  CHECK(r.data["total_rank"] == 4);
  CHECK(r.data["total_determinant"] == "289");
  CHECK(r.data["invariant_ample"]["coordinates"] ==
        ordered_json::array({"34", "0", "34", "0"}));
  CHECK(r.data["invariant_ample"]["member"] == true);
  CHECK(r.data["invariant_ample"]["fixed_by_swap"] == true);
  CHECK(r.data["mds_checklist"]["conclusion"] == "mds-consistent");
  CHECK(r.data["membership_examples"][1]["member"] == false);
  CHECK(r.data["sampled_members"]["seed"] == 5);
  CHECK(r.data["sampled_members"]["all_member"] == true);
  CHECK(exit_code(r) == 0);
}
