#include "k3lat/commands.hpp"

#include "k3lat/errors.hpp"
#include "k3lat/hilb2.hpp"
#include "k3lat/k3geom.hpp"
#include "k3lat/products.hpp"
#include "k3lat/quadform.hpp"

#include <functional>
#include <random>
#include <utility>

namespace k3lat {

namespace {

using nlohmann::ordered_json;

int effective_degree_max(const Config& cfg, const CommandOptions& opt) {
  return opt.degree_max.value_or(cfg.search_degree_max);
}

int effective_orbit(const Config& cfg, const CommandOptions& opt) {
  return opt.orbit.value_or(cfg.orbit_count);
}

// Model construction failures are config problems: surface them as
// ConfigError so the CLI can map them to the config exit code.
K3Model build_model(const Config& cfg, int degree_max) {
  try {
    return K3Model::create(Lattice::make(cfg.gram), cfg.ample, degree_max);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ordered_json js_class(const LatticeVector& v) {
  ordered_json j = ordered_json::object();
  j["coordinates"] = js_vec(v.coords);
  j["norm"] = js_int(norm(v));
  return j;
}

ordered_json js_class_deg(const LatticeVector& v, const LatticeVector& deg) {
  ordered_json j = js_class(v);
  j["degree"] = js_int(pair(v, deg));
  return j;
}

ordered_json js_named_class(const std::string& name, const LatticeVector& v) {
  ordered_json j = ordered_json::object();
  j["name"] = name;
  j["coordinates"] = js_vec(v.coords);
  j["norm"] = js_int(norm(v));
  return j;
}

IntVec ambient_coords(const HilbBasis& basis, const IntVec& basis_coords) {
  std::vector<Rat> c(basis_coords.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = Rat(basis_coords[i]);
  std::vector<Rat> a = basis.to_ambient * c;
  IntVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Int(numerator(a[i]));
  return out;
}

struct CheckOutcome {
  bool pass;
  ordered_json data;
};

CheckResult run_check(const std::string& id, const std::string& description,
                      const std::function<CheckOutcome()>& fn) {
  CheckResult r{id, description, "", ordered_json::object()};
  try {
    CheckOutcome out = fn();
    r.status = out.pass ? "pass" : "fail";
    r.data = std::move(out.data);
  } catch (const InconclusiveConeError& e) {
    r.status = "inconclusive";
    r.data["error"] = e.what();
    r.data["degree_max"] = e.degree_max;
  } catch (const Error& e) {
    r.status = "fail";
    r.data["error"] = e.what();
  }
  return r;
}

// the two certified involutions on the extended lattice plus the working
// basis spanned by their axes and the half-exceptional class
struct DynamicsContext {
  LatticeVector h1, h2;
  HilbSquareLattice hl;
  Isometry i1, i2;
  HilbBasis basis;
};

DynamicsContext make_dynamics_context(const K3Model& model,
                                      const IntVec& p1_coords,
                                      const IntVec& p2_coords) {
  LatticeVector h1 = vec(model.lattice(), p1_coords);
  LatticeVector h2 = vec(model.lattice(), p2_coords);
  HilbSquareLattice hl = extend_lattice(model.lattice());
  Isometry i1 =
      beauville_involution(hl, BeauvillePolarization::certify(model, h1));
  Isometry i2 =
      beauville_involution(hl, BeauvillePolarization::certify(model, h2));
  HilbBasis basis = hilb_basis(hl, h1, h2);
  return DynamicsContext{std::move(h1), std::move(h2), std::move(hl),
                         std::move(i1),  std::move(i2), std::move(basis)};
}

}  // namespace

Report cmd_info(const Config& cfg) {
  Report report;
  report.command = "info";
  K3Model model = build_model(cfg, cfg.search_degree_max);
  const LatticePtr& lat = model.lattice();

  Discriminant d = discriminant(*lat);
  Classification cls = classify(*lat);

  ordered_json& data = report.data;
  data["rank"] = lat->rank();
  data["gram"] = js_matrix(lat->gram());
  data["determinant"] = js_int(d.det);
  data["abs_determinant"] = js_int(d.abs_det);
  data["even"] = cls.even;
  ordered_json sig = ordered_json::object();
  sig["positive"] = cls.positive;
  sig["negative"] = cls.negative;
  data["signature"] = std::move(sig);
  data["basis"] = cfg.basis_names;
  data["ample"] = js_named_class(cfg.ample_name, model.ample());
  ordered_json pols = ordered_json::array();
  for (size_t i = 0; i < cfg.polarizations.size(); ++i)
    pols.push_back(js_named_class(cfg.polarization_names[i],
                                  vec(lat, cfg.polarizations[i])));
  data["polarizations"] = std::move(pols);
  ordered_json iso = ordered_json::array();
  for (const LatticeVector& v : isotropic_classes(lat))
    iso.push_back(js_vec(v.coords));
  data["isotropic_classes"] = std::move(iso);
  data["search_degree_max"] = cfg.search_degree_max;
  return report;
}

Report cmd_curves(const Config& cfg, const CommandOptions& opt) {
  Report report;
  report.command = "curves";
  int dmax = effective_degree_max(cfg, opt);
  K3Model model = build_model(cfg, dmax);

  report.checks.push_back(run_check(
      "cone-resolution",
      "both extremal rays certified within the degree budget", [&] {
        const auto& curves = model.rational_curve_classes();
        ordered_json data = ordered_json::object();
        data["search_degree_max"] = dmax;
        ordered_json list = ordered_json::array();
        for (const LatticeVector& c : curves)
          list.push_back(js_class_deg(c, model.ample()));
        data["count"] = curves.size();
        report.data["ample"] = js_named_class(cfg.ample_name, model.ample());
        report.data["rational_curve_classes"] = std::move(list);
        ordered_json walls = ordered_json::array();
        for (const LatticeVector& w : model.roots_with_degree(0))
          walls.push_back(js_vec(w.coords));
        report.data["degree_zero_classes"] = std::move(walls);
        return CheckOutcome{true, data};
      }));
  return report;
}

Report cmd_cones(const Config& cfg, const CommandOptions& opt) {
  Report report;
  report.command = "cones";
  int dmax = effective_degree_max(cfg, opt);
  K3Model model = build_model(cfg, dmax);

  report.checks.push_back(run_check(
      "cone-resolution",
      "both extremal rays certified within the degree budget", [&] {
        const ConeR2& eff = model.effective_cone();
        const ConeR2& nef = model.nef_cone();
        ordered_json data = ordered_json::object();
        data["search_degree_max"] = dmax;

        ordered_json effective = ordered_json::object();
        effective["ray1"] = js_class_deg(eff.ray1, model.ample());
        effective["ray2"] = js_class_deg(eff.ray2, model.ample());
        report.data["effective_cone"] = std::move(effective);

        ordered_json nefc = ordered_json::object();
        nefc["ray1"] = js_class_deg(nef.ray1, model.ample());
        nefc["ray2"] = js_class_deg(nef.ray2, model.ample());
        nefc["ray_pairing"] = js_int(pair(nef.ray1, nef.ray2));
        report.data["nef_cone"] = std::move(nefc);

        ordered_json curves = ordered_json::array();
        for (const LatticeVector& c : model.rational_curve_classes())
          curves.push_back(js_class_deg(c, model.ample()));
        report.data["rational_curve_classes"] = std::move(curves);
        report.data["ample_is_nef"] = model.is_nef(model.ample());
        return CheckOutcome{true, data};
      }));
  return report;
}

Report cmd_involution(const Config& cfg) {
  Report report;
  report.command = "involution";
  K3Model model = build_model(cfg, cfg.search_degree_max);
  if (norm(model.ample()) != 2)
    throw ConfigError(
        "involution: the configured ample class has self-intersection " +
        str(norm(model.ample())) + "; the covering involution needs 2");

  Isometry tau = anti_involution(model.ample());
  ordered_json& data = report.data;
  data["axis"] = js_named_class(cfg.ample_name, model.ample());
  data["matrix"] = js_matrix(tau.matrix());
  data["determinant"] = js_int(tau.det());
  data["squares_to_identity"] = compose(tau, tau).is_identity();
  data["fixes_axis"] = tau(model.ample()) == model.ample();

  ordered_json action = ordered_json::array();
  for (const LatticeVector& c : model.rational_curve_classes()) {
    ordered_json step = ordered_json::object();
    step["from"] = js_vec(c.coords);
    step["to"] = js_vec(tau(c).coords);
    action.push_back(std::move(step));
  }
  data["curve_action"] = std::move(action);
  return report;
}

Report cmd_dynamics(const Config& cfg, const CommandOptions& opt) {
  Report report;
  report.command = "dynamics";
  if (cfg.polarizations.size() < 2)
    throw ConfigError(
        "dynamics: the config must declare two quartic polarizations");
  int dmax = effective_degree_max(cfg, opt);
  K3Model model = build_model(cfg, dmax);

  DynamicsContext ctx = [&] {
    try {
      return make_dynamics_context(model, cfg.polarizations[0],
                                   cfg.polarizations[1]);
    } catch (const InvalidPolarizationError& e) {
      throw ConfigError(std::string("dynamics: polarization rejected: ") +
                        e.what());
    }
  }();
  Isometry m = compose(ctx.i1, ctx.i2);
  DynamicsReport dyn = composite_dynamics(ctx.i1, ctx.i2, &ctx.basis);

  ordered_json& data = report.data;
  ordered_json pols = ordered_json::array();
  pols.push_back(js_named_class(cfg.polarization_names[0], ctx.h1));
  pols.push_back(js_named_class(cfg.polarization_names[1], ctx.h2));
  data["polarizations"] = std::move(pols);
  data["pairing_m"] = js_int(pair(ctx.h1, ctx.h2));

  auto involution_json = [&](const LatticeVector& h, const Isometry& inv) {
    ordered_json j = ordered_json::object();
    j["axis"] = js_vec(lift_minus_e(ctx.hl, h).coords);
    j["matrix"] = js_matrix(inv.matrix());
    j["matrix_in_working_basis"] = js_matrix(basis_matrix(ctx.basis, inv));
    return j;
  };
  ordered_json invs = ordered_json::array();
  invs.push_back(involution_json(ctx.h1, ctx.i1));
  invs.push_back(involution_json(ctx.h2, ctx.i2));
  data["involutions"] = std::move(invs);

  ordered_json comp = ordered_json::object();
  comp["matrix"] = js_matrix(m.matrix());
  comp["matrix_in_working_basis"] = js_matrix(basis_matrix(ctx.basis, m));
  data["composite"] = std::move(comp);

  data["characteristic"] = js_poly(dyn.characteristic);
  ordered_json factors = ordered_json::array();
  for (const IntPolynomial& f : dyn.factors) factors.push_back(js_poly(f));
  data["factors"] = std::move(factors);

  ordered_json order = ordered_json::object();
  order["finite"] = dyn.certificate.finite;
  if (dyn.certificate.finite) order["order"] = dyn.certificate.order;
  if (dyn.certificate.growth) {
    order["growth_low"] = str(dyn.certificate.growth->lo);
    order["growth_high"] = str(dyn.certificate.growth->hi);
  }
  if (!dyn.certificate.note.empty()) order["note"] = dyn.certificate.note;
  data["order_certificate"] = std::move(order);

  ordered_json fixed = ordered_json::object();
  fixed["dimension"] = dyn.fixed_space_dim;
  if (dyn.fixed_vector) {
    fixed["vector_in_working_basis"] = js_vec(dyn.fixed_vector->coords);
    fixed["vector"] =
        js_vec(ambient_coords(ctx.basis, dyn.fixed_vector->coords));
    fixed["norm"] = js_int(*dyn.fixed_vector_norm);
  }
  data["fixed_space"] = std::move(fixed);

  int power = opt.power;
  ordered_json pw = ordered_json::object();
  pw["exponent"] = power;
  pw["matrix_in_working_basis"] = js_matrix(
      basis_matrix(ctx.basis, m.pow(static_cast<unsigned>(power))));
  data["power"] = std::move(pw);

  int count = effective_orbit(cfg, opt);
  LatticeVector e = exceptional_half_class(ctx.hl);
  LatticeVector degree_class = lift(ctx.hl, ctx.h1);
  std::vector<LatticeVector> classes = orbit(m, e, count - 1);
  ordered_json orb = ordered_json::object();
  orb["count"] = count;
  orb["seed"] = js_vec(e.coords);
  ordered_json members = ordered_json::array();
  for (const LatticeVector& c : classes)
    members.push_back(js_class_deg(c, degree_class));
  orb["classes"] = std::move(members);
  data["orbit"] = std::move(orb);
  return report;
}

Report cmd_product(const Config& cfg, const CommandOptions& opt) {
  Report report;
  report.command = "product";
  int dmax = effective_degree_max(cfg, opt);
  K3Model model = build_model(cfg, dmax);

  ProductModel p = ProductModel::direct_sum({FactorEntry{model, 2}});
  Isometry swap = block_permutation(p, {1, 0});
  const ConeR2& nef = model.nef_cone();

  FiniteRayCone cone{
      p.total(),
      {p.embed(0, nef.ray1), p.embed(0, nef.ray2), p.embed(1, nef.ray1),
       p.embed(1, nef.ray2)},
      {true, true, true, true}};
  LatticeVector invariant = invariant_ample_from_rays(cone, {swap});
  MdsReport mds = mds_checklist(cone, true);

  ordered_json& data = report.data;
  ordered_json factor = ordered_json::object();
  factor["gram"] = js_matrix(model.lattice()->gram());
  factor["ample"] = js_named_class(cfg.ample_name, model.ample());
  data["factor"] = std::move(factor);
  data["copies"] = p.slices().size();
  data["total_rank"] = p.total()->rank();
  data["total_determinant"] = js_int(discriminant(*p.total()).det);
  data["swap_matrix"] = js_matrix(swap.matrix());

  ordered_json rays = ordered_json::array();
  for (const LatticeVector& r : cone.rays) rays.push_back(js_vec(r.coords));
  data["nef_rays"] = std::move(rays);
  data["semi_ample_flags_declared"] = true;

  ordered_json inv = js_class(invariant);
  inv["member"] = product_cone_membership(p, invariant);
  inv["fixed_by_swap"] = swap(invariant) == invariant;
  data["invariant_ample"] = std::move(inv);

  ordered_json checklist = ordered_json::object();
  checklist["picard_assumed"] = mds.picard_assumed;
  checklist["nef_semi_ample"] = mds.nef_semi_ample;
  checklist["single_chamber"] = mds.single_chamber;
  checklist["consistent"] = mds.consistent;
  checklist["conclusion"] = mds.conclusion;
  if (!mds.reason.empty()) checklist["reason"] = mds.reason;
  data["mds_checklist"] = std::move(checklist);

  LatticeVector diag =
      p.embed(0, model.ample()) + p.embed(1, model.ample());
  LatticeVector off = p.embed(0, model.ample()) + p.embed(1, -model.ample());
  ordered_json examples = ordered_json::array();
  for (const LatticeVector* x : {&diag, &off}) {
    ordered_json ex = ordered_json::object();
    ex["class"] = js_vec(x->coords);
    ex["member"] = product_cone_membership(p, *x);
    examples.push_back(std::move(ex));
  }
  data["membership_examples"] = std::move(examples);

  // seeded nonnegative ray combinations must all land inside the cone
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coeff(0, 9);
  const int samples = 5;
  bool all_member = true;
  LatticeVector previous = zero_vector(p.total());
  for (int s = 0; s < samples; ++s) {
    LatticeVector x = zero_vector(p.total());
    for (const LatticeVector& r : cone.rays) x = x + r.scaled(coeff(rng));
    all_member = all_member && product_cone_membership(p, x);
    // the cone is closed under addition: spot-check against the previous draw
    if (s > 0) all_member = all_member && product_cone_membership(p, x + previous);
    previous = x;
  }
  ordered_json sampled = ordered_json::object();
  sampled["seed"] = opt.seed;
  sampled["count"] = samples;
  sampled["all_member"] = all_member;
  data["sampled_members"] = std::move(sampled);
  return report;
}

Report cmd_verify_paper(const Config& cfg, const CommandOptions& opt) {
  Report report;
  report.command = "verify-paper";
  int dmax = effective_degree_max(cfg, opt);
  int orbit_count = effective_orbit(cfg, opt);
  K3Model model = build_model(cfg, dmax);
  const LatticePtr& lat = model.lattice();

  report.data["basis"] = cfg.basis_names;
  report.data["ample"] = cfg.ample_name;
  report.data["search_degree_max"] = dmax;
  report.data["orbit_count"] = orbit_count;

  // checks are appended in a fixed order; a check whose required
  // polarizations are missing from the config is recorded as skipped
  auto add = [&](const char* id, const char* description, size_t needed_pols,
                 const std::function<CheckOutcome()>& fn) {
    if (cfg.polarizations.size() < needed_pols) {
      report.skipped.push_back(
          {id, needed_pols == 1
                   ? "config declares no quartic polarization"
                   : "config declares fewer than two quartic polarizations"});
      return;
    }
    report.checks.push_back(run_check(id, description, fn));
  };

  add("discriminant",
      "the intersection form has determinant of absolute value 17", 0, [&] {
        Discriminant d = discriminant(*lat);
        ordered_json data = ordered_json::object();
        data["determinant"] = js_int(d.det);
        data["abs_determinant"] = js_int(d.abs_det);
        data["expected_abs_determinant"] = "17";
        return CheckOutcome{d.abs_det == 17, data};
      });

  add("no-isotropic-classes",
      "no nonzero class has self-intersection zero (the discriminant is not "
      "a perfect square)",
      0, [&] {
        std::vector<LatticeVector> iso = isotropic_classes(lat);
        ordered_json data = ordered_json::object();
        ordered_json list = ordered_json::array();
        for (const LatticeVector& v : iso) list.push_back(js_vec(v.coords));
        data["isotropic_classes"] = std::move(list);
        data["none_expected"] = true;
        return CheckOutcome{iso.empty() && model.no_isotropic_classes(), data};
      });

  add("no-degree-zero-rational-curve",
      "no class of self-intersection -2 is orthogonal to the ample class", 0,
      [&] {
        std::vector<LatticeVector> roots =
            solve_norm_degree(model.ample(), 0, -2);
        // the primitive generator of the orthogonal complement of the ample
        // class, whose norm shows which squares -2 would have to be
        IntVec g(2);
        for (int i = 0; i < 2; ++i) {
          g[static_cast<size_t>(i)] =
              pair(basis_vector(lat, i), model.ample());
        }
        LatticeVector w = vec(lat, primitive({g[1], -g[0]}));
        ordered_json data = ordered_json::object();
        ordered_json list = ordered_json::array();
        for (const LatticeVector& v : roots) list.push_back(js_vec(v.coords));
        data["orthogonal_roots"] = std::move(list);
        data["orthogonal_generator"] = js_vec(w.coords);
        data["orthogonal_generator_norm"] = js_int(norm(w));
        return CheckOutcome{roots.empty(), data};
      });

  add("ample-chamber-reduction",
      "the declared ample class already lies in the nef chamber (empty "
      "reflection word)",
      0, [&] {
        ChamberReduction red = model.chamber_reduce(model.ample());
        ordered_json data = ordered_json::object();
        data["image"] = js_vec(red.image.coords);
        data["reflections_applied"] = red.roots.size();
        data["sign_flipped"] = red.sign_flipped;
        return CheckOutcome{red.image == model.ample() && red.roots.empty() &&
                                !red.sign_flipped,
                            data};
      });

  add("section-dimensions",
      "section counts are 3 for the ample class and 4 for the quartic "
      "polarization",
      1, [&] {
        Int h0_ample = model.section_space_dimension(model.ample());
        Int h0_pol = model.section_space_dimension(
            vec(lat, cfg.polarizations[0]));
        ordered_json data = ordered_json::object();
        data["ample_sections"] = js_int(h0_ample);
        data["polarization_sections"] = js_int(h0_pol);
        data["expected"] = {3, 4};
        return CheckOutcome{h0_ample == 3 && h0_pol == 4, data};
      });

  add("covering-involution-matrix",
      "the anti-involution fixing the ample class acts by [[1,5],[0,-1]]", 0,
      [&] {
        Isometry tau = anti_involution(model.ample());
        IntMatrix expected = IntMatrix::from_rows({{1, 5}, {0, -1}});
        ordered_json data = ordered_json::object();
        data["matrix"] = js_matrix(tau.matrix());
        data["expected"] = js_matrix(expected);
        return CheckOutcome{tau.matrix() == expected, data};
      });

  add("effective-cone",
      "the effective cone is spanned by the -2 classes (-1,2) and (9,-2), "
      "both of degree 8 and swapped by the covering involution",
      0, [&] {
        const ConeR2& eff = model.effective_cone();
        const auto& curves = model.rational_curve_classes();
        Isometry tau = anti_involution(model.ample());
        ordered_json data = ordered_json::object();
        data["ray1"] = js_class_deg(eff.ray1, model.ample());
        data["ray2"] = js_class_deg(eff.ray2, model.ample());
        data["expected_rays"] = ordered_json::array(
            {ordered_json::array({"-1", "2"}), ordered_json::array({"9", "-2"})});
        bool swapped =
            tau(eff.ray1) == eff.ray2 && tau(eff.ray2) == eff.ray1;
        data["swapped_by_involution"] = swapped;
        bool rays_match = eff.ray1.coords == IntVec{-1, 2} &&
                          eff.ray2.coords == IntVec{9, -2};
        bool degrees_match = pair(eff.ray1, model.ample()) == 8 &&
                             pair(eff.ray2, model.ample()) == 8;
        return CheckOutcome{
            rays_match && degrees_match && swapped && curves.size() == 2,
            data};
      });

  add("pell-rational-curve",
      "pairings k of the ample class with a -2 class satisfy k^2 + 4 = "
      "17*l^2; the only solution with 1 <= k <= 8 is (8, 2)",
      0, [&] {
        PellConstraint c = sublattice_discriminant_constraint(
            *lat, norm(model.ample()), -2, 1, 8);
        std::vector<std::pair<Int, Int>> sols = pell_solutions(c);
        ordered_json data = ordered_json::object();
        data["rhs_disc"] = js_int(c.rhs_disc);
        data["offset"] = js_int(c.offset);
        data["k_range"] = {js_int(c.k_lo), js_int(c.k_hi)};
        ordered_json list = ordered_json::array();
        for (const auto& [k, l] : sols) list.push_back({js_int(k), js_int(l)});
        data["solutions"] = std::move(list);
        data["expected_solutions"] =
            ordered_json::array({ordered_json::array({"8", "2"})});
        bool match = sols.size() == 1 && sols[0].first == 8 &&
                     sols[0].second == 2;
        return CheckOutcome{match, data};
      });

  add("pell-mobile-part",
      "pairings k of the ample class with a self-intersection 2 class "
      "satisfy k^2 - 4 = 17*l^2; the only solution with 0 <= k <= 7 is (2, 0)",
      0, [&] {
        PellConstraint c = sublattice_discriminant_constraint(
            *lat, norm(model.ample()), 2, 0, 7);
        std::vector<std::pair<Int, Int>> sols = pell_solutions(c);
        ordered_json data = ordered_json::object();
        data["rhs_disc"] = js_int(c.rhs_disc);
        data["offset"] = js_int(c.offset);
        data["k_range"] = {js_int(c.k_lo), js_int(c.k_hi)};
        ordered_json list = ordered_json::array();
        for (const auto& [k, l] : sols) list.push_back({js_int(k), js_int(l)});
        data["solutions"] = std::move(list);
        data["expected_solutions"] =
            ordered_json::array({ordered_json::array({"2", "0"})});
        bool match = sols.size() == 1 && sols[0].first == 2 &&
                     sols[0].second == 0;
        return CheckOutcome{match, data};
      });

  add("ample-degrees",
      "the quartic polarization is nef with degrees 3 and 37 against the "
      "two extremal rational curves",
      1, [&] {
        LatticeVector h = vec(lat, cfg.polarizations[0]);
        const auto& curves = model.rational_curve_classes();
        ordered_json data = ordered_json::object();
        data["nef"] = model.is_nef(h);
        ordered_json degs = ordered_json::array();
        for (const LatticeVector& c : curves)
          degs.push_back(js_int(pair(h, c)));
        data["degrees"] = std::move(degs);
        data["expected_degrees"] = {"3", "37"};
        bool match = model.is_nef(h) && curves.size() == 2 &&
                     pair(h, curves[0]) == 3 && pair(h, curves[1]) == 37;
        return CheckOutcome{match, data};
      });

  add("very-ampleness",
      "the quartic polarization passes every very-ampleness criterion", 1,
      [&] {
        LatticeVector h = vec(lat, cfg.polarizations[0]);
        VeryAmpleResult r = model.very_ample(h);
        ordered_json data = ordered_json::object();
        data["failure"] = to_string(r.failure);
        if (r.witness)
          data["witness"] = js_vec(r.witness->coords);
        else
          data["witness"] = nullptr;
        return CheckOutcome{r.very_ample(), data};
      });

  add("no-line",
      "no effective -2 class has degree 1 against the quartic polarization "
      "(the quartic model contains no line)",
      1, [&] {
        LatticeVector h = vec(lat, cfg.polarizations[0]);
        std::optional<LatticeVector> lc = model.line_class(h);
        ordered_json data = ordered_json::object();
        if (lc)
          data["line_class"] = js_vec(lc->coords);
        else
          data["line_class"] = nullptr;
        return CheckOutcome{!lc.has_value(), data};
      });

  add("polarization-intersection",
      "the two quartic polarizations meet in degree m = 21, above the "
      "index-theorem floor m >= 5",
      2, [&] {
        LatticeVector h1 = vec(lat, cfg.polarizations[0]);
        LatticeVector h2 = vec(lat, cfg.polarizations[1]);
        Int m = pair(h1, h2);
        ordered_json data = ordered_json::object();
        data["pairing"] = js_int(m);
        data["expected"] = "21";
        data["floor"] = "5";
        data["floor_satisfied"] = m >= 5;
        return CheckOutcome{m == 21 && m >= 5, data};
      });

  add("beauville-matrices",
      "in the working basis (axis1, axis2, e) the involutions act by "
      "[[1,19,2],[0,-1,0],[0,0,-1]] and [[-1,0,0],[19,1,2],[0,0,-1]], their "
      "composite by [[360,19,36],[-19,-1,-2],[0,0,1]]",
      2, [&] {
        DynamicsContext ctx = make_dynamics_context(
            model, cfg.polarizations[0], cfg.polarizations[1]);
        IntMatrix b1 = basis_matrix(ctx.basis, ctx.i1);
        IntMatrix b2 = basis_matrix(ctx.basis, ctx.i2);
        IntMatrix bc = basis_matrix(ctx.basis, compose(ctx.i1, ctx.i2));
        IntMatrix e1 = IntMatrix::from_rows({{1, 19, 2}, {0, -1, 0}, {0, 0, -1}});
        IntMatrix e2 =
            IntMatrix::from_rows({{-1, 0, 0}, {19, 1, 2}, {0, 0, -1}});
        IntMatrix ec = IntMatrix::from_rows(
            {{360, 19, 36}, {-19, -1, -2}, {0, 0, 1}});
        ordered_json data = ordered_json::object();
        data["involution1"] = js_matrix(b1);
        data["involution2"] = js_matrix(b2);
        data["composite"] = js_matrix(bc);
        data["expected_involution1"] = js_matrix(e1);
        data["expected_involution2"] = js_matrix(e2);
        data["expected_composite"] = js_matrix(ec);
        return CheckOutcome{b1 == e1 && b2 == e2 && bc == ec, data};
      });

  add("composite-char-poly",
      "the characteristic polynomial of the composite is "
      "(t - 1)(t^2 - 359t + 1)",
      2, [&] {
        DynamicsContext ctx = make_dynamics_context(
            model, cfg.polarizations[0], cfg.polarizations[1]);
        IntPolynomial characteristic = char_poly(compose(ctx.i1, ctx.i2));
        IntPolynomial expected =
            IntPolynomial({-1, 1}) * IntPolynomial({1, -359, 1});
        ordered_json data = ordered_json::object();
        data["characteristic"] = js_poly(characteristic);
        data["expected"] = js_poly(expected);
        return CheckOutcome{characteristic == expected, data};
      });

  add("infinite-order",
      "the composite has infinite order: no power up to 12 is the identity "
      "and a real eigenvalue in (358, 359) is isolated to width 1e-6",
      2, [&] {
        DynamicsContext ctx = make_dynamics_context(
            model, cfg.polarizations[0], cfg.polarizations[1]);
        Isometry m = compose(ctx.i1, ctx.i2);
        OrderCertificate cert = order_certificate(m);
        bool no_small_power = true;
        for (unsigned n = 1; n <= 12; ++n)
          no_small_power = no_small_power && !m.pow(n).is_identity();
        ordered_json data = ordered_json::object();
        data["finite"] = cert.finite;
        data["powers_checked"] = 12;
        data["no_power_is_identity"] = no_small_power;
        bool growth_ok = false;
        if (cert.growth) {
          data["growth_low"] = str(cert.growth->lo);
          data["growth_high"] = str(cert.growth->hi);
          growth_ok = cert.growth->lo >= 358 && cert.growth->hi <= 359 &&
                      cert.growth->hi - cert.growth->lo <= Rat(1, 1000000);
        }
        data["growth_isolated_in_expected_interval"] = growth_ok;
        return CheckOutcome{!cert.finite && no_small_power && growth_ok,
                            data};
      });

  add("fixed-vector",
      "the fixed space of the composite is the line through 2*axis1 + "
      "2*axis2 - 21e (ambient 2H1 + 2H2 - 25e) of self-intersection -1050 = "
      "-2m(m+4)",
      2, [&] {
        DynamicsContext ctx = make_dynamics_context(
            model, cfg.polarizations[0], cfg.polarizations[1]);
        DynamicsReport dyn = composite_dynamics(ctx.i1, ctx.i2, &ctx.basis);
        Int m = pair(ctx.h1, ctx.h2);
        ordered_json data = ordered_json::object();
        data["dimension"] = dyn.fixed_space_dim;
        bool ok = dyn.fixed_space_dim == 1 && dyn.fixed_vector.has_value();
        if (dyn.fixed_vector) {
          IntVec ambient = ambient_coords(ctx.basis, dyn.fixed_vector->coords);
          data["vector_in_working_basis"] = js_vec(dyn.fixed_vector->coords);
          data["vector"] = js_vec(ambient);
          data["norm"] = js_int(*dyn.fixed_vector_norm);
          data["expected_norm"] = js_int(-2 * m * (m + 4));
          ok = ok && dyn.fixed_vector->coords == IntVec{2, 2, -21} &&
               ambient == IntVec{10, 0, -25} &&
               *dyn.fixed_vector_norm == -1050 &&
               *dyn.fixed_vector_norm == -2 * m * (m + 4) &&
               *dyn.fixed_vector_norm < 0;
        }
        return CheckOutcome{ok, data};
      });

  add("orbit-witness",
      "the orbit of the half-exceptional class consists of pairwise "
      "non-proportional -2 classes of strictly increasing degree, so no "
      "finite ray set spans a stable cone containing it",
      2, [&] {
        DynamicsContext ctx = make_dynamics_context(
            model, cfg.polarizations[0], cfg.polarizations[1]);
        Isometry m = compose(ctx.i1, ctx.i2);
        LatticeVector e = exceptional_half_class(ctx.hl);
        NonPolyhedralWitness wit =
            non_polyhedral_witness(ctx.hl, m, e, orbit_count);
        LatticeVector degree_class = lift(ctx.hl, ctx.h1);
        bool norms_ok = true, increasing = true;
        Int prev(-1);
        ordered_json first_degrees = ordered_json::array();
        for (size_t i = 0; i < wit.classes.size(); ++i) {
          norms_ok = norms_ok && norm(wit.classes[i]) == -2;
          Int d = pair(wit.classes[i], degree_class);
          increasing = increasing && d > prev;
          prev = d;
          if (i < 5) first_degrees.push_back(js_int(d));
        }
        MdsReport mds = mds_checklist(wit);
        ordered_json data = ordered_json::object();
        data["count"] = wit.classes.size();
        data["all_norms"] = "-2";
        data["norms_verified"] = norms_ok;
        data["degrees_strictly_increasing"] = increasing;
        data["first_degrees"] = std::move(first_degrees);
        data["conclusion"] = mds.conclusion;
        data["reason"] = mds.reason;
        return CheckOutcome{static_cast<int>(wit.classes.size()) ==
                                    orbit_count &&
                                norms_ok && increasing &&
                                mds.conclusion == "not-established",
                            data};
      });

  add("product-mds",
      "the product of the surface with itself passes the Mori-dream-space "
      "checklist with a swap-invariant ample class",
      0, [&] {
        ProductModel p = ProductModel::direct_sum({FactorEntry{model, 2}});
        Isometry swap = block_permutation(p, {1, 0});
        const ConeR2& nef = model.nef_cone();
        FiniteRayCone cone{
            p.total(),
            {p.embed(0, nef.ray1), p.embed(0, nef.ray2),
             p.embed(1, nef.ray1), p.embed(1, nef.ray2)},
            {true, true, true, true}};
        LatticeVector invariant = invariant_ample_from_rays(cone, {swap});
        MdsReport mds = mds_checklist(cone, true);
        bool member = product_cone_membership(p, invariant);
        ordered_json data = ordered_json::object();
        data["total_rank"] = p.total()->rank();
        data["total_determinant"] = js_int(discriminant(*p.total()).det);
        data["invariant_ample"] = js_vec(invariant.coords);
        data["invariant_ample_member"] = member;
        data["conclusion"] = mds.conclusion;
        return CheckOutcome{
            mds.consistent && mds.conclusion == "mds-consistent" && member,
            data};
      });

  return report;
}

}  // namespace k3lat
