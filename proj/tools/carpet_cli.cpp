// Command-line front end: classification, dimension reports, fibre and
// pointwise Assouad queries, box-count regressions, tangent comparisons, SVG
// rendering, and the bundled delta-parameterized Baranski example.
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "carpets/carpet.hpp"
#include "carpets/dimensions.hpp"
#include "carpets/errors.hpp"
#include "carpets/examples.hpp"
#include "carpets/fibre.hpp"
#include "carpets/json_io.hpp"
#include "carpets/numeric.hpp"
#include "carpets/oracle.hpp"
#include "carpets/render.hpp"
#include "carpets/symbolic.hpp"

namespace {

using carpets::DiagonalIFS;
using carpets::SequenceSpec;
using nlohmann::json;

struct GlobalOpts {
  double tol = 1e-9;
  std::int64_t budget = 10000000;
  bool json_out = false;
};

void print(const json &j, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto &[key, value] : j.items())
    std::cout << key << ": " << value.dump() << "\n";
}

int fibre_axis(const DiagonalIFS &ifs, const SequenceSpec &gamma, int requested) {
  if (requested == 1 || requested == 2)
    return requested;
  const auto rep = carpets::validate_and_classify(ifs);
  if (rep.kind == carpets::CarpetKind::GatzourasLalley)
    return 1;
  const auto oc = carpets::omega_class(ifs, gamma);
  if (oc == carpets::OmegaClass::Omega0)
    throw carpets::UnsupportedSpec(
        "sequence has equal Lyapunov exponents; pass --axis explicitly");
  return oc == carpets::OmegaClass::Omega1 ? 1 : 2;
}

const char *regularity_name(carpets::Regularity r) {
  switch (r) {
  case carpets::Regularity::Yes:
    return "yes";
  case carpets::Regularity::YesByInteriorWords:
    return "yes_by_interior_words";
  default:
    return "unknown";
  }
}

int run(int argc, char **argv) {
  CLI::App app{"Dimension theory of diagonal self-affine carpets"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--tol", g.tol, "solver tolerance");
  app.add_option("--budget", g.budget, "enumeration node budget");
  app.add_flag("--json", g.json_out, "emit JSON reports");

  std::string carpet_path, gamma_path, out_path, delta_str = "1/40", action = "dims";
  double alpha = 0.0, delta_mesh = 0.0, resolution = 1.0 / 64.0;
  int m_max = 64, depth = 4, level_n = 4, axis = 0, render_depth = 1;
  int min_exp = 4, max_exp = 9;

  auto *classify = app.add_subcommand("classify", "validate and classify a carpet");
  classify->add_option("--carpet", carpet_path, "carpet JSON file")->required();

  auto *dims = app.add_subcommand("dims", "full dimension report");
  dims->add_option("--carpet", carpet_path, "carpet JSON file")->required();

  auto *fibre = app.add_subcommand("fibre-dim", "Assouad dimension of the symbolic fibre");
  fibre->add_option("--carpet", carpet_path)->required();
  fibre->add_option("--gamma", gamma_path, "sequence JSON file")->required();
  fibre->add_option("--m-max", m_max, "window length for the theta sup");
  fibre->add_option("--axis", axis, "projection axis (default: automatic)");

  auto *pointwise = app.add_subcommand("pointwise", "pointwise Assouad dimension at pi(gamma)");
  pointwise->add_option("--carpet", carpet_path)->required();
  pointwise->add_option("--gamma", gamma_path)->required();
  pointwise->add_option("--m-max", m_max);

  auto *target = app.add_subcommand("target-seq", "sequence realizing a target dimension");
  target->add_option("--carpet", carpet_path)->required();
  target->add_option("--alpha", alpha, "target pointwise dimension")->required();
  target->add_option("--depth", depth, "refinement rounds");

  auto *boxcount = app.add_subcommand("boxcount", "grid counts and log-log slope");
  boxcount->add_option("--carpet", carpet_path)->required();
  boxcount->add_option("--delta", delta_mesh, "single mesh (otherwise a scale sweep)");
  boxcount->add_option("--min-exp", min_exp, "smallest 2^-k scale exponent");
  boxcount->add_option("--max-exp", max_exp, "largest 2^-k scale exponent");

  auto *tangent = app.add_subcommand("tangent", "tangent/product comparison at level n");
  tangent->add_option("--carpet", carpet_path)->required();
  tangent->add_option("--gamma", gamma_path)->required();
  tangent->add_option("--n", level_n, "magnification level");
  tangent->add_option("--resolution", resolution, "point cloud resolution");
  tangent->add_option("--out", out_path, "write the overlay SVG here");

  auto *render = app.add_subcommand("render", "SVG of the depth-n cylinder cover");
  render->add_option("--carpet", carpet_path)->required();
  render->add_option("--depth", render_depth);
  render->add_option("--out", out_path, "output SVG path")->required();

  auto *example = app.add_subcommand(
      "example-baranski", "bundled 12-map Baranski family; runs the given action");
  example->add_option("--delta", delta_str, "family parameter in [0,1/6), decimal or p/q");
  example->add_option("action", action, "classify | dims | render");
  example->add_option("--out", out_path, "output SVG path for the render action");
  example->add_option("--depth", render_depth, "render depth for the render action");

  // Let --tol/--budget/--json appear after the subcommand name too.
  for (CLI::App *sub : app.get_subcommands(/*filter=*/std::function<bool(CLI::App *)>()))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2; // bad arguments count as validation errors
  }

  DiagonalIFS ifs;
  if (example->parsed()) {
    if (delta_str.find('/') != std::string::npos)
      ifs = carpets::baranski_example(carpets::parse_fraction(delta_str));
    else
      ifs = carpets::baranski_example(std::stod(delta_str));
  } else if (!carpet_path.empty()) {
    ifs = carpets::load_carpet(carpet_path);
  }

  auto do_classify = [&]() {
    print(carpets::classification_to_json(carpets::validate_and_classify(ifs)), g.json_out);
  };
  auto do_dims = [&]() {
    print(carpets::report_to_json(carpets::baranski_dims(ifs, g.tol)), g.json_out);
  };
  auto do_render = [&](int d) {
    carpets::RenderSpec spec;
    spec.depth = d;
    carpets::write_text_file(out_path, carpets::render_carpet(ifs, spec));
    std::cout << "wrote " << out_path << "\n";
  };

  if (classify->parsed())
    do_classify();
  else if (dims->parsed())
    do_dims();
  else if (fibre->parsed()) {
    const SequenceSpec gamma = carpets::load_sequence(gamma_path);
    const int ax = fibre_axis(ifs, gamma, axis);
    const auto fa =
        carpets::fibre_assouad(carpets::fibre_from_carpet(ifs, ax, gamma), m_max);
    print({{"schema", 1},
           {"axis", ax},
           {"estimate", fa.estimate},
           {"error_bound", fa.error_bound},
           {"windows", fa.windows}},
          g.json_out);
  } else if (pointwise->parsed()) {
    const SequenceSpec gamma = carpets::load_sequence(gamma_path);
    const auto res = carpets::pointwise_assouad(ifs, gamma, m_max);
    print({{"schema", 1},
           {"value", res.value},
           {"error_bound", res.error_bound},
           {"regularity", regularity_name(res.regularity)},
           {"lower_bound_only", res.lower_bound_only},
           {"axis", res.axis}},
          g.json_out);
  } else if (target->parsed()) {
    const SequenceSpec seq = carpets::sequence_for_target(ifs, alpha, depth);
    const auto fa = carpets::fibre_assouad(carpets::fibre_from_carpet(ifs, 1, seq), 64);
    const auto cs = carpets::column_structure(ifs, 1);
    const double achieved = carpets::moran_dimension(cs.class_ratio) + fa.estimate;
    json j = carpets::sequence_to_json(seq);
    j["schema"] = 1;
    j["target"] = alpha;
    j["achieved"] = achieved;
    j["error_bound"] = fa.error_bound;
    print(j, g.json_out);
  } else if (boxcount->parsed()) {
    if (delta_mesh > 0.0) {
      const long long count = carpets::box_count(ifs, delta_mesh, -1, g.budget);
      print({{"schema", 1}, {"delta", delta_mesh}, {"count", count}}, g.json_out);
    } else {
      std::vector<double> xs, ys;
      std::printf("scale,count\n");
      for (int k = min_exp; k <= max_exp; ++k) {
        const double d = std::pow(2.0, -k);
        const long long count = carpets::box_count(ifs, d, -1, g.budget);
        std::printf("%.10g,%lld\n", d, count);
        xs.push_back(std::log(1.0 / d));
        ys.push_back(std::log(double(count)));
      }
      const auto fit = carpets::ols_fit(xs, ys);
      std::printf("# slope %.6f (95%% CI +/- %.6f)\n", fit.slope, fit.slope_ci);
    }
  } else if (tangent->parsed()) {
    const SequenceSpec gamma = carpets::load_sequence(gamma_path);
    if (!out_path.empty()) {
      carpets::write_text_file(
          out_path, carpets::render_tangent_comparison(ifs, gamma, level_n, resolution));
      std::cout << "wrote " << out_path << "\n";
    }
    const auto tan = carpets::tangent_approx(ifs, gamma, level_n, resolution, g.budget);
    const auto prod = carpets::product_approx(ifs, gamma, level_n, resolution, g.budget);
    print({{"schema", 1},
           {"n", level_n},
           {"p_h_product_to_tangent", carpets::p_hausdorff(prod, tan)},
           {"p_h_tangent_to_product", carpets::p_hausdorff(tan, prod)}},
          g.json_out);
  } else if (render->parsed()) {
    do_render(render_depth);
  } else if (example->parsed()) {
    if (action == "classify")
      do_classify();
    else if (action == "dims")
      do_dims();
    else if (action == "render") {
      if (out_path.empty())
        throw carpets::ValidationError("the render action needs --out");
      do_render(render_depth);
    } else
      throw carpets::ValidationError("unknown action: " + action);
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const carpets::ValidationError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const carpets::BudgetExceeded &e) {
    std::cerr << "budget: " << e.what() << "\n";
    return 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
