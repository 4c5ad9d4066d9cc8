// polkit: static polarizabilities, BBR shifts and radiative lifetimes from a
// declarative atomic dataset.
//
// Exit status: 0 success, 1 usage error, 2 dataset error, 3 the requested
// computation is undefined for the given data.

#include "polkit/commands.hpp"
#include "polkit/error.hpp"
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

namespace {

enum Exit { ok = 0, usage = 1, data = 2, precondition = 3 };

#ifndef POLKIT_DEFAULT_DATASET
#define POLKIT_DEFAULT_DATASET "data/ca_plus.dat"
#endif

std::string resolve_dataset(const std::string &flag) {
  if (!flag.empty())
    return flag;
  if (const char *env = std::getenv("POLKIT_DATASET"); env && *env)
    return env;
  return POLKIT_DEFAULT_DATASET;
}

polkit::LevelLabel state_arg(const std::string &text) {
  try {
    return polkit::LevelLabel::parse(text);
  } catch (const std::invalid_argument &) {
    throw polkit::UnknownLevel(text);
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Sum-over-states atomic polarizabilities, blackbody shifts "
               "and lifetimes"};
  app.require_subcommand(1);

  std::string dataset_flag, format = "table";
  bool full_precision = false;
  app.add_option("--dataset", dataset_flag,
                 "Dataset file (default: $POLKIT_DATASET, then the bundled "
                 "Ca+ data)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "machine"}));
  app.add_flag("--full-precision", full_precision,
               "Print unrounded values in tables");

  auto *pol = app.add_subcommand("polarizability",
                                 "Per-transition breakdown of a static "
                                 "polarizability");
  std::string state, multipole = "scalar";
  pol->add_option("--state", state, "Level label, e.g. 4s1/2")->required();
  pol->add_option("--multipole", multipole)
      ->check(CLI::IsMember({"scalar", "tensor"}));

  auto *bbr = app.add_subcommand("bbr", "Blackbody shift of a transition");
  std::string ground = "4s1/2", excited = "3d5/2";
  polkit::bbr::Conditions cond;
  bbr->add_option("--ground", ground, "Lower clock level");
  bbr->add_option("--excited", excited, "Upper clock level");
  bbr->add_option("--temperature", cond.temperature, "Kelvin");
  bbr->add_option("--eta", cond.eta, "Dynamic correction");

  auto *life = app.add_subcommand("lifetime", "Radiative lifetime of a level");
  std::string upper;
  life->add_option("--state", upper, "Decaying level")->required();

  auto *ext = app.add_subcommand(
      "extract", "Matrix element implied by a measured lifetime");
  std::string ext_upper, ext_lower;
  double tau = 0.0, tau_unc = 0.0;
  ext->add_option("--upper", ext_upper)->required();
  ext->add_option("--lower", ext_lower)->required();
  ext->add_option("--tau", tau, "Measured lifetime, ns")->required();
  ext->add_option("--tau-unc", tau_unc, "Lifetime uncertainty, ns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return usage;
  }

  const auto path = resolve_dataset(dataset_flag);
  polkit::Dataset ds;
  try {
    ds = polkit::load_dataset(path);
  } catch (const std::exception &e) {
    std::cerr << "polkit: " << path << ": " << e.what() << "\n";
    return data;
  }

  try {
    polkit::report::Report r;
    if (*pol) {
      r = polkit::commands::polarizability(ds, path, state_arg(state),
                                           polkit::parse_multipole(multipole));
    } else if (*bbr) {
      r = polkit::commands::bbr(ds, path, state_arg(ground),
                                state_arg(excited), cond);
    } else if (*life) {
      r = polkit::commands::lifetime(ds, path, state_arg(upper));
    } else {
      if (tau_unc < 0.0)
        throw std::invalid_argument("--tau-unc must be non-negative");
      r = polkit::commands::extract(
          ds, path, state_arg(ext_upper), state_arg(ext_lower),
          {tau, tau_unc, polkit::Unit::nanosecond});
    }
    std::cout << (format == "machine" ? polkit::report::to_machine(r)
                                      : polkit::report::render_table(
                                            r, full_precision));
  } catch (const polkit::PreconditionError &e) {
    std::cerr << "polkit: " << e.what() << "\n";
    return precondition;
  } catch (const std::invalid_argument &e) {
    std::cerr << "polkit: " << e.what() << "\n";
    return usage;
  } catch (const std::exception &e) {
    std::cerr << "polkit: " << e.what() << "\n";
    return precondition;
  }
  return ok;
}
