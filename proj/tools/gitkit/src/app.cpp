#include "gitkit_cli/app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>

#include "gitkit/error.hpp"
#include "gitkit/fan.hpp"
#include "gitkit/ppdivisor.hpp"
#include "gitkit_cli/markdown.hpp"
#include "gitkit_cli/problem.hpp"
#include "gitkit_cli/report.hpp"
#include "gitkit_cli/svg.hpp"

namespace gitkit::cli {

namespace {

constexpr unsigned kDefaultBox = 6;

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  std::optional<unsigned> box;
  std::string svg;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Unsupported:
    case ErrorKind::NotSaturated:
    case ErrorKind::NotEffective:
    case ErrorKind::NotDrawable:
      return kExitUnsupported;
    case ErrorKind::BoundExhausted:
      return kExitVerificationFailed;
    default:
      return kExitInvalidInput;
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  file << text;
}

std::string render(const Json& report, const std::string& format) {
  if (format == "md") return to_markdown(report);
  return report.dump(2) + "\n";
}

Problem load(const Options& opts) {
  if (opts.input.empty()) throw Error(ErrorKind::InvalidInput, "no input file given");
  return load_problem(opts.input);
}

// The fan a problem is drawn as: downgraded GIT fan, else the GIT fan.
std::vector<Cone> drawable_fan(const Problem& p) {
  auto t = AffineToricData::from_rays(p.cone_rays, p.rank);
  if (p.embedding) return downgraded_git_fan(Downgrade(t, analyze_subtorus(*p.embedding))).cones();
  return git_fan(t).cones();
}

void add_common(CLI::App* cmd, Options& opts, bool with_box) {
  cmd->add_option("problem", opts.input, "Problem JSON file");
  cmd->add_option("-i,--input", opts.input, "Problem JSON file");
  cmd->add_option("-o,--output", opts.output, "Output path (default stdout)");
  cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--svg", opts.svg, "Also write an SVG drawing of the relevant fan");
  if (with_box) cmd->add_option("--box", opts.box, "Degree box bound")->check(CLI::Range(1u, 1000u));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact GIT fans, downgrades and polyhedral divisors of affine toric varieties", "gitkit"};
  app.require_subcommand(1);
  Options opts;
  std::function<Outcome()> action;
  std::function<std::vector<Cone>(const Problem&)> svg_fan = drawable_fan;

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the dual cone");
  add_common(hilbert, opts, false);
  hilbert->callback([&] { action = [&] { return hilbert_report(load(opts)); }; });

  auto* orbit = app.add_subcommand("orbit-cones", "Orbit cones, monoids and lattices");
  add_common(orbit, opts, false);
  orbit->callback([&] { action = [&] { return orbit_cones_report(load(opts)); }; });

  auto* git = app.add_subcommand("git-fan", "GIT fan and semistable correspondence");
  add_common(git, opts, false);
  git->callback([&] {
    svg_fan = [](const Problem& p) { return git_fan(AffineToricData::from_rays(p.cone_rays, p.rank)).cones(); };
    action = [&] { return git_fan_report(load(opts)); };
  });

  auto* downgrade = app.add_subcommand("downgrade", "Downgrade along a subtorus");
  downgrade->require_subcommand(1);
  auto* dfan = downgrade->add_subcommand("git-fan", "Downgraded GIT fan");
  add_common(dfan, opts, false);
  dfan->callback([&] { action = [&] { return downgrade_fan_report(load(opts)); }; });
  auto base_fan = [](const Problem& p) {
    auto t = AffineToricData::from_rays(p.cone_rays, p.rank);
    return quotient_fan(t.sigma(), analyze_subtorus(*p.embedding)).fan;
  };
  auto* ppdiv = downgrade->add_subcommand("ppdiv", "Polyhedral divisor of the downgrade");
  add_common(ppdiv, opts, false);
  ppdiv->callback([&] {
    svg_fan = base_fan;
    action = [&] { return ppdivisor_report(load(opts)); };
  });

  auto* verify = app.add_subcommand("verify", "Graded-dimension reconstruction check");
  add_common(verify, opts, true);
  verify->callback([&] {
    svg_fan = base_fan;
    action = [&] {
      Problem p = load(opts);
      return verify_report(p, opts.box.value_or(p.box.value_or(kDefaultBox)));
    };
  });

  auto* svg = app.add_subcommand("render-svg", "Draw the (downgraded) GIT fan");
  add_common(svg, opts, false);
  svg->callback([&] { action = nullptr; });

  auto* self = app.add_subcommand("selfcheck", "Run the built-in example");
  self->add_option("-o,--output", opts.output, "Output path (default stdout)");
  self->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "md"}));
  self->callback([&] { action = [] { return selfcheck_report(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (svg->parsed()) {
      Problem p = load(opts);
      auto cones = drawable_fan(p);
      std::string text = render_fan_svg(cones, p.embedding ? "downgraded GIT fan" : "GIT fan");
      write_text(opts.svg.empty() ? opts.output : opts.svg, text, out);
      return kExitOk;
    }
    Outcome outcome = action();
    if (!opts.svg.empty()) {
      Problem p = load(opts);
      write_text(opts.svg, render_fan_svg(svg_fan(p), "fan"), out);
    }
    write_text(opts.output, render(outcome.report, opts.format), out);
    if (outcome.failed) {
      err << Json{{"error", "verification-failed"}, {"message", "a verification check did not hold"}}.dump() << "\n";
      return kExitVerificationFailed;
    }
    return kExitOk;
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.kind())}, {"message", e.what()}}.dump() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace gitkit::cli
