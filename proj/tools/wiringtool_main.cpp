#include "wiringtool_main.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wiring/catalogue.hpp"
#include "wiring/enumerate.hpp"
#include "wiring/hasse.hpp"
#include "wiring/render.hpp"

namespace wiringtool {

namespace {

int default_jobs() {
  if (const char* env = std::getenv("WIRINGTOOL_JOBS")) {
    const int jobs = std::atoi(env);
    if (jobs >= 1) return jobs;
  }
  return 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& payload, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << payload;
}

wiring::CatalogueFormat parse_format(const std::string& name) {
  if (name == "text") return wiring::CatalogueFormat::text;
  if (name == "jsonl") return wiring::CatalogueFormat::jsonl;
  throw CLI::ValidationError("--format must be text or jsonl");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"simplicial pseudoline arrangement toolkit"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "enumerate simplicial wiring classes");
  int lines = 0;
  bool include_near_pencils = false;
  bool simpobstr7 = false;
  bool stats = false;
  int jobs = default_jobs();
  std::string format_name = "text";
  std::string output_path;
  enumerate->add_option("--lines", lines, "number of pseudolines")->required();
  enumerate->add_flag("--include-near-pencils", include_near_pencils,
                      "also emit the near-pencil class");
  enumerate->add_flag("--simpobstr7", simpobstr7, "enable the optional obstruction group");
  enumerate->add_flag("--stats", stats, "log per-beginning search statistics to stderr");
  enumerate->add_option("--jobs", jobs, "worker threads (env WIRINGTOOL_JOBS)");
  enumerate->add_option("--format", format_name, "catalogue format: text|jsonl");
  enumerate->add_option("--output,-o", output_path, "output file (default stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "add Pappus / automorphism / realization data");
  std::string analyze_input;
  std::string analyze_output;
  bool attempt_realize = false;
  int analyze_jobs = default_jobs();
  std::string analyze_format = "text";
  analyze->add_option("--input,-i", analyze_input, "catalogue file ('-' for stdin)")->required();
  analyze->add_option("--output,-o", analyze_output, "output file (default stdout)");
  analyze->add_flag("--realize", attempt_realize, "attempt numeric realizations");
  analyze->add_option("--jobs", analyze_jobs, "worker threads");
  analyze->add_option("--format", analyze_format, "output format: text|jsonl");

  // render
  auto* render = app.add_subcommand("render", "draw a wiring diagram");
  std::string render_input;
  std::string render_output;
  std::string style_name = "svg";
  render->add_option("--input,-i", render_input, "wiring file ('-' for stdin)")->required();
  render->add_option("--output,-o", render_output, "output file (default stdout)");
  render->add_option("--style", style_name, "svg|ascii");

  // hasse
  auto* hasse = app.add_subcommand("hasse", "containment edges between catalogues");
  std::vector<std::string> hasse_inputs;
  std::string hasse_output;
  hasse->add_option("--inputs,-i", hasse_inputs, "catalogue files")->required()->expected(-1);
  hasse->add_option("--output,-o", hasse_output, "output file (default stdout)");

  // invariants
  auto* invariants_cmd = app.add_subcommand("invariants", "print the invariant line of a wiring");
  std::string inv_input;
  invariants_cmd->add_option("--input,-i", inv_input, "wiring file ('-' for stdin)")->required();

  std::vector<std::string> mutable_args = args;
  std::reverse(mutable_args.begin(), mutable_args.end());
  try {
    app.parse(mutable_args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (enumerate->parsed()) {
      if (lines < 3) {
        err << "enumerate: --lines must be at least 3\n";
        return 2;
      }
      wiring::CatalogueRunOptions run_opts;
      run_opts.include_near_pencils = include_near_pencils;
      run_opts.use_simpobstr7 = simpobstr7;
      run_opts.worker_count = jobs;
      run_opts.log_stats = stats;
      const wiring::Catalogue cat = wiring::enumerate_catalogue(lines, run_opts);
      write_output(output_path, wiring::print_catalogue(cat, parse_format(format_name)), out);
      return 0;
    }
    if (analyze->parsed()) {
      wiring::Catalogue cat = wiring::parse_catalogue(read_input(analyze_input));
      wiring::AnalyzeOptions opts;
      opts.attempt_realization = attempt_realize;
      opts.worker_count = analyze_jobs;
      wiring::analyze_catalogue(cat, opts);
      write_output(analyze_output, wiring::print_catalogue(cat, parse_format(analyze_format)), out);
      return 0;
    }
    if (render->parsed()) {
      const wiring::AllowableSequence seq = wiring::parse_sequence(read_input(render_input));
      wiring::RenderStyle style;
      if (style_name == "svg") {
        style = wiring::RenderStyle::svg;
      } else if (style_name == "ascii") {
        style = wiring::RenderStyle::ascii;
      } else {
        err << "render: --style must be svg or ascii\n";
        return 2;
      }
      write_output(render_output, wiring::render_wiring(seq, style), out);
      return 0;
    }
    if (hasse->parsed()) {
      std::vector<std::vector<wiring::ArrangementRecord>> catalogues;
      for (const std::string& path : hasse_inputs) {
        catalogues.push_back(wiring::parse_catalogue(read_input(path)).records);
      }
      const auto edges = wiring::hasse_edges(catalogues);
      write_output(hasse_output, wiring::print_hasse(edges), out);
      return 0;
    }
    if (invariants_cmd->parsed()) {
      const wiring::AllowableSequence seq = wiring::parse_sequence(read_input(inv_input));
      const auto report = wiring::validate_sequence(seq);
      if (!report.ok) {
        err << "invariants: " << report.message << '\n';
        return 2;
      }
      out << wiring::print_invariants(wiring::invariants(wiring::cell_complex(seq))) << '\n';
      return 0;
    }
  } catch (const wiring::ResourceGuardError& e) {
    err << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace wiringtool
