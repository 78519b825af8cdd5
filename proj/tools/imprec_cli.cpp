#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "imprec/elaborate.hpp"
#include "imprec/errors.hpp"
#include "imprec/json_io.hpp"
#include "imprec/parser.hpp"
#include "imprec/plot.hpp"
#include "imprec/suites.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw imprec::Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

imprec::TypedTerm load_closed(const std::string& path) {
  const imprec::TermPtr term = imprec::parse(read_file(path));
  const auto fv = imprec::free_vars(term);
  if (!fv.empty())
    throw imprec::TypeError("program has unbound variables, first: " + *fv.begin());
  return imprec::infer(term);
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("IMP_SEED")) return std::strtoull(env, nullptr, 10);
  return flag_seed;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int fail_with(const std::string& kind, const std::string& message, int line = -1, int col = -1) {
  json err{{"kind", kind}, {"message", message}};
  if (line >= 0) err["line"] = line;
  if (col >= 0) err["col"] = col;
  emit(json{{"error", err}});
  return 1;
}

int run(int argc, char** argv) {
  CLI::App app{"imprec: a language for imprecise probability with named one-shot choices"};
  app.require_subcommand(1);

  std::string file, file_g, out_path, which;
  std::uint64_t seed = 0;
  int count = 0;

  auto* cmd_check = app.add_subcommand("check", "Type-check a program and report type and grade");
  cmd_check->add_option("file", file, ".imp program")->required();

  auto* cmd_denote = app.add_subcommand("denote", "Print the graded denotation as JSON");
  cmd_denote->add_option("file", file, ".imp program")->required();

  auto* cmd_credal = app.add_subcommand(
      "credal", "Print the credal set of the denotation and the convex-powerset readings");
  cmd_credal->add_option("file", file, ".imp program")->required();

  auto* cmd_compare = app.add_subcommand(
      "compare", "Compare composed-then-imaged against imaged-then-composed for g after f");
  cmd_compare->add_option("file_f", file, "closed first stage")->required();
  cmd_compare->add_option("file_g", file_g, "second stage with at most one free variable")
      ->required();

  auto* cmd_laws = app.add_subcommand("laws", "Run the randomized program-equation suite");
  cmd_laws->add_option("--seed", seed, "PRNG seed (IMP_SEED overrides)");
  cmd_laws->add_option("--count", count, "instances per law (default 200)");

  auto* cmd_oracle =
      app.add_subcommand("oracle", "Run a randomized theorem suite: oplax, kan or faithful");
  cmd_oracle->add_option("which", which, "oplax | kan | faithful")->required();
  cmd_oracle->add_option("--seed", seed, "PRNG seed (IMP_SEED overrides)");
  cmd_oracle->add_option("--count", count, "instance count (default 500/100/200)");

  auto* cmd_plot = app.add_subcommand("plot", "Render a three-outcome credal set as SVG");
  cmd_plot->add_option("file", file, ".imp program")->required();
  cmd_plot->add_option("out", out_path, "output .svg path")->required();

  CLI11_PARSE(app, argc, argv);

  if (cmd_check->parsed()) {
    const imprec::TypedTerm tt = load_closed(file);
    emit(json{{"type", tt.type.show()},
              {"size", tt.type.size()},
              {"grade", tt.grade}});
    return 0;
  }

  if (cmd_denote->parsed()) {
    const imprec::TypedTerm tt = load_closed(file);
    emit(json(imprec::elaborate_imp(tt)));
    return 0;
  }

  if (cmd_credal->parsed()) {
    const imprec::TypedTerm tt = load_closed(file);
    const imprec::GradedMorphism m = imprec::elaborate_imp(tt);
    const imprec::KlMorphism left = imprec::elaborate_cp(tt, imprec::EvalOrder::LeftFirst);
    const imprec::KlMorphism right = imprec::elaborate_cp(tt, imprec::EvalOrder::RightFirst);
    emit(json{{"phi", imprec::image(m)},
              {"cp_left_first", left.images.front()},
              {"cp_right_first", right.images.front()}});
    return 0;
  }

  if (cmd_compare->parsed()) {
    const imprec::TypedTerm tf = load_closed(file);
    const imprec::TermPtr g_term = imprec::parse(read_file(file_g));
    const auto fv = imprec::free_vars(g_term);
    if (fv.size() > 1)
      throw imprec::TypeError("second stage may have at most one free variable");
    imprec::Context ctx;
    for (const auto& v : fv) ctx.emplace_back(v, tf.type);
    const imprec::TypedTerm tg = imprec::infer(g_term, ctx);
    const imprec::OplaxReport report =
        imprec::oplax_compare(imprec::elaborate_imp(tg), imprec::elaborate_imp(tf));
    emit(json(report));
    return 0;
  }

  if (cmd_laws->parsed()) {
    const auto report = imprec::run_law_suite(effective_seed(seed), count > 0 ? count : 200);
    emit(json(report));
    return report.all_passed() ? 0 : 1;
  }

  if (cmd_oracle->parsed()) {
    const std::uint64_t s = effective_seed(seed);
    json j;
    bool ok = false;
    if (which == "oplax") {
      const auto report = imprec::run_oplax_suite(s, count > 0 ? count : 500);
      j = report;
      ok = report.all_passed();
    } else if (which == "kan") {
      const auto report = imprec::run_kan_suite(s, count > 0 ? count : 100);
      j = report;
      ok = report.all_passed();
    } else if (which == "faithful") {
      const auto report = imprec::run_faithful_suite(s, count > 0 ? count : 200);
      j = report;
      ok = report.all_passed();
    } else {
      throw imprec::DomainError("unknown oracle: " + which);
    }
    emit(j);
    return ok ? 0 : 1;
  }

  if (cmd_plot->parsed()) {
    const imprec::TypedTerm tt = load_closed(file);
    if (tt.type.size() != 3)
      throw imprec::TypeError("plot needs a three-outcome program, got " + tt.type.show());
    const imprec::CredalSet s = imprec::image(imprec::elaborate_imp(tt));
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw imprec::Error("cannot write " + out_path);
    out << imprec::simplex_svg(s);
    emit(json{{"out", out_path}, {"region", s}});
    return 0;
  }

  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const imprec::ParseError& e) {
    return fail_with("parse", e.what(), e.line, e.col);
  } catch (const imprec::TypeError& e) {
    return fail_with("type", e.what());
  } catch (const imprec::NameClashError& e) {
    return fail_with("name_clash", e.what());
  } catch (const imprec::GradeMismatchError& e) {
    return fail_with("grade", e.what());
  } catch (const imprec::ShapeError& e) {
    return fail_with("shape", e.what());
  } catch (const imprec::DomainError& e) {
    return fail_with("domain", e.what());
  } catch (const imprec::Error& e) {
    return fail_with("error", e.what());
  } catch (const imprec::InvariantViolation& e) {
    return fail_with("invariant", e.what());
  } catch (const std::exception& e) {
    return fail_with("internal", e.what());
  }
}
