// bnwall: strings, modules, stability cones, walls and chambers of B(n).
//
// Exit status: 0 success, 1 a verify check failed, 2 usage error.

#include "bnwall/checks.hpp"
#include "bnwall/fan.hpp"
#include "bnwall/quiver.hpp"
#include "bnwall/report.hpp"
#include "bnwall/representation.hpp"
#include "bnwall/stability.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>

namespace {

using namespace bnwall;

enum class Format { Json, Text };

struct Common {
  int n = 1;
  Format format = Format::Json;
  Order order = Order::Ascending;
  bool emit_rays = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--n", c.n, "Size parameter n >= 1")->required()->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}}));
  sub->add_option("--order", c.order, "Coordinate order")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Order>{{"ascending", Order::Ascending},
                                       {"paper-descending", Order::Descending},
                                       {"descending", Order::Descending}}));
}

std::string join(const Json& arr, const char* sep) {
  std::string out;
  for (const auto& x : arr) {
    if (!out.empty()) out += sep;
    out += x.get<std::string>();
  }
  return out;
}

void print_cone_text(const Json& rec) {
  std::cout << rec["id"].get<std::string>() << "  dim " << rec["cone_dim"].get<int>();
  if (rec["wall"].get<bool>()) std::cout << "  wall";
  std::cout << "\n  " << join(rec["equalities_text"], ", ");
  if (!rec["inequalities_text"].empty()) std::cout << ", " << join(rec["inequalities_text"], ", ");
  std::cout << "\n";
  if (rec.contains("rays")) {
    if (!rec["lineality"].empty()) std::cout << "  lineality " << rec["lineality"].dump() << "\n";
    std::cout << "  rays " << rec["rays"].dump() << "\n";
  }
}

void emit(const Json& j, const Common& c, void (*text)(const Json&)) {
  if (c.format == Format::Json)
    std::cout << dump(j) << "\n";
  else
    text(j);
}

void strings_text(const Json& j) {
  for (const auto& s : j)
    std::cout << s["class"].get<std::string>() << "  " << s["word"].get<std::string>() << "  ~  "
              << s["star_word"].get<std::string>() << "\n";
}

void modules_text(const Json& j) {
  for (const auto& m : j) std::cout << m["id"].get<std::string>() << "  dim " << m["dim"].dump() << "\n";
}

void cones_text(const Json& j) {
  for (const auto& r : j) print_cone_text(r);
}

void chambers_text(const Json& j) {
  std::cout << "n=" << j["n"] << " walls=" << j["walls"] << " regions=" << j["regions"] << " chambers=" << j["chambers"]
            << "\n";
  if (j.contains("merges")) std::cout << "merges=" << j["merges"] << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walls and chambers for the special biserial algebras B(n)"};
  app.require_subcommand(1);

  Common c;
  auto* strings = app.add_subcommand("strings", "String *-classes and their representatives");
  add_common(strings, c);
  auto* modules = app.add_subcommand("indecomposables", "Indecomposable modules with dimension vectors");
  add_common(modules, c);

  auto* stab = app.add_subcommand("stability", "Stability cones D(M)");
  add_common(stab, c);
  std::optional<std::string> class_text;
  std::optional<std::string> module_text;
  auto* class_opt = stab->add_option("--class", class_text, "String class: e<i>, cycle or a,b,eta");
  stab->add_option("--module", module_text, "Module: S<i>, M(a,b,eta), M(cycle) or R<i>")->excludes(class_opt);

  auto* walls_cmd = app.add_subcommand("walls", "Stability cones that are walls");
  add_common(walls_cmd, c);
  walls_cmd->add_flag("--emit-rays", c.emit_rays, "Include lineality and extreme rays");

  auto* ch = app.add_subcommand("chambers", "Wall-and-chamber decomposition");
  add_common(ch, c);
  bool detail = false;
  bool strict = false;
  bool allow_large = false;
  ch->add_flag("--detail", detail, "Add merges, chamber composition and region signs");
  ch->add_flag("--strict", strict, "Also feed non-thin stability spaces in as walls");
  ch->add_flag("--allow-large", allow_large, "Permit n > 4");

  auto* verify = app.add_subcommand("verify", "Run every self-check that applies to n");
  add_common(verify, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (strings->parsed()) {
      emit(strings_report(c.n), c, strings_text);
    } else if (modules->parsed()) {
      emit(indecomposables_report(c.n, c.order), c, modules_text);
    } else if (stab->parsed()) {
      if (!class_text && !module_text) {
        emit(stability_report(c.n, c.order, true), c, cones_text);
      } else {
        const ModuleLabel label = class_text ? ModuleLabel::string(parse_string_class(*class_text))
                                             : parse_module_label(*module_text);
        const Representation rep = module_for(label, c.n);
        StabilityRecord rec{label, dim_vector(rep), stability_cone(rep), {}, 0};
        rec.rays = double_description(rec.cone);
        rec.dim_of_cone = cone_dim(rec.rays);
        const Json j = stability_record_json(rec, c.n, c.order, true);
        if (c.format == Format::Json)
          std::cout << dump(j) << "\n";
        else
          print_cone_text(j);
      }
    } else if (walls_cmd->parsed()) {
      emit(walls_report(c.n, c.order, c.emit_rays), c, cones_text);
    } else if (ch->parsed()) {
      if (c.n > 4 && !allow_large) {
        std::cerr << "chambers: n > 4 needs --allow-large\n";
        return 2;
      }
      if (c.n > 4) std::cerr << "warning: the arrangement has (n+2)! regions; this may take a long time\n";
      ChamberOptions opts;
      opts.strict = strict;
      emit(chambers_report(chambers(c.n, opts), detail), c, chambers_text);
    } else if (verify->parsed()) {
      bool ok = true;
      Json out = Json::array();
      for (const auto& r : checks::verify_for(c.n)) {
        ok &= r.passed;
        if (c.format == Format::Json)
          out.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        else
          std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << "\n";
      }
      if (c.format == Format::Json) std::cout << dump(out) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
