// chipart: Hurwitz stability analysis from the command line.
//
// Exit codes (every command): 0 stable / all checks passed, 1 not stable /
// property failure, 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chipart/criteria.hpp"
#include "chipart/fuzz.hpp"
#include "chipart/hurwitz.hpp"
#include "chipart/interval.hpp"
#include "chipart/io.hpp"
#include "chipart/roots.hpp"

namespace {

using chipart::Polynomial;
using chipart::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct GlobalOptions {
  bool json = false;
  bool exact = false;
  bool use_float = false;
  double margin = chipart::kDefaultMargin;
  std::uint64_t seed = 0;
};

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

template <chipart::Scalar T>
void print_witnesses(const chipart::Certificate<T>& cert, const char* indent) {
  for (const auto& w : cert.witnesses) {
    std::cout << indent << w.name << " = " << chipart::to_display_string(w.value) << "  ("
              << chipart::to_string(w.relation) << ")\n";
  }
}

void print_roots(const chipart::RootReport& r) {
  std::cout << "roots:\n";
  for (const auto& z : r.roots) {
    std::cout << "  " << chipart::to_display_string(z.real());
    if (z.imag() != 0.0) {
      std::cout << (z.imag() < 0 ? " - " : " + ") << chipart::to_display_string(std::abs(z.imag()))
                << "i";
    }
    std::cout << "\n";
  }
  std::cout << "max real part: " << chipart::to_display_string(r.max_real_part) << "\n"
            << "oracle: " << chipart::to_string(r.classification) << " (margin "
            << chipart::to_display_string(r.margin) << ")\n"
            << "residual: " << chipart::to_display_string(r.residual) << "\n";
}

template <chipart::Scalar T>
int run_analyze(const Polynomial<T>& p, const GlobalOptions& g, bool with_roots) {
  const auto start = std::chrono::steady_clock::now();
  const auto verdict = chipart::analyze(p);
  const auto minors = chipart::hurwitz_minors(p);
  std::optional<chipart::RootReport> roots;
  if (with_roots) {
    if constexpr (chipart::is_exact_v<T>) {
      roots = chipart::find_roots(chipart::to_float(p), g.margin);
    } else {
      roots = chipart::find_roots(p, g.margin);
    }
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (g.json) {
    json minors_json = json::array();
    for (const T& m : minors) minors_json.push_back(chipart::scalar_json(m));
    json corroborating = json::array();
    for (const auto& c : verdict.corroborating) {
      corroborating.push_back({{"certificate", std::string(chipart::to_string(c.kind))},
                               {"witnesses", chipart::witnesses_json(c)}});
    }
    json report = {{"schema", chipart::kSchemaVersion},
                   {"command", "analyze"},
                   {"input", chipart::polynomial_json(p)},
                   {"minors", std::move(minors_json)},
                   {"verdict", std::string(chipart::to_string(verdict.status))},
                   {"certificate", std::string(chipart::to_string(verdict.certificate.kind))},
                   {"witnesses", chipart::witnesses_json(verdict.certificate)},
                   {"corroborating", std::move(corroborating)},
                   {"timing_ms", ms}};
    if (roots) report["roots"] = chipart::root_report_json(*roots);
    print_json(report);
  } else {
    std::cout << "polynomial: " << chipart::polynomial_display(p) << "  (degree " << p.degree()
              << ", " << (chipart::is_exact_v<T> ? "exact" : "float") << ")\n";
    std::cout << "minors:\n";
    for (std::size_t i = 0; i < minors.size(); ++i) {
      std::cout << "  Delta" << i + 1 << " = " << chipart::to_display_string(minors[i]) << "\n";
    }
    std::cout << "verdict: " << chipart::to_string(verdict.status) << " via "
              << chipart::to_string(verdict.certificate.kind) << "\n";
    print_witnesses(verdict.certificate, "  ");
    for (const auto& c : verdict.corroborating) {
      std::cout << "also certified by " << chipart::to_string(c.kind) << ":\n";
      print_witnesses(c, "  ");
    }
    if (roots) print_roots(*roots);
    std::cout << "time: " << ms << " ms\n";
  }
  return verdict.status == chipart::Status::Stable ? kExitOk : kExitFail;
}

template <chipart::Scalar T>
int run_minors(const Polynomial<T>& p, const GlobalOptions& g) {
  const auto minors = chipart::hurwitz_minors(p);
  std::optional<std::array<T, 3>> d4;
  if (p.degree() >= 4) {
    d4 = std::array<T, 3>{chipart::hurwitz_minor_det(p, 4), chipart::delta4_expanded(p),
                          chipart::delta4_factored(p)};
  }
  auto agree = [&] {
    const auto& v = *d4;
    if constexpr (chipart::is_exact_v<T>) {
      return v[0] == v[1] && v[1] == v[2];
    } else {
      return chipart::approx_equal(v[0], v[1], 1e-10) && chipart::approx_equal(v[1], v[2], 1e-10);
    }
  };

  if (g.json) {
    json minors_json = json::array();
    for (const T& m : minors) minors_json.push_back(chipart::scalar_json(m));
    json report = {{"schema", chipart::kSchemaVersion},
                   {"command", "minors"},
                   {"input", chipart::polynomial_json(p)},
                   {"minors", std::move(minors_json)}};
    if (d4) {
      report["delta4"] = {{"determinant", chipart::scalar_json((*d4)[0])},
                          {"expanded", chipart::scalar_json((*d4)[1])},
                          {"factored", chipart::scalar_json((*d4)[2])},
                          {"agree", agree()}};
    } else {
      report["delta4"] = nullptr;
      report["note"] = "Delta4 needs degree >= 4";
    }
    print_json(report);
  } else {
    std::cout << "polynomial: " << chipart::polynomial_display(p) << "  (degree " << p.degree()
              << ", " << (chipart::is_exact_v<T> ? "exact" : "float") << ")\n";
    for (std::size_t i = 0; i < minors.size(); ++i) {
      std::cout << "Delta" << i + 1 << " = " << chipart::to_display_string(minors[i]) << "\n";
    }
    if (d4) {
      std::cout << "Delta4 determinant = " << chipart::to_display_string((*d4)[0]) << "\n"
                << "Delta4 expanded    = " << chipart::to_display_string((*d4)[1]) << "\n"
                << "Delta4 factored    = " << chipart::to_display_string((*d4)[2]) << "\n"
                << "agree = " << (agree() ? "true" : "false") << "\n";
    } else {
      std::cout << "Delta4 rows omitted: degree " << p.degree() << " < 4\n";
    }
  }
  return d4 && !agree() ? kExitFail : kExitOk;
}

int run_roots(const Polynomial<double>& p, const GlobalOptions& g) {
  const chipart::RootReport r = chipart::find_roots(p, g.margin);
  if (g.json) {
    json report = {{"schema", chipart::kSchemaVersion},
                   {"command", "roots"},
                   {"input", chipart::polynomial_json(p)},
                   {"roots", chipart::root_report_json(r)}};
    print_json(report);
  } else {
    std::cout << "polynomial: " << chipart::polynomial_display(p) << "\n";
    print_roots(r);
  }
  return r.classification == chipart::OracleClass::Stable ? kExitOk : kExitFail;
}

std::pair<int, int> parse_degree_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int d = std::stoi(text);
      return {d, d};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw chipart::Error(chipart::ErrorKind::ParseError,
                         "--degrees expects N or LO..HI, got '" + text + "'");
  }
}

int run_fuzz(const GlobalOptions& g, std::size_t count, const std::string& degrees, bool flip) {
  chipart::FuzzOptions o;
  o.count = count;
  std::tie(o.min_degree, o.max_degree) = parse_degree_range(degrees);
  if (o.min_degree < 1 || o.max_degree < o.min_degree) {
    throw chipart::Error(chipart::ErrorKind::ParseError, "--degrees must satisfy 1 <= LO <= HI");
  }
  if (count < 1) throw chipart::Error(chipart::ErrorKind::ParseError, "--count must be >= 1");
  o.seed = g.seed;
  o.margin = g.margin;
  o.flip_delta4_sign = flip;
  const chipart::FuzzResult result = chipart::run_fuzz(o);
  if (g.json) {
    print_json(chipart::fuzz_result_json(o, result));
  } else {
    std::cout << chipart::fuzz_result_text(o, result);
  }
  return result.passed() ? kExitOk : kExitFail;
}

int run_box(const GlobalOptions& g, const std::string& path, std::size_t count) {
  std::ifstream in(path);
  if (!in) throw chipart::Error(chipart::ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const auto box = chipart::box_from_json(chipart::parse_json_document(buf.str()));

  std::optional<chipart::Certificate<Rational>> c1, c3;
  if (box.positive()) {
    c1 = chipart::box_cor1(box);
    c3 = chipart::box_cor3(box);
  }
  const auto summary = chipart::box_sample_verdicts(box, count, g.seed);

  auto family_line = [&]() -> std::string {
    if (c1 && c3) return "entire family unstable (Cor 1); also certified by Cor 3";
    if (c1) return "entire family unstable (Cor 1)";
    if (c3) return "entire family unstable (Cor 3)";
    if (!box.positive()) return "no box certificate (box allows a_i <= 0)";
    return "no box certificate";
  };

  if (g.json) {
    json bounds = json::array();
    for (const auto& [lo, hi] : box.bounds()) {
      bounds.push_back({lo.to_fraction_string(), hi.to_fraction_string()});
    }
    json certs = json::array();
    for (const auto* c : {&c1, &c3}) {
      if (*c) {
        certs.push_back({{"certificate", std::string(chipart::to_string((*c)->kind))},
                         {"witnesses", chipart::witnesses_json(**c)}});
      }
    }
    auto exemplars = [](const std::vector<Polynomial<double>>& ps) {
      json out = json::array();
      for (const auto& p : ps) out.push_back(chipart::polynomial_json(p));
      return out;
    };
    print_json({{"schema", chipart::kSchemaVersion},
                {"command", "box"},
                {"degree", box.degree()},
                {"bounds", std::move(bounds)},
                {"certificates", std::move(certs)},
                {"family", family_line()},
                {"samples",
                 {{"count", count},
                  {"seed", g.seed},
                  {"stable", summary.stable},
                  {"not_stable", summary.not_stable},
                  {"stable_exemplars", exemplars(summary.stable_exemplars)},
                  {"not_stable_exemplars", exemplars(summary.not_stable_exemplars)}}}});
  } else {
    std::cout << "box: degree " << box.degree() << "\n";
    for (std::size_t i = 0; i < box.bounds().size(); ++i) {
      std::cout << "  a" << i + 1 << " in [" << box.bounds()[i].first << ", "
                << box.bounds()[i].second << "]\n";
    }
    std::cout << family_line() << "\n";
    for (const auto* c : {&c1, &c3}) {
      if (!*c) continue;
      std::cout << "certificate " << chipart::to_string((*c)->kind) << ":\n";
      print_witnesses(**c, "  ");
    }
    const double total = static_cast<double>(count);
    std::cout << "samples: " << count << " (seed " << g.seed << ")\n"
              << "  Stable:    " << summary.stable << " ("
              << chipart::to_display_string(100.0 * static_cast<double>(summary.stable) / total)
              << "%)\n"
              << "  NotStable: " << summary.not_stable << " ("
              << chipart::to_display_string(100.0 * static_cast<double>(summary.not_stable) / total)
              << "%)\n";
    for (const auto& p : summary.stable_exemplars) {
      std::cout << "  stable exemplar: " << chipart::polynomial_display(p) << "\n";
    }
    for (const auto& p : summary.not_stable_exemplars) {
      std::cout << "  not-stable exemplar: " << chipart::polynomial_display(p) << "\n";
    }
  }
  const bool all_stable = !c1 && !c3 && summary.not_stable == 0;
  return all_stable ? kExitOk : kExitFail;
}

void add_polynomial_options(CLI::App* cmd, chipart::PolynomialInput& input) {
  cmd->add_option("--coeffs", input.coeffs,
                  "comma-separated coefficients a1,...,an (decimals or fractions like 9/4)")
      ->required();
  cmd->add_option("--degree", input.degree, "expected degree n (checked against --coeffs)");
  cmd->add_option("--leading", input.leading,
                  "leading coefficient c; every coefficient is divided by it");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz stability via the Lienard-Chipart criterion and Delta_4 certificates"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_flag("--json", g.json, "emit one JSON document instead of text");
  auto* exact_flag = app.add_flag("--exact", g.exact, "exact rational arithmetic (default)");
  app.add_flag("--float", g.use_float, "IEEE double arithmetic")->excludes(exact_flag);
  app.add_option("--margin", g.margin, "root-oracle margin around the imaginary axis")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "seed for fuzz and box sampling");

  chipart::PolynomialInput poly_input;
  bool with_roots = false;
  auto* analyze = app.add_subcommand("analyze", "decide stability and print the certificate");
  add_polynomial_options(analyze, poly_input);
  analyze->add_flag("--roots", with_roots, "also run the root oracle");

  auto* minors = app.add_subcommand("minors", "print Delta_1..Delta_n and the three Delta_4 routes");
  add_polynomial_options(minors, poly_input);

  auto* roots = app.add_subcommand("roots", "root oracle (always in doubles)");
  add_polynomial_options(roots, poly_input);

  std::size_t fuzz_count = 1000;
  std::string fuzz_degrees = "1..9";
  bool flip_delta4 = false;
  auto* fuzz = app.add_subcommand("fuzz", "run the property checks on seeded random samples");
  fuzz->add_option("--count", fuzz_count, "number of samples");
  fuzz->add_option("--degrees", fuzz_degrees, "degree range LO..HI");
  fuzz->add_flag("--inject-delta4-sign-bug", flip_delta4)->group("");

  std::string bounds_path;
  std::size_t box_count = 1000;
  auto* box = app.add_subcommand("box", "certify and sample an interval polynomial family");
  box->add_option("--bounds", bounds_path, "bounds JSON file")->required();
  box->add_option("--count", box_count, "number of sampled members");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (fuzz->parsed()) return run_fuzz(g, fuzz_count, fuzz_degrees, flip_delta4);
    if (box->parsed()) return run_box(g, bounds_path, box_count);

    const Polynomial<Rational> exact = chipart::make_input_polynomial(poly_input);
    if (roots->parsed()) return run_roots(chipart::to_float(exact), g);
    if (minors->parsed()) {
      return g.use_float ? run_minors(chipart::to_float(exact), g) : run_minors(exact, g);
    }
    return g.use_float ? run_analyze(chipart::to_float(exact), g, with_roots)
                       : run_analyze(exact, g, with_roots);
  } catch (const chipart::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case chipart::ErrorKind::NoConvergence:
        return kExitFail;
      default:
        return kExitInput;
    }
  }
}
