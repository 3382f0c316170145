#include "chipart/io.hpp"

#include <sstream>

#include "chipart/error.hpp"

namespace chipart {

using nlohmann::json;

namespace {

[[noreturn]] void bad_document(const std::string& why) {
  throw Error(ErrorKind::ParseError, why);
}

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      return Rational(mpz_class(std::to_string(v.get<std::uint64_t>())));
    }
    return Rational(static_cast<long>(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) return Rational::from_double(v.get<double>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  bad_document(where + ": expected a number or a number string");
}

std::string term_display(int power) {
  if (power == 0) return "";
  if (power == 1) return "s";
  return "s^" + std::to_string(power);
}

}  // namespace

std::vector<Rational> parse_number_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Polynomial<Rational> make_input_polynomial(const PolynomialInput& input) {
  std::vector<Rational> coeffs = parse_number_list(input.coeffs);
  if (input.degree && *input.degree != static_cast<int>(coeffs.size())) {
    throw Error(ErrorKind::LengthMismatch,
                "--degree " + std::to_string(*input.degree) + " but " +
                    std::to_string(coeffs.size()) + " coefficients given");
  }
  if (input.leading) {
    const Rational lead = Rational::parse(*input.leading);
    if (lead.is_zero()) throw Error(ErrorKind::PreconditionUnmet, "leading coefficient is zero");
    for (Rational& a : coeffs) a /= lead;
  }
  const int degree = static_cast<int>(coeffs.size());
  return Polynomial<Rational>(degree, std::move(coeffs));
}

json scalar_json(const Rational& x) { return x.to_fraction_string(); }
json scalar_json(double x) { return x; }

template <Scalar T>
json polynomial_json(const Polynomial<T>& p) {
  json coeffs = json::array();
  for (const T& a : p.coeffs()) {
    if constexpr (is_exact_v<T>) {
      coeffs.push_back(a.to_fraction_string());
    } else {
      coeffs.push_back(to_display_string(a));
    }
  }
  return {{"degree", p.degree()},
          {"domain", is_exact_v<T> ? "exact" : "float"},
          {"coeffs", std::move(coeffs)}};
}

template <Scalar T>
Polynomial<T> polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("degree") || !j.contains("coeffs")) {
    bad_document("polynomial needs 'degree' and 'coeffs'");
  }
  if (!j["degree"].is_number_integer()) bad_document("'degree' must be an integer");
  if (!j["coeffs"].is_array()) bad_document("'coeffs' must be an array");
  std::vector<T> coeffs;
  for (const json& v : j["coeffs"]) {
    const Rational exact = rational_from_json(v, "coeffs");
    if constexpr (is_exact_v<T>) {
      coeffs.push_back(exact);
    } else {
      coeffs.push_back(exact.to_double());
    }
  }
  return Polynomial<T>(j["degree"].get<int>(), std::move(coeffs));
}

template <Scalar T>
json witnesses_json(const Certificate<T>& cert) {
  json out = json::array();
  for (const auto& w : cert.witnesses) {
    out.push_back({{"name", w.name},
                   {"value", scalar_json(w.value)},
                   {"relation", std::string(to_string(w.relation))}});
  }
  return out;
}

json root_report_json(const RootReport& report) {
  json roots = json::array();
  for (const auto& z : report.roots) roots.push_back({{"re", z.real()}, {"im", z.imag()}});
  return {{"roots", std::move(roots)},
          {"max_real_part", report.max_real_part},
          {"classification", std::string(to_string(report.classification))},
          {"residual", report.residual},
          {"margin", report.margin},
          {"iterations", report.iterations},
          {"converged", report.converged}};
}

json parse_json_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const std::size_t offset = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << column << ": " << e.what();
    throw Error(ErrorKind::ParseError, msg.str());
  }
}

IntervalBox<Rational> box_from_json(const json& j) {
  if (!j.is_object()) bad_document("bounds file must hold a JSON object");
  if (!j.contains("schema") || j["schema"] != kSchemaVersion) {
    bad_document("bounds file needs \"schema\": " + std::to_string(kSchemaVersion));
  }
  if (!j.contains("degree") || !j["degree"].is_number_integer()) {
    bad_document("bounds file needs an integer 'degree'");
  }
  if (!j.contains("bounds") || !j["bounds"].is_array()) {
    bad_document("bounds file needs a 'bounds' array");
  }
  std::vector<std::pair<Rational, Rational>> bounds;
  std::size_t i = 0;
  for (const json& pair : j["bounds"]) {
    ++i;
    const std::string where = "bounds[" + std::to_string(i - 1) + "]";
    if (!pair.is_array() || pair.size() != 2) bad_document(where + " must be [lo, hi]");
    bounds.emplace_back(rational_from_json(pair[0], where), rational_from_json(pair[1], where));
  }
  return IntervalBox<Rational>(j["degree"].get<int>(), std::move(bounds));
}

template <Scalar T>
std::string polynomial_display(const Polynomial<T>& p) {
  std::string out = term_display(p.degree());
  for (int k = 1; k <= p.degree(); ++k) {
    const T a = p.coeff(k);
    if (a == T(0)) continue;
    const bool negative = a < T(0);
    const T magnitude = negative ? -a : a;
    const int power = p.degree() - k;
    out += negative ? " - " : " + ";
    if (magnitude != T(1) || power == 0) {
      out += to_display_string(magnitude);
      if (power > 0) out += " ";
    }
    out += term_display(power);
  }
  return out;
}

#define CHIPART_INSTANTIATE(T)                                        \
  template json polynomial_json<T>(const Polynomial<T>&);             \
  template Polynomial<T> polynomial_from_json<T>(const json&);        \
  template json witnesses_json<T>(const Certificate<T>&);             \
  template std::string polynomial_display<T>(const Polynomial<T>&);

CHIPART_INSTANTIATE(Rational)
CHIPART_INSTANTIATE(double)

#undef CHIPART_INSTANTIATE

}  // namespace chipart
