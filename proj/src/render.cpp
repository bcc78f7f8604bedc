#include <sstream>
#include <type_traits>

#include "json.hpp"
#include "powersum/cli.hpp"

namespace powersum::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string latex_number(const Rational& r) {
  if (r.is_integer()) return r.str();
  const Integer num = r.numerator();
  const Integer mag = num < 0 ? Integer(-num) : num;
  return std::string(num < 0 ? "-" : "") + "\\frac{" + mag.get_str() + "}{" +
         r.denominator().get_str() + "}";
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += sep;
    out += items[i];
  }
  return out;
}

template <typename Range, typename Fn>
std::vector<std::string> map_strings(const Range& range, Fn&& fn) {
  std::vector<std::string> out;
  for (const auto& v : range) out.push_back(fn(v));
  return out;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

// Arguments echo as JSON numbers while they fit in 64 bits; computed values
// are always strings.
Json argument_json(const Natural& n) {
  if (n.value().fits_ulong_p()) return Json(n.value().get_ui());
  return Json(n.str());
}

Json witness_json(const Witness& w) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Integer>) {
          return v.get_str();
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Polynomial>) {
          return map_strings(v.coefficients(), [](const Rational& c) { return c.str(); });
        } else if constexpr (std::is_same_v<T, bool>) {
          return v;
        } else {
          return "error: " + v.message;
        }
      },
      w);
}

std::string witness_text(const Witness& w) {
  const Json j = witness_json(w);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) return "[" + join(j.get<std::vector<std::string>>(), " ") + "]";
  return j.dump();
}

std::string latex_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const Rational& c = coeffs[d];
    if (c.is_zero()) continue;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (d == 0 || mag != Rational(1)) out += latex_number(mag);
    if (d >= 1) out += d == 1 ? "n" : "n^{" + std::to_string(d) + "}";
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "plain") return OutputFormat::plain;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "latex") return OutputFormat::latex;
  return std::nullopt;
}

std::string render_stirling(const StirlingTable& table, OutputFormat fmt) {
  const auto row_strings = [&](unsigned k) {
    return map_strings(table.row(k), [](const Integer& v) { return v.get_str(); });
  };
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::plain:
      for (unsigned k = 0; k <= table.kmax(); ++k) os << join(row_strings(k), " ") << "\n";
      break;
    case OutputFormat::json: {
      Json rows = Json::array();
      for (unsigned k = 0; k <= table.kmax(); ++k) rows.push_back(row_strings(k));
      os << dump(Json{{"kmax", table.kmax()}, {"rows", rows}});
      break;
    }
    case OutputFormat::csv:
      os << "k";
      for (unsigned j = 0; j <= table.kmax(); ++j) os << ",j" << j;
      os << "\n";
      for (unsigned k = 0; k <= table.kmax(); ++k) os << k << "," << join(row_strings(k), ",") << "\n";
      break;
    case OutputFormat::latex:
      for (unsigned k = 0; k <= table.kmax(); ++k) {
        os << k << " & " << join(row_strings(k), " & ") << " \\\\\n";
      }
      break;
  }
  return os.str();
}

std::string render_coeffs(const CoefficientRow& row, OutputFormat fmt) {
  const auto strs = map_strings(row.coefficients, [](const Rational& r) { return r.str(); });
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::plain:
      os << join(strs, " ") << "\n";
      break;
    case OutputFormat::json:
      os << dump(Json{{"k", row.k}, {"a", strs}});
      break;
    case OutputFormat::csv:
      os << "j,a\n";
      for (std::size_t j = 0; j < strs.size(); ++j) os << j << "," << strs[j] << "\n";
      break;
    case OutputFormat::latex:
      os << join(map_strings(row.coefficients, latex_number), " & ") << " \\\\\n";
      break;
  }
  return os.str();
}

std::string render_evaluation(const Evaluation& e, OutputFormat fmt) {
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::plain:
      os << e.value.str() << "\n";
      break;
    case OutputFormat::json:
      os << dump(Json{{"k", e.k}, {"n", argument_json(e.n)}, {"formula", to_string(e.formula)},
                      {"value", e.value.str()}});
      break;
    case OutputFormat::csv:
      os << "k,n,formula,value\n" << e.k << "," << e.n << "," << to_string(e.formula) << ","
         << e.value << "\n";
      break;
    case OutputFormat::latex:
      os << "S_{" << e.k << "}(" << e.n << ") = " << e.value << "\n";
      break;
  }
  return os.str();
}

std::string render_evaluations(unsigned k, const Natural& n, const std::vector<Evaluation>& evals,
                               OutputFormat fmt) {
  bool agreement = true;
  for (const auto& e : evals) agreement = agreement && e.value == evals.front().value;
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::plain:
      for (const auto& e : evals) os << to_string(e.formula) << " " << e.value << "\n";
      os << "agreement " << (agreement ? "true" : "false") << "\n";
      break;
    case OutputFormat::json: {
      Json results = Json::array();
      for (const auto& e : evals) {
        results.push_back(Json{{"formula", to_string(e.formula)}, {"value", e.value.str()}});
      }
      os << dump(Json{{"k", k}, {"n", argument_json(n)}, {"results", results}, {"agreement", agreement}});
      break;
    }
    case OutputFormat::csv:
      os << "k,n,formula,value\n";
      for (const auto& e : evals) os << k << "," << n << "," << to_string(e.formula) << "," << e.value << "\n";
      break;
    case OutputFormat::latex:
      for (const auto& e : evals) {
        os << "\\text{" << to_string(e.formula) << "} & S_{" << k << "}(" << n << ") = " << e.value
           << " \\\\\n";
      }
      os << "% agreement: " << (agreement ? "true" : "false") << "\n";
      break;
  }
  return os.str();
}

std::string render_poly(unsigned k, FormulaId formula, const Polynomial& p, OutputFormat fmt) {
  // Coefficients low degree to high; S_k always has degree k+1.
  std::vector<std::string> strs;
  for (std::size_t d = 0; d <= static_cast<std::size_t>(k) + 1; ++d) strs.push_back(p.coefficient(d).str());
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::plain:
      os << join(strs, " ") << "\n";
      break;
    case OutputFormat::json:
      os << dump(Json{{"k", k}, {"formula", to_string(formula)}, {"coeffs", strs}});
      break;
    case OutputFormat::csv:
      os << "degree,coeff\n";
      for (std::size_t d = 0; d < strs.size(); ++d) os << d << "," << strs[d] << "\n";
      break;
    case OutputFormat::latex:
      os << "S_{" << k << "}(n) = " << latex_poly(p) << "\n";
      break;
  }
  return os.str();
}

std::string render_report(const VerificationReport& report, OutputFormat fmt) {
  const auto formula_name = [](const Mismatch& m) {
    return m.formula ? std::string(to_string(*m.formula)) : std::string("-");
  };
  const auto index_name = [](const Mismatch& m) {
    return m.index ? std::to_string(*m.index) : std::string("-");
  };
  std::ostringstream os;
  switch (fmt) {
    case OutputFormat::plain:
      os << "checks_run: " << report.checks_run << "\n";
      os << "mismatches: " << report.mismatches.size() << "\n";
      for (const auto& m : report.mismatches) {
        os << "  " << m.check << " formula=" << formula_name(m) << " k=" << m.k
           << " n=" << index_name(m) << " expected=" << witness_text(m.expected)
           << " actual=" << witness_text(m.actual) << "\n";
      }
      os << "status: " << (report.pass() ? "pass" : "FAIL") << "\n";
      break;
    case OutputFormat::json: {
      Json mismatches = Json::array();
      for (const auto& m : report.mismatches) {
        Json j{{"check", m.check}};
        j["formula"] = m.formula ? Json(to_string(*m.formula)) : Json(nullptr);
        j["k"] = m.k;
        j["n"] = m.index ? Json(*m.index) : Json(nullptr);
        j["expected"] = witness_json(m.expected);
        j["actual"] = witness_json(m.actual);
        mismatches.push_back(std::move(j));
      }
      os << dump(Json{{"checks_run", report.checks_run},
                      {"mismatches", mismatches},
                      {"pass", report.pass()},
                      {"elapsed_ms", report.elapsed.count()}});
      break;
    }
    case OutputFormat::csv:
      os << "check,formula,k,n,expected,actual\n";
      for (const auto& m : report.mismatches) {
        os << m.check << "," << formula_name(m) << "," << m.k << "," << index_name(m) << ","
           << witness_text(m.expected) << "," << witness_text(m.actual) << "\n";
      }
      break;
    case OutputFormat::latex:
      os << "\\text{checks run} & " << report.checks_run << " \\\\\n";
      os << "\\text{mismatches} & " << report.mismatches.size() << " \\\\\n";
      break;
  }
  return os.str();
}

}  // namespace powersum::cli
