#include "hyperspec/report_json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace hyperspec {

double report_number(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string to_string(ParityStatus s) {
  switch (s) {
    case ParityStatus::even_integer: return "even";
    case ParityStatus::irrational_component: return "irrational";
    case ParityStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

Json numbers(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(report_number(v));
  return out;
}

Json big(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Json rational(const Rational& q) {
  if (q.denominator() == 1) return q.numerator();
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace

Json to_json(const EnergyReport& report) {
  Json j;
  j["n"] = report.spectrum.size();
  j["eigenvalues"] = numbers(report.spectrum.values);
  if (report.spectrum.exact_part) {
    Json roots = Json::array();
    for (const auto& r : *report.spectrum.exact_part) roots.push_back({r.value, r.multiplicity});
    j["exact_integers"] = std::move(roots);
  } else {
    j["exact_integers"] = nullptr;
  }
  j["energy"] = report_number(report.energy);
  j["parity"] = to_string(report.parity.status);
  if (report.parity.exact_energy) j["exact_energy"] = big(*report.parity.exact_energy);
  else j["exact_energy"] = nullptr;
  if (report.spectrum.residual && report.spectrum.residual->degree() > 0)
    j["residual"] = report.spectrum.residual->to_string();
  else
    j["residual"] = nullptr;
  return j;
}

Json to_json(const GapReport& report) {
  Json j;
  j["before"] = report_number(report.before);
  j["after"] = report_number(report.after);
  j["gap"] = report_number(report.gap);
  j["bound"] = report_number(report.bound);
  j["holds"] = report.holds;
  if (report.strict) j["strict"] = *report.strict;
  else j["strict"] = nullptr;
  return j;
}

Json to_json(const BoundsReport& report) {
  Json params;
  params["n"] = report.n;
  params["m"] = report.m;
  params["r"] = report.r;
  params["s"] = report.s;
  params["max_degree"] = report.max_degree;
  params["min_degree"] = report.min_degree;
  params["average_degree"] = rational(report.average_degree);
  params["zagreb"] = report.zagreb;
  params["lambda1"] = report_number(report.lambda1);
  params["energy"] = report_number(report.energy);
  params["sum_squares"] = report_number(report.sum_squares);
  if (report.det.exact_abs) params["det_abs"] = big(*report.det.exact_abs);
  else params["det_abs"] = nullptr;
  params["det_exact"] = report.det.exact;
  params["det_root_term"] = report_number(report.det.root_term);

  Json bounds = Json::array();
  for (const auto& e : report.entries) {
    Json b;
    b["name"] = e.name;
    b["side"] = to_string(e.side);
    b["target"] = to_string(e.target);
    b["value"] = report_number(e.value);
    b["holds"] = e.holds;
    b["slack"] = report_number(e.slack);
    bounds.push_back(std::move(b));
  }

  Json cmp;
  cmp["b"] = report_number(report.comparison.b);
  cmp["B"] = report_number(report.comparison.B);
  cmp["case"] = to_string(report.comparison.verdict);
  cmp["lema_cota1_vs_2"] = report.sharper_lemma;

  Json j;
  j["parameters"] = std::move(params);
  j["bounds"] = std::move(bounds);
  j["comparisons"] = std::move(cmp);
  return j;
}

}  // namespace hyperspec
