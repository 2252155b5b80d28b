#include <algorithm>
#include <cmath>
#include <sstream>

#include "verify_common.hpp"
#include "wadj/canonical.hpp"
#include "wadj/transforms.hpp"

namespace wadj {

namespace detail {

bool has_pstar(const WeightFunction& f, int d_max) { return check_pstar(f, std::max(2, d_max)).passes; }

HighReal half_n_minus_09_sqrt(int n, int shift_tenths) {
  const HighReal factor = HighReal(10 * n - 9) / 20;
  return factor * boost::multiprecision::sqrt(HighReal(10 * n - shift_tenths) / 10);
}

}  // namespace detail

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(CaseStatus status) {
  switch (status) {
    case CaseStatus::pass: return "pass";
    case CaseStatus::fail: return "fail";
    case CaseStatus::info: return "info";
    case CaseStatus::not_applicable: return "n/a";
  }
  return "unknown";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const auto& c : cases) {
    switch (c.status) {
      case CaseStatus::pass: ++s.pass; break;
      case CaseStatus::fail: ++s.fail; break;
      case CaseStatus::info: ++s.info; break;
      case CaseStatus::not_applicable: ++s.not_applicable; break;
    }
  }
  return s;
}

bool VerificationReport::passed() const { return summary().fail == 0; }

Json VerificationReport::to_json() const {
  Json out;
  out["campaign"] = campaign;
  out["parameters"] = parameters;
  Json list = Json::array();
  for (const auto& c : cases) {
    Json row;
    row["id"] = c.id;
    row["status"] = to_string(c.status);
    row["inputs"] = c.inputs;
    row["values"] = c.values;
    if (c.computed) row["computed"] = *c.computed;
    if (c.reference) row["reference"] = *c.reference;
    if (c.coordinate) row["coordinate"] = *c.coordinate;
    if (c.tolerance) row["tolerance"] = *c.tolerance;
    if (!c.note.empty()) row["note"] = c.note;
    list.push_back(std::move(row));
  }
  out["cases"] = std::move(list);
  const auto s = summary();
  out["summary"] = {{"pass", s.pass},
                    {"fail", s.fail},
                    {"info", s.info},
                    {"not_applicable", s.not_applicable},
                    {"passed", passed()},
                    {"runtime_seconds", runtime_seconds}};
  return out;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "campaign,id,status,coordinate,reference,computed,tolerance,note\n";
  for (const auto& c : cases) {
    os << csv_field(campaign) << ',' << csv_field(c.id) << ',' << to_string(c.status) << ','
       << csv_field(c.coordinate.value_or("")) << ',' << csv_field(c.reference.value_or("")) << ','
       << (c.computed ? format_number(*c.computed) : "") << ','
       << (c.tolerance ? format_number(*c.tolerance) : "") << ',' << csv_field(c.note) << '\n';
  }
  return os.str();
}

VerificationReport merge_reports(std::string campaign, const std::vector<VerificationReport>& parts) {
  VerificationReport out;
  out.campaign = std::move(campaign);
  Json params = Json::array();
  for (const auto& part : parts) {
    params.push_back({{"campaign", part.campaign}, {"parameters", part.parameters}});
    out.cases.insert(out.cases.end(), part.cases.begin(), part.cases.end());
    out.runtime_seconds += part.runtime_seconds;
  }
  out.parameters["parts"] = std::move(params);
  return out;
}

Graph make_d1(int n) {
  if (n < 5) throw std::invalid_argument("make_d1: needs n >= 5");
  return attach_pendants(make_theta(2, 2, 2), 0, static_cast<std::size_t>(n - 5));
}

std::optional<int> named_index(const Graph& g) {
  const int n = static_cast<int>(g.order());
  for (int i = 0; i < 4; ++i) {
    if (n < detail::named_min_order(i)) continue;
    const Graph named = detail::named_graph(i, n);
    const bool same = g.order() <= kDefaultCanonicalBound ? isomorphic(g, named)
                                                          : compare_isomorphism(g, named).isomorphic;
    if (same) return i;
  }
  return std::nullopt;
}

std::vector<WeightFunction> pstar_weight_set() {
  std::vector<WeightFunction> out;
  for (const char* spec : {"constant_one", "zagreb1", "hyper_zagreb", "forgotten", "sum_connectivity:a=1.5",
                           "sum_connectivity:a=3", "platt:a=2", "sombor:a=2,b=1.5", "exp_zagreb1"}) {
    out.push_back(WeightFunction::parse(spec));
  }
  return out;
}

}  // namespace wadj
