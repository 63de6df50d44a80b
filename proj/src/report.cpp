#include "derham/report.hpp"

#include "derham/bockstein.hpp"
#include "derham/complex.hpp"

#include <sstream>
#include <stdexcept>

namespace derham {

namespace {

Json integer_json(const Integer& x) {
  if (fits_int64(x)) return Json(x.convert_to<long long>());
  return Json(x.str());
}

std::string integer_text(const Json& j) {
  return j.is_string() ? j.get<std::string>() : std::to_string(j.get<long long>());
}

Json entry_json(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return Json(v);
  } catch (const std::exception&) {
  }
  return Json(s);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field: ") + key);
  return j.at(key);
}

std::string join_values(const Json& arr, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    if (k) out += sep;
    out += integer_text(arr[k]);
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#') out += '\\';
    out += c;
  }
  return out;
}

// "x^3 y dx dy" -> "x^{3} y\,dx\,dy".
std::string latex_form(const std::string& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '^') {
      std::size_t e = k + 1;
      while (e < s.size() && s[e] != ' ') ++e;
      out += "^{" + s.substr(k + 1, e - k - 1) + "}";
      k = e - 1;
    } else if (s[k] == ' ') {
      out += "\\,";
    } else {
      out += s[k];
    }
  }
  return out;
}

std::string params_text(const Json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ";";
    out += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return out;
}

std::string render_csv(const ReportDocument& doc) {
  std::ostringstream out;
  const Json& res = doc.results;
  if (doc.kind == "cohomology") {
    out << "i,free_rank,invariant_factors\n";
    for (const Json& g : res)
      out << g["i"].get<int>() << ',' << g["free_rank"].get<long long>() << ','
          << join_values(g["invariant_factors"], " ") << '\n';
  } else if (doc.kind == "pages") {
    out << "k,i,dim,d_rank\n";
    for (const Json& pg : res["pages"])
      for (std::size_t i = 0; i < pg["dims"].size(); ++i)
        out << pg["k"].get<int>() << ',' << i << ',' << pg["dims"][i].get<long long>() << ','
            << pg["differential_ranks"][i].get<long long>() << '\n';
  } else if (doc.kind == "verify") {
    out << "statement,parameters,status,failed_check,witness_degree\n";
    for (const Json& rep : res["reports"]) {
      const Json& w = rep["witness"];
      out << rep["statement"].get<std::string>() << ',' << csv_escape(params_text(rep["parameters"])) << ','
          << rep["status"].get<std::string>() << ','
          << (w.is_null() ? "" : csv_escape(w["check"].get<std::string>())) << ','
          << (w.is_null() ? "" : std::to_string(w["degree"].get<int>())) << '\n';
    }
  } else if (doc.kind == "basis") {
    out << "index,element\n";
    const Json& els = res["elements"];
    for (std::size_t k = 0; k < els.size(); ++k) out << k << ',' << csv_escape(els[k].get<std::string>()) << '\n';
  } else {
    throw std::invalid_argument("render: unknown document kind " + doc.kind);
  }
  return out.str();
}

std::string render_latex(const ReportDocument& doc) {
  std::ostringstream out;
  const Json& res = doc.results;
  out << "% " << doc.command << '\n';
  if (doc.kind == "cohomology") {
    out << "\\begin{tabular}{cl}\n$i$ & $H^i$ \\\\\n\\hline\n";
    if (res.empty()) out << "--- & $0$ \\\\\n";
    for (const Json& g : res) out << g["i"].get<int>() << " & $" << latex_group(g) << "$ \\\\\n";
    out << "\\end{tabular}\n";
  } else if (doc.kind == "pages") {
    const std::size_t cols = res["pages"].empty() ? 0 : res["pages"][0]["dims"].size();
    out << "\\begin{tabular}{c" << std::string(cols, 'c') << "}\n$k$";
    for (std::size_t i = 0; i < cols; ++i) out << " & $\\dim E_k^{" << i << "}$";
    out << " \\\\\n\\hline\n";
    for (const Json& pg : res["pages"]) {
      out << pg["k"].get<int>();
      for (const Json& d : pg["dims"]) out << " & " << d.get<long long>();
      out << " \\\\\n";
    }
    out << "\\end{tabular}\n";
  } else if (doc.kind == "verify") {
    out << "\\begin{tabular}{llc}\nstatement & parameters & status \\\\\n\\hline\n";
    for (const Json& rep : res["reports"])
      out << latex_escape(rep["statement"].get<std::string>()) << " & " << latex_escape(params_text(rep["parameters"]))
          << " & " << rep["status"].get<std::string>() << " \\\\\n";
    out << "\\end{tabular}\n";
  } else if (doc.kind == "basis") {
    out << "\\begin{tabular}{rl}\n\\# & element \\\\\n\\hline\n";
    const Json& els = res["elements"];
    for (std::size_t k = 0; k < els.size(); ++k)
      out << k << " & $" << latex_form(els[k].get<std::string>()) << "$ \\\\\n";
    out << "\\end{tabular}\n";
  } else {
    throw std::invalid_argument("render: unknown document kind " + doc.kind);
  }
  return out.str();
}

}  // namespace

Json to_json(const ReportDocument& doc) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = doc.command;
  j["kind"] = doc.kind;
  j["parameters"] = doc.parameters;
  j["results"] = doc.results;
  if (doc.timing_seconds) j["timing"] = Json{{"seconds", *doc.timing_seconds}};
  return j;
}

ReportDocument document_from_json(const Json& j) {
  if (field(j, "schema_version") != kSchemaVersion)
    throw std::invalid_argument("unsupported schema_version " + field(j, "schema_version").dump());
  ReportDocument doc;
  doc.command = field(j, "command").get<std::string>();
  doc.kind = field(j, "kind").get<std::string>();
  doc.parameters = field(j, "parameters");
  doc.results = field(j, "results");
  if (j.contains("timing")) doc.timing_seconds = field(j["timing"], "seconds").get<double>();
  return doc;
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["statement"] = report.statement;
  Json params = Json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;
  j["status"] = report.passed ? "pass" : "fail";
  Json checks = Json::array();
  for (const Check& c : report.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["checks"] = checks;
  if (report.witness) {
    Json vec = Json::array();
    for (const auto& e : report.witness->vector) vec.push_back(entry_json(e));
    j["witness"] = Json{{"check", report.witness->check},
                        {"degree", report.witness->degree},
                        {"description", report.witness->description},
                        {"vector", vec}};
  } else {
    j["witness"] = nullptr;
  }
  j["notes"] = report.notes;
  return j;
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.statement = field(j, "statement").get<std::string>();
  const Json& params = field(j, "parameters");
  for (auto it = params.begin(); it != params.end(); ++it) r.parameters.emplace_back(it.key(), it->get<long long>());
  r.passed = field(j, "status") == "pass";
  for (const Json& c : field(j, "checks"))
    r.checks.push_back({c.at("name").get<std::string>(), c.at("passed").get<bool>(), c.at("detail").get<std::string>()});
  const Json& w = field(j, "witness");
  if (!w.is_null()) {
    Witness wit;
    wit.check = w.at("check").get<std::string>();
    wit.degree = w.at("degree").get<int>();
    wit.description = w.at("description").get<std::string>();
    for (const Json& e : w.at("vector")) wit.vector.push_back(integer_text(e));
    r.witness = wit;
  }
  r.notes = field(j, "notes").get<std::vector<std::string>>();
  return r;
}

Json group_json(const FgAbGroup& g) {
  Json factors = Json::array();
  for (const Integer& d : g.invariant_factors()) factors.push_back(integer_json(d));
  return Json{{"free_rank", g.free_rank()}, {"invariant_factors", factors}};
}

Json cohomology_results(const CohomologyResult& h) {
  Json out = Json::array();
  for (int i = 0; i <= h.r; ++i) {
    const FgAbGroup& g = h.group(i);
    if (g.is_trivial()) continue;
    Json entry{{"i", i}};
    const Json gj = group_json(g);
    for (auto& [k, v] : gj.items()) entry[k] = v;
    out.push_back(entry);
  }
  return out;
}

Json basis_results(int r, int n, int i) {
  const GradedPiece piece = basis(r, n, i);
  Json els = Json::array();
  for (const BasisElement& e : piece.elements()) els.push_back(to_string(e, r));
  return Json{{"dim", piece.dim()}, {"elements", els}};
}

Json pages_results(int r, int n, Prime p, int kmax) {
  const auto cs = couples(r, n, p, kmax);
  const VerificationReport ident = verify_page_identification(r, n, p);
  Json list = Json::array();
  for (const ExactCouple& c : cs) {
    const SpectralPage pg = page_of(c);
    Json ranks = Json::array();
    for (const ModMatrix& d : pg.d) ranks.push_back(d.size() == 0 ? 0 : rank_mod_p(d, p));
    const std::string tag = "E_" + std::to_string(pg.k) + ": ";
    std::string status = "not_checked";
    Json checks = Json::array();
    for (const Check& chk : ident.checks) {
      if (chk.name.rfind(tag, 0) != 0) continue;
      if (status == "not_checked") status = "pass";
      if (!chk.passed) status = "fail";
      checks.push_back(Json{{"name", chk.name.substr(tag.size())}, {"passed", chk.passed}});
    }
    list.push_back(Json{{"k", pg.k}, {"dims", pg.dims}, {"differential_ranks", ranks},
                        {"zero", pg.is_zero()}, {"status", status}, {"checks", checks}});
  }
  Json out{{"pages", list}};
  if (n == 0) out["note"] = "degenerate: n = 0, H^0 = Z is free and every page equals E_1";
  else if (n % p != 0) out["note"] = "p does not divide n: E_1 = 0";
  return out;
}

Json verify_results(const std::vector<VerificationReport>& reports) {
  Json list = Json::array();
  long long failed = 0;
  for (const auto& r : reports) {
    list.push_back(to_json(r));
    if (!r.passed) ++failed;
  }
  return Json{{"passed", failed == 0},
              {"total", static_cast<long long>(reports.size())},
              {"failed", failed},
              {"reports", list}};
}

bool verify_passed(const Json& results) { return field(results, "passed").get<bool>(); }

std::string latex_group(const Json& group) {
  std::vector<std::string> parts;
  const long long free = group["free_rank"].get<long long>();
  if (free == 1) parts.push_back("\\mathbb{Z}");
  if (free > 1) parts.push_back("\\mathbb{Z}^{" + std::to_string(free) + "}");
  const Json& f = group["invariant_factors"];
  for (std::size_t k = 0; k < f.size();) {
    std::size_t e = k;
    while (e < f.size() && f[e] == f[k]) ++e;
    const std::string base = "\\mathbb{Z}/" + integer_text(f[k]);
    parts.push_back(e - k == 1 ? base : "(" + base + ")^{" + std::to_string(e - k) + "}");
    k = e;
  }
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " \\oplus " : "") + parts[k];
  return out;
}

std::string render(const ReportDocument& doc, Format format) {
  switch (format) {
    case Format::json:
      return to_json(doc).dump(2) + "\n";
    case Format::csv:
      return render_csv(doc);
    case Format::latex:
      return render_latex(doc);
  }
  return {};
}

}  // namespace derham
