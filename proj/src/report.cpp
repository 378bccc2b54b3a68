#include "rrcf/report.hpp"

#include <algorithm>
#include <sstream>

#include "rrcf/errors.hpp"

namespace rrcf {

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw DomainError("unknown format '" + std::string(name) + "' (text, json, csv)");
}

std::string deviation_string(const BigReal& x) { return to_string(x, 6); }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_text(const Document& doc, std::ostringstream& out) {
  for (const auto& [k, v] : doc.summary) out << k << ": " << v << "\n";
  if (doc.columns.empty() || !doc.text_table) return;
  std::vector<std::size_t> width(doc.columns.size());
  for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << s << "\n";
  };
  if (!doc.summary.empty()) out << "\n";
  line(doc.columns);
  for (const auto& row : doc.rows) line(row);
}

void render_csv_rows(const Document& doc, std::ostringstream& out) {
  for (const auto& row : doc.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << "\n";
  }
}

std::string digits_string(const BigReal& x, const PrecisionContext& ctx) {
  return to_string(x, ctx.decimal_digits());
}

nlohmann::ordered_json context_json(const PrecisionContext& ctx, const BigReal& tol) {
  return {{"bits", ctx.bits()}, {"tol", deviation_string(tol)}};
}

}  // namespace

std::string render(const std::vector<Document>& docs, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      if (docs.size() == 1) return docs.front().json.dump(2) + "\n";
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& d : docs) arr.push_back(d.json);
      return arr.dump(2) + "\n";
    }
    case Format::Csv:
      if (docs.empty()) return "";
      for (std::size_t i = 0; i < docs.front().columns.size(); ++i) {
        out << (i ? "," : "") << csv_field(docs.front().columns[i]);
      }
      out << "\n";
      for (const auto& d : docs) render_csv_rows(d, out);
      return out.str();
    case Format::Text:
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i) out << "\n";
        render_text(docs[i], out);
      }
      return out.str();
  }
  return out.str();
}

std::string render(const Document& doc, Format format) { return render(std::vector<Document>{doc}, format); }

Document document(const VerificationReport& report) {
  Document d;
  const std::string status = report.pass ? "pass" : "fail";
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  d.columns = {"id", "point", "lhs", "rhs", "abs_dev", "agree_bits", "status", "note"};
  for (const auto& r : report.records) {
    const std::string rs = r.excluded ? "excluded" : (r.pass ? "pass" : "fail");
    nlohmann::ordered_json j = {{"point", r.point},
                                {"lhs", r.lhs},
                                {"rhs", r.rhs},
                                {"abs_dev", deviation_string(r.abs_dev)},
                                {"agree_bits", r.agree_bits},
                                {"status", rs}};
    if (!r.note.empty()) j["note"] = r.note;
    records.push_back(std::move(j));
    d.rows.push_back({report.id, r.point, r.lhs, r.rhs, deviation_string(r.abs_dev), std::to_string(r.agree_bits),
                      rs, r.note});
  }
  d.json = {{"id", report.id},
            {"mode", to_string(report.mode)},
            {"context", context_json(report.ctx, report.tol)},
            {"records", std::move(records)},
            {"max_deviation", deviation_string(report.max_deviation)},
            {"status", status}};
  d.summary = {{"identity", report.id},
               {"mode", to_string(report.mode)},
               {"bits", std::to_string(report.ctx.bits())},
               {"tol", deviation_string(report.tol)},
               {"max_deviation", deviation_string(report.max_deviation)},
               {"status", status}};
  return d;
}

Document document(const std::vector<ValueCheck>& checks, const PrecisionContext& ctx) {
  Document d;
  bool all = true;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  d.columns = {"name", "direct", "closed_form", "abs_dev", "agree_bits", "status"};
  for (const auto& c : checks) {
    all = all && c.pass;
    const std::string st = c.pass ? "pass" : "fail";
    records.push_back({{"name", c.name},
                       {"direct", digits_string(c.direct, ctx)},
                       {"closed_form", digits_string(c.closed, ctx)},
                       {"abs_dev", deviation_string(c.abs_dev)},
                       {"agree_bits", c.agree_bits},
                       {"status", st}});
    d.rows.push_back({c.name, digits_string(c.direct, ctx), digits_string(c.closed, ctx),
                      deviation_string(c.abs_dev), std::to_string(c.agree_bits), st});
  }
  const BigReal tol = verification_tol(ctx);
  d.json = {{"context", context_json(ctx, tol)}, {"checks", std::move(records)}, {"status", all ? "pass" : "fail"}};
  d.summary = {{"bits", std::to_string(ctx.bits())}, {"tol", deviation_string(tol)}, {"status", all ? "pass" : "fail"}};
  return d;
}

Document registry_document() {
  Document d;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  d.columns = {"name", "kind", "q", "closed_form", "provenance"};
  for (const auto& e : registry()) {
    entries.push_back({{"name", e.name},
                       {"kind", to_string(e.kind)},
                       {"q", e.q.label()},
                       {"closed_form", e.closed_form.to_string()},
                       {"provenance", e.provenance}});
    d.rows.push_back({e.name, to_string(e.kind), e.q.label(), e.closed_form.to_string(), e.provenance});
  }
  d.json = {{"values", std::move(entries)}};
  return d;
}

Document document(const SchurClassification& c) {
  Document d;
  if (c.diverges) {
    d.json = {{"n", c.n}, {"classification", "diverges"}};
    d.summary = {{"n", std::to_string(c.n)}, {"classification", "diverges"}};
    return d;
  }
  const std::string formula = "R(q) = " + std::string(c.lambda > 0 ? "" : "-") + "q^" + std::to_string(c.exponent) +
                              " R(" + std::to_string(c.lambda) + ")";
  d.json = {{"n", c.n},
            {"classification", "converges"},
            {"lambda", c.lambda},
            {"rho", c.rho},
            {"exponent", c.exponent},
            {"formula", formula}};
  d.summary = {{"n", std::to_string(c.n)},
               {"classification", "converges"},
               {"lambda", std::to_string(c.lambda)},
               {"rho", std::to_string(c.rho)},
               {"exponent", std::to_string(c.exponent)},
               {"formula", formula}};
  return d;
}

Document document(const AsymptoticRecord& r, bool with_polynomial, const PrecisionContext& ctx) {
  Document d;
  const std::string x = to_string(r.x, 17);
  d.json = {{"x", x},
            {"polynomial", with_polynomial},
            {"approx", digits_string(r.approx, ctx)},
            {"reference", digits_string(r.reference, ctx)},
            {"error", deviation_string(r.error)}};
  d.summary = {{"x", x},
               {"polynomial", with_polynomial ? "yes" : "no"},
               {"approx", digits_string(r.approx, ctx)},
               {"reference", digits_string(r.reference, ctx)},
               {"error", deviation_string(r.error)}};
  d.columns = {"x", "polynomial", "approx", "reference", "error"};
  d.text_table = false;
  d.rows = {{x, with_polynomial ? "yes" : "no", digits_string(r.approx, ctx), digits_string(r.reference, ctx),
             deviation_string(r.error)}};
  return d;
}

Document document(const JimsRecord& r, const PrecisionContext& ctx) {
  Document d;
  const std::string st = r.pass ? "pass" : "fail";
  d.json = {{"context", context_json(ctx, verification_tol(ctx))},
            {"series", digits_string(r.series, ctx)},
            {"cf", digits_string(r.cf, ctx)},
            {"sum", digits_string(r.sum, ctx)},
            {"target", digits_string(r.target, ctx)},
            {"abs_dev", deviation_string(r.abs_dev)},
            {"status", st}};
  d.summary = {{"series", digits_string(r.series, ctx)}, {"cf", digits_string(r.cf, ctx)},
               {"sum", digits_string(r.sum, ctx)},       {"target", digits_string(r.target, ctx)},
               {"abs_dev", deviation_string(r.abs_dev)}, {"status", st}};
  return d;
}

Document series_document(const std::string& which, const IntegerSeries& s) {
  Document d;
  d.json = s.to_json();
  d.json["series"] = which;
  d.summary = {{"series", which}, {"order", std::to_string(s.order())}};
  d.columns = {"exponent", "coefficient"};
  const int from = std::min(s.valuation(), 0);
  const auto dense = s.dense(from);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    d.rows.push_back({std::to_string(from + static_cast<int>(i)), dense[i].get_str()});
  }
  return d;
}

}  // namespace rrcf
