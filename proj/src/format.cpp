#include "metdim/format.hpp"

#include <sstream>

namespace metdim {

OutFormat format_from_string(const std::string& s) {
  if (s == "json") return OutFormat::json;
  if (s == "csv") return OutFormat::csv;
  if (s == "markdown" || s == "md") return OutFormat::markdown;
  throw std::invalid_argument("unknown format \"" + s + "\" (json|csv|markdown)");
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

ordered_json record_json(const DimensionRecord& rec, bool stable) {
  ordered_json j;
  j["host"] = rec.host;
  j["kind"] = to_string(rec.kind);
  j["value"] = rec.value;
  j["basis"] = rec.basis_names;
  j["exact"] = rec.exact;
  if (rec.lower_bound) j["lower_bound"] = *rec.lower_bound;
  j["subsets_examined"] = rec.subsets_examined;
  j["elapsed_ms"] = stable ? 0 : rec.elapsed_ms;
  if (!rec.note.empty()) j["note"] = rec.note;
  return j;
}

namespace {

std::string joined_basis(const DimensionRecord& rec) {
  std::string out;
  for (std::size_t i = 0; i < rec.basis_names.size(); ++i) {
    if (i) out += ' ';
    out += rec.basis_names[i];
  }
  return out;
}

}  // namespace

std::string record_csv(const DimensionRecord& rec, bool stable) {
  std::ostringstream os;
  os << "host,kind,value,basis,exact,lower_bound,subsets_examined,elapsed_ms,note\n";
  os << csv_escape(rec.host) << ',' << to_string(rec.kind) << ',' << rec.value << ','
     << csv_escape(joined_basis(rec)) << ',' << (rec.exact ? "true" : "false") << ','
     << (rec.lower_bound ? std::to_string(*rec.lower_bound) : "") << ','
     << rec.subsets_examined << ',' << (stable ? 0 : rec.elapsed_ms) << ','
     << csv_escape(rec.note) << '\n';
  return os.str();
}

std::string record_markdown(const DimensionRecord& rec, bool stable) {
  std::ostringstream os;
  os << "| host | kind | value | basis | exact | subsets_examined | elapsed_ms |\n";
  os << "|---|---|---|---|---|---|---|\n";
  os << "| " << rec.host << " | " << to_string(rec.kind) << " | " << rec.value << " | "
     << joined_basis(rec) << " | " << (rec.exact ? "yes" : "no") << " | "
     << rec.subsets_examined << " | " << (stable ? 0 : rec.elapsed_ms) << " |\n";
  if (!rec.note.empty()) os << "\n" << rec.note << "\n";
  return os.str();
}

ordered_json table_json(const DimensionTable& t, bool stable) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r;
    r["d"] = row.d;
    r["records"] = ordered_json::array();
    for (const auto& rec : row.records) r["records"].push_back(record_json(rec, stable));
    j["rows"].push_back(std::move(r));
  }
  j["consistency"] = ordered_json::array();
  for (const auto& c : t.consistency) {
    ordered_json l;
    l["check"] = c.check;
    l["d"] = c.d;
    l["status"] = c.status;
    l["detail"] = c.detail;
    j["consistency"].push_back(std::move(l));
  }
  j["any_inexact"] = t.any_inexact;
  return j;
}

namespace {

// digest cell for one kind: exact values print bare, inexact as [lb,value]
std::string cell(const DimensionRecord& rec) {
  if (rec.exact) return std::to_string(rec.value);
  return "[" + std::to_string(rec.lower_bound.value_or(1)) + "," + std::to_string(rec.value) +
         "]";
}

const DimensionRecord* find_kind(const TableRow& row, Kind k) {
  for (const auto& rec : row.records)
    if (rec.kind == k) return &rec;
  return nullptr;
}

std::string conjecture_cell(const DimensionTable& t, int d) {
  for (const auto& c : t.consistency)
    if (c.d == d && c.check == "conjecture_scan") {
      const auto pos = c.detail.find(": ");
      return pos == std::string::npos ? c.detail : c.detail.substr(pos + 2);
    }
  return "";
}

}  // namespace

std::string table_csv(const DimensionTable& t) {
  std::ostringstream os;
  os << "d,edim,dim,mdim,conjecture\n";
  for (const auto& row : t.rows) {
    const auto* e = find_kind(row, Kind::edge);
    const auto* v = find_kind(row, Kind::metric);
    const auto* m = find_kind(row, Kind::mixed);
    os << row.d << ',' << (e ? cell(*e) : "") << ',' << (v ? cell(*v) : "") << ','
       << (m ? cell(*m) : "") << ',' << conjecture_cell(t, row.d) << '\n';
  }
  os << "\ncheck,d,status,detail\n";
  for (const auto& c : t.consistency)
    os << c.check << ',' << c.d << ',' << c.status << ',' << csv_escape(c.detail) << '\n';
  return os.str();
}

std::string table_markdown(const DimensionTable& t) {
  std::ostringstream os;
  os << "| d | edim | dim | mdim | conjecture |\n|---|---|---|---|---|\n";
  for (const auto& row : t.rows) {
    const auto* e = find_kind(row, Kind::edge);
    const auto* v = find_kind(row, Kind::metric);
    const auto* m = find_kind(row, Kind::mixed);
    os << "| " << row.d << " | " << (e ? cell(*e) : "-") << " | " << (v ? cell(*v) : "-")
       << " | " << (m ? cell(*m) : "-") << " | ";
    const auto cj = conjecture_cell(t, row.d);
    os << (cj.empty() ? "-" : cj) << " |\n";
  }
  os << '\n';
  for (const auto& c : t.consistency)
    os << "- " << c.status << " " << c.check << " d=" << c.d << ": " << c.detail << "\n";
  return os.str();
}

}  // namespace metdim
