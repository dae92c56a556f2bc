#pragma once
// Output shaping for records, witnesses and tables. JSON is the primary
// format (insertion-ordered so emitted documents are byte-stable); csv and
// markdown are digests of the same data. `stable` zeroes wall-clock fields so
// repeated runs compare byte-identically.

#include <string>

#include "json.hpp"
#include "metdim/solvers.hpp"

namespace metdim {

using ordered_json = nlohmann::ordered_json;

enum class OutFormat { json, csv, markdown };
OutFormat format_from_string(const std::string& s);

ordered_json record_json(const DimensionRecord& rec, bool stable);
std::string record_csv(const DimensionRecord& rec, bool stable);    // header + row
std::string record_markdown(const DimensionRecord& rec, bool stable);

template <class Host>
ordered_json witness_json(const Host& h, const Witness& w) {
  ordered_json j;
  j["kind"] = to_string(w.kind);
  j["a"] = element_name(h, w.a);
  j["b"] = element_name(h, w.b);
  j["signature"] = w.signature;
  return j;
}

ordered_json table_json(const DimensionTable& t, bool stable);
std::string table_csv(const DimensionTable& t);
std::string table_markdown(const DimensionTable& t);

std::string csv_escape(const std::string& s);

}  // namespace metdim
