#ifndef NAMELINK_STANDOFF_HPP
#define NAMELINK_STANDOFF_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "namelink/error.hpp"
#include "namelink/text_model.hpp"

// Standoff annotation files: a JSON list of
//   {"doc_id": str, "start": int, "end": int, "surface": str, "tag": str}
// sorted by (doc_id, start). Gold sets, predictions and imported NER
// output all share this layout.
namespace namelink::standoff {

using json = nlohmann::ordered_json;

inline json to_json(const Annotation& a) {
  json record;
  record["doc_id"] = a.doc_id;
  record["start"] = a.span.start;
  record["end"] = a.span.end;
  record["surface"] = a.surface;
  record["tag"] = a.tag;
  return record;
}

inline std::string dump(std::vector<Annotation> annotations) {
  sort_annotations(annotations);
  json list = json::array();
  for (const auto& a : annotations) list.push_back(to_json(a));
  return list.dump(2) + "\n";
}

namespace detail {

inline const json& field(const json& record, const char* name, std::size_t index) {
  auto it = record.find(name);
  if (it == record.end()) {
    throw ValidationError("record " + std::to_string(index) + ": missing field '" + name + "'");
  }
  return *it;
}

inline std::string string_field(const json& record, const char* name, std::size_t index) {
  const json& value = field(record, name, index);
  if (!value.is_string()) {
    throw ValidationError("record " + std::to_string(index) + ": field '" + name + "' must be a string");
  }
  return value.get<std::string>();
}

inline std::size_t offset_field(const json& record, const char* name, std::size_t index) {
  const json& value = field(record, name, index);
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ValidationError("record " + std::to_string(index) + ": field '" + name +
                          "' must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace detail

/// Parses a standoff file. Records are returned in file order; structural
/// problems raise ValidationError naming the record index.
inline std::vector<Annotation> parse(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("annotation file is not valid JSON: ") + e.what());
  }
  if (!root.is_array()) throw ValidationError("annotation file must hold a JSON list");

  std::vector<Annotation> out;
  out.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    const json& record = root[i];
    if (!record.is_object()) throw ValidationError("record " + std::to_string(i) + ": not an object");
    Annotation a{detail::string_field(record, "doc_id", i),
                 Span{detail::offset_field(record, "start", i), detail::offset_field(record, "end", i)},
                 detail::string_field(record, "surface", i), detail::string_field(record, "tag", i)};
    if (a.span.start >= a.span.end) {
      throw ValidationError("record " + std::to_string(i) + ": start must be less than end");
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<Annotation> load(const std::filesystem::path& path) { return parse(read_file(path)); }

inline void save(const std::filesystem::path& path, std::vector<Annotation> annotations) {
  write_file(path, dump(std::move(annotations)));
}

}  // namespace namelink::standoff

#endif  // NAMELINK_STANDOFF_HPP
