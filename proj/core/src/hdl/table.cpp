#include "pepscan/hdl/table.hpp"

#include <algorithm>

#include "json.hpp"
#include "pepscan/error.hpp"

namespace pepscan::hdl {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& reason) {
  throw Error(ErrorCode::kSchemaError, path + ": " + reason);
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("/") + key, "missing");
  return *it;
}

std::size_t require_count(const json& doc, const char* key) {
  const auto& v = require(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    schema_error(std::string("/") + key, "expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string require_string(const json& doc, const char* key) {
  const auto& v = require(doc, key);
  if (!v.is_string()) schema_error(std::string("/") + key, "expected a string");
  return v.get<std::string>();
}

// Array of arrays of non-negative integers.
template <typename T>
std::vector<std::vector<T>> require_matrix(const json& doc, const char* key) {
  const auto& v = require(doc, key);
  const std::string path = std::string("/") + key;
  if (!v.is_array()) schema_error(path, "expected an array");
  std::vector<std::vector<T>> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& row = v[i];
    if (!row.is_array()) schema_error(path + "/" + std::to_string(i), "expected an array");
    auto& dst = out.emplace_back();
    dst.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& cell = row[j];
      if (!cell.is_number_integer() || cell.get<long long>() < 0 ||
          cell.get<unsigned long long>() > 0xFFFFFFFFull) {
        schema_error(path + "/" + std::to_string(i) + "/" + std::to_string(j),
                     "expected a 32-bit non-negative integer");
      }
      dst.push_back(cell.get<T>());
    }
  }
  return out;
}

[[noreturn]] void inconsistent(const std::string& reason) {
  throw Error(ErrorCode::kInconsistentTable, reason);
}

}  // namespace

TableArtifact generate_table(const ac::Automaton& automaton) {
  const auto& table = automaton.dense();
  TableArtifact t;
  t.alphabet = automaton.alphabet().symbols();
  t.sentinel = static_cast<char>(automaton.alphabet().sentinel());
  t.state_count = table.state_count();
  t.pattern_count = automaton.pattern_count();
  t.delta.reserve(t.state_count);
  t.outputs.reserve(t.state_count);
  for (ac::StateId s = 0; s < t.state_count; ++s) {
    auto row = table.row(s);
    t.delta.emplace_back(row.begin(), row.end());
    auto out = table.outputs(s);
    t.outputs.emplace_back(out.begin(), out.end());
  }
  t.patterns = automaton.patterns().patterns();
  return t;
}

std::string to_json(const TableArtifact& t) {
  // nlohmann::json objects keep keys sorted, which gives canonical order.
  json doc;
  doc["alphabet"] = t.alphabet;
  doc["sentinel"] = std::string(1, t.sentinel);
  doc["state_count"] = t.state_count;
  doc["pattern_count"] = t.pattern_count;
  doc["delta"] = t.delta;
  doc["outputs"] = t.outputs;
  doc["patterns"] = t.patterns;
  return doc.dump() + "\n";
}

TableArtifact parse_table(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr, false);
  if (doc.is_discarded()) schema_error("/", "not valid JSON");
  if (!doc.is_object()) schema_error("/", "expected an object");

  TableArtifact t;
  t.alphabet = require_string(doc, "alphabet");
  auto sentinel = require_string(doc, "sentinel");
  if (sentinel.size() != 1) schema_error("/sentinel", "expected a single character");
  t.sentinel = sentinel[0];
  t.state_count = require_count(doc, "state_count");
  t.pattern_count = require_count(doc, "pattern_count");
  t.delta = require_matrix<ac::StateId>(doc, "delta");
  t.outputs = require_matrix<ac::PatternId>(doc, "outputs");

  const auto& patterns = require(doc, "patterns");
  if (!patterns.is_array()) schema_error("/patterns", "expected an array");
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    if (!patterns[i].is_string()) {
      schema_error("/patterns/" + std::to_string(i), "expected a string");
    }
    t.patterns.push_back(patterns[i].get<std::string>());
  }
  return t;
}

ac::Automaton load_table(const TableArtifact& t) {
  ac::Alphabet alphabet(t.alphabet, static_cast<unsigned char>(t.sentinel));
  if (t.state_count == 0) inconsistent("state_count must be at least 1");
  if (t.delta.size() != t.state_count) inconsistent("delta has wrong number of rows");
  if (t.outputs.size() != t.state_count) inconsistent("outputs has wrong number of rows");
  if (t.patterns.size() != t.pattern_count) inconsistent("pattern list length != pattern_count");
  for (std::size_t s = 0; s < t.delta.size(); ++s) {
    if (t.delta[s].size() != alphabet.column_count()) {
      inconsistent("delta row " + std::to_string(s) + " has wrong number of columns");
    }
    for (auto target : t.delta[s]) {
      if (target >= t.state_count) {
        inconsistent("delta row " + std::to_string(s) + " targets state " +
                     std::to_string(target) + " >= state_count");
      }
    }
    for (auto id : t.outputs[s]) {
      if (id >= t.pattern_count) {
        inconsistent("outputs row " + std::to_string(s) + " names pattern " + std::to_string(id));
      }
    }
  }

  auto automaton = ac::build_automaton(ac::PatternSet(t.patterns), alphabet);
  const auto& table = automaton.dense();
  if (table.state_count() != t.state_count) {
    inconsistent("patterns build " + std::to_string(table.state_count()) + " states, table has " +
                 std::to_string(t.state_count));
  }
  for (ac::StateId s = 0; s < t.state_count; ++s) {
    auto row = table.row(s);
    if (!std::equal(row.begin(), row.end(), t.delta[s].begin(), t.delta[s].end())) {
      inconsistent("delta row " + std::to_string(s) + " disagrees with the patterns");
    }
    auto out = table.outputs(s);
    if (!std::equal(out.begin(), out.end(), t.outputs[s].begin(), t.outputs[s].end())) {
      inconsistent("outputs row " + std::to_string(s) + " disagrees with the patterns");
    }
  }
  return automaton;
}

ac::Automaton load_table(std::string_view json_text) { return load_table(parse_table(json_text)); }

}  // namespace pepscan::hdl
