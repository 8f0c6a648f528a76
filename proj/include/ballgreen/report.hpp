#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ballgreen::report {

// Minimal ordered JSON document builder. Numbers are serialized with 15
// significant digits so that identical inputs produce byte-identical output.
class Json {
 public:
  enum class Type { Null, Bool, Int, Double, String, Array, Object };

  Json() : type_(Type::Null) {}
  static Json object();
  static Json array();
  static Json boolean(bool b);
  static Json integer(long long v);
  static Json number(double v);
  static Json string(std::string s);

  Json& set(const std::string& key, Json v);  // object append (insertion order)
  Json& push(Json v);                         // array append

  Type type() const { return type_; }
  std::string dump(int indent = 2) const;

  // structural key listing for schema tests: "a.b[].c" style paths
  std::vector<std::string> key_paths() const;

 private:
  void dump_impl(std::string& out, int indent, int depth) const;
  void collect_paths(const std::string& prefix, std::vector<std::string>& out) const;

  Type type_;
  bool b_ = false;
  long long i_ = 0;
  double d_ = 0.0;
  std::string s_;
  std::vector<Json> arr_;
  std::vector<std::pair<std::string, Json>> obj_;
};

// %.15g with stable "-0"/nan/inf handling.
std::string format_double(double v);

// One CSV line from preformatted cells (no quoting; cells must not contain
// commas or newlines).
std::string csv_row(const std::vector<std::string>& cells);

}  // namespace ballgreen::report
