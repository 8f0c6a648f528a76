#include "ballgreen/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ballgreen::report {

Json Json::object() {
  Json j;
  j.type_ = Type::Object;
  return j;
}

Json Json::array() {
  Json j;
  j.type_ = Type::Array;
  return j;
}

Json Json::boolean(bool b) {
  Json j;
  j.type_ = Type::Bool;
  j.b_ = b;
  return j;
}

Json Json::integer(long long v) {
  Json j;
  j.type_ = Type::Int;
  j.i_ = v;
  return j;
}

Json Json::number(double v) {
  Json j;
  j.type_ = Type::Double;
  j.d_ = v;
  return j;
}

Json Json::string(std::string s) {
  Json j;
  j.type_ = Type::String;
  j.s_ = std::move(s);
  return j;
}

Json& Json::set(const std::string& key, Json v) {
  if (type_ != Type::Object) throw std::logic_error("Json::set on non-object");
  obj_.emplace_back(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  if (type_ != Type::Array) throw std::logic_error("Json::push on non-array");
  arr_.push_back(std::move(v));
  return *this;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

namespace {

void escape_string(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

void Json::dump_impl(std::string& out, int indent, int depth) const {
  std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
  std::string pad1(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  switch (type_) {
    case Type::Null: out += "null"; break;
    case Type::Bool: out += b_ ? "true" : "false"; break;
    case Type::Int: out += std::to_string(i_); break;
    case Type::Double: out += format_double(d_); break;
    case Type::String: escape_string(out, s_); break;
    case Type::Array: {
      if (arr_.empty()) {
        out += "[]";
        break;
      }
      out += "[\n";
      for (std::size_t i = 0; i < arr_.size(); ++i) {
        out += pad1;
        arr_[i].dump_impl(out, indent, depth + 1);
        if (i + 1 < arr_.size()) out += ',';
        out += '\n';
      }
      out += pad + "]";
      break;
    }
    case Type::Object: {
      if (obj_.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      for (std::size_t i = 0; i < obj_.size(); ++i) {
        out += pad1;
        escape_string(out, obj_[i].first);
        out += ": ";
        obj_[i].second.dump_impl(out, indent, depth + 1);
        if (i + 1 < obj_.size()) out += ',';
        out += '\n';
      }
      out += pad + "}";
      break;
    }
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  dump_impl(out, indent, 0);
  out += '\n';
  return out;
}

void Json::collect_paths(const std::string& prefix, std::vector<std::string>& out) const {
  if (type_ == Type::Object) {
    for (const auto& [k, v] : obj_) {
      std::string p = prefix.empty() ? k : prefix + "." + k;
      out.push_back(p);
      v.collect_paths(p, out);
    }
  } else if (type_ == Type::Array && !arr_.empty()) {
    arr_.front().collect_paths(prefix + "[]", out);
  }
}

std::vector<std::string> Json::key_paths() const {
  std::vector<std::string> out;
  collect_paths("", out);
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  out += '\n';
  return out;
}

}  // namespace ballgreen::report
