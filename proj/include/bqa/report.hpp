#pragma once
// A small ordered document model for machine-readable reports.  Objects keep
// their insertion order, so a report built the same way prints byte-identically
// every time; that determinism is load-bearing for golden tests downstream.
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace bqa {

class Json {
 public:
  Json() = default;
  static Json null() { return Json(); }
  static Json boolean(bool b) {
    Json j;
    j.kind_ = Kind::boolean;
    j.bool_ = b;
    return j;
  }
  static Json num(std::int64_t v) {
    Json j;
    j.kind_ = Kind::number;
    j.num_ = v;
    return j;
  }
  static Json str(std::string s) {
    Json j;
    j.kind_ = Kind::string;
    j.str_ = std::move(s);
    return j;
  }
  static Json arr() {
    Json j;
    j.kind_ = Kind::array;
    return j;
  }
  static Json obj() {
    Json j;
    j.kind_ = Kind::object;
    return j;
  }

  bool is_object() const { return kind_ == Kind::object; }

  Json& set(const std::string& key, Json v) {
    for (auto& [k, val] : fields_)
      if (k == key) {
        val = std::move(v);
        return *this;
      }
    fields_.emplace_back(key, std::move(v));
    return *this;
  }

  Json& push(Json v) {
    items_.push_back(std::move(v));
    return *this;
  }

  std::string dump(int indent = 0) const {
    std::ostringstream out;
    write(out, indent);
    return out.str();
  }

 private:
  enum class Kind { null_v, boolean, number, string, array, object };
  Kind kind_ = Kind::null_v;
  bool bool_ = false;
  std::int64_t num_ = 0;
  std::string str_;
  std::vector<Json> items_;
  std::vector<std::pair<std::string, Json>> fields_;

  static void write_str(std::ostream& out, const std::string& s) {
    out << '"';
    for (char c : s) {
      switch (c) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\t': out << "\\t"; break;
        case '\r': out << "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x", c);
            out << buf;
          } else {
            out << c;
          }
      }
    }
    out << '"';
  }

  void write(std::ostream& out, int level) const {
    const std::string pad(2 * level, ' ');
    const std::string pad1(2 * (level + 1), ' ');
    switch (kind_) {
      case Kind::null_v: out << "null"; break;
      case Kind::boolean: out << (bool_ ? "true" : "false"); break;
      case Kind::number: out << num_; break;
      case Kind::string: write_str(out, str_); break;
      case Kind::array:
        if (items_.empty()) {
          out << "[]";
          break;
        }
        out << "[\n";
        for (std::size_t i = 0; i < items_.size(); ++i) {
          out << pad1;
          items_[i].write(out, level + 1);
          out << (i + 1 < items_.size() ? ",\n" : "\n");
        }
        out << pad << "]";
        break;
      case Kind::object:
        if (fields_.empty()) {
          out << "{}";
          break;
        }
        out << "{\n";
        for (std::size_t i = 0; i < fields_.size(); ++i) {
          out << pad1;
          write_str(out, fields_[i].first);
          out << ": ";
          fields_[i].second.write(out, level + 1);
          out << (i + 1 < fields_.size() ? ",\n" : "\n");
        }
        out << pad << "}";
        break;
    }
  }
};

}  // namespace bqa
