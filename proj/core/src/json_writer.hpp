// Minimal ordered JSON emitter. Reports pin their field order and format
// doubles at 17 significant digits so that identical configurations produce
// byte-identical output; a hand-rolled writer keeps both properties obvious.
#ifndef KOENIGSLAB_SRC_JSON_WRITER_HPP
#define KOENIGSLAB_SRC_JSON_WRITER_HPP

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "koenigslab/io.hpp"

namespace koenigslab {

class JsonWriter {
 public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    comma();
    out_ << '"' << escape(k) << "\":";
    pending_value_ = true;
  }

  void value(double v) { item(fmt_g17(v)); }
  void value(int v) { item(std::to_string(v)); }
  void value(long long v) { item(std::to_string(v)); }
  void value(unsigned long long v) { item(std::to_string(v)); }
  void value(bool v) { item(v ? "true" : "false"); }
  void value(const std::string& v) { item('"' + escape(v) + '"'); }
  void value(const char* v) { value(std::string(v)); }

  void key_value(const std::string& k, double v) { key(k); value(v); }
  void key_value(const std::string& k, int v) { key(k); value(v); }
  void key_value(const std::string& k, bool v) { key(k); value(v); }
  void key_value(const std::string& k, const std::string& v) { key(k); value(v); }
  void key_value(const std::string& k, const char* v) { key(k); value(v); }

  /// [re, im]
  void value(Cx v) {
    comma();
    pending_value_ = false;
    out_ << '[' << fmt_g17(v.real()) << ',' << fmt_g17(v.imag()) << ']';
  }
  void key_value(const std::string& k, Cx v) { key(k); value(v); }

  std::string str() const { return out_.str(); }

 private:
  void open(char c) {
    comma();
    pending_value_ = false;
    out_ << c;
    need_comma_.push_back(false);
  }
  void close(char c) {
    out_ << c;
    need_comma_.pop_back();
    if (!need_comma_.empty()) need_comma_.back() = true;
  }
  void comma() {
    if (pending_value_) return;  // a key was just written, value follows ':'
    if (!need_comma_.empty()) {
      if (need_comma_.back()) out_ << ',';
      need_comma_.back() = true;
    }
  }
  void item(const std::string& text) {
    comma();
    pending_value_ = false;
    out_ << text;
  }
  static std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\u%04x",
                          static_cast<unsigned>(static_cast<unsigned char>(c)));
            out += buf;
          } else {
            out += c;
          }
      }
    }
    return out;
  }

  std::ostringstream out_;
  std::vector<bool> need_comma_;
  bool pending_value_ = false;
};

}  // namespace koenigslab

#endif  // KOENIGSLAB_SRC_JSON_WRITER_HPP
