#include "qpse_cli/report.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "qpse/errors.hpp"

namespace qpse::cli {

std::string format_double(double v, int precision) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v,
                           std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

std::string format_long(long long v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void JsonWriter::separate() {
  if (!wrote_entry_.empty()) {
    if (wrote_entry_.back()) out_ += ',';
    wrote_entry_.back() = true;
  }
}

void JsonWriter::raw_string(std::string_view s) {
  out_ += '"';
  for (char c : s) {
    switch (c) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char esc[8];
          std::snprintf(esc, sizeof(esc), "\\u%04x", c);
          out_ += esc;
        } else {
          out_ += c;
        }
    }
  }
  out_ += '"';
}

void JsonWriter::key(std::string_view k) {
  separate();
  raw_string(k);
  out_ += ':';
}

void JsonWriter::open_object() {
  separate();
  out_ += '{';
  wrote_entry_.push_back(false);
}

void JsonWriter::open_object(std::string_view k) {
  key(k);
  out_ += '{';
  wrote_entry_.push_back(false);
}

void JsonWriter::close_object() {
  out_ += '}';
  wrote_entry_.pop_back();
}

void JsonWriter::open_array(std::string_view k) {
  key(k);
  out_ += '[';
  wrote_entry_.push_back(false);
}

void JsonWriter::close_array() {
  out_ += ']';
  wrote_entry_.pop_back();
}

void JsonWriter::field(std::string_view k, double v) {
  key(k);
  out_ += format_double(v, precision_);
}

void JsonWriter::field(std::string_view k, long long v) {
  key(k);
  out_ += format_long(v);
}

void JsonWriter::field(std::string_view k, std::string_view v) {
  key(k);
  raw_string(v);
}

void JsonWriter::element(double v) {
  separate();
  out_ += format_double(v, precision_);
}

std::string JsonWriter::take() {
  out_ += '\n';
  return std::move(out_);
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec) throw Error("cannot create directory " + target.parent_path().string());
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot rename " + tmp.string() + " to " + path);
  }
}

}  // namespace qpse::cli
