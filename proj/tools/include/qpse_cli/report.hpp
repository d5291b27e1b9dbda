#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qpse::cli {

// Frozen compatibility contract for evolve output (column order included).
inline constexpr std::string_view kSeriesHeader =
    "t,s_r,s_k,s_total,bbm_margin,norm_residual";

// Locale-free general formatting with `precision` significant digits
// (std::to_chars underneath, so reruns are byte-identical).
std::string format_double(double v, int precision);
std::string format_long(long long v);

// Minimal deterministic JSON emitter. Keys appear in insertion order and
// numbers go through format_double, which nlohmann's dump() cannot do for
// us (it always prints shortest-round-trip).
class JsonWriter {
 public:
  explicit JsonWriter(int precision) : precision_(precision) {}

  void open_object();
  void close_object();
  void open_array(std::string_view key);
  void close_array();
  void open_object(std::string_view key);  // keyed nested object

  void field(std::string_view key, double v);
  void field(std::string_view key, long long v);
  void field(std::string_view key, std::string_view v);
  void element(double v);  // array element

  std::string take();  // final text + trailing newline

 private:
  void separate();
  void key(std::string_view k);
  void raw_string(std::string_view s);

  std::string out_;
  std::vector<bool> wrote_entry_;  // per open scope
  int precision_;
};

// Writes content to path atomically: temp file in the same directory, then
// rename. No partial files survive a failure.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace qpse::cli
