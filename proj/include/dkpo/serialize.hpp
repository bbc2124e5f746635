#ifndef DKPO_SERIALIZE_HPP
#define DKPO_SERIALIZE_HPP

#include <fstream>
#include <string>
#include <vector>

namespace dkpo {

/// Significant digits for CSV serialization: DKPO_PRECISION env override,
/// clamped to [1,17], default 12.
int serialization_digits();

/// %.{digits}g with '.' decimal separator, locale-independent.
std::string format_double(double x, int digits = serialization_digits());

/// CSV emitter with the versioned "# dkpo-lab ..." header, UTF-8, LF line
/// endings. Writing is buffered in memory and flushed on close() so a
/// failed run never leaves a truncated file behind.
class CsvWriter {
 public:
  explicit CsvWriter(std::string path);

  void comment(const std::string& line);              // "# ..."
  void header(const std::vector<std::string>& cols);  // column names
  void row(const std::vector<std::string>& cells);
  void close();  // throws on I/O failure

  const std::string& text() const { return buf_; }

 private:
  std::string path_;
  std::string buf_;
  bool closed_ = false;
};

/// Write `text` to `path` byte-exactly (binary mode, LF endings preserved).
void write_file(const std::string& path, const std::string& text);

}  // namespace dkpo

#endif
