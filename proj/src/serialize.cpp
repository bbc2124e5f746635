#include "dkpo/serialize.hpp"

#include <cstdio>
#include <cstdlib>

#include "dkpo/errors.hpp"
#include "dkpo/version.hpp"

namespace dkpo {

int serialization_digits() {
  static const int digits = [] {
    const char* env = std::getenv("DKPO_PRECISION");
    if (!env || !*env) return 12;
    const int d = std::atoi(env);
    if (d < 1) return 1;
    if (d > 17) return 17;
    return d;
  }();
  return digits;
}

std::string format_double(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

CsvWriter::CsvWriter(std::string path) : path_(std::move(path)) {
  buf_ = kCsvHeader;
  buf_ += '\n';
}

void CsvWriter::comment(const std::string& line) {
  buf_ += "# ";
  buf_ += line;
  buf_ += '\n';
}

void CsvWriter::header(const std::vector<std::string>& cols) { row(cols); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) buf_ += ',';
    buf_ += cells[i];
  }
  buf_ += '\n';
}

void CsvWriter::close() {
  if (closed_) return;
  write_file(path_, buf_);
  closed_ = true;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot open output file: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw error("failed writing output file: " + path);
}

}  // namespace dkpo
