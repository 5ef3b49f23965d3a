#include "cone/report.hpp"

#include <cstdio>
#include <fstream>

#include "cone/error.hpp"

namespace cone {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  os << content;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows) {
  std::string out = header + "\n";
  for (const std::string& r : rows) {
    out += r;
    out += '\n';
  }
  write_text_file(path, out);
}

void write_json(const std::string& path, const Json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace cone
