#ifndef CONE_REPORT_HPP_
#define CONE_REPORT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cone {

using Json = nlohmann::ordered_json;

// %.17g rendering so CSV output is byte-stable across runs.
std::string format_double(double x);

void write_text_file(const std::string& path, const std::string& content);
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::string>& rows);
void write_json(const std::string& path, const Json& j);

}  // namespace cone

#endif  // CONE_REPORT_HPP_
