#include "pcompact/data.hpp"

#include <map>
#include <mutex>

#include "pcompact/error.hpp"

namespace pcompact {

namespace detail {
const std::map<std::string, std::string_view>& embedded_files();
}

std::string_view embedded_file(std::string_view name) {
  const auto& files = detail::embedded_files();
  auto it = files.find(std::string(name));
  if (it == files.end()) throw NotFound("no embedded data file '" + std::string(name) + "'");
  return it->second;
}

std::vector<std::string> embedded_file_names() {
  std::vector<std::string> names;
  for (const auto& [name, text] : detail::embedded_files()) names.push_back(name);
  return names;
}

const nlohmann::json& data_json(std::string_view name) {
  static std::mutex mutex;
  static std::map<std::string, nlohmann::json, std::less<>> parsed;
  std::lock_guard lock(mutex);
  auto it = parsed.find(name);
  if (it != parsed.end()) return it->second;
  auto text = embedded_file(name);
  auto [pos, inserted] = parsed.emplace(std::string(name), nlohmann::json::parse(text));
  return pos->second;
}

}  // namespace pcompact
