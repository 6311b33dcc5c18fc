#include "io/ini.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace lapis {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

IniFile IniFile::parse_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file: " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_string(ss.str(), path);
}

IniFile IniFile::parse_string(const std::string& text, const std::string& origin) {
  IniFile ini;
  ini.origin_ = origin;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']')
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty section name");
      ini.sections_[section];  // sections may be empty
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    if (section.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": key outside any section");
    auto [it, inserted] = ini.sections_[section].emplace(key, Entry{value, lineno, false});
    if (!inserted)
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                        "' in [" + section + "]");
  }
  return ini;
}

bool IniFile::has(const std::string& section, const std::string& key) const {
  auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

bool IniFile::has_section(const std::string& section) const {
  return sections_.count(section) > 0;
}

std::string IniFile::get(const std::string& section, const std::string& key,
                         const std::string& fallback) const {
  auto s = sections_.find(section);
  if (s == sections_.end()) return fallback;
  auto e = s->second.find(key);
  if (e == s->second.end()) return fallback;
  e->second.consumed = true;
  return e->second.value;
}

std::vector<std::string> IniFile::unknown_sections(
    const std::vector<std::string>& known) const {
  std::vector<std::string> out;
  for (const auto& [name, _] : sections_)
    if (std::find(known.begin(), known.end(), name) == known.end()) out.push_back(name);
  return out;
}

std::vector<std::string> IniFile::unconsumed_keys() const {
  std::vector<std::string> out;
  for (const auto& [sname, section] : sections_)
    for (const auto& [kname, entry] : section)
      if (!entry.consumed) out.push_back("[" + sname + "] " + kname);
  return out;
}

}  // namespace lapis
