#pragma once

#include <map>
#include <string>
#include <vector>

namespace lapis {

// Minimal INI reader: [section] headers, key = value pairs, full-line
// comments starting with '#' or ';'. Duplicate keys are configuration
// errors — silent typos poison experiment runs.
class IniFile {
public:
  static IniFile parse_file(const std::string& path);
  static IniFile parse_string(const std::string& text, const std::string& origin);

  struct Entry {
    std::string value;
    int line = 0;
    mutable bool consumed = false;
  };
  using Section = std::map<std::string, Entry>;

  bool has(const std::string& section, const std::string& key) const;
  // Marks the key consumed; returns fallback when absent.
  std::string get(const std::string& section, const std::string& key,
                  const std::string& fallback) const;
  bool has_section(const std::string& section) const;

  // Section and key names never consumed by get(); used to reject unknowns.
  std::vector<std::string> unknown_sections(const std::vector<std::string>& known) const;
  std::vector<std::string> unconsumed_keys() const;

  const std::string& origin() const { return origin_; }

private:
  std::string origin_;
  std::map<std::string, Section> sections_;
};

}  // namespace lapis
