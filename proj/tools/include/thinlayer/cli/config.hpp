#pragma once

#include <filesystem>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "thinlayer/errors.hpp"

namespace thinlayer::cli {

// Malformed or out-of-range configuration; the message names the file,
// line and field.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Declarative run configuration:
//
//   # comment
//   [section]
//   key = value   ; trailing comment
//
// Section and key names are case-sensitive. Relative paths resolve against
// the directory of the config file.
class Config {
 public:
  static Config parse(std::string_view text, std::string origin = "<config>",
                      std::filesystem::path base_dir = {});
  // IoError when the file cannot be read.
  static Config load(const std::filesystem::path& path);

  const std::string& origin() const { return origin_; }
  const std::filesystem::path& base_dir() const { return base_dir_; }

  bool has_section(std::string_view section) const;
  bool has(std::string_view section, std::string_view key) const;

  std::string text(std::string_view section, std::string_view key) const;
  std::optional<std::string> text_opt(std::string_view section, std::string_view key) const;

  double number(std::string_view section, std::string_view key) const;
  double number_or(std::string_view section, std::string_view key, double fallback) const;
  // Same, and the value must be > 0.
  double positive(std::string_view section, std::string_view key) const;
  std::optional<double> positive_opt(std::string_view section, std::string_view key) const;
  std::optional<int> integer_opt(std::string_view section, std::string_view key) const;

  std::filesystem::path path(std::string_view section, std::string_view key) const;
  std::optional<std::filesystem::path> path_opt(std::string_view section, std::string_view key) const;

  // ConfigError naming the first key of `section` outside `allowed`.
  void allow_only(std::string_view section, std::initializer_list<std::string_view> allowed) const;

  // "origin:line: [section] key" (no line when the key is absent).
  std::string where(std::string_view section, std::string_view key) const;

  // "origin:line: [section] key: what", or "origin: [section] key: what"
  // when the key is absent.
  [[noreturn]] void fail(std::string_view section, std::string_view key, std::string_view what) const;

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  using Section = std::map<std::string, Entry, std::less<>>;

  const Entry* find(std::string_view section, std::string_view key) const;

  std::string origin_;
  std::filesystem::path base_dir_;
  std::map<std::string, Section, std::less<>> sections_;
};

}  // namespace thinlayer::cli
