#include "thinlayer/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace thinlayer::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && space(s.front())) s.remove_prefix(1);
  while (!s.empty() && space(s.back())) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

// Comments start at '#' or ';' anywhere on the line.
std::string_view strip_comment(std::string_view s) {
  const auto pos = s.find_first_of("#;");
  return pos == std::string_view::npos ? s : s.substr(0, pos);
}

}  // namespace

Config Config::parse(std::string_view text, std::string origin, std::filesystem::path base_dir) {
  Config cfg;
  cfg.origin_ = std::move(origin);
  cfg.base_dir_ = std::move(base_dir);
  std::string current;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++line_no;
    const std::string_view line = trim(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    if (line.empty()) continue;

    auto error = [&](const std::string& what) {
      std::ostringstream os;
      os << cfg.origin_ << ":" << line_no << ": " << what;
      throw ConfigError(os.str());
    };

    if (line.front() == '[') {
      if (line.back() != ']') error("unterminated section header");
      const std::string_view name = trim(line.substr(1, line.size() - 2));
      if (!valid_name(name)) error("invalid section name '" + std::string(name) + "'");
      current = std::string(name);
      cfg.sections_[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) error("expected 'key = value'");
    if (current.empty()) error("key outside of any [section]");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!valid_name(key)) error("invalid key '" + std::string(key) + "'");
    if (value.empty()) error("[" + current + "] " + std::string(key) + ": empty value");
    Section& sec = cfg.sections_[current];
    if (const auto it = sec.find(key); it != sec.end()) {
      error("[" + current + "] " + std::string(key) + ": duplicate key (first set on line " +
            std::to_string(it->second.line) + ")");
    }
    sec.emplace(std::string(key), Entry{std::string(value), line_no});
  }
  return cfg;
}

Config Config::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string(), path.parent_path());
}

const Config::Entry* Config::find(std::string_view section, std::string_view key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end()) return nullptr;
  const auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

bool Config::has_section(std::string_view section) const { return sections_.find(section) != sections_.end(); }

bool Config::has(std::string_view section, std::string_view key) const { return find(section, key) != nullptr; }

std::string Config::where(std::string_view section, std::string_view key) const {
  std::ostringstream os;
  os << origin_;
  if (const Entry* e = find(section, key)) os << ":" << e->line;
  os << ": [" << section << "] " << key;
  return os.str();
}

void Config::fail(std::string_view section, std::string_view key, std::string_view what) const {
  throw ConfigError(where(section, key) + ": " + std::string(what));
}

std::string Config::text(std::string_view section, std::string_view key) const {
  const Entry* e = find(section, key);
  if (!e) fail(section, key, "required key is missing");
  return e->value;
}

std::optional<std::string> Config::text_opt(std::string_view section, std::string_view key) const {
  const Entry* e = find(section, key);
  if (!e) return std::nullopt;
  return e->value;
}

double Config::number(std::string_view section, std::string_view key) const {
  const std::string v = text(section, key);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x)) {
    fail(section, key, "expected a finite number, got '" + v + "'");
  }
  return x;
}

double Config::number_or(std::string_view section, std::string_view key, double fallback) const {
  return has(section, key) ? number(section, key) : fallback;
}

double Config::positive(std::string_view section, std::string_view key) const {
  const double x = number(section, key);
  if (!(x > 0.0)) fail(section, key, "must be positive");
  return x;
}

std::optional<double> Config::positive_opt(std::string_view section, std::string_view key) const {
  if (!has(section, key)) return std::nullopt;
  return positive(section, key);
}

std::optional<int> Config::integer_opt(std::string_view section, std::string_view key) const {
  if (!has(section, key)) return std::nullopt;
  const std::string v = text(section, key);
  int x = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc() || ptr != v.data() + v.size()) fail(section, key, "expected an integer, got '" + v + "'");
  return x;
}

std::filesystem::path Config::path(std::string_view section, std::string_view key) const {
  const std::filesystem::path p(text(section, key));
  return p.is_absolute() || base_dir_.empty() ? p : base_dir_ / p;
}

std::optional<std::filesystem::path> Config::path_opt(std::string_view section, std::string_view key) const {
  if (!has(section, key)) return std::nullopt;
  return path(section, key);
}

void Config::allow_only(std::string_view section, std::initializer_list<std::string_view> allowed) const {
  const auto s = sections_.find(section);
  if (s == sections_.end()) return;
  for (const auto& [key, entry] : s->second) {
    bool ok = false;
    for (std::string_view a : allowed) ok = ok || a == key;
    if (!ok) fail(section, key, "unknown key");
  }
}

}  // namespace thinlayer::cli
