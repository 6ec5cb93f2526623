#include "crepant/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstring>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace crepant {

ConfigError::ConfigError(int line, const std::string& msg)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line), msg_(msg) {}

namespace {

struct LimitSpec {
  const char* key;
  int lo, hi;
  std::optional<int> Config::*field;
};

const LimitSpec kLimitSpecs[] = {
    {"max_arity", 2, 12, &Config::max_arity},
    {"truncate", 0, 40, &Config::truncate},
    {"max_index", 1, 40, &Config::max_index},
};

const LimitSpec* find_limit(const std::string& key) {
  for (const auto& s : kLimitSpecs)
    if (key == s.key) return &s;
  return nullptr;
}

void set_limit(Config& cfg, const LimitSpec& spec, long long v, int line) {
  if (v < spec.lo || v > spec.hi)
    throw ConfigError(line, std::string("limits.") + spec.key + " must lie in [" + std::to_string(spec.lo) + ", " +
                                std::to_string(spec.hi) + "], got " + std::to_string(v));
  cfg.*spec.field = static_cast<int>(v);
}

Rational checked_rational(const std::string& text, int line) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw ConfigError(line, "value \"" + text + "\" is not an exact rational p/q");
  }
  if (q == 0) throw ConfigError(line, "value must be nonzero");
  return q;
}

void add_lambda(Config& cfg, std::set<std::pair<int, int>>& seen, long long j, long long k, const Rational& v,
                int line) {
  if (j < 0 || k < 0) throw ConfigError(line, "j and k must be nonnegative");
  if (j > 64 || k > 64) throw ConfigError(line, "j and k must be at most 64");
  if (!seen.insert({int(j), int(k)}).second)
    throw ConfigError(line, "duplicate entry for (j,k) = (" + std::to_string(j) + "," + std::to_string(k) + ")");
  cfg.lambdas.set(int(j), int(k), v);
}

// ---- JSON ----

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

// Records the line at which each value starts, keyed by a slash-separated path.
class LineIndex {
 public:
  explicit LineIndex(const std::string& text) : s_(text) {
    skip();
    value("");
  }
  int at(const std::string& path) const {
    auto it = lines_.find(path);
    return it == lines_.end() ? 0 : it->second;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) {
      if (s_[i_] == '\n') ++line_;
      ++i_;
    }
  }
  std::string string_token() {
    std::string out;
    ++i_;
    while (i_ < s_.size() && s_[i_] != '"') {
      if (s_[i_] == '\\') ++i_;
      if (i_ < s_.size()) out += s_[i_++];
    }
    ++i_;
    return out;
  }
  void value(const std::string& path) {
    lines_[path] = line_;
    if (i_ >= s_.size()) return;
    char c = s_[i_];
    if (c == '{') {
      ++i_;
      skip();
      while (i_ < s_.size() && s_[i_] != '}') {
        std::string key = string_token();
        skip();
        ++i_;  // ':'
        skip();
        value(path + "/" + key);
        skip();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        skip();
      }
      ++i_;
    } else if (c == '[') {
      ++i_;
      skip();
      int n = 0;
      while (i_ < s_.size() && s_[i_] != ']') {
        value(path + "/" + std::to_string(n++));
        skip();
        if (i_ < s_.size() && s_[i_] == ',') ++i_;
        skip();
      }
      ++i_;
    } else if (c == '"') {
      string_token();
    } else {
      while (i_ < s_.size() && !std::strchr(",]} \t\r\n", s_[i_])) ++i_;
    }
  }

  const std::string& s_;
  std::size_t i_ = 0;
  int line_ = 1;
  std::map<std::string, int> lines_;
};

long long json_int(const nlohmann::json& v, const std::string& what, int line) {
  if (!v.is_number_integer()) throw ConfigError(line, what + " must be an integer");
  return v.get<long long>();
}

Config parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string what = e.what();
    auto pos = what.find("parse error");
    throw ConfigError(line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0),
                      "malformed JSON: " + (pos == std::string::npos ? what : what.substr(pos)));
  }
  LineIndex idx(text);
  if (!doc.is_object()) throw ConfigError(idx.at(""), "top level must be an object");

  Config cfg;
  for (const auto& [key, val] : doc.items()) {
    if (key != "lambdas" && key != "limits") throw ConfigError(idx.at("/" + key), "unknown key \"" + key + "\"");
  }
  if (!doc.contains("lambdas")) throw ConfigError(idx.at(""), "missing key \"lambdas\"");
  const auto& lams = doc["lambdas"];
  if (!lams.is_array()) throw ConfigError(idx.at("/lambdas"), "\"lambdas\" must be an array");
  std::set<std::pair<int, int>> seen;
  for (std::size_t n = 0; n < lams.size(); ++n) {
    std::string p = "/lambdas/" + std::to_string(n);
    const auto& e = lams[n];
    if (!e.is_object()) throw ConfigError(idx.at(p), "lambda entry must be an object");
    for (const auto& [key, val] : e.items())
      if (key != "j" && key != "k" && key != "value")
        throw ConfigError(idx.at(p + "/" + key), "unknown key \"" + key + "\" in lambda entry");
    for (const char* req : {"j", "k", "value"})
      if (!e.contains(req)) throw ConfigError(idx.at(p), std::string("lambda entry is missing \"") + req + "\"");
    long long j = json_int(e["j"], "j", idx.at(p + "/j"));
    long long k = json_int(e["k"], "k", idx.at(p + "/k"));
    const auto& v = e["value"];
    int vline = idx.at(p + "/value");
    Rational q;
    if (v.is_string()) {
      q = checked_rational(v.get<std::string>(), vline);
    } else if (v.is_number_integer()) {
      q = checked_rational(std::to_string(v.get<long long>()), vline);
    } else {
      throw ConfigError(vline, "value must be a string \"p/q\" (floating-point numbers are not exact)");
    }
    add_lambda(cfg, seen, j, k, q, idx.at(p));
  }
  if (doc.contains("limits")) {
    const auto& lim = doc["limits"];
    if (!lim.is_object()) throw ConfigError(idx.at("/limits"), "\"limits\" must be an object");
    for (const auto& [key, val] : lim.items()) {
      int line = idx.at("/limits/" + key);
      const LimitSpec* spec = find_limit(key);
      if (!spec) throw ConfigError(line, "unknown limit \"" + key + "\"");
      set_limit(cfg, *spec, json_int(val, "limits." + key, line), line);
    }
  }
  return cfg;
}

// ---- TOML subset: [limits], [[lambdas]], key = integer | "string" | 'string', # comments ----

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct TomlValue {
  bool is_string = false;
  std::string text;
  long long integer = 0;
};

std::string strip_comment(const std::string& line) {
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quote) {
      if (c == '\\' && quote == '"') ++i;
      else if (c == quote) quote = 0;
    } else if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

TomlValue toml_value(const std::string& raw, int line) {
  TomlValue v;
  if (raw.empty()) throw ConfigError(line, "missing value");
  char q = raw.front();
  if (q == '"' || q == '\'') {
    if (raw.size() < 2 || raw.back() != q) throw ConfigError(line, "unterminated string");
    v.is_string = true;
    v.text = raw.substr(1, raw.size() - 2);
    if (v.text.find(q) != std::string::npos) throw ConfigError(line, "unexpected quote inside string");
    return v;
  }
  std::string digits;
  for (char c : raw)
    if (c != '_') digits += c;
  std::size_t start = (digits[0] == '+' || digits[0] == '-') ? 1 : 0;
  if (start == digits.size() ||
      !std::all_of(digits.begin() + start, digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ConfigError(line, "expected an integer or a quoted string, got '" + raw + "'");
  errno = 0;
  v.integer = std::strtoll(digits.c_str(), nullptr, 10);
  if (errno == ERANGE) throw ConfigError(line, "integer out of range");
  v.text = digits;
  return v;
}

Config parse_toml(const std::string& text) {
  struct Entry {
    int line;
    std::map<std::string, std::pair<TomlValue, int>> keys;
  };
  enum class Section { Root, Limits, Lambda } section = Section::Root;
  std::vector<Entry> entries;
  std::map<std::string, std::pair<TomlValue, int>> limits;
  bool limits_seen = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.rfind("[[", 0) == 0) {
      if (line.size() < 4 || line.substr(line.size() - 2) != "]]") throw ConfigError(lineno, "malformed table header");
      std::string name = trim(line.substr(2, line.size() - 4));
      if (name != "lambdas") throw ConfigError(lineno, "unknown array of tables [[" + name + "]]");
      entries.push_back({lineno, {}});
      section = Section::Lambda;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(lineno, "malformed table header");
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name != "limits") throw ConfigError(lineno, "unknown table [" + name + "]");
      if (limits_seen) throw ConfigError(lineno, "table [limits] defined twice");
      limits_seen = true;
      section = Section::Limits;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(lineno, "expected key = value");
    std::string key = trim(line.substr(0, eq));
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
        }))
      throw ConfigError(lineno, "invalid key '" + key + "'");
    TomlValue v = toml_value(trim(line.substr(eq + 1)), lineno);
    auto& target = section == Section::Lambda ? entries.back().keys : limits;
    if (section == Section::Root) throw ConfigError(lineno, "key '" + key + "' outside of [[lambdas]] or [limits]");
    if (!target.emplace(key, std::make_pair(v, lineno)).second)
      throw ConfigError(lineno, "duplicate key '" + key + "'");
  }

  Config cfg;
  std::set<std::pair<int, int>> seen;
  for (const auto& e : entries) {
    for (const auto& [key, vl] : e.keys)
      if (key != "j" && key != "k" && key != "value")
        throw ConfigError(vl.second, "unknown key '" + key + "' in [[lambdas]]");
    for (const char* req : {"j", "k", "value"})
      if (!e.keys.count(req)) throw ConfigError(e.line, std::string("[[lambdas]] entry is missing '") + req + "'");
    auto integer = [&](const char* k) {
      const auto& [v, line] = e.keys.at(k);
      if (v.is_string) throw ConfigError(line, std::string(k) + " must be an integer");
      return v.integer;
    };
    const auto& [val, vline] = e.keys.at("value");
    add_lambda(cfg, seen, integer("j"), integer("k"), checked_rational(val.text, vline), e.line);
  }
  for (const auto& [key, vl] : limits) {
    const LimitSpec* spec = find_limit(key);
    if (!spec) throw ConfigError(vl.second, "unknown limit '" + key + "'");
    if (vl.first.is_string) throw ConfigError(vl.second, "limits." + key + " must be an integer");
    set_limit(cfg, *spec, vl.first.integer, vl.second);
  }
  return cfg;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Config parse_config(const std::string& text, ConfigFormat format, const std::string& name) {
  if (format == ConfigFormat::Auto) {
    if (ends_with(name, ".toml")) {
      format = ConfigFormat::Toml;
    } else if (ends_with(name, ".json")) {
      format = ConfigFormat::Json;
    } else {
      std::size_t p = text.find_first_not_of(" \t\r\n");
      format = (p != std::string::npos && text[p] == '{') ? ConfigFormat::Json : ConfigFormat::Toml;
    }
  }
  return format == ConfigFormat::Json ? parse_json(text) : parse_toml(text);
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), ConfigFormat::Auto, path);
}

Limits default_limits_from_env() {
  Limits lim;
  struct Var {
    const char* name;
    const char* key;
    int Limits::*field;
  };
  const Var vars[] = {{"CREPANT_MAX_ARITY", "max_arity", &Limits::max_arity},
                      {"CREPANT_TRUNCATE", "truncate", &Limits::truncate},
                      {"CREPANT_MAX_INDEX", "max_index", &Limits::max_index}};
  for (const auto& v : vars) {
    const char* raw = std::getenv(v.name);
    if (!raw || !*raw) continue;
    char* end = nullptr;
    errno = 0;
    long long n = std::strtoll(raw, &end, 10);
    const LimitSpec* spec = find_limit(v.key);
    if (*end != '\0' || errno == ERANGE || n < spec->lo || n > spec->hi)
      throw ConfigError(0, std::string("environment variable ") + v.name + "='" + raw +
                               "' must be an integer in [" + std::to_string(spec->lo) + ", " +
                               std::to_string(spec->hi) + "]");
    lim.*v.field = static_cast<int>(n);
  }
  return lim;
}

Limits effective_limits(const Config& cfg) {
  Limits lim = default_limits_from_env();
  if (cfg.max_arity) lim.max_arity = *cfg.max_arity;
  if (cfg.truncate) lim.truncate = *cfg.truncate;
  if (cfg.max_index) lim.max_index = *cfg.max_index;
  return lim;
}

}  // namespace crepant
