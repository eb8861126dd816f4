#pragma once

#include "supercong/congruence.hpp"
#include "supercong/error.hpp"
#include "supercong/rational.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace supercong::harness {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::int64_t kDefaultPrimeCap = 500;
inline constexpr std::int64_t kDefaultCubeModulusPrimeCap = 100;
inline constexpr const char *kOutputDirEnv = "SUPERCONG_OUTPUT_DIR";

/// A deliberately wrong expected residue: rhs + p for `statement` at `p`.
struct Injection {
  Statement statement;
  std::int64_t p;
};

struct SuiteConfig {
  std::vector<Statement> statements;
  std::int64_t prime_min = 3;
  std::optional<std::int64_t> prime_max; // unset: per-statement default cap
  std::vector<Rational> x_values;
  OracleMode oracle_mode = OracleMode::spot;
  unsigned parallelism = 1;
  std::string output_path;
  std::vector<Injection> injections;

  std::int64_t prime_cap(Statement s) const {
    if (prime_max)
      return *prime_max;
    return s == Statement::kw ? kDefaultCubeModulusPrimeCap : kDefaultPrimeCap;
  }
};

inline std::vector<Rational> special_arguments() {
  return {Rational(-1, 2), Rational(-1, 3), Rational(-1, 4), Rational(-1, 6)};
}

inline std::string default_output_path() {
  const char *dir = std::getenv(kOutputDirEnv);
  std::string base = (dir && *dir) ? dir : ".";
  if (base.back() != '/')
    base += '/';
  return base + "supercong-results.jsonl";
}

inline std::string_view oracle_mode_name(OracleMode m) {
  switch (m) {
  case OracleMode::off:
    return "off";
  case OracleMode::spot:
    return "spot";
  case OracleMode::full:
    return "full";
  }
  return "spot";
}

inline OracleMode parse_oracle_mode(std::string_view s, int line = 0) {
  if (s == "off")
    return OracleMode::off;
  if (s == "spot")
    return OracleMode::spot;
  if (s == "full")
    return OracleMode::full;
  throw parse_error("oracle_mode must be off, spot or full, got '" + std::string(s) + "'", line);
}

/// Expands a statement id or one of the group aliases (conjecture, lemmas,
/// blocks, theorems, all).
inline std::vector<Statement> parse_statement(std::string_view name, int line = 0) {
  using S = Statement;
  if (name == "all") {
    std::vector<Statement> out;
    for (const auto &[id, n] : statement_names)
      out.push_back(id);
    return out;
  }
  if (name == "theorems")
    return {S::theorem1, S::theorem2};
  if (name == "conjecture")
    return {S::conj_8n5, S::conj_32n21, S::conj_18n7, S::conj_72n49};
  if (name == "lemmas")
    return {S::lemma21, S::lemma23, S::lemma24, S::lemma33, S::lemma34};
  if (name == "blocks")
    return {S::blocks_sigma, S::blocks_tau};
  if (auto s = statement_from_name(name))
    return {*s};
  throw parse_error("unknown statement '" + std::string(name) + "'", line);
}

inline Injection parse_injection(std::string_view text, int line = 0) {
  const auto at = text.find('@');
  if (at == std::string_view::npos)
    throw parse_error("injection must look like <statement>@<prime>", line);
  auto s = statement_from_name(text.substr(0, at));
  if (!s)
    throw parse_error("unknown statement in injection '" + std::string(text) + "'", line);
  try {
    return {*s, std::stoll(std::string(text.substr(at + 1)))};
  } catch (const std::exception &) {
    throw parse_error("bad prime in injection '" + std::string(text) + "'", line);
  }
}

inline void validate(const SuiteConfig &cfg) {
  if (cfg.statements.empty())
    throw parse_error("no statements selected");
  if (cfg.prime_min < 3)
    throw parse_error("prime_min must be >= 3");
  if (cfg.prime_max && *cfg.prime_max < cfg.prime_min)
    throw parse_error("prime_max must be >= prime_min");
  if (cfg.parallelism < 1)
    throw parse_error("parallelism must be positive");
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits `a, b` or `["a", "b"]` into items.
inline std::vector<std::string> split_list(std::string_view value, int line) {
  std::string v = trim(value);
  if (!v.empty() && v.front() == '[') {
    if (v.back() != ']')
      throw parse_error("unterminated list", line);
    v = v.substr(1, v.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"')
      item = item.substr(1, item.size() - 2);
    if (item.empty())
      throw parse_error("empty list item", line);
    out.push_back(item);
  }
  return out;
}

inline std::int64_t parse_int(const std::string &key, const std::string &value, int line) {
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != value.size())
    throw parse_error(key + ": expected an integer, got '" + value + "'", line);
  return v;
}

} // namespace detail

/// Parses the flat `key = value` suite format; `#` starts a comment.
inline SuiteConfig parse_config(std::string_view text) {
  SuiteConfig cfg;
  std::map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    const std::string stripped = detail::trim(raw);
    if (stripped.empty())
      continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw parse_error("expected 'key = value'", line);
    const std::string key = detail::trim(std::string_view(stripped).substr(0, eq));
    const std::string value = detail::trim(std::string_view(stripped).substr(eq + 1));
    if (seen.count(key))
      throw parse_error("duplicate key '" + key + "'", line);
    seen[key] = line;
    if (value.empty())
      throw parse_error(key + ": missing value", line);

    if (key == "schema_version") {
      if (detail::parse_int(key, value, line) != kSchemaVersion)
        throw parse_error("unsupported schema_version " + value, line);
    } else if (key == "statements") {
      for (const auto &item : detail::split_list(value, line))
        for (auto s : parse_statement(item, line))
          cfg.statements.push_back(s);
    } else if (key == "prime_min") {
      cfg.prime_min = detail::parse_int(key, value, line);
    } else if (key == "prime_max") {
      cfg.prime_max = detail::parse_int(key, value, line);
    } else if (key == "x_values") {
      for (const auto &item : detail::split_list(value, line)) {
        try {
          cfg.x_values.push_back(parse_rational(item));
        } catch (const parse_error &e) {
          throw parse_error(std::string("x_values: ") + e.what(), line);
        }
      }
    } else if (key == "oracle_mode") {
      cfg.oracle_mode = parse_oracle_mode(value, line);
    } else if (key == "parallelism") {
      const auto jobs = detail::parse_int(key, value, line);
      if (jobs < 1)
        throw parse_error("parallelism must be positive", line);
      cfg.parallelism = static_cast<unsigned>(jobs);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "inject") {
      for (const auto &item : detail::split_list(value, line))
        cfg.injections.push_back(parse_injection(item, line));
    } else {
      throw parse_error("unknown key '" + key + "'", line);
    }
  }
  if (cfg.x_values.empty())
    cfg.x_values = special_arguments();
  if (cfg.output_path.empty())
    cfg.output_path = default_output_path();
  validate(cfg);
  return cfg;
}

} // namespace supercong::harness
