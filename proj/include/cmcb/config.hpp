#pragma once

#include <map>
#include <string>
#include <vector>

#include "cmcb/bifurcation.hpp"
#include "cmcb/models.hpp"

namespace cmcb {

/// One parsed config value: a number, a quoted string, a boolean, or a
/// flat array of numbers/strings.
struct ConfigValue {
  enum class Kind { Number, String, Bool, Array };
  Kind kind = Kind::Number;
  double number = 0.0;
  std::string text;
  bool flag = false;
  std::vector<ConfigValue> items;
  int line = 0;
};

/// Sectioned key = value file (a TOML-compatible subset: one level of
/// [section] tables, scalar and flat-array values, # comments).
class ConfigFile {
 public:
  static ConfigFile parse_file(const std::string& path);
  static ConfigFile parse_string(const std::string& text,
                                 const std::string& origin);

  bool has(const std::string& section, const std::string& key) const;
  const ConfigValue& get(const std::string& section,
                         const std::string& key) const;

  double number(const std::string& section, const std::string& key) const;
  double number_or(const std::string& section, const std::string& key,
                   double fallback) const;
  long long integer(const std::string& section, const std::string& key) const;
  long long integer_or(const std::string& section, const std::string& key,
                       long long fallback) const;
  std::string text(const std::string& section, const std::string& key) const;
  std::string text_or(const std::string& section, const std::string& key,
                      const std::string& fallback) const;
  std::vector<double> numbers(const std::string& section,
                              const std::string& key) const;
  std::vector<std::string> texts_or(
      const std::string& section, const std::string& key,
      const std::vector<std::string>& fallback) const;

  const std::string& origin() const { return origin_; }

 private:
  std::map<std::string, std::map<std::string, ConfigValue>> sections_;
  std::string origin_;
};

struct OutputOptions {
  std::string directory = "out";
  bool csv = true;
  bool json = true;
};

/// Everything a CLI command needs, assembled from one config file.
struct Analysis {
  WarpedModel model;
  FiberSpectrum fiber;
  AnalyzeConfig config;
  OutputOptions output;
  double spectrum_bound = 100.0;
};

/// Loads and validates a config file, builds the model and fiber, and
/// checks the scan window against the model's usable domain. Every
/// failure in here counts as a configuration error.
Analysis load_analysis(const std::string& path);

}  // namespace cmcb
