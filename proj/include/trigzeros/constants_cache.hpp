#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "trigzeros/constants.hpp"

namespace trigzeros {

/// On-disk store of C values: `constants.json` in `directory`, a JSON object
/// mapping "ell:r:grid" to {"value": v, "error": e}. Writes go to a temporary
/// file that is renamed over the old one.
class ConstantsCache {
 public:
  explicit ConstantsCache(std::filesystem::path directory);

  /// Cache in $TRIGZEROS_CACHE, or nothing when the variable is unset or empty.
  static std::optional<ConstantsCache> from_environment();

  static std::string key(int ell, int r, const ConstantGrid& grid);

  std::optional<ConstantResult> lookup(int ell, int r, const ConstantGrid& grid) const;
  void store(int ell, int r, const ConstantResult& result) const;

  std::filesystem::path file() const { return directory_ / "constants.json"; }

 private:
  std::filesystem::path directory_;
};

/// compute_C behind the environment cache.
ConstantResult cached_C(int ell, int r, const ConstantGrid& grid = {});

}  // namespace trigzeros
