#include "trigzeros/constants_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <system_error>
#include <unistd.h>

#include "json.hpp"
#include "trigzeros/error.hpp"

namespace trigzeros {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

nlohmann::json read_all(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return nlohmann::json::object();
  try {
    auto j = nlohmann::json::parse(in);
    if (j.is_object()) return j;
  } catch (const nlohmann::json::exception&) {
  }
  return nlohmann::json::object();
}

}  // namespace

ConstantsCache::ConstantsCache(std::filesystem::path directory)
    : directory_(std::move(directory)) {}

std::optional<ConstantsCache> ConstantsCache::from_environment() {
  const char* dir = std::getenv("TRIGZEROS_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return ConstantsCache(dir);
}

std::string ConstantsCache::key(int ell, int r, const ConstantGrid& grid) {
  std::ostringstream os;
  os << ell << ':' << r << ':' << grid.key();
  return os.str();
}

std::optional<ConstantResult> ConstantsCache::lookup(int ell, int r,
                                                     const ConstantGrid& grid) const {
  std::lock_guard<std::mutex> lock(cache_mutex());
  const auto all = read_all(file());
  const auto it = all.find(key(ell, r, grid));
  if (it == all.end() || !it->contains("value") || !it->contains("error")) {
    return std::nullopt;
  }
  ConstantResult res;
  res.value = (*it)["value"].get<double>();
  res.abs_error_estimate = (*it)["error"].get<double>();
  res.grid = grid;
  return res;
}

void ConstantsCache::store(int ell, int r, const ConstantResult& result) const {
  std::lock_guard<std::mutex> lock(cache_mutex());
  std::error_code ec;
  std::filesystem::create_directories(directory_, ec);
  auto all = read_all(file());
  all[key(ell, r, result.grid)] = {{"value", result.value},
                                   {"error", result.abs_error_estimate}};
  const auto tmp = directory_ / ("constants.json.tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << all.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, file());
}

ConstantResult cached_C(int ell, int r, const ConstantGrid& grid) {
  const auto cache = ConstantsCache::from_environment();
  if (cache) {
    if (auto hit = cache->lookup(ell, r, grid)) return *hit;
  }
  auto res = compute_C(ell, r, grid);
  if (cache) cache->store(ell, r, res);
  return res;
}

}  // namespace trigzeros
