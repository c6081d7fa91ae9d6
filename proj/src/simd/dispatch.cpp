#include <cstdlib>
#include <string>

#include "latqmc/errors.hpp"
#include "tables.hpp"

namespace latqmc::simd {

std::string_view level_name(Level level) {
  switch (level) {
    case Level::scalar:
      return "scalar";
    case Level::avx2:
      return "avx2";
  }
  return "unknown";
}

bool available(Level level) {
  switch (level) {
    case Level::scalar:
      return true;
    case Level::avx2:
#if defined(LATQMC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels(Level level) {
  if (!available(level))
    throw PreconditionError("SIMD level '" + std::string(level_name(level)) + "' is not available");
#if defined(LATQMC_HAVE_AVX2)
  if (level == Level::avx2) return detail::avx2_table;
#endif
  return detail::scalar_table;
}

namespace {

Level select_level() {
  if (const char* env = std::getenv("LATQMC_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Level::scalar;
    if (want == "avx2" && available(Level::avx2)) return Level::avx2;
  }
  return available(Level::avx2) ? Level::avx2 : Level::scalar;
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = kernels(select_level());
  return table;
}

}  // namespace latqmc::simd
