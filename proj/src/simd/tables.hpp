#pragma once

#include "latqmc/simd/kernels.hpp"

namespace latqmc::simd::detail {

// Leaf sizes are shared so that every level walks the same reduction tree.
inline constexpr std::size_t kSumLeaf = 64;
inline constexpr std::size_t kGatherLeaf = 256;

extern const KernelTable scalar_table;
#if defined(LATQMC_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif

}  // namespace latqmc::simd::detail
