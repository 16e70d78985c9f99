#pragma once

// Batch validity/ascent scan over colourings for the brute-force oracle.
// Colourings are stored lane-major per vertex: colour of vertex v in lane i
// is colours[v * kBatch + i].

#include <cstdint>
#include <string>
#include <vector>

namespace chromalg::kernels {

inline constexpr int kBatch = 64;

struct EdgeArrays {
  std::vector<std::int32_t> from, to, kind;  // kind: 0 NEQ, 1 LT, 2 LEQ
};

// valid[i] is set to 1 or 0, asc[i] to the number of ascending edges.
using ScanFn = void (*)(const EdgeArrays& edges, const std::int32_t* colours,
                        std::int32_t* valid, std::int32_t* asc);

enum class Kernel { kScalar, kAvx2, kNeon };

void scan_scalar(const EdgeArrays& edges, const std::int32_t* colours,
                 std::int32_t* valid, std::int32_t* asc);

bool kernel_available(Kernel k);
ScanFn kernel(Kernel k);  // throws if unavailable
Kernel best_kernel();
std::string kernel_name(Kernel k);

}  // namespace chromalg::kernels
