#include "chromalg/oracle_kernels.hpp"

#include <stdexcept>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define CHROMALG_X86 1
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#define CHROMALG_NEON 1
#endif

namespace chromalg::kernels {

void scan_scalar(const EdgeArrays& edges, const std::int32_t* colours,
                 std::int32_t* valid, std::int32_t* asc) {
  for (int i = 0; i < kBatch; ++i) {
    valid[i] = 1;
    asc[i] = 0;
  }
  for (std::size_t e = 0; e < edges.from.size(); ++e) {
    const std::int32_t* a = colours + edges.from[e] * kBatch;
    const std::int32_t* b = colours + edges.to[e] * kBatch;
    const int kind = edges.kind[e];
    for (int i = 0; i < kBatch; ++i) {
      bool ok = kind == 0 ? a[i] != b[i] : kind == 1 ? a[i] < b[i] : a[i] <= b[i];
      valid[i] &= ok;
      asc[i] += a[i] < b[i];
    }
  }
}

#ifdef CHROMALG_X86
__attribute__((target("avx2"))) static void scan_avx2(const EdgeArrays& edges,
                                                      const std::int32_t* colours,
                                                      std::int32_t* valid,
                                                      std::int32_t* asc) {
  const __m256i ones = _mm256_set1_epi32(-1);
  for (int chunk = 0; chunk < kBatch; chunk += 8) {
    __m256i ok = ones;
    __m256i up = _mm256_setzero_si256();
    for (std::size_t e = 0; e < edges.from.size(); ++e) {
      __m256i a = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(colours + edges.from[e] * kBatch + chunk));
      __m256i b = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(colours + edges.to[e] * kBatch + chunk));
      __m256i lt = _mm256_cmpgt_epi32(b, a);
      __m256i pass;
      switch (edges.kind[e]) {
        case 0: pass = _mm256_xor_si256(_mm256_cmpeq_epi32(a, b), ones); break;
        case 1: pass = lt; break;
        default: pass = _mm256_xor_si256(_mm256_cmpgt_epi32(a, b), ones); break;
      }
      ok = _mm256_and_si256(ok, pass);
      up = _mm256_sub_epi32(up, lt);
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(valid + chunk),
                        _mm256_srli_epi32(ok, 31));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(asc + chunk), up);
  }
}
#endif

#ifdef CHROMALG_NEON
static void scan_neon(const EdgeArrays& edges, const std::int32_t* colours,
                      std::int32_t* valid, std::int32_t* asc) {
  for (int chunk = 0; chunk < kBatch; chunk += 4) {
    uint32x4_t ok = vdupq_n_u32(0xffffffffu);
    int32x4_t up = vdupq_n_s32(0);
    for (std::size_t e = 0; e < edges.from.size(); ++e) {
      int32x4_t a = vld1q_s32(colours + edges.from[e] * kBatch + chunk);
      int32x4_t b = vld1q_s32(colours + edges.to[e] * kBatch + chunk);
      uint32x4_t lt = vcltq_s32(a, b);
      uint32x4_t pass;
      switch (edges.kind[e]) {
        case 0: pass = vmvnq_u32(vceqq_s32(a, b)); break;
        case 1: pass = lt; break;
        default: pass = vcleq_s32(a, b); break;
      }
      ok = vandq_u32(ok, pass);
      up = vsubq_s32(up, vreinterpretq_s32_u32(lt));
    }
    vst1q_s32(valid + chunk, vreinterpretq_s32_u32(vshrq_n_u32(ok, 31)));
    vst1q_s32(asc + chunk, up);
  }
}
#endif

bool kernel_available(Kernel k) {
  switch (k) {
    case Kernel::kScalar: return true;
    case Kernel::kAvx2:
#ifdef CHROMALG_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Kernel::kNeon:
#ifdef CHROMALG_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

ScanFn kernel(Kernel k) {
  if (!kernel_available(k)) throw std::runtime_error("kernel unavailable: " + kernel_name(k));
  switch (k) {
    case Kernel::kScalar: return &scan_scalar;
#ifdef CHROMALG_X86
    case Kernel::kAvx2: return &scan_avx2;
#endif
#ifdef CHROMALG_NEON
    case Kernel::kNeon: return &scan_neon;
#endif
    default: break;
  }
  return &scan_scalar;
}

Kernel best_kernel() {
  if (kernel_available(Kernel::kAvx2)) return Kernel::kAvx2;
  if (kernel_available(Kernel::kNeon)) return Kernel::kNeon;
  return Kernel::kScalar;
}

std::string kernel_name(Kernel k) {
  switch (k) {
    case Kernel::kScalar: return "scalar";
    case Kernel::kAvx2: return "avx2";
    case Kernel::kNeon: return "neon";
  }
  return "?";
}

}  // namespace chromalg::kernels
