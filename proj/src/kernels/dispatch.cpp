#include <atomic>

#include "asymlink/kernels.hpp"

namespace asymlink::kernels {

namespace {

// Below this size ratio the linear merge beats galloping.
constexpr std::size_t kGallopRatio = 32;

Isa probe_cpu() {
#if defined(ASYMLINK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::kAvx2;
#endif
  return Isa::kScalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{probe_cpu()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
  static const Isa isa = probe_cpu();
  return isa;
}

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::kAvx2 && detected_isa() != Isa::kAvx2) isa = Isa::kScalar;
  active().store(isa, std::memory_order_relaxed);
}

std::size_t intersect_count(IdSpan a, IdSpan b) {
  if (a.empty() || b.empty()) return 0;
  if (a.size() * kGallopRatio < b.size()) return gallop::intersect_count(a, b);
  if (b.size() * kGallopRatio < a.size()) return gallop::intersect_count(b, a);
#if defined(ASYMLINK_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::intersect_count(a, b);
#endif
  return scalar::intersect_count(a, b);
}

std::size_t intersect_positions(IdSpan a, IdSpan b, std::uint32_t* pos_a,
                                std::uint32_t* pos_b) {
  if (a.empty() || b.empty()) return 0;
  if (a.size() * kGallopRatio < b.size()) {
    return gallop::intersect_positions(a, b, pos_a, pos_b);
  }
  if (b.size() * kGallopRatio < a.size()) {
    return gallop::intersect_positions(b, a, pos_b, pos_a);
  }
#if defined(ASYMLINK_HAVE_AVX2)
  if (active_isa() == Isa::kAvx2) return avx2::intersect_positions(a, b, pos_a, pos_b);
#endif
  return scalar::intersect_positions(a, b, pos_a, pos_b);
}

}  // namespace asymlink::kernels
