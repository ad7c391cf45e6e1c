#pragma once

// Sorted-set intersection kernels.
//
// Every neighbor list in a CoauthorGraph is a strictly increasing array of
// 32-bit node ids, and almost all of the work in scoring and evaluation is
// intersecting two such arrays. There is one scalar reference implementation
// and SIMD variants compiled in separate translation units; the entry points
// below pick a variant at runtime from the CPU's feature flags.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace asymlink::kernels {

using IdSpan = std::span<const std::uint32_t>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// Best variant supported by both the build and the running CPU.
Isa detected_isa();

/// Variant currently used by the dispatching entry points.
Isa active_isa();

/// Overrides dispatch (tests, benchmarks). Requests for an unsupported ISA
/// fall back to kScalar. Not thread-safe against concurrent kernel calls.
void set_active_isa(Isa isa);

/// |a ∩ b| for strictly increasing a, b.
std::size_t intersect_count(IdSpan a, IdSpan b);

/// Writes the index in `a` and the index in `b` of every common element, in
/// increasing element order. Both outputs need room for min(|a|, |b|) entries.
/// Returns the number of common elements.
std::size_t intersect_positions(IdSpan a, IdSpan b, std::uint32_t* pos_a,
                                std::uint32_t* pos_b);

namespace scalar {
std::size_t intersect_count(IdSpan a, IdSpan b);
std::size_t intersect_positions(IdSpan a, IdSpan b, std::uint32_t* pos_a,
                                std::uint32_t* pos_b);
}  // namespace scalar

// Galloping (exponential search) for strongly size-skewed inputs. ISA
// independent; dispatch switches to it when one side is much shorter.
namespace gallop {
std::size_t intersect_count(IdSpan small, IdSpan large);
std::size_t intersect_positions(IdSpan small, IdSpan large,
                                std::uint32_t* pos_small,
                                std::uint32_t* pos_large);
}  // namespace gallop

#if defined(ASYMLINK_HAVE_AVX2)
namespace avx2 {
std::size_t intersect_count(IdSpan a, IdSpan b);
std::size_t intersect_positions(IdSpan a, IdSpan b, std::uint32_t* pos_a,
                                std::uint32_t* pos_b);
}  // namespace avx2
#endif

}  // namespace asymlink::kernels
