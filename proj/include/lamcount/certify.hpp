#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lamcount {

enum class BijectionKind { LambdaBw, BwBz, LambdaBz, MotzkinNeutral, KhnfShift };

std::optional<BijectionKind> parse_bijection_kind(std::string_view name);
std::string_view bijection_name(BijectionKind kind);

struct CheckFailure {
  std::uint64_t size;
  std::string what;
  std::string witness;  // canonical rendering of the offending term or tree
};

struct SizeCheck {
  std::uint64_t size;
  std::uint64_t domain;    // objects checked in the forward direction
  std::uint64_t codomain;  // objects checked in the backward direction
};

struct CheckReport {
  std::vector<SizeCheck> sizes;
  std::optional<CheckFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
};

/// Exhaustively checks both round trips, size preservation and codomain
/// membership of a translation pair for every size 1..max_size. Stops at the
/// first counterexample.
CheckReport certify_bijection(BijectionKind kind, std::uint64_t max_size);

/// Compares bw_to_bz ∘ lambda_to_bw with lambda_to_bz (and the inverse
/// composites) on every term of size 1..max_size.
CheckReport certify_triangle(std::uint64_t max_size);

}  // namespace lamcount
