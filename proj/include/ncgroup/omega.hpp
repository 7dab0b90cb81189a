#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncgroup/element_set.hpp"

namespace ncgroup {

enum class OmegaMethod { clique, centralizers, formula };

constexpr std::string_view method_name(OmegaMethod m) noexcept {
  switch (m) {
    case OmegaMethod::clique: return "clique";
    case OmegaMethod::centralizers: return "centralizers";
    case OmegaMethod::formula: return "formula";
  }
  return "unknown";
}

/// Size of a largest set of pairwise non-commuting elements, and how it was
/// obtained.
struct OmegaResult {
  std::size_t value = 0;
  OmegaMethod method = OmegaMethod::clique;
  /// Pairwise non-commuting, non-central, |witness| == value. Absent for the
  /// formula method.
  std::optional<ElementSet> witness;
  /// Centralizer method only: C(a_1), ..., C(a_k) in witness order.
  std::vector<ElementSet> covering_centralizers;
  /// Formula method only, e.g. "q^beta + 1 = 2^4 + 1".
  std::string derivation;
};

}  // namespace ncgroup
