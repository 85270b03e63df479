#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hodge/hn_profiles.hpp"
#include "hodge/hodge_system.hpp"
#include "hodge/profile.hpp"

namespace hodge {

/// A worked example: the system, the subobject that witnesses its verdict,
/// and the verdict itself. All examples live on a complex curve of genus g,
/// so d = 1, deg(Omega^1) = 2g - 2 and char = 0.
struct GalleryEntry {
  std::string name;
  HodgeSystem system;
  std::optional<SubsystemProfile> declared_subobject;
  Verdict expected;
  /// HN profile of an unstable component, when the example has one.
  std::optional<HNProfile> component_hn;
};

/// E_0 = (2, -(2g-2)), E_1 = (2, 2g-2), both strictly semistable, theta an
/// isomorphism. Semistable, not stable; L_0 + L_1 of slope 0 witnesses it.
GalleryEntry example_strictly_semistable(std::int64_t g);

/// E_0 = L_0 = (1, d), E_1 an extension of L_0 K by O, so (2, d + 2g - 2).
/// theta_1 is onto but not an isomorphism; L_0 is invariant with slope d
/// above mu(E) = (2d + 2g - 2)/3. Requires d > 2g - 2.
GalleryEntry example_surjective_not_iso(std::int64_t g, std::int64_t d_line);

/// E = L_0 + L_0^dual with theta_1 : L_1 -> L_0 K injective. L_0 destabilizes.
GalleryEntry example_injective_not_iso(std::int64_t g, std::int64_t d0);

/// E_0 = L_0, E_1 = L_1 + L_2 with L_1 = (L_0^dual K^{-1/2})^2 and
/// L_2 = L_0 K; E_1 is unstable and L_0 destabilizes E.
GalleryEntry example_unstable_component(std::int64_t g, std::int64_t d0);

struct GalleryParams {
  std::int64_t g = 2;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> d0;
};

/// Names accepted by make_gallery_entry, in a fixed order.
const std::vector<std::string>& gallery_names();

/// Dispatch by name; missing d / d0 take each example's reference value.
GalleryEntry make_gallery_entry(const std::string& name,
                                const GalleryParams& params);

/// Recomputes the verdict: the oracle for isomorphism-mode entries, the
/// declared subobject otherwise.
Verdict reproduce(const GalleryEntry& entry);

/// Same tri-states and, when both carry certificates, the same slope gap.
bool verdicts_agree(const Verdict& expected, const Verdict& got);

}  // namespace hodge
