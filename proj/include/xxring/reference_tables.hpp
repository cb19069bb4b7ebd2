#pragma once

#include <optional>
#include <span>

namespace xxring {

/// Tabulated reference critical temperatures (units of |J|, six significant
/// figures) that the `tables` command and the acceptance suite recompute and
/// check against. B = eta * |J| throughout.
struct CriticalReferenceRow {
  double eta;
  double T1;
  std::optional<double> T2;  // fidelity transition; ferromagnetic rows only
};

/// Antiferromagnetic ring (J > 0): concurrence transition only.
std::span<const CriticalReferenceRow> reference_rows_antiferro();

/// Ferromagnetic ring (J < 0): concurrence and fidelity transitions. Rows
/// with eta > 2 have no fidelity transition; at eta = 2 it closes at T = 0.
std::span<const CriticalReferenceRow> reference_rows_ferro();

}  // namespace xxring
