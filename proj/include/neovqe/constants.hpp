#pragma once

namespace neovqe {

// Atomic units throughout: lengths in Bohr, energies in Hartree,
// masses in electron masses.
inline constexpr double kAngstromPerBohr = 0.52917721067;
inline constexpr double kProtonMass = 1874.0;  // m_e; see data/bases/README
inline constexpr double kCoefficientCutoff = 1e-12;

inline double angstrom_to_bohr(double r) { return r / kAngstromPerBohr; }

}  // namespace neovqe
