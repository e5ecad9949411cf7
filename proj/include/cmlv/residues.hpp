#pragma once

#include "cmlv/quadint.hpp"

#include <cstdint>
#include <vector>

namespace cmlv {

// Whether the reduced residue system must be closed under negation or under
// multiplication by the full unit group.
enum class Closure { None, Negation, FullUnitOrbit };

// A reduced residue system mod `modulus`: one canonical representative per
// unit of O_K/(modulus), deterministically ordered by (norm, a, b).
struct ResidueSystem {
    QuadInt modulus;
    Closure closure = Closure::None;
    std::vector<QuadInt> elements;

    std::size_t size() const { return elements.size(); }
};

// Canonical representative of z mod m (centered Euclidean remainder).
QuadInt canonical_residue(const QuadInt& z, const QuadInt& m);

// Builds the system. For Negation/FullUnitOrbit closures, orbit
// representatives are chosen first (minimal under (norm, a, b)) and each
// orbit is expanded, so the closure property holds element-wise.
ResidueSystem residue_system(const QuadInt& modulus, Closure closure);

// Partition of system indices into unit orbits (used by orbit-sum checks).
std::vector<std::vector<std::size_t>> unit_orbits(const ResidueSystem& rs);

// One representative per full unit orbit, minimal under (norm, a, b).
std::vector<QuadInt> unit_orbit_transversal(const QuadInt& modulus);

} // namespace cmlv
