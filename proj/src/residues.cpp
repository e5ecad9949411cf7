#include "cmlv/residues.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cmlv {

QuadInt canonical_residue(const QuadInt& z, const QuadInt& m) { return mod(z, m); }

namespace {

// Z-basis of the ideal (m): columns m and m*gen, reduced to Hermite normal
// form [[d, e], [0, c]] acting on coordinate vectors (a, b).
struct Hnf {
    std::int64_t d, e, c;
};

Hnf ideal_hnf(const QuadInt& m) {
    // Basis vectors of (m) as rows: (a, b) coords of m and m*gen.
    QuadInt g = QuadInt::gen(m.field) * m;
    std::int64_t r1a = m.a, r1b = m.b;
    std::int64_t r2a = g.a, r2b = g.b;
    // Euclidean row reduction on the b-column to reach (d,0) and (e,c).
    while (r1b != 0) {
        if (r2b == 0) {
            std::swap(r1a, r2a);
            std::swap(r1b, r2b);
            continue;
        }
        std::int64_t q = r1b / r2b;
        r1a -= q * r2a;
        r1b -= q * r2b;
        std::swap(r1a, r2a);
        std::swap(r1b, r2b);
    }
    // Now r1 = (d, 0) up to sign; r2 = (e, c).
    std::int64_t d = std::abs(r1a);
    std::int64_t c = std::abs(r2b);
    std::int64_t e = ((r2b < 0 ? -r2a : r2a) % d + d) % d;
    if (d == 0 || c == 0) throw std::invalid_argument("residue_system: zero modulus");
    return {d, e, c};
}

} // namespace

ResidueSystem residue_system(const QuadInt& modulus, Closure closure) {
    if (modulus.is_zero()) throw std::invalid_argument("residue_system: zero modulus");
    ResidueSystem rs;
    rs.modulus = modulus;
    rs.closure = closure;

    if (modulus.is_unit()) {
        // O_K/(unit) is the zero ring; the unit group is trivial.
        rs.elements = {QuadInt::zero(modulus.field)};
        return rs;
    }

    Hnf h = ideal_hnf(modulus);
    std::vector<QuadInt> reduced;
    reduced.reserve((std::size_t)norm(modulus));
    for (std::int64_t y = 0; y < h.c; ++y) {
        for (std::int64_t x = 0; x < h.d; ++x) {
            QuadInt z{modulus.field, x, y};
            if (coprime(z, modulus)) reduced.push_back(canonical_residue(z, modulus));
        }
    }

    if (closure == Closure::None) {
        rs.elements = std::move(reduced);
    } else {
        std::vector<QuadInt> orbit_units;
        if (closure == Closure::Negation)
            orbit_units = {QuadInt::one(modulus.field), -QuadInt::one(modulus.field)};
        else
            orbit_units = units(modulus.field);

        // Group classes into orbits keyed by their minimal canonical member.
        std::map<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>, std::vector<QuadInt>>
            orbits;
        auto key_of = [](const QuadInt& z) {
            return std::make_pair(norm(z), std::make_pair(z.a, z.b));
        };
        for (const QuadInt& z : reduced) {
            QuadInt rep = z;
            std::vector<QuadInt> orbit;
            for (const QuadInt& u : orbit_units) {
                QuadInt m = canonical_residue(u * z, modulus);
                orbit.push_back(m);
                if (canonical_less(m, rep)) rep = m;
            }
            auto& slot = orbits[key_of(rep)];
            if (slot.empty()) {
                std::sort(orbit.begin(), orbit.end(), canonical_less);
                orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
                slot = std::move(orbit);
            }
        }
        for (auto& [k, orbit] : orbits) {
            (void)k;
            for (const QuadInt& z : orbit) rs.elements.push_back(z);
        }
    }

    std::sort(rs.elements.begin(), rs.elements.end(), canonical_less);
    return rs;
}

std::vector<std::vector<std::size_t>> unit_orbits(const ResidueSystem& rs) {
    std::map<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>, std::size_t> index;
    for (std::size_t i = 0; i < rs.elements.size(); ++i) {
        const QuadInt& z = rs.elements[i];
        index[{norm(z), {z.a, z.b}}] = i;
    }
    std::vector<bool> seen(rs.elements.size(), false);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t i = 0; i < rs.elements.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> orbit;
        for (const QuadInt& u : units(rs.modulus.field)) {
            QuadInt m = canonical_residue(u * rs.elements[i], rs.modulus);
            auto it = index.find({norm(m), {m.a, m.b}});
            if (it == index.end()) continue; // orbit leaves the system (closure None)
            if (!seen[it->second]) {
                seen[it->second] = true;
                orbit.push_back(it->second);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

std::vector<QuadInt> unit_orbit_transversal(const QuadInt& modulus) {
    ResidueSystem rs = residue_system(modulus, Closure::FullUnitOrbit);
    auto orbits = unit_orbits(rs);
    std::vector<QuadInt> out;
    out.reserve(orbits.size());
    for (const auto& orbit : orbits) out.push_back(rs.elements[orbit.front()]);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

} // namespace cmlv
