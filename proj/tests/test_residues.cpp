#include <doctest.h>

#include <set>

#include "cmlv/factor.hpp"
#include "cmlv/residues.hpp"

using namespace cmlv;

TEST_SUITE_BEGIN("residues");

namespace {

struct ByCanonical {
    bool operator()(const QuadInt& x, const QuadInt& y) const { return canonical_less(x, y); }
};

std::size_t euler_phi_norm(const QuadInt& m) {
    // multiplicative: phi(pi^e) = N(pi)^e - N(pi)^(e-1)
    auto f = factor_quadint(m);
    std::size_t phi = 1;
    for (auto& [p, e] : f.primes) {
        std::uint64_t np = static_cast<std::uint64_t>(norm(p));
        std::uint64_t t = 1;
        for (unsigned k = 0; k + 1 < e; ++k) t *= np;
        phi *= t * (np - 1);
    }
    return phi;
}

} // namespace

TEST_CASE("residue system sizes match euler phi") {
    QuadInt m1{Field::Gauss, 1, 4};
    auto rs = residue_system(m1, Closure::None);
    CHECK(rs.elements.size() == euler_phi_norm(m1)); // 16

    QuadInt m2 = parse_quadint("-35-4i", Field::Gauss);
    auto rs2 = residue_system(m2, Closure::None);
    CHECK(rs2.elements.size() == euler_phi_norm(m2)); // 16*72 = 1152

    QuadInt m3{Field::Eisen, 1, 6};
    auto rs3 = residue_system(m3, Closure::None);
    CHECK(rs3.elements.size() == euler_phi_norm(m3)); // 30
}

TEST_CASE("closure invariance under negation") {
    QuadInt m{Field::Gauss, 1, 4};
    auto rs = residue_system(m, Closure::Negation);
    REQUIRE(rs.elements.size() == 16);
    std::set<QuadInt, ByCanonical> seen(rs.elements.begin(), rs.elements.end());
    for (const auto& c : rs.elements) {
        QuadInt neg = canonical_residue(-c, m);
        CHECK(seen.count(neg) == 1);
    }
}

TEST_CASE("full unit orbit closure gauss") {
    QuadInt m = parse_quadint("-35-4i", Field::Gauss);
    auto rs = residue_system(m, Closure::FullUnitOrbit);
    REQUIRE(rs.elements.size() == 1152);
    std::set<QuadInt, ByCanonical> seen(rs.elements.begin(), rs.elements.end());
    for (const auto& u : units(Field::Gauss))
        for (const auto& c : rs.elements)
            CHECK(seen.count(canonical_residue(u * c, m)) == 1);
    auto orbits = unit_orbits(rs);
    CHECK(orbits.size() == 1152 / 4);
    for (auto& orb : orbits) CHECK(orb.size() == 4);
}

TEST_CASE("full unit orbit closure eisen") {
    QuadInt m{Field::Eisen, 1, 6};
    auto rs = residue_system(m, Closure::FullUnitOrbit);
    REQUIRE(rs.elements.size() == 30);
    auto orbits = unit_orbits(rs);
    CHECK(orbits.size() == 5);
    for (auto& orb : orbits) CHECK(orb.size() == 6);
    auto trans = unit_orbit_transversal(m);
    CHECK(trans.size() == 5);
}

TEST_CASE("all residues coprime and reduced") {
    QuadInt m{Field::Gauss, 1, 4};
    auto rs = residue_system(m, Closure::None);
    for (const auto& c : rs.elements) {
        CHECK(coprime(c, m));
        CHECK(canonical_residue(c, m) == c);
    }
}

TEST_CASE("unit modulus") {
    auto rs = residue_system(QuadInt::one(Field::Gauss), Closure::FullUnitOrbit);
    REQUIRE(rs.elements.size() == 1);
    CHECK(rs.elements[0].is_zero());
}

TEST_CASE("determinism") {
    QuadInt m{Field::Eisen, 1, 6};
    auto a = residue_system(m, Closure::FullUnitOrbit);
    auto b = residue_system(m, Closure::FullUnitOrbit);
    CHECK(a.elements == b.elements);
}

TEST_SUITE_END();
