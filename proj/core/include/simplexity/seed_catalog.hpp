#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexity/cayley.hpp"
#include "simplexity/simplicial_complex.hpp"

namespace simplexity {

/// Smallest size and efficiency of triangulations of I^d, with the Hadamard
/// and Smith lower bounds on the efficiency.
struct KnownConstants
{
    unsigned d = 0;
    std::uint64_t phi = 0;
    bool phi_is_upper_bound = false; // d = 8: only an upper bound is known
    double rho = 0;
    double hadamard_lower = 0;
    double smith_lower = 0;
};

/// 2 / (d+1)^((d+1)/(2d)): the efficiency implied by Hadamard's inequality.
double hadamard_lower(unsigned d);

/// Rows for 1 <= d <= 8.
KnownConstants known_constants(unsigned d);

inline constexpr unsigned max_unimodular_cube_dim = 8;

/// The d! simplices 0 -> e_pi(1) -> e_pi(1) + e_pi(2) -> ... over permutations pi.
Triangulation unimodular_cube(unsigned d);

/// Smallest triangulations for d <= 3: 1, 2 and 5 simplices (the last one cuts
/// the four odd corners off the cube, leaving a central tetrahedron).
Triangulation minimal_cube(unsigned d);

/// Fine mixed subdivision of m copies of the square with floor(m^2/4)
/// diagonal squares, weighted size ceil(3m^2/4).
MixedSubdivision square_family(unsigned m);

/// Fine mixed subdivision of I^3 + I^3 built from the cuboctahedron:
/// 10 tetrahedra and 6 triangular prisms, weighted size 14/3.
MixedSubdivision seed_i3d1();

/// Fine mixed subdivision of I^3 + I^3 + I^3 with 20 triangular prisms,
/// 16 tetrahedra and 2 parallelepipeds, weighted size 44/3.
MixedSubdivision seed_i3d2();

/// Integer heights on I^3 x Delta^2 (cube index major, simplex index minor)
/// whose regular triangulation is the Cayley triangulation of seed_i3d2.
const std::vector<Coordinate>& seed_i3d2_heights();

/// Cell types, sorted summand dimensions -> number of cells.
using Census = std::map<std::vector<unsigned>, std::size_t>;
Census census(const MixedSubdivision& s);

struct SeedCheck
{
    bool fine = false;
    bool partition = false;    // realized cells tile P + ... + P (exact dissection check)
    bool face_to_face = false; // Cayley triangulation passes the pairwise check
    Rational weighted;
    Census cells;
    std::size_t cayley_simplices = 0;
    std::vector<std::string> problems;

    bool ok() const { return fine && partition && face_to_face; }
};

SeedCheck check_seed(const MixedSubdivision& s);

/// Seed by name: "i3d1", "i3d2", "square" (m = 2), "square(m)" or
/// "square_family(m)", and "unimodular(l,m)" for the staircase lift of the
/// unimodular l-cube to I^l x Delta^(m-1).
MixedSubdivision seed_by_name(const std::string& name);

} // namespace simplexity
