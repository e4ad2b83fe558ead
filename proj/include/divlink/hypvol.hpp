#pragma once

#include <array>
#include <vector>

#include "divlink/typing.hpp"

namespace divlink {

struct VolumeConstants {
    double v_tet = 0;
    double v_oct = 0;
    double v_cuboct = 0;
};

// Multiples of v_tet, v_oct and v_cuboct.
struct VolumeCoefficients {
    long long tet = 0, oct = 0, cuboct = 0;

    double value(const VolumeConstants& k) const;
    VolumeCoefficients& operator+=(const VolumeCoefficients& o);
    friend VolumeCoefficients operator+(VolumeCoefficients a, const VolumeCoefficients& b) { return a += b; }
    friend bool operator==(const VolumeCoefficients&, const VolumeCoefficients&) = default;
};

using SpherePoint = std::array<double, 3>;

// Lobachevsky function, absolute error below 1e-12.
double lobachevsky(double theta);

// Computed once and cached; safe under concurrent first use.
const VolumeConstants& constants();

double ideal_tetra_volume(double alpha, double beta, double gamma);

// Volume of the ideal polyhedron whose vertices are the given points of the
// unit sphere (Klein model). The solid is triangulated by coning from
// vertices[cone_vertex]; every ideal tetrahedron is measured through the
// triangle its other three vertices form after sending the cone vertex to
// infinity.
double ideal_polyhedron_volume(const std::vector<SpherePoint>& vertices, int cone_vertex = -1);

std::vector<SpherePoint> cuboct_vertices();
std::vector<SpherePoint> oct_vertices();
std::vector<SpherePoint> tet_vertices();

double cuboct_volume_oracle();

VolumeCoefficients volume_coefficients(const TypeCensus& c);
double volume_bound(const TypeCensus& c);

double fkp_ratio(double slope_length);
double fkp_lower_bound(double v_unfilled, double slope_length);

} // namespace divlink
