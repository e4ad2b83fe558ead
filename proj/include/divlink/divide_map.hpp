#pragma once

#include <vector>

#include "divlink/planar_map.hpp"

namespace divlink {

struct Region {
    int face = -1;
    bool internal = false;
};

struct StrandCensus {
    int interval_count = 0;
    int circle_count = 0;
    friend bool operator==(const StrandCensus&, const StrandCensus&) = default;
};

struct Divide {
    PlanarMap map;
    std::vector<Region> regions;
    StrandCensus strands;
    bool connected = false; // connectivity of P alone, boundary arcs ignored

    int internal_region_count() const;
    int double_point_count() const;
};

std::vector<Region> regions(const PlanarMap& m);
StrandCensus strand_census(const PlanarMap& m);
bool divide_connected(const PlanarMap& m);

Divide make_divide(PlanarMap m);
Divide make_divide(const StrandSet& s, Exec exec = Exec::Parallel);

int link_component_count(const Divide& d);

// Requires a connected divide with at least one double point.
int cusp_count(const Divide& d);

// Region flag of a face id (outside face counts as external).
bool face_internal(const Divide& d, int face);

} // namespace divlink
