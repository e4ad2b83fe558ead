#include <random>
#include <set>

#include "divlink/cli.hpp"
#include "divlink/error.hpp"

namespace divlink {
namespace {

StrandSet candidate(std::mt19937_64& rng, int size) {
    const std::int64_t n = 6 + 2 * static_cast<std::int64_t>(size);
    std::uniform_int_distribution<std::int64_t> coord(-n + 1, n - 1);
    std::uniform_int_distribution<int> side(0, 3), inner(1, 3), corners(3, 5), kind(0, 4);
    std::set<std::pair<std::int64_t, std::int64_t>> ends;

    auto boundary_point = [&]() {
        for (;;) {
            const std::int64_t t = coord(rng);
            IPoint p;
            switch (side(rng)) {
            case 0: p = {n, t}; break;
            case 1: p = {t, n}; break;
            case 2: p = {-n, t}; break;
            default: p = {t, -n}; break;
            }
            if (ends.insert({p.x, p.y}).second) return p;
        }
    };
    auto interior_point = [&]() { return IPoint{coord(rng), coord(rng)}; };

    StrandSet s;
    s.boundary_half_width = n;
    for (int k = 0; k < size; ++k) {
        Strand st;
        if (kind(rng) == 0) {
            st.kind = StrandKind::Closed;
            const int m = corners(rng);
            for (int i = 0; i < m; ++i) st.points.push_back(interior_point());
        } else {
            st.kind = StrandKind::Open;
            st.points.push_back(boundary_point());
            const int m = inner(rng);
            for (int i = 0; i < m; ++i) st.points.push_back(interior_point());
            st.points.push_back(boundary_point());
        }
        s.strands.push_back(std::move(st));
    }
    return s;
}

bool acceptable(const StrandSet& s, const RandomOptions& o) {
    try {
        validate_strands(s);
        const Divide d = make_divide(s, Exec::Serial);
        if (!d.connected || d.double_point_count() == 0) return false;
        if (!o.prime_blocks_only) return true;
        const TypeCensus c = census(d);
        return c.only_block_types() && prime_admissible(d).ok;
    } catch (const Error&) {
        return false;
    }
}

} // namespace

StrandSet random_divide(std::uint64_t seed, const RandomOptions& options) {
    if (options.size < 1) throw Error("bad-argument", "random divide size must be at least 1");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        StrandSet s = candidate(rng, options.size);
        if (acceptable(s, options)) return s;
    }
    throw Error("generation-timeout", "no acceptable random divide for seed " + std::to_string(seed) + " after " +
                                          std::to_string(options.max_attempts) + " attempts");
}

StrandSet random_divide(std::uint64_t seed, int size) {
    RandomOptions o;
    o.size = size;
    return random_divide(seed, o);
}

} // namespace divlink
