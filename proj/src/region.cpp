#include "symcoh/region.hpp"

#include <algorithm>
#include <optional>

namespace symcoh {

namespace {

struct RatConstraint {
    std::vector<Rat> a;
    Rat b;
};

// Eliminate variable `var` by combining every (positive, negative) row pair.
std::vector<RatConstraint> fm_eliminate(const std::vector<RatConstraint>& rows, int var) {
    std::vector<RatConstraint> lower, upper, rest;
    for (const auto& r : rows) {
        if (r.a[var] > 0) upper.push_back(r);
        else if (r.a[var] < 0) lower.push_back(r);
        else rest.push_back(r);
    }
    for (const auto& up : upper) {
        for (const auto& lo : lower) {
            // up: a_v k_v <= b - ...; lo: -a'_v k_v <= b' - ...
            RatConstraint c;
            c.a.resize(up.a.size(), 0);
            const Rat cu = up.a[var], cl = -lo.a[var];
            for (size_t j = 0; j < up.a.size(); ++j) c.a[j] = cl * up.a[j] + cu * lo.a[j];
            c.b = cl * up.b + cu * lo.b;
            c.a[var] = 0;
            rest.push_back(std::move(c));
        }
    }
    return rest;
}

// Interval of `var` on the projection of the region; nullopt in a slot means
// unbounded on that side, empty optional pair encoded by lo > hi after floor.
struct VarBounds {
    bool infeasible = false;
    std::optional<Rat> lo, hi;
};

VarBounds project_to_var(std::vector<RatConstraint> rows, int nvars, int var) {
    for (int v = 0; v < nvars; ++v)
        if (v != var) rows = fm_eliminate(rows, v);
    VarBounds out;
    for (const auto& r : rows) {
        if (r.a[var] == 0) {
            if (r.b < 0) out.infeasible = true;
            continue;
        }
        Rat bound = r.b / r.a[var];
        if (r.a[var] > 0) {
            if (!out.hi || bound < *out.hi) out.hi = bound;
        } else {
            if (!out.lo || bound > *out.lo) out.lo = bound;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Int>> enumerate_integer_points(const std::vector<LinearConstraint>& cons,
                                                       int nvars) {
    std::vector<RatConstraint> rows;
    rows.reserve(cons.size());
    for (const auto& c : cons) {
        RatConstraint r;
        r.a.assign(c.a.begin(), c.a.end());
        r.b = c.b;
        rows.push_back(std::move(r));
    }

    std::vector<Int> lo(nvars), hi(nvars);
    for (int v = 0; v < nvars; ++v) {
        VarBounds b = project_to_var(rows, nvars, v);
        if (b.infeasible) return {};
        if (!b.lo || !b.hi)
            throw UnboundedRegionError("lattice region is unbounded in variable " + std::to_string(v));
        lo[v] = ceil_int(*b.lo);
        hi[v] = floor_int(*b.hi);
        if (lo[v] > hi[v]) return {};
    }

    std::vector<std::vector<Int>> points;
    std::vector<Int> k(lo);
    while (true) {
        bool ok = true;
        for (const auto& c : cons) {
            Int s = 0;
            for (int v = 0; v < nvars; ++v) s += c.a[v] * k[v];
            if (s > c.b) { ok = false; break; }
        }
        if (ok) points.push_back(k);
        int v = nvars - 1;
        while (v >= 0) {
            if (k[v] < hi[v]) { ++k[v]; break; }
            k[v] = lo[v];
            --v;
        }
        if (v < 0) break;
    }
    return points;
}

}  // namespace symcoh
