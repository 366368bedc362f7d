#pragma once

// Planar primitives on points stored as std::complex<double>.

#include "schwarz/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schwarz::geometry {

inline double cross(cplx o, cplx a, cplx b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

/// Indices of the convex hull in counter-clockwise order (Andrew's monotone
/// chain). Collinear boundary points are dropped.
inline std::vector<int> convex_hull(std::span<const cplx> pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (pts[a].real() != pts[b].real()) return pts[a].real() < pts[b].real();
        return pts[a].imag() < pts[b].imag();
    });
    idx.erase(std::unique(idx.begin(), idx.end(), [&](int a, int b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() < 3) return idx;

    std::vector<int> hull(2 * idx.size());
    int k = 0;
    for (int i : idx) {
        while (k >= 2 && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    for (int t = static_cast<int>(idx.size()) - 2, lower = k + 1; t >= 0; --t) {
        const int i = idx[t];
        while (k >= lower && cross(pts[hull[k - 2]], pts[hull[k - 1]], pts[i]) <= 0) --k;
        hull[k++] = i;
    }
    hull.resize(k - 1);
    return hull;
}

struct IndexPair {
    int first = 0;
    int second = 0;
    double distance = 0.0;
};

/// Antipodal pairs of a convex polygon (rotating calipers), sorted by
/// decreasing distance. The first entry realizes the diameter.
inline std::vector<IndexPair> antipodal_pairs(std::span<const cplx> pts, std::span<const int> hull) {
    std::vector<IndexPair> out;
    const int h = static_cast<int>(hull.size());
    if (h == 0) return out;
    if (h == 1) return {{hull[0], hull[0], 0.0}};
    if (h == 2) return {{hull[0], hull[1], std::abs(pts[hull[0]] - pts[hull[1]])}};

    auto area2 = [&](int i, int j, int k) {
        return std::abs(cross(pts[hull[i]], pts[hull[j]], pts[hull[k]]));
    };
    int j = 1;
    for (int i = 0; i < h; ++i) {
        const int ni = (i + 1) % h;
        while (area2(i, ni, (j + 1) % h) > area2(i, ni, j)) j = (j + 1) % h;
        out.push_back({hull[i], hull[j], std::abs(pts[hull[i]] - pts[hull[j]])});
        out.push_back({hull[ni], hull[j], std::abs(pts[hull[ni]] - pts[hull[j]])});
    }
    std::sort(out.begin(), out.end(), [](const IndexPair& a, const IndexPair& b) {
        if (a.distance != b.distance) return a.distance > b.distance;
        return std::minmax(a.first, a.second) < std::minmax(b.first, b.second);
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const IndexPair& a, const IndexPair& b) {
                              return std::minmax(a.first, a.second) == std::minmax(b.first, b.second);
                          }),
              out.end());
    return out;
}

inline double point_segment_distance(cplx p, cplx a, cplx b) {
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(p - a);
    const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

struct SegmentHit {
    double s = 0.0; // parameter along the first segment
    double t = 0.0; // parameter along the second segment
};

/// Intersection (or approach closer than eps) of segments [a, b] and [c, d].
inline std::optional<SegmentHit> segments_meet(cplx a, cplx b, cplx c, cplx d, double eps) {
    const double d1 = cross(c, d, a), d2 = cross(c, d, b);
    const double d3 = cross(a, b, c), d4 = cross(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        const double s = d1 / (d1 - d2);
        const double t = d3 / (d3 - d4);
        return SegmentHit{s, t};
    }
    auto param = [](cplx p, cplx u, cplx v) {
        const double len2 = std::norm(v - u);
        return len2 == 0.0 ? 0.0 : std::clamp(((p - u) * std::conj(v - u)).real() / len2, 0.0, 1.0);
    };
    if (point_segment_distance(a, c, d) <= eps) return SegmentHit{0.0, param(a, c, d)};
    if (point_segment_distance(b, c, d) <= eps) return SegmentHit{1.0, param(b, c, d)};
    if (point_segment_distance(c, a, b) <= eps) return SegmentHit{param(c, a, b), 0.0};
    if (point_segment_distance(d, a, b) <= eps) return SegmentHit{param(d, a, b), 1.0};
    return std::nullopt;
}

struct SelfIntersection {
    int edge_a = 0; // edge k joins vertex k to vertex k+1 (cyclically)
    int edge_b = 0;
    SegmentHit where;
};

/// First self-intersection of the closed polyline through `verts`, ignoring
/// edges that share a vertex. Edges are bucketed on a uniform grid so the
/// expected cost is linear in the number of edges.
inline std::optional<SelfIntersection> find_self_intersection(std::span<const cplx> verts, double eps) {
    const int n = static_cast<int>(verts.size());
    if (n < 4) return std::nullopt;
    double xmin = verts[0].real(), xmax = xmin, ymin = verts[0].imag(), ymax = ymin, total = 0.0;
    for (int k = 0; k < n; ++k) {
        const cplx p = verts[k];
        xmin = std::min(xmin, p.real());
        xmax = std::max(xmax, p.real());
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
        total += std::abs(verts[(k + 1) % n] - p);
    }
    const double extent = std::max(xmax - xmin, ymax - ymin);
    if (extent == 0.0) return SelfIntersection{0, 2, {}};
    double cell = std::max(total / n, extent / 4096.0);
    cell = std::max(cell, 4.0 * eps);
    const auto gx = static_cast<std::int64_t>((xmax - xmin) / cell) + 1;
    const auto gy = static_cast<std::int64_t>((ymax - ymin) / cell) + 1;

    std::unordered_map<std::int64_t, std::vector<int>> buckets;
    buckets.reserve(static_cast<std::size_t>(n) * 2);
    auto cell_of = [&](double v, double lo, std::int64_t limit) {
        return std::clamp(static_cast<std::int64_t>((v - lo) / cell), std::int64_t{0}, limit - 1);
    };
    for (int k = 0; k < n; ++k) {
        const cplx a = verts[k], b = verts[(k + 1) % n];
        const auto x0 = cell_of(std::min(a.real(), b.real()) - eps, xmin, gx);
        const auto x1 = cell_of(std::max(a.real(), b.real()) + eps, xmin, gx);
        const auto y0 = cell_of(std::min(a.imag(), b.imag()) - eps, ymin, gy);
        const auto y1 = cell_of(std::max(a.imag(), b.imag()) + eps, ymin, gy);
        for (auto x = x0; x <= x1; ++x)
            for (auto y = y0; y <= y1; ++y) buckets[x * gy + y].push_back(k);
    }

    std::optional<SelfIntersection> best;
    for (const auto& [key, edges] : buckets) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const int ea = std::min(edges[i], edges[j]);
                const int eb = std::max(edges[i], edges[j]);
                if (eb - ea <= 1 || (ea == 0 && eb == n - 1)) continue;
                auto hit = segments_meet(verts[ea], verts[(ea + 1) % n], verts[eb], verts[(eb + 1) % n], eps);
                if (hit && (!best || std::pair(ea, eb) < std::pair(best->edge_a, best->edge_b)))
                    best = SelfIntersection{ea, eb, *hit};
            }
        }
    }
    return best;
}

/// Scanline measures of a closed polyline: for each of `rows` equally spaced
/// horizontal lines the winding number along the line is a step function,
/// integrated exactly per row.
struct WindingMeasure {
    double set_area = 0.0;          // area where winding >= 1
    double multiplicity_area = 0.0; // integral of max(winding, 0)
    double excess_area = 0.0;       // integral of max(winding - 1, 0)
    int max_winding = 0;
};

inline WindingMeasure winding_measure(std::span<const cplx> verts, int rows) {
    WindingMeasure out;
    const int n = static_cast<int>(verts.size());
    if (n < 3 || rows < 1) return out;
    double ymin = verts[0].imag(), ymax = ymin;
    for (auto p : verts) {
        ymin = std::min(ymin, p.imag());
        ymax = std::max(ymax, p.imag());
    }
    if (ymax <= ymin) return out;
    const double dy = (ymax - ymin) / rows;

    struct Crossing {
        double x;
        int dir;
    };
    std::vector<std::vector<Crossing>> buckets(rows);
    for (int k = 0; k < n; ++k) {
        const cplx a = verts[k], b = verts[(k + 1) % n];
        if (a.imag() == b.imag()) continue;
        const int dir = b.imag() > a.imag() ? 1 : -1;
        const double lo = std::min(a.imag(), b.imag()), hi = std::max(a.imag(), b.imag());
        // Row centers y_j = ymin + (j + 1/2) dy with lo <= y_j < hi.
        int j0 = static_cast<int>(std::ceil((lo - ymin) / dy - 0.5));
        int j1 = static_cast<int>(std::ceil((hi - ymin) / dy - 0.5)) - 1;
        j0 = std::max(j0, 0);
        j1 = std::min(j1, rows - 1);
        for (int j = j0; j <= j1; ++j) {
            const double y = ymin + (j + 0.5) * dy;
            if (y < lo || y >= hi) continue;
            const double t = (y - a.imag()) / (b.imag() - a.imag());
            buckets[j].push_back({a.real() + t * (b.real() - a.real()), dir});
        }
    }
    for (auto& row : buckets) {
        std::sort(row.begin(), row.end(), [](const Crossing& p, const Crossing& q) { return p.x < q.x; });
        int wind = 0;
        double set_len = 0.0, mult_len = 0.0, excess_len = 0.0;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            wind -= row[i].dir;
            const double w = row[i + 1].x - row[i].x;
            if (wind >= 1) set_len += w;
            if (wind > 0) mult_len += wind * w;
            if (wind > 1) excess_len += (wind - 1) * w;
            out.max_winding = std::max(out.max_winding, wind);
        }
        out.set_area += set_len * dy;
        out.multiplicity_area += mult_len * dy;
        out.excess_area += excess_len * dy;
    }
    return out;
}

} // namespace schwarz::geometry
