#pragma once

#include "ammann/golden.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ammann {

/// Small / Big tile label. Within one generation a Big tile is sqrt(phi)
/// times larger than a Small tile.
enum class Label { Small, Big };

inline const char* label_name(Label l) { return l == Label::Small ? "Small" : "Big"; }

/// Element of the 8-element symmetry group of the square, canonically a
/// quarter-turn count plus a flip flag. The action applies the flip
/// (x,y) -> (x,-y) first, then `rot` counterclockwise quarter turns.
struct D4Element {
  int rot = 0;      // 0..3
  bool flip = false;

  friend bool operator==(const D4Element&, const D4Element&) = default;
};

inline constexpr D4Element kD4Identity{0, false};
inline constexpr D4Element kD4Rot90{1, false};
inline constexpr D4Element kD4Rot180{2, false};
inline constexpr D4Element kD4Rot270{3, false};
inline constexpr D4Element kD4MirrorX{0, true};  // (x,y) -> (x,-y)
inline constexpr D4Element kD4MirrorY{2, true};  // (x,y) -> (-x,y)
inline constexpr D4Element kD4DiagMain{1, true}; // (x,y) -> (y,x)
inline constexpr D4Element kD4DiagAnti{3, true}; // (x,y) -> (-y,-x)

/// a * b = "apply b, then a". With g = R^rot M^flip and M R = R^-1 M:
/// R^r1 M^f1 R^r2 M^f2 = R^(r1 + (f1 ? -r2 : r2)) M^(f1 xor f2).
inline D4Element compose(const D4Element& a, const D4Element& b) {
  const int r = a.rot + (a.flip ? 4 - b.rot : b.rot);
  return {r & 3, a.flip != b.flip};
}

inline D4Element inverse(const D4Element& g) {
  return {g.flip ? g.rot : (4 - g.rot) & 3, g.flip};
}

/// A point of the plane with exact ring coordinates.
struct GoldenPoint {
  GoldenNumber x, y;

  friend bool operator==(const GoldenPoint&, const GoldenPoint&) = default;
  friend GoldenPoint operator+(const GoldenPoint& a, const GoldenPoint& b) {
    return {a.x + b.x, a.y + b.y};
  }
};

inline GoldenPoint apply(const D4Element& g, const GoldenPoint& p) {
  GoldenNumber x = p.x;
  GoldenNumber y = g.flip ? -p.y : p.y;
  switch (g.rot) {
    case 0: return {std::move(x), std::move(y)};
    case 1: return {-y, std::move(x)};
    case 2: return {-x, -y};
    default: return {std::move(y), -x};
  }
}

/// Axis-aligned similarity p -> phi^(half_exp/2) * (d4 p) + t.
///
/// half_exp adds under composition; phi^(k/2) is a unit of the ring for
/// every integer k, so similarities (and their inverses) map exact
/// coordinates to exact coordinates.
struct Similarity {
  D4Element d4;
  int half_exp = 0;
  GoldenPoint t;

  friend bool operator==(const Similarity&, const Similarity&) = default;

  GoldenPoint operator()(const GoldenPoint& p) const {
    const GoldenNumber scale = half_power_of_phi(half_exp);
    const GoldenPoint q = apply(d4, p);
    return {scale * q.x + t.x, scale * q.y + t.y};
  }
};

inline Similarity compose(const Similarity& a, const Similarity& b) {
  return {compose(a.d4, b.d4), a.half_exp + b.half_exp, a(b.t)};
}

inline Similarity inverse(const Similarity& s) {
  const D4Element d4i = inverse(s.d4);
  const GoldenNumber scale = half_power_of_phi(-s.half_exp);
  const GoldenPoint ti = apply(d4i, s.t);
  return {d4i, -s.half_exp, {-(scale * ti.x), -(scale * ti.y)}};
}

/// A placed tile: where the prototile goes, and its Small/Big label.
struct PlacedTile {
  Similarity sim;
  Label label = Label::Small;

  friend bool operator==(const PlacedTile&, const PlacedTile&) = default;
};

using Hexagon = std::array<GoldenPoint, 6>;

/// The golden-bee prototile: an L-shaped rectilinear hexagon with
/// counterclockwise vertices
///   (0,0), (phi,0), (phi,sqrt(phi)), (1,sqrt(phi)), (1,phi*sqrt(phi)),
///   (0,phi*sqrt(phi)).
/// Bounding box phi x phi^(3/2) (aspect ratio exactly sqrt(phi)); the six
/// side lengths are the half-powers phi^-1 .. phi^(3/2). The coordinates
/// are certified by verify_partition against the deflation rule.
inline const Hexagon& prototile_vertices() {
  static const Hexagon hex = [] {
    const GoldenNumber zero = GoldenNumber::zero();
    const GoldenNumber one = GoldenNumber::one();
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber rphi = GoldenNumber::sqrt_phi();
    const GoldenNumber phi_rphi{0, 0, 0, 1};
    return Hexagon{{{zero, zero},
                    {phi, zero},
                    {phi, rphi},
                    {one, rphi},
                    {one, phi_rphi},
                    {zero, phi_rphi}}};
  }();
  return hex;
}

/// Axis-aligned rectangle with exact corners, x0 < x1 and y0 < y1.
struct GoldenRect {
  GoldenNumber x0, y0, x1, y1;
};

/// Canonical two-rectangle decomposition of the prototile:
/// [0,phi] x [0,sqrt(phi)] and [0,1] x [sqrt(phi), phi*sqrt(phi)].
inline const std::array<GoldenRect, 2>& prototile_rects() {
  static const std::array<GoldenRect, 2> rects = [] {
    const GoldenNumber zero = GoldenNumber::zero();
    const GoldenNumber one = GoldenNumber::one();
    const GoldenNumber phi = GoldenNumber::phi();
    const GoldenNumber rphi = GoldenNumber::sqrt_phi();
    const GoldenNumber phi_rphi{0, 0, 0, 1};
    return std::array<GoldenRect, 2>{{{zero, zero, phi, rphi}, {zero, rphi, one, phi_rphi}}};
  }();
  return rects;
}

/// Exact prototile area sqrt(5)*sqrt(phi) = 2*phi*sqrt(phi) - sqrt(phi).
inline const GoldenNumber& prototile_area() {
  static const GoldenNumber area{0, 0, -1, 2};
  return area;
}

/// Exact area of a placed tile: phi^half_exp times the prototile area.
inline GoldenNumber area(const Similarity& sim) {
  return half_power_of_phi(2 * sim.half_exp) * prototile_area();
}

/// Vertex images of the prototile under `sim`; stays rectilinear because
/// the rotation part is axis-aligned.
inline Hexagon apply_to_prototile(const Similarity& sim) {
  Hexagon out;
  const Hexagon& proto = prototile_vertices();
  for (std::size_t i = 0; i < proto.size(); ++i) out[i] = sim(proto[i]);
  return out;
}

/// The elementary deflation rule: the two child placements that exactly
/// partition the prototile, in canonical order (Big first).
///
///   U (Big):   rot90,   scale phi^(-1/2), t = (phi, 0)
///   V (Small): mirrorX, scale phi^(-1),   t = (0, phi*sqrt(phi))
///
/// U covers [0,phi]x[0,sqrt(phi)] minus the notch
/// [0,phi^-1]x[phi^-1/2,sqrt(phi)]; V covers the rest. The mirror on V is
/// forced by the interlocking notches under these coordinates; the
/// partition verifier is the correctness certificate.
inline const std::array<PlacedTile, 2>& elementary_children() {
  static const std::array<PlacedTile, 2> children = [] {
    const GoldenNumber zero = GoldenNumber::zero();
    Similarity u{kD4Rot90, -1, {GoldenNumber::phi(), zero}};
    Similarity v{kD4MirrorX, -2, {zero, GoldenNumber{0, 0, 0, 1}}};
    return std::array<PlacedTile, 2>{{{u, Label::Big}, {v, Label::Small}}};
  }();
  return children;
}

/// One grid cell that breaks a partition: its exact bounds plus how many
/// child rectangles cover it (expected 1 inside the parent, 0 outside).
struct CellViolation {
  GoldenNumber x0, x1, y0, y1;
  int cover_count = 0;
  bool inside_parent = false;
};

struct PartitionReport {
  bool ok = false;
  std::optional<CellViolation> violation;
  std::string message;
};

namespace detail {

/// Image of a canonical prototile rectangle under a similarity,
/// re-normalized so x0 < x1, y0 < y1.
inline GoldenRect map_rect(const Similarity& sim, const GoldenRect& r) {
  GoldenPoint a = sim({r.x0, r.y0});
  GoldenPoint b = sim({r.x1, r.y1});
  if (compare(a.x, b.x) > 0) std::swap(a.x, b.x);
  if (compare(a.y, b.y) > 0) std::swap(a.y, b.y);
  return {std::move(a.x), std::move(a.y), std::move(b.x), std::move(b.y)};
}

inline void append_tile_rects(const Similarity& sim, std::vector<GoldenRect>& out) {
  for (const GoldenRect& r : prototile_rects()) out.push_back(map_rect(sim, r));
}

inline std::size_t coord_index(const std::vector<GoldenNumber>& sorted, const GoldenNumber& v) {
  const auto it = std::lower_bound(sorted.begin(), sorted.end(), v,
                                   [](const GoldenNumber& a, const GoldenNumber& b) {
                                     return compare(a, b) < 0;
                                   });
  return static_cast<std::size_t>(it - sorted.begin());
}

} // namespace detail

/// Exact partition check: do the child tiles cover the parent tile exactly,
/// overlapping only on boundaries and never leaking outside?
///
/// Every tile is split into its two rectangles; all distinct x and y
/// coordinates (ordered by exact sign comparisons) form a refinement grid in
/// which each cell lies fully inside or fully outside every rectangle. A
/// cell inside the parent must be covered by exactly one child rectangle and
/// a cell outside by none. The first offending cell is reported with exact
/// coordinates.
inline PartitionReport verify_partition(const Similarity& parent,
                                        std::span<const Similarity> children) {
  std::vector<GoldenRect> parent_rects;
  detail::append_tile_rects(parent, parent_rects);
  std::vector<GoldenRect> child_rects;
  child_rects.reserve(children.size() * 2);
  for (const Similarity& c : children) detail::append_tile_rects(c, child_rects);

  std::vector<GoldenNumber> xs, ys;
  xs.reserve(2 * (parent_rects.size() + child_rects.size()));
  ys.reserve(xs.capacity());
  auto collect = [&](const std::vector<GoldenRect>& rects) {
    for (const GoldenRect& r : rects) {
      xs.push_back(r.x0);
      xs.push_back(r.x1);
      ys.push_back(r.y0);
      ys.push_back(r.y1);
    }
  };
  collect(parent_rects);
  collect(child_rects);

  auto sort_unique = [](std::vector<GoldenNumber>& v) {
    std::sort(v.begin(), v.end(),
              [](const GoldenNumber& a, const GoldenNumber& b) { return compare(a, b) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  sort_unique(xs);
  sort_unique(ys);

  const std::size_t nx = xs.size() - 1; // cell counts
  const std::size_t ny = ys.size() - 1;
  std::vector<int> child_cover((nx + 1) * (ny + 1), 0);
  std::vector<int> parent_cover((nx + 1) * (ny + 1), 0);
  auto stamp = [&](std::vector<int>& grid, const GoldenRect& r) {
    const std::size_t ix0 = detail::coord_index(xs, r.x0);
    const std::size_t ix1 = detail::coord_index(xs, r.x1);
    const std::size_t iy0 = detail::coord_index(ys, r.y0);
    const std::size_t iy1 = detail::coord_index(ys, r.y1);
    grid[ix0 * (ny + 1) + iy0] += 1;
    grid[ix1 * (ny + 1) + iy0] -= 1;
    grid[ix0 * (ny + 1) + iy1] -= 1;
    grid[ix1 * (ny + 1) + iy1] += 1;
  };
  for (const GoldenRect& r : parent_rects) stamp(parent_cover, r);
  for (const GoldenRect& r : child_rects) stamp(child_cover, r);

  // 2D prefix sums turn the corner stamps into per-cell cover counts.
  auto integrate = [&](std::vector<int>& grid) {
    for (std::size_t i = 0; i <= nx; ++i)
      for (std::size_t j = 1; j <= ny; ++j) grid[i * (ny + 1) + j] += grid[i * (ny + 1) + j - 1];
    for (std::size_t i = 1; i <= nx; ++i)
      for (std::size_t j = 0; j <= ny; ++j)
        grid[i * (ny + 1) + j] += grid[(i - 1) * (ny + 1) + j];
  };
  integrate(parent_cover);
  integrate(child_cover);

  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const int inside = parent_cover[i * (ny + 1) + j];
      const int cover = child_cover[i * (ny + 1) + j];
      if ((inside == 1 && cover == 1) || (inside == 0 && cover == 0)) continue;
      PartitionReport report;
      report.ok = false;
      CellViolation v{xs[i], xs[i + 1], ys[j], ys[j + 1], cover, inside != 0};
      if (inside > 1) {
        report.message = "parent rectangles overlap at cell x in " + to_string(v.x0) + ".." +
                         to_string(v.x1) + ", y in " + to_string(v.y0) + ".." + to_string(v.y1);
      } else {
        report.message = std::string(inside == 1 ? (cover == 0 ? "uncovered" : "multiply covered")
                                                 : "covered outside parent") +
                         " cell x in " + to_string(v.x0) + ".." + to_string(v.x1) + ", y in " +
                         to_string(v.y0) + ".." + to_string(v.y1) + " (cover count " +
                         std::to_string(cover) + ")";
      }
      report.violation = std::move(v);
      return report;
    }
  }
  return {true, std::nullopt, ""};
}

inline PartitionReport verify_partition(const Similarity& parent,
                                        std::span<const PlacedTile> children) {
  std::vector<Similarity> sims;
  sims.reserve(children.size());
  for (const PlacedTile& t : children) sims.push_back(t.sim);
  return verify_partition(parent, std::span<const Similarity>(sims));
}

} // namespace ammann
