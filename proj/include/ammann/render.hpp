#pragma once

#include "ammann/errors.hpp"
#include "ammann/geometry.hpp"
#include "ammann/golden.hpp"
#include "ammann/substitution.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace ammann {

/// SVG appearance knobs. The default scale draws the prototile 400 units
/// wide (the prototile's width is phi in ring coordinates).
struct RenderStyle {
  std::string fill_small = "#F4C95D";
  std::string fill_big = "#E8762C";
  std::string stroke = "#1A1A1A";
  double stroke_width = 1.0;
  double scale = 400.0 / kPhi;
  int precision = 6;
};

namespace detail {

/// Fixed-decimal formatting (never scientific), with -0.000000 folded to
/// 0.000000 so equal inputs emit byte-identical documents on any platform.
inline std::string format_fixed(double v, int precision) {
  const int len = std::snprintf(nullptr, 0, "%.*f", precision, v);
  std::string s(static_cast<std::size_t>(len), '\0');
  std::snprintf(s.data(), s.size() + 1, "%.*f", precision, v);
  if (s[0] == '-' && s.find_first_not_of("0.", 1) == std::string::npos) s.erase(0, 1);
  return s;
}

inline void check_style(const RenderStyle& style) {
  if (style.precision < 1) throw InvalidRangeError("render: precision must be >= 1");
  if (!(style.scale > 0.0)) throw InvalidRangeError("render: scale must be > 0");
}

/// Pixel frame: ring y grows upward, SVG y grows downward, so y is flipped
/// across the root tile's bounding-box height.
struct Frame {
  double scale = 0.0;
  double width = 0.0;
  double height = 0.0;
  int precision = 6;

  std::string points_of(const Hexagon& hex) const {
    std::string out;
    for (std::size_t i = 0; i < hex.size(); ++i) {
      if (i) out += ' ';
      out += format_fixed(scale * to_double(hex[i].x), precision);
      out += ',';
      out += format_fixed(height - scale * to_double(hex[i].y), precision);
    }
    return out;
  }
};

inline Frame make_frame(const RenderStyle& style) {
  Frame f;
  f.scale = style.scale;
  f.width = style.scale * to_double(GoldenNumber::phi());
  f.height = style.scale * to_double(GoldenNumber{0, 0, 0, 1}); // phi^(3/2)
  f.precision = style.precision;
  return f;
}

inline std::string document_open(const Frame& f) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"0 0 " +
         format_fixed(f.width, f.precision) + " " + format_fixed(f.height, f.precision) +
         "\">\n";
}

inline std::string polygon(const Frame& f, const Hexagon& hex, const std::string& fill,
                           const std::string& extra, const RenderStyle& style) {
  return "<polygon points=\"" + f.points_of(hex) + "\" fill=\"" + fill + "\"" + extra +
         " stroke=\"" + style.stroke + "\" stroke-width=\"" +
         format_fixed(style.stroke_width, style.precision) + "\"/>\n";
}

} // namespace detail

/// One filled polygon per tile, in collection order. Deterministic: equal
/// input and style give a byte-identical document.
inline std::string render_svg(const std::vector<PlacedTile>& tiles,
                              const RenderStyle& style = {}) {
  detail::check_style(style);
  if (tiles.empty()) throw InvalidRangeError("render_svg: empty tile collection");
  const detail::Frame frame = detail::make_frame(style);
  std::string out = detail::document_open(frame);
  for (const PlacedTile& tile : tiles) {
    const std::string& fill = tile.label == Label::Small ? style.fill_small : style.fill_big;
    out += detail::polygon(frame, apply_to_prototile(tile.sim), fill, "", style);
  }
  out += "</svg>\n";
  return out;
}

inline std::string render_svg(const TileCollection& tiles, const RenderStyle& style = {}) {
  return render_svg(tiles.tiles, style);
}

/// Rule diagram: the n-step children inside the parent outline, with the
/// masked (removed) children ghosted at 25% opacity under a cross-hatch.
inline std::string render_rule_diagram(int n, const BigInt& a, const BigInt& b,
                                       MaskStrategy strategy = MaskStrategy::First,
                                       std::uint64_t seed = 0,
                                       const RenderStyle& style = {}) {
  detail::check_style(style);
  const RuleExpansion exp = expand(n);
  const RemovalMask mask = make_mask(exp, a, b, strategy, seed);
  const detail::Frame frame = detail::make_frame(style);

  std::string out = detail::document_open(frame);
  out += "<defs>\n"
         "<pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" "
         "patternTransform=\"rotate(45)\">\n"
         "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555555\" stroke-width=\"1.5\"/>\n"
         "</pattern>\n"
         "</defs>\n";

  std::size_t next_removed = 0;
  for (std::size_t i = 0; i < exp.children.size(); ++i) {
    const PlacedTile& child = exp.children[i];
    const Hexagon hex = apply_to_prototile(child.sim);
    const std::string& fill =
        child.label == Label::Small ? style.fill_small : style.fill_big;
    const bool removed =
        next_removed < mask.removed.size() && mask.removed[next_removed] == i;
    if (removed) {
      ++next_removed;
      out += detail::polygon(frame, hex, fill, " fill-opacity=\"0.25\"", style);
      out += "<polygon points=\"" + frame.points_of(hex) +
             "\" fill=\"url(#hatch)\" stroke=\"none\"/>\n";
    } else {
      out += detail::polygon(frame, hex, fill, "", style);
    }
  }

  RenderStyle outline = style;
  outline.stroke_width = 2.0 * style.stroke_width;
  out += detail::polygon(frame, prototile_vertices(), "none", "", outline);
  out += "</svg>\n";
  return out;
}

} // namespace ammann
