#pragma once

#include <algorithm>
#include <cstdint>

namespace fomo {

/// Axis-aligned rectangle in integer pixel coordinates, top-left origin.
/// Width/height are extents; the right/bottom edges are exclusive.
struct BoundingBox {
  int x = 0;
  int y = 0;
  int w = 0;
  int h = 0;

  long long area() const { return static_cast<long long>(w) * h; }
  int right() const { return x + w; }
  int bottom() const { return y + h; }
  bool empty() const { return w <= 0 || h <= 0; }

  bool operator==(const BoundingBox& o) const {
    return x == o.x && y == o.y && w == o.w && h == o.h;
  }
  bool operator!=(const BoundingBox& o) const { return !(*this == o); }
};

inline BoundingBox intersect_box(const BoundingBox& a, const BoundingBox& b) {
  const int x0 = std::max(a.x, b.x);
  const int y0 = std::max(a.y, b.y);
  const int x1 = std::min(a.right(), b.right());
  const int y1 = std::min(a.bottom(), b.bottom());
  if (x1 <= x0 || y1 <= y0) return BoundingBox{0, 0, 0, 0};
  return BoundingBox{x0, y0, x1 - x0, y1 - y0};
}

inline bool overlaps(const BoundingBox& a, const BoundingBox& b) {
  return !intersect_box(a, b).empty();
}

/// Smallest box covering both inputs.
inline BoundingBox union_box(const BoundingBox& a, const BoundingBox& b) {
  const int x0 = std::min(a.x, b.x);
  const int y0 = std::min(a.y, b.y);
  const int x1 = std::max(a.right(), b.right());
  const int y1 = std::max(a.bottom(), b.bottom());
  return BoundingBox{x0, y0, x1 - x0, y1 - y0};
}

/// Clamp a box to the [0,0,w,h) frame. May come back empty.
inline BoundingBox clamp_box(const BoundingBox& b, int frame_w, int frame_h) {
  return intersect_box(b, BoundingBox{0, 0, frame_w, frame_h});
}

/// Rectangle with fractional coordinates. Detections live in this form until
/// they are rounded into scene space.
struct BoxF {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
};

inline BoxF to_boxf(const BoundingBox& b) {
  return BoxF{static_cast<double>(b.x), static_cast<double>(b.y),
              static_cast<double>(b.w), static_cast<double>(b.h)};
}

inline BoxF intersect_boxf(const BoxF& a, const BoxF& b) {
  const double x0 = std::max(a.x, b.x);
  const double y0 = std::max(a.y, b.y);
  const double x1 = std::min(a.x + a.w, b.x + b.w);
  const double y1 = std::min(a.y + a.h, b.y + b.h);
  if (x1 <= x0 || y1 <= y0) return BoxF{0, 0, 0, 0};
  return BoxF{x0, y0, x1 - x0, y1 - y0};
}

}  // namespace fomo
