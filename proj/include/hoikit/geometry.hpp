// Copyright (C) 2026 The hoikit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <array>
#include <string>

#include "hoikit/error.hpp"

namespace hoikit {

// Axis-aligned bounding box in center form, absolute pixel units.
// Interchange files carry corner form [x1,y1,x2,y2]; conversion happens at
// the file boundary. Zero-area and negative-size boxes are rejected rather
// than clamped.
struct BBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;

  BBox() = default;

  BBox(double cx_, double cy_, double w_, double h_) : cx(cx_), cy(cy_), w(w_), h(h_) {
    if (!(w > 0.0) || !(h > 0.0)) {
      throw ValidationError("BBox requires positive width and height, got w=" +
                            std::to_string(w_) + " h=" + std::to_string(h_));
    }
  }

  static BBox from_corners(double x1, double y1, double x2, double y2) {
    if (!(x2 > x1) || !(y2 > y1)) {
      throw ValidationError("corner box requires x2 > x1 and y2 > y1, got [" +
                            std::to_string(x1) + ", " + std::to_string(y1) + ", " +
                            std::to_string(x2) + ", " + std::to_string(y2) + "]");
    }
    return BBox(0.5 * (x1 + x2), 0.5 * (y1 + y2), x2 - x1, y2 - y1);
  }

  double x1() const { return cx - 0.5 * w; }
  double y1() const { return cy - 0.5 * h; }
  double x2() const { return cx + 0.5 * w; }
  double y2() const { return cy + 0.5 * h; }

  std::array<double, 4> corners() const { return {x1(), y1(), x2(), y2()}; }

  double area() const { return w * h; }
};

inline double intersection_area(const BBox& a, const BBox& b) {
  const double ox = std::min(a.x2(), b.x2()) - std::max(a.x1(), b.x1());
  const double oy = std::min(a.y2(), b.y2()) - std::max(a.y1(), b.y1());
  if (ox <= 0.0 || oy <= 0.0) return 0.0;
  return ox * oy;
}

inline double iou(const BBox& a, const BBox& b) {
  const double inter = intersection_area(a, b);
  if (inter <= 0.0) return 0.0;
  return inter / (a.area() + b.area() - inter);
}

}  // namespace hoikit
