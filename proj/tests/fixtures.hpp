#pragma once

#include <string>

#include "clutterlab/clutter.hpp"

namespace fixtures {

inline clutterlab::Clutter parse(const std::string& text) { return clutterlab::parse_clutter(text); }

inline clutterlab::Clutter single_edge() { return parse("v: x1 x2\ne: x1 x2\n"); }
inline clutterlab::Clutter triangle() { return parse("v: x1 x2 x3\ne: x1 x2\ne: x2 x3\ne: x1 x3\n"); }
inline clutterlab::Clutter singletons() { return parse("v: x1 x2\ne: x1\ne: x2\n"); }

/// Graph cycle on x1..xn.
inline clutterlab::Clutter cycle(std::size_t n) {
  std::string text = "v:";
  for (std::size_t i = 1; i <= n; ++i) text += " x" + std::to_string(i);
  text += "\n";
  for (std::size_t i = 1; i <= n; ++i) {
    text += "e: x" + std::to_string(i) + " x" + std::to_string(i % n + 1) + "\n";
  }
  return parse(text);
}

inline clutterlab::Clutter two_triangles() {
  return parse("v: x1 x2 x3 x4 x5 x6\ne: x1 x2\ne: x2 x3\ne: x1 x3\ne: x4 x5\ne: x5 x6\ne: x4 x6\n");
}

inline clutterlab::Clutter path(std::size_t n) {
  std::string text = "v:";
  for (std::size_t i = 1; i <= n; ++i) text += " x" + std::to_string(i);
  text += "\n";
  for (std::size_t i = 1; i < n; ++i) text += "e: x" + std::to_string(i) + " x" + std::to_string(i + 1) + "\n";
  return parse(text);
}

}  // namespace fixtures
