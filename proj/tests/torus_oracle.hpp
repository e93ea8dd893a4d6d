#pragma once

// Straight-line curves on the square torus x y x- y-, built by exact
// rational arithmetic, and the closed-form answers for them: intersection
// numbers |ps - qr| and the SL(2, Z) action of twists.

#include <memory>
#include <vector>

#include "mtw/drawing.hpp"

namespace oracle {

struct Slope {
  long p, q;
};

std::shared_ptr<const mtw::Schema> torus_schema();

// Word of the primitive (p, q) line; slots are ranks among its own strands.
std::vector<mtw::Crossing> torus_line(const mtw::Schema& s, Slope v);

long det(Slope a, Slope b);

// Right twist along c: v + det(v, c) c.
Slope twist(Slope c, long n, Slope v);

// Up to sign, with p > 0 or (p == 0 and q > 0).
Slope normalized(Slope v);

}  // namespace oracle
