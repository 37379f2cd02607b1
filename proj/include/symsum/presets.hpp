#pragma once

#include "symsum/manifold.hpp"

namespace symsum::presets {

/// T^4 blown up at n points: full rank-(6+n) lattice (three hyperbolic
/// blocks for the torus classes plus the exceptional divisors), K = sum E_i,
/// b1 = 4, b+ = 3.  The minimal model is aspherical, so the asserted
/// exceptional list is exactly {E_1..E_n}.
ManifoldModel t4_blowup(int n);

/// A minimal b+ = 1 model whose minimal model is neither rational nor ruled
/// (an elliptic-surface shape): working lattice U with K = fiber_mult * u,
/// asserted Chern pair (0, 12).  fiber_mult must be even and >= 2 so K stays
/// characteristic.
ManifoldModel elliptic_like(i64 fiber_mult = 2, std::string name = "elliptic-like");

/// Spin (hence minimal) model with c1^2 = 0, c2 = 24 and a square-zero torus
/// in the working lattice U.  c2 = 12 would force signature -8, which spin
/// manifolds cannot have, so 24 is the smallest admissible positive value.
ManifoldModel m_g_like(std::string name = "M_G");

/// Aspherical torus-bundle over a genus-2 surface: working lattice U with
/// the fiber-sum surface as a basis vector, K = 2G, asserted Chern (0, 0)
/// (Euler characteristic multiplicativity with signature 0 input).
ManifoldModel q2_like();

/// T^2 x Sigma_2: aspherical, minimal, b+ = 5; working lattice U spanned by
/// the fiber and section classes, K = 2 fhat.
ManifoldModel t2_x_sigma2_like();

} // namespace symsum::presets
