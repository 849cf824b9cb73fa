#pragma once

#include "sdyn/bigfloat.hpp"
#include "sdyn/polynomial.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace sdyn {

using Point = std::vector<Rational>;

/// Draws integer points uniformly from [-radius, radius]^dim, rejecting any
/// point where one of `singular` has |value| < margin. Throws
/// PreconditionError when no admissible point turns up after many retries.
/// The sequence depends only on the generator state.
std::vector<Point> draw_lattice_points(int dim, int count, std::span<const Polynomial> singular,
                                       double margin, int radius, std::mt19937_64& rng);

std::vector<BigFloat> to_bigfloat(std::span<const Rational> point, int precision_bits);

std::string point_to_string(std::span<const Rational> point);

}  // namespace sdyn
