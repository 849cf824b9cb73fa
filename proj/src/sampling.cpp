#include "sdyn/sampling.hpp"

#include "sdyn/errors.hpp"

namespace sdyn {

std::vector<Point> draw_lattice_points(int dim, int count, std::span<const Polynomial> singular,
                                       double margin, int radius, std::mt19937_64& rng) {
  const Rational margin_q(margin);
  const auto width = static_cast<std::uint64_t>(2 * radius + 1);
  const int max_attempts = 1000 * (count + 1);

  std::vector<Point> points;
  points.reserve(static_cast<std::size_t>(count));
  for (int attempt = 0; static_cast<int>(points.size()) < count; ++attempt) {
    if (attempt >= max_attempts) {
      throw PreconditionError("could not find " + std::to_string(count) +
                              " sample points away from the singular set");
    }
    Point p(static_cast<std::size_t>(dim));
    for (auto& coord : p) coord = Rational(static_cast<long>(rng() % width) - radius);
    bool admissible = true;
    for (const auto& form : singular) {
      if (abs(form.evaluate(p)) < margin_q) {
        admissible = false;
        break;
      }
    }
    if (admissible) points.push_back(std::move(p));
  }
  return points;
}

std::vector<BigFloat> to_bigfloat(std::span<const Rational> point, int precision_bits) {
  std::vector<BigFloat> out;
  out.reserve(point.size());
  for (const auto& c : point) out.emplace_back(c, precision_bits);
  return out;
}

std::string point_to_string(std::span<const Rational> point) {
  std::string out = "(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) out += ", ";
    out += point[i].get_str();
  }
  return out + ")";
}

}  // namespace sdyn
