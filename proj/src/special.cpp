#include "rhls/special.hpp"

#include <cmath>
#include <numbers>

#include "rhls/errors.hpp"

namespace rhls {

double gamma_half(int twice_x) {
    if (twice_x < 1) throw InvalidIndex("gamma_half requires a positive half-integer");
    if (twice_x == 1) return std::sqrt(std::numbers::pi);
    if (twice_x == 2) return 1.0;
    return (twice_x - 2) * 0.5 * gamma_half(twice_x - 2);
}

double unit_ball_volume(int n) {
    if (n < 1) throw InvalidIndex("unit_ball_volume requires n >= 1");
    return std::pow(std::numbers::pi, n * 0.5) / gamma_half(n + 2);
}

double sphere_surface_area(int m) {
    if (m < 0) throw InvalidIndex("sphere_surface_area requires m >= 0");
    return 2.0 * std::pow(std::numbers::pi, (m + 1) * 0.5) / gamma_half(m + 1);
}

}  // namespace rhls
