#pragma once

namespace rhls {

// Gamma at half-integer arguments: gamma_half(m) = Gamma(m/2), m >= 1.
// Gamma(1/2) = sqrt(pi), Gamma(1) = 1, then the recursion Gamma(x+1) = x Gamma(x).
double gamma_half(int twice_x);

// Volume of the unit ball in R^n: pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

// Surface area of the unit sphere S^m in R^{m+1}: 2 pi^{(m+1)/2} / Gamma((m+1)/2).
// Convention: S^0 consists of two points, area 2.
double sphere_surface_area(int m);

}  // namespace rhls
