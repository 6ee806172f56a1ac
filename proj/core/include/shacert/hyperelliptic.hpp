#pragma once

// The genus-2 family
//   chart 1:  y^2 = -(x^6 + x^5 + t^5 x + 8 t^6 + 7)
//   chart 2:  Y^2 = -(X^6 + T X^5 + X + 8 + 7 T^6),   X = x/t, Y = y/t^3, T = 1/t
// and point counting on y^2 = f(x) over finite fields.

#include <cstdint>
#include <optional>
#include <string>

#include "shacert/finitefield.hpp"

namespace shacert {

enum class Chart { Model1, Model2 };

const char* to_string(Chart chart) noexcept;

/// Right-hand side of chart 1 as a polynomial in x over Z[t].
BivarPoly family_model1();
/// Right-hand side of chart 2 as a polynomial in X over Z[T].
BivarPoly family_model2();

template <class Field>
struct CurveModel {
  Poly<Field> f;
  Chart chart = Chart::Model1;
  /// e.g. "t=2" or "T=0".
  std::string param;

  /// deg f outside {5, 6}; such inputs are accepted but flagged.
  bool degenerate() const { return f.degree() != 5 && f.degree() != 6; }
};

/// Substitutes t (chart 1) or T (chart 2) = `value` and reduces the
/// coefficients into `F`.
template <class Field>
CurveModel<Field> specialize_fiber(const Field& F, Chart chart, const typename Field::Elem& value) {
  const BivarPoly family = chart == Chart::Model1 ? family_model1() : family_model2();
  auto f = map_coeffs(family, F, [&](const IntPoly& c) {
    auto acc = F.zero();
    for (auto it = c.coeffs().rbegin(); it != c.coeffs().rend(); ++it)
      acc = F.add(F.mul(acc, value), F.from_int(*it));
    return acc;
  });
  std::string name = chart == Chart::Model1 ? "t=" : "T=";
  return CurveModel<Field>{std::move(f), chart, name + F.format(value)};
}

/// Chart 2 at T = 0, the residue datum for v_p(t) < 0.
CurveModel<FqCtx> fiber_at_infinity(const FqCtx& F);

struct PointCount {
  std::uint64_t q = 0;
  std::uint64_t affine = 0;
  int infinity = 0;
  std::uint64_t total = 0;
  /// f squarefree of degree 5 or 6, so the count is that of a genus-2 curve.
  bool smooth = false;
};

/// 0, 1 or 2 points at infinity on the smooth model of y^2 = f(x): one for
/// odd degree, two when lc(f) is a nonzero square (even degree), else none.
int points_at_infinity(const CurveModel<FqCtx>& c);

/// q odd. affine = sum_x (1 + chi(f(x))), plus points_at_infinity.
PointCount count_points(const CurveModel<FqCtx>& c);

/// (N - q - 1)^2 <= 4 g^2 q.
bool within_weil_bound(const PointCount& n, int genus);

struct AffinePoint {
  FqElem x;
  FqElem y;
};

/// Least x in enumeration order carrying a point (x, y) with y != 0 or
/// f'(x) != 0; y is the least square root in enumeration order.
std::optional<AffinePoint> has_nonsingular_affine_point(const CurveModel<FqCtx>& c);

/// y^2 = f(x) and (y != 0 or f'(x) != 0), by direct substitution.
bool verify_affine_witness(const CurveModel<FqCtx>& c, const AffinePoint& pt);

/// Least y in enumeration order with y^2 = a, if any.
std::optional<FqElem> least_square_root(const FqCtx& F, const FqElem& a);

}  // namespace shacert
