#include "shacert/hyperelliptic.hpp"

namespace shacert {

const char* to_string(Chart chart) noexcept {
  return chart == Chart::Model1 ? "model1" : "model2";
}

namespace {

IntPoly tpoly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return IntPoly(IntegerRing{}, std::move(v));
}

}  // namespace

BivarPoly family_model1() {
  IntPolyT R;
  return BivarPoly(R, {
                          tpoly({-7, 0, 0, 0, 0, 0, -8}),  // -(8t^6 + 7)
                          tpoly({0, 0, 0, 0, 0, -1}),      // -t^5
                          tpoly({}), tpoly({}), tpoly({}),
                          tpoly({-1}),                     // -x^5
                          tpoly({-1}),                     // -x^6
                      });
}

BivarPoly family_model2() {
  IntPolyT R;
  return BivarPoly(R, {
                          tpoly({-8, 0, 0, 0, 0, 0, -7}),  // -(8 + 7T^6)
                          tpoly({-1}),                     // -X
                          tpoly({}), tpoly({}), tpoly({}),
                          tpoly({0, -1}),                  // -T X^5
                          tpoly({-1}),                     // -X^6
                      });
}

CurveModel<FqCtx> fiber_at_infinity(const FqCtx& F) {
  return specialize_fiber(F, Chart::Model2, F.zero());
}

namespace {

void require_odd(const FqCtx& F) {
  if (F.p() == 2) throw Error(ErrorKind::UnsupportedCharacteristic, "point counting needs odd q");
}

}  // namespace

int points_at_infinity(const CurveModel<FqCtx>& c) {
  const auto& F = c.f.ring();
  require_odd(F);
  if (c.f.is_zero()) throw Error(ErrorKind::Domain, "curve with f = 0");
  if (c.f.degree() % 2 != 0) return 1;
  return quadratic_character(F, c.f.leading()) == 1 ? 2 : 0;
}

PointCount count_points(const CurveModel<FqCtx>& c) {
  const auto& F = c.f.ring();
  require_odd(F);
  PointCount n;
  n.q = F.q();
  for (const auto& x : fq_enumerate(F)) n.affine += static_cast<std::uint64_t>(1 + quadratic_character(F, c.f(x)));
  n.infinity = points_at_infinity(c);
  n.total = n.affine + static_cast<std::uint64_t>(n.infinity);
  n.smooth = !c.degenerate() && is_squarefree(c.f).squarefree;
  return n;
}

bool within_weil_bound(const PointCount& n, int genus) {
  BigInt diff = BigInt(static_cast<unsigned long>(n.total)) - BigInt(static_cast<unsigned long>(n.q)) - 1;
  return diff * diff <= BigInt(4 * genus * genus) * BigInt(static_cast<unsigned long>(n.q));
}

std::optional<FqElem> least_square_root(const FqCtx& F, const FqElem& a) {
  for (const auto& y : fq_enumerate(F))
    if (F.mul(y, y) == a) return y;
  return std::nullopt;
}

std::optional<AffinePoint> has_nonsingular_affine_point(const CurveModel<FqCtx>& c) {
  const auto& F = c.f.ring();
  require_odd(F);
  const auto df = derivative(c.f);
  for (const auto& x : fq_enumerate(F)) {
    auto v = c.f(x);
    if (F.is_zero(v)) {
      if (!F.is_zero(df(x))) return AffinePoint{x, F.zero()};
      continue;
    }
    if (quadratic_character(F, v) == 1) return AffinePoint{x, *least_square_root(F, v)};
  }
  return std::nullopt;
}

bool verify_affine_witness(const CurveModel<FqCtx>& c, const AffinePoint& pt) {
  const auto& F = c.f.ring();
  if (F.mul(pt.y, pt.y) != c.f(pt.x)) return false;
  return !F.is_zero(pt.y) || !F.is_zero(derivative(c.f)(pt.x));
}

}  // namespace shacert
