// Rack products as printed for each catalog entry, transcribed term by term
// (including terms that disagree with g^{-1} h g chi(h,g); cross_check_modes
// reports those).
#include <stdexcept>

#include "symleib/rack.hpp"

namespace symleib {

namespace {

Scalar param(const ParamMap& p, Symbol s) {
  auto it = p.find(s);
  return it == p.end() ? Scalar(0) : Scalar(it->second);
}

const Scalar kHalf(Rational(1, 2));

CoordOp g31_display(int variant, Scalar eps, Scalar gam) {
  return [=](const Vector& h, const Vector& g) {
    const Scalar &X = h[0], &Y = h[1], &Z = h[2];
    const Scalar &B = g[1], &C = g[2];
    Scalar xs;
    switch (variant) {
      case 1: xs = Y * B + Scalar(2) * C * Y + Z * C + X; break;
      case 2: xs = -B * Z + C * Y + Z * C + X; break;
      case 3: xs = eps * Z * C + Y * B - B * Z + C * Y + X; break;
      default: xs = gam * B * Z + gam * C * Y - B * Z + C * Y + X; break;
    }
    return Vector{xs, Y, Z};
  };
}

CoordOp g21_display(int variant, Scalar gam, GroupPtr grp) {
  if (variant == 1)  // printed as the conjugation rack
    return [grp](const Vector& h, const Vector& g) { return grp->mul(grp->mul(grp->inv(g), h), g); };
  return [=](const Vector& h, const Vector& g) {
    const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
    const Scalar &T = g[0], &A = g[1], &C = g[3];
    Scalar ws = -T * exp(A) + exp(A) * W + T * exp(A - X);
    Scalar ys = Y, zs = Z;
    switch (variant) {
      case 2: ys = A * X + Y; zs = A * X + Z; break;
      case 3: ys = A * X + Y; break;
      case 4: ys = X * C + Z * A + Y; break;
      default: ys = gam * X * A + Y; break;
    }
    return Vector{ws, X, ys, zs};
  };
}

CoordOp g31r_display(int variant, Scalar eps, Scalar gam) {
  return [=](const Vector& h, const Vector& g) {
    const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
    const Scalar &A = g[1], &B = g[2];
    Scalar ws;
    switch (variant) {
      case 1: ws = A * X + Scalar(2) * B * X + Y * B + W; break;
      case 2: ws = -A * Y + B * X + Y * B + W; break;
      case 3: ws = X * A - Y * A + X * B + eps * Y * B + W; break;
      default: ws = gam * A * Y + gam * B * X - Y * A + X * B + W; break;
    }
    return Vector{ws, X, Y, Z};
  };
}

Vector g32_display(const Vector& h, const Vector& g) {
  const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
  const Scalar &T = g[0], &A = g[1], &B = g[2];
  Scalar xs = (X - A) * exp(-B) + A * exp(-B + Y);
  Scalar ws = (B * X - A * B) * exp(-B) + exp(-B + Y) * (A * B - A * Y) + (W - T) * exp(-B) * T + T * exp(-B + Y);
  return {ws, xs, Y, Y * B + Z};
}

Vector g33_display(const Vector& h, const Vector& g) {
  const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
  const Scalar &T = g[0], &A = g[1], &B = g[2];
  return {-T * exp(-B) + exp(-B) * W + T * exp(-B + Y), -A * exp(-B) + exp(-B) * X + A * exp(-B + Y), Y, Y * B + Z};
}

CoordOp g34_display(Scalar al) {
  return [=](const Vector& h, const Vector& g) {
    const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
    const Scalar &T = g[0], &A = g[1], &B = g[2];
    Scalar f1 = exp(al * (Y - B)), f2 = exp(-al * B);
    Scalar ws = (sinh(Y - B) * A + cosh(Y - B) * T) * f1 + (sinh(B) * (X - A) + cosh(B) * (W - T)) * f2;
    Scalar xs = (sinh(Y - B) * T + cosh(Y - B) * A) * f1 + (sinh(B) * (W - T) + cosh(B) * (X - A)) * f2;
    return Vector{ws, xs, Y, Y * B + Z};
  };
}

CoordOp g35_display(Scalar al) {
  return [=](const Vector& h, const Vector& g) {
    const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
    const Scalar &T = g[0], &A = g[1], &B = g[2];
    Scalar f1 = exp(al * (Y - B)), f2 = exp(-al * B);
    Scalar ws = sin(Y - B) * A * f1 + cos(Y - B) * T * f1 + sin(B) * (X - A) * f2 + cos(B) * (W - T) * f2;
    // the printed x-entry carries no e^{alpha(y-b)} factor on its second term
    Scalar xs = sin(Y - B) * T * f1 + cos(Y - B) * A + sin(B) * (T - W) * f2 + cos(B) * (X - A) * f2;
    return Vector{ws, xs, Y, Y * B + Z};
  };
}

CoordOp g41_display(int variant, Scalar eps) {
  return [=](const Vector& h, const Vector& g) {
    const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
    const Scalar &T = g[0], &A = g[1], &B = g[2], &C = g[3];
    Scalar chi;
    switch (variant) {
      case 1: chi = Y * B + eps * Z * C; break;
      case 2: chi = eps * Z * C; break;
      default: chi = Y * C + Z * B; break;
    }
    // (1,4) entry of the displayed matrix, grouping kept as printed
    Scalar ws = W + kHalf * C * C * Y + kHalf * B * Z * Z + chi * (Scalar(1) + Z) - B * C * Z + C * (X - W) + Z * (T - A);
    // (2,4) entry
    Scalar d = B * Z - C * Y + W - X + chi;
    return Vector{ws, ws - d, Y, Z};
  };
}

CoordOp g43_display(int variant, Scalar eps) {
  return [=](const Vector& h, const Vector& g) {
    const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
    const Scalar &T = g[0], &B = g[2], &C = g[3];
    Scalar ws = T * exp(C - Z) + exp(C) * (W - T);
    Scalar xs;
    switch (variant) {
      case 1: xs = C * Y - B * Z + X + Z * C; break;
      case 2: xs = C * Y - B * Z + X + (Y * B + eps * Z * C); break;
      default: xs = C * Y - B * Z + X + eps * (Y * C + Z * B); break;
    }
    return Vector{ws, xs, Y, Z};
  };
}

Vector g48_display(const Vector& h, const Vector& g) {
  const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
  const Scalar &A = g[1], &B = g[2], &C = g[3];
  return {W + Z * C + A * exp(-C) * (B + Y - B * exp(Z)), A + X * exp(C) - A * exp(Z),
          (Y - B) * exp(-C) + B * exp(Z - C), Z};
}

Vector g49_display(const Vector& h, const Vector& g) {
  const Scalar &W = h[0], &X = h[1], &Y = h[2], &Z = h[3];
  const Scalar &A = g[1], &B = g[2], &C = g[3];
  Scalar cz = cos(Z), sz = sin(Z);
  // (1,4) entry equals -2w'
  Scalar e14 = cz * A * Y - cz * B * X + sz * A * A - sz * A * X + sz * B * B - sz * B * Y - Scalar(2) * Z * C + A * Y -
               B * X - Scalar(2) * W;
  Scalar ys = cos(C - Z) * B + sin(C - Z) * A + cos(C) * (Y - B) + sin(C) * (A - X);
  Scalar xs = cos(C - Z) * A - sin(C - Z) * B + cos(C) * (X - A) + sin(C) * (Y - B);
  return {-e14 / Scalar(2), xs, ys, Z};
}

}  // namespace

std::optional<CoordOp> closed_form_op(const CatalogEntry& e, const ParamMap& p) {
  check_admissible(e, p);
  Scalar eps = param(p, Symbol::epsilon), gam = param(p, Symbol::gamma), al = param(p, Symbol::alpha);
  const std::string& id = e.group_id;
  if (id == "G31") return g31_display(e.variant, eps, gam);
  if (id == "G21xR2") return g21_display(e.variant, gam, make_group(id, p));
  if (id == "G31xR") return g31r_display(e.variant, eps, gam);
  if (id == "G32xR") return CoordOp(g32_display);
  if (id == "G33xR") return CoordOp(g33_display);
  if (id == "G34_0xR") return g34_display(Scalar(0));
  if (id == "G34_axR") return g34_display(al);
  if (id == "G35_0xR") return g35_display(Scalar(0));
  if (id == "G35_axR") return g35_display(al);
  if (id == "G41") return g41_display(e.variant, eps);
  if (id == "G43") return g43_display(e.variant, eps);
  if (id == "G48") return CoordOp(g48_display);
  if (id == "G49") return CoordOp(g49_display);
  return std::nullopt;
}

}  // namespace symleib
