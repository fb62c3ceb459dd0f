#include "vondyck/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vondyck {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct Vec3 {
  double x, y, z;
};

Vec3 to_vec(SurfacePoint const& p) {
  return {p.x, p.y, p.z};
}
SurfacePoint to_point(Vec3 const& v) {
  return {v.x, v.y, v.z};
}
double dot(Vec3 const& u, Vec3 const& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}
Vec3 cross(Vec3 const& u, Vec3 const& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}
Vec3 scale(Vec3 const& v, double s) {
  return {v.x * s, v.y * s, v.z * s};
}
Vec3 add(Vec3 const& u, Vec3 const& v) {
  return {u.x + v.x, u.y + v.y, u.z + v.z};
}
Vec3 sub(Vec3 const& u, Vec3 const& v) {
  return {u.x - v.x, u.y - v.y, u.z - v.z};
}
Vec3 normalized(Vec3 const& v) {
  return scale(v, 1.0 / std::sqrt(dot(v, v)));
}

Vec3 mat_apply(std::array<double, 9> const& m, Vec3 const& v) {
  return {m[0] * v.x + m[1] * v.y + m[2] * v.z, m[3] * v.x + m[4] * v.y + m[5] * v.z,
          m[6] * v.x + m[7] * v.y + m[8] * v.z};
}

std::array<double, 9> mat_mul(std::array<double, 9> const& a, std::array<double, 9> const& b) {
  std::array<double, 9> r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) {
        s += a[3 * i + k] * b[3 * k + j];
      }
      r[3 * i + j] = s;
    }
  }
  return r;
}

// Mobius map sending c to 0 inside the disk.
cplx to_origin(cplx c, cplx z) {
  return (z - c) / (1.0 - std::conj(c) * z);
}
cplx from_origin(cplx c, cplx w) {
  return (w + c) / (1.0 + std::conj(c) * w);
}

// Orthonormal tangent frame (e1, e2) at c on the sphere, positively oriented
// with respect to the outward normal.
std::pair<Vec3, Vec3> tangent_frame(Vec3 const& c) {
  Vec3 ref{1, 0, 0};
  if (std::abs(c.x) > 0.9) {
    ref = {0, 1, 0};
  }
  Vec3 const e1 = normalized(sub(ref, scale(c, dot(ref, c))));
  Vec3 const e2 = cross(c, e1);
  return {e1, e2};
}

void require_same_model(Isometry const& g, Isometry const& h) {
  if (g.representation().index() != h.representation().index()) {
    throw std::invalid_argument("isometries belong to different surface models");
  }
}

}  // namespace

double euclidean_distance(SurfacePoint const& p, SurfacePoint const& q) noexcept {
  double const dx = p.x - q.x, dy = p.y - q.y, dz = p.z - q.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Isometry Isometry::identity(CurvatureClass model) {
  switch (model) {
    case CurvatureClass::Spherical:
      return Isometry(SphereRotation{});
    case CurvatureClass::Euclidean:
      return Isometry(PlaneMotion{});
    case CurvatureClass::Hyperbolic:
      return Isometry(DiskMobius{});
  }
  return Isometry();
}

CurvatureClass Isometry::model() const noexcept {
  switch (_rep.index()) {
    case 0:
      return CurvatureClass::Spherical;
    case 1:
      return CurvatureClass::Euclidean;
    default:
      return CurvatureClass::Hyperbolic;
  }
}

Isometry& Isometry::renormalize() {
  if (auto* r = std::get_if<SphereRotation>(&_rep)) {
    Vec3 r0{r->m[0], r->m[1], r->m[2]};
    Vec3 r1{r->m[3], r->m[4], r->m[5]};
    r0 = normalized(r0);
    r1 = normalized(sub(r1, scale(r0, dot(r0, r1))));
    Vec3 const r2 = cross(r0, r1);
    r->m = {r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z};
  } else if (auto* e = std::get_if<PlaneMotion>(&_rep)) {
    e->alpha /= std::abs(e->alpha);
  } else if (auto* h = std::get_if<DiskMobius>(&_rep)) {
    double const det = std::norm(h->p) - std::norm(h->q);
    double const s = 1.0 / std::sqrt(det);
    h->p *= s;
    h->q *= s;
  }
  return *this;
}

Isometry compose(Isometry const& g, Isometry const& h) {
  require_same_model(g, h);
  Isometry out;
  switch (g.model()) {
    case CurvatureClass::Spherical: {
      auto const& a = std::get<SphereRotation>(g.representation());
      auto const& b = std::get<SphereRotation>(h.representation());
      out = Isometry(SphereRotation{mat_mul(a.m, b.m)});
      break;
    }
    case CurvatureClass::Euclidean: {
      auto const& a = std::get<PlaneMotion>(g.representation());
      auto const& b = std::get<PlaneMotion>(h.representation());
      out = Isometry(PlaneMotion{a.alpha * b.alpha, a.alpha * b.beta + a.beta});
      break;
    }
    case CurvatureClass::Hyperbolic: {
      auto const& a = std::get<DiskMobius>(g.representation());
      auto const& b = std::get<DiskMobius>(h.representation());
      out = Isometry(
          DiskMobius{a.p * b.p + a.q * std::conj(b.q), a.p * b.q + a.q * std::conj(b.p)});
      break;
    }
  }
  out.renormalize();
  return out;
}

Isometry inverse(Isometry const& g) {
  switch (g.model()) {
    case CurvatureClass::Spherical: {
      auto const& m = std::get<SphereRotation>(g.representation()).m;
      return Isometry(SphereRotation{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}});
    }
    case CurvatureClass::Euclidean: {
      auto const& e = std::get<PlaneMotion>(g.representation());
      cplx const ai = std::conj(e.alpha);
      return Isometry(PlaneMotion{ai, -ai * e.beta});
    }
    case CurvatureClass::Hyperbolic: {
      auto const& h = std::get<DiskMobius>(g.representation());
      return Isometry(DiskMobius{std::conj(h.p), -h.q});
    }
  }
  return g;
}

SurfacePoint apply(Isometry const& g, SurfacePoint const& p) {
  switch (g.model()) {
    case CurvatureClass::Spherical:
      return to_point(mat_apply(std::get<SphereRotation>(g.representation()).m, to_vec(p)));
    case CurvatureClass::Euclidean: {
      auto const& e = std::get<PlaneMotion>(g.representation());
      return SurfacePoint::from_complex(e.alpha * p.complex() + e.beta);
    }
    case CurvatureClass::Hyperbolic: {
      auto const& h = std::get<DiskMobius>(g.representation());
      cplx const z = p.complex();
      return SurfacePoint::from_complex((h.p * z + h.q) / (std::conj(h.q) * z + std::conj(h.p)));
    }
  }
  return p;
}

Isometry rotation_about(CurvatureClass model, SurfacePoint const& center, double angle) {
  switch (model) {
    case CurvatureClass::Spherical: {
      Vec3 const n = normalized(to_vec(center));
      double const c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
      SphereRotation r;
      r.m = {c + t * n.x * n.x,       t * n.x * n.y - s * n.z, t * n.x * n.z + s * n.y,
             t * n.x * n.y + s * n.z, c + t * n.y * n.y,       t * n.y * n.z - s * n.x,
             t * n.x * n.z - s * n.y, t * n.y * n.z + s * n.x, c + t * n.z * n.z};
      return Isometry(r);
    }
    case CurvatureClass::Euclidean: {
      cplx const rot = std::polar(1.0, angle);
      cplx const c = center.complex();
      return Isometry(PlaneMotion{rot, c - rot * c});
    }
    case CurvatureClass::Hyperbolic: {
      cplx const c = center.complex();
      double const s = std::sqrt(1.0 - std::norm(c));
      Isometry const shift(DiskMobius{cplx(1.0 / s), c / s});
      Isometry const spin(DiskMobius{std::polar(1.0, angle / 2), cplx(0.0)});
      return compose(shift, compose(spin, inverse(shift)));
    }
  }
  return Isometry::identity(model);
}

double surface_distance(CurvatureClass model, SurfacePoint const& p, SurfacePoint const& q) {
  switch (model) {
    case CurvatureClass::Spherical: {
      Vec3 const u = to_vec(p), v = to_vec(q);
      Vec3 const w = cross(u, v);
      return std::atan2(std::sqrt(dot(w, w)), dot(u, v));
    }
    case CurvatureClass::Euclidean:
      return std::abs(p.complex() - q.complex());
    case CurvatureClass::Hyperbolic: {
      double const r = std::abs(to_origin(p.complex(), q.complex()));
      return 2.0 * std::atanh(r);
    }
  }
  return 0;
}

double local_angle(CurvatureClass model, SurfacePoint const& center, SurfacePoint const& p) {
  switch (model) {
    case CurvatureClass::Spherical: {
      Vec3 const c = normalized(to_vec(center));
      auto const [e1, e2] = tangent_frame(c);
      Vec3 const v = to_vec(p);
      return std::atan2(dot(v, e2), dot(v, e1));
    }
    case CurvatureClass::Euclidean:
      return std::arg(p.complex() - center.complex());
    case CurvatureClass::Hyperbolic:
      return std::arg(to_origin(center.complex(), p.complex()));
  }
  return 0;
}

double ccw_turn(CurvatureClass model, SurfacePoint const& center, SurfacePoint const& from,
                SurfacePoint const& to) {
  double t = local_angle(model, center, to) - local_angle(model, center, from);
  t = std::fmod(t, 2 * kPi);
  if (t < 0) {
    t += 2 * kPi;
  }
  return t;
}

SurfacePoint geodesic_midpoint(CurvatureClass model, SurfacePoint const& p,
                               SurfacePoint const& q) {
  switch (model) {
    case CurvatureClass::Spherical:
      return to_point(normalized(add(to_vec(p), to_vec(q))));
    case CurvatureClass::Euclidean:
      return SurfacePoint::from_complex(0.5 * (p.complex() + q.complex()));
    case CurvatureClass::Hyperbolic: {
      cplx const c = p.complex();
      cplx const w = to_origin(c, q.complex());
      double const r = std::abs(w);
      if (r == 0.0) {
        return p;
      }
      double const half = std::tanh(0.5 * std::atanh(r));
      return SurfacePoint::from_complex(from_origin(c, w / r * half));
    }
  }
  return p;
}

SurfacePoint reflect_in_geodesic(CurvatureClass model, SurfacePoint const& p,
                                 SurfacePoint const& q, SurfacePoint const& point) {
  switch (model) {
    case CurvatureClass::Spherical: {
      Vec3 const n = normalized(cross(to_vec(p), to_vec(q)));
      Vec3 const v = to_vec(point);
      return to_point(sub(v, scale(n, 2.0 * dot(v, n))));
    }
    case CurvatureClass::Euclidean: {
      cplx const u = (q.complex() - p.complex()) / std::abs(q.complex() - p.complex());
      cplx const z = point.complex() - p.complex();
      return SurfacePoint::from_complex(p.complex() + u * u * std::conj(z));
    }
    case CurvatureClass::Hyperbolic: {
      cplx const c = p.complex();
      cplx const w = to_origin(c, q.complex());
      cplx const u = w / std::abs(w);
      cplx const z = to_origin(c, point.complex());
      return SurfacePoint::from_complex(from_origin(c, u * u * std::conj(z)));
    }
  }
  return point;
}

double interior_angle(CurvatureClass model, Triangle const& t, VertexType at) {
  SurfacePoint const* v = &t.vA;
  SurfacePoint const* p = &t.vB;
  SurfacePoint const* q = &t.vO;
  if (at == VertexType::B) {
    v = &t.vB;
    p = &t.vO;
    q = &t.vA;
  } else if (at == VertexType::O) {
    v = &t.vO;
    p = &t.vA;
    q = &t.vB;
  }
  double const turn = ccw_turn(model, *v, *p, *q);
  return std::min(turn, 2 * kPi - turn);
}

Triangle build_basic_triangle(VonDyckParams const& params) {
  CurvatureClass const model = classify_curvature(params);
  double const alpha = kPi / params.a;
  double const beta = kPi / params.b;
  double const gamma = kPi / params.c;
  // Lengths of OA (opposite B) and OB (opposite A).
  double oa = 0, ob = 0;
  if (model == CurvatureClass::Euclidean) {
    oa = std::sin(beta) / std::sin(gamma);
    ob = std::sin(alpha) / std::sin(gamma);
  } else {
    double const cos_oa =
        (std::cos(beta) + std::cos(alpha) * std::cos(gamma)) / (std::sin(alpha) * std::sin(gamma));
    double const cos_ob =
        (std::cos(alpha) + std::cos(beta) * std::cos(gamma)) / (std::sin(beta) * std::sin(gamma));
    if (model == CurvatureClass::Spherical) {
      oa = std::acos(std::clamp(cos_oa, -1.0, 1.0));
      ob = std::acos(std::clamp(cos_ob, -1.0, 1.0));
    } else {
      oa = std::acosh(cos_oa);
      ob = std::acosh(cos_ob);
    }
  }
  auto place = [&](double dist, double azimuth) -> SurfacePoint {
    switch (model) {
      case CurvatureClass::Spherical:
        return {std::sin(dist) * std::cos(azimuth), std::sin(dist) * std::sin(azimuth),
                std::cos(dist)};
      case CurvatureClass::Euclidean:
        return SurfacePoint::from_complex(std::polar(dist, azimuth));
      case CurvatureClass::Hyperbolic:
        return SurfacePoint::from_complex(std::polar(std::tanh(dist / 2), azimuth));
    }
    return {};
  };
  Triangle t;
  t.vO = model == CurvatureClass::Spherical ? SurfacePoint{0, 0, 1} : SurfacePoint{};
  t.vA = place(oa, 0.0);
  t.vB = place(ob, gamma);
  return t;
}

std::size_t FingerprintHash::operator()(Fingerprint const& f) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (std::int64_t v : f) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::array<double, 9> probe_images(Isometry const& g, Triangle const& probe) {
  SurfacePoint const a = apply(g, probe.vA);
  SurfacePoint const b = apply(g, probe.vB);
  SurfacePoint const o = apply(g, probe.vO);
  return {a.x, a.y, a.z, b.x, b.y, b.z, o.x, o.y, o.z};
}

Fingerprint quantize(std::span<double const> values, double step) {
  Fingerprint f{};
  for (std::size_t i = 0; i < values.size() && i < f.size(); ++i) {
    f[i] = std::llround(values[i] / step);
  }
  return f;
}

Fingerprint fingerprint(Isometry const& g, Triangle const& probe, double step) {
  auto const images = probe_images(g, probe);
  return quantize(images, step);
}

std::vector<Fingerprint> quantization_candidates(std::span<double const> values, double step) {
  constexpr double kHair = 1e-3;
  std::vector<Fingerprint> out{quantize(values, step)};
  for (std::size_t i = 0; i < values.size() && i < out.front().size(); ++i) {
    double const t = values[i] / step;
    double const frac = t - std::floor(t);
    if (std::abs(frac - 0.5) >= kHair) {
      continue;
    }
    std::int64_t const other = out.front()[i] == static_cast<std::int64_t>(std::floor(t))
                                   ? static_cast<std::int64_t>(std::floor(t)) + 1
                                   : static_cast<std::int64_t>(std::floor(t));
    std::size_t const n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      Fingerprint f = out[k];
      f[i] = other;
      out.push_back(f);
    }
  }
  return out;
}

std::optional<std::int32_t> QuantizedIndex::find(std::span<double const> values) const {
  for (Fingerprint const& key : quantization_candidates(values, _step)) {
    if (auto it = _map.find(key); it != _map.end()) {
      return it->second;
    }
  }
  return std::nullopt;
}

std::int32_t QuantizedIndex::insert(std::span<double const> values, std::int32_t id) {
  if (auto found = find(values)) {
    return *found;
  }
  _map.emplace(quantize(values, _step), id);
  return id;
}

double max_probe_displacement(Isometry const& g, Triangle const& probe) {
  return std::max({euclidean_distance(apply(g, probe.vA), probe.vA),
                   euclidean_distance(apply(g, probe.vB), probe.vB),
                   euclidean_distance(apply(g, probe.vO), probe.vO)});
}

DyckGeometry::DyckGeometry(VonDyckParams const& p)
    : _params(p), _model(classify_curvature(p)), _triangle(build_basic_triangle(p)) {
  Isometry const x = rotation_about(_model, _triangle.vA, 2 * kPi / p.a);
  Isometry const y = rotation_about(_model, _triangle.vB, 2 * kPi / p.b);
  _generators[index(Letter::X)] = x;
  _generators[index(Letter::Y)] = y;
  _generators[index(Letter::Xinv)] = inverse(x);
  _generators[index(Letter::Yinv)] = inverse(y);
}

Isometry DyckGeometry::evaluate(Word const& w) const {
  Isometry g = identity();
  for (Letter l : w) {
    g = compose(g, generator(l));
  }
  return g;
}

Isometry generator_isometry(VonDyckParams const& p, Letter l) {
  return DyckGeometry(p).generator(l);
}

Isometry evaluate_word(Word const& w, VonDyckParams const& p) {
  return DyckGeometry(p).evaluate(w);
}

}  // namespace vondyck
