// Surface models (unit sphere, Euclidean plane, Poincare disk), their
// orientation-preserving isometries, the basic triangle T0 and fingerprints.

#ifndef VONDYCK_GEOMETRY_HPP_
#define VONDYCK_GEOMETRY_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "vondyck/presentation.hpp"

namespace vondyck {

// Tolerance for identity tests on isometries and points.
inline constexpr double kIdentityTolerance = 1e-9;
// Quantization step of fingerprints.
inline constexpr double kFingerprintStep = 1e-6;

// Sphere points use all three coordinates; plane and disk points use (x, y).
struct SurfacePoint {
  double x = 0;
  double y = 0;
  double z = 0;

  std::complex<double> complex() const noexcept { return {x, y}; }
  static SurfacePoint from_complex(std::complex<double> w) noexcept {
    return {w.real(), w.imag(), 0.0};
  }
};

double euclidean_distance(SurfacePoint const& p, SurfacePoint const& q) noexcept;

struct SphereRotation {
  // Row-major 3x3 orthogonal matrix with determinant +1.
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};
};

// z -> alpha z + beta with |alpha| = 1.
struct PlaneMotion {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
};

// z -> (p z + q) / (conj(q) z + conj(p)) with |p|^2 - |q|^2 = 1.
struct DiskMobius {
  std::complex<double> p{1.0, 0.0};
  std::complex<double> q{0.0, 0.0};
};

class Isometry {
 public:
  using Representation = std::variant<SphereRotation, PlaneMotion, DiskMobius>;

  Isometry() = default;
  explicit Isometry(Representation rep) : _rep(rep) {}

  static Isometry identity(CurvatureClass model);

  CurvatureClass model() const noexcept;
  Representation const& representation() const noexcept { return _rep; }

  // Rescales a Mobius pair to unit form and re-orthonormalizes rotations.
  Isometry& renormalize();

 private:
  Representation _rep{PlaneMotion{}};
};

// compose(g, h) is g after h. Throws std::invalid_argument on model mismatch.
Isometry compose(Isometry const& g, Isometry const& h);
Isometry inverse(Isometry const& g);
SurfacePoint apply(Isometry const& g, SurfacePoint const& p);

// Counterclockwise rotation by `angle` about `center`.
Isometry rotation_about(CurvatureClass model, SurfacePoint const& center, double angle);

// Intrinsic geodesic distance in the model.
double surface_distance(CurvatureClass model, SurfacePoint const& p, SurfacePoint const& q);

// Direction of the geodesic from `center` towards `p`, as an angle in
// (-pi, pi] measured counterclockwise in a fixed chart at `center`.
double local_angle(CurvatureClass model, SurfacePoint const& center, SurfacePoint const& p);

// Counterclockwise angle in [0, 2pi) turning the ray center->from onto center->to.
double ccw_turn(CurvatureClass model, SurfacePoint const& center, SurfacePoint const& from,
                SurfacePoint const& to);

SurfacePoint geodesic_midpoint(CurvatureClass model, SurfacePoint const& p,
                               SurfacePoint const& q);

// Reflection of `point` in the geodesic line through p and q.
SurfacePoint reflect_in_geodesic(CurvatureClass model, SurfacePoint const& p,
                                 SurfacePoint const& q, SurfacePoint const& point);

enum class VertexType : std::uint8_t { A, B, O };

struct Triangle {
  SurfacePoint vA;
  SurfacePoint vB;
  SurfacePoint vO;
};

// Interior angle of the triangle at the given vertex.
double interior_angle(CurvatureClass model, Triangle const& t, VertexType at);

// T0 with angles pi/a, pi/b, pi/c at A, B, O, counterclockwise, vO at the
// origin (plane, disk) or north pole (sphere). In the plane |AB| = 1.
Triangle build_basic_triangle(VonDyckParams const& p);

using Fingerprint = std::array<std::int64_t, 9>;

struct FingerprintHash {
  std::size_t operator()(Fingerprint const& f) const noexcept;
};

// Images of the three vertices of `probe` under g, flattened.
std::array<double, 9> probe_images(Isometry const& g, Triangle const& probe);

Fingerprint quantize(std::span<double const> values, double step = kFingerprintStep);

Fingerprint fingerprint(Isometry const& g, Triangle const& probe,
                        double step = kFingerprintStep);

// All keys a value vector may have been quantized to under perturbations far
// below the step: the primary key first, then variants flipping coordinates
// that lie within a hair of a rounding boundary.
std::vector<Fingerprint> quantization_candidates(std::span<double const> values,
                                                 double step = kFingerprintStep);

// Maps quantized coordinate vectors to dense ids; lookups tolerate values
// straddling a quantization boundary.
class QuantizedIndex {
 public:
  explicit QuantizedIndex(double step = kFingerprintStep) : _step(step) {}

  std::optional<std::int32_t> find(std::span<double const> values) const;
  // Returns the existing id if present; otherwise records `id`.
  std::int32_t insert(std::span<double const> values, std::int32_t id);
  std::size_t size() const noexcept { return _map.size(); }
  double step() const noexcept { return _step; }

 private:
  double _step;
  std::unordered_map<Fingerprint, std::int32_t, FingerprintHash> _map;
};

// Largest displacement of T0's vertices under g.
double max_probe_displacement(Isometry const& g, Triangle const& probe);

// The geometric realization of D(a,b,c): model, T0 and the two generator
// rotations (x about A by 2pi/a, y about B by 2pi/b, both counterclockwise).
class DyckGeometry {
 public:
  explicit DyckGeometry(VonDyckParams const& p);

  VonDyckParams const& params() const noexcept { return _params; }
  CurvatureClass model() const noexcept { return _model; }
  Triangle const& basic_triangle() const noexcept { return _triangle; }
  Isometry const& generator(Letter l) const noexcept { return _generators[index(l)]; }
  Isometry identity() const { return Isometry::identity(_model); }

  // Left-to-right composition; the empty word is the identity.
  Isometry evaluate(Word const& w) const;
  Fingerprint fingerprint(Isometry const& g) const {
    return vondyck::fingerprint(g, _triangle);
  }

 private:
  VonDyckParams _params;
  CurvatureClass _model;
  Triangle _triangle;
  std::array<Isometry, 4> _generators;
};

Isometry generator_isometry(VonDyckParams const& p, Letter l);
Isometry evaluate_word(Word const& w, VonDyckParams const& p);

}  // namespace vondyck

#endif  // VONDYCK_GEOMETRY_HPP_
