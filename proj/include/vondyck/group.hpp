// Group elements with resolved identity. Geometric models identify elements
// with positively oriented tiles through fingerprints; the finite toy models
// (Z6 and the Burnside group B(2,3)) use exact arithmetic.

#ifndef VONDYCK_GROUP_HPP_
#define VONDYCK_GROUP_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vondyck/geometry.hpp"
#include "vondyck/presentation.hpp"

namespace vondyck {

struct GeometricModel {
  VonDyckParams params;
};

// Z6 = <x, y | x^2 = y^3 = [x,y] = 1> with x = 3, y = 2.
struct ToyZ6Model {};

// B(2,3) = <x, y | x^3 = y^3 = [x,y,x] = [x,y,y] = 1>.
struct BurnsideB23Model {};

using GroupModel = std::variant<GeometricModel, ToyZ6Model, BurnsideB23Model>;

std::string describe(GroupModel const& m);

// x^alpha y^beta [x,y]^gamma with [x,y] = x^-1 y^-1 x y, exponents mod 3.
struct B23NormalForm {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;

  auto operator<=>(B23NormalForm const&) const = default;
};

B23NormalForm b23_multiply(B23NormalForm const& u, B23NormalForm const& v);
B23NormalForm b23_inverse(B23NormalForm const& u);
B23NormalForm b23_generator(Letter l);

using ElementId = std::int32_t;
inline constexpr ElementId kUnknown = -1;

using Payload = std::variant<Isometry, int, B23NormalForm>;

struct GroupElement {
  ElementId id = 0;
  Word canonical_word;
  Payload payload;
  int depth = 0;
  // BFS tree: this = parent * last_letter (the identity has neither).
  ElementId parent = kUnknown;
  std::optional<Letter> last_letter;
};

class ElementStore {
 public:
  ElementStore() = default;

  GroupModel const& model() const noexcept { return _model; }
  std::size_t size() const noexcept { return _elements.size(); }
  bool complete() const noexcept { return _complete; }
  // Word-length bound used to build the store (nullopt: unbounded).
  std::optional<int> max_word_length() const noexcept { return _max_word_length; }

  GroupElement const& element(ElementId id) const;
  std::vector<GroupElement> const& elements() const noexcept { return _elements; }

  // Right action d -> d * l, or kUnknown if the product is not stored.
  ElementId act(ElementId id, Letter l) const;
  // All four products known.
  bool is_interior(ElementId id) const;
  std::vector<ElementId> interior() const;

  std::optional<ElementId> find(Payload const& p) const;
  // Key used for deduplication: a fingerprint for geometric models, the
  // exact value padded with zeros otherwise.
  Fingerprint key(ElementId id) const;

  // The geometric realization (only for GeometricModel).
  DyckGeometry const* geometry() const noexcept {
    return _geometry ? &*_geometry : nullptr;
  }

  // Walks `w` from `start` through the action table; kUnknown on a gap.
  ElementId walk(ElementId start, Word const& w) const;

  // Identity-value helpers for the finite models.
  std::optional<ElementId> find_z6(int value) const;
  std::optional<ElementId> find_b23(B23NormalForm const& nf) const;

 private:
  friend ElementStore enumerate_elements(GroupModel const& model,
                                         std::optional<int> max_word_length);

  std::vector<double> key_values(Payload const& p) const;

  GroupModel _model;
  std::optional<DyckGeometry> _geometry;
  std::vector<GroupElement> _elements;
  std::vector<std::array<ElementId, 4>> _action;
  QuantizedIndex _index;
  bool _complete = false;
  std::optional<int> _max_word_length;
};

class IncompleteStoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Breadth-first enumeration from the identity under right multiplication by
// x, y, x^-1, y^-1 (in that order). Elements are numbered by BFS layer and,
// within a layer, lexicographically by canonical word. A nullopt bound is
// accepted only for models known to be finite; hitting a finite bound
// returns a partial store with complete() == false.
ElementStore enumerate_elements(GroupModel const& model, std::optional<int> max_word_length);

// Product i * j. Throws IncompleteStoreError if it is not materialized.
ElementId multiply(ElementStore const& store, ElementId i, ElementId j);
ElementId try_multiply(ElementStore const& store, ElementId i, ElementId j);
ElementId inverse_of(ElementStore const& store, ElementId i);

Word const& canonical_word(ElementStore const& store, ElementId i);

}  // namespace vondyck

#endif  // VONDYCK_GROUP_HPP_
