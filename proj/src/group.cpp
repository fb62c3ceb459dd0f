#include "vondyck/group.hpp"

#include <algorithm>

namespace vondyck {

namespace {

int z6_generator(Letter l) {
  switch (l) {
    case Letter::X:
    case Letter::Xinv:
      return 3;
    case Letter::Y:
      return 2;
    case Letter::Yinv:
      return 4;
  }
  return 0;
}

int mod3(int v) {
  return ((v % 3) + 3) % 3;
}

struct Stepper {
  GroupModel const& model;
  DyckGeometry const* geometry;

  Payload identity() const {
    if (geometry != nullptr) {
      return geometry->identity();
    }
    if (std::holds_alternative<ToyZ6Model>(model)) {
      return 0;
    }
    return B23NormalForm{};
  }

  Payload step(Payload const& p, Letter l) const {
    if (auto const* g = std::get_if<Isometry>(&p)) {
      return compose(*g, geometry->generator(l));
    }
    if (auto const* v = std::get_if<int>(&p)) {
      return (*v + z6_generator(l)) % 6;
    }
    return b23_multiply(std::get<B23NormalForm>(p), b23_generator(l));
  }
};

}  // namespace

std::string describe(GroupModel const& m) {
  if (auto const* g = std::get_if<GeometricModel>(&m)) {
    return "D(" + std::to_string(g->params.a) + "," + std::to_string(g->params.b) + "," +
           std::to_string(g->params.c) + ")";
  }
  if (std::holds_alternative<ToyZ6Model>(m)) {
    return "Z6";
  }
  return "B(2,3)";
}

B23NormalForm b23_multiply(B23NormalForm const& u, B23NormalForm const& v) {
  // [x,y] is central, and y^b x^a = x^a y^b [x,y]^(-ab).
  return {mod3(u.alpha + v.alpha), mod3(u.beta + v.beta),
          mod3(u.gamma + v.gamma - v.alpha * u.beta)};
}

B23NormalForm b23_inverse(B23NormalForm const& u) {
  return {mod3(-u.alpha), mod3(-u.beta), mod3(-u.gamma - u.alpha * u.beta)};
}

B23NormalForm b23_generator(Letter l) {
  switch (l) {
    case Letter::X:
      return {1, 0, 0};
    case Letter::Y:
      return {0, 1, 0};
    case Letter::Xinv:
      return {2, 0, 0};
    case Letter::Yinv:
      return {0, 2, 0};
  }
  return {};
}

GroupElement const& ElementStore::element(ElementId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= _elements.size()) {
    throw std::out_of_range("element id " + std::to_string(id) + " is not in the store");
  }
  return _elements[static_cast<std::size_t>(id)];
}

ElementId ElementStore::act(ElementId id, Letter l) const {
  element(id);
  return _action[static_cast<std::size_t>(id)][index(l)];
}

bool ElementStore::is_interior(ElementId id) const {
  auto const& row = _action.at(static_cast<std::size_t>(id));
  return std::none_of(row.begin(), row.end(), [](ElementId t) { return t == kUnknown; });
}

std::vector<ElementId> ElementStore::interior() const {
  std::vector<ElementId> out;
  for (ElementId id = 0; id < static_cast<ElementId>(size()); ++id) {
    if (is_interior(id)) {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<double> ElementStore::key_values(Payload const& p) const {
  if (auto const* g = std::get_if<Isometry>(&p)) {
    auto const images = probe_images(*g, _geometry->basic_triangle());
    return {images.begin(), images.end()};
  }
  double const s = _index.step();
  if (auto const* v = std::get_if<int>(&p)) {
    return {*v * s};
  }
  auto const& nf = std::get<B23NormalForm>(p);
  return {nf.alpha * s, nf.beta * s, nf.gamma * s};
}

std::optional<ElementId> ElementStore::find(Payload const& p) const {
  if (std::holds_alternative<Isometry>(p) != (_geometry.has_value())) {
    return std::nullopt;
  }
  auto const values = key_values(p);
  return _index.find(values);
}

Fingerprint ElementStore::key(ElementId id) const {
  auto const values = key_values(element(id).payload);
  return quantize(values, _index.step());
}

ElementId ElementStore::walk(ElementId start, Word const& w) const {
  ElementId cur = start;
  for (Letter l : w) {
    if (cur == kUnknown) {
      return kUnknown;
    }
    cur = act(cur, l);
  }
  return cur;
}

std::optional<ElementId> ElementStore::find_z6(int value) const {
  if (!std::holds_alternative<ToyZ6Model>(_model)) {
    return std::nullopt;
  }
  return find(Payload(((value % 6) + 6) % 6));
}

std::optional<ElementId> ElementStore::find_b23(B23NormalForm const& nf) const {
  if (!std::holds_alternative<BurnsideB23Model>(_model)) {
    return std::nullopt;
  }
  return find(Payload(B23NormalForm{mod3(nf.alpha), mod3(nf.beta), mod3(nf.gamma)}));
}

ElementStore enumerate_elements(GroupModel const& model, std::optional<int> max_word_length) {
  ElementStore store;
  store._model = model;
  store._max_word_length = max_word_length;
  if (auto const* g = std::get_if<GeometricModel>(&model)) {
    g->params.validate();
    store._geometry.emplace(g->params);
    if (!max_word_length && store._geometry->model() != CurvatureClass::Spherical) {
      throw std::invalid_argument("an unbounded enumeration of " + describe(model) +
                                  " never closes; give a word-length bound");
    }
  }
  if (max_word_length && *max_word_length < 0) {
    throw std::invalid_argument("word-length bound must be non-negative");
  }
  Stepper const stepper{model, store.geometry()};

  auto add = [&](Payload payload, Word word, int depth, ElementId parent,
                 std::optional<Letter> last) {
    auto const id = static_cast<ElementId>(store._elements.size());
    auto const values = store.key_values(payload);
    store._index.insert(values, id);
    store._elements.push_back(
        GroupElement{id, std::move(word), std::move(payload), depth, parent, last});
    store._action.push_back({kUnknown, kUnknown, kUnknown, kUnknown});
    return id;
  };

  add(stepper.identity(), {}, 0, kUnknown, std::nullopt);
  std::size_t layer_begin = 0;
  int depth = 0;
  while (true) {
    std::size_t const layer_end = store._elements.size();
    bool const expand = !max_word_length || depth < *max_word_length;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      auto const id = static_cast<ElementId>(i);
      for (Letter l : kLetters) {
        Payload next = stepper.step(store._elements[i].payload, l);
        auto const found = store.find(next);
        ElementId target = kUnknown;
        if (found) {
          target = *found;
        } else if (expand) {
          Word w = store._elements[i].canonical_word;
          w.push_back(l);
          target = add(std::move(next), std::move(w), depth + 1, id, l);
        }
        store._action[i][index(l)] = target;
      }
    }
    if (store._elements.size() == layer_end || !expand) {
      break;
    }
    layer_begin = layer_end;
    ++depth;
  }
  store._complete = std::all_of(store._action.begin(), store._action.end(), [](auto const& row) {
    return std::none_of(row.begin(), row.end(), [](ElementId t) { return t == kUnknown; });
  });
  return store;
}

ElementId try_multiply(ElementStore const& store, ElementId i, ElementId j) {
  return store.walk(i, store.element(j).canonical_word);
}

ElementId multiply(ElementStore const& store, ElementId i, ElementId j) {
  ElementId const r = try_multiply(store, i, j);
  if (r == kUnknown) {
    throw IncompleteStoreError("product of elements " + std::to_string(i) + " and " +
                               std::to_string(j) + " is not materialized");
  }
  return r;
}

ElementId inverse_of(ElementStore const& store, ElementId i) {
  Word w = store.element(i).canonical_word;
  std::reverse(w.begin(), w.end());
  for (Letter& l : w) {
    l = inverse(l);
  }
  return store.walk(0, w);
}

Word const& canonical_word(ElementStore const& store, ElementId i) {
  return store.element(i).canonical_word;
}

}  // namespace vondyck
