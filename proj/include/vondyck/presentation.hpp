// Symbolic layer for the von Dyck groups D(a,b,c) = <x, y | x^a = y^b = (xy)^c = 1>:
// parameters, words over {x, y, x^-1, y^-1}, word syntax, and curvature class.

#ifndef VONDYCK_PRESENTATION_HPP_
#define VONDYCK_PRESENTATION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vondyck {

// The declaration order is the tie-break order for canonical words.
enum class Letter : std::uint8_t { X = 0, Y = 1, Xinv = 2, Yinv = 3 };

inline constexpr std::array<Letter, 4> kLetters{Letter::X, Letter::Y,
                                                Letter::Xinv, Letter::Yinv};

constexpr Letter inverse(Letter l) noexcept {
  switch (l) {
    case Letter::X:
      return Letter::Xinv;
    case Letter::Y:
      return Letter::Yinv;
    case Letter::Xinv:
      return Letter::X;
    case Letter::Yinv:
      return Letter::Y;
  }
  return l;
}

constexpr bool is_x_letter(Letter l) noexcept {
  return l == Letter::X || l == Letter::Xinv;
}

constexpr bool is_inverse_letter(Letter l) noexcept {
  return l == Letter::Xinv || l == Letter::Yinv;
}

constexpr std::size_t index(Letter l) noexcept {
  return static_cast<std::size_t>(l);
}

using Word = std::vector<Letter>;

struct VonDyckParams {
  int a = 0;
  int b = 0;
  int c = 0;

  // Throws std::invalid_argument unless a, b, c >= 2.
  void validate() const;

  auto operator<=>(VonDyckParams const&) const = default;
};

enum class CurvatureClass { Spherical, Euclidean, Hyperbolic };

std::string_view to_string(CurvatureClass k);

// Sign of 1/a + 1/b + 1/c - 1, decided in integer arithmetic.
CurvatureClass classify_curvature(VonDyckParams const& p);

// The unordered solutions of 1/a + 1/b + 1/c = 1, each sorted a <= b <= c.
std::vector<VonDyckParams> euclidean_triples();

bool is_euclidean_triple(VonDyckParams p);

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& what, std::size_t position);
  std::size_t position() const noexcept { return _position; }

 private:
  std::size_t _position;
};

// Accepts tokens x, y, X (= x^-1), Y (= y^-1) and 1, each with an optional
// integer exponent such as x^3 or y^-2. Whitespace and '*' separate tokens.
// No reduction is performed.
Word parse_word(std::string_view text);

// Runs are written with exponents, e.g. "x^2 y^-1 x"; the empty word is "1".
std::string format_word(Word const& w);

Word free_reduce(Word w);

// Reduces every maximal run of one generator modulo its order (a for x, b
// for y), re-reducing until stable. The relator (xy)^c is not used.
Word torsion_normalize(Word w, VonDyckParams const& p);

}  // namespace vondyck

#endif  // VONDYCK_PRESENTATION_HPP_
