#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "vondyck/presentation.hpp"

using namespace vondyck;

namespace {

// Deletes the leftmost cancelling pair until none is left.
Word naive_reduce(Word w) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i + 1] == inverse(w[i])) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        again = true;
        break;
      }
    }
  }
  return w;
}

bool is_reduced(Word const& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i + 1] == inverse(w[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("classify_curvature on the documented triples") {
  CHECK(classify_curvature({2, 3, 5}) == CurvatureClass::Spherical);
  CHECK(classify_curvature({3, 3, 3}) == CurvatureClass::Euclidean);
  CHECK(classify_curvature({4, 4, 4}) == CurvatureClass::Hyperbolic);
  CHECK_THROWS_AS(classify_curvature({1, 3, 3}), std::invalid_argument);
  CHECK_THROWS_AS(classify_curvature({2, 0, 3}), std::invalid_argument);
}

TEST_CASE("classify_curvature agrees with the integer oracle and is symmetric") {
  for (int a = 2; a <= 14; ++a) {
    for (int b = 2; b <= 14; ++b) {
      for (int c = 2; c <= 14; ++c) {
        int const s = oracle::curvature_sign(a, b, c);
        auto const want = s > 0 ? CurvatureClass::Spherical
                                : (s == 0 ? CurvatureClass::Euclidean : CurvatureClass::Hyperbolic);
        auto const got = classify_curvature({a, b, c});
        REQUIRE(got == want);
        CHECK(classify_curvature({b, c, a}) == got);
        CHECK(classify_curvature({c, b, a}) == got);
      }
    }
  }
}

TEST_CASE("euclidean_triples matches exhaustive search") {
  auto const found = euclidean_triples();
  auto const expected = oracle::euclidean_triples(12);
  REQUIRE(found.size() == expected.size());
  for (auto const& t : expected) {
    CHECK(std::find(found.begin(), found.end(), VonDyckParams{t[0], t[1], t[2]}) != found.end());
  }
  CHECK(found.size() == 3);
  CHECK(is_euclidean_triple({3, 3, 3}));
  CHECK(is_euclidean_triple({4, 2, 4}));
  CHECK(is_euclidean_triple({6, 3, 2}));
  CHECK_FALSE(is_euclidean_triple({4, 4, 4}));
}

TEST_CASE("parse_word") {
  CHECK(parse_word("x y") == Word{Letter::X, Letter::Y});
  CHECK(parse_word("x^-2") == Word{Letter::Xinv, Letter::Xinv});
  CHECK(parse_word("x x^-1") == Word{Letter::X, Letter::Xinv});
  CHECK(parse_word("X*Y") == Word{Letter::Xinv, Letter::Yinv});
  CHECK(parse_word("1").empty());
  CHECK(parse_word("  ").empty());
  CHECK(parse_word("y^3") == Word{Letter::Y, Letter::Y, Letter::Y});
  CHECK(parse_word("X^-1") == Word{Letter::X});

  SUBCASE("errors carry a position") {
    try {
      parse_word("x y z");
      FAIL("no error");
    } catch (ParseError const& e) {
      CHECK(e.position() == 4);
    }
    try {
      parse_word("x^");
      FAIL("no error");
    } catch (ParseError const& e) {
      CHECK(e.position() == 2);
    }
  }
}

TEST_CASE("format_word") {
  CHECK(format_word({}) == "1");
  CHECK(format_word({Letter::X, Letter::X, Letter::Yinv}) == "x^2 y^-1");
  CHECK(format_word({Letter::X, Letter::Y, Letter::X}) == "x y x");
}

TEST_CASE("parse_word inverts format_word on reduced words up to length 8") {
  for (int n = 0; n <= 8; ++n) {
    for (auto const& w : oracle::reduced_words(n)) {
      REQUIRE(parse_word(format_word(w)) == w);
    }
  }
}

TEST_CASE("free_reduce examples") {
  CHECK(free_reduce({Letter::X, Letter::Xinv}).empty());
  CHECK(free_reduce({Letter::X, Letter::Y, Letter::Yinv, Letter::X}) == Word{Letter::X, Letter::X});
  Word const w{Letter::X, Letter::Y, Letter::Xinv};
  CHECK(free_reduce(w) == w);
}

TEST_CASE("free_reduce agrees with naive deletion up to length 8") {
  for (int n = 0; n <= 8; ++n) {
    for (auto const& w : oracle::all_words(n)) {
      REQUIRE(free_reduce(w) == naive_reduce(w));
    }
  }
}

TEST_CASE("free_reduce is idempotent and reduces, exhaustively up to length 12") {
  Word w;
  for (int n = 0; n <= 12; ++n) {
    w.assign(static_cast<std::size_t>(n), Letter::X);
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = kLetters[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])];
      auto const r = free_reduce(w);
      if (!is_reduced(r) || free_reduce(r) != r || (r.size() % 2) != (w.size() % 2)) {
        FAIL("free_reduce misbehaves on " << format_word(w));
      }
      int i = 0;
      while (i < n && ++digits[static_cast<std::size_t>(i)] == 4) {
        digits[static_cast<std::size_t>(i)] = 0;
        ++i;
      }
      if (i == n) break;
    }
  }
}

TEST_CASE("torsion_normalize") {
  VonDyckParams const p444{4, 4, 4};
  CHECK(torsion_normalize(Word(4, Letter::X), p444).empty());
  CHECK(torsion_normalize({Letter::Y, Letter::Y, Letter::Y, Letter::Y}, {3, 3, 3}) ==
        Word{Letter::Y});
  CHECK(torsion_normalize({Letter::X, Letter::Y}, {2, 3, 7}) == Word{Letter::X, Letter::Y});
  // x^3 with a = 4 is x^-1.
  CHECK(torsion_normalize(Word(3, Letter::X), p444) == Word{Letter::Xinv});
  // Collapsing a run can expose a new run: y x^3 y^-1 with a = 3.
  CHECK(torsion_normalize({Letter::Y, Letter::X, Letter::X, Letter::X, Letter::Yinv}, {3, 3, 3})
            .empty());
}
