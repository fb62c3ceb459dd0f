#include "vondyck/presentation.hpp"

#include <cctype>
#include <charconv>

namespace vondyck {

void VonDyckParams::validate() const {
  if (a < 2 || b < 2 || c < 2) {
    throw std::invalid_argument("von Dyck parameters must satisfy a, b, c >= 2, found (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
  }
}

std::string_view to_string(CurvatureClass k) {
  switch (k) {
    case CurvatureClass::Spherical:
      return "Spherical";
    case CurvatureClass::Euclidean:
      return "Euclidean";
    case CurvatureClass::Hyperbolic:
      return "Hyperbolic";
  }
  return "?";
}

CurvatureClass classify_curvature(VonDyckParams const& p) {
  p.validate();
  // 1/a + 1/b + 1/c ? 1  <=>  bc + ac + ab ? abc
  std::int64_t const a = p.a, b = p.b, c = p.c;
  std::int64_t const lhs = b * c + a * c + a * b;
  std::int64_t const rhs = a * b * c;
  if (lhs > rhs) {
    return CurvatureClass::Spherical;
  }
  if (lhs == rhs) {
    return CurvatureClass::Euclidean;
  }
  return CurvatureClass::Hyperbolic;
}

std::vector<VonDyckParams> euclidean_triples() {
  // With a <= b <= c we need 3/a >= 1 and 2/b >= 1 - 1/a, which bounds a and b.
  std::vector<VonDyckParams> out;
  for (int a = 2; a <= 3; ++a) {
    for (int b = a; b * (a - 1) <= 2 * a; ++b) {
      int const num = a * b;
      int const den = a * b - a - b;
      if (den <= 0 || num % den != 0) {
        continue;
      }
      int const c = num / den;
      if (c >= b) {
        out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool is_euclidean_triple(VonDyckParams p) {
  if (p.a < 2 || p.b < 2 || p.c < 2) {
    return false;
  }
  return classify_curvature(p) == CurvatureClass::Euclidean;
}

ParseError::ParseError(std::string const& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      _position(position) {}

Word parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*')) {
      ++i;
    }
  };
  skip();
  while (i < text.size()) {
    std::size_t const start = i;
    char const ch = text[i];
    bool identity = false;
    Letter base{};
    switch (ch) {
      case 'x':
        base = Letter::X;
        break;
      case 'X':
        base = Letter::Xinv;
        break;
      case 'y':
        base = Letter::Y;
        break;
      case 'Y':
        base = Letter::Yinv;
        break;
      case '1':
        identity = true;
        break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", start);
    }
    ++i;
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      std::size_t const num_start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        ++i;
      }
      std::size_t const digits = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      if (i == digits) {
        throw ParseError("expected integer exponent", num_start);
      }
      std::string_view number = text.substr(num_start, i - num_start);
      if (!number.empty() && number.front() == '+') {
        number.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), exponent);
      if (ec != std::errc() || ptr != number.data() + number.size()) {
        throw ParseError("exponent out of range", num_start);
      }
    }
    if (!identity) {
      Letter const l = exponent < 0 ? inverse(base) : base;
      unsigned long const n = exponent < 0 ? -static_cast<unsigned long>(exponent)
                                            : static_cast<unsigned long>(exponent);
      out.insert(out.end(), n, l);
    }
    skip();
  }
  return out;
}

namespace {
char generator_char(Letter l) {
  return is_x_letter(l) ? 'x' : 'y';
}
}  // namespace

std::string format_word(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) {
      ++j;
    }
    long const run = static_cast<long>(j - i);
    long const exponent = is_inverse_letter(w[i]) ? -run : run;
    if (!out.empty()) {
      out += ' ';
    }
    out += generator_char(w[i]);
    if (exponent != 1) {
      out += '^';
      out += std::to_string(exponent);
    }
    i = j;
  }
  return out;
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == inverse(l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word torsion_normalize(Word w, VonDyckParams const& p) {
  w = free_reduce(std::move(w));
  while (true) {
    Word next;
    next.reserve(w.size());
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      Letter const l = w[i];
      long const order = is_x_letter(l) ? p.a : p.b;
      long run = static_cast<long>(j - i);
      if (is_inverse_letter(l)) {
        run = -run;
      }
      long const e = ((run % order) + order) % order;
      Letter const positive = is_x_letter(l) ? Letter::X : Letter::Y;
      if (e != 0) {
        if (e <= order - e) {
          next.insert(next.end(), static_cast<std::size_t>(e), positive);
        } else {
          next.insert(next.end(), static_cast<std::size_t>(order - e), inverse(positive));
        }
      }
      i = j;
    }
    next = free_reduce(std::move(next));
    if (next == w) {
      return next;
    }
    w = std::move(next);
  }
}

}  // namespace vondyck
