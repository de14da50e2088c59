#include "homlind/icspec.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace homlind {

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("initial-condition parse error at position " +
                                std::to_string(i) + ": " + msg + " in \"" + s +
                                "\"");
  }
};

double parse_number(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() &&
         (std::isdigit(static_cast<unsigned char>(c.s[c.i])) ||
          c.s[c.i] == '.' || c.s[c.i] == 'e' || c.s[c.i] == 'E' ||
          ((c.s[c.i] == '+' || c.s[c.i] == '-') && c.i > start &&
           (c.s[c.i - 1] == 'e' || c.s[c.i - 1] == 'E'))))
    ++c.i;
  if (c.i == start) c.fail("expected a number");
  return std::stod(c.s.substr(start, c.i - start));
}

int parse_int_coeff(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start) return 1;
  return std::stoi(c.s.substr(start, c.i - start));
}

// arg := [+-] part ([+-] part)* ; part := [int] ('x'|'y')
Mode parse_arg(Cursor& c, int dimension) {
  Mode m{0, 0};
  bool first = true;
  while (true) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = (p == '-') ? -1 : 1;
      ++c.i;
    } else if (!first) {
      break;
    }
    int k = parse_int_coeff(c);
    char axis = c.peek();
    if (axis == 'x') {
      m.jx += sign * k;
    } else if (axis == 'y') {
      if (dimension < 2) c.fail("'y' not allowed in a one-dimensional field");
      m.jy += sign * k;
    } else {
      c.fail("expected axis 'x' or 'y'");
    }
    ++c.i;
    first = false;
    if (c.peek() != '+' && c.peek() != '-') break;
  }
  return m;
}

ICTerm parse_term(Cursor& c, int dimension) {
  ICTerm t;
  char p = c.peek();
  if (std::isdigit(static_cast<unsigned char>(p)) || p == '.') {
    t.amplitude = parse_number(c);
    if (c.peek() == '*') ++c.i;
  }
  c.skip_ws();
  if (c.s.compare(c.i, 3, "sin") == 0) {
    t.is_sin = true;
  } else if (c.s.compare(c.i, 3, "cos") == 0) {
    t.is_sin = false;
  } else {
    c.fail("expected 'sin' or 'cos'");
  }
  c.i += 3;
  if (c.peek() != '(') c.fail("expected '('");
  ++c.i;
  t.wavevec = parse_arg(c, dimension);
  if (c.peek() != ')') c.fail("expected ')'");
  ++c.i;
  return t;
}

}  // namespace

ICSpec ICSpec::parse(const std::string& text, int dimension) {
  ICSpec spec;
  Cursor c{text};
  if (c.done()) return spec;
  // Allow an explicit "0".
  if (c.peek() == '0' && c.i + 1 >= text.size()) return spec;
  bool first = true;
  while (!c.done()) {
    double sign = 1.0;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = (p == '-') ? -1.0 : 1.0;
      ++c.i;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    ICTerm t = parse_term(c, dimension);
    t.amplitude *= sign;
    spec.terms.push_back(t);
    first = false;
  }
  return spec;
}

std::string ICSpec::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    double a = t.amplitude;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      a = std::abs(a);
    } else if (a < 0) {
      os << "-";
      a = std::abs(a);
    }
    if (a != 1.0) os << a << "*";
    os << (t.is_sin ? "sin(" : "cos(");
    auto axis = [&](int k, const char* name, bool lead) {
      if (k == 0) return std::string();
      std::string out;
      if (k < 0)
        out += "-";
      else if (!lead)
        out += "+";
      if (std::abs(k) != 1) out += std::to_string(std::abs(k));
      out += name;
      return out;
    };
    std::string sx = axis(t.wavevec.jx, "x", true);
    std::string sy = axis(t.wavevec.jy, "y", sx.empty());
    std::string arg = sx + sy;
    os << (arg.empty() ? "0x" : arg) << ")";
    first = false;
  }
  return os.str();
}

double ICSpec::eval(double x, double y) const {
  double acc = 0.0;
  for (const auto& t : terms) {
    double phase = t.wavevec.jx * x + t.wavevec.jy * y;
    acc += t.amplitude * (t.is_sin ? std::sin(phase) : std::cos(phase));
  }
  return acc;
}

}  // namespace homlind
