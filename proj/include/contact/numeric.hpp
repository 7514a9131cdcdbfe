#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace contact {

/// Exact rational scalar. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "n" or "n/d".
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Gaussian rational a + bi. Matrix entries of the unitary families live here;
/// the real families keep im == 0 throughout.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() : re(0), im(0) {}
  Gaussian(long v) : re(v), im(0) {}  // NOLINT: implicit by design
  Gaussian(Rational r) : re(std::move(r)), im(0) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gaussian operator-() const { return Gaussian(Rational(-re), Rational(-im)); }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r(re * o.re - im * o.im);
    Rational i(re * o.im + im * o.re);
    re = r;
    im = i;
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    Rational n(o.re * o.re + o.im * o.im);
    if (n == 0) throw std::domain_error("division by zero");
    Rational r((re * o.re + im * o.im) / n);
    Rational i((im * o.re - re * o.im) / n);
    re = r;
    im = i;
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline Gaussian conj(const Gaussian& z) { return Gaussian(z.re, Rational(-z.im)); }
inline Rational conj(const Rational& r) { return r; }

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }

/// "a/b", "ci", "a/b+ci", "a/b-ci"; pure rationals print with no imaginary part.
inline std::string to_string(const Gaussian& z) {
  if (z.im == 0) return z.re.get_str();
  std::string im = z.im.get_str() + "i";
  if (z.re == 0) return im;
  return z.re.get_str() + (z.im > 0 ? "+" : "") + im;
}

inline std::ostream& operator<<(std::ostream& os, const Gaussian& z) {
  return os << to_string(z);
}

/// Parses the format produced by to_string(Gaussian).
inline Gaussian parse_gaussian(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty scalar");
  if (s.back() != 'i') return Gaussian(parse_rational(s));
  std::string body = s.substr(0, s.size() - 1);
  // split at the last +/- that is not a leading sign and not inside "/"
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != '/') {
      Rational re = parse_rational(body.substr(0, k));
      std::string imtxt = body.substr(c == '+' ? k + 1 : k);
      if (imtxt.empty() || imtxt == "-") imtxt += "1";
      return Gaussian(re, parse_rational(imtxt));
    }
  }
  if (body.empty() || body == "-") body += "1";
  return Gaussian(Rational(0), parse_rational(body));
}

}  // namespace contact
