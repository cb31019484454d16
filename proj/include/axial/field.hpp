#ifndef AXIAL_FIELD_HPP
#define AXIAL_FIELD_HPP

// Exact scalars: prime fields F_p (p <= 2^31) and arbitrary precision
// rationals. Both scalar types share one operator vocabulary so the rest of
// the library is written once as templates over `FieldScalar`.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace axial {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FieldCtx {
  enum class Kind { PrimeField, Rationals };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldCtx prime(std::uint64_t p) {
    if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
      throw std::invalid_argument("field modulus must be a prime <= 2^31, got " +
                                  std::to_string(p));
    }
    return FieldCtx{Kind::PrimeField, static_cast<std::uint32_t>(p)};
  }
  static FieldCtx rationals() { return FieldCtx{Kind::Rationals, 0}; }

  bool is_prime_field() const { return kind == Kind::PrimeField; }
  std::uint32_t characteristic() const { return is_prime_field() ? p : 0; }
  std::string name() const {
    return is_prime_field() ? "F_" + std::to_string(p) : std::string("Q");
  }
  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;
};

/// Element of F_p stored as its canonical residue in [0, p).
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t p) : v_(value % p), p_(p) {}

  static Fp from_int(std::int64_t n, std::uint32_t p) {
    auto r = n % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return Fp(static_cast<std::uint32_t>(r), p);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp inv() const {
    if (v_ == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
      std::int64_t q = a / b;
      std::int64_t t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return from_int(x0, p_);
  }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
  Fp& operator+=(const Fp& o) {
    check(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : static_cast<std::uint32_t>(std::uint64_t{v_} + p_ - o.v_);
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    check(o);
    v_ = static_cast<std::uint32_t>(std::uint64_t{v_} * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) {
    check(o);
    return *this *= o.inv();
  }
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    return a.v_ <=> b.v_;
  }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void check(const Fp& o) const {
    if (p_ != o.p_) {
      throw FieldMismatch("mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
    }
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 0;
};

/// Rational number, always reduced with positive denominator.
class Q {
 public:
  Q() = default;
  explicit Q(BigRational r) : r_(std::move(r)) {}
  Q(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    r_ = BigRational(num, den);
  }

  static Q from_int(std::int64_t n) { return Q(BigRational(n)); }

  const BigRational& value() const { return r_; }
  BigInt numerator() const { return boost::multiprecision::numerator(r_); }
  BigInt denominator() const { return boost::multiprecision::denominator(r_); }
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }

  Q inv() const {
    if (r_ == 0) throw DivisionByZero("inverse of 0 in Q");
    return Q(BigRational(1) / r_);
  }

  Q operator-() const { return Q(-r_); }
  Q& operator+=(const Q& o) {
    r_ += o.r_;
    return *this;
  }
  Q& operator-=(const Q& o) {
    r_ -= o.r_;
    return *this;
  }
  Q& operator*=(const Q& o) {
    r_ *= o.r_;
    return *this;
  }
  Q& operator/=(const Q& o) {
    if (o.r_ == 0) throw DivisionByZero("division by 0 in Q");
    r_ /= o.r_;
    return *this;
  }
  friend Q operator+(Q a, const Q& b) { return a += b; }
  friend Q operator-(Q a, const Q& b) { return a -= b; }
  friend Q operator*(Q a, const Q& b) { return a *= b; }
  friend Q operator/(Q a, const Q& b) { return a /= b; }

  friend bool operator==(const Q& a, const Q& b) { return a.r_ == b.r_; }
  friend std::strong_ordering operator<=>(const Q& a, const Q& b) {
    if (a.r_ < b.r_) return std::strong_ordering::less;
    if (b.r_ < a.r_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    auto d = denominator();
    if (d == 1) return numerator().str();
    return numerator().str() + "/" + d.str();
  }

 private:
  BigRational r_{0};
};

template <class S>
concept FieldScalar = std::totally_ordered<S> && requires(S a, const S b) {
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { b.inv() } -> std::same_as<S>;
  { b.is_zero() } -> std::same_as<bool>;
  { b.is_one() } -> std::same_as<bool>;
  { b.to_string() } -> std::same_as<std::string>;
};

namespace detail {

struct ParsedFraction {
  bool negative = false;
  std::string_view num;
  std::string_view den;  // empty when absent
};

inline ParsedFraction split_fraction(std::string_view text) {
  ParsedFraction out;
  auto s = text;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    out.negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  out.num = s.substr(0, slash);
  if (slash != std::string_view::npos) {
    out.den = s.substr(slash + 1);
    if (out.den.empty()) throw ParseError("missing denominator in '" + std::string(text) + "'");
  }
  auto digits = [&](std::string_view d) {
    if (d.empty()) return false;
    for (char c : d) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  if (!digits(out.num) || (slash != std::string_view::npos && !digits(out.den))) {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  return out;
}

inline std::uint32_t reduce_digits(std::string_view digits, std::uint32_t p) {
  std::uint64_t r = 0;
  for (char c : digits) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace detail

/// Per-scalar-type field context: constants, parsing and rendering.
template <class S>
class Field;

template <>
class Field<Fp> {
 public:
  using scalar_type = Fp;

  explicit Field(std::uint32_t p) : ctx_(FieldCtx::prime(p)) {}
  explicit Field(const FieldCtx& ctx) : ctx_(ctx) {
    if (!ctx.is_prime_field()) throw FieldMismatch("Field<Fp> needs a prime field context");
  }
  static Field of(const Fp& x) { return Field(x.modulus()); }

  const FieldCtx& ctx() const { return ctx_; }
  std::uint32_t p() const { return ctx_.p; }
  std::uint32_t characteristic() const { return ctx_.p; }
  bool is_finite() const { return true; }

  Fp zero() const { return Fp(0, ctx_.p); }
  Fp one() const { return Fp(1, ctx_.p); }
  Fp from_int(std::int64_t n) const { return Fp::from_int(n, ctx_.p); }

  Fp parse(std::string_view text) const {
    auto f = detail::split_fraction(text);
    Fp num(detail::reduce_digits(f.num, ctx_.p), ctx_.p);
    if (f.negative) num = -num;
    if (f.den.empty()) return num;
    Fp den(detail::reduce_digits(f.den, ctx_.p), ctx_.p);
    if (den.is_zero()) {
      throw DivisionByZero("denominator of '" + std::string(text) + "' vanishes in " + ctx_.name());
    }
    return num / den;
  }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  FieldCtx ctx_;
};

template <>
class Field<Q> {
 public:
  using scalar_type = Q;

  Field() = default;
  explicit Field(const FieldCtx& ctx) {
    if (ctx.is_prime_field()) throw FieldMismatch("Field<Q> needs the rational context");
  }
  static Field of(const Q&) { return Field(); }

  FieldCtx ctx() const { return FieldCtx::rationals(); }
  std::uint32_t characteristic() const { return 0; }
  bool is_finite() const { return false; }

  Q zero() const { return Q(); }
  Q one() const { return Q::from_int(1); }
  Q from_int(std::int64_t n) const { return Q::from_int(n); }

  Q parse(std::string_view text) const {
    auto f = detail::split_fraction(text);
    BigInt num(std::string(f.num));
    if (f.negative) num = -num;
    BigInt den = f.den.empty() ? BigInt(1) : BigInt(std::string(f.den));
    if (den == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    return Q(num, den);
  }

  friend bool operator==(const Field&, const Field&) { return true; }
};

template <FieldScalar S>
std::string render(const S& x) {
  return x.to_string();
}

/// Scalar of either field kind, for code that only learns the field at runtime.
using AnyScalar = std::variant<Fp, Q>;

inline AnyScalar scalar_parse(std::string_view text, const FieldCtx& ctx) {
  if (ctx.is_prime_field()) return Field<Fp>(ctx).parse(text);
  return Field<Q>().parse(text);
}

inline std::string render(const AnyScalar& x) {
  return std::visit([](const auto& s) { return s.to_string(); }, x);
}

template <FieldScalar S>
std::ostream& operator<<(std::ostream& os, const S& x) {
  return os << x.to_string();
}

}  // namespace axial

#endif  // AXIAL_FIELD_HPP
