#pragma once

#include "eagv/error.hpp"
#include "eagv/prime_power.hpp"

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eagv {

/// Field elements are integers in [0, q) read as base-p digit vectors: the
/// coefficients of the polynomial representative, constant term first.
using Element = std::uint32_t;

/// Polynomials over GF(p), constant term first, no trailing zeros except
/// for the zero polynomial (empty).
namespace poly {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid over the integers.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) throw DomainError("division by zero");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

inline Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint32_t x = i < a.size() ? a[i] : 0;
    const std::uint32_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  trim(r);
  return r;
}

// Returns (quotient, remainder); divisor must be nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  if (b.empty()) throw DomainError("polynomial division by zero");
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  if (a.size() < b.size()) return {{}, a};
  Poly quot(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t(a.back()) * lead_inv % p);
    quot[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - std::uint64_t(factor) * b[i] % p) % p);
    trim(a);
  }
  trim(quot);
  return {quot, a};
}

/// Irreducible iff monic of degree m >= 1 and no monic divisor of degree
/// 1..m/2 exists (trial division).
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(deg + 1, 0);
      std::uint64_t v = code;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[deg] = 1;
      if (divmod(f, g, p).second.empty()) return false;
    }
  }
  return true;
}

/// Lexicographically smallest monic irreducible of degree m, comparing
/// coefficients from the constant term upward.
inline Poly smallest_irreducible(std::uint32_t p, unsigned m) {
  std::uint64_t count = 1;
  for (unsigned i = 0; i < m; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly f(m + 1, 0);
    std::uint64_t v = code;
    // the constant term is the most significant digit of code
    for (unsigned i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

} // namespace poly

/// GF(p^m). Immutable after construction and cheap to copy (tables are
/// shared). Arithmetic throws DomainError for elements outside [0, q).
class Field {
public:
  static constexpr std::uint64_t max_order = std::uint64_t{1} << 20;

  /// Builds GF(q). Without a modulus the smallest irreducible polynomial is
  /// used; a supplied modulus must be monic, of degree m and irreducible.
  static Field make(std::uint64_t q, std::optional<poly::Poly> modulus = std::nullopt) {
    const auto pp = factor_prime_power(q);
    if (!pp) throw InvalidParameters("q=" + std::to_string(q) + " is not a prime power");
    if (q > max_order) throw InvalidParameters("q=" + std::to_string(q) + " exceeds 2^20");
    const auto p = static_cast<std::uint32_t>(pp->p);
    poly::Poly f;
    if (modulus) {
      f = *modulus;
      if (f.size() != pp->m + 1 || f.back() != 1)
        throw InvalidParameters("modulus must be monic of degree " + std::to_string(pp->m));
      for (auto coef : f)
        if (coef >= p) throw InvalidParameters("modulus coefficient out of range");
      if (!poly::is_irreducible(f, p)) throw InvalidParameters("modulus is reducible");
    } else {
      f = poly::smallest_irreducible(p, pp->m);
    }
    return Field(static_cast<std::uint32_t>(q), p, pp->m, std::move(f));
  }

  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  const poly::Poly& modulus() const noexcept { return modulus_; }
  bool contains(std::uint64_t a) const noexcept { return a < q_; }

  Element add(Element a, Element b) const {
    check(a), check(b);
    if (m_ == 1) return (a + b) % p_;
    if (p_ == 2) return a ^ b;
    if (tables_->add.size()) return tables_->add[a * q_ + b];
    return add_digits(a, b, false);
  }

  Element sub(Element a, Element b) const {
    check(a), check(b);
    if (m_ == 1) return (a + p_ - b) % p_;
    if (p_ == 2) return a ^ b;
    return add_digits(a, b, true);
  }

  Element neg(Element a) const { return sub(0, a); }

  Element mul(Element a, Element b) const {
    check(a), check(b);
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Element>(std::uint64_t(a) * b % p_);
    if (!tables_->log.empty()) {
      const std::uint32_t s = tables_->log[a] + tables_->log[b];
      return tables_->exp[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    return mul_poly(a, b);
  }

  /// Multiplicative inverse by the extended Euclidean algorithm on polynomials.
  Element inv(Element a) const {
    check(a);
    if (a == 0) throw DomainError("division by zero");
    if (m_ == 1) return poly::inv_mod(a, p_);
    // Invariant: s * a ≡ r (mod modulus)
    poly::Poly r0 = modulus_, r1 = to_poly(a);
    poly::Poly s0, s1 = {1};
    while (!r1.empty()) {
      auto [quot, rem] = poly::divmod(r0, r1, p_);
      r0 = std::exchange(r1, rem);
      s0 = std::exchange(s1, poly::sub(s0, poly::mul(quot, s1, p_), p_));
    }
    // r0 is a nonzero constant
    const std::uint32_t scale = poly::inv_mod(r0[0], p_);
    poly::Poly out = poly::mul(s0, {scale}, p_);
    return from_poly(poly::divmod(out, modulus_, p_).second);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element pow(Element a, std::uint64_t e) const {
    Element result = 1, base = a;
    check(a);
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }

  /// Product through polynomial multiplication and reduction; no tables.
  Element mul_poly(Element a, Element b) const {
    check(a), check(b);
    const auto prod = poly::mul(to_poly(a), to_poly(b), p_);
    return from_poly(poly::divmod(prod, modulus_, p_).second);
  }

  poly::Poly to_poly(Element a) const {
    poly::Poly r(m_, 0);
    for (unsigned i = 0; i < m_; ++i) {
      r[i] = a % p_;
      a /= p_;
    }
    poly::trim(r);
    return r;
  }

  Element from_poly(const poly::Poly& r) const {
    Element v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = v * p_ + r[i];
    return v;
  }

private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i < q-1
    std::vector<std::uint32_t> log;  // log[g^i] = i
    std::vector<Element> add;        // q*q table for small odd-characteristic extensions
  };

  Field(std::uint32_t q, std::uint32_t p, unsigned m, poly::Poly modulus)
      : q_(q), p_(p), m_(m), modulus_(std::move(modulus)), tables_(std::make_shared<Tables>()) {
    if (m_ > 1) build_tables();
  }

  void check(std::uint64_t a) const {
    if (a >= q_) throw DomainError("element " + std::to_string(a) + " out of range for GF(" + std::to_string(q_) + ")");
  }

  Element add_digits(Element a, Element b, bool subtract) const {
    Element out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
      const Element x = a % p_, y = b % p_;
      out += scale * (subtract ? (x + p_ - y) % p_ : (x + y) % p_);
      a /= p_, b /= p_, scale *= p_;
    }
    return out;
  }

  void build_tables() {
    auto tables = std::make_shared<Tables>();
    if (p_ != 2 && q_ <= 256) {
      tables->add.resize(std::size_t(q_) * q_);
      for (Element a = 0; a < q_; ++a)
        for (Element b = 0; b < q_; ++b) tables->add[a * q_ + b] = add_digits(a, b, false);
    }
    if (q_ <= (1u << 16)) {
      for (Element g = 2; g < q_; ++g) {
        if (try_generator(g, *tables)) break;
      }
    }
    tables_ = std::move(tables);
  }

  bool try_generator(Element g, Tables& t) const {
    t.exp.assign(q_ - 1, 0);
    t.log.assign(q_, 0);
    Element x = 1;
    std::uint32_t order = 0;
    do {
      t.exp[order] = x;
      t.log[x] = order;
      x = mul_poly(x, g);
      ++order;
    } while (x != 1 && order < q_ - 1);
    if (x == 1 && order == q_ - 1) return true;
    t.exp.clear();
    t.log.clear();
    return false;
  }

  std::uint32_t q_;
  std::uint32_t p_;
  unsigned m_;
  poly::Poly modulus_;
  std::shared_ptr<const Tables> tables_;
};

} // namespace eagv
