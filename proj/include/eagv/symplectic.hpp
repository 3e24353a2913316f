#pragma once

#include "eagv/bigint.hpp"
#include "eagv/bound.hpp"
#include "eagv/error.hpp"
#include "eagv/galois_field.hpp"
#include "eagv/matrix.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace eagv {

/// (x|z) in F_q^{2n}, stored concatenated.
struct SymplecticVector {
  std::vector<Element> xz;

  std::size_t n() const noexcept { return xz.size() / 2; }
  std::span<const Element> x() const { return {xz.data(), n()}; }
  std::span<const Element> z() const { return {xz.data() + n(), n()}; }

  friend bool operator==(const SymplecticVector&, const SymplecticVector&) = default;
};

inline std::size_t hamming_weight(std::span<const Element> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Element e) { return e != 0; }));
}

inline Element dot(const Field& f, std::span<const Element> a, std::span<const Element> b) {
  Element acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

/// <(a|b), (a'|b')> = a·b' - b·a'.
inline Element symp_product(const Field& f, std::span<const Element> u, std::span<const Element> v) {
  if (u.size() != v.size() || u.size() % 2 != 0) throw InvalidParameters("symplectic length mismatch");
  const std::size_t n = u.size() / 2;
  return f.sub(dot(f, u.first(n), v.last(n)), dot(f, u.last(n), v.first(n)));
}

inline Element symp_product(const Field& f, const SymplecticVector& u, const SymplecticVector& v) {
  return symp_product(f, std::span<const Element>(u.xz), std::span<const Element>(v.xz));
}

/// H_X H_Z^T - H_Z H_X^T for H = (H_X | H_Z).
inline Matrix gram_matrix(const Field& f, const Matrix& h) {
  const std::size_t n = h.cols() / 2;
  Matrix hx(h.rows(), n), hz(h.rows(), n);
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      hx(r, j) = h(r, j);
      hz(r, j) = h(r, n + j);
    }
  return subtract(f, multiply(f, hx, transpose(hz)), multiply(f, hz, transpose(hx)));
}

namespace detail {

// (-H_Z | H_X): its right kernel is the symplectic dual of the row space of H.
inline Matrix symplectic_swap(const Field& f, const Matrix& h) {
  const std::size_t n = h.cols() / 2;
  Matrix out(h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      out(r, j) = f.neg(h(r, n + j));
      out(r, n + j) = h(r, j);
    }
  return out;
}

inline Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out(0, a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) out.append_row(a.row(r));
  for (std::size_t r = 0; r < b.rows(); ++r) out.append_row(b.row(r));
  return out;
}

} // namespace detail

/// The row space C of a generator matrix H = (H_X | H_Z) together with its
/// derived dimensions. Immutable; build with analyze_code.
class CodeSpace {
public:
  const Field& field() const noexcept { return field_; }
  std::size_t n() const noexcept { return n_; }
  const Matrix& generators() const noexcept { return generators_; }
  const RowEchelon& echelon() const noexcept { return echelon_; }
  const Matrix& basis() const noexcept { return echelon_.basis; }
  const Matrix& dual_basis() const noexcept { return dual_basis_; }

  std::size_t ell() const noexcept { return echelon_.rank(); }
  std::size_t c() const noexcept { return gram_rank_ / 2; }
  std::size_t gram_rank() const noexcept { return gram_rank_; }
  std::size_t dim_intersection() const noexcept { return dim_intersection_; }
  std::size_t dim_dual() const noexcept { return dual_basis_.rows(); }

  bool contains(std::span<const Element> v) const { return in_row_space(field_, echelon_, v); }

  bool dual_contains(std::span<const Element> v) const {
    for (std::size_t r = 0; r < echelon_.basis.rows(); ++r)
      if (symp_product(field_, echelon_.basis.row(r), v) != 0) return false;
    return true;
  }

private:
  friend CodeSpace analyze_code(const Field&, std::size_t, const Matrix&);
  CodeSpace(Field f, std::size_t n) : field_(std::move(f)), n_(n) {}

  Field field_;
  std::size_t n_;
  Matrix generators_;
  RowEchelon echelon_;
  Matrix dual_basis_;
  std::size_t gram_rank_ = 0;
  std::size_t dim_intersection_ = 0;
};

/// Computes ell = rank H, the entanglement degree c from the rank of the
/// Gram matrix of a row basis, a basis of C^⊥s and dim(C ∩ C^⊥s). The
/// intersection dimension is obtained as dim C + dim C^⊥s - dim(C + C^⊥s)
/// and must equal ell - 2c.
inline CodeSpace analyze_code(const Field& f, std::size_t n, const Matrix& h) {
  if (n < 1) throw InvalidParameters("n < 1");
  if (h.cols() != 2 * n)
    throw InvalidParameters("generator matrix has " + std::to_string(h.cols()) + " columns, expected " +
                            std::to_string(2 * n));
  h.check_entries(f);

  CodeSpace cs(f, n);
  cs.generators_ = h;
  cs.echelon_ = rref(f, h);
  cs.gram_rank_ = rank(f, gram_matrix(f, cs.echelon_.basis));
  if (cs.gram_rank_ % 2 != 0) throw std::logic_error("odd rank of an alternating Gram matrix");

  cs.dual_basis_ = kernel(f, detail::symplectic_swap(f, cs.echelon_.basis));
  const std::size_t sum_dim = rank(f, detail::stack(cs.echelon_.basis, cs.dual_basis_));
  cs.dim_intersection_ = cs.ell() + cs.dim_dual() - sum_dim;
  if (cs.dim_intersection_ + cs.gram_rank_ != cs.ell())
    throw std::logic_error("entanglement degree identity violated");
  return cs;
}

inline CodeSpace symplectic_dual(const CodeSpace& cs) {
  return analyze_code(cs.field(), cs.n(), cs.dual_basis());
}

/// Lexicographic generator of F_q^n vectors with Hamming weight <= max_weight.
/// Digits are compared as integers, position 0 most significant.
class WeightBoundedVectors {
public:
  WeightBoundedVectors(std::size_t n, std::uint32_t q, std::size_t max_weight)
      : digits_(n, 0), q_(q), max_weight_(max_weight) {}

  const std::vector<Element>& current() const noexcept { return digits_; }
  std::size_t weight() const noexcept { return hamming_weight(digits_); }

  /// Advances to the next vector; false when exhausted.
  bool next() {
    std::size_t prefix_weight = hamming_weight(digits_);
    for (std::size_t i = digits_.size(); i-- > 0;) {
      if (digits_[i] != 0) --prefix_weight;  // weight of digits_[0..i)
      if (digits_[i] + 1 >= q_) continue;
      if (prefix_weight + 1 > max_weight_) continue;
      ++digits_[i];
      std::fill(digits_.begin() + static_cast<std::ptrdiff_t>(i) + 1, digits_.end(), 0);
      return true;
    }
    return false;
  }

private:
  std::vector<Element> digits_;
  std::uint32_t q_;
  std::size_t max_weight_;
};

struct DetectionResult {
  bool ok = true;
  std::optional<SymplecticVector> counterexample;
  std::uint64_t candidates = 0;  // error vectors examined
};

inline constexpr std::uint64_t default_detection_budget = 10'000'000;

/// Number of candidate error vectors (x|z) with w(x) <= d_x - 1, w(z) <= d_z - 1.
inline BigInt detection_candidates(const CodeSpace& cs, std::uint64_t d_x, std::uint64_t d_z) {
  return ball_sum(cs.n(), d_x, cs.field().q()) * ball_sum(cs.n(), d_z, cs.field().q());
}

/// Exhaustively checks that no nonzero (x|z) with w(x) <= d_x - 1 and
/// w(z) <= d_z - 1 lies in C^⊥s \ C. Candidates are visited by total weight,
/// then lexicographically by (x, z); the first hit is reported.
inline DetectionResult detection_check(const CodeSpace& cs, std::uint64_t d_x, std::uint64_t d_z,
                                       std::uint64_t budget = default_detection_budget) {
  if (d_x < 1 || d_z < 1) throw InvalidParameters("detection distances must be >= 1");
  const BigInt required = detection_candidates(cs, d_x, d_z);
  if (required > budget) {
    const std::uint64_t req = required > std::numeric_limits<std::uint64_t>::max()
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : static_cast<std::uint64_t>(required);
    throw BudgetExceeded("detection check needs " + required.str() + " candidates, budget is " +
                             std::to_string(budget),
                         req, budget);
  }

  const std::size_t n = cs.n();
  const std::uint32_t q = cs.field().q();
  const std::size_t wx_max = std::min<std::uint64_t>(d_x - 1, n);
  const std::size_t wz_max = std::min<std::uint64_t>(d_z - 1, n);

  DetectionResult result;
  std::vector<Element> v(2 * n, 0);
  for (std::size_t total = 1; total <= wx_max + wz_max; ++total) {
    WeightBoundedVectors xs(n, q, std::min(wx_max, total));
    do {
      const std::size_t wx = xs.weight();
      if (total - wx > wz_max) continue;
      const std::size_t wz = total - wx;
      std::copy(xs.current().begin(), xs.current().end(), v.begin());
      WeightBoundedVectors zs(n, q, wz);
      do {
        if (zs.weight() != wz) continue;
        std::copy(zs.current().begin(), zs.current().end(), v.begin() + static_cast<std::ptrdiff_t>(n));
        ++result.candidates;
        if (cs.dual_contains(v) && !cs.contains(v)) {
          result.ok = false;
          result.counterexample = SymplecticVector{v};
          return result;
        }
      } while (zs.next());
    } while (xs.next());
  }
  return result;
}

class NotCertified : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// [[n, k, d_x/d_z; c]]_q with k = n - ell + c.
struct EaqeccParams {
  std::size_t n = 0;
  std::int64_t k = 0;
  std::uint64_t d_x = 1;
  std::uint64_t d_z = 1;
  std::size_t c = 0;
  std::uint32_t q = 2;

  friend bool operator==(const EaqeccParams&, const EaqeccParams&) = default;
};

inline EaqeccParams eaqecc_params(const CodeSpace& cs, std::uint64_t d_x, std::uint64_t d_z,
                                  std::uint64_t budget = default_detection_budget) {
  const auto det = detection_check(cs, d_x, d_z, budget);
  if (!det.ok) throw NotCertified("detection of d_x/d_z errors is not certified for this code");
  return {cs.n(),
          static_cast<std::int64_t>(cs.n()) - static_cast<std::int64_t>(cs.ell()) + static_cast<std::int64_t>(cs.c()),
          d_x,
          d_z,
          cs.c(),
          cs.field().q()};
}

} // namespace eagv
