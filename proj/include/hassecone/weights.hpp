#pragma once

#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "splitting.hpp"

// Weight vectors indexed by the embedding set, in two exact flavours:
// integer entries (WeightVector) and rational entries (RationalVector).
// Integer vectors embed into rational ones only through an explicit
// conversion, so cone predicates can never silently lose exactness.

namespace hassecone {

using Rat = boost::multiprecision::cpp_rational;

// Exact vector indexed by embeddings in flat (orbit-major) order.
// Immutable after construction; all arithmetic returns fresh values.
template <typename Scalar>
class IndexedVector {
 public:
  IndexedVector(SplittingType st, std::vector<Scalar> entries)
      : st_(std::move(st)), entries_(std::move(entries)) {
    if (entries_.size() != st_.total_degree()) {
      throw std::invalid_argument(
          "vector length " + std::to_string(entries_.size()) +
          " does not match d = " + std::to_string(st_.total_degree()) +
          " of " + st_.to_string());
    }
  }

  // Conversion between entry types (integer -> rational) is explicit.
  template <typename Other>
  explicit IndexedVector(const IndexedVector<Other>& other)
      : st_(other.splitting()) {
    entries_.reserve(other.size());
    for (const Other& v : other.entries()) entries_.emplace_back(v);
  }

  static IndexedVector zero(const SplittingType& st) {
    return IndexedVector(st, std::vector<Scalar>(st.total_degree()));
  }

  static IndexedVector unit(const SplittingType& st, const Embedding& beta) {
    std::vector<Scalar> e(st.total_degree());
    e[st.flat_index(beta)] = 1;
    return IndexedVector(st, std::move(e));
  }

  const SplittingType& splitting() const { return st_; }
  const std::vector<Scalar>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Scalar& operator[](std::size_t flat) const { return entries_[flat]; }
  const Scalar& at(const Embedding& beta) const {
    return entries_[st_.flat_index(beta)];
  }

  Scalar sum() const {
    Scalar s = 0;
    for (const Scalar& v : entries_) s += v;
    return s;
  }

  bool is_zero() const {
    for (const Scalar& v : entries_) {
      if (v != 0) return false;
    }
    return true;
  }

  friend IndexedVector operator+(const IndexedVector& a,
                                 const IndexedVector& b) {
    a.require_same_splitting(b);
    std::vector<Scalar> r(a.entries_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.entries_[i];
    return IndexedVector(a.st_, std::move(r));
  }

  friend IndexedVector operator-(const IndexedVector& a,
                                 const IndexedVector& b) {
    a.require_same_splitting(b);
    std::vector<Scalar> r(a.entries_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.entries_[i];
    return IndexedVector(a.st_, std::move(r));
  }

  friend IndexedVector operator-(const IndexedVector& a) {
    std::vector<Scalar> r(a.entries_);
    for (Scalar& v : r) v = -v;
    return IndexedVector(a.st_, std::move(r));
  }

  friend IndexedVector operator*(const Scalar& c, const IndexedVector& a) {
    std::vector<Scalar> r(a.entries_);
    for (Scalar& v : r) v *= c;
    return IndexedVector(a.st_, std::move(r));
  }

  friend bool operator==(const IndexedVector& a, const IndexedVector& b) {
    return a.st_ == b.st_ && a.entries_ == b.entries_;
  }

  friend std::ostream& operator<<(std::ostream& os, const IndexedVector& a) {
    os << '[';
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
      if (i > 0) os << ", ";
      os << a.entries_[i];
    }
    return os << ']';
  }

 private:
  void require_same_splitting(const IndexedVector& other) const {
    if (!(st_ == other.st_)) {
      throw std::invalid_argument("splitting type mismatch: " +
                                  st_.to_string() + " vs " +
                                  other.st_.to_string());
    }
  }

  SplittingType st_;
  std::vector<Scalar> entries_;
};

using WeightVector = IndexedVector<Int>;
using RationalVector = IndexedVector<Rat>;

// Weight of the partial Hasse invariant attached to beta: p at the flat
// index of the Frobenius-inverse of beta and -1 at beta itself.  On a
// degree-one orbit the two indices coincide and the single entry is p - 1.
inline WeightVector hasse_weight(const SplittingType& st,
                                 const Embedding& beta) {
  std::vector<Int> e(st.total_degree());
  e[st.flat_index(st.frobenius_inverse(beta))] += st.p();
  e[st.flat_index(beta)] -= 1;
  return WeightVector(st, std::move(e));
}

// Sum over beta of n_beta * h_beta for a nonnegative integer exponent
// vector n.
inline WeightVector combine(const WeightVector& exponents) {
  const SplittingType& st = exponents.splitting();
  std::vector<Int> r(st.total_degree());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    const Int& n = exponents[i];
    if (n < 0) {
      throw std::invalid_argument("combine: negative exponent at flat index " +
                                  std::to_string(i));
    }
    const Embedding beta = st.embedding_at(i);
    r[st.flat_index(st.frobenius_inverse(beta))] += n * st.p();
    r[i] -= n;
  }
  return WeightVector(st, std::move(r));
}

// Same linear combination with exact rational coefficients (any sign).
inline RationalVector rational_combine(const RationalVector& coefficients) {
  const SplittingType& st = coefficients.splitting();
  const Rat p(st.p());
  std::vector<Rat> r(st.total_degree());
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const Embedding beta = st.embedding_at(i);
    r[st.flat_index(st.frobenius_inverse(beta))] += coefficients[i] * p;
    r[i] -= coefficients[i];
  }
  return RationalVector(st, std::move(r));
}

// Exact floor of a rational.
inline Int floor_rat(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);  // canonical form keeps den > 0
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

}  // namespace hassecone
