#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "splitting.hpp"
#include "weights.hpp"

// The three nested weight cones and the Hasse change of coordinates.
//
// Indexing convention, fixed once for the whole library: within an orbit of
// length f, Frobenius sends position j to j+1 (mod f).  Hence h at position
// j has entry +p at position j-1 (mod f) and -1 at position j, and the
// minimal-cone inequality attached to position j reads  p*x_j >= x_{j-1}.
//
//   minimal cone   p*x_beta >= x at the Frobenius-inverse of beta, all beta
//   standard cone  x_beta >= 0, all beta
//   Hasse cone     all Hasse coordinates y_beta >= 0
//
// The containments minimal <= standard <= Hasse always hold, with equality
// throughout exactly when p splits completely.

namespace hassecone {

// Coefficients y with k = sum over beta of y_beta * h_beta.  For an integer
// weight the denominators on an orbit of length f divide p^f - 1.
struct HasseCoordinates {
  RationalVector y;

  bool all_nonnegative() const {
    for (const Rat& v : y.entries()) {
      if (v < 0) return false;
    }
    return true;
  }
};

template <typename Scalar>
bool in_min_cone(const IndexedVector<Scalar>& x) {
  const SplittingType& st = x.splitting();
  const Scalar p(st.p());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Embedding beta = st.embedding_at(i);
    const std::size_t prev = st.flat_index(st.frobenius_inverse(beta));
    if (p * x[i] < x[prev]) return false;
  }
  return true;
}

template <typename Scalar>
bool in_std_cone(const IndexedVector<Scalar>& x) {
  for (const Scalar& v : x.entries()) {
    if (v < 0) return false;
  }
  return true;
}

// Change of coordinates into the Hasse basis.  Solved orbitwise by the
// closed formula
//
//   y_j = (sum_{t=0}^{f-1} p^t * k_{j+t mod f}) / (p^f - 1),
//
// which inverts the defining relations k_j = p*y_{j+1} - y_j.  The result
// is round-trip checked against rational_combine before returning; a
// mismatch means the sigma vs sigma-inverse convention was violated
// somewhere and is reported as a logic error.
inline HasseCoordinates hasse_coordinates(const RationalVector& k) {
  const SplittingType& st = k.splitting();
  const Rat p(st.p());
  std::vector<Rat> y(st.total_degree());
  std::size_t start = 0;
  for (std::size_t o = 0; o < st.orbit_count(); ++o) {
    const std::size_t f = st.degree(o);
    const Rat den(st.hasse_denominator(o));
    for (std::size_t j = 0; j < f; ++j) {
      Rat acc = 0;
      Rat pt = 1;
      for (std::size_t t = 0; t < f; ++t) {
        acc += pt * k[start + (j + t) % f];
        pt *= p;
      }
      y[start + j] = acc / den;
    }
    start += f;
  }
  HasseCoordinates coords{RationalVector(st, std::move(y))};
  if (!(rational_combine(coords.y) == k)) {
    throw std::logic_error(
        "hasse_coordinates: round-trip verification failed");
  }
  return coords;
}

inline HasseCoordinates hasse_coordinates(const WeightVector& k) {
  return hasse_coordinates(RationalVector(k));
}

template <typename Scalar>
bool in_hasse_cone(const IndexedVector<Scalar>& x) {
  return hasse_coordinates(RationalVector(x)).all_nonnegative();
}

// Extreme rays of the minimal cone, one per embedding, in flat order.  The
// ray attached to orbit-position c is supported on its orbit with entry
// p^(f-1-((j-c) mod f)) at position j: the columns of the inverse of the
// orbit's inequality matrix, cleared to integers.  Each ray is primitive
// (the exponent 0 entry makes the content 1) and satisfies all but one of
// its own orbit's inequalities with equality.
inline std::vector<WeightVector> min_cone_rays(const SplittingType& st) {
  std::vector<WeightVector> rays;
  rays.reserve(st.total_degree());
  std::size_t start = 0;
  for (std::size_t o = 0; o < st.orbit_count(); ++o) {
    const std::size_t f = st.degree(o);
    for (std::size_t c = 0; c < f; ++c) {
      std::vector<Int> e(st.total_degree());
      for (std::size_t j = 0; j < f; ++j) {
        const std::size_t expo = f - 1 - ((j + f - c) % f);
        Int v = 1;
        for (std::size_t t = 0; t < expo; ++t) v *= st.p();
        e[start + j] = v;
      }
      rays.emplace_back(st, std::move(e));
    }
    start += f;
  }
  return rays;
}

// Witnesses separating the three cones, taken on the first orbit of length
// > 1: the unit vector there lies in the standard cone but not the minimal
// one, and the corresponding Hasse weight lies in the Hasse cone but not
// the standard one.
struct ChainWitnesses {
  Embedding beta;
  WeightVector std_not_min;
  WeightVector hasse_not_std;
};

struct ChainReport {
  SplittingType st;
  bool splits_completely;
  std::optional<ChainWitnesses> witnesses;  // absent in the split case
  std::string note;
};

inline ChainReport chain_report(const SplittingType& st) {
  if (st.splits_completely()) {
    return ChainReport{
        st, true, std::nullopt,
        "p splits completely: all three membership predicates coincide "
        "with the nonnegative-orthant test"};
  }
  std::size_t o = 0;
  while (st.degree(o) == 1) ++o;
  const Embedding beta{o, 0};
  ChainWitnesses w{beta, WeightVector::unit(st, beta), hasse_weight(st, beta)};
  if (!in_std_cone(w.std_not_min) || in_min_cone(w.std_not_min) ||
      !in_hasse_cone(w.hasse_not_std) || in_std_cone(w.hasse_not_std)) {
    throw std::logic_error("chain_report: witness predicates failed");
  }
  return ChainReport{st, false, std::move(w),
                     "containments are strict on orbits of length > 1"};
}

}  // namespace hassecone
