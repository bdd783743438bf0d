#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cones.hpp"
#include "splitting.hpp"
#include "weights.hpp"

// The weight-reduction engine.  While some embedding satisfies the strict
// inequality  p*k_beta < k at the Frobenius-inverse of beta, dividing by the
// partial Hasse invariant at beta is an isomorphism on spaces of forms, so
// the weight may be replaced by k - h_beta.  Iterating either lands in the
// minimal cone or certifies that every space of forms of the original
// weight is zero.
//
// In Hasse coordinates a step at beta subtracts exactly one from y_beta, so
// the y-vector never increases along a chain.  That gives both the
// vanishing certificate (once any y_beta < 0, no continuation can reach the
// minimal cone, whose points have y >= 0) and the termination bound
// 1 + sum over beta of max(0, floor(y_beta)).

namespace hassecone {

enum class StepStrategy {
  FirstViolated,  // lexicographically smallest flat index; canonical output
  LastViolated,
  AllStrategies,  // only meaningful to confluence_sweep, not to reduce()
};

// One division step.  At `before` the strict inequality holds at beta, and
// after = before - h_beta exactly.
struct ReductionStep {
  Embedding beta;
  WeightVector before;
  WeightVector after;
};

struct VanishingWitness {
  enum class Kind {
    NegativeHasseCoordinate,  // y_beta < 0; value is that coordinate
    DegreeOneNegative,        // k_beta < 0 on a degree-one orbit; value is
                              // the entry itself (the sharper criterion)
  };
  Kind kind;
  Embedding beta;
  Rat value;
};

struct MinimalOutcome {
  WeightVector k_min;      // lies in the minimal cone
  WeightVector exponents;  // n >= 0 with original k = k_min + combine(n)
};

struct VanishingOutcome {
  VanishingWitness witness;
};

struct ReductionOutcome {
  std::variant<MinimalOutcome, VanishingOutcome> result;
  std::vector<ReductionStep> trace;

  bool is_minimal() const {
    return std::holds_alternative<MinimalOutcome>(result);
  }
  const MinimalOutcome& minimal() const {
    return std::get<MinimalOutcome>(result);
  }
  const VanishingOutcome& vanishing() const {
    return std::get<VanishingOutcome>(result);
  }
};

// True iff the strict step inequality holds at beta (exact comparison).
inline bool reducible_at(const WeightVector& k, const Embedding& beta) {
  const SplittingType& st = k.splitting();
  const std::size_t i = st.flat_index(beta);
  const std::size_t prev = st.flat_index(st.frobenius_inverse(beta));
  return st.p() * k[i] < k[prev];
}

namespace detail {

// Scans for a vanishing certificate at the current weight.  Degree-one
// orbits are scanned first so the sharper label wins where both apply
// (on such orbits the two conditions are equivalent).
inline std::optional<VanishingWitness> vanishing_witness(
    const WeightVector& current, const std::vector<Rat>& y) {
  const SplittingType& st = current.splitting();
  for (std::size_t i = 0; i < current.size(); ++i) {
    const Embedding beta = st.embedding_at(i);
    if (st.degree(beta.orbit) == 1 && current[i] < 0) {
      return VanishingWitness{VanishingWitness::Kind::DegreeOneNegative, beta,
                              Rat(current[i])};
    }
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] < 0) {
      return VanishingWitness{VanishingWitness::Kind::NegativeHasseCoordinate,
                              st.embedding_at(i), y[i]};
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline ReductionOutcome reduce(
    const WeightVector& k,
    StepStrategy strategy = StepStrategy::FirstViolated) {
  if (strategy == StepStrategy::AllStrategies) {
    throw std::invalid_argument(
        "reduce: AllStrategies is reserved for confluence sweeps");
  }
  const SplittingType& st = k.splitting();
  const std::size_t d = st.total_degree();

  std::vector<std::size_t> prev(d);  // flat index of the Frobenius-inverse
  for (std::size_t i = 0; i < d; ++i) {
    prev[i] = st.flat_index(st.frobenius_inverse(st.embedding_at(i)));
  }

  std::vector<Rat> y = hasse_coordinates(k).y.entries();
  Int step_bound = 1;
  for (const Rat& v : y) {
    const Int fl = floor_rat(v);
    if (fl > 0) step_bound += fl;
  }

  WeightVector current = k;
  std::vector<Int> exponents(d);
  std::vector<ReductionStep> trace;

  while (true) {
    // Certify vanishing as soon as it is visible; sound because y is
    // nonincreasing along any chain.
    if (auto witness = detail::vanishing_witness(current, y)) {
      return ReductionOutcome{VanishingOutcome{std::move(*witness)},
                              std::move(trace)};
    }

    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < d; ++i) {
      if (st.p() * current[i] < current[prev[i]]) {
        pick = i;
        if (strategy == StepStrategy::FirstViolated) break;
      }
    }

    if (!pick) {
      // No violated inequality is precisely membership in the minimal cone.
      WeightVector n(st, std::move(exponents));
      if (!in_min_cone(current)) {
        throw std::logic_error("reduce: minimal exit outside the minimal cone");
      }
      if (!(current + combine(n) == k)) {
        throw std::logic_error("reduce: conservation check failed");
      }
      return ReductionOutcome{MinimalOutcome{std::move(current), std::move(n)},
                              std::move(trace)};
    }

    if (Int(trace.size()) + 1 > step_bound) {
      throw std::logic_error("reduce: termination bound exceeded");
    }

    const std::size_t i = *pick;
    const Embedding beta = st.embedding_at(i);
    WeightVector after = current - hasse_weight(st, beta);
    trace.push_back(ReductionStep{beta, current, after});
    current = std::move(after);
    y[i] -= 1;
    exponents[i] += 1;
  }
}

namespace detail {

inline std::string embedding_label(const Embedding& beta) {
  return "(" + std::to_string(beta.orbit) + "," +
         std::to_string(beta.position) + ")";
}

inline std::string rat_string(const Rat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace detail

// Human-readable narration of an outcome: each step with the inequality
// that licensed it, numbers substituted, then the endpoint or the witness.
inline std::string explain(const ReductionOutcome& outcome) {
  std::ostringstream os;
  for (std::size_t i = 0; i < outcome.trace.size(); ++i) {
    const ReductionStep& step = outcome.trace[i];
    const SplittingType& st = step.before.splitting();
    const Int& kb = step.before.at(step.beta);
    const Int& kprev = step.before.at(st.frobenius_inverse(step.beta));
    os << "step " << (i + 1) << ": divide by H_"
       << detail::embedding_label(step.beta) << " since " << st.p() << "*"
       << kb << " = " << st.p() * kb << " < " << kprev << ", giving "
       << step.after << "\n";
  }
  if (outcome.is_minimal()) {
    const MinimalOutcome& m = outcome.minimal();
    if (outcome.trace.empty()) {
      os << "already in minimal cone\n";
    }
    os << "minimal weight k_min = " << m.k_min << "\n";
    os << "exponents n = " << m.exponents << "\n";
  } else {
    const VanishingWitness& w = outcome.vanishing().witness;
    if (w.kind == VanishingWitness::Kind::DegreeOneNegative) {
      os << "vanishing: k_" << detail::embedding_label(w.beta) << " = "
         << detail::rat_string(w.value)
         << " is negative on a degree-one orbit\n";
    } else {
      os << "vanishing: Hasse coordinate y_" << detail::embedding_label(w.beta)
         << " = " << detail::rat_string(w.value)
         << " is negative; no continuation reaches the minimal cone\n";
    }
  }
  return os.str();
}

}  // namespace hassecone
