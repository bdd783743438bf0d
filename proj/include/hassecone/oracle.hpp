#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cones.hpp"
#include "reduction.hpp"
#include "splitting.hpp"
#include "weights.hpp"

// Independent brute-force procedures used as ground truth for the cone and
// reduction modules.  Everything here is exhaustive within a guarded box
// and deterministic: results never depend on iteration order.

namespace hassecone {

inline constexpr std::uint64_t kDefaultOracleCeiling = 10'000'000;

// Thrown when an enumeration would exceed the configured ceiling.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(Int required, std::uint64_t ceiling)
      : std::runtime_error("oracle guard: search space of size " +
                           required.str() + " exceeds ceiling " +
                           std::to_string(ceiling)),
        required_(std::move(required)),
        ceiling_(ceiling) {}

  const Int& required() const { return required_; }
  std::uint64_t ceiling() const { return ceiling_; }

 private:
  Int required_;
  std::uint64_t ceiling_;
};

// Componentwise integer box [lo, hi]^d over a splitting type.
struct BoxSpec {
  SplittingType st;
  Int lo;
  Int hi;

  BoxSpec(SplittingType st_, Int lo_, Int hi_)
      : st(std::move(st_)), lo(std::move(lo_)), hi(std::move(hi_)) {
    if (lo > hi) {
      throw std::invalid_argument("box: lo = " + lo.str() +
                                  " exceeds hi = " + hi.str());
    }
  }

  Int point_count() const {
    Int side = hi - lo + 1;
    Int n = 1;
    for (std::size_t i = 0; i < st.total_degree(); ++i) n *= side;
    return n;
  }
};

namespace detail {

inline void check_guard(const Int& required, std::uint64_t ceiling) {
  if (required > ceiling) throw GuardExceeded(required, ceiling);
}

// Lexicographic odometer over [lo_i, hi_i] per coordinate; returns false
// once the range is exhausted.
inline bool advance(std::vector<Int>& v, const std::vector<Int>& lo,
                    const std::vector<Int>& hi) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < hi[i]) {
      ++v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = lo[j];
      return true;
    }
  }
  return false;
}

}  // namespace detail

// The componentwise-least exponent vectors n >= 0 with
// k - combine(n) in the minimal cone.  Empty when no such n exists.
//
// Least, not greatest: a strictly violated inequality at beta forces
// n_beta >= 1 in every successful n, so the success set has a least
// element and that element is the one every reduction chain realizes.
// (The greatest element is plain cone geometry -- e.g. it reaches the
// origin whenever the whole Hasse-coordinate vector is integral -- and
// matches no reduction outcome.)  Uniqueness is still not assumed;
// callers that need it must check unique().
struct BoxSearchResult {
  std::vector<WeightVector> minimal_exponents;

  bool found() const { return !minimal_exponents.empty(); }
  bool unique() const { return minimal_exponents.size() == 1; }
  const WeightVector& unique_minimal() const {
    if (!unique()) {
      throw std::logic_error("box_search: least exponent is not unique");
    }
    return minimal_exponents.front();
  }
};

// Exhaustive search over 0 <= n_beta <= max(0, floor(y_beta)).  The bounds
// are complete: an endpoint in the minimal cone has y >= 0, forcing
// n <= y(k) componentwise.
inline BoxSearchResult box_search(
    const WeightVector& k, std::uint64_t ceiling = kDefaultOracleCeiling) {
  const SplittingType& st = k.splitting();
  const std::size_t d = st.total_degree();
  const std::vector<Rat> y = hasse_coordinates(k).y.entries();

  std::vector<Int> lo(d, Int(0));
  std::vector<Int> hi(d);
  Int candidates = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Int b = floor_rat(y[i]);
    if (b < 0) b = 0;
    hi[i] = b;
    candidates *= b + 1;
  }
  detail::check_guard(candidates, ceiling);

  std::vector<std::vector<Int>> successes;
  std::vector<Int> n = lo;
  while (true) {
    WeightVector endpoint = k - combine(WeightVector(st, n));
    if (in_min_cone(endpoint)) successes.push_back(n);
    if (!detail::advance(n, lo, hi)) break;
  }

  // Keep the componentwise-minimal successes: sweep by increasing entry sum,
  // so anything below a candidate has already been kept.
  std::sort(successes.begin(), successes.end(),
            [](const std::vector<Int>& a, const std::vector<Int>& b) {
              Int sa = 0, sb = 0;
              for (const Int& v : a) sa += v;
              for (const Int& v : b) sb += v;
              if (sa != sb) return sa < sb;
              return a < b;
            });
  BoxSearchResult result;
  for (const std::vector<Int>& cand : successes) {
    bool dominates_kept = false;
    for (const WeightVector& kept : result.minimal_exponents) {
      bool ge = true;
      for (std::size_t i = 0; i < d; ++i) {
        if (cand[i] < kept[i]) {
          ge = false;
          break;
        }
      }
      if (ge) {
        dominates_kept = true;
        break;
      }
    }
    if (!dominates_kept) result.minimal_exponents.emplace_back(st, cand);
  }
  return result;
}

// Terminal of a reduction path: the endpoint entries for a minimal exit,
// nullopt for a vanishing exit.
using ReductionTerminal = std::optional<std::vector<Int>>;

struct ConfluenceCounterexample {
  WeightVector k;
  std::vector<ReductionTerminal> outcomes;  // sorted, at least two
};

struct ConfluenceReport {
  BoxSpec box;
  std::uint64_t weights_checked = 0;
  std::uint64_t states_explored = 0;
  std::vector<ConfluenceCounterexample> counterexamples;
};

namespace detail {

// Set of terminals reachable from `entries` under every choice of step,
// memoized on the weight itself (the vanishing test is a property of the
// state, not of the path, so memoization is sound).
inline const std::set<ReductionTerminal>& reachable_terminals(
    const SplittingType& st, const std::vector<Int>& entries,
    std::map<std::vector<Int>, std::set<ReductionTerminal>>& memo) {
  if (auto it = memo.find(entries); it != memo.end()) return it->second;

  const WeightVector current(st, entries);
  std::set<ReductionTerminal> out;
  const std::vector<Rat> y = hasse_coordinates(current).y.entries();
  if (vanishing_witness(current, y)) {
    out.insert(std::nullopt);
  } else {
    bool any = false;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Embedding beta = st.embedding_at(i);
      if (reducible_at(current, beta)) {
        any = true;
        const WeightVector next = current - hasse_weight(st, beta);
        const auto& sub = reachable_terminals(st, next.entries(), memo);
        out.insert(sub.begin(), sub.end());
      }
    }
    if (!any) out.insert(entries);  // minimal exit
  }
  return memo.emplace(entries, std::move(out)).first->second;
}

}  // namespace detail

// For every integer weight in the box, explores the full tree of reduction
// choices and reports each weight from which two choices end differently.
// The deterministic strategies are cross-checked against the tree.
inline ConfluenceReport confluence_sweep(
    const BoxSpec& box, std::uint64_t ceiling = kDefaultOracleCeiling) {
  detail::check_guard(box.point_count(), ceiling);
  const SplittingType& st = box.st;
  const std::size_t d = st.total_degree();

  ConfluenceReport report{box, 0, 0, {}};
  std::map<std::vector<Int>, std::set<ReductionTerminal>> memo;

  const std::vector<Int> lo(d, box.lo);
  const std::vector<Int> hi(d, box.hi);
  std::vector<Int> k = lo;
  while (true) {
    const auto& outcomes = detail::reachable_terminals(st, k, memo);
    ++report.weights_checked;

    for (StepStrategy s :
         {StepStrategy::FirstViolated, StepStrategy::LastViolated}) {
      const ReductionOutcome r = reduce(WeightVector(st, k), s);
      const ReductionTerminal t =
          r.is_minimal() ? ReductionTerminal(r.minimal().k_min.entries())
                         : std::nullopt;
      if (!outcomes.count(t)) {
        throw std::logic_error(
            "confluence_sweep: deterministic strategy left the choice tree");
      }
    }

    if (outcomes.size() > 1) {
      report.counterexamples.push_back(ConfluenceCounterexample{
          WeightVector(st, k),
          std::vector<ReductionTerminal>(outcomes.begin(), outcomes.end())});
    }
    if (!detail::advance(k, lo, hi)) break;
  }
  report.states_explored = memo.size();
  return report;
}

enum class WeightTag {
  MinimalAlready,
  ReducesToMinimal,
  VanishingByHasse,  // already outside the Hasse cone
  VanishingByChain,  // inside the Hasse cone, but the chain certifies zero
};

inline std::string to_string(WeightTag tag) {
  switch (tag) {
    case WeightTag::MinimalAlready: return "minimal_already";
    case WeightTag::ReducesToMinimal: return "reduces";
    case WeightTag::VanishingByHasse: return "vanishing_by_hasse";
    case WeightTag::VanishingByChain: return "vanishing_by_chain";
  }
  throw std::logic_error("unreachable");
}

struct Classification {
  WeightVector k;
  WeightTag tag;
  std::optional<WeightVector> exponents;     // ReducesToMinimal only
  std::optional<VanishingWitness> witness;   // vanishing tags only
};

struct Census {
  BoxSpec box;
  std::uint64_t minimal_already = 0;
  std::uint64_t reduces = 0;
  std::uint64_t vanishing_by_hasse = 0;
  std::uint64_t vanishing_by_chain = 0;
  std::vector<Classification> rows;  // populated when keep_rows is set

  std::uint64_t total() const {
    return minimal_already + reduces + vanishing_by_hasse + vanishing_by_chain;
  }
};

// Classifies every integer weight in the box by its reduction outcome,
// cross-checking the tags against the cone predicates as it goes.
inline Census classify_box(const BoxSpec& box,
                           std::uint64_t ceiling = kDefaultOracleCeiling,
                           bool keep_rows = false) {
  detail::check_guard(box.point_count(), ceiling);
  const SplittingType& st = box.st;
  const std::size_t d = st.total_degree();

  Census census{box, 0, 0, 0, 0, {}};
  const std::vector<Int> lo(d, box.lo);
  const std::vector<Int> hi(d, box.hi);
  std::vector<Int> entries = lo;
  while (true) {
    WeightVector k(st, entries);
    const bool hasse = in_hasse_cone(k);
    Classification row{k, WeightTag::MinimalAlready, std::nullopt,
                       std::nullopt};
    if (in_min_cone(k)) {
      ++census.minimal_already;
      if (!hasse) {
        throw std::logic_error("classify_box: minimal weight outside "
                               "the Hasse cone");
      }
    } else {
      ReductionOutcome outcome = reduce(k);
      if (outcome.is_minimal()) {
        row.tag = WeightTag::ReducesToMinimal;
        row.exponents = outcome.minimal().exponents;
        ++census.reduces;
        if (!hasse) {
          throw std::logic_error("classify_box: reducible weight outside "
                                 "the Hasse cone");
        }
      } else {
        row.witness = outcome.vanishing().witness;
        if (!hasse) {
          row.tag = WeightTag::VanishingByHasse;
          ++census.vanishing_by_hasse;
          if (!outcome.trace.empty()) {
            throw std::logic_error("classify_box: weight outside the Hasse "
                                   "cone should vanish with an empty trace");
          }
        } else {
          row.tag = WeightTag::VanishingByChain;
          ++census.vanishing_by_chain;
        }
      }
    }
    if (keep_rows) census.rows.push_back(std::move(row));
    if (!detail::advance(entries, lo, hi)) break;
  }
  return census;
}

struct HilbertBasisResult {
  SplittingType st;
  Int bound;
  std::vector<WeightVector> basis;
  // True when every basis entry is <= bound/2, so any cone lattice point
  // outside the box still decomposes through the returned set.
  bool certified_complete = false;
};

// Brute-force Hilbert basis of the monoid of integer minimal-cone points:
// collect the cone's lattice points with entries in [0, bound] (the cone
// sits inside the nonnegative orthant) and keep those not expressible as a
// sum of two nonzero collected points.
inline HilbertBasisResult hilbert_basis(
    const SplittingType& st, const Int& bound,
    std::uint64_t ceiling = kDefaultOracleCeiling) {
  if (bound < 0) {
    throw std::invalid_argument("hilbert_basis: bound must be >= 0");
  }
  const std::size_t d = st.total_degree();
  Int grid = 1;
  for (std::size_t i = 0; i < d; ++i) grid *= bound + 1;
  detail::check_guard(grid, ceiling);

  const std::vector<Int> lo(d, Int(0));
  const std::vector<Int> hi(d, bound);
  std::set<std::vector<Int>> cone_points;
  std::vector<Int> x = lo;
  while (true) {
    if (in_min_cone(WeightVector(st, x))) {
      bool zero = true;
      for (const Int& v : x) {
        if (v != 0) zero = false;
      }
      if (!zero) cone_points.insert(x);
    }
    if (!detail::advance(x, lo, hi)) break;
  }

  HilbertBasisResult result{st, bound, {}, false};
  for (const std::vector<Int>& cand : cone_points) {
    bool decomposable = false;
    for (const std::vector<Int>& u : cone_points) {
      if (u == cand) continue;
      std::vector<Int> v(d);
      bool ok = true;
      for (std::size_t i = 0; i < d; ++i) {
        v[i] = cand[i] - u[i];
        if (v[i] < 0) {
          ok = false;
          break;
        }
      }
      if (ok && cone_points.count(v)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) result.basis.emplace_back(st, cand);
  }

  // An empty basis generates only the origin and is never complete for
  // these cones (the rays are nonzero lattice points).
  result.certified_complete = !result.basis.empty();
  for (const WeightVector& b : result.basis) {
    for (const Int& v : b.entries()) {
      if (2 * v > bound) result.certified_complete = false;
    }
  }
  return result;
}

}  // namespace hassecone
