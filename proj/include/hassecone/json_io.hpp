#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include <json.hpp>

#include "cones.hpp"
#include "oracle.hpp"
#include "reduction.hpp"
#include "splitting.hpp"
#include "weights.hpp"

// JSON views of every report the library produces.  nlohmann::json keeps
// object keys sorted, so dumping any of these structures is byte-stable
// across runs for identical inputs.  Integers are emitted as JSON numbers
// while they fit in 64 bits and as decimal strings beyond that; rationals
// are always strings ("2/3", "-1/3", "4").

namespace hassecone::jsonio {

using nlohmann::json;

inline json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

inline std::string rat_to_string(const Rat& v) {
  const Int num = numerator(v);
  const Int den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline json weight_to_json(const WeightVector& w) {
  json arr = json::array();
  for (const Int& v : w.entries()) arr.push_back(int_to_json(v));
  return arr;
}

inline json rational_to_json(const RationalVector& w) {
  json arr = json::array();
  for (const Rat& v : w.entries()) arr.push_back(rat_to_string(v));
  return arr;
}

inline json embedding_to_json(const Embedding& beta) {
  return json::array({beta.orbit, beta.position});
}

inline Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) return detail::parse_int_token(j.get<std::string>(),
                                                    "integer entry");
  throw std::invalid_argument("weight entries must be integers, got " +
                              j.dump());
}

inline WeightVector weight_from_json(const SplittingType& st, const json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("weight must be a JSON array, got " +
                                j.dump());
  }
  std::vector<Int> entries;
  entries.reserve(j.size());
  for (const json& e : j) entries.push_back(int_from_json(e));
  return WeightVector(st, std::move(entries));
}

inline json witness_to_json(const VanishingWitness& w) {
  return json{
      {"kind", w.kind == VanishingWitness::Kind::DegreeOneNegative
                   ? "degree_one_negative"
                   : "negative_hasse_coordinate"},
      {"beta", embedding_to_json(w.beta)},
      {"value", rat_to_string(w.value)},
  };
}

inline json outcome_to_json(const ReductionOutcome& outcome) {
  json trace = json::array();
  for (const ReductionStep& s : outcome.trace) {
    trace.push_back(json{{"beta", embedding_to_json(s.beta)},
                         {"before", weight_to_json(s.before)},
                         {"after", weight_to_json(s.after)}});
  }
  json j{{"trace", std::move(trace)}};
  if (outcome.is_minimal()) {
    j["status"] = "minimal";
    j["k_min"] = weight_to_json(outcome.minimal().k_min);
    j["n"] = weight_to_json(outcome.minimal().exponents);
  } else {
    j["status"] = "vanishing";
    j["witness"] = witness_to_json(outcome.vanishing().witness);
  }
  return j;
}

inline json chain_to_json(const ChainReport& report) {
  json witnesses;
  if (report.witnesses) {
    witnesses = json{
        {"std_not_min", weight_to_json(report.witnesses->std_not_min)},
        {"hasse_not_std", weight_to_json(report.witnesses->hasse_not_std)},
    };
  } else {
    witnesses = nullptr;
  }
  return json{{"splits_completely", report.splits_completely},
              {"witnesses", std::move(witnesses)},
              {"note", report.note}};
}

inline json rays_to_json(const std::vector<WeightVector>& rays) {
  json arr = json::array();
  for (const WeightVector& r : rays) arr.push_back(weight_to_json(r));
  return json{{"rays", std::move(arr)}};
}

inline json cone_check_to_json(const WeightVector& k) {
  const HasseCoordinates coords = hasse_coordinates(k);
  return json{{"in_min", in_min_cone(k)},
              {"in_std", in_std_cone(k)},
              {"in_hasse", coords.all_nonnegative()},
              {"y", rational_to_json(coords.y)}};
}

inline json census_to_json(const Census& census) {
  return json{{"counts",
               json{{"minimal_already", census.minimal_already},
                    {"reduces", census.reduces},
                    {"vanishing_by_hasse", census.vanishing_by_hasse},
                    {"vanishing_by_chain", census.vanishing_by_chain}}},
              {"total", census.total()}};
}

inline std::string census_to_csv(const Census& census) {
  const std::size_t d = census.box.st.total_degree();
  std::string out;
  for (std::size_t i = 0; i < d; ++i) out += "k" + std::to_string(i) + ",";
  out += "tag\n";
  for (const Classification& row : census.rows) {
    for (std::size_t i = 0; i < d; ++i) out += row.k[i].str() + ",";
    out += to_string(row.tag) + "\n";
  }
  return out;
}

inline json confluence_to_json(const ConfluenceReport& report) {
  json ces = json::array();
  for (const ConfluenceCounterexample& ce : report.counterexamples) {
    json outcomes = json::array();
    for (const ReductionTerminal& t : ce.outcomes) {
      if (t) {
        outcomes.push_back(json{
            {"status", "minimal"},
            {"k_min", weight_to_json(WeightVector(report.box.st, *t))}});
      } else {
        outcomes.push_back(json{{"status", "vanishing"}});
      }
    }
    ces.push_back(
        json{{"k", weight_to_json(ce.k)}, {"outcomes", std::move(outcomes)}});
  }
  return json{{"counterexamples", std::move(ces)},
              {"weights_checked", report.weights_checked},
              {"states_explored", report.states_explored}};
}

inline json hilbert_to_json(const HilbertBasisResult& result) {
  json arr = json::array();
  for (const WeightVector& b : result.basis) arr.push_back(weight_to_json(b));
  return json{{"basis", std::move(arr)},
              {"certified_complete", result.certified_complete},
              {"note", result.certified_complete
                           ? "complete for the cone"
                           : "within box only"}};
}

}  // namespace hassecone::jsonio
