#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Combinatorial skeleton of the embedding set: a disjoint union of cyclic
// Frobenius orbits, one orbit per prime above p, of size equal to that
// prime's residue degree.  Everything downstream (weight vectors, cones,
// reduction) is a function of this data alone; no number field is ever
// represented.

namespace hassecone {

using Int = boost::multiprecision::cpp_int;

// An embedding, named by its orbit and its position within the cycle.
struct Embedding {
  std::size_t orbit = 0;
  std::size_t position = 0;

  friend bool operator==(const Embedding&, const Embedding&) = default;
  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

namespace detail {

// Deterministic trial division.  Intended for desk-scale primes; the whole
// calculus only ever multiplies by p and p^f, so p stays small in practice.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int i = 3; i * i <= n; i += 2) {
    if (n % i == 0) return false;
  }
  return true;
}

}  // namespace detail

// The prime p together with the residue degrees of the primes above it.
// Orbit order is exactly the order the degrees were given in; flat indexing
// of embeddings is orbit-major, position-minor, and is the index order used
// by every vector type and every piece of I/O in the library.
class SplittingType {
 public:
  SplittingType(Int p, std::vector<std::size_t> degrees)
      : p_(std::move(p)), degrees_(std::move(degrees)) {
    if (!detail::is_prime(p_)) {
      throw std::invalid_argument("splitting type: p = " + p_.str() +
                                  " is not prime");
    }
    if (degrees_.empty()) {
      throw std::invalid_argument("splitting type: degree list is empty");
    }
    offsets_.reserve(degrees_.size());
    for (std::size_t f : degrees_) {
      if (f < 1) {
        throw std::invalid_argument(
            "splitting type: residue degrees must be >= 1");
      }
      offsets_.push_back(d_);
      d_ += f;
    }
  }

  const Int& p() const { return p_; }
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  std::size_t orbit_count() const { return degrees_.size(); }
  std::size_t degree(std::size_t orbit) const { return degrees_.at(orbit); }

  // d, the total number of embeddings.
  std::size_t total_degree() const { return d_; }

  // True iff every residue degree is 1; exactly the case in which the
  // minimal, standard and Hasse cones coincide.
  bool splits_completely() const {
    for (std::size_t f : degrees_) {
      if (f != 1) return false;
    }
    return true;
  }

  void validate(const Embedding& beta) const {
    if (beta.orbit >= degrees_.size() ||
        beta.position >= degrees_[beta.orbit]) {
      throw std::out_of_range("embedding (" + std::to_string(beta.orbit) +
                              "," + std::to_string(beta.position) +
                              ") out of range for " + to_string());
    }
  }

  std::size_t flat_index(const Embedding& beta) const {
    validate(beta);
    return offsets_[beta.orbit] + beta.position;
  }

  Embedding embedding_at(std::size_t flat) const {
    if (flat >= d_) {
      throw std::out_of_range("flat index " + std::to_string(flat) +
                              " out of range for " + to_string());
    }
    std::size_t orbit = 0;
    while (orbit + 1 < offsets_.size() && offsets_[orbit + 1] <= flat) {
      ++orbit;
    }
    return Embedding{orbit, flat - offsets_[orbit]};
  }

  // The Frobenius action: position j -> j + 1 within the orbit's cycle.
  Embedding frobenius(const Embedding& beta) const {
    validate(beta);
    return Embedding{beta.orbit,
                     (beta.position + 1) % degrees_[beta.orbit]};
  }

  Embedding frobenius_inverse(const Embedding& beta) const {
    validate(beta);
    const std::size_t f = degrees_[beta.orbit];
    return Embedding{beta.orbit, (beta.position + f - 1) % f};
  }

  // p^f - 1 for the given orbit: the denominator shared by all Hasse
  // coordinates of integer weights on that orbit.
  Int hasse_denominator(std::size_t orbit) const {
    Int q = 1;
    for (std::size_t i = 0; i < degree(orbit); ++i) q *= p_;
    return q - 1;
  }

  // Textual form "p=<int>;f=<int>,<int>,...", the grammar used by the CLI.
  std::string to_string() const {
    std::string s = "p=" + p_.str() + ";f=";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(degrees_[i]);
    }
    return s;
  }

  static SplittingType parse(const std::string& text);

  friend bool operator==(const SplittingType& a, const SplittingType& b) {
    return a.p_ == b.p_ && a.degrees_ == b.degrees_;
  }

 private:
  Int p_;
  std::vector<std::size_t> degrees_;
  std::vector<std::size_t> offsets_;  // orbit -> first flat index
  std::size_t d_ = 0;
};

namespace detail {

inline Int parse_int_token(const std::string& tok, const std::string& what) {
  if (tok.empty()) {
    throw std::invalid_argument("splitting type: missing " + what);
  }
  std::size_t i = (tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) {
    throw std::invalid_argument("splitting type: bad " + what + " '" + tok +
                                "'");
  }
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') {
      throw std::invalid_argument("splitting type: bad " + what + " '" + tok +
                                  "'");
    }
  }
  return Int(tok);
}

}  // namespace detail

// Grammar: p=<int>;f=<int>(,<int>)*  -- whitespace-insensitive.
inline SplittingType SplittingType::parse(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s += c;
  }
  if (s.rfind("p=", 0) != 0) {
    throw std::invalid_argument("splitting type: expected 'p=<int>;f=...'");
  }
  const std::size_t semi = s.find(';');
  if (semi == std::string::npos || s.compare(semi + 1, 2, "f=") != 0) {
    throw std::invalid_argument("splitting type: expected ';f=' after prime");
  }
  const Int p = detail::parse_int_token(s.substr(2, semi - 2), "prime");

  std::vector<std::size_t> degrees;
  std::string rest = s.substr(semi + 3);
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = rest.find(',', pos);
    const std::string tok = rest.substr(pos, comma - pos);
    const Int f = detail::parse_int_token(tok, "residue degree");
    if (f < 1 || f > 1000000) {
      throw std::invalid_argument("splitting type: residue degree '" + tok +
                                  "' out of range");
    }
    degrees.push_back(static_cast<std::size_t>(f));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return SplittingType(p, std::move(degrees));
}

}  // namespace hassecone
