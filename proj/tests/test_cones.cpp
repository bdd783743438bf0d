#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <hassecone/cones.hpp>

using namespace hassecone;

namespace {

const std::vector<SplittingType>& sample_types() {
  static const std::vector<SplittingType> types{
      SplittingType(2, {2}), SplittingType(3, {3}), SplittingType(2, {1, 2}),
      SplittingType(5, {1, 1}), SplittingType(3, {2, 2})};
  return types;
}

WeightVector random_weight(const SplittingType& st, std::mt19937_64& rng,
                           long lo, long hi) {
  std::vector<Int> e(st.total_degree());
  for (Int& v : e) v = lo + static_cast<long>(rng() % (hi - lo + 1));
  return WeightVector(st, std::move(e));
}

}  // namespace

TEST_CASE("minimal cone membership") {
  const SplittingType st(2, {2});
  CHECK(in_min_cone(WeightVector(st, {1, 1})));
  CHECK_FALSE(in_min_cone(WeightVector(st, {0, 3})));
  CHECK(in_min_cone(WeightVector::zero(st)));
}

TEST_CASE("standard cone membership") {
  const SplittingType st(2, {2});
  CHECK(in_std_cone(WeightVector::zero(st)));
  CHECK_FALSE(in_std_cone(hasse_weight(st, {0, 0})));
  CHECK(in_std_cone(WeightVector(st, {2, 1})));
}

TEST_CASE("hasse coordinates solve the circulant system exactly") {
  const SplittingType st(2, {2});
  CHECK(hasse_coordinates(WeightVector(st, {0, 3})).y ==
        RationalVector(st, {Rat(2), Rat(1)}));
  CHECK(hasse_coordinates(WeightVector::zero(st)).y ==
        RationalVector(st, {Rat(0), Rat(0)}));

  // The Hasse weights themselves map to unit coordinate vectors.
  for (const SplittingType& type : sample_types()) {
    for (std::size_t i = 0; i < type.total_degree(); ++i) {
      const Embedding beta = type.embedding_at(i);
      CHECK(hasse_coordinates(hasse_weight(type, beta)).y ==
            RationalVector(RationalVector::unit(type, beta)));
    }
  }
}

TEST_CASE("hasse cone membership") {
  const SplittingType st(2, {2});
  CHECK(in_hasse_cone(WeightVector(st, {0, 1})));
  CHECK_FALSE(in_hasse_cone(WeightVector(st, {-1, -1})));

  const SplittingType split(5, {1, 1});
  CHECK(in_hasse_cone(WeightVector(split, {4, 0})));
}

TEST_CASE("round trip and denominator bound on random integer weights") {
  std::mt19937_64 rng(77);
  for (const SplittingType& st : sample_types()) {
    for (int iter = 0; iter < 500; ++iter) {
      const WeightVector k = random_weight(st, rng, -50, 50);
      const HasseCoordinates coords = hasse_coordinates(k);
      CHECK(rational_combine(coords.y) == RationalVector(k));
      for (std::size_t i = 0; i < k.size(); ++i) {
        const Int den = denominator(coords.y[i]);
        const Int orbit_den =
            st.hasse_denominator(st.embedding_at(i).orbit);
        CHECK(orbit_den % den == 0);
      }
    }
  }
}

TEST_CASE("containment chain on random rational vectors") {
  std::mt19937_64 rng(78);
  for (const SplittingType& st : sample_types()) {
    for (int iter = 0; iter < 500; ++iter) {
      std::vector<Rat> e(st.total_degree());
      for (Rat& v : e) {
        const long num = -50 + static_cast<long>(rng() % 101);
        const long den = 1 + static_cast<long>(rng() % 7);
        v = Rat(num, den);
      }
      const RationalVector x(st, std::move(e));
      if (in_min_cone(x)) CHECK(in_std_cone(x));
      if (in_std_cone(x)) CHECK(in_hasse_cone(x));
    }
  }
}

TEST_CASE("cone predicates are invariant under positive scaling") {
  std::mt19937_64 rng(79);
  const std::vector<Rat> scales{Rat(1, 2), Rat(2), Rat(7, 3), Rat(100)};
  for (const SplittingType& st : sample_types()) {
    for (int iter = 0; iter < 100; ++iter) {
      const RationalVector x(random_weight(st, rng, -20, 20));
      for (const Rat& c : scales) {
        const RationalVector cx = c * x;
        CHECK(in_min_cone(x) == in_min_cone(cx));
        CHECK(in_std_cone(x) == in_std_cone(cx));
        CHECK(in_hasse_cone(x) == in_hasse_cone(cx));
      }
    }
  }
}

TEST_CASE("extreme rays match the closed form") {
  const SplittingType inert(2, {2});
  const std::vector<WeightVector> r2 = min_cone_rays(inert);
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == WeightVector(inert, {2, 1}));
  CHECK(r2[1] == WeightVector(inert, {1, 2}));

  const SplittingType split(5, {1, 1});
  const std::vector<WeightVector> r5 = min_cone_rays(split);
  REQUIRE(r5.size() == 2);
  CHECK(r5[0] == WeightVector(split, {1, 0}));
  CHECK(r5[1] == WeightVector(split, {0, 1}));
}

TEST_CASE("rays are positive on their orbit, zero elsewhere, f-1 tight") {
  for (const SplittingType& st : sample_types()) {
    const std::vector<WeightVector> rays = min_cone_rays(st);
    REQUIRE(rays.size() == st.total_degree());
    for (std::size_t r = 0; r < rays.size(); ++r) {
      const WeightVector& ray = rays[r];
      const std::size_t home = st.embedding_at(r).orbit;
      CHECK(in_min_cone(ray));
      std::size_t tight = 0;
      for (std::size_t i = 0; i < ray.size(); ++i) {
        const Embedding beta = st.embedding_at(i);
        if (beta.orbit == home) {
          CHECK(ray[i] > 0);
          const Int lhs = st.p() * ray[i];
          const Int rhs = ray[st.flat_index(st.frobenius_inverse(beta))];
          if (lhs == rhs) ++tight;
        } else {
          CHECK(ray[i] == 0);
        }
      }
      CHECK(tight == st.degree(home) - 1);
    }
  }
}

TEST_CASE("rays generate the minimal cone") {
  std::mt19937_64 rng(80);
  for (const SplittingType& st : sample_types()) {
    const std::vector<WeightVector> rays = min_cone_rays(st);

    // Random nonnegative combinations land in the cone.
    for (int iter = 0; iter < 100; ++iter) {
      WeightVector combo = WeightVector::zero(st);
      for (const WeightVector& ray : rays) {
        combo = combo + Int(rng() % 20) * ray;
      }
      CHECK(in_min_cone(combo));
    }

    // Conversely every sampled cone point is a nonnegative combination:
    // the coefficient of the ray at position c is the c-th slack divided
    // by p^f - 1, which the ray construction makes exact.
    for (int iter = 0; iter < 400; ++iter) {
      const WeightVector k = random_weight(st, rng, 0, 30);
      if (!in_min_cone(k)) continue;
      RationalVector rebuilt = RationalVector::zero(st);
      for (std::size_t c = 0; c < st.total_degree(); ++c) {
        const Embedding beta = st.embedding_at(c);
        const Rat slack =
            Rat(st.p() * k[c] - k[st.flat_index(st.frobenius_inverse(beta))]);
        REQUIRE(slack >= 0);
        const Rat coeff = slack / Rat(st.hasse_denominator(beta.orbit));
        rebuilt = rebuilt + coeff * RationalVector(rays[c]);
      }
      CHECK(rebuilt == RationalVector(k));
    }
  }
}

TEST_CASE("chain report separates the cones unless p splits completely") {
  const ChainReport inert = chain_report(SplittingType(2, {2}));
  REQUIRE_FALSE(inert.splits_completely);
  REQUIRE(inert.witnesses.has_value());
  CHECK(inert.witnesses->std_not_min ==
        WeightVector(SplittingType(2, {2}), {1, 0}));
  CHECK(inert.witnesses->hasse_not_std ==
        WeightVector(SplittingType(2, {2}), {-1, 2}));

  const ChainReport split = chain_report(SplittingType(5, {1, 1}));
  CHECK(split.splits_completely);
  CHECK_FALSE(split.witnesses.has_value());

  // Witnesses live on the first orbit of length > 1.
  const ChainReport mixed = chain_report(SplittingType(3, {1, 2}));
  REQUIRE(mixed.witnesses.has_value());
  CHECK(mixed.witnesses->beta == Embedding{1, 0});
}

TEST_CASE("split-completely predicates agree on a grid") {
  const SplittingType st(5, {1, 1});
  for (long a = -10; a <= 10; ++a) {
    for (long b = -10; b <= 10; ++b) {
      const WeightVector k(st, {Int(a), Int(b)});
      const bool mn = in_min_cone(k);
      const bool sd = in_std_cone(k);
      const bool hs = in_hasse_cone(k);
      CHECK(mn == sd);
      CHECK(sd == hs);
      CHECK(sd == (a >= 0 && b >= 0));
    }
  }
}
