#include "clustertrop/exchange_matrix.hpp"
#include "clustertrop/glsseed.hpp"
#include "clustertrop/quiver.hpp"
#include "clustertrop/search.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace clustertrop;
using testgen::labeled;

namespace {

const std::vector<Label> kRestrict{1, 2, 3, 6, 8};

ExchangeMatrix c3_seed() { return gls_exchange_matrix(cartan_matrix('C', 3), parse_word("3,2,3,2,1,2,3,2,1")); }

ExchangeMatrix c3_restricted() { return restrict_to(c3_seed(), kRestrict); }

}  // namespace

TEST_CASE("GLS matrix of C3") {
  const auto eps = c3_seed();
  const std::vector<IntVector> expected{
      {0, -2, 1, 0, 0, 0, 0, 0, 0},  {1, 0, -1, 1, 0, 0, 0, 0, 0},  {-1, 2, 0, 0, 0, -2, 1, 0, 0},
      {0, -1, 0, 0, -1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, -1, 1}, {0, 0, 1, -1, 0, 0, -1, 1, 0}};
  CHECK(eps.rows() == expected);
  CHECK(eps.frozen_labels() == std::vector<Label>{7, 8, 9});
  CHECK(eps.skew_symmetrizer() == std::vector<std::int64_t>{1, 2, 1, 2, 2, 2, 1, 2, 2});
}

TEST_CASE("GLS matrix of B3") {
  const auto eps = gls_exchange_matrix(cartan_matrix('B', 3), parse_word("3,2,3,2,1,2,3,2,1"));
  const std::vector<IntVector> expected{
      {0, -1, 1, 0, 0, 0, 0, 0, 0},  {2, 0, -2, 1, 0, 0, 0, 0, 0},  {-1, 1, 0, 0, 0, -1, 1, 0, 0},
      {0, -1, 0, 0, -1, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, -1, 1}, {0, 0, 2, -1, 0, 0, -2, 1, 0}};
  CHECK(eps.rows() == expected);
}

TEST_CASE("GLS matrix of G2") {
  const auto eps = gls_exchange_matrix(cartan_matrix('G', 2), parse_word("1,2,1,2,1,2"));
  const std::vector<IntVector> expected{
      {0, -1, 1, 0, 0, 0}, {3, 0, -3, 1, 0, 0}, {-1, 1, 0, -1, 1, 0}, {0, -1, 3, 0, -3, 1}};
  CHECK(eps.rows() == expected);
  CHECK(eps.frozen_labels() == std::vector<Label>{5, 6});
}

TEST_CASE("GLS rejects non-reduced words") {
  CHECK_THROWS_AS(gls_exchange_matrix(cartan_matrix('A', 2), parse_word("1,1")), std::invalid_argument);
}

TEST_CASE("simply laced GLS matrices are skew-symmetric") {
  for (const auto& c : {cartan_matrix('A', 5), cartan_matrix('D', 4), cartan_matrix('E', 6)}) {
    const auto eps = gls_exchange_matrix(c, longest_word(c));
    CHECK(eps.mutable_part_skew_symmetric());
  }
  for (const auto& c : {cartan_matrix('B', 4), cartan_matrix('C', 4), cartan_matrix('F', 4), cartan_matrix('G', 2)}) {
    const auto eps = gls_exchange_matrix(c, longest_word(c));
    CHECK(eps.is_skew_symmetrizable());
  }
}

TEST_CASE("GLS matrix of a parabolic word is a restriction") {
  // D4 contains A3 on nodes {1,2,3}; w0 = v w' with w' the A3 longest element.
  const auto d4 = cartan_matrix('D', 4);
  const auto a3_part = parse_word("1,2,1,3,2,1");
  REQUIRE(is_longest(cartan_matrix('A', 3), a3_part));
  // Greedy left extension to a reduced word for w0 keeps the suffix intact.
  WeylWord cur = a3_part;
  const std::size_t total = positive_roots(d4).size();
  while (cur.size() < total) {
    bool grown = false;
    for (int i = 1; i <= 4 && !grown; ++i) {
      WeylWord cand;
      cand.letters.push_back(i);
      cand.letters.insert(cand.letters.end(), cur.letters.begin(), cur.letters.end());
      if (is_reduced(d4, cand)) {
        cur = cand;
        grown = true;
      }
    }
    REQUIRE(grown);
  }
  REQUIRE(is_longest(d4, cur));
  const auto big = gls_exchange_matrix(d4, cur);
  const auto small = gls_exchange_matrix(cartan_matrix('A', 3), a3_part);
  const int offset = static_cast<int>(cur.size() - a3_part.size());
  std::vector<Label> keep;
  for (int j = 1; j <= static_cast<int>(a3_part.size()); ++j) keep.push_back(offset + j);
  const auto restricted = restrict_to(big, keep);
  REQUIRE(restricted.frozen_labels().size() == small.frozen_labels().size());
  for (Label r : small.mutable_labels())
    for (Label s : small.columns()) CHECK(restricted.entry(offset + r, offset + s) == small.entry(r, s));
}

TEST_CASE("C3 restriction and mutation fixtures") {
  const auto res = c3_restricted();
  CHECK(res.columns() == kRestrict);
  CHECK(res.frozen_labels() == std::vector<Label>{8});
  CHECK(res.rows() == std::vector<IntVector>{{0, -2, 1, 0, 0}, {1, 0, -1, 0, 0}, {-1, 2, 0, -2, 0}, {0, 0, 1, 0, 1}});
  const std::vector<Label> seq{6, 2, 3};
  const auto mu = mutate_sequence(res, seq);
  // Every entry matches the printed matrix except (6,8): the rule keeps |eps_{6,8}| = 1
  // because eps_{2,8} = eps_{3,8} = 0 along the whole sequence.
  CHECK(mu.rows() == std::vector<IntVector>{{0, 0, 1, 0, 0}, {0, 0, -1, 2, 0}, {-1, 2, 0, -2, 0}, {0, -2, 1, 0, -1}});
  for (Label k : {2, 3}) CHECK(mutate_sequence(res, std::vector<Label>{6}).entry(k, 8) == 0);
}

TEST_CASE("B3 restriction and mutation fixtures") {
  const auto eps = gls_exchange_matrix(cartan_matrix('B', 3), parse_word("3,2,3,2,1,2,3,2,1"));
  const auto res = restrict_to(eps, kRestrict);
  CHECK(res.rows() == std::vector<IntVector>{{0, -1, 1, 0, 0}, {2, 0, -2, 0, 0}, {-1, 1, 0, -1, 0}, {0, 0, 2, 0, 1}});
  CHECK(mutate(res, 3).rows() ==
        std::vector<IntVector>{{0, 0, -1, 0, 0}, {0, 0, 2, -2, 0}, {1, -1, 0, 1, 0}, {0, 2, -2, 0, 1}});
}

TEST_CASE("G2 mutation sequence agrees with the reference rule") {
  const auto eps = gls_exchange_matrix(cartan_matrix('G', 2), parse_word("1,2,1,2,1,2"));
  const std::vector<Label> keep{1, 2, 3, 5};
  const auto res = restrict_to(eps, keep);
  const std::vector<Label> seq{1, 2, 3, 1, 2};
  auto ref = res;
  for (Label k : seq) ref = testgen::naive_mutate(ref, k);
  const auto got = mutate_sequence(res, seq);
  CHECK(got == ref);
  CHECK(got.rows() == std::vector<IntVector>{{0, -1, 2, 0}, {3, 0, -3, 0}, {-2, 1, 0, -1}});
  // the drawn diagram: 1 -> 2 of weight 3, a double edge between 3 and 1, 3 -> 5
  CHECK(got.entry(2, 1) * got.entry(1, 2) == -3);
  CHECK(got.entry(1, 3) * got.entry(3, 1) == -4);
  CHECK(got.entry(3, 5) == -1);
}

TEST_CASE("mutation rejects frozen or unknown directions") {
  const auto res = c3_restricted();
  CHECK_THROWS_AS(mutate(res, 8), FrozenDirectionError);
  CHECK_THROWS_AS(mutate(res, 4), FrozenDirectionError);
}

TEST_CASE("mutation overflow is detected") {
  const std::int64_t big = std::int64_t{1} << 40;
  const auto eps = labeled(3, {3}, {1, 1, 1}, {{0, big, big}, {-big, 0, big}});
  CHECK_THROWS_AS(mutate(eps, 1), OverflowError);
}

TEST_CASE("matrix construction validation") {
  CHECK_THROWS_AS(labeled(2, {}, {1, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(labeled(2, {}, {1, 0}, {{0, 1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(labeled(2, {3}, {1, 1}, {{0, 1}, {-1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(labeled(2, {}, {1, 1}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(labeled(2, {}, {1, 1}, {{0, 1, 0}, {-1, 0, 0}}), std::invalid_argument);
  CHECK_NOTHROW(labeled(2, {}, {1, 2}, {{0, 2}, {-1, 0}}));
}

TEST_CASE("restriction keeps labels and order") {
  const auto res = c3_restricted();
  const std::vector<Label> all{1, 2, 3, 6, 8};
  CHECK(restrict_to(res, all) == res);
  const std::vector<Label> shuffled{8, 6, 3, 2, 1};
  CHECK(restrict_to(res, shuffled) == res);
  const std::vector<Label> bad{1, 4};
  CHECK_THROWS_AS(restrict_to(res, bad), std::invalid_argument);
  const auto eps = c3_seed();
  const std::vector<Label> full{1, 2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(restrict_to(eps, full) == eps);
  CHECK(mutable_part(eps).num_columns() == 6);
}

TEST_CASE("restrict and mutate commute on C3") {
  const auto eps = c3_seed();
  for (Label k : {1, 2, 3, 6}) CHECK(restrict_to(mutate(eps, k), kRestrict) == mutate(restrict_to(eps, kRestrict), k));
}

TEST_CASE("mutation agrees with the reference rule on random matrices") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const auto eps = testgen::random_matrix(rng, 2 + t % 4, t % 3);
    for (Label k : eps.mutable_labels()) CHECK(mutate(eps, k) == testgen::naive_mutate(eps, k));
  }
}

TEST_CASE("traces replay") {
  const auto res = c3_restricted();
  auto t = make_trace(res, {6, 2, 3});
  CHECK(t.replays());
  t.seq.pop_back();
  CHECK_FALSE(t.replays());
  t.seq = {8};
  CHECK_FALSE(t.replays());
}

TEST_CASE("seed basis mutation") {
  const auto eps = labeled(2, {}, {1, 1}, {{0, 1}, {-1, 0}});
  const auto b = mutate_seed_basis(initial_seed_basis(eps), eps, 1);
  CHECK(b.e[0] == IntVector{-1, 0});
  // [eps_{2,1}]_+ = [-1]_+ = 0
  CHECK(b.e[1] == IntVector{0, 1});
  CHECK_THROWS_AS(mutate_seed_basis(initial_seed_basis(c3_restricted()), c3_restricted(), 8), FrozenDirectionError);
}

namespace {

// <f_j, e_i> d_j for all i, j.
bool dual(const SeedBasis& b, const ExchangeMatrix& eps) {
  const std::size_t n = b.labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational p = 0;
      for (std::size_t t = 0; t < n; ++t) p += b.f[j][t] * b.e[i][t] * eps.skew_symmetrizer()[t];
      // pairing <e_t^*, e_s> = delta_ts with f_j stored in the basis f_t = e_t^*/d_t
      if (p * eps.skew_symmetrizer()[j] != (i == j ? 1 : 0)) return false;
    }
  return true;
}

// The printed variant f'_k = -f_k + sum [eps_{k,i}]_+ f_i.
SeedBasis printed_variant(const SeedBasis& b, const ExchangeMatrix& eps, Label k) {
  SeedBasis out = mutate_seed_basis(b, eps, k);
  const std::size_t kc = eps.column_index(k);
  RationalVector fk(b.labels.size(), Rational(0));
  for (std::size_t t = 0; t < fk.size(); ++t) fk[t] = -b.f[kc][t];
  for (std::size_t i = 0; i < fk.size(); ++i)
    for (std::size_t t = 0; t < fk.size(); ++t) fk[t] += positive_part(eps.row(k)[i]) * b.f[i][t];
  out.f[kc] = fk;
  return out;
}

}  // namespace

TEST_CASE("seed basis mutation keeps the scaled duality") {
  std::mt19937_64 rng(99);
  int printed_breaks = 0;
  for (int t = 0; t < 200; ++t) {
    auto eps = testgen::random_matrix(rng, 3, 1, 3, true);
    auto b = initial_seed_basis(eps);
    REQUIRE(dual(b, eps));
    const auto labels = eps.mutable_labels();
    for (int step = 0; step < 4; ++step) {
      const Label k = labels[rng() % labels.size()];
      if (!dual(printed_variant(b, eps, k), eps)) ++printed_breaks;
      b = mutate_seed_basis(b, eps, k);
      eps = mutate(eps, k);
      CHECK(dual(b, eps));
    }
  }
  CHECK(printed_breaks > 0);
}
