#include "clustertrop/rootsys.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>
#include <stdexcept>

using namespace clustertrop;

namespace {

using Mat = std::vector<std::vector<int>>;

// Weyl group elements as matrices acting on simple-root coordinates.
Mat reflection_matrix(const CartanMatrix& c, int i) {
  const int n = c.rank();
  Mat m(n, std::vector<int>(n, 0));
  for (int j = 1; j <= n; ++j) {
    RootVector r(n, 0);
    r[j - 1] = 1;
    const auto s = reflect(c, i, r);
    for (int k = 0; k < n; ++k) m[k][j - 1] = static_cast<int>(s[k]);
  }
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Mat identity(int n) {
  Mat m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Shortest word length of every group element, by BFS over words.
std::map<Mat, int> brute_force_lengths(const CartanMatrix& c) {
  std::map<Mat, int> len{{identity(c.rank()), 0}};
  std::vector<Mat> frontier{identity(c.rank())};
  for (int d = 1; !frontier.empty(); ++d) {
    std::vector<Mat> next;
    for (const auto& g : frontier)
      for (int i = 1; i <= c.rank(); ++i) {
        auto h = mul(g, reflection_matrix(c, i));
        if (len.emplace(h, d).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return len;
}

Mat word_matrix(const CartanMatrix& c, const WeylWord& w) {
  Mat g = identity(c.rank());
  for (int l : w.letters) g = mul(g, reflection_matrix(c, l));
  return g;
}

}  // namespace

TEST_CASE("cartan matrices follow Bourbaki numbering") {
  CHECK(cartan_matrix('C', 3).entries() == Mat{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(cartan_matrix('B', 3).entries() == Mat{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(cartan_matrix('G', 2).entries() == Mat{{2, -3}, {-1, 2}});
  CHECK(cartan_matrix('A', 2).entries() == Mat{{2, -1}, {-1, 2}});
  const auto d4 = cartan_matrix('D', 4);
  CHECK(d4.at(2, 4) == -1);
  CHECK(d4.at(3, 4) == 0);
  CHECK(d4.at(2, 3) == -1);
  CHECK(parse_cartan_type("C3") == cartan_matrix('C', 3));
}

TEST_CASE("invalid cartan types are rejected") {
  CHECK_THROWS_AS(cartan_matrix('D', 3), std::invalid_argument);
  CHECK_THROWS_AS(cartan_matrix('E', 5), std::invalid_argument);
  CHECK_THROWS_AS(cartan_matrix('H', 3), std::invalid_argument);
  CHECK_THROWS_AS(cartan_matrix('A', 0), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("C"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cartan_type("Cx"), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix("bad", Mat{{2, 1}, {-1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanMatrix("bad", Mat{{2, -1}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("symmetrizers") {
  for (char t : std::string("ABCDEFG")) {
    for (int n = 1; n <= 8; ++n) {
      CartanMatrix c = [&] {
        try {
          return cartan_matrix(t, n);
        } catch (const std::invalid_argument&) {
          return cartan_matrix('A', 1);
        }
      }();
      const auto& d = c.symmetrizer();
      const auto& e = c.column_symmetrizer();
      for (int i = 1; i <= c.rank(); ++i)
        for (int j = 1; j <= c.rank(); ++j) {
          CHECK(d[i - 1] * c.at(i, j) == d[j - 1] * c.at(j, i));
          CHECK(c.at(i, j) * e[j - 1] == c.at(j, i) * e[i - 1]);
        }
    }
  }
  CHECK(cartan_matrix('C', 3).column_symmetrizer() == std::vector<int>{2, 2, 1});
  CHECK(cartan_matrix('B', 3).column_symmetrizer() == std::vector<int>{1, 1, 2});
}

TEST_CASE("reflections") {
  const auto a2 = cartan_matrix('A', 2);
  CHECK(reflect(a2, 1, {1, 0}) == RootVector{-1, 0});
  CHECK(reflect(a2, 1, {0, 1}) == RootVector{1, 1});
  CHECK(reflect(cartan_matrix('C', 3), 2, {0, 0, 1}) == RootVector{0, 2, 1});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (const auto& c : {cartan_matrix('C', 3), cartan_matrix('G', 2), cartan_matrix('E', 6), cartan_matrix('F', 4)})
    for (int t = 0; t < 200; ++t) {
      RootVector r(c.rank());
      for (auto& x : r) x = coord(rng);
      const int i = 1 + static_cast<int>(rng() % c.rank());
      CHECK(reflect(c, i, reflect(c, i, r)) == r);
    }
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(cartan_matrix('A', 5)).size() == 15);
  CHECK(positive_roots(cartan_matrix('C', 3)).size() == 9);
  CHECK(positive_roots(cartan_matrix('B', 3)).size() == 9);
  CHECK(positive_roots(cartan_matrix('D', 4)).size() == 12);
  CHECK(positive_roots(cartan_matrix('G', 2)).size() == 6);
  CHECK(positive_roots(cartan_matrix('F', 4)).size() == 24);
  CHECK(positive_roots(cartan_matrix('E', 6)).size() == 36);
  CHECK(positive_roots(cartan_matrix('E', 8)).size() == 120);
}

TEST_CASE("reducedness of named words") {
  const auto a2 = cartan_matrix('A', 2);
  const auto c3 = cartan_matrix('C', 3);
  CHECK_FALSE(is_reduced(a2, parse_word("1,1")));
  CHECK(is_reduced(a2, parse_word("1,2,1")));
  CHECK(is_reduced(c3, parse_word("3,2,3,2,1,2,3,2,1")));
  CHECK(is_longest(c3, parse_word("3,2,3,2,1,2,3,2,1")));
  CHECK(is_longest(cartan_matrix('B', 3), parse_word("3,2,3,2,1,2,3,2,1")));
  CHECK(is_longest(cartan_matrix('D', 4), parse_word("2,4,1,2,4,3,2,4,1,2,3,4")));
  CHECK(is_longest(cartan_matrix('A', 5), parse_word("1,2,1,3,2,1,4,3,2,1,5,4,3,2,1")));
  CHECK(is_longest(cartan_matrix('G', 2), parse_word("1,2,1,2,1,2")));
  CHECK_FALSE(is_longest(a2, parse_word("1,2")));
  CHECK_THROWS_AS(is_reduced(a2, parse_word("1,3")), std::invalid_argument);
}

TEST_CASE("reducedness agrees with brute-force Weyl group enumeration") {
  for (const auto& c : {cartan_matrix('A', 2), cartan_matrix('B', 2), cartan_matrix('G', 2), cartan_matrix('A', 3),
                        cartan_matrix('C', 3)}) {
    const auto len = brute_force_lengths(c);
    CHECK(len.size() > 1);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
      WeylWord w;
      const int l = static_cast<int>(rng() % 11);
      for (int i = 0; i < l; ++i) w.letters.push_back(1 + static_cast<int>(rng() % c.rank()));
      CHECK(is_reduced(c, w) == (len.at(word_matrix(c, w)) == l));
    }
  }
}

TEST_CASE("longest words send simple roots to negative roots") {
  for (const auto& c : {cartan_matrix('A', 4), cartan_matrix('C', 3), cartan_matrix('D', 5), cartan_matrix('E', 6),
                        cartan_matrix('F', 4), cartan_matrix('G', 2)}) {
    const auto w = longest_word(c);
    REQUIRE(is_longest(c, w));
    for (int i = 1; i <= c.rank(); ++i) CHECK(is_negative(apply_word(c, w, simple_root(c, i))));
    auto longer = w;
    longer.letters.push_back(1);
    CHECK_FALSE(is_reduced(c, longer));
  }
}

TEST_CASE("inversion roots of reduced words are distinct and positive") {
  const auto c = cartan_matrix('C', 3);
  const auto roots = inversion_roots(c, parse_word("3,2,3,2,1,2,3,2,1"));
  CHECK(std::set<RootVector>(roots.begin(), roots.end()).size() == 9);
  for (const auto& r : roots) CHECK(is_positive(r));
}

TEST_CASE("word index bookkeeping") {
  const auto c3 = word_indices(parse_word("3,2,3,2,1,2,3,2,1"));
  CHECK(c3.frozen == std::vector<int>{7, 8, 9});
  CHECK(c3.mutable_ == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(c3.plus[0] == 3);
  CHECK(c3.minus[2] == 1);
  CHECK(c3.support == std::vector<int>{1, 2, 3});
  CHECK(word_indices(parse_word("1,2,1,2,1,2")).frozen == std::vector<int>{5, 6});
  CHECK(word_indices(parse_word("3,1,2")).frozen == std::vector<int>{1, 2, 3});
}

TEST_CASE("word parsing") {
  CHECK(parse_word("3,2,1").letters == std::vector<int>{3, 2, 1});
  CHECK(format_word(parse_word("3,2,1")) == "3,2,1");
  CHECK(parse_word("").size() == 0);
  CHECK_THROWS_AS(parse_word("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("1,"), std::invalid_argument);
}
