#include <random>

#include "dualpair/abelian.hpp"
#include "test_util.hpp"

using namespace dp;
using namespace dp::testing;

namespace {

// All chains d_r | ... | d_1 with every d_i > 1 and product at most `bound`.
void chains(std::int64_t bound, std::int64_t top, ElemDivSeq& cur, std::vector<ElemDivSeq>& out) {
  out.push_back(cur);
  const std::int64_t used = group_order(cur);
  for (std::int64_t d = 2; d <= top && used * d <= bound; ++d) {
    if (!cur.empty() && cur.back() % d != 0) continue;
    cur.push_back(d);
    chains(bound, d, cur, out);
    cur.pop_back();
  }
}

std::vector<ElemDivSeq> all_sequences(std::int64_t bound) {
  std::vector<ElemDivSeq> out;
  ElemDivSeq cur;
  chains(bound, bound, cur, out);
  return out;
}

PairingTable from_strings(const std::vector<std::vector<std::string>>& rows) {
  PairingTable t;
  t.n = rows.size();
  for (const auto& r : rows) {
    std::vector<FracCyclic> row;
    for (const auto& s : r) row.push_back(FracCyclic::parse(s));
    t.T.push_back(row);
  }
  return t;
}

bool reconstructs(const GroupId& g, const PairingTable& t) {
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      if (hd_pairing(g.d, g.p[i], g.q[j]) != t.T[i][j]) return false;
  return true;
}

}  // namespace

TEST_CASE("hd_pairing") {
  CHECK(hd_pairing({2}, {1}, {1}) == FracCyclic(1, 2));
  CHECK(hd_pairing({2, 2}, {1, 0}, {0, 1}).is_zero());
  CHECK(hd_pairing({4, 2}, {3, 1}, {2, 1}).is_zero());
  CHECK(hd_pairing({6, 3}, {1, 1}, {1, 2}) == FracCyclic(5, 6));
  expect_error(ErrorKind::SeqMismatch, [] { hd_pairing({2}, {1, 0}, {1}); });
  CHECK(hd_elements({3, 2}).size() == 6);
  CHECK(hd_elements({}).size() == 1);
}

TEST_CASE("identify_group examples") {
  auto t1 = from_strings({{"0"}});
  auto g1 = identify_group(t1);
  REQUIRE(g1);
  CHECK(g1->d.empty());
  // lambda of the e2 pairing table with a = 1.
  auto klein = from_strings({{"0", "0", "0", "0"}, {"0", "0", "1/2", "1/2"}, {"0", "1/2", "0", "1/2"}, {"0", "1/2", "1/2", "0"}});
  auto g = identify_group(klein);
  REQUIRE(g);
  CHECK(g->d == ElemDivSeq{2, 2});
  CHECK(reconstructs(*g, klein));
  CHECK(!identify_group(from_strings({{"0", "0"}, {"0", "0"}})));
  // Z/4 written through a generator.
  auto z4 = from_strings({{"0", "0", "0", "0"}, {"0", "1/4", "1/2", "3/4"}, {"0", "1/2", "0", "1/2"}, {"0", "3/4", "1/2", "1/4"}});
  auto g4 = identify_group(z4);
  REQUIRE(g4);
  CHECK(g4->d == ElemDivSeq{4});
  expect_error(ErrorKind::MalformedTable, [] { identify_group(from_strings({{"0", "1/3"}, {"0", "0"}})); });
  expect_error(ErrorKind::MalformedTable, [] {
    PairingTable t;
    t.n = 2;
    t.T = {{FracCyclic()}};
    identify_group(t);
  });
}

TEST_CASE("random_group_table examples") {
  auto g2 = identify_group(random_group_table({2}, 1));
  REQUIRE(g2);
  CHECK(g2->d == ElemDivSeq{2});
  auto g62 = identify_group(random_group_table({6, 2}, 5));
  REQUIRE(g62);
  CHECK(g62->d == ElemDivSeq{6, 2});
  auto t0 = random_group_table({}, 3);
  CHECK(t0.n == 1);
  CHECK(identify_group(t0).has_value());
}

TEST_CASE("property: round trip for every H_d of order at most 36") {
  const auto seqs = all_sequences(36);
  CHECK(seqs.size() > 40);
  for (const auto& d : seqs) {
    CAPTURE(seq_str(d));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PairingTable t = random_group_table(d, seed);
      const auto g = identify_group(t);
      REQUIRE(g);
      CHECK(g->d == d);
      CHECK(reconstructs(*g, t));
    }
  }
}

TEST_CASE("property: single-entry corruptions are never mis-identified") {
  std::mt19937_64 rng(2024);
  const auto seqs = all_sequences(36);
  int rejected = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ElemDivSeq d;
    do d = seqs[rng() % seqs.size()];
    while (group_order(d) < 2);
    PairingTable t = random_group_table(d, rng());
    const std::size_t i = rng() % t.n, j = rng() % t.n;
    const auto n = static_cast<std::int64_t>(t.n);
    t.T[i][j] = t.T[i][j] + FracCyclic(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n - 1)), n);
    const auto g = identify_group(t);
    if (g)
      CHECK(reconstructs(*g, t));
    else
      ++rejected;
  }
  // A single changed entry breaks bimultiplicativity, so nothing is accepted.
  CHECK(rejected == 200);
}

TEST_CASE("table serialization") {
  const PairingTable t = random_group_table({4, 2}, 9);
  const json j = table_to_json(t);
  CHECK(j.at("n") == 8);
  const PairingTable r = table_from_json(j);
  CHECK(r.T == t.T);
  expect_error(ErrorKind::Parse, [] { table_from_json(json{{"n", 1}}); });
}
