#include "dualpair/abelian.hpp"

#include <map>
#include <random>

#include "dualpair/error.hpp"

namespace dp {

std::int64_t group_order(const ElemDivSeq& d) {
  std::int64_t n = 1;
  for (auto x : d) n *= x;
  return n;
}

std::vector<HdElement> hd_elements(const ElemDivSeq& d) {
  std::vector<HdElement> out;
  HdElement x(d.size(), 0);
  for (;;) {
    out.push_back(x);
    std::size_t pos = d.size();
    while (pos > 0 && ++x[pos - 1] == d[pos - 1]) x[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

FracCyclic hd_pairing(const ElemDivSeq& d, const HdElement& x, const HdElement& xi) {
  if (x.size() != d.size() || xi.size() != d.size()) throw Error(ErrorKind::SeqMismatch, "element lengths differ from " + seq_str(d));
  FracCyclic acc;
  for (std::size_t i = 0; i < d.size(); ++i) acc = acc + FracCyclic((x[i] * xi[i]) % d[i], d[i]);
  return acc;
}

std::string seq_str(const ElemDivSeq& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

namespace {

using Row = std::vector<FracCyclic>;
using Grid = std::vector<Row>;

Row add_rows(const Row& a, const Row& b) {
  Row r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

Row scale_row(const Row& a, std::int64_t x) {
  Row r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k].times(x);
  return r;
}

Grid transpose(const Grid& T) {
  Grid t(T.empty() ? 0 : T[0].size(), Row(T.size()));
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T[i].size(); ++j) t[j][i] = T[i][j];
  return t;
}

// Index of the first row equal to r, or npos.
std::size_t find_row(const Grid& T, const Row& r) {
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T[i] == r) return i;
  return static_cast<std::size_t>(-1);
}

// Step 3 on rows: f(x) = first row equal to x times row i1.
std::optional<std::vector<std::size_t>> multiples(const Grid& T, std::size_t i1, std::int64_t d1) {
  std::vector<std::size_t> f;
  std::vector<bool> used(T.size(), false);
  for (std::int64_t x = 0; x < d1; ++x) {
    const std::size_t r = find_row(T, scale_row(T[i1], x));
    if (r == static_cast<std::size_t>(-1) || used[r]) return std::nullopt;
    used[r] = true;
    f.push_back(r);
  }
  return f;
}

// Step 6 on rows: element (x1, x') sits at the row equal to row f1(x1) + row f'(x').
std::optional<std::vector<HdElement>> assemble(const Grid& T, const std::vector<std::size_t>& f1,
                                               const std::vector<std::size_t>& sub_rows,
                                               const std::vector<HdElement>& sub_p) {
  const std::size_t n = T.size();
  std::map<Row, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(T[i], i).second) return std::nullopt;  // repeated rows: not perfect
  std::vector<HdElement> p(n);
  std::vector<bool> set(n, false);
  for (std::size_t x1 = 0; x1 < f1.size(); ++x1)
    for (std::size_t k = 0; k < sub_rows.size(); ++k) {
      auto it = index.find(add_rows(T[f1[x1]], T[sub_rows[k]]));
      if (it == index.end() || set[it->second]) return std::nullopt;
      set[it->second] = true;
      HdElement e{static_cast<std::int64_t>(x1)};
      e.insert(e.end(), sub_p[k].begin(), sub_p[k].end());
      p[it->second] = std::move(e);
    }
  return p;
}

std::optional<GroupId> identify(const Grid& T) {
  const std::size_t n = T.size();
  if (n == 1) return GroupId{{}, {HdElement{}}, {HdElement{}}};
  std::int64_t d1 = 1;
  for (const auto& row : T)
    for (const auto& t : row) d1 = std::max(d1, t.order());
  if (d1 == 1) return std::nullopt;  // only trivial values but n > 1
  const FracCyclic target(1, d1);
  std::size_t i1 = n, j1 = n;
  for (std::size_t i = 0; i < n && i1 == n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (T[i][j] == target) {
        i1 = i;
        j1 = j;
        break;
      }
  if (i1 == n) return std::nullopt;

  const Grid Tt = transpose(T);
  auto f1 = multiples(T, i1, d1);
  auto g1 = multiples(Tt, j1, d1);
  if (!f1 || !g1) return std::nullopt;

  if (n % static_cast<std::size_t>(d1) != 0) return std::nullopt;
  const std::size_t np = n / static_cast<std::size_t>(d1);
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i)
    if (T[i][j1].is_zero()) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if (T[i1][j].is_zero()) cols.push_back(j);
  if (rows.size() != np || cols.size() != np) return std::nullopt;
  Grid sub(np, Row(np));
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < np; ++b) {
      sub[a][b] = T[rows[a]][cols[b]];
      if (static_cast<std::int64_t>(np) % sub[a][b].den() != 0) return std::nullopt;
    }

  auto rec = identify(sub);
  if (!rec) return std::nullopt;
  if (!rec->d.empty() && d1 % rec->d.front() != 0) return std::nullopt;

  auto p = assemble(T, *f1, rows, rec->p);
  auto q = assemble(Tt, *g1, cols, rec->q);
  if (!p || !q) return std::nullopt;
  GroupId out;
  out.d = {d1};
  out.d.insert(out.d.end(), rec->d.begin(), rec->d.end());
  out.p = std::move(*p);
  out.q = std::move(*q);
  return out;
}

}  // namespace

std::optional<GroupId> identify_group(const PairingTable& table) {
  const std::size_t n = table.n;
  if (n == 0 || table.T.size() != n) throw Error(ErrorKind::MalformedTable, "table must be n x n with n >= 1");
  for (const auto& row : table.T) {
    if (row.size() != n) throw Error(ErrorKind::MalformedTable, "table must be n x n");
    for (const auto& t : row)
      if (static_cast<std::int64_t>(n) % t.den() != 0)
        throw Error(ErrorKind::MalformedTable, "entry " + t.str() + " is not in (1/n)Z/Z");
  }
  auto g = identify(table.T);
  if (!g) return std::nullopt;
  // Soundness: the answer must reproduce every entry.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (hd_pairing(g->d, g->p[i], g->q[j]) != table.T[i][j]) return std::nullopt;
  return g;
}

PairingTable random_group_table(const ElemDivSeq& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto shuffled = [&] {
    auto v = hd_elements(d);
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
    return v;
  };
  const auto p = shuffled();
  const auto q = shuffled();
  PairingTable t;
  t.n = p.size();
  t.T.assign(t.n, Row(t.n));
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j) t.T[i][j] = hd_pairing(d, p[i], q[j]);
  return t;
}

json table_to_json(const PairingTable& t) {
  json rows = json::array();
  for (const auto& row : t.T) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return json{{"n", t.n}, {"T", rows}};
}

PairingTable table_from_json(const json& j) {
  try {
    PairingTable t;
    t.n = j.at("n").get<std::size_t>();
    for (const auto& row : j.at("T")) {
      Row r;
      for (const auto& x : row) r.push_back(FracCyclic::parse(x.get<std::string>()));
      t.T.push_back(std::move(r));
    }
    return t;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("pairing table: ") + e.what());
  }
}

json group_to_json(const GroupId& g) { return json{{"d", g.d}, {"p", g.p}, {"q", g.q}}; }

}  // namespace dp
