#include "cogirth/cocircuits.hpp"

#include <algorithm>
#include <set>

namespace cogirth {

namespace {

std::vector<int> to_labels(const WeightedMatroid& m, const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(m.labels[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complement_labels(const WeightedMatroid& m, const std::vector<int>& idx) {
  std::vector<bool> in(m.n(), false);
  for (int i : idx) in[i] = true;
  std::vector<int> out;
  for (int j = 0; j < m.n(); ++j)
    if (!in[j]) out.push_back(m.labels[j]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Cocircuit> cocircuits(const WeightedMatroid& m) {
  if (rank(m) < 1) throw std::invalid_argument("cocircuits: matroid of rank zero");
  RowSpaceScan scan(m.cols, m.weights);
  if (scan.class_count() > (std::int64_t(1) << 16))
    throw CapExceeded("cocircuits: too many row-space classes to list");

  struct Entry {
    std::uint64_t mask;  // support over element indices (n <= 64 here)
    std::int64_t weight;
    std::vector<int> idx;
  };
  if (m.n() > 64) throw CapExceeded("cocircuits: ground set too large to list");
  std::vector<Entry> entries;
  scan.for_each(0, scan.class_count(), [&](std::int64_t w, const std::vector<int>& sup) {
    std::uint64_t mask = 0;
    for (int i : sup) mask |= std::uint64_t(1) << i;
    entries.push_back({mask, w, sup});
  });

  // Minimality sieve: distinct codeword classes can share a support, and a
  // support strictly containing another is a union of cocircuits, not one.
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::popcount(a.mask) < std::popcount(b.mask);
  });
  std::vector<Entry> minimal;
  std::set<std::uint64_t> kept;
  for (const auto& e : entries) {
    if (kept.count(e.mask)) continue;
    bool contains_smaller = false;
    for (const auto& k : minimal)
      if ((k.mask & e.mask) == k.mask) {
        contains_smaller = true;
        break;
      }
    if (!contains_smaller) {
      minimal.push_back(e);
      kept.insert(e.mask);
    }
  }

  std::vector<Cocircuit> out;
  for (const auto& e : minimal) {
    Cocircuit c;
    c.support = to_labels(m, e.idx);
    c.weight = e.weight;
    c.hyperplane = complement_labels(m, e.idx);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Cocircuit& a, const Cocircuit& b) { return a.support < b.support; });
  return out;
}

CogirthResult weighted_cogirth(const WeightedMatroid& m, int threads) {
  if (rank(m) < 1) throw std::invalid_argument("cogirth: matroid of rank zero");
  RowSpaceScan scan(m.cols, m.weights);
  auto best = scan.min_weight_support(threads);
  CogirthResult res;
  res.value = best.weight;
  res.witness.support = to_labels(m, best.support);
  res.witness.weight = best.weight;
  res.witness.hyperplane = complement_labels(m, best.support);
  return res;
}

std::int64_t cogirth_oracle(const WeightedMatroid& m) {
  const int r = rank(m);
  if (r < 1) throw std::invalid_argument("cogirth_oracle: matroid of rank zero");
  if (r > 6) throw CapExceeded("cogirth_oracle: rank above oracle cap 6");
  auto classes = parallel_classes(m);
  const int reps = static_cast<int>(classes.size());
  if (reps > 14) throw CapExceeded("cogirth_oracle: more than 14 parallel classes");

  std::vector<int> rep_idx;
  for (const auto& pc : classes) rep_idx.push_back(m.index_of(pc.representative));

  const std::int64_t total = total_weight(m);
  std::set<std::vector<int>> flats;  // element-index sets of rank r-1 closures
  std::int64_t best = -1;

  // every (r-1)-subset of representatives, via odometer over combinations
  std::vector<int> c(r - 1);
  for (int i = 0; i < r - 1; ++i) c[i] = i;
  bool done = r - 1 > reps;
  if (r - 1 == 0) done = false;
  while (!done) {
    std::vector<int> chosen;
    for (int i = 0; i < r - 1; ++i) chosen.push_back(rep_idx[c[i]]);
    GfMatrix sub = m.cols.columns_subset(chosen);
    // closure: every element whose column lies in the span
    std::vector<int> closure;
    for (int j = 0; j < m.n(); ++j) {
      auto col = m.cols.col(j);
      if (in_col_space(col, sub)) closure.push_back(j);
    }
    if (rank_of(m.cols.columns_subset(closure)) == r - 1 && flats.insert(closure).second) {
      std::int64_t fw = 0;
      for (int j : closure) fw += m.weights[j];
      std::int64_t cw = total - fw;
      if (best < 0 || cw < best) best = cw;
    }
    if (r - 1 == 0) break;
    // next combination
    int i = r - 2;
    while (i >= 0 && c[i] == reps - (r - 1) + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < r - 1; ++j) c[j] = c[j - 1] + 1;
  }
  return best;
}

std::vector<Cocircuit> classify_cocircuits(const WeightedMatroid& m, const Embedding& emb) {
  if (static_cast<int>(emb.element_points.size()) != m.n())
    throw std::invalid_argument("classify_cocircuits: embedding does not match matroid");
  auto list = cocircuits(m);
  FlatInfo fi = flat_rank(emb.complement);
  if (emb.complement.points.empty() || !fi.is_flat) return list;  // untyped

  const Gf& f = m.field;
  for (auto& c : list) {
    // ambient hyperplane of the cocircuit: the covector vanishing on the
    // complementary flat of M
    std::vector<std::vector<std::uint8_t>> flat_pts;
    for (int label : c.hyperplane) flat_pts.push_back(emb.element_points[m.index_of(label)]);
    auto normals = hyperplane_normals_containing(f, emb.ambient_rank, flat_pts);
    if (normals.size() != 1)
      throw std::logic_error("classify_cocircuits: cocircuit complement is not a hyperplane flat");
    const auto& u = normals.front();
    bool contains_complement = true;
    for (const auto& p : emb.complement.points) {
      int dot = 0;
      for (int i = 0; i < emb.ambient_rank; ++i) dot = f.add(dot, f.mul(u[i], p[i]));
      if (dot != 0) {
        contains_complement = false;
        break;
      }
    }
    c.cotype = contains_complement ? Cotype::type_one : Cotype::type_two;
  }
  return list;
}

}  // namespace cogirth
