#include "cogirth/verify.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

#include "cogirth/io.hpp"

namespace cogirth {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::string join_labels(const std::vector<int>& labels) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "}";
  return os.str();
}

std::string point_str(const std::vector<std::uint8_t>& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << int(p[i]);
  os << ")";
  return os.str();
}

std::string describe(const WeightedMatroid& m, int r) {
  std::ostringstream os;
  os << "GF(" << m.field.q() << "), rank " << r << ", " << m.n() << " elements, w(M)="
     << total_weight(m);
  return os.str();
}

void require_simple(const WeightedMatroid& m, const char* op) {
  auto lp = loops(m);
  if (!lp.empty())
    throw std::invalid_argument(std::string(op) + ": matroid has loops " + join_labels(lp) +
                                "; the checks operate on simple weighted matroids, simplify first");
  for (const auto& pc : parallel_classes(m))
    if (pc.members.size() > 1)
      throw std::invalid_argument(std::string(op) + ": matroid has a parallel class " +
                                  join_labels(pc.members) +
                                  "; the checks operate on simple weighted matroids (weights "
                                  "encode parallel-class sizes), simplify first");
}

int dot(const Gf& f, const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v) {
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s = f.add(s, f.mul(u[i], v[i]));
  return s;
}

}  // namespace

Fraction Fraction::reduced(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Fraction: zero denominator");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Fraction{num, den};
}

VerificationReport check_rank2(const WeightedMatroid& m) {
  require_simple(m, "check_rank2");
  if (rank(m) != 2) throw std::invalid_argument("check_rank2: rank is not 2");
  const int n = m.n();
  VerificationReport rep;
  rep.kind = CheckKind::rank2;
  rep.q = m.field.q();
  rep.r = 2;
  rep.n = n;
  rep.instance = describe(m, 2);
  rep.total_weight = total_weight(m);
  auto cg = weighted_cogirth(m);
  rep.cogirth_value = cg.value;
  rep.witness_cocircuit = cg.witness.support;
  rep.ratio = Fraction::reduced(rep.total_weight, cg.value);
  rep.bound_lhs = std::int64_t(n - 1) * rep.total_weight;
  rep.bound_rhs = std::int64_t(n) * cg.value;
  rep.bound_holds = rep.bound_lhs >= rep.bound_rhs;
  rep.equality = rep.bound_lhs == rep.bound_rhs;

  const std::int64_t max_w = *std::max_element(m.weights.begin(), m.weights.end());
  bool constant = std::all_of(m.weights.begin(), m.weights.end(),
                              [&](std::int64_t w) { return w == m.weights[0]; });
  Condition cc{constant, ""};
  if (!constant) cc.witness = "weights are not constant";
  rep.cond_constant = cc;
  rep.characterization_consistent = rep.equality == constant;

  // In a simple rank-2 matroid the hyperplane flats are the single elements,
  // so the cogirth must equal w(M) minus the largest weight.
  rep.values["w_minus_max_weight"] = rep.total_weight - max_w;
  rep.internal_ok = cg.value == rep.total_weight - max_w;
  return rep;
}

VerificationReport check_main_theorem(const WeightedMatroid& m, const MainCheckOptions& opts) {
  require_simple(m, "check_main_theorem");
  Embedding emb = embed_in_pg(m);
  const Gf& f = m.field;
  const int q = f.q();
  const int r = emb.ambient_rank;
  if (emb.complement.points.empty())
    throw std::invalid_argument(
        "check_main_theorem: matroid is all of PG(r-1,q); use check_pg_proposition");

  VerificationReport rep;
  rep.kind = CheckKind::main;
  rep.q = q;
  rep.r = r;
  rep.n = m.n();
  rep.instance = describe(m, r);
  rep.total_weight = total_weight(m);
  auto cg = weighted_cogirth(m, opts.threads);
  rep.cogirth_value = cg.value;
  rep.witness_cocircuit = cg.witness.support;
  rep.ratio = Fraction::reduced(rep.total_weight, cg.value);
  rep.bound_lhs = std::int64_t(q - 1) * rep.total_weight;
  rep.bound_rhs = std::int64_t(q) * cg.value;
  rep.bound_holds = rep.bound_lhs >= rep.bound_rhs;
  rep.equality = rep.bound_lhs == rep.bound_rhs;

  // (i) the complement is a flat (and then automatically a P_k, 1 <= k < r)
  FlatInfo fi = flat_rank(emb.complement);
  rep.values["complement_size"] = emb.complement.size();
  rep.values["complement_rank"] = fi.rank;
  Condition ci{fi.is_flat, ""};
  if (!fi.is_flat) {
    PointSet spanc = span_points(f, r, emb.complement.points);
    for (const auto& p : spanc.points)
      if (!emb.complement.contains(p)) {
        ci.witness = "PG point " + point_str(p) + " lies in the span of the complement but not in it";
        break;
      }
  }
  rep.cond_i = ci;

  // (ii) weights constant on every rank-(k+1) flat through the complement
  Condition cii;
  if (ci.holds) {
    auto copies = pk1_copies_containing(emb.complement, r);
    rep.values["pk1_copy_count"] = static_cast<std::int64_t>(copies.size());
    cii.holds = true;
    for (const auto& copy : copies) {
      int first = -1;
      for (int j = 0; j < m.n() && cii.holds; ++j) {
        if (!copy.contains(emb.element_points[j])) continue;
        if (first < 0) {
          first = j;
        } else if (m.weights[j] != m.weights[first]) {
          cii.holds = false;
          std::ostringstream os;
          os << "elements " << m.labels[first] << " (weight " << m.weights[first] << ") and "
             << m.labels[j] << " (weight " << m.weights[j]
             << ") lie on a common rank-" << (fi.rank + 1) << " flat through the complement";
          cii.witness = os.str();
        }
      }
      if (!cii.holds) break;
    }
  } else {
    cii.holds = false;
    cii.witness = "complement is not a flat";
  }
  rep.cond_ii = cii;

  // (iii), hyperplane formulation: for every PG hyperplane H containing the
  // complement, the affine restriction E(M)-H must carry at least (q-1)
  // times the weight of E(M) inside H.
  Condition ciii{true, ""};
  {
    auto normals = hyperplane_normals_containing(f, r, emb.complement.points);
    rep.values["iii_hyperplanes_checked"] = static_cast<std::int64_t>(normals.size());
    for (const auto& u : normals) {
      std::int64_t w_in = 0;
      for (int j = 0; j < m.n(); ++j)
        if (dot(f, u, emb.element_points[j]) == 0) w_in += m.weights[j];
      std::int64_t w_out = rep.total_weight - w_in;
      if (w_out < std::int64_t(q - 1) * w_in) {
        ciii.holds = false;
        std::vector<int> sup;
        for (int j = 0; j < m.n(); ++j)
          if (dot(f, u, emb.element_points[j]) != 0) sup.push_back(m.labels[j]);
        std::ostringstream os;
        os << "affine restriction " << join_labels(sup) << " has weight " << w_out
           << " < (q-1) * " << w_in;
        ciii.witness = os.str();
        break;
      }
    }
  }
  rep.cond_iii = ciii;

  // classification-based cross checks
  if (ci.holds) {
    auto classified = classify_cocircuits(m, emb);
    std::int64_t t1 = 0, t2 = 0;
    std::int64_t min1 = -1, max1 = -1, min2 = -1, max2 = -1;
    bool type_one_ok = true;
    bool sublemma_ok = true;
    for (const auto& c : classified) {
      if (c.cotype == Cotype::type_one) {
        ++t1;
        min1 = min1 < 0 ? c.weight : std::min(min1, c.weight);
        max1 = std::max(max1, c.weight);
        if (std::int64_t(q) * c.weight < std::int64_t(q - 1) * rep.total_weight)
          type_one_ok = false;
      } else if (c.cotype == Cotype::type_two) {
        ++t2;
        min2 = min2 < 0 ? c.weight : std::min(min2, c.weight);
        max2 = std::max(max2, c.weight);
        if (std::int64_t(q) * c.weight != std::int64_t(q - 1) * rep.total_weight)
          sublemma_ok = false;
      }
    }
    rep.values["type_one_count"] = t1;
    rep.values["type_two_count"] = t2;
    if (t1 > 0) {
      rep.values["min_type_one_weight"] = min1;
      rep.values["max_type_one_weight"] = max1;
    }
    if (t2 > 0) {
      rep.values["min_type_two_weight"] = min2;
      rep.values["max_type_two_weight"] = max2;
    }
    rep.values["iii_type_one_form"] = type_one_ok ? 1 : 0;
    bool agree = type_one_ok == ciii.holds;
    rep.values["iii_forms_agree"] = agree ? 1 : 0;
    rep.internal_ok = rep.internal_ok && agree;
    if (cii.holds) rep.values["sublemma_ok"] = sublemma_ok ? 1 : 0;
  }

  // (iii)': q^{r-1} w(e) <= w(M) for every element
  {
    const std::int64_t max_w = *std::max_element(m.weights.begin(), m.weights.end());
    std::int64_t lhs = ipow(q, r - 1) * max_w;
    Condition cip{lhs <= rep.total_weight, ""};
    if (!cip.holds) {
      int j = static_cast<int>(std::max_element(m.weights.begin(), m.weights.end()) -
                               m.weights.begin());
      std::ostringstream os;
      os << "element " << m.labels[j] << " has weight " << max_w << " with q^{r-1} w(e) = " << lhs
         << " > " << rep.total_weight << " = w(M)";
      cip.witness = os.str();
    }
    rep.values["iii_prime_lhs"] = lhs;
    rep.values["iii_prime_rhs"] = rep.total_weight;
    rep.cond_iii_prime = cip;
  }

  // optional oracle: quantify (iii) over every AG-isomorphic restriction
  if (opts.iii_restriction_cap > 0) {
    auto res = condition_iii_all_restrictions(m, emb, opts.iii_restriction_cap);
    if (res) {
      rep.values["iii_restriction_form"] = res->holds ? 1 : 0;
      bool agree = res->holds == ciii.holds;
      rep.values["iii_restrictions_agree"] = agree ? 1 : 0;
      rep.internal_ok = rep.internal_ok && agree;
    }
  }

  rep.characterization_consistent =
      rep.equality == (ci.holds && cii.holds && ciii.holds);
  rep.iii_prime_consistent = !rep.equality || rep.cond_iii_prime->holds;
  return rep;
}

VerificationReport check_condition_iii_prime(const WeightedMatroid& m) {
  VerificationReport rep = check_main_theorem(m);
  rep.kind = CheckKind::iii_prime;
  return rep;
}

VerificationReport check_type_ii_sublemma(const WeightedMatroid& m, const Embedding& emb) {
  require_simple(m, "check_type_ii_sublemma");
  VerificationReport main = check_main_theorem(m);
  if (!main.cond_i->holds || !main.cond_ii->holds)
    throw std::invalid_argument(
        "check_type_ii_sublemma: conditions (i) and (ii) do not both hold, the type-II "
        "weight identity does not apply");

  VerificationReport rep;
  rep.kind = CheckKind::sublemma;
  rep.q = main.q;
  rep.r = main.r;
  rep.n = main.n;
  rep.instance = main.instance;
  rep.total_weight = main.total_weight;
  rep.cogirth_value = main.cogirth_value;
  rep.witness_cocircuit = main.witness_cocircuit;
  rep.ratio = main.ratio;
  rep.cond_i = main.cond_i;
  rep.cond_ii = main.cond_ii;

  auto classified = classify_cocircuits(m, emb);
  const std::int64_t q = rep.q;
  bool all_exact = true;
  std::int64_t t2 = 0, common = -1;
  std::string witness;
  for (const auto& c : classified) {
    if (c.cotype != Cotype::type_two) continue;
    ++t2;
    if (common < 0) common = c.weight;
    if (q * c.weight != (q - 1) * rep.total_weight) {
      all_exact = false;
      if (witness.empty())
        witness = "type-II cocircuit " + join_labels(c.support) + " has weight " +
                  std::to_string(c.weight);
    }
  }
  rep.values["type_two_count"] = t2;
  if (t2 > 0) rep.values["type_two_weight"] = common;
  rep.bound_lhs = q * (common < 0 ? 0 : common);
  rep.bound_rhs = (q - 1) * rep.total_weight;
  rep.bound_holds = all_exact;
  rep.equality = all_exact;
  rep.characterization_consistent = all_exact;
  if (!all_exact) rep.cond_constant = Condition{false, witness};
  return rep;
}

VerificationReport check_pg_proposition(const WeightedMatroid& m) {
  require_simple(m, "check_pg_proposition");
  Embedding emb = embed_in_pg(m);
  if (!emb.complement.points.empty())
    throw std::invalid_argument(
        "check_pg_proposition: matroid is not a full projective geometry");
  const Gf& f = m.field;
  const int q = f.q();
  const int r = emb.ambient_rank;

  VerificationReport rep;
  rep.kind = CheckKind::pg;
  rep.q = q;
  rep.r = r;
  rep.n = m.n();
  rep.instance = describe(m, r);
  rep.total_weight = total_weight(m);
  auto cg = weighted_cogirth(m);
  rep.cogirth_value = cg.value;
  rep.witness_cocircuit = cg.witness.support;
  rep.ratio = Fraction::reduced(rep.total_weight, cg.value);
  rep.bound_lhs = ipow(q, r - 1) * (q - 1) * rep.total_weight;
  rep.bound_rhs = (ipow(q, r) - 1) * cg.value;
  rep.bound_holds = rep.bound_lhs >= rep.bound_rhs;
  rep.equality = rep.bound_lhs == rep.bound_rhs;

  bool constant = std::all_of(m.weights.begin(), m.weights.end(),
                              [&](std::int64_t w) { return w == m.weights[0]; });
  Condition cc{constant, constant ? "" : "weights are not constant"};
  rep.cond_constant = cc;
  rep.characterization_consistent = rep.equality == constant;
  return rep;
}

std::optional<Condition> condition_iii_all_restrictions(const WeightedMatroid& m,
                                                        const Embedding& emb, int n_cap) {
  const int n = m.n();
  if (n > n_cap || n > 30) return std::nullopt;
  const Gf& f = m.field;
  const int q = f.q();
  const int r = emb.ambient_rank;
  const std::int64_t s64 = ipow(q, r - 1);
  const std::int64_t w_total = total_weight(m);
  Condition out{true, ""};
  if (s64 > n) return out;  // no restriction of affine size exists
  const int s = static_cast<int>(s64);

  // precompute element-index masks of the PG lines fully present in E(M);
  // a subset containing one cannot be an affine geometry
  std::vector<std::uint32_t> line_masks;
  {
    std::map<std::vector<std::uint8_t>, int> point_to_idx;
    for (int j = 0; j < n; ++j) point_to_idx[emb.element_points[j]] = j;
    for (const auto& line : all_lines(f, r)) {
      std::uint32_t mask = 0;
      bool complete = true;
      for (const auto& p : line.points) {
        auto it = point_to_idx.find(p);
        if (it == point_to_idx.end()) {
          complete = false;
          break;
        }
        mask |= std::uint32_t(1) << it->second;
      }
      if (complete) line_masks.push_back(mask);
    }
  }

  GfMatrix ag_cols = GfMatrix::from_cols(f, ag(r, f).points);

  std::vector<int> c(s);
  for (int i = 0; i < s; ++i) c[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (int i = 0; i < s; ++i) mask |= std::uint32_t(1) << c[i];
    bool line_free = true;
    for (auto lm : line_masks)
      if ((mask & lm) == lm) {
        line_free = false;
        break;
      }
    if (line_free) {
      GfMatrix sub = m.cols.columns_subset(c);
      if (rank_of(sub) == r && matroids_isomorphic(sub, ag_cols)) {
        std::int64_t w_in = 0;
        for (int i : c) w_in += m.weights[i];
        if (w_in < std::int64_t(q - 1) * (w_total - w_in)) {
          out.holds = false;
          std::vector<int> lbl;
          for (int i : c) lbl.push_back(m.labels[i]);
          out.witness = "affine restriction " + join_labels(lbl) + " has weight " +
                        std::to_string(w_in) + " < (q-1) * " + std::to_string(w_total - w_in);
          return out;
        }
      }
    }
    int i = s - 1;
    while (i >= 0 && c[i] == n - s + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

WorkedExample worked_example(ExamplePhase phase) {
  Gf f(2);
  const int r = 4;
  PointSet all = pg(r, f);
  const auto p = all.points.front();  // removed point, lexicographically least

  // canonical hyperplane through p: least normal covector vanishing on p
  std::vector<std::uint8_t> u;
  for (const auto& cand : all.points)
    if (dot(f, cand, p) == 0) {
      u = cand;
      break;
    }

  std::vector<std::vector<std::uint8_t>> elements;
  std::vector<std::int64_t> weights;
  for (const auto& x : all.points) {
    if (x == p) continue;
    elements.push_back(x);
    weights.push_back(dot(f, u, x) == 0 ? 2 : 1);
  }

  if (phase == ExamplePhase::after) {
    // one line through p inside C* + p, one inside H; swap their weights
    PointSet p_flat{f, r, {p}};
    auto lines = pk1_copies_containing(p_flat, r);
    std::sort(lines.begin(), lines.end(),
              [](const PointSet& a, const PointSet& b) { return a.points < b.points; });
    const PointSet* line_cstar = nullptr;
    const PointSet* line_h = nullptr;
    for (const auto& line : lines) {
      bool in_cstar = true, in_h = true;
      for (const auto& x : line.points) {
        if (x == p) continue;
        if (dot(f, u, x) == 0) in_cstar = false;
        else in_h = false;
      }
      if (in_cstar && !line_cstar) line_cstar = &line;
      if (in_h && !line_h) line_h = &line;
    }
    auto set_weight = [&](const PointSet& line, std::int64_t w) {
      for (const auto& x : line.points) {
        if (x == p) continue;
        for (std::size_t j = 0; j < elements.size(); ++j)
          if (elements[j] == x) weights[j] = w;
      }
    };
    set_weight(*line_cstar, 2);
    set_weight(*line_h, 1);
  }

  WorkedExample ex{from_points(f, elements, weights), {}};
  ex.report = check_main_theorem(ex.matroid);
  ex.report.kind = CheckKind::example;
  ex.report.instance = std::string("worked example, phase ") +
                       (phase == ExamplePhase::before ? "before" : "after");

  std::int64_t cstar_weight = 0, cstar_size = 0;
  for (std::size_t j = 0; j < elements.size(); ++j)
    if (dot(f, u, elements[j]) != 0) {
      cstar_weight += weights[j];
      ++cstar_size;
    }
  ex.report.values["w_total"] = total_weight(ex.matroid);
  ex.report.values["h_point_count"] = static_cast<std::int64_t>(all.points.size()) - cstar_size;
  ex.report.values["h_minus_p_size"] = static_cast<std::int64_t>(all.points.size()) - cstar_size - 1;
  ex.report.values["a4_size"] = cstar_size;
  ex.report.values["cstar_weight"] = cstar_weight;
  ex.report.values["g_star"] = ex.report.cogirth_value;
  return ex;
}

WeightedMatroid random_instance(const Gf& f, int r, std::mt19937_64& rng, int weight_max) {
  PointSet all = pg(r, f);
  const int big_n = static_cast<int>(all.points.size());
  for (;;) {
    int n = r + static_cast<int>(rng() % static_cast<std::uint64_t>(big_n - r));
    std::vector<int> idx(big_n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < n; ++i) {
      int j = i + static_cast<int>(rng() % static_cast<std::uint64_t>(big_n - i));
      std::swap(idx[i], idx[j]);
    }
    idx.resize(n);
    std::sort(idx.begin(), idx.end());
    std::vector<std::vector<std::uint8_t>> pts;
    for (int i : idx) pts.push_back(all.points[i]);
    std::vector<std::int64_t> w(n);
    for (auto& x : w) x = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(weight_max));
    WeightedMatroid m = from_points(f, pts, w);
    if (rank(m) == r) return m;
  }
}

namespace {

struct ScanAccum {
  std::int64_t instances = 0;
  std::int64_t bound_violations = 0;
  std::int64_t consistency_violations = 0;
  std::int64_t iii_prime_violations = 0;
  std::int64_t sublemma_checked = 0, sublemma_violations = 0;
  std::int64_t iii_agreement_checked = 0, iii_agreement_violations = 0;
  std::int64_t oracle_checked = 0, oracle_mismatches = 0;
  std::int64_t first_bad = -1;
  std::string first_desc;

  void merge(const ScanAccum& o) {
    instances += o.instances;
    bound_violations += o.bound_violations;
    consistency_violations += o.consistency_violations;
    iii_prime_violations += o.iii_prime_violations;
    sublemma_checked += o.sublemma_checked;
    sublemma_violations += o.sublemma_violations;
    iii_agreement_checked += o.iii_agreement_checked;
    iii_agreement_violations += o.iii_agreement_violations;
    oracle_checked += o.oracle_checked;
    oracle_mismatches += o.oracle_mismatches;
    if (o.first_bad >= 0 && (first_bad < 0 || o.first_bad < first_bad)) {
      first_bad = o.first_bad;
      first_desc = o.first_desc;
    }
  }
};

void scan_one(const ScanSpec& spec, const WeightedMatroid& m, std::int64_t index,
              std::int64_t full_pg_size, ScanAccum& acc) {
  VerificationReport rep;
  if (m.n() == full_pg_size) {
    rep = check_pg_proposition(m);
  } else {
    MainCheckOptions opts;
    opts.iii_restriction_cap = spec.iii_restriction_cap;
    opts.threads = 1;
    rep = check_main_theorem(m, opts);
  }
  ++acc.instances;
  bool bad = false;
  if (!rep.bound_holds) {
    ++acc.bound_violations;
    bad = true;
  }
  if (!rep.characterization_consistent.value_or(true)) {
    ++acc.consistency_violations;
    bad = true;
  }
  if (rep.equality && rep.cond_iii_prime && !rep.cond_iii_prime->holds) {
    ++acc.iii_prime_violations;
    bad = true;
  }
  if (spec.check_sublemma && rep.values.count("sublemma_ok")) {
    ++acc.sublemma_checked;
    if (rep.values.at("sublemma_ok") == 0) {
      ++acc.sublemma_violations;
      bad = true;
    }
  }
  if (rep.values.count("iii_forms_agree") || rep.values.count("iii_restrictions_agree")) {
    bool agree = true;
    if (rep.values.count("iii_forms_agree")) agree = agree && rep.values.at("iii_forms_agree") == 1;
    if (rep.values.count("iii_restrictions_agree"))
      agree = agree && rep.values.at("iii_restrictions_agree") == 1;
    ++acc.iii_agreement_checked;
    if (!agree) {
      ++acc.iii_agreement_violations;
      bad = true;
    }
  }
  if (spec.oracle_n_cap > 0 && m.n() <= spec.oracle_n_cap && rep.r <= spec.oracle_r_cap) {
    ++acc.oracle_checked;
    if (cogirth_oracle(m) != rep.cogirth_value) {
      ++acc.oracle_mismatches;
      bad = true;
    }
  }
  if (bad && (acc.first_bad < 0 || index < acc.first_bad)) {
    acc.first_bad = index;
    acc.first_desc = rep.instance + "\n" + write_matroid_string(m);
  }
}

}  // namespace

ScanReport scan(const ScanSpec& spec) {
  Gf f(spec.q);
  if (spec.r < 2) throw std::invalid_argument("scan: rank must be >= 2");
  ScanReport out;
  out.q = spec.q;
  out.r = spec.r;
  out.mode = spec.mode == ScanSpec::Mode::exhaustive ? "exhaustive" : "random";
  out.requested = spec.count;
  out.seed = spec.seed;
  out.weight_max = spec.weight_max;

  PointSet all = pg(spec.r, f);
  const std::int64_t big_n = all.size();
  int threads = spec.threads > 0 ? spec.threads
                                 : std::max(1u, std::thread::hardware_concurrency());

  std::vector<ScanAccum> accs;
  if (spec.mode == ScanSpec::Mode::exhaustive) {
    if (big_n > 16) throw CapExceeded("scan: exhaustive mode supports at most 16 PG points");
    const std::int64_t total_masks = std::int64_t(1) << big_n;
    auto worker = [&](std::int64_t lo, std::int64_t hi) {
      ScanAccum acc;
      for (std::int64_t mask = lo; mask < hi; ++mask) {
        if (mask == total_masks - 1) continue;  // the full geometry is excluded
        std::vector<std::vector<std::uint8_t>> pts;
        for (int i = 0; i < big_n; ++i)
          if (mask & (std::int64_t(1) << i)) pts.push_back(all.points[i]);
        if (static_cast<int>(pts.size()) < spec.r) continue;
        WeightedMatroid m = from_points(f, pts);
        if (rank(m) != spec.r) continue;
        scan_one(spec, m, mask, big_n, acc);
      }
      return acc;
    };
    std::vector<std::future<ScanAccum>> futs;
    std::int64_t chunk = (total_masks + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::int64_t lo = t * chunk, hi = std::min(total_masks, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, worker, lo, hi));
    }
    for (auto& fu : futs) accs.push_back(fu.get());
  } else {
    if (spec.count < 0) throw std::invalid_argument("scan: negative instance count");
    std::mt19937_64 rng(spec.seed);
    std::vector<WeightedMatroid> pool;
    pool.reserve(spec.count);
    for (int i = 0; i < spec.count; ++i)
      pool.push_back(random_instance(f, spec.r, rng, std::max(1, spec.weight_max)));
    auto worker = [&](int lo, int hi) {
      ScanAccum acc;
      for (int i = lo; i < hi; ++i) scan_one(spec, pool[i], i, big_n, acc);
      return acc;
    };
    std::vector<std::future<ScanAccum>> futs;
    int chunk = (spec.count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      int lo = t * chunk, hi = std::min(spec.count, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, worker, lo, hi));
    }
    for (auto& fu : futs) accs.push_back(fu.get());
  }

  ScanAccum total;
  for (auto& a : accs) total.merge(a);
  out.instances = total.instances;
  out.bound_violations = total.bound_violations;
  out.consistency_violations = total.consistency_violations;
  out.iii_prime_violations = total.iii_prime_violations;
  out.sublemma_checked = total.sublemma_checked;
  out.sublemma_violations = total.sublemma_violations;
  out.iii_agreement_checked = total.iii_agreement_checked;
  out.iii_agreement_violations = total.iii_agreement_violations;
  out.oracle_checked = total.oracle_checked;
  out.oracle_mismatches = total.oracle_mismatches;
  out.first_counterexample = total.first_desc;
  return out;
}

}  // namespace cogirth
