#include "cogirth/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cogirth {

namespace {

using nlohmann::json;

std::vector<std::string> tokenize(std::istream& in) {
  std::vector<std::string> tokens;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

std::int64_t parse_int(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    std::int64_t v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("matroid file: bad ") + what + " '" + tok + "'");
  }
}

}  // namespace

WeightedMatroid read_matroid(std::istream& in) {
  auto tokens = tokenize(in);
  std::size_t pos = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (pos >= tokens.size()) throw ParseError(std::string("matroid file: missing ") + what);
    return tokens[pos++];
  };
  int q = static_cast<int>(parse_int(next("field order q"), "field order q"));
  int r = static_cast<int>(parse_int(next("row count r"), "row count r"));
  int n = static_cast<int>(parse_int(next("column count n"), "column count n"));
  if (r < 0 || n < 0) throw ParseError("matroid file: negative dimensions");
  Gf f = [&] {
    try {
      return Gf(q);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("matroid file: ") + e.what());
    }
  }();
  GfMatrix a(f, r, n);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      std::int64_t v = parse_int(next("matrix entry"), "matrix entry");
      if (v < 0 || v >= q) throw ParseError("matroid file: entry out of field range");
      a.set(i, j, static_cast<int>(v));
    }
  std::optional<std::vector<std::int64_t>> weights;
  if (pos < tokens.size()) {
    if (tokens[pos] != "w:")
      throw ParseError("matroid file: unexpected token '" + tokens[pos] + "'");
    ++pos;
    std::vector<std::int64_t> w(n);
    for (int j = 0; j < n; ++j) {
      w[j] = parse_int(next("weight"), "weight");
      if (w[j] < 1) throw ParseError("matroid file: nonpositive weight");
    }
    weights = std::move(w);
  }
  if (pos != tokens.size()) throw ParseError("matroid file: trailing tokens");
  return from_matrix(f, a, std::move(weights));
}

WeightedMatroid read_matroid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matroid file '" + path + "'");
  return read_matroid(in);
}

void write_matroid(std::ostream& out, const WeightedMatroid& m) {
  out << m.field.q() << " " << m.cols.rows << " " << m.n() << "\n";
  for (int i = 0; i < m.cols.rows; ++i) {
    for (int j = 0; j < m.n(); ++j) out << (j ? " " : "") << int(m.cols.at(i, j));
    out << "\n";
  }
  bool unit = std::all_of(m.weights.begin(), m.weights.end(),
                          [](std::int64_t w) { return w == 1; });
  if (!unit) {
    out << "w:";
    for (auto w : m.weights) out << " " << w;
    out << "\n";
  }
}

std::string write_matroid_string(const WeightedMatroid& m) {
  std::ostringstream os;
  write_matroid(os, m);
  return os.str();
}

void write_matroid_file(const std::string& path, const WeightedMatroid& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matroid file '" + path + "'");
  write_matroid(out, m);
}

namespace {

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::rank2: return "rank2";
    case CheckKind::main: return "main";
    case CheckKind::pg: return "pg";
    case CheckKind::iii_prime: return "iiiprime";
    case CheckKind::sublemma: return "sublemma";
    case CheckKind::example: return "example";
  }
  return "main";
}

CheckKind kind_from_name(const std::string& s) {
  if (s == "rank2") return CheckKind::rank2;
  if (s == "main") return CheckKind::main;
  if (s == "pg") return CheckKind::pg;
  if (s == "iiiprime") return CheckKind::iii_prime;
  if (s == "sublemma") return CheckKind::sublemma;
  if (s == "example") return CheckKind::example;
  throw ParseError("unknown check kind '" + s + "'");
}

json fraction_to_json(const Fraction& f) { return json{{"num", f.num}, {"den", f.den}}; }
Fraction fraction_from_json(const json& j) {
  return Fraction{j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>()};
}

json condition_to_json(const Condition& c) {
  return json{{"holds", c.holds}, {"witness", c.witness}};
}
Condition condition_from_json(const json& j) {
  return Condition{j.at("holds").get<bool>(), j.at("witness").get<std::string>()};
}

}  // namespace

std::string to_json_string(const VerificationReport& rep) {
  json j;
  j["schema"] = 1;
  j["kind"] = "verification";
  j["check"] = kind_name(rep.kind);
  j["instance"] = rep.instance;
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["n"] = rep.n;
  j["total_weight"] = rep.total_weight;
  j["cogirth"] = rep.cogirth_value;
  j["witness_cocircuit"] = rep.witness_cocircuit;
  j["ratio"] = fraction_to_json(rep.ratio);
  j["bound_lhs"] = rep.bound_lhs;
  j["bound_rhs"] = rep.bound_rhs;
  j["bound_holds"] = rep.bound_holds;
  j["equality"] = rep.equality;
  json conds = json::object();
  if (rep.cond_i) conds["i"] = condition_to_json(*rep.cond_i);
  if (rep.cond_ii) conds["ii"] = condition_to_json(*rep.cond_ii);
  if (rep.cond_iii) conds["iii"] = condition_to_json(*rep.cond_iii);
  if (rep.cond_iii_prime) conds["iii_prime"] = condition_to_json(*rep.cond_iii_prime);
  if (rep.cond_constant) conds["constant_weights"] = condition_to_json(*rep.cond_constant);
  j["conditions"] = conds;
  if (rep.characterization_consistent)
    j["characterization_consistent"] = *rep.characterization_consistent;
  if (rep.iii_prime_consistent) j["iii_prime_consistent"] = *rep.iii_prime_consistent;
  j["internal_ok"] = rep.internal_ok;
  j["values"] = rep.values;
  return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<int>() != 1) throw ParseError("unsupported report schema");
  VerificationReport rep;
  rep.kind = kind_from_name(j.at("check").get<std::string>());
  rep.instance = j.at("instance").get<std::string>();
  rep.q = j.at("q").get<int>();
  rep.r = j.at("r").get<int>();
  rep.n = j.at("n").get<int>();
  rep.total_weight = j.at("total_weight").get<std::int64_t>();
  rep.cogirth_value = j.at("cogirth").get<std::int64_t>();
  rep.witness_cocircuit = j.at("witness_cocircuit").get<std::vector<int>>();
  rep.ratio = fraction_from_json(j.at("ratio"));
  rep.bound_lhs = j.at("bound_lhs").get<std::int64_t>();
  rep.bound_rhs = j.at("bound_rhs").get<std::int64_t>();
  rep.bound_holds = j.at("bound_holds").get<bool>();
  rep.equality = j.at("equality").get<bool>();
  const json& conds = j.at("conditions");
  if (conds.contains("i")) rep.cond_i = condition_from_json(conds.at("i"));
  if (conds.contains("ii")) rep.cond_ii = condition_from_json(conds.at("ii"));
  if (conds.contains("iii")) rep.cond_iii = condition_from_json(conds.at("iii"));
  if (conds.contains("iii_prime")) rep.cond_iii_prime = condition_from_json(conds.at("iii_prime"));
  if (conds.contains("constant_weights"))
    rep.cond_constant = condition_from_json(conds.at("constant_weights"));
  if (j.contains("characterization_consistent"))
    rep.characterization_consistent = j.at("characterization_consistent").get<bool>();
  if (j.contains("iii_prime_consistent"))
    rep.iii_prime_consistent = j.at("iii_prime_consistent").get<bool>();
  rep.internal_ok = j.at("internal_ok").get<bool>();
  rep.values = j.at("values").get<std::map<std::string, std::int64_t>>();
  return rep;
}

std::string to_json_string(const ScanReport& rep) {
  json j;
  j["schema"] = 1;
  j["kind"] = "scan";
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["mode"] = rep.mode;
  j["requested"] = rep.requested;
  j["seed"] = rep.seed;
  j["weight_max"] = rep.weight_max;
  j["instances"] = rep.instances;
  j["bound_violations"] = rep.bound_violations;
  j["consistency_violations"] = rep.consistency_violations;
  j["iii_prime_violations"] = rep.iii_prime_violations;
  j["sublemma_checked"] = rep.sublemma_checked;
  j["sublemma_violations"] = rep.sublemma_violations;
  j["iii_agreement_checked"] = rep.iii_agreement_checked;
  j["iii_agreement_violations"] = rep.iii_agreement_violations;
  j["oracle_checked"] = rep.oracle_checked;
  j["oracle_mismatches"] = rep.oracle_mismatches;
  j["first_counterexample"] = rep.first_counterexample;
  return j.dump(2);
}

ScanReport scan_report_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<int>() != 1) throw ParseError("unsupported report schema");
  ScanReport rep;
  rep.q = j.at("q").get<int>();
  rep.r = j.at("r").get<int>();
  rep.mode = j.at("mode").get<std::string>();
  rep.requested = j.at("requested").get<int>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  rep.weight_max = j.at("weight_max").get<int>();
  rep.instances = j.at("instances").get<std::int64_t>();
  rep.bound_violations = j.at("bound_violations").get<std::int64_t>();
  rep.consistency_violations = j.at("consistency_violations").get<std::int64_t>();
  rep.iii_prime_violations = j.at("iii_prime_violations").get<std::int64_t>();
  rep.sublemma_checked = j.at("sublemma_checked").get<std::int64_t>();
  rep.sublemma_violations = j.at("sublemma_violations").get<std::int64_t>();
  rep.iii_agreement_checked = j.at("iii_agreement_checked").get<std::int64_t>();
  rep.iii_agreement_violations = j.at("iii_agreement_violations").get<std::int64_t>();
  rep.oracle_checked = j.at("oracle_checked").get<std::int64_t>();
  rep.oracle_mismatches = j.at("oracle_mismatches").get<std::int64_t>();
  rep.first_counterexample = j.at("first_counterexample").get<std::string>();
  return rep;
}

std::string to_json_string(const CogirthDoc& doc) {
  json j;
  j["schema"] = 1;
  j["kind"] = "cogirth";
  j["q"] = doc.q;
  j["rank"] = doc.rank;
  j["n"] = doc.n;
  j["total_weight"] = doc.total_weight;
  j["cogirth"] = doc.cogirth_value;
  j["ratio"] = fraction_to_json(doc.ratio);
  j["witness"] = doc.witness;
  return j.dump(2);
}

CogirthDoc cogirth_doc_from_json(const std::string& text) {
  json j = json::parse(text);
  if (j.at("schema").get<int>() != 1) throw ParseError("unsupported report schema");
  CogirthDoc doc;
  doc.q = j.at("q").get<int>();
  doc.rank = j.at("rank").get<int>();
  doc.n = j.at("n").get<int>();
  doc.total_weight = j.at("total_weight").get<std::int64_t>();
  doc.cogirth_value = j.at("cogirth").get<std::int64_t>();
  doc.ratio = fraction_from_json(j.at("ratio"));
  doc.witness = j.at("witness").get<std::vector<int>>();
  return doc;
}

namespace {

std::string labels_str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

void render_condition(std::ostringstream& os, const char* name, const Condition& c) {
  os << "  " << name << ": " << (c.holds ? "holds" : "FAILS");
  if (!c.holds && !c.witness.empty()) os << "  [" << c.witness << "]";
  os << "\n";
}

}  // namespace

std::string to_text(const VerificationReport& rep) {
  std::ostringstream os;
  os << "check: " << kind_name(rep.kind) << "\n";
  os << "instance: " << rep.instance << "\n";
  os << "q=" << rep.q << " r=" << rep.r << " n=" << rep.n << "\n";
  os << "w(M) = " << rep.total_weight << ", g*(M) = " << rep.cogirth_value << ", w/g* = "
     << rep.ratio.num << "/" << rep.ratio.den << "\n";
  os << "witness cocircuit: " << labels_str(rep.witness_cocircuit) << "\n";
  os << "bound: " << rep.bound_lhs << " >= " << rep.bound_rhs << " "
     << (rep.bound_holds ? (rep.equality ? "(equality)" : "(strict)") : "VIOLATED") << "\n";
  if (rep.cond_i) render_condition(os, "(i) complement is a flat", *rep.cond_i);
  if (rep.cond_ii) render_condition(os, "(ii) weights constant on flats through complement", *rep.cond_ii);
  if (rep.cond_iii) render_condition(os, "(iii) affine restrictions heavy enough", *rep.cond_iii);
  if (rep.cond_iii_prime) render_condition(os, "(iii)' q^{r-1} w(e) <= w(M)", *rep.cond_iii_prime);
  if (rep.cond_constant) render_condition(os, "constant weights", *rep.cond_constant);
  if (rep.characterization_consistent)
    os << "  equality matches conditions: " << (*rep.characterization_consistent ? "yes" : "NO") << "\n";
  if (rep.iii_prime_consistent)
    os << "  equality implies (iii)': " << (*rep.iii_prime_consistent ? "yes" : "NO") << "\n";
  os << "  internal cross-checks: " << (rep.internal_ok ? "ok" : "FAILED") << "\n";
  for (const auto& [k, v] : rep.values) os << "  " << k << " = " << v << "\n";
  os << "result: " << (rep.ok() ? "ok" : "INCONSISTENT") << "\n";
  return os.str();
}

std::string to_text(const ScanReport& rep) {
  std::ostringstream os;
  os << "scan: q=" << rep.q << " r=" << rep.r << " mode=" << rep.mode;
  if (rep.mode == "random")
    os << " count=" << rep.requested << " seed=" << rep.seed << " weight_max=" << rep.weight_max;
  os << "\n";
  os << "instances checked: " << rep.instances << "\n";
  os << "bound violations: " << rep.bound_violations << "\n";
  os << "characterization violations: " << rep.consistency_violations << "\n";
  os << "(iii)' violations among equality cases: " << rep.iii_prime_violations << "\n";
  if (rep.sublemma_checked)
    os << "type-II weight identity: " << rep.sublemma_violations << " violations in "
       << rep.sublemma_checked << " applicable instances\n";
  if (rep.iii_agreement_checked)
    os << "(iii) formulation agreement: " << rep.iii_agreement_violations << " disagreements in "
       << rep.iii_agreement_checked << " instances\n";
  if (rep.oracle_checked)
    os << "cogirth oracle: " << rep.oracle_mismatches << " mismatches in " << rep.oracle_checked
       << " instances\n";
  if (!rep.first_counterexample.empty())
    os << "first counterexample:\n" << rep.first_counterexample << "\n";
  os << "result: " << (rep.ok() ? "ok" : "VIOLATIONS FOUND") << "\n";
  return os.str();
}

std::string to_text(const CogirthDoc& doc) {
  std::ostringstream os;
  os << "n = " << doc.n << "\n";
  os << "rank = " << doc.rank << "\n";
  os << "w(M) = " << doc.total_weight << "\n";
  os << "g*(M) = " << doc.cogirth_value << "\n";
  os << "w/g* = " << doc.ratio.num << "/" << doc.ratio.den << "\n";
  os << "witness cocircuit: " << labels_str(doc.witness) << "\n";
  return os.str();
}

}  // namespace cogirth
