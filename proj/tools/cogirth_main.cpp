// Command line front end: geometry constructors, cogirth computation,
// bound/equality verification, the built-in worked example, and family
// scans. Structured output is a single JSON document on stdout; diagnostics
// go to stderr.
//
// Exit codes: 0 success, 2 usage or parse error, 3 enumeration cap or
// rank-zero input, 4 a verifier detected an inconsistency.
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cogirth/io.hpp"

using namespace cogirth;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInconsistent = 4;

int cmd_construct(const std::string& kind, int r, int k, int q, const std::string& out_path) {
  Gf f(q);
  PointSet pts{f, r, {}};
  if (kind == "pg") {
    pts = pg(r, f);
  } else if (kind == "ag") {
    pts = ag(r, f);
  } else if (kind == "boseburton") {
    pts = bose_burton(r, k, f);
  } else {
    throw std::invalid_argument("unknown geometry kind '" + kind + "'");
  }
  WeightedMatroid m = from_points(f, pts.points);
  write_matroid_file(out_path, m);
  std::cerr << "wrote " << kind << " r=" << r << " q=" << q << " (" << m.n()
            << " points) to " << out_path << "\n";
  return kExitOk;
}

int cmd_cogirth(const std::string& in_path, const std::string& format, int threads) {
  WeightedMatroid m = read_matroid_file(in_path);
  if (rank(m) < 1) {
    std::cerr << "error: matroid of rank zero, cogirth undefined\n";
    return kExitCap;
  }
  auto cg = weighted_cogirth(m, threads);
  CogirthDoc doc;
  doc.q = m.field.q();
  doc.rank = rank(m);
  doc.n = m.n();
  doc.total_weight = total_weight(m);
  doc.cogirth_value = cg.value;
  doc.ratio = Fraction::reduced(doc.total_weight, cg.value);
  doc.witness = cg.witness.support;
  std::cout << (format == "json" ? to_json_string(doc) : to_text(doc)) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& in_path, std::string which, const std::string& format,
               bool simplify_first, int threads) {
  WeightedMatroid m = read_matroid_file(in_path);
  if (simplify_first) m = simplify(m);
  if (which == "auto") {
    if (rank(m) == 2) {
      which = "rank2";
    } else if (is_simple(m) && m.n() == pg_size(rank(m), m.field.q())) {
      which = "pg";
    } else {
      which = "main";
    }
  }
  VerificationReport rep;
  if (which == "rank2") {
    rep = check_rank2(m);
  } else if (which == "pg") {
    rep = check_pg_proposition(m);
  } else if (which == "iiiprime") {
    rep = check_condition_iii_prime(m);
  } else if (which == "main") {
    MainCheckOptions opts;
    opts.threads = threads;
    rep = check_main_theorem(m, opts);
  } else {
    throw std::invalid_argument("unknown verifier '" + which + "'");
  }
  std::cout << (format == "json" ? to_json_string(rep) : to_text(rep)) << "\n";
  return rep.ok() ? kExitOk : kExitInconsistent;
}

int cmd_example(const std::string& phase, const std::string& format) {
  auto ex = worked_example(phase == "after" ? ExamplePhase::after : ExamplePhase::before);
  std::cout << (format == "json" ? to_json_string(ex.report) : to_text(ex.report)) << "\n";
  return ex.report.ok() ? kExitOk : kExitInconsistent;
}

int cmd_scan(const ScanSpec& spec, const std::string& format) {
  ScanReport rep = scan(spec);
  std::cout << (format == "json" ? to_json_string(rep) : to_text(rep)) << "\n";
  return rep.ok() ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted cogirth and extremal geometry toolkit for matroids over GF(q)"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "write a geometry as a matroid file");
  std::string kind, out_path;
  int c_r = 3, c_k = 1, c_q = 2;
  construct->add_option("--kind", kind, "pg | ag | boseburton")->required();
  construct->add_option("--r", c_r, "rank of the ambient geometry")->required();
  construct->add_option("--k", c_k, "rank of the deleted subgeometry (boseburton)");
  construct->add_option("--q", c_q, "field order")->required();
  construct->add_option("--out", out_path, "output path")->required();

  // cogirth
  auto* cog = app.add_subcommand("cogirth", "compute the weighted cogirth of a matroid file");
  std::string in_path, format = "text";
  int threads = 0;
  cog->add_option("--in", in_path, "matroid file")->required();
  cog->add_option("--format", format, "text | json");
  cog->add_option("--threads", threads, "worker threads (0 = auto)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the bound/equality verifier on a matroid file");
  std::string v_in, v_which = "auto", v_format = "text";
  bool v_simplify = false;
  int v_threads = 0;
  verify->add_option("--in", v_in, "matroid file")->required();
  verify->add_option("--which", v_which, "auto | main | pg | rank2 | iiiprime");
  verify->add_option("--format", v_format, "text | json");
  verify->add_flag("--simplify", v_simplify, "apply weighted simplification first");
  verify->add_option("--threads", v_threads, "worker threads (0 = auto)");

  // example
  auto* example = app.add_subcommand("example", "run the built-in worked instance");
  std::string e_phase = "before", e_format = "text";
  example->add_option("--phase", e_phase, "before | after")->check(CLI::IsMember({"before", "after"}));
  example->add_option("--format", e_format, "text | json");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "verify a whole family of instances");
  ScanSpec spec;
  std::string s_mode = "exhaustive", s_format = "text";
  scan_cmd->add_option("--q", spec.q, "field order")->required();
  scan_cmd->add_option("--r-max", spec.r, "rank of the ambient geometry")->required();
  scan_cmd->add_option("--mode", s_mode, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  scan_cmd->add_option("--count", spec.count, "random mode: number of instances");
  scan_cmd->add_option("--seed", spec.seed, "random mode: RNG seed");
  scan_cmd->add_option("--weight-max", spec.weight_max, "random mode: weights in 1..w");
  scan_cmd->add_option("--threads", spec.threads, "worker threads (0 = auto)");
  scan_cmd->add_flag("--check-sublemma", spec.check_sublemma,
                     "also check the type-II cocircuit weight identity");
  scan_cmd->add_option("--iii-restriction-cap", spec.iii_restriction_cap,
                       "cross-check (iii) against all AG-restrictions for n up to this cap");
  scan_cmd->add_option("--oracle-n-cap", spec.oracle_n_cap,
                       "cross-check the cogirth oracle for n up to this cap");
  scan_cmd->add_option("--format", s_format, "text | json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed()) return cmd_construct(kind, c_r, c_k, c_q, out_path);
    if (cog->parsed()) return cmd_cogirth(in_path, format, threads);
    if (verify->parsed()) return cmd_verify(v_in, v_which, v_format, v_simplify, v_threads);
    if (example->parsed()) return cmd_example(e_phase, e_format);
    if (scan_cmd->parsed()) {
      spec.mode = s_mode == "random" ? ScanSpec::Mode::random : ScanSpec::Mode::exhaustive;
      if (spec.count == 0 && spec.mode == ScanSpec::Mode::random) spec.count = 100;
      return cmd_scan(spec, s_format);
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
