// seth-lab: edit distance engines, the OV -> EDIT reduction and its verification harness.
//
// Exit codes: 0 success, 1 domain failure (verification failed, refused,
// band exceeded, generation budget exhausted), 2 usage or I/O error,
// 3 a reduction distance landed in the forbidden gap.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sethlab/sethlab.hpp"

namespace fs = std::filesystem;
using namespace sethlab;

namespace {

enum Exit : int { ok = 0, domain_failure = 1, usage_error = 2, theorem_violation = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PairInput {
  std::optional<std::string> a, b;
  std::string a_file, b_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a", a, "first sequence, inline");
    cmd->add_option("--b", b, "second sequence, inline");
    cmd->add_option("--a-file", a_file, "first sequence, raw file");
    cmd->add_option("--b-file", b_file, "second sequence, raw file");
  }

  std::pair<Sequence, Sequence> load() const {
    return {pick(a, a_file, "--a"), pick(b, b_file, "--b")};
  }

 private:
  static Sequence pick(const std::optional<std::string>& inline_value, const std::string& path, const char* flag) {
    if (inline_value && !path.empty()) throw UsageError(std::string("give either ") + flag + " or " + flag + "-file");
    if (inline_value) return *inline_value;
    if (path.empty()) throw UsageError(std::string("missing ") + flag + " or " + flag + "-file");
    try {
      return read_sequence_file(path);
    } catch (const IoError& e) {
      throw UsageError(e.what());
    }
  }
};

OvInstance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open instance " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_ov_instance(buf.str());
  } catch (const OvFormatError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(s)) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size() || v == 0)
      throw UsageError("malformed size list: '" + s + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty size list");
  if (!std::is_sorted(out.begin(), out.end())) throw UsageError("sizes must be ascending");
  return out;
}

const char* kind_word(EditKind k) {
  switch (k) {
    case EditKind::match: return "match";
    case EditKind::substitute: return "substitute";
    case EditKind::delete_x: return "delete";
    case EditKind::delete_y: return "delete-y";
    case EditKind::insert_x: return "insert";
  }
  return "?";
}

void print_trace(std::ostream& out, std::string_view x, std::string_view y, const EditOps& ops) {
  for (const auto& op : ops.ops) {
    out << kind_word(op.kind);
    switch (op.kind) {
      case EditKind::match:
      case EditKind::substitute: out << ' ' << op.i << ' ' << op.j << ' ' << x[op.i] << ' ' << y[op.j]; break;
      case EditKind::delete_x: out << ' ' << op.i << ' ' << x[op.i]; break;
      case EditKind::delete_y:
      case EditKind::insert_x: out << ' ' << op.j << ' ' << y[op.j]; break;
    }
    out << '\n';
  }
}

// ---- ed ------------------------------------------------------------------

struct EdArgs {
  PairInput input;
  std::string engine = "dp";
  std::optional<std::uint64_t> k;
  bool trace = false;
};

int cmd_ed(const EdArgs& args) {
  const auto [x, y] = args.input.load();
  const auto engine = parse_engine(args.engine);
  if (!engine) throw UsageError("unknown engine '" + args.engine + "'");
  if (*engine == Engine::banded) {
    const std::uint64_t k = args.k.value_or(std::max(x.size(), y.size()));
    const auto d = edit_distance_banded(x, y, k);
    if (!d) {
      std::cout << '>' << k << '\n';
      return domain_failure;
    }
    std::cout << *d << '\n';
  } else {
    std::cout << edit_distance(x, y, *engine) << '\n';
  }
  if (args.trace) print_trace(std::cout, x, y, edit_alignment(x, y));
  return ok;
}

// ---- pat -----------------------------------------------------------------

struct PatArgs {
  PairInput input;
  std::string engine = "dp";
};

int cmd_pat(const PatArgs& args) {
  const auto [p1, p2] = args.input.load();
  if (args.engine == "dp") std::cout << pat_distance(p1, p2) << '\n';
  else if (args.engine == "bitparallel") std::cout << pat_distance_bitparallel(p1, p2) << '\n';
  else throw UsageError("pat supports --engine dp or bitparallel");
  return ok;
}

// ---- gen-ov --------------------------------------------------------------

struct GenArgs {
  std::size_t na = 0, nb = 0, d = 0;
  bool planted = false;
  double density = default_no_pair_density;
  std::uint64_t seed = 0;
  std::string out;
};

std::string describe(const OvAnswer& ans) {
  if (!ans.found) return "NO-PAIR";
  return "ORTHOGONAL-PAIR a=" + std::to_string(ans.witness->first) + " b=" + std::to_string(ans.witness->second);
}

int cmd_gen_ov(const GenArgs& args) {
  OvInstance inst;
  try {
    inst = gen_ov(args.na, args.nb, args.d, args.planted, args.density, args.seed);
  } catch (const GenerationError& e) {
    std::cerr << "gen-ov: " << e.what() << '\n';
    return domain_failure;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write " + args.out);
  out << to_json(inst).dump() << '\n';
  std::cerr << "# brute force: " << describe(solve_ov_bruteforce(inst)) << '\n';
  return ok;
}

// ---- reduce --------------------------------------------------------------

struct ReduceArgs {
  std::string instance;
  std::string profile = "desk";
  std::string out_dir;
  bool force = false;
};

GadgetParams profile_params(const std::string& profile, std::size_t d) {
  if (profile == "paper") return params_paper(d);
  if (profile == "desk") {
    if (d < 1 || d > desk_max_dimension) throw UsageError("desk profile supports 1 <= d <= 8");
    return params_desk(d);
  }
  throw UsageError("unknown profile '" + profile + "'");
}

nlohmann::json params_json(const GadgetParams& p) {
  return {{"d", p.d}, {"l0", p.l0}, {"l1", p.l1}, {"l2", p.l2}, {"T", p.T}, {"l", p.l()}, {"profile", p.profile_name}};
}

void print_lengths(std::ostream& out, const GadgetParams& p, const ReductionLengths& len) {
  out << "profile=" << p.profile_name << " d=" << p.d << " l0=" << p.l0 << " l1=" << p.l1 << " l2=" << p.l2
      << " T=" << p.T << '\n'
      << "l=" << p.l() << " E_s=" << p.e_s() << " E_u=" << p.e_u() << '\n'
      << "p1_length=" << len.p1 << '\n'
      << "p2_length=" << len.p2 << '\n'
      << "p1_prime_length=" << len.p1_prime << '\n'
      << "p2_prime_length=" << len.p2_prime << '\n'
      << "X=" << len.x << '\n'
      << "Y=" << len.y << '\n';
}

int cmd_reduce(const ReduceArgs& args) {
  const OvInstance inst = load_instance(args.instance);
  const GadgetParams p = profile_params(args.profile, inst.d);
  const ReductionLengths len = predict_lengths(inst.a.size(), inst.b.size(), p);
  if (args.profile == "paper" && !args.force) {
    print_lengths(std::cout, p, len);
    std::cerr << "reduce: paper profile output is too large to write; rerun with --force to try anyway\n";
    return domain_failure;
  }
  ReductionOutput r;
  try {
    r = build_sequences(inst, p);
  } catch (const std::length_error& e) {
    print_lengths(std::cout, p, len);
    std::cerr << "reduce: " << e.what() << '\n';
    return domain_failure;
  }
  std::error_code ec;
  fs::create_directories(args.out_dir, ec);
  if (ec) throw UsageError("cannot create " + args.out_dir + ": " + ec.message());
  try {
    const fs::path dir(args.out_dir);
    write_sequence_file(dir / "p1.seq", r.p1);
    write_sequence_file(dir / "p1_prime.seq", r.p1_prime);
    write_sequence_file(dir / "p2_prime.seq", r.p2_prime);
    nlohmann::json meta{{"X", r.x},
                        {"Y", r.y},
                        {"E_s", p.e_s()},
                        {"E_u", p.e_u()},
                        {"d", p.d},
                        {"profile", p.profile_name},
                        {"params", params_json(p)},
                        {"n_a", r.normalized_instance.a.size()},
                        {"n_b", r.normalized_instance.b.size()},
                        {"swapped", r.swapped},
                        {"p1_length", r.p1.size()},
                        {"p1_prime_length", r.p1_prime.size()},
                        {"p2_prime_length", r.p2_prime.size()}};
    std::ofstream meta_out(dir / "meta.json", std::ios::trunc);
    if (!meta_out) throw IoError("cannot write meta.json");
    meta_out << meta.dump(2) << '\n';
  } catch (const IoError& e) {
    throw UsageError(e.what());
  }
  print_lengths(std::cout, p, len);
  return ok;
}

// ---- solve-ov ------------------------------------------------------------

struct SolveArgs {
  std::string instance;
  std::string reduced;
  std::string method = "edit";
  std::string profile = "desk";
  std::string engine = "bitparallel";
};

void print_decision(const char* name, const Decision& dec) {
  std::cout << (dec.orthogonal ? "ORTHOGONAL-PAIR" : "NO-PAIR") << '\n';
  std::cerr << name << "=" << dec.value << " threshold=" << dec.threshold << " gap=" << dec.gap << '\n';
}

int solve_from_reduced(const SolveArgs& args) {
  const fs::path dir(args.reduced);
  Sequence p1p, p2p;
  nlohmann::json meta;
  try {
    p1p = read_sequence_file(dir / "p1_prime.seq");
    p2p = read_sequence_file(dir / "p2_prime.seq");
    std::ifstream in(dir / "meta.json");
    if (!in) throw IoError("cannot open meta.json");
    meta = nlohmann::json::parse(in);
  } catch (const IoError& e) {
    throw UsageError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("meta.json: ") + e.what());
  }
  std::uint64_t y = 0, e_s = 0, e_u = 0;
  try {
    y = meta.at("Y").get<std::uint64_t>();
    e_s = meta.at("E_s").get<std::uint64_t>();
    e_u = meta.at("E_u").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("meta.json: ") + e.what());
  }
  const auto engine = parse_engine(args.engine);
  if (!engine || *engine == Engine::banded) throw UsageError("reduced mode supports --engine dp or bitparallel");
  print_decision("EDIT", classify("EDIT", edit_distance(p1p, p2p, *engine), y, e_u - e_s));
  return ok;
}

int cmd_solve_ov(const SolveArgs& args) {
  if (!args.reduced.empty()) return solve_from_reduced(args);
  if (args.instance.empty()) throw UsageError("solve-ov needs --instance or --reduced");
  const OvInstance inst = load_instance(args.instance);
  if (args.method == "brute") {
    const auto ans = solve_ov_bruteforce(inst);
    std::cout << (ans.found ? "ORTHOGONAL-PAIR" : "NO-PAIR") << '\n';
    if (ans.found) std::cout << "witness a=" << ans.witness->first << " b=" << ans.witness->second << '\n';
    return ok;
  }
  if (args.profile != "desk") throw UsageError("solve-ov runs the reduction with --profile desk only");
  const GadgetParams p = profile_params(args.profile, inst.d);
  if (args.method == "pat") {
    PatEngine engine = PatEngine::bitparallel;
    if (args.engine == "dp") engine = PatEngine::dp;
    else if (args.engine != "bitparallel") throw UsageError("pat method supports --engine dp or bitparallel");
    print_decision("PAT", decide_ov_via_pat(inst, p, engine));
    return ok;
  }
  if (args.method == "edit" || args.method == "reduction") {
    const auto engine = parse_engine(args.engine);
    if (!engine) throw UsageError("unknown engine '" + args.engine + "'");
    print_decision("EDIT", decide_ov_via_edit(inst, p, *engine));
    return ok;
  }
  throw UsageError("unknown method '" + args.method + "'");
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::size_t d = 0;
  std::string mode = "exhaustive";
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::string json;
  std::size_t instances = 20;
  std::size_t n_max = 3;
  std::string engine = "banded";
  std::optional<std::uint64_t> corrupt_l2;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.d < 1 || args.d > desk_max_dimension) throw UsageError("verify supports 1 <= d <= 8");
  VerifyOptions opt;
  if (args.mode == "exhaustive") {
    if (args.d > exhaustive_dimension_limit) throw UsageError("exhaustive mode is limited to d <= 4; use --mode sampled");
    opt.lemma_mode = LemmaMode::all_pairs();
  } else if (args.mode == "sampled") {
    opt.lemma_mode = LemmaMode::sampled(args.samples, args.seed);
  } else {
    throw UsageError("unknown mode '" + args.mode + "'");
  }
  if (args.engine == "banded") opt.engine = CheckEngine::banded_fallback;
  else if (args.engine == "dp") opt.engine = CheckEngine::dp;
  else if (args.engine == "bitparallel") opt.engine = CheckEngine::bitparallel;
  else throw UsageError("unknown engine '" + args.engine + "'");
  opt.fact_samples = args.samples;
  opt.seed = args.seed;
  opt.theorem_instances = args.instances;
  opt.theorem_n_max = args.n_max;

  GadgetParams p = params_desk(args.d);
  if (args.corrupt_l2) {
    p.l2 = *args.corrupt_l2;
    p.profile_name = "corrupted";
  }
  std::cout << "params: " << params_json(p).dump() << " E_s=" << p.e_s() << " E_u=" << p.e_u() << '\n';
  const Report report = verify_all(p, opt);
  report.write_text(std::cout);
  if (!args.json.empty()) {
    std::ofstream out(args.json, std::ios::trunc);
    if (!out) throw UsageError("cannot write " + args.json);
    out << report.to_json().dump(2) << '\n';
  }
  return report.ok() ? ok : domain_failure;
}

// ---- bench ---------------------------------------------------------------

struct BenchArgs {
  std::string engines = "dp,bitparallel";
  std::string sizes = "1000,2000,4000,8000,16000";
  std::size_t trials = 3;
  std::uint64_t seed = 1;
  std::string out;
  std::string fit_out;
  bool selftest = false;
};

int cmd_bench(const BenchArgs& args) {
  if (args.selftest) {
    const auto fit = fit_scaling(synthetic_records({1000, 2000, 4000, 8000, 16000}, 2.0));
    std::cout << to_json(fit).dump() << '\n';
    return std::abs(fit.exponent - 2.0) <= 1e-6 ? ok : domain_failure;
  }
  const auto sizes = parse_sizes(args.sizes);
  std::vector<Engine> engines;
  for (const auto& name : split_list(args.engines)) {
    const auto e = parse_engine(name);
    if (!e) throw UsageError("unknown engine '" + name + "'");
    engines.push_back(*e);
  }
  if (engines.empty()) throw UsageError("empty engine list");
  if (args.trials < 3) throw UsageError("--trials must be >= 3");

  std::vector<BenchRecord> all;
  auto fits = nlohmann::json::array();
  for (Engine e : engines) {
    auto records = run_scaling_bench(e, sizes, args.trials, args.seed);
    if (sizes.size() >= 4) fits.push_back(to_json(fit_scaling(records)));
    all.insert(all.end(), records.begin(), records.end());
  }
  if (args.out.empty()) {
    write_csv(std::cout, all);
  } else {
    std::ofstream out(args.out, std::ios::trunc);
    if (!out) throw UsageError("cannot write " + args.out);
    write_csv(out, all);
  }
  const std::string fit_path = !args.fit_out.empty() ? args.fit_out : (args.out.empty() ? "" : args.out + ".fit.json");
  if (!fit_path.empty()) {
    std::ofstream out(fit_path, std::ios::trunc);
    if (!out) throw UsageError("cannot write " + fit_path);
    out << fits.dump(2) << '\n';
  }
  std::cerr << fits.dump() << '\n';
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seth-lab: edit distance engines and the orthogonal vectors reduction"};
  app.require_subcommand(1);

  EdArgs ed;
  auto* ed_cmd = app.add_subcommand("ed", "edit distance between two sequences");
  ed.input.attach(ed_cmd);
  ed_cmd->add_option("--engine", ed.engine, "dp | banded | bitparallel");
  ed_cmd->add_option("--k", ed.k, "band limit for the banded engine");
  ed_cmd->add_flag("--trace", ed.trace, "print one optimal operation list");

  PatArgs pat;
  auto* pat_cmd = app.add_subcommand("pat", "pattern matching distance of --a inside --b");
  pat.input.attach(pat_cmd);
  pat_cmd->add_option("--engine", pat.engine, "dp | bitparallel");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-ov", "write a random orthogonal vectors instance");
  gen_cmd->add_option("--na", gen.na, "|A|")->required();
  gen_cmd->add_option("--nb", gen.nb, "|B|")->required();
  gen_cmd->add_option("--d", gen.d, "dimension")->required();
  gen_cmd->add_option("--planted", gen.planted, "plant an orthogonal pair (true/false)")->required();
  gen_cmd->add_option("--density", gen.density, "probability of a 1 bit");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "output JSON path")->required();

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "emit the EDIT instance for an OV instance");
  reduce_cmd->add_option("--instance", reduce.instance, "OV instance JSON")->required();
  reduce_cmd->add_option("--profile", reduce.profile, "paper | desk");
  reduce_cmd->add_option("--out-dir", reduce.out_dir, "output directory")->required();
  reduce_cmd->add_flag("--force", reduce.force, "attempt to materialise paper-profile output");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve-ov", "decide an OV instance");
  solve_cmd->add_option("--instance", solve.instance, "OV instance JSON");
  solve_cmd->add_option("--reduced", solve.reduced, "directory written by reduce");
  solve_cmd->add_option("--method", solve.method, "brute | pat | edit | reduction");
  solve_cmd->add_option("--profile", solve.profile, "desk");
  solve_cmd->add_option("--engine", solve.engine, "distance engine for pat/edit");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "run the verification harness on the desk profile");
  verify_cmd->add_option("--d", verify.d, "dimension")->required();
  verify_cmd->add_option("--mode", verify.mode, "exhaustive | sampled");
  verify_cmd->add_option("--samples", verify.samples, "random samples for sampled lemma checks and facts");
  verify_cmd->add_option("--seed", verify.seed, "RNG seed");
  verify_cmd->add_option("--json", verify.json, "also write the report as JSON");
  verify_cmd->add_option("--instances", verify.instances, "OV instances for the theorem checks");
  verify_cmd->add_option("--n-max", verify.n_max, "largest |A|, |B| in theorem instances");
  verify_cmd->add_option("--engine", verify.engine, "banded | dp | bitparallel");
  verify_cmd->add_option("--corrupt-l2", verify.corrupt_l2)->group("");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time edit distance engines and fit the scaling exponent");
  bench_cmd->add_option("--engines", bench.engines, "comma-separated engines");
  bench_cmd->add_option("--sizes", bench.sizes, "comma-separated ascending sizes");
  bench_cmd->add_option("--trials", bench.trials, "timed runs per size (>= 3)");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed");
  bench_cmd->add_option("--out", bench.out, "CSV path (stdout if omitted)");
  bench_cmd->add_option("--fit-out", bench.fit_out, "fit summary JSON path (default <out>.fit.json)");
  bench_cmd->add_flag("--selftest", bench.selftest, "fit injected quadratic data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage_error;
  }

  try {
    if (*ed_cmd) return cmd_ed(ed);
    if (*pat_cmd) return cmd_pat(pat);
    if (*gen_cmd) return cmd_gen_ov(gen);
    if (*reduce_cmd) return cmd_reduce(reduce);
    if (*solve_cmd) return cmd_solve_ov(solve);
    if (*verify_cmd) return cmd_verify(verify);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const TheoremViolation& e) {
    std::cerr << e.what() << '\n';
    return theorem_violation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}
