#pragma once

// Command-line front end. run() parses arguments, writes results to `out`
// and diagnostics to `err`, and returns the process exit status:
// 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "vlic/code.hpp"
#include "vlic/constructions.hpp"
#include "vlic/error.hpp"
#include "vlic/extension.hpp"
#include "vlic/io.hpp"
#include "vlic/problem.hpp"
#include "vlic/verifier.hpp"

#ifndef VLIC_DATA_DIR
#define VLIC_DATA_DIR "data"
#endif

namespace vlic::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr std::uint64_t default_seed = 0x5eed;

/// Errors that mean "the object does not decode" rather than "bad input".
inline int exit_code_for(Errc e) {
  switch (e) {
    case Errc::undecodable_receiver:
    case Errc::interference:
    case Errc::schedule_mismatch:
      return exit_failed;
    default:
      return exit_usage;
  }
}

/// Parses "a..b", "a,b,c" or "n" into a list of integers.
inline std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::logic_error&) {
      throw Error(Errc::parse, "bad number '" + s + "' in range '" + text + "'");
    }
  };
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(part));
      continue;
    }
    const int lo = number(part.substr(0, dots));
    const int hi = number(part.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw Error(Errc::parse, "empty range '" + text + "'");
  return out;
}

/// Smallest D for which a scalar code decodes the one-sided (K, D) problem.
inline int infer_delta(const LinearCode& scalar) {
  for (int d = 0; d < scalar.K(); ++d) {
    if (all_decodable(decodable(one_sided_problem(scalar.K(), d), scalar))) return d;
  }
  throw Error(Errc::undecodable_receiver, "code decodes no one-sided problem");
}

inline gf2::BitVector random_message(std::size_t width, std::mt19937_64& rng) {
  gf2::BitVector m(width);
  for (std::size_t i = 0; i < width; ++i) m.set(i, rng() & 1U);
  return m;
}

inline void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::parse, "cannot write " + path);
  f << text;
}

inline std::string format_code(const LinearCode& code, const std::string& format) {
  return format == "matrix" ? io::to_matrix_text(code) : io::dump(io::to_json(code));
}

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return io::read_file(path);
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  int cls = 0;
  int K = 0;
  int delta = 0;
  std::optional<int> lambda;
  std::string format = "json";
  std::string out;
};

inline int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const LinearCode code = construct({class_from_id(a.cls), a.K, a.delta, a.lambda});
  write_output(format_code(code, a.format), a.out, out);
  return exit_ok;
}

struct ExtendArgs {
  std::string code;
  int U = 0;
  std::optional<int> delta;
  int t = 1;
  bool mirror = false;
  std::string format = "json";
  std::string out;
  std::string schedule_out;
};

inline int cmd_extend(const ExtendArgs& a, std::ostream& out) {
  const LinearCode scalar = io::code_from_text(read_input(a.code), a.code, a.t);
  const int delta = a.delta ? *a.delta : infer_delta(scalar);
  DecodingSchedule s = build_schedule(scalar, a.U, one_sided_problem(scalar.K(), delta));
  if (a.mirror) s = mirror(s);
  write_output(format_code(s.code, a.format), a.out, out);
  if (!a.schedule_out.empty()) write_output(io::dump(io::to_json(s)), a.schedule_out, out);
  return exit_ok;
}

struct VerifyArgs {
  std::string problem;
  std::string code;
  std::optional<int> K;
  std::optional<int> U;
  std::optional<int> D;
  int t = 1;
  std::string out;
};

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const LinearCode code = io::code_from_text(read_input(a.code), a.code, a.t);
  ProblemSpec problem;
  if (!a.problem.empty()) {
    try {
      problem = io::problem_from_json(io::load_json(a.problem));
    } catch (const Error& e) {
      throw Error(Errc::parse, a.problem + ": " + e.what());
    }
  } else {
    problem = two_sided_problem(a.K.value_or(code.K()), a.U.value_or(0), a.D.value_or(0));
  }
  VerificationReport report = verify(problem, code);
  report.code_id = a.code;
  write_output(io::dump(io::to_json(report)), a.out, out);
  return report.decodable ? exit_ok : exit_failed;
}

struct DecodeArgs {
  std::string schedule;
  std::string code;
  int U = 0;
  std::optional<int> delta;
  int t = 1;
  std::uint64_t seed = default_seed;
  int trials = 100;
  std::string message;
  std::optional<int> receiver;
};

inline DecodingSchedule load_schedule(const DecodeArgs& a) {
  if (!a.schedule.empty()) return io::schedule_from_json(io::parse_json(read_input(a.schedule), a.schedule));
  if (a.code.empty()) throw Error(Errc::parse, "decode needs --schedule or --code");
  const LinearCode scalar = io::code_from_text(read_input(a.code), a.code, a.t);
  const int delta = a.delta ? *a.delta : infer_delta(scalar);
  return build_schedule(scalar, a.U, one_sided_problem(scalar.K(), delta));
}

/// Encodes messages, runs every receiver's schedule and compares with the
/// sent blocks. With --message, decodes that one message and prints blocks.
inline int cmd_decode(const DecodeArgs& a, std::ostream& out) {
  const DecodingSchedule s = load_schedule(a);
  std::vector<int> receivers;
  if (a.receiver) {
    if (*a.receiver < 1 || *a.receiver > s.K) throw Error(Errc::parse, "receiver out of range");
    receivers.push_back(*a.receiver);
  } else {
    for (int k = 1; k <= s.K; ++k) receivers.push_back(k);
  }

  io::Json result;
  if (!a.message.empty()) {
    if (a.message.size() != s.code.width() || a.message.find_first_not_of("01") != std::string::npos) {
      throw Error(Errc::parse, "--message must be " + std::to_string(s.code.width()) + " bits");
    }
    const auto msg = gf2::BitVector::from_string(a.message);
    const auto cw = encode(s.code, msg);
    result["codeword"] = cw.to_string();
    io::Json blocks = io::Json::array();
    bool ok = true;
    for (int k : receivers) {
      const auto got = decode_with_schedule(s, cw, side_information_for(s, msg, k), k);
      bool match = true;
      for (int i = 1; i <= s.block(); ++i) match = match && got.test(i - 1) == msg.test(s.code.column({k, i}));
      ok = ok && match;
      io::Json b;
      b["receiver"] = k;
      b["recovered"] = got.to_string();
      b["correct"] = match;
      blocks.push_back(std::move(b));
    }
    result["receivers"] = std::move(blocks);
    out << io::dump(result);
    return ok ? exit_ok : exit_failed;
  }

  std::mt19937_64 rng(a.seed);
  long long failures = 0;
  for (int trial = 0; trial < a.trials; ++trial) {
    const auto msg = random_message(s.code.width(), rng);
    const auto cw = encode(s.code, msg);
    for (int k : receivers) {
      const auto got = decode_with_schedule(s, cw, side_information_for(s, msg, k), k);
      for (int i = 1; i <= s.block(); ++i) {
        if (got.test(i - 1) != msg.test(s.code.column({k, i}))) {
          ++failures;
          break;
        }
      }
    }
  }
  result["K"] = s.K;
  result["U"] = s.U;
  result["length"] = s.code.length();
  result["seed"] = a.seed;
  result["trials"] = a.trials;
  result["receivers"] = receivers.size();
  result["failures"] = failures;
  out << io::dump(result);
  return failures == 0 ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string K = "20";
  std::string delta;  ///< empty: every delta in 1..K-1
  std::string U = "0";
  std::string cls = "first";     ///< first | all | list of class ids
  std::string lambda = "first";  ///< first | all | n
  bool oracle = false;
  std::string format = "text";
  int trials = 10;
  std::uint64_t seed = default_seed;
  unsigned threads = 0;
};

struct SweepInstance {
  int K = 0;
  int delta = 0;
  int U = 0;
  CodeClass cls{};
  std::optional<int> lambda;
};

struct SweepRow {
  SweepInstance inst;
  std::size_t length = 0;
  Rational rate;
  Rational capacity;
  bool optimal = false;
  bool verified = false;
  int failures = 0;
  std::string minrank;
  std::string error;
};

inline std::vector<SweepInstance> sweep_instances(const SweepArgs& a) {
  std::vector<int> class_filter;
  if (a.cls != "first" && a.cls != "all") class_filter = parse_range(a.cls);
  std::optional<int> fixed_lambda;
  if (a.lambda != "first" && a.lambda != "all") fixed_lambda = parse_range(a.lambda).at(0);
  const auto Us = parse_range(a.U);

  std::vector<SweepInstance> out;
  for (int K : parse_range(a.K)) {
    if (K < 2) continue;
    std::vector<int> deltas;
    if (a.delta.empty()) {
      for (int d = 1; d < K; ++d) deltas.push_back(d);
    } else {
      deltas = parse_range(a.delta);
    }
    for (int d : deltas) {
      for (const auto& m : applicable_classes(K, d)) {
        if (!m.constructible) continue;
        if (!class_filter.empty() &&
            std::find(class_filter.begin(), class_filter.end(), class_id(m.cls)) == class_filter.end()) {
          continue;
        }
        std::vector<std::optional<int>> lambdas;
        if (m.lambdas.empty()) {
          lambdas.push_back(std::nullopt);
        } else if (fixed_lambda) {
          if (std::find(m.lambdas.begin(), m.lambdas.end(), *fixed_lambda) == m.lambdas.end()) continue;
          lambdas.push_back(fixed_lambda);
        } else if (a.lambda == "first") {
          lambdas.push_back(m.lambdas.front());
        } else {
          lambdas.assign(m.lambdas.begin(), m.lambdas.end());
        }
        for (int U : Us) {
          if (U < 0 || U + (d + U) >= K) continue;
          for (auto l : lambdas) out.push_back({K, d, U, m.cls, l});
        }
        if (a.cls == "first") break;
      }
    }
  }
  // Order by instance key: K, delta, U, class, lambda.
  std::stable_sort(out.begin(), out.end(), [](const SweepInstance& x, const SweepInstance& y) {
    return std::tuple(x.K, x.delta, x.U, class_id(x.cls), x.lambda.value_or(0)) <
           std::tuple(y.K, y.delta, y.U, class_id(y.cls), y.lambda.value_or(0));
  });
  return out;
}

inline SweepRow run_instance(const SweepInstance& inst, const SweepArgs& a) {
  SweepRow row;
  row.inst = inst;
  try {
    const LinearCode scalar = construct({inst.cls, inst.K, inst.delta, inst.lambda});
    const DecodingSchedule s = build_schedule(scalar, inst.U, one_sided_problem(inst.K, inst.delta));
    const VerificationReport report = check_optimality({inst.K, inst.U, inst.delta + inst.U}, s.code);
    row.length = s.code.length();
    row.rate = report.rate;
    row.capacity = *report.capacity;
    row.optimal = report.optimal;
    row.verified = report.decodable;

    // Seed per instance so results do not depend on scheduling.
    std::seed_seq seq{a.seed, static_cast<std::uint64_t>(inst.K), static_cast<std::uint64_t>(inst.delta),
                      static_cast<std::uint64_t>(inst.U), static_cast<std::uint64_t>(class_id(inst.cls)),
                      static_cast<std::uint64_t>(inst.lambda.value_or(0))};
    std::mt19937_64 rng(seq);
    for (int trial = 0; trial < a.trials; ++trial) {
      const auto msg = random_message(s.code.width(), rng);
      const auto cw = encode(s.code, msg);
      for (int k = 1; k <= inst.K; ++k) {
        const auto got = decode_with_schedule(s, cw, side_information_for(s, msg, k), k);
        for (int i = 1; i <= s.block(); ++i) {
          if (got.test(i - 1) != msg.test(s.code.column({k, i}))) {
            ++row.failures;
            break;
          }
        }
      }
    }
    if (a.oracle) {
      if (inst.U != 0) {
        row.minrank = "-";
      } else {
        try {
          const auto mr = minrank_oracle(one_sided_problem(inst.K, inst.delta), inst.K, 1);
          row.minrank = mr ? std::to_string(*mr) : "none";
        } catch (const Error& e) {
          if (e.code() != Errc::instance_too_large) throw;
          row.minrank = "too-large";
        }
      }
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

inline bool row_ok(const SweepRow& r) { return r.error.empty() && r.verified && r.failures == 0; }

inline int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto instances = sweep_instances(a);
  std::vector<SweepRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  unsigned n = a.threads != 0 ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, instances.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) {
      pool.emplace_back([&] {
        for (std::size_t j = next++; j < instances.size(); j = next++) rows[j] = run_instance(instances[j], a);
      });
    }
  }

  const bool csv = a.format == "csv";
  const char* sep = csv ? "," : " ";
  std::vector<std::string> head = {"K", "delta", "U", "class", "lambda", "length", "rate", "capacity", "optimal", "verify"};
  if (a.oracle) head.push_back("minrank");
  std::vector<std::vector<std::string>> table;
  bool all_ok = true;
  for (const auto& r : rows) {
    all_ok = all_ok && row_ok(r);
    std::vector<std::string> cells = {
        std::to_string(r.inst.K),
        std::to_string(r.inst.delta),
        std::to_string(r.inst.U),
        std::to_string(class_id(r.inst.cls)),
        r.inst.lambda ? std::to_string(*r.inst.lambda) : "-",
        r.error.empty() ? std::to_string(r.length) : "-",
        r.error.empty() ? r.rate.to_string() : "-",
        r.error.empty() ? r.capacity.to_string() : "-",
        r.optimal ? "yes" : "no",
        r.error.empty() ? (r.verified && r.failures == 0 ? "ok" : "FAIL") : "ERROR",
    };
    if (a.oracle) cells.push_back(r.minrank.empty() ? "-" : r.minrank);
    table.push_back(std::move(cells));
  }

  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) {
    width[c] = head[c].size();
    for (const auto& row : table) width[c] = std::max(width[c], row[c].size());
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) line += sep;
      line += cells[c];
      if (!csv && c + 1 < cells.size()) line.append(width[c] - cells[c].size(), ' ');
    }
    out << line << '\n';
  };
  emit(head);
  for (const auto& row : table) emit(row);
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      out << "# K=" << r.inst.K << " delta=" << r.inst.delta << " U=" << r.inst.U << ": " << r.error << '\n';
    }
  }
  return all_ok ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------

struct GoldenArgs {
  std::string data = VLIC_DATA_DIR;
  std::string format = "text";
};

struct GoldenResult {
  io::ManifestEntry entry;
  GoldenDiff diff;
  Rational computed_capacity;
  bool capacity_matches = false;
  double seconds = 0;
};

/// Rebuilds every listed code from its class parameters and compares it with
/// the stored listing.
inline std::vector<GoldenResult> run_golden(const std::string& data_dir) {
  const auto manifest = io::manifest_from_json(io::load_json(data_dir + "/golden/manifest.json"));
  const auto errata = io::errata_from_json(io::load_json(data_dir + "/errata.json"));
  std::vector<GoldenResult> out;
  for (const auto& m : manifest) {
    const auto start = std::chrono::steady_clock::now();
    GoldenResult r;
    r.entry = m;
    const GoldenCode golden = io::golden_from_json(io::load_json(data_dir + "/golden/" + m.file), m.id);
    const LinearCode scalar = construct({class_from_id(m.cls), m.K, m.delta, m.lambda});
    const LinearCode generated = m.U == 0 ? scalar : substitute(scalar, m.U);
    const ProblemSpec problem = extended_problem(m.K, m.U, m.delta);
    r.diff = compare_golden(generated, golden, errata, &problem);
    r.computed_capacity = capacity(m.K, m.U, m.delta + m.U);
    r.capacity_matches = !m.printed_capacity || *m.printed_capacity == r.computed_capacity;
    if (!r.capacity_matches) {
      r.diff.notes.push_back("printed capacity " + m.printed_capacity->to_string() + ", computed " +
                             r.computed_capacity.to_string() + (m.capacity_note.empty() ? "" : " (" + m.capacity_note + ")"));
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline int cmd_golden(const GoldenArgs& a, std::ostream& out) {
  const auto results = run_golden(a.data);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.diff.accepted;
  if (a.format == "json") {
    io::Json arr = io::Json::array();
    for (const auto& r : results) {
      io::Json j = io::to_json(r.diff);
      j["capacity"] = r.computed_capacity.to_string();
      j["printed_capacity"] = r.entry.printed_capacity ? io::Json(r.entry.printed_capacity->to_string()) : io::Json(nullptr);
      arr.push_back(std::move(j));
    }
    out << io::dump(arr);
    return ok ? exit_ok : exit_failed;
  }
  for (const auto& r : results) {
    out << (r.diff.accepted ? "ok   " : "FAIL ") << r.entry.id << "  class " << r.entry.cls << " K=" << r.entry.K
        << " delta=" << r.entry.delta << " U=" << r.entry.U << "  "
        << (r.diff.identical ? "identical" : "errata applied") << "  capacity " << r.computed_capacity.to_string()
        << (r.capacity_matches ? "" : " (printed " + r.entry.printed_capacity->to_string() + ")") << '\n';
    for (const auto& n : r.diff.notes) out << "       " << n << '\n';
  }
  return ok ? exit_ok : exit_failed;
}

// ---------------------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal linear index codes for symmetric cyclic side information", "vlic"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "build the scalar code of a divisibility class");
  construct_cmd->add_option("--class", ca.cls, "class number (1-3, 5-10)")->required();
  construct_cmd->add_option("--K", ca.K, "number of messages")->required();
  construct_cmd->add_option("--delta", ca.delta, "antidotes per receiver")->required();
  construct_cmd->add_option("--lambda", ca.lambda, "lambda for classes 5-10");
  construct_cmd->add_option("--format", ca.format)->check(CLI::IsMember({"json", "matrix"}));
  construct_cmd->add_option("-o,--out", ca.out, "output file (default stdout)");

  ExtendArgs ea;
  auto* extend_cmd = app.add_subcommand("extend", "substitute blocks of U+1 into a scalar code");
  extend_cmd->add_option("--code", ea.code, "scalar code file, JSON or matrix ('-' for stdin)")->required();
  extend_cmd->add_option("--U", ea.U, "antidotes above each receiver in the target problem")->required();
  extend_cmd->add_option("--delta", ea.delta, "one-sided problem the code solves (default: inferred)");
  extend_cmd->add_flag("--mirror", ea.mirror, "relabel k -> -k (antidotes below become above)");
  extend_cmd->add_option("--format", ea.format)->check(CLI::IsMember({"json", "matrix"}));
  extend_cmd->add_option("-o,--out", ea.out, "vector code output (default stdout)");
  extend_cmd->add_option("--schedule-out", ea.schedule_out, "write the decoding schedule JSON here");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "check decodability and optimality");
  verify_cmd->add_option("--code", va.code, "code file, JSON or matrix")->required();
  auto* problem_opt = verify_cmd->add_option("--problem", va.problem, "problem JSON");
  verify_cmd->add_option("--K", va.K)->excludes(problem_opt);
  verify_cmd->add_option("--U", va.U, "symmetric problem instead of --problem")->excludes(problem_opt);
  verify_cmd->add_option("--D", va.D, "symmetric problem instead of --problem")->excludes(problem_opt);
  verify_cmd->add_option("--t", va.t, "components per message for matrix input");
  verify_cmd->add_option("-o,--out", va.out);

  DecodeArgs da;
  auto* decode_cmd = app.add_subcommand("decode", "run decoding schedules on encoded messages");
  decode_cmd->add_option("--schedule", da.schedule, "schedule JSON from extend --schedule-out");
  decode_cmd->add_option("--code", da.code, "scalar code; the schedule is built on the fly");
  decode_cmd->add_option("--U", da.U);
  decode_cmd->add_option("--delta", da.delta);
  decode_cmd->add_option("--seed", da.seed);
  decode_cmd->add_option("--trials", da.trials)->check(CLI::NonNegativeNumber);
  decode_cmd->add_option("--message", da.message, "one message as K*(U+1) bits");
  decode_cmd->add_option("--receiver", da.receiver);

  SweepArgs sa;
  auto* sweep_cmd = app.add_subcommand("sweep", "construct, extend and verify a family of instances");
  sweep_cmd->add_option("--K", sa.K, "e.g. 20, 2..40 or 12,20");
  sweep_cmd->add_option("--delta", sa.delta, "default: all");
  sweep_cmd->add_option("--U", sa.U);
  sweep_cmd->add_option("--class", sa.cls, "first, all, or class numbers");
  sweep_cmd->add_option("--lambda", sa.lambda, "first, all, or a value");
  sweep_cmd->add_flag("--oracle", sa.oracle, "add exhaustive minrank for scalar instances");
  sweep_cmd->add_option("--format", sa.format)->check(CLI::IsMember({"text", "csv"}));
  sweep_cmd->add_option("--trials", sa.trials)->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--seed", sa.seed);
  sweep_cmd->add_option("--threads", sa.threads);

  GoldenArgs ga;
  auto* golden_cmd = app.add_subcommand("golden", "compare generated codes with the stored listings");
  golden_cmd->add_option("--data", ga.data, "data directory");
  golden_cmd->add_option("--format", ga.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*construct_cmd) return cmd_construct(ca, out);
    if (*extend_cmd) return cmd_extend(ea, out);
    if (*verify_cmd) return cmd_verify(va, out);
    if (*decode_cmd) return cmd_decode(da, out);
    if (*sweep_cmd) return cmd_sweep(sa, out);
    if (*golden_cmd) return cmd_golden(ga, out);
  } catch (const Error& e) {
    err << "vlic: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "vlic: internal error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace vlic::cli
