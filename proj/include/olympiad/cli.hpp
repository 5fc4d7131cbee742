#pragma once

// Command-line driver. Exit codes: 0 success, 1 domain error or failed
// check, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "olympiad/algebra/certificate.hpp"
#include "olympiad/board_json.hpp"
#include "olympiad/construct.hpp"
#include "olympiad/interp.hpp"
#include "olympiad/search_json.hpp"
#include "olympiad/walk.hpp"

namespace olympiad::cli {

inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

inline void write_output(const nlohmann::json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump() << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << j.dump() << '\n';
}

inline interp::Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("point must be 'x,y', got '" + text + "'");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

inline walk::WalkGraph graph_from_json(const nlohmann::json& j) {
  using namespace json_util;
  expect_object(j, "graph");
  const std::string kind = string_field(j, "graph", "graph");
  if (kind == "complete") {
    only_keys(j, {"graph", "m"}, "graph");
    return walk::complete_graph(int_field(j, "m", "graph"));
  }
  if (kind == "adjacency") {
    only_keys(j, {"graph", "adjacency"}, "graph");
    const auto& lists = field(j, "adjacency", "graph");
    if (!lists.is_array()) throw Error(ErrorCode::Parse, "'adjacency' must be an array of arrays");
    std::vector<std::vector<int>> adj;
    for (const auto& row : lists) {
      if (!row.is_array()) throw Error(ErrorCode::Parse, "'adjacency' must be an array of arrays");
      auto& out = adj.emplace_back();
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw Error(ErrorCode::Parse, "adjacency entries must be integers");
        out.push_back(v.get<int>());
      }
    }
    return walk::WalkGraph::from_adjacency(adj);
  }
  throw Error(ErrorCode::Parse, "unknown graph kind '" + kind + "'");
}

inline nlohmann::json error_json(const Error& e) {
  nlohmann::json j{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* r = dynamic_cast<const ReplayError*>(&e)) j["index"] = r->index();
  if (const auto* d = dynamic_cast<const DivisibleBy3Error*>(&e))
    j["degenerate_pair"] = {d->pair().first, d->pair().second};
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, Streams io) {
  CLI::App app{"Solver, constructor and proof checker for the tromino stone game"};
  app.require_subcommand(1);

  int n = 0;
  std::string out_path, in_path;

  auto* construct_cmd = app.add_subcommand("construct", "Clearing sequence for n divisible by 3");
  construct_cmd->add_option("--n", n, "Board side")->required();
  construct_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Replay a move sequence; succeed iff it ends empty");
  verify_cmd->add_option("--seq", in_path, "Move sequence JSON (default stdin)");

  search::Limits limits;
  std::optional<std::size_t> max_states;
  std::size_t memory_mb = limits.memory_budget_bytes >> 20;
  auto* decide_cmd = app.add_subcommand("decide", "Decide clearability by exhaustive search");
  decide_cmd->add_option("--n", n, "Board side")->required();
  decide_cmd->add_option("--max-states", max_states, "State budget");
  decide_cmd->add_option("--max-depth", limits.max_depth, "Depth budget");
  decide_cmd->add_flag("--allow-large", limits.allow_large, "Permit n >= 5");
  decide_cmd->add_option("--memory-mb", memory_mb, "Memory budget in MiB");

  auto* certify_cmd = app.add_subcommand("certify", "Impossibility certificate for n not divisible by 3");
  certify_cmd->add_option("--n", n, "Board side")->required();
  certify_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* check_cmd = app.add_subcommand("check-cert", "Verify an impossibility certificate");
  check_cmd->add_option("--cert", in_path, "Certificate JSON (default stdin)");

  int complete_m = 0;
  unsigned steps = 0;
  std::size_t start = 0;
  auto* walk_cmd = app.add_subcommand("walk", "Exact return probability of a random walk");
  auto* complete_opt = walk_cmd->add_option("--complete", complete_m, "Walk on the complete graph K_M");
  auto* graph_opt = walk_cmd->add_option("--graph", in_path, "Graph JSON file");
  complete_opt->excludes(graph_opt);
  walk_cmd->add_option("--steps", steps, "Number of hops")->required();
  walk_cmd->add_option("--start", start, "Start vertex");

  std::string lead_p = "2", lead_q = "-2", p1 = "16,54", p2 = "20,53";
  auto* aime_cmd = app.add_subcommand("aime", "P(0) + Q(0) for opposite-leading quadratics through two points");
  aime_cmd->add_option("--lead-p", lead_p, "Leading coefficient of P");
  aime_cmd->add_option("--lead-q", lead_q, "Leading coefficient of Q");
  aime_cmd->add_option("--p1", p1, "First point x,y");
  aime_cmd->add_option("--p2", p2, "Second point x,y");

  std::vector<std::string> argv_store{"olympiad"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    io.out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (construct_cmd->parsed()) {
      detail::write_output(board::to_json(construct::clearing_sequence_div3(n)), out_path, io.out);
      return kOk;
    }
    if (verify_cmd->parsed()) {
      const auto seq = board::sequence_from_json(json_util::parse(detail::read_input(in_path, io.in)));
      const auto final_state = board::replay(seq);
      const bool ok = !seq.moves.empty() && board::is_empty(final_state);
      io.out << nlohmann::json{{"n", seq.n},
                               {"moves", seq.moves.size()},
                               {"stones", final_state.stone_count()},
                               {"cleared", ok}}
                    .dump()
             << '\n';
      return ok ? kOk : kDomainError;
    }
    if (decide_cmd->parsed()) {
      if (max_states)
        limits.max_states = *max_states;
      else if (limits.allow_large)
        limits.max_states = search::Limits::large().max_states;
      limits.memory_budget_bytes = memory_mb << 20;
      io.out << search::to_json(n, search::decide(n, limits)).dump() << '\n';
      return kOk;
    }
    if (certify_cmd->parsed()) {
      detail::write_output(algebra::to_json(algebra::certify_impossible(n)), out_path, io.out);
      return kOk;
    }
    if (check_cmd->parsed()) {
      bool valid = false;
      nlohmann::json report;
      try {
        const auto cert = algebra::certificate_from_json(json_util::parse(detail::read_input(in_path, io.in)));
        valid = algebra::verify_certificate(cert);
        report = {{"n", cert.n}, {"valid", valid}};
      } catch (const Error& e) {
        report = {{"valid", false}, {"error", e.what()}};
      }
      io.out << report.dump() << '\n';
      return valid ? kOk : kDomainError;
    }
    if (walk_cmd->parsed()) {
      if (complete_opt->count() == 0 && graph_opt->count() == 0) throw UsageError("walk needs --complete or --graph");
      const bool complete = complete_opt->count() != 0;
      const auto g = complete ? walk::complete_graph(complete_m)
                              : detail::graph_from_json(json_util::parse(detail::read_input(in_path, io.in)));
      const Rational p = walk::return_probability_matrix(g, start, steps);
      nlohmann::json j{{"vertices", g.vertex_count()}, {"steps", steps}, {"start", start}, {"probability", to_string(p)}};
      try {
        const auto paths = walk::enumerate_paths_oracle(g, start, steps);
        j["returning"] = paths.returning;
        j["total"] = paths.total;
        j["enumeration"] = to_string(paths.probability);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::EnumerationGuard) throw;
        j["enumeration"] = "skipped";
      }
      if (complete) j["recursion"] = to_string(walk::return_probability_recursion(complete_m, steps));
      io.out << j.dump() << '\n';
      return kOk;
    }
    if (aime_cmd->parsed()) {
      const auto check = interp::cross_check_detail(parse_rational(lead_p), parse_rational(lead_q),
                                                    detail::parse_point(p1), detail::parse_point(p2));
      const auto trick = interp::sum_line_trick(parse_rational(lead_p), parse_rational(lead_q),
                                                detail::parse_point(p1), detail::parse_point(p2));
      io.out << nlohmann::json{{"P0", to_string(check.p_at_0)},
                               {"Q0", to_string(check.q_at_0)},
                               {"sum", to_string(check.p_at_0 + check.q_at_0)},
                               {"trick", to_string(check.trick)},
                               {"line", trick.line.str()},
                               {"agrees", check.agrees}}
                    .dump()
             << '\n';
      return check.agrees ? kOk : kDomainError;
    }
  } catch (const UsageError& e) {
    io.err << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    io.err << detail::error_json(e).dump() << '\n';
    return kDomainError;
  }
  return kUsageError;
}

}  // namespace olympiad::cli
