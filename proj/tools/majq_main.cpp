// Copyright 2026 The majq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// majq command-line front end. Every subcommand is a thin adapter over the
// C API in majq/majq.h; the only work done here is argument plumbing,
// JSON-or-file input resolution, and output formatting.
//
// Exit codes: 0 predicate true / success, 1 predicate false, 2 usage or
// domain error, 3 numerical failure.

#include <majq/majq.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

// Thrown by helpers once the process exit code is decided; unwinds out of
// the CLI11 callback to main.
struct CommandExit {
  int code;
};

int exit_for(majq_status status) {
  switch (status) {
    case MAJQ_OK:
      return 0;
    case MAJQ_ERR_NOT_MAJORIZED:
    case MAJQ_ERR_NOT_BISTOCHASTIC:
    case MAJQ_ERR_NOT_CP:
      return 1;  // predicate failed on valid input
    case MAJQ_ERR_NO_CONVERGENCE:
    case MAJQ_ERR_NO_PERFECT_MATCHING:
      return 3;  // numerical failure
    default:
      return 2;  // usage / domain error
  }
}

void check(majq_status status) {
  if (status == MAJQ_OK) return;
  const char* detail = majq_last_error();
  std::cerr << "error: "
            << (detail != nullptr && detail[0] != '\0' ? detail
                                                       : majq_status_name(status))
            << "\n";
  throw CommandExit{exit_for(status)};
}

[[noreturn]] void usage_fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  throw CommandExit{2};
}

struct CString {
  CString() = default;
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  ~CString() { majq_string_free(p); }
  char* p = nullptr;
};

struct Matrix {
  Matrix() = default;
  Matrix(const Matrix&) = delete;
  Matrix& operator=(const Matrix&) = delete;
  ~Matrix() { majq_matrix_free(p); }
  majq_matrix* p = nullptr;
};

struct Channel {
  Channel() = default;
  Channel(const Channel&) = delete;
  Channel& operator=(const Channel&) = delete;
  ~Channel() { majq_channel_free(p); }
  majq_channel* p = nullptr;
};

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Inputs are inline JSON when they look like JSON, "-" for stdin, and a
// file path otherwise.
std::string resolve_input(const std::string& arg) {
  if (arg == "-") return read_stream(std::cin);
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) {
    return arg;
  }
  std::ifstream file(arg);
  if (!file) usage_fail("cannot read file: " + arg);
  return read_stream(file);
}

// Channel-consuming subcommands fall back to stdin so that
// `majq make-channel ... | majq classify` composes.
std::string resolve_channel_input(const std::string& arg) {
  if (arg.empty()) return read_stream(std::cin);
  return resolve_input(arg);
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) usage_fail("input is not valid JSON");
  return doc;
}

// --tol beats MAJORIZE_TOL beats the library default (signalled by 0).
double resolve_tol(double flag_tol) {
  if (flag_tol > 0.0) return flag_tol;
  const char* env = std::getenv("MAJORIZE_TOL");
  if (env == nullptr || env[0] == '\0') return 0.0;
  char* end = nullptr;
  const double value = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(value > 0.0)) {
    usage_fail("MAJORIZE_TOL must be a positive number");
  }
  return value;
}

uint64_t pick_seed(const CLI::Option* seed_opt, uint64_t seed_flag) {
  if (seed_opt->count() > 0) return seed_flag;
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

std::string fmt_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Accepts both entry encodings: bare number (real) and [re, im] pair.
std::string fmt_entry(const json& e, bool with_imag) {
  double re = 0.0, im = 0.0;
  if (e.is_number()) {
    re = e.get<double>();
  } else {
    re = e[0].get<double>();
    im = e[1].get<double>();
  }
  if (!with_imag) return fmt_g(re);
  std::string out = fmt_g(re);
  out += (im < 0.0 ? "-" : "+");
  out += fmt_g(std::fabs(im));
  out += "i";
  return out;
}

bool has_imag_part(const json& rows) {
  for (const auto& row : rows) {
    for (const auto& e : row) {
      if (e.is_array() && e[1].get<double>() != 0.0) return true;
    }
  }
  return false;
}

void print_matrix(std::ostream& os, const json& rows) {
  const bool with_imag = has_imag_part(rows);
  std::vector<std::vector<std::string>> cells;
  std::vector<size_t> width;
  for (const auto& row : rows) {
    cells.emplace_back();
    for (size_t c = 0; c < row.size(); ++c) {
      cells.back().push_back(fmt_entry(row[c], with_imag));
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], cells.back().back().size());
    }
  }
  for (const auto& row : cells) {
    os << "[";
    for (size_t c = 0; c < row.size(); ++c) {
      os << " " << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    os << " ]\n";
  }
}

void print_report_human(const json& report) {
  std::cout << "trials    " << report["trials"].get<uint64_t>() << "\n"
            << "failures  " << report["failures"].get<uint64_t>() << "\n"
            << "seed      " << report["seed"].get<uint64_t>() << "\n"
            << "elapsed   " << fmt_g(report["elapsed_s"].get<double>())
            << " s\n";
  if (!report["counterexample"].is_null()) {
    const auto& ce = report["counterexample"];
    std::cout << "counterexample at trial " << ce["trial"].get<uint64_t>()
              << ": " << ce["diagnostics"].get<std::string>() << "\n";
    std::cout << "rho =\n";
    print_matrix(std::cout, ce["rho"]);
    std::cout << "sigma =\n";
    print_matrix(std::cout, ce["sigma"]);
  }
}

int report_command(const std::string& report_text, bool json_mode) {
  const json report = json::parse(report_text);
  if (json_mode) {
    std::cout << report_text << "\n";
  } else {
    print_report_human(report);
  }
  return report["failures"].get<uint64_t>() == 0 ? 0 : 1;
}

// Shared flags; each subcommand opts into the ones that make sense for it.
struct CommonOpts {
  bool json = false;
  double tol = 0.0;
  uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
};

int g_exit = 0;

void add_majorize(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto u_arg = std::make_shared<std::string>();
  auto v_arg = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "majorize", "Check u ≺ v for vectors or A ≺ B for Hermitian matrices");
  cmd->add_option("--u", *u_arg, "lower side (vector or matrix JSON, or file)")
      ->required();
  cmd->add_option("--v", *v_arg, "upper side (vector or matrix JSON, or file)")
      ->required();
  cmd->add_option("--tol", opts->tol, "comparison tolerance");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, u_arg, v_arg] {
    const std::string u_text = resolve_input(*u_arg);
    const std::string v_text = resolve_input(*v_arg);
    const json u_doc = parse_json(u_text);
    const double tol = resolve_tol(opts->tol);
    int result = 0;
    bool matrices = false;
    if (u_doc.is_array() && !u_doc.empty() && u_doc[0].is_array()) {
      matrices = true;
      Matrix a, b;
      check(majq_matrix_parse(u_text.c_str(), &a.p));
      check(majq_matrix_parse(v_text.c_str(), &b.p));
      check(majq_majorizes_op(a.p, b.p, tol, &result));
    } else {
      check(majq_majorizes_vec(u_text.c_str(), v_text.c_str(), tol, &result));
    }
    if (opts->json) {
      std::cout << json{{"majorizes", result == 1}}.dump() << "\n";
    } else {
      std::cout << (matrices ? "A ≺ B: " : "u ≺ v: ")
                << (result == 1 ? "true" : "false") << "\n";
    }
    g_exit = result == 1 ? 0 : 1;
  });
}

void add_witness(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto u_arg = std::make_shared<std::string>();
  auto v_arg = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "witness",
      "Produce the bistochastic witness for u ≺ v, or the mixed-unitary "
      "witness for A ≺ B");
  cmd->add_option("--u", *u_arg, "lower side (vector or matrix JSON, or file)")
      ->required();
  cmd->add_option("--v", *v_arg, "upper side (vector or matrix JSON, or file)")
      ->required();
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, u_arg, v_arg] {
    const std::string u_text = resolve_input(*u_arg);
    const std::string v_text = resolve_input(*v_arg);
    const json u_doc = parse_json(u_text);
    if (u_doc.is_array() && !u_doc.empty() && u_doc[0].is_array()) {
      Matrix a, b;
      check(majq_matrix_parse(u_text.c_str(), &a.p));
      check(majq_matrix_parse(v_text.c_str(), &b.p));
      CString out;
      check(majq_mixed_unitary_witness(a.p, b.p, &out.p));
      if (opts->json) {
        std::cout << out.p << "\n";
      } else {
        const json doc = json::parse(out.p);
        size_t index = 0;
        for (const auto& term : doc["terms"]) {
          std::cout << "term " << index++ << ": weight "
                    << fmt_g(term["weight"].get<double>()) << "\n";
          print_matrix(std::cout, term["unitary"]);
        }
      }
    } else {
      CString out;
      check(majq_hlp_witness(u_text.c_str(), v_text.c_str(), &out.p));
      if (opts->json) {
        std::cout << json{{"witness", json::parse(out.p)}}.dump() << "\n";
      } else {
        std::cout << "B =\n";
        print_matrix(std::cout, json::parse(out.p));
      }
    }
  });
}

void add_birkhoff(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "birkhoff", "Decompose a bistochastic matrix into permutation matrices");
  cmd->add_option("input", *input, "bistochastic matrix (JSON or file)")
      ->required();
  cmd->add_option("--tol", opts->tol, "support / validation tolerance");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    const std::string text = resolve_input(*input);
    CString out;
    check(majq_birkhoff(text.c_str(), resolve_tol(opts->tol), &out.p));
    if (opts->json) {
      std::cout << out.p << "\n";
    } else {
      const json doc = json::parse(out.p);
      for (const auto& term : doc["terms"]) {
        std::cout << fmt_g(term["weight"].get<double>()) << "  permutation (";
        bool first = true;
        for (const auto& image : term["permutation"]) {
          std::cout << (first ? "" : " ") << image.get<size_t>();
          first = false;
        }
        std::cout << ")\n";
      }
    }
  });
}

void add_choi(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd =
      app.add_subcommand("choi", "Compute the Choi matrix of a channel");
  cmd->add_option("input", *input, "channel document (JSON, file, or stdin)");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    const std::string text = resolve_channel_input(*input);
    Channel phi;
    check(majq_channel_parse(text.c_str(), &phi.p));
    CString out;
    check(majq_channel_choi(phi.p, &out.p));
    if (opts->json) {
      std::cout << out.p << "\n";
    } else {
      const json doc = json::parse(out.p);
      std::cout << "dim " << doc["dim"].get<size_t>() << "\n";
      print_matrix(std::cout, doc["choi"]);
    }
  });
}

void add_check_cp(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "check-cp",
      "Check complete positivity of a choi document or a channel");
  cmd->add_option("input", *input,
                  "choi or channel document (JSON, file, or stdin)");
  cmd->add_option("--tol", opts->tol, "eigenvalue tolerance");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    std::string text = resolve_channel_input(*input);
    const json doc = parse_json(text);
    if (doc.is_object() && doc.contains("kraus")) {
      Channel phi;
      check(majq_channel_parse(text.c_str(), &phi.p));
      CString choi_text;
      check(majq_channel_choi(phi.p, &choi_text.p));
      text = choi_text.p;
    }
    int result = 0;
    double min_eig = 0.0;
    check(majq_choi_is_cp(text.c_str(), resolve_tol(opts->tol), &result,
                          &min_eig));
    if (opts->json) {
      std::cout << json{{"cp", result == 1}, {"min_choi_eigenvalue", min_eig}}
                       .dump()
                << "\n";
    } else {
      std::cout << "CP: " << (result == 1 ? "true" : "false")
                << "  (min Choi eigenvalue = " << fmt_g(min_eig) << ")\n";
    }
    g_exit = result == 1 ? 0 : 1;
  });
}

void add_make_channel(CLI::App& app) {
  struct MakeOpts : CommonOpts {
    std::string kind;
    size_t dim = 2;
    double lambda = 0.0;
    size_t kraus = 2;
    std::string unitary;
    std::string omega;
    CLI::Option* lambda_opt = nullptr;
  };
  auto opts = std::make_shared<MakeOpts>();
  auto* cmd = app.add_subcommand(
      "make-channel",
      "Construct a channel and write its JSON document to stdout");
  cmd->add_option("--kind", opts->kind, "constant | dep-unitary | dep-transpose | random-unital")
      ->required();
  cmd->add_option("--dim", opts->dim, "Hilbert space dimension")
      ->required()
      ->check(CLI::PositiveNumber);
  opts->lambda_opt =
      cmd->add_option("--lambda", opts->lambda, "mixing parameter λ");
  cmd->add_option("--unitary", opts->unitary,
                  "unitary U (JSON or file; default Haar random from --seed)");
  cmd->add_option("--omega", opts->omega,
                  "target state for constant kind (default 𝟙/dim)");
  cmd->add_option("--kraus", opts->kraus,
                  "Kraus operator count for random-unital")
      ->check(CLI::PositiveNumber);
  opts->seed_opt = cmd->add_option("--seed", opts->seed, "RNG seed");
  cmd->add_flag("--json", opts->json,
                "no-op: the channel document is always JSON");
  cmd->callback([opts] {
    const uint64_t seed = pick_seed(opts->seed_opt, opts->seed);
    Channel phi;
    std::string notice;
    if (opts->kind == "constant") {
      Matrix omega;
      if (opts->omega.empty()) {
        json rows = json::array();
        for (size_t i = 0; i < opts->dim; ++i) {
          json row = json::array();
          for (size_t j = 0; j < opts->dim; ++j) {
            row.push_back(i == j ? 1.0 / static_cast<double>(opts->dim) : 0.0);
          }
          rows.push_back(row);
        }
        check(majq_matrix_parse(rows.dump().c_str(), &omega.p));
      } else {
        check(majq_matrix_parse(resolve_input(opts->omega).c_str(), &omega.p));
      }
      check(majq_make_constant(omega.p, &phi.p));
      notice = "constant, dim " + std::to_string(opts->dim);
    } else if (opts->kind == "dep-unitary" || opts->kind == "dep-transpose") {
      if (opts->lambda_opt->count() == 0) {
        usage_fail("--lambda is required for kind " + opts->kind);
      }
      Matrix u;
      if (opts->unitary.empty()) {
        check(majq_random_haar_unitary(opts->dim, seed, &u.p));
      } else {
        check(majq_matrix_parse(resolve_input(opts->unitary).c_str(), &u.p));
      }
      if (opts->kind == "dep-unitary") {
        check(majq_make_dep_unitary(opts->lambda, u.p, &phi.p));
      } else {
        check(majq_make_dep_transpose(opts->lambda, u.p, &phi.p));
      }
      notice = opts->kind + ", dim " + std::to_string(opts->dim) + ", lambda " +
               fmt_g(opts->lambda);
      if (opts->unitary.empty()) notice += ", seed " + std::to_string(seed);
    } else if (opts->kind == "random-unital") {
      check(majq_random_unital_channel(opts->dim, opts->kraus, seed, &phi.p));
      notice = "random-unital, dim " + std::to_string(opts->dim) + ", kraus " +
               std::to_string(opts->kraus) + ", seed " + std::to_string(seed);
    } else {
      usage_fail("unknown kind: " + opts->kind);
    }
    CString out;
    check(majq_channel_to_json(phi.p, &out.p));
    std::cout << out.p << "\n";
    std::cerr << notice << "\n";
  });
}

void add_classify(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "classify", "Classify a channel as constant / dep-unitary / "
                  "dep-transpose / other");
  cmd->add_option("input", *input, "channel document (JSON, file, or stdin)");
  cmd->add_option("--tol", opts->tol, "classification tolerance");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    const std::string text = resolve_channel_input(*input);
    Channel phi;
    check(majq_channel_parse(text.c_str(), &phi.p));
    CString out;
    check(majq_classify_channel(phi.p, resolve_tol(opts->tol), &out.p));
    const json doc = json::parse(out.p);
    const std::string tag = doc["tag"].get<std::string>();
    if (opts->json) {
      std::cout << out.p << "\n";
    } else {
      std::cout << "class  " << tag << "\n";
      if (tag == "dep-unitary" || tag == "dep-transpose") {
        std::cout << "lambda    " << fmt_g(doc["lambda"].get<double>()) << "\n"
                  << "residual  " << fmt_g(doc["residual"].get<double>())
                  << "\nU =\n";
        print_matrix(std::cout, doc["unitary"]);
      } else if (tag == "constant") {
        std::cout << "residual  " << fmt_g(doc["residual"].get<double>())
                  << "\nomega =\n";
        print_matrix(std::cout, doc["omega"]);
      } else {
        std::cout << "min Choi eigenvalue  "
                  << fmt_g(doc["min_choi_eigenvalue"].get<double>()) << "\n"
                  << "spectrum residual    "
                  << fmt_g(doc["spectrum_residual"].get<double>()) << "\n";
      }
      if (!doc["alternate"].is_null()) {
        std::cout << "alternate form: "
                  << doc["alternate"]["tag"].get<std::string>() << ", lambda "
                  << fmt_g(doc["alternate"]["lambda"].get<double>()) << "\n";
      }
    }
    g_exit = tag == "other" ? 1 : 0;
  });
}

void add_test_preserve(CLI::App& app) {
  struct TestOpts : CommonOpts {
    uint64_t trials = 1000;
  };
  auto opts = std::make_shared<TestOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "test-preserve",
      "Monte-Carlo test: does the channel preserve majorization?");
  cmd->add_option("input", *input, "channel document (JSON, file, or stdin)");
  cmd->add_option("--trials", opts->trials, "number of trials");
  opts->seed_opt = cmd->add_option("--seed", opts->seed, "RNG seed");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    const std::string text = resolve_channel_input(*input);
    Channel phi;
    check(majq_channel_parse(text.c_str(), &phi.p));
    CString out;
    check(majq_test_preservation(phi.p, opts->trials,
                                 pick_seed(opts->seed_opt, opts->seed),
                                 &out.p));
    g_exit = report_command(out.p, opts->json);
  });
}

void add_test_orbit(CLI::App& app) {
  struct TestOpts : CommonOpts {
    uint64_t trials = 1000;
    std::string rho0;
  };
  auto opts = std::make_shared<TestOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "test-orbit",
      "Monte-Carlo test: does the channel preserve the unitary orbit of ρ₀?");
  cmd->add_option("input", *input, "channel document (JSON, file, or stdin)");
  cmd->add_option("--rho0", opts->rho0,
                  "reference state (default diag(n,…,1) normalized)");
  cmd->add_option("--trials", opts->trials, "number of trials");
  opts->seed_opt = cmd->add_option("--seed", opts->seed, "RNG seed");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    const std::string text = resolve_channel_input(*input);
    Channel phi;
    check(majq_channel_parse(text.c_str(), &phi.p));
    Matrix rho0;
    if (opts->rho0.empty()) {
      size_t n = 0;
      check(majq_channel_dim(phi.p, &n));
      const double total = static_cast<double>(n * (n + 1)) / 2.0;
      json rows = json::array();
      for (size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (size_t j = 0; j < n; ++j) {
          row.push_back(i == j ? static_cast<double>(n - i) / total : 0.0);
        }
        rows.push_back(row);
      }
      check(majq_matrix_parse(rows.dump().c_str(), &rho0.p));
    } else {
      check(majq_matrix_parse(resolve_input(opts->rho0).c_str(), &rho0.p));
    }
    CString out;
    check(majq_test_orbit(phi.p, rho0.p, opts->trials,
                          pick_seed(opts->seed_opt, opts->seed), &out.p));
    g_exit = report_command(out.p, opts->json);
  });
}

void add_entropy(CLI::App& app) {
  auto opts = std::make_shared<CommonOpts>();
  auto input = std::make_shared<std::string>();
  auto* cmd = app.add_subcommand(
      "entropy", "von Neumann entropy of a density matrix, in bits");
  cmd->add_option("input", *input, "density matrix (JSON, file, or stdin)")
      ->required();
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts, input] {
    Matrix rho;
    check(majq_matrix_parse(resolve_input(*input).c_str(), &rho.p));
    double bits = 0.0;
    check(majq_von_neumann_entropy(rho.p, &bits));
    if (opts->json) {
      std::cout << json{{"entropy_bits", bits}}.dump() << "\n";
    } else {
      std::cout << "S = " << fmt_g(bits) << " bits\n";
    }
  });
}

void add_explore(CLI::App& app) {
  struct ExploreOpts : CommonOpts {
    size_t dim = 3;
    uint64_t channels = 30;
    uint64_t trials = 1000;
  };
  auto opts = std::make_shared<ExploreOpts>();
  auto* cmd = app.add_subcommand(
      "explore-conjecture",
      "Sample unital channels in dimension d, test orbit preservation, and "
      "classify the survivors");
  cmd->add_option("--dim", opts->dim, "dimension d ≥ 3");
  cmd->add_option("--channels", opts->channels, "number of channels to sample");
  cmd->add_option("--trials", opts->trials, "trials per channel");
  opts->seed_opt = cmd->add_option("--seed", opts->seed, "RNG seed");
  cmd->add_flag("--json", opts->json, "emit JSON on stdout");
  cmd->callback([opts] {
    CString out;
    check(majq_explore_conjecture(opts->dim, opts->channels, opts->trials,
                                  pick_seed(opts->seed_opt, opts->seed),
                                  &out.p));
    if (opts->json) {
      std::cout << out.p << "\n";
      return;
    }
    const json doc = json::parse(out.p);
    std::cout << "dim " << doc["dim"].get<size_t>() << ", "
              << doc["channel_samples"].get<uint64_t>() << " channels, "
              << doc["trials_per_channel"].get<uint64_t>()
              << " trials each, seed " << doc["seed"].get<uint64_t>()
              << ", elapsed " << fmt_g(doc["elapsed_s"].get<double>())
              << " s\n";
    std::printf("%4s  %-14s %-9s %-8s %-14s %-14s %s\n", "id", "construction",
                "preserved", "failures", "class", "lambda", "residual");
    for (const auto& row : doc["rows"]) {
      const std::string lambda =
          row["lambda"].is_null() ? "-" : fmt_g(row["lambda"].get<double>());
      const std::string residual =
          row["residual"].is_null() ? "-"
                                    : fmt_g(row["residual"].get<double>());
      std::printf("%4zu  %-14s %-9s %-8llu %-14s %-14s %s\n",
                  row["id"].get<size_t>(),
                  row["construction"].get<std::string>().c_str(),
                  row["preserved"].get<bool>() ? "yes" : "no",
                  static_cast<unsigned long long>(
                      row["failures"].get<uint64_t>()),
                  row["class"].get<std::string>().c_str(), lambda.c_str(),
                  residual.c_str());
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majorization and majorization-preserving quantum channels"};
  app.set_version_flag("--version", majq_version());
  app.require_subcommand(1);

  add_majorize(app);
  add_witness(app);
  add_birkhoff(app);
  add_choi(app);
  add_check_cp(app);
  add_make_channel(app);
  add_classify(app);
  add_test_preserve(app);
  add_test_orbit(app);
  add_entropy(app);
  add_explore(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CommandExit& e) {
    return e.code;
  }
  return g_exit;
}
