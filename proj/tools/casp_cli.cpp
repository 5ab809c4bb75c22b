// Copyright 2026 The casp-schemas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through casp.h.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "casp/casp.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitAuditFailed = 2;

struct Owned {
  char* p = nullptr;
  ~Owned() { casp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

std::optional<std::string> read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitError;
}

int api_error(const char* what) { return error(std::string(what) + ": " + casp_last_error()); }

struct SolveArgs {
  std::string file;
  std::string schema = "clear";
  std::string blocking = "theory";
  bool minimize_core = false;
  std::optional<double> timeout_s;
  std::uint64_t seed = 0;
  bool all = false;
  std::string out;
};

int cmd_solve(const SolveArgs& a) {
  const auto text = read_file(a.file);
  if (!text) return error("cannot read " + a.file);
  casp_program* prog = nullptr;
  if (casp_program_parse(text->data(), text->size(), &prog) != CASP_OK) return api_error(a.file.c_str());
  std::unique_ptr<casp_program, void (*)(casp_program*)> pg(prog, casp_program_free);
  std::unique_ptr<casp_options, void (*)(casp_options*)> opt(casp_options_new(), casp_options_free);
  casp_options_set_schema(opt.get(), a.schema == "black" ? CASP_BLACK_BOX : a.schema == "grey" ? CASP_GREY_BOX : CASP_CLEAR_BOX);
  casp_options_set_blocking(opt.get(), a.blocking == "model" ? CASP_BLOCK_MODEL : CASP_BLOCK_THEORY);
  casp_options_set_minimize_core(opt.get(), a.minimize_core);
  casp_options_set_timeout_s(opt.get(), a.timeout_s.value_or(-1));
  casp_options_set_seed(opt.get(), a.seed);
  casp_options_set_enumerate_all(opt.get(), a.all);
  casp_result* res = nullptr;
  if (casp_solve(prog, opt.get(), &res) != CASP_OK) return api_error("solve");
  std::unique_ptr<casp_result, void (*)(casp_result*)> rg(res, casp_result_free);
  Owned txt;
  if (casp_result_to_text(res, &txt.p) != CASP_OK) return api_error("report");
  std::fputs(txt.p, stdout);
  if (!a.out.empty()) {
    Owned js;
    if (casp_result_to_json(res, &js.p) != CASP_OK) return api_error("solution");
    if (!write_out(a.out, js.str())) return error("cannot write " + a.out);
  }
  return static_cast<int>(casp_result_outcome(res));
}

int cmd_gen(const std::string& domain, int n, int t, std::uint64_t seed, const std::string& out) {
  Owned js;
  if (casp_generate(domain.c_str(), n, t, seed, &js.p) != CASP_OK) return api_error("gen");
  return write_out(out, js.str()) ? 0 : error("cannot write " + out);
}

int cmd_encode(const std::string& instance, const std::string& domain, const std::string& encoding,
               const std::string& out) {
  if (domain == "rf" && (encoding == "pure-csp" || encoding == "pure_csp")) {
    return error("rf has no pure-csp encoding");
  }
  if (instance.empty()) return error("encode needs an instance file");
  const auto text = read_file(instance);
  if (!text) return error("cannot read " + instance);
  Owned prog;
  if (casp_encode(text->c_str(), encoding.c_str(), &prog.p) != CASP_OK) return api_error("encode");
  return write_out(out, prog.str()) ? 0 : error("cannot write " + out);
}

int cmd_verify(const std::string& instance, const std::string& solution) {
  const auto inst = read_file(instance);
  if (!inst) return error("cannot read " + instance);
  const auto sol = read_file(solution);
  if (!sol) return error("cannot read " + solution);
  int passed = 0;
  Owned msg;
  if (casp_verify(inst->c_str(), sol->c_str(), &passed, &msg.p) != CASP_OK) {
    std::cout << "FAIL: " << casp_last_error() << "\n";
    return 1;
  }
  std::cout << (passed ? "PASS: " : "FAIL: ") << msg.str() << "\n";
  return passed ? 0 : 1;
}

int cmd_bench(const std::string& config, const std::string& out) {
  const auto text = read_file(config);
  if (!text) return error("cannot read " + config);
  Owned csv, totals;
  int ok = 0;
  if (casp_bench(text->c_str(), &csv.p, &totals.p, &ok) != CASP_OK) return api_error("bench");
  if (out.empty() || out == "-") {
    std::fputs(csv.p, stdout);
    std::fputs(totals.p, stderr);
  } else {
    if (!write_out(out, csv.str())) return error("cannot write " + out);
    std::fputs(totals.p, stdout);
  }
  return ok ? 0 : kExitAuditFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constraint answer set solving with black-, grey- and clear-box coupling"};
  app.require_subcommand(1);
  int code = 0;

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "Solve a program file; exit 10 sat, 20 unsat, 30 timeout, 1 error");
  solve->add_option("program", sa.file, "Program file ('-' for stdin)")->required();
  solve->add_option("--schema", sa.schema, "black, grey or clear")->check(CLI::IsMember({"black", "grey", "clear"}));
  solve->add_option("--blocking", sa.blocking, "model or theory")->check(CLI::IsMember({"model", "theory"}));
  solve->add_flag("--minimize-core", sa.minimize_core, "Minimize theory conflict cores");
  solve->add_option("--timeout-s", sa.timeout_s, "Wall-clock budget in seconds")->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", sa.seed, "Base solver seed");
  solve->add_flag("--all", sa.all, "Enumerate every answer set");
  solve->add_option("-o", sa.out, "Write the solution file here");
  solve->callback([&] { code = cmd_solve(sa); });

  std::string g_domain, g_out;
  int g_n = 4, g_t = 2;
  std::uint64_t g_seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a benchmark instance as JSON");
  gen->add_option("--domain", g_domain, "wseq, is or rf")->required();
  gen->add_option("--n", g_n, "Leaves (wseq), jobs (is) or segments (rf)");
  gen->add_option("--t", g_t, "Moves (rf)");
  gen->add_option("--seed", g_seed, "Generator seed");
  gen->add_option("-o", g_out, "Output file");
  gen->callback([&] { code = cmd_gen(g_domain, g_n, g_t, g_seed, g_out); });

  std::string e_inst, e_domain, e_enc, e_out;
  auto* enc = app.add_subcommand("encode", "Write the ground program of an instance");
  enc->add_option("instance", e_inst, "Instance JSON");
  enc->add_option("--domain", e_domain, "Expected domain of the instance");
  enc->add_option("--encoding", e_enc, "pure-asp, true-casp or pure-csp")->required();
  enc->add_option("-o", e_out, "Output file");
  enc->callback([&] { code = cmd_encode(e_inst, e_domain, e_enc, e_out); });

  std::string v_inst, v_sol;
  auto* ver = app.add_subcommand("verify", "Check a solution file against its instance; exit 0 pass, 1 fail");
  ver->add_option("instance", v_inst, "Instance JSON")->required();
  ver->add_option("solution", v_sol, "Solution JSON")->required();
  ver->callback([&] { code = cmd_verify(v_inst, v_sol); });

  std::string b_cfg, b_out;
  auto* bench = app.add_subcommand("bench", "Run an experiment matrix; exit 2 when an audit fails");
  bench->add_option("config", b_cfg, "Config JSON")->required();
  bench->add_option("-o", b_out, "CSV output file (default stdout)");
  bench->callback([&] { code = cmd_bench(b_cfg, b_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }
  return code;
}
