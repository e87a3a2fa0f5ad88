// hopfcat: construct, verify, enumerate and compute with Hopf algebras,
// Hopf categories over finite groups, their gradings and fundamental groups.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hopfcat/json_io.hpp"

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitIo = 66;
constexpr int kExitPrecondition = 67;

using namespace hopfcat;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::ios_base::failure("cannot open " + out_path);
  out << text << "\n";
  if (!out) throw std::ios_base::failure("write failed: " + out_path);
}

FieldPtr make_field(const std::string& spec) { return Field::make(FieldSpec::parse(spec)); }

int cmd_table(const std::string& field_spec, int nmax) {
  auto F = make_field(field_spec);
  for (int n = 2; n <= nmax; ++n) {
    auto r = fundamental_group(F, n);
    std::cout << n << ":" << r.group.to_string() << "\n";
  }
  return 0;
}

int cmd_pi1(const std::string& field_spec, int n, const std::string& out) {
  auto F = make_field(field_spec);
  auto r = fundamental_group(F, n);
  write_output(out, pi1_to_json(r).dump(2));
  return 0;
}

int cmd_enumerate(const std::string& field_spec, int n, const std::string& out) {
  auto F = make_field(field_spec);
  auto gs = enumerate_hopf_gradings(F, n);
  write_output(out, enumeration_to_json(gs).dump(2));
  return 0;
}

int cmd_verify(const std::string& in) {
  json j = read_json_file(in);
  bool pass = true;
  if (j.contains("degrees") || j.contains("components")) {
    Grading X = grading_from_json(j);
    auto rep = verify_grading(X);
    std::cout << rep.summary();
    pass = rep.all_pass();
    if (pass) {
      auto hopf = is_hopf_grading_direct(X);
      std::cout << (hopf.comult_ok ? "pass  " : "FAIL  ") << "comultiplication-homogeneous\n"
                << (hopf.counit_ok ? "pass  " : "FAIL  ") << "counit-homogeneous\n"
                << (hopf.antipode_ok ? "pass  " : "FAIL  ") << "antipode-homogeneous\n"
                << (hopf.idempotents_ok ? "pass  " : "FAIL  ") << "idempotents-trivial-degree\n";
      bool connected = is_connected_grading(X);
      std::cout << (connected ? "pass  " : "FAIL  ") << "connected\n";
      pass = hopf.all() && connected;
    }
  } else if (j.contains("group") && j.contains("idempotents")) {
    HopfCategory C = category_from_json(j);
    auto rep = verify_hopf_category(C);
    std::cout << rep.summary();
    pass = rep.all_pass();
  } else {
    HopfAlgebra A = algebra_from_json(j);
    auto rep = verify_hopf(A);
    std::cout << rep.summary();
    pass = rep.all_pass();
  }
  return pass ? 0 : kExitVerifyFailed;
}

int cmd_smash(const std::string& in, const std::string& out) {
  json j = read_json_file(in);
  Grading X = grading_from_json(j);
  auto res = smash(X);
  auto rep = verify_hopf_category(res.category);
  if (!rep.all_pass()) {
    std::cerr << "smash product failed verification\n" << rep.summary();
    return kExitVerifyFailed;
  }
  write_output(out, category_to_json(res.category).dump(2));
  return 0;
}

int cmd_taft(const std::string& field_spec, int n, int bound, long tau_limit,
             const std::string& out) {
  FieldPtr F;
  if (field_spec.empty())
    F = make_field(n <= 2 ? std::string("Q") : "Q(z" + std::to_string(n) + ")");
  else
    F = make_field(field_spec);
  auto q = F->primitive_root_of_unity(static_cast<unsigned long>(n));
  if (!q) throw error("field has no primitive root of unity of order " + std::to_string(n));
  auto r = taft_truncated_pi1(F, n, *q, bound, tau_limit);
  write_output(out, taft_result_to_json(r).dump(2));
  return r.tau.ok ? 0 : kExitVerifyFailed;
}

int cmd_export(const std::string& what, const std::string& field_spec, int n,
               const std::string& out) {
  auto F = make_field(field_spec);
  json j;
  if (what == "dual-group") {
    j = algebra_to_json(dual_group_hopf(F, FiniteGroup::cyclic(n)));
  } else if (what == "group-algebra") {
    j = algebra_to_json(group_algebra(F, FiniteGroup::cyclic(n)));
  } else if (what == "trivial-category") {
    j = category_to_json(trivial_hopf_category(F, FiniteGroup::cyclic(n)));
  } else if (what == "taft") {
    auto q = F->primitive_root_of_unity(static_cast<unsigned long>(n));
    if (!q) throw error("field has no primitive root of unity of order " + std::to_string(n));
    j = category_to_json(taft_category(F, n, *q));
  } else {
    throw error("unknown export target: " + what);
  }
  write_output(out, j.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for Hopf categories over finite groups and their fundamental groups"};
  app.require_subcommand(1);

  std::string field = "Q";
  std::string in, out, what;
  int n = 2, nmax = 7, bound = 10;
  long tau_limit = 1000;

  auto* table = app.add_subcommand("table", "fundamental groups of k^{C_n} for n = 2..nmax");
  table->add_option("--field", field, "field spec: Q | Q(zN) | Fp")->capture_default_str();
  table->add_option("--nmax", nmax, "largest n")->capture_default_str();

  auto* pi1 = app.add_subcommand("pi1", "fundamental group of k^{C_n} as JSON");
  pi1->add_option("--field", field)->capture_default_str();
  pi1->add_option("--n", n, "cyclic group order")->required();
  pi1->add_option("--out", out, "output path (default stdout)");

  auto* enumerate = app.add_subcommand("enumerate", "connected Hopf gradings of k^{C_n} as JSON");
  enumerate->add_option("--field", field)->capture_default_str();
  enumerate->add_option("--n", n)->required();
  enumerate->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "verify a Hopf algebra, category or grading JSON");
  verify->add_option("--in", in, "input JSON path")->required();

  auto* smash = app.add_subcommand("smash", "smash product of a Hopf grading JSON");
  smash->add_option("--in", in, "grading JSON with embedded target")->required();
  smash->add_option("--out", out);

  auto* taft = app.add_subcommand("taft", "truncated Taft fundamental group and tau report");
  taft->add_option("--n", n)->required();
  taft->add_option("--bound", bound, "modulus bound M")->capture_default_str();
  taft->add_option("--field", field, "field spec (default Q(zn))")->default_val("");
  taft->add_option("--tau-limit", tau_limit)->capture_default_str();
  taft->add_option("--out", out);

  auto* exp = app.add_subcommand("export", "construct and export a standard object");
  exp->add_option("--what", what, "dual-group | group-algebra | trivial-category | taft")
      ->required();
  exp->add_option("--field", field)->capture_default_str();
  exp->add_option("--n", n)->required();
  exp->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage/diagnostic
    return kExitUsage;
  }

  try {
    if (table->parsed()) return cmd_table(field, nmax);
    if (pi1->parsed()) return cmd_pi1(field, n, out);
    if (enumerate->parsed()) return cmd_enumerate(field, n, out);
    if (verify->parsed()) return cmd_verify(in);
    if (smash->parsed()) return cmd_smash(in, out);
    if (taft->parsed()) return cmd_taft(field, n, bound, tau_limit, out);
    if (exp->parsed()) return cmd_export(what, field, n, out);
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
