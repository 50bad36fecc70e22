// jacobi: command-line front end.
//
// Exit codes: 0 all checks pass, 1 a check failed or results mismatch,
// 2 malformed input or invalid arguments.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jacobi/enumerator.hpp"
#include "jacobi/error.hpp"
#include "jacobi/finite_field.hpp"
#include "jacobi/io.hpp"
#include "jacobi/jacobi_table.hpp"
#include "jacobi/parallel.hpp"
#include "jacobi/reconstructor.hpp"
#include "jacobi/verifier.hpp"

namespace fs = std::filesystem;
using namespace jacobi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;

struct VerifyFlags {
  std::string c_mode = "auto";
  void add(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--c-mode", c_mode, "auto, exhaustive, convolution or sampled")
        ->capture_default_str();
    cmd->add_option("--samples", cfg.verify.samples, "Quadruples drawn in sampled mode")
        ->capture_default_str();
    cmd->add_option("--seed", cfg.verify.seed, "Seed for sampled mode")->capture_default_str();
    cmd->add_option("--tolerance", cfg.verify.tolerance, "Absolute tolerance for float tables")
        ->capture_default_str();
    cmd->add_option("--exhaustive-max-m", cfg.verify.exhaustive_max_m, "Largest m checked exhaustively in auto mode")->capture_default_str();
    cmd->add_option("--convolution-max-m", cfg.verify.convolution_max_m, "Largest m checked by convolution in auto mode")->capture_default_str();
  }
  void apply(RunConfig& cfg) const {
    cfg.verify.c_mode = parse_cmode(c_mode);
    cfg.validate();
  }
};

std::string status_word(const Verdict& v) {
  switch (v.status) {
    case Verdict::Status::Pass: return "pass";
    case Verdict::Status::Fail: return "FAIL";
    case Verdict::Status::Skipped: return "skipped";
  }
  return "?";
}

std::string describe(const GroupSpec& g, const Verdict& v) {
  std::string s = status_word(v);
  if (v.witness) {
    s += " at (";
    for (std::size_t k = 0; k < v.witness->at.size(); ++k) {
      if (k) s += ", ";
      s += element_to_json(g, v.witness->at[k]).dump();
    }
    s += "): " + v.witness->lhs + " != " + v.witness->rhs;
  }
  if (!v.note.empty()) s += " (" + v.note + ")";
  return s;
}

void print_verification(const GroupSpec& g, const VerificationReport& r) {
  std::cout << "group      " << g.to_string() << (r.approximate ? "  [approximate]" : "") << "\n";
  std::cout << "A          " << describe(g, r.a) << "\n";
  std::cout << "B (J*)     " << describe(g, r.b_star) << "\n";
  std::cout << "B (reform) " << describe(g, r.b_reform) << "\n";
  std::cout << "C          " << describe(g, r.c) << "  [" << to_string(r.c_mode.mode);
  if (r.c_mode.mode == CMode::Sampled) {
    std::cout << ", " << r.c_mode.samples << " samples, seed " << r.c_mode.seed
              << (r.c_mode.full_coverage ? ", full coverage" : "");
  }
  std::cout << "]\n";
  std::cout << (r.all_pass() ? "all axioms hold" : "axioms violated") << "\n";
}

void emit(const std::optional<std::string>& out, const Json& j) {
  if (out) write_text_file(*out, dump(j));
}

void require_table_size(const GroupSpec& g, const RunConfig& cfg) {
  if (g.order() > cfg.max_table_order) {
    throw DomainError("group order " + std::to_string(g.order()) + " exceeds the limit of " +
                      std::to_string(cfg.max_table_order));
  }
}

AnyTable load_table(const std::string& path, const RunConfig& cfg) {
  auto t = table_from_json(read_json_file(path));
  std::visit([&](const auto& tab) {
    if constexpr (std::is_same_v<std::decay_t<decltype(tab)>, JacobiTable>) {
      require_table_size(tab.group(), cfg);
    } else {
      require_table_size(tab.group, cfg);
    }
  }, t);
  return t;
}

const GroupSpec& group_of(const AnyTable& t) {
  if (auto exact = std::get_if<JacobiTable>(&t)) return exact->group();
  return std::get<ApproxTable>(t).group;
}

void print_reconstruction(const ReconstructionReport& r) {
  const auto& g = r.group;
  std::cout << "group      " << g.to_string() << (r.approximate ? "  [approximate]" : "") << "\n";
  if (r.verification) {
    std::cout << "axioms     " << (r.verification->all_pass() ? "pass" : "FAIL") << "\n";
  }
  std::cout << "|S|        " << r.support.size() << "\n";
  if (r.kappa) std::cout << "kappa      " << r.kappa->to_string() << (r.kappa_ok ? "" : "  (inconsistent)") << "\n";
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, FieldCase>) {
          std::cout << "case       field, c = " << element_to_json(g, c.c).dump() << "\n";
        } else if constexpr (std::is_same_v<T, BooleanCase>) {
          std::cout << "case       boolean semiring (trivial group, J = 1)\n";
        } else {
          std::cout << "case       inconsistent at " << c.stage << ": " << c.reason << "\n";
        }
      },
      r.outcome);
  if (r.field_checks) {
    const auto& fc = *r.field_checks;
    std::cout << "field      ";
    if (fc.degree) {
      std::cout << "GF(" << fc.characteristic << "^" << *fc.degree << ")";
    } else {
      std::cout << "not a field";
    }
    std::cout << (fc.all_pass() ? "" : "  (field laws FAIL)") << "\n";
  }
  std::cout << "roundtrip  " << (r.roundtrip_ok ? "pass" : "FAIL") << "\n";
}

int run_field(unsigned p, unsigned n, const std::string& out, bool no_tables, const RunConfig& cfg) {
  const FiniteField f = build_field(p, n, cfg.max_field_order);
  write_text_file(out, dump(field_to_json(f, !no_tables)));
  std::cout << "GF(" << f.order() << "): modulus " << field_to_json(f, false)["modulus"].dump()
            << ", generator " << field_to_json(f, false)["generator"].dump() << "\n";
  return kExitOk;
}

int run_jacobi(const std::string& field_path, const std::string& out, unsigned threads,
               const RunConfig& cfg) {
  const FiniteField f = field_from_json(read_json_file(field_path), cfg.max_field_order);
  const JacobiTable t = compute_jacobi(f, threads);
  write_text_file(out, dump(table_to_json(t)));
  std::cout << "Jacobi table of GF(" << f.order() << "): " << t.order() << " x " << t.order() << "\n";
  return kExitOk;
}

int run_verify(const std::string& path, const std::optional<std::string>& out, const RunConfig& cfg) {
  const AnyTable t = load_table(path, cfg);
  const VerificationReport r =
      std::visit([&](const auto& tab) { return verify_all(tab, cfg.verify); }, t);
  print_verification(group_of(t), r);
  emit(out, verification_to_json(group_of(t), r));
  return r.all_pass() ? kExitOk : kExitFail;
}

int run_reconstruct(const std::string& path, const std::optional<std::string>& out,
                    const ReconstructOptions& opts, const RunConfig& cfg) {
  const AnyTable t = load_table(path, cfg);
  const ReconstructionReport r =
      std::visit([&](const auto& tab) { return reconstruct(tab, opts); }, t);
  print_reconstruction(r);
  emit(out, reconstruction_to_json(r));
  return r.ok() ? kExitOk : kExitFail;
}

int run_roundtrip(unsigned p, unsigned n, const std::optional<std::string>& out, unsigned threads,
                  const RunConfig& cfg) {
  const FiniteField f = build_field(p, n, cfg.max_field_order);
  require_table_size(GroupSpec::cyclic(f.unit_order()), cfg);
  const JacobiTable t = compute_jacobi(f, threads);
  ReconstructOptions opts;
  opts.verify = cfg.verify;
  const ReconstructionReport r = reconstruct(t, opts);
  print_reconstruction(r);
  const bool match = r.addition && *r.addition == field_addition(f);
  std::cout << "GF(" << f.order() << ") addition " << (match ? "recovered exactly" : "MISMATCH") << "\n";
  if (out) {
    Json j = reconstruction_to_json(r);
    j["addition_matches_field"] = match;
    write_text_file(*out, dump(j));
  }
  return match && r.ok() ? kExitOk : kExitFail;
}

int run_enumerate(const std::string& group, bool list, const std::optional<std::string>& out_dir,
                  const std::optional<std::string>& out, unsigned threads, const RunConfig& cfg) {
  const GroupSpec g = parse_group(group);
  EnumerateOptions opts;
  opts.max_order = cfg.max_enumerate_order;
  opts.threads = threads;
  const EnumerationResult r = enumerate_jacobi(g, opts);
  std::cout << "group        " << g.to_string() << "\n";
  std::cout << "count        " << r.count << "\n";
  std::cout << "oracle count " << r.oracle_count << "\n";
  std::cout << "agreement    " << (r.agreement ? "yes" : "NO") << "\n";
  if (list) {
    for (const auto& t : r.tables) std::cout << table_to_json(t).dump() << "\n";
  }
  if (out_dir) {
    fs::create_directories(*out_dir);
    for (std::size_t k = 0; k < r.tables.size(); ++k) {
      write_text_file(fs::path(*out_dir) / ("table_" + std::to_string(k) + ".json"),
                      dump(table_to_json(r.tables[k])));
    }
  }
  emit(out, enumeration_to_json(r, list));
  return r.agreement ? kExitOk : kExitFail;
}

int run_twist(const std::string& path, long r, const std::string& out, bool galois,
              const RunConfig& cfg) {
  const AnyTable any = load_table(path, cfg);
  const auto* t = std::get_if<JacobiTable>(&any);
  if (!t) throw MalformedInput("twist needs an exact table");
  const JacobiTable pre = twist_pre(*t, r);
  const JacobiTable gal = twist_galois(*t, r);
  write_text_file(out, dump(table_to_json(galois ? gal : pre)));
  const bool agree = pre == gal;
  std::cout << "twist by r = " << r << ": argument twist and Galois twist "
            << (agree ? "agree" : "DIFFER") << "\n";
  return agree ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi-sum tables over finite fields: compute, verify, reconstruct"};
  app.require_subcommand(1);

  RunConfig cfg;
  unsigned threads_flag = 0;
  app.add_option("--threads", threads_flag, "Worker threads (default: JACOBI_THREADS or 1)");

  unsigned p = 0, n = 1;
  std::string out, table_path, field_path, group;
  std::optional<std::string> opt_out, out_dir;
  bool no_tables = false, list = false, galois = false;
  long r = 1;
  ReconstructOptions ropts;
  VerifyFlags vflags;

  auto* field = app.add_subcommand("field", "Write the description of GF(p^n)");
  field->add_option("--p", p, "Characteristic")->required();
  field->add_option("--n", n, "Degree")->capture_default_str();
  field->add_option("--out", out, "Output file")->required();
  field->add_flag("--no-tables", no_tables, "Omit addition and multiplication tables");

  auto* jac = app.add_subcommand("jacobi", "Compute the Jacobi-sum table of a field file");
  jac->add_option("--field", field_path, "Field file")->required();
  jac->add_option("--out", out, "Output table file")->required();

  auto* verify = app.add_subcommand("verify", "Check axioms A, B and C on a table");
  verify->add_option("--table", table_path, "Table file")->required();
  verify->add_option("--out", opt_out, "Report file");
  vflags.add(verify, cfg);

  auto* rec = app.add_subcommand("reconstruct", "Recover the field structure from a table");
  rec->add_option("--table", table_path, "Table file")->required();
  rec->add_option("--out", opt_out, "Report file");
  rec->add_flag("--force", ropts.force, "Continue even if an axiom fails");
  rec->add_flag("--strict", ropts.strict, "Cross-check i against every character");
  vflags.add(rec, cfg);

  auto* rt = app.add_subcommand("roundtrip", "field -> jacobi -> verify -> reconstruct -> compare");
  rt->add_option("--p", p, "Characteristic")->required();
  rt->add_option("--n", n, "Degree")->capture_default_str();
  rt->add_option("--out", opt_out, "Report file");
  vflags.add(rt, cfg);

  auto* en = app.add_subcommand("enumerate", "Enumerate all Jacobi functions on a small group");
  en->add_option("--group", group, "Cyclic factors, e.g. 2,2")->required();
  en->add_flag("--list", list, "Print every table found");
  en->add_option("--out-dir", out_dir, "Write each table to this directory");
  en->add_option("--out", opt_out, "Summary file");

  auto* tw = app.add_subcommand("twist", "Twist a table by r coprime to the group order");
  tw->add_option("--table", table_path, "Table file")->required();
  tw->add_option("--r", r, "Twist exponent")->required();
  tw->add_option("--out", out, "Output table file")->required();
  tw->add_flag("--galois", galois, "Write the Galois twist instead of the argument twist");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    const unsigned threads = resolve_threads(threads_flag);
    cfg.threads = threads;
    cfg.verify.threads = threads;
    if (*field) return run_field(p, n, out, no_tables, cfg);
    if (*jac) return run_jacobi(field_path, out, threads, cfg);
    vflags.apply(cfg);
    ropts.verify = cfg.verify;
    if (*verify) return run_verify(table_path, opt_out, cfg);
    if (*rec) return run_reconstruct(table_path, opt_out, ropts, cfg);
    if (*rt) return run_roundtrip(p, n, opt_out, threads, cfg);
    if (*en) return run_enumerate(group, list, out_dir, opt_out, threads, cfg);
    if (*tw) return run_twist(table_path, r, out, galois, cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
