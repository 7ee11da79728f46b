#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "crown/checks.hpp"
#include "crown/descent.hpp"
#include "crown/errors.hpp"
#include "crown/parse.hpp"
#include "crown/quiver.hpp"
#include "crown/report.hpp"
#include "crown/reps.hpp"

namespace {

constexpr const char* kVersion = "crown 0.1.0";

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitUsage = 3;

int status_exit(crown::CheckState s) {
  switch (s) {
    case crown::CheckState::Pass: return kExitPass;
    case crown::CheckState::Fail: return kExitFail;
    default: return kExitUndecided;
  }
}

int worst_exit(int a, int b) {
  auto sev = [](int c) { return c == kExitFail ? 2 : c == kExitUndecided ? 1 : 0; };
  return sev(a) >= sev(b) ? a : b;
}

long parse_long_strict(const std::string& s, const std::string& what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (...) {
    throw crown::PrecondError(what + " is not an integer: " + s);
  }
  if (pos != s.size())
    throw crown::PrecondError(what + " is not an integer: " + s);
  return v;
}

void emit_report(const crown::VerificationReport& r, const std::string& format,
                 std::ostream& out) {
  if (format == "json")
    out << r.to_json() << "\n";
  else
    out << r.to_text();
}

crown::VerificationReport undecided_report(const std::string& id,
                                           const std::string& why,
                                           long prec) {
  crown::VerificationReport r;
  r.check_id = id;
  r.params["prec"] = std::to_string(prec);
  r.record_undecided("computation", "resolution at working precision", why);
  return r;
}

struct VerifyOpts {
  std::vector<std::string> ids;
  bool all = false;
  std::string n, m, d, j, a;
  long prec = 24;
  long zeta_order = 0;
  std::string format = "text";
  long jobs = 1;
};

int run_verify(const VerifyOpts& o) {
  crown::ParamMap params;
  if (!o.n.empty()) params["n"] = o.n;
  if (!o.m.empty()) params["m"] = o.m;
  if (!o.d.empty()) params["d"] = o.d;
  if (!o.j.empty()) params["j"] = o.j;
  if (!o.a.empty()) params["a"] = o.a;

  std::vector<std::string> ids = o.ids;
  if (o.all) {
    if (!ids.empty() || !params.empty()) {
      std::cerr << "error: --all runs every check on its defaults and takes "
                   "no check ids or object parameters\n";
      return kExitUsage;
    }
    for (const crown::CheckInfo& info : crown::check_registry())
      ids.push_back(info.id);
  }
  if (ids.empty()) {
    std::cerr << "error: no check id given (or use --all); available:\n";
    for (const crown::CheckInfo& info : crown::check_registry())
      std::cerr << "  " << info.id << ": " << info.summary << "\n";
    return kExitUsage;
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const std::string& id : ids)
    if (!crown::has_check(id)) {
      std::cerr << "error: unknown check id: " << id << "\n";
      std::cerr << "available:";
      for (const crown::CheckInfo& info : crown::check_registry())
        std::cerr << " " << info.id;
      std::cerr << "\n";
      return kExitUsage;
    }

  if (o.zeta_order > 0) {
    for (const char* key : {"n", "m", "d"}) {
      auto it = params.find(key);
      if (it == params.end()) continue;
      long v = parse_long_strict(it->second, std::string("parameter ") + key);
      if (v > 0 && o.zeta_order % v != 0)
        throw crown::PrecondError("zeta order " + std::to_string(o.zeta_order) +
                                  " is not divisible by " + key + "=" +
                                  std::to_string(v));
    }
    if (params.count("a")) {
      long ram = crown::parse_element(params.at("a")).ram();
      if (o.zeta_order % ram != 0)
        throw crown::PrecondError("zeta order " + std::to_string(o.zeta_order) +
                                  " is not divisible by the ramification " +
                                  std::to_string(ram) + " of a");
    }
  }

  struct Slot {
    std::optional<crown::VerificationReport> report;
    std::string error;
    bool enlarge = false;
  };
  std::vector<Slot> slots(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= ids.size()) return;
      try {
        slots[k].report = crown::run_check(ids[k], params, o.prec, o.zeta_order);
      } catch (const crown::PrecisionExhausted& e) {
        slots[k].report = undecided_report(ids[k], e.what(), o.prec);
      } catch (const crown::EnlargeCyclotomic& e) {
        slots[k].error = e.what();
        slots[k].enlarge = true;
      } catch (const std::exception& e) {
        slots[k].error = e.what();
      }
    }
  };
  long nthreads = std::min<long>(o.jobs, static_cast<long>(ids.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (long t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  for (size_t k = 0; k < ids.size(); ++k)
    if (!slots[k].report) {
      std::cerr << "error: " << ids[k] << ": " << slots[k].error << "\n";
      if (slots[k].enlarge)
        std::cerr << "hint: raise --zeta-order to a common multiple of the "
                     "ramification indices, or omit it\n";
      return kExitUsage;
    }

  std::cerr << "# " << kVersion << " | checks=" << ids.size()
            << " | prec=" << o.prec << " | zeta-order="
            << (o.zeta_order > 0 ? std::to_string(o.zeta_order) : "auto")
            << " | format=" << o.format << " | jobs=" << o.jobs << "\n";

  int code = kExitPass;
  if (o.format == "json" && ids.size() > 1) std::cout << "[\n";
  for (size_t k = 0; k < ids.size(); ++k) {
    const crown::VerificationReport& r = *slots[k].report;
    if (o.format == "json") {
      std::cout << r.to_json();
      std::cout << (k + 1 < ids.size() ? ",\n" : "\n");
    } else {
      if (k) std::cout << "\n";
      std::cout << r.to_text();
    }
    code = worst_exit(code, status_exit(r.status()));
  }
  if (o.format == "json" && ids.size() > 1) std::cout << "]\n";
  return code;
}

struct EnumerateOpts {
  std::string kind;
  long n = 0;
};

int run_enumerate(const EnumerateOpts& o) {
  crown::CrownQuiver q(o.n);
  if (o.kind == "strings") {
    for (long i = 1; i <= o.n; ++i)
      for (long j = 1; j <= o.n; ++j) {
        crown::StringWord s = crown::string_word(q, crown::Vertex{i, false}, j);
        std::cout << "s(" << i << "," << j
                  << "): " << crown::word_name(s.letters) << "\n";
      }
    for (long i = 1; i <= o.n; ++i)
      for (long j = 1; j <= o.n; ++j) {
        crown::StringWord s = crown::string_word(q, crown::Vertex{i, true}, j);
        std::cout << "s(" << i << "'," << j
                  << "): " << crown::word_name(s.letters) << "\n";
      }
    return kExitPass;
  }
  if (o.kind == "band") {
    std::cout << crown::word_name(crown::the_band(q).letters) << "\n";
    return kExitPass;
  }
  crown::DimVector delta = crown::minimal_imaginary_root(q);
  std::cout << "delta = (";
  for (long i = 0; i < o.n; ++i) std::cout << (i ? "," : "") << delta.u[i];
  for (long i = 0; i < o.n; ++i) std::cout << "," << delta.w[i];
  std::cout << ")\n";
  std::cout << "defect(delta) = " << crown::defect(q, delta) << "\n";
  std::cout << "cartan:\n";
  for (const auto& row : q.cartan_matrix()) {
    for (size_t c = 0; c < row.size(); ++c)
      std::cout << (c ? ", " : "") << row[c];
    std::cout << "\n";
  }
  return kExitPass;
}

struct CertifyOpts {
  std::string file;
  long m = 0;
  long prec = 24;
  std::string format = "text";
};

bool is_identity(const crown::MatK& m) {
  return m.rows == m.cols && m == crown::MatK::identity(m.rows, m.ram);
}

bool is_nilpotent_shift(const crown::MatK& m) {
  if (m.rows != m.cols) return false;
  crown::MatK want = crown::MatK::zero(m.rows, m.cols, m.ram);
  for (long r = 1; r < m.rows; ++r)
    want.set(r, r - 1, crown::Puiseux::integer(1, m.ram));
  return m == want;
}

// Superdiagonal ones with a single nonzero corner entry in the last row.
std::optional<crown::Puiseux> corner_of(const crown::MatK& m) {
  if (m.rows != m.cols || m.rows < 1) return std::nullopt;
  long sz = m.rows;
  for (long r = 0; r < sz; ++r)
    for (long c = 0; c < sz; ++c) {
      const crown::Puiseux& e = m.at(r, c);
      bool superdiag = sz > 1 && c == r + 1;
      bool corner = r == sz - 1 && c == 0;
      if (superdiag) {
        if (!(e == crown::Puiseux::integer(1, e.ram()))) return std::nullopt;
      } else if (!corner && !e.is_zero_exact()) {
        return std::nullopt;
      }
    }
  crown::Puiseux x = m.at(sz - 1, 0);
  if (!x.is_exact() || !x.has_known_term()) return std::nullopt;
  return x;
}

int run_certify(const CertifyOpts& o) {
  std::ifstream in(o.file);
  if (!in) {
    std::cerr << "error: cannot read " << o.file << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  crown::LambdaRep l = crown::lambda_from_text(buf.str());

  long d = std::lcm(l.n, o.m);
  crown::Representation bc = crown::base_change(l, d);

  crown::VerificationReport r;
  r.check_id = "certify";
  r.params["file"] = o.file;
  r.params["m"] = std::to_string(o.m);
  r.params["prec"] = std::to_string(o.prec);

  std::optional<crown::Representation> summand;
  std::string form = "unrecognized";
  if (is_identity(l.a) && is_nilpotent_shift(l.b)) {
    form = "(id, nilpotent)";
    summand = crown::rep_embed(crown::rep_family_M(l.m, l.n), d);
  } else if (is_nilpotent_shift(l.a) && is_identity(l.b)) {
    form = "(nilpotent, id)";
    summand = crown::rep_embed(crown::rep_family_N(l.m, l.n), d);
  } else if (is_identity(l.b)) {
    if (auto x0 = corner_of(l.a)) {
      long ram = x0->ram() * l.m;
      if (d % ram == 0) {
        auto [root, rem] =
            crown::nth_root(x0->embed_to(ram), l.m, std::max(o.prec, 24L));
        if (rem == 0) {
          form = "corner";
          crown::Puiseux a = root.pow(l.n, std::max(o.prec, 24L));
          summand = crown::rep_M_a(a.embed_to(d), l.n, d);
        }
      }
    }
  }

  r.record_eq("matrix pair", form, form);
  if (summand) {
    crown::VerificationReport cert =
        crown::certify_regular_simple(*summand, o.m, o.prec);
    for (const crown::CheckDetail& det : cert.details)
      r.details.push_back({"summand: " + det.item, det.expected, det.got,
                           det.precision, det.state});
    crown::Tri orbit = crown::is_isomorphic(
        bc, crown::orbit_sum(*summand, o.m), o.prec);
    if (orbit == crown::Tri::undecided)
      r.record_undecided("base change isomorphic to the twist orbit", "yes",
                         "undecided");
    else
      r.record_ok("base change isomorphic to the twist orbit",
                  orbit == crown::Tri::yes, "yes",
                  orbit == crown::Tri::yes ? "yes" : "no");
  } else {
    crown::VerificationReport cert =
        crown::certify_regular_simple(bc, o.m, o.prec);
    for (const crown::CheckDetail& det : cert.details)
      r.details.push_back({"induced module: " + det.item, det.expected,
                           det.got, det.precision, det.state});
  }
  r.record_eq("defect of the induced module", "0",
              std::to_string(crown::defect(crown::CrownQuiver(l.n),
                                           bc.dim_vector())));

  std::cerr << "# " << kVersion << " | certify | m=" << o.m
            << " | prec=" << o.prec << " | format=" << o.format << "\n";
  emit_report(r, o.format, std::cout);
  return status_exit(r.status());
}

long default_prec() {
  const char* env = std::getenv("CROWN_PREC");
  if (!env || !*env) return 24;
  return parse_long_strict(env, "CROWN_PREC");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and machine verification for crown-quiver "
               "species over Laurent and Puiseux series fields"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  VerifyOpts vo;
  CLI::App* verify = app.add_subcommand(
      "verify", "run named verification checks and report pass/fail");
  verify->add_option("checks", vo.ids, "check ids (see `verify` with no ids)");
  verify->add_flag("--all", vo.all, "run every registered check on defaults");
  verify->add_option("--n", vo.n, "crown size n");
  verify->add_option("--m", vo.m, "ramification / period parameter m");
  verify->add_option("--d", vo.d, "extension degree d");
  verify->add_option("--j", vo.j, "family index j");
  verify->add_option("--a", vo.a, "series element, e.g. \"e^(1/2)+2*e^(1/1)\"");
  verify->add_option("--prec", vo.prec, "series working precision");
  verify->add_option("--zeta-order", vo.zeta_order,
                     "pin the cyclotomic order (0 = automatic)");
  verify->add_option("--format", vo.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", vo.jobs, "run checks in parallel")
      ->check(CLI::Range(1L, 64L));

  EnumerateOpts eo;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list strings, the band, or root data of a crown");
  enumerate->add_option("kind", eo.kind, "what to list")
      ->required()
      ->check(CLI::IsMember({"strings", "band", "roots"}));
  enumerate->add_option("--n", eo.n, "crown size n")
      ->required()
      ->check(CLI::Range(1L, 64L));

  CertifyOpts co;
  CLI::App* certify = app.add_subcommand(
      "certify", "certify a lambda-rep file as regular simple");
  certify->add_option("file", co.file, "lambda-rep text file")->required();
  certify->add_option("--m", co.m, "claimed twist period")
      ->required()
      ->check(CLI::Range(1L, 64L));
  certify->add_option("--prec", co.prec, "series working precision");
  certify->add_option("--format", co.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    vo.prec = default_prec();
    co.prec = vo.prec;
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const crown::PrecondError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return run_verify(vo);
    if (enumerate->parsed()) return run_enumerate(eo);
    return run_certify(co);
  } catch (const crown::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const crown::PrecisionExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
