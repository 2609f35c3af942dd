// qtwist: command-line front end.
// Exit codes: 0 pass/valid, 1 mathematical failure, 2 usage or format error.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qtwist/qtwist.hpp"

namespace {

using namespace qtwist;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct Options {
  int n = 2;
  std::optional<std::string> q;
  int degree = 3;
  std::uint64_t seed = 1;
  std::string out;
  std::string file1, file2;
};

/// Coefficients are read over Q(q) and specialised when --q is given.
template <Field F>
struct Ctx {
  std::optional<Rational> q0;

  F lift(const RatFunc& f) const {
    if constexpr (std::is_same_v<F, RatFunc>)
      return f;
    else
      return specialize(f, *q0);
  }
  F q() const {
    if constexpr (std::is_same_v<F, RatFunc>)
      return RatFunc::q();
    else
      return *q0;
  }
  std::string q_text() const { return q0 ? to_string(*q0) : "q"; }

  EndTensor<F> r_matrix(const std::string& path) const {
    auto R = io::r_matrix_from_json<RatFunc>(io::read_file(path));
    EndTensor<F> out(R.n());
    for (const auto& [key, v] : R.entries()) {
      F x = lift(v);
      if (!x.is_zero()) out.set_packed(key, x);
    }
    return out;
  }
  QuadraticAlgebra<F> algebra(const std::string& path) const {
    auto A = io::algebra_from_json<RatFunc>(io::read_file(path));
    if constexpr (std::is_same_v<F, RatFunc>)
      return A;
    else
      return specialize(A, *q0);
  }
  Matrix<F> matrix(const std::string& path, const std::string& key) const {
    auto doc = io::read_file(path);
    if (!doc.contains(key)) {
      // Accept either "alpha" or "matrix" as the field name.
      const std::string alt = key == "alpha" ? "matrix" : "alpha";
      if (doc.is_object() && doc.contains(alt))
        return io::matrix_from_json<RatFunc>(doc, alt).map([&](const RatFunc& f) { return lift(f); });
    }
    return io::matrix_from_json<RatFunc>(doc, key).map([&](const RatFunc& f) { return lift(f); });
  }
};

void emit(const Options& o, const json& doc) {
  if (o.out.empty())
    std::cout << doc.dump(2) << '\n';
  else
    io::write_file(o.out, doc);
}

/// Writes the document to --out when given and prints the report; otherwise the report carries the document.
void emit_with_report(const Options& o, const char* key, const json& doc, json report) {
  if (o.out.empty()) {
    report[key] = doc;
  } else {
    io::write_file(o.out, doc);
    report["out"] = o.out;
  }
  std::cout << report.dump(2) << '\n';
}

template <Field F>
int cmd_rq(const Options& o, const Ctx<F>& c) {
  emit(o, io::r_matrix_to_json(classical_rq(o.n, c.q())));
  return kExitOk;
}

template <Field F>
int cmd_qybe_check(const Options& o, const Ctx<F>& c) {
  auto R = c.r_matrix(o.file1);
  auto res = qybe_residual(R);
  const bool ok = res.is_zero();
  json report{{"solution", ok},
              {"residual_nonzero_count", res.nonzero_count()},
              {"n", R.n()},
              {"q", c.q_text()}};
  report["human"] = ok ? "R solves the quantum Yang-Baxter equation (zero residual)."
                       : "R is not a solution: the residual has " + std::to_string(res.nonzero_count()) +
                             " nonzero entries.";
  std::cout << report.dump(2) << '\n';
  return ok ? kExitOk : kExitMath;
}

template <Field F>
int cmd_twist(const Options& o, const Ctx<F>& c) {
  auto R = c.r_matrix(o.file1);
  auto alpha = c.matrix(o.file2, "alpha");
  TwistingPair<F> pair(R, alpha);
  auto Rs = twist_r(R, pair);
  const bool solution = qybe_residual(Rs).is_zero();
  json report{{"valid_pair", true}, {"solution", solution}, {"n", R.n()}, {"q", c.q_text()}};
  std::string human = "alpha is an admissible twisting pair; the twisted operator ";
  human += solution ? "solves the QYBE." : "does NOT solve the QYBE.";
  if (auto q = classical_parameter(R)) {
    const QCase qc = qcase_of(*q);
    report["qcase"] = to_string(qc);
    if (twisting_family_admits(qc, alpha)) {
      const bool match = twist_rq_closed_form(TwistSpec<F>{R, pair, qc}) == Rs;
      report["closed_form_match"] = match;
      human += match ? " Matches the closed form." : " Differs from the closed form.";
    }
  }
  report["human"] = human;
  emit_with_report(o, "r_matrix", io::r_matrix_to_json(Rs), report);
  return solution ? kExitOk : kExitMath;
}

template <Field F>
int cmd_frt(const Options& o, const Ctx<F>& c) {
  auto R = c.r_matrix(o.file1);
  json doc = io::algebra_to_json(frt_relations(R));
  doc["convention"] = kFrtConvention;
  doc["r_matrix"] = io::r_matrix_to_json(R);
  emit(o, doc);
  return kExitOk;
}

template <Field F>
int cmd_hilbert(const Options& o, const Ctx<F>& c) {
  if (o.degree < 0 || o.degree > kDefaultDegreeCap)
    throw DegreeTooLarge("degree must lie in 0.." + std::to_string(kDefaultDegreeCap));
  auto A = c.algebra(o.file1);
  auto dims = hilbert_dims(A, o.degree);
  std::string text;
  for (std::size_t d = 0; d < dims.size(); ++d) text += (d ? ", " : "") + std::to_string(dims[d]);
  json report{{"dims", dims}, {"degree", o.degree}, {"generators", A.m()}, {"relations", A.relation_count()}};
  report["human"] = "dim A_d for d = 0.." + std::to_string(o.degree) + ": " + text;
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

template <Field F>
int cmd_qdet(const Options& o, const Ctx<F>& c) {
  if (o.n < 1 || o.n > 4) throw IndexOutOfRange("q-determinant needs 1 <= n <= 4");
  auto g = q_determinant(o.n, c.q());
  const auto labels = matrix_labels(o.n, "x");
  const std::string text = format_poly(g, labels);
  json report{{"n", o.n}, {"q", c.q_text()}, {"polynomial", text}, {"terms", io::polynomial_to_json(g, labels)}};
  report["human"] = "q-determinant: " + text;
  std::cout << report.dump(2) << '\n';
  return kExitOk;
}

template <Field F>
int cmd_koszul_dual(const Options& o, const Ctx<F>& c) {
  emit(o, io::algebra_to_json(koszul_dual(c.algebra(o.file1))));
  return kExitOk;
}

template <Field F>
int cmd_bullet(const Options& o, const Ctx<F>& c) {
  emit(o, io::algebra_to_json(bullet(c.algebra(o.file1), c.algebra(o.file2))));
  return kExitOk;
}

template <Field F>
int cmd_zhang_twist(const Options& o, const Ctx<F>& c) {
  auto A = c.algebra(o.file1);
  GradedAut<F> phi(A, c.matrix(o.file2, "matrix"));
  emit(o, io::algebra_to_json(zhang_twist_relations(A, phi)));
  return kExitOk;
}

template <Field F>
int cmd_manin_end(const Options& o, const Ctx<F>& c) {
  auto E = manin_end(c.algebra(o.file1));
  json doc = io::algebra_to_json(E.algebra);
  json delta = json::array();
  const auto& labels = E.algebra.labels();
  for (std::size_t g = 0; g < E.algebra.m(); ++g)
    delta.push_back(labels[g] + " -> " + format_tensor(E.coalgebra.template comultiply_generator<F>(g), labels));
  doc["comultiplication"] = delta;
  emit(o, doc);
  return kExitOk;
}

int cmd_verify_suite(const Options& o) {
  auto results = verify::run_suite(o.seed);
  json checks = json::array();
  bool all = true;
  std::string human;
  for (const auto& r : results) {
    all = all && r.pass;
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
    human += std::string(r.pass ? "PASS " : "FAIL ") + r.name + " (" + std::to_string(r.cases) + " cases)";
    if (!r.pass) human += ": " + r.detail;
    human += "\n";
  }
  json report{{"seed", o.seed}, {"all_pass", all}, {"checks", checks}, {"human", human}};
  emit(o, report);
  return all ? kExitOk : kExitMath;
}

template <Field F>
int dispatch(const std::string& cmd, const Options& o, const Ctx<F>& c) {
  if (cmd == "rq") return cmd_rq(o, c);
  if (cmd == "qybe-check") return cmd_qybe_check(o, c);
  if (cmd == "twist") return cmd_twist(o, c);
  if (cmd == "frt") return cmd_frt(o, c);
  if (cmd == "hilbert") return cmd_hilbert(o, c);
  if (cmd == "qdet") return cmd_qdet(o, c);
  if (cmd == "koszul-dual") return cmd_koszul_dual(o, c);
  if (cmd == "bullet") return cmd_bullet(o, c);
  if (cmd == "zhang-twist") return cmd_zhang_twist(o, c);
  if (cmd == "manin-end") return cmd_manin_end(o, c);
  return cmd_verify_suite(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact quadratic algebras, FRT bialgebras and twisted Yang-Baxter solutions"};
  app.require_subcommand(1);
  Options o;

  auto add_q = [&](CLI::App* s) { s->add_option("--q", o.q, "rational value of q (default: symbolic)"); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", o.out, "write the document to this file"); };
  auto add_n = [&](CLI::App* s) {
    s->add_option("--n", o.n, "dimension of V")->check(CLI::Range(1, kMaxDim));
  };

  auto* rq = app.add_subcommand("rq", "classical operator R_q");
  add_n(rq);
  add_q(rq);
  add_out(rq);

  auto* qybe = app.add_subcommand("qybe-check", "test the quantum Yang-Baxter equation");
  qybe->add_option("r_file", o.file1, "R-matrix document")->required();
  add_q(qybe);

  auto* tw = app.add_subcommand("twist", "twist an R-matrix by a twisting pair");
  tw->add_option("r_file", o.file1, "R-matrix document")->required();
  tw->add_option("alpha_file", o.file2, "document with an `alpha` matrix")->required();
  add_q(tw);
  add_out(tw);

  auto* frt = app.add_subcommand("frt", "relations of the FRT bialgebra A(R)");
  frt->add_option("r_file", o.file1, "R-matrix document")->required();
  add_q(frt);
  add_out(frt);

  auto* hil = app.add_subcommand("hilbert", "graded dimensions of a quadratic algebra");
  hil->add_option("algebra_file", o.file1, "quadratic-algebra document")->required();
  hil->add_option("--degree", o.degree, "top degree (at most 6)");
  add_q(hil);

  auto* qdet = app.add_subcommand("qdet", "the q-determinant of O_q(M_n)");
  add_n(qdet);
  add_q(qdet);

  auto* kd = app.add_subcommand("koszul-dual", "Koszul dual");
  kd->add_option("algebra_file", o.file1)->required();
  add_q(kd);
  add_out(kd);

  auto* bu = app.add_subcommand("bullet", "bullet product");
  bu->add_option("left_file", o.file1)->required();
  bu->add_option("right_file", o.file2)->required();
  add_q(bu);
  add_out(bu);

  auto* zt = app.add_subcommand("zhang-twist", "right Zhang twist by a graded automorphism");
  zt->add_option("algebra_file", o.file1)->required();
  zt->add_option("matrix_file", o.file2, "document with a `matrix` field")->required();
  add_q(zt);
  add_out(zt);

  auto* me = app.add_subcommand("manin-end", "Manin's end(A) = A!•A");
  me->add_option("algebra_file", o.file1)->required();
  add_q(me);
  add_out(me);

  auto* vs = app.add_subcommand("verify-suite", "run the named invariant suite");
  vs->add_option("--seed", o.seed, "random seed");
  add_out(vs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (o.q) {
      Ctx<Rational> c{parse_scalar<Rational>(*o.q)};
      if (c.q0->is_zero()) throw ZeroParameter();
      return dispatch(cmd, o, c);
    }
    return dispatch(cmd, o, Ctx<RatFunc>{});
  } catch (const InvalidPair& e) {
    std::cerr << "error: InvalidPair: " << e.what() << '\n';
    return kExitMath;
  } catch (const NotAnAutomorphism& e) {
    std::cerr << "error: NotAnAutomorphism: " << e.what() << '\n';
    return kExitMath;
  } catch (const CaseMismatch& e) {
    std::cerr << "error: CaseMismatch: " << e.what() << '\n';
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
