// siflag: command-line front end for the siflag headers.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "siflag/suites.hpp"
#include "siflag/syntax.hpp"
#include "siflag/table.hpp"

namespace {

using namespace siflag;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DatumChoice {
  std::string alias;
  std::string file;

  std::shared_ptr<const RootDatum> load() const {
    if (!alias.empty() && !file.empty()) throw UsageError("give either --datum or --datum-file, not both");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw UsageError("cannot read datum file '" + file + "'");
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("datum file: ") + e.what());
      }
      return std::make_shared<const RootDatum>(RootDatum::from_json(j));
    }
    return std::make_shared<const RootDatum>(RootDatum::from_alias(alias.empty() ? "a1-adj" : alias));
  }
};

void add_datum_options(CLI::App* cmd, DatumChoice& d) {
  cmd->add_option("--datum", d.alias, "Built-in datum: a1-adj, a1-sc, a2-adj, a2-sc, b2, g2 (default a1-adj)");
  cmd->add_option("--datum-file", d.file, "Root datum as JSON");
}

// Persisted Kostant memo under $SIFLAG_CACHE_DIR; every failure is silent.
std::string cache_path(const RootDatum& d) {
  const char* dir = std::getenv("SIFLAG_CACHE_DIR");
  if (!dir || !*dir) return {};
  std::string name;
  for (char c : d.name()) name += std::isalnum(static_cast<unsigned char>(c)) || c == '-' ? c : '_';
  return (std::filesystem::path(dir) / ("kostant-" + name + ".bin")).string();
}

void load_cache(KostantCalculator& K) {
  if (auto p = cache_path(K.datum()); !p.empty()) K.load(p);
}

void save_cache(const KostantCalculator& K) {
  auto p = cache_path(K.datum());
  if (p.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(std::filesystem::path(p).parent_path(), ec);
  K.save(p);
}

// Exactly one of the query options must be present.
const CLI::Option* single_action(const std::vector<CLI::Option*>& opts) {
  const CLI::Option* chosen = nullptr;
  for (const auto* o : opts) {
    if (o->count() == 0) continue;
    if (chosen) throw UsageError("give exactly one query option (" + chosen->get_name() + " and " + o->get_name() + ")");
    chosen = o;
  }
  if (!chosen) throw UsageError("no query option given");
  return chosen;
}

struct OrderArgs {
  DatumChoice datum;
  std::string length, word, pseudodim, iwahori, omega, alcove, plus;
  std::vector<std::string> bruhat, semiinf;
  bool saff = false;
  std::vector<CLI::Option*> actions;
};

int run_order(OrderArgs& a) {
  const auto* act = single_action(a.actions);
  ExtAffineWeylGroup G(a.datum.load());
  const std::string n = act->get_name();
  auto el = [&](const std::string& s) { return parse_element(G, s); };
  if (n == "--length") {
    std::cout << G.length(el(a.length)) << "\n";
  } else if (n == "--reduced-word") {
    auto [letters, tail] = G.reduced_word(el(a.word));
    std::string s;
    for (std::size_t i : letters) s += (s.empty() ? "" : " ") + G.to_string(G.s_aff()[i]);
    std::cout << (s.empty() ? "" : s + " | ") << "omega = " << G.to_string(tail) << "\n";
  } else if (n == "--bruhat") {
    std::cout << (G.bruhat_leq(el(a.bruhat[0]), el(a.bruhat[1])) ? "true" : "false") << "\n";
  } else if (n == "--semiinf") {
    std::cout << (G.semiinfinite_leq(el(a.semiinf[0]), el(a.semiinf[1])) ? "true" : "false") << "\n";
  } else if (n == "--pseudodim") {
    std::cout << G.pseudodim_fl(el(a.pseudodim)) << "\n";
  } else if (n == "--iwahori-dim") {
    std::cout << iwahori_orbit_dimension(G, el(a.iwahori)) << "\n";
  } else if (n == "--omega") {
    auto [w, u] = G.omega_decompose(el(a.omega));
    std::cout << G.to_string(w) << " " << G.to_string(u) << "\n";
  } else if (n == "--alcove") {
    std::cout << G.to_string(G.alcove_of(el(a.alcove)).rep) << "\n";
  } else if (n == "--wext-plus") {
    std::cout << (G.in_wext_plus(el(a.plus)) ? "true" : "false") << "\n";
  } else if (n == "--saff") {
    for (const auto& s : G.s_aff()) std::cout << G.to_string(s) << "\n";
  }
  return kOk;
}

struct KostantArgs {
  DatumChoice datum;
  std::string partition, count, gstalk, gcostalk, stab, weyl_dim, table;
  std::vector<std::string> mult, stalk, costalk;
  Int bound = 8;
  Int box = 3;
  std::string format = "csv";
  std::vector<CLI::Option*> actions;
};

int run_kostant(KostantArgs& a) {
  const auto* act = single_action(a.actions);
  auto d = a.datum.load();
  FiniteWeylGroup W(d);
  KostantCalculator K(W);
  load_cache(K);
  const std::string n = act->get_name();
  auto cw = [&](const std::string& s) { return parse_coweight(s, d->rank()); };
  if (n == "--partition") {
    std::cout << K.partition(cw(a.partition)).str() << "\n";
  } else if (n == "--count") {
    std::cout << K.partition_count(cw(a.count)) << "\n";
  } else if (n == "--multiplicity") {
    std::cout << K.kostant_weight_multiplicity(cw(a.mult[0]), cw(a.mult[1])) << "\n";
  } else if (n == "--stalk") {
    std::cout << K.m_stalk_rank(cw(a.stalk[0]), cw(a.stalk[1])) << "\n";
  } else if (n == "--costalk") {
    std::cout << K.m_costalk_poly(cw(a.costalk[0]), cw(a.costalk[1])).str() << "\n";
  } else if (n == "--gaitsgory-stalk") {
    std::cout << K.gaitsgory_stalk_rank(cw(a.gstalk)) << "\n";
  } else if (n == "--gaitsgory-costalk") {
    std::cout << K.gaitsgory_costalk_poly(cw(a.gcostalk)).str() << "\n";
  } else if (n == "--weyl-dim") {
    std::cout << FreudenthalOracle(*d).weyl_dimension(cw(a.weyl_dim)) << "\n";
  } else if (n == "--stabilization") {
    auto rep = K.stabilization_check(cw(a.stab), a.bound);
    std::cout << "target " << rep.target << ", stable_from "
              << (rep.stable_from ? rep.stable_from->str() : "none") << " (box of " << rep.box_size << ")\n";
  } else if (n == "--table") {
    if (a.table != "gaitsgory") throw UsageError("unknown table '" + a.table + "' (available: gaitsgory)");
    std::cout << emit_table(gaitsgory_table(K, a.box, a.bound), a.format == "json" ? TableFormat::json : TableFormat::csv);
  }
  save_cache(K);
  return kOk;
}

struct HeckeArgs {
  DatumChoice datum;
  std::vector<std::string> mul;
  std::string inverse, bernstein, wakimoto, check;
  std::size_t alpha = 1;
  bool braid = false;
  std::string format = "text";
  std::vector<CLI::Option*> actions;
};

int run_hecke(HeckeArgs& a) {
  const auto* act = single_action(a.actions);
  auto d = a.datum.load();
  ExtAffineWeylGroup G(d);
  HeckeAlgebra H(G);
  const std::string n = act->get_name();
  auto show = [&](const HeckeElement& h) {
    if (a.format == "json")
      std::cout << H.to_json(h).dump() << "\n";
    else
      std::cout << H.to_string(h) << "\n";
  };
  if (n == "--mul") {
    HeckeElement r = H.one();
    for (const auto& s : a.mul) r = H.right_mul_basis(r, parse_element(G, s));
    show(r);
  } else if (n == "--inverse") {
    show(H.std_inverse(parse_element(G, a.inverse)));
  } else if (n == "--bernstein") {
    show(H.bernstein(parse_coweight(a.bernstein, d->rank())));
  } else if (n == "--wakimoto") {
    show(H.wakimoto(parse_element(G, a.wakimoto)));
  } else if (n == "--check-bernstein") {
    if (a.alpha == 0) throw UsageError("--alpha is 1-based");
    auto c = H.check_bernstein_relations(parse_coweight(a.check, d->rank()), a.alpha - 1);
    std::cout << to_string(c.kind) << " " << (c.passed ? "pass" : "fail") << "\n";
    return c.passed ? kOk : kFailed;
  } else if (n == "--braid") {
    bool all = true;
    const std::size_t ns = G.s_aff().size();
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = i + 1; j < ns; ++j) {
        auto ok = H.braid_relation_holds(i, j);
        std::cout << G.to_string(G.s_aff()[i]) << ", " << G.to_string(G.s_aff()[j]) << ": "
                  << (!ok ? "free" : *ok ? "pass" : "fail") << "\n";
        all &= ok.value_or(true);
      }
    return all ? kOk : kFailed;
  }
  return kOk;
}

struct VerifyArgs {
  DatumChoice datum;
  std::vector<std::string> suites{"all"};
};

int run_verify(VerifyArgs& a) {
  for (const auto& s : a.suites)
    if (!SuiteRunner::is_known(s)) throw UsageError("unknown suite '" + s + "'");
  SuiteRunner runner(a.datum.load());
  load_cache(runner.kostant());
  std::vector<std::string> todo;
  for (const auto& s : a.suites) {
    if (s == "all")
      todo.insert(todo.end(), SuiteRunner::names().begin(), SuiteRunner::names().end());
    else
      todo.push_back(s);
  }
  std::size_t pass = 0, fail = 0;
  for (const auto& s : todo) {
    SuiteResult r = runner.run(s);
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed << " failed";
    if (!r.note.empty()) std::cout << " (" << r.note << ")";
    std::cout << "\n";
    for (const auto& f : r.failures) std::cout << "  - " << f << "\n";
    pass += r.passed;
    fail += r.failed;
  }
  std::cout << "total: " << pass << " passed, " << fail << " failed\n";
  save_cache(runner.kostant());
  return fail == 0 ? kOk : kFailed;
}

int run_datum(DatumChoice& dc) {
  auto d = dc.load();
  ExtAffineWeylGroup G(d);
  nlohmann::ordered_json j;
  j["name"] = d->name();
  j["datum"] = d->to_json();
  j["positive_roots"] = d->num_pos_roots();
  j["weyl_group_order"] = G.finite().order();
  if (d->is_semisimple() && !d->is_torus()) {
    std::vector<std::string> om, sa;
    for (const auto& w : G.omega()) om.push_back(G.to_string(w));
    for (const auto& s : G.s_aff()) sa.push_back(G.to_string(s));
    j["omega"] = om;
    j["s_aff"] = sa;
  }
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of semiinfinite flag varieties: orders, Kostant functions, Hecke identities"};
  app.require_subcommand(1);

  DatumChoice datum_args;
  auto* datum_cmd = app.add_subcommand("datum", "Validate and print a root datum");
  add_datum_options(datum_cmd, datum_args);

  OrderArgs oa;
  auto* order = app.add_subcommand("order", "Length, Bruhat and semiinfinite order queries");
  add_datum_options(order, oa.datum);
  oa.actions = {
      order->add_option("--length", oa.length, "Length of an element"),
      order->add_option("--reduced-word", oa.word, "Reduced word in S_aff and the Omega factor"),
      order->add_option("--bruhat", oa.bruhat, "Is X <= Y in Bruhat order")->expected(2)->allow_extra_args(false),
      order->add_option("--semiinf", oa.semiinf, "Is X <= Y in the semiinfinite order")->expected(2)->allow_extra_args(false),
      order->add_option("--pseudodim", oa.pseudodim, "Pseudodimension of the semiinfinite orbit"),
      order->add_option("--iwahori-dim", oa.iwahori, "Dimension of the Iwahori orbit (dominant translation)"),
      order->add_option("--omega", oa.omega, "Decomposition x = omega * u"),
      order->add_option("--alcove", oa.alcove, "W_aff representative of the alcove x(A_0)"),
      order->add_option("--wext-plus", oa.plus, "Membership in W_ext^+"),
      order->add_flag("--saff", oa.saff, "List the affine simple reflections"),
  };

  KostantArgs ka;
  auto* kostant = app.add_subcommand("kostant", "Kostant partition function, multiplicities, stalks and costalks");
  add_datum_options(kostant, ka.datum);
  ka.actions = {
      kostant->add_option("--partition", ka.partition, "Partition polynomial P(nu, q)"),
      kostant->add_option("--count", ka.count, "P(nu, 1)"),
      kostant->add_option("--multiplicity", ka.mult, "Weight multiplicity of MU in LAMBDA")->expected(2)->allow_extra_args(false),
      kostant->add_option("--stalk", ka.stalk, "Stalk rank of M_LAMBDA at NU")->expected(2)->allow_extra_args(false),
      kostant->add_option("--costalk", ka.costalk, "Costalk polynomial of M_LAMBDA at NU")->expected(2)->allow_extra_args(false),
      kostant->add_option("--gaitsgory-stalk", ka.gstalk, "Stalk rank of the Gaitsgory sheaf at NU"),
      kostant->add_option("--gaitsgory-costalk", ka.gcostalk, "Costalk polynomial of the Gaitsgory sheaf at NU"),
      kostant->add_option("--weyl-dim", ka.weyl_dim, "Weyl dimension of LAMBDA"),
      kostant->add_option("--stabilization", ka.stab, "Stabilization threshold for NU"),
      kostant->add_option("--table", ka.table, "Emit a table (gaitsgory)"),
  };
  kostant->add_option("--bound", ka.bound, "Dominant box size for stabilization scans")->check(CLI::NonNegativeNumber);
  kostant->add_option("--box", ka.box, "Coroot height bound for table rows")->check(CLI::NonNegativeNumber);
  kostant->add_option("--format", ka.format, "Table format")->check(CLI::IsMember({"csv", "json"}));

  HeckeArgs ha;
  auto* hecke = app.add_subcommand("hecke", "Extended affine Hecke algebra arithmetic");
  add_datum_options(hecke, ha.datum);
  ha.actions = {
      hecke->add_option("--mul", ha.mul, "Product H_X1 H_X2 ... of basis elements"),
      hecke->add_option("--inverse", ha.inverse, "Inverse of H_X"),
      hecke->add_option("--bernstein", ha.bernstein, "Bernstein element theta_LAMBDA"),
      hecke->add_option("--wakimoto", ha.wakimoto, "Wakimoto element of X"),
      hecke->add_option("--check-bernstein", ha.check, "Bernstein relation for LAMBDA and --alpha"),
      hecke->add_flag("--braid", ha.braid, "Check braid relations for all pairs in S_aff"),
  };
  hecke->add_option("--alpha", ha.alpha, "Simple root index (1-based)");
  hecke->add_option("--format", ha.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run property suites; exit 1 if any check fails");
  add_datum_options(verify, va.datum);
  verify->add_option("--suite", va.suites, "Suite names, or 'all'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (*datum_cmd) return run_datum(datum_args);
    if (*order) return run_order(oa);
    if (*kostant) return run_kostant(ka);
    if (*hecke) return run_hecke(ha);
    if (*verify) return run_verify(va);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const siflag::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
