// kzero command-line front end.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "kzero/catalog.hpp"
#include "kzero/grass_tower.hpp"
#include "kzero/kring_io.hpp"
#include "kzero/table_io.hpp"

using namespace kzero;
using nlohmann::json;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string group = "S3";
  std::string format = "text";
  std::string output;
  std::string cls, p, q, a, b, values, ambient, ambient2;
  Int k = 1;
  int r = -1, r2 = -1, i = 1;
  bool certify = false, check = false, basis = false, relations = false;
};

bool structured(const Options& o) { return o.format == "structured"; }

void emit(const Options& o, const std::string& text, const json& doc) {
  std::ostringstream os;
  if (structured(o))
    os << doc.dump(2) << '\n';
  else
    os << text;
  if (o.output.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw std::runtime_error("cannot write " + o.output);
  f << os.str();
}

std::string char_line(const VirtualCharacter& x) { return x.to_csv() + " (" + x.to_string() + ")"; }

/// Grammar: terms joined by '+', each `[k][*]rho` or a multiplicity vector.
VirtualCharacter parse_ambient(const TablePtr& table, std::string text) {
  std::erase_if(text, [](char c) { return c == ' ' || c == '(' || c == ')'; });
  if (text.empty()) throw std::invalid_argument("empty ambient class");
  auto out = VirtualCharacter::zero(table);
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find('+', start), text.size());
    std::string tok = text.substr(start, end - start);
    if (tok.empty()) throw std::invalid_argument("malformed ambient class '" + text + "'");
    const auto pos = tok.find("rho");
    if (pos != std::string::npos) {
      if (pos + 3 != tok.size()) throw std::invalid_argument("malformed ambient term '" + tok + "'");
      std::string coef = tok.substr(0, pos);
      if (!coef.empty() && coef.back() == '*') coef.pop_back();
      Int k = 1;
      if (!coef.empty()) {
        std::size_t used = 0;
        k = std::stoll(coef, &used);
        if (used != coef.size() || k < 0) throw std::invalid_argument("bad rho multiple '" + coef + "'");
      }
      out += k * regular_rep(table);
    } else {
      out += parse_class_vector(table, tok);
    }
    start = end + 1;
  }
  return out;
}

ClassFunction parse_values(const TablePtr& table, const std::string& csv) {
  ClassFunction out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_cyclotomic(table->exponent(), item));
  if (out.size() != table->num_classes())
    throw std::invalid_argument("expected " + std::to_string(table->num_classes()) + " class values, got " +
                                std::to_string(out.size()));
  return out;
}

json char_json(const VirtualCharacter& x) { return {{"mults", x.mults()}, {"name", x.to_string()}}; }

// ---------------------------------------------------------------------------
// group

int cmd_group_list(const Options& o) {
  std::ostringstream os;
  json doc = json::array();
  for (const auto& n : catalog_names()) {
    const auto t = catalog_table(n);
    os << n << "  order " << t->order() << ", " << t->size() << " irreducibles\n";
    doc.push_back({{"name", n}, {"order", t->order()}, {"irreducibles", t->size()}});
  }
  emit(o, os.str(), doc);
  return 0;
}

int cmd_group_show(const Options& o, const std::string& source) {
  const auto t = load_table(source);
  const auto rho = regular_rep(t);
  const auto I = augmentation_ideal(t);
  std::ostringstream os;
  os << "group " << t->name() << "  g = " << t->order() << "  exponent " << t->exponent() << '\n';
  os << "classes:";
  for (const auto& c : t->group().classes) os << ' ' << c.label << '[' << c.size << ']';
  os << '\n';
  for (std::size_t i = 0; i < t->size(); ++i) {
    os << t->irreducible_name(i) << " (degree " << t->degree(i) << "):";
    for (std::size_t c = 0; c < t->num_classes(); ++c) os << ' ' << t->value(i, c).to_string();
    os << '\n';
  }
  os << "rho = " << char_line(rho) << '\n';
  os << "I = " << char_line(I) << '\n';
  json doc = table_to_json(*t);
  doc["rho"] = char_json(rho);
  doc["augmentation_ideal"] = char_json(I);
  emit(o, os.str(), doc);
  return 0;
}

int cmd_group_validate(const Options& o, const std::string& source) {
  const auto t = load_table(source);
  const auto reloaded = table_from_json(table_to_json(*t));
  const bool round_trip = table_to_json(*reloaded) == table_to_json(*t);
  std::ostringstream os;
  os << t->name() << ": valid (" << t->size() << " irreducibles, g = " << t->order() << ")\n";
  os << "document round trip: " << (round_trip ? "ok" : "FAILED") << '\n';
  emit(o, os.str(), {{"group", t->name()}, {"valid", true}, {"round_trip", round_trip}});
  return round_trip ? 0 : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// rep

VirtualCharacter need_class(const TablePtr& t, const std::string& csv, const char* flag) {
  if (csv.empty()) throw std::invalid_argument(std::string("missing ") + flag);
  return parse_class_vector(t, csv);
}

int cmd_rep(const Options& o, const std::string& op) {
  const auto t = load_table(o.group);
  std::ostringstream os;
  json doc = {{"group", t->name()}, {"operation", op}};
  if (op == "decompose") {
    if (o.values.empty()) throw std::invalid_argument("missing --values");
    const auto x = decompose(t, parse_values(t, o.values));
    os << char_line(x) << '\n';
    doc["result"] = char_json(x);
  } else if (op == "product") {
    const auto x = need_class(t, o.a, "--a") * need_class(t, o.b, "--b");
    os << char_line(x) << '\n';
    doc["result"] = char_json(x);
  } else if (op == "adams" || op == "lambda") {
    const auto in = need_class(t, o.cls, "--class");
    const auto x = op == "adams" ? adams(o.k, in) : lambda_op(o.k, in);
    os << char_line(x) << '\n';
    doc["k"] = o.k;
    doc["result"] = char_json(x);
  } else if (op == "dual") {
    const auto x = dual(need_class(t, o.cls, "--class"));
    os << char_line(x) << '\n';
    doc["result"] = char_json(x);
  } else if (op == "split") {
    const auto s = rank_split(need_class(t, o.cls, "--class"));
    os << "rank = " << s.rank << '\n' << "reduced = " << char_line(s.reduced) << '\n';
    doc["rank"] = s.rank;
    doc["reduced"] = char_json(s.reduced);
  } else if (op == "embed") {
    const auto e = embed_in_regular(need_class(t, o.cls, "--class"));
    os << "n = " << e.copies << '\n' << "complement = " << char_line(e.complement) << '\n';
    doc["n"] = e.copies;
    doc["complement"] = char_json(e.complement);
  } else if (op == "normalize") {
    const auto P = need_class(t, o.p, "--p");
    const auto Q = need_class(t, o.q, "--q");
    doc = normalize_report(P, Q);
    const auto& tr = doc["triple"];
    const VirtualCharacter M(t, tr["M"].get<std::vector<Int>>());
    os << "M = " << char_line(M) << '\n'
       << "n = " << tr["n"].get<Int>() << '\n'
       << "i = " << tr["i"].get<Int>() << '\n'
       << "minimal ambient = " << doc["minimal_ambient"].get<Int>() << '\n'
       << (doc["verified"].get<bool>() ? "verified" : "NOT VERIFIED") << '\n';
    emit(o, os.str(), doc);
    return doc["verified"].get<bool>() ? 0 : kExitVerifyFailed;
  }
  emit(o, os.str(), doc);
  return 0;
}

// ---------------------------------------------------------------------------
// kring

void describe_algebra(std::ostream& os, const AlgebraPtr& algebra, bool with_basis) {
  const auto& A = *algebra;
  os << "variables:";
  for (std::size_t i = 0; i < A.num_vars(); ++i) os << ' ' << A.var_names()[i] << " (bound " << A.bounds()[i] << ')';
  if (A.num_vars() == 0) os << " none";
  os << '\n';
  for (std::size_t i = 0; i < A.num_vars(); ++i) {
    const auto x = reduce(A.rules()[i], algebra);
    os << "  " << A.var_names()[i] << '^' << A.bounds()[i] + 1 << " = " << x.to_string() << '\n';
  }
  os << "free rank: " << A.free_rank() << '\n';
  if (with_basis) {
    os << "basis:";
    for (const auto& m : A.basis()) {
      os << ' ';
      bool any = false;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << '*';
        os << A.var_names()[i];
        if (m[i] > 1) os << '^' << m[i];
        any = true;
      }
      if (!any) os << '1';
    }
    os << '\n';
  }
}

json basis_json(const PresentedAlgebra& A) {
  json b = json::array();
  for (const auto& m : A.basis()) b.push_back(m);
  return b;
}

struct CheckList {
  std::vector<std::pair<std::string, bool>> items;
  void add(std::string name, bool ok) { items.emplace_back(std::move(name), ok); }
  bool all() const {
    return std::all_of(items.begin(), items.end(), [](const auto& p) { return p.second; });
  }
  void print(std::ostream& os) const {
    for (const auto& [n, ok] : items) os << "check " << n << ": " << (ok ? "ok" : "FAILED") << '\n';
  }
  json to_json() const {
    json j = json::object();
    for (const auto& [n, ok] : items) j[n] = ok;
    return j;
  }
};

bool confluence_check(const AlgebraPtr& A, int trials) {
  std::mt19937_64 rng(12345);
  const auto r = A->num_vars();
  const auto s = A->base()->size();
  std::uniform_int_distribution<int> exp_dist(0, 6), coef_dist(-3, 3);
  for (int trial = 0; trial < trials; ++trial) {
    Polynomial p(A->base(), r);
    for (int term = 0; term < 4; ++term) {
      Monomial m(r, 0);
      int budget = 6;
      for (auto& a : m) {
        a = std::min(budget, exp_dist(rng));
        budget -= a;
      }
      std::vector<Int> c(s);
      for (auto& v : c) v = coef_dist(rng);
      p.add_term(m, c);
    }
    const auto nf = reduce(p, A);
    const auto top = reduce_by_rewriting(p, A);
    const auto rnd = reduce_by_rewriting(p, A, kernels::RewriteOrder::Random, &rng);
    if (!(reduce(top, A) == nf) || top.terms() != nf.to_polynomial().terms() || rnd.terms() != top.terms())
      return false;
  }
  return true;
}

Int factorial_ratio(Int n, int r) { return falling_factorial(n, r); }

int finish_kring(const Options& o, std::ostringstream& os, json& doc, const CheckList& checks) {
  if (o.check) {
    checks.print(os);
    doc["checks"] = checks.to_json();
  }
  const bool ok = !o.check || checks.all();
  doc["verified"] = ok;
  emit(o, os.str(), doc);
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_kring(const Options& o, const std::string& op) {
  const auto t = load_table(o.group);
  std::ostringstream os;
  json doc = {{"group", t->name()}, {"construction", op}};
  CheckList checks;

  if (op == "tower-restrict") {
    const TowerStage target(t, o.i), source(t, o.i + 1);
    os << "restriction Gr(" << source.subspace_rank() << ", " << source.ambient().to_string() << ") -> Gr("
       << target.subspace_rank() << ", " << target.ambient().to_string() << ")\n";
    os << "stage " << target.index() << " free rank: " << target.free_rank() << '\n';
    const auto f = restriction(source, target);
    for (std::size_t j = 0; j <= f.source_generators(); ++j)
      os << "  L" << j << " -> " << f.image(j).to_string() << '\n';
    doc["source_stage"] = source.index();
    doc["target_stage"] = target.index();
    json images = json::array();
    for (const auto& x : f.images()) images.push_back(element_to_json(x));
    doc["images"] = images;
    bool ok = true;
    if (o.certify) {
      const auto entries = surjectivity_witness(source, target);
      doc["witness"] = witness_report(source, target, entries);
      for (const auto& e : entries) {
        os << "witness e" << e.j << " = " << generator_polynomial_to_string(e.expression) << ": "
           << (e.certified ? "certified" : "NOT CERTIFIED") << '\n';
        ok = ok && e.certified;
      }
      os << (ok ? "all generators certified" : "certification FAILED") << '\n';
    }
    if (o.relations) {
      for (const auto& rel : source_relations(source, 1)) {
        const bool zero = f.apply(rel).is_zero();
        os << "source relation maps to zero: " << (zero ? "ok" : "FAILED") << '\n';
        ok = ok && zero;
      }
    }
    doc["verified"] = ok;
    emit(o, os.str(), doc);
    return ok ? 0 : kExitVerifyFailed;
  }

  if (o.ambient.empty()) throw std::invalid_argument("missing --ambient");
  const auto E = parse_ambient(t, o.ambient);
  doc["ambient"] = char_json(E);
  os << "ambient E = " << char_line(E) << " (rank " << E.rank() << ")\n";

  if (op == "pbundle") {
    const auto A = projective_bundle(E);
    describe_algebra(os, A, o.basis);
    doc["algebra"] = algebra_to_json(*A);
    if (o.basis) doc["basis"] = basis_json(*A);
    if (o.check) {
      Polynomial theta(t, 1);
      const auto th = theta_polynomial(E);
      for (std::size_t i = 0; i < th.size(); ++i) theta.add_term(Monomial{static_cast<int>(i)}, th[i]);
      checks.add("theta_vanishes", reduce(theta, A).is_zero());
      checks.add("rank", A->free_rank() == E.rank());
      checks.add("confluence", confluence_check(A, 20));
    }
    return finish_kring(o, os, doc, checks);
  }

  if (op == "flag") {
    if (o.r < 0) throw std::invalid_argument("missing --r");
    const auto A = flag_bundle(E, o.r);
    describe_algebra(os, A, o.basis);
    doc["algebra"] = algebra_to_json(*A);
    if (o.basis) doc["basis"] = basis_json(*A);
    if (o.check) {
      checks.add("rank_formula", A->free_rank() == factorial_ratio(E.rank(), o.r));
      checks.add("confluence", confluence_check(A, 20));
      if (o.r == E.rank()) {
        const auto lam = lambda_series_of_class(E.rank(), {VirtualCharacter::zero(t), std::vector<Int>(o.r, 1)}, A);
        bool ok = true;
        for (std::size_t k = 0; k < lam.size(); ++k)
          ok = ok && lam[k] == AlgebraElement::scalar(A, lambda_op(static_cast<Int>(k), E));
        checks.add("full_flag_splitting", ok);
      }
    }
    return finish_kring(o, os, doc, checks);
  }

  if (op == "grass") {
    if (o.r < 0) throw std::invalid_argument("missing --r");
    const GrassmannRing G(E, o.r);
    os << "Grassmann ring Gr(" << o.r << ", E) inside the flag ring\n";
    describe_algebra(os, G.flag(), false);
    os << "Grassmann free rank: " << G.free_rank() << '\n';
    for (std::size_t i = 0; i < G.generators().size(); ++i)
      os << "  e" << i << " = " << G.generator(i).to_string() << '\n';
    doc["flag"] = algebra_to_json(*G.flag());
    doc["free_rank"] = G.free_rank();
    json gens = json::array();
    for (const auto& g : G.generators()) gens.push_back(element_to_json(g));
    doc["generators"] = gens;
    if (o.basis) {
      json b = json::array();
      os << "Schur basis:\n";
      for (const auto& p : G.basis_partitions()) {
        const auto s = G.schur(p);
        std::string label;
        for (std::size_t i = 0; i < p.size(); ++i) label += (i ? "," : "") + std::to_string(p[i]);
        os << "  s[" << label << "] = " << s.to_string() << '\n';
        b.push_back({{"partition", p}, {"element", element_to_json(s)}});
      }
      doc["basis"] = b;
    }
    if (o.check) {
      bool sym = true;
      for (const auto& g : G.generators()) sym = sym && G.is_symmetric(g);
      checks.add("generators_symmetric", sym);
      checks.add("rank_formula", G.free_rank() == binomial(E.rank(), o.r));
      checks.add("schur_independent", certify_independent(G.schur_basis()));
    }
    return finish_kring(o, os, doc, checks);
  }

  if (op == "kunneth") {
    if (o.r < 0) throw std::invalid_argument("missing --r");
    const auto E2 = o.ambient2.empty() ? E : parse_ambient(t, o.ambient2);
    const int r2 = o.r2 < 0 ? o.r : o.r2;
    const GrassmannRing A(E, o.r), B(E2, r2);
    const auto P = kunneth(A, B);
    os << "second factor E' = " << char_line(E2) << ", r' = " << r2 << '\n';
    describe_algebra(os, P.algebra, false);
    os << "ranks: " << A.free_rank() << " x " << B.free_rank() << " = " << P.free_rank() << '\n';
    doc["second_ambient"] = char_json(E2);
    doc["flag"] = algebra_to_json(*P.algebra);
    doc["free_rank"] = P.free_rank();
    doc["factor_ranks"] = {A.free_rank(), B.free_rank()};
    if (o.check) {
      checks.add("rank_multiplicative", P.free_rank() == A.free_rank() * B.free_rank());
      checks.add("basis_independent", certify_independent(P.basis));
    }
    return finish_kring(o, os, doc, checks);
  }
  throw std::invalid_argument("unknown kring construction " + op);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant K0 workbench: representation rings, bundle K-rings, Grassmannian towers"};
  app.require_subcommand(1);
  Options o;
  std::string source;
  int rc = 0;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    c->add_option("--output,-o", o.output, "write the report to a file");
  };

  auto* group = app.add_subcommand("group", "character table catalog and validation");
  group->require_subcommand(1);
  auto* glist = group->add_subcommand("list", "list catalog groups");
  auto* gshow = group->add_subcommand("show", "print a validated table");
  auto* gval = group->add_subcommand("validate", "validate a table document");
  add_common(glist);
  for (auto* c : {gshow, gval}) {
    c->add_option("source", source, "catalog id or table document path")->required();
    add_common(c);
  }
  glist->callback([&] { rc = cmd_group_list(o); });
  gshow->callback([&] { rc = cmd_group_show(o, source); });
  gval->callback([&] { rc = cmd_group_validate(o, source); });

  auto* rep = app.add_subcommand("rep", "representation ring calculations");
  rep->require_subcommand(1);
  for (const char* op : {"decompose", "product", "adams", "lambda", "dual", "split", "normalize", "embed"}) {
    auto* c = rep->add_subcommand(op);
    c->add_option("--group", o.group, "catalog id or table document (default S3)");
    c->add_option("--class", o.cls, "multiplicity vector, e.g. 1,0,2");
    c->add_option("--k", o.k, "operation degree");
    c->add_option("--a", o.a, "first factor");
    c->add_option("--b", o.b, "second factor");
    c->add_option("--p", o.p, "effective class P");
    c->add_option("--q", o.q, "effective class Q");
    c->add_option("--values", o.values, "class function, comma separated cyclotomic values in z");
    add_common(c);
    const std::string name = op;
    c->callback([&, name] { rc = cmd_rep(o, name); });
  }

  auto* kring = app.add_subcommand("kring", "bundle K-rings and tower checks");
  kring->require_subcommand(1);
  for (const char* op : {"pbundle", "flag", "grass", "kunneth", "tower-restrict"}) {
    auto* c = kring->add_subcommand(op);
    c->add_option("--group", o.group, "catalog id or table document (default S3)");
    c->add_option("--ambient", o.ambient, "ambient class: k*rho + multiplicity vector");
    c->add_option("--ambient2", o.ambient2, "second ambient class (kunneth)");
    c->add_option("--r", o.r, "flag length or subspace rank");
    c->add_option("--r2", o.r2, "second subspace rank (kunneth)");
    c->add_option("--i", o.i, "tower stage index of the target");
    c->add_flag("--certify", o.certify, "certify surjectivity generator by generator");
    c->add_flag("--relations", o.relations, "check that source relations restrict to zero");
    c->add_flag("--check", o.check, "run the invariant checks for this instance");
    c->add_flag("--basis", o.basis, "list the free basis");
    add_common(c);
    const std::string name = op;
    c->callback([&, name] { rc = cmd_kring(o, name); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return rc;
}
