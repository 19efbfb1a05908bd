// chevpres — build, count and machine-verify presentations of unipotent
// subgroups of Chevalley groups and of U+ of affine Kac-Moody groups.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "chevpres/bounds.hpp"
#include "chevpres/cover.hpp"
#include "chevpres/presentation.hpp"
#include "chevpres/serialize.hpp"
#include "chevpres/todd_coxeter.hpp"
#include "chevpres/verify.hpp"

using namespace chevpres;
using json = nlohmann::ordered_json;

namespace {

struct FieldArgs {
  int p = 0, a = 0;
  long long q = 0;

  FiniteField make() const {
    if (q > 0) {
      if (p > 0 || a > 0)
        throw std::invalid_argument("give either --q or --p/--a, not both");
      auto [fp, fa] = factor_prime_power(q);
      return FiniteField(fp, fa);
    }
    if (p <= 0 || a <= 0)
      throw std::invalid_argument("field required: --p P --a A or --q Q");
    return FiniteField(p, a);
  }
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << content;
}

long long env_max_cosets() {
  if (const char* env = std::getenv("CHEV_MAX_COSETS")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 0;
}

// ---------------------------------------------------------------- present

struct PresentArgs {
  std::string family;
  std::string type;
  int rank = 0;
  FieldArgs field;
  std::string out;
  std::string format = "json";
};

int cmd_present(const PresentArgs& args) {
  FiniteField F = args.field.make();
  Family family = family_from_string(args.family);

  Presentation pres;
  std::ostringstream summary;
  switch (family) {
    case Family::abelian_rootgroup:
      pres = present_abelian_rootgroup(F);
      break;
    case Family::sl3_sylow:
      pres = present_sl3_sylow(F);
      summary << "expected 2a(a+1) = " << 2 * F.a() * (F.a() + 1) << "\n";
      break;
    case Family::sp4_sylow:
      pres = present_sp4_sylow(F);
      summary << "expected (7a^2+13a)/2 = "
              << (7 * F.a() * F.a() + 13 * F.a()) / 2 << "\n";
      break;
    case Family::sp4_sylow_even:
      pres = present_sp4_sylow_even(F);
      summary << "expected 8a^2 + a(a+1) = "
              << 8 * F.a() * F.a() + F.a() * (F.a() + 1) << "\n";
      break;
    case Family::affine_uplus: {
      if (args.type.empty() || args.rank <= 0)
        throw std::invalid_argument("affine-uplus needs --type and --rank");
      BaseType type = base_type_from_string(args.type);
      DynkinDiagram diag = build_affine_diagram(type, args.rank);
      pres = present_affine_uplus(diag, F);
      CountBounds cb = count_bounds(type, args.rank, F.a(), F.p());
      summary << "count_bounds: upper=" << cb.upper
              << " pair_formula=" << cb.pair_formula << " gs_lower="
              << cb.gs_num << "/" << cb.gs_den << " d=" << cb.d
              << " consistent=" << (cb.consistent ? "yes" : "no") << "\n";
      break;
    }
    default:
      throw std::invalid_argument("family '" + args.family +
                                  "' is not constructible from the CLI");
  }

  std::string content = args.format == "text" ? presentation_to_text(pres)
                                              : presentation_to_json(pres);
  write_output(args.out, content);
  std::ostream& info = args.out.empty() ? std::cerr : std::cout;
  info << "family " << to_string(pres.meta.family) << " over "
       << F.describe() << ": d_count=" << pres.d_count()
       << " r_count=" << pres.r_count() << "\n"
       << summary.str();
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string in;
  std::string out;
  bool todd_coxeter = false;
  bool closure = false;
  bool frattini = false;
  bool full = false;
  bool laws = false;
  long long max_cosets = 0;
  long long closure_cap = 0;
  long long samples = 1000;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& args) {
  std::ifstream in(args.in, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read presentation file " + args.in);
  std::stringstream buffer;
  buffer << in.rdbuf();
  Presentation pres = presentation_from_json(buffer.str());

  bool ok = true;
  json report;
  if (pres.meta.family == Family::affine_uplus) {
    if (args.todd_coxeter || args.closure || args.frattini || args.full)
      throw std::invalid_argument(
          "order certificates apply to the rank-2 families; affine "
          "presentations are verified pair-locally");
    if (!pres.meta.diagram)
      throw std::invalid_argument("affine presentation lacks diagram metadata");
    DynkinDiagram diag =
        build_affine_diagram(pres.meta.diagram->base, pres.meta.diagram->rank);
    VerifyReport rep = verify_affine_presentation(diag, pres);
    FiniteField F(pres.meta.field.p, pres.meta.field.a);
    report["family"] = to_string(pres.meta.family);
    report["q"] = F.q();
    report["relators_checked"] = rep.checked;
    report["failures"] = rep.failures;
    ok = rep.ok();
    report["ok"] = ok;
  } else {
    CertificationOptions opts;
    opts.run_todd_coxeter = args.todd_coxeter || args.full;
    opts.run_closure = args.closure || args.full;
    opts.run_frattini = args.frattini || args.full;
    opts.max_cosets = args.max_cosets > 0 ? args.max_cosets : env_max_cosets();
    opts.closure_cap = args.closure_cap;
    CertificationResult res = certify(pres, opts);
    ok = res.ok;
    report = json::parse(certification_to_json(res));
  }

  if (args.laws) {
    auto F = std::make_shared<FiniteField>(pres.meta.field.p,
                                           pres.meta.field.a);
    ModelKind kind = pres.meta.family == Family::sl3_sylow ? ModelKind::A2
                     : pres.meta.family == Family::abelian_rootgroup
                         ? ModelKind::A1xA1
                         : ModelKind::C2;
    LawReport law =
        commutator_identity_suite(build_model(kind, F), args.samples, args.seed);
    report["laws"] =
        json{{"triples", law.triples}, {"failures", law.failures}};
    ok = ok && law.ok();
    report["ok"] = ok;
  }

  write_output(args.out, report.dump(2) + "\n");
  return ok ? 0 : 1;
}

// ----------------------------------------------------------------- table1

struct TableArgs {
  int l_max = 8;
  int a_max = 4;
  std::string type;     // single-row mode
  int rank = 0;
  int a = 0;
  std::string parity;   // "odd" | "even"
  bool include_even_bcf = false;
  std::string out;
  std::string format = "json";
};

struct TableRow {
  BaseType type;
  int l, a;
  bool odd;
  PairCounts pairs;
  CountBounds bounds;
  long long builder = -1;
  bool agree = false;
  bool gs_ok = false;
  bool ratio_ok = false;
};

TableRow make_row(BaseType type, int l, int a, bool odd) {
  TableRow row{type, l, a, odd, {}, {}, -1, false, false, false};
  row.pairs = count_pairs_by_type(build_affine_diagram(type, l));
  int p = odd ? 3 : 2;
  row.bounds = count_bounds(type, l, a, p);
  if (odd || a >= 2 || row.pairs.c2 == 0) {
    AffineOptions opts;
    opts.allow_small_q = true;
    Presentation pres = present_affine_uplus(build_affine_diagram(type, l),
                                             FiniteField(p, a), opts);
    row.builder = pres.r_count();
  }
  row.agree = row.bounds.consistent &&
              (row.builder < 0 || row.builder == row.bounds.upper);
  // Golod-Shafarevich: upper >= a^2(l+1)^2/4, exact integer arithmetic
  row.gs_ok = 4 * row.bounds.upper >= row.bounds.gs_num;
  // ratio bound: upper <= (25/16) a^2(l+1)^2 + linear term, scaled by 16
  long long linear2 = upper_linear_term_times_2(type, l, a, p);
  row.ratio_ok = 16 * row.bounds.upper <= 25 * row.bounds.gs_num + 8 * linear2;
  return row;
}

json row_json(const TableRow& row) {
  json j;
  j["type"] = to_string(row.type);
  j["l"] = row.l;
  j["a"] = row.a;
  j["parity"] = row.odd ? "odd" : "even";
  j["pairs"] = json{{"A1xA1", row.pairs.a1xa1},
                    {"A2", row.pairs.a2},
                    {"C2", row.pairs.c2}};
  j["upper"] = row.bounds.upper;
  j["pair_formula"] = row.bounds.pair_formula;
  if (row.builder >= 0) j["builder"] = row.builder;
  j["d"] = row.bounds.d;
  j["gs_lower"] =
      std::to_string(row.bounds.gs_num) + "/" + std::to_string(row.bounds.gs_den);
  j["agree"] = row.agree;
  j["gs_ok"] = row.gs_ok;
  j["ratio_ok"] = row.ratio_ok;
  return j;
}

int cmd_table1(const TableArgs& args) {
  std::vector<TableRow> rows;
  auto add_rows = [&](BaseType t, int l) {
    for (int a = 1; a <= args.a_max; ++a) {
      rows.push_back(make_row(t, l, a, true));
      bool parity_free = t == BaseType::A || t == BaseType::D || t == BaseType::E;
      if (parity_free || args.include_even_bcf)
        rows.push_back(make_row(t, l, a, false));
    }
  };

  if (!args.type.empty()) {
    if (args.rank <= 0 || args.a <= 0)
      throw std::invalid_argument("single-row mode needs --rank and --a");
    bool odd = args.parity != "even";
    rows.push_back(make_row(base_type_from_string(args.type), args.rank,
                            args.a, odd));
  } else {
    for (int l = 3; l <= args.l_max; ++l) add_rows(BaseType::A, l);
    for (int l = 3; l <= args.l_max; ++l) add_rows(BaseType::B, l);
    for (int l = 3; l <= args.l_max; ++l) add_rows(BaseType::C, l);
    for (int l = 4; l <= args.l_max; ++l) add_rows(BaseType::D, l);
    for (int l = 6; l <= std::min(args.l_max, 8); ++l) add_rows(BaseType::E, l);
    add_rows(BaseType::F4, 4);
  }

  bool all_ok = true;
  for (const TableRow& row : rows)
    all_ok = all_ok && row.agree && row.gs_ok && row.ratio_ok;

  std::string content;
  if (args.format == "text") {
    std::ostringstream out;
    out << "type l a parity A1xA1 A2 C2 upper pair builder d gs_lower agree\n";
    for (const TableRow& row : rows) {
      out << to_string(row.type) << " " << row.l << " " << row.a << " "
          << (row.odd ? "odd" : "even") << " " << row.pairs.a1xa1 << " "
          << row.pairs.a2 << " " << row.pairs.c2 << " " << row.bounds.upper
          << " " << row.bounds.pair_formula << " " << row.builder << " "
          << row.bounds.d << " " << row.bounds.gs_num << "/"
          << row.bounds.gs_den << " " << (row.agree ? "yes" : "NO") << "\n";
    }
    content = out.str();
  } else {
    json arr = json::array();
    for (const TableRow& row : rows) arr.push_back(row_json(row));
    json top;
    top["rows"] = std::move(arr);
    top["all_agree"] = all_ok;
    content = top.dump(2) + "\n";
  }
  write_output(args.out, content);
  return all_ok ? 0 : 1;
}

// ------------------------------------------------------------------ cover

struct CoverArgs {
  std::string type;
  int rank = 0;
  std::string out;
};

int cmd_cover(const CoverArgs& args) {
  CoverSpec spec = standard_cover(base_type_from_string(args.type), args.rank);
  CoverReport report = check_cover(spec);
  write_output(args.out, cover_to_json(spec, report));
  return report.all() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "presentations of Sylow p-subgroups of Chevalley groups and of U+ of "
      "affine Kac-Moody groups: construction, counting, verification"};
  app.require_subcommand(1);

  PresentArgs present_args;
  CLI::App* present = app.add_subcommand(
      "present", "build a presentation and write it to a file");
  present->add_option("--family", present_args.family,
                      "abelian-rootgroup | sl3-sylow | sp4-sylow | "
                      "sp4-sylow-even | affine-uplus")
      ->required();
  present->add_option("--type", present_args.type, "diagram type A..E, F4");
  present->add_option("--rank", present_args.rank, "base rank l");
  present->add_option("--p", present_args.field.p, "field characteristic");
  present->add_option("--a", present_args.field.a, "field degree");
  present->add_option("--q", present_args.field.q, "field size p^a");
  present->add_option("--out", present_args.out, "output path (default stdout)");
  present->add_option("--format", present_args.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "verify a presentation file against its matrix model");
  verify->add_option("--in", verify_args.in, "presentation JSON file")
      ->required();
  verify->add_option("--out", verify_args.out, "report path (default stdout)");
  verify->add_flag("--todd-coxeter", verify_args.todd_coxeter,
                   "certify the presented group order by coset enumeration");
  verify->add_flag("--closure", verify_args.closure,
                   "certify the matrix group order by closure");
  verify->add_flag("--frattini", verify_args.frattini,
                   "compute the Frattini quotient generator count");
  verify->add_flag("--full", verify_args.full, "all of the above");
  verify->add_flag("--laws", verify_args.laws,
                   "run the commutator-identity law suite");
  verify->add_option("--max-cosets", verify_args.max_cosets,
                     "coset cap (also env CHEV_MAX_COSETS)");
  verify->add_option("--closure-cap", verify_args.closure_cap, "closure cap");
  verify->add_option("--samples", verify_args.samples, "law-suite triples");
  verify->add_option("--seed", verify_args.seed, "law-suite RNG seed");

  TableArgs table_args;
  CLI::App* table = app.add_subcommand(
      "table1", "relation-count table: pair counts, bounds, agreement flags");
  table->add_option("--l-max", table_args.l_max, "largest base rank");
  table->add_option("--a-max", table_args.a_max, "largest field degree");
  table->add_option("--type", table_args.type, "single row: diagram type");
  table->add_option("--rank", table_args.rank, "single row: base rank");
  table->add_option("--a", table_args.a, "single row: field degree");
  table->add_option("--parity", table_args.parity, "single row: odd | even")
      ->check(CLI::IsMember({"odd", "even", ""}));
  table->add_flag("--include-even-bcf", table_args.include_even_bcf,
                  "include p = 2 rows for B, C, F4 (outside Table 1)");
  table->add_option("--out", table_args.out, "output path (default stdout)");
  table->add_option("--format", table_args.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  CoverArgs cover_args;
  CLI::App* cover = app.add_subcommand(
      "cover", "three-part diagram cover and its condition checks");
  cover->add_option("--type", cover_args.type, "B | C | D | E")->required();
  cover->add_option("--rank", cover_args.rank, "rank >= 6 (E: 6, 7, 8)")
      ->required();
  cover->add_option("--out", cover_args.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (present->parsed()) return cmd_present(present_args);
    if (verify->parsed()) return cmd_verify(verify_args);
    if (table->parsed()) return cmd_table1(table_args);
    if (cover->parsed()) return cmd_cover(cover_args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
