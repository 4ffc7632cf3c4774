// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "mvk/ideals.hpp"
#include "mvk/ktheory.hpp"
#include "mvk/logic.hpp"
#include "mvk/ltb.hpp"
#include "mvk/mv_algebra.hpp"
#include "mvk/semifield.hpp"
#include "mvk/semimodule.hpp"
#include "mvk/semiring.hpp"
#include "mvk/sheaf.hpp"

namespace mvk::cli {

namespace {

struct Globals {
  bool decimal = false;
  unsigned threads = 1;
  std::uint64_t seed = 42;
};

// Labels in finite carriers are exact fraction strings; --decimal reprints
// them through the rational parser.
std::string show_label(const std::string& label, const Globals& g) {
  if (!g.decimal) return label;
  if (label.find_first_not_of("0123456789/-") != std::string::npos) return label;
  return to_decimal(parse_rational(label));
}

std::string show_rational(const Rational& q, const Globals& g) {
  return g.decimal ? to_decimal(q) : to_string(q);
}

AlgebraPtr load_algebra(const std::string& spec, const std::string& file) {
  if (spec.empty() == file.empty())
    throw std::invalid_argument("provide exactly one of --algebra and --algebra-file");
  if (!spec.empty()) return MvAlgebra::parse(spec);
  std::ifstream in(file);
  if (!in) throw ltb::IoError("cannot open " + file);
  return MvAlgebra::read_text(in);
}

std::string label_set(const MvAlgebra& a, const std::vector<std::size_t>& elems,
                      const Globals& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += show_label(a.label(elems[i]), g);
  }
  return out + "}";
}

std::string ring_label_set(const SemiringTable& s, const std::vector<std::size_t>& elems,
                           const Globals& g) {
  std::string out = "{";
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out += ", ";
    out += show_label(s.label(elems[i]), g);
  }
  return out + "}";
}

void print_semiring(const SemiringTable& s, const std::string& name, const Globals& g,
                    std::ostream& out) {
  out << name << ": carrier {";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << (i ? ", " : "") << show_label(s.label(i), g);
  out << "}, zero=" << show_label(s.label(s.zero()), g)
      << ", one=" << show_label(s.label(s.one()), g) << "\n";
  out << "join table:\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < s.size(); ++j)
      out << " " << show_label(s.label(s.join(i, j)), g);
    out << "\n";
  }
  out << "mul table:\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < s.size(); ++j)
      out << " " << show_label(s.label(s.mul(i, j)), g);
    out << "\n";
  }
}

std::pair<std::size_t, std::size_t> parse_dims(const std::string& text) {
  std::size_t sep = text.find_first_of("xX");
  if (sep == std::string::npos || sep == 0 || sep + 1 == text.size())
    throw std::invalid_argument("expected WIDTHxHEIGHT, got '" + text + "'");
  std::size_t w = 0, h = 0;
  try {
    w = std::stoul(text.substr(0, sep));
    h = std::stoul(text.substr(sep + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("expected WIDTHxHEIGHT, got '" + text + "'");
  }
  if (w == 0 || h == 0) throw std::invalid_argument("block dimensions must be positive");
  return {w, h};
}

bool tables_equal(const MvAlgebra& a, const MvAlgebra& b) {
  if (!a.finite() || !b.finite() || a.size() != b.size()) return false;
  if (a.zero_index() != b.zero_index()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.star(x) != b.star(x)) return false;
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.oplus(x, y) != b.oplus(x, y)) return false;
  }
  return true;
}

int run_axioms(const std::string& spec, const std::string& file, unsigned grid,
               const Globals& g, std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  out << "algebra: " << a->describe() << "\n";
  AxiomReport report = check_axioms(*a, grid);
  for (const auto& law : report.laws) {
    out << law.law << ": " << (law.pass ? "pass" : "FAIL") ;
    if (!law.pass) out << "  [" << law.witness << "]";
    out << "\n";
  }
  if (report.all_pass()) {
    out << "all laws pass\n";
    return 0;
  }
  out << report.failure_count() << " law(s) fail\n";
  (void)g;
  return 1;
}

int run_reduct(const std::string& spec, const std::string& file, const Globals& g,
               std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  out << "algebra: " << a->describe() << "\n";
  auto [vo, we] = reducts(*a);
  print_semiring(*vo, "join/odot reduct", g, out);
  print_semiring(*we, "meet/oplus reduct", g, out);
  out << "star is a semiring isomorphism between the reducts\n";
  return 0;
}

int run_spec(const std::string& spec, const std::string& file, const std::string& which,
             const Globals& g, std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  out << "algebra: " << a->describe() << "\n";
  if (which == "mv") {
    Spectra sp = spectra(a);
    out << "proper ideals: " << sp.proper_ideals.size() << "\n";
    for (std::size_t i = 0; i < sp.proper_ideals.size(); ++i)
      out << "  I" << i << " = " << label_set(*a, sp.proper_ideals[i].elems, g) << "\n";
    out << "primes:";
    for (auto id : sp.prime_ids) out << " I" << id;
    out << "\nmaximal:";
    for (auto id : sp.maximal_ids) out << " I" << id;
    out << "\nradical: " << label_set(*a, sp.radical, g) << "\n";
    for (std::size_t x = 0; x < a->size(); ++x) {
      out << "U(" << show_label(a->label(x), g) << ") = {";
      const auto& open = sp.basic_open[x];
      for (std::size_t i = 0; i < open.size(); ++i)
        out << (i ? ", " : "") << "I" << sp.prime_ids[open[i]];
      out << "}\n";
    }
    return 0;
  }
  auto [vo, we] = reducts(*a);
  RSpec rs = r_spec(vo);
  out << "semiring: join/odot reduct, " << vo->size() << " elements\n";
  out << "ideals (improper included): " << rs.ideals.size() << "\n";
  for (std::size_t i = 0; i < rs.ideals.size(); ++i)
    out << "  J" << i << " = " << ring_label_set(*vo, rs.ideals[i], g) << "\n";
  out << "primes:";
  for (auto id : rs.prime_ids) out << " J" << id;
  out << "\n";
  for (std::size_t x = 0; x < vo->size(); ++x) {
    out << "U(" << show_label(vo->label(x), g) << ") = {";
    const auto& open = rs.basic_open[x];
    for (std::size_t i = 0; i < open.size(); ++i)
      out << (i ? ", " : "") << "J" << rs.prime_ids[open[i]];
    out << "}\n";
  }
  return 0;
}

int run_gamma(long unit, const std::string& eval, const Globals& g, std::ostream& out) {
  MinPlusSemifield f = lgroup_semifield_bridge(mpz_class(unit));
  AlgebraPtr gamma_alg = f.gamma_truncate();
  AlgebraPtr chain = MvAlgebra::chain(unsigned(unit));
  out << "u = " << unit << "\n";
  out << "Gamma carrier: {";
  for (std::size_t i = 0; i < gamma_alg->size(); ++i)
    out << (i ? ", " : "") << show_label(gamma_alg->label(i), g);
  out << "}\n";
  bool match = tables_equal(*gamma_alg, *chain);
  out << "tables match chain:" << unit << ": " << (match ? "yes" : "NO") << "\n";
  if (!eval.empty()) {
    ZTop v = (eval == "top" || eval == "T") ? ZTop::infinity() : ZTop::of(mpz_class(eval));
    out << "gamma(" << to_string(v) << ") = " << f.gamma(v) << "\n";
  }
  return match ? 0 : 1;
}

int run_matrix(const std::string& spec, const std::string& file, unsigned n,
               const Globals& g, std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  auto [vo, we] = reducts(*a);
  std::size_t cells = std::size_t(n) * n;
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    if (total > 1'000'000 / vo->size())
      throw std::length_error("idempotent scan above 10^6 candidates");
    total *= vo->size();
  }
  out << "algebra: " << a->describe() << ", scanning " << n << "x" << n
      << " matrices over the join/odot reduct\n";
  out << "candidates: " << total << "\n";
  std::vector<std::string> found;
  for (std::size_t ord = 0; ord < total; ++ord) {
    std::vector<std::size_t> entries(cells);
    std::size_t rem = ord;
    for (std::size_t i = cells; i-- > 0;) {
      entries[i] = rem % vo->size();
      rem /= vo->size();
    }
    Matrix m(vo, n, n, std::move(entries));
    if (is_idempotent(m)) found.push_back(to_string(m));
  }
  out << "idempotent: " << found.size() << "\n";
  for (const auto& s : found) out << s << "\n";
  (void)g;
  return 0;
}

int run_strong(const std::string& spec, const std::string& file,
               const std::string& reduct_name, const std::string& module_file,
               const Globals& g, std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  auto [vo, we] = reducts(*a);
  SemiringPtr reduct = reduct_name == "we" ? we : vo;
  FiniteSemimodule regular = regular_semimodule(reduct);
  FiniteSemimodule module = regular;
  if (!module_file.empty()) {
    std::ifstream in(module_file);
    if (!in) throw ltb::IoError("cannot open " + module_file);
    std::vector<std::size_t> subset;
    std::string word;
    while (in >> word) {
      bool hit = false;
      for (std::size_t i = 0; i < reduct->size(); ++i)
        if (reduct->label(i) == word) {
          subset.push_back(i);
          hit = true;
          break;
        }
      if (!hit) throw std::invalid_argument("label '" + word + "' not in the carrier");
    }
    module = submodule(regular, std::move(subset));
  }
  out << "algebra: " << a->describe() << ", reduct "
      << (reduct_name == "we" ? "meet/oplus" : "join/odot") << ", module size "
      << module.size() << "\n";
  StrongnessResult r = is_strong(*a, reduct, module);
  if (r.strong) {
    out << "strong\n";
    return 0;
  }
  out << "not strong: witness a=" << show_label(reduct->label(r.a), g)
      << ", b=" << show_label(reduct->label(r.b), g)
      << ", x=" << show_label(module.label(r.x), g) << "\n";
  return 1;
}

int run_taut(unsigned chain, const std::string& text, const Globals& g,
             std::ostream& out) {
  FormulaPtr f = parse_formula(text);
  TautologyResult r = is_tautology_on_chain(f, chain, 10'000'000, g.threads);
  if (r.tautology) {
    out << "tautology on chain(" << chain << ")\n";
    return 0;
  }
  AlgebraPtr alg = MvAlgebra::chain(chain);
  out << "falsified on chain(" << chain << "):";
  bool first = true;
  for (const auto& [var, idx] : r.witness) {
    out << (first ? " " : ", ") << "x" << var << "=" << show_label(alg->label(idx), g);
    first = false;
  }
  out << "\n";
  return 1;
}

int run_k0(const std::string& spec, const std::string& file, unsigned max_dim,
           const std::string& report, const Globals& g, std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  auto [vo, we] = reducts(*a);
  ProjEnumeration e = enumerate_projectives(vo, max_dim);
  if (report == "csv") {
    out << k0_report_csv(e);
    return 0;
  }
  out << "semiring: join/odot reduct of " << a->describe() << "\n";
  out << "projective classes (dim <= " << max_dim << "): " << e.classes.size() << "\n";
  for (const auto& c : e.classes)
    out << "class " << c.id << ": dim " << c.dim << ", rep " << to_string(c.rep)
        << ", members " << c.members.size() << "\n";
  out << "sum table:\n";
  for (std::size_t i = 0; i < e.classes.size(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < e.classes.size(); ++j) {
      out << " ";
      if (e.sum[i][j])
        out << *e.sum[i][j];
      else
        out << "?";
    }
    out << "\n";
  }
  out << "sum closed within cap: " << (e.sum_closed ? "yes" : "no") << "\n";
  (void)g;
  return 0;
}

int run_sections(const std::string& spec, const std::string& file, const Globals& g,
                 std::ostream& out) {
  AlgebraPtr a = load_algebra(spec, file);
  MvSheafRecord rec = mv_global_sections(a);
  const GlobalSections& gs = rec.sections;
  out << "algebra: " << a->describe() << "\n";
  out << "semiring primes: " << gs.spec.prime_ids.size() << "\n";
  bool all_local = true;
  for (std::size_t p = 0; p < gs.stalks.size(); ++p) {
    const Localization& st = gs.stalks[p];
    Recognition stalk_mv = recognize_mv_semiring(*st.table, st.table->size());
    all_local = all_local && gs.stalk_local[p];
    out << "stalk at P" << p << " " << ring_label_set(*gs.base, st.prime, g) << ": size "
        << st.table->size() << ", local " << (gs.stalk_local[p] ? "yes" : "NO")
        << ", MV-semiring " << (stalk_mv.ok ? "yes" : "no") << "\n";
  }
  out << "sections: " << gs.sections.size() << "\n";
  out << "phi injective: " << (gs.phi_injective ? "yes" : "no") << "\n";
  out << "phi surjective: " << (gs.phi_surjective ? "yes" : "no") << "\n";
  out << "phi homomorphism: " << (gs.phi_homomorphism ? "yes" : "no") << "\n";
  out << "section ring MV recognition: " << (rec.recognition.ok ? "yes" : "no") << "\n";
  out << "transported tables match: " << (rec.tables_match ? "yes" : "no") << "\n";
  bool pass = all_local && gs.phi_injective && gs.phi_surjective &&
              gs.phi_homomorphism && rec.recognition.ok && rec.tables_match;
  return pass ? 0 : 1;
}

int run_compress(const std::string& block, const std::string& target,
                 const std::string& input, const std::string& output, const Globals& g,
                 std::ostream& out) {
  auto [a, b] = parse_dims(block);
  auto [c, d] = parse_dims(target);
  ltb::Raster r = ltb::read_pnm_file(input);
  ltb::LtbFile f = ltb::compress(r, a, b, c, d, g.threads);
  f.write_file(output);
  out << "input: " << r.width << "x" << r.height << ", " << r.channels
      << " channel(s)\n";
  out << "rho = " << show_rational(f.rho(), g) << "\n";
  out << "payload: " << f.payload.size() << " bytes\n";
  out << "wrote " << output << "\n";
  return 0;
}

int run_decompress(const std::string& input, const std::string& output, const Globals& g,
                   std::ostream& out) {
  ltb::LtbFile f = ltb::LtbFile::read_file(input);
  ltb::Raster r = ltb::decompress(f, g.threads);
  ltb::write_pnm_file(r, output);
  out << "output: " << r.width << "x" << r.height << ", " << r.channels
      << " channel(s)\n";
  out << "rho = " << show_rational(f.rho(), g) << "\n";
  out << "wrote " << output << "\n";
  return 0;
}

bool vec_leq(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

int run_roundtrip(const std::string& block, const std::string& target, unsigned trials,
                  const std::string& input, const Globals& g, std::ostream& out) {
  auto [a, b] = parse_dims(block);
  auto [c, d] = parse_dims(target);
  ltb::Raster r = ltb::read_pnm_file(input);
  ltb::Raster first = ltb::reconstruct_exact(r, a, b, c, d, g.threads);
  ltb::Raster second = ltb::reconstruct_exact(first, a, b, c, d, g.threads);
  bool lossless = second.same_pixels(first);
  double db = ltb::psnr(r, first);

  std::size_t m = a * b, n = c * d;
  ltb::BasisMatrix basis(m, n);
  RationalSampler sampler(g.seed);
  unsigned ok = 0;
  for (unsigned t = 0; t < trials; ++t) {
    auto f = sampler.vector(m);
    auto h = ltb::lt_forward(f, basis);
    auto back = ltb::lt_residual(h, basis);
    bool pass = vec_leq(f, back) && ltb::lt_forward(back, basis) == h;
    auto grand = sampler.vector(n);
    auto lam = ltb::lt_residual(grand, basis);
    pass = pass && ltb::lt_residual(ltb::lt_forward(lam, basis), basis) == lam;
    if (pass) ++ok;
  }

  Rational rho = make_rational(long(n), long(m));
  out << "rho = " << show_rational(rho, g) << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", db);
  out << "psnr_first = " << buf << " dB\n";
  out << "second_pass_lossless = " << (lossless ? "yes" : "no") << "\n";
  out << "residuation_trials = " << ok;
  if (ok != trials) out << " of " << trials;
  out << " pass (m=" << m << ", n=" << n << ", seed=" << g.seed << ")\n";
  return (lossless && ok == trials) ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite MV-algebra kernel: semiring reducts, spectra, semimodules, "
               "K-theory, sheaf sections and the block transform codec"};
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--decimal", g.decimal, "print numbers as decimals (default: exact fractions)");
  app.add_option("--threads", g.threads, "worker threads for scans and the codec")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "seed for randomized property trials");

  int rc = 0;

  // mv family
  auto* mv = app.add_subcommand("mv", "algebra-level reports");
  mv->require_subcommand(1);
  mv->fallthrough();

  std::string ax_spec, ax_file;
  unsigned ax_grid = 10;
  auto* ax = mv->add_subcommand("axioms", "check the defining laws of an algebra");
  ax->fallthrough();
  ax->add_option("--algebra", ax_spec, "algebra spec: chain:K, product:...,..., unit");
  ax->add_option("--algebra-file", ax_file, "text file holding the algebra");
  ax->add_option("--grid", ax_grid, "sample grid density for the unit interval");
  ax->callback([&] { rc = run_axioms(ax_spec, ax_file, ax_grid, g, out); });

  std::string rd_spec, rd_file;
  auto* rd = mv->add_subcommand("reduct", "print the two semiring reducts");
  rd->fallthrough();
  rd->add_option("--algebra", rd_spec, "algebra spec");
  rd->add_option("--algebra-file", rd_file, "text file holding the algebra");
  rd->callback([&] { rc = run_reduct(rd_spec, rd_file, g, out); });

  std::string sp_spec, sp_file, sp_which = "mv";
  auto* sp = mv->add_subcommand("spec", "ideals and the prime spectrum");
  sp->fallthrough();
  sp->add_option("--algebra", sp_spec, "algebra spec");
  sp->add_option("--algebra-file", sp_file, "text file holding the algebra");
  sp->add_option("--which", sp_which, "mv: MV-ideals; semiring: reduct ideals")
      ->check(CLI::IsMember({"mv", "semiring"}));
  sp->callback([&] { rc = run_spec(sp_spec, sp_file, sp_which, g, out); });

  long gm_unit = 1;
  std::string gm_eval;
  auto* gm = mv->add_subcommand("gamma", "truncate the min-plus semifield to a chain");
  gm->fallthrough();
  gm->add_option("--unit", gm_unit, "the positive unit u")->required();
  gm->add_option("--eval", gm_eval, "evaluate gamma at an integer or 'top'");
  gm->callback([&] { rc = run_gamma(gm_unit, gm_eval, g, out); });

  std::string mx_spec, mx_file;
  unsigned mx_n = 2;
  auto* mx = mv->add_subcommand("matrix", "enumerate idempotent matrices over the reduct");
  mx->fallthrough();
  mx->add_option("--algebra", mx_spec, "algebra spec");
  mx->add_option("--algebra-file", mx_file, "text file holding the algebra");
  mx->add_option("--idempotent-scan", mx_n, "matrix dimension to scan")->required();
  mx->callback([&] { rc = run_matrix(mx_spec, mx_file, mx_n, g, out); });

  std::string st_spec, st_file, st_reduct = "vo", st_module;
  auto* st = mv->add_subcommand("strong", "strongness of a semimodule over the reduct");
  st->fallthrough();
  st->add_option("--algebra", st_spec, "algebra spec");
  st->add_option("--algebra-file", st_file, "text file holding the algebra");
  st->add_option("--reduct", st_reduct, "vo: join/odot (default); we: meet/oplus")
      ->check(CLI::IsMember({"vo", "we"}));
  st->add_option("--module", st_module,
                 "file of carrier labels forming the submodule (default: the whole carrier)");
  st->callback([&] { rc = run_strong(st_spec, st_file, st_reduct, st_module, g, out); });

  // logic family
  auto* logic = app.add_subcommand("logic", "propositional logic over finite chains");
  logic->require_subcommand(1);
  logic->fallthrough();

  unsigned lt_chain = 1;
  std::string lt_formula;
  auto* lt = logic->add_subcommand("taut", "exhaustive tautology check on a chain");
  lt->fallthrough();
  lt->add_option("--chain", lt_chain, "chain order K (carrier size K+1)")->required();
  lt->add_option("formula", lt_formula, "formula over ~, -> and x1, x2, ...")->required();
  lt->callback([&] { rc = run_taut(lt_chain, lt_formula, g, out); });

  // k0 family
  auto* k0 = app.add_subcommand("k0", "projective classes and the Grothendieck group");
  k0->require_subcommand(1);
  k0->fallthrough();

  std::string k0_spec, k0_file, k0_report;
  unsigned k0_dim = 2;
  auto* k0e = k0->add_subcommand("enumerate", "enumerate projective classes");
  k0e->fallthrough();
  k0e->add_option("--algebra", k0_spec, "algebra spec");
  k0e->add_option("--algebra-file", k0_file, "text file holding the algebra");
  k0e->add_option("--max-dim", k0_dim, "largest matrix dimension")->required();
  k0e->add_option("--report", k0_report, "csv: machine-readable report")
      ->check(CLI::IsMember({"csv"}));
  k0e->callback([&] { rc = run_k0(k0_spec, k0_file, k0_dim, k0_report, g, out); });

  // sheaf family
  auto* sheaf = app.add_subcommand("sheaf", "stalks and global sections");
  sheaf->require_subcommand(1);
  sheaf->fallthrough();

  std::string sh_spec, sh_file;
  auto* sh = sheaf->add_subcommand("sections", "localizations and the section ring");
  sh->fallthrough();
  sh->add_option("--algebra", sh_spec, "algebra spec");
  sh->add_option("--algebra-file", sh_file, "text file holding the algebra");
  sh->callback([&] { rc = run_sections(sh_spec, sh_file, g, out); });

  // ltb family
  auto* lf = app.add_subcommand("ltb", "block transform image codec");
  lf->require_subcommand(1);
  lf->fallthrough();

  std::string c_block, c_target, c_in, c_out;
  auto* lc = lf->add_subcommand("compress", "forward transform into a container");
  lc->fallthrough();
  lc->add_option("--block", c_block, "source block WIDTHxHEIGHT")->required();
  lc->add_option("--target", c_target, "coefficient block WIDTHxHEIGHT")->required();
  lc->add_option("input", c_in, "input image (P2/P3/P5/P6)")->required();
  lc->add_option("output", c_out, "output container")->required();
  lc->callback([&] { rc = run_compress(c_block, c_target, c_in, c_out, g, out); });

  std::string d_in, d_out;
  auto* ld = lf->add_subcommand("decompress", "residual transform back to an image");
  ld->fallthrough();
  ld->add_option("input", d_in, "input container")->required();
  ld->add_option("output", d_out, "output image")->required();
  ld->callback([&] { rc = run_decompress(d_in, d_out, g, out); });

  std::string r_block, r_target, r_in;
  unsigned r_trials = 100;
  auto* lr = lf->add_subcommand("roundtrip", "exact-path roundtrip and property report");
  lr->fallthrough();
  lr->add_option("--block", r_block, "source block WIDTHxHEIGHT")->required();
  lr->add_option("--target", r_target, "coefficient block WIDTHxHEIGHT")->required();
  lr->add_option("--trials", r_trials, "random residuation trials");
  lr->add_option("input", r_in, "input image")->required();
  lr->callback([&] { rc = run_roundtrip(r_block, r_target, r_trials, r_in, g, out); });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("mvk");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ltb::IoError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const LawViolation& e) {
    err << "law violation: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    err << "size cap exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}

}  // namespace mvk::cli
