#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "instab/json_io.hpp"
#include "instab/selftest.hpp"

namespace {

using instab::Json;

Json read_input(const std::string& arg) {
  std::string text;
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw instab::io_error("cannot open input file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw instab::io_error("cannot read input file: " + arg);
    text = buf.str();
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("input: invalid JSON (") + e.what() + ")");
  }
}

std::vector<long> parse_list(const std::string& csv, const std::string& field) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw std::invalid_argument(field + ": expected a comma-separated integer list");
    }
  }
  if (out.empty()) throw std::invalid_argument(field + ": empty list");
  return out;
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join_vec(const std::vector<long>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

void print_report_text(const instab::InstabilityReport& report) {
  std::cout << "semistable: " << (report.semistable ? "true" : "false") << "\n";
  std::string point = "[";
  for (std::size_t i = 0; i < report.min_norm_point.size(); ++i) {
    if (i) point += ", ";
    point += instab::rat_str(report.min_norm_point[i]);
  }
  std::cout << "min_norm_point: " << point << "]\n";
  std::cout << "mu_sq: " << instab::rat_str(report.mu_sq) << "\n";
  if (report.semistable) return;
  std::cout << "m: " << report.m.get_str() << "\n";
  std::cout << "lambda: " << join_vec(*report.lambda) << "\n";
  std::cout << "parabolic_blocks: [";
  for (std::size_t i = 0; i < report.parabolic->block_sizes.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << report.parabolic->block_sizes[i];
  }
  std::cout << "]\nparabolic_zero_pattern: [";
  for (std::size_t i = 0; i < report.parabolic->zero_pattern.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << "(" << report.parabolic->zero_pattern[i].first << ","
              << report.parabolic->zero_pattern[i].second << ")";
  }
  std::cout << "]\n";
}

struct KempfArgs {
  std::string input;
  std::string rep;
  std::string point;
  int samples = 20;
  int ext_degree = 0;
  std::uint64_t seed = instab::default_seed;
  std::string format = "text";
};

template <class F>
void print_search(const F& field, const instab::ConjugateSearchResult<F>& result,
                  const std::string& format) {
  std::vector<std::vector<std::string>> witness(result.witness.rows);
  for (int i = 0; i < result.witness.rows; ++i)
    for (int k = 0; k < result.witness.cols; ++k)
      witness[i].push_back(field.str(result.witness.at(i, k)));
  if (format == "json") {
    Json j = instab::report_to_json(result.best);
    j["field"] = field.name();
    j["samples"] = result.samples;
    j["best_sample"] = result.best_sample;
    j["witness"] = witness;
    emit_json(j);
    return;
  }
  print_report_text(result.best);
  std::cout << "field: " << field.name() << "\n";
  std::cout << "samples: " << result.samples << "\n";
  std::cout << "best_sample: " << result.best_sample << "\n";
  std::cout << "witness:\n";
  for (const auto& row : witness) {
    std::cout << "  [";
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << row[k];
    }
    std::cout << "]\n";
  }
}

void cmd_kempf(const KempfArgs& args) {
  if (!args.rep.empty() || !args.point.empty()) {
    if (args.rep.empty() || args.point.empty())
      throw std::invalid_argument("rep/point: the conjugate search needs both --rep and --point");
    instab::RepSpec spec = instab::rep_from_json(read_input(args.rep));
    Json coords = read_input(args.point);
    if (!coords.is_array()) throw std::invalid_argument("point: expected a JSON array");
    if (spec.p == 0) {
      instab::RatVec v;
      for (const Json& c : coords) {
        if (c.is_number_integer())
          v.push_back(instab::Rat(c.get<long>()));
        else if (c.is_string())
          v.push_back(instab::parse_rat(c.get<std::string>()));
        else
          throw std::invalid_argument("point: expected integers or \"a/b\" strings");
      }
      instab::RatField field;
      print_search(field, instab::conjugate_instability_search(spec, v, args.samples, args.seed),
                   args.format);
    } else {
      int e = args.ext_degree > 0 ? args.ext_degree : instab::search_extension_degree(spec.p);
      instab::GF field(spec.p, e);
      std::vector<instab::GF::Elem> v;
      for (const Json& c : coords) {
        if (!c.is_number_integer())
          throw std::invalid_argument("point: expected integers mod p");
        v.push_back(field.from_int(c.get<long>()));
      }
      print_search(field,
                   instab::conjugate_instability_search(spec, v, field, args.samples, args.seed),
                   args.format);
    }
    return;
  }
  if (args.input.empty()) throw std::invalid_argument("input: expected a state (or --rep/--point)");
  instab::State state = instab::state_from_json(read_input(args.input));
  instab::InstabilityReport report = instab::instability(state);
  if (args.format == "json")
    emit_json(instab::report_to_json(report));
  else
    print_report_text(report);
}

struct GridArgs {
  std::string p_list = "0";
  std::string n_list;
  std::string l_list;
  bool has_l = false;
  bool with_invariants = false;
  bool table = false;
  std::string format = "text";
};

std::string tl_dim_invariants_cell(long p, long n, long l, bool with_invariants) {
  if (!with_invariants) return "n/a";
  return instab::invariants_dim(static_cast<int>(n), static_cast<int>(l), p).get_str();
}

void cmd_tl_dim(const GridArgs& args) {
  auto ps = parse_list(args.p_list, "p");
  auto ns = parse_list(args.n_list, "n");
  if (args.table) {
    std::cout << "p,n,l,enum,closed_printed,closed_corrected,invariants_dim\n";
    for (long p : ps)
      for (long n : ns) {
        std::vector<long> ls;
        if (args.has_l)
          ls = parse_list(args.l_list, "l");
        else
          for (long l = 0; l <= n * (p - 1); ++l) ls.push_back(l);
        for (long l : ls) {
          instab::TlDimReport rep = instab::tl_dim_report(p, static_cast<int>(n), static_cast<int>(l));
          std::string inv = (args.with_invariants && l >= 1)
                                ? tl_dim_invariants_cell(p, n, l, true)
                                : "n/a";
          std::cout << p << "," << n << "," << l << "," << rep.enumerated.get_str() << ","
                    << rep.closed_printed.get_str() << "," << rep.closed_corrected.get_str() << ","
                    << inv << "\n";
        }
      }
    return;
  }
  if (ps.size() != 1 || ns.size() != 1 || !args.has_l)
    throw std::invalid_argument("p/n/l: single values required without --table");
  long p = ps[0], n = ns[0], l = parse_list(args.l_list, "l").at(0);
  instab::TlDimReport rep = instab::tl_dim_report(p, static_cast<int>(n), static_cast<int>(l));
  std::string inv = (args.with_invariants && l >= 1) ? tl_dim_invariants_cell(p, n, l, true) : "n/a";
  if (args.format == "json") {
    Json j;
    j["p"] = p;
    j["n"] = n;
    j["l"] = l;
    j["enum"] = instab::big_to_json(rep.enumerated);
    j["closed_printed"] = instab::big_to_json(rep.closed_printed);
    j["closed_corrected"] = instab::big_to_json(rep.closed_corrected);
    j["invariants_dim"] =
        (args.with_invariants && l >= 1)
            ? instab::big_to_json(instab::invariants_dim(static_cast<int>(n), static_cast<int>(l), p))
            : Json(nullptr);
    emit_json(j);
    return;
  }
  std::cout << "p=" << p << " n=" << n << " l=" << l << " enum=" << rep.enumerated.get_str()
            << " closed_printed=" << rep.closed_printed.get_str()
            << " closed_corrected=" << rep.closed_corrected.get_str() << " invariants_dim=" << inv
            << "\n";
}

// tensor-word tuple (1-based letters) for a flat word index
std::vector<long> word_of_index(long idx, long n, long l) {
  std::vector<long> word(l);
  for (long t = l - 1; t >= 0; --t) {
    word[t] = idx % n + 1;
    idx /= n;
  }
  return word;
}

void cmd_tl_basis(long p, long n, long l, const std::string& format) {
  instab::TruncatedBasis basis =
      instab::tl_basis(static_cast<int>(n), static_cast<int>(l), p);
  if (format == "json") {
    Json j;
    j["p"] = p;
    j["n"] = n;
    j["l"] = l;
    Json vectors = Json::array();
    for (std::size_t i = 0; i < basis.index.size(); ++i) {
      Json v;
      v["k"] = basis.index[i];
      Json entries = Json::array();
      for (const auto& [idx, coeff] : basis.vectors[i].entries)
        entries.push_back(Json::array({Json(word_of_index(idx, n, l)), coeff}));
      v["entries"] = std::move(entries);
      vectors.push_back(std::move(v));
    }
    j["vectors"] = std::move(vectors);
    emit_json(j);
    return;
  }
  std::cout << "p=" << p << " n=" << n << " l=" << l << " dim=" << basis.index.size() << "\n";
  for (std::size_t i = 0; i < basis.index.size(); ++i) {
    std::cout << "v(";
    for (std::size_t k = 0; k < basis.index[i].size(); ++k) {
      if (k) std::cout << ",";
      std::cout << basis.index[i][k];
    }
    std::cout << "): [";
    for (std::size_t k = 0; k < basis.vectors[i].entries.size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << "[(";
      auto word = word_of_index(basis.vectors[i].entries[k].first, n, l);
      for (std::size_t t = 0; t < word.size(); ++t) {
        if (t) std::cout << ",";
        std::cout << word[t];
      }
      std::cout << ")," << basis.vectors[i].entries[k].second << "]";
    }
    std::cout << "]\n";
  }
}

void cmd_invariants_dim(long p, long n, long l, const std::string& format) {
  instab::BigInt dim = instab::invariants_dim(static_cast<int>(n), static_cast<int>(l), p);
  instab::BigInt comps = instab::binomial_ll(n + l - 1, l);
  if (format == "json") {
    Json j;
    j["p"] = p;
    j["n"] = n;
    j["l"] = l;
    j["invariants_dim"] = instab::big_to_json(dim);
    j["compositions"] = instab::big_to_json(comps);
    emit_json(j);
    return;
  }
  std::cout << "p=" << p << " n=" << n << " l=" << l << " invariants_dim=" << dim.get_str()
            << " compositions=" << comps.get_str() << "\n";
}

void print_bound_text(const instab::BoundResult& result, long p) {
  std::cout << "n_min=" << result.n_min.get_str();
  if (result.witness_l) std::cout << " witness_l=" << *result.witness_l;
  if (result.witness_r) std::cout << " witness_r=" << *result.witness_r;
  const auto& cert = result.certificate;
  if (cert.base == 0) {
    std::cout << " (vacuous range)\n";
    return;
  }
  if (cert.exact) {
    std::cout << " certificate: " << p << "^" << result.n_min.get_str() << " = "
              << cert.p_power.get_str() << " >= " << cert.base.get_str() << "^"
              << cert.exponent.get_str() << " = " << cert.target.get_str();
    if (result.n_min > 0) std::cout << " > " << cert.p_power_prev.get_str();
    std::cout << "\n";
  } else {
    std::cout << " certificate: log-bracketed (precision " << cert.log_precision << ")\n";
  }
}

void emit_bound(const std::string& theorem, const Json& params, const instab::BoundResult& result,
                long p, const std::string& format) {
  if (format == "json") {
    Json j = instab::bound_to_json(result);
    j["theorem"] = theorem;
    for (auto it = params.begin(); it != params.end(); ++it) j[it.key()] = it.value();
    emit_json(j);
    return;
  }
  print_bound_text(result, p);
}

void cmd_sandbox_bundle_out(const instab::SplitBundle& e, const std::string& format) {
  Json j = instab::bundle_to_json(e);
  if (format == "json") {
    emit_json(j);
    return;
  }
  std::cout << "p=" << e.p << " degrees=" << join_vec(e.degrees) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact instability, truncated-power and semistability-bound calculators for GL_n"};
  app.require_subcommand(1);

  // kempf
  KempfArgs kempf_args;
  auto* kempf = app.add_subcommand(
      "kempf", "torus instability report for a state, or a seeded conjugate search");
  kempf->add_option("input", kempf_args.input, "state JSON (inline or a file path)");
  kempf->add_option("--rep", kempf_args.rep, "representation JSON for the conjugate search");
  kempf->add_option("--point", kempf_args.point, "coordinates of the point, as a JSON array");
  kempf->add_option("--samples", kempf_args.samples, "group elements to try (identity included)");
  kempf->add_option("--ext-degree", kempf_args.ext_degree,
                    "field extension degree for finite sampling (0 = automatic)");
  kempf->add_option("--seed", kempf_args.seed, "sampling seed");
  kempf->add_option("--format", kempf_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // tl-dim
  GridArgs tl_args;
  auto* tl_dim = app.add_subcommand("tl-dim", "dimension of the truncated symmetric power");
  tl_dim->add_option("--p", tl_args.p_list, "characteristic (comma list with --table)")->required();
  tl_dim->add_option("--n", tl_args.n_list, "rank (comma list with --table)")->required();
  tl_dim->add_option("--l", tl_args.l_list, "power (comma list with --table)")
      ->each([&tl_args](const std::string&) { tl_args.has_l = true; });
  tl_dim->add_flag("--invariants", tl_args.with_invariants,
                   "also compute the symmetric-invariants dimension");
  tl_dim->add_flag("--table", tl_args.table, "emit a CSV sweep");
  tl_dim->add_option("--format", tl_args.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // tl-basis
  long tb_p = 0, tb_n = 0, tb_l = 0;
  std::string tb_format = "text";
  auto* tl_basis_cmd = app.add_subcommand("tl-basis", "symmetrized basis vectors mod p");
  tl_basis_cmd->add_option("--p", tb_p)->required();
  tl_basis_cmd->add_option("--n", tb_n)->required();
  tl_basis_cmd->add_option("--l", tb_l)->required();
  tl_basis_cmd->add_option("--format", tb_format)->check(CLI::IsMember({"text", "json"}));

  // invariants-dim
  long iv_p = 0, iv_n = 0, iv_l = 0;
  std::string iv_format = "text";
  auto* inv_cmd =
      app.add_subcommand("invariants-dim", "dimension of the symmetric-group invariants");
  inv_cmd->add_option("--p", iv_p)->required();
  inv_cmd->add_option("--n", iv_n)->required();
  inv_cmd->add_option("--l", iv_l)->required();
  inv_cmd->add_option("--format", iv_format)->check(CLI::IsMember({"text", "json"}));

  // rep-degree
  std::string rd_input, rd_format = "text";
  auto* rep_degree_cmd = app.add_subcommand("rep-degree", "degree profile of a representation");
  rep_degree_cmd->add_option("input", rd_input)->required();
  rep_degree_cmd->add_option("--format", rd_format)->check(CLI::IsMember({"text", "json"}));

  // rep-tensor
  std::string rt_a, rt_b;
  auto* rep_tensor_cmd = app.add_subcommand("rep-tensor", "tensor product of two representations");
  rep_tensor_cmd->add_option("first", rt_a)->required();
  rep_tensor_cmd->add_option("second", rt_b)->required();

  // rep-wedge
  std::string rw_input;
  long rw_r = 1;
  auto* rep_wedge_cmd = app.add_subcommand("rep-wedge", "exterior-power lift of a representation");
  rep_wedge_cmd->add_option("input", rw_input)->required();
  rep_wedge_cmd->add_option("--r", rw_r, "exterior power")->required();

  // tl-rep
  long tr_p = 0, tr_n = 0, tr_l = 0;
  auto* tl_rep_cmd =
      app.add_subcommand("tl-rep", "matrix of the truncated symmetric power representation");
  tl_rep_cmd->add_option("--p", tr_p)->required();
  tl_rep_cmd->add_option("--n", tr_n)->required();
  tl_rep_cmd->add_option("--l", tr_l)->required();

  // bound
  auto* bound = app.add_subcommand("bound", "minimal Frobenius-iteration exponents");
  bound->require_subcommand(1);
  struct BoundArgs {
    std::string p = "2", n = "1", m = "1", d = "1", l = "1";
    bool table = false;
    std::string kind;
    std::string format = "text";
  } bound_args;
  auto add_bound_common = [&](CLI::App* sc, bool with_n, bool with_m, bool with_d, bool with_l) {
    sc->add_option("--p", bound_args.p, "characteristic (comma list with --table)")->required();
    if (with_n) sc->add_option("--n", bound_args.n)->required();
    if (with_m) sc->add_option("--m", bound_args.m)->required();
    if (with_d) sc->add_option("--d", bound_args.d)->required();
    if (with_l) sc->add_option("--l", bound_args.l)->required();
    sc->add_flag("--table", bound_args.table, "emit a CSV sweep over comma lists");
    sc->add_option("--format", bound_args.format)->check(CLI::IsMember({"text", "json"}));
  };
  auto* thm31 = bound->add_subcommand("thm31", "single-representation exponent");
  add_bound_common(thm31, false, true, true, false);
  auto* thm32 = bound->add_subcommand("thm32", "structure-group extension exponent");
  add_bound_common(thm32, false, true, true, false);
  auto* thm44 = bound->add_subcommand("thm44", "truncated-power exponent");
  add_bound_common(thm44, true, false, false, true);
  auto* thm54 = bound->add_subcommand("thm54", "Frobenius direct image exponent");
  add_bound_common(thm54, true, true, true, false);
  auto* rank_cmd = bound->add_subcommand("rank", "rank of a functor image");
  rank_cmd->add_option("--kind", bound_args.kind, "tensor, sym or wedge")->required();
  rank_cmd->add_option("--n", bound_args.n)->required();
  rank_cmd->add_option("--d", bound_args.d)->required();
  rank_cmd->add_option("--format", bound_args.format)->check(CLI::IsMember({"text", "json"}));

  // sandbox
  auto* sandbox = app.add_subcommand("sandbox", "split-bundle slope calculators");
  sandbox->require_subcommand(1);
  struct SandboxArgs {
    std::string input;
    std::string with;
    std::string kind;
    long times = 1;
    long l = 1, r = 1;
    std::string format = "text";
  } sb_args;
  auto* sb_slope = sandbox->add_subcommand("slope", "slope of a bundle");
  auto* sb_hn = sandbox->add_subcommand("hn", "slope profile of the canonical filtration");
  auto* sb_frob = sandbox->add_subcommand("frobenius", "Frobenius pullback");
  auto* sb_functor = sandbox->add_subcommand("functor", "apply a standard functor");
  for (CLI::App* sc : {sb_slope, sb_hn, sb_frob, sb_functor}) {
    sc->add_option("--input", sb_args.input, "bundle JSON (inline or a file path)")->required();
    sc->add_option("--format", sb_args.format)->check(CLI::IsMember({"text", "json"}));
  }
  sb_frob->add_option("--times", sb_args.times, "iterations");
  sb_functor->add_option("--kind", sb_args.kind, "tensor-power, sym, wedge, truncated or tensor")
      ->required();
  sb_functor->add_option("--l", sb_args.l, "power for tensor-power/sym/truncated");
  sb_functor->add_option("--r", sb_args.r, "rank for wedge");
  sb_functor->add_option("--with", sb_args.with, "second bundle for --kind tensor");

  // selftest
  auto* selftest = app.add_subcommand("selftest", "run the built-in consistency suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (kempf->parsed()) {
      cmd_kempf(kempf_args);
    } else if (tl_dim->parsed()) {
      cmd_tl_dim(tl_args);
    } else if (tl_basis_cmd->parsed()) {
      cmd_tl_basis(tb_p, tb_n, tb_l, tb_format);
    } else if (inv_cmd->parsed()) {
      cmd_invariants_dim(iv_p, iv_n, iv_l, iv_format);
    } else if (rep_degree_cmd->parsed()) {
      instab::RepSpec spec = instab::rep_from_json(read_input(rd_input));
      instab::DegreeProfile profile = instab::rep_degree(spec);
      if (rd_format == "json") {
        Json j;
        j["d"] = profile.d;
        j["a"] = profile.a;
        j["polynomial"] = profile.is_polynomial;
        emit_json(j);
      } else {
        std::cout << "d=" << profile.d << " a=" << profile.a
                  << " polynomial=" << (profile.is_polynomial ? "true" : "false") << "\n";
      }
    } else if (rep_tensor_cmd->parsed()) {
      instab::RepSpec a = instab::rep_from_json(read_input(rt_a));
      instab::RepSpec b = instab::rep_from_json(read_input(rt_b));
      emit_json(instab::rep_to_json(instab::tensor_product(a, b)));
    } else if (rep_wedge_cmd->parsed()) {
      instab::RepSpec a = instab::rep_from_json(read_input(rw_input));
      emit_json(instab::rep_to_json(instab::wedge_lift(a, static_cast<int>(rw_r))));
    } else if (tl_rep_cmd->parsed()) {
      emit_json(instab::rep_to_json(
          instab::truncated_sym_rep(static_cast<int>(tr_n), tr_p, static_cast<int>(tr_l))));
    } else if (bound->parsed()) {
      auto ps = parse_list(bound_args.p, "p");
      auto ns = parse_list(bound_args.n, "n");
      auto ms = parse_list(bound_args.m, "m");
      auto ds = parse_list(bound_args.d, "d");
      auto ls = parse_list(bound_args.l, "l");
      auto single = [&](const std::vector<long>& v, const std::string& field) {
        if (bound_args.table) return;
        if (v.size() != 1) throw std::invalid_argument(field + ": single value required without --table");
      };
      single(ps, "p");
      single(ns, "n");
      single(ms, "m");
      single(ds, "d");
      single(ls, "l");
      if (thm31->parsed()) {
        if (bound_args.table) {
          std::cout << "p,m,d,n_min\n";
          for (long p : ps)
            for (long m : ms)
              for (long d : ds)
                std::cout << p << "," << m << "," << d << ","
                          << instab::single_rep_bound(p, m, d).n_min.get_str() << "\n";
        } else {
          auto result = instab::single_rep_bound(ps[0], ms[0], ds[0]);
          emit_bound("thm31", Json{{"p", ps[0]}, {"m", ms[0]}, {"d", ds[0]}}, result, ps[0],
                     bound_args.format);
        }
      } else if (thm32->parsed()) {
        if (bound_args.table) {
          std::cout << "p,m,d,n_min,witness_r\n";
          for (long p : ps)
            for (long m : ms)
              for (long d : ds) {
                auto result = instab::extension_bound(p, m, d);
                std::cout << p << "," << m << "," << d << "," << result.n_min.get_str() << ","
                          << (result.witness_r ? std::to_string(*result.witness_r) : "-") << "\n";
              }
        } else {
          auto result = instab::extension_bound(ps[0], ms[0], ds[0]);
          emit_bound("thm32", Json{{"p", ps[0]}, {"m", ms[0]}, {"d", ds[0]}}, result, ps[0],
                     bound_args.format);
        }
      } else if (thm44->parsed()) {
        if (bound_args.table) {
          std::cout << "p,n,l,n_min,witness_r\n";
          for (long p : ps)
            for (long n : ns)
              for (long l : ls) {
                if (l < 1 || l > n * (p - 1)) continue;
                auto result = instab::truncated_power_bound(p, static_cast<int>(n),
                                                            static_cast<int>(l));
                std::cout << p << "," << n << "," << l << "," << result.n_min.get_str() << ","
                          << (result.witness_r ? std::to_string(*result.witness_r) : "-") << "\n";
              }
        } else {
          auto result = instab::truncated_power_bound(ps[0], static_cast<int>(ns[0]),
                                                      static_cast<int>(ls[0]));
          emit_bound("thm44", Json{{"p", ps[0]}, {"n", ns[0]}, {"l", ls[0]}}, result, ps[0],
                     bound_args.format);
        }
      } else if (thm54->parsed()) {
        if (bound_args.table) {
          std::cout << "p,n,m,d,n_min,witness_l,witness_r\n";
          for (long p : ps)
            for (long n : ns)
              for (long m : ms)
                for (long d : ds) {
                  auto result = instab::frobenius_image_bound(p, static_cast<int>(n), m, d);
                  std::cout << p << "," << n << "," << m << "," << d << ","
                            << result.n_min.get_str() << ","
                            << (result.witness_l ? std::to_string(*result.witness_l) : "-") << ","
                            << (result.witness_r ? std::to_string(*result.witness_r) : "-") << "\n";
                }
        } else {
          auto result =
              instab::frobenius_image_bound(ps[0], static_cast<int>(ns[0]), ms[0], ds[0]);
          emit_bound("thm54",
                     Json{{"p", ps[0]}, {"n", ns[0]}, {"m", ms[0]}, {"d", ds[0]}}, result, ps[0],
                     bound_args.format);
        }
      } else if (rank_cmd->parsed()) {
        instab::BigInt rank = instab::functor_rank(bound_args.kind, static_cast<int>(ns[0]),
                                                   static_cast<int>(ds[0]));
        if (bound_args.format == "json") {
          Json j;
          j["kind"] = bound_args.kind;
          j["n"] = ns[0];
          j["d"] = ds[0];
          j["rank"] = instab::big_to_json(rank);
          emit_json(j);
        } else {
          std::cout << "rank=" << rank.get_str() << "\n";
        }
      }
    } else if (sandbox->parsed()) {
      instab::SplitBundle e = instab::bundle_from_json(read_input(sb_args.input));
      if (sb_slope->parsed()) {
        if (sb_args.format == "json") {
          Json j;
          j["slope"] = instab::rat_str(instab::slope(e));
          j["degree"] = instab::bundle_degree(e);
          j["rank"] = instab::bundle_rank(e);
          j["semistable"] = instab::is_semistable(e);
          emit_json(j);
        } else {
          std::cout << "slope = " << instab::rat_str(instab::slope(e)) << " (degree "
                    << instab::bundle_degree(e) << ", rank " << instab::bundle_rank(e)
                    << ", semistable=" << (instab::is_semistable(e) ? "true" : "false") << ")\n";
        }
      } else if (sb_hn->parsed()) {
        auto profile = instab::hn_profile(e);
        if (sb_args.format == "json") {
          Json rows = Json::array();
          for (const auto& [mu, rk] : profile) {
            Json row;
            row["slope"] = instab::rat_str(mu);
            row["rank"] = rk;
            rows.push_back(std::move(row));
          }
          emit_json(Json{{"profile", rows}});
        } else {
          std::cout << "hn:";
          for (const auto& [mu, rk] : profile)
            std::cout << " (slope " << instab::rat_str(mu) << ", rank " << rk << ")";
          std::cout << "\n";
        }
      } else if (sb_frob->parsed()) {
        cmd_sandbox_bundle_out(instab::frobenius_pullback(e, static_cast<int>(sb_args.times)),
                               sb_args.format);
      } else if (sb_functor->parsed()) {
        if (sb_args.kind == "tensor") {
          if (sb_args.with.empty())
            throw std::invalid_argument("with: --kind tensor needs a second bundle");
          instab::SplitBundle f = instab::bundle_from_json(read_input(sb_args.with));
          cmd_sandbox_bundle_out(instab::tensor_bundle(e, f), sb_args.format);
        } else {
          instab::Functor f;
          if (sb_args.kind == "tensor-power")
            f = {instab::Functor::Kind::tensor_power, static_cast<int>(sb_args.l)};
          else if (sb_args.kind == "sym")
            f = {instab::Functor::Kind::sym, static_cast<int>(sb_args.l)};
          else if (sb_args.kind == "wedge")
            f = {instab::Functor::Kind::wedge, static_cast<int>(sb_args.r)};
          else if (sb_args.kind == "truncated")
            f = {instab::Functor::Kind::truncated, static_cast<int>(sb_args.l)};
          else
            throw std::invalid_argument(
                "kind: expected tensor-power, sym, wedge, truncated or tensor");
          cmd_sandbox_bundle_out(instab::apply_functor(e, f), sb_args.format);
        }
      }
    } else if (selftest->parsed()) {
      int failures = instab::run_selftest(std::cout);
      return failures == 0 ? 0 : 1;
    }
  } catch (const instab::budget_error& e) {
    std::cerr << "budget exceeded: " << e.budget() << ": " << e.what() << "\n";
    return 4;
  } catch (const instab::io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
