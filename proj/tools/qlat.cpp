#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qlat/families.hpp"
#include "repro.hpp"
#include "serialize.hpp"

using nlohmann::json;
using namespace qlat;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

/// Aligned two-column rendering of a flat JSON object for --format=table.
void print_table(const json& j) {
  std::size_t w = 0;
  for (auto& [k, v] : j.items()) w = std::max(w, k.size());
  for (auto& [k, v] : j.items()) {
    std::string val = v.is_string() ? v.get<std::string>() : v.dump();
    std::printf("%-*s  %s\n", (int)w, k.c_str(), val.c_str());
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "table")
    print_table(j);
  else
    std::cout << j.dump(2) << "\n";
}

Family load_family(const std::string& path) {
  return Family::from_text(read_file(path));
}

int cmd_bounds(const std::string& theorem, unsigned n, unsigned q, unsigned s,
               unsigned k, unsigned t, unsigned a, unsigned b, bool suboptimal,
               const std::string& format) {
  BoundReport r;
  if (theorem == "1.2") r = optimal_union_bound(n, s, q);
  else if (theorem == "1.3") r = suboptimal_union_bound(n, s, q);
  else if (theorem == "1.4") r = antichain_bound(n, s, q);
  else if (theorem == "1.5")
    r = suboptimal ? suboptimal_antichain_bound(n, n, q) : antichain_bound(n, n, q);
  else if (theorem == "1.6") r = suboptimal_antichain_bound(n, s, q);
  else if (theorem == "conj5.1") r = suboptimal_antichain_bound(n, s, q);
  else if (theorem == "2.1") r = ekr_bound(n, k, t, q);
  else if (theorem == "2.2") r = hm_bound(n, k, q);
  else if (theorem == "2.5") r = cross_sperner_bound(n, a, b, q);
  else if (theorem == "2.6") r = cross_t_bound(n, a, b, t, q);
  else if (theorem == "2.7") r = cross_sharp_bound(n, k, q);
  else throw BadParameters("unknown theorem label " + theorem);
  emit(to_json(r), format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact extremal set theory over the subspace lattice of F_q^n"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "json or table")
      ->check(CLI::IsMember({"json", "table"}));

  // qbinom
  long long qb_m = 0, qb_k = 0;
  unsigned qb_q = 2;
  bool qb_real = false;
  auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [m,k]_q");
  qbinom->add_option("--m", qb_m)->required();
  qbinom->add_option("--k", qb_k)->required();
  qbinom->add_option("--q", qb_q)->required();
  qbinom->add_flag("--real", qb_real, "evaluate the real-m product formula");

  // enum
  unsigned en_n = 0, en_k = 0, en_q = 2;
  bool en_count_only = false;
  std::string en_out;
  auto* enumc = app.add_subcommand("enum", "enumerate the k-subspaces of F_q^n");
  enumc->add_option("--n", en_n)->required();
  enumc->add_option("--k", en_k)->required();
  enumc->add_option("--q", en_q)->required();
  enumc->add_flag("--count-only", en_count_only);
  enumc->add_option("--out", en_out, "write the layer in the family text format");

  // family
  std::string fa_name, fa_anchor, fa_out;
  unsigned fa_n = 0, fa_s = 0, fa_q = 2;
  auto* family = app.add_subcommand("family", "build a named extremal family");
  family->add_option("--name", fa_name)->required()
      ->check(CLI::IsMember({"K", "T", "J", "A", "B"}));
  family->add_option("--n", fa_n)->required();
  family->add_option("--s", fa_s)->required();
  family->add_option("--q", fa_q)->required();
  family->add_option("--anchor", fa_anchor,
                     "family file holding the anchor subspace(s)");
  family->add_option("--out", fa_out)->required();

  // check
  std::string ch_pred, ch_file, ch_file2;
  unsigned ch_s = 0, ch_t = 0;
  auto* check = app.add_subcommand("check", "test a family predicate");
  check->add_option("--pred", ch_pred)->required()
      ->check(CLI::IsMember(
          {"s-union", "t-intersecting", "antichain", "cross-t", "cross-sperner"}));
  check->add_option("--s", ch_s);
  check->add_option("--t", ch_t);
  check->add_option("--file", ch_file)->required();
  check->add_option("--file2", ch_file2);

  // bounds
  std::string bo_theorem;
  unsigned bo_n = 0, bo_q = 2, bo_s = 0, bo_k = 0, bo_t = 1, bo_a = 0, bo_b = 0;
  bool bo_suboptimal = false;
  auto* bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  bounds->add_option("--theorem", bo_theorem)->required()
      ->check(CLI::IsMember({"1.2", "1.3", "1.4", "1.5", "1.6", "2.1", "2.2",
                             "2.5", "2.6", "2.7", "conj5.1"}));
  bounds->add_option("--n", bo_n)->required();
  bounds->add_option("--q", bo_q)->required();
  bounds->add_option("--s", bo_s);
  bounds->add_option("--k", bo_k);
  bounds->add_option("--t", bo_t);
  bounds->add_option("--a", bo_a);
  bounds->add_option("--b", bo_b);
  bounds->add_flag("--suboptimal", bo_suboptimal,
                   "the not-inside-any-optimal-family variant of 1.5");

  // search
  unsigned se_n = 0, se_q = 2, se_s = 0, se_workers = 1;
  bool se_exclude = false, se_all = false, se_naive = false;
  std::string se_out, se_problem;
  auto* search_cmd = app.add_subcommand("search", "extremal family search");
  search_cmd->add_option("problem", se_problem)->required()
      ->check(CLI::IsMember({"max-union", "max-antichain"}));
  search_cmd->add_option("--n", se_n)->required();
  search_cmd->add_option("--q", se_q)->required();
  search_cmd->add_option("--s", se_s)->required();
  search_cmd->add_flag("--exclude-optimal", se_exclude);
  search_cmd->add_flag("--enumerate-all", se_all);
  search_cmd->add_flag("--naive", se_naive, "exhaustive subset cross-check");
  search_cmd->add_option("--workers", se_workers);
  search_cmd->add_option("--out", se_out, "also write the certificate here");

  // verify
  std::string ve_what, ve_mode = "exhaustive";
  unsigned ve_n = 0, ve_k = 0, ve_q = 2, ve_s = 0;
  std::uint64_t ve_trials = 1000, ve_seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "brute-force a lemma");
  verify_cmd->add_option("statement", ve_what)->required()
      ->check(CLI::IsMember({"shadow", "shade", "cross-lemma", "lemma22", "layer"}));
  verify_cmd->add_option("--n", ve_n)->required();
  verify_cmd->add_option("--k", ve_k);
  verify_cmd->add_option("--s", ve_s);
  verify_cmd->add_option("--q", ve_q)->required();
  verify_cmd->add_option("--mode", ve_mode)
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  verify_cmd->add_option("--trials", ve_trials);
  verify_cmd->add_option("--seed", ve_seed);

  // conjecture
  unsigned co_n = 0, co_q = 2, co_d = 1;
  auto* conjecture = app.add_subcommand("conjecture", "odd suboptimal antichain scan");
  conjecture->add_option("--n", co_n)->required();
  conjecture->add_option("--q", co_q)->required();
  conjecture->add_option("--d", co_d)->required();

  // repro
  bool re_quick = false;
  auto* repro_cmd = app.add_subcommand("repro", "run the reproduction suite");
  repro_cmd->add_flag("--quick", re_quick);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*qbinom) {
      json j;
      if (qb_real)
        j["value"] = gaussian_binomial_real((double)qb_m, qb_k, qb_q);
      else
        j["value"] = gaussian_binomial(qb_m, qb_k, qb_q).str();
      emit(j, format);
      return 0;
    }

    if (*enumc) {
      const Field& f = Field::get(en_q);
      json j;
      j["count"] = gaussian_binomial(en_n, en_k, en_q).str();
      if (!en_count_only) {
        Family layer = full_layer(f, en_n, en_k);
        if (!en_out.empty())
          write_file(en_out, layer.to_text());
        else
          j["family"] = layer.to_text();
      }
      emit(j, format);
      return 0;
    }

    if (*family) {
      const Field& f = Field::get(fa_q);
      std::optional<Subspace> a1, a2;
      if (!fa_anchor.empty()) {
        Family anchors = load_family(fa_anchor);
        if (anchors.empty() || anchors.size() > 2)
          throw BadAnchor("anchor file must hold one or two subspaces");
        a1 = anchors.members().front();
        if (anchors.size() == 2) a2 = anchors.members().back();
      }
      Family fam(f, fa_n);
      if (fa_name == "K") fam = build_K(f, fa_n, fa_s, a1);
      else if (fa_name == "T") {
        // odd s takes two anchors, E (a line) then U; even s only U
        if (fa_s % 2 == 1 && a1)
          fam = build_T(f, fa_n, fa_s, a1, a2);
        else
          fam = build_T(f, fa_n, fa_s, {}, a1);
      } else if (fa_name == "J") {
        if (fa_s != 5) throw BadParameters("J is the s = 5 construction");
        fam = build_J(f, fa_n, a1);
      } else if (fa_name == "A") fam = build_A(f, fa_n, fa_s, a1);
      else fam = build_B(f, fa_n, fa_s, a1);
      write_file(fa_out, fam.to_text());
      json j;
      j["name"] = fa_name;
      j["size"] = fam.size();
      j["out"] = fa_out;
      emit(j, format);
      return 0;
    }

    if (*check) {
      Family fam = load_family(ch_file);
      bool ok = false;
      if (ch_pred == "s-union") ok = is_s_union(fam, ch_s);
      else if (ch_pred == "t-intersecting") ok = is_t_intersecting(fam, ch_t);
      else if (ch_pred == "antichain") ok = is_antichain(fam);
      else {
        if (ch_file2.empty()) throw BadParameters("--file2 required for cross predicates");
        Family fam2 = load_family(ch_file2);
        ok = ch_pred == "cross-t" ? is_cross_t_intersecting(fam, fam2, ch_t)
                                  : is_cross_sperner(fam, fam2);
      }
      json j;
      j["pred"] = ch_pred;
      j["ok"] = ok;
      emit(j, format);
      return ok ? 0 : 1;
    }

    if (*bounds)
      return cmd_bounds(bo_theorem, bo_n, bo_q, bo_s, bo_k, bo_t, bo_a, bo_b,
                        bo_suboptimal, format);

    if (*search_cmd) {
      const Field& f = Field::get(se_q);
      search::Options opt;
      opt.enumerate_all = se_all;
      opt.naive = se_naive;
      opt.workers = se_workers;
      search::Certificate cert =
          se_problem == "max-union"
              ? search::max_s_union(f, se_n, se_s, se_exclude, opt)
              : search::max_s_union_antichain(f, se_n, se_s, se_exclude, opt);
      json j = to_json(cert);
      if (!se_out.empty()) write_file(se_out, j.dump(2) + "\n");
      emit(j, format);
      return 0;
    }

    if (*verify_cmd) {
      const Field& f = Field::get(ve_q);
      verify::Mode mode =
          ve_mode == "sample" ? verify::Mode::sample : verify::Mode::exhaustive;
      verify::Report rep;
      if (ve_what == "shadow")
        rep = verify::shadow_theorem(f, ve_n, ve_k, mode, ve_trials, ve_seed);
      else if (ve_what == "shade")
        rep = verify::shade_lemma(f, ve_n, ve_k, mode, ve_trials, ve_seed);
      else if (ve_what == "cross-lemma")
        rep = verify::cross_lemma(f, ve_n, ve_k, ve_trials, ve_seed);
      else if (ve_what == "lemma22")
        rep = verify::lemma22(f, ve_n);
      else
        rep = verify::layer_inequality(f, ve_n, ve_s, ve_trials, ve_seed);
      emit(to_json(rep), format);
      return rep.pass() ? 0 : 1;
    }

    if (*conjecture) {
      auto rep = search::conjecture_scan(Field::get(co_q), co_n, co_d);
      emit(to_json(rep), format);
      return rep.value_matches && rep.witnesses_match_B ? 0 : 1;
    }

    if (*repro_cmd) {
      auto results = repro::run_all(re_quick);
      bool all_ok = true;
      for (const auto& r : results) {
        all_ok = all_ok && r.pass;
        std::printf("[%s] %2d  %-32s %7.2fs%s%s\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.seconds,
                    r.detail.empty() ? "" : "  ", r.detail.c_str());
      }
      std::printf("%s\n", all_ok ? "ALL PASS" : "FAILURES PRESENT");
      return all_ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
