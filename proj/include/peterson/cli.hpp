#pragma once

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>

#include "peterson/format.hpp"
#include "peterson/verify.hpp"

namespace peterson::cli {

// Exit codes: 0 success, 1 verification failure, 2 argument errors.

namespace detail {

inline std::string cartan_str(const DynkinDiagram& d) {
  std::ostringstream os;
  for (int i = 0; i < d.rank; ++i) {
    os << (i == 0 ? "[[" : " [");
    for (int j = 0; j < d.rank; ++j) os << (j ? "," : "") << std::setw(3) << d.cartan[i][j];
    os << (i + 1 == d.rank ? "]]" : "],") << "\n";
  }
  return os.str();
}

inline std::string weight_str(const WeightVec& w) {
  std::string out;
  for (int i = 0; i < w.size(); ++i) {
    if (w.coords[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += (w.coords[i] == 1 ? "" : rat_str(w.coords[i])) + "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

inline nlohmann::json table_entry_json(const TableEntry& e) {
  nlohmann::json j{{"table", e.table},     {"family", std::string(1, e.family)},
                   {"n", e.n},             {"i", e.i},
                   {"j", e.j},             {"pair", e.pair_desc},
                   {"general", rat_str(e.general)}};
  if (e.closed) j["closed"] = rat_str(*e.closed);
  j["status"] = e.asserted ? (e.agree ? "ok" : "MISMATCH") : "flagged";
  return j;
}

inline void print_tables(std::ostream& out, const std::vector<TableEntry>& rows,
                         const std::string& format) {
  auto status = [](const TableEntry& e) {
    return e.asserted ? (e.agree ? "ok" : "MISMATCH") : "flagged";
  };
  if (format == "json") {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& e : rows) a.push_back(table_entry_json(e));
    out << a.dump(2) << "\n";
  } else if (format == "csv") {
    out << "table,family,n,i,j,pair,general,closed,status\n";
    for (const auto& e : rows)
      out << e.table << "," << e.family << "," << e.n << "," << e.i << "," << e.j << ",\""
          << e.pair_desc << "\"," << rat_str(e.general) << ","
          << (e.closed ? rat_str(*e.closed) : "") << "," << status(e) << "\n";
  } else if (format == "latex") {
    out << "\\begin{tabular}{cccccccc}\n"
        << "table & row & $i$ & $j$ & pair & general & closed & status \\\\\n\\hline\n";
    for (const auto& e : rows)
      out << e.table << " & $" << e.family << "_" << e.n << "$ & " << e.i << " & "
          << (e.j ? std::to_string(e.j) : "-") << " & " << e.pair_desc << " & $"
          << rat_str(e.general) << "$ & $" << (e.closed ? rat_str(*e.closed) : "-") << "$ & "
          << status(e) << " \\\\\n";
    out << "\\end{tabular}\n";
  } else {
    out << std::left << std::setw(6) << "table" << std::setw(8) << "row" << std::setw(4) << "i"
        << std::setw(4) << "j" << std::setw(28) << "pair" << std::setw(12) << "general"
        << std::setw(12) << "closed" << "status\n";
    for (const auto& e : rows)
      out << std::left << std::setw(6) << e.table << std::setw(8)
          << (std::string(1, e.family) + std::to_string(e.n)) << std::setw(4) << e.i
          << std::setw(4) << e.j << std::setw(28) << e.pair_desc << std::setw(12)
          << rat_str(e.general) << std::setw(12) << (e.closed ? rat_str(*e.closed) : "-")
          << status(e) << "\n";
  }
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"equivariant Schubert calculus on Peterson varieties"};
  app.require_subcommand(1);

  std::string type, subset_s, word_s, alpha_s, omega_s, cycle_s, format = "text";
  std::vector<std::string> class_specs, coxeter_specs;
  std::string family;
  int max_rank = 0;
  bool p_basis = false;
  std::string suite = "all";

  auto* diagram_cmd = app.add_subcommand("diagram", "Cartan matrix, roots, f_I, |W_I|");
  diagram_cmd->add_option("--type", type, "diagram spec, e.g. B3 or JSON")->required();
  diagram_cmd->add_option("--subset", subset_s, "subset of nodes, e.g. 1,2");

  auto* chev_cmd = app.add_subcommand("chevalley", "divisor cap fundamental class");
  chev_cmd->add_option("--type", type)->required();
  chev_cmd->add_option("--alpha", alpha_s, "node index")->required();
  chev_cmd->add_option("--subset", subset_s, "the subset J")->required();
  chev_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* monk_cmd = app.add_subcommand("monk", "divisor times omega basis element");
  monk_cmd->add_option("--type", type)->required();
  monk_cmd->add_option("--alpha", alpha_s)->required();
  monk_cmd->add_option("--subset", subset_s, "the subset I")->required();
  monk_cmd->add_flag("--p-basis", p_basis, "rewrite for a fixed choice of Coxeter classes");
  monk_cmd->add_option("--coxeter", coxeter_specs,
                       "Coxeter word overrides for --p-basis, e.g. \"2 1\"");
  monk_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* mult_cmd = app.add_subcommand("multiply", "product of omega classes");
  mult_cmd->add_option("--type", type)->required();
  mult_cmd->add_option("--classes", class_specs, "subsets, e.g. --classes 2 1,2")->required();
  mult_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* pair_cmd = app.add_subcommand("pair", "<Omega_I, [P_J]> by iterated capping");
  pair_cmd->add_option("--type", type)->required();
  pair_cmd->add_option("--omega", omega_s, "subset I")->required();
  pair_cmd->add_option("--cycle", cycle_s, "subset J")->required();

  auto* giam_cmd = app.add_subcommand("giambelli", "verify the Coxeter class identity");
  giam_cmd->add_option("--type", type)->required();
  giam_cmd->add_option("--word", word_s, "Coxeter word, e.g. \"1 2\"")->required();

  auto* restrict_cmd = app.add_subcommand("restrict", "fixed-point restriction p_w|_{w_J}");
  restrict_cmd->add_option("--type", type)->required();
  restrict_cmd->add_option("--word", word_s)->required();
  restrict_cmd->add_option("--subset", subset_s)->required();

  auto* tables_cmd = app.add_subcommand("tables", "structure constant tables");
  tables_cmd->add_option("--family", family, "A, B, C or D")->required();
  tables_cmd->add_option("--max-rank", max_rank, "largest rank to emit")->required();
  tables_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json", "latex"}));

  auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
  verify_cmd->add_option("--type", type, "single diagram (default: the standard sweep)");
  verify_cmd->add_option("--suite", suite)->check(
      CLI::IsMember({"all", "ring", "giambelli", "duality", "positivity", "tables"}));
  verify_cmd->add_option("--max-rank", max_rank, "extend the classical families of the sweep");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*diagram_cmd) {
      DynkinDiagram d = build_diagram(type);
      Subset I = subset_s.empty() ? Subset::full(d.rank) : parse_subset(subset_s, d.rank);
      out << d.label << "  (rank " << d.rank << ")\n";
      out << detail::cartan_str(d);
      out << "subset " << subset_str(I) << "\n";
      auto roots = positive_roots(d, I);
      out << "positive roots (" << roots.size() << "):\n";
      for (const auto& r : roots) out << "  " << detail::weight_str(r) << "\n";
      out << "f_I  = " << connection_index(d, I).str() << "\n";
      out << "|W_I| = " << weyl_order(d, I).str() << "\n";
      return 0;
    }

    if (*chev_cmd) {
      DynkinDiagram d = build_diagram(type);
      int a = std::stoi(alpha_s);
      if (a < 1 || a > d.rank) throw std::invalid_argument("--alpha out of range");
      Subset J = parse_subset(subset_s, d.rank);
      ChevalleyCoeffs c = chevalley(d, a - 1, J);
      if (format == "json") {
        HomClass h = cap_divisor(d, a - 1, J);
        out << to_json(h).dump(2) << "\n";
      } else {
        out << chevalley_str(c) << "\n";
      }
      return 0;
    }

    if (*monk_cmd) {
      DynkinDiagram d = build_diagram(type);
      int a = std::stoi(alpha_s);
      if (a < 1 || a > d.rank) throw std::invalid_argument("--alpha out of range");
      Subset I = parse_subset(subset_s, d.rank);
      if (!p_basis) {
        MonkCoeffs m = monk(d, a - 1, I);
        if (format == "json") {
          OmegaExpansion e;
          e.rank = d.rank;
          if (m.bare) {
            e.coeff[m.bare_target.bits] = TPoly(1);
          } else {
            e.coeff[I.bits] = m.diagonal;
            for (const auto& [g, v] : m.up)
              if (v != 0) e.coeff[I.with(g).bits] = TPoly(v);
          }
          out << to_json(e).dump(2) << "\n";
        } else {
          out << monk_str(m) << "\n";
        }
        return 0;
      }
      std::map<uint32_t, WeylWord> choice;
      for (uint32_t m = 0; m < (uint32_t{1} << d.rank); ++m)
        choice[m] = coxeter_elements(d, Subset{m}).front();
      for (const auto& spec : coxeter_specs) {
        WeylWord w = parse_word(spec, d.rank);
        if (!is_coxeter_word(d, w))
          throw std::invalid_argument("--coxeter word is not a Coxeter word: \"" + spec + "\"");
        choice[support(w).bits] = w;
      }
      PBasisMonk rule = monk_p_basis(d, a - 1, I, choice);
      std::vector<std::pair<Subset, TPoly>> terms;
      for (const auto& [k, c] : rule.coeff) terms.emplace_back(Subset{k}, c);
      std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
        int cx = x.first.card(), cy = y.first.card();
        return cx != cy ? cx < cy : x.first.bits < y.first.bits;
      });
      std::string s;
      for (const auto& [k, c] : terms) {
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += coeff_symbol_term(c, "p_{v_" + subset_str(k) + "}");
      }
      out << (s.empty() ? "0" : s) << "  with v_" << subset_str(I) << " = ("
          << word_str(choice[I.bits]) << ")\n";
      return 0;
    }

    if (*mult_cmd) {
      DynkinDiagram d = build_diagram(type);
      PetersonRing ring(d);
      CohClass prod = ring.unit();
      for (const auto& spec : class_specs) prod = prod * ring.omega(parse_subset(spec, d.rank));
      OmegaExpansion e = ring.expand_in_omega(prod);
      if (format == "json")
        out << to_json(e).dump(2) << "\n";
      else
        out << omega_expansion_str(e) << "\n";
      return 0;
    }

    if (*pair_cmd) {
      DynkinDiagram d = build_diagram(type);
      PetersonRing ring(d);
      Subset I = parse_subset(omega_s, d.rank);
      Subset J = parse_subset(cycle_s, d.rank);
      out << integrate(ring, ring.omega(I), HomClass::fundamental(d.rank, J)).str() << "\n";
      return 0;
    }

    if (*giam_cmd) {
      DynkinDiagram d = build_diagram(type);
      WeylWord v = parse_word(word_s, d.rank);
      if (!is_coxeter_word(d, v))
        throw std::invalid_argument("--word is not a Coxeter word (each letter once, reduced)");
      PetersonRing ring(d);
      auto rep = ring.giambelli_check(v);
      Rat m = multiplicity(d, v);
      out << "v = (" << word_str(v) << ")  I = " << subset_str(support(v)) << "\n";
      out << "R(v) = " << rep.reduced_words.str() << "\n";
      out << "p_v = " << rat_str(rep.scale) << " " << omega_symbol(support(v)) << " : "
          << (rep.ok ? "verified at all fixed points" : "FAILED at " + rep.witness.str()) << "\n";
      out << "m(v) = " << rat_str(m) << "\n";
      if (!rep.ok) {
        err << "giambelli identity failed at " << rep.witness.str() << ": lhs " << rep.lhs.str()
            << " rhs " << rep.rhs.str() << "\n";
        return 1;
      }
      return 0;
    }

    if (*restrict_cmd) {
      DynkinDiagram d = build_diagram(type);
      WeylWord w = parse_word(word_s, d.rank);
      Subset J = parse_subset(subset_s, d.rank);
      out << p_restrict(d, w, J).str() << "\n";
      return 0;
    }

    if (*tables_cmd) {
      if (family.size() != 1)
        throw std::invalid_argument("--family must be one of A, B, C, D");
      auto rows = emit_tables(family[0], max_rank);
      detail::print_tables(out, rows, format);
      for (const auto& e : rows)
        if (e.asserted && !e.agree) return 1;
      return 0;
    }

    if (*verify_cmd) {
      std::vector<std::string> suites;
      if (suite == "all")
        suites = {"ring", "giambelli", "duality", "positivity", "tables"};
      else
        suites = {suite};
      std::vector<std::string> sweep =
          type.empty() ? default_sweep(max_rank) : std::vector<std::string>{type};
      bool all_ok = true;
      for (const auto& name : sweep) {
        DynkinDiagram d = build_diagram(name);
        for (const auto& res : run_suites(d, suites)) {
          if (res.ok()) {
            out << "[" << res.suite << "] " << res.diagram << ": ok (" << res.checks
                << " checks)\n";
          } else {
            all_ok = false;
            out << "[" << res.suite << "] " << res.diagram << ": FAILED "
                << res.failures.size() << "/" << res.checks << "\n";
            for (const auto& f : res.failures) out << "    " << f << "\n";
          }
        }
      }
      return all_ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace peterson::cli
