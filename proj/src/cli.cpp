#include "cmult/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "cmult/errors.hpp"
#include "cmult/family.hpp"
#include "cmult/number_theory.hpp"
#include "cmult/report_io.hpp"
#include "cmult/sym_alt.hpp"

namespace cmult::cli {

namespace {

void emit(std::ostream& out, const Json& envelope) { out << envelope.dump() << '\n'; }

const char* kind_name(GroupKind kind) { return kind == GroupKind::Sym ? "sym" : "alt"; }

PermGroup load_group(const OracleOptions& opts) {
  const int sources = int(opts.gens_file.has_value()) + int(opts.psl2.has_value()) + int(opts.sym.has_value()) +
                      int(opts.alt.has_value());
  if (sources != 1) {
    throw PreconditionError("oracle needs exactly one of --gens, --psl2, --sym, --alt");
  }
  if (opts.psl2) return psl2_group(*opts.psl2, opts.cap);
  if (opts.sym) return symmetric_group(*opts.sym, opts.cap);
  if (opts.alt) return alternating_group(*opts.alt, opts.cap);

  std::ifstream in(*opts.gens_file);
  if (!in) throw PreconditionError("cannot open generator file '" + *opts.gens_file + "'");
  GeneratorSet gs = parse_generators(in, opts.degree);
  PermGroup g = close_group(gs.degree, gs.generators, opts.cap);
  g.set_name(*opts.gens_file);
  return g;
}

Permutation select_element(const OracleOptions& opts, const PermGroup& g) {
  if (opts.element_index) {
    if (*opts.element_index >= g.order()) {
      throw PreconditionError("element index " + std::to_string(*opts.element_index) + " out of range (order " +
                              std::to_string(g.order()) + ")");
    }
    return g.elements()[*opts.element_index];
  }
  return Permutation::from_cycles(g.degree(), parse_cycles(*opts.element_cycles, 1));
}

const char* action_name(OracleAction a) {
  switch (a) {
    case OracleAction::Classes:
      return "classes";
    case OracleAction::Report:
      return "report";
    case OracleAction::Power:
      break;
  }
  return "power";
}

Json power_row(const PermGroup& g, const Permutation& x) {
  Json row = Json::object();
  row["element"] = x.to_cycle_string();
  row["element_index"] = *g.index_of(x);
  const Json pc = to_json(power_conjugacy(g, x));
  for (const auto& [key, value] : pc.items()) row[key] = value;
  row["centralizer_order"] = std::to_string(centralizer_order_of(g, x));
  return row;
}

}  // namespace

// --- scan --------------------------------------------------------------------

void cmd_scan(const ScanOptions& opts, std::ostream& out) {
  if (opts.kind == GroupKind::Oracle) throw PreconditionError("scan group must be sym or alt");
  if (opts.n_from > opts.n_to) {
    throw PreconditionError("empty range " + std::to_string(opts.n_from) + ".." + std::to_string(opts.n_to));
  }
  if (opts.n_to > kScanGuard && !opts.override_range) {
    throw PreconditionError("n_to = " + std::to_string(opts.n_to) + " exceeds the guard of " +
                            std::to_string(kScanGuard) + "; pass --override-range to proceed");
  }
  if (opts.format == Format::Csv) out << "n,max_multiplicity,argmax_sizes,class_count\n";
  for (std::uint64_t n = opts.n_from; n <= opts.n_to; ++n) {
    const MultiplicityReport r = multiplicity_report(opts.kind, n);
    if (opts.format == Format::Csv) {
      out << csv_row({std::to_string(n), std::to_string(r.max_multiplicity), join_decimals(r.argmax_sizes, ';'),
                      std::to_string(r.class_count())})
          << '\n';
    } else {
      Json params = Json::object();
      params["group"] = kind_name(opts.kind);
      params["n"] = n;
      emit(out, make_envelope("scan", std::move(params), to_json(r)));
    }
    out.flush();
  }
}

// --- family ------------------------------------------------------------------

void cmd_family(const FamilyOptions& opts, std::ostream& out) {
  const FamilyParams params = family_params(opts.multiplicity);

  if (!opts.n) {
    const auto p = build_family(params.k, Branch::P);
    const auto pp = build_family(params.k, Branch::PPrime);
    const auto vp = verify_family(p);
    const auto vpp = verify_family(pp);
    if (opts.format == Format::Csv) {
      out << "M,k,min_even_n,min_odd_n,all_n,verified\n";
      out << csv_row({std::to_string(params.multiplicity), std::to_string(params.k),
                      decimal(params.thresholds.min_even_n), decimal(params.thresholds.min_odd_n),
                      decimal(params.thresholds.all_n()),
                      vp.all_passed() && vpp.all_passed() ? "true" : "false"})
          << '\n';
      return;
    }
    Json jparams = Json::object();
    jparams["M"] = opts.multiplicity;
    jparams["n"] = nullptr;
    Json payload = Json::object();
    payload["k"] = params.k;
    payload["thresholds"] = to_json(params.thresholds);
    payload["family_size_P"] = decimal(family_size(params.k));
    payload["family_size_P_prime"] = decimal(family_size(params.k + 1));
    payload["centralizer_P"] = decimal(family_centralizer(params.k));
    payload["centralizer_P_prime"] = decimal(family_centralizer(params.k + 1));
    payload["member_count_P"] = p.size();
    payload["member_count_P_prime"] = pp.size();
    Json verification = Json::object();
    verification["P"] = to_json(vp);
    verification["P_prime"] = to_json(vpp);
    payload["verification"] = std::move(verification);
    emit(out, make_envelope("family", std::move(jparams), std::move(payload)));
    return;
  }

  const std::uint64_t n = *opts.n;
  const ExtendedFamily ext = extend_family(n, opts.multiplicity);
  const FamilyVerification verification = verify_family(ext.members, n);
  const std::vector<ClassRecord> classes = equal_class_family(n, opts.multiplicity);

  if (opts.format == Format::Csv) {
    out << "word,partition,centralizer,class_size\n";
    for (std::size_t i = 0; i < ext.members.size(); ++i) {
      out << csv_row({ext.members[i].word_string(), join_parts(ext.partitions[i]),
                      decimal(centralizer_order(ext.partitions[i])), decimal(classes[i].class_size)})
          << '\n';
    }
    return;
  }

  Json jparams = Json::object();
  jparams["M"] = opts.multiplicity;
  jparams["n"] = n;
  Json payload = Json::object();
  payload["k"] = ext.params.k;
  payload["thresholds"] = to_json(ext.params.thresholds);
  payload["branch"] = ext.branch == Branch::P ? "P" : "P_prime";
  payload["leading_part"] = ext.leading_part;
  payload["class_count"] = classes.size();
  payload["common_centralizer"] = decimal(ext.common_centralizer);
  payload["common_class_size"] = decimal(classes.front().class_size);
  Json members = Json::array();
  for (std::size_t i = 0; i < ext.members.size(); ++i) {
    Json m = to_json(ext.members[i]);
    Json lifted = Json::array();
    for (Part part : ext.partitions[i].parts()) lifted.push_back(part);
    m["alt_class_partition"] = std::move(lifted);
    members.push_back(std::move(m));
  }
  payload["members"] = std::move(members);
  payload["verification"] = to_json(verification);
  emit(out, make_envelope("family", std::move(jparams), std::move(payload)));
}

// --- oracle ------------------------------------------------------------------

void cmd_oracle(const OracleOptions& opts, std::ostream& out) {
  const PermGroup g = load_group(opts);
  Json params = Json::object();
  params["group"] = g.name();
  params["action"] = action_name(opts.action);
  params["cap"] = opts.cap;

  Json payload = Json::object();
  payload["group"] = g.name();
  payload["degree"] = g.degree();
  payload["order"] = std::to_string(g.order());

  switch (opts.action) {
    case OracleAction::Classes: {
      const auto classes = conjugacy_classes(g);
      if (opts.format == Format::Csv) {
        out << "size,representative,element_order,centralizer_order\n";
        for (const auto& c : classes) {
          const auto& rep = std::get<Permutation>(c.rep);
          out << csv_row({decimal(c.class_size), rep.to_cycle_string(), std::to_string(rep.order()),
                          std::to_string(g.order() / c.class_size.get_ui())})
              << '\n';
        }
        return;
      }
      Json rows = Json::array();
      for (const auto& c : classes) {
        const auto& rep = std::get<Permutation>(c.rep);
        Json row = Json::object();
        row["size"] = decimal(c.class_size);
        row["representative"] = rep.to_cycle_string();
        row["element_order"] = rep.order();
        row["centralizer_order"] = std::to_string(g.order() / c.class_size.get_ui());
        rows.push_back(std::move(row));
      }
      payload["classes"] = std::move(rows);
      break;
    }
    case OracleAction::Report: {
      const MultiplicityReport r = multiplicity_report_oracle(g);
      if (opts.format == Format::Csv) {
        out << "group,max_multiplicity,argmax_sizes,class_count\n";
        out << csv_row({g.name(), std::to_string(r.max_multiplicity), join_decimals(r.argmax_sizes, ';'),
                        std::to_string(r.class_count())})
            << '\n';
        return;
      }
      payload["report"] = to_json(r);
      break;
    }
    case OracleAction::Power: {
      std::vector<Permutation> targets;
      if (opts.element_index || opts.element_cycles) {
        targets.push_back(select_element(opts, g));
        params["element"] = targets.front().to_cycle_string();
      } else {
        for (const auto& c : conjugacy_classes(g)) targets.push_back(std::get<Permutation>(c.rep));
      }
      Json rows = Json::array();
      for (const auto& x : targets) rows.push_back(power_row(g, x));
      if (opts.format == Format::Csv) {
        out << "element,element_index,order,conj_power_count,equal_size_class_lower_bound,centralizer_order\n";
        for (const auto& r : rows) {
          out << csv_row({r["element"].get<std::string>(), std::to_string(r["element_index"].get<std::size_t>()),
                          std::to_string(r["order"].get<std::uint64_t>()),
                          std::to_string(r["conj_power_count"].get<std::uint64_t>()),
                          std::to_string(r["equal_size_class_lower_bound"].get<std::uint64_t>()),
                          r["centralizer_order"].get<std::string>()})
              << '\n';
        }
        return;
      }
      payload["rows"] = std::move(rows);
      break;
    }
  }
  emit(out, make_envelope("oracle", std::move(params), std::move(payload)));
}

// --- numbers -----------------------------------------------------------------

void cmd_numbers(const NumbersOptions& opts, std::ostream& out) {
  Json params = Json::object();
  Json payload = Json::object();
  switch (opts.action) {
    case NumbersAction::TotientCheck: {
      const TotientBoundScan scan = totient_bound_check(opts.k_max);
      if (opts.format == Format::Csv) {
        out << "k,phi,two_phi_squared,relation\n";
        for (std::uint64_t k : scan.failures()) {
          const std::uint64_t phi = totient(k);
          const bool eq = std::binary_search(scan.boundary_cases.begin(), scan.boundary_cases.end(), k);
          out << csv_row({std::to_string(k), std::to_string(phi), std::to_string(2 * phi * phi),
                          eq ? "equal" : "less"})
              << '\n';
        }
        return;
      }
      params["action"] = "totient-check";
      params["k_max"] = opts.k_max;
      payload["k_max"] = scan.k_max;
      payload["boundary_cases"] = scan.boundary_cases;
      payload["strict_violations"] = scan.strict_violations;
      payload["strict_bound_holds_elsewhere"] = scan.strict_violations.empty();
      break;
    }
    case NumbersAction::DFact: {
      const FactorialFactorization f = factorial_factorization(opts.n);
      const mpz_class d = divisor_count_factorial(opts.n);
      if (opts.format == Format::Csv) {
        out << "n,d_n_factorial\n" << csv_row({std::to_string(opts.n), decimal(d)}) << '\n';
        return;
      }
      params["action"] = "dfact";
      params["n"] = opts.n;
      payload["n"] = opts.n;
      payload["d"] = decimal(d);
      Json exps = Json::array();
      for (const auto& [p, e] : f.exponents) {
        Json row = Json::object();
        row["p"] = p;
        row["e"] = e;
        exps.push_back(std::move(row));
      }
      payload["exponents"] = std::move(exps);
      break;
    }
    case NumbersAction::Growth: {
      const mpq_class a = parse_rational(opts.a);
      const mpq_class c = parse_rational(opts.c);
      const GrowthTable t = growth_table(a, c, opts.k_max);
      if (opts.format == Format::Csv) {
        out << "k,ratio,approx\n";
        for (std::size_t i = 0; i < t.ratios.size(); ++i) {
          out << csv_row({std::to_string(i + 1), t.ratios[i].get_str(), approx_decimal(t.ratios[i])}) << '\n';
        }
        return;
      }
      params["action"] = "growth";
      params["a"] = a.get_str();
      params["c"] = c.get_str();
      params["k_max"] = opts.k_max;
      payload["turning_index"] = t.turning_index ? Json(*t.turning_index) : Json(nullptr);
      Json rows = Json::array();
      for (std::size_t i = 0; i < t.ratios.size(); ++i) {
        Json row = Json::object();
        row["k"] = i + 1;
        row["ratio"] = t.ratios[i].get_str();
        row["approx"] = approx_decimal(t.ratios[i]);
        rows.push_back(std::move(row));
      }
      payload["rows"] = std::move(rows);
      break;
    }
  }
  emit(out, make_envelope("numbers", std::move(params), std::move(payload)));
}

// --- entry point -------------------------------------------------------------

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kParseError;
  if (dynamic_cast<const CapExceededError*>(&e)) return kCapBreach;
  if (dynamic_cast<const PreconditionError*>(&e)) return kPrecondition;
  return kInternalError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy class size multiplicities of finite groups"};
  app.name("cmult");
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}};
  std::uint64_t seed = 0;  // reserved; nothing is randomized

  auto add_common = [&](CLI::App* sub, Format& format) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--seed", seed, "Reserved; currently unused");
  };

  ScanOptions scan;
  std::string scan_group;
  auto* scan_cmd = app.add_subcommand("scan", "Multiplicity report of S_n or A_n for each n in a range");
  scan_cmd->add_option("group", scan_group, "sym or alt")->required()->check(CLI::IsMember({"sym", "alt"}));
  scan_cmd->add_option("n_from", scan.n_from)->required();
  scan_cmd->add_option("n_to", scan.n_to)->required();
  scan_cmd->add_flag("--override-range", scan.override_range, "Allow n_to above 60");
  add_common(scan_cmd, scan.format);

  FamilyOptions family;
  std::uint64_t family_n = 0;
  auto* family_cmd = app.add_subcommand("family", "Equal-size A_n class families for multiplicity M");
  family_cmd->add_option("M", family.multiplicity, "Required multiplicity")->required()->check(CLI::PositiveNumber);
  auto* family_n_opt = family_cmd->add_option("n", family_n, "Degree of the alternating group");
  add_common(family_cmd, family.format);

  OracleOptions oracle;
  std::string oracle_action;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force conjugacy data of a permutation group");
  oracle_cmd->add_option("action", oracle_action, "classes, report or power")
      ->required()
      ->check(CLI::IsMember({"classes", "report", "power"}));
  oracle_cmd->add_option("--gens", oracle.gens_file, "Generator file, one permutation per line");
  oracle_cmd->add_option("--psl2", oracle.psl2, "Use PSL(2,p) on the projective line");
  oracle_cmd->add_option("--sym", oracle.sym, "Use S_n");
  oracle_cmd->add_option("--alt", oracle.alt, "Use A_n");
  oracle_cmd->add_option("--degree", oracle.degree, "Degree for --gens (default: inferred)");
  oracle_cmd->add_option("--element", oracle.element_index, "Element index in sorted element order");
  oracle_cmd->add_option("--element-cycles", oracle.element_cycles, "Element in cycle notation");
  oracle_cmd->add_option("--cap", oracle.cap, "Maximum group order")->check(CLI::PositiveNumber);
  add_common(oracle_cmd, oracle.format);

  NumbersOptions numbers;
  auto* numbers_cmd = app.add_subcommand("numbers", "Number-theory tables");
  numbers_cmd->require_subcommand(1);
  auto* tc = numbers_cmd->add_subcommand("totient-check", "Check 2*phi(k)^2 > k for k <= k_max");
  tc->add_option("k_max", numbers.k_max)->required()->check(CLI::PositiveNumber);
  add_common(tc, numbers.format);
  auto* df = numbers_cmd->add_subcommand("dfact", "Number of divisors of n!");
  df->add_option("n", numbers.n)->required();
  add_common(df, numbers.format);
  auto* gr = numbers_cmd->add_subcommand("growth", "a^floor(c*k) / ((k+1) d(k!)) for k = 1..k_max");
  gr->add_option("a", numbers.a)->required();
  gr->add_option("c", numbers.c)->required();
  gr->add_option("k_max", numbers.k_max)->required()->check(CLI::PositiveNumber);
  add_common(gr, numbers.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }

  try {
    if (*scan_cmd) {
      scan.kind = scan_group == "sym" ? GroupKind::Sym : GroupKind::Alt;
      cmd_scan(scan, out);
    } else if (*family_cmd) {
      if (family_n_opt->count()) family.n = family_n;
      cmd_family(family, out);
    } else if (*oracle_cmd) {
      oracle.action = oracle_action == "classes" ? OracleAction::Classes
                      : oracle_action == "report" ? OracleAction::Report
                                                  : OracleAction::Power;
      cmd_oracle(oracle, out);
    } else if (*numbers_cmd) {
      numbers.action = *tc ? NumbersAction::TotientCheck : *df ? NumbersAction::DFact : NumbersAction::Growth;
      cmd_numbers(numbers, out);
    }
  } catch (const std::exception& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kOk;
}

}  // namespace cmult::cli
