#include "semigroup/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "semigroup/changemaking.hpp"
#include "semigroup/errors.hpp"
#include "semigroup/verify.hpp"

namespace semigroup::cli {

using nlohmann::json;

nlohmann::json integer_to_json(const Integer& value) {
  if (auto v = to_int64(value)) return *v;
  return to_string(value);
}

Integer integer_from_json(const nlohmann::json& value) {
  if (value.is_string()) return parse_integer(value.get<std::string>());
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Integer(std::to_string(value.get<std::uint64_t>()));
    return Integer(static_cast<long>(value.get<std::int64_t>()));
  }
  throw InvalidInput("expected an integer, got " + value.dump());
}

namespace {

json list_to_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(integer_to_json(v));
  return out;
}

std::vector<Integer> list_from_json(const json& j) {
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

json params_to_json(const FamilyParams& p) {
  return {{"a", integer_to_json(p.a)},
          {"b", integer_to_json(p.b)},
          {"d", integer_to_json(p.d)},
          {"k", p.k}};
}

FamilyParams params_from_json(const json& j) {
  return {integer_from_json(j.at("a")), integer_from_json(j.at("b")),
          integer_from_json(j.at("d")), j.at("k").get<std::size_t>()};
}

}  // namespace

nlohmann::json to_json(const OutputRecord& record) {
  json input = {{"generators", list_to_json(record.generators)}};
  if (record.params) input["params"] = params_to_json(*record.params);
  if (record.family) input["family"] = *record.family;
  json out = {{"input", input},
              {"engine", std::string(to_string(record.engine))},
              {"frobenius", integer_to_json(record.frobenius)},
              {"genus", integer_to_json(record.genus)}};
  if (record.pf) {
    out["type"] = record.pf->size();
    out["pf"] = list_to_json(*record.pf);
  }
  if (record.apery) out["apery"] = list_to_json(*record.apery);
  if (record.gaps) out["gaps"] = list_to_json(*record.gaps);
  return out;
}

OutputRecord record_from_json(const nlohmann::json& j) {
  OutputRecord r;
  const auto& input = j.at("input");
  r.generators = list_from_json(input.at("generators"));
  if (input.contains("params")) r.params = params_from_json(input.at("params"));
  if (input.contains("family")) r.family = input.at("family").get<std::string>();
  const auto engine = j.at("engine").get<std::string>();
  if (engine == "oracle") {
    r.engine = Engine::oracle;
  } else if (engine == "closed-form") {
    r.engine = Engine::closed_form;
  } else {
    throw InvalidInput("unknown engine '" + engine + "'");
  }
  r.frobenius = integer_from_json(j.at("frobenius"));
  r.genus = integer_from_json(j.at("genus"));
  if (j.contains("pf")) {
    r.pf = list_from_json(j.at("pf"));
    if (j.contains("type") && j.at("type").get<std::size_t>() != r.pf->size()) {
      throw InvalidInput("type does not match the pseudo-Frobenius list");
    }
  }
  if (j.contains("apery")) r.apery = list_from_json(j.at("apery"));
  if (j.contains("gaps")) r.gaps = list_from_json(j.at("gaps"));
  return r;
}

namespace {

enum class Quantity { frobenius, genus, apery, pf, gaps, report };
enum class Format { plain, json, csv };

struct Source {
  std::optional<GeneratorList> gens;
  std::optional<FamilyParams> params;
  std::optional<std::string> family;
};

IntRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long v = parse_integer(text).get_si();
    return {v, v};
  }
  Integer lo = parse_integer(text.substr(0, dots));
  Integer hi = parse_integer(text.substr(dots + 2));
  if (!lo.fits_slong_p() || !hi.fits_slong_p()) throw InvalidInput("range out of bounds: " + text);
  if (hi < lo) throw InvalidInput("empty range: " + text);
  return {lo.get_si(), hi.get_si()};
}

OracleOptions options_from_env() {
  OracleOptions options;
  if (const char* cap = std::getenv("SEMIGROUP_ORACLE_CAP")) {
    Integer v = parse_integer(cap);
    auto n = to_index(v, std::numeric_limits<std::size_t>::max() / 2);
    if (!n || *n == 0) throw InvalidInput("SEMIGROUP_ORACLE_CAP must be a positive integer");
    options.residue_cap = *n;
  }
  return options;
}

Engine pick_engine(const std::string& requested, const Source& src) {
  if (requested == "oracle") return Engine::oracle;
  if (requested == "closed") {
    if (!src.params) throw InvalidInput("the closed engine needs family parameters, not --gens");
    return Engine::closed_form;
  }
  // auto
  if (src.params && within_closed_range(*src.params)) return Engine::closed_form;
  return Engine::oracle;
}

OutputRecord compute(const Source& src, Engine engine, Quantity q, Format format,
                     const OracleOptions& options) {
  OutputRecord rec;
  rec.generators = src.gens->elements();
  rec.params = src.params;
  rec.family = src.family;
  rec.engine = engine;
  const bool need_pf = q == Quantity::pf || q == Quantity::report;
  const bool want_pf = need_pf || format != Format::plain;

  std::optional<AperySet> ape;
  auto apery = [&]() -> const AperySet& {
    if (!ape) {
      ape = engine == Engine::oracle ? apery_set(*src.gens, options)
                                     : apery_closed(*src.params, options);
    }
    return *ape;
  };

  if (engine == Engine::closed_form) {
    validate_closed(*src.params);
    rec.frobenius = frobenius_closed(*src.params);
    rec.genus = genus_closed(*src.params);
    if (want_pf) {
      try {
        rec.pf = closed_report(*src.params, options).pf;
      } catch (const OracleInfeasible&) {
        if (need_pf) throw;
      }
    }
  } else {
    rec.frobenius = frobenius_from_apery(apery());
    rec.genus = genus_from_apery(apery());
    if (want_pf) {
      rec.pf = pseudo_frobenius_from_apery(apery(), options);
    }
  }
  if (q == Quantity::apery) rec.apery = apery().minima();
  if (q == Quantity::gaps) rec.gaps = gaps(apery(), options);
  return rec;
}

std::string joined(const std::vector<Integer>& values, char sep) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += to_string(v);
  }
  return out;
}

void print_plain(const OutputRecord& rec, Quantity q, std::ostream& out) {
  auto lines = [&](const std::vector<Integer>& values) {
    for (const auto& v : values) out << to_string(v) << '\n';
  };
  switch (q) {
    case Quantity::frobenius:
      out << to_string(rec.frobenius) << '\n';
      break;
    case Quantity::genus:
      out << to_string(rec.genus) << '\n';
      break;
    case Quantity::apery:
      lines(*rec.apery);
      break;
    case Quantity::pf:
      lines(*rec.pf);
      break;
    case Quantity::gaps:
      lines(*rec.gaps);
      break;
    case Quantity::report:
      out << "engine " << to_string(rec.engine) << '\n'
          << "frobenius " << to_string(rec.frobenius) << '\n'
          << "genus " << to_string(rec.genus) << '\n'
          << "type " << rec.pf->size() << '\n'
          << "pf " << joined(*rec.pf, ' ') << '\n';
      break;
  }
}

const char* kCsvHeader = "family,generators,a,b,d,k,engine,frobenius,genus,type,pf";

void print_csv_row(const OutputRecord& rec, std::ostream& out) {
  out << rec.family.value_or("") << ',' << joined(rec.generators, ' ') << ',';
  if (rec.params) {
    out << to_string(rec.params->a) << ',' << to_string(rec.params->b) << ','
        << to_string(rec.params->d) << ',' << rec.params->k;
  } else {
    out << ",,,";
  }
  out << ',' << to_string(rec.engine) << ',' << to_string(rec.frobenius) << ','
      << to_string(rec.genus) << ',';
  if (rec.pf) out << rec.pf->size() << ',' << joined(*rec.pf, ' ');
  out << '\n';
}

Format parse_format(const std::string& f) {
  if (f == "plain") return Format::plain;
  if (f == "json") return Format::json;
  return Format::csv;
}

json mismatch_json(const Mismatch& m) {
  return {{"params", params_to_json(m.params)},
          {"quantity", m.quantity},
          {"closed", m.closed_value},
          {"oracle", m.oracle_value}};
}

json report_json(const VerifyReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) mismatches.push_back(mismatch_json(m));
  json divergences = json::array();
  for (const auto& m : r.divergences) divergences.push_back(mismatch_json(m));
  return {{"cases_run", r.cases_run},
          {"cases_passed", r.cases_passed},
          {"skipped", r.skipped},
          {"mismatches", mismatches},
          {"probe_cases", r.probe_cases},
          {"divergences", divergences},
          {"elapsed_seconds", r.elapsed_seconds}};
}

void print_report_plain(const std::string& title, const VerifyReport& r, std::ostream& out) {
  out << title << ": " << r.cases_passed << "/" << r.cases_run << " passed";
  for (const auto& [reason, count] : r.skipped) out << ", skipped " << count << " (" << reason << ")";
  if (r.probe_cases > 0) {
    out << ", probed " << r.probe_cases << " outside a >= k - 1 with " << r.divergences.size()
        << " divergences";
  }
  out << '\n';
  for (const auto& m : r.mismatches) {
    out << "mismatch " << describe(m.params) << ' ' << m.quantity << ": closed " << m.closed_value
        << ", oracle " << m.oracle_value << '\n';
  }
  for (const auto& m : r.divergences) {
    out << "divergence " << describe(m.params) << ' ' << m.quantity << ": formula "
        << m.closed_value << ", oracle " << m.oracle_value << '\n';
  }
}

struct SourceOptions {
  std::string gens;
  std::string a, b, d;
  long k = 0;
};

Source source_from(const SourceOptions& o) {
  Source src;
  const bool any_param = !o.a.empty() || !o.b.empty() || !o.d.empty() || o.k != 0;
  if (!o.gens.empty() && any_param) throw InvalidInput("give either --gens or --a/--b/--d/--k");
  if (!o.gens.empty()) {
    src.gens = GeneratorList::parse(o.gens);
    return src;
  }
  if (o.a.empty() || o.b.empty() || o.d.empty() || o.k == 0) {
    throw InvalidInput("need --gens, or all of --a --b --d --k");
  }
  if (o.k < 1) throw InvalidInput("k must be at least 1");
  FamilyParams p{parse_integer(o.a), parse_integer(o.b), parse_integer(o.d),
                 static_cast<std::size_t>(o.k)};
  src.gens = build_generators(p);
  src.params = p;
  return src;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroup toolkit: Frobenius number, genus, Apery sets and "
               "pseudo-Frobenius numbers, with closed forms for A(a,b,d,k)."};
  app.require_subcommand(1);

  std::string engine = "auto";
  std::string format = "plain";
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--engine", engine, "oracle, closed, or auto")
        ->check(CLI::IsMember({"auto", "oracle", "closed"}));
    cmd->add_option("--format", format, "plain, json or csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
  };

  SourceOptions so;
  std::optional<Quantity> quantity;
  const std::vector<std::pair<const char*, Quantity>> quantities = {
      {"frobenius", Quantity::frobenius}, {"genus", Quantity::genus},
      {"apery", Quantity::apery},         {"pf", Quantity::pf},
      {"gaps", Quantity::gaps},           {"report", Quantity::report}};
  for (const auto& [name, q] : quantities) {
    auto* cmd = app.add_subcommand(name, std::string("compute ") + name);
    cmd->add_option("--gens", so.gens, "comma-separated generators");
    cmd->add_option("--a", so.a);
    cmd->add_option("--b", so.b);
    cmd->add_option("--d", so.d);
    cmd->add_option("--k", so.k);
    add_common(cmd);
    cmd->callback([&quantity, q = q] { quantity = q; });
  }

  auto* family = app.add_subcommand("family", "named semigroup families; 'family list' for all");
  std::string family_name;
  std::string n_opt, m_opt, k_opt, b_opt, d_opt, n_range;
  family->add_option("name", family_name, "family name or 'list'")->required();
  family->add_option("--n", n_opt);
  family->add_option("--m", m_opt);
  family->add_option("--k", k_opt);
  family->add_option("--b", b_opt);
  family->add_option("--d", d_opt);
  family->add_option("--n-range", n_range, "lo..hi, one record per n");
  add_common(family);

  auto* orderly = app.add_subcommand("orderly", "is greedy change-making optimal for a coin system");
  std::string coins_opt;
  orderly->add_option("--coins", coins_opt, "comma-separated denominations starting at 1")
      ->required();
  orderly->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  auto* verify = app.add_subcommand("verify", "cross-check closed forms against the oracle");
  std::string a_range = "2..60", b_range = "2..5", d_range = "1..5", k_range = "1..4";
  bool no_apery = false, with_pf = false, with_monotone = false, violations = false;
  bool inject = false;
  unsigned jobs = 1;
  std::optional<std::uint64_t> seed;
  std::size_t budget = 100;
  verify->add_option("--a-range", a_range);
  verify->add_option("--b-range", b_range);
  verify->add_option("--d-range", d_range);
  verify->add_option("--k-range", k_range);
  verify->add_flag("--no-apery", no_apery, "skip element-wise Apery comparison");
  verify->add_flag("--pf", with_pf, "also compare pseudo-Frobenius sets");
  verify->add_flag("--monotone", with_monotone, "also check N_dr(m) monotonicity");
  verify->add_flag("--include-violations", violations, "probe a < k - 1 without failing");
  verify->add_flag("--inject-mismatch", inject, "perturb closed values to exercise failure");
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "also run the seeded property suite");
  verify->add_option("--budget", budget, "property suite sample count")->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInvalidInput;
  }

  try {
    const OracleOptions options = options_from_env();
    const Format fmt = parse_format(format);

    if (quantity) {
      Source src = source_from(so);
      Engine e = pick_engine(engine, src);
      auto rec = compute(src, e, *quantity, fmt, options);
      if (fmt == Format::json) {
        out << to_json(rec).dump() << '\n';
      } else if (fmt == Format::csv) {
        out << kCsvHeader << '\n';
        print_csv_row(rec, out);
      } else {
        print_plain(rec, *quantity, out);
      }
      return kOk;
    }

    if (family->parsed()) {
      if (family_name == "list") {
        json entries = json::array();
        for (const auto& entry : catalog()) {
          json params = json::array();
          for (const auto& pb : entry.params) {
            params.push_back({{"name", pb.name},
                              {"min", pb.minimum},
                              {"note", pb.note},
                              {"required", pb.required}});
          }
          entries.push_back({{"name", std::string(to_string(entry.name))},
                             {"params", params},
                             {"definition", entry.generators}});
        }
        if (fmt == Format::json) {
          out << json{{"families", entries}}.dump() << '\n';
        } else {
          for (const auto& e : entries) {
            out << e["name"].get<std::string>() << ": " << e["definition"].get<std::string>()
                << '\n';
          }
        }
        return kOk;
      }
      auto name = parse_family_name(family_name);
      if (!name) throw InvalidInput("unknown family '" + family_name + "'; try 'family list'");

      FamilyArgs fa;
      auto small = [](const std::string& s, const char* what) -> std::optional<long> {
        if (s.empty()) return std::nullopt;
        Integer v = parse_integer(s);
        if (!v.fits_slong_p()) throw InvalidInput(std::string(what) + " out of range");
        return v.get_si();
      };
      fa.n = small(n_opt, "n");
      fa.m = small(m_opt, "m");
      fa.k = small(k_opt, "k");
      if (!b_opt.empty()) fa.b = parse_integer(b_opt);
      if (!d_opt.empty()) fa.d = parse_integer(d_opt);

      std::vector<long> ns;
      if (!n_range.empty()) {
        if (fa.n) throw InvalidInput("give either --n or --n-range");
        auto r = parse_range(n_range);
        for (long n = r.lo; n <= r.hi; ++n) ns.push_back(n);
      }
      std::vector<OutputRecord> records;
      auto one = [&](FamilyArgs a) {
        Source src;
        src.params = resolve({*name, a});
        src.gens = build_generators(*src.params);
        src.family = std::string(to_string(*name));
        return compute(src, pick_engine(engine, src), Quantity::report, fmt, options);
      };
      if (ns.empty()) {
        records.push_back(one(fa));
      } else {
        for (long n : ns) {
          FamilyArgs a = fa;
          a.n = n;
          records.push_back(one(a));
        }
      }
      if (fmt == Format::json) {
        if (records.size() == 1) {
          out << to_json(records[0]).dump() << '\n';
        } else {
          json arr = json::array();
          for (const auto& r : records) arr.push_back(to_json(r));
          out << json{{"records", arr}}.dump() << '\n';
        }
      } else if (fmt == Format::csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : records) print_csv_row(r, out);
      } else {
        for (const auto& r : records) {
          if (records.size() > 1) out << "generators " << joined(r.generators, ',') << '\n';
          print_plain(r, Quantity::report, out);
        }
      }
      return kOk;
    }

    if (orderly->parsed()) {
      std::vector<Integer> coins;
      std::stringstream ss(coins_opt);
      for (std::string item; std::getline(ss, item, ',');) coins.push_back(parse_integer(item));
      auto result = is_orderly(CoinSystem(coins));
      if (fmt == Format::json) {
        json j = {{"coins", list_to_json(coins)}, {"orderly", result.orderly}};
        j["counterexample"] =
            result.counterexample ? integer_to_json(*result.counterexample) : json(nullptr);
        out << j.dump() << '\n';
      } else {
        out << (result.orderly ? "orderly" : "not orderly") << '\n';
        if (result.counterexample) {
          out << "counterexample " << to_string(*result.counterexample) << '\n';
        }
      }
      return kOk;
    }

    if (verify->parsed()) {
      GridSpec grid;
      grid.a = parse_range(a_range);
      grid.b = parse_range(b_range);
      grid.d = parse_range(d_range);
      grid.k = parse_range(k_range);
      grid.check_apery = !no_apery;
      grid.check_pf = with_pf;
      grid.check_monotone = with_monotone;
      grid.include_hypothesis_violations = violations;
      grid.inject_offset = inject ? 1 : 0;
      grid.oracle_cutoff = std::min<std::size_t>(grid.oracle_cutoff, options.residue_cap);
      const auto report = cross_check(grid, jobs);
      std::optional<VerifyReport> props;
      if (seed) props = property_suite(*seed, budget);
      if (fmt == Format::json) {
        json j = {{"grid", report_json(report)}};
        if (props) j["properties"] = report_json(*props);
        out << j.dump() << '\n';
      } else {
        print_report_plain("grid", report, out);
        if (props) print_report_plain("properties", *props, out);
      }
      bool ok = report.ok() && (!props || props->ok());
      if (!ok) err << "verification found mismatches\n";
      return ok ? kOk : kMismatch;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const OracleInfeasible& e) {
    err << "oracle infeasible: " << e.what() << '\n';
    return kOracleInfeasible;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kMismatch;
  }
  return kInvalidInput;
}

}  // namespace semigroup::cli
