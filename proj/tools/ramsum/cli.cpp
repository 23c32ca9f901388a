#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsum/asymptotics.hpp"
#include "ramsum/congruences.hpp"
#include "ramsum/even_functions.hpp"
#include "ramsum/ramanujan.hpp"
#include "ramsum/sums_products.hpp"
#include "suites.hpp"

namespace ramsum::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Largest number of rows a --range table may produce.
constexpr Int kMaxTableRows = 1'000'000;

class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const std::string& flag) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last)
    throw UsageError(flag + ": '" + text + "' is not an integer");
  return value;
}

Range parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range: expected LO:HI, got '" + text + "'");
  const Range r{parse_int(text.substr(0, colon), "--range"), parse_int(text.substr(colon + 1), "--range")};
  if (r.lo < 1 || r.hi < r.lo) throw UsageError("--range: need 1 <= LO <= HI, got '" + text + "'");
  return r;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

OutputFormat parse_format(const std::string& text) {
  if (text == "plain") return OutputFormat::plain;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw UsageError("--format: expected plain, json or csv, got '" + text + "'");
}

void require_strategy(const std::string& given, std::initializer_list<const char*> allowed) {
  if (given.empty()) return;
  for (const char* s : allowed)
    if (given == s) return;
  std::string list;
  for (const char* s : allowed) list += (list.empty() ? "" : ", ") + std::string(s);
  throw UsageError("--strategy: expected one of " + list + ", got '" + given + "'");
}

std::string join(std::span<const Int> v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string format_double(double v) {
  std::ostringstream s;
  s << std::setprecision(15) << v;
  return s.str();
}

/// Every moduli tuple the request covers, in lexicographic order.
std::vector<std::vector<Int>> moduli_tuples(const CommandRequest& req, std::size_t arity) {
  if (!req.range) return {req.moduli};
  const Int width = req.range->hi - req.range->lo + 1;
  Int rows = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    rows = checked_mul(rows, width);
    if (rows > kMaxTableRows) throw ScaleError("--range table exceeds " + std::to_string(kMaxTableRows) + " rows");
  }
  std::vector<std::vector<Int>> out;
  std::vector<Int> t(arity, req.range->lo);
  while (true) {
    out.push_back(t);
    std::size_t i = arity;
    while (i > 0 && t[i - 1] == req.range->hi) t[--i] = req.range->lo;
    if (i == 0) return out;
    ++t[i - 1];
  }
}

SumStrategy sum_strategy(const std::string& s) {
  if (s == "direct") return SumStrategy::direct;
  if (s == "general") return SumStrategy::general;
  return SumStrategy::fast;
}

/// A computed row: the moduli tuple and named result fields.
struct Row {
  std::vector<Int> moduli;
  Json fields;
};

/// Header describing the inputs shared by every row.
Json request_header(const CommandRequest& req) {
  Json j;
  j["command"] = subcommand_name(req.subcommand);
  if (!req.poly_texts.empty()) j["polys"] = req.poly_texts;
  if (!req.shifts.empty()) j["shifts"] = req.shifts;
  if (req.a) j["a"] = *req.a;
  if (req.units_only) j["units"] = true;
  if (!req.strategy.empty()) j["strategy"] = req.strategy;
  return j;
}

std::string render_rows(const CommandRequest& req, const std::vector<Row>& rows, const std::vector<std::string>& moduli_names) {
  std::ostringstream out;
  switch (req.format) {
    case OutputFormat::json: {
      Json j = request_header(req);
      auto entry = [&](const Row& row) {
        Json e;
        e["moduli"] = row.moduli;
        for (const auto& [k, v] : row.fields.items()) e[k] = v;
        return e;
      };
      if (req.range) {
        j["range"] = {req.range->lo, req.range->hi};
        j["results"] = Json::array();
        for (const auto& row : rows) j["results"].push_back(entry(row));
      } else {
        const Json e = entry(rows.front());
        for (const auto& [k, v] : e.items()) j[k] = v;
      }
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv: {
      std::vector<std::string> header = moduli_names;
      if (req.a && req.subcommand != Subcommand::c) header.push_back("a");
      for (const auto& [k, v] : rows.front().fields.items()) header.push_back(k);
      for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
      out << '\n';
      for (const auto& row : rows) {
        out << join(row.moduli);
        if (req.a && req.subcommand != Subcommand::c) out << ',' << *req.a;
        for (const auto& [k, v] : row.fields.items()) out << ',' << (v.is_string() ? v.get<std::string>() : v.dump());
        out << '\n';
      }
      break;
    }
    case OutputFormat::plain: {
      auto values = [](const Json& fields) {
        std::string s;
        for (const auto& [k, v] : fields.items()) s += (s.empty() ? "" : " ") + (v.is_string() ? v.get<std::string>() : v.dump());
        return s;
      };
      if (!req.range) {
        out << values(rows.front().fields) << '\n';
      } else {
        for (const auto& row : rows) out << '(' << join(row.moduli) << ") " << values(row.fields) << '\n';
      }
      break;
    }
  }
  return out.str();
}

std::vector<std::string> indexed_names(const char* stem, std::size_t r) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

Outcome run_table(const CommandRequest& req, std::size_t arity, std::vector<std::string> names,
                  const std::function<Json(const ModuliTuple&)>& compute) {
  std::vector<Row> rows;
  for (auto& t : moduli_tuples(req, arity)) {
    Json fields = compute(ModuliTuple(t));
    rows.push_back({std::move(t), std::move(fields)});
  }
  return {kSuccess, render_rows(req, rows, names)};
}

Json single(const char* name, Int v) {
  Json j;
  j[name] = v;
  return j;
}

Outcome execute_c(const CommandRequest& req) {
  const Int k = *req.a;
  std::vector<Row> rows;
  for (auto& t : moduli_tuples(req, 1)) {
    Json fields;
    fields["k"] = k;
    fields["value"] = ramanujan_sum(t[0], k);
    rows.push_back({std::move(t), std::move(fields)});
  }
  // c has a single modulus, reported as n.
  if (req.format == OutputFormat::plain) {
    std::ostringstream out;
    if (!req.range) {
      out << rows.front().fields["value"].get<Int>() << '\n';
    } else {
      for (const auto& row : rows) out << "c_" << row.moduli[0] << '(' << k << ") " << row.fields["value"].get<Int>() << '\n';
    }
    return {kSuccess, out.str()};
  }
  return {kSuccess, render_rows(req, rows, {"n"})};
}

Outcome execute_sum(const CommandRequest& req) {
  const bool is_e = req.subcommand == Subcommand::E;
  const SumStrategy strategy = sum_strategy(req.strategy);
  if (!req.shifts.empty()) {
    const ShiftVector a(req.shifts);
    return run_table(req, a.arity(), indexed_names("m", a.arity()), [&](const ModuliTuple& m) {
      return single("value", is_e ? e_shift(a, m, strategy) : r_shift(a, m, strategy));
    });
  }
  const PolySystem g(req.polys);
  return run_table(req, g.arity(), indexed_names("m", g.arity()), [&](const ModuliTuple& m) {
    return single("value", is_e ? e_g(g, m, strategy) : r_g(g, m, strategy));
  });
}

Outcome execute_t(const CommandRequest& req) {
  const TStrategy strategy = req.strategy == "spectral" ? TStrategy::spectral
                             : req.strategy == "direct" ? TStrategy::direct
                                                        : TStrategy::closed;
  const std::size_t arity = req.range ? static_cast<std::size_t>(*req.r) : req.moduli.size();
  return run_table(req, arity, indexed_names("m", arity),
                   [&](const ModuliTuple& m) { return single("value", ramsum::t_a(m, *req.a, strategy)); });
}

Outcome execute_roots(const CommandRequest& req) {
  const RootStrategy strategy = req.strategy == "direct" ? RootStrategy::direct : RootStrategy::multiplicative;
  const PolySystem g(req.polys);
  return run_table(req, g.arity(), indexed_names("m", g.arity()), [&](const ModuliTuple& m) {
    const RootCount rc = count_roots(g, m, req.units_only, strategy);
    Json j;
    j["count"] = rc.count;
    j["modulus"] = rc.modulus;
    return j;
  });
}

Outcome execute_alpha(const CommandRequest& req) {
  const auto r = static_cast<unsigned>(*req.r);
  const double value = alpha_r(r, *req.prime_bound);
  const double tail = alpha_tail_estimate(r, *req.prime_bound);
  std::ostringstream out;
  switch (req.format) {
    case OutputFormat::plain:
      out << format_double(value) << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["command"] = "alpha";
      j["r"] = *req.r;
      j["prime_bound"] = *req.prime_bound;
      j["value"] = value;
      j["tail_estimate"] = tail;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "r,prime_bound,value,tail_estimate\n"
          << *req.r << ',' << *req.prime_bound << ',' << format_double(value) << ',' << format_double(tail) << '\n';
      break;
  }
  return {kSuccess, out.str()};
}

Outcome execute_asymptotic(const CommandRequest& req) {
  const AsymptoticReport rep = asymptotic_report(static_cast<unsigned>(*req.r), *req.x, *req.prime_bound);
  const double empirical = rep.empirical.convert_to<double>();
  const std::string exact = to_string(rep.empirical);
  std::ostringstream out;
  switch (req.format) {
    case OutputFormat::plain:
      out << "r " << rep.r << "\nx " << rep.x << "\nprime_bound " << rep.prime_bound << "\nempirical "
          << format_double(empirical) << "\nalpha " << format_double(rep.alpha) << "\nalpha_tail_estimate "
          << format_double(rep.alpha_tail) << "\npredicted " << format_double(rep.predicted) << "\nratio "
          << format_double(rep.ratio) << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["command"] = "asymptotic";
      j["r"] = rep.r;
      j["x"] = rep.x;
      j["prime_bound"] = rep.prime_bound;
      j["empirical"] = exact;
      j["empirical_approx"] = empirical;
      j["alpha"] = rep.alpha;
      j["alpha_tail_estimate"] = rep.alpha_tail;
      j["predicted"] = rep.predicted;
      j["ratio"] = rep.ratio;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "r,x,prime_bound,empirical,alpha,alpha_tail_estimate,predicted,ratio\n"
          << rep.r << ',' << rep.x << ',' << rep.prime_bound << ',' << format_double(empirical) << ','
          << format_double(rep.alpha) << ',' << format_double(rep.alpha_tail) << ',' << format_double(rep.predicted)
          << ',' << format_double(rep.ratio) << '\n';
      break;
  }
  return {kSuccess, out.str()};
}

Outcome execute_verify(const CommandRequest& req) {
  const auto results = suites::run(req.suite, req.max);
  const bool passed = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed(); });
  std::ostringstream out;
  switch (req.format) {
    case OutputFormat::plain:
      for (const auto& r : results) {
        out << std::left << std::setw(18) << r.name << " cases=" << r.cases << " failures=" << r.failures;
        if (!r.passed()) out << " first: " << r.first_failure;
        out << '\n';
      }
      out << (passed ? "PASS" : "FAIL") << '\n';
      break;
    case OutputFormat::json: {
      Json j;
      j["command"] = "verify";
      j["suite"] = req.suite;
      if (req.max) j["max"] = *req.max;
      j["suites"] = Json::array();
      for (const auto& r : results) {
        Json s;
        s["name"] = r.name;
        s["cases"] = r.cases;
        s["failures"] = r.failures;
        if (!r.passed()) s["first_failure"] = r.first_failure;
        j["suites"].push_back(s);
      }
      j["passed"] = passed;
      out << j.dump() << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "suite,cases,failures\n";
      for (const auto& r : results) out << r.name << ',' << r.cases << ',' << r.failures << '\n';
      break;
  }
  return {passed ? kSuccess : kVerificationFailure, out.str()};
}

bool wants_json(const std::vector<std::string>& argv) {
  for (std::size_t i = 0; i < argv.size(); ++i) {
    if (argv[i] == "--format=json") return true;
    if (argv[i] == "--format" && i + 1 < argv.size() && argv[i + 1] == "json") return true;
  }
  return false;
}

}  // namespace

std::string subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::c: return "c";
    case Subcommand::E: return "E";
    case Subcommand::R: return "R";
    case Subcommand::T: return "T";
    case Subcommand::roots: return "roots";
    case Subcommand::alpha: return "alpha";
    case Subcommand::asymptotic: return "asymptotic";
    case Subcommand::verify: return "verify";
  }
  return "?";
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + ": empty list");
  std::vector<Int> out;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) throw UsageError(flag + ": malformed integer list '" + text + "'");
    try {
      out.push_back(parse_int(item, flag));
    } catch (const UsageError&) {
      throw UsageError(flag + ": malformed integer list '" + text + "'");
    }
  }
  return out;
}

CommandRequest parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Ramanujan sums c_n(k), E_G, R_G, T_a and g_r", "ramsum"};
  app.require_subcommand(1, 1);

  struct Raw {
    std::string moduli, polys, shifts, a, r, x, prime_bound, strategy, format = "plain", range, suite, max;
    bool units = false;
  } raw;

  auto format_flag = [&](CLI::App* sub) { sub->add_option("--format", raw.format, "plain, json or csv"); };
  auto moduli_flags = [&](CLI::App* sub) {
    sub->add_option("--moduli", raw.moduli, "comma-separated moduli");
    sub->add_option("--range", raw.range, "table mode: every modulus in LO:HI");
  };

  auto* c = app.add_subcommand("c", "Ramanujan sum c_n(k); --moduli n --a k");
  moduli_flags(c);
  c->add_option("--a", raw.a, "the argument k");
  format_flag(c);

  CLI::App* sums[2];
  for (int i = 0; i < 2; ++i) {
    sums[i] = app.add_subcommand(i == 0 ? "E" : "R", i == 0 ? "E_G(m_1, ..., m_r)" : "R_G(m_1, ..., m_r)");
    moduli_flags(sums[i]);
    sums[i]->add_option("--polys", raw.polys, "semicolon-separated polynomials in x");
    sums[i]->add_option("--shifts", raw.shifts, "comma-separated shifts a_i for x - a_i");
    sums[i]->add_option("--strategy", raw.strategy, "fast, general or direct");
    format_flag(sums[i]);
  }

  auto* t = app.add_subcommand("T", "T_a(m_1, ..., m_r)");
  moduli_flags(t);
  t->add_option("--a", raw.a, "the shift a");
  t->add_option("--r", raw.r, "arity in table mode");
  t->add_option("--strategy", raw.strategy, "closed, spectral or direct");
  format_flag(t);

  auto* roots = app.add_subcommand("roots", "N_G, or eta_G with --units");
  moduli_flags(roots);
  roots->add_option("--polys", raw.polys, "semicolon-separated polynomials in x");
  roots->add_flag("--units", raw.units, "count only x coprime to every modulus");
  roots->add_option("--strategy", raw.strategy, "multiplicative or direct");
  format_flag(roots);

  auto* alpha = app.add_subcommand("alpha", "Euler product alpha_r over primes <= --prime-bound");
  alpha->add_option("--r", raw.r, "r >= 2");
  alpha->add_option("--prime-bound", raw.prime_bound, "largest prime in the product");
  format_flag(alpha);

  auto* asym = app.add_subcommand("asymptotic", "sum of g_r(m) for m <= x against (alpha_r / r) x^r");
  asym->add_option("--r", raw.r, "r >= 2");
  asym->add_option("--x", raw.x, "upper summation limit");
  asym->add_option("--prime-bound", raw.prime_bound, "Euler product truncation (default 100000)");
  format_flag(asym);

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  verify->add_option("--suite", raw.suite, "suite name or all");
  verify->add_option("--max", raw.max, "override the main range of each suite");
  format_flag(verify);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    // Help for the subcommand named on the line, if any.
    for (const CLI::App* sub : app.get_subcommands({}))
      if (sub->parsed()) throw HelpRequested(sub->help());
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  CommandRequest req;
  CLI::App* used = app.get_subcommands().front();
  const std::string name = used->get_name();
  auto given = [&](const char* flag) {
    const CLI::Option* opt = used->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };
  auto need = [&](const char* flag) {
    if (!given(flag)) throw UsageError(name + ": " + std::string(flag) + " is required");
  };

  req.format = parse_format(raw.format);
  if (name == "c") req.subcommand = Subcommand::c;
  else if (name == "E") req.subcommand = Subcommand::E;
  else if (name == "R") req.subcommand = Subcommand::R;
  else if (name == "T") req.subcommand = Subcommand::T;
  else if (name == "roots") req.subcommand = Subcommand::roots;
  else if (name == "alpha") req.subcommand = Subcommand::alpha;
  else if (name == "asymptotic") req.subcommand = Subcommand::asymptotic;
  else req.subcommand = Subcommand::verify;

  const bool takes_moduli = req.subcommand == Subcommand::c || req.subcommand == Subcommand::E ||
                            req.subcommand == Subcommand::R || req.subcommand == Subcommand::T ||
                            req.subcommand == Subcommand::roots;
  if (takes_moduli) {
    if (given("--moduli") == given("--range")) throw UsageError(name + ": give exactly one of --moduli and --range");
    if (given("--moduli")) req.moduli = parse_int_list(raw.moduli, "--moduli");
    if (given("--range")) req.range = parse_range(raw.range);
  }
  if (given("--a")) req.a = parse_int(raw.a, "--a");
  if (given("--r")) req.r = parse_int(raw.r, "--r");
  if (given("--x")) req.x = parse_int(raw.x, "--x");
  if (given("--prime-bound")) req.prime_bound = parse_int(raw.prime_bound, "--prime-bound");
  if (given("--max")) req.max = parse_int(raw.max, "--max");
  req.strategy = raw.strategy;
  req.units_only = raw.units;

  auto check_arity = [&](std::size_t count, const char* what) {
    if (!req.range && count != req.moduli.size())
      throw UsageError(name + ": " + what + " count " + std::to_string(count) + " != moduli count " +
                       std::to_string(req.moduli.size()));
  };
  auto read_polys = [&] {
    for (const auto& text : split(raw.polys, ';')) {
      req.poly_texts.push_back(text);
      req.polys.push_back(parse_polynomial(text));
    }
    check_arity(req.polys.size(), "poly");
  };

  switch (req.subcommand) {
    case Subcommand::c:
      need("--a");
      if (!req.range && req.moduli.size() != 1) throw UsageError("c: --moduli takes exactly one modulus n");
      break;
    case Subcommand::E:
    case Subcommand::R:
      if (given("--polys") == given("--shifts")) throw UsageError(name + ": give exactly one of --polys and --shifts");
      require_strategy(req.strategy, {"fast", "general", "direct"});
      if (given("--polys")) {
        read_polys();
      } else {
        req.shifts = parse_int_list(raw.shifts, "--shifts");
        check_arity(req.shifts.size(), "shift");
      }
      break;
    case Subcommand::T:
      need("--a");
      require_strategy(req.strategy, {"closed", "spectral", "direct"});
      if (req.range) {
        need("--r");
        if (*req.r < 1) throw UsageError("T: --r must be positive");
      } else if (given("--r")) {
        throw UsageError("T: --r is only used with --range");
      }
      break;
    case Subcommand::roots:
      need("--polys");
      require_strategy(req.strategy, {"multiplicative", "direct"});
      read_polys();
      break;
    case Subcommand::alpha:
      need("--r");
      need("--prime-bound");
      break;
    case Subcommand::asymptotic:
      need("--r");
      need("--x");
      if (!req.prime_bound) req.prime_bound = 100'000;
      break;
    case Subcommand::verify: {
      need("--suite");
      const auto& names = suites::suite_names();
      if (raw.suite != "all" && std::find(names.begin(), names.end(), raw.suite) == names.end())
        throw UsageError("verify: unknown suite '" + raw.suite + "'");
      req.suite = raw.suite;
      break;
    }
  }
  return req;
}

Outcome execute(const CommandRequest& req) {
  switch (req.subcommand) {
    case Subcommand::c: return execute_c(req);
    case Subcommand::E:
    case Subcommand::R: return execute_sum(req);
    case Subcommand::T: return execute_t(req);
    case Subcommand::roots: return execute_roots(req);
    case Subcommand::alpha: return execute_alpha(req);
    case Subcommand::asymptotic: return execute_asymptotic(req);
    case Subcommand::verify: return execute_verify(req);
  }
  throw UsageError("unknown subcommand");
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  const bool json = wants_json(argv);
  auto fail = [&](int code, const char* kind, const std::string& message, std::optional<std::size_t> position = {}) {
    if (json) {
      Json j;
      j["error"]["kind"] = kind;
      j["error"]["message"] = message;
      if (position) j["error"]["position"] = *position;
      j["error"]["exit_code"] = code;
      out << j.dump() << '\n';
    } else {
      err << "ramsum: " << kind << " error: " << message << '\n';
    }
    return code;
  };
  try {
    const CommandRequest req = parse_args(argv);
    const Outcome outcome = execute(req);
    out << outcome.out;
    return outcome.exit_code;
  } catch (const HelpRequested& h) {
    out << h.what();
    return kSuccess;
  } catch (const UsageError& e) {
    return fail(kUsageError, "usage", e.what());
  } catch (const ParseError& e) {
    return fail(kUsageError, "usage", e.what(), e.position());
  } catch (const DomainError& e) {
    return fail(kDomainError, "domain", e.what());
  } catch (const ScaleError& e) {
    return fail(kScaleError, "scale", e.what());
  } catch (const OverflowError& e) {
    return fail(kScaleError, "overflow", e.what());
  } catch (const ConsistencyError& e) {
    return fail(kVerificationFailure, "consistency", e.what());
  }
}

}  // namespace ramsum::cli
