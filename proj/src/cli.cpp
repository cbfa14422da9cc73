#include "recip/cli.hpp"

#include "recip/census.hpp"
#include "recip/compositions.hpp"
#include "recip/spectral.hpp"
#include "recip/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>

namespace recip {

namespace {

enum class Format { Table, JsonLines, Csv };

struct Field {
  std::string key;
  std::string value;
  bool numeric;  // emitted unquoted in JSON
};

using Record = std::vector<Field>;

Field num(std::string key, unsigned long v) { return {std::move(key), std::to_string(v), true}; }
Field str(std::string key, std::string v) { return {std::move(key), std::move(v), false}; }

// Streams records in the chosen format. Table output is buffered so columns
// can be aligned.
class Emitter {
 public:
  Emitter(Format format, std::string schema, std::ostream& out)
      : format_(format), schema_(std::move(schema)), out_(out) {}

  void emit(const Record& r) {
    switch (format_) {
      case Format::JsonLines: {
        nlohmann::ordered_json j;
        j["schema"] = schema_;
        for (const Field& f : r) {
          if (f.numeric)
            j[f.key] = std::stoull(f.value);
          else
            j[f.key] = f.value;
        }
        out_ << j.dump() << '\n';
        break;
      }
      case Format::Csv:
        if (!header_written_) {
          write_joined(r, [](const Field& f) { return f.key; });
          header_written_ = true;
        }
        write_joined(r, [](const Field& f) { return f.value; });
        break;
      case Format::Table:
        rows_.push_back(r);
        break;
    }
  }

  void finish() {
    if (format_ != Format::Table || rows_.empty()) return;
    const Record& head = rows_.front();
    std::vector<std::size_t> width(head.size());
    for (std::size_t i = 0; i < head.size(); ++i) width[i] = head[i].key.size();
    for (const Record& r : rows_)
      for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
        width[i] = std::max(width[i], r[i].value.size());
    auto line = [&](auto cell) {
      std::string s;
      for (std::size_t i = 0; i < width.size(); ++i) {
        std::string c = cell(i);
        if (i) s += "  ";
        s += c;
        if (i + 1 < width.size()) s.append(width[i] - c.size(), ' ');
      }
      out_ << s << '\n';
    };
    line([&](std::size_t i) { return head[i].key; });
    for (const Record& r : rows_)
      line([&](std::size_t i) { return i < r.size() ? r[i].value : std::string(); });
    rows_.clear();
  }

 private:
  template <class Get>
  void write_joined(const Record& r, Get get) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out_ << ',';
      out_ << get(r[i]);
    }
    out_ << '\n';
  }

  Format format_;
  std::string schema_;
  std::ostream& out_;
  bool header_written_ = false;
  std::vector<Record> rows_;
};

struct Options {
  std::optional<unsigned> t;
  std::optional<unsigned> t_max;
  std::optional<unsigned> depth;
  std::optional<unsigned> n;
  unsigned digits = 20;
  std::optional<double> tolerance;
  unsigned oracle_max_t = 18;
  unsigned threads = 1;
  std::string format = "table";
  std::string out_path;
  std::string suite = "all";
  bool words = false;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

unsigned require(const std::optional<unsigned>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

std::pair<unsigned, unsigned> t_range(const Options& o) {
  if (o.t && o.t_max) throw UsageError("--t and --t-max are mutually exclusive");
  if (o.t) return {*o.t, *o.t};
  if (o.t_max) return {1, *o.t_max};
  throw UsageError("one of --t or --t-max is required");
}

std::string signs(const EpsilonSeq& e) {
  std::string s;
  for (int x : e.entries()) s += x > 0 ? '+' : '-';
  return s;
}

std::string compact(const GroupWord& w) {
  std::string s;
  for (Syllable x : w.syllables()) s += x == Syllable::A ? 'a' : x == Syllable::B ? 'b' : 'B';
  return s;
}

std::string joined_parts(const Composition& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(c.parts()[i]);
  }
  return s;
}

Field high_field(std::string key, const HighFloat& x, unsigned digits) {
  return str(std::move(key), to_decimal(x, std::clamp(digits, 1U, kHighFloatDigits)));
}

int cmd_count(const Options& o, Emitter& em) {
  const auto [first, last] = t_range(o);
  const unsigned depth = o.depth.value_or(1);
  if (first == 0) throw UsageError("--t must be >= 1");
  if (depth == 0) throw UsageError("--D must be >= 1");
  for (const CensusRow& row : excursion_census_range(first, last, depth, o.threads)) {
    if (o.n && row.n != *o.n) continue;
    em.emit({num("t", row.t), num("D", row.depth), num("n", row.n), str("count", row.count.get_str()),
             str("source", to_string(row.source))});
  }
  return 0;
}

int cmd_alpha(const Options& o, Emitter& em) {
  const unsigned depth = require(o.depth, "--D");
  if (depth < 2) throw UsageError("--D must be >= 2 (alpha_1 = 1 is degenerate)");
  const AlphaEnclosure e = solve_alpha(depth, decimal_tolerance(o.digits + 3));
  em.emit({num("D", depth), str("lo", to_decimal(e.lo, o.digits, Rounding::Down)),
           str("hi", to_decimal(e.hi, o.digits, Rounding::Up)), num("digits", o.digits)});
  return 0;
}

int cmd_constants(const Options& o, Emitter& em) {
  const unsigned depth = require(o.depth, "--D");
  if (depth < 2) throw UsageError("--D must be >= 2");
  const Rational tol = decimal_tolerance(o.digits + 3);
  auto emit = [&](const std::string& name, unsigned param, const Interval& v) {
    em.emit({str("name", name), num("parameter", param),
             str("lo", to_decimal(v.lo(), o.digits, Rounding::Down)),
             str("hi", to_decimal(v.hi(), o.digits, Rounding::Up)), num("digits", o.digits)});
  };
  emit("alpha", depth, solve_alpha(depth, tol).interval());
  emit("d", depth, coefficient_d(depth, tol));
  emit("two_excursion_limit", depth, limit_constant(LimitKind::TwoExcursionsDepthD, depth, tol));
  const unsigned n = o.n.value_or(1);
  emit("depth_one_limit", n, limit_constant(LimitKind::DepthOne2n, n, tol));
  return 0;
}

int cmd_table1(const Options& o, Emitter& em) {
  const unsigned t = require(o.t, "--t");
  const unsigned depth = require(o.depth, "--D");
  if (t == 0 || depth < 2) throw UsageError("table1 needs --t >= 1 and --D >= 2");
  const unsigned digits = std::clamp(o.digits, 1U, 30U);
  const Table1 table = table1(t, depth, o.n.value_or(1));
  for (const Table1Row& row : table.rows) {
    Record r{str("row", row.label), num("t", t), num("D", depth), num("n", row.n),
             str("count", row.count.get_str())};
    if (row.approximation) {
      r.push_back(high_field("approximation", *row.approximation, digits));
      r.push_back(high_field("ratio", to_high(row.count) / *row.approximation, digits));
    } else {
      r.push_back(str("approximation", "exact"));
      r.push_back(str("ratio", "1"));
    }
    r.push_back(num("digits", digits));
    em.emit(r);
  }
  return 0;
}

int cmd_bounds(const Options& o, Emitter& em) {
  const auto [first, last] = t_range(o);
  const unsigned depth = require(o.depth, "--D");
  if (first == 0 || depth < 2) throw UsageError("bounds needs t >= 1 and --D >= 2");
  const unsigned digits = std::min(o.digits, 40U);
  bool all_ok = true;
  for (unsigned t = first; t <= last; ++t) {
    const TwoExcursionBounds b = bounds_two_excursions(t, depth);
    const BigCount count = count_exact_excursions(t, 1, depth);
    const bool ok = b.lower <= Rational(count) && Rational(count) <= b.upper;
    all_ok = all_ok && ok;
    em.emit({num("t", t), num("D", depth), str("lower", to_decimal(b.lower, digits, Rounding::Down)),
             str("count", count.get_str()), str("upper", to_decimal(b.upper, digits, Rounding::Up)),
             str("sandwich", ok ? "pass" : "fail"), num("digits", digits)});
  }
  return all_ok ? 0 : 1;
}

int cmd_verify(const Options& o, Emitter& em, std::ostream& err) {
  SuiteOptions s;
  s.oracle_max_t = o.oracle_max_t;
  s.bijection_max_t = std::min(s.bijection_max_t, o.oracle_max_t);
  s.threads = o.threads;
  if (o.tolerance) {
    if (!(*o.tolerance > 0)) throw UsageError("--tolerance must be positive");
    s.thm34_tolerance = s.lemma33_tolerance = *o.tolerance;
  }
  const auto& names = suite_names();
  if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end())
    throw UsageError("unknown --suite '" + o.suite + "'");
  const VerificationReport report = run_suite(o.suite, s);
  for (const Check& c : report.checks)
    em.emit({str("check", c.name), str("parameters", c.parameters),
             str("status", c.passed ? "pass" : "fail"), str("measured", c.measured),
             str("expected", c.expected), str("tolerance", c.tolerance)});
  em.finish();
  for (const Check& c : report.checks)
    if (!c.passed) err << "FAILED " << c.name << " [" << c.parameters << "]\n";
  return report.all_passed() ? 0 : 1;
}

int cmd_enumerate(const Options& o, Emitter& em) {
  const unsigned t = require(o.t, "--t");
  if (t == 0 || t > 20) throw UsageError("enumerate needs 1 <= --t <= 20");
  std::optional<ExcursionFilter> filter;
  if (o.n) filter = ExcursionFilter{*o.n, o.depth.value_or(1)};
  if (filter && filter->depth == 0) throw UsageError("--D must be >= 1");
  CompositionStream stream(t, filter);
  unsigned long index = 0;
  while (auto c = stream.next()) {
    Record r{num("index", index++), num("t", t), str("composition", joined_parts(*c))};
    if (o.depth) r.push_back(num("excursions", 2 * excursion_parts(*c, *o.depth)));
    if (o.words) {
      // the canonical (+1-leading) sign tuple with this run sequence
      std::vector<int> e;
      int sign = 1;
      for (unsigned part : c->parts()) {
        e.insert(e.end(), part, sign);
        sign = -sign;
      }
      const EpsilonSeq eps(std::move(e));
      r.push_back(str("eps", signs(eps)));
      r.push_back(str("word", compact(reciprocal_word(eps).word)));
    }
    em.emit(r);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Census and verification of reciprocal geodesics on the modular surface",
               "recipgeo"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table | json-lines | csv")
        ->check(CLI::IsMember({"table", "json-lines", "csv"}));
    sub->add_option("--out", o.out_path, "Write output to this file");
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  };
  auto add_t = [&](CLI::App* sub) {
    sub->add_option("--t", o.t, "Word length parameter: geodesics of length 4t");
  };
  auto add_depth = [&](CLI::App* sub) { sub->add_option("--D", o.depth, "Excursion depth"); };
  auto add_digits = [&](CLI::App* sub) {
    sub->add_option("--digits", o.digits, "Decimal digits")->check(CLI::Range(1U, 200U));
  };

  auto* count = app.add_subcommand("count", "Excursion census for one t or t = 1..t-max");
  add_t(count);
  count->add_option("--t-max", o.t_max, "Census for every t up to this value");
  add_depth(count);
  count->add_option("--n", o.n, "Only the row with this n");
  add_common(count);

  auto* alpha = app.add_subcommand("alpha", "Certified enclosure of alpha_D");
  add_depth(alpha);
  add_digits(alpha);
  add_common(alpha);

  auto* constants = app.add_subcommand("constants", "alpha_D, d_D and the limit constants");
  add_depth(constants);
  constants->add_option("--n", o.n, "n for the depth-one limit 1/(2n)!");
  add_digits(constants);
  add_common(constants);

  auto* tab = app.add_subcommand("table1", "Exact counts against their growth laws");
  add_t(tab);
  add_depth(tab);
  tab->add_option("--n", o.n, "Largest n for the depth-one rows");
  add_digits(tab);
  add_common(tab);

  auto* bounds = app.add_subcommand("bounds", "Lower/upper estimates for two excursions");
  add_t(bounds);
  bounds->add_option("--t-max", o.t_max, "Every t up to this value");
  add_depth(bounds);
  add_digits(bounds);
  add_common(bounds);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", o.suite, "all, or one suite name");
  verify->add_option("--oracle-max-t", o.oracle_max_t, "Largest t for brute-force oracles")
      ->check(CLI::Range(1U, 24U));
  verify->add_option("--tolerance", o.tolerance, "Relative tolerance for limit checks");
  add_common(verify);

  auto* enumerate = app.add_subcommand("enumerate", "List compositions of t");
  add_t(enumerate);
  add_depth(enumerate);
  enumerate->add_option("--n", o.n, "Only compositions with exactly n parts > D");
  enumerate->add_flag("--words", o.words, "Include sign tuple and normal-form word");
  add_common(enumerate);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const Format format = o.format == "json-lines" ? Format::JsonLines
                        : o.format == "csv"      ? Format::Csv
                                                 : Format::Table;
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path, std::ios::binary);
    if (!file) {
      err << "usage error: cannot open --out " << o.out_path << '\n';
      return 2;
    }
  }
  std::ostream& sink = o.out_path.empty() ? out : file;

  try {
    int code = 0;
    if (count->parsed()) {
      Emitter em(format, "census", sink);
      code = cmd_count(o, em);
      em.finish();
    } else if (alpha->parsed()) {
      Emitter em(format, "alpha", sink);
      code = cmd_alpha(o, em);
      em.finish();
    } else if (constants->parsed()) {
      Emitter em(format, "constant", sink);
      code = cmd_constants(o, em);
      em.finish();
    } else if (tab->parsed()) {
      Emitter em(format, "table1", sink);
      code = cmd_table1(o, em);
      em.finish();
    } else if (bounds->parsed()) {
      Emitter em(format, "bounds", sink);
      code = cmd_bounds(o, em);
      em.finish();
    } else if (verify->parsed()) {
      Emitter em(format, "check", sink);
      code = cmd_verify(o, em, err);
    } else if (enumerate->parsed()) {
      Emitter em(format, "composition", sink);
      code = cmd_enumerate(o, em);
      em.finish();
    }
    return code;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace recip
