#include "lamcount/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <locale>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lamcount/analytics.hpp"
#include "lamcount/bijections.hpp"
#include "lamcount/certify.hpp"
#include "lamcount/enumeration.hpp"
#include "lamcount/error.hpp"
#include "lamcount/series.hpp"
#include "lamcount/trees.hpp"
#include "lamcount/typing.hpp"

namespace lamcount::cli {

namespace {

using Columns = std::vector<SeriesTable>;

std::string dec(const BigInt& x) { return x.str(); }

std::ostringstream classic_stream() {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  return os;
}

std::string fixed(double x, int digits) {
  auto os = classic_stream();
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string sci(double x, int digits) {
  auto os = classic_stream();
  os << std::scientific << std::setprecision(digits) << x;
  return os.str();
}

void emit_series(const Columns& cols, const std::string& format, std::ostream& out) {
  const std::size_t rows = cols.front().coeffs.size();
  if (format == "csv") {
    out << "n";
    if (cols.size() == 1)
      out << ",value";
    else
      for (const auto& c : cols) out << ',' << c.family;
    out << '\n';
    for (std::size_t n = 0; n < rows; ++n) {
      out << n;
      for (const auto& c : cols) out << ',' << dec(c[n]);
      out << '\n';
    }
  } else if (format == "json") {
    auto array = [](const SeriesTable& c) {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& x : c.coeffs) a.push_back(dec(x));
      return a;
    };
    if (cols.size() == 1) {
      out << array(cols.front()).dump() << '\n';
    } else {
      nlohmann::ordered_json obj;
      for (const auto& c : cols) obj[c.family] = array(c);
      out << obj.dump() << '\n';
    }
  } else {
    for (const auto& c : cols) {
      if (cols.size() > 1) out << c.family << ": ";
      for (std::size_t n = 0; n < c.coeffs.size(); ++n) out << (n ? "," : "") << dec(c[n]);
      out << '\n';
    }
  }
}

Columns series_columns(const std::string& family, std::size_t n, std::uint64_t m,
                       std::uint64_t p) {
  if (family == "linf") return {linf_coeffs_holonomic(n)};
  if (family == "lm") return {lm_coeffs(m, n)};
  if (family == "a1") return {a1_coeffs(n)};
  if (family == "minf") return {minf_coeffs(n)};
  if (family == "nf") {
    auto s = nf_coeffs(n);
    return {s.indices, s.neutral, s.normal};
  }
  if (family == "hnf") {
    auto s = hnf_coeffs(n);
    return {s.neutral_hnf, s.hnf};
  }
  auto s = subterm_series(p, n);
  return {s.containing, s.avoiding};
}

const std::vector<std::string> kTermFamilies{"plain",  "closed", "normal", "neutral",
                                             "hnf",    "neutral-hnf"};
const std::vector<std::string> kTreeFamilies{"bw", "bz", "motzkin", "binary"};

std::optional<Family> family_of(const std::string& name) {
  for (Family f : {Family::NormalForm, Family::Neutral, Family::HeadNF, Family::NeutralHNF})
    if (family_name(f) == name) return f;
  return std::nullopt;
}

SizeModel model_of(const std::string& name) {
  if (name == "a1") return SizeModel::A1;
  if (name == "minf") return SizeModel::MInf;
  return SizeModel::Natural;
}

struct EnumOptions {
  std::string family;
  std::uint64_t n = 0;
  std::optional<std::uint64_t> free;
  std::string model = "natural";
};

// Visits each object of the requested class as its canonical rendering.
void for_each_rendered(const EnumOptions& o, const std::function<void(const std::string&)>& f) {
  if (o.family == "bw") {
    for (const auto& t : enumerate_bw(o.n)) f(to_sexpr(t));
  } else if (o.family == "bz") {
    for (const auto& t : enumerate_bz(o.n)) f(to_sexpr(t));
  } else if (o.family == "motzkin") {
    for (const auto& t : enumerate_motzkin(o.n)) f(to_sexpr(t));
  } else if (o.family == "binary") {
    for (const auto& t : enumerate_binary_trees(o.n)) f(to_sexpr(t));
  } else if (auto fam = family_of(o.family)) {
    Enumerator e;
    e.for_each_in_family(o.n, *fam, [&](const Term& t) { f(render_term(t)); });
  } else {
    FreeBound bound = o.family == "closed" ? FreeBound::at_most(0)
                      : o.free             ? FreeBound::at_most(*o.free)
                                           : FreeBound::unbounded();
    Enumerator e(model_of(o.model));
    e.for_each_term(o.n, bound, [&](const Term& t) { f(render_term(t)); });
  }
}

BigInt count_of(const EnumOptions& o) {
  if (auto fam = family_of(o.family)) return count_family(o.n, *fam);
  if (o.family == "plain" || o.family == "closed") {
    FreeBound bound = o.family == "closed" ? FreeBound::at_most(0)
                      : o.free             ? FreeBound::at_most(*o.free)
                                           : FreeBound::unbounded();
    if (o.model != "natural") {
      if (!bound.is_unbounded()) throw Error("--free is only supported with the natural size");
      return count_terms_sized(o.n, model_of(o.model));
    }
    return count_terms(o.n, bound);
  }
  BigInt c = 0;
  for_each_rendered(o, [&](const std::string&) { ++c; });
  return c;
}

void add_enum_options(CLI::App* cmd, EnumOptions& o) {
  std::vector<std::string> all = kTermFamilies;
  all.insert(all.end(), kTreeFamilies.begin(), kTreeFamilies.end());
  cmd->add_option("family", o.family, "term or tree family")
      ->required()
      ->check(CLI::IsMember(all));
  cmd->add_option("-n", o.n, "size")->required();
  cmd->add_option("--free", o.free, "bound on free indices (plain terms)");
  cmd->add_option("--size-model", o.model, "size notion for plain terms")
      ->check(CLI::IsMember({"natural", "a1", "minf"}));
}

struct BijectionOptions {
  std::string kind;
  bool check = false;
  std::uint64_t n = 10;
  std::optional<std::string> apply;
  std::optional<std::string> invert;
  bool dot = false;
};

int run_bijection(const BijectionOptions& o, std::ostream& out) {
  const BijectionKind kind = *parse_bijection_kind(o.kind);
  if (o.check) {
    const CheckReport r = certify_bijection(kind, o.n);
    for (const auto& s : r.sizes)
      if (!r.failure || s.size != r.failure->size)
        out << "size " << s.size << ": " << s.domain << " / " << s.codomain << " ok\n";
    if (r.failure) {
      out << "FAIL size " << r.failure->size << ": " << r.failure->what << '\n';
      if (!r.failure->witness.empty()) out << "counterexample: " << r.failure->witness << '\n';
      return kFailure;
    }
    return kOk;
  }
  const bool forward = o.apply.has_value();
  const std::string& input = forward ? *o.apply : *o.invert;
  auto tree = [&](const auto& t) { out << (o.dot ? to_dot(t) : to_sexpr(t) + "\n"); };
  auto term = [&](const Term& t) { out << render_term(t) << '\n'; };
  switch (kind) {
    case BijectionKind::LambdaBw:
      if (forward)
        tree(lambda_to_bw(parse_term(input)));
      else
        term(bw_to_lambda(parse_bw(input)));
      break;
    case BijectionKind::BwBz:
      if (forward)
        tree(bw_to_bz(parse_bw(input)));
      else
        tree(bz_to_bw(parse_bz(input)));
      break;
    case BijectionKind::LambdaBz:
      if (forward)
        tree(lambda_to_bz(parse_term(input)));
      else
        term(bz_to_lambda(parse_bz(input)));
      break;
    case BijectionKind::MotzkinNeutral:
      if (forward)
        term(motzkin_to_neutral(parse_motzkin(input)));
      else
        tree(neutral_to_motzkin(parse_term(input)));
      break;
    case BijectionKind::KhnfShift:
      term(forward ? khnf_shift(parse_term(input)) : khnf_unshift(parse_term(input)));
      break;
  }
  return kOk;
}

void run_typable(std::uint64_t max, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << "size,typable,all\n";
    for (std::uint64_t n = 0; n <= max; ++n) {
      const TypableCount c = count_typable(n);
      out << n << ',' << dec(c.typable) << ',' << dec(c.closed) << '\n';
    }
    return;
  }
  out << std::setw(4) << "size" << std::setw(14) << "typable" << std::setw(14) << "all" << '\n';
  for (std::uint64_t n = 0; n <= max; ++n) {
    const TypableCount c = count_typable(n);
    out << std::setw(4) << n << std::setw(14) << dec(c.typable) << std::setw(14)
        << dec(c.closed) << '\n';
  }
}

void run_constants(double tol, std::uint64_t p, std::ostream& out) {
  const AnalyticsReport r = analytics(tol, p);
  const std::string pt = std::to_string(p);
  const std::vector<std::pair<std::string, Estimate>> rows{
      {"rho", r.rho},
      {"inv_rho", r.inv_rho},
      {"C", r.c},
      {"C_H", r.c_hnf},
      {"rho_T(" + pt + ")", r.rho_subterm},
      {"rho/rho_T(" + pt + ")", r.rho_ratio},
      {"density_K", r.density_neutral_hnf},
      {"density_H", r.density_hnf},
  };
  for (const auto& [name, e] : rows)
    out << std::left << std::setw(16) << name << std::right << fixed(e.value, 17) << "  +- "
        << sci(std::max(e.tolerance, 1e-17), 1) << '\n';
}

void run_density(std::uint64_t n, std::uint64_t step, std::ostream& out) {
  const auto l = linf_coeffs_holonomic(n);
  const auto nf = nf_coeffs(n);
  const auto h = hnf_coeffs(n);
  const auto av = subterm_series(9, n);
  out << "n,neutral_hnf,hnf,normal,avoid_omega\n";
  for (std::uint64_t k = step; k <= n; k += step) {
    out << k << ',' << fixed(bigint_ratio(h.neutral_hnf[k], l[k]), 12) << ','
        << fixed(bigint_ratio(h.hnf[k], l[k]), 12) << ','
        << fixed(bigint_ratio(nf.normal[k], l[k]), 12) << ','
        << fixed(bigint_ratio(av.avoiding[k], l[k]), 12) << '\n';
  }
  const AnalyticsReport r = analytics();
  out << "limit," << fixed(r.density_neutral_hnf.value, 12) << ','
      << fixed(r.density_hnf.value, 12) << ',' << fixed(0.0, 12) << ',' << fixed(0.0, 12)
      << '\n';
}

void run_approx(std::uint64_t n, std::uint64_t step, std::ostream& out) {
  const auto l = linf_coeffs_holonomic(n);
  out << "n,exact,estimate,ratio\n";
  auto row = [&](std::uint64_t k) {
    out << k << ',' << dec(l[k]) << ',' << sci(asymptotic_estimate(k), 6) << ','
        << fixed(asymptotic_ratio(l[k], k), 9) << '\n';
  };
  std::uint64_t k = step;
  for (; k < n; k += step) row(k);
  row(n);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting and translating de Bruijn lambda-terms", "lamcount"};
  app.require_subcommand(1);

  std::string series_family;
  std::size_t series_n = 0;
  std::uint64_t series_m = 0;
  std::uint64_t pattern_size = 9;
  std::string format = "text";
  auto* series = app.add_subcommand("series", "print series coefficients 0..n");
  series->add_option("family", series_family)
      ->required()
      ->check(CLI::IsMember({"linf", "lm", "a1", "nf", "hnf", "minf", "avoid"}));
  series->add_option("-n", series_n, "truncation order")->required();
  series->add_option("--m", series_m, "free index bound for lm");
  series->add_option("--pattern-size", pattern_size, "pattern size for avoid");
  series->add_option("--format", format)->check(CLI::IsMember({"text", "csv", "json"}));

  EnumOptions enum_opts;
  auto* enumerate = app.add_subcommand("enumerate", "list all objects of size n");
  add_enum_options(enumerate, enum_opts);
  EnumOptions count_opts;
  auto* count = app.add_subcommand("count", "count objects of size n");
  add_enum_options(count, count_opts);

  BijectionOptions bij;
  auto* bijection = app.add_subcommand("bijection", "apply or certify a translation");
  bijection->add_option("kind", bij.kind)
      ->required()
      ->check(CLI::IsMember({"lbw", "bwbz", "lbz", "mone", "khnf"}));
  auto* check_flag = bijection->add_flag("--check", bij.check, "exhaustive round trip check");
  bijection->add_option("-n", bij.n, "largest size for --check");
  auto* apply_opt = bijection->add_option("--apply", bij.apply, "forward direction");
  auto* invert_opt = bijection->add_option("--invert", bij.invert, "backward direction");
  bijection->add_flag("--dot", bij.dot, "render trees as graphviz");
  check_flag->excludes(apply_opt)->excludes(invert_opt);
  apply_opt->excludes(invert_opt);

  std::uint64_t typable_max = 0;
  auto* typable = app.add_subcommand("typable", "count simply typable closed terms");
  std::string typable_format = "text";
  typable->add_option("--max", typable_max)->required();
  typable->add_option("--format", typable_format)->check(CLI::IsMember({"text", "csv"}));

  double tol = 1e-14;
  std::uint64_t const_p = 9;
  auto* constants = app.add_subcommand("constants", "singularities and asymptotic constants");
  constants->add_option("--tol", tol)->check(CLI::PositiveNumber);
  constants->add_option("--pattern-size", const_p)->check(CLI::Range(2, 1000));

  std::uint64_t density_n = 0;
  std::uint64_t density_step = 1;
  auto* density = app.add_subcommand("density", "proportions of term classes up to size n");
  density->add_option("-n", density_n)->required();
  density->add_option("--step", density_step)->check(CLI::PositiveNumber);

  std::uint64_t approx_n = 0;
  std::uint64_t approx_step = 0;
  auto* approx = app.add_subcommand("approx", "exact counts against the asymptotic estimate");
  approx->add_option("-n", approx_n)->required()->check(CLI::PositiveNumber);
  approx->add_option("--step", approx_step);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (bijection->parsed() && !bij.check && !bij.apply && !bij.invert)
      throw CLI::ValidationError("bijection", "one of --check, --apply, --invert is required");
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  out.imbue(std::locale::classic());
  try {
    if (series->parsed()) {
      emit_series(series_columns(series_family, series_n, series_m, pattern_size), format, out);
    } else if (enumerate->parsed()) {
      for_each_rendered(enum_opts, [&](const std::string& s) { out << s << '\n'; });
    } else if (count->parsed()) {
      out << dec(count_of(count_opts)) << '\n';
    } else if (bijection->parsed()) {
      return run_bijection(bij, out);
    } else if (typable->parsed()) {
      run_typable(typable_max, typable_format, out);
    } else if (constants->parsed()) {
      run_constants(tol, const_p, out);
    } else if (density->parsed()) {
      run_density(density_n, density_step, out);
    } else if (approx->parsed()) {
      run_approx(approx_n, approx_step ? approx_step : std::max<std::uint64_t>(1, approx_n / 10),
                 out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace lamcount::cli
