#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "motzeta/arcs.hpp"
#include "motzeta/castling.hpp"
#include "motzeta/fixtures.hpp"
#include "motzeta/json_io.hpp"
#include "motzeta/resolution.hpp"
#include "motzeta/series.hpp"
#include "motzeta/simd/kernels.hpp"

using namespace motzeta;

namespace {

enum Exit { kOk = 0, kViolated = 1, kInputError = 2, kBudget = 3 };

struct Args {
  std::string format = "json";
  int threads = 1;
  bool deterministic = false;
  std::string budget;

  std::string poly, polys, partner;
  int nvars = 0;
  unsigned q = 0;
  unsigned p = 0;
  std::string n;
  int order = -1;
  std::string leading;
  std::string constraint = "none";
  std::string datum, castling, fixture;
  std::string series, motive, spectrum, roots;
  int expand = -1;
  std::optional<int> dim;
  bool augmented = false;
  std::string identity = "castling";
};

struct Result {
  Json body;
  int status = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json file_or_inline(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && value[first] == '{') return parse_json(value);
  return parse_json(read_file(value));
}

Integer parse_budget(const std::string& text) {
  const auto caret = text.find('^');
  try {
    if (caret == std::string::npos) {
      Integer v(text);
      if (v <= 0) throw ParseError("budget must be positive");
      return v;
    }
    const Integer base(text.substr(0, caret));
    const unsigned long e = std::stoul(text.substr(caret + 1));
    if (base <= 0) throw ParseError("budget must be positive");
    return ipow(base, e);
  } catch (const std::invalid_argument&) {
    throw ParseError("invalid budget '" + text + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("invalid budget '" + text + "'");
  }
}

CountOptions count_options(const Args& a) {
  CountOptions o;
  if (a.threads < 1) throw DomainError("--threads must be >= 1");
  o.threads = a.threads;
  if (!a.budget.empty()) o.budget = parse_budget(a.budget);
  return o;
}

PolySystem load_system(const std::string& text, int nvars, const char* flag) {
  if (text.empty()) throw DomainError(std::string(flag) + " is required");
  return PolySystem::parse(text, nvars);
}

PolySystem load_system(const Args& a) {
  if (!a.poly.empty() && !a.polys.empty()) throw DomainError("give either --poly or --polys");
  if (!a.poly.empty()) {
    PolySystem s = load_system(a.poly, a.nvars, "--poly");
    if (s.size() != 1) throw DomainError("--poly takes one polynomial; use --polys for a list");
    return s;
  }
  return load_system(a.polys, a.nvars, "--poly or --polys");
}

unsigned require_prime(unsigned v, const char* flag) {
  if (v == 0) throw DomainError(std::string(flag) + " is required");
  if (!is_prime(v)) throw DomainError(std::string(flag) + " must be prime");
  return v;
}

int require_order(const Args& a) {
  if (a.order < 0) throw DomainError("--order is required");
  return a.order;
}

Leading parse_leading(const std::string& text, Leading fallback) {
  if (text.empty()) return fallback;
  if (text == "one") return Leading::one;
  if (text == "any") return Leading::any;
  throw ParseError("--leading must be one or any");
}

const char* leading_name(Leading l) { return l == Leading::one ? "one" : "any"; }

MultiIndex parse_index(const std::string& text) {
  if (text.empty()) throw DomainError("--n is required");
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      entries.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("invalid --n entry '" + item + "'");
    }
  }
  return MultiIndex(std::move(entries));
}

ResolutionDatum load_datum(const Args& a) {
  if (!a.datum.empty() && !a.fixture.empty()) throw DomainError("give either --datum or --fixture");
  if (!a.datum.empty()) return resolution_from_json(parse_json(read_file(a.datum)));
  if (!a.fixture.empty()) return resolution_fixture(a.fixture);
  throw DomainError("--datum or --fixture is required");
}

int datum_dimension(const Args& a) {
  if (a.dim) return *a.dim;
  if (!a.fixture.empty()) return resolution_fixture_dimension(a.fixture);
  throw DomainError("--dim is required with --datum");
}

CastlingDatum load_castling(const Args& a) {
  if (a.castling.empty()) throw DomainError("--castling is required");
  return castling_from_json(file_or_inline(a.castling));
}

RationalSeries load_series(const Args& a, int ell) {
  if (!a.series.empty()) {
    const auto first = a.series.find_first_not_of(" \t\n");
    if (first != std::string::npos && a.series[first] == '{') return series_from_json(parse_json(a.series));
    return RationalSeries::parse(a.series, ell);
  }
  return zeta_from_resolution(load_datum(a));
}

Json series_json(const RationalSeries& s, int expand_order, unsigned q) {
  Json out;
  out["series"] = s.to_string();
  out["terms"] = to_json(s)["terms"];
  if (expand_order >= 0) {
    const auto e = expand(s, expand_order);
    out["expansion"] = to_json(e);
    if (q) out["specialized"] = to_json(specialize(e, Rational(q)));
  }
  return out;
}

Json count_json(const PolySystem& sys, const MultiIndex& n, unsigned q, const ArcConstraint& c,
                Leading leading, const CountOptions& options) {
  Json out{{"q", q}, {"n", n.entries}};
  const Integer denom = ipow(Integer(q), static_cast<unsigned long>(n.total() * sys.nvars()));
  Integer chosen;
  if (sys.size() == 1) {
    const ArcCount both = count_arcs_both(sys, n, q, c, options);
    out["count_leading_one"] = to_string(both.leading_one);
    out["count_all"] = to_string(both.all);
    chosen = leading == Leading::one ? both.leading_one : both.all;
  } else {
    out["count_leading_one"] = nullptr;
    chosen = count_arcs(sys, n, q, c, Leading::any, options);
    out["count_all"] = to_string(chosen);
  }
  out["leading"] = leading_name(leading);
  Rational coeff(chosen, denom);
  coeff.canonicalize();
  out["coeff"] = to_string(coeff);
  return out;
}

Result cmd_count(const Args& a) {
  const PolySystem sys = load_system(a);
  const unsigned q = require_prime(a.q, "--q");
  const MultiIndex n = parse_index(a.n);
  if (n.size() != sys.size()) throw DomainError("--n needs one entry per polynomial");
  for (int v : n.entries)
    if (v < 1) throw DomainError("--n entries must be >= 1");
  const Leading leading = parse_leading(a.leading, sys.size() == 1 ? Leading::one : Leading::any);
  if (leading == Leading::one && sys.size() > 1)
    throw DomainError("--leading one is only defined for a single polynomial");
  const ArcConstraint c = ArcConstraint::parse(a.constraint);
  const CountOptions options = count_options(a);
  Result r;
  r.body = count_json(sys, n, q, c, leading, options);
  r.body["constraint"] = c.to_string();
  r.body["work_estimate"] = to_string(arc_work_estimate(sys, n, q, c));
  return r;
}

Result cmd_zeta_count(const Args& a) {
  const PolySystem sys = load_system(a);
  const unsigned q = require_prime(a.q, "--q");
  const int order = require_order(a);
  const Leading leading = parse_leading(a.leading, sys.size() == 1 ? Leading::one : Leading::any);
  const ArcConstraint c = ArcConstraint::parse(a.constraint);
  const auto z = zeta_coeffs_from_counts(sys, q, order, c, leading, a.augmented, count_options(a));
  Result r;
  r.body = {{"q", q}, {"leading", leading_name(leading)}, {"constraint", c.to_string()},
            {"augmented", a.augmented}};
  r.body["series"] = to_json(z);
  return r;
}

Result cmd_zeta_resolution(const Args& a) {
  const ResolutionDatum datum = load_datum(a);
  if (a.q && a.expand < 0) throw DomainError("--q needs --expand");
  Result r;
  r.body = series_json(zeta_from_resolution(datum), a.expand, a.q);
  r.body["valid_q"] = datum.valid_q();
  return r;
}

Result cmd_milnor(const Args& a) {
  const ResolutionDatum datum = load_datum(a);
  const RationalSeries z = zeta_from_resolution(datum);
  const MilnorFiber fiber = milnor_fiber(datum);
  const RationalMotive from_limit = -limit_at_infinity(z);
  Result r;
  r.body = to_json(fiber);
  r.body["minus_limit"] = from_limit.to_string();
  r.body["limit_agrees"] = from_limit == fiber.counting;
  if (!(from_limit == fiber.counting)) r.status = kViolated;
  return r;
}

Result cmd_hsp(const Args& a) {
  const ResolutionDatum datum = load_datum(a);
  const int dim = datum_dimension(a);
  Result r;
  r.body = {{"dim", dim}, {"hsp", hsp_of_f(datum, dim).to_string()}};
  return r;
}

Result cmd_castle_zeta(const Args& a, bool local) {
  const CastlingDatum c = load_castling(a);
  const RationalSeries z1 = load_series(a, c.ell);
  const RationalSeries z2 = local ? castle_local_zeta(z1, c) : castle_zeta(z1, c);
  Result r;
  r.body = {{"castling", to_json(c)}};
  r.body.update(series_json(z2, a.expand, a.q));
  return r;
}

Result cmd_castle_milnor(const Args& a) {
  const CastlingDatum c = load_castling(a);
  MilnorFiber s1;
  if (!a.motive.empty()) {
    s1.counting = RationalMotive::parse(a.motive);
    if (!a.spectrum.empty()) s1.spectrum = Spectrum::parse(a.spectrum);
  } else {
    s1 = milnor_fiber(load_datum(a));
  }
  Result r;
  r.body = {{"castling", to_json(c)}, {"input", to_json(s1)}};
  r.body["output"] = to_json(castle_milnor(s1, c));
  return r;
}

Result cmd_castle_spectrum(const Args& a) {
  const CastlingDatum c = load_castling(a);
  const Spectrum h1 = !a.spectrum.empty() ? Spectrum::parse(a.spectrum)
                                          : hsp_of_f(load_datum(a), datum_dimension(a));
  const Spectrum h2 = castle_spectrum(h1, c);
  const bool holds = spectrum_relation_holds(h1, h2, c);
  Result r;
  r.body = {{"castling", to_json(c)}, {"h1", h1.to_string()}, {"h2", h2.to_string()},
            {"relation_holds", holds}};
  if (!holds) r.status = kViolated;
  return r;
}

Result cmd_castle_bfun(const Args& a) {
  const CastlingDatum c = load_castling(a);
  if (a.roots.empty()) throw DomainError("--roots is required");
  std::vector<Rational> roots;
  std::stringstream ss(a.roots);
  std::string item;
  while (std::getline(ss, item, ',')) roots.push_back(parse_rational(item));
  const BFunction b1 = BFunction::from(roots);
  const BFunction b2 = castle_bfunction(b1, c);
  Json out = Json::array();
  for (const auto& x : b2.roots) out.push_back(to_string(x));
  Result r;
  r.body = {{"castling", to_json(c)}, {"input", b1.to_string()}, {"output", b2.to_string()},
            {"roots", out}};
  return r;
}

Result cmd_castle_igusa(const Args& a) {
  const CastlingDatum c = load_castling(a);
  if (c.ell != 1) throw DomainError("castle-igusa needs a single invariant (l = 1)");
  const unsigned p = require_prime(a.p, "--p");
  const int order = require_order(a);
  const PolySystem sys1 = load_system(a);
  if (sys1.size() != 1) throw DomainError("castle-igusa takes one polynomial");
  const CountOptions options = count_options(a);
  const auto z1 = igusa_coeffs(sys1[0], sys1.nvars(), p, order, options);
  const auto z2 = castle_igusa(z1, Rational(p), c);
  Result r;
  r.body = {{"castling", to_json(c)}, {"p", p}, {"input", to_json(z1)}, {"output", to_json(z2)}};
  if (!a.partner.empty()) {
    const PolySystem sys2 = load_system(a.partner, 0, "--partner");
    const auto direct = igusa_coeffs(sys2[0], sys2.nvars(), p, order, options);
    const IdentityReport report = compare_series("igusa", direct, z2, order);
    r.body["report"] = to_json(report);
    if (!report.all_equal) r.status = kViolated;
  }
  return r;
}

Result report_result(const IdentityReport& report) {
  Result r;
  r.body = to_json(report);
  if (!report.all_equal) r.status = kViolated;
  return r;
}

Result verify_castling_cmd(const Args& a) {
  const int order = require_order(a);
  const unsigned q = require_prime(a.q, "--q");
  const CountOptions options = count_options(a);
  if (!a.fixture.empty()) {
    const CastlingFixture fx = castling_fixture(a.fixture);
    const Leading leading = parse_leading(a.leading, fx.leading);
    Result r = report_result(verify_castling(fx.sys1, fx.sys2, fx.datum, q, order, leading, options));
    r.body["fixture"] = fx.name;
    r.body["leading"] = leading_name(leading);
    return r;
  }
  const PolySystem sys1 = load_system(a);
  const PolySystem sys2 = load_system(a.partner, 0, "--partner");
  const CastlingDatum c = load_castling(a);
  const Leading leading = parse_leading(a.leading, sys1.size() == 1 ? Leading::one : Leading::any);
  Result r = report_result(verify_castling(sys1, sys2, c, q, order, leading, options));
  r.body["leading"] = leading_name(leading);
  return r;
}

Result verify_full_rank(const Args& a) {
  const ArcConstraint c = ArcConstraint::parse(a.constraint);
  if (c.kind != ArcConstraint::Kind::full_rank)
    throw DomainError("verify --identity full-rank needs --constraint full-rank:m,r");
  const PolySystem sys = load_system(a);
  if (sys.size() != 1) throw DomainError("full-rank check takes one polynomial");
  const Leading leading = parse_leading(a.leading, Leading::one);
  return report_result(full_rank_reduction_check(sys[0], c.m, c.r, require_prime(a.q, "--q"),
                                                 require_order(a), leading, count_options(a)));
}

Result verify_homogeneity(const Args& a) {
  const PolySystem sys = load_system(a);
  const unsigned q = require_prime(a.q, "--q");
  const int order = require_order(a);
  const CountOptions options = count_options(a);
  Result r;
  Json rows = Json::array();
  bool all = true;
  for (int n = 1; n <= order; ++n) {
    const bool ok = homogeneity_check(sys, q, n, options);
    all = all && ok;
    rows.push_back({{"n", n}, {"equal", ok}});
  }
  r.body = {{"identity", "homogeneity"}, {"equal", all}, {"checks", rows}};
  if (!all) r.status = kViolated;
  return r;
}

Result verify_route(const Args& a) {
  const CastlingDatum c = load_castling(a);
  const int order = require_order(a);
  const bool ok = route_equality(load_series(a, c.ell), c, order);
  Result r;
  r.body = {{"identity", "route"}, {"equal", ok}, {"order", order}};
  if (!ok) r.status = kViolated;
  return r;
}

Result verify_milnor_limit(const Args& a) {
  Result r = cmd_milnor(a);
  r.body["identity"] = "milnor-limit";
  if (a.castling.empty()) return r;
  // Transfer the local zeta function and compare with the transferred fibre.
  const CastlingDatum c = load_castling(a);
  const ResolutionDatum datum = load_datum(a);
  const RationalMotive lhs = -limit_at_infinity(castle_local_zeta(zeta_from_resolution(datum), c));
  const RationalMotive rhs = castle_milnor(milnor_fiber(datum), c).counting;
  r.body["castled_limit"] = lhs.to_string();
  r.body["castled_fiber"] = rhs.to_string();
  r.body["castled_agrees"] = lhs == rhs;
  if (!(lhs == rhs)) r.status = kViolated;
  return r;
}

Result verify_igusa(const Args& a) {
  if (a.fixture.empty()) {
    Args b = a;
    if (b.partner.empty()) throw DomainError("--partner is required");
    Result r = cmd_castle_igusa(b);
    Result out;
    out.body = r.body["report"];
    out.status = r.status;
    return out;
  }
  const CastlingFixture fx = castling_fixture(a.fixture);
  if (fx.datum.ell != 1) throw DomainError("igusa check needs a single-invariant fixture");
  const unsigned p = require_prime(a.p ? a.p : a.q, "--p");
  const int order = require_order(a);
  const CountOptions options = count_options(a);
  const auto z1 = igusa_coeffs(fx.sys1[0], fx.sys1.nvars(), p, order, options);
  const auto z2 = igusa_coeffs(fx.sys2[0], fx.sys2.nvars(), p, order, options);
  Result r = report_result(compare_series("igusa", z2, castle_igusa(z1, Rational(p), fx.datum), order));
  r.body["fixture"] = fx.name;
  return r;
}

Result cmd_verify(const Args& a) {
  if (a.identity == "castling") return verify_castling_cmd(a);
  if (a.identity == "full-rank") return verify_full_rank(a);
  if (a.identity == "homogeneity") return verify_homogeneity(a);
  if (a.identity == "route") return verify_route(a);
  if (a.identity == "milnor-limit") return verify_milnor_limit(a);
  if (a.identity == "igusa") return verify_igusa(a);
  throw DomainError("unknown identity '" + a.identity + "'");
}

void print_plain(const Json& j, const std::string& indent, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      os << indent << it.key() << ":\n";
      print_plain(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << it.key() << ":\n";
      for (const auto& row : v) {
        os << indent << " ";
        for (auto f = row.begin(); f != row.end(); ++f)
          os << " " << f.key() << "=" << (f->is_string() ? f->get<std::string>() : f->dump());
        os << "\n";
      }
    } else {
      os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Json& body, const std::string& format) {
  if (format == "plain")
    print_plain(body, "", std::cout);
  else
    std::cout << body.dump(2) << "\n";
}

void add_common(CLI::App* sub, Args& a) {
  sub->add_option("--format", a.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));
  sub->add_option("--threads", a.threads, "arc-counter worker threads");
  sub->add_flag("--deterministic", a.deterministic, "omit the timing field");
  sub->add_option("--budget", a.budget, "maximum lane evaluations (decimal or base^exp)");
}

void add_system(CLI::App* sub, Args& a) {
  sub->add_option("--poly", a.poly, "polynomial in x1..xr");
  sub->add_option("--polys", a.polys, "comma-separated polynomials");
  sub->add_option("--nvars", a.nvars, "ambient dimension (default: highest variable index)");
}

void add_datum(CLI::App* sub, Args& a) {
  sub->add_option("--datum", a.datum, "resolution datum JSON file");
  sub->add_option("--fixture", a.fixture, "built-in fixture name");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact motivic zeta functions, arc counts and castling transfers"};
  app.require_subcommand(1);
  Args a;

  auto* count = app.add_subcommand("count", "count arcs with prescribed vanishing orders");
  add_system(count, a);
  count->add_option("--q", a.q, "prime field size");
  count->add_option("--n", a.n, "vanishing orders, comma-separated");
  count->add_option("--leading", a.leading, "one or any");
  count->add_option("--constraint", a.constraint, "none, origin or full-rank:m,r");

  auto* zc = app.add_subcommand("zeta-count", "zeta coefficients from arc counts");
  add_system(zc, a);
  zc->add_option("--q", a.q, "prime field size");
  zc->add_option("--order", a.order, "truncation order in T");
  zc->add_option("--leading", a.leading, "one or any");
  zc->add_option("--constraint", a.constraint, "none, origin or full-rank:m,r");
  zc->add_flag("--augmented", a.augmented, "include n = 0 and n_i = 0 coefficients");

  auto* zr = app.add_subcommand("zeta-resolution", "zeta function of a resolution datum");
  add_datum(zr, a);
  zr->add_option("--expand", a.expand, "expand to this order");
  zr->add_option("--q", a.q, "specialize L = q in the expansion");

  auto* milnor = app.add_subcommand("milnor", "motivic Milnor fibre of a resolution datum");
  add_datum(milnor, a);

  auto* hsp = app.add_subcommand("hsp", "spectrum of a resolution datum");
  add_datum(hsp, a);
  hsp->add_option("--dim", a.dim, "ambient dimension");

  auto* cz = app.add_subcommand("castle-zeta", "castling transfer of a global zeta function");
  auto* cl = app.add_subcommand("castle-local", "castling transfer of a local zeta function");
  for (auto* sub : {cz, cl}) {
    add_datum(sub, a);
    sub->add_option("--series", a.series, "series text or JSON");
    sub->add_option("--castling", a.castling, "castling datum file or inline JSON");
    sub->add_option("--expand", a.expand, "expand to this order");
    sub->add_option("--q", a.q, "specialize L = q in the expansion");
  }

  auto* cm = app.add_subcommand("castle-milnor", "castling transfer of a Milnor fibre");
  add_datum(cm, a);
  cm->add_option("--motive", a.motive, "counting class of the fibre");
  cm->add_option("--spectrum", a.spectrum, "spectrum of the fibre");
  cm->add_option("--castling", a.castling, "castling datum file or inline JSON");

  auto* cs = app.add_subcommand("castle-spectrum", "castling transfer of a spectrum");
  add_datum(cs, a);
  cs->add_option("--spectrum", a.spectrum, "spectrum h1");
  cs->add_option("--dim", a.dim, "ambient dimension for --datum");
  cs->add_option("--castling", a.castling, "castling datum file or inline JSON");

  auto* cb = app.add_subcommand("castle-bfun", "castling transfer of b-function roots");
  cb->add_option("--roots", a.roots, "comma-separated roots");
  cb->add_option("--castling", a.castling, "castling datum file or inline JSON");

  auto* ci = app.add_subcommand("castle-igusa", "castling transfer of an Igusa series");
  add_system(ci, a);
  ci->add_option("--p", a.p, "prime");
  ci->add_option("--order", a.order, "truncation order");
  ci->add_option("--partner", a.partner, "partner polynomial to compare against");
  ci->add_option("--castling", a.castling, "castling datum file or inline JSON");

  auto* verify = app.add_subcommand("verify", "check an identity against exact counts");
  verify->add_option("--identity", a.identity,
                     "castling, full-rank, homogeneity, route, milnor-limit or igusa");
  add_system(verify, a);
  add_datum(verify, a);
  verify->add_option("--partner", a.partner, "partner polynomials");
  verify->add_option("--series", a.series, "series text or JSON");
  verify->add_option("--castling", a.castling, "castling datum file or inline JSON");
  verify->add_option("--q", a.q, "prime field size");
  verify->add_option("--p", a.p, "prime for the Igusa check");
  verify->add_option("--order", a.order, "truncation order");
  verify->add_option("--leading", a.leading, "one or any");
  verify->add_option("--constraint", a.constraint, "full-rank:m,r for the full-rank check");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) add_common(sub, a);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  const CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Result r;
  try {
    if (name == "count") r = cmd_count(a);
    else if (name == "zeta-count") r = cmd_zeta_count(a);
    else if (name == "zeta-resolution") r = cmd_zeta_resolution(a);
    else if (name == "milnor") r = cmd_milnor(a);
    else if (name == "hsp") r = cmd_hsp(a);
    else if (name == "castle-zeta") r = cmd_castle_zeta(a, false);
    else if (name == "castle-local") r = cmd_castle_zeta(a, true);
    else if (name == "castle-milnor") r = cmd_castle_milnor(a);
    else if (name == "castle-spectrum") r = cmd_castle_spectrum(a);
    else if (name == "castle-bfun") r = cmd_castle_bfun(a);
    else if (name == "castle-igusa") r = cmd_castle_igusa(a);
    else r = cmd_verify(a);
  } catch (const BudgetExceeded& e) {
    Json err{{"error", "budget"}, {"message", e.what()}, {"estimate", to_string(e.estimate())}};
    std::cerr << err.dump() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << Json{{"error", "input"}, {"message", e.what()}}.dump() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "input"}, {"message", std::string("rejected: ") + e.what()}}.dump() << "\n";
    return kInputError;
  }

  Json out{{"command", name}};
  out.update(r.body);
  if (!a.deterministic) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out["elapsed_ms"] = ms;
    out["kernels"] = simd::active_kernels().name;
  }
  emit(out, a.format);
  return r.status;
}
