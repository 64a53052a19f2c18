#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "gkws/agcode.hpp"
#include "gkws/curve.hpp"
#include "gkws/error.hpp"
#include "gkws/rrspace.hpp"
#include "gkws/wsemi.hpp"

namespace gkws::cli {

namespace {

using json = nlohmann::ordered_json;
using ws::PoleVector;

constexpr int kSchema = 1;
// Largest box the semigroup, gaps and puregaps commands enumerate by default.
constexpr std::size_t kDefaultBoxLimit = std::size_t{1} << 20;

struct RunConfig {
  unsigned n = 2;
  unsigned m = 1;
  long T = -1;  // -1: 2g - 1
  std::string format = "json";
  std::string verify;  // closed | oracle | both; empty: by n
  unsigned threads = 1;
  unsigned max_n = curve::kDefaultMaxN;
  std::uint64_t cap = code::kDefaultWeightCap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PoleVector parse_tuple(const std::string& text) {
  PoleVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long x = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(x);
    } catch (const std::exception&) {
      throw UsageError("malformed tuple '" + text + "'");
    }
  }
  if (v.empty()) throw UsageError("empty tuple");
  return v;
}

rr::Divisor parse_divisor(const std::string& text, unsigned n) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw UsageError(std::string("divisor is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("inf") || !j["inf"].is_number_integer())
    throw UsageError("divisor must look like {\"inf\": int, \"pj\": [ints]}");
  std::vector<long> pj;
  if (j.contains("pj")) {
    if (!j["pj"].is_array()) throw UsageError("\"pj\" must be an array of integers");
    for (const auto& e : j["pj"]) {
      if (!e.is_number_integer()) throw UsageError("\"pj\" must be an array of integers");
      pj.push_back(e.get<long>());
    }
  }
  if (pj.size() > n) throw UsageError("divisor names more than n points P_j");
  rr::Divisor d(j["inf"].get<long>(), pj);
  return rr::Divisor::from_coeffs(n, d.coeffs());
}

std::string csv_header(std::size_t dims) {
  std::string h = "p_inf";
  for (std::size_t s = 1; s < dims; ++s) h += ",p" + std::to_string(s);
  return h;
}

std::string csv_row(const PoleVector& v) {
  std::string r;
  for (std::size_t i = 0; i < v.size(); ++i) r += (i ? "," : "") + std::to_string(v[i]);
  return r;
}

void emit_tuples_csv(std::ostream& out, std::size_t dims, const std::vector<PoleVector>& tuples) {
  out << csv_header(dims) << "\n";
  for (const auto& v : tuples) out << csv_row(v) << "\n";
}

json tuples_json(const std::vector<PoleVector>& tuples) {
  json arr = json::array();
  for (const auto& v : tuples) arr.push_back(v);
  return arr;
}

json header(const std::string& command, const RunConfig& cfg) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["n"] = cfg.n;
  return j;
}

std::string default_verify(unsigned n) { return n == 2 ? "both" : "oracle"; }

long box_bound(const RunConfig& cfg, const curve::GKParams& params) {
  const long T = cfg.T < 0 ? 2 * params.genus - 1 : cfg.T;
  if (T > 4 * params.genus) throw UsageError("--T must not exceed 4g = " + std::to_string(4 * params.genus));
  return T;
}

std::size_t box_size(unsigned m, long T) {
  std::size_t size = 1;
  for (unsigned i = 0; i <= m; ++i) {
    size *= static_cast<std::size_t>(T + 1);
    if (size > ws::Box::kMaxVectors) return ws::Box::kMaxVectors + 1;
  }
  return size;
}

void check_m(const RunConfig& cfg) {
  if (cfg.m < 1 || cfg.m > cfg.n)
    throw UsageError("--m must lie in [1, n] = [1, " + std::to_string(cfg.n) + "]");
}

std::string point_label(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

int cmd_points(const RunConfig& cfg, std::ostream& out) {
  auto wsp = rr::Workspace::create(cfg.n, cfg.threads, cfg.max_n);
  const auto& F = wsp->field();
  const auto& pts = wsp->points();
  std::vector<std::pair<std::string, curve::CurvePoint>> orbit1;
  orbit1.emplace_back("P_inf", pts.p_inf);
  for (std::size_t j = 0; j < pts.p_list.size(); ++j) orbit1.emplace_back(point_label("P_", j), pts.p_list[j]);
  for (std::size_t l = 0; l < pts.q_list.size(); ++l) orbit1.emplace_back(point_label("Q_", l), pts.q_list[l]);

  if (cfg.format == "csv") {
    out << "label,x,y,z\n";
    for (const auto& [label, pt] : orbit1) {
      if (pt.at_infinity)
        out << label << ",,,\n";
      else
        out << label << "," << F.to_string(pt.x) << "," << F.to_string(pt.y) << "," << F.to_string(pt.z) << "\n";
    }
    return kOk;
  }
  json j = header("points", cfg);
  j["field"] = {{"p", F.characteristic()}, {"degree", F.degree()}, {"modulus", F.modulus()}};
  j["total"] = pts.total();
  json arr = json::array();
  for (const auto& [label, pt] : orbit1) {
    json e;
    e["label"] = label;
    if (!pt.at_infinity) {
      e["x"] = F.to_string(pt.x);
      e["y"] = F.to_string(pt.y);
      e["z"] = F.to_string(pt.z);
    }
    arr.push_back(std::move(e));
  }
  j["orbit1"] = std::move(arr);
  j["counts"] = {{"p_inf", 1},
                 {"p", pts.p_list.size()},
                 {"q", pts.q_list.size()},
                 {"orbit1", 1 + pts.p_list.size() + pts.q_list.size()},
                 {"others", pts.others.size()}};
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_dim(const RunConfig& cfg, const std::string& divisor_text, std::ostream& out) {
  auto wsp = rr::Workspace::create(cfg.n, cfg.threads, cfg.max_n);
  const rr::Divisor G = parse_divisor(divisor_text, cfg.n);
  const long d = wsp->rr().dim(G);
  if (cfg.format == "csv") {
    out << "dim\n" << d << "\n";
    return kOk;
  }
  json j = header("dim", cfg);
  j["divisor"] = {{"inf", G.inf()}, {"pj", std::vector<long>(G.coeffs().begin() + 1, G.coeffs().end())}};
  j["degree"] = G.degree();
  j["dim"] = d;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_m(cfg);
  auto params = curve::make_params(cfg.n, cfg.max_n);
  const auto closed = ws::gamma_closed_form(params, cfg.m);
  const std::string level = cfg.verify.empty() ? default_verify(cfg.n) : cfg.verify;

  std::string verdict = "skipped";
  json failures = json::array();
  json missing = json::array(), extra = json::array();
  if (level != "closed") {
    auto wsp = rr::Workspace::create(cfg.n, cfg.threads, cfg.max_n);
    const auto& rr = wsp->rr();
    bool ok = true;
    // Every closed-form tuple must be a semigroup element that is a
    // discrepancy for every pair of its points.
    for (const auto& v : closed) {
      bool good = ws::is_member(rr, v);
      const auto A = ws::to_divisor(wsp->params(), v);
      for (std::size_t P = 0; P < v.size() && good; ++P)
        for (std::size_t Q = P + 1; Q < v.size() && good; ++Q) good = rr.is_discrepancy(A, P, Q);
      if (!good) {
        failures.push_back(v);
        ok = false;
      }
    }
    if (level == "both") {
      const long T = box_bound(cfg, wsp->params());
      if (box_size(cfg.m, T) > ws::Box::kMaxVectors) throw UsageError("box too large for --verify both");
      const auto hbox = ws::semigroup_box(rr, cfg.m, T, cfg.threads);
      const auto from_box = ws::gamma_from_box(wsp->params(), hbox);
      std::vector<PoleVector> only_closed, only_box;
      std::set_difference(closed.begin(), closed.end(), from_box.begin(), from_box.end(),
                          std::back_inserter(only_closed));
      std::set_difference(from_box.begin(), from_box.end(), closed.begin(), closed.end(),
                          std::back_inserter(only_box));
      missing = tuples_json(only_closed);
      extra = tuples_json(only_box);
      ok = ok && only_closed.empty() && only_box.empty();
    }
    verdict = ok ? "MATCH" : "MISMATCH";
  }

  if (cfg.format == "csv") {
    emit_tuples_csv(out, cfg.m + 1, closed);
    err << "verification: " << verdict << "\n";
  } else {
    json j = header("gamma", cfg);
    j["m"] = cfg.m;
    j["count"] = closed.size();
    j["tuples"] = tuples_json(closed);
    j["verification"] = {{"level", level}, {"result", verdict}};
    if (level != "closed") j["verification"]["failed_tuples"] = failures;
    if (level == "both") {
      j["verification"]["closed_form_only"] = missing;
      j["verification"]["oracle_only"] = extra;
    }
    out << j.dump(2) << "\n";
  }
  return verdict == "MISMATCH" ? kMismatch : kOk;
}

int cmd_semigroup(const RunConfig& cfg, bool gaps_only, std::ostream& out, std::ostream& err) {
  check_m(cfg);
  auto wsp = rr::Workspace::create(cfg.n, cfg.threads, cfg.max_n);
  const long T = box_bound(cfg, wsp->params());
  if (box_size(cfg.m, T) > kDefaultBoxLimit)
    throw UsageError("box [0," + std::to_string(T) + "]^" + std::to_string(cfg.m + 1) + " is too large; lower --T");
  const auto hbox = ws::semigroup_box(wsp->rr(), cfg.m, T, cfg.threads);
  const std::string level = cfg.verify.empty() ? default_verify(cfg.n) : cfg.verify;
  std::string verdict = "skipped";
  if (level == "both") verdict = ws::lub_closure_box(wsp->params(), hbox) == hbox ? "MATCH" : "MISMATCH";
  const auto tuples = gaps_only ? hbox.gaps() : hbox.members();
  const std::string name = gaps_only ? "gaps" : "semigroup";

  if (cfg.format == "csv") {
    emit_tuples_csv(out, cfg.m + 1, tuples);
    err << "verification: " << verdict << "\n";
  } else {
    json j = header(name, cfg);
    j["m"] = cfg.m;
    j["T"] = T;
    j["count"] = tuples.size();
    j["tuples"] = tuples_json(tuples);
    j["verification"] = {{"level", level}, {"result", verdict}};
    out << j.dump(2) << "\n";
  }
  return verdict == "MISMATCH" ? kMismatch : kOk;
}

json verdicts_json(const std::vector<ws::FamilyVerdict>& fv) {
  json arr = json::array();
  for (const auto& v : fv) arr.push_back({{"tuple", v.tuple}, {"gap", v.gap}, {"pure", v.pure}});
  return arr;
}

int cmd_puregaps(const RunConfig& cfg, const std::vector<std::string>& checks, bool skip_box, std::ostream& out,
                 std::ostream& err) {
  check_m(cfg);
  auto wsp = rr::Workspace::create(cfg.n, cfg.threads, cfg.max_n);
  const auto& rr = wsp->rr();
  const long T = box_bound(cfg, wsp->params());

  std::optional<std::vector<PoleVector>> box_gaps;
  if (!skip_box && box_size(cfg.m, T) <= kDefaultBoxLimit) box_gaps = ws::pure_gaps_in_box(rr, cfg.m, T, cfg.threads);
  const auto ladder = ws::ladder_family(rr, cfg.m);
  const auto unit_tail = ws::unit_tail_family(rr, cfg.m);
  std::vector<ws::FamilyVerdict> checked;
  for (const auto& text : checks) {
    ws::FamilyVerdict fv;
    fv.tuple = parse_tuple(text);
    if (fv.tuple.size() != cfg.m + 1)
      throw UsageError("--check tuple must have m + 1 = " + std::to_string(cfg.m + 1) + " entries");
    if (std::any_of(fv.tuple.begin(), fv.tuple.end(), [](long x) { return x < 0; }))
      throw UsageError("--check tuple entries must be nonnegative");
    fv.gap = !ws::is_member(rr, fv.tuple);
    fv.pure = ws::is_pure_gap(rr, fv.tuple);
    checked.push_back(std::move(fv));
  }

  if (cfg.format == "csv") {
    out << "section," << csv_header(cfg.m + 1) << ",gap,pure\n";
    if (box_gaps)
      for (const auto& v : *box_gaps) out << "oracle," << csv_row(v) << ",true,true\n";
    auto rows = [&](const char* section, const std::vector<ws::FamilyVerdict>& fv) {
      for (const auto& v : fv)
        out << section << "," << csv_row(v.tuple) << "," << (v.gap ? "true" : "false") << ","
            << (v.pure ? "true" : "false") << "\n";
    };
    rows("ladder", ladder);
    rows("unit_tail", unit_tail);
    rows("check", checked);
    if (!box_gaps) err << "oracle box enumeration skipped\n";
    return kOk;
  }

  json j = header("puregaps", cfg);
  j["m"] = cfg.m;
  j["T"] = T;
  if (box_gaps) {
    j["oracle"] = {{"status", "enumerated"}, {"count", box_gaps->size()}, {"tuples", tuples_json(*box_gaps)}};
  } else {
    j["oracle"] = {{"status", "skipped"}};
  }
  j["ladder"] = verdicts_json(ladder);
  j["unit_tail"] = verdicts_json(unit_tail);
  j["checks"] = verdicts_json(checked);
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_code(const RunConfig& cfg, const std::string& divisor_text, const std::string& alpha_text,
             const std::string& beta_text, bool dual, bool min_weight, const std::string& dump_path,
             std::ostream& out) {
  auto wsp = rr::Workspace::create(cfg.n, cfg.threads, cfg.max_n);
  const auto& params = wsp->params();
  if (alpha_text.empty() != beta_text.empty()) throw UsageError("--alpha and --beta go together");

  std::optional<code::PureGapBound> pg;
  rr::Divisor G;
  if (!alpha_text.empty()) {
    const auto alpha = parse_tuple(alpha_text), beta = parse_tuple(beta_text);
    if (alpha.size() != beta.size() || alpha.size() > params.n + 1)
      throw UsageError("--alpha and --beta need equal lengths of at most n + 1");
    pg = code::pure_gap_bound(wsp->rr(), alpha, beta);  // NotPureGap -> exit 4
    G = pg->G;
  }
  if (!divisor_text.empty()) {
    rr::Divisor given = parse_divisor(divisor_text, cfg.n);
    if (pg && !(given == pg->G)) throw UsageError("--G differs from the divisor built from --alpha/--beta");
    G = given;
  } else if (!pg) {
    throw UsageError("code needs --G or --alpha/--beta");
  }

  auto built = code::build_code(*wsp, G, cfg.threads);
  auto& s = built.summary;
  if (pg) s.puregap_d_omega = pg->bound;

  std::optional<bool> orthogonal;
  if (dual) orthogonal = code::dual_check(wsp->field(), built.generator).orthogonal;
  std::optional<long> dmin;
  bool dmin_attempted = false;
  if (min_weight) {
    dmin_attempted = true;
    dmin = code::min_weight_exhaustive(wsp->field(), built.generator.entries, cfg.cap, cfg.threads);
  }
  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw UsageError("cannot write " + dump_path);
    const auto& M = built.generator.entries;
    for (std::size_t r = 0; r < M.rows(); ++r) {
      for (std::size_t c = 0; c < M.cols(); ++c) f << (c ? "," : "") << wsp->field().to_string(M.at(r, c));
      f << "\n";
    }
  }

  auto opt = [](const auto& v) -> json { return v ? json(*v) : json(nullptr); };
  json j = header("code", cfg);
  j["G"] = {{"inf", G.inf()}, {"pj", std::vector<long>(G.coeffs().begin() + 1, G.coeffs().end())}};
  j["deg_G"] = s.deg_G;
  j["length"] = s.length;
  j["k"] = s.k;
  j["k_omega"] = s.k_omega;
  j["k_formula"] = opt(s.k_formula);
  j["goppa_d"] = opt(s.goppa_d);
  j["goppa_d_omega"] = opt(s.goppa_d_omega);
  j["puregap_d_omega"] = opt(s.puregap_d_omega);
  j["R"] = s.rate;
  j["delta_goppa"] = opt(s.delta_goppa);
  if (dual) j["dual_orthogonal"] = *orthogonal;
  if (dmin_attempted) j["min_weight"] = dmin ? json(*dmin) : json("unknown");

  if (cfg.format == "csv") {
    out << "key,value\n";
    for (const auto& [key, value] : j.items()) {
      if (value.is_object()) continue;
      out << key << "," << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
    out << "G," << csv_row(PoleVector(G.coeffs().begin(), G.coeffs().end())) << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kOk;
}

int exit_for(Errc code) {
  switch (code) {
    case Errc::NotPureGap: return kHypothesis;
    case Errc::CountMismatch:
    case Errc::PrecisionNotReached:
    case Errc::NonUnitInverse:
    case Errc::DivisionByZero: return kInternal;
    default: return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Weierstrass semigroups, pure gaps and multi-point AG codes on the GK curve.\n"
      "Verification defaults to 'both' (closed form plus full oracle box) for n = 2\n"
      "and to 'oracle' (per-tuple oracle checks) for larger n."};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string divisor_text, alpha_text, beta_text, dump_path;
  std::vector<std::string> checks;
  bool skip_box = false, dual = false, min_weight = false;

  auto common = [&](CLI::App* sub, bool with_m) {
    sub->add_option("--n", cfg.n, "curve parameter n (prime power)")->required();
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--max-n", cfg.max_n, "largest n accepted");
    if (with_m) sub->add_option("--m", cfg.m, "number of points P_1..P_m besides P_inf")->required();
  };
  auto* points = app.add_subcommand("points", "enumerate and classify rational points");
  common(points, false);
  auto* dim = app.add_subcommand("dim", "Riemann-Roch dimension of a divisor");
  common(dim, false);
  dim->add_option("--divisor", divisor_text, "{\"inf\": int, \"pj\": [ints]}")->required();
  auto* gamma = app.add_subcommand("gamma", "minimal generating set of H(P_inf, P_1..P_m)");
  common(gamma, true);
  gamma->add_option("--verify", cfg.verify, "closed | oracle | both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  gamma->add_option("--T", cfg.T, "box bound for --verify both (default 2g-1)");
  auto* semigroup = app.add_subcommand("semigroup", "semigroup elements in [0,T]^(m+1)");
  common(semigroup, true);
  semigroup->add_option("--T", cfg.T, "box bound (default 2g-1)");
  semigroup->add_option("--verify", cfg.verify, "closed | oracle | both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  auto* gaps = app.add_subcommand("gaps", "gap tuples in [0,T]^(m+1)");
  common(gaps, true);
  gaps->add_option("--T", cfg.T, "box bound (default 2g-1)");
  gaps->add_option("--verify", cfg.verify, "closed | oracle | both")->check(CLI::IsMember({"closed", "oracle", "both"}));
  auto* puregaps = app.add_subcommand("puregaps", "pure gaps: oracle box, ladder and unit-tail families, checks");
  common(puregaps, true);
  puregaps->add_option("--T", cfg.T, "box bound (default 2g-1)");
  puregaps->add_option("--check", checks, "tuple to test, e.g. 142,2,2,1 (repeatable)");
  puregaps->add_flag("--no-box", skip_box, "skip the oracle box enumeration");
  auto* codecmd = app.add_subcommand("code", "build C_L(D,G) and report parameters");
  common(codecmd, false);
  codecmd->add_option("--G", divisor_text, "{\"inf\": int, \"pj\": [ints]}");
  codecmd->add_option("--alpha", alpha_text, "first pure gap, e.g. 142,2,2,1");
  codecmd->add_option("--beta", beta_text, "second pure gap");
  codecmd->add_flag("--dual-check", dual, "compute the dual code and check orthogonality");
  codecmd->add_flag("--min-weight", min_weight, "exhaustive minimum weight (capped)");
  codecmd->add_option("--cap", cfg.cap, "largest q^k enumerated by --min-weight");
  codecmd->add_option("--dump-generator", dump_path, "write the generator matrix as CSV");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*points) return cmd_points(cfg, out);
    if (*dim) return cmd_dim(cfg, divisor_text, out);
    if (*gamma) return cmd_gamma(cfg, out, err);
    if (*semigroup) return cmd_semigroup(cfg, false, out, err);
    if (*gaps) return cmd_semigroup(cfg, true, out, err);
    if (*puregaps) return cmd_puregaps(cfg, checks, skip_box, out, err);
    if (*codecmd) return cmd_code(cfg, divisor_text, alpha_text, beta_text, dual, min_weight, dump_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace gkws::cli
