#include "rhotensor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "rhotensor/eigencone.hpp"
#include "rhotensor/polytope.hpp"
#include "rhotensor/rep_theory.hpp"
#include "rhotensor/root_system.hpp"
#include "rhotensor/verifier.hpp"

namespace rhotensor::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

constexpr const char* kNodeHelp =
    "Nodes use Bourbaki numbering. Weights are comma-separated integers in the fundamental-weight basis, "
    "e.g. --weight 2,0,1. Types are a family letter and rank, e.g. A2, B3, F4.";

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  std::string type;
  std::string format = "table";
  std::size_t max_lattice_points = ComputeLimits{}.max_lattice_points;
  unsigned threads = 1;
  bool allow_heavy = false;

  ComputeLimits limits() const {
    ComputeLimits l;
    l.max_lattice_points = max_lattice_points;
    l.threads = threads;
    l.allow_heavy = allow_heavy;
    return l;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--type", c.type, "Root system type, e.g. A2, B3, G2, F4")->required();
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--max-lattice-points", c.max_lattice_points, "Cap on enumerated lattice points")
      ->envname("RHOTENSOR_MAX_LATTICE_POINTS");
  sub->add_option("--threads", c.threads, "Worker threads for tensor decomposition")
      ->envname("RHOTENSOR_THREADS")
      ->check(CLI::Range(1u, 256u));
  sub->add_flag("--allow-heavy", c.allow_heavy, "Unlock enumeration-heavy commands for E6/E7/E8")
      ->envname("RHOTENSOR_ALLOW_HEAVY");
}

json weight_json(const Weight& w) { return json(std::vector<std::int64_t>(w.begin(), w.end())); }

json weightq_json(const WeightQ& w) {
  if (w.is_integral()) return weight_json(w.to_integral());
  json arr = json::array();
  for (const auto& x : w) arr.push_back(x.to_string());
  return arr;
}

json spec_json(const RootSystemSpec& spec) {
  return {{"family", std::string(1, spec.name()[0])}, {"rank", spec.rank}, {"name", spec.name()}};
}

Weight parse_weight(const RootDatum& datum, const std::string& text, const char* flag) {
  Weight w;
  try {
    w = Weight::parse(text);
  } catch (const PreconditionViolated& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
  if (w.rank() != datum.rank()) {
    throw UsageError(std::string(flag) + " needs " + std::to_string(datum.rank()) + " coordinates for " +
                     datum.spec().name() + ", got '" + text + "'");
  }
  return w;
}

Weight parse_dominant(const RootDatum& datum, const std::string& text, const char* flag) {
  Weight w = parse_weight(datum, text, flag);
  if (!w.is_dominant()) throw UsageError(std::string(flag) + " must be dominant (non-negative coordinates)");
  return w;
}

struct Result {
  json payload;
  std::string status;  // pass | fail | info
  std::function<void(std::ostream&)> table;
};

json report_json(const VerdictReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases) {
    cases.push_back({{"subject", c.subject}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass}});
  }
  json facts = json::object();
  for (const auto& [k, v] : r.facts) facts[k] = v;
  return {{"campaign", r.campaign}, {"cases", cases},     {"passed", r.passed},
          {"failed", r.failed},     {"facts", facts},     {"informational", r.informational},
          {"wall_time_ms", r.wall_time_ms}};
}

void report_table(std::ostream& os, const VerdictReport& r) {
  std::size_t width = 8;
  for (const auto& c : r.cases) width = std::max(width, c.subject.size());
  for (const auto& c : r.cases) {
    os << (r.informational ? "  note " : c.pass ? "  PASS " : "  FAIL ") << std::left << std::setw(width) << c.subject
       << "  expected " << c.expected << "; observed " << c.observed << '\n';
  }
  for (const auto& [k, v] : r.facts) os << "  " << k << ": " << v << '\n';
  os << "  " << r.passed << " passed, " << r.failed << (r.informational ? " findings" : " failed") << " ("
     << std::fixed << std::setprecision(1) << r.wall_time_ms << " ms)\n";
}

Result from_report(VerdictReport r) {
  Result res;
  res.payload = report_json(r);
  res.status = r.informational ? "info" : r.pass() ? "pass" : "fail";
  res.table = [r = std::move(r)](std::ostream& os) { report_table(os, r); };
  return res;
}

void require_light(const RootDatum& datum, const Common& c, const std::string& command) {
  if (datum.spec().family == Family::E && !c.allow_heavy) {
    throw ResourceLimit(command + " on " + datum.spec().name() +
                        " is enumeration-heavy; pass --allow-heavy (or RHOTENSOR_ALLOW_HEAVY=1) to run it");
  }
}

Result cmd_roots(const RootDatum& datum) {
  json roots = json::array();
  for (const auto& pr : datum.positive_roots()) {
    roots.push_back({{"simple", pr.simple}, {"weight", weight_json(pr.weight)}});
  }
  Result res;
  res.payload = {{"cartan", datum.cartan()},
                 {"positive_roots", roots},
                 {"rho", weight_json(datum.rho())},
                 {"num_positive_roots", datum.num_positive_roots()},
                 {"dim_g", datum.dim_g()}};
  res.status = "info";
  res.table = [&datum](std::ostream& os) {
    os << "  cartan (row i = alpha_i in fundamental coordinates):\n";
    for (const auto& row : datum.cartan()) {
      os << "   ";
      for (auto x : row) os << ' ' << std::setw(3) << x;
      os << '\n';
    }
    os << "  positive roots (simple-root coordinates | fundamental coordinates):\n";
    for (const auto& pr : datum.positive_roots()) {
      std::ostringstream s;
      for (std::size_t i = 0; i < pr.simple.size(); ++i) s << (i ? "," : "") << pr.simple[i];
      os << "    " << std::left << std::setw(24) << s.str() << " | " << pr.weight.to_string() << '\n';
    }
    os << "  rho: " << datum.rho().to_string() << "\n  N = " << datum.num_positive_roots()
       << ", dim g = " << datum.dim_g() << '\n';
  };
  return res;
}

Result cmd_decompose(const RootDatum& datum, const Weight& lhs, const Weight& rhs, const std::optional<Weight>& target,
                     const ComputeLimits& limits) {
  const IrrDecomposition dec = tensor_decompose(datum, lhs, rhs, limits);
  const BigInt dl = weyl_dim(datum, lhs), dr = weyl_dim(datum, rhs);
  BigInt sum = 0;
  json comps = json::array();
  std::vector<std::string> lines;
  for (const auto& [nu, m] : dec.entries) {
    const BigInt d = weyl_dim(datum, nu);
    sum += BigInt(m) * d;
    comps.push_back({{"weight", weight_json(nu)}, {"multiplicity", m}, {"dim", d.str()}});
    lines.push_back("V(" + nu.to_string() + ") x" + std::to_string(m) + "  dim " + d.str());
  }
  const bool conserved = sum == dl * dr;
  Result res;
  res.payload = {{"lhs", weight_json(lhs)},   {"rhs", weight_json(rhs)},          {"components", comps},
                 {"dim_lhs", dl.str()},       {"dim_rhs", dr.str()},              {"dimension_check", conserved}};
  std::string extra;
  if (target) {
    res.payload["target"] = weight_json(*target);
    res.payload["target_multiplicity"] = dec.multiplicity(*target);
    extra = "  multiplicity of V(" + target->to_string() + "): " + std::to_string(dec.multiplicity(*target)) + '\n';
  }
  res.status = conserved ? "pass" : "fail";
  res.table = [=](std::ostream& os) {
    os << "  V(" << lhs.to_string() << ") (x) V(" << rhs.to_string() << "), dims " << dl.str() << " x " << dr.str()
       << '\n';
    for (const auto& l : lines) os << "    " << l << '\n';
    os << "  dimension check: " << (conserved ? "ok" : "MISMATCH") << '\n' << extra;
  };
  return res;
}

Result cmd_mult(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits) {
  const WeightMultiset ch = freudenthal_multiplicities(datum, lambda, limits);
  const BigInt dim = weyl_dim(datum, lambda);
  json ws = json::array();
  std::vector<std::string> lines;
  for (auto it = ch.dominant.rbegin(); it != ch.dominant.rend(); ++it) {
    const std::size_t orbit = weyl_orbit(datum, it->first).size();
    ws.push_back({{"weight", weight_json(it->first)}, {"multiplicity", it->second}, {"orbit_size", orbit}});
    lines.push_back(it->first.to_string() + "  m=" + std::to_string(it->second) + "  orbit " + std::to_string(orbit));
  }
  const bool ok = ch.total == dim;
  Result res;
  res.payload = {{"highest", weight_json(lambda)}, {"dim", dim.str()}, {"total", ch.total.str()},
                 {"dominant_weights", ws}};
  res.status = ok ? "pass" : "fail";
  res.table = [=](std::ostream& os) {
    os << "  dominant weights of V(" << lambda.to_string() << "):\n";
    for (const auto& l : lines) os << "    " << l << '\n';
    os << "  total " << ch.total.str() << ", Weyl dimension " << dim.str() << '\n';
  };
  return res;
}

Result cmd_prop9_single(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits) {
  const Prop9Result r = prop9_decompose(datum, lambda, limits);
  Result res;
  res.payload = {{"lambda", weight_json(lambda)}, {"beta", weight_json(r.beta)}, {"lattice_hull", r.lattice_hull}};
  if (r.freudenthal) {
    res.payload["freudenthal"] = *r.freudenthal;
    res.payload["multiplicity"] = r.multiplicity;
  }
  res.status = "pass";
  res.table = [=](std::ostream& os) {
    os << "  [" << lambda.to_string() << "] = rho + [" << r.beta.to_string() << "]\n  lattice+hull: yes\n";
    if (r.freudenthal) os << "  freudenthal: m = " << r.multiplicity << '\n';
  };
  return res;
}

Result cmd_ineq_single(const RootDatum& datum, const Weight& lambda, const ComputeLimits& limits) {
  const Ineq5Report r = ineq5_check(datum, lambda, limits);
  json viol = json::array();
  for (const auto& v : r.violations) {
    viol.push_back({{"node", v.node}, {"w", v.w.letters}, {"lhs", v.lhs.to_string()}, {"rhs", v.rhs.to_string()}});
  }
  Result res;
  res.payload = {{"lambda", weight_json(lambda)},
                 {"lambda_dual", weight_json(r.lambda_dual)},
                 {"checks", r.checks},
                 {"violations", viol}};
  res.status = r.pass() ? "pass" : "fail";
  res.table = [=](std::ostream& os) {
    os << "  lambda = [" << lambda.to_string() << "], lambda* = [" << r.lambda_dual.to_string() << "]\n  " << r.checks
       << " inequalities, " << r.violations.size() << " violations\n";
    for (const auto& v : r.violations)
      os << "    node " << v.node << " w=" << v.w.to_string() << ": " << v.lhs << " > " << v.rhs << '\n';
  };
  return res;
}

int exit_for(const std::string& status) { return status == "fail" ? kVerificationFailed : kSuccess; }

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"rhotensor: exact computations around V(rho) (x) V(rho) for simple Lie algebras"};
  app.footer(kNodeHelp);
  app.require_subcommand(1);

  Common common;
  std::string lhs, rhs, weight, target, factor = "1";
  std::uint64_t samples = 0;
  int cap = 1;
  bool hull = false;

  auto* roots = app.add_subcommand("roots", "Cartan matrix, positive roots, rho");
  auto* decompose = app.add_subcommand("decompose", "Decompose V(lhs) (x) V(rhs)");
  decompose->add_option("--lhs", lhs, "Highest weight of the first factor")->required();
  decompose->add_option("--rhs", rhs, "Highest weight of the second factor")->required();
  decompose->add_option("--target", target, "Also report the multiplicity of this component");
  auto* mult = app.add_subcommand("mult", "Weight multiplicities of V(weight)");
  mult->add_option("--weight", weight, "Highest weight")->required();
  auto* kostant = app.add_subcommand("kostant", "Check V(d*lambda) in V(d*rho) (x) V(d*rho) for all lambda <= 2rho");
  kostant->add_option("--factor", factor, "Scaling factor d, or 'saturation' for the tabulated saturation factor");
  auto* vertices = app.add_subcommand("vertices", "Vertices c_J and face intersections of the polytope A cap C");
  vertices->add_flag("--hull", hull, "Also compare conv{c_J} membership with the direct test on a lattice box");
  auto* prop9 = app.add_subcommand("prop9", "Write lambda <= 2rho as rho + (weight of V(rho))");
  prop9->add_option("--weight", weight, "Single dominant weight (default: sweep all lambda <= 2rho)");
  auto* ineq = app.add_subcommand("ineq", "Sweep lambda*(w x_P) <= (rho + w^-1 rho)(x_P)");
  ineq->add_option("--weight", weight, "Single dominant weight (default: sweep all lambda <= 2rho)");
  auto* identity4 = app.add_subcommand("identity4", "Check the chi_w identity over (W^P)^3");
  identity4->add_option("--samples", samples, "Fixed-seed random triples per node (0 = exhaustive)");
  auto* dims = app.add_subcommand("dims", "Check 2^r dim V(rho)^2 = 2^dim g");
  auto* probe = app.add_subcommand("probe-saturation", "Search small triples for saturation failures at d = 1");
  probe->add_option("--cap", cap, "Largest coordinate of the scanned weights")->check(CLI::NonNegativeNumber);

  for (auto* sub : {roots, decompose, mult, kostant, vertices, prop9, ineq, identity4, dims, probe}) {
    add_common(sub, common);
    sub->footer(kNodeHelp);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << "run '" << sub->get_name() << " --help' for usage\n";
    return kUsageError;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    const RootSystemSpec spec = RootSystemSpec::parse(common.type);
    const RootDatum datum = build_root_datum(spec);
    const ComputeLimits limits = common.limits();

    Result res;
    if (chosen == roots) {
      res = cmd_roots(datum);
    } else if (chosen == dims) {
      res = from_report(exterior_dim_check(datum));
    } else {
      require_light(datum, common, command);
      if (chosen == decompose) {
        std::optional<Weight> t;
        if (!target.empty()) t = parse_dominant(datum, target, "--target");
        res = cmd_decompose(datum, parse_dominant(datum, lhs, "--lhs"), parse_dominant(datum, rhs, "--rhs"), t, limits);
      } else if (chosen == mult) {
        res = cmd_mult(datum, parse_dominant(datum, weight, "--weight"), limits);
      } else if (chosen == kostant) {
        int d = 0;
        if (factor == "saturation") {
          d = saturation_factor(spec);
        } else {
          try {
            std::size_t used = 0;
            d = std::stoi(factor, &used);
            if (used != factor.size()) d = 0;
          } catch (const std::exception&) {
            d = 0;
          }
          if (d < 1) throw UsageError("--factor must be a positive integer or 'saturation'");
        }
        res = from_report(kostant_check(datum, d, limits));
      } else if (chosen == vertices) {
        VerdictReport r = lemma7_campaign(datum, limits);
        if (hull) {
          VerdictReport h = corollary8_campaign(datum, limits);
          for (auto& c : h.cases) r.add(std::move(c.subject), std::move(c.expected), std::move(c.observed), c.pass);
          for (auto& [k, v] : h.facts) r.facts["hull_" + k] = v;
          r.wall_time_ms += h.wall_time_ms;
        }
        res = from_report(std::move(r));
        json vs = json::array();
        for (std::uint32_t mask = 0; mask < (1u << datum.rank()); ++mask) {
          vs.push_back({{"subset", NodeSet(mask).nodes()}, {"c", weightq_json(vertex_c(datum, NodeSet(mask)))}});
        }
        res.payload["vertices"] = vs;
      } else if (chosen == prop9) {
        res = weight.empty() ? from_report(prop9_campaign(datum, limits))
                             : cmd_prop9_single(datum, parse_dominant(datum, weight, "--weight"), limits);
      } else if (chosen == ineq) {
        res = weight.empty() ? from_report(ineq5_campaign(datum, limits))
                             : cmd_ineq_single(datum, parse_dominant(datum, weight, "--weight"), limits);
      } else if (chosen == identity4) {
        res = from_report(identity4_campaign(datum, samples, limits));
      } else if (chosen == probe) {
        res = from_report(conjecture4_probe(datum, cap, limits));
      }
    }

    if (common.format == "json") {
      json env = {{"schema_version", kSchemaVersion},
                  {"command", command},
                  {"spec", spec_json(spec)},
                  {"payload", res.payload},
                  {"status", res.status}};
      out << env.dump(2) << '\n';
    } else {
      out << command << ' ' << spec.name() << ": " << res.status << '\n';
      res.table(out);
    }
    return exit_for(res.status);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidSpec& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NonDominantInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kResourceError;
  } catch (const InternalConsistencyError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace rhotensor::cli
