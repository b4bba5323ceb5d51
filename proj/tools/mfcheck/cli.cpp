#include "cli.hpp"

#include <chrono>
#include <optional>

#include "CLI11.hpp"
#include "mf/endo.hpp"
#include "mf/error.hpp"
#include "mf/exactness.hpp"
#include "mf/factorization.hpp"
#include "mf/quat_order.hpp"
#include "mf/regularity.hpp"
#include "mf/reproductions.hpp"
#include "mf/ring_ops.hpp"
#include "mf/ring_spec.hpp"
#include "mf/skew_module.hpp"
#include "mf/zx.hpp"

namespace mf::cli {

namespace {

struct Options {
  std::string format = "text";
  bool timing = false;

  std::string ring_spec;
  std::string field = "2^2";
  std::string sigma = "frob^1";
  std::string poly;
  std::string a, b, c;
  bool all = false;
  bool zx = false;
  std::optional<Elem> idempotent;
  std::optional<Elem> s;
  std::string example;
};

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used == text.size()) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("bad " + what + ": '" + text + "'");
}

std::shared_ptr<const SkewContext> skew_context_from(const Options& o) {
  const auto caret = o.field.find('^');
  const unsigned p = parse_unsigned(o.field.substr(0, caret), "--field");
  const unsigned n = caret == std::string::npos ? 1 : parse_unsigned(o.field.substr(caret + 1), "--field");
  unsigned power = 0;
  if (o.sigma != "id") {
    if (o.sigma.rfind("frob", 0) != 0) throw UsageError("--sigma must be id or frob^i");
    const auto sc = o.sigma.find('^');
    power = sc == std::string::npos ? 1 : parse_unsigned(o.sigma.substr(sc + 1), "--sigma");
  }
  return skew_context(p, n, power);
}

SkewPoly poly_from(const Options& o, const std::string& text, const std::string& flag) {
  if (text.empty()) throw UsageError(flag + " is required");
  return parse_coefficients(skew_context_from(o), text);
}

bool is_integers(const std::string& spec) { return parse_ring_spec(spec).kind == RingSpec::Kind::Integers; }

Report ring_show(const std::string& spec) {
  Report r;
  r.command = "ring show";
  if (is_integers(spec)) {
    r.lines.push_back("ring: int (witnessed backend, no finite model)");
    r.add("ring axioms", Status::Verified, "integers");
    return r;
  }
  const FiniteRing ring = build_ring(spec);
  auto list = [&ring](const std::vector<Elem>& xs) {
    std::string out = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + ring.format(xs[i]);
    return out + "}";
  };
  r.lines.push_back("ring: " + ring.name());
  r.lines.push_back("order: " + std::to_string(ring.size()));
  r.lines.push_back("one: " + ring.format(ring.one()));
  r.lines.push_back("units: " + std::to_string(ring.unit_list().size()));
  r.lines.push_back("idempotents: " + list(ring.idempotent_list()));
  r.lines.push_back("radical: " + list(ring.radical().members()));
  r.add("ring axioms", Status::Verified, std::to_string(ring.size()) + " elements");
  return r;
}

Report ring_covers(const std::string& spec) {
  Report r;
  r.command = "ring covers";
  if (is_integers(spec)) {
    r.add("every R/xR has a projective cover", has_all_cyclic_covers(IntegerRing{}));
    return r;
  }
  const FiniteRing ring = build_ring(spec);
  std::set<std::vector<Elem>> seen;
  for (Elem x = 0; x < ring.size(); ++x) {
    if (!seen.insert(principal_right_ideal(ring, x).members()).second) continue;
    const CyclicCover cover = projective_cover_cyclic(ring, x);
    r.lines.push_back("R/" + ring.format(x) + "R <- " + ring.format(cover.cover.idempotent) +
                      "R, kernel size " + std::to_string(cover.cover.kernel.size()));
  }
  r.add("every R/xR has a projective cover", has_all_cyclic_covers(ring));
  return r;
}

Report ring_covers_vs_regularity(const std::string& spec) {
  const RingHandle handle =
      is_integers(spec) ? RingHandle{IntegerRing{}} : RingHandle{build_ring(spec)};
  return covers_vs_regularity(handle);
}

Report skew_factor(const Options& o) {
  const SkewPoly f = poly_from(o, o.poly, "--poly");
  const std::vector<Factorization> list = o.all ? enumerate_factorizations(f) : maximal_factorizations(f);
  Report r;
  r.command = "skew factor";
  r.lines.push_back("f = " + f.pretty() + " over " + f.context().describe());
  for (const Factorization& fac : list) r.lines.push_back(fac.pretty());
  r.add((o.all ? "factorizations: " : "maximal factorizations: ") + std::to_string(list.size()),
        Status::Verified);
  return r;
}

Report skew_chains(const Options& o) {
  const SkewPoly f = poly_from(o, o.poly, "--poly");
  const std::vector<Factorization> list = o.all ? enumerate_factorizations(f) : maximal_factorizations(f);
  Report r;
  r.command = "skew chains";
  r.lines.push_back("f = " + f.pretty() + " over " + f.context().describe());
  bool round_trip = true;
  for (const Factorization& fac : list) {
    const IdealChain chain = chain_from_factorization(fac);
    std::string line = "R";
    for (std::size_t i = 1; i < chain.generators.size(); ++i) {
      line += " > (" + chain.generators[i].pretty() + ")R";
    }
    r.lines.push_back(line);
    round_trip = round_trip && factorization_from_chain(chain) == fac;
  }
  r.add_bool("chain and factorization round trip", round_trip,
             std::to_string(list.size()) + " chains");
  return r;
}

Report skew_closure(const Options& o) {
  if (o.zx) {
    if (o.a.empty() || o.b.empty()) throw UsageError("--a and --b are required");
    const ZPoly a = zx_parse(o.a), b = zx_parse(o.b);
    Report r;
    r.command = "skew closure";
    r.lines.push_back("a = " + zx_format(a) + ", b = " + zx_format(b) + " in Z[x]");
    r.add("aZ[x] + bZ[x] is principal", zx_sum_principal(a, b));
    return r;
  }
  return sum_closure_check(poly_from(o, o.a, "--a"), poly_from(o, o.b, "--b"),
                           poly_from(o, o.c, "--c"));
}

FiniteModule endo_module(const FiniteRing& ring, const Options& o) {
  const Elem e = o.idempotent.value_or(ring.one());
  if (e >= ring.size() || ring.mul(e, e) != e) {
    throw UsageError("--idempotent " + std::to_string(e) + " is not an idempotent index");
  }
  if (e == ring.one()) return regular_module(ring);
  return ideal_module(ring, principal_right_ideal(ring, e), ring.format(e) + "R");
}

std::vector<Elem> endo_targets(const EndoRing& e, const Options& o) {
  if (o.s) {
    if (*o.s >= e.size()) throw UsageError("--s is outside End(M), which has " +
                                           std::to_string(e.size()) + " elements");
    return {*o.s};
  }
  std::vector<Elem> all(e.size());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

Report endo_suite(const Options& o) {
  const FiniteRing ring = build_ring(o.ring_spec);
  const EndoRing e(endo_module(ring, o));
  Report r;
  r.command = "endo suite";
  r.lines.push_back("M = " + e.module().name() + ", |M| = " + std::to_string(e.module().size()) +
                    ", |End(M)| = " + std::to_string(e.size()));
  r.append(split_epi_sweep(e), "");
  r.append(decomposition_check(e), "");
  for (Elem s : endo_targets(e, o)) {
    const std::string prefix = "s = " + e.ring().format(s) + ": ";
    r.append(endo_correspondence_suite(e, s), prefix);
    r.append(cover_transfer_check(e, s), prefix);
  }
  return r;
}

Report endo_minimal(const Options& o) {
  const FiniteRing ring = build_ring(o.ring_spec);
  const EndoRing e(endo_module(ring, o));
  Report r;
  r.command = "endo minimal";
  for (Elem s : endo_targets(e, o)) {
    r.append(minimal_summands_report(e, s), "s = " + e.ring().format(s) + ": ");
  }
  return r;
}

Report reproduce(const std::string& which) {
  if (which == "36") return reproduce_quaternion_example();
  if (which == "45") return reproduce_matrix_dvr_example();
  if (which == "46") return reproduce_triangular_example();
  throw UsageError("unknown example '" + which + "'");
}

std::string echo(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--timing") continue;
    if (args[i] == "--format" && i + 1 < args.size()) {
      ++i;
      continue;
    }
    if (args[i].rfind("--format=", 0) == 0) continue;
    out += (out.empty() ? "" : " ") + args[i];
  }
  return out;
}

}  // namespace

int exit_code_for(Status status) {
  switch (status) {
    case Status::Verified: return kExitVerified;
    case Status::Falsified: return kExitFalsified;
    case Status::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

Outcome run(const std::vector<std::string>& args) {
  Options o;
  std::function<Report()> action;

  CLI::App app{"Verification workbench for cyclically presented modules", "mfcheck"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timing", o.timing, "Record wall-clock time in the report");

  CLI::App* ring = app.add_subcommand("ring", "Finite rings and the integers");
  ring->require_subcommand(1);
  for (const char* verb : {"show", "theorem41", "covers"}) {
    CLI::App* sub = ring->add_subcommand(verb);
    sub->add_option("spec", o.ring_spec, "Ring spec")->required();
    const std::string name = verb;
    sub->callback([&, name] {
      action = [&, name] {
        if (name == "show") return ring_show(o.ring_spec);
        if (name == "covers") return ring_covers(o.ring_spec);
        return ring_covers_vs_regularity(o.ring_spec);
      };
    });
  }

  CLI::App* skew = app.add_subcommand("skew", "Skew polynomials over F_q");
  skew->require_subcommand(1);
  auto skew_flags = [&o](CLI::App* sub) {
    sub->add_option("--field", o.field, "p^n")->capture_default_str();
    sub->add_option("--sigma", o.sigma, "id or frob^i")->capture_default_str();
  };
  for (const char* verb : {"factor", "chains", "poset"}) {
    CLI::App* sub = skew->add_subcommand(verb);
    skew_flags(sub);
    sub->add_option("--poly", o.poly, "Coefficients low to high")->required();
    if (std::string(verb) != "poset") sub->add_flag("--all", o.all, "All factorizations, not only maximal ones");
    const std::string name = verb;
    sub->callback([&, name] {
      action = [&, name] {
        if (name == "factor") return skew_factor(o);
        if (name == "chains") return skew_chains(o);
        return pi_exact_poset(poly_from(o, o.poly, "--poly"));
      };
    });
  }
  CLI::App* closure = skew->add_subcommand("closure");
  skew_flags(closure);
  closure->add_option("--a", o.a, "First generator");
  closure->add_option("--b", o.b, "Second generator");
  closure->add_option("--c", o.c, "Common multiple");
  closure->add_flag("--zx", o.zx, "Decide principality of aZ[x] + bZ[x] instead");
  closure->callback([&] { action = [&] { return skew_closure(o); }; });

  CLI::App* quat = app.add_subcommand("quat", "The quaternion order");
  quat->require_subcommand(1);
  quat->add_subcommand("example36")->callback([&] {
    action = [] {
      Report r = verify_presentation_dependence();
      r.command = "quat example36";
      return r;
    };
  });

  CLI::App* endo = app.add_subcommand("endo", "Endomorphism rings of eR");
  endo->require_subcommand(1);
  for (const char* verb : {"suite", "minimal"}) {
    CLI::App* sub = endo->add_subcommand(verb);
    sub->add_option("spec", o.ring_spec, "Ring spec")->required();
    sub->add_option("--idempotent", o.idempotent, "Index of e; the module is eR (default: the identity, giving R_R)");
    sub->add_option("--s", o.s, "Index of s in End(eR) (default: all)");
    const std::string name = verb;
    sub->callback([&, name] {
      action = [&, name] { return name == "suite" ? endo_suite(o) : endo_minimal(o); };
    });
  }

  CLI::App* examples = app.add_subcommand("examples", "Worked examples");
  examples->require_subcommand(1);
  CLI::App* rep = examples->add_subcommand("reproduce");
  rep->add_option("which", o.example, "36, 45 or 46")
      ->required()
      ->check(CLI::IsMember({"36", "45", "46"}));
  rep->callback([&] { action = [&] { return reproduce(o.example); }; });

  Outcome out;
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out.output = app.help();
    out.exit_code = kExitVerified;
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.output = app.help("", CLI::AppFormatMode::All);
    out.exit_code = kExitVerified;
    return out;
  } catch (const CLI::ParseError& e) {
    out.error = e.what();
    out.exit_code = kExitUsage;
    return out;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    report = action();
  } catch (const EquivalenceViolation& e) {
    out.error = e.what();
    out.exit_code = kExitEquivalence;
    return out;
  } catch (const SizeExceeded& e) {
    report = Report{};
    report.command = echo(args);
    report.add("input within enumeration bounds", Status::Unknown, e.what());
  } catch (const BoundExceeded& e) {
    report = Report{};
    report.command = echo(args);
    report.add("input within arithmetic bounds", Status::Unknown, e.what());
  } catch (const Error& e) {
    out.error = e.what();
    out.exit_code = kExitUsage;
    return out;
  }
  report.input = echo(args);
  report.tool_version = tool_version();
  if (o.timing) {
    report.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count());
  }
  out.output = o.format == "json" ? to_json(report) + "\n" : to_text(report);
  out.exit_code = exit_code_for(report.status());
  return out;
}

}  // namespace mf::cli
