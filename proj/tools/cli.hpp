#pragma once

// Command-line frontend. Each invocation prints one JSON record
//   {"stable": {"command", "inputs", "outputs"}, "timing_ms": n}
// or, with --quiet, only outputs.value. Exit codes: 0 ok, 1 a verification
// reported mismatches, 2 bad input.

#include <chrono>
#include <cstdint>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "compcoll/chambers.hpp"
#include "compcoll/gitmodel.hpp"
#include "compcoll/invariants.hpp"
#include "compcoll/rootdata.hpp"
#include "compcoll/volume.hpp"

namespace compcoll::cli {

using nlohmann::ordered_json;

struct CommandResult {
  std::string command;
  ordered_json inputs = ordered_json::object();
  ordered_json outputs = ordered_json::object();
  std::int64_t timing_ms = 0;

  ordered_json stable() const { return {{"command", command}, {"inputs", inputs}, {"outputs", outputs}}; }
  ordered_json to_json() const { return {{"stable", stable()}, {"timing_ms", timing_ms}}; }

  static CommandResult from_json(const ordered_json& j) {
    CommandResult r;
    const auto& s = j.at("stable");
    r.command = s.at("command").get<std::string>();
    r.inputs = s.at("inputs");
    r.outputs = s.at("outputs");
    r.timing_ms = j.at("timing_ms").get<std::int64_t>();
    return r;
  }

  friend bool operator==(const CommandResult&, const CommandResult&) = default;
};

inline std::string str(const BigInt& z) { return z.get_str(); }
inline std::string str(const BigRational& q) { return q.get_str(); }

inline RationalVector parse_point(const std::string& text) {
  RationalVector out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw DomainError("not a rational point: '" + text + "'");
    }
  }
  return out;
}

/// "1,0;0,1" -> {(1,0),(0,1)}
inline VectorList parse_vector_list(const std::string& text) {
  std::vector<IntVector> vs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ';')) vs.push_back(parse_weight(tok).coords());
  if (vs.empty()) throw DomainError("empty vector list");
  const auto d = vs.front().size();
  return VectorList(d, std::move(vs));
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string triple_str(const Triple& t) {
  return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

inline std::string vec_str(const IntVector& v) {
  std::vector<std::string> parts;
  for (auto c : v) parts.push_back(std::to_string(c));
  return join(parts, ",");
}

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariant dimensions, splines and volumes for complete collineations", "compcoll"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("--quiet,-q", quiet, "Print only the value");

  int rank = 3;
  std::string weight, point, list, vectors, target, case_name;
  std::int64_t bound = 0, k_max = 25;
  std::string tolerance = "3/20";
  std::vector<std::string> points;
  bool lemma_a0 = false;

  auto* dim = app.add_subcommand("dim", "Weyl dimension of V_lambda");
  dim->add_option("--rank", rank, "N for SL_{N+1}")->capture_default_str();
  dim->add_option("--weight", weight, "Dominant weight a1,...,aN")->required();

  auto* invdim = app.add_subcommand("invdim", "dim of SL2-invariants in V_lambda");
  invdim->add_option("--rank", rank, "N for SL_{N+1}, N >= 2")->capture_default_str();
  invdim->add_option("--weight", weight, "Dominant weight a1,...,aN")->required();

  auto* sections = app.add_subcommand("sections", "Isotypic decomposition of the sections of L_lambda");
  sections->add_option("--rank", rank, "N for SL_{N+1}")->capture_default_str();
  sections->add_option("--weight", weight, "Dominant weight")->required();

  auto* genfun = app.add_subcommand("genfun", "Generating function of invariant dimensions (N=3)");
  genfun->require_subcommand(1);
  auto* gcoeff = genfun->add_subcommand("coeff", "Series coefficient at a multidegree");
  gcoeff->add_option("--weight", weight, "Multidegree a,b,c")->required();
  auto* gverify = genfun->add_subcommand("verify", "Compare with the constant-term oracle on a box");
  gverify->add_option("--bound", bound, "Check all multidegrees <= (bound,bound,bound)")->required();

  auto* vpf = app.add_subcommand("vpf", "Vector partition function");
  vpf->require_subcommand(1);
  auto* vcount = vpf->add_subcommand("count", "Count partitions of a target");
  auto* vlist_opt = vcount->add_option("--list", list, "A1|A2|A3|A4");
  vcount->add_option("--vectors", vectors, "Vector list, e.g. 1,0;0,1")->excludes(vlist_opt);
  vcount->add_option("--target", target, "Target vector")->required();

  auto* spline = app.add_subcommand("spline", "Multivariate splines of the lists A1..A4");
  spline->require_subcommand(1);
  auto* sshow = spline->add_subcommand("show", "Print pieces, walls and lattice index");
  sshow->add_option("--list", list, "A1|A2|A3|A4")->required();
  auto* sverify = spline->add_subcommand("verify", "Compare the spline with partition counts");
  sverify->add_option("--list", list, "A1|A2|A3|A4");
  sverify->add_option("--point", points, "Sample point (repeatable)")->required();
  sverify->add_option("--kmax", k_max, "Largest dilation")->capture_default_str();
  sverify->add_option("--tolerance", tolerance, "Allowed relative deviation (rational)")->capture_default_str();
  sverify->add_flag("--lemma-a0", lemma_a0, "Check 24T_A1+4T_A2+6T_A3+6T_A4 = dimas at the points instead");

  auto* dimas = app.add_subcommand("dimas", "Asymptotic invariant dimension");
  dimas->add_option("--case", case_name, "conic|cubic")->required();
  dimas->add_option("--point", point, "Rational point in the Weyl chamber")->required();

  auto* vol = app.add_subcommand("volume", "Volume of L_lambda");
  vol->add_option("--case", case_name, "conic|cubic")->required();
  vol->add_option("--weight", weight, "Dominant weight")->required();

  auto* git = app.add_subcommand("git", "GIT of linearizations (twisted cubic)");
  git->require_subcommand(1);
  auto* gclassify = git->add_subcommand("classify", "Stability, chamber and boundary divisors");
  gclassify->add_option("--weight", weight, "Linearization a1,a2,a3")->required();

  auto* vals = app.add_subcommand("valuations", "Central valuations of a weight (N=3)");
  vals->add_option("--weight", weight, "Dominant weight")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  CommandResult r;
  int status = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    auto set_value = [&](const std::string& v) { r.outputs["value"] = v; };
    if (dim->parsed()) {
      r.command = "dim";
      r.inputs = {{"rank", std::to_string(rank)}, {"weight", weight}};
      set_value(str(weyl_dim(RootSystemA(static_cast<std::size_t>(rank)), parse_weight(weight))));
    } else if (invdim->parsed()) {
      r.command = "invdim";
      r.inputs = {{"rank", std::to_string(rank)}, {"weight", weight}};
      set_value(str(sl2_invariant_dim(RootSystemA(static_cast<std::size_t>(rank)), parse_weight(weight))));
    } else if (sections->parsed()) {
      r.command = "sections";
      r.inputs = {{"rank", std::to_string(rank)}, {"weight", weight}};
      std::vector<std::string> parts;
      ordered_json terms = ordered_json::array();
      for (const auto& [mu, m] : sections_decomposition(RootSystemA(static_cast<std::size_t>(rank)), parse_weight(weight))) {
        parts.push_back(mu.to_string() + ":" + str(m));
        terms.push_back({{"weight", mu.to_string()}, {"multiplicity", str(m)}});
      }
      r.outputs["terms"] = terms;
      set_value(join(parts, " "));
    } else if (gcoeff->parsed()) {
      r.command = "genfun coeff";
      r.inputs = {{"weight", weight}};
      const auto w = parse_weight(weight);
      if (w.rank() != 3 || !w.is_dominant()) throw DomainError("multidegree must be three nonnegative integers");
      const auto b = std::max({w[0], w[1], w[2]});
      const auto coeffs = series_coefficients(theorem_mess_series(), b);
      set_value(str(coeffs.at({static_cast<int>(w[0]), static_cast<int>(w[1]), static_cast<int>(w[2])})));
    } else if (gverify->parsed()) {
      r.command = "genfun verify";
      r.inputs = {{"bound", std::to_string(bound)}};
      const auto rep = verify_genfun(bound);
      ordered_json bad = ordered_json::array();
      for (const auto& m : rep.mismatches)
        bad.push_back({{"weight", m.weight.to_string()}, {"series", str(m.series)}, {"oracle", str(m.oracle)}});
      r.outputs["checked"] = std::to_string(rep.checked);
      r.outputs["mismatches"] = bad;
      set_value("checked=" + std::to_string(rep.checked) + " mismatches=" + std::to_string(rep.mismatches.size()));
      if (!rep.mismatches.empty()) status = 1;
    } else if (vcount->parsed()) {
      r.command = "vpf count";
      if (list.empty() && vectors.empty()) throw DomainError("give --list or --vectors");
      const auto a = list.empty() ? parse_vector_list(vectors) : spline_list(parse_list_id(list));
      r.inputs = {{"vectors", list.empty() ? vectors : list}, {"target", target}};
      set_value(str(vector_partition_count(a, parse_weight(target).coords())));
    } else if (sshow->parsed()) {
      r.command = "spline show";
      r.inputs = {{"list", list}};
      const auto m = spline_model(parse_list_id(list));
      ordered_json pieces = ordered_json::array();
      std::vector<std::string> lines;
      const std::vector<std::string> names = {"x1", "x2", "x3"};
      for (const auto& p : m.pieces.pieces()) {
        std::vector<std::string> guards;
        for (const auto& g : p.guards) guards.push_back(MultiPoly::linear(g.normal).to_string(names) + " >= 0");
        pieces.push_back({{"label", p.label}, {"guards", guards}, {"polynomial", p.poly.to_string(names)}});
        lines.push_back(p.label + ": " + p.poly.to_string(names) + "  [" + join(guards, ", ") + "]");
      }
      std::vector<std::string> walls;
      for (const auto& w : wall_hyperplanes(m.vectors)) walls.push_back(vec_str(w));
      r.outputs["index"] = str(m.index_in_ambient());
      r.outputs["walls"] = walls;
      r.outputs["pieces"] = pieces;
      set_value(join(lines, "\n"));
    } else if (sverify->parsed()) {
      r.command = "spline verify";
      r.inputs = {{"list", list}, {"points", points}, {"kmax", std::to_string(k_max)}, {"tolerance", tolerance},
                  {"lemma_a0", lemma_a0 ? "true" : "false"}};
      if (lemma_a0) {
        std::vector<Point> grid;
        for (const auto& p : points) grid.push_back(parse_point(p));
        const auto d = verify_lemma_a0(grid);
        r.outputs["max_discrepancy"] = str(d);
        set_value("discrepancy=" + str(d));
        if (d != 0) status = 1;
      } else {
        if (list.empty()) throw DomainError("--list is required");
        const auto tol = parse_rational(tolerance);
        std::vector<IntVector> samples;
        for (const auto& p : points) samples.push_back(parse_weight(p).coords());
        BigRational worst = 0;
        ordered_json rows = ordered_json::array();
        for (const auto& s : spline_samples(parse_list_id(list), samples, k_max)) {
          rows.push_back({{"point", vec_str(s.point)}, {"k", std::to_string(s.k)}, {"count", str(s.count)},
                          {"predicted", str(s.predicted)}, {"deviation", str(s.deviation)}});
          worst = std::max(worst, s.deviation);
        }
        r.outputs["samples"] = rows;
        r.outputs["max_deviation"] = str(worst);
        set_value("max_deviation=" + str(worst) + (worst <= tol ? " within" : " exceeds") + " tolerance " + str(tol));
        if (worst > tol) status = 1;
      }
    } else if (dimas->parsed()) {
      r.command = "dimas";
      r.inputs = {{"case", case_name}, {"point", point}};
      set_value(str(dimas_vh(parse_case(case_name), parse_point(point))));
    } else if (vol->parsed()) {
      r.command = "volume";
      r.inputs = {{"case", case_name}, {"weight", weight}};
      set_value(str(volume(parse_case(case_name), parse_weight(weight))));
    } else if (gclassify->parsed()) {
      r.command = "git classify";
      r.inputs = {{"weight", weight}};
      const auto w = parse_weight(weight);
      if (w.rank() != 3) throw DomainError("linearization needs three coordinates");
      const auto rep = classify_linearization({w[0], w[1], w[2]});
      std::vector<std::string> uns, semi, divs;
      for (const auto& c : rep.unstable_strata) uns.push_back(triple_str(c));
      for (const auto& c : rep.strictly_semistable_strata) semi.push_back(triple_str(c));
      for (auto d : rep.boundary_divisors) divs.push_back(to_string(d));
      r.outputs["unstable_strata"] = uns;
      r.outputs["strictly_semistable_strata"] = semi;
      r.outputs["is_general"] = rep.is_general ? "true" : "false";
      r.outputs["chamber"] = rep.chamber;
      r.outputs["boundary_divisors"] = divs;
      set_value("chamber=" + rep.chamber + " general=" + (rep.is_general ? "true" : "false") + " divisors=" + join(divs, ","));
    } else if (vals->parsed()) {
      r.command = "valuations";
      r.inputs = {{"weight", weight}};
      const auto v = central_valuations(parse_weight(weight));
      set_value(str(v[0]) + "," + str(v[1]) + "," + str(v[2]));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  r.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (quiet)
    out << r.outputs["value"].get<std::string>() << "\n";
  else
    out << r.to_json().dump() << "\n";
  return status;
}

}  // namespace compcoll::cli
