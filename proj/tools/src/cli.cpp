// Copyright 2026 The acalg Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "acalg_tools/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "acalg/expr.hpp"
#include "acalg/homology.hpp"
#include "acalg/mc.hpp"
#include "acalg/representation.hpp"
#include "json.hpp"

namespace acalg::cli {

namespace {

using json = nlohmann::ordered_json;

/// What a command produced: JSON always, text always, CSV for tables only.
struct Output {
  json data;
  std::string text;
  std::optional<std::string> csv;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OutOfDomain("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Scalar scalar_arg(const std::string& text) {
  try {
    return Scalar::parse(text);
  } catch (const Error&) {
    throw UsageError("'" + text + "' is not a scalar");
  }
}

json elements_json(const std::vector<AlgebraElement>& elems) {
  json list = json::array();
  for (const auto& e : elems) list.push_back(render(e));
  return list;
}

std::vector<AlgebraElement> values(const std::vector<LieElement>& elems) {
  std::vector<AlgebraElement> out;
  for (const auto& e : elems) out.push_back(e.value());
  return out;
}

/// Degree-1 differential named on the command line.
std::pair<std::string, LieElement> differential_arg(const std::vector<std::string>& values) {
  if (values.empty()) throw UsageError("--diff needs a value");
  const std::string& head = values[0];
  if (head == "st") {
    if (values.size() != 3) throw UsageError("--diff st needs two scalars s and t");
    const Scalar s = scalar_arg(values[1]);
    const Scalar t = scalar_arg(values[2]);
    return {"d_{" + s.to_string() + "," + t.to_string() + "}", d_st(s, t)};
  }
  if (values.size() != 1) throw UsageError("--diff takes one value (or st <s> <t>)");
  if (head == "d") return {"d", LieElement::certify(total_differential(), 1)};
  return {head, LieElement::certify(parse_element(head), 1)};
}

BracketExpr bracket_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Generator: return BracketExpr::leaf(e.generator);
    case Expr::Kind::Group: return bracket_expr(*e.children[0]);
    case Expr::Kind::Bracket:
      return BracketExpr::bracket(bracket_expr(*e.children[0]), bracket_expr(*e.children[1]));
    default:
      throw OutOfDomain("derivations take a bracket of generators, e.g. [del,[delbar,del]]");
  }
}

void check_cap(int k, int cap) {
  if (k > cap) {
    throw InvalidDegree("degree " + std::to_string(k) + " exceeds --max-degree " + std::to_string(cap));
  }
  if (k < 0) throw InvalidDegree("negative degree " + std::to_string(k));
}

json g1_json(const G1Coords& c) {
  return json{{"x", c[0].to_string()}, {"y", c[1].to_string()}, {"z", c[2].to_string()},
              {"w", c[3].to_string()}};
}

json violations_json(const std::vector<RelationViolation>& vs) {
  json list = json::array();
  for (const auto& v : vs) list.push_back({{"relation", v.relation}, {"vector", v.vector}, {"image", v.image}});
  return list;
}

std::string violations_text(const std::vector<RelationViolation>& vs) {
  if (vs.empty()) return "ok: all seven relations hold";
  std::string out = std::to_string(vs.size()) + " violation(s)";
  for (const auto& v : vs) out += "\n  " + v.relation + " on " + v.vector + ": " + v.image;
  return out;
}

// ---------------------------------------------------------------------------
// Commands

Output cmd_dims(int k_max, const std::string& carrier_name, int cap) {
  check_cap(k_max, cap);
  const Carrier carrier = Carrier::parse(carrier_name);
  Output o;
  o.data["carrier"] = carrier.name();
  o.data["dims"] = json::array();
  std::vector<std::string> dims;
  std::string csv = "degree,dim\n";
  for (int k = carrier.min_degree(); k <= k_max; ++k) {
    const std::size_t d = carrier.dim(k);
    o.data["dims"].push_back({{"degree", k}, {"dim", d}});
    dims.push_back(std::to_string(d));
    csv += std::to_string(k) + "," + std::to_string(d) + "\n";
  }
  o.text = join(dims, ",");
  o.csv = csv;
  return o;
}

Output cmd_normal_form(const std::string& text) {
  const AlgebraElement a = parse_element(text);
  Output o;
  o.data["input"] = text;
  o.data["normal_form"] = render(a);
  o.data["degrees"] = a.degrees();
  o.text = render(a);
  return o;
}

Output cmd_bracket(const std::string& left, const std::string& right) {
  const AlgebraElement a = graded_commutator(parse_element(left), parse_element(right));
  Output o;
  o.data["left"] = left;
  o.data["right"] = right;
  o.data["bracket"] = render(a);
  o.text = render(a);
  return o;
}

Output cmd_cohomology(const std::vector<std::string>& diff, const std::string& carrier_name,
                      int k_max, bool reps, const std::string& rep_file, int cap) {
  check_cap(k_max, cap);
  const auto [label, a] = differential_arg(diff);
  Output o;
  o.data["differential"] = label;
  o.data["element"] = render(a.value());
  if (!rep_file.empty()) {
    const BigradedRep r = BigradedRep::from_json(read_file(rep_file));
    o.data["carrier"] = "rep";
    o.data["table"] = json::array();
    std::string csv = "degree,dim\n";
    std::vector<std::string> lines;
    for (const auto& [n, d] : rep_cohomology(r, a)) {
      o.data["table"].push_back({{"degree", n}, {"dim", d}});
      csv += std::to_string(n) + "," + std::to_string(d) + "\n";
      lines.push_back("H^" + std::to_string(n) + " = " + std::to_string(d));
    }
    o.text = join(lines, "\n");
    o.csv = csv;
    return o;
  }
  const Carrier carrier = Carrier::parse(carrier_name);
  o.data["carrier"] = carrier.name();
  o.data["table"] = json::array();
  std::vector<std::string> dims, lines;
  std::string csv = reps ? "degree,dim,representatives\n" : "degree,dim\n";
  for (const auto& g : cohomology_table(a, k_max, carrier)) {
    json row{{"degree", g.degree()}, {"dim", g.dim()}};
    std::vector<std::string> rep_text;
    for (const auto& r : g.representatives()) rep_text.push_back(render(r));
    if (reps) row["representatives"] = elements_json(g.representatives());
    o.data["table"].push_back(row);
    dims.push_back(std::to_string(g.dim()));
    csv += std::to_string(g.degree()) + "," + std::to_string(g.dim());
    if (reps) csv += "," + csv_field(join(rep_text, "; "));
    csv += "\n";
    lines.push_back("H^" + std::to_string(g.degree()) + " = " + std::to_string(g.dim()));
    if (reps) {
      for (const auto& r : rep_text) lines.push_back("  " + r);
    }
  }
  o.text = "dims: " + join(dims, ",") + "\n" + join(lines, "\n");
  o.csv = csv;
  return o;
}

Output cmd_mc_check(const std::vector<std::string>& args) {
  if (args.size() != 4) throw UsageError("mc check needs x y z w");
  const G1Coords c{scalar_arg(args[0]), scalar_arg(args[1]), scalar_arg(args[2]), scalar_arg(args[3])};
  const MCCertificate cert = is_mc(c);
  Output o;
  o.data["point"] = g1_json(c);
  o.data["element"] = render(g1_element(c).value());
  o.data["is_mc"] = cert.is_mc;
  o.data["quadric_values"] = {{"xz-y^2", cert.quadrics[0].to_string()},
                              {"yw-z^2", cert.quadrics[1].to_string()},
                              {"xw-yz", cert.quadrics[2].to_string()}};
  o.data["bracket"] = {{"[delbar,delbar]", cert.bracket[0].to_string()},
                       {"[delbar,del]", cert.bracket[1].to_string()},
                       {"[del,del]", cert.bracket[2].to_string()}};
  if (cert.is_mc) {
    const MCPoint p(c);
    o.data["h1_dim"] = h1_kernel(p).size();
    o.data["nullity"] = hol_nullity(p);
    auto params = recover_parameters(p);
    if (params) o.data["parameters"] = {{"s", params->first.to_string()}, {"t", params->second.to_string()}};
  }
  std::vector<std::string> witnesses;
  const char* names[] = {"xz-y^2", "yw-z^2", "xw-yz"};
  for (int i = 0; i < 3; ++i) {
    if (!cert.quadrics[i].is_zero()) witnesses.push_back(std::string(names[i]) + "=" + cert.quadrics[i].to_string());
  }
  o.text = cert.is_mc ? "true" : "false (" + join(witnesses, ", ") + ")";
  return o;
}

std::pair<Scalar, Scalar> st_args(const std::vector<std::string>& args, const std::string& cmd) {
  if (args.size() != 2) throw UsageError(cmd + " needs s t");
  return {scalar_arg(args[0]), scalar_arg(args[1])};
}

json st_json(const Scalar& s, const Scalar& t) { return {{"s", s.to_string()}, {"t", t.to_string()}}; }

Output cmd_mc_param(const std::vector<std::string>& args) {
  const auto [s, t] = st_args(args, "mc param");
  const LieElement d = d_st(s, t);
  const auto kernel = h1_kernel(s, t);
  Output o;
  o.data["parameters"] = st_json(s, t);
  o.data["point"] = g1_json(g1_coordinates(d));
  o.data["element"] = render(d.value());
  o.data["is_mc"] = is_mc(g1_coordinates(d)).is_mc;
  o.data["dJ"] = render(dJ_st(s, t).value());
  o.data["h1_dim"] = kernel.size();
  o.data["nullity"] = strata_nullity(s, t);
  o.text = render(d.value());
  return o;
}

Output cmd_mc_tangent(const std::vector<std::string>& args) {
  const auto [s, t] = st_args(args, "mc tangent");
  const auto [ds, dt] = tangent_basis(s, t);
  Output o;
  o.data["parameters"] = st_json(s, t);
  o.data["d_ds"] = render(ds.value());
  o.data["d_dt"] = render(dt.value());
  const auto kernel = values(h1_kernel(s, t));
  o.data["closed"] = graded_commutator(d_st(s, t).value(), ds.value()).is_zero() &&
                     graded_commutator(d_st(s, t).value(), dt.value()).is_zero();
  o.data["h1_dim"] = kernel.size();
  o.text = render(ds.value()) + "\n" + render(dt.value());
  return o;
}

Output cmd_mc_nullity(const std::vector<std::string>& args) {
  const auto [s, t] = st_args(args, "mc nullity");
  Output o;
  o.data["parameters"] = st_json(s, t);
  o.data["point"] = g1_json(g1_coordinates(d_st(s, t)));
  o.data["h1_dim"] = h1_kernel(s, t).size();
  o.data["nullity"] = strata_nullity(s, t);
  o.text = std::to_string(o.data["nullity"].get<std::size_t>());
  return o;
}

Output rep_summary(const BigradedRep& r) {
  const auto vs = verify_relations(r);
  Output o;
  o.data["vectors"] = r.dim();
  o.data["verified"] = vs.empty();
  o.data["violations"] = violations_json(vs);
  o.text = violations_text(vs);
  return o;
}

Output cmd_rep_verify(const std::string& path) { return rep_summary(BigradedRep::from_json(read_file(path))); }

Output cmd_rep_example(const std::string& alpha, const std::string& beta, const std::string& gamma,
                       const std::string& emit) {
  const BigradedRep r = build_example_rep(scalar_arg(alpha), scalar_arg(beta), scalar_arg(gamma));
  if (emit.empty()) {
    Output o;
    o.data = json::parse(r.to_json());
    o.text = r.to_json();
    return o;
  }
  std::ofstream f(emit, std::ios::binary);
  if (!f) throw OutOfDomain("cannot write '" + emit + "'");
  f << r.to_json() << "\n";
  Output o = rep_summary(r);
  o.data["written"] = emit;
  o.text = "wrote " + emit + "\n" + o.text;
  return o;
}

Output cmd_rep_faithful(const std::string& path) {
  const BigradedRep r = BigradedRep::from_json(read_file(path));
  const bool faithful = quotient_faithfulness(r);
  Output o;
  o.data["faithful"] = faithful;
  o.data["quotient_basis"] = json::array();
  for (const auto& [label, e] : quotient_basis()) o.data["quotient_basis"].push_back(label);
  o.text = faithful ? "true" : "false";
  return o;
}

Output cmd_les(int k_max, int cap) {
  check_cap(k_max, cap);
  const LesReport r = les_check(k_max);
  Output o;
  o.data["passed"] = r.passed;
  o.data["max_degree"] = r.max_degree;
  o.data["matrix_identity_checks"] = r.matrix_identity_checks;
  o.data["skew_commutation_checks"] = r.skew_commutation_checks;
  o.data["exactness_nodes"] = r.exactness_nodes;
  o.data["cohomology_dims"] = r.cohomology_dims;
  o.data["iso_degrees"] = r.iso_degrees;
  if (r.failure) {
    o.data["failure"] = {{"identity", r.failure->identity}, {"degree", r.failure->degree},
                         {"witness", r.failure->witness}};
  }
  o.text = r.passed ? "passed: " + std::to_string(r.matrix_identity_checks) + " block identities, " +
                          std::to_string(r.skew_commutation_checks) + " skew-commutations, " +
                          std::to_string(r.exactness_nodes) + " exact nodes"
                    : "failed: " + r.failure->identity + " in degree " +
                          std::to_string(r.failure->degree) + " (" + r.failure->witness + ")";
  return o;
}

Output cmd_e1(const std::string& carrier_name, int k_max, int cap) {
  check_cap(k_max, cap);
  const Carrier carrier = Carrier::parse(carrier_name);
  const auto dims = frolicher_E1(carrier, k_max);
  Output o;
  o.data["carrier"] = carrier.name();
  o.data["table"] = json::array();
  std::vector<std::string> parts;
  std::string csv = "degree,dim\n";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const int k = carrier.min_degree() + static_cast<int>(i);
    o.data["table"].push_back({{"degree", k}, {"dim", dims[i]}});
    parts.push_back(std::to_string(dims[i]));
    csv += std::to_string(k) + "," + std::to_string(dims[i]) + "\n";
  }
  o.text = join(parts, ",");
  o.csv = csv;
  return o;
}

Output cmd_ring(int k_max, int cap) {
  check_cap(k_max, cap);
  Output o;
  o.data["products"] = json::array();
  std::vector<std::string> lines;
  std::string csv = "left,right,coefficient\n";
  for (const auto& p : B_cohomology_products(k_max)) {
    o.data["products"].push_back({{"left", p.left_degree}, {"right", p.right_degree},
                                  {"coefficient", p.coefficient.to_string()}});
    lines.push_back(std::to_string(p.left_degree) + " x " + std::to_string(p.right_degree) + " -> " +
                    p.coefficient.to_string());
    csv += std::to_string(p.left_degree) + "," + std::to_string(p.right_degree) + "," +
           csv_field(p.coefficient.to_string()) + "\n";
  }
  o.text = join(lines, "\n");
  o.csv = csv;
  return o;
}

Output cmd_phi(const std::vector<std::string>& args, int k_max, const std::string& rep_file, int cap) {
  const auto [s, t] = st_args(args, "phi");
  check_cap(k_max, cap);
  const PhiReport r = rep_file.empty() ? phi_conjugation_check(s, t, k_max)
                                       : phi_conjugation_check(s, t, BigradedRep::from_json(read_file(rep_file)));
  Output o;
  o.data["parameters"] = st_json(s, t);
  o.data["passed"] = r.passed;
  o.data["checks"] = r.checks;
  if (!r.passed) o.data["failure"] = r.failure;
  o.text = r.passed ? "passed (" + std::to_string(r.checks) + " checks)" : "failed: " + r.failure;
  return o;
}

Output cmd_lie_basis(int k, int cap) {
  check_cap(k, cap);
  const LieBasis& b = lie_basis_data(k);
  Output o;
  o.data["degree"] = k;
  o.data["dim"] = b.size();
  o.data["basis"] = json::array();
  std::vector<std::string> lines;
  std::string csv = "expression,value\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string expr = b.expressions()[i].to_string();
    const std::string value = render(b.elements()[i].value());
    o.data["basis"].push_back({{"expression", expr}, {"value", value}});
    lines.push_back(expr + " = " + value);
    csv += csv_field(expr) + "," + csv_field(value) + "\n";
  }
  o.text = join(lines, "\n");
  o.csv = csv;
  return o;
}

Output cmd_derivation(const std::string& which, const std::string& text) {
  Derivation d;
  if (which == "mubar") {
    d = Derivation::MuBar;
  } else if (which == "mu") {
    d = Derivation::Mu;
  } else {
    throw UsageError("--which must be mubar or mu");
  }
  const BracketExpr h = bracket_expr(*parse_expr(text));
  const LieCombination combo = derivation_apply(d, h);
  const AlgebraElement value = evaluate(combo);
  Output o;
  o.data["input"] = h.to_string();
  o.data["terms"] = json::array();
  std::vector<std::string> parts;
  for (const auto& [c, e] : combo) {
    o.data["terms"].push_back({{"coefficient", c.to_string()}, {"bracket", e.to_string()}});
    parts.push_back("(" + c.to_string() + ")*" + e.to_string());
  }
  o.data["value"] = render(value);
  o.text = (parts.empty() ? std::string("0") : join(parts, " + ")) + " = " + render(value);
  return o;
}

Scalar random_scalar(std::mt19937_64& rng, bool complex) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Scalar re = Scalar::rational(num(rng), den(rng));
  if (!complex) return re;
  return re + Scalar::rational(num(rng), den(rng)) * Scalar::i();
}

/// Randomised property sweep driven by --seed.
Output cmd_check(std::uint64_t seed, int samples) {
  if (samples <= 0) throw UsageError("--samples must be positive");
  std::mt19937_64 rng(seed);
  std::size_t mc_agree = 0, param_mc = 0, reps_ok = 0;
  for (int i = 0; i < samples; ++i) {
    G1Coords c{random_scalar(rng, true), random_scalar(rng, true), random_scalar(rng, true),
               random_scalar(rng, true)};
    is_mc(c);  // throws on disagreement
    ++mc_agree;
    if (is_mc(g1_coordinates(d_st(random_scalar(rng, true), random_scalar(rng, true)))).is_mc) ++param_mc;
    const BigradedRep r = build_example_rep(random_scalar(rng, true), random_scalar(rng, true),
                                            random_scalar(rng, true));
    if (verify_relations(r).empty() && quotient_faithfulness(r)) ++reps_ok;
  }
  Output o;
  o.data["seed"] = seed;
  o.data["samples"] = samples;
  o.data["mc_verdicts_agree"] = mc_agree;
  o.data["parametrisation_in_mc"] = param_mc;
  o.data["family_verified_and_faithful"] = reps_ok;
  const bool ok = mc_agree == static_cast<std::size_t>(samples) && param_mc == mc_agree && reps_ok == mc_agree;
  o.data["passed"] = ok;
  o.text = std::string(ok ? "passed" : "FAILED") + ": " + std::to_string(samples) + " samples, seed " +
           std::to_string(seed);
  return o;
}

json error_json(const std::string& kind, const std::string& message) {
  return json{{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in the algebra generated by mubar, delbar, del, mu", "acalg"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::uint64_t seed = 0;
  int cap = 12;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", seed, "Seed for randomised checks");
  app.add_option("--max-degree", cap, "Upper bound on any requested degree");

  std::function<Output()> action;

  int k_max = 0;
  std::string carrier = "A";
  auto* dims = app.add_subcommand("dims", "Dimension table of a carrier");
  dims->add_option("--max", k_max, "Largest degree")->required();
  dims->add_option("--carrier", carrier, "A, B, g or h");
  dims->callback([&] { action = [&] { return cmd_dims(k_max, carrier, cap); }; });

  std::string expr1, expr2;
  auto* nf = app.add_subcommand("normal-form", "Normal form of an expression");
  nf->add_option("expr", expr1)->required();
  nf->callback([&] { action = [&] { return cmd_normal_form(expr1); }; });

  auto* br = app.add_subcommand("bracket", "Graded commutator of two expressions");
  br->add_option("left", expr1)->required();
  br->add_option("right", expr2)->required();
  br->callback([&] { action = [&] { return cmd_bracket(expr1, expr2); }; });

  std::vector<std::string> diff;
  bool reps = false;
  std::string rep_file;
  auto* coh = app.add_subcommand("cohomology", "Cohomology of an inner differential");
  coh->add_option("--diff", diff, "d, mubar, mu, st <s> <t>, or any degree-1 expression")
      ->required()
      ->expected(1, 3)
      ->allow_extra_args();
  std::string coh_carrier = "g";
  coh->add_option("--carrier", coh_carrier, "g, h, B, A or 0")->capture_default_str();
  coh->add_option("--max", k_max, "Largest degree")->required();
  coh->add_flag("--reps", reps, "Print representatives");
  coh->add_option("--rep", rep_file, "Use a representation file as the carrier");
  coh->callback([&] { action = [&] { return cmd_cohomology(diff, coh_carrier, k_max, reps, rep_file, cap); }; });

  std::vector<std::string> pos;
  auto* mc = app.add_subcommand("mc", "Maurer-Cartan locus");
  mc->require_subcommand(1);
  auto* mc_check = mc->add_subcommand("check", "Is x*mubar + y*delbar + z*del + w*mu Maurer-Cartan?");
  mc_check->add_option("coords", pos)->expected(4)->required();
  mc_check->callback([&] { action = [&] { return cmd_mc_check(pos); }; });
  auto* mc_param = mc->add_subcommand("param", "The point d_{s,t}");
  mc_param->add_option("st", pos)->expected(2)->required();
  mc_param->callback([&] { action = [&] { return cmd_mc_param(pos); }; });
  auto* mc_tangent = mc->add_subcommand("tangent", "Tangent basis at d_{s,t}");
  mc_tangent->add_option("st", pos)->expected(2)->required();
  mc_tangent->callback([&] { action = [&] { return cmd_mc_tangent(pos); }; });
  auto* mc_nullity = mc->add_subcommand("nullity", "Nullity of f on H^1 at d_{s,t}");
  mc_nullity->add_option("st", pos)->expected(2)->required();
  mc_nullity->callback([&] { action = [&] { return cmd_mc_nullity(pos); }; });

  std::string file, alpha = "0", beta = "0", gamma = "0", emit;
  auto* rep = app.add_subcommand("rep", "Bigraded representations");
  rep->require_subcommand(1);
  auto* rep_verify = rep->add_subcommand("verify", "Check the seven relations");
  rep_verify->add_option("file", file)->required();
  rep_verify->callback([&] { action = [&] { return cmd_rep_verify(file); }; });
  auto* rep_example = rep->add_subcommand("example", "The eight-dimensional family");
  rep_example->add_option("--alpha", alpha);
  rep_example->add_option("--beta", beta);
  rep_example->add_option("--gamma", gamma);
  rep_example->add_option("--emit", emit, "Write the representation to this file");
  rep_example->callback([&] { action = [&] { return cmd_rep_example(alpha, beta, gamma, emit); }; });
  auto* rep_faithful = rep->add_subcommand("faithful", "Faithfulness on the 6-dimensional quotient");
  rep_faithful->add_option("file", file)->required();
  rep_faithful->callback([&] { action = [&] { return cmd_rep_faithful(file); }; });

  auto* les = app.add_subcommand("les", "Block identities and long exact sequence on B");
  les->add_option("--max", k_max, "Largest degree")->required();
  les->callback([&] { action = [&] { return cmd_les(k_max, cap); }; });

  auto* e1 = app.add_subcommand("e1", "Dimensions of H(H(V, ad_mubar), ad_delbar)");
  e1->add_option("--carrier", carrier, "g, h, B, A or 0");
  e1->add_option("--max", k_max, "Largest degree")->required();
  e1->callback([&] { action = [&] { return cmd_e1(carrier, k_max, cap); }; });

  auto* ring = app.add_subcommand("ring", "Products in H(B, ad_mubar)");
  ring->add_option("--max", k_max, "Largest total degree")->required();
  ring->callback([&] { action = [&] { return cmd_ring(k_max, cap); }; });

  auto* phi = app.add_subcommand("phi", "Check phi d = d_{s,t} phi");
  phi->add_option("st", pos)->expected(2)->required();
  phi->add_option("--max", k_max, "Largest degree on A")->default_val(4);
  phi->add_option("--rep", rep_file, "Check on a representation instead of A");
  phi->callback([&] { action = [&] { return cmd_phi(pos, k_max, rep_file, cap); }; });

  int degree = 1;
  auto* lb = app.add_subcommand("lie-basis", "Basis of g_k");
  lb->add_option("--degree", degree)->required();
  lb->callback([&] { action = [&] { return cmd_lie_basis(degree, cap); }; });

  std::string which = "mubar";
  auto* der = app.add_subcommand("derivation", "Apply D_mubar or D_mu to a bracket expression");
  der->add_option("--which", which, "mubar or mu");
  der->add_option("expr", expr1)->required();
  der->callback([&] { action = [&] { return cmd_derivation(which, expr1); }; });

  int samples = 20;
  auto* chk = app.add_subcommand("check", "Randomised property sweep");
  chk->add_option("--samples", samples);
  chk->callback([&] { action = [&] { return cmd_check(seed, samples); }; });

  std::vector<std::string> argv_storage{"acalg"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    const Output o = action();
    if (format == "json") {
      out << o.data.dump(2) << "\n";
    } else if (format == "csv") {
      if (!o.csv) throw UsageError("--format csv is only available for tables");
      out << *o.csv;
    } else {
      out << o.text << "\n";
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const SyntaxError& e) {
    json j = error_json(e.kind(), e.detail());
    j["error"]["line"] = e.line();
    j["error"]["column"] = e.column();
    out << j.dump(2) << "\n";
    return kUsageError;
  } catch (const Error& e) {
    out << error_json(e.kind(), e.what()).dump(2) << "\n";
    return kDomainError;
  }
}

}  // namespace acalg::cli
