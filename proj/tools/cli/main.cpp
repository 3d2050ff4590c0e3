#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hermsig/error.hpp"
#include "hermsig/sampler.hpp"
#include "hermsig/sturm.hpp"
#include "hermsig_verify/verify.hpp"

namespace {

using hermsig::Error;
using Json = hermsig::json::Json;
namespace hj = hermsig::json;

enum Exit { ok = 0, violation = 1, input_error = 2 };

struct Job {
  std::string command;
  std::string config_path;
  std::uint64_t seed = 1;
  std::string format = "json";
  long bound = -1;
};

Json load_config(const Job& job) {
  if (job.config_path.empty()) return Json::object();
  std::ifstream in(job.config_path);
  if (!in) throw Error("ParseError", "cannot open " + job.config_path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("ParseError", e.what());
  }
}

const Json& need(const Json& cfg, const char* key) {
  if (!cfg.is_object() || !cfg.contains(key)) throw Error("ParseError", std::string("config lacks \"") + key + "\"");
  return cfg.at(key);
}

std::size_t index_of(const Json& cfg, const char* key, std::size_t fallback) {
  if (!cfg.contains(key)) return fallback;
  const Json& v = cfg.at(key);
  if (!v.is_number_unsigned()) throw Error("ParseError", std::string(key) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

hermsig::OrderingHandle ordering_at(const hermsig::NumberField& f, std::size_t i) {
  const auto all = f.orderings();
  if (i >= all.size()) throw Error("ParseError", "ordering_index out of range");
  return all[i];
}

hermsig::PositiveConeHandle cone_of(const hermsig::AlgebraWithInvolution& a, const Json& cfg) {
  int orientation = 1;
  if (cfg.contains("orientation")) {
    const Json& o = cfg.at("orientation");
    if (!o.is_number_integer()) throw Error("ParseError", "orientation must be 1 or -1");
    orientation = o.get<int>();
  }
  return hermsig::PositiveConeHandle(a, ordering_at(a.field(), index_of(cfg, "ordering_index", 0)), orientation);
}

std::size_t bound_or(const Job& job, std::size_t fallback) {
  return job.bound > 0 ? static_cast<std::size_t>(job.bound) : fallback;
}

struct Report {
  Json json;
  std::string text;
  Exit status = ok;
};

Report cmd_orderings(const Json& cfg) {
  const auto f = cfg.contains("algebra") ? hj::read_algebra(cfg.at("algebra")).field() : hj::read_field(need(cfg, "field"));
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& p : f.orderings()) {
    list.push_back(hj::write(p));
    t << "ordering " << p.root_index() << ": root in [" << hermsig::to_display_string(p.isolating().lo) << ", "
      << hermsig::to_display_string(p.isolating().hi) << "]\n";
  }
  return {Json{{"orderings", list}}, t.str()};
}

Report cmd_nil(const Json& cfg) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  Json nil = Json::array();
  std::ostringstream t;
  for (const auto& p : hermsig::nil_orderings(a)) {
    nil.push_back(p.root_index());
    t << "nil ordering " << p.root_index() << "\n";
  }
  Json out{{"nil", nil}, {"orderings", a.field().orderings().size()}};
  if (!a.warnings().empty()) out["warnings"] = a.warnings();
  for (const auto& w : a.warnings()) t << "warning: " << w << "\n";
  if (nil.empty()) t << "no nil orderings\n";
  return {out, t.str()};
}

Report cmd_signature(const Json& cfg) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  const auto h = hj::read_hermitian_form(a, need(cfg, "form"));
  const auto sv = hermsig::signature_vector(h);
  std::ostringstream t;
  for (std::size_t i = 0; i < sv.size(); ++i) t << "ordering " << i << ": signature " << sv[i] << "\n";
  return {Json{{"signatures", sv}}, t.str()};
}

Report cmd_cones(const Json& cfg, const Job& job) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  hermsig::Sampler s(job.seed);
  const std::size_t count = bound_or(job, 200);
  Json list = Json::array();
  std::ostringstream t;
  Report r;
  for (const auto& c : hermsig::list_positive_cones(a)) {
    std::vector<hermsig::AlgebraElement> samples{a.zero()};
    while (samples.size() < count) {
      const int pick = static_cast<int>(samples.size() % 3);
      samples.push_back(pick == 2 ? s.symmetric(a, 3)
                                  : s.cone_member(a, c.ordering(), pick == 0 ? c.orientation() : -c.orientation(), 3,
                                                  s.coin()));
    }
    std::vector<hermsig::FieldElement> scalars{a.field().from_rational(-1), a.field().zero(), a.field().one()};
    for (int i = 0; i < 12; ++i) scalars.push_back(s.field_element(a.field(), 5));
    std::vector<hermsig::AlgebraElement> mult;
    for (int i = 0; i < 12; ++i) mult.push_back(s.element(a, 3));
    const auto rep = hermsig::cone_axioms_check(c, samples, scalars, mult);
    list.push_back(Json{{"ordering_index", c.ordering().root_index()},
                        {"orientation", c.orientation()},
                        {"checks", hj::write(rep)}});
    t << "cone ordering " << c.ordering().root_index() << " orientation " << c.orientation() << ": "
      << (rep.passed() ? "axioms hold" : "AXIOM VIOLATION") << " on " << samples.size() << " samples\n";
    if (!rep.passed()) r.status = violation;
  }
  if (list.empty()) t << "no positive cones (every ordering is nil)\n";
  r.json = Json{{"cones", list}};
  r.text = t.str();
  return r;
}

Report cmd_member(const Json& cfg) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  const auto cone = cone_of(a, cfg);
  const auto b = hj::read_algebra_element(a, need(cfg, "element"));
  const auto m = hermsig::cone_membership(b, cone);
  Json out{{"member", m.member}};
  std::ostringstream t;
  t << (m.member ? "member" : "not a member") << "\n";
  if (m.witness) {
    Json w = hj::write(*m.witness);
    w["element"] = hj::write(hermsig::witness_element(*m.witness, cone));
    out["witness"] = w;
    t << "witness diagonal:";
    for (const auto& x : m.witness->diagonal) t << " " << hermsig::to_display_string(x.coords().front());
    t << (a.field().degree() > 1 ? " (first coordinates)" : "") << "\n";
  }
  return {out, t.str()};
}

Report cmd_np(const Json& cfg, const Job& job) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  const auto cone = cone_of(a, cfg);
  const auto h = hj::read_hermitian_form(a, need(cfg, "form"));
  const long sig = hermsig::signature(h, cone.ordering());
  Json out{{"in_NP", sig == 0}, {"signature", sig}};
  std::ostringstream t;
  t << "signature " << sig << ": " << (sig == 0 ? "in N_P" : "not in N_P") << "\n";
  const bool search = cfg.value("search", true);
  if (sig == 0 && search) {
    hermsig::Sampler s(job.seed);
    const std::size_t bound = bound_or(job, 16);
    std::vector<hermsig::AlgebraElement> pool;
    for (std::size_t i = 0; i < bound; ++i) pool.push_back(s.cone_member(a, cone.ordering(), cone.orientation(), 3, true));
    const auto r = hermsig::find_Z_witness(h, cone, bound, pool);
    out["bound"] = r.bound;
    out["witness"] = r.witness ? hj::write(*r.witness) : Json(nullptr);
    t << (r.witness ? "Z-witness found" : "no Z-witness within bound (inconclusive)") << " after " << r.tried
      << " candidate(s)\n";
    if (r.witness) t << "q has dimension " << r.witness->q.dimension() << ", " << r.witness->a_list.size() << " + "
                     << r.witness->b_list.size() << " entries\n";
  }
  return {out, t.str()};
}

Report cmd_sylvester(const Json& cfg) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  const auto cone = cone_of(a, cfg);
  const auto h = hj::read_hermitian_form(a, need(cfg, "form"));
  const auto el = cfg.contains("element") ? hj::read_algebra_element(a, cfg.at("element"))
                                          : (cone.orientation() > 0 ? a.phi() : -a.phi());
  const auto r = hermsig::sylvester_reduction(h, el, cone);
  Json u = Json::array();
  for (const auto& x : r.u) u.push_back(hj::write(x));
  Json v = Json::array();
  for (const auto& x : r.v) v.push_back(hj::write(x));
  const long sq = hermsig::signature_qf(r.q, cone.ordering());
  Json out{{"q", hj::write(r.q)}, {"signature_q", sq}, {"u", u}, {"v", v}, {"evidence", hj::write(r.evidence)}};
  std::ostringstream t;
  t << "q: dimension " << r.q.dimension() << ", signature " << sq << "\n"
    << r.u.size() << " positive and " << r.v.size() << " negative entries\n"
    << "evidence (rank and signatures): " << (r.evidence.holds() ? "consistent" : "INCONSISTENT") << "\n";
  Report rep{out, t.str()};
  if (!r.evidence.holds() || sq == 0) rep.status = violation;
  return rep;
}

Report cmd_count_roots(const Json& cfg) {
  const auto m = hj::read_polynomial(need(cfg, "polynomial"));
  std::vector<hermsig::Polynomial> gs;
  for (const auto& g : need(cfg, "conditions")) gs.push_back(hj::read_polynomial(g));
  const auto n = hermsig::count_roots_with_signs(m, gs);
  return {Json{{"count", n}}, std::to_string(n) + " root(s) satisfy every condition\n"};
}

Report cmd_extend(const Json& cfg, const Job& job) {
  const auto a = hj::read_algebra(need(cfg, "algebra"));
  const auto target = hj::read_field(need(cfg, "target_field"));
  const auto e = hermsig::embed_field(a.field(), target, hj::read_field_element(target, need(cfg, "image")));
  const auto q = ordering_at(target, index_of(cfg, "target_ordering_index", 0));
  const auto cone = cone_of(a, cfg);
  hermsig::Sampler s(job.seed);
  std::vector<hermsig::AlgebraElement> samples;
  const std::size_t count = bound_or(job, 200);
  for (std::size_t i = 0; i < count; ++i)
    samples.push_back(s.cone_member(a, cone.ordering(), cone.orientation(), 3, i % 4 != 0));
  const auto r = hermsig::extend_cone(e, cone, q, samples);
  Json out{{"source_ordering_index", cone.ordering().root_index()},
           {"target_ordering_index", q.root_index()},
           {"orientation", cone.orientation()},
           {"n_P", hermsig::local_degree_nP(a, cone.ordering()).value},
           {"n_Q", hermsig::local_degree_nP(r.cone.algebra(), q).value},
           {"checked", r.checked},
           {"contained", r.contained},
           {"ok", r.ok()}};
  std::ostringstream t;
  t << r.contained << " of " << r.checked << " pushed samples lie in the extended cone; n_P "
    << (r.degree_preserved ? "preserved" : "NOT preserved") << "\n";
  Report rep{out, t.str()};
  if (!r.ok()) rep.status = violation;
  return rep;
}

Report cmd_verify(const Job& job) {
  hermsig::verify::SuiteOptions o;
  o.seed = job.seed;
  Json list = Json::array();
  std::ostringstream t;
  bool all = true;
  for (const auto& r : hermsig::verify::run_all(o)) {
    list.push_back(hermsig::verify::to_json(r));
    t << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << "\n";
    all = all && r.passed;
  }
  Report rep{Json{{"seed", job.seed}, {"criteria", list}, {"passed", all}}, t.str()};
  if (!all) rep.status = violation;
  return rep;
}

Report dispatch(const Job& job) {
  const Json cfg = job.command == "verify" ? Json::object() : load_config(job);
  if (job.command == "orderings") return cmd_orderings(cfg);
  if (job.command == "nil") return cmd_nil(cfg);
  if (job.command == "signature") return cmd_signature(cfg);
  if (job.command == "cones") return cmd_cones(cfg, job);
  if (job.command == "member") return cmd_member(cfg);
  if (job.command == "np") return cmd_np(cfg, job);
  if (job.command == "sylvester") return cmd_sylvester(cfg);
  if (job.command == "count-roots") return cmd_count_roots(cfg);
  if (job.command == "extend") return cmd_extend(cfg, job);
  return cmd_verify(job);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermsig: signatures and positive cones of hermitian forms, computed exactly"};
  app.require_subcommand(1);
  Job job;
  app.add_option("--seed", job.seed, "Seed for sampled checks and searches")->default_val(1);
  app.add_option("--format", job.format, "Output format")->check(CLI::IsMember({"json", "text"}))->default_val("json");
  app.add_option("--bound", job.bound, "Sample size or search bound (command specific)");
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"orderings", "List the orderings of a field"},
      {"nil", "List the nil orderings of an algebra with involution"},
      {"signature", "Signature of a hermitian form at every ordering"},
      {"cones", "List positive cones and check (P1)-(P5) on samples"},
      {"member", "Decide cone membership, with a witness"},
      {"np", "Decide N_P membership and search for a Z-witness"},
      {"sylvester", "Reduce a form against a cone member"},
      {"count-roots", "Count real roots under sign conditions"},
      {"extend", "Extend a cone along a field embedding"},
      {"verify", "Run the full property suite"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", job.config_path, "JSON job file")->check(CLI::ExistingFile);
    sub->callback([&job, name = name] { job.command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : input_error;
  }
  if (job.command != "verify" && job.config_path.empty()) {
    std::cout << Json{{"error", "ParseError"}, {"detail", "--config is required"}}.dump() << "\n";
    return input_error;
  }
  try {
    const Report r = dispatch(job);
    if (job.format == "json")
      std::cout << r.json.dump(2) << "\n";
    else
      std::cout << r.text;
    return r.status;
  } catch (const Error& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(": ");
    std::cout << Json{{"error", e.code()}, {"detail", colon == std::string::npos ? "" : msg.substr(colon + 2)}}.dump()
              << "\n";
    return input_error;
  } catch (const Json::exception& e) {
    std::cout << Json{{"error", "ParseError"}, {"detail", e.what()}}.dump() << "\n";
    return input_error;
  }
}
