#include <chrono>
#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "birkit/locus.hpp"
#include "birkit/session.hpp"

using namespace birkit;
using nlohmann::ordered_json;

namespace {

struct Opts {
  std::string session_path;
  std::string map_name;
  int degree = -1;
  std::string order = "grevlex";
  int cap = -1;
  long trials = -1;
  long prime = 101;
  uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 1;
  int max_degree = -1;
  long max_pairs = -1;
  bool text = false;
  std::vector<std::string> polys;
  std::string locus;
};

void add_common(CLI::App* cmd, Opts& o, bool need_session = true) {
  auto* s = cmd->add_option("--session", o.session_path, "session file (JSON)");
  if (need_session) s->required();
  cmd->add_option("--max-degree", o.max_degree, "Buchberger total-degree guard");
  cmd->add_option("--max-pairs", o.max_pairs, "Buchberger S-pair guard");
  auto* j = cmd->add_flag("--json", "JSON report on stdout (default)");
  auto* t = cmd->add_flag("--text", o.text, "human-readable report");
  t->excludes(j);
}

Session load(const Opts& o) {
  ResourceLimits base;
  if (const char* env = std::getenv("BIRKIT_MAX_PAIRS")) base.max_pairs = std::atol(env);
  std::ifstream in(o.session_path);
  if (!in) throw Error(ErrorKind::Io, "cannot open session file '" + o.session_path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Schema, "invalid JSON in '" + o.session_path + "': " + e.what());
  }
  // command-line limits win over the session's options block
  if (o.max_degree > 0) j["options"]["max_degree"] = o.max_degree;
  if (o.max_pairs > 0) j["options"]["max_pairs"] = o.max_pairs;
  return session_from_json(j, o.session_path, base);
}

uint64_t effective_seed(const Opts& o, const Session& s) {
  return o.seed_given ? o.seed : s.seed;
}

MonomialOrder parse_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "grevlex") return MonomialOrder::grevlex();
  throw Error(ErrorKind::Schema, "--order must be lex or grevlex");
}

std::vector<Poly> forms_from(const Session& s, const Opts& o) {
  if (!o.map_name.empty()) return s.map(o.map_name).forms;
  if (o.polys.empty())
    throw Error(ErrorKind::Schema, "give --map <name> or positional polynomials");
  std::vector<Poly> out;
  for (const auto& p : o.polys) out.push_back(poly_parse(p, s.ring));
  return out;
}

ordered_json forms_json(const std::vector<Poly>& forms) {
  ordered_json a = ordered_json::array();
  for (const auto& f : forms) a.push_back(f.to_string());
  return a;
}

const char* bir_name(BirKind k) {
  switch (k) {
    case BirKind::Yes: return "yes";
    case BirKind::No: return "no";
    case BirKind::Indeterminate: return "indeterminate";
  }
  return "?";
}

const char* clear_name(ClearDegree c) {
  switch (c) {
    case ClearDegree::Yes: return "yes";
    case ClearDegree::No: return "no";
    case ClearDegree::Unknown: return "unknown";
  }
  return "?";
}

void print_text(const ordered_json& report) {
  const auto& v = report["verdicts"];
  for (auto it = v.begin(); it != v.end(); ++it)
    std::cout << it.key() << ": " << it.value().dump() << "\n";
  const auto& w = report["witnesses"];
  for (auto it = w.begin(); it != w.end(); ++it) {
    if (it.value().is_array()) {
      std::cout << it.key() << ":\n";
      for (const auto& e : it.value()) {
        if (e.is_string()) std::cout << "  " << e.get<std::string>() << "\n";
        else std::cout << "  " << e.dump() << "\n";
      }
    } else if (it.value().is_string()) {
      std::cout << it.key() << ": " << it.value().get<std::string>() << "\n";
    } else {
      std::cout << it.key() << ": " << it.value().dump() << "\n";
    }
  }
}

struct LocusSpecArg {
  LocusKind kind;
  int count;
};

LocusSpecArg parse_locus(const std::string& name, const Session& s) {
  if (name.empty()) throw Error(ErrorKind::Schema, "locus name required (C<j>, G2 or N<count>)");
  char c = static_cast<char>(toupper(static_cast<unsigned char>(name[0])));
  std::string rest = name.substr(1);
  if (c == 'G') return {LocusKind::Grade2, 2};
  int num = 0;
  if (!rest.empty()) num = std::atoi(rest.c_str());
  if (c == 'C') return {LocusKind::PrincipalClass, num > 0 ? num : s.variety->r()};
  if (c == 'N') return {LocusKind::MaxSpread, num > 0 ? num : s.ring->nvars()};
  throw Error(ErrorKind::Schema, "unknown locus '" + name + "' (use C<j>, G2, N<count>)");
}

int run(int argc, char** argv) {
  CLI::App app{"birkit: exact birational-map analysis over projective varieties"};
  app.require_subcommand(1);
  Opts o;
  std::string command;

  auto* gb = app.add_subcommand("gb", "reduced basis of the defining ideal");
  add_common(gb, o);
  gb->add_option("--order", o.order, "monomial order (lex|grevlex)");

  auto* nf = app.add_subcommand("nf", "normal form of a polynomial mod the defining ideal");
  add_common(nf, o);
  nf->add_option("--order", o.order, "monomial order (lex|grevlex)");
  nf->add_option("polys", o.polys, "polynomial(s)")->required();

  auto* member = app.add_subcommand("member", "ideal membership test");
  add_common(member, o);
  member->add_option("--order", o.order, "monomial order (lex|grevlex)");
  member->add_option("polys", o.polys, "polynomial(s)")->required();

  auto* dim = app.add_subcommand("dim", "dimension data of the coordinate ring");
  add_common(dim, o);

  auto* hf = app.add_subcommand("hf", "Hilbert function value");
  add_common(hf, o);
  hf->add_option("--degree", o.degree, "degree d")->required();

  auto* mult = app.add_subcommand("mult", "Hilbert series, dimension, multiplicity");
  add_common(mult, o);

  auto* pclass = app.add_subcommand("pclass", "principal class test for a form tuple");
  add_common(pclass, o);
  pclass->add_option("--map", o.map_name, "named map supplying the forms");
  pclass->add_option("polys", o.polys, "forms");

  auto* tau = app.add_subcommand("tau", "surjectivity of the multiplication map tau^m");
  add_common(tau, o);
  tau->add_option("--map", o.map_name, "named map supplying the forms");
  tau->add_option("--degree", o.degree, "the exponent m (omit to sweep)");
  tau->add_option("polys", o.polys, "forms");

  auto* grade2 = app.add_subcommand("grade2", "grade >= 2 test for an ideal in R");
  add_common(grade2, o);
  grade2->add_option("--map", o.map_name, "named map supplying the generators");
  grade2->add_option("polys", o.polys, "generators");

  auto* spread = app.add_subcommand("spread", "analytic spread of a form tuple");
  add_common(spread, o);
  spread->add_option("--map", o.map_name, "named map supplying the forms");
  spread->add_option("polys", o.polys, "forms");

  auto* mapcheck = app.add_subcommand("map-check", "full membership pipeline for a map");
  add_common(mapcheck, o);
  mapcheck->add_option("--map", o.map_name, "map name")->required();
  mapcheck->add_option("--cap", o.cap, "inverse search degree cap");
  mapcheck->add_option("--trials", o.trials, "clear-degree sampling trials");
  mapcheck->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) {
    o.seed_given = true;
  });

  auto* invert = app.add_subcommand("invert", "search for an inverse representative");
  add_common(invert, o);
  invert->add_option("--map", o.map_name, "map name")->required();
  invert->add_option("--cap", o.cap, "degree cap for the search");

  auto* biration = app.add_subcommand("birational", "birationality verdict");
  add_common(biration, o);
  biration->add_option("--map", o.map_name, "map name")->required();
  biration->add_option("--cap", o.cap, "inverse search degree cap");
  biration->add_option("--seed", o.seed, "random seed")->each([&](const std::string&) {
    o.seed_given = true;
  });

  auto* coords = app.add_subcommand("coords", "canonical coordinates of a map");
  add_common(coords, o);
  coords->add_option("--map", o.map_name, "map name")->required();

  auto* bound = app.add_subcommand("bound", "inverse-degree bound B(X, d)");
  add_common(bound, o);
  bound->add_option("--degree", o.degree, "map degree d")->required();

  auto* suv = app.add_subcommand("suv", "multiplicity comparison for a dominant map");
  add_common(suv, o);
  suv->add_option("--map", o.map_name, "map name")->required();

  auto* edim = app.add_subcommand("edim", "embedding-dimension bound");
  add_common(edim, o);
  edim->add_option("--degree", o.degree, "degree d")->required();

  auto* locuseqs = app.add_subcommand("locus-eqs", "membership locus equations");
  add_common(locuseqs, o);
  locuseqs->add_option("--degree", o.degree, "argument degree d")->required();
  locuseqs->add_option("polys", o.polys, "template polynomial in z1..zm")->required();

  auto* vpz = app.add_subcommand("vpz", "basis of the degree-d piece of the defining ideal");
  add_common(vpz, o);
  vpz->add_option("--degree", o.degree, "degree d")->required();

  auto* sample = app.add_subcommand("sample", "Monte-Carlo density of a locus");
  add_common(sample, o);
  sample->add_option("locus", o.locus, "C<j> | G2 | N<count>")->required();
  sample->add_option("--degree", o.degree, "form degree d")->required();
  sample->add_option("--trials", o.trials, "number of trials");
  sample->add_option("--prime", o.prime, "field characteristic");
  sample->add_option("--seed", o.seed, "master seed")->each([&](const std::string&) {
    o.seed_given = true;
  });
  sample->add_option("--jobs", o.jobs, "worker threads");

  CLI11_PARSE(app, argc, argv);
  CLI::App* sub = app.get_subcommands().front();
  command = sub->get_name();

  auto t0 = std::chrono::steady_clock::now();
  Session s = load(o);
  ordered_json params = ordered_json::object();
  ordered_json verdicts = ordered_json::object();
  ordered_json witnesses = ordered_json::object();
  if (!o.map_name.empty()) params["map"] = o.map_name;
  if (o.degree >= 0) params["degree"] = o.degree;

  if (command == "gb") {
    params["order"] = o.order;
    GroebnerBasis G = buchberger(s.variety->defining_ideal(), parse_order(o.order), s.limits);
    verdicts["size"] = G.elements().size();
    ordered_json els = ordered_json::array(), lms = ordered_json::array();
    for (const auto& g : G.elements()) {
      els.push_back(reorder(g, s.ring).to_string());
      lms.push_back(Poly::monomial(G.ring(), g.leading_monomial(), Coeff(1)).to_string());
    }
    witnesses["elements"] = els;
    witnesses["leading_monomials"] = lms;
  } else if (command == "nf" || command == "member") {
    params["order"] = o.order;
    GroebnerBasis G = buchberger(s.variety->defining_ideal(), parse_order(o.order), s.limits);
    ordered_json nfs = ordered_json::array();
    bool all_member = true;
    for (const auto& text : o.polys) {
      Poly f = poly_parse(text, s.ring);
      Poly r = normal_form(f, G);
      all_member = all_member && r.is_zero();
      nfs.push_back(r.to_string());
    }
    if (command == "nf") {
      verdicts["nf"] = nfs.size() == 1 ? nfs[0] : ordered_json(nfs);
    } else {
      verdicts["member"] = all_member;
      witnesses["normal_forms"] = nfs;
    }
  } else if (command == "dim") {
    verdicts["dim_R"] = s.variety->r();
    verdicts["dim_X"] = s.variety->dim_x();
    verdicts["d0"] = s.variety->d0();
    verdicts["nondegenerate"] = s.variety->nondegenerate();
  } else if (command == "hf") {
    verdicts["degree"] = o.degree;
    verdicts["hf"] = s.variety->hilbert_function(o.degree);
    verdicts["hf_ideal"] = s.variety->hf_ideal(o.degree).get_str();
  } else if (command == "mult") {
    const HilbertData& hd = s.variety->hilbert_data();
    verdicts["dim"] = hd.dim;
    verdicts["multiplicity"] = hd.multiplicity.get_str();
    ordered_json num = ordered_json::array();
    for (const auto& c : hd.numerator) num.push_back(c.get_str());
    witnesses["series_numerator"] = num;
  } else if (command == "pclass") {
    std::vector<Poly> forms = forms_from(s, o);
    verdicts["j"] = forms.size();
    verdicts["principal_class"] = principal_class_test(*s.variety, forms);
    witnesses["forms"] = forms_json(forms);
  } else if (command == "tau") {
    std::vector<Poly> forms = forms_from(s, o);
    int floor = tau_floor(*s.variety, forms.front().degree());
    verdicts["floor"] = floor;
    if (o.degree >= 0) {
      TauMatrix T = tau_matrix(*s.variety, forms, o.degree);
      verdicts["m"] = o.degree;
      verdicts["rows"] = T.rows;
      verdicts["cols"] = T.cols;
      verdicts["rank"] = T.rank;
      verdicts["surjective"] = (T.rank == T.rows);
    } else {
      ordered_json sweep = ordered_json::array();
      TriBool dec = TriBool::Indeterminate;
      for (int m = floor; m <= floor + 4; ++m) {
        TauMatrix T = tau_matrix(*s.variety, forms, m);
        bool surj = T.rank == T.rows;
        sweep.push_back(ordered_json{{"m", m}, {"rows", T.rows}, {"cols", T.cols},
                                     {"rank", T.rank}, {"surjective", surj}});
        if (surj && dec == TriBool::Indeterminate) dec = TriBool::True;
      }
      verdicts["decided"] = dec == TriBool::True ? "surjective for some m" : "indeterminate";
      witnesses["sweep"] = sweep;
    }
    witnesses["forms"] = forms_json(forms);
  } else if (command == "grade2") {
    std::vector<Poly> forms = forms_from(s, o);
    verdicts["grade_at_least_2"] = grade_at_least_2(*s.variety, make_ideal(s.ring, forms));
    witnesses["generators"] = forms_json(forms);
  } else if (command == "spread") {
    std::vector<Poly> forms = forms_from(s, o);
    int l = analytic_spread(*s.variety, forms);
    verdicts["spread"] = l;
    verdicts["r"] = s.variety->r();
    verdicts["maximal"] = (l == s.variety->r());
  } else if (command == "map-check") {
    const RationalMap& h = s.map(o.map_name);
    std::optional<int> cap;
    if (o.cap > 0) cap = o.cap;
    int trials = o.trials > 0 ? static_cast<int>(o.trials) : 32;
    MapVerdict mv = bir_xd_membership(h, cap, trials, effective_seed(o, s));
    verdicts["well_defined"] = mv.well_defined;
    verdicts["dominant"] = mv.dominant;
    verdicts["birational"] = bir_name(mv.birational.kind);
    if (mv.birational.kind == BirKind::Yes)
      verdicts["inverse_degree"] = mv.birational.inverse_degree;
    verdicts["clear_degree"] = clear_name(mv.clear_degree);
    verdicts["in_bir_xd"] = mv.in_bir_xd;
    if (mv.birational.inverse) witnesses["inverse"] = forms_json(mv.birational.inverse->forms);
    witnesses["notes"] = mv.notes;
  } else if (command == "invert") {
    const RationalMap& h = s.map(o.map_name);
    int cap = o.cap > 0 ? o.cap : default_inverse_cap(*s.variety, h.degree);
    params["cap"] = cap;
    auto inv = find_inverse(h, cap);
    verdicts["found"] = inv.has_value();
    if (inv) {
      verdicts["inverse_degree"] = inv->degree;
      witnesses["inverse"] = forms_json(inv->forms);
    }
  } else if (command == "birational") {
    const RationalMap& h = s.map(o.map_name);
    std::optional<int> cap;
    if (o.cap > 0) cap = o.cap;
    BirationalVerdict v = is_birational(h, cap, effective_seed(o, s));
    verdicts["birational"] = bir_name(v.kind);
    verdicts["search_cap"] = v.search_cap;
    if (v.kind == BirKind::Yes) verdicts["inverse_degree"] = v.inverse_degree;
    if (!v.reason.empty()) verdicts["reason"] = v.reason;
    if (v.inverse) witnesses["inverse"] = forms_json(v.inverse->forms);
  } else if (command == "coords") {
    const RationalMap& h = s.map(o.map_name);
    if (!is_well_defined(h))
      throw Error(ErrorKind::Precondition, "canonical coordinates need a well-defined map");
    auto c = canonical_coordinates(h, /*assume_clear=*/true);
    verdicts["s"] = s.variety->hilbert_function(h.degree);
    verdicts["length"] = c.size();
    ordered_json arr = ordered_json::array();
    for (const auto& v : c) arr.push_back(coeff_to_string(v));
    witnesses["coordinates"] = arr;
  } else if (command == "bound") {
    InverseBound b = inverse_degree_bound(*s.variety, o.degree);
    verdicts["n"] = b.n;
    verdicts["m"] = b.m;
    verdicts["d"] = b.d;
    verdicts["d0"] = b.d0;
    verdicts["delta"] = b.delta;
    verdicts["value"] = b.value.get_str();
    verdicts["gabber"] = b.gabber.get_str();
    verdicts["exceeds_gabber"] = b.exceeds_gabber;
  } else if (command == "suv") {
    SuvReport r = suv_check(s.map(o.map_name));
    verdicts["applicable"] = r.applicable;
    verdicts["lhs"] = r.lhs.get_str();
    verdicts["rhs"] = r.rhs.get_str();
    verdicts["equality"] = r.equality;
    verdicts["r"] = r.r;
    verdicts["g"] = r.g;
    verdicts["r_le_g_plus_1"] = r.r_le_g_plus_1;
    if (r.birational_consistent)
      verdicts["birational_consistent"] = *r.birational_consistent;
    if (!r.note.empty()) verdicts["note"] = r.note;
  } else if (command == "edim") {
    EdimBoundReport e = edim_bound(*s.variety, o.degree);
    verdicts["bound"] = e.bound.get_str();
    verdicts["hf_rd"] = e.hf_rd;
    verdicts["c1_quasi_projective"] = e.c1_quasi_projective;
  } else if (command == "locus-eqs") {
    // template variables must be named z1..zm
    int m = 0;
    for (const auto& text : o.polys)
      for (size_t i = 0; i + 1 < text.size(); ++i)
        if (text[i] == 'z' && isdigit(static_cast<unsigned char>(text[i + 1]))) {
          int idx = std::atoi(text.c_str() + i + 1);
          m = std::max(m, idx);
        }
    if (m == 0) throw Error(ErrorKind::Schema, "template must use variables z1..zm");
    std::vector<std::string> zvars;
    for (int i = 1; i <= m; ++i) zvars.push_back("z" + std::to_string(i));
    RingPtr Z = make_ring(s.field, zvars, MonomialOrder::grevlex());
    Poly p = poly_parse(o.polys.front(), Z);
    LocusEquations L =
        locus_equations(make_template(p, s.variety->defining_ideal(), o.degree), s.limits);
    verdicts["arity"] = m;
    verdicts["count"] = L.equations.size();
    witnesses["parameter_vars"] = L.parameter_ring->vars;
    ordered_json eqs = ordered_json::array();
    for (const auto& e : L.equations) eqs.push_back(e.to_string());
    witnesses["equations"] = eqs;
  } else if (command == "vpz") {
    auto basis = vpz_basis(s.variety->defining_ideal(), o.degree);
    verdicts["size"] = basis.size();
    ordered_json arr = ordered_json::array();
    for (const auto& b : basis) arr.push_back(b.to_string());
    witnesses["basis"] = arr;
  } else if (command == "sample") {
    LocusSpecArg la = parse_locus(o.locus, s);
    long trials = o.trials > 0 ? o.trials : 1000;
    DensityReport rep = sample_locus(*s.variety, la.kind, la.count, o.degree, trials,
                                     o.prime, effective_seed(o, s), o.jobs);
    params["trials"] = trials;
    params["prime"] = o.prime;
    params["seed"] = rep.seed;
    verdicts["locus"] = rep.locus_name();
    verdicts["prime"] = rep.prime;
    verdicts["trials"] = rep.trials;
    verdicts["hits"] = rep.hits;
    verdicts["seed"] = rep.seed;
    verdicts["hit_fraction"] = static_cast<double>(rep.hits) / static_cast<double>(rep.trials);
    witnesses["csv"] = rep.csv_header() + "\n" + rep.csv_row();
    if (o.text) {
      std::cout << rep.csv_header() << "\n" << rep.csv_row() << "\n";
      return 0;
    }
  }

  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  ordered_json report = make_report(command, &s, params, verdicts, witnesses, ms, s.limits);
  if (o.text) print_text(report);
  else std::cout << report.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 3;
  }
}
