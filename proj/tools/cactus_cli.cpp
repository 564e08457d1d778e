// cactus: command-line front end for the crystal, cactus group, tableau and
// category-data modules.  Exit status: 0 all checks passed, 1 a check failed,
// 2 usage or input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cactus/actions.hpp"
#include "cactus/cartan.hpp"
#include "cactus/category_data.hpp"
#include "cactus/commutor.hpp"
#include "cactus/crystal.hpp"
#include "cactus/groups.hpp"
#include "cactus/tableaux.hpp"

using namespace cactus;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: '" + text + "'");
    }
  }
  return out;
}

std::vector<Weight> fundamental_list(const std::string& text, const CartanData& cartan) {
  std::vector<Weight> out;
  for (int i : int_list(text)) {
    if (i == 0) {
      out.push_back(cartan.zero());
      continue;
    }
    if (i < 1 || i > cartan.rank()) throw UsageError("no fundamental weight omega_" + std::to_string(i));
    out.push_back(cartan.fundamental(i));
  }
  return out;
}

// Weights are comma-joined coefficient vectors, tuples joined by spaces.  In
// rank 1 a comma also separates weights.
std::vector<Weight> weight_list(const std::string& text, const CartanData& cartan) {
  std::vector<Weight> out;
  std::istringstream is(text);
  std::string tok;
  std::vector<std::string> toks;
  while (is >> tok) toks.push_back(tok);
  // A single list of the wrong length is read as fundamental weight indices.
  if (cartan.rank() > 1 && toks.size() == 1 && static_cast<int>(int_list(toks[0]).size()) != cartan.rank())
    return fundamental_list(toks[0], cartan);
  for (const auto& tok : toks) {
    std::vector<int> v = int_list(tok);
    if (cartan.rank() == 1) {
      for (int x : v) out.push_back({x});
    } else {
      if (static_cast<int>(v.size()) != cartan.rank())
        throw UsageError("weight '" + tok + "' needs " + std::to_string(cartan.rank()) + " coefficients");
      out.push_back(v);
    }
  }
  if (out.empty()) throw UsageError("empty weight list");
  return out;
}

Tableau tableau_arg(const std::string& text) {
  try {
    return tableau_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw UsageError(std::string("tableau is not JSON: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Collects named pass/fail checks and a result payload, then prints them.
class Report {
 public:
  Report(std::string command, bool as_json) : command_(std::move(command)), json_(as_json) {}

  void check(const std::string& name, bool ok) { checks_.push_back({{"name", name}, {"passed", ok}}); }
  json& result() { return result_; }

  int finish(const std::string& text_body = {}) {
    bool all = true;
    for (const auto& c : checks_) all = all && c["passed"].get<bool>();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (json_) {
      std::cout << json{{"command", command_}, {"checks", checks_}, {"result", result_}, {"passed", all}, {"duration_s", secs}}
                       .dump(2)
                << '\n';
    } else {
      if (!text_body.empty()) std::cout << text_body;
      for (const auto& c : checks_)
        std::cout << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>() << '\n';
      std::cout << (all ? "all checks passed" : "some checks FAILED") << " (" << secs << " s)\n";
    }
    return all ? 0 : 1;
  }

 private:
  std::string command_;
  bool json_;
  json checks_ = json::array();
  json result_ = json::object();
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string components_text(const CrystalGraph& b) {
  std::ostringstream os;
  for (const auto& c : components(b))
    os << "component  highest " << c.highest << "  weight (" << weight_to_string(c.highest_weight) << ")  size "
       << c.elements.size() << '\n';
  return os.str();
}

json components_json(const CrystalGraph& b) {
  json out = json::array();
  for (const auto& c : components(b))
    out.push_back({{"highest", c.highest}, {"weight", c.highest_weight}, {"size", c.elements.size()}});
  return out;
}

std::string normality_name(Normality n) {
  switch (n) {
    case Normality::Normal: return "normal";
    case Normality::NotNormal: return "not normal";
    case Normality::Unverifiable: return "unverifiable";
  }
  return "?";
}

json point_json(const LabeledPoint& p, const ActionContext& ctx) {
  json weights = json::array();
  for (int c : p.colours) weights.push_back(ctx.weight(c));
  return {{"weights", weights}, {"entries", p.entries}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crystals, cactus group actions, tableaux and coboundary category data"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string emit = "text", out_path;
  int threads = 0;
  unsigned seed = 1;
  app.add_option("--emit", emit, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--out", out_path, "write DOT (or JSON data) to this file");
  app.add_option("--threads", threads, "worker threads for exhaustive sweeps (0 = all cores)");
  app.add_option("--seed", seed, "seed for randomized modes");

  std::string type = "A1", weight, weights, fundamental, left, right, input, word, point_text, kind_text = "vC",
              gens_text, shape_text, perm_text, tableau_text, p_text, q_text, cactus_text, colours_text, action = "relations",
              u_text;
  int n = 0, i_arg = 0, j_arg = 0, count = 100, max_cells = 6, max_entry = 4;
  bool all_tuples = false, search = false;
  std::string report_text = "order,contains-alternating";

  auto* crystal = app.add_subcommand("crystal", "build B(lambda) or import a crystal graph");
  crystal->add_option("--type", type);
  crystal->add_option("--weight", weight, "highest weight");
  crystal->add_option("--input", input, "crystal JSON to import");

  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product B(left) (x) B(right) and its components");
  for (auto* c : {tensor_cmd}) {
    c->add_option("--type", type);
    c->add_option("--left", left)->required();
    c->add_option("--right", right)->required();
  }

  auto* commutor_cmd = app.add_subcommand("commutor", "crystal commutor B(left) (x) B(right) -> B(right) (x) B(left)");
  commutor_cmd->add_option("--type", type);
  commutor_cmd->add_option("--left", left)->required();
  commutor_cmd->add_option("--right", right)->required();

  auto* group = app.add_subcommand("group", "cactus group words, relations and homomorphisms");
  group->add_option("action", action, "relations | hom | project | mc-word | cabling")
      ->check(CLI::IsMember({"relations", "hom", "project", "mc-word", "cabling"}));
  group->add_option("--kind", kind_text);
  group->add_option("--n", n);
  group->add_option("--word", word);
  group->add_option("--j", j_arg);
  group->add_option("--i", i_arg);
  group->add_option("--u", u_text, "permutation to cable, e.g. 2,3,1");

  auto add_point_opts = [&](CLI::App* c) {
    c->add_option("--kind", kind_text);
    c->add_option("--type", type);
    c->add_option("--weights", weights, "weight tuple");
    c->add_option("--fundamental", fundamental, "weight tuple as fundamental weight indices, e.g. 1,1,2");
  };
  auto* act_cmd = app.add_subcommand("act", "act by a group word on a point of a product of crystals");
  add_point_opts(act_cmd);
  act_cmd->add_option("--word", word)->required();
  act_cmd->add_option("--point", point_text)->required();

  auto* verify = app.add_subcommand("verify", "check every defining relation on the full product set");
  add_point_opts(verify);
  verify->add_option("--n", n);
  verify->add_flag("--all-tuples", all_tuples, "use every n-tuple over the distinct weights");

  auto* orbit_cmd = app.add_subcommand("orbit", "orbit of a point under a list of generators");
  add_point_opts(orbit_cmd);
  orbit_cmd->add_option("--gens", gens_text)->required();
  orbit_cmd->add_option("--point", point_text)->required();

  auto* image = app.add_subcommand("image", "image of the cactus group acting on standard tableaux");
  image->add_option("--shape", shape_text)->required();
  image->add_option("--report", report_text);

  auto* rsk_cmd = app.add_subcommand("rsk", "RSK correspondence");
  rsk_cmd->add_option("--perm", perm_text);
  rsk_cmd->add_option("--P", p_text);
  rsk_cmd->add_option("--Q", q_text);

  auto* evac = app.add_subcommand("evac", "evacuation, partial evacuation and the cactus action on tableaux");
  evac->add_option("--tableau", tableau_text)->required();
  evac->add_option("--j", j_arg, "evacuate the entries 1..j only");
  evac->add_option("--cactus", cactus_text, "act by s_ij, given as i,j");

  auto* bk = app.add_subcommand("bk", "Bender-Knuth involutions");
  bk->add_option("--i", i_arg);
  bk->add_option("--tableau", tableau_text);
  bk->add_flag("--search", search, "search for a braid relation failure");
  bk->add_option("--max-cells", max_cells);
  bk->add_option("--max-entry", max_entry);

  auto* crosscheck = app.add_subcommand("crosscheck", "compare the crystal action with RSK and tableau actions");
  crosscheck->add_option("--n", n)->required();

  auto* category = app.add_subcommand("category", "coboundary category data");
  category->add_option("action", action, "validate | from-crystals | roundtrip | mutate")
      ->required()
      ->check(CLI::IsMember({"validate", "from-crystals", "roundtrip", "mutate"}));
  category->add_option("--input", input);
  category->add_option("--type", type);
  category->add_option("--colours", colours_text);
  category->add_option("--count", count, "number of mutations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  for (int k = 1; k < argc; ++k) command += (k > 1 ? " " : "") + std::string(argv[k]);
  const bool as_json = emit == "json";
  Report report(command, as_json);

  try {
    // ---------------------------------------------------------------- crystal
    if (*crystal) {
      CrystalGraph b = [&] {
        if (!input.empty()) return import_graph(read_json_file(input));
        const CartanData cartan = parse_cartan_type(type);
        if (weight.empty()) throw UsageError("crystal: need --weight or --input");
        auto w = weight_list(weight, cartan);
        if (w.size() != 1) throw UsageError("crystal: give exactly one weight");
        return build_irreducible(cartan, w.front());
      }();
      if (!out_path.empty()) write_file(out_path, export_dot(b));
      if (emit == "dot") {
        std::cout << export_dot(b);
        return 0;
      }
      const Normality nm = normality(b);
      if (as_json) {
        std::cout << json{{"graph", export_graph(b)}, {"components", components_json(b)}, {"normality", normality_name(nm)}}.dump(2)
                  << '\n';
      } else {
        std::cout << b.cartan().name() << " crystal with " << b.size() << " elements, " << normality_name(nm) << '\n'
                  << components_text(b);
      }
      return 0;
    }

    // ----------------------------------------------------------------- tensor
    if (*tensor_cmd) {
      const CartanData cartan = parse_cartan_type(type);
      const auto l = weight_list(left, cartan), r = weight_list(right, cartan);
      const CrystalGraph t = tensor(build_irreducible(cartan, l.at(0)), build_irreducible(cartan, r.at(0)));
      if (!out_path.empty()) write_file(out_path, export_dot(t));
      if (emit == "dot") {
        std::cout << export_dot(t);
        return 0;
      }
      report.result() = {{"size", t.size()}, {"components", components_json(t)}};
      report.check("normal", normality(t) == Normality::Normal);
      return report.finish(std::to_string(t.size()) + " elements\n" + components_text(t));
    }

    // --------------------------------------------------------------- commutor
    if (*commutor_cmd) {
      const CartanData cartan = parse_cartan_type(type);
      const CrystalGraph b1 = build_irreducible(cartan, weight_list(left, cartan).at(0));
      const CrystalGraph b2 = build_irreducible(cartan, weight_list(right, cartan).at(0));
      const CrystalBijection s = commutor(b1, b2);
      const CrystalBijection back = commutor(b2, b1);
      bool involutive = true;
      for (int x = 0; x < s.domain->size(); ++x) involutive = involutive && back(s(x)) == x;
      if (emit == "dot") {
        std::ostringstream os;
        os << "digraph commutor {\n";
        for (int x = 0; x < s.domain->size(); ++x) os << "  a" << x << " -> b" << s(x) << ";\n";
        os << "}\n";
        if (!out_path.empty()) write_file(out_path, os.str());
        std::cout << os.str();
        return 0;
      }
      report.result() = {{"map", to_json(s)}};
      report.check("bijective", s.is_bijective());
      report.check("crystal morphism", is_crystal_morphism(*s.domain, *s.codomain, s.map));
      report.check("involutive", involutive);
      std::ostringstream body;
      for (int x = 0; x < s.domain->size(); ++x) {
        auto p = s.domain->decode(x), q = s.codomain->decode(s(x));
        body << p[0] << "(x)" << p[1] << "  ->  " << q[0] << "(x)" << q[1] << '\n';
      }
      return report.finish(body.str());
    }

    // ------------------------------------------------------------------ group
    if (*group) {
      const GroupKind kind = parse_group_kind(kind_text);
      if (action == "relations") {
        if (n < 2) throw UsageError("group relations: need --n >= 2");
        const auto rels = defining_relations(kind, n);
        if (as_json) {
          std::cout << to_json(rels).dump(2) << '\n';
        } else {
          for (const auto& r : rels) std::cout << r.family << ": " << to_string(r.lhs) << " = " << to_string(r.rhs) << '\n';
          std::cout << rels.size() << " relations\n";
        }
        return 0;
      }
      if (action == "hom" || action == "project") {
        if (n < 1) throw UsageError("group " + action + ": need --n");
        const GroupWord w = parse_word(word, kind, n);
        json out = {{"word", to_string(w)}};
        if (action == "hom") out["image"] = to_string(to_virtual(w));
        else out["permutation"] = project_to_symmetric(w);
        std::cout << (as_json ? out.dump(2) : out.dump()) << '\n';
        return 0;
      }
      if (action == "mc-word") {
        const GroupWord w = mc_s0j_word(j_arg, n);
        std::cout << json{{"word", to_string(w)}, {"projection", project_to_symmetric(w)}}.dump() << '\n';
        return 0;
      }
      const Permutation w = cabling(int_list(u_text), i_arg, j_arg, n);
      std::cout << json{{"cabling", w}, {"translation", is_translation(w, i_arg, j_arg)}}.dump() << '\n';
      return 0;
    }

    // ----------------------------------------------------------- act / verify / orbit
    if (*act_cmd || *verify || *orbit_cmd) {
      const CartanData cartan = parse_cartan_type(type);
      const GroupKind kind = parse_group_kind(kind_text);
      std::vector<Weight> tuple;
      if (!fundamental.empty()) tuple = fundamental_list(fundamental, cartan);
      else if (!weights.empty()) tuple = weight_list(weights, cartan);
      else throw UsageError("need --weights or --fundamental");
      std::vector<Weight> family;
      for (const auto& w : tuple)
        if (std::find(family.begin(), family.end(), w) == family.end()) family.push_back(w);
      const ActionContext ctx(cartan, family);
      std::vector<int> colours;
      for (const auto& w : tuple) colours.push_back(ctx.colour_of(w));

      auto read_point = [&] {
        LabeledPoint p{colours, int_list(point_text)};
        if (p.entries.size() != colours.size()) throw UsageError("--point needs one entry per weight");
        return p;
      };

      if (*act_cmd) {
        const LabeledPoint p = read_point();
        const LabeledPoint q = act_word(ctx, parse_word(word, kind, static_cast<int>(colours.size())), p);
        std::cout << (as_json ? json{{"point", point_json(p, ctx)}, {"image", point_json(q, ctx)}}.dump(2)
                              : json{{"image", point_json(q, ctx)}}.dump())
                  << '\n';
        return 0;
      }
      if (*orbit_cmd) {
        const LabeledPoint p = read_point();
        std::vector<Generator> gens;
        for (const auto& g : parse_word(gens_text, kind, static_cast<int>(colours.size())).gens) gens.push_back(g);
        const auto orb = orbit(ctx, kind, gens, p);
        json pts = json::array();
        for (const auto& q : orb) pts.push_back(point_json(q, ctx));
        std::cout << (as_json ? json{{"size", orb.size()}, {"orbit", pts}}.dump(2)
                              : "orbit of size " + std::to_string(orb.size()) + "\n" + pts.dump())
                  << '\n';
        return 0;
      }
      const int size = n > 0 ? n : static_cast<int>(colours.size());
      std::vector<std::vector<int>> tuples;
      if (all_tuples || size != static_cast<int>(colours.size())) tuples = all_colour_tuples(ctx.colour_count(), size);
      else tuples = rearrangements(colours);
      const RelationReport r = verify_relations(ctx, kind, size, tuples, threads);
      report.result() = to_json(r);
      report.check(to_string(kind) + "_" + std::to_string(size) + " relations on " + std::to_string(r.points) + " points",
                   r.passed());
      std::ostringstream body;
      body << r.relations << " relations, " << r.points << " points" << (r.skipped ? " (skipped: over the point ceiling)" : "")
           << ", " << r.failures.size() << " failures\n";
      for (std::size_t k = 0; k < r.failures.size() && k < 10; ++k)
        body << "  " << r.failures[k].family << ": " << r.failures[k].lhs << " = " << r.failures[k].rhs << " at "
             << to_string(r.failures[k].point) << '\n';
      return report.finish(body.str());
    }

    // ------------------------------------------------------------------ image
    if (*image) {
      const Partition shape = int_list(shape_text);
      if (!is_partition(shape)) throw UsageError("--shape is not a partition");
      const PermutationGroup g = bk_image(shape);
      report.result() = {{"degree", g.degree()}, {"order", g.order()}, {"contains_alternating", g.contains_alternating()}};
      std::ostringstream body;
      body << "image on " << g.degree() << " tableaux has order " << g.order() << '\n';
      if (report_text.find("contains-alternating") != std::string::npos)
        report.check("contains the alternating group", g.contains_alternating());
      return report.finish(body.str());
    }

    // -------------------------------------------------------------------- rsk
    if (*rsk_cmd) {
      if (!perm_text.empty()) {
        const RskPair r = rsk(int_list(perm_text));
        std::cout << json{{"P", to_json(r.P)}, {"Q", to_json(r.Q)}}.dump() << '\n';
        return 0;
      }
      if (p_text.empty() || q_text.empty()) throw UsageError("rsk: give --perm, or --P and --Q");
      std::cout << json{{"perm", inverse_rsk(tableau_arg(p_text), tableau_arg(q_text))}}.dump() << '\n';
      return 0;
    }

    // ------------------------------------------------------------------- evac
    if (*evac) {
      const Tableau t = tableau_arg(tableau_text);
      Tableau out;
      if (!cactus_text.empty()) {
        const auto ij = int_list(cactus_text);
        if (ij.size() != 2) throw UsageError("--cactus needs i,j");
        out = bk_cactus_act(ij[0], ij[1], t);
      } else {
        out = j_arg > 0 ? partial_evacuation(j_arg, t) : evacuation(t);
      }
      std::cout << to_json(out).dump() << '\n';
      return 0;
    }

    // --------------------------------------------------------------------- bk
    if (*bk) {
      if (search) {
        const BraidSearch s = bender_knuth_braid_search(max_cells, max_entry);
        report.result() = {{"tableaux", s.tableaux}, {"involutions_hold", s.involutions_hold}};
        if (s.witness)
          report.result()["witness"] = {{"T", to_json(s.witness->tableau)},
                                        {"t1t2t1", to_json(s.witness->t121)},
                                        {"t2t1t2", to_json(s.witness->t212)}};
        report.check("t_i^2 = id on all searched tableaux", s.involutions_hold);
        report.check("braid relation fails somewhere", s.witness.has_value());
        std::ostringstream body;
        body << s.tableaux << " tableaux searched\n";
        if (s.witness)
          body << "witness " << to_string(s.witness->tableau) << ": t1t2t1 = " << to_string(s.witness->t121)
               << ", t2t1t2 = " << to_string(s.witness->t212) << '\n';
        return report.finish(body.str());
      }
      if (tableau_text.empty() || i_arg < 1) throw UsageError("bk: need --i and --tableau, or --search");
      std::cout << to_json(bender_knuth(i_arg, tableau_arg(tableau_text))).dump() << '\n';
      return 0;
    }

    // ------------------------------------------------------------- crosscheck
    if (*crosscheck) {
      const CrosscheckReport r = rsk_crosscheck(n);
      report.result() = to_json(r);
      report.check("S_n acts by left multiplication", r.left_multiplication);
      report.check("C_n acts on one RSK factor by the Berenstein-Kirillov action", r.acts_on_P || r.acts_on_Q);
      return report.finish("n = " + std::to_string(r.n) + ", " + std::to_string(r.points) + " points, acting factor: " +
                           r.factor + '\n');
    }

    // --------------------------------------------------------------- category
    if (*category) {
      auto load = [&]() -> CategoryData {
        if (!input.empty()) return category_from_json(read_json_file(input));
        if (colours_text.empty()) throw UsageError("category: need --input or --colours");
        const CartanData cartan = parse_cartan_type(type);
        return from_crystals(cartan, weight_list(colours_text, cartan));
      };
      const CategoryData d = load();
      if (action == "from-crystals") {
        const json j = to_json(d);
        if (!out_path.empty()) write_file(out_path, j.dump());
        const ValidationReport v = validate(d);
        report.result() = {{"colours", d.colours}, {"validation", to_json(v)}};
        if (out_path.empty() && as_json) report.result()["data"] = j;
        report.check("validates", v.passed());
        return report.finish(std::to_string(d.colours.size()) + " colours, " + std::to_string(d.phi.size()) + " pairs, " +
                             std::to_string(d.alpha.size()) + " triples\n");
      }
      if (action == "validate") {
        const ValidationReport v = validate(d);
        report.result() = to_json(v);
        for (const auto& [axiom, k] : v.checked) {
          std::size_t bad = 0;
          for (const auto& f : v.failures) bad += f.axiom == axiom;
          report.check(axiom + " (" + std::to_string(k) + " instances)", bad == 0);
        }
        if (!v.passed() && v.failures.empty()) report.check("failures beyond the report cap", false);
        std::ostringstream body;
        for (std::size_t k = 0; k < v.failures.size() && k < 10; ++k)
          body << v.failures[k].axiom << " " << v.failures[k].instance << ": " << v.failures[k].detail << '\n';
        return report.finish(body.str());
      }
      if (action == "roundtrip") {
        const RoundtripReport r = roundtrip(d);
        report.result() = to_json(r);
        report.check("category -> covering -> category is the identity", r.category_identical);
        report.check("covering -> category -> covering is the identity", r.covering_identical);
        report.check("covering equivariance and relations", r.covering.passed());
        return report.finish();
      }
      // mutate
      if (!validate(d).passed()) throw UsageError("category mutate: input data must validate");
      json muts = json::array();
      int caught = 0;
      for (int k = 0; k < count; ++k) {
        CategoryData m = d;
        const std::string what = mutate(m, seed + static_cast<unsigned>(k));
        const bool detected = !validate(m).passed();
        caught += detected;
        muts.push_back({{"mutation", what}, {"detected", detected}});
      }
      report.result() = {{"mutations", muts}, {"detected", caught}};
      report.check(std::to_string(caught) + "/" + std::to_string(count) + " mutations detected", caught == count);
      return report.finish();
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
