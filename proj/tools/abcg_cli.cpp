// Command-line front end over the abelian-by-cyclic toolkit: Groebner
// computations, subgroup structure, coset intersection, the monomial
// equation solver, and the reduction gadgets.
//
// Exit codes: 0 positive verdict, 1 negative verdict, 2 unknown,
// 3 malformed input, 4 step budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "abcg/abc_group.hpp"
#include "abcg/coset.hpp"
#include "abcg/errors.hpp"
#include "abcg/fpmod.hpp"
#include "abcg/gadgets.hpp"
#include "abcg/groebner.hpp"
#include "abcg/monomial_eq.hpp"
#include "abcg/textio.hpp"
#include "abcg/zlinalg.hpp"

using json = nlohmann::json;
using namespace abcg;

namespace {

constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParse = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON error in ") + path + ": " + e.what());
  }
}

ModulePresentation parse_presentation(const json& j) {
  if (!j.contains("presentation")) return ModulePresentation::free_module(1);
  const json& p = j.at("presentation");
  const int rank = p.value("ambient_rank", 1);
  const int step = p.value("base_step", 1);
  std::vector<LaurentVec> rels;
  for (const json& r : p.value("relations", json::array())) {
    std::vector<LaurentPoly> coords;
    if (r.is_string()) {
      coords.push_back(LaurentPoly::parse(r.get<std::string>()));
    } else {
      for (const json& c : r) coords.push_back(LaurentPoly::parse(c.get<std::string>()));
    }
    if (static_cast<int>(coords.size()) != rank)
      throw ParseError("relation has wrong rank");
    rels.push_back(LaurentVec(std::move(coords)));
  }
  return ModulePresentation(rank, std::move(rels), step);
}

LaurentVec parse_vec(const json& v, int rank) {
  std::vector<LaurentPoly> coords;
  if (v.is_string()) {
    coords.push_back(LaurentPoly::parse(v.get<std::string>()));
  } else {
    for (const json& c : v) coords.push_back(LaurentPoly::parse(c.get<std::string>()));
  }
  if (static_cast<int>(coords.size()) != rank)
    throw ParseError("vector has wrong rank");
  return LaurentVec(std::move(coords));
}

std::vector<LaurentVec> parse_vec_list(const json& j, const std::string& key,
                                       int rank) {
  if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
  std::vector<LaurentVec> out;
  for (const json& v : j.at(key)) out.push_back(parse_vec(v, rank));
  return out;
}

std::vector<GroupElement> parse_elem_list(const AbcGroup& grp, const json& j,
                                          const std::string& key) {
  if (!j.contains(key)) throw ParseError("missing field '" + key + "'");
  std::vector<GroupElement> out;
  for (const json& v : j.at(key))
    out.push_back(grp.parse_element(v.get<std::string>()));
  return out;
}

std::string canon_elem(const AbcGroup& grp, const GroupElement& g) {
  return grp.str({grp.presentation().reduce(g.a), g.z});
}

SolveConfig make_config(std::int64_t bound, const std::string& probes) {
  SolveConfig cfg;
  if (bound > 0) cfg.search_bound = bound;
  if (!probes.empty()) {
    cfg.probes.clear();
    std::istringstream in(probes);
    std::string part;
    while (std::getline(in, part, ',')) {
      const std::size_t colon = part.find(':');
      if (colon == std::string::npos)
        throw ParseError("--probes expects q:r,q:r,...");
      cfg.probes.emplace_back(std::stoi(part.substr(0, colon)),
                              std::stoi(part.substr(colon + 1)));
    }
  }
  return cfg;
}

std::vector<std::int64_t> parse_int_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  if (csv.empty()) return out;
  std::istringstream in(csv);
  std::string part;
  while (std::getline(in, part, ',')) out.push_back(std::stoll(part));
  return out;
}

void print_lattice(const IntMatrix& lat, const std::string& label, bool records) {
  if (records) {
    std::cout << "rows=" << lat.rows() << "\n";
    for (int r = 0; r < lat.rows(); ++r) {
      std::cout << label << "=";
      for (int c = 0; c < lat.cols(); ++c)
        std::cout << (c ? "," : "") << lat(r, c);
      std::cout << "\n";
    }
  } else {
    if (lat.rows() == 0) {
      std::cout << label << ": trivial lattice {0}\n";
      return;
    }
    std::cout << label << ":\n" << lat.str() << "\n";
  }
}

int cmd_gb(const std::string& path, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  std::vector<LaurentVec> vecs =
      parse_vec_list(j, "vectors", pres.ambient_rank());
  std::vector<PolyVecXY> gens;
  for (const auto& v : vecs) gens.push_back(encode_laurent(pres.to_engine(v)));
  for (const auto& r : pres.relations())
    gens.push_back(encode_laurent(pres.to_engine(r)));
  for (int i = 0; i < pres.ambient_rank(); ++i) {
    PolyVecXY row(pres.ambient_rank());
    row[i].add_term(Mono{1, 1}, 1);
    row[i].add_term(Mono{0, 0}, -1);
    gens.push_back(row);
  }
  StrongGB gb = strong_groebner(gens, TermOrder{TermOrder::Kind::PotGraded});
  for (std::size_t i = 0; i < gb.elements.size(); ++i) {
    LaurentVec dec = pres.from_engine(decode_vec(gb.elements[i]));
    if (records)
      std::cout << "gb=" << dec.str() << "\n";
    else
      std::cout << "gb " << i << ": " << dec.str() << "\n";
  }
  return kExitPositive;
}

int cmd_member(const std::string& path, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  std::vector<LaurentVec> gens = parse_vec_list(j, "vectors", pres.ambient_rank());
  LaurentVec target = parse_vec(j.at("target"), pres.ambient_rank());
  auto cert = submodule_membership(pres, target, gens);
  if (!cert) {
    std::cout << (records ? "member=false" : "NOT MEMBER") << "\n";
    return kExitNegative;
  }
  std::cout << (records ? "member=true" : "MEMBER") << "\n";
  for (std::size_t i = 0; i < cert->size(); ++i) {
    if (records)
      std::cout << "coeff=" << (*cert)[i].str() << "\n";
    else
      std::cout << "coeff " << (i + 1) << ": " << (*cert)[i].str() << "\n";
  }
  return kExitPositive;
}

int cmd_syzygy(const std::string& path, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  std::vector<LaurentVec> elems = parse_vec_list(j, "vectors", pres.ambient_rank());
  auto syz = syzygies_in_quotient(pres, elems);
  for (std::size_t i = 0; i < syz.size(); ++i) {
    std::ostringstream row;
    row << "(";
    for (std::size_t c = 0; c < syz[i].size(); ++c)
      row << (c ? ", " : "") << syz[i][c].str();
    row << ")";
    if (records)
      std::cout << "syzygy=" << row.str() << "\n";
    else
      std::cout << "syzygy " << i << ": " << row.str() << "\n";
  }
  if (!records && syz.empty()) std::cout << "no syzygy generators\n";
  return kExitPositive;
}

int cmd_zlattice(const std::string& path, bool of_syzygies, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  std::vector<LaurentVec> vecs = parse_vec_list(j, "vectors", pres.ambient_rank());
  if (of_syzygies) {
    print_lattice(integer_syzygies(pres, vecs), "lattice", records);
  } else {
    std::vector<PolyVecXY> gens;
    for (const auto& v : vecs) gens.push_back(encode_laurent(pres.to_engine(v)));
    for (const auto& r : pres.relations())
      gens.push_back(encode_laurent(pres.to_engine(r)));
    for (int i = 0; i < pres.ambient_rank(); ++i) {
      PolyVecXY row(pres.ambient_rank());
      row[i].add_term(Mono{1, 1}, 1);
      row[i].add_term(Mono{0, 0}, -1);
      gens.push_back(row);
    }
    print_lattice(constant_intersection(gens, pres.ambient_rank()), "lattice",
                  records);
  }
  return kExitPositive;
}

int cmd_solve_monomial(const std::string& path, std::int64_t bound,
                       const std::string& probes, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  LaurentVec f1 = parse_vec(j.at("f1"), pres.ambient_rank());
  LaurentVec f0 = parse_vec(j.at("f0"), pres.ambient_rank());
  MonomialSolveResult res = solve_monomial(pres, f1, f0, make_config(bound, probes));
  if (records)
    std::cout << "result=" << res.str() << "\n";
  else
    std::cout << res.str() << "\n";
  switch (res.verdict) {
    case MonomialSolveResult::Verdict::Found:
      return kExitPositive;
    case MonomialSolveResult::Verdict::Empty:
      return kExitNegative;
    default:
      return kExitUnknown;
  }
}

void print_structure(const AbcGroup& grp, const SubgroupStructure& s,
                     const std::string& tag, bool records) {
  if (s.all_in_a) {
    if (records)
      std::cout << tag << ".kind=lattice\n";
    else
      std::cout << tag << ": inside A, Z-lattice on " << s.s_gens.size()
                << " generators\n";
  } else {
    if (records)
      std::cout << tag << ".d=" << s.d << "\n";
    else
      std::cout << tag << ": d = " << s.d
                << ", pivot = " << canon_elem(grp, *s.pivot) << "\n";
  }
  for (std::size_t i = 0; i < s.s_gens.size(); ++i) {
    if (records)
      std::cout << tag << ".S=" << s.s_gens[i].str() << "\n";
    else
      std::cout << tag << ".S[" << i << "] = " << s.s_gens[i].str() << "\n";
  }
}

int cmd_coset(const std::string& path, std::int64_t bound,
              const std::string& probes, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  AbcGroup grp(pres);
  std::vector<GroupElement> g = parse_elem_list(grp, j, "G");
  std::vector<GroupElement> h = parse_elem_list(grp, j, "H");
  GroupElement t = grp.parse_element(j.at("h").get<std::string>());
  print_structure(grp, subgroup_structure(grp, g), "G", records);
  print_structure(grp, subgroup_structure(grp, h), "H", records);
  CosetResult res = coset_intersect(grp, g, h, t, make_config(bound, probes));
  switch (res.verdict) {
    case CosetResult::Verdict::NonEmpty:
      if (records) {
        std::cout << "verdict=nonempty\n";
        if (res.witness) std::cout << "witness=" << canon_elem(grp, *res.witness) << "\n";
      } else {
        std::cout << "NONEMPTY (" << res.certificate << ")\n";
        if (res.witness)
          std::cout << "witness: " << canon_elem(grp, *res.witness) << "\n";
      }
      return kExitPositive;
    case CosetResult::Verdict::Empty:
      if (records)
        std::cout << "verdict=empty\n";
      else
        std::cout << "EMPTY (" << res.certificate << ")\n";
      return kExitNegative;
    default:
      if (records)
        std::cout << "verdict=unknown\n";
      else
        std::cout << "UNKNOWN (" << res.certificate << ")\n";
      return kExitUnknown;
  }
}

int cmd_subgroup(const std::string& path, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  AbcGroup grp(pres);
  std::vector<GroupElement> gens = parse_elem_list(grp, j, "generators");
  SubgroupStructure s = subgroup_structure(grp, gens);
  print_structure(grp, s, "G", records);
  if (!j.contains("element")) return kExitPositive;
  GroupElement g = grp.parse_element(j.at("element").get<std::string>());
  const bool member = subgroup_membership(grp, g, s);
  if (records)
    std::cout << "member=" << (member ? "true" : "false") << "\n";
  else
    std::cout << (member ? "MEMBER" : "NOT MEMBER") << "\n";
  return member ? kExitPositive : kExitNegative;
}

// word tokens: variable, variable^-1, (element), (element)^-1
Word parse_word(const AbcGroup& grp, const std::string& text) {
  Word w;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    bool is_const = false;
    std::string token;
    if (text[i] == '(') {
      int depth = 0;
      std::size_t start = i;
      for (; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')' && --depth == 0) {
          ++i;
          break;
        }
      }
      if (depth != 0) throw ParseError("unbalanced parentheses in word", 0,
                                       static_cast<int>(start) + 1);
      token = text.substr(start, i - start);
      is_const = true;
    } else {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '^')
        ++i;
      token = text.substr(start, i - start);
    }
    bool inverted = false;
    if (i + 2 <= text.size() && text[i] == '^') {
      if (text.compare(i, 3, "^-1") != 0)
        throw ParseError("only ^-1 is supported in words", 0,
                         static_cast<int>(i) + 1);
      inverted = true;
      i += 3;
    }
    Word letter = is_const ? Word::constant(grp.parse_element(token))
                           : Word::var(token);
    w.append(inverted ? letter.inverse() : letter);
  }
  return w;
}

int cmd_eval_word(const std::string& path, bool records) {
  json j = load_json(path);
  ModulePresentation pres = parse_presentation(j);
  AbcGroup grp(pres);
  Word w = parse_word(grp, j.at("word").get<std::string>());
  std::map<std::string, GroupElement> asg;
  for (const auto& [key, val] : j.value("assignment", json::object()).items())
    asg[key] = grp.parse_element(val.get<std::string>());
  GroupElement res = evaluate_word(grp, w, asg);
  if (records)
    std::cout << "value=" << canon_elem(grp, res) << "\n";
  else
    std::cout << canon_elem(grp, res) << "\n";
  return kExitPositive;
}

EquationChain parse_chain(const json& j) {
  EquationChain chain;
  chain.orig_vars = j.at("vars").get<int>();
  chain.num_vars = chain.orig_vars;
  for (const json& e : j.at("eqs")) {
    const std::string op = e.at("op").get<std::string>();
    EquationChain::Eq eq;
    eq.k = e.at("k").get<int>();
    if (op == "prod") {
      eq.op = EquationChain::Eq::Op::Prod;
      eq.i = e.at("i").get<int>();
      eq.j = e.at("j").get<int>();
    } else if (op == "sum") {
      eq.op = EquationChain::Eq::Op::Sum;
      eq.i = e.at("i").get<int>();
      eq.j = e.at("j").get<int>();
    } else if (op == "const") {
      eq.op = EquationChain::Eq::Op::Const;
      eq.b = e.at("b").get<std::int64_t>();
    } else {
      throw ParseError("unknown chain op '" + op + "'");
    }
    if (eq.k != chain.num_vars + 1)
      throw ParseError("chain must define variables in order");
    chain.num_vars = eq.k;
    chain.eqs.push_back(eq);
  }
  chain.out_var = j.value("out", chain.num_vars);
  if (chain.out_var < 1 || chain.out_var > chain.num_vars)
    throw ParseError("output variable out of range");
  return chain;
}

int cmd_gadget_compile(const std::string& path, std::int64_t a,
                       const std::string& out_path) {
  json j = load_json(path);
  EquationChain chain;
  if (j.contains("eqs")) {
    chain = parse_chain(j);
  } else if (j.contains("monomials")) {
    const int vars = j.at("vars").get<int>();
    std::vector<std::pair<Int, std::vector<int>>> monos;
    for (const json& m : j.at("monomials")) {
      std::vector<int> exps;
      for (const json& e : m.at("e")) exps.push_back(e.get<int>());
      if (static_cast<int>(exps.size()) != vars)
        throw ParseError("monomial exponent arity mismatch");
      monos.emplace_back(Int(m.at("c").get<long long>()), exps);
    }
    chain = flatten_polynomial(monos, vars);
  } else {
    throw ParseError("expected 'eqs' (chain) or 'monomials' (polynomial)");
  }
  CompiledSystem cs = compile_system(chain, a);
  const std::string text = system_to_text(cs.sys);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return kExitPositive;
}

int cmd_gadget_check(const std::string& gadget, const std::string& zcsv,
                     const std::string& system_path, const std::string& assign,
                     bool records) {
  bool ok;
  if (!gadget.empty()) {
    std::vector<std::int64_t> z = parse_int_list(zcsv);
    if (z.size() != 3) throw ParseError("--z expects three integers");
    GadgetKind kind;
    if (gadget == "square")
      kind = GadgetKind::Square;
    else if (gadget == "sum")
      kind = GadgetKind::Sum;
    else
      throw ParseError("--gadget must be square or sum");
    ok = gadget_holds(kind, {z[0], z[1], z[2]});
  } else if (!system_path.empty()) {
    DivisibilitySystem sys = system_from_text(read_file(system_path));
    ok = evaluate_system(sys, parse_int_list(assign));
  } else {
    throw ParseError("need --gadget or --system");
  }
  if (records)
    std::cout << "satisfied=" << (ok ? "true" : "false") << "\n";
  else
    std::cout << (ok ? "SATISFIED" : "NOT SATISFIED") << "\n";
  return ok ? kExitPositive : kExitNegative;
}

std::string word_to_text(const AbcGroup& grp, const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (const auto& l : w.letters) {
    if (!first) out << " ";
    first = false;
    switch (l.kind) {
      case Word::Letter::Kind::Var:
        out << l.var;
        break;
      case Word::Letter::Kind::InvVar:
        out << l.var << "^-1";
        break;
      case Word::Letter::Kind::Const:
        out << canon_elem(grp, l.c);
        break;
      case Word::Letter::Kind::InvConst:
        out << canon_elem(grp, l.c) << "^-1";
        break;
    }
  }
  return out.str();
}

int cmd_instance(const std::string& system_path, const std::string& kind) {
  DivisibilitySystem sys = system_from_text(read_file(system_path));
  ModuleInstance mi = to_module_instance(sys);
  if (kind == "module") {
    std::cout << "ambient_rank: " << mi.pres.ambient_rank() << "\n";
    for (const auto& r : mi.pres.relations())
      std::cout << "relation: " << r.str() << "\n";
    for (std::size_t i = 0; i < mi.f.size(); ++i)
      std::cout << "f" << i << ": " << mi.f[i].str() << "\n";
  } else if (kind == "quadratic") {
    QuadraticInstance qi = to_quadratic_instance(mi);
    for (std::size_t i = 0; i < qi.h.size(); ++i)
      std::cout << "h" << i << ": " << canon_elem(qi.grp, qi.h[i]) << "\n";
    std::cout << "word: " << word_to_text(qi.grp, qi.word) << "\n";
  } else if (kind == "knapsack") {
    KnapsackInstance ki = to_knapsack_instance(mi);
    for (std::size_t i = 0; i < ki.g.size(); ++i)
      std::cout << "g" << (i + 1) << ": " << canon_elem(ki.grp, ki.g[i]) << "\n";
    std::cout << "target: " << canon_elem(ki.grp, ki.target) << "\n";
  } else if (kind == "wreath") {
    WreathInstance wi = to_wreath_instance(sys);
    for (std::size_t jdx = 0; jdx < wi.words.size(); ++jdx)
      std::cout << "w" << (jdx + 1) << ": "
                << word_to_text(wi.wreath, wi.words[jdx]) << "\n";
  } else {
    throw ParseError("--kind must be module, quadratic, knapsack or wreath");
  }
  return kExitPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in abelian-by-cyclic groups"};
  app.require_subcommand(1);
  bool records = false;
  app.add_flag("--format-records,--records", records,
               "machine-readable key=value output");
  std::int64_t bound = 0;
  std::string probes;
  app.add_option("--bound", bound, "search bound for the monomial solver");
  app.add_option("--probes", probes, "probe list q:r,q:r,...");

  std::string in_path, out_path, kind = "module", gadget, zcsv, system_path,
                                 assign;
  bool zl_syzygies = false;

  CLI::App* gb = app.add_subcommand("gb", "strong Groebner basis of a submodule");
  gb->add_option("file", in_path)->required();
  CLI::App* member = app.add_subcommand("member", "submodule membership with certificate");
  member->add_option("file", in_path)->required();
  CLI::App* syzygy = app.add_subcommand("syzygy", "syzygy generators in a quotient");
  syzygy->add_option("file", in_path)->required();
  CLI::App* zlattice = app.add_subcommand("zlattice", "integer points of a module");
  zlattice->add_option("file", in_path)->required();
  zlattice->add_flag("--syzygies", zl_syzygies,
                     "lattice of integer syzygies instead of constant vectors");
  CLI::App* solvemono = app.add_subcommand("solve-monomial", "solve X^z f1 = f0");
  solvemono->add_option("file", in_path)->required();
  CLI::App* coset = app.add_subcommand("coset-intersect", "decide <G> ∩ h<H> = ∅");
  coset->add_option("file", in_path)->required();
  CLI::App* subgroup = app.add_subcommand("subgroup", "subgroup structure and membership");
  subgroup->add_option("file", in_path)->required();
  CLI::App* evalword = app.add_subcommand("eval-word", "evaluate a word");
  evalword->add_option("file", in_path)->required();
  CLI::App* gcompile = app.add_subcommand("gadget-compile", "compile a chain or polynomial");
  gcompile->add_option("file", in_path)->required();
  std::int64_t target_a = 0;
  gcompile->add_option("--a", target_a, "right-hand value a")->required();
  gcompile->add_option("-o,--output", out_path);
  CLI::App* gcheck = app.add_subcommand("gadget-check", "check a gadget or system");
  gcheck->add_option("--gadget", gadget, "square or sum");
  gcheck->add_option("--z", zcsv, "comma-separated tuple");
  gcheck->add_option("--system", system_path, "system text file");
  gcheck->add_option("--assign", assign, "comma-separated assignment");
  CLI::App* instance = app.add_subcommand("instance", "build a reduction instance");
  instance->add_option("file", in_path)->required();
  instance->add_option("--kind", kind, "module|quadratic|knapsack|wreath");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitParse;
  }

  try {
    if (gb->parsed()) return cmd_gb(in_path, records);
    if (member->parsed()) return cmd_member(in_path, records);
    if (syzygy->parsed()) return cmd_syzygy(in_path, records);
    if (zlattice->parsed()) return cmd_zlattice(in_path, zl_syzygies, records);
    if (solvemono->parsed())
      return cmd_solve_monomial(in_path, bound, probes, records);
    if (coset->parsed()) return cmd_coset(in_path, bound, probes, records);
    if (subgroup->parsed()) return cmd_subgroup(in_path, records);
    if (evalword->parsed()) return cmd_eval_word(in_path, records);
    if (gcompile->parsed()) return cmd_gadget_compile(in_path, target_a, out_path);
    if (gcheck->parsed())
      return cmd_gadget_check(gadget, zcsv, system_path, assign, records);
    if (instance->parsed()) return cmd_instance(in_path, kind);
  } catch (const ParseError& e) {
    std::cerr << "parse error";
    if (e.line > 0) std::cerr << " at line " << e.line << ", column " << e.col;
    else if (e.col > 0) std::cerr << " at column " << e.col;
    std::cerr << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}
