// crys: command-line front end for the crystal combinatorics library.
//
// Exit codes: 0 success, 1 validation failure, 2 guard refusal,
// 64 unknown verb, 65 malformed input.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "crysalg/comodule.hpp"
#include "crysalg/comonad.hpp"
#include "crysalg/crystal_json.hpp"
#include "crysalg/dual_algebra.hpp"
#include "crysalg/linear_bialgebra.hpp"
#include "crysalg/monoid.hpp"
#include "crysalg/selftest.hpp"
#include "crysalg/set_bialgebra.hpp"
#include "crysalg/tensor.hpp"

using namespace crysalg;
using Json = nlohmann::ordered_json;

namespace {

int exit_code = 0;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json(const std::string& path) {
  try {
    if (path.empty() || path == "-") return Json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}

Crystal load_crystal(const std::string& path) { return crystal_from_json(read_json(path)); }

void print_crystal(const Crystal& c, const std::string& format) {
  if (format == "dot")
    std::cout << crystal_to_dot(c);
  else
    emit(crystal_to_json(c));
}

std::int64_t default_cutoff() {
  if (const char* env = std::getenv("CRYSALG_CUTOFF")) return std::atoll(env);
  return 4;
}

BasisPair make_pair_arg(std::int64_t alpha, const std::string& b, const std::string& bp) {
  const Mono mb = Mono::parse(b), mbp = Mono::parse(bp);
  if (mb.deg() != alpha || mbp.deg() != alpha)
    throw std::invalid_argument("nodes do not lie in B(" + std::to_string(alpha) + ")");
  return {alpha, mb, mbp};
}

Json pair_json(const BasisPair& p) {
  return Json{{"alpha", p.alpha}, {"b", p.b.label()}, {"bp", p.bd.label()}, {"label", p.label()}};
}

Json comb_json(const BComb& x) {
  Json out = Json::object();
  for (const auto& [p, k] : x.terms()) out[p.label()] = k;
  return out;
}

Json pair_comb_json(const BPairComb& x) {
  Json out = Json::object();
  for (const auto& [pq, k] : x.terms())
    out["(" + pq.first.label() + ")⊗(" + pq.second.label() + ")"] = k;
  return out;
}

Json blocks_json(const DualElem& u, std::int64_t cutoff) {
  Json out = Json::object();
  for (std::int64_t n = 0; n <= cutoff; ++n) {
    if (u.block_zero(n)) continue;
    const IntMat m = u.block(n);
    Json rows = Json::array();
    for (std::int64_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::int64_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(row);
    }
    out[std::to_string(n)] = rows;
  }
  return out;
}

SetComodule set_comodule_from_json(const Json& j) {
  try {
    SetComodule m;
    m.carrier = j.at("carrier").get<std::vector<std::string>>();
    for (const auto& entry : j.at("coaction")) {
      if (entry.is_null()) {
        m.coaction.push_back(std::nullopt);
        continue;
      }
      const auto& e = entry.at("elem");
      BElem p = make_pair_arg(e.at("alpha").get<std::int64_t>(), e.at("b").get<std::string>(),
                              e.at("bp").get<std::string>());
      const int tail = m.index_of(entry.at("tail").get<std::string>());
      if (tail < 0) throw std::invalid_argument("coaction tail is not a carrier element");
      m.coaction.push_back(std::pair{p, tail});
    }
    if (m.coaction.size() != m.carrier.size())
      throw std::invalid_argument("coaction table length mismatch");
    return m;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad comodule JSON: ") + e.what());
  }
}

LinComodule lin_comodule_from_json(const Json& j) {
  try {
    LinComodule m;
    m.rank = j.at("rank").get<std::int64_t>();
    for (const auto& op : j.at("ops")) {
      const auto alpha_vec = op.at("alpha").get<std::vector<std::int64_t>>();
      if (alpha_vec.size() != 1) throw std::invalid_argument("alpha must have rank 1 (sl2)");
      const std::int64_t alpha = alpha_vec[0];
      BasisPair key = make_pair_arg(alpha, op.at("b").get<std::string>(),
                                    op.at("bp").get<std::string>());
      IntMat mat(m.rank, m.rank);
      const auto rows = op.at("matrix").get<std::vector<std::vector<std::int64_t>>>();
      if (static_cast<std::int64_t>(rows.size()) != m.rank)
        throw std::invalid_argument("matrix has wrong shape");
      for (std::int64_t r = 0; r < m.rank; ++r) {
        if (static_cast<std::int64_t>(rows[r].size()) != m.rank)
          throw std::invalid_argument("matrix has wrong shape");
        for (std::int64_t c = 0; c < m.rank; ++c) mat(r, c) = rows[r][c];
      }
      m.ops[{key.alpha, key.b, key.bd}] = mat;
    }
    return m;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad comodule JSON: ") + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact crystal combinatorics and the q=0 crystal bialgebra"};
  app.require_subcommand(1);
  std::string format = "json";

  // ---- crystal ----
  auto* crystal_cmd = app.add_subcommand("crystal", "build, validate and export crystals");
  crystal_cmd->require_subcommand(1);
  {
    auto* build = crystal_cmd->add_subcommand("build", "build B(n) or T_lambda");
    auto type = std::make_shared<std::string>("Bn");
    auto n = std::make_shared<std::int64_t>(0);
    auto lambda = std::make_shared<std::int64_t>(0);
    auto fmt = std::make_shared<std::string>("json");
    build->add_option("--type", *type)->check(CLI::IsMember({"Bn", "T"}));
    build->add_option("--n", *n);
    build->add_option("--lambda", *lambda);
    build->add_option("--format", *fmt)->check(CLI::IsMember({"json", "dot"}));
    build->callback([=]() {
      print_crystal(*type == "Bn" ? build_Bn(*n) : build_T_sl2(*lambda), *fmt);
    });

    auto* validate_cmd = crystal_cmd->add_subcommand("validate", "check the crystal axioms");
    auto vin = std::make_shared<std::string>("-");
    validate_cmd->add_option("--in", *vin);
    validate_cmd->callback([=]() {
      auto issues = validate(load_crystal(*vin));
      Json out = Json::array();
      for (const auto& issue : issues)
        out.push_back({{"node", issue.node},
                       {"color", issue.color},
                       {"axiom", issue.axiom},
                       {"detail", issue.detail}});
      emit(out);
      if (!issues.empty()) exit_code = 1;
    });

    auto* dual_cmd = crystal_cmd->add_subcommand("dual", "reverse all arrows");
    auto din = std::make_shared<std::string>("");
    auto dn = std::make_shared<std::int64_t>(-1);
    auto dfmt = std::make_shared<std::string>("json");
    dual_cmd->add_option("--in", *din);
    dual_cmd->add_option("--n", *dn);
    dual_cmd->add_option("--format", *dfmt)->check(CLI::IsMember({"json", "dot"}));
    dual_cmd->callback([=]() {
      print_crystal(dual(*dn >= 0 ? build_Bn(*dn) : load_crystal(*din)), *dfmt);
    });

    auto* comp = crystal_cmd->add_subcommand("components", "connected components");
    auto cin_path = std::make_shared<std::string>("-");
    comp->add_option("--in", *cin_path);
    comp->callback([=]() {
      Json out = Json::array();
      for (const Crystal& part : components(load_crystal(*cin_path)))
        out.push_back(crystal_to_json(part));
      emit(out);
    });

    auto* dot = crystal_cmd->add_subcommand("dot", "DOT export");
    auto dotin = std::make_shared<std::string>("-");
    dot->add_option("--in", *dotin);
    dot->callback([=]() { std::cout << crystal_to_dot(load_crystal(*dotin)); });
  }

  // ---- tensor / decompose / commutor ----
  {
    auto* t = app.add_subcommand("tensor", "Kashiwara tensor product of B(m) and B(n)");
    auto m = std::make_shared<std::int64_t>(1);
    auto n = std::make_shared<std::int64_t>(1);
    auto fmt = std::make_shared<std::string>("json");
    t->add_option("--m", *m)->required();
    t->add_option("--n", *n)->required();
    t->add_option("--format", *fmt)->check(CLI::IsMember({"json", "dot"}));
    t->callback([=]() { print_crystal(tensor(build_Bn(*m), build_Bn(*n)).crystal, *fmt); });

    auto* d = app.add_subcommand("decompose", "decomposition into irreducibles");
    auto dm = std::make_shared<std::int64_t>(1);
    auto dn = std::make_shared<std::int64_t>(1);
    auto din = std::make_shared<std::string>("");
    d->add_option("--m", *dm);
    d->add_option("--n", *dn);
    d->add_option("--in", *din);
    d->callback([=]() {
      const Crystal c =
          din->empty() ? tensor(build_Bn(*dm), build_Bn(*dn)).crystal : load_crystal(*din);
      Decomposition dec = decompose(c);
      Json parts = Json::array();
      for (const auto& part : dec.parts) {
        Json p;
        p["size"] = part.view.nodes.size();
        p["hw"] = c.ids[part.view.hw_node];
        if (part.cls) {
          p["n"] = part.cls->n;
          p["lambda"] = part.cls->lambda;
        }
        parts.push_back(p);
      }
      Json sizes = Json::array();
      for (auto s : dec.sizes()) sizes.push_back(s);
      emit(Json{{"sizes", sizes}, {"components", parts}});
    });

    auto* cm = app.add_subcommand("commutor", "the sl2 crystal commutor");
    auto cn = std::make_shared<std::int64_t>(1);
    auto cmm = std::make_shared<std::int64_t>(1);
    auto ci = std::make_shared<std::int64_t>(0);
    auto cr = std::make_shared<std::int64_t>(0);
    cm->add_option("--n", *cn)->required();
    cm->add_option("--m", *cmm)->required();
    cm->add_option("--i", *ci)->required();
    cm->add_option("--r", *cr)->required();
    cm->callback([=]() {
      if (*ci < 0 || *ci > *cn || *cr < 0 || *cr > *cmm)
        throw std::invalid_argument("element indices outside the blocks");
      const Mono a{*ci, *cn - *ci}, b{*cr, *cmm - *cr};
      auto [f1, f2] = commutor_sl2(a, b);
      auto [o1, o2] = commutor_oracle(a, b);
      emit(Json{{"input", a.label() + "⊗" + b.label()},
                {"formula", f1.label() + "⊗" + f2.label()},
                {"oracle", o1.label() + "⊗" + o2.label()},
                {"agree", f1 == o1 && f2 == o2}});
    });
  }

  // ---- mul ----
  {
    auto* m = app.add_subcommand("mul", "monomial products");
    auto ring = std::make_shared<std::string>("crys0");
    auto i1 = std::make_shared<std::int64_t>(0);
    auto j1 = std::make_shared<std::int64_t>(0);
    auto i2 = std::make_shared<std::int64_t>(0);
    auto j2 = std::make_shared<std::int64_t>(0);
    m->add_option("--ring", *ring)->check(CLI::IsMember({"crys0", "q", "dual0"}));
    m->add_option("--i1", *i1)->required();
    m->add_option("--j1", *j1)->required();
    m->add_option("--i2", *i2)->required();
    m->add_option("--j2", *j2)->required();
    m->callback([=]() {
      const Mono a{*i1, *j1}, b{*i2, *j2};
      if (*ring == "q") {
        emit(Json{{"product", mu_q(a, b).label()}});
      } else if (*ring == "dual0") {
        auto p = dual_mu(DualMono{a}, DualMono{b});
        emit(Json{{"product", p ? p->label() : "0"}});
      } else {
        auto p = mu0(a, b);
        emit(Json{{"product", p ? p->label() : "0"}});
      }
    });
  }

  // ---- set-level bialgebra ----
  {
    auto* bd = app.add_subcommand("bdelta", "set-level comultiplication");
    auto alpha = std::make_shared<std::int64_t>(1);
    auto b = std::make_shared<std::string>("y");
    auto bp = std::make_shared<std::string>("y");
    bd->add_option("--alpha", *alpha)->required();
    bd->add_option("--b", *b)->required();
    bd->add_option("--bp", *bp)->required();
    bd->callback([=]() {
      auto [t1, t2] = sdelta(make_pair_arg(*alpha, *b, *bp));
      emit(Json{{"first", pair_json(t1)}, {"second", pair_json(t2)}});
    });

    auto* bm = app.add_subcommand("bmul", "set-level multiplication");
    auto a1 = std::make_shared<std::int64_t>(1);
    auto b1 = std::make_shared<std::string>("y");
    auto p1 = std::make_shared<std::string>("y");
    auto a2 = std::make_shared<std::int64_t>(1);
    auto b2 = std::make_shared<std::string>("x");
    auto p2 = std::make_shared<std::string>("x");
    bm->add_option("--alpha", *a1)->required();
    bm->add_option("--b", *b1)->required();
    bm->add_option("--bp", *p1)->required();
    bm->add_option("--beta", *a2)->required();
    bm->add_option("--d", *b2)->required();
    bm->add_option("--dp", *p2)->required();
    bm->callback([=]() {
      auto prod = smul(make_pair_arg(*a1, *b1, *p1), make_pair_arg(*a2, *b2, *p2));
      emit(prod ? Json{{"product", pair_json(*prod)}} : Json{{"product", "0"}});
    });

    auto* vc = app.add_subcommand("verify-comodule", "check a set-level comodule");
    auto in = std::make_shared<std::string>("-");
    vc->add_option("--in", *in);
    vc->callback([=]() {
      auto issues = verify_comodule(set_comodule_from_json(read_json(*in)));
      Json out = Json::array();
      for (const auto& s : issues) out.push_back(s);
      emit(out);
      if (!issues.empty()) exit_code = 1;
    });
  }

  // ---- linearized bialgebra ----
  {
    auto conv = std::make_shared<std::string>("paper");
    auto* bi = app.add_subcommand("bimul", "multiply a word of generators");
    auto word = std::make_shared<std::string>("da");
    bi->add_option("--word", *word)->required();
    bi->add_option("--label-convention", *conv)->check(CLI::IsMember({"paper", "matrix"}));
    bi->callback([=]() {
      const LabelConvention c =
          *conv == "matrix" ? LabelConvention::matrix : LabelConvention::paper;
      emit(comb_json(word_to_basis(parse_word(*word, c))));
    });

    auto* bdel = app.add_subcommand("bidelta", "linearized comultiplication");
    auto alpha = std::make_shared<std::int64_t>(1);
    auto b = std::make_shared<std::string>("x");
    auto bp = std::make_shared<std::string>("x");
    bdel->add_option("--alpha", *alpha)->required();
    bdel->add_option("--b", *b)->required();
    bdel->add_option("--bp", *bp)->required();
    bdel->callback([=]() {
      emit(pair_comb_json(bb_delta(BComb::basis(make_pair_arg(*alpha, *b, *bp)))));
    });

    auto* nf = app.add_subcommand("normal-form", "normal form of a basis pair");
    auto na = std::make_shared<std::int64_t>(1);
    auto nb = std::make_shared<std::string>("x");
    auto np = std::make_shared<std::string>("x");
    auto nconv = std::make_shared<std::string>("paper");
    nf->add_option("--alpha", *na)->required();
    nf->add_option("--b", *nb)->required();
    nf->add_option("--bp", *np)->required();
    nf->add_option("--label-convention", *nconv)->check(CLI::IsMember({"paper", "matrix"}));
    nf->callback([=]() {
      const LabelConvention c =
          *nconv == "matrix" ? LabelConvention::matrix : LabelConvention::paper;
      emit(Json{{"word", word_str(basis_to_normal_form(make_pair_arg(*na, *nb, *np)), c)}});
    });
  }

  // ---- classify ----
  {
    auto* cl = app.add_subcommand("classify", "classify a linearized comodule");
    auto in = std::make_shared<std::string>("-");
    cl->add_option("--in", *in);
    cl->callback([=]() {
      LinComodule m = lin_comodule_from_json(read_json(*in));
      auto issues = check_comodule(m);
      if (!issues.empty()) {
        Json out = Json::array();
        for (const auto& s : issues) out.push_back(s);
        emit(out);
        exit_code = 1;
        return;
      }
      Classification cls = classify(m);
      Json mult = Json::array();
      for (const auto& [alpha, r] : cls.multiplicity)
        mult.push_back({{"alpha", alpha}, {"multiplicity", r}});
      emit(Json{{"rank", m.rank}, {"blocks", mult}});
    });
  }

  // ---- dual algebra ----
  {
    auto* du = app.add_subcommand("dual", "the dual algebra");
    du->require_subcommand(1);

    auto* dm = du->add_subcommand("mul", "product of two matrix units");
    auto a1 = std::make_shared<std::int64_t>(1);
    auto b1 = std::make_shared<std::string>("y");
    auto p1 = std::make_shared<std::string>("y");
    auto a2 = std::make_shared<std::int64_t>(1);
    auto b2 = std::make_shared<std::string>("y");
    auto p2 = std::make_shared<std::string>("y");
    dm->add_option("--alpha", *a1)->required();
    dm->add_option("--b", *b1)->required();
    dm->add_option("--bp", *p1)->required();
    dm->add_option("--beta", *a2)->required();
    dm->add_option("--d", *b2)->required();
    dm->add_option("--dp", *p2)->required();
    dm->callback([=]() {
      DualElem prod = dual_mul(hat_elem(make_pair_arg(*a1, *b1, *p1)),
                               hat_elem(make_pair_arg(*a2, *b2, *p2)));
      emit(blocks_json(prod, std::max(*a1, *a2)));
    });

    auto* dr = du->add_subcommand("relations", "Kashiwara element relations");
    auto cutoff = std::make_shared<std::int64_t>(default_cutoff());
    dr->add_option("--cutoff", *cutoff);
    dr->callback([=]() {
      auto issues = relation_check(*cutoff);
      Json out = Json::array();
      for (const auto& s : issues) out.push_back(s);
      emit(out);
      if (!issues.empty()) exit_code = 1;
    });

    auto* dp = du->add_subcommand("projector", "highest-weight projector");
    auto alpha = std::make_shared<std::int64_t>(2);
    dp->add_option("--alpha", *alpha)->required();
    dp->callback([=]() { emit(blocks_json(hw_projector(*alpha), *alpha)); });

    auto* dpair = du->add_subcommand("pairing", "dual pairing of basis elements");
    auto pa = std::make_shared<std::int64_t>(1);
    auto pb = std::make_shared<std::string>("y");
    auto pp = std::make_shared<std::string>("y");
    auto qa = std::make_shared<std::int64_t>(1);
    auto qb = std::make_shared<std::string>("y");
    auto qp = std::make_shared<std::string>("y");
    dpair->add_option("--alpha", *pa)->required();
    dpair->add_option("--b", *pb)->required();
    dpair->add_option("--bp", *pp)->required();
    dpair->add_option("--beta", *qa)->required();
    dpair->add_option("--d", *qb)->required();
    dpair->add_option("--dp", *qp)->required();
    dpair->callback([=]() {
      const std::int64_t value = pairing(BComb::basis(make_pair_arg(*pa, *pb, *pp)),
                                         hat_elem(make_pair_arg(*qa, *qb, *qp)));
      emit(Json{{"value", value}});
    });
  }

  // ---- comonad ----
  {
    auto* co = app.add_subcommand("comonad", "the crystal comonad at a cutoff");
    co->require_subcommand(1);
    auto size = std::make_shared<std::int64_t>(1);
    auto size2 = std::make_shared<std::int64_t>(1);
    auto cutoff = std::make_shared<std::int64_t>(1);
    auto guard = std::make_shared<std::int64_t>(1000000);

    auto* laws = co->add_subcommand("laws", "counit and coassociativity laws");
    laws->add_option("--size", *size);
    laws->add_option("--cutoff", *cutoff);
    laws->add_option("--guard", *guard);
    laws->callback([=]() {
      auto issues = comonad_laws(*size, *cutoff, *guard);
      Json out = Json::array();
      for (const auto& s : issues) out.push_back(s);
      emit(out);
      if (!issues.empty()) exit_code = 1;
    });

    auto* rec = co->add_subcommand("recover", "round trip B(n) through its coalgebra");
    auto rn = std::make_shared<std::int64_t>(2);
    rec->add_option("--n", *rn);
    rec->add_option("--cutoff", *cutoff);
    rec->callback([=]() {
      const Crystal bn = build_Bn(*rn);
      Crystal back = recover_structure(bn.ids, zeta_coalgebra(bn, std::max(*cutoff, *rn)),
                                       std::max(*cutoff, *rn));
      const bool ok = isomorphic(back, bn);
      emit(Json{{"recovered", crystal_to_json(back)}, {"isomorphic", ok}});
      if (!ok) exit_code = 1;
    });

    auto* th = co->add_subcommand("theta", "theta pushforward against the coaction");
    th->add_option("--cutoff", *cutoff);
    th->callback([=]() {
      bool ok = true;
      for (std::int64_t alpha = 0; alpha <= *cutoff && ok; ++alpha) {
        const Crystal ba = build_Bn(alpha);
        const SetComodule expect = coaction_B(alpha);
        const auto zeta = zeta_coalgebra(ba, *cutoff);
        for (std::size_t v = 0; v < ba.size(); ++v) {
          ThetaImage img = theta(zeta[v]);
          ok = ok && !img.zero && img.elem == expect.coaction[v]->first &&
               img.tail.base == expect.coaction[v]->second;
        }
      }
      emit(Json{{"pushforward_matches_coaction", ok}});
      if (!ok) exit_code = 1;
    });

    auto* ch = co->add_subcommand("chi", "monoidal structure diagrams");
    ch->add_option("--size", *size);
    ch->add_option("--size2", *size2);
    ch->add_option("--cutoff", *cutoff);
    ch->add_option("--guard", *guard);
    ch->callback([=]() {
      auto issues = chi_diagrams(*size, *size2, *cutoff, *guard);
      Json out = Json::array();
      for (const auto& s : issues) out.push_back(s);
      emit(out);
      if (!issues.empty()) exit_code = 1;
    });
  }

  // ---- selftest ----
  {
    auto* st = app.add_subcommand("selftest", "run the full acceptance suite");
    auto seed = std::make_shared<std::uint64_t>(20250810);
    st->add_option("--seed", *seed);
    st->callback([=]() {
      bool all = true;
      for (const auto& r : run_selftest(*seed)) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name;
        if (!r.pass) std::cout << " [" << r.detail << "]";
        std::cout << "\n";
        all = all && r.pass;
      }
      if (!all) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ConversionError&) {
    std::cerr << "malformed input\n";
    return 65;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 64;
  } catch (const GuardExceeded& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 65;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
