// glat: command-line front end. Reads JSON, writes JSON reports and DOT.
// Exit status: 0 success, 1 verification failure, 2 malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "glat/extension.hpp"
#include "glat/io.hpp"
#include "glat/lattice.hpp"
#include "glat/linalg.hpp"
#include "glat/rep.hpp"
#include "glat/subgroups.hpp"
#include "glat/tgring.hpp"

namespace {

using glat::io::json;

struct InputFailure {
  std::string message;
  std::vector<std::size_t> witness;
};

struct Options {
  std::string group, ring, fs, rep, out, dot, input;
  std::size_t dim = 0;
  std::uint64_t seed = 0;
};

// Runs f, reclassifying any failure as malformed input.
template <class F>
auto load(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const glat::error& e) {
    throw InputFailure{e.what(), e.witness()};
  } catch (const json::exception& e) {
    throw InputFailure{std::string("ParseError: ") + e.what(), {}};
  }
}

void emit(const Options& o, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputFailure{"cannot write " + o.out, {}};
  f << text;
}

void emit_dot(const Options& o, const std::string& dot) {
  if (o.dot.empty() || o.dot == "-") {
    std::cout << dot;
    return;
  }
  std::ofstream f(o.dot);
  if (!f) throw InputFailure{"cannot write " + o.dot, {}};
  f << dot;
}

json document(const std::string& path) {
  return load([&] { return glat::io::read_file(path); });
}

bool looks_inline(const std::string& s) { return !s.empty() && (s.front() == '{' || s.find(':') != std::string::npos || s == "q" || s == "quat"); }

glat::FiniteGroup group_of(const Options& o, const json* doc) {
  return load([&] {
    if (!o.group.empty()) {
      if (looks_inline(o.group)) return glat::io::parse_group_shorthand(o.group);
      return glat::io::parse_group(glat::io::read_file(o.group));
    }
    if (doc && doc->contains("group")) return glat::io::parse_group(doc->at("group"));
    glat::io::schema_error("group", "missing (use --group or a \"group\" field)");
  });
}

glat::RingPtr ring_of(const Options& o, const json* doc) {
  return load([&] {
    if (!o.ring.empty()) {
      if (looks_inline(o.ring)) return glat::io::parse_ring_shorthand(o.ring);
      return glat::io::parse_ring(glat::io::read_file(o.ring));
    }
    if (doc && doc->contains("ring")) return glat::io::parse_ring(doc->at("ring"));
    glat::io::schema_error("ring", "missing (use --ring or a \"ring\" field)");
  });
}

json violation_json(const glat::AxiomViolation& v) {
  return json{{"axiom", v.axiom}, {"witness", v.witness}, {"description", v.description}};
}

// The lattice named by a document's "lattice" field, plus the subspace or
// subgroup data needed to interpret it.
struct LoadedLattice {
  glat::FiniteLattice lattice;
  std::optional<glat::SubspaceLattice> subspaces;
  std::optional<glat::SubgroupLattice> subgroups;
};

LoadedLattice lattice_of(const json& desc, const glat::FiniteGroup& G) {
  return load([&] {
    LoadedLattice out;
    if (desc.contains("leq")) {
      std::vector<std::vector<bool>> leq;
      for (const auto& row : desc.at("leq")) {
        std::vector<bool> r;
        for (const auto& e : row) r.push_back(e.is_boolean() ? e.get<bool>() : e.get<int>() != 0);
        leq.push_back(std::move(r));
      }
      std::vector<std::string> labels;
      if (desc.contains("labels"))
        for (const auto& l : desc.at("labels")) labels.push_back(l.get<std::string>());
      out.lattice = glat::lattice_from_order(std::move(leq), std::move(labels));
    } else if (desc.contains("chain")) {
      out.lattice = glat::chain_lattice(desc.at("chain").get<std::size_t>());
    } else if (desc.contains("boolean")) {
      out.lattice = glat::boolean_lattice(desc.at("boolean").get<std::size_t>());
    } else if (desc.contains("subspaces")) {
      const auto& s = desc.at("subspaces");
      glat::VectorSpace V(glat::io::parse_ring(s.at("ring"), "lattice.subspaces.ring"), s.at("dim").get<std::size_t>());
      out.subspaces = glat::enumerate_subspaces(V);
      out.lattice = out.subspaces->lattice;
    } else if (desc.contains("subgroups")) {
      out.subgroups = glat::subgroup_lattice(G);
      out.lattice = out.subgroups->lattice;
    } else {
      glat::io::schema_error("lattice", "expected one of leq, chain, boolean, subspaces, subgroups");
    }
    return out;
  });
}

// An action document: {"group", "lattice", "action"} where action is a
// table, "conjugation", or {"gset": table} (lattice then omitted), or
// {"group", "ring", "rep"} for the induced action on L(V).
glat::GLatticeAction action_of(const json& doc, const Options& o) {
  const auto G = group_of(o, &doc);
  if (doc.contains("rep")) {
    const auto K = ring_of(o, &doc);
    auto rho = load([&] { return glat::io::parse_rep(doc, G, K); });
    return glat::induced_glattice(rho);
  }
  const json& action = load([&]() -> const json& { return glat::io::detail::field(doc, "action", "document"); });
  if (action.is_object() && action.contains("gset")) {
    return load([&] { return glat::powerset_glattice(G, action.at("gset").get<std::vector<std::vector<std::size_t>>>()); });
  }
  auto L = lattice_of(load([&]() -> const json& { return glat::io::detail::field(doc, "lattice", "document"); }), G);
  if (action.is_string() && action.get<std::string>() == "conjugation") {
    if (!L.subgroups) throw InputFailure{"ParseError: conjugation needs the subgroups lattice", {}};
    return glat::conjugation_glattice(*L.subgroups);
  }
  return load([&] { return glat::GLatticeAction(G, L.lattice, action.get<std::vector<std::vector<std::size_t>>>()); });
}

int verify_action(const Options& o) {
  const json doc = document(o.input);
  const auto A = action_of(doc, o);
  const auto report = glat::validate_glattice(A);
  json out{{"ok", report.ok()}, {"group_order", A.group().order()}, {"lattice_size", A.lattice().size()}};
  json violations = json::array();
  for (const auto& v : report.violations) violations.push_back(violation_json(v));
  out["violations"] = violations;
  if (report.ok()) {
    out["orbits"] = glat::orbits(A);
    out["fixed"] = glat::fixed_points(A);
  }
  emit(o, out);
  if (!o.dot.empty()) {
    auto orb = glat::orbits(A);
    emit_dot(o, glat::hasse_dot(A.lattice(), report.ok() ? &orb : nullptr));
  }
  return report.ok() ? 0 : 1;
}

int subspace_lattice(const Options& o) {
  const auto K = ring_of(o, nullptr);
  if (o.dim == 0) throw InputFailure{"ParseError: field 'dim': missing (use --dim)", {}};
  const glat::VectorSpace V = load([&] { return glat::VectorSpace(K, o.dim); });
  const auto S = load([&] { return glat::enumerate_subspaces(V); });
  std::vector<std::size_t> by_rank(o.dim + 1, 0);
  json subspaces = json::array();
  for (std::size_t i = 0; i < S.subspaces.size(); ++i) {
    const auto& W = S.subspaces[i];
    ++by_rank[W.rank()];
    json basis = json::array();
    for (const auto& v : W.basis()) {
      json row = json::array();
      for (const auto& s : v) row.push_back(glat::io::scalar_to_json(s));
      basis.push_back(row);
    }
    subspaces.push_back(json{{"index", i}, {"rank", W.rank()}, {"basis", basis}});
  }
  emit(o, json{{"ring", K->name()}, {"dim", o.dim}, {"count", S.subspaces.size()}, {"by_rank", by_rank}, {"subspaces", subspaces}});
  if (!o.dot.empty()) emit_dot(o, glat::hasse_dot(S.lattice));
  return 0;
}

glat::GLatticeAction action_from_inputs(const Options& o) {
  if (!o.rep.empty()) {
    const json doc = document(o.rep);
    const auto G = group_of(o, &doc);
    const auto K = ring_of(o, &doc);
    auto rho = load([&] { return glat::io::parse_rep(doc, G, K); });
    return load([&] { return glat::induced_glattice(rho); });
  }
  if (o.input.empty()) throw InputFailure{"ParseError: expected an action file or --rep", {}};
  return action_of(document(o.input), o);
}

int orbit_report(const Options& o) {
  const auto A = action_from_inputs(o);
  const auto report = glat::validate_glattice(A);
  if (!report.ok()) {
    emit(o, json{{"ok", false}, {"violations", json::array({violation_json(*report.first())})}});
    return 1;
  }
  emit(o, glat::io::orbit_report(A));
  return 0;
}

glat::FactorSystem factor_system_of(const Options& o) {
  if (o.fs.empty()) throw InputFailure{"ParseError: field 'fs': missing (use --fs)", {}};
  const json doc = looks_inline(o.fs) && o.fs.front() == '{' ? load([&] { return glat::io::parse_text(o.fs); }) : document(o.fs);
  const auto G = group_of(o, &doc);
  const auto K = ring_of(o, &doc);
  return load([&] { return glat::io::parse_factor_system(doc, G, K); });
}

json flags_json(const glat::ExtensionFlags& f) {
  return json{{"central", f.central}, {"projective", f.projective}, {"split", f.split}, {"direct", f.direct}};
}

json law_report(const glat::FactorSystemReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back(json{{"law", x.law}, {"witness", x.witness}, {"description", x.description}});
  return json{{"ok", r.ok()}, {"violations", v}};
}

json extension_json(const glat::SchreierExtension& H, std::uint64_t seed) {
  if (H.group()) {
    const auto& grp = *H.group();
    return json{{"order", grp.order()}, {"structure", glat::group_name(grp)}, {"normal_subgroup", true}, {"quotient", true}};
  }
  return json{{"order", "infinite"}, {"lazy", true}, {"samples_verified", glat::verify_extension_samples(H, seed)}, {"seed", seed}};
}

int build_extension(const Options& o) {
  const auto fs = factor_system_of(o);
  const auto laws = glat::validate_factor_system(fs);
  if (!laws.ok()) {
    emit(o, json{{"factor_system", law_report(laws)}});
    return 1;
  }
  const auto H = glat::build_extension(fs);
  json out{{"ring", fs.ring->name()}, {"group", glat::group_name(fs.group)}, {"factor_system", law_report(laws)}};
  out["extension"] = extension_json(H, o.seed);
  out["flags"] = flags_json(glat::classify_extension(fs));
  emit(o, out);
  return out["extension"].value("samples_verified", true) ? 0 : 1;
}

int classify_extensions(const Options& o) {
  const auto G = group_of(o, nullptr);
  const auto K = ring_of(o, nullptr);
  const auto chis = load([&] { return glat::chi_homomorphisms(G, K); });
  std::size_t systems = 0, classes = 0;
  json groups = json::array(), by_chi = json::array();
  for (const auto& chi : chis) {
    const auto all = load([&] { return glat::enumerate_factor_systems(G, K, chi); });
    const auto cls = glat::classify_up_to_equivalence(all);
    json names = json::array();
    for (const auto& c : cls) names.push_back(glat::group_name(*glat::build_extension(all[c.front()]).group()));
    systems += all.size();
    classes += cls.size();
    for (const auto& n : names) groups.push_back(n);
    json chi_json = json::object();
    for (std::size_t g = 0; g < G.order(); ++g) chi_json[G.label(g)] = glat::io::automorphism_to_json(chi[g]);
    by_chi.push_back(json{{"chi", chi_json}, {"systems", all.size()}, {"classes", cls.size()}, {"groups", names}});
  }
  json out{{"systems", systems}, {"classes", classes}, {"groups", groups}};
  if (chis.size() > 1) out["by_chi"] = by_chi;
  emit(o, out);
  return 0;
}

int roundtrip(const Options& o) {
  const auto fs = factor_system_of(o);
  const auto laws = glat::validate_factor_system(fs);
  json out{{"ring", fs.ring->name()}, {"group", glat::group_name(fs.group)}, {"factor_system", law_report(laws)}};
  if (!laws.ok()) {
    emit(o, out);
    return 1;
  }
  const auto H = glat::build_extension(fs);
  out["extension"] = extension_json(H, o.seed);
  out["flags"] = flags_json(glat::classify_extension(fs));
  const auto T = glat::TwistedGroupRing::make(fs);
  const auto alg = glat::is_algebra(T, o.seed);
  out["algebra"] = alg.algebra;
  if (alg.witness) out["algebra_witness"] = json{{"law", alg.witness->law}, {"a", alg.witness->a.to_string()}, {"u", alg.witness->u.to_string()},
                                                 {"v", alg.witness->v.to_string()}, {"lhs", alg.witness->lhs.to_string()}, {"rhs", alg.witness->rhs.to_string()}};
  if (!fs.ring->is_commutative()) {
    out["representation"] = json{{"error", "NonCommutativeCarrier"}, {"message", "the regular representation needs a commutative carrier"}};
    out["verdict"] = "fail";
    emit(o, out);
    return 1;
  }
  const auto rho = glat::regular_representation(*T);
  const auto cls = glat::validate_rep(rho);
  const auto recovered = glat::factor_system_from_rep(rho);
  const bool equal = recovered == fs;
  out["representation"] = json{{"dim", rho.space().dim}, {"classification", cls.name()}};
  out["recovered_factor_system"] = glat::io::factor_system_to_json(recovered);
  out["recovered_equal"] = equal;
  const auto module = glat::validate_module_axioms(T, rho, o.seed);
  out["module_laws"] = module.ok();
  const bool pass = equal && module.ok() && out["extension"].value("samples_verified", true);
  out["verdict"] = pass ? "pass" : "fail";
  emit(o, out);
  return pass ? 0 : 1;
}

int example_c3(const Options& o) {
  using namespace glat;
  const auto Q = DivisionRing::rationals();
  const auto C3 = FiniteGroup::cyclic(3);
  const VectorSpace V(Q, 3);
  const Matrix shift = Matrix::from_ints(Q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const SemilinearProjectiveRep rho(C3, V, {SemilinearMap::identity(V), SemilinearMap(V, shift), SemilinearMap(V, shift * shift)});
  json out;
  bool pass = true;

  const auto cls = validate_rep(rho);
  const Vector v{Scalar::from_int(Q, 1), Scalar::from_rational(Q, Rational(2, 3)), Scalar::from_int(Q, -5)};
  const bool shift_ok = rho(1).apply(v) == Vector{v[2], v[0], v[1]} && rho(2).apply(v) == Vector{v[1], v[2], v[0]};
  out["representation"] = json{{"classification", cls.name()}, {"shift_matches", shift_ok}};
  pass = pass && cls.linear && shift_ok;

  const auto fs = factor_system_from_rep(rho);
  const bool trivial = fs == FactorSystem::trivial(C3, Q);
  out["factor_system"] = json{{"trivial", trivial}, {"literal", io::factor_system_to_json(fs)}};
  pass = pass && trivial;

  // H(fs) -> Q* x C3 is (a, g) -> (a, g); checked on seeded samples.
  const auto H = build_extension(fs);
  const auto iso = extension_iso_from_equivalence(fs, FactorSystem::trivial(C3, Q), {std::vector<Scalar>(3, Scalar::one(Q))});
  std::mt19937_64 rng(o.seed);
  bool product = true;
  for (int s = 0; s < 100; ++s) {
    ExtensionElement x{random_unit(Q, rng), static_cast<std::size_t>(s % 3)}, y{random_unit(Q, rng), static_cast<std::size_t>((s / 3) % 3)};
    product = product && H.mul(x, y) == ExtensionElement{x.a * y.a, C3.mul(x.g, y.g)};
  }
  const auto flags = classify_extension(fs);
  const bool iso_ok = iso.verify(o.seed) && product && flags.direct;
  out["extension"] = json{{"isomorphic_to", "Q* x C3"}, {"direct", flags.direct}, {"iso_verified", iso_ok}, {"seed", o.seed}};
  pass = pass && iso_ok;

  // Coordinates (x, y, z) <-> x 1 + y a + z a^2 make the regular
  // representation equal to rho.
  const auto T = TwistedGroupRing::make(fs);
  const auto reg = regular_representation(*T);
  const bool intertwined = reg == rho;
  const auto abar = TwistedRingElement::basis(T, 1);
  const bool module_ok = module_action(*T, rho, abar, v) == Vector{v[2], v[0], v[1]};
  out["regular_representation"] = json{{"intertwined", intertwined}, {"module_shift", module_ok}};
  pass = pass && intertwined && module_ok;

  // Orbit of the plane x + y = z, recorded by normal vectors n with
  // W = {v : n.v = 0}; the image of W under f has normal n M^{-1}.
  auto normal_image = [&](const SemilinearMap& f, const Vector& n) {
    const Matrix inv = inverse(f.matrix());
    Vector out_n = zero_vector(Q, 3);
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t i = 0; i < 3; ++i) out_n[j] += n[i] * inv.at(i, j);
    return out_n;
  };
  const Vector normal = make_vector(Q, {1, 1, -1});
  json planes = json::array();
  for (std::size_t g = 0; g < 3; ++g) {
    json n = json::array();
    for (const auto& s : normal_image(rho(g), normal)) n.push_back(io::scalar_to_json(s));
    planes.push_back(json{{"g", C3.label(g)}, {"normal", n}});
  }
  out["plane_orbit"] = planes;

  const auto F2 = DivisionRing::gf(2);
  const VectorSpace V2(F2, 3);
  const Matrix shift2 = Matrix::from_ints(F2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  const SemilinearProjectiveRep rho2(C3, V2, {SemilinearMap::identity(V2), SemilinearMap(V2, shift2), SemilinearMap(V2, shift2 * shift2)});
  const auto A = induced_glattice(rho2);
  const auto orb = orbits(A);
  const auto fixed = fixed_points(A);
  const bool valid = validate_glattice(A).ok();
  out["gf2"] = json{{"subspaces", A.lattice().size()}, {"valid", valid}, {"orbits", orb.size()}, {"fixed", fixed.size()}};
  pass = pass && valid && orb.size() == 8;

  out["verdict"] = pass ? "pass" : "fail";
  emit(o, out);
  if (!o.dot.empty()) emit_dot(o, hasse_dot(A.lattice(), &orb, "c3_shift"));
  return pass ? 0 : 1;
}

int hasse(const Options& o) {
  if (!o.input.empty() || !o.rep.empty()) {
    const auto A = action_from_inputs(o);
    auto orb = glat::orbits(A);
    emit_dot(o, glat::hasse_dot(A.lattice(), &orb));
    return 0;
  }
  if (!o.ring.empty()) {
    const auto K = ring_of(o, nullptr);
    if (o.dim == 0) throw InputFailure{"ParseError: field 'dim': missing (use --dim)", {}};
    const auto S = load([&] { return glat::enumerate_subspaces(glat::VectorSpace(K, o.dim)); });
    emit_dot(o, glat::hasse_dot(S.lattice));
    return 0;
  }
  if (!o.group.empty()) {
    const auto G = group_of(o, nullptr);
    const auto A = load([&] { return glat::conjugation_glattice(G); });
    auto orb = glat::orbits(A);
    emit_dot(o, glat::hasse_dot(A.lattice(), &orb, "subgroups"));
    return 0;
  }
  throw InputFailure{"ParseError: hasse-dot needs an action file, --rep, --ring with --dim, or --group", {}};
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("GLAT_THREADS")) {
    std::string s(t);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || std::stoul(s) == 0) {
      std::cerr << "GLAT_THREADS must be a positive integer\n";
      return 2;
    }
  }

  CLI::App app{"Group lattices, factor systems and twisted group rings"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write the JSON report here instead of stdout");
    sub->add_option("--seed", o.seed, "seed for sampled checks over infinite rings");
  };
  int (*handler)(const Options&) = nullptr;

  auto* va = app.add_subcommand("verify-action", "check the G-lattice axioms of an action");
  va->add_option("input", o.input, "action document")->required();
  va->add_option("--group", o.group, "cyclic:n, sym:n, dihedral:n or JSON; overrides the document");
  va->add_option("--dot", o.dot, "also write the Hasse diagram");
  common(va);
  va->callback([&] { handler = verify_action; });

  auto* sl = app.add_subcommand("subspace-lattice", "enumerate L(V) for V = K^n");
  sl->add_option("--ring", o.ring, "gf:p, gf:p^k, q, quat or JSON")->required();
  sl->add_option("--dim", o.dim, "dimension n of K^n")->required();
  sl->add_option("--dot", o.dot, "also write the Hasse diagram");
  common(sl);
  sl->callback([&] { handler = subspace_lattice; });

  auto* orr = app.add_subcommand("orbit-report", "orbits and fixed points of an action");
  orr->add_option("input", o.input, "action document");
  orr->add_option("--rep", o.rep, "representation document; reports its induced action");
  orr->add_option("--group", o.group, "cyclic:n, sym:n, dihedral:n or JSON; overrides the document");
  orr->add_option("--ring", o.ring, "gf:p, gf:p^k, q, quat or JSON");
  common(orr);
  orr->callback([&] { handler = orbit_report; });

  auto* be = app.add_subcommand("build-extension", "build the extension of a factor system");
  be->add_option("--fs", o.fs, "factor system document or inline JSON")->required();
  be->add_option("--group", o.group, "cyclic:n, sym:n, dihedral:n or JSON; overrides the document");
  be->add_option("--ring", o.ring, "gf:p, gf:p^k, q, quat or JSON");
  common(be);
  be->callback([&] { handler = build_extension; });

  auto* ce = app.add_subcommand("classify-extensions", "factor systems up to equivalence");
  ce->add_option("--group", o.group, "cyclic:n, sym:n, dihedral:n or JSON")->required();
  ce->add_option("--ring", o.ring, "gf:p, gf:p^k, q, quat or JSON")->required();
  common(ce);
  ce->callback([&] { handler = classify_extensions; });

  auto* rt = app.add_subcommand("roundtrip", "factor system -> extension -> regular representation -> factor system");
  rt->add_option("--fs", o.fs, "factor system document or inline JSON")->required();
  rt->add_option("--group", o.group, "cyclic:n, sym:n, dihedral:n or JSON; overrides the document");
  rt->add_option("--ring", o.ring, "gf:p, gf:p^k, q, quat or JSON");
  common(rt);
  rt->callback([&] { handler = roundtrip; });

  auto* ex = app.add_subcommand("example-c3", "the cyclic shift of Q^3 and GF(2)^3");
  ex->add_option("--dot", o.dot, "also write the Hasse diagram");
  common(ex);
  ex->callback([&] { handler = example_c3; });

  auto* hd = app.add_subcommand("hasse-dot", "Hasse diagram in DOT, coloured by orbit");
  hd->add_option("input", o.input, "action document");
  hd->add_option("--rep", o.rep, "representation document; draws its induced action");
  hd->add_option("--group", o.group, "cyclic:n, sym:n, dihedral:n or JSON; overrides the document");
  hd->add_option("--ring", o.ring, "gf:p, gf:p^k, q, quat or JSON");
  hd->add_option("--dim", o.dim, "with --ring, draw L(K^n)");
  hd->add_option("--dot", o.dot, "output path (default stdout)");
  hd->callback([&] { handler = hasse; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return handler(o);
  } catch (const InputFailure& e) {
    std::cerr << json{{"error", e.message}, {"witness", e.witness}}.dump() << "\n";
    return 2;
  } catch (const glat::error& e) {
    json report{{"error", glat::errc_name(e.code())}, {"message", e.what()}, {"witness", e.witness()}};
    std::cout << report.dump(2) << "\n";
    return 1;
  }
}
