#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "algebra_io.hpp"
#include "diagram_io.hpp"
#include "domains.hpp"
#include "fixtures.hpp"
#include "homology.hpp"
#include "moves.hpp"

namespace sd {

namespace {

std::string vertex_name(const MultiDiagram& d, VertexId v) {
  const MdVertexInfo& info = d.vertex_info[v];
  std::ostringstream os;
  if (info.kind == MdVertexInfo::Kind::Grid)
    os << "grid(v" << info.base_vertex << ",c" << info.base_i << "@" << info.level_i << ",c"
       << info.base_j << "@" << info.level_j << ")";
  else
    os << "zone(c" << info.base_circle << "," << (info.zone == 0 ? "A" : "B") << ","
       << info.level_u << "x" << info.level_w << ")";
  return os.str();
}

void print_generator(std::ostream& out, const MultiDiagram& d, const Generator& g, size_t idx) {
  out << "generator " << idx << " perm (";
  for (size_t i = 0; i < g.perm.size(); ++i) out << (i ? " " : "") << g.perm[i];
  out << ") entries";
  for (VertexId v : g.entries) out << " " << vertex_name(d, v);
  out << "\n";
}

void print_vec(std::ostream& out, const ZVec& v) {
  out << "(";
  for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << ")";
}

std::string quarters(const Int& e4) {
  Int whole = e4 / 4, rem = e4 % 4;
  std::ostringstream os;
  if (rem == 0) os << whole;
  else {
    Int num = e4, den = 4;
    if (num % 2 == 0) { num /= 2; den /= 2; }
    os << num << "/" << den;
  }
  return os.str();
}

ZVec parse_domain_arg(const std::string& s, int nregions) {
  ZVec d(nregions, Int(0));
  std::istringstream ss(s);
  std::string item;
  int at = 0;
  while (std::getline(ss, item, ',')) {
    if (at >= nregions) throw std::runtime_error("domain vector longer than the region count");
    d[at++] = Int(item);
  }
  if (at != nregions) {
    std::ostringstream os;
    os << "domain vector has " << at << " entries, expected " << nregions;
    throw std::runtime_error(os.str());
  }
  return d;
}

void write_or_print(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
  }
}

SlidePath parse_path_arg(const std::string& s) {
  // "region:entry:exit,region:entry:exit,..."
  SlidePath p;
  std::istringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    SlideStep st;
    if (sscanf(item.c_str(), "%d:%d:%d", &st.region, &st.entry, &st.exit) != 3)
      throw std::runtime_error("bad path step '" + item + "', expected region:entry:exit");
    p.steps.push_back(st);
  }
  if (p.steps.empty()) throw std::runtime_error("empty slide path");
  return p;
}

RelationReport run_relation_printer(std::ostream& out, const std::string& what,
                                    const RelationReport& rep) {
  for (size_t n = 0; n < rep.by_arity.size(); ++n) {
    out << what << " level " << n << ": ";
    switch (rep.by_arity[n]) {
      case RelationReport::Status::Pass: out << "PASS"; break;
      case RelationReport::Status::Fail: out << "FAIL"; break;
      case RelationReport::Status::NotCheckable: out << "NOT-CHECKABLE"; break;
    }
    out << "\n";
  }
  for (const auto& d : rep.defects) {
    out << "defect at level " << d.n << " args (";
    for (size_t i = 0; i < d.args.size(); ++i) out << (i ? " " : "") << d.args[i];
    out << ")\n";
  }
  if (!rep.missing.empty()) out << "missing: " << rep.missing << "\n";
  return rep;
}

int relation_exit(const RelationReport& rep) {
  bool nc = false, fail = false;
  for (auto s : rep.by_arity) {
    if (s == RelationReport::Status::NotCheckable) nc = true;
    if (s == RelationReport::Status::Fail) fail = true;
  }
  if (fail) return 1;
  if (nc) return 2;
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"surface diagram and weak A-infinity calculator"};
  app.require_subcommand(1);

  // shared options
  std::string file, out_path, domain_arg, path_arg;
  int n = 1, fam_a = 1, fam_b = 2;
  int from = -1, to = -1;
  int opt_n = 1, opt_k = 1, opt_g = 0;
  std::string chi_s = "0", e4_s = "0", bound_s = "0";
  int ci = 0, cj = 0, kidx = 0, lidx = 0;
  std::string alg_name, mor_name, from_name, to_name, via_name, outer_name, inner_name;
  int up_to = 3;

  auto add_diagram_arg = [&](CLI::App* c) { c->add_option("file", file, "diagram file")->required(); };
  auto add_double_opts = [&](CLI::App* c) {
    c->add_option("-n,--copies", n, "perturbation inputs (n+1 copies)");
    c->add_option("--family-a", fam_a, "first family");
    c->add_option("--family-b", fam_b, "second family");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "check the complex invariants");
  add_diagram_arg(c_validate);

  CLI::App* c_gens = app.add_subcommand("generators", "enumerate generators of the perturbed diagram");
  add_diagram_arg(c_gens);
  add_double_opts(c_gens);

  CLI::App* c_refs = app.add_subcommand("reference-generators", "generators from consecutive intersections");
  add_diagram_arg(c_refs);
  add_double_opts(c_refs);

  CLI::App* c_sectors = app.add_subcommand("sectors", "sector labels against the first reference generator");
  add_diagram_arg(c_sectors);
  add_double_opts(c_sectors);

  CLI::App* c_domains = app.add_subcommand("domains", "solve the domain equations for a generator pair");
  add_diagram_arg(c_domains);
  add_double_opts(c_domains);
  c_domains->add_option("--from", from, "source generator index")->required();
  c_domains->add_option("--to", to, "target generator index")->required();

  CLI::App* c_periodic = app.add_subcommand("periodic", "periodic domain lattice of the complex");
  add_diagram_arg(c_periodic);

  CLI::App* c_adm = app.add_subcommand("admissible", "mixed-sign test for the periodic lattice");
  add_diagram_arg(c_adm);

  CLI::App* c_euler = app.add_subcommand("euler-measure", "Euler measure of a domain");
  add_diagram_arg(c_euler);
  c_euler->add_option("--domain", domain_arg, "comma-separated region coefficients")->required();

  CLI::App* c_index = app.add_subcommand("index", "polygon index from the formula");
  c_index->add_option("-n", opt_n, "inputs")->required();
  c_index->add_option("-k", opt_k, "circles")->required();
  c_index->add_option("--chi", chi_s, "source Euler characteristic")->required();
  c_index->add_option("--e4", e4_s, "Euler measure in quarter units")->required();

  CLI::App* c_iext = app.add_subcommand("index-extended", "index extended to non-positive domains");
  add_diagram_arg(c_iext);
  c_iext->add_option("--domain", domain_arg)->required();
  c_iext->add_option("--chi", chi_s)->required();
  c_iext->add_option("-n", opt_n)->required();
  c_iext->add_option("-k", opt_k)->required();
  c_iext->add_option("-g", opt_g)->required();

  CLI::App* c_pos = app.add_subcommand("enumerate-positive", "positive domains in a coset");
  add_diagram_arg(c_pos);
  add_double_opts(c_pos);
  c_pos->add_option("--from", from)->required();
  c_pos->add_option("--to", to)->required();
  c_pos->add_option("--bound", bound_s, "coefficient-sum bound")->required();

  CLI::App* c_thin = app.add_subcommand("thin", "thin subgroup of the doubled diagram");
  add_diagram_arg(c_thin);

  CLI::App* c_pmap = app.add_subcommand("pmap", "project a periodic domain of the doubled diagram");
  add_diagram_arg(c_pmap);
  c_pmap->add_option("--domain", domain_arg, "coefficients over doubled regions")->required();

  CLI::App* c_double = app.add_subcommand("double", "emit the perturbed diagram");
  add_diagram_arg(c_double);
  add_double_opts(c_double);
  c_double->add_option("-o,--output", out_path, "output file");

  CLI::App* c_slide = app.add_subcommand("slide", "band sum one circle over another");
  add_diagram_arg(c_slide);
  c_slide->add_option("-i", ci, "sliding circle")->required();
  c_slide->add_option("-j", cj, "circle slid over")->required();
  c_slide->add_option("--path", path_arg, "steps region:entry:exit,...")->required();
  c_slide->add_option("-o,--output", out_path);

  CLI::App* c_reorder = app.add_subcommand("reorder", "shift reindexing of the circle order");
  add_diagram_arg(c_reorder);
  c_reorder->add_option("--k-idx", kidx, "circle position to move")->required();
  c_reorder->add_option("--l-idx", lidx, "position to insert after")->required();
  c_reorder->add_option("-o,--output", out_path);

  CLI::App* c_vs = app.add_subcommand("verify-sectors", "sector preservation across a move");
  add_diagram_arg(c_vs);
  c_vs->add_option("-i", ci, "sliding circle");
  c_vs->add_option("-j", cj, "circle slid over");
  c_vs->add_option("--path", path_arg, "slide path");
  c_vs->add_option("--k-idx", kidx, "reorder position");
  c_vs->add_option("--l-idx", lidx, "reorder target");
  bool use_reorder = false;
  c_vs->add_flag("--use-reorder", use_reorder, "verify a reorder instead of a slide");

  CLI::App* c_acheck = app.add_subcommand("ainf-check", "A-infinity relation check");
  c_acheck->add_option("file", file)->required();
  c_acheck->add_option("--algebra", alg_name)->required();
  c_acheck->add_option("--max-arity", up_to);

  CLI::App* c_amor = app.add_subcommand("ainf-morphism", "morphism relation check");
  c_amor->add_option("file", file)->required();
  c_amor->add_option("--morphism", mor_name)->required();
  c_amor->add_option("--up-to", up_to);

  CLI::App* c_acomp = app.add_subcommand("ainf-compose", "compose two morphisms");
  c_acomp->add_option("file", file)->required();
  c_acomp->add_option("--outer", outer_name)->required();
  c_acomp->add_option("--inner", inner_name)->required();
  c_acomp->add_option("-o,--output", out_path);

  CLI::App* c_ahom = app.add_subcommand("ainf-homotopy", "homotopy relation check");
  c_ahom->add_option("file", file)->required();
  c_ahom->add_option("--from", from_name)->required();
  c_ahom->add_option("--to", to_name)->required();
  c_ahom->add_option("--via", via_name)->required();
  c_ahom->add_option("--up-to", up_to);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_validate) {
      CurveComplex cx = load_diagram(file);
      ValidationReport rep = validate(cx);
      if (rep.ok) {
        out << "validate: PASS chi " << rep.chi << "\n";
        return 0;
      }
      out << "validate: FAIL\n";
      for (const auto& v : rep.violations) out << "violation: " << v << "\n";
      return 1;
    }
    if (*c_gens) {
      MultiDiagram d = perturb(load_diagram(file), n);
      auto gens = enumerate_generators(d, fam_a, fam_b);
      out << "generators " << gens.size() << "\n";
      for (size_t i = 0; i < gens.size(); ++i) print_generator(out, d, gens[i], i);
      return 0;
    }
    if (*c_refs) {
      MultiDiagram d = perturb(load_diagram(file), n);
      auto refs = reference_generators(d, fam_a, fam_b);
      out << "reference-generators " << refs.size() << "\n";
      for (size_t i = 0; i < refs.size(); ++i) print_generator(out, d, refs[i], i);
      return 0;
    }
    if (*c_sectors) {
      MultiDiagram d = perturb(load_diagram(file), n);
      SectorContext sc = sector_context(d.merged);
      auto refs = reference_generators(d, fam_a, fam_b);
      auto gens = enumerate_generators(d, fam_a, fam_b);
      out << "reference generator: ";
      print_generator(out, d, refs.at(0), 0);
      for (size_t i = 0; i < gens.size(); ++i) {
        SectorLabel s = sector_of(d, sc, gens[i], refs.at(0));
        out << "sector " << i << " ";
        print_vec(out, s.rep);
        out << "\n";
      }
      return 0;
    }
    if (*c_domains || *c_pos) {
      MultiDiagram d = perturb(load_diagram(file), n);
      DomainSystem sys = domain_system(d.merged);
      auto gens = enumerate_generators(d, fam_a, fam_b);
      if (from < 0 || to < 0 || from >= static_cast<int>(gens.size()) ||
          to >= static_cast<int>(gens.size()))
        throw std::runtime_error("generator index out of range");
      auto sol = solve_domains(d, sys, {gens[from], gens[to]});
      if (!sol) {
        out << "empty: the epsilon obstruction is nonzero\n";
        return 1;
      }
      if (*c_domains) {
        out << "particular ";
        print_vec(out, sol->particular);
        out << "\n";
        out << "lattice rank " << sol->lattice.size() << "\n";
        for (const auto& q : sol->lattice) {
          out << "basis ";
          print_vec(out, q);
          out << "\n";
        }
        return 0;
      }
      PositiveEnumeration pos = enumerate_positive(sol->particular, sol->lattice, Int(bound_s));
      out << "positive " << pos.domains.size() << (pos.complete ? " complete" : " bounded");
      if (pos.derived_bound >= 0) out << " derived-bound " << pos.derived_bound;
      out << "\n";
      ComplexGeometry geo = geometry(d.merged);
      for (const auto& D : pos.domains) {
        out << "domain ";
        print_vec(out, D);
        out << " e " << quarters(euler_measure4(d.merged, geo, D)) << "\n";
      }
      return 0;
    }
    if (*c_periodic) {
      CurveComplex cx = load_diagram(file);
      auto lat = periodic_lattice(cx);
      out << "periodic rank " << lat.size() << "\n";
      for (const auto& q : lat) {
        out << "basis ";
        print_vec(out, q);
        out << "\n";
      }
      return 0;
    }
    if (*c_adm) {
      CurveComplex cx = load_diagram(file);
      AdmissibilityReport rep = is_admissible(cx);
      if (rep.admissible) {
        out << "admissible\n";
        return 0;
      }
      out << "inadmissible witness ";
      print_vec(out, rep.witness);
      out << "\n";
      return 1;
    }
    if (*c_euler) {
      CurveComplex cx = load_diagram(file);
      ComplexGeometry geo = geometry(cx);
      ZVec D = parse_domain_arg(domain_arg, cx.num_regions());
      out << "euler-measure " << quarters(euler_measure4(cx, geo, D)) << "\n";
      return 0;
    }
    if (*c_index) {
      Int ind = polygon_index(opt_n, opt_k, Int(chi_s), Int(e4_s));
      out << "index " << ind << "\n";
      return 0;
    }
    if (*c_iext) {
      CurveComplex cx = load_diagram(file);
      ComplexGeometry geo = geometry(cx);
      ZVec D = parse_domain_arg(domain_arg, cx.num_regions());
      Int ind = index_extended(cx, geo, D, Int(chi_s), opt_n, opt_k, opt_g);
      out << "index-extended " << ind << "\n";
      return 0;
    }
    if (*c_thin) {
      MultiDiagram d = perturb(load_diagram(file), 1);
      auto thin = thin_subgroup(d);
      out << "thin rank " << thin.size() << "\n";
      for (const auto& q : thin) {
        out << "basis ";
        print_vec(out, q);
        out << "\n";
      }
      return 0;
    }
    if (*c_pmap) {
      MultiDiagram d = perturb(load_diagram(file), 1);
      ZVec q = parse_domain_arg(domain_arg, d.merged.num_regions());
      ZVec img = p_map(d, q);
      out << "pmap chain ";
      print_vec(out, img);
      out << "\n";
      out << "pmap multiplicities ";
      print_vec(out, p_multiplicities(d, q));
      out << "\n";
      return 0;
    }
    if (*c_double) {
      MultiDiagram d = perturb(load_diagram(file), n);
      write_or_print(emit_diagram(d.merged), out_path, out);
      return 0;
    }
    if (*c_slide) {
      CurveComplex cx = load_diagram(file);
      MoveRecord rec = slide(cx, ci, cj, parse_path_arg(path_arg));
      out << "slide sign " << (rec.sign > 0 ? "+1" : "-1") << "\n";
      write_or_print(emit_diagram(rec.after), out_path, out);
      return 0;
    }
    if (*c_reorder) {
      CurveComplex cx = load_diagram(file);
      MoveRecord rec = shift_reorder(cx, kidx, lidx);
      write_or_print(emit_diagram(rec.after), out_path, out);
      return 0;
    }
    if (*c_vs) {
      CurveComplex cx = load_diagram(file);
      MoveRecord rec = use_reorder ? shift_reorder(cx, kidx, lidx)
                                   : slide(cx, ci, cj, parse_path_arg(path_arg));
      SectorPreservationReport rep = verify_sector_preservation(rec);
      out << "verify-sectors " << (rep.ok ? "PASS" : "FAIL") << " pairs " << rep.pairs_checked
          << "\n";
      for (const auto& mm : rep.mismatches) out << "mismatch: " << mm << "\n";
      return rep.ok ? 0 : 1;
    }
    if (*c_acheck) {
      AlgebraDocument doc = load_algebras(file);
      const WeakAInfinityAlgebra* A = doc.algebra(alg_name);
      if (!A) throw std::runtime_error("unknown algebra '" + alg_name + "'");
      RelationReport rep = check_relations(*A, up_to);
      run_relation_printer(out, "relation", rep);
      return relation_exit(rep);
    }
    if (*c_amor) {
      AlgebraDocument doc = load_algebras(file);
      const AInfMorphism* f = doc.morphism(mor_name);
      if (!f) throw std::runtime_error("unknown morphism '" + mor_name + "'");
      RelationReport rep = check_morphism(*f, up_to);
      run_relation_printer(out, "morphism", rep);
      return relation_exit(rep);
    }
    if (*c_acomp) {
      AlgebraDocument doc = load_algebras(file);
      const AInfMorphism* g = doc.morphism(outer_name);
      const AInfMorphism* f = doc.morphism(inner_name);
      if (!g || !f) throw std::runtime_error("unknown morphism");
      AlgebraDocument result;
      result.algebras.push_back(*f->source);
      result.algebras.push_back(*g->target);
      AInfMorphism comp = compose(*g, *f);
      comp.name = "composite";
      comp.source = &result.algebras[0];
      comp.target = &result.algebras[1];
      result.morphisms.push_back(std::move(comp));
      write_or_print(emit_algebras(result), out_path, out);
      return 0;
    }
    if (*c_ahom) {
      AlgebraDocument doc = load_algebras(file);
      const AInfMorphism* f = doc.morphism(from_name);
      const AInfMorphism* g = doc.morphism(to_name);
      const AInfHomotopy* H = doc.homotopy(via_name);
      if (!f || !g) throw std::runtime_error("unknown morphism");
      if (!H) throw std::runtime_error("unknown homotopy '" + via_name + "'");
      RelationReport rep = check_homotopy(*f, *g, *H, up_to);
      run_relation_printer(out, "homotopy", rep);
      return relation_exit(rep);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

} // namespace sd
