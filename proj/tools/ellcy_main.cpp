// Command-line front end: surface analysis, family specialization and
// parameter matching, fiber-product invariants with bad primes, table
// reproduction, and the registry dump. JSON output is authoritative; text
// output renders the same numbers aligned for reading.
//
// Exit codes: 0 success, 1 table-reproduction diff nonempty, 2 usage or
// domain errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "ellcy/jsonio.hpp"
#include "ellcy/parse.hpp"
#include "ellcy/registry.hpp"

namespace {

using namespace ellcy;

void emit(const Json& j, const std::string& format,
          const std::string& text_rendering) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text_rendering;
}

std::string primes_text(const std::vector<Int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

std::string analysis_text(const SurfaceAnalysis& a) {
  char buf[256];
  std::string s;
  std::snprintf(buf, sizeof buf,
                "config %s   field d=%s   e=%d   mw_rank=%d\n",
                config_label(a).c_str(), a.field_d.str().c_str(), a.euler,
                a.mw_rank);
  s += buf;
  std::snprintf(buf, sizeof buf, "%-28s %-7s %-6s %-8s %s\n", "place", "deg",
                "type", "v(disc)", "components");
  s += buf;
  for (const KodairaFiber& f : a.fibers) {
    std::snprintf(buf, sizeof buf, "%-28s %-7d %-6s %-8d %d\n",
                  to_string(f.place).c_str(), f.place.degree,
                  to_string(f.type).c_str(), f.v_disc, f.components);
    s += buf;
  }
  return s;
}

std::string fp_analysis_text(const FpSurfaceAnalysis& a) {
  char buf[256];
  std::string s;
  std::snprintf(buf, sizeof buf, "reduction mod %llu: e=%d\n",
                (unsigned long long)a.p, a.euler);
  s += buf;
  for (const FpFiber& f : a.fibers) {
    std::string place = "infinity";
    if (!f.at_infinity) {
      place = "[";
      for (size_t i = 0; i < f.minpoly.size(); ++i) {
        if (i) place += ",";
        place += std::to_string(f.minpoly[i]);
      }
      place += "]";
    }
    std::snprintf(buf, sizeof buf, "%-28s %-7d %-6s %d\n", place.c_str(),
                  f.degree, to_string(f.type).c_str(), f.v_disc);
    s += buf;
  }
  return s;
}

Json fp_analysis_json(const FpSurfaceAnalysis& a) {
  Json j;
  j["p"] = a.p;
  j["euler"] = a.euler;
  Json fibers = Json::array();
  for (const FpFiber& f : a.fibers) {
    Json fj;
    if (f.at_infinity)
      fj["place"] = "infinity";
    else
      fj["place"] = Json(f.minpoly);
    fj["degree"] = f.degree;
    fj["type"] = to_string(f.type);
    fj["v_disc"] = f.v_disc;
    fibers.push_back(std::move(fj));
  }
  j["fibers"] = std::move(fibers);
  return j;
}

struct SurfaceInput {
  WeierstrassModel model;
  SurfaceAnalysis analysis;
  std::optional<QuadElem> lambda;  // free cusp, when taken from the registry
};

SurfaceInput resolve_surface(const std::string& spec) {
  const std::string prefix = "@builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    std::string rest = spec.substr(prefix.size());
    size_t colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::domain_error(
          "builtin spec must look like @builtin:II:<lambda>");
    std::string cls_s = rest.substr(0, colon);
    KodairaClass cls;
    if (cls_s == "II")
      cls = KodairaClass::II;
    else if (cls_s == "III")
      cls = KodairaClass::III;
    else
      throw std::domain_error("builtin class must be II or III, got " + cls_s);
    QuadElem lambda = parse_value(rest.substr(colon + 1));
    const BuiltinSurface* b = find_builtin(cls, lambda);
    if (!b)
      throw std::domain_error("no builtin " + cls_s + " surface with lambda " +
                              to_string(lambda));
    return {b->model, b->analysis, b->lambda};
  }
  WeierstrassModel m = model_from_file(spec);
  return {m, analyze_surface(m), std::nullopt};
}

int cmd_surface_analyze(const std::string& spec, std::uint64_t mod_p,
                        const std::string& format) {
  SurfaceInput in = resolve_surface(spec);
  Json j = to_json(in.analysis);
  std::string text = analysis_text(in.analysis);
  if (mod_p) {
    FpSurfaceAnalysis fa = analyze_surface_fp(reduce_mod_p(in.model, mod_p));
    j["reduction"] = fp_analysis_json(fa);
    text += fp_analysis_text(fa);
  }
  emit(j, format, text);
  return 0;
}

int cmd_family_specialize(const std::string& family, const std::string& m_str,
                          const std::string& format) {
  auto id = parse_family_label(family);
  if (!id) throw std::domain_error("unknown family label: " + family);
  SpecializeResult r = specialize(*id, parse_rational(m_str));
  std::string text = analysis_text(r.analysis);
  if (r.degeneration)
    text += "degeneration at m=" + to_string(r.degeneration->m0) + " -> [" +
            r.degeneration->config + "], mw_rank " +
            std::to_string(r.degeneration->mw_rank) + "\n";
  emit(to_json(r), format, text);
  return 0;
}

int cmd_family_match(const std::string& family, const std::string& lambda_str,
                     std::uint64_t mod_p, const std::string& format) {
  auto id = parse_family_label(family);
  if (!id) throw std::domain_error("unknown family label: " + family);
  QuadElem lambda = parse_value(lambda_str);
  MatchMode mode = mod_p ? MatchMode::mod_p(mod_p) : MatchMode::exact_mode();
  std::vector<MatchSolution> sols = match_parameter(*id, lambda, mode);
  std::string text;
  for (const MatchSolution& s : sols) {
    if (s.value)
      text += "m = " + to_string(*s.value);
    else if (s.min_poly)
      text += "minpoly " + to_string(*s.min_poly, "m");
    else
      text += "m = " + std::to_string(*s.residue) + " mod " +
              std::to_string(s.modulus);
    text += "   [" + s.branch + "]\n";
  }
  if (sols.empty()) text = "no solutions\n";
  emit(to_json(sols), format, text);
  return 0;
}

DFlag parse_dflag(const std::string& s) {
  if (s == "0") return DFlag::zero;
  if (s == "1") return DFlag::one;
  if (s == "auto") return DFlag::automatic;
  throw std::domain_error("--d-flag must be 0, 1 or auto");
}

int cmd_product_analyze(const std::string& left, const std::string& right,
                        const std::string& dflag, std::uint64_t mod_p,
                        const std::string& format) {
  SurfaceInput l = resolve_surface(left), r = resolve_surface(right);
  FiberProductAnalysis p =
      build_product(l.analysis, r.analysis, parse_dflag(dflag));
  Json j;
  j["product"] = to_json(p);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "e=%lld  rho=%lld  h12=%lld  rigidity=%s  d=%d\n", p.euler,
                p.rho, p.h12, to_string(p.rigidity).c_str(), p.d_flag);
  std::string text = buf;
  if (l.lambda && r.lambda) {
    BadPrimeReport bp = bad_primes(*l.lambda, *r.lambda);
    j["bad_primes"] = to_json(bp);
    text += "nodal " + primes_text(bp.nodal) + "\n";
    text += "degenerate " + primes_text(bp.degenerate) + "\n";
    if (mod_p) {
      ReductionClass c = classify_reduction_at(
          ReductionContext::four_fiber_pair(*l.lambda, *r.lambda), mod_p);
      j["reduction_at"] =
          Json{{"p", mod_p}, {"class", to_string(c)}};
      text += "at p=" + std::to_string(mod_p) + ": " + to_string(c) + "\n";
    }
  } else if (mod_p) {
    throw std::domain_error(
        "--mod-p needs builtin factors (free cusps must be known)");
  }
  emit(j, format, text);
  return 0;
}

int cmd_table_reproduce(const std::string& table_id,
                        const std::string& format) {
  std::vector<TableId> ids;
  if (table_id.empty()) {
    ids = all_tables();
  } else {
    auto id = parse_table_name(table_id);
    if (!id) throw std::domain_error("unknown table id: " + table_id);
    ids = {*id};
  }
  Json all = Json::array();
  std::string text;
  int mismatches = 0;
  for (TableId id : ids) {
    TableReport rep = reproduce_table(id);
    mismatches += rep.mismatch_count;
    all.push_back(table_diff_json(rep));
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-13s rows=%zu mismatches=%d\n",
                  table_name(id).c_str(), rep.rows.size(), rep.mismatch_count);
    text += buf;
    for (const TableRow& r : rep.rows) {
      if (r.match) continue;
      text += "  MISMATCH " + r.lambda;
      if (r.lambda_prime) text += ", " + *r.lambda_prime;
      if (r.m) text += ", m=" + *r.m;
      text += ": computed nodal " + primes_text(r.nodal) + " degenerate " +
              primes_text(r.degenerate);
      if (r.h12) text += " h12=" + std::to_string(*r.h12);
      text += "\n";
    }
  }
  emit(all.size() == 1 ? all[0] : all, format, text);
  return mismatches == 0 ? 0 : 1;
}

int cmd_registry_dump(const std::string& format) {
  Json j = registry_dump_json();
  std::string text;
  for (FamilyId id : all_families()) {
    const FamilyModel& f = family_model(id);
    text += f.label + "\n";
    for (const auto& [m0, config] : f.degenerations)
      text += "  m=" + to_string(m0) + " -> [" + config + "]\n";
  }
  text += "builtin surfaces:\n";
  for (const BuiltinSurface& b : builtin_surfaces()) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "  %-3s lambda=%-24s %s@0 %s@1 %s@lambda (%s)\n",
                  (b.additive == KodairaClass::II ? "II" : "III"),
                  to_string(b.lambda).c_str(),
                  to_string(b.type_at_zero).c_str(),
                  to_string(b.type_at_one).c_str(),
                  to_string(b.type_at_lambda).c_str(), b.config.c_str());
    text += buf;
  }
  emit(j, format, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of rational elliptic surfaces and the "
               "Calabi-Yau fiber products built from them"};
  app.require_subcommand(1);

  std::string format = "text", spec, family, m_str, lambda_str, left, right;
  std::string dflag = "auto", table_id;
  std::uint64_t mod_p = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* sa = app.add_subcommand("surface-analyze",
                                    "Kodaira fibers and invariants of a model");
  sa->add_option("surface", spec,
                 "model file or @builtin:II:<lambda> / @builtin:III:<lambda>")
      ->required();
  sa->add_option("--mod-p", mod_p, "also reduce and classify mod p");
  add_format(sa);

  CLI::App* fs = app.add_subcommand("family-specialize",
                                    "member of a family at a parameter value");
  fs->add_option("--family", family, "label such as 1,2,3,4,II")->required();
  fs->add_option("--m", m_str, "parameter value (rational)")->required();
  add_format(fs);

  CLI::App* fm = app.add_subcommand(
      "family-match", "parameters whose member has a cusp at lambda");
  fm->add_option("--family", family, "label such as 1,2,3,4,II")->required();
  fm->add_option("--lambda", lambda_str, "cusp position")->required();
  fm->add_option("--mod-p", mod_p, "solve over the prime field instead");
  add_format(fm);

  CLI::App* pa = app.add_subcommand("product-analyze",
                                    "invariants of a fiber product");
  pa->add_option("--left", left, "left factor (model file or @builtin)")
      ->required();
  pa->add_option("--right", right, "right factor")->required();
  pa->add_option("--d-flag", dflag, "isogeny correction: 0, 1 or auto");
  pa->add_option("--mod-p", mod_p, "classify the reduction at p");
  add_format(pa);

  CLI::App* tr = app.add_subcommand("table-reproduce",
                                    "recompute a bundled table and diff it");
  tr->add_option("--table-id,--id", table_id,
                 "surfaces-II, surfaces-III, products-II, rigid-1234, "
                 "products-III (default: all)");
  add_format(tr);

  CLI::App* rd = app.add_subcommand("registry-dump",
                                    "families, degenerations and builtin "
                                    "surface presentations");
  add_format(rd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sa->parsed()) return cmd_surface_analyze(spec, mod_p, format);
    if (fs->parsed()) return cmd_family_specialize(family, m_str, format);
    if (fm->parsed()) return cmd_family_match(family, lambda_str, mod_p, format);
    if (pa->parsed())
      return cmd_product_analyze(left, right, dflag, mod_p, format);
    if (tr->parsed()) return cmd_table_reproduce(table_id, format);
    if (rd->parsed()) return cmd_registry_dump(format);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
