#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "modcat/catalog.hpp"
#include "modcat/classifier.hpp"
#include "modcat/datum_io.hpp"
#include "modcat/error.hpp"
#include "modcat/field_theory.hpp"
#include "modcat/galois.hpp"
#include "modcat/sl2z.hpp"

using namespace modcat;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "modcat-cli/1";

struct Options {
  bool json = false;
  int precision = 12;
};

std::string render(const Cyclotomic& x, int digits) {
  const ComplexValue v = x.evaluate(std::min(digits + 5, kMaxEvalDigits));
  std::ostringstream os;
  os << std::setprecision(digits) << static_cast<long double>(v.re);
  const auto im = x.is_real() ? 0.0L : static_cast<long double>(v.im);
  if (im != 0) os << (im < 0 ? " - " : " + ") << std::setprecision(digits) << (im < 0 ? -im : im) << "i";
  return os.str();
}

ordered_json verdict_json(const Verdict& v) {
  ordered_json j;
  j["pass"] = v.pass;
  if (!v.pass) j["witness"] = v.witness;
  return j;
}

void emit(const Options& opt, ordered_json j) {
  if (!opt.json) return;
  ordered_json out;
  out["schema"] = kSchema;
  for (auto& [k, v] : j.items()) out[k] = v;
  std::cout << out.dump(2) << "\n";
}

int cmd_check(const Options& opt, const std::string& path) {
  const ModularDatum d = load_datum(path);
  const AdmissibilityReport rep = check_admissible(d);
  ordered_json conds = ordered_json::array();
  for (std::size_t i = 0; i < rep.conditions.size(); ++i) {
    ordered_json c = verdict_json(rep.conditions[i]);
    c["condition"] = AdmissibilityReport::kNames[i];
    conds.push_back(c);
  }
  if (opt.json) {
    emit(opt, {{"command", "check"}, {"file", path}, {"rank", d.rank}, {"torder", d.torder}, {"conditions", conds},
               {"admissible", rep.pass()}});
  } else {
    std::cout << "rank " << d.rank << ", ord(T) = " << d.torder << "\n";
    for (std::size_t i = 0; i < rep.conditions.size(); ++i) {
      std::cout << std::left << std::setw(6) << AdmissibilityReport::kNames[i] << (rep.conditions[i].pass ? "pass" : "FAIL");
      if (!rep.conditions[i].pass) std::cout << "  " << rep.conditions[i].witness;
      std::cout << "\n";
    }
    std::cout << (rep.pass() ? "admissible" : "not admissible") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int cmd_fusion(const Options& opt, const std::string& path) {
  const ModularDatum d = load_datum(path);
  const FusionRules f = verlinde_fusion(d);
  const Verdict inv = check_fusion_invariants(f);
  if (opt.json) {
    ordered_json mats = ordered_json::array();
    for (int i = 0; i < f.rank; ++i) mats.push_back(f.matrix(i));
    emit(opt, {{"command", "fusion"}, {"file", path}, {"rank", f.rank}, {"dual", f.dual}, {"matrices", mats},
               {"invariants", verdict_json(inv)}});
  } else {
    for (int i = 0; i < f.rank; ++i) {
      std::cout << "N_" << i << ":\n";
      for (const auto& row : f.matrix(i)) {
        for (std::size_t k = 0; k < row.size(); ++k) std::cout << (k ? " " : "  ") << row[k];
        std::cout << "\n";
      }
    }
    std::cout << "invariants " << (inv.pass ? "pass" : "FAIL  " + inv.witness) << "\n";
  }
  return inv.pass ? 0 : 1;
}

int cmd_galois(const Options& opt, const std::string& path) {
  const ModularDatum d = load_datum(path);
  const GaloisProfile p = compute_profile(d);
  const DimensionReport dims = classify_dimensions(d, p);
  const auto excl = exclusion_predicates(d, p);
  bool ok = true;
  for (const auto& e : excl) ok = ok && e.verdict.pass;
  if (opt.json) {
    ordered_json perms = ordered_json::object(), signs = ordered_json::object(), ex = ordered_json::array();
    for (const auto& [k, h] : p.perms) perms[std::to_string(k)] = h;
    for (const auto& [k, s] : p.signs) signs[std::to_string(k)] = s;
    for (const auto& e : excl) {
      ordered_json v = verdict_json(e.verdict);
      v["name"] = e.name;
      ex.push_back(v);
    }
    emit(opt, {{"command", "galois"}, {"file", path}, {"field_conductor", p.field_conductor}, {"units", p.group},
               {"permutations", perms}, {"signs", signs}, {"orbits", p.orbits}, {"dimension_class", to_string(dims.kind)},
               {"pseudo_unitary", dims.pseudo_unitary}, {"exclusion_predicates", ex}});
  } else {
    std::cout << "conductor of F_S: " << p.field_conductor << "\n";
    for (const auto& [k, h] : p.perms) {
      std::cout << "  sigma_" << k << ": " << cycle_notation(h);
      if (p.signs.count(k)) {
        std::cout << "  eps =";
        for (int s : p.signs.at(k)) std::cout << (s > 0 ? " +" : " -");
      }
      std::cout << "\n";
    }
    std::cout << "orbits:";
    for (const auto& o : p.orbits) {
      std::cout << " {";
      for (std::size_t i = 0; i < o.size(); ++i) std::cout << (i ? "," : "") << o[i];
      std::cout << "}";
    }
    std::cout << "\ndimensions: " << to_string(dims.kind) << (dims.pseudo_unitary ? ", pseudo-unitary" : "") << "\n";
    for (const auto& e : excl)
      std::cout << "  " << e.name << ": " << (e.verdict.pass ? "pass" : "FAIL  " + e.verdict.witness) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_rep(const Options& opt, const std::string& path) {
  const ModularDatum d = load_datum(path);
  const ModularRep rep = canonical_lift(d);
  const Verdict conn = spectra_connectivity(rep);
  if (opt.json) {
    ordered_json spec = ordered_json::array();
    for (const auto& w : rep.t) spec.push_back({{"turns", w.to_string()}, {"order", w.order()}});
    emit(opt, {{"command", "rep"}, {"file", path}, {"level", rep.level}, {"parity", to_string(rep.parity)},
               {"D", global_dimension(d).to_string()}, {"t_spectrum", spec}, {"connectivity", verdict_json(conn)}});
  } else {
    std::cout << "level " << rep.level << ", parity " << to_string(rep.parity) << "\n";
    std::cout << "D = " << global_dimension(d).to_string() << " ~ " << render(global_dimension(d), opt.precision) << "\n";
    for (int i = 0; i < rep.rank; ++i)
      std::cout << "  t_" << i << " = exp(2 pi i " << rep.t[i].to_string() << "), order " << rep.t[i].order() << "\n";
    std::cout << "connectivity " << (conn.pass ? "pass" : "FAIL  " + conn.witness) << "\n";
  }
  return conn.pass ? 0 : 1;
}

int cmd_levels(const Options& opt, const std::string& shape_text) {
  const GroupShape shape = parse_shape(shape_text);
  const auto levels = enumerate_levels(shape);
  if (opt.json) {
    emit(opt, {{"command", "levels"}, {"shape", to_string(shape)}, {"levels", levels}});
  } else {
    for (std::size_t i = 0; i < levels.size(); ++i) std::cout << (i ? " " : "") << levels[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_catalog(const std::string& family, std::int64_t a, std::int64_t b, int index, const std::string& output) {
  ModularDatum d;
  std::string name;
  if (family == "su2-odd-mod2") {
    d = su2_odd_mod2(a, b);
    name = "su2_odd_mod2(" + std::to_string(a) + "," + std::to_string(b) + ")";
  } else if (family == "pointed") {
    d = pointed_Zn(a, b);
    name = "pointed_Zn(" + std::to_string(a) + "," + std::to_string(b) + ")";
  } else if (family == "su2-4") {
    d = su2_4_family(su2_4_parameters(index));
    name = "su2_4_family(" + std::to_string(index) + ")";
  } else {
    throw Error(ErrorKind::InvalidFamily, "unknown family " + family);
  }
  if (output.empty())
    std::cout << datum_to_json(d, name).dump(2) << "\n";
  else
    save_datum(output, d, name);
  return 0;
}

int cmd_rank5(const Options& opt) {
  const Rank5Report rep = rank5_suite();
  if (opt.json) {
    ordered_json data = ordered_json::array();
    for (const auto& d : rep.data) {
      ordered_json preds = ordered_json::array();
      for (const auto& p : d.predicates) {
        ordered_json v = verdict_json(p.verdict);
        v["name"] = p.name;
        preds.push_back(v);
      }
      data.push_back({{"name", d.name}, {"fusion_class", d.fusion_class}, {"pass", d.pass()}, {"predicates", preds}});
    }
    emit(opt, {{"command", "classify-rank5"}, {"data", data}, {"not_instantiated", rep.not_instantiated}, {"pass", rep.pass()}});
  } else {
    for (const auto& d : rep.data) {
      std::cout << std::left << std::setw(24) << d.name << std::setw(20) << d.fusion_class << (d.pass() ? "pass" : "FAIL") << "\n";
      for (const auto& p : d.predicates)
        if (!p.verdict.pass) std::cout << "    " << p.name << ": " << p.verdict.witness << "\n";
    }
    for (const auto& c : rep.not_instantiated) std::cout << c << ": not instantiated\n";
  }
  return rep.pass() ? 0 : 1;
}

int cmd_equiv(const Options& opt, const std::string& a, const std::string& b) {
  const FusionRules f1 = verlinde_fusion(load_datum(a));
  const FusionRules f2 = verlinde_fusion(load_datum(b));
  const auto pi = grothendieck_equiv(f1, f2);
  if (opt.json) {
    ordered_json j{{"command", "equiv"}, {"files", {a, b}}, {"equivalent", pi.has_value()}};
    if (pi) j["permutation"] = *pi;
    emit(opt, j);
  } else if (pi) {
    for (std::size_t i = 0; i < pi->size(); ++i) std::cout << (i ? " " : "") << (*pi)[i];
    std::cout << "\n";
  } else {
    std::cout << "inequivalent\n";
  }
  return pi ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact modular data toolkit"};
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable JSON output");
  app.add_option("--precision", opt.precision, "Digits for diagnostic float rendering")->check(CLI::Range(1, 35));
  app.require_subcommand(1);

  std::string file, file2, shape, family, output;
  std::int64_t pa = 5, pb = 1;
  int index = 0;
  auto* check = app.add_subcommand("check", "Seven-condition admissibility table");
  check->add_option("file", file, "Datum JSON")->required();
  auto* fusion = app.add_subcommand("fusion", "Verlinde fusion matrices");
  fusion->add_option("file", file, "Datum JSON")->required();
  auto* galois = app.add_subcommand("galois", "Galois profile");
  galois->add_option("file", file, "Datum JSON")->required();
  auto* rep = app.add_subcommand("rep", "Canonical normalized representation");
  rep->add_option("file", file, "Datum JSON")->required();
  auto* levels = app.add_subcommand("levels", "Candidate levels for a Galois shape");
  levels->add_option("shape", shape, "e.g. p=3,m=1,r=1 or multiquadratic,m=2")->required();
  auto* catalog = app.add_subcommand("catalog", "Emit a catalog datum as JSON");
  catalog->add_option("family", family, "su2-odd-mod2 | pointed | su2-4")->required();
  catalog->add_option("-a,--first", pa, "p for su2-odd-mod2, n for pointed");
  catalog->add_option("-b,--second", pb, "Galois conjugate for su2-odd-mod2, m for pointed");
  catalog->add_option("-i,--index", index, "su2-4 parameter index 0..15");
  catalog->add_option("-o,--output", output, "Write to this file instead of stdout");
  auto* rank5 = app.add_subcommand("classify-rank5", "Rank-5 verification report");
  auto* equiv = app.add_subcommand("equiv", "Grothendieck equivalence of two data");
  equiv->add_option("a", file, "First datum")->required();
  equiv->add_option("b", file2, "Second datum")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*check) return cmd_check(opt, file);
    if (*fusion) return cmd_fusion(opt, file);
    if (*galois) return cmd_galois(opt, file);
    if (*rep) return cmd_rep(opt, file);
    if (*levels) return cmd_levels(opt, shape);
    if (*catalog) return cmd_catalog(family, pa, pb, index, output);
    if (*rank5) return cmd_rank5(opt);
    if (*equiv) return cmd_equiv(opt, file, file2);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::SchemaViolation:
      case ErrorKind::InvalidFamily:
      case ErrorKind::InvalidParameters:
      case ErrorKind::OutOfRange:
      case ErrorKind::BadLevel:
        return 2;
      default:
        return 1;
    }
  }
  return 2;
}
