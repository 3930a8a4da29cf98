#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "szt/inverse_basis.hpp"
#include "szt/invariants.hpp"
#include "szt/io.hpp"
#include "szt/matroid.hpp"
#include "szt/perp.hpp"

namespace {

using nlohmann::ordered_json;
using namespace szt;

struct Emit {
  std::string format = "text";
  std::string out_path;

  void operator()(const ordered_json& report, const std::string& text) const {
    std::string payload = format == "json" ? report.dump(2) + "\n" : text;
    if (out_path.empty()) {
      std::cout << payload;
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::runtime_error("cannot write " + out_path);
      f << payload;
    }
  }
};

ordered_json series_json(const BiPoly& S, const char* k1, const char* k2) {
  ordered_json terms = ordered_json::array();
  for (const auto& [de, c] : S.terms()) {
    ordered_json t;
    t[k1] = de.first;
    t[k2] = de.second;
    t["coeff"] = to_string(c);
    terms.push_back(t);
  }
  ordered_json out;
  out["text"] = series_to_text(S, k1, k2);
  out["terms"] = terms;
  return out;
}

ordered_json tutte_json(const BiPoly& T) {
  ordered_json terms = ordered_json::array();
  for (const auto& [de, c] : T.terms()) {
    ordered_json t;
    t["x"] = de.first;
    t["y"] = de.second;
    t["coeff"] = to_string(c);
    terms.push_back(t);
  }
  ordered_json out;
  out["text"] = poly_to_text(T, "x", "y");
  out["terms"] = terms;
  return out;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> r;
  for (int i : v) r.push_back(i + 1);
  return r;
}

std::string set_str(const std::vector<int>& v) {
  std::string s = "{";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i] + 1);
  }
  return s + "}";
}

ordered_json header_json(const char* command, const std::string& file, const Arrangement& A) {
  ordered_json out;
  out["command"] = command;
  out["file"] = file;
  out["n"] = A.dim();
  out["m"] = A.size();
  out["rank"] = A.rank();
  return out;
}

std::string header_text(const Arrangement& A) {
  std::ostringstream os;
  os << "arrangement: n=" << A.dim() << " m=" << A.size() << " rank=" << A.rank() << "\n";
  return os.str();
}

ordered_json record_json(const BasisRecord& r) {
  ordered_json out;
  out["basis"] = one_based(r.basis);
  out["ext_active"] = one_based(r.ext_active);
  out["ext_passive"] = one_based(r.ext_passive);
  out["int_active"] = one_based(r.int_active);
  out["int_passive"] = one_based(r.int_passive);
  return out;
}

std::string record_text(const BasisRecord& r) {
  std::ostringstream os;
  os << "basis " << set_str(r.basis) << ": ea=" << set_str(r.ext_active)
     << " ep=" << set_str(r.ext_passive) << " ia=" << set_str(r.int_active)
     << " ip=" << set_str(r.int_passive);
  return os.str();
}

int run_tutte(const Emit& emit, const std::string& file, const std::string& method) {
  Arrangement A = load_arrangement(file);
  ordered_json out = header_json("tutte", file, A);
  std::string text = header_text(A);
  bool agree = true;
  if (method == "all") {
    TuttePoly a = tutte(A, TutteMethod::SubsetSum);
    TuttePoly b = tutte(A, TutteMethod::DeletionContraction);
    TuttePoly c = tutte(A, TutteMethod::Activity);
    agree = a == b && b == c;
    out["method"] = "all";
    out["tutte"] = tutte_json(b);
    out["agree"] = agree;
    text += "T(x,y) = " + poly_to_text(b, "x", "y") + "\n";
    text += std::string("subset-sum = delcon = activity: ") + (agree ? "AGREE" : "DISAGREE") + "\n";
    if (!agree) {
      text += "  subset-sum: " + poly_to_text(a, "x", "y") + "\n";
      text += "  delcon:     " + poly_to_text(b, "x", "y") + "\n";
      text += "  activity:   " + poly_to_text(c, "x", "y") + "\n";
      out["tutte_subset_sum"] = tutte_json(a);
      out["tutte_activity"] = tutte_json(c);
    }
  } else {
    TutteMethod m = method == "subset-sum" ? TutteMethod::SubsetSum
                  : method == "delcon"     ? TutteMethod::DeletionContraction
                                           : TutteMethod::Activity;
    TuttePoly T = tutte(A, m);
    out["method"] = method;
    out["tutte"] = tutte_json(T);
    text += "T(x,y) = " + poly_to_text(T, "x", "y") + "\n";
  }
  emit(out, text);
  return agree ? 0 : 1;
}

int run_hilbert(const Emit& emit, const std::string& file, int k, const std::string& method) {
  Arrangement A = load_arrangement(file);
  if (k != 1 && method != "perp")
    throw std::runtime_error("--method " + method + " requires k=1 (use --method perp)");
  std::vector<std::pair<std::string, BigradedSeries>> results;
  if (method == "perp" || method == "all")
    results.emplace_back("perp", PerpSystem(A, k).hilbert());
  if (method == "tutte" || method == "all")
    results.emplace_back("tutte", hilbert_via_tutte(A));
  if (method == "recursion" || method == "all")
    results.emplace_back("recursion", hilbert_via_recursion(A));
  bool agree = true;
  for (const auto& [name, S] : results) agree = agree && S == results.front().second;

  ordered_json out = header_json("hilbert", file, A);
  out["k"] = k;
  out["method"] = method;
  out["series"] = series_json(results.front().second, "q", "t");
  if (results.size() > 1) {
    ordered_json per;
    for (const auto& [name, S] : results) per[name] = series_json(S, "q", "t");
    out["methods"] = per;
    out["agree"] = agree;
  }
  std::string text = header_text(A);
  text += "k = " + std::to_string(k) + "\n";
  if (agree) {
    text += "Hilb(q,t) = " + series_to_text(results.front().second, "q", "t") + "\n";
  } else {
    for (const auto& [name, S] : results)
      text += "Hilb[" + name + "] = " + series_to_text(S, "q", "t") + "\n";
  }
  if (results.size() > 1) {
    std::string names;
    for (const auto& [name, S] : results) {
      if (!names.empty()) names += " = ";
      names += name;
    }
    text += names + (agree ? ": AGREE" : ": DISAGREE");
    text += "\n";
  }
  emit(out, text);
  return agree ? 0 : 1;
}

ordered_json element_json(const FamilyDescriptor& d, const BasisRecord& r,
                          const SuperElement& el) {
  ordered_json out;
  out["basis"] = one_based(r.basis);
  out["I"] = one_based(d.dalpha_passive);
  out["S"] = one_based(d.alpha_active);
  out["T"] = one_based(d.dalpha_active);
  out["bidegree"] = {d.bd.bos, d.bd.ferm};
  out["element"] = el.str();
  return out;
}

int run_basis(const Emit& emit, const std::string& file, bool verify) {
  Arrangement A = load_arrangement(file);
  InverseFamily fam = build_family(A);
  BigradedSeries census = family_census(fam.records);

  ordered_json out = header_json("basis", file, A);
  out["count"] = fam.elements.size();
  out["census"] = series_json(census, "q", "t");
  ordered_json elems = ordered_json::array();
  std::string text = header_text(A);
  int last_basis = -1;
  for (size_t i = 0; i < fam.descriptors.size(); ++i) {
    const FamilyDescriptor& d = fam.descriptors[i];
    const BasisRecord& r = fam.records[d.basis_index];
    elems.push_back(element_json(d, r, fam.elements[i]));
    if (d.basis_index != last_basis) {
      text += record_text(r) + "\n";
      last_basis = d.basis_index;
    }
    std::ostringstream os;
    os << "  (q^" << d.bd.bos << " t^" << d.bd.ferm << ")  I=" << set_str(d.dalpha_passive)
       << " S=" << set_str(d.alpha_active) << " T=" << set_str(d.dalpha_active) << "  "
       << fam.elements[i].str() << "\n";
    text += os.str();
  }
  out["elements"] = elems;
  text += "elements: " + std::to_string(fam.elements.size()) + "\n";
  text += "census: " + series_to_text(census, "q", "t") + "\n";

  int code = 0;
  if (verify) {
    PerpSystem sys(A, 1);
    FamilyCheck check = verify_family(fam, sys);
    ordered_json v;
    v["membership"] = check.membership;
    v["independent"] = check.independent;
    v["census_vs_kernel"] = check.census_matches_kernel;
    v["census_vs_activity"] = check.census_matches_activity;
    if (!check.detail.empty()) v["detail"] = check.detail;
    out["verify"] = v;
    auto line = [&](const char* name, bool okv) {
      text += std::string(name) + ": " + (okv ? "PASS" : "FAIL") + "\n";
    };
    line("membership", check.membership);
    line("independence", check.independent);
    line("census vs kernel", check.census_matches_kernel);
    line("census vs activity", check.census_matches_activity);
    if (!check.detail.empty()) text += "detail: " + check.detail + "\n";
    code = check.ok() ? 0 : 1;
  }
  emit(out, text);
  return code;
}

int run_activities(const Emit& emit, const std::string& file) {
  Arrangement A = load_arrangement(file);
  std::vector<BasisRecord> recs = all_activities(A);
  ordered_json out = header_json("activities", file, A);
  ordered_json list = ordered_json::array();
  std::string text = header_text(A);
  for (const BasisRecord& r : recs) {
    list.push_back(record_json(r));
    text += record_text(r) + "\n";
  }
  out["bases"] = list;
  text += "bases: " + std::to_string(recs.size()) + "\n";
  emit(out, text);
  return 0;
}

int run_fvector(const Emit& emit, const std::string& file) {
  Arrangement A = load_arrangement(file);
  std::vector<Int> f = generic_fvector(A);
  Int total = 0;
  for (const Int& c : f) total += c;
  ordered_json out = header_json("fvector", file, A);
  ordered_json list = ordered_json::array();
  for (size_t d = 0; d < f.size(); ++d) {
    ordered_json e;
    e["dimension"] = d;
    e["count"] = to_string(f[d]);
    list.push_back(e);
  }
  out["f"] = list;
  out["total"] = to_string(total);
  std::string text = header_text(A);
  text += "f = (";
  for (int d = (int)f.size() - 1; d >= 0; --d) {
    text += to_string(f[d]);
    if (d) text += ", ";
  }
  text += ")  listing dimensions " + std::to_string(A.dim()) + "..0\n";
  text += "total faces: " + to_string(total) + "\n";
  emit(out, text);
  return 0;
}

int run_regions(const Emit& emit, const std::string& file, bool doubled) {
  Arrangement A = load_arrangement(file);
  BigradedSeries S = hilbert_via_tutte(A);
  ordered_json out = header_json("regions", file, A);
  std::string text = header_text(A);
  int code = 0;
  if (!doubled) {
    Int regions = S.eval(Int(1), Int(0));
    out["regions"] = to_string(regions);
    text += "regions of a generic deformation: " + to_string(regions) + "\n";
  } else {
    DoubledRegions dr = doubled_region_check(A, S);
    out["dimension"] = to_string(dr.dimension);
    out["doubled_independent_sets"] = to_string(dr.doubled_independent);
    out["count_match"] = dr.count_match;
    out["substituted"] = series_json(dr.substituted, "q", "t");
    out["doubled_external"] = series_json(dr.doubled_external, "q", "t");
    out["series_match"] = dr.series_match;
    text += "series dimension Hilb(1,1): " + to_string(dr.dimension) + "\n";
    text += "doubled generic regions (independent sets of the doubled arrangement): " +
            to_string(dr.doubled_independent) + "\n";
    text += std::string("count match: ") + (dr.count_match ? "PASS" : "FAIL") + "\n";
    text += std::string("substitution series identity: ") +
            (dr.series_match ? "PASS" : "FAIL") + "\n";
    code = dr.count_match && dr.series_match ? 0 : 1;
  }
  emit(out, text);
  return code;
}

int run_top_check(const Emit& emit, const std::string& file) {
  Arrangement A = load_arrangement(file);
  BigradedSeries S = hilbert_via_tutte(A);
  TopCheck tc = top_summand_check(A, S);
  std::vector<Int> chi = characteristic_poly(A);
  ordered_json out = header_json("top-check", file, A);
  out["top"] = series_json(tc.top, "q", "t");
  out["predicted"] = series_json(tc.predicted, "q", "t");
  ordered_json chi_list = ordered_json::array();
  for (const Int& c : chi) chi_list.push_back(to_string(c));
  out["characteristic"] = chi_list;
  out["match"] = tc.match;
  std::string text = header_text(A);
  text += "Hilb = " + series_to_text(S, "q", "t") + "\n";
  text += "top summand:  " + poly_to_text(tc.top, "q", "t") + "\n";
  text += "predicted:    " + poly_to_text(tc.predicted, "q", "t") + "\n";
  text += "characteristic polynomial: " + unipoly_to_text(chi, "s") + "\n";
  text += std::string("match: ") + (tc.match ? "PASS" : "FAIL") + "\n";
  emit(out, text);
  return tc.match ? 0 : 1;
}

int run_logconcavity(const Emit& emit, const std::string& file) {
  Arrangement A = load_arrangement(file);
  BigradedSeries S = hilbert_via_tutte(A);
  LogConcavityReport rep = log_concavity(S);
  ordered_json out = header_json("logconcavity", file, A);
  out["series"] = series_json(S, "q", "t");
  out["ok"] = rep.ok;
  out["violations"] = rep.violations;
  std::string text = header_text(A);
  text += "Hilb = " + series_to_text(S, "q", "t") + "\n";
  text += std::string("rows, columns and diagonals log-concave: ") + (rep.ok ? "PASS" : "FAIL") + "\n";
  for (const std::string& v : rep.violations) text += "  " + v + "\n";
  emit(out, text);
  return rep.ok ? 0 : 1;
}

int run_conjecture(const Emit& emit, const std::string& file) {
  Arrangement A = load_arrangement(file);
  ConjectureReport rep = internal_variant_check(A);
  ordered_json out = header_json("conjecture", file, A);
  out["kernel_series"] = series_json(rep.lhs, "q", "t");
  out["predicted_series"] = series_json(rep.rhs, "q", "t");
  out["equal"] = rep.equal;
  std::string text = header_text(A);
  text += "k=0 kernel series:  " + series_to_text(rep.lhs, "q", "t") + "\n";
  text += "Tutte substitution: " + series_to_text(rep.rhs, "q", "t") + "\n";
  text += std::string("equal: ") + (rep.equal ? "yes" : "NO") + "  (reported, not asserted)\n";
  emit(out, text);
  return 0;
}

std::vector<std::pair<int, int>> parse_edges(const std::string& s) {
  std::vector<std::pair<int, int>> edges;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t dash = item.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == item.size())
      throw std::runtime_error("bad edge \"" + item + "\", expected u-v");
    int u, v;
    try {
      u = std::stoi(item.substr(0, dash));
      v = std::stoi(item.substr(dash + 1));
    } catch (const std::exception&) {
      throw std::runtime_error("bad edge \"" + item + "\", expected u-v");
    }
    if (u < 1 || v < 1) throw std::runtime_error("vertices are numbered from 1");
    edges.emplace_back(u, v);
  }
  if (edges.empty()) throw std::runtime_error("no edges given");
  return edges;
}

int run_graph(const Emit& emit, const std::string& edge_spec, int vertices) {
  std::vector<std::pair<int, int>> edges = parse_edges(edge_spec);
  int maxv = 0;
  for (const auto& [u, v] : edges) maxv = std::max(maxv, std::max(u, v));
  if (vertices == 0) vertices = maxv;
  if (maxv > vertices)
    throw std::runtime_error("edge endpoint exceeds --vertices " + std::to_string(vertices));
  Arrangement A = Arrangement::from_graph(vertices, edges);
  std::string file_text = arrangement_to_json(A);
  emit(ordered_json::parse(file_text), file_text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superspace zonotopal algebra of rational hyperplane multiarrangements"};
  app.require_subcommand(1);
  app.fallthrough();

  Emit emit;
  long long seed = 0;
  app.add_option("--format", emit.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", emit.out_path, "write the report to a file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized self checks (reserved)");

  std::string file, method_tutte = "all", method_hilbert = "perp";
  int k = 1, vertices = 0;
  bool verify = false, doubled = false;
  std::string edge_spec;

  auto* c_tutte = app.add_subcommand("tutte", "Tutte polynomial of the column matroid");
  c_tutte->add_option("file", file, "arrangement JSON file")->required();
  c_tutte->add_option("--method", method_tutte, "subset-sum|delcon|activity|all")
      ->check(CLI::IsMember({"subset-sum", "delcon", "activity", "all"}))
      ->capture_default_str();

  auto* c_hilbert = app.add_subcommand("hilbert", "bigraded Hilbert series of the inverse system");
  c_hilbert->add_option("file", file, "arrangement JSON file")->required();
  c_hilbert->add_option("--k", k, "ideal exponent offset, at least -1")->capture_default_str();
  c_hilbert->add_option("--method", method_hilbert, "perp|tutte|recursion|all (non-perp need k=1)")
      ->check(CLI::IsMember({"perp", "tutte", "recursion", "all"}))
      ->capture_default_str();

  auto* c_basis = app.add_subcommand("basis", "activity indexed basis of the inverse system");
  c_basis->add_option("file", file, "arrangement JSON file")->required();
  c_basis->add_flag("--verify", verify, "run the four part verification report");

  auto* c_act = app.add_subcommand("activities", "per basis activity table");
  c_act->add_option("file", file, "arrangement JSON file")->required();

  auto* c_fvec = app.add_subcommand("fvector", "face counts of a generic deformation");
  c_fvec->add_option("file", file, "arrangement JSON file")->required();

  auto* c_reg = app.add_subcommand("regions", "region counts of generic deformations");
  c_reg->add_option("file", file, "arrangement JSON file")->required();
  c_reg->add_flag("--doubled", doubled, "doubled arrangement region identities");

  auto* c_top = app.add_subcommand("top-check", "top summand against the characteristic polynomial");
  c_top->add_option("file", file, "arrangement JSON file")->required();

  auto* c_log = app.add_subcommand("logconcavity", "log concavity of the series coefficients");
  c_log->add_option("file", file, "arrangement JSON file")->required();

  auto* c_conj = app.add_subcommand("conjecture", "internal variant series comparison, report only");
  c_conj->add_option("file", file, "arrangement JSON file")->required();

  auto* c_graph = app.add_subcommand("graph", "emit the arrangement file of a graph");
  c_graph->add_option("--edges", edge_spec, "comma separated edges, e.g. 1-2,2-3,1-3")->required();
  c_graph->add_option("--vertices", vertices, "vertex count (default: largest endpoint)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int r = app.exit(e);
    return r == 0 ? 0 : 2;
  }

  try {
    if (*c_tutte) return run_tutte(emit, file, method_tutte);
    if (*c_hilbert) {
      if (k < -1) throw std::runtime_error("--k must be at least -1");
      return run_hilbert(emit, file, k, method_hilbert);
    }
    if (*c_basis) return run_basis(emit, file, verify);
    if (*c_act) return run_activities(emit, file);
    if (*c_fvec) return run_fvector(emit, file);
    if (*c_reg) return run_regions(emit, file, doubled);
    if (*c_top) return run_top_check(emit, file);
    if (*c_log) return run_logconcavity(emit, file);
    if (*c_conj) return run_conjecture(emit, file);
    if (*c_graph) return run_graph(emit, edge_spec, vertices);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
