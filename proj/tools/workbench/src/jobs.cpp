#include "skewroos/workbench/jobs.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "skewroos/error.hpp"

namespace skewroos::workbench {
namespace {

constexpr std::string_view kModule = "cli-workbench";

[[noreturn]] void fail(ErrorCode code, const std::string& what) { throw Error(code, kModule, what); }

std::string field_name(const Field& f) {
  unsigned e = 0;
  for (std::uint64_t order = f.order(); order > 1; order /= f.characteristic()) ++e;
  const std::string p = std::to_string(f.characteristic());
  return e == 1 ? "GF(" + p + ")" : "GF(" + p + "^" + std::to_string(e) + ")";
}

// The defining set the code is built from: closed when auto_close is on.
DefiningSet effective_set(const JobSpec& job) {
  if (job.auto_close) return mu_closure(job.t);
  if (!job.t.is_mu_closed()) {
    throw Error(ErrorCode::NotMuClosed, "skew-code", "defining set is not mu-closed and auto_close is false");
  }
  return job.t;
}

DefiningSet nontrivial_set(const JobSpec& job) {
  DefiningSet t = effective_set(job);
  if (t.empty()) fail(ErrorCode::EmptyOrFullSet, "empty defining set: the code is the whole space");
  if (t.full()) fail(ErrorCode::EmptyOrFullSet, "full defining set: the code is {0}");
  return t;
}

Json witness_json(const Field& f, const std::vector<Elem>& w) {
  Json a = Json::array();
  for (auto x : w) a.push_back(element_to_json(f, x));
  return a;
}

void merge(Json& dst, const Json& src) {
  for (const auto& [key, v] : src.items()) dst[key] = v;
}

// Narrows a search interval with the bound sandwich.
DistanceValue clamp(DistanceValue v, unsigned lower, unsigned upper) {
  v.lo = std::max(v.lo, lower);
  v.hi = std::min(v.hi, upper);
  return v;
}

struct Classified {
  DistanceValue d_h, d_r;
  std::string method_h, method_r;
  std::vector<Elem> witness_h, witness_r;
  bool partial = false;
  std::uint64_t subsets = 0, subspaces = 0;
};

void put_flags(Json& j, const Classified& c, const SkewCyclicCode& code) {
  const SingletonBounds sb = singleton_bounds(code.n(), code.k(), code.tower()->mu());
  // Interval results only claim what the interval proves.
  j["is_mds"] = c.d_h.lo >= sb.hamming;
  j["is_mrd"] = c.d_r.lo >= sb.rank;
  j["is_almost_mrd"] = c.d_r.exact() && classify(code.n(), code.k(), code.tower()->mu(), c.d_h.lo, c.d_r.lo).is_almost_mrd;
}

Json classified_json(const Classified& c, const SkewCyclicCode& code) {
  const Field& f = *code.tower()->f();
  Json j;
  j["d_H"] = distance_value_to_json(c.d_h);
  j["d_R"] = distance_value_to_json(c.d_r);
  j["witness_hamming"] = witness_json(f, c.witness_h);
  j["witness_rank"] = witness_json(f, c.witness_r);
  put_flags(j, c, code);
  j["partial"] = c.partial;
  j["method_hamming"] = c.method_h;
  j["method_rank"] = c.method_r;
  j["work"] = Json{{"subsets", c.subsets}, {"subspaces", c.subspaces}};
  return j;
}

Classified run_searches(const SkewCyclicCode& code, const BoundReport& b, const DistanceOptions& opt, bool skip_h,
                        bool skip_r) {
  Classified c;
  if (skip_h) {
    c.d_h = {b.singleton.hamming, b.singleton.hamming};
    c.method_h = "proven by sandwich";
  } else {
    DistanceReport r = min_hamming_distance(code, opt);
    c.d_h = clamp(*r.d_h, b.d_h_lower, b.singleton.hamming);
    c.witness_h = std::move(r.witness_hamming);
    c.method_h = r.method_hamming;
    c.partial = c.partial || r.partial;
    c.subsets = r.subsets_examined;
  }
  if (skip_r) {
    c.d_r = {b.singleton.rank, b.singleton.rank};
    c.method_r = "proven by sandwich";
  } else {
    DistanceReport r = min_rank_distance(code, opt);
    c.d_r = clamp(*r.d_r, b.d_r_lower, b.singleton.rank);
    c.witness_r = std::move(r.witness_rank);
    c.method_r = r.method_rank;
    c.partial = c.partial || r.partial;
    c.subspaces = r.subspaces_examined;
  }
  return c;
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("lo")) {
    return std::to_string(v["lo"].get<unsigned>()) + ".." + std::to_string(v["hi"].get<unsigned>());
  }
  if (v.is_array()) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + cell(v[i]);
    return s + "}";
  }
  if (v.is_null()) return "-";
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void render_table(std::ostringstream& out, const Json& rows, const std::vector<std::string>& cols, Format format) {
  if (format == Format::Csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << csv_escape(cell(r.at(cols[i])));
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) {
    width[i] = cols[i].size();
    for (const auto& r : rows) width[i] = std::max(width[i], cell(r.at(cols[i])).size());
  }
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "  " : "") << std::left << std::setw(int(width[i])) << cols[i];
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      out << (i ? "  " : "") << std::left << std::setw(int(width[i])) << cell(r.at(cols[i]));
    }
    out << "\n";
  }
}

void render_flat(std::ostringstream& out, const Json& j, const std::string& prefix) {
  for (const auto& [key, v] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (v.is_object() && !v.contains("lo") && !v.contains("pow") && !v.contains("coords")) {
      render_flat(out, v, name);
    } else {
      out << name << ": " << (v.is_array() && !v.empty() && v[0].is_object() ? v.dump() : cell(v)) << "\n";
    }
  }
}

const std::vector<std::string> kTable1Cols{"row", "K", "F", "E", "alpha", "b", "delta", "r", "T", "n", "k", "d_H", "MDS"};
const std::vector<std::string> kTable2Cols{"row", "K", "F", "E", "delta", "r", "n", "k", "rank_singleton", "d_R", "MRD"};

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "human") return Format::Human;
  fail(ErrorCode::InvalidInput, "unknown format '" + name + "' (json, csv, human)");
}

JobSpec load_job(const Json& spec, const Overrides& overrides) {
  if (!spec.is_object()) fail(ErrorCode::InvalidInput, "job spec must be a JSON object");
  if (!spec.contains("tower")) fail(ErrorCode::InvalidInput, "job spec needs a \"tower\"");
  JobSpec job;
  const Json& tj = spec["tower"];
  job.tower = std::make_shared<const Tower>(Tower::build(tower_params_from_json(tj)));
  const Tower& tw = *job.tower;

  const Json* alpha = spec.contains("alpha") && !spec["alpha"].is_null() ? &spec["alpha"] : nullptr;
  if (!alpha && tj.contains("alpha") && !tj["alpha"].is_null()) alpha = &tj["alpha"];
  job.alpha = alpha ? element_from_json(*tw.e(), *alpha) : tw.find_normal();

  const int modes = int(spec.contains("T")) + int(spec.contains("roos")) + int(spec.contains("repeated_gabidulin"));
  if (modes != 1) fail(ErrorCode::InvalidInput, "give exactly one of \"T\", \"roos\", \"repeated_gabidulin\"");
  try {
    if (spec.contains("T")) {
      job.input_mode = "T";
      job.t = DefiningSet(tw.n(), tw.mu(), spec["T"].get<std::vector<unsigned>>());
    } else if (spec.contains("roos")) {
      job.input_mode = "roos";
      job.roos = certificate_from_json(spec["roos"]);
      job.t = DefiningSet(tw.n(), tw.mu(), certificate_positions(*job.roos, tw.n()));
    } else {
      job.input_mode = "repeated_gabidulin";
      const Json& g = spec["repeated_gabidulin"];
      job.t = repeated_gabidulin(g.at("b").get<std::int64_t>(), g.value("s", std::int64_t{1}),
                                 g.at("delta_prime").get<unsigned>(), tw.mu(), tw.nu());
    }
    job.auto_close = spec.value("auto_close", true);
    if (spec.contains("budgets")) {
      job.distance.budget_subsets = spec["budgets"].value("subsets", std::uint64_t{0});
      job.distance.budget_subspaces = spec["budgets"].value("subspaces", std::uint64_t{0});
    }
    job.distance.threads = spec.value("threads", 1u);
    job.search.max_n = spec.value("max_n", job.search.max_n);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string("job spec: ") + e.what());
  }
  if (overrides.threads) job.distance.threads = *overrides.threads;
  if (overrides.budget_subsets) job.distance.budget_subsets = *overrides.budget_subsets;
  if (overrides.budget_subspaces) job.distance.budget_subspaces = *overrides.budget_subspaces;
  if (overrides.max_n) job.search.max_n = *overrides.max_n;
  job.search.threads = job.distance.threads;
  return job;
}

Json cmd_construct(const JobSpec& job) {
  const auto code = SkewCyclicCode::from_set(job.tower, job.alpha, job.t, job.auto_close);
  Json j;
  j["command"] = "construct";
  j["tower"] = tower_to_json(*job.tower, job.alpha);
  j["input_mode"] = job.input_mode;
  j["T_input"] = job.t.elements();
  merge(j, code_report(code));
  return j;
}

Json cmd_bounds(const JobSpec& job) {
  const DefiningSet t = nontrivial_set(job);
  Json j;
  j["command"] = "bounds";
  merge(j, bound_report_to_json(bound_report(t, job.search)));
  if (job.roos) j["input_certificate_holds"] = verify_certificate(t, *job.roos);
  return j;
}

Json cmd_distance(const JobSpec& job) {
  const DefiningSet t = nontrivial_set(job);
  const auto code = SkewCyclicCode::from_set(job.tower, job.alpha, t);
  const BoundReport b = bound_report(t, job.search);
  Json j;
  j["command"] = "distance";
  j["n"] = code.n();
  j["k"] = code.k();
  merge(j, classified_json(run_searches(code, b, job.distance, false, false), code));
  return j;
}

Json cmd_classify(const JobSpec& job) {
  const DefiningSet t = nontrivial_set(job);
  const auto code = SkewCyclicCode::from_set(job.tower, job.alpha, t);
  const BoundReport b = bound_report(t, job.search);
  Json j;
  j["command"] = "classify";
  j["n"] = code.n();
  j["k"] = code.k();
  j["bounds"] = bound_report_to_json(b);
  const Classified c = run_searches(code, b, job.distance, b.mds_proven, b.mrd_proven);
  merge(j, classified_json(c, code));
  return j;
}

TablesOutcome cmd_tables(const std::string& data_dir, const Overrides& overrides) {
  const Json golden = read_json_file(data_dir + "/golden.json");
  TablesOutcome out;
  Json t1 = Json::array();
  Json t2 = Json::array();
  Json checks = Json::array();
  const Json& g1 = golden.at("table1");
  const Json& g2 = golden.at("table2");
  auto errata_for = [&](int table, int row, const std::string& cell_name) -> const Json* {
    if (!golden.contains("errata")) return nullptr;
    for (const auto& e : golden["errata"]) {
      if (e.at("table").get<int>() == table && e.at("row").get<int>() == row && e.at("cell") == cell_name) return &e;
    }
    return nullptr;
  };
  auto compare = [&](int table, int row, const std::string& name, const Json& printed, const Json& computed) {
    if (printed.is_null()) return;  // printed table leaves it open
    if (printed.is_object() && printed.contains("lo") && computed.is_number()) {
      const auto v = computed.get<unsigned>();
      if (v >= printed["lo"].get<unsigned>() && v <= printed["hi"].get<unsigned>()) {
        checks.push_back({{"table", table}, {"row", row}, {"cell", name}, {"status", "resolved"},
                          {"printed", printed}, {"computed", computed}});
        return;
      }
    }
    if (printed == computed) return;
    if (const Json* e = errata_for(table, row, name); e && e->at("corrected") == computed) {
      checks.push_back({{"table", table}, {"row", row}, {"cell", name}, {"status", "erratum"},
                        {"printed", printed}, {"computed", computed}, {"reason", e->at("reason")}});
      return;
    }
    out.mismatches.push_back("table " + std::to_string(table) + " row " + std::to_string(row) + " " + name +
                             ": printed " + cell(printed) + ", computed " + cell(computed));
  };

  for (std::size_t i = 0; i < g1.size(); ++i) {
    const Json& p1 = g1[i];
    const int row = p1.at("row").get<int>();
    const Json& p2 = g2.at(i);
    JobSpec job = load_job(read_json_file(data_dir + "/row" + std::to_string(row) + ".json"), overrides);
    job.auto_close = false;
    const DefiningSet t = nontrivial_set(job);
    const auto code = SkewCyclicCode::from_set(job.tower, job.alpha, t, false);
    const BoundReport b = bound_report(t, job.search);
    const Classified c = run_searches(code, b, job.distance, false, false);
    const Tower& tw = *job.tower;

    const auto delta = p1.at("delta").get<unsigned>();
    const auto r = p1.at("r").get<unsigned>();
    const auto printed_b = p1.at("b").get<std::int64_t>();
    const auto shape = find_certificate(t, delta, r, printed_b);
    if (!shape) {
      out.mismatches.push_back("table 1 row " + std::to_string(row) + ": no certificate with b = " +
                               std::to_string(printed_b) + ", delta = " + std::to_string(delta) +
                               ", r = " + std::to_string(r));
    }
    const bool subfield_ok = check_subfield_distance_equality(code, job.distance);
    if (!subfield_ok) out.mismatches.push_back("table 1 row " + std::to_string(row) + ": d_H over E differs from d_H over F");

    Json a;
    a["row"] = row;
    a["K"] = field_name(*tw.k());
    a["F"] = field_name(*tw.f());
    a["E"] = field_name(*tw.e());
    a["alpha"] = element_to_text(*tw.e(), job.alpha);
    a["b"] = printed_b;
    a["delta"] = delta;
    a["r"] = r;
    a["T"] = t.elements();
    a["n"] = code.n();
    a["k"] = code.k();
    a["d_H"] = distance_value_to_json(c.d_h);
    a["singleton"] = b.singleton.hamming;
    a["MDS"] = c.d_h.exact() && c.d_h.lo == b.singleton.hamming;
    a["certificate"] = shape ? certificate_to_json(*shape) : Json(nullptr);
    a["best_certificate"] = b.roos ? certificate_to_json(*b.roos) : Json(nullptr);
    a["subfield_distance_equal"] = subfield_ok;
    t1.push_back(a);

    Json z;
    z["row"] = row;
    z["K"] = a["K"];
    z["F"] = a["F"];
    z["E"] = a["E"];
    z["delta"] = p2.at("delta");
    z["r"] = p2.at("r");
    z["n"] = code.n();
    z["k"] = code.k();
    z["rank_singleton"] = b.singleton.rank;
    z["d_R"] = distance_value_to_json(c.d_r);
    z["MRD"] = c.d_r.exact() && c.d_r.lo == b.singleton.rank;
    z["mrd_proven_by_sandwich"] = b.mrd_proven;
    t2.push_back(z);

    for (const char* name : {"n", "k", "d_H", "MDS"}) compare(1, row, name, p1.at(name), a[name]);
    for (const char* name : {"n", "k", "rank_singleton", "d_R", "MRD"}) compare(2, row, name, p2.at(name), z[name]);
    if (p1.at("T") != a["T"]) compare(1, row, "T", p1["T"], a["T"]);
  }
  out.report["table1"] = t1;
  out.report["table2"] = t2;
  out.report["checks"] = checks;
  out.report["mismatches"] = out.mismatches;
  return out;
}

std::string render(const std::string& command, const Json& result, Format format) {
  std::ostringstream out;
  if (format == Format::Json) return result.dump(2) + "\n";
  if (command == "tables") {
    if (format == Format::Human) out << "Table 1: Hamming distance\n";
    render_table(out, result.at("table1"), kTable1Cols, format);
    out << "\n";
    if (format == Format::Human) out << "Table 2: rank distance\n";
    render_table(out, result.at("table2"), kTable2Cols, format);
    if (format == Format::Human) {
      for (const auto& c : result.at("checks")) {
        out << "\nnote: table " << c["table"] << " row " << c["row"] << " " << cell(c["cell"]) << " " << cell(c["status"])
            << " (printed " << cell(c["printed"]) << ", computed " << cell(c["computed"]) << ")";
      }
      if (!result.at("checks").empty()) out << "\n";
    }
    return out.str();
  }
  if (format == Format::Csv) fail(ErrorCode::InvalidInput, "csv output is only available for the tables command");
  render_flat(out, result, "");
  return out.str();
}

}  // namespace skewroos::workbench
