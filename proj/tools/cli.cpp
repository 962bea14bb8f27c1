#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "qci/errors.hpp"

namespace qci::cli {

namespace {

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json syzygy_json(const Syzygy& s) {
  Json arr = Json::array();
  for (const auto& part : s) arr.push_back(part ? Json(part->to_string()) : Json(nullptr));
  return arr;
}

}  // namespace

Json qci_results_json(const QciReport& rep) {
  Json j;
  j["dimension_class"] = to_string(rep.dimension);
  j["hilbert"] = rep.hilbert.values;
  j["plateau"] = opt(rep.hilbert.plateau);
  if (!rep.invariants) {
    for (const char* key : {"t", "r", "gamma", "c1", "c2", "c2_at_r", "bounds_i", "bounds_ii", "m0", "h1_at_m0",
                            "splits", "syzygy_dims", "generator_degrees", "r_witness", "classification"})
      j[key] = nullptr;
    return j;
  }
  const auto& inv = *rep.invariants;
  j["t"] = inv.t;
  j["r"] = inv.r;
  j["gamma"] = inv.gamma;
  j["c1"] = inv.c1;
  j["c2"] = inv.c2;
  j["c2_at_r"] = inv.c2_at_r;
  j["bounds_i"] = {{"lower", inv.bounds.i.lower},
                   {"upper", inv.bounds.i.upper},
                   {"lower_pass", inv.bounds.i.lower_pass},
                   {"upper_pass", inv.bounds.i.upper_pass}};
  j["bounds_ii"] = {{"applicable", inv.bounds.ii.applicable},
                    {"bound", inv.bounds.ii.applicable ? Json(inv.bounds.ii.bound) : Json(nullptr)},
                    {"pass", inv.bounds.ii.pass}};
  j["m0"] = inv.m0;
  j["h1_at_m0"] = inv.h1_at_m0;
  j["splits"] = inv.splits;
  Json dims = Json::array();
  for (int k = inv.syzygies.k_min; k <= inv.syzygies.k_max; ++k) dims.push_back({{"k", k}, {"h0", inv.syzygies.h0(k)}});
  j["syzygy_dims"] = dims;
  j["generator_degrees"] = inv.syzygies.generator_degrees;
  j["r_witness"] = syzygy_json(inv.r_witness);

  const auto& cls = inv.classification;
  Json c;
  c["tag"] = to_string(cls.tag);
  c["r_case"] = opt(cls.r_case);
  c["split_type"] = cls.split_type ? Json::array({cls.split_type->first, cls.split_type->second}) : Json(nullptr);
  if (cls.predicted_resolution)
    c["predicted_resolution"] = {{"generators", cls.predicted_resolution->generators},
                                 {"relations", cls.predicted_resolution->relations}};
  else
    c["predicted_resolution"] = nullptr;
  c["resolution_verified"] = opt(cls.resolution_verified);
  j["classification"] = c;
  return j;
}

Json curve_results_json(const CurveReport& rep) {
  Json j;
  std::string verdict = "analyzed";
  if (rep.curve_class == CurveClass::Smooth) verdict = "smooth";
  if (rep.curve_class == CurveClass::NotReduced) verdict = "refused";
  j["verdict"] = verdict;
  j["d"] = rep.d;
  j["tau"] = rep.curve_class == CurveClass::NotReduced ? Json(nullptr) : Json(rep.tau);
  j["r"] = opt(rep.r);
  j["class"] = to_string(rep.curve_class);
  j["exponents"] = rep.exponents ? Json::array({rep.exponents->first, rep.exponents->second}) : Json(nullptr);
  j["c2_at_r"] = opt(rep.c2_at_r);
  if (rep.dpw) {
    const auto& v = *rep.dpw;
    j["dpw"] = {{"lower", v.lower},
                {"upper", v.upper},
                {"lower_pass", v.lower_pass},
                {"upper_pass", v.upper_pass},
                {"ii_applicable", v.ii_applicable},
                {"ii_bound", v.ii_applicable ? Json(v.ii_bound) : Json(nullptr)},
                {"ii_pass", v.ii_pass}};
  } else {
    j["dpw"] = nullptr;
  }
  j["free_lower_bound"] = opt(rep.free_lower_bound);
  j["high_tau_case"] = opt(rep.high_tau_case);
  j["refusal"] = opt(rep.refusal);
  j["qci"] = qci_results_json(rep.qci);
  return j;
}

Json hilbert_results_json(QciEngine& engine) {
  Json j;
  const auto& table = engine.hilbert_table();
  Json rows = Json::array();
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    const int deg = static_cast<int>(k);
    rows.push_back({{"k", deg},
                    {"dim_S", dim_S(deg)},
                    {"dim_J", engine.ideal_dim(deg)},
                    {"h_quotient", table.values[k]}});
  }
  j["dimension_class"] = to_string(engine.dimension_class());
  j["k_star"] = table.k_star;
  j["plateau"] = opt(table.plateau);
  j["hilbert"] = rows;
  if (engine.dimension_class() == DimensionClass::Dim0) {
    const auto& syz = engine.syzygy_table();
    Json srows = Json::array();
    for (int k = syz.k_min; k <= syz.k_max; ++k) {
      const auto gens = std::count(syz.generator_degrees.begin(), syz.generator_degrees.end(), k);
      srows.push_back({{"k", k}, {"h0", syz.h0(k)}, {"new_generators", gens}});
    }
    j["r"] = syz.r;
    j["syzygies"] = srows;
  } else {
    j["r"] = nullptr;
    j["syzygies"] = nullptr;
  }
  return j;
}

namespace {

void render(const Json& node, const std::string& prefix, std::ostream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) render(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (node.is_array() && std::any_of(node.begin(), node.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < node.size(); ++i) render(node[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << ": ";
  if (node.is_string())
    out << node.get<std::string>();
  else
    out << node.dump();
  out << '\n';
}

std::string csv_field(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

template <typename T>
std::string csv_opt(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string render_text(const Json& document) {
  std::ostringstream out;
  render(document, "", out);
  return out.str();
}

std::vector<SweepRow> run_sweep(const std::string& family, int d_lo, int d_hi, std::uint32_t prime,
                                AnalysisOptions options, unsigned jobs) {
  if (family != "lines" && family != "smooth-plus-line") throw GuardError("unknown family '" + family + "'");
  const PrimeField field(prime);
  const int count = std::max(0, d_hi - d_lo + 1);
  std::vector<SweepRow> rows(static_cast<std::size_t>(count));

  auto compute = [&](int idx) {
    SweepRow& row = rows[static_cast<std::size_t>(idx)];
    row.family = family;
    row.d = d_lo + idx;
    row.prime = prime;
    row.dpw_i = "n/a";
    row.dpw_ii = "n/a";
    try {
      const CurveInput curve = family == "lines" ? family::lines_through_point(field, row.d)
                                                 : family::smooth_plus_line(field, row.d);
      const CurveReport rep = analyze_curve(curve, options);
      row.curve_class = to_string(rep.curve_class);
      if (rep.curve_class != CurveClass::NotReduced) row.tau = rep.tau;
      row.r = rep.r;
      row.c2 = rep.c2_at_r;
      if (rep.dpw) {
        row.dpw_i = rep.dpw->lower_pass && rep.dpw->upper_pass ? "pass" : "fail";
        if (rep.dpw->ii_applicable) row.dpw_ii = rep.dpw->ii_pass ? "pass" : "fail";
      }
      row.status = "ok";
    } catch (const GuardError& e) {
      row.status = std::string("guard: ") + e.what();
    } catch (const InvariantError& e) {
      row.status = std::string("internal: ") + e.what();
    } catch (const std::exception& e) {
      row.status = std::string("error: ") + e.what();
    }
  };

  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) compute(i);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < std::min<unsigned>(jobs, static_cast<unsigned>(count)); ++w)
      workers.emplace_back([&] {
        for (int i = next++; i < count; i = next++) compute(i);
      });
    for (auto& t : workers) t.join();
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (const auto& r : rows)
    out << csv_field(r.family) << ',' << r.d << ',' << r.prime << ',' << csv_opt(r.tau) << ',' << csv_opt(r.r) << ','
        << csv_opt(r.c2) << ',' << csv_field(r.curve_class) << ',' << r.dpw_i << ',' << r.dpw_ii << ','
        << csv_field(r.status) << '\n';
  return out.str();
}

namespace {

struct Settings {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  bool json = false;
  bool timings = false;
  std::string out_path;
  int max_window_extensions = 2;
  std::string f, fa, fb, fc;
  std::string family;
  std::string d_range;
  unsigned jobs = 1;
};

HomogPoly parse_arg(const std::string& name, const std::string& text, const PrimeField& field, bool allow_zero,
                    Json& warnings) {
  try {
    ParsedPoly parsed = parse_poly(text, field);
    if (parsed.vanished_mod_p) {
      const std::string msg = name + " vanishes modulo " + std::to_string(field.prime());
      if (!allow_zero) throw ParseError(msg, 0);
      warnings.push_back(msg);
    }
    return std::move(parsed.poly);
  } catch (const ParseError& e) {
    throw ParseError(name + ": " + e.message(), e.position());
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw ParseError("d-range must look like A..B", 0);
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const std::string lo_s = text.substr(0, dots), hi_s = text.substr(dots + 2);
    const int lo = std::stoi(lo_s, &used_lo);
    const int hi = std::stoi(hi_s, &used_hi);
    if (used_lo != lo_s.size() || used_hi != hi_s.size()) throw std::invalid_argument("trailing characters");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("d-range must look like A..B", 0);
  }
}

Json document(const std::string& command, Json input, Json results, Json diagnostics) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = command;
  doc["input"] = std::move(input);
  doc["results"] = std::move(results);
  doc["diagnostics"] = std::move(diagnostics);
  return doc;
}

Json diagnostics_for(const HilbertTable& table, const Json& warnings) {
  return {{"k_star", table.k_star},
          {"plateau_window", Json::array({table.k_star, table.k_star + 3})},
          {"window_extensions", table.extensions},
          {"warnings", warnings}};
}

std::string hilbert_text(const Json& results) {
  std::ostringstream out;
  out << "dimension_class: " << results["dimension_class"].get<std::string>() << '\n';
  out << "k_star: " << results["k_star"].dump() << '\n';
  out << "plateau: " << results["plateau"].dump() << '\n';
  out << std::setw(4) << "k" << std::setw(8) << "dim_S" << std::setw(8) << "dim_J" << std::setw(8) << "h" << '\n';
  for (const auto& row : results["hilbert"])
    out << std::setw(4) << row["k"].dump() << std::setw(8) << row["dim_S"].dump() << std::setw(8)
        << row["dim_J"].dump() << std::setw(8) << row["h_quotient"].dump() << '\n';
  if (!results["syzygies"].is_null()) {
    out << "r: " << results["r"].dump() << '\n';
    out << std::setw(4) << "k" << std::setw(8) << "h0(E)" << std::setw(8) << "new" << '\n';
    for (const auto& row : results["syzygies"])
      out << std::setw(4) << row["k"].dump() << std::setw(8) << row["h0"].dump() << std::setw(8)
          << row["new_generators"].dump() << '\n';
  }
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Invariants of quasi-complete intersections and plane curves over F_p", "qci"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--prime", s.prime, "Prime modulus (default 32003)");
  app.add_flag("--json", s.json, "Emit JSON instead of text");
  app.add_flag("--timings", s.timings, "Add wall-clock timings to diagnostics");
  app.add_option("--out", s.out_path, "Write output to this path");
  app.add_option("--max-window-extensions", s.max_window_extensions, "Plateau window extensions (default 2)")
      ->check(CLI::NonNegativeNumber);

  auto* curve_cmd = app.add_subcommand("analyze-curve", "Global Tjurina number and freeness of f = 0");
  curve_cmd->add_option("--f", s.f, "Curve equation")->required();
  auto* qci_cmd = app.add_subcommand("analyze-qci", "Invariants of the q.c.i. (F_a, F_b, F_c)");
  qci_cmd->add_option("--fa", s.fa)->required();
  qci_cmd->add_option("--fb", s.fb)->required();
  qci_cmd->add_option("--fc", s.fc)->required();
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV atlas over a curve family");
  sweep_cmd->add_option("--family", s.family, "lines | smooth-plus-line")->required();
  sweep_cmd->add_option("--d-range", s.d_range, "Degree range A..B")->required();
  sweep_cmd->add_option("--jobs", s.jobs, "Worker threads")->check(CLI::PositiveNumber);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function and syzygy table");
  hilbert_cmd->add_option("--f", s.f, "Use the partials of this curve");
  hilbert_cmd->add_option("--fa", s.fa);
  hilbert_cmd->add_option("--fb", s.fb);
  hilbert_cmd->add_option("--fc", s.fc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  const auto started = std::chrono::steady_clock::now();
  const AnalysisOptions options{s.max_window_extensions};
  std::string payload;
  try {
    const PrimeField field(s.prime);
    Json warnings = Json::array();

    auto finish = [&](Json doc) {
      if (s.timings) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        doc["diagnostics"]["timings_ms"] = ms;
      }
      return s.json ? doc.dump(2) + "\n" : render_text(doc);
    };

    if (curve_cmd->parsed()) {
      const HomogPoly f = parse_arg("f", s.f, field, false, warnings);
      const CurveInput curve = CurveInput::make(f);
      const CurveReport rep = analyze_curve(curve, options);
      Json input = {{"f", f.to_string()}, {"degree", f.degree()}, {"prime", s.prime}};
      payload = finish(document("analyze-curve", input, curve_results_json(rep), diagnostics_for(rep.qci.hilbert, warnings)));
    } else if (qci_cmd->parsed()) {
      std::array<HomogPoly, 3> forms{parse_arg("fa", s.fa, field, true, warnings),
                                     parse_arg("fb", s.fb, field, true, warnings),
                                     parse_arg("fc", s.fc, field, true, warnings)};
      Json input = {{"fa", forms[0].to_string()},
                    {"fb", forms[1].to_string()},
                    {"fc", forms[2].to_string()},
                    {"degrees", Json::array({forms[0].degree(), forms[1].degree(), forms[2].degree()})}};
      const QciInput q = QciInput::make(forms);
      input["sorted_degrees"] = Json::array({q.a(), q.b(), q.c()});
      input["prime"] = s.prime;
      const QciReport rep = analyze_qci(q, options);
      Json results;
      switch (rep.dimension) {
        case DimensionClass::Dim0: results["verdict"] = "analyzed"; results["refusal"] = nullptr; break;
        case DimensionClass::Empty:
          results["verdict"] = "refused";
          results["refusal"] = "empty scheme: the forms have no common zero";
          break;
        case DimensionClass::DimGe1:
          results["verdict"] = "refused";
          results["refusal"] = "scheme has a positive-dimensional component; not codimension two";
          break;
      }
      results.update(qci_results_json(rep));
      payload = finish(document("analyze-qci", input, results, diagnostics_for(rep.hilbert, warnings)));
    } else if (sweep_cmd->parsed()) {
      const auto [lo, hi] = parse_range(s.d_range);
      payload = sweep_csv(run_sweep(s.family, lo, hi, s.prime, options, s.jobs));
    } else if (hilbert_cmd->parsed()) {
      Json input;
      std::optional<QciInput> q;
      if (!s.f.empty()) {
        const HomogPoly f = parse_arg("f", s.f, field, false, warnings);
        q = CurveInput::make(f).jacobian();
        input = {{"f", f.to_string()}, {"prime", s.prime}};
      } else if (!s.fa.empty() && !s.fb.empty() && !s.fc.empty()) {
        std::array<HomogPoly, 3> forms{parse_arg("fa", s.fa, field, true, warnings),
                                       parse_arg("fb", s.fb, field, true, warnings),
                                       parse_arg("fc", s.fc, field, true, warnings)};
        input = {{"fa", forms[0].to_string()}, {"fb", forms[1].to_string()}, {"fc", forms[2].to_string()},
                 {"prime", s.prime}};
        q = QciInput::make(forms);
      } else {
        throw ParseError("hilbert needs --f or all of --fa --fb --fc", 0);
      }
      QciEngine engine(*q, options);
      Json results = hilbert_results_json(engine);
      Json doc = document("hilbert", input, results, diagnostics_for(engine.hilbert_table(), warnings));
      payload = s.json ? finish(doc) : hilbert_text(results);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const GuardError& e) {
    err << "guard violation: " << e.what() << '\n';
    return kGuardError;
  } catch (const InvariantError& e) {
    err << "internal invariant failure: " << e.what() << '\n';
    return kInternalError;
  } catch (const NoPlateauError& e) {
    err << "no plateau: " << e.what() << '\n';
    return kInternalError;
  }

  if (s.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(s.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << s.out_path << " for writing\n";
      return kGuardError;
    }
    file << payload;
  }
  return kOk;
}

}  // namespace qci::cli
