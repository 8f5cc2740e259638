#include "stonework/render.hpp"

#include <sstream>

#include "json.hpp"

namespace stonework {

namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json assignment_to_json(const Assignment& h) {
  json obj = json::object();
  for (std::size_t i = 0; i < h.variables().size(); ++i)
    obj[h.variables()[i]] = static_cast<bool>(h.values()[i]);
  return obj;
}

std::string assignment_to_text(const Assignment& h) {
  std::string out;
  for (std::size_t i = 0; i < h.variables().size(); ++i) {
    if (i) out += ' ';
    out += h.variables()[i];
    out += '=';
    out += h.values()[i] ? '1' : '0';
  }
  return out;
}

json filter_to_json(const FiniteAlgebra& a, const Filter& f) {
  json arr = json::array();
  for (ElementId x : f.members()) arr.push_back(a.name_of(x));
  return arr;
}

std::string filter_to_text(const FiniteAlgebra& a, const Filter& f) {
  std::string out;
  bool first = true;
  for (ElementId x : f.members()) {
    if (!first) out += ", ";
    out += a.name_of(x);
    first = false;
  }
  return out;
}

const char* yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "structured") return OutputFormat::Structured;
  throw ArgumentError("unknown output format '" + name +
                      "' (expected \"text\" or \"structured\")");
}

std::string render_axiom_report(const FiniteAlgebra& a, const AxiomReport& report,
                                OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json doc;
    doc["carrier_size"] = a.size();
    doc["zero"] = a.name_of(a.zero());
    doc["one"] = a.name_of(a.one());
    json axioms = json::array();
    for (const AxiomResult& r : report.axioms) {
      json entry;
      entry["axiom"] = r.axiom;
      entry["name"] = r.name;
      entry["passed"] = r.passed;
      if (r.violation) {
        json w;
        w["identity"] = r.violation->identity;
        w["x"] = a.name_of(r.violation->x);
        if (r.violation->arity >= 2) w["y"] = a.name_of(r.violation->y);
        if (r.violation->arity >= 3) w["z"] = a.name_of(r.violation->z);
        w["lhs"] = a.name_of(r.violation->lhs);
        w["rhs"] = a.name_of(r.violation->rhs);
        entry["witness"] = std::move(w);
      }
      axioms.push_back(std::move(entry));
    }
    doc["axioms"] = std::move(axioms);
    doc["all_passed"] = report.all_passed();
    return dump(doc);
  }

  std::ostringstream out;
  out << "carrier: " << a.size() << " element" << (a.size() == 1 ? "" : "s")
      << " (zero=" << a.name_of(a.zero()) << ", one=" << a.name_of(a.one()) << ")\n";
  for (const AxiomResult& r : report.axioms) {
    out << r.axiom << " " << r.name << ": " << (r.passed ? "pass" : "FAIL");
    if (r.violation) {
      out << "  [" << r.violation->identity << " at x=" << a.name_of(r.violation->x);
      if (r.violation->arity >= 2) out << ", y=" << a.name_of(r.violation->y);
      if (r.violation->arity >= 3) out << ", z=" << a.name_of(r.violation->z);
      out << ": got " << a.name_of(r.violation->lhs) << ", want "
          << a.name_of(r.violation->rhs) << "]";
    }
    out << "\n";
  }
  out << "result: " << (report.all_passed() ? "all axioms hold" : "violations found")
      << "\n";
  return out.str();
}

std::string render_ultrafilters(const FiniteAlgebra& a,
                                const std::vector<Ultrafilter>& ufs,
                                OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json doc;
    doc["carrier_size"] = a.size();
    doc["count"] = ufs.size();
    json list = json::array();
    for (const Ultrafilter& u : ufs) list.push_back(filter_to_json(a, u));
    doc["ultrafilters"] = std::move(list);
    return dump(doc);
  }

  std::ostringstream out;
  out << "ultrafilters: " << ufs.size() << "\n";
  for (std::size_t i = 0; i < ufs.size(); ++i)
    out << "p" << i << ": " << filter_to_text(a, ufs[i]) << "\n";
  return out.str();
}

std::string render_stone_report(const FiniteAlgebra& a, const StoneReport& report,
                                bool onto_full_power_set, bool isomorphic,
                                OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json doc;
    doc["carrier_size"] = report.carrier_size;
    doc["ultrafilter_count"] = report.ultrafilter_count;
    json eq;
    eq["zero_to_empty"] = report.zero_to_empty;
    eq["one_to_full"] = report.one_to_full;
    eq["join"] = report.join_preserved;
    eq["meet"] = report.meet_preserved;
    eq["complement"] = report.complement_preserved;
    doc["equations"] = std::move(eq);
    doc["injective"] = report.injective_direct;
    doc["injective_by_separation"] = report.injective_separating;
    doc["routes_agree"] = report.routes_agree();
    doc["embedding"] = report.embedding_ok();
    json strengthening;
    strengthening["carrier_is_power_of_ultrafilters"] =
        report.carrier_is_power_of_ultrafilters;
    strengthening["onto_full_power_set"] = onto_full_power_set;
    doc["finite_strengthening"] = std::move(strengthening);
    doc["isomorphic_to_image"] = isomorphic;
    json map = json::array();
    for (ElementId x = 0; x < a.size(); ++x) {
      json entry;
      entry["element"] = a.name_of(x);
      entry["ultrafilters"] = report.element_images[x];
      map.push_back(std::move(entry));
    }
    doc["map"] = std::move(map);
    if (!report.failures.empty()) {
      json failures = json::array();
      for (const StoneReport::Failure& f : report.failures) {
        json entry;
        entry["equation"] = f.equation;
        entry["x"] = a.name_of(f.x);
        entry["y"] = a.name_of(f.y);
        failures.push_back(std::move(entry));
      }
      doc["failures"] = std::move(failures);
    }
    return dump(doc);
  }

  std::ostringstream out;
  out << "ultrafilters: " << report.ultrafilter_count << "\n";
  out << "s(0) empty: " << yes_no(report.zero_to_empty)
      << ", s(1) full: " << yes_no(report.one_to_full) << "\n";
  out << "join preserved: " << yes_no(report.join_preserved)
      << ", meet preserved: " << yes_no(report.meet_preserved)
      << ", complement preserved: " << yes_no(report.complement_preserved) << "\n";
  out << "injective: " << yes_no(report.injective_direct)
      << " (separating route: " << yes_no(report.injective_separating)
      << ", agree: " << yes_no(report.routes_agree()) << ")\n";
  out << "embedding: " << (report.embedding_ok() ? "verified" : "FAILED") << "\n";
  out << "finite strengthening: carrier = 2^" << report.ultrafilter_count << ": "
      << yes_no(report.carrier_is_power_of_ultrafilters)
      << ", onto full power set: " << yes_no(onto_full_power_set) << "\n";
  out << "isomorphic to image algebra: " << yes_no(isomorphic) << "\n";
  out << "map:\n";
  for (ElementId x = 0; x < a.size(); ++x) {
    out << "  " << a.name_of(x) << " -> {";
    const std::vector<std::size_t>& images = report.element_images[x];
    for (std::size_t i = 0; i < images.size(); ++i) {
      if (i) out << ",";
      out << "p" << images[i];
    }
    out << "}\n";
  }
  for (const StoneReport::Failure& f : report.failures)
    out << "failure: " << f.equation << " at x=" << a.name_of(f.x)
        << ", y=" << a.name_of(f.y) << "\n";
  return out.str();
}

std::string render_lt_summary(const LTAlgebra& lt, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json doc;
    doc["variables"] = lt.theory().universe;
    doc["formulas"] = json::array();
    for (const Formula& f : lt.theory().formulas)
      doc["formulas"].push_back(pretty_print(f));
    doc["model_count"] = lt.model_count();
    json models = json::array();
    for (std::size_t p = 0; p < lt.model_count(); ++p)
      models.push_back(assignment_to_json(lt.model(p)));
    doc["models"] = std::move(models);
    doc["carrier_size"] = lt.algebra().size();
    doc["consistent"] = lt.consistent();
    json classes = json::array();
    for (ElementId e = 0; e < lt.algebra().size(); ++e) {
      const EquivClass cls = lt.class_info(e);
      json entry;
      entry["element"] = lt.algebra().name_of(e);
      entry["model_set"] = cls.model_set;
      if (cls.representative)
        entry["representative"] = pretty_print(*cls.representative);
      classes.push_back(std::move(entry));
    }
    doc["classes"] = std::move(classes);
    return dump(doc);
  }

  std::ostringstream out;
  out << "variables:";
  for (const std::string& v : lt.theory().universe) out << " " << v;
  out << "\n";
  out << "formulas: " << lt.theory().formulas.size() << "\n";
  for (const Formula& f : lt.theory().formulas) out << "  " << pretty_print(f) << "\n";
  out << "models: " << lt.model_count() << "\n";
  for (std::size_t p = 0; p < lt.model_count(); ++p)
    out << "  " << assignment_to_text(lt.model(p)) << "\n";
  out << "carrier: " << lt.algebra().size() << "\n";
  out << "consistent: " << yes_no(lt.consistent()) << "\n";
  return out.str();
}

namespace {

json verdict_to_json(const TheoryVerdict& verdict) {
  json doc;
  doc["formulas"] = verdict.formulas;
  doc["consistent"] = verdict.consistent;
  if (verdict.model) {
    doc["model"] = assignment_to_json(*verdict.model);
    doc["model_verified"] = verdict.model_verified;
  } else {
    doc["model"] = nullptr;
  }
  if (verdict.diagram_commutes)
    doc["diagram_commutes"] = *verdict.diagram_commutes;
  doc["oracle_agrees"] = verdict.oracle_agrees;
  doc["ok"] = verdict.ok();
  return doc;
}

}  // namespace

std::string render_theory_verdict(const TheoryVerdict& verdict, OutputFormat format) {
  if (format == OutputFormat::Structured) return dump(verdict_to_json(verdict));

  std::ostringstream out;
  if (!verdict.consistent) {
    out << "inconsistent\n";
    out << "oracle: " << (verdict.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
    return out.str();
  }
  out << "consistent\n";
  out << "model: " << assignment_to_text(*verdict.model) << "\n";
  out << "model verified: " << yes_no(verdict.model_verified) << "\n";
  out << "diagram: "
      << (verdict.diagram_commutes.value_or(false) ? "commutes" : "DOES NOT COMMUTE")
      << "\n";
  out << "oracle: " << (verdict.oracle_agrees ? "agrees" : "DISAGREES") << "\n";
  return out.str();
}

std::string render_truth_table(const Formula& formula,
                               const std::vector<std::pair<Assignment, bool>>& rows,
                               OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json doc;
    doc["formula"] = pretty_print(formula);
    doc["variables"] =
        rows.empty() ? json::array() : json(rows.front().first.variables());
    json out_rows = json::array();
    for (const auto& [h, value] : rows) {
      json row;
      row["assignment"] = assignment_to_json(h);
      row["value"] = value;
      out_rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(out_rows);
    return dump(doc);
  }

  std::ostringstream out;
  const std::string printed = pretty_print(formula);
  if (!rows.empty()) {
    for (const std::string& v : rows.front().first.variables()) out << v << " ";
    out << "| " << printed << "\n";
  }
  for (const auto& [h, value] : rows) {
    for (bool b : h.values()) out << (b ? "1" : "0") << " ";
    out << "| " << (value ? "1" : "0") << "\n";
  }
  return out.str();
}

std::string render_corpus_result(const CorpusResult& result, OutputFormat format) {
  if (format == OutputFormat::Structured) {
    json doc;
    json config;
    config["variables"] = result.config.variables;
    config["exhaustive_depth"] = result.config.exhaustive_depth;
    config["max_theory_size"] = result.config.max_theory_size;
    config["exhaustive_limit"] = result.config.exhaustive_limit;
    config["random_theories"] = result.config.random_theories;
    config["random_min_depth"] = result.config.random_min_depth;
    config["random_max_depth"] = result.config.random_max_depth;
    config["random_max_size"] = result.config.random_max_size;
    config["seed"] = result.config.seed;
    doc["config"] = std::move(config);
    json verdicts = json::array();
    for (const TheoryVerdict& v : result.verdicts) verdicts.push_back(verdict_to_json(v));
    doc["theories"] = std::move(verdicts);
    json summary;
    summary["total"] = result.verdicts.size();
    summary["consistent"] = result.consistent_count;
    summary["inconsistent"] = result.inconsistent_count;
    summary["all_ok"] = result.all_ok;
    doc["summary"] = std::move(summary);
    return dump(doc);
  }

  std::ostringstream out;
  out << "theories: " << result.verdicts.size() << " (consistent "
      << result.consistent_count << ", inconsistent " << result.inconsistent_count
      << ")\n";
  for (std::size_t i = 0; i < result.verdicts.size(); ++i) {
    if (result.verdicts[i].ok()) continue;
    out << "MISMATCH at theory " << i << ":";
    for (const std::string& f : result.verdicts[i].formulas) out << " [" << f << "]";
    out << "\n";
  }
  out << "verdict agreement: " << (result.all_ok ? "complete" : "FAILED") << "\n";
  return out.str();
}

}  // namespace stonework
